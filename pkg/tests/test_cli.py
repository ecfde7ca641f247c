"""Command-line front end: verbs, output forms, exit codes."""

import json

import pytest

from layoutkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.rstrip("\n"), out.err.rstrip("\n")


class TestLayoutVerbs:
    def test_compose(self, capsys):
        code, out, _ = run(
            capsys, "compose", "((4,4),4):((16,1),4)", "(8,64):(64,1)"
        )
        assert (code, out) == (0, "((4,4),(2,2)):((2,64),(256,1))")

    def test_coalesce(self, capsys):
        code, out, _ = run(
            capsys, "coalesce", "((2,2),(2,2),(5,5)):((1,2),(16,32),(64,640))"
        )
        assert (code, out) == (0, "(4,20,5):(1,16,640)")

    def test_coalesce_rel(self, capsys):
        code, out, _ = run(
            capsys,
            "coalesce-rel",
            "((2,2),(3,3),(5,5)):((1,2),(4,12),(36,180))",
            "((2,2),9,25)",
        )
        assert (code, out) == (0, "((2,2),9,25):((1,2),4,36)")

    def test_complement(self, capsys):
        code, out, _ = run(
            capsys, "complement", "((2,2),(2,2)):((8,2),(64,256))", "4096"
        )
        assert (code, out) == (0, "(2,2,4,2,8):(1,4,16,128,512)")

    def test_divide(self, capsys):
        code, out, _ = run(capsys, "divide", "(64,32):(32,1)", "(4,4):(1,64)")
        assert (code, out) == (0, "((4,4),(16,8)):((32,1),(128,4))")

    def test_product(self, capsys):
        code, out, _ = run(
            capsys, "product", "(3,10,10):(200,1,20)", "(2,2):(1,2)"
        )
        assert (code, out) == (0, "((3,10,10),(2,2)):((200,1,20),(10,600))")

    def test_tractable(self, capsys):
        assert run(capsys, "tractable", "(2,2,2):(1,2,4)") == (0, "true", "")
        assert run(capsys, "tractable", "(2,2,2):(1,7,4)") == (0, "false", "")

    def test_eval(self, capsys):
        assert run(capsys, "eval", "(2,3):(1,5)", "3") == (0, "6", "")


class TestMorphismVerbs:
    def test_morphism(self, capsys):
        code, out, _ = run(capsys, "morphism", "(2,2,2):(1,2,4)")
        assert (code, out) == (0, "(2,2,2)--(1,2,3)-->(2,2,2)")

    def test_layout_of(self, capsys):
        code, out, _ = run(capsys, "layout-of", "((5,5),8)--(1,3,2)-->(5,8,5)")
        assert (code, out) == (0, "((5,5),8):((1,40),5)")

    def test_layout_of_with_map_flag(self, capsys):
        code, out, _ = run(
            capsys, "layout-of", "((5,5),8)", "(5,8,5)", "--map", "1,3,2"
        )
        assert (code, out) == (0, "((5,5),8):((1,40),5)")

    def test_compose_morphisms(self, capsys):
        code, out, _ = run(
            capsys,
            "compose",
            "((2,2),(2,2))--(3,2,6,5)-->((2,2,2),(2,2,2))",
            "((2,2,2),(2,2,2))--(1,0,2,0,3,4)-->(2,2,2,2)",
        )
        assert (code, out) == (0, "((2,2),(2,2))--(2,0,4,3)-->(2,2,2,2)")

    def test_coalesce_morphism(self, capsys):
        code, out, _ = run(
            capsys, "coalesce", "(2,2,10,10)--(1,2,4,5)-->(2,2,2,10,10)"
        )
        assert (code, out) == (0, "(4,100)--(1,3)-->(4,2,100)")

    def test_complement_morphism(self, capsys):
        code, out, _ = run(capsys, "complement", "(2,2)--(1,3)-->(2,5,2,5)")
        assert (code, out) == (0, "(5,5)--(2,4)-->(2,5,2,5)")

    def test_divide_morphisms(self, capsys):
        code, out, _ = run(
            capsys,
            "divide",
            "(4,8,4,8)--(1,2,3,4)-->(4,8,4,8)",
            "(4,4)--(1,3)-->(4,8,4,8)",
        )
        assert (code, out) == (0, "((4,4),(8,8))--(1,3,2,4)-->(4,8,4,8)")

    def test_product_morphisms(self, capsys):
        code, out, _ = run(
            capsys,
            "product",
            "(2,2)--(1,2)-->(2,2,5,5)",
            "(5,5)--(2,1)-->(5,5)",
        )
        assert (code, out) == (0, "((2,2),(5,5))--(1,2,4,3)-->(2,2,5,5)")

    def test_mutual_refine(self, capsys):
        code, out, _ = run(capsys, "mutual-refine", "(6,6)", "(12,3,6)")
        assert code == 0
        assert out.splitlines() == ["(6,(2,3))", "((6,2),3,6)"]

    def test_mutual_refine_failure(self, capsys):
        code, _, err = run(capsys, "mutual-refine", "(8,8)", "(3,8,8)")
        assert code == 1
        assert "not-composable" in err


class TestRender:
    def test_grid(self, capsys):
        code, out, _ = run(capsys, "render", "(3,5):(2,10)")
        rows = [row.split() for row in out.splitlines()]
        assert code == 0
        assert [r[0] for r in rows] == ["0", "2", "4"]
        assert rows[0] == ["0", "10", "20", "30", "40"]

    def test_single_column(self, capsys):
        code, out, _ = run(capsys, "render", "(8):(5)")
        assert code == 0
        assert [row.strip() for row in out.splitlines()] == [
            str(5 * i) for i in range(8)
        ]

    def test_trivial(self, capsys):
        assert run(capsys, "render", "1:0") == (0, "0", "")

    def test_rank_over_two_needs_flatten(self, capsys):
        code, _, err = run(capsys, "render", "(2,2,2):(1,2,4)")
        assert code == 1
        assert "--flatten-to" in err
        code, out, _ = run(
            capsys, "render", "(2,2,2):(1,2,4)", "--flatten-to", "2"
        )
        assert code == 0
        assert len(out.splitlines()) == 2

    def test_tikz(self, capsys):
        code, out, _ = run(capsys, "render", "(2,2):(1,2)", "--tikz")
        assert code == 0
        assert out.startswith("\\begin{tikzpicture}")
        assert "grid" in out


class TestJson:
    def test_layout(self, capsys):
        code, out, _ = run(
            capsys, "--json", "complement", "((2,2),(2,2)):((8,2),(64,256))", "4096"
        )
        assert code == 0
        assert json.loads(out) == {
            "shape": [2, 2, 4, 2, 8],
            "stride": [1, 4, 16, 128, 512],
        }

    def test_morphism(self, capsys):
        code, out, _ = run(capsys, "--json", "morphism", "(2,2,2):(1,2,4)")
        assert json.loads(out) == {
            "domain": [2, 2, 2],
            "codomain": [2, 2, 2],
            "map": [1, 2, 3],
        }

    def test_tractable(self, capsys):
        code, out, _ = run(capsys, "--json", "tractable", "(2,2,2):(1,7,4)")
        assert json.loads(out) == {"tractable": False}

    def test_render(self, capsys):
        code, out, _ = run(capsys, "--json", "render", "(2,2):(1,2)")
        assert json.loads(out) == {"rows": 2, "cols": 2, "cells": [[0, 2], [1, 3]]}


class TestCheckAndExitCodes:
    def test_check_compose(self, capsys):
        code, out, _ = run(
            capsys, "check", "compose", "((4,4),4):((16,1),4)", "(8,64):(64,1)"
        )
        assert (code, out) == (0, "ok")

    def test_check_complement(self, capsys):
        assert run(capsys, "check", "complement", "(4,4):(1,16)", "64")[0] == 0

    def test_check_coalesce(self, capsys):
        assert run(capsys, "check", "coalesce", "(2,2):(1,2)")[0] == 0

    def test_domain_error_exit_1(self, capsys):
        code, _, err = run(capsys, "compose", "64:1", "(3,3):(3,1)")
        assert code == 1
        assert err.startswith("not-composable:")

    def test_not_complementable_exit_1(self, capsys):
        code, _, err = run(capsys, "complement", "(2,2):(3,4)")
        assert code == 1
        assert err.startswith("not-complementable:")

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "coalesce", "(2,:(1)")
        assert code == 2
        assert err.startswith("parse-error:")

    def test_bad_integer_exit_2(self, capsys):
        assert run(capsys, "eval", "(2,3):(1,5)", "x")[0] == 2

    def test_unknown_verb_exit_2(self, capsys):
        assert main(["frobnicate"]) == 2
