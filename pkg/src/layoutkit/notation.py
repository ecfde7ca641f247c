"""Canonical text notation.

Grammar (no whitespace in canonical output; parsing is whitespace-tolerant)::

    TUPLE    := INT | "(" TUPLE ("," TUPLE)* ")" | "()"
    LAYOUT   := TUPLE ":" TUPLE
    MORPHISM := TUPLE "--(" INT ("," INT)* ")-->" TUPLE   (0 = basepoint)

A bare integer and a length-1 tuple are distinct: ``10:2`` is depth 0 while
``(10):(2)`` has one mode.
"""

from __future__ import annotations

from typing import Tuple

from .errors import NotationError
from .flat import FlatLayout
from .layout import Layout
from .nestcat import NestMorphism, nest_morphism
from .shapes import Nested
from .tuplecat import TupleMorphism

# -- formatting ------------------------------------------------------------


def format_nested(x: Nested) -> str:
    if isinstance(x, int):
        return str(x)
    return "(" + ",".join(format_nested(c) for c in x) + ")"


def format_layout(layout: Layout) -> str:
    return f"{format_nested(layout.shape)}:{format_nested(layout.stride)}"


def format_flat_layout(flat: FlatLayout) -> str:
    return f"{format_nested(flat.shape)}:{format_nested(flat.stride)}"


def format_morphism_flat(f: TupleMorphism) -> str:
    amap = "(" + ",".join(str(a) for a in f.amap) + ")"
    return f"{format_nested(f.domain)}--{amap}-->{format_nested(f.codomain)}"


def format_morphism(f: NestMorphism) -> str:
    amap = "(" + ",".join(str(a) for a in f.fmap.amap) + ")"
    return f"{format_nested(f.domain)}--{amap}-->{format_nested(f.codomain)}"


# -- parsing ---------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = "".join(text.split())
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            raise NotationError(
                f"expected {token!r} at position {self.pos} in {self.text!r}"
            )
        self.pos += len(token)

    def tries(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise NotationError(
                f"expected an integer at position {start} in {self.text!r}"
            )
        return int(self.text[start : self.pos])

    def nested(self) -> Nested:
        if not self.tries("("):
            return self.integer()
        if self.tries(")"):
            return ()
        items = [self.nested()]
        while self.tries(","):
            items.append(self.nested())
        self.take(")")
        return tuple(items)

    def done(self) -> None:
        if self.pos != len(self.text):
            raise NotationError(
                f"trailing text {self.text[self.pos:]!r} in {self.text!r}"
            )


def parse_nested(text: str) -> Nested:
    sc = _Scanner(text)
    out = sc.nested()
    sc.done()
    return out


def parse_layout(text: str) -> Layout:
    sc = _Scanner(text)
    shape = sc.nested()
    sc.take(":")
    stride = sc.nested()
    sc.done()
    # malformed text raises NotationError above; a well-formed description
    # of an invalid layout (e.g. incongruent trees) stays a domain error
    return Layout(shape, stride)


def parse_morphism(text: str) -> NestMorphism:
    sc = _Scanner(text)
    domain = sc.nested()
    sc.take("--(")
    amap: Tuple[int, ...] = ()
    if sc.peek() != ")":
        amap = (sc.integer(),)
        while sc.tries(","):
            amap += (sc.integer(),)
    sc.take(")-->")
    codomain = sc.nested()
    sc.done()
    return nest_morphism(domain, codomain, amap)


def nested_to_json(x: Nested):
    if isinstance(x, int):
        return x
    return [nested_to_json(c) for c in x]
