"""The engine under the hood: tuple morphisms and mutual refinement.

Every tractable layout is encoded by a canonical morphism between index
tuples (its standard representation).  Operations on layouts become
combinatorial operations on these morphisms, and composition works by
refining the two middle tuples until one is a flat prefix of the other.
"""

from layoutkit import (
    Layout,
    format_morphism,
    format_nested,
    layout_of_nested,
    mutual_refinement,
    standard_representation_nested,
)


def main() -> None:
    # a layout and its standard representation, round-tripped
    l = Layout((2, 2, 2), (1, 2, 4))
    f = standard_representation_nested(l)
    print(f"{l} is encoded by {format_morphism(f)}")
    assert layout_of_nested(f) == l

    # strides that skip (here 3 and 30) appear as extra codomain entries
    g = standard_representation_nested(Layout((2, 2), (3, 30)))
    print(f"(2,2):(3,30) is encoded by {format_morphism(g)}")

    # mutual refinement: split entries of two tuples until the first is a
    # flat prefix of the second
    mr = mutual_refinement((6, 6), (12, 3, 6))
    print(
        f"(6,6) and (12,3,6) refine to "
        f"{format_nested(mr.t_ref.fine)} and {format_nested(mr.u_ref.fine)}"
    )

    # some pairs cannot be aligned: 3 shares no factors with 8
    assert mutual_refinement((8, 8), (3, 8, 8)) is None
    print("(8,8) and (3,8,8) admit no mutual refinement")


if __name__ == "__main__":
    main()
