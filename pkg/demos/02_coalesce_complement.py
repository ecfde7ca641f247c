"""Coalesce and complement: simplifying layouts and filling in the gaps.

Coalesce finds the simplest layout with the same function.  The complement
of A (within total size N) is the layout B such that the pair (A, B)
together covers [0, N) exactly once.
"""

from layoutkit import (
    FlatLayout,
    Layout,
    check_complement,
    concat_flat,
    format_layout,
    table_of,
)


def main() -> None:
    # five modes collapse to two: adjacent modes merge when s*d equals the
    # next stride
    a = Layout((2, 2, 2, 2, 2), (8, 16, 1024, 2048, 4096))
    print(f"coalesce {format_layout(a)} = {format_layout(a.coalesce())}")
    assert table_of(a).values == table_of(a.coalesce()).values

    # the complement of a strided layout interleaves the skipped offsets
    b = FlatLayout((2, 2), (2, 8))
    bc = b.complement()
    print(f"complement of {b} is {bc}")
    assert concat_flat([b, bc]).is_compact()

    # sized complements extend the cover up to a chosen total
    c = Layout(((2, 2), (2, 2)), ((8, 2), (64, 256)))
    print(f"complement of {format_layout(c)} in 4096 = {format_layout(c.complement(4096))}")
    assert check_complement(c.flat(), n=4096)

    # tiling story: a 4x4 column tile inside an 8x8 column-major matrix;
    # the complement enumerates the other three tiles
    tile = FlatLayout((4, 4), (1, 8))
    rest = tile.complement(64)
    print(f"tile {tile} -> remaining blocks {rest}")
    offsets = sorted(table_of(rest).values)
    print(f"block origins: {offsets}")


if __name__ == "__main__":
    main()
