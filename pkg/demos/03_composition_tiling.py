"""Composition, logical division, and logical product.

Composition chains layout functions: (A then B).  Logical division A / B
reindexes A by the tile B (tile coordinates first, then which tile);
logical product A * B replicates A across the pattern B.
"""

from layoutkit import Layout, check_compose, format_layout, table_of


def main() -> None:
    # composition: gather B's values in the order A visits them
    a = Layout(((4, 4), 4), ((16, 1), 4))
    b = Layout((8, 64), (64, 1))
    c = a.compose(b)
    print(f"{format_layout(b)} after {format_layout(a)} = {format_layout(c)}")
    assert check_compose(a, b, c)

    # dividing a 64x32 row-major matrix by a 4x4 tile: the first mode of the
    # quotient walks one tile, the second walks the grid of tiles
    m = Layout((64, 32), (32, 1))
    tiler = Layout((4, 4), (1, 64))
    q = m.logical_divide(tiler)
    print(f"{format_layout(m)} / {format_layout(tiler)} = {format_layout(q)}")
    tile_values = table_of(q).values[: tiler.size()]
    print(f"first tile visits offsets {sorted(tile_values)[:4]} ...")

    # product: replicate a 2x2 block across a 5x5 arrangement
    block = Layout((2, 2), (1, 2))
    pattern = Layout((5, 5), (5, 1))
    p = block.logical_product(pattern)
    print(f"{format_layout(block)} * {format_layout(pattern)} = {format_layout(p)}")


if __name__ == "__main__":
    main()
