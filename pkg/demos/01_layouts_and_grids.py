"""Layouts as shape:stride pairs and the grids they draw.

A layout maps multi-dimensional coordinates (first axis fastest) to flat
offsets by dotting with strides.  Run this script to see a few layouts
printed as grids, exactly as the `layoutkit render` verb shows them.
"""

from layoutkit import FlatLayout, Layout, column_major_layout, format_layout


def show(l: Layout) -> None:
    flat = l.flat()
    print(f"{format_layout(l)}  (size {l.size()}, cosize {l.cosize()})")
    if flat.rank <= 1:
        for x in range(flat.size()):
            print(f"  {flat(x)}")
    else:
        nrows = flat.shape[0]
        ncols = flat.size() // nrows
        for i in range(nrows):
            print("  " + " ".join(f"{flat(i + nrows * j):4d}" for j in range(ncols)))
    print()


def main() -> None:
    # a 3x5 matrix stored with row stride 2 and column stride 10
    show(Layout((3, 5), (2, 10)))

    # column-major is the compact layout with strides = prefix products
    show(column_major_layout((4, 3)))

    # zero strides broadcast: every column repeats
    show(Layout((4, 3), (1, 0)))

    # nesting changes grouping, not the function
    nested = Layout(((2, 2), 3), ((1, 2), 4))
    flat = FlatLayout((2, 2, 3), (1, 2, 4))
    assert [nested(x) for x in range(12)] == [flat(x) for x in range(12)]
    show(nested)


if __name__ == "__main__":
    main()
