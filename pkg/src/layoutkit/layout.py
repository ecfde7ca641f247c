"""Nested layouts: congruent shape and stride trees.

A :class:`Layout` pairs a nested shape tuple with a congruent nested stride
tuple.  Its function ignores the nesting — it is the function of the
flattened layout — but the nesting determines how operations such as
composition, division, and product group their results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import LayoutError
from .flat import FlatLayout
from .shapes import (
    Nested,
    congruent,
    depth,
    flatten,
    length,
    profile,
    rank,
    relative_modes,
    size,
    substitute,
    unflatten,
)


@dataclass(frozen=True)
class Layout:
    shape: Nested
    stride: Nested

    def __post_init__(self) -> None:
        if not congruent(self.shape, self.stride):
            raise LayoutError(
                f"shape {self.shape} and stride {self.stride} are not congruent"
            )
        # delegate range checks to the flat representation
        self.flat()

    @staticmethod
    def of_flat(flat: FlatLayout) -> "Layout":
        """Wrap a flat layout: rank 0 becomes 1:0, rank 1 becomes depth 0."""
        if flat.rank == 0:
            return Layout(1, 0)
        if flat.rank == 1:
            return Layout(flat.shape[0], flat.stride[0])
        return Layout(flat.shape, flat.stride)

    # -- attributes --------------------------------------------------------

    def flat(self) -> FlatLayout:
        return FlatLayout(flatten(self.shape), flatten(self.stride))

    def length(self) -> int:
        return length(self.shape)

    def rank(self) -> int:
        return rank(self.shape)

    def depth(self) -> int:
        return depth(self.shape)

    def complexity(self) -> int:
        return self.length() + self.depth()

    def size(self) -> int:
        return size(self.shape)

    def cosize(self) -> int:
        return self.flat().cosize()

    # -- evaluation --------------------------------------------------------

    def __call__(self, x: int) -> int:
        return self.flat()(x)

    def eval_coord(self, coord: Sequence[int]) -> int:
        return self.flat().eval_coord(coord)

    # -- predicates --------------------------------------------------------

    def is_tractable(self) -> bool:
        return self.flat().is_tractable()

    def is_compact(self) -> bool:
        return self.flat().is_compact()

    def is_complementable(self) -> bool:
        return self.flat().is_complementable()

    def is_n_complementable(self, n: int) -> bool:
        return self.flat().is_n_complementable(n)

    def is_coalesced(self) -> bool:
        """1:0, a depth-0 layout with shape > 1, or a depth-1 layout of rank
        > 1 whose flat form admits no merging."""
        if self.depth() == 0:
            return (self.shape, self.stride) == (1, 0) or self.shape > 1
        return (
            self.depth() == 1 and self.rank() > 1 and self.flat().is_coalesced()
        )

    # -- coalescing --------------------------------------------------------

    def coalesce(self) -> "Layout":
        """The minimal-complexity layout with the same function."""
        c = self.flat().coalesce()
        if c.rank == 0:
            return Layout(1, 0)
        return Layout.of_flat(c)

    def coalesce_relative(self, shape_bar: Nested) -> "Layout":
        """Coalesce each group of modes lying over an entry of ``shape_bar``
        (which the shape must refine), keeping the coarse grouping."""
        rel = relative_modes(self.shape, shape_bar)
        flat_stride = flatten(self.stride)
        shapes: List[Nested] = []
        strides: List[Nested] = []
        pos = 0
        for sub in rel:
            n = length(sub)
            piece = Layout(
                sub, unflatten(flat_stride[pos : pos + n], profile(sub))
            ).coalesce()
            shapes.append(piece.shape)
            strides.append(piece.stride)
            pos += n
        prof = profile(shape_bar)
        return Layout(substitute(shapes, prof), substitute(strides, prof))

    # -- complement --------------------------------------------------------

    def complement(self, n: Optional[int] = None) -> "Layout":
        c = self.flat().complement(n)
        if c.rank == 0:
            return Layout(1, 0)
        return Layout.of_flat(c)

    # -- algebra (delegating to the morphism engine) -----------------------

    def compose(self, other: "Layout") -> "Layout":
        """The layout of ``Φ_other ∘ Φ_self``."""
        from .nestcat import compose_layouts

        return compose_layouts(self, other)

    def logical_divide(self, tiler: "Layout") -> "Layout":
        return concat_layouts(
            [tiler, tiler.complement(self.size())]
        ).compose(self)

    def logical_product(self, other: "Layout") -> "Layout":
        comp = self.complement(self.size() * other.cosize())
        return concat_layouts([self, other.compose(comp)])

    def __str__(self) -> str:
        from .notation import format_layout

        return format_layout(self)


def concat_layouts(layouts: Sequence[Layout]) -> Layout:
    """(A, B, ...) as one layout with one mode per operand."""
    if not layouts:
        return Layout((), ())
    return Layout(
        tuple(l.shape for l in layouts), tuple(l.stride for l in layouts)
    )


def substitute_profile(layout: Layout, prof) -> Layout:
    """Re-nest the entries of ``layout`` under a new profile of the same
    length."""
    return Layout(
        unflatten(flatten(layout.shape), prof),
        unflatten(flatten(layout.stride), prof),
    )


# functional spellings of the method suite
def coalesce(l: Layout) -> Layout:
    return l.coalesce()


def coalesce_relative(l: Layout, shape_bar: Nested) -> Layout:
    return l.coalesce_relative(shape_bar)


def complement(a: Layout, n: Optional[int] = None) -> Layout:
    return a.complement(n)


def compose(a: Layout, b: Layout) -> Layout:
    """The layout of ``Φ_b ∘ Φ_a`` (``a`` applied first)."""
    return a.compose(b)


def logical_divide(a: Layout, b: Layout) -> Layout:
    return a.logical_divide(b)


def logical_product(a: Layout, b: Layout) -> Layout:
    return a.logical_product(b)


def is_tractable(l: Layout) -> bool:
    return l.is_tractable()


def column_major_layout(shape: Nested) -> Layout:
    """The compact layout with the given shape, first entry fastest."""
    from .shapes import prefix_products

    entries = flatten(shape)
    return Layout(shape, unflatten(prefix_products(entries)[:-1], profile(shape)))
