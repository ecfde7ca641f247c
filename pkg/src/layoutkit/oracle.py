"""Ground-truth checks by exhaustive evaluation.

Everything here works on full function tables rather than on the algebraic
structure, so it is slow but independent of the engine: the engine's results
are verified against these tables in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .errors import OracleCapError
from .flat import FlatLayout, concat_flat
from .layout import Layout

#: refuse to tabulate anything larger than this many points by default
DEFAULT_CAP = 10**6

LayoutLike = Union[Layout, FlatLayout]


@dataclass(frozen=True)
class FunctionTable:
    """The full value table of a function on [0, len(values))."""

    values: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def is_bijection_onto_range(self) -> bool:
        return sorted(self.values) == list(range(len(self.values)))


def _flat(layout: LayoutLike) -> FlatLayout:
    return layout.flat() if isinstance(layout, Layout) else layout


def table_of(layout: LayoutLike, cap: int = DEFAULT_CAP) -> FunctionTable:
    flat = _flat(layout)
    n = flat.size()
    if n > cap:
        raise OracleCapError(f"table of size {n} exceeds cap {cap}")
    # walk the coordinates as an odometer instead of delinearizing each point
    shape, stride = flat.shape, flat.stride
    m = flat.rank
    coord = [0] * m
    offset = 0
    values = []
    for _ in range(n):
        values.append(offset)
        for i in range(m):
            coord[i] += 1
            offset += stride[i]
            if coord[i] < shape[i]:
                break
            coord[i] = 0
            offset -= shape[i] * stride[i]
    return FunctionTable(tuple(values))


def functions_equal(a: LayoutLike, b: LayoutLike, cap: int = DEFAULT_CAP) -> bool:
    fa, fb = _flat(a), _flat(b)
    if fa.size() != fb.size():
        return False
    return table_of(fa, cap) == table_of(fb, cap)


def check_compose(
    a: LayoutLike,
    b: LayoutLike,
    composite: Optional[LayoutLike] = None,
    cap: int = DEFAULT_CAP,
) -> bool:
    """Point-by-point check that ``composite`` (engine result when omitted)
    computes x ↦ b(a(x))."""
    if composite is None:
        la = a if isinstance(a, Layout) else Layout.of_flat(a)
        lb = b if isinstance(b, Layout) else Layout.of_flat(b)
        composite = la.compose(lb)
    fa, fb, fc = _flat(a), _flat(b), _flat(composite)
    n = fa.size()
    if n > cap:
        raise OracleCapError(f"table of size {n} exceeds cap {cap}")
    if fc.size() != n:
        return False
    return all(fc(x) == fb(fa(x)) for x in range(n))


def check_complement(
    a: LayoutLike,
    b: Optional[LayoutLike] = None,
    n: Optional[int] = None,
    cap: int = DEFAULT_CAP,
) -> bool:
    """Check that ``b`` (engine result when omitted) completes ``a`` to a
    bijection onto [0, size(a)*size(b)), of total size ``n`` when given."""
    fa = _flat(a)
    if b is None:
        b = fa.complement(n)
    fb = _flat(b)
    total = fa.size() * fb.size()
    if n is not None and total != n:
        return False
    if total > cap:
        raise OracleCapError(f"table of size {total} exceeds cap {cap}")
    return table_of(concat_flat([fa, fb]), cap).is_bijection_onto_range()


def exhaustive_complement_search(
    a: LayoutLike, n: int, cap: int = DEFAULT_CAP
) -> List[FlatLayout]:
    """All sorted coalesced flat layouts B with A ⋆ B a bijection onto
    [0, n), found by enumeration and table checks.

    Candidates are pruned only with *necessary* conditions — the shape
    product is forced by sizes, strides must satisfy cosize(A ⋆ B) = n
    exactly, and in a compact layout of size n every stride and every
    shape*stride product is a prefix product of the sorted modes, hence a
    divisor of n — so the survivors are decided purely by the bijectivity
    table.
    """
    fa = _flat(a)
    if n > cap:
        raise OracleCapError(f"search space of size {n} exceeds cap {cap}")
    if n < 1 or n % fa.size() != 0:
        return []
    m = n // fa.size()
    budget = n - fa.cosize()
    if budget < 0:
        return []

    out: List[FlatLayout] = []
    for shape in _factorizations(m):
        for stride in _stride_choices(shape, budget, 1, n):
            if any(
                shape[i] * stride[i] == stride[i + 1] for i in range(len(shape) - 1)
            ):
                continue  # mergeable, so not in canonical (coalesced) form
            b = FlatLayout(shape, stride)
            if table_of(concat_flat([fa, b]), cap).is_bijection_onto_range():
                out.append(b)
    return out


def _factorizations(m: int) -> List[Tuple[int, ...]]:
    """All ordered tuples of factors >= 2 with the given product (and () for
    m == 1)."""
    if m == 1:
        return [()]
    out: List[Tuple[int, ...]] = []
    for first in range(2, m + 1):
        if m % first == 0:
            for rest in _factorizations(m // first):
                out.append((first,) + rest)
    return out


def _stride_choices(
    shape: Sequence[int], budget: int, low: int, n: int
) -> List[Tuple[int, ...]]:
    """Non-decreasing positive strides with sum((s-1)*d) exactly ``budget``,
    where each d and s*d divides ``n``."""
    if not shape:
        return [()] if budget == 0 else []
    s = shape[0]
    out: List[Tuple[int, ...]] = []
    d = low
    while (s - 1) * d <= budget:
        if n % d == 0 and n % (s * d) == 0:
            for rest in _stride_choices(shape[1:], budget - (s - 1) * d, d, n):
                out.append((d,) + rest)
        d += 1
    return out
