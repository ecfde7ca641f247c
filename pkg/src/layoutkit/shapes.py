"""Nested integer tuples, profiles, and colexicographic (un)linearization.

A nested tuple is represented directly as a Python value: an ``int`` at depth
0, or a tuple of nested tuples.  A bare integer ``n`` and the length-1 tuple
``(n,)`` are distinct values.  A profile is the same kind of tree with the
sentinel :data:`STAR` at the leaves.

All arithmetic is checked against the signed 64-bit range; overflow raises
:class:`~layoutkit.errors.ArithmeticOverflowError` instead of wrapping.
"""

from __future__ import annotations

from typing import Iterator, Sequence, Tuple, Union

from .errors import ArithmeticOverflowError, LayoutError, NotRefinementError

Nested = Union[int, Tuple["Nested", ...]]
Profile = Union[str, Tuple["Profile", ...]]

#: profile leaf marker
STAR = "*"

INT64_MAX = 2**63 - 1


def checked_mul(a: int, b: int) -> int:
    r = a * b
    if r > INT64_MAX or r < -INT64_MAX - 1:
        raise ArithmeticOverflowError(f"64-bit overflow in {a} * {b}")
    return r


def checked_add(a: int, b: int) -> int:
    r = a + b
    if r > INT64_MAX or r < -INT64_MAX - 1:
        raise ArithmeticOverflowError(f"64-bit overflow in {a} + {b}")
    return r


def is_int(x: Nested) -> bool:
    return isinstance(x, int)


def _leaves(x: Nested) -> Iterator[int]:
    if isinstance(x, int):
        yield x
    else:
        for c in x:
            yield from _leaves(c)


def flatten(x: Nested) -> Tuple[int, ...]:
    """Flat tuple of entries; a depth-0 integer flattens to a 1-tuple."""
    return tuple(_leaves(x))


def profile(x: Nested) -> Profile:
    if isinstance(x, int):
        return STAR
    return tuple(profile(c) for c in x)


def congruent(a: Nested, b: Nested) -> bool:
    return profile(a) == profile(b)


def length(x: Nested) -> int:
    """Number of entries (leaves)."""
    if isinstance(x, int):
        return 1
    return sum(length(c) for c in x)


def rank(x: Nested) -> int:
    return 1 if isinstance(x, int) else len(x)


def depth(x: Nested) -> int:
    # max over the empty set is pinned to -1, so depth(()) == 0
    if isinstance(x, int):
        return 0
    return 1 + max((depth(c) for c in x), default=-1)


def size(x: Nested) -> int:
    total = 1
    for e in _leaves(x):
        total = checked_mul(total, e)
    return total


def entry(x: Nested, i: int) -> int:
    """The ``i``-th entry (0-based, in flattening order)."""
    return flatten(x)[i]


def unflatten(entries: Sequence[int], prof: Profile) -> Nested:
    """Rebuild the nested tuple with the given entries and profile."""
    it = iter(entries)

    def build(p: Profile) -> Nested:
        if p == STAR:
            try:
                return next(it)
            except StopIteration:
                raise LayoutError("entry count does not match profile length") from None
        return tuple(build(c) for c in p)

    out = build(prof)
    try:
        next(it)
    except StopIteration:
        return out
    raise LayoutError("entry count does not match profile length")


def profile_length(p: Profile) -> int:
    if p == STAR:
        return 1
    return sum(profile_length(c) for c in p)


def substitute(parts: Sequence[Nested], prof: Profile) -> Nested:
    """Replace the leaves of ``prof``, in order, by the given nested tuples."""
    if len(parts) != profile_length(prof):
        raise LayoutError(
            f"substitution needs {profile_length(prof)} parts, got {len(parts)}"
        )
    it = iter(parts)

    def build(p: Profile) -> Nested:
        if p == STAR:
            return next(it)
        return tuple(build(c) for c in p)

    return build(prof)


def refines(fine: Nested, coarse: Nested) -> bool:
    """Whether ``fine`` may be obtained from ``coarse`` by replacing each
    entry with a nested tuple of the same size."""
    if isinstance(coarse, int):
        return size(fine) == coarse
    if isinstance(fine, int) or len(fine) != len(coarse):
        return False
    return all(refines(f, c) for f, c in zip(fine, coarse))


def relative_modes(fine: Nested, coarse: Nested) -> list:
    """For each entry of ``coarse``, the sub-tree of ``fine`` refining it.

    The result has ``length(coarse)`` elements and satisfies
    ``substitute(result, profile(coarse)) == fine``.
    """
    if not refines(fine, coarse):
        raise NotRefinementError(f"{fine} does not refine {coarse}")

    out: list = []

    def walk(f: Nested, c: Nested) -> None:
        if isinstance(c, int):
            out.append(f)
        else:
            for fc, cc in zip(f, c):
                walk(fc, cc)

    walk(fine, coarse)
    return out


def prefix_products(entries: Sequence[int]) -> Tuple[int, ...]:
    """Exclusive prefix products: (1, e1, e1*e2, ...)."""
    out = [1]
    for e in entries:
        out.append(checked_mul(out[-1], e))
    return tuple(out)


def colex(shape: Sequence[int], coord: Sequence[int]) -> int:
    """Linearize ``coord`` against a flat ``shape``, first axis fastest."""
    if len(coord) != len(shape):
        raise LayoutError(f"coordinate rank {len(coord)} != shape rank {len(shape)}")
    x = 0
    scale = 1
    for c, s in zip(coord, shape):
        if not 0 <= c < s:
            raise LayoutError(f"coordinate {tuple(coord)} out of range for {tuple(shape)}")
        x = checked_add(x, checked_mul(c, scale))
        scale = checked_mul(scale, s)
    return x


def colex_inv(shape: Sequence[int], x: int) -> Tuple[int, ...]:
    """Inverse of :func:`colex`."""
    total = 1
    for s in shape:
        total = checked_mul(total, s)
    if not 0 <= x < total:
        raise LayoutError(f"index {x} out of range for shape {tuple(shape)}")
    coord = []
    for s in shape:
        coord.append(x % s)
        x //= s
    return tuple(coord)
