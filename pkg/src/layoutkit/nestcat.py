"""Nested tuple morphisms, mutual refinement, and layout composition.

A nested morphism is a tuple morphism between the flattenings of two nested
tuples; the trees only record grouping.  Refining either side along a
refinement of its tree induces a new morphism with the same realized
function (pullback along a codomain refinement, pushforward along a domain
refinement).  Composition of layouts is computed by refining the middle
trees of two standard representations until one is a flat prefix of the
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import LayoutError, NotComposableError, NotRefinementError
from .flat import FlatLayout
from .layout import Layout
from .shapes import (
    Nested,
    flatten,
    length,
    profile,
    refines,
    relative_modes,
    size,
    substitute,
    unflatten,
)
from .tuplecat import (
    TupleMorphism,
    coalesce_m,
    complement_m,
    compose_morphisms,
    concat_morphisms,
    layout_of,
    standard_representation,
)


@dataclass(frozen=True)
class NestMorphism:
    domain: Nested
    codomain: Nested
    fmap: TupleMorphism

    def __post_init__(self) -> None:
        if flatten(self.domain) != self.fmap.domain:
            raise LayoutError(
                f"domain {self.domain} does not flatten to {self.fmap.domain}"
            )
        if flatten(self.codomain) != self.fmap.codomain:
            raise LayoutError(
                f"codomain {self.codomain} does not flatten to {self.fmap.codomain}"
            )

    def is_standard_form(self) -> bool:
        from .shapes import depth

        return self.fmap.is_standard_form() and depth(self.codomain) <= 1

    def is_non_degenerate(self) -> bool:
        return self.fmap.is_non_degenerate()

    def realize(self) -> List[int]:
        from .tuplecat import realize

        return realize(self.fmap)

    def __str__(self) -> str:
        from .notation import format_morphism

        return format_morphism(self)


@dataclass(frozen=True)
class Refinement:
    fine: Nested
    coarse: Nested

    def __post_init__(self) -> None:
        if not refines(self.fine, self.coarse):
            raise NotRefinementError(f"{self.fine} does not refine {self.coarse}")

    def is_identity(self) -> bool:
        return self.fine == self.coarse


@dataclass(frozen=True)
class MutualRefinement:
    t_ref: Refinement
    u_ref: Refinement

    def __post_init__(self) -> None:
        if not divides(self.t_ref.fine, self.u_ref.fine):
            raise LayoutError(
                f"{self.t_ref.fine} is not a flat prefix of {self.u_ref.fine}"
            )


def nest_morphism(domain: Nested, codomain: Nested, amap: Sequence[int]) -> NestMorphism:
    return NestMorphism(
        domain, codomain, TupleMorphism(flatten(domain), flatten(codomain), tuple(amap))
    )


def compose_nest(f: NestMorphism, g: NestMorphism) -> NestMorphism:
    """g ∘ f (flattened codomain of f must equal flattened domain of g)."""
    return NestMorphism(f.domain, g.codomain, compose_morphisms(f.fmap, g.fmap))


def layout_of_nested(f: NestMorphism) -> Layout:
    """The layout encoded by ``f``, nested like its domain."""
    flat = layout_of(f.fmap)
    return Layout(f.domain, unflatten(flat.stride, profile(f.domain)))


def standard_representation_nested(layout: Layout) -> NestMorphism:
    """Standard representation with the layout's shape tree as domain and a
    flat codomain."""
    fmap = standard_representation(layout.flat())
    return NestMorphism(layout.shape, fmap.codomain, fmap)


# -- refinement transport --------------------------------------------------


def pullback(f: NestMorphism, tref: Refinement) -> Tuple[NestMorphism, Refinement]:
    """Refine the codomain along ``tref`` and split each domain entry into
    the flat block it now covers; the layout function is unchanged."""
    if tref.coarse != f.codomain:
        raise LayoutError(f"{tref.coarse} is not the codomain of {f}")
    rel = relative_modes(tref.fine, f.codomain)
    offs: List[int] = []
    pos = 0
    for sub in rel:
        offs.append(pos)
        pos += length(sub)

    parts: List[Nested] = []
    amap: List[int] = []
    for s, a in zip(f.fmap.domain, f.fmap.amap):
        if a == 0:
            parts.append(s)
            amap.append(0)
        else:
            sub = rel[a - 1]
            parts.append(sub)
            base = offs[a - 1]
            amap.extend(range(base + 1, base + 1 + length(sub)))
    dom_fine = substitute(parts, profile(f.domain))
    return (
        nest_morphism(dom_fine, tref.fine, amap),
        Refinement(dom_fine, f.domain),
    )


def pushforward(f: NestMorphism, sref: Refinement) -> Tuple[NestMorphism, Refinement]:
    """Refine the domain along ``sref`` and replace each hit codomain entry
    by the refining sub-tree; the layout function is unchanged."""
    if sref.coarse != f.domain:
        raise LayoutError(f"{sref.coarse} is not the domain of {f}")
    rel = relative_modes(sref.fine, f.domain)
    cod_parts: List[Nested] = list(f.fmap.codomain)
    for a, sub in zip(f.fmap.amap, rel):
        if a != 0:
            cod_parts[a - 1] = sub
    cod_fine = substitute(cod_parts, profile(f.codomain))

    offs: List[int] = []
    pos = 0
    for p in cod_parts:
        offs.append(pos)
        pos += length(p)

    amap: List[int] = []
    for a, sub in zip(f.fmap.amap, rel):
        n = length(sub)
        if a == 0:
            amap.extend([0] * n)
        else:
            base = offs[a - 1]
            amap.extend(range(base + 1, base + 1 + n))
    return (
        nest_morphism(sref.fine, cod_fine, amap),
        Refinement(cod_fine, f.codomain),
    )


# -- mutual refinement -----------------------------------------------------


def divides(fine_a: Nested, fine_b: Nested) -> bool:
    """Whether ``fine_a`` is a flat prefix of ``fine_b``: some concatenation
    ``fine_a ⋆ rest`` flattens to ``fine_b``'s flattening."""
    fa, fb = flatten(fine_a), flatten(fine_b)
    return fb[: len(fa)] == fa


def mutual_refinement(t: Nested, u: Nested) -> Optional[MutualRefinement]:
    """Refinements T' of ``t`` and U' of ``u`` with T' a flat prefix of U';
    None when the greedy entry-splitting strategy finds no such pair.

    Works through the flat entries with two pointers, splitting the larger
    current entry by the smaller whenever one divides the other.
    """
    x = list(flatten(t))
    y = list(flatten(u))
    i = j = 0
    x_mode: List[int] = []
    y_mode: List[int] = []
    x_parts: List[Nested] = []
    y_parts: List[Nested] = []

    def flush(mode: List[int], parts: List[Nested]) -> None:
        parts.append(mode[0] if len(mode) == 1 else tuple(mode))
        mode.clear()

    while i < len(x) and j < len(y):
        if x[i] == y[j]:
            x_mode.append(x[i])
            flush(x_mode, x_parts)
            y_mode.append(y[j])
            flush(y_mode, y_parts)
            i += 1
            j += 1
        elif y[j] % x[i] == 0:
            x_mode.append(x[i])
            flush(x_mode, x_parts)
            y_mode.append(x[i])
            y[j] //= x[i]
            i += 1
        elif x[i] % y[j] == 0:
            y_mode.append(y[j])
            flush(y_mode, y_parts)
            x_mode.append(y[j])
            x[i] //= y[j]
            j += 1
        else:
            return None

    if i < len(x):
        return None
    if y_mode:
        y_mode.append(y[j])
        flush(y_mode, y_parts)
        j += 1
    while j < len(y):
        y_parts.append(y[j])
        j += 1

    return MutualRefinement(
        Refinement(substitute(x_parts, profile(t)), t),
        Refinement(substitute(y_parts, profile(u)), u),
    )


# -- composition -----------------------------------------------------------


def make_composable(
    f: NestMorphism, g: NestMorphism, mr: MutualRefinement
) -> Tuple[NestMorphism, NestMorphism]:
    """Transport ``f`` and ``g`` across a mutual refinement of
    (codomain(f), domain(g)) so that they become composable, without
    changing either layout function.

    The refined codomain of ``f`` is a flat prefix of the refined domain of
    ``g``, so ``f`` is extended by the corresponding inclusion.
    """
    if mr.t_ref.coarse != f.codomain or mr.u_ref.coarse != g.domain:
        raise LayoutError(
            "mutual refinement does not lie over (codomain(f), domain(g))"
        )
    f_fine, _ = pullback(f, mr.t_ref)
    g_fine, _ = pushforward(g, mr.u_ref)
    nt = length(mr.t_ref.fine)
    inclusion = nest_morphism(mr.t_ref.fine, mr.u_ref.fine, range(1, nt + 1))
    return compose_nest(f_fine, inclusion), g_fine


def compose_tractable(a: Layout, b: Layout) -> Layout:
    """The weak composite: a layout with function Φ_b ∘ Φ_a whose shape
    refines shape(a), before any coalescing."""
    if a.cosize() > b.size():
        raise NotComposableError(
            f"cosize {a.cosize()} of the first layout exceeds size {b.size()} "
            f"of the second"
        )
    f = standard_representation_nested(a)
    g = standard_representation_nested(b.coalesce())

    mr = mutual_refinement(tuple(f.fmap.codomain), g.domain)
    if mr is None:
        raise NotComposableError(
            f"no mutual refinement of {f.fmap.codomain} and {g.domain}"
        )
    f_fine, g_fine = make_composable(f, g, mr)
    return layout_of_nested(compose_nest(f_fine, g_fine))


def compose_layouts(a: Layout, b: Layout) -> Layout:
    """The layout of ``Φ_b ∘ Φ_a``: the weak composite coalesced relative to
    the shape of ``a``."""
    return compose_tractable(a, b).coalesce_relative(a.shape)


# -- morphism-level operations ---------------------------------------------


def concat_nm(fs: Sequence[NestMorphism]) -> NestMorphism:
    """One morphism with one domain mode per operand; images must be
    disjoint and the codomains equal."""
    if not fs:
        raise LayoutError("cannot concatenate zero morphisms")
    for f in fs[1:]:
        if f.codomain != fs[0].codomain:
            raise LayoutError("concatenation requires a common codomain")
    return NestMorphism(
        tuple(f.domain for f in fs),
        fs[0].codomain,
        concat_morphisms([f.fmap for f in fs]),
    )


def complement_nm(f: NestMorphism) -> NestMorphism:
    """The inclusion of the codomain entries missed by an injective ``f``."""
    fc = complement_m(f.fmap)
    return NestMorphism(_as_tree(fc.domain), f.codomain, fc)


def coalesce_nm(f: NestMorphism) -> NestMorphism:
    """Merge adjacent modes mapping consecutively; encodes the coalesce of
    the encoded layout."""
    c = coalesce_m(f.fmap)
    return NestMorphism(_as_tree(c.domain), _as_tree(c.codomain), c)


def logical_divide_m(f: NestMorphism, g: NestMorphism) -> NestMorphism:
    """f ∘ (g, complement(g)); requires flattened codomain(g) = domain(f)."""
    return compose_nest(concat_nm([g, complement_nm(g)]), f)


def logical_product_m(f: NestMorphism, g: NestMorphism) -> NestMorphism:
    """(f, complement(f) ∘ g); requires flattened codomain(g) to equal the
    flattened domain of complement(f)."""
    return concat_nm([f, compose_nest(g, complement_nm(f))])


def _as_tree(entries: Tuple[int, ...]) -> Nested:
    return entries[0] if len(entries) == 1 else entries


# -- admissibility ---------------------------------------------------------


def is_admissible_for_composition(a: FlatLayout, b: FlatLayout) -> bool:
    """A sufficient condition for the composite of ``a`` (no unit shapes, no
    zero strides) with ``b`` to exist: each of d_i and s_i*d_i nests between
    consecutive prefix products of shape(b), and the stride intervals of
    ``a``'s modes are pairwise disjoint within the range addressed by all
    but its last mode."""
    if any(s == 1 for s in a.shape) or any(d == 0 for d in a.stride):
        raise LayoutError(f"{a} has unit shape entries or zero strides")
    u = b.shape
    p = len(u)
    pre = [1]
    for e in u:
        pre.append(pre[-1] * e)

    def nests(v: int) -> bool:
        # some window [pre[k-1], pre[k]] with pre[k-1] | v and v | pre[k],
        # properly when k < p
        for k in range(1, p + 1):
            if v % pre[k - 1] == 0 and pre[k] % v == 0 and (k == p or v < pre[k]):
                return True
        return p == 0 and v == 1

    for s, d in zip(a.shape, a.stride):
        if not (nests(d) and nests(s * d)):
            return False

    bound = 1
    for s in a.shape[:-1]:
        bound *= s
    spans = []
    for s, d in zip(a.shape, a.stride):
        lo, hi = max(d, 1), min(d * (s - 1), bound - 1)
        if lo <= hi:
            spans.append((lo, hi))
    spans.sort()
    for (_, hi1), (lo2, _) in zip(spans, spans[1:]):
        if lo2 <= hi1:
            return False
    return True
