"""Tensor layout algebra: nested shape/stride layouts, their operation
suite (coalesce, complement, composition, logical division and product),
the tuple-morphism engine those operations run on, and a brute-force
oracle for verifying every result by exhaustive evaluation."""

from .errors import (
    ArithmeticOverflowError,
    LayoutError,
    NotationError,
    NotComplementableError,
    NotComposableError,
    NotRefinementError,
    NotTractableError,
    OracleCapError,
)
from .shapes import (
    STAR,
    Nested,
    Profile,
    colex,
    colex_inv,
    congruent,
    depth,
    flatten,
    length,
    prefix_products,
    profile,
    rank,
    refines,
    relative_modes,
    size,
    substitute,
    unflatten,
)
from .flat import (
    FlatLayout,
    coalesce_flat,
    column_major,
    complement_flat,
    concat_flat,
    flat_divide,
    flat_product,
    is_compact,
    is_complementable,
    is_n_complementable,
    is_tractable_flat,
)
from .layout import (
    Layout,
    coalesce,
    coalesce_relative,
    column_major_layout,
    complement,
    compose,
    concat_layouts,
    is_tractable,
    logical_divide,
    logical_product,
    substitute_profile,
)
from .tuplecat import (
    TupleMorphism,
    coalesce_m,
    complement_m,
    compose_morphisms,
    concat_morphisms,
    flat_divide_m,
    flat_product_m,
    identity,
    layout_of,
    morphism_into,
    realize,
    sort_m,
    squeeze_m,
    standard_representation,
    sum_morphisms,
)
from .nestcat import (
    MutualRefinement,
    NestMorphism,
    Refinement,
    coalesce_nm,
    complement_nm,
    compose_nest,
    compose_tractable,
    concat_nm,
    divides,
    is_admissible_for_composition,
    layout_of_nested,
    logical_divide_m,
    logical_product_m,
    make_composable,
    mutual_refinement,
    nest_morphism,
    pullback,
    pushforward,
    standard_representation_nested,
)
from .oracle import (
    FunctionTable,
    check_complement,
    check_compose,
    exhaustive_complement_search,
    functions_equal,
    table_of,
)
from .notation import (
    format_layout,
    format_morphism,
    format_nested,
    parse_layout,
    parse_morphism,
    parse_nested,
)

__version__ = "0.1.0"
