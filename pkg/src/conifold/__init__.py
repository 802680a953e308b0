"""Exact generating functions for rank-one Nekrasov and refined conifold
invariants, with identity checks between them."""

from conifold.characters import (
    PlaneMonomial,
    RefinedInvariant,
    SL2Decomp,
    ext_char_6d,
    ext_char_oracle,
    sl2_decompose,
    specialize_s1,
    sym_char_4d,
    sym_char_oracle,
)
from conifold.laurent import Laurent, render_t
from conifold.partition import (
    PT,
    Chamber,
    InvariantTable,
    Report,
    chamber_Z,
    invariant_table,
    nekrasov_r1,
    refined_conifold_Z,
    topstring_Z,
    verify_exterior_identity,
    verify_inverse_identity,
    verify_sl2,
    verify_topstring,
)
from conifold.series import (
    Monomial4D,
    Monomial6D,
    Series4D,
    Series6D,
    geom_factor_power,
    series_from_json,
    substitute_4d_to_6d,
)
from conifold.weightpoly import WeightPoly, parse_weight_expr

__version__ = "0.1.0"
