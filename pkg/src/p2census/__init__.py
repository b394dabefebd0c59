"""Census of degree-p^2 extensions of p-adic fields with no intermediate field."""

from .census import (
    CensusReport,
    CharPair,
    GroupDescriptor,
    LocalFieldParams,
    census_from_invariants,
    census_k2,
    classify_pair,
    enumerate_dim2_orbits,
)
from .finite_field import FieldCtx, FqElem, dlog, element_order, frobenius, make_field
from .numtheory import lambda_split, mult_order, psi
from .rep_theory import (
    MetacyclicGroup,
    enumerate_irreducibles,
    module_inventory,
    multiplicity_in_Y,
    rep_dimension,
    submodule_count,
)

__version__ = "0.1.0"
