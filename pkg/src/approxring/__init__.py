"""Approximate rings and prime ideals over finite descriptive proximity spaces."""

from .constructions import CosetSpace, ProductContext, direct_product, quotient
from .errors import *  # noqa: F401,F403
from .fixtures import Fixture, builtin_f2, builtin_image16, load_fixture, save_fixture
from .ideals import (
    elementwise_prime_criterion,
    ideal_product,
    is_approx_ideal,
    is_approx_integral_domain,
    is_approx_prime_ideal,
    is_approx_prime_ring,
    is_mult_closed,
    is_principal_prime,
    principal_ideal,
)
from .optables import OpTable, from_rows, from_table, grid_add_mod2, grid_mul_min
from .proximity import (
    DescriptiveSpace,
    Element,
    Subset,
    check_dp_axioms,
    descriptive_intersection,
    descriptively_near,
    upper_approx,
)
from .reports import AxiomResult, CheckReport
from .structures import (
    RingContext,
    invertibility,
    is_approx_field,
    is_approx_group,
    is_approx_groupoid,
    is_approx_irreducible,
    is_approx_ring,
    is_approx_semigroup,
    is_approx_subring,
)

__version__ = "0.1.0"
