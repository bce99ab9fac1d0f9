"""Exact computer algebra for quasilinear quadratic forms in characteristic 2."""

from .errors import QlformError
from .forms import (
    DivisibilityIndex,
    NormForm,
    QuasiPfister,
    QuasilinearForm,
    anisotropic_part,
    check_normform_divisibility,
    d_set,
    divisibility_index,
    extend_scalars,
    form,
    is_divisible_by,
    isotropy_index,
    norm_form,
    orth_sum,
    quadratic_ext_decomposition,
    quasi_pfister,
    reduce_isotropy_subform,
    represents,
    scale_form,
    similar_subform_witness,
    similarity_field,
    subform_up_to_iso,
    tensor,
)
from .gf2poly import Polynomial2, RationalFunction, parse_rational, poly_gcd
from .splitting import (
    FunctionFieldPresentation,
    TowerReport,
    function_field,
    higher_invariants,
    isotropy_over_function_field,
    knebusch_tower,
    verify_all,
    verify_bounds,
    verify_ndeg_drop,
    verify_near_maximal,
    verify_p1_subform,
)
from .towers import (
    Caps,
    FieldElement,
    FieldTower,
    SquareCoordinates,
    SquareSubspace,
    intersect,
    make_base_field,
    member,
    scale,
    span,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
