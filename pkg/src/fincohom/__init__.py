"""Exact cohomology of finite groups, group extensions and related tools."""

from .catalog import catalog, find_isomorphism, identify, is_isomorphic
from .cochains import (
    Classification,
    Cochain,
    CohomologyClass,
    CohomologyGroup,
    change_of_groups,
    classify_cochain,
    coboundary,
    cochain,
    cocycles,
    cohomology,
    crossed_homomorphisms,
    describe,
    normalize,
    random_cochain,
    restriction,
    zero_cochain,
)
from .extensions import (
    Extension,
    build_extension,
    classify_extensions,
    cocycle_from_section,
    equivalent,
    make_extension,
)
from .groups import (
    FiniteAbelianGroup,
    FiniteGroup,
    GModule,
    GroupHom,
    SizeLimitError,
    ValidationError,
    abelian,
    abelian_hom,
    alternating,
    build_group,
    build_module,
    cyclic,
    dicyclic,
    dihedral,
    fixed_points,
    from_permutations,
    from_table,
    group_hom,
    product,
    symmetric,
    trivial_group,
    trivial_module,
    validate_group,
)
from .haar import (
    GroupFunction,
    SymmetricSet,
    approx_integral,
    constant,
    gap_profile,
    indicator,
    invariant_integral,
    iphi_properties,
    near_additivity_gap,
    overlap_function,
    product_set_check,
    relative_integral,
    symmetric_set,
)
from .induced import dimension_shift_check, induced_module
from .lie import (
    LieAlgebra,
    LieModule,
    abelian_lie,
    adjoint_module,
    build_lie_algebra,
    build_lie_module,
    ce_cohomology,
    heisenberg,
    sl2,
    trivial_lie_module,
)
from .sequences import ModuleSES, connecting, long_exact_sequence, make_ses, split_ses

__version__ = "0.1.0"
