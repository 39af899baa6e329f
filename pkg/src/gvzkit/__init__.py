"""gvzkit: exact character theory for finite groups.

Computes exact irreducible character tables over cyclotomic integers,
the vanishing-off subgroups V(chi), V(G|N), their Galois duals U(G|N),
the ascending and descending central series built from them, and the
VZ / GVZ / nested / nested-GVZ classification, with an executable
property suite covering the supporting statements.
"""

from .chartable import (
    CharacterTable,
    Character,
    ClassFunction,
    character_table,
    choose_dixon_prime,
    class_constants,
    induce,
    inner_product,
    kernel_of,
    center_of,
    verify_table_invariants,
)
from .cyclotomic import CycInt, CycPoly, cyclotomic_polynomial, from_multiplicities, recognize
from .errors import (
    GroupSpecError,
    GvzkitError,
    InternalCheckError,
    NormalityError,
    SizeLimitError,
    StructuralInputError,
)
from .families import (
    build_builtin,
    build_from_permutations,
    load_cayley_file,
    load_permutation_file,
)
from .groups import (
    ConjClasses,
    Group,
    Projection,
    Subgroup,
    build_from_cayley,
    center,
    central_decomposition,
    commutator,
    conjugacy_classes,
    direct_product,
    exponent,
    normal_closure,
    power_map,
    quotient,
    structure_profile,
    subgroup_as_group,
    subgroup_generated,
)
from .series import (
    CentralChain,
    Classification,
    center_kernel_criterion,
    chain_of_centers,
    classify,
    epsilon_series,
    upsilon_series,
)
from .vanishing import (
    NormalLattice,
    irr_above,
    lattice_dot,
    normal_lattice,
    u_global,
    u_rel,
    v_global,
    v_of_char,
    v_rel,
)
from .verify import (
    PropertyReport,
    PropertyVerdict,
    check_camina,
    check_galois,
    check_theorems,
    check_u_lemmas,
    check_vprops,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
