"""Quantale-valued relations and law verification for locally posetal
linear bicategories: finite and extended-integer quantales, Girard and
two-multiplication structures, relation and enriched-category calculi,
and the checking harness that exercises their axioms."""

from .errors import (
    CyclicOrderError,
    DuplicateNameError,
    InputFormatError,
    MismatchError,
    MonoidError,
    NoParStructureError,
    NotALatticeError,
    NotGirardError,
    SearchSpaceError,
    StructureError,
    UnknownElementError,
)
from .lattice import FiniteLattice, build_lattice, chain, lattice_from_leq
from .quantale import (
    MINUS_INF,
    PLUS_INF,
    GirardQuantale,
    LDQuantale,
    Quantale,
    arctic_quantale,
    check_ld_laws,
    check_quantale_laws,
    find_dualizers,
    girard_quantale,
    girard_to_ld,
    is_cyclic_dualizing,
    opposite_quantale,
    quantale_from_json,
    shift_completion,
    table_quantale,
    tropical_quantale,
)
from .qrel import (
    FiniteSet,
    QRelation,
    check_girard_qrel,
    check_linear_adjoint,
    compose_par,
    compose_tensor,
    dual_family,
    finite_set,
    id_bot,
    id_top,
    rel_dual,
    rel_leq,
    relation,
    relation_from_json,
    relation_to_json,
    right_extension,
    right_lifting,
    verify_qrel_laws,
)
from .quantaloid import (
    FiniteQuantaloid,
    LinearMonad,
    LinearMonadBimodule,
    Monad,
    MonadBimodule,
    check_girard_family,
    check_linear_monad,
    check_linear_monad_bimodule,
    check_monad,
    check_monad_bimodule,
    check_quantaloid_laws,
    find_girard_families,
    finite_quantaloid,
    monq_compose,
    monq_girard_family,
    monq_identity,
    monq_quantaloid,
    one_object_quantaloid,
    quantaloid_from_json,
    quantaloid_to_quantale,
    verify_linear_quantaloid_theorems,
)
from .qmod import (
    QBimodule,
    QCategory,
    check_girard_qmod,
    check_qmod_linear_adjoint,
    discrete_qcategory,
    qbimodule,
    qcategory,
    qmod_compose_par,
    qmod_compose_tensor,
    qmod_delta,
    qmod_linear_adjoint,
    second_enrichment,
    validate_qbimodule,
    validate_qcategory,
    verify_linear_qmod_theorem,
)
from .report import LAW_GROUPS, LAW_REGISTRY, LawEntry, LawReport, Sampler
from .verify import (
    CatalogEntry,
    build_catalog,
    catalog,
    catalog_entry,
    default_sets,
    oracle_bool_rel_compose,
    oracle_maxplus,
    oracle_minplus,
    run_theorem,
)

__version__ = "0.1.0"
