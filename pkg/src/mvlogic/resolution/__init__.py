from .clauses import SignedClause, clause, clausify, format_clauses
from .nonclausal import (
    BOUND_EXCEEDED,
    SAT_NOT_SHOWN,
    UNSAT,
    NonclausalResult,
    VerifierSystem,
    classical_verifier_system,
    nonclausal_decide,
    value_verifier_system,
)
from .saturation import (
    Refutation,
    RefutationStep,
    SaturationResult,
    check_refutation,
    clause_set,
    find_model,
    format_refutation,
    is_satisfiable,
    parse_refutation,
    resolve_consequence,
    resolvents,
    saturate,
)
