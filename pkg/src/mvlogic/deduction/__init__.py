from .hilbert import (
    HilbertLine,
    HilbertProof,
    check_hilbert_proof,
    format_hilbert_proof,
    parse_hilbert_proof,
)
from .sequents import (
    CheckResult,
    DerivationStep,
    Sequent,
    SequentDerivation,
    SequentVerdict,
    axiom_formula,
    check_derivation,
    format_derivation,
    format_sequent,
    parse_derivation,
    parse_sequent,
    sequent_decide,
    sf,
    to_sequent,
)
