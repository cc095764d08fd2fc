from .prover import (
    DEFAULT_NODE_CAP,
    TableauNode,
    TableauProof,
    build_roots,
    check_step,
    expand,
    format_proof,
    tableau_decide,
)
