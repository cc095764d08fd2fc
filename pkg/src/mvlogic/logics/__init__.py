from .builtins import (
    B_BOTH,
    B_NONE,
    BELNAP_VALUES,
    FAMILIES,
    PRIMITIVES,
    BuiltinSpec,
    belnap,
    bochvar,
    builtin,
    classical,
    family_of,
    godel,
    kleene_strong,
    kleene_weak,
    lukasiewicz,
    lukasiewicz_marker,
    post,
)
from .axioms import (
    IPC_AXIOMS,
    LUKASIEWICZ_AXIOMS,
    METAVARS,
    SYSTEMS,
    ax5n,
    ax6_indices,
    ax6j,
    axiom_system,
    derived_lukasiewicz,
    expand_derived,
    multiple,
)
from .marker import find_marker, is_marker, negation_marker, unary_clone
from .post_algebra import (
    MonotonicRepresentation,
    constant_zero_term,
    post_marker,
    post_monotonic,
    post_synthesize,
)
