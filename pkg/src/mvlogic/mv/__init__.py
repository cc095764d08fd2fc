from .algebra import (
    IDENTITIES,
    AxiomReport,
    FiniteMV,
    chain,
    check_axioms,
    check_lattice,
    check_order_facts,
    from_tables,
    gamma_z,
    is_ideal,
    is_isomorphic,
    isomorphism,
    product,
    quotient,
    two,
)
from .chang import INFINITE, ChangView, LexPair, OrderCertificate, chang_op, chang_order, element_order
from .ideals import (
    Classification,
    center,
    classify,
    enumerate_ideals,
    generate,
    ideal_ops,
    is_maximal,
    is_prime,
    maximal_ideals,
    prime_ideals,
    radical,
)
from .mcnaughton import (
    IDENTITY,
    PLFunction,
    constant,
    grid_falsify,
    mcnaughton_compile,
    normalize,
    pl_decide,
    unit_eval,
)
