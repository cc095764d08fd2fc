"""Ideals of finite MV-algebras, primality, maximality, radicals and classification.

Every criterion below is computed two ways and a disagreement raises
:class:`VerificationError`.
"""

from dataclasses import dataclass

from ..errors import MVLogicError, VerificationError
from .algebra import chain, is_ideal, is_isomorphic, quotient
from .chang import INFINITE, element_order


def _check(alg, J):
    J = frozenset(J)
    if not J <= set(alg.elements):
        raise MVLogicError("not a subset of the carrier")
    if not is_ideal(alg, J):
        raise MVLogicError("not an ideal")
    return J


def generate(alg, X=()):
    """The least ideal containing ``X`` (an empty X gives {0})."""
    J = {alg.zero} | set(X)
    if not J <= set(alg.elements):
        raise MVLogicError("generators must be elements")
    while True:
        sums = {alg.oplus(x, y) for x in J for y in J}
        below = {a for a in alg.elements for b in J | sums if alg.leq(a, b)}
        new = (sums | below) - J
        if not new:
            return frozenset(J)
        J |= new


def enumerate_ideals(alg):
    """All ideals, smallest first then in carrier order of their members."""
    found = {generate(alg)}
    frontier = list(found)
    while frontier:
        J = frontier.pop()
        for a in alg.elements:
            if a not in J:
                K = generate(alg, J | {a})
                if K not in found:
                    found.add(K)
                    frontier.append(K)
    index = {a: i for i, a in enumerate(alg.elements)}
    return sorted(found, key=lambda J: (len(J), sorted(index[a] for a in J)))


def _prime_c(alg, J):
    return all(a in J or b in J for a in alg.elements for b in alg.elements if alg.wedge(a, b) in J)


def _prime_d(alg, J):
    q, _ = quotient(alg, J)
    return q.is_chain()


def is_prime(alg, J):
    """J proper and a ∧ b ∈ J implies a ∈ J or b ∈ J; cross-checked with N/J a chain."""
    J = _check(alg, J)
    if alg.one in J:
        return False
    c, d = _prime_c(alg, J), _prime_d(alg, J)
    if c != d:
        raise VerificationError(f"primality criteria disagree on {sorted(map(repr, J))}")
    return c


def _maximal_g(alg, J):
    n = len(alg)
    return all(any(alg.power(alg.neg(a), k) in J for k in range(1, n + 1)) for a in alg.elements if a not in J)


def _maximal_h(alg, J):
    q, _ = quotient(alg, J)
    return is_isomorphic(q, chain(len(q))) if len(q) >= 2 else False


def _maximal_f(alg, J, ideals):
    return not any(J < K and alg.one not in K for K in ideals)


def is_maximal(alg, J, ideals=None):
    """J proper and every a ∉ J has some (¬a)^k ∈ J.

    Cross-checked with N/J ≅ I_m and with maximality among proper ideals.
    """
    J = _check(alg, J)
    if alg.one in J:
        return False
    ideals = enumerate_ideals(alg) if ideals is None else ideals
    g, h, f = _maximal_g(alg, J), _maximal_h(alg, J), _maximal_f(alg, J, ideals)
    if not g == h == f:
        raise VerificationError(f"maximality criteria disagree on {sorted(map(repr, J))}")
    return g


def maximal_ideals(alg, ideals=None):
    ideals = enumerate_ideals(alg) if ideals is None else ideals
    return [J for J in ideals if is_maximal(alg, J, ideals)]


def prime_ideals(alg, ideals=None):
    ideals = enumerate_ideals(alg) if ideals is None else ideals
    return [J for J in ideals if is_prime(alg, J)]


def radical(alg, J, ideals=None):
    """Intersection of the maximal ideals containing J.

    Cross-checked with {a : a ⊗ (ka) ∈ J for k = 1..|N|}; ka stops growing
    within |N| steps, so the bound loses nothing.
    """
    J = _check(alg, J)
    ideals = enumerate_ideals(alg) if ideals is None else ideals
    above = [M for M in maximal_ideals(alg, ideals) if J <= M]
    by_max = frozenset(alg.elements)
    for M in above:
        by_max &= M
    n = len(alg)
    by_formula = frozenset(a for a in alg.elements if all(alg.otimes(a, alg.multiple(k, a)) in J for k in range(1, n + 1)))
    if by_max != by_formula:
        raise VerificationError(f"radical computations disagree on {sorted(map(repr, J))}")
    return by_max


def ideal_ops(alg, action, arg=None):
    """Dispatch ``generate``, ``is_prime``, ``is_maximal``, ``radical`` or ``enumerate_all``."""
    if action == "generate":
        return generate(alg, arg or ())
    if action == "is_prime":
        return is_prime(alg, arg)
    if action == "is_maximal":
        return is_maximal(alg, arg)
    if action == "radical":
        return radical(alg, arg)
    if action == "enumerate_all":
        return enumerate_ideals(alg)
    raise ValueError(f"unknown action {action!r}")


def center(alg):
    """The complemented elements, found as the a with a ⊕ a = a and checked against ¬a ∨ a = 1."""
    by_idem = frozenset(a for a in alg.elements if alg.oplus(a, a) == a)
    by_compl = frozenset(a for a in alg.elements if alg.vee(alg.neg(a), a) == alg.one)
    if by_idem != by_compl:
        raise VerificationError("the two descriptions of the center disagree")
    return by_idem


@dataclass(frozen=True)
class Classification:
    simple: bool
    semisimple: bool
    hyperarchimedean: bool
    center: frozenset


def _subdirect_of_chains(alg, ideals):
    """N embeds in the product of its quotients by maximal ideals, each ≅ some I_m."""
    maxes = maximal_ideals(alg, ideals)
    projections = []
    for M in maxes:
        q, proj = quotient(alg, M)
        if not is_isomorphic(q, chain(len(q))):
            return False
        projections.append(proj)
    images = {tuple(p[a] for p in projections) for a in alg.elements}
    return len(images) == len(alg)


def classify(alg):
    """Simple, semisimple and hyperarchimedean, each by two or three criteria."""
    ideals = enumerate_ideals(alg)
    proper = [J for J in ideals if alg.one not in J]
    zero = frozenset([alg.zero])

    simple = proper == [zero]
    finite_orders = all(element_order(alg, a) != INFINITE for a in alg.elements if a != alg.zero)
    into_unit = is_isomorphic(alg, chain(len(alg)))
    if not simple == finite_orders == into_unit:
        raise VerificationError("simplicity criteria disagree")

    semisimple = radical(alg, zero, ideals) == zero
    if semisimple != _subdirect_of_chains(alg, ideals):
        raise VerificationError("semisimplicity criteria disagree")

    hyper = all(radical(alg, J, ideals) == J for J in ideals)
    primes = {J for J in ideals if is_prime(alg, J)}
    maxes = {J for J in ideals if is_maximal(alg, J, ideals)}
    C = center(alg)
    boolean_multiples = all(any(alg.multiple(k, a) in C for k in range(1, len(alg) + 1)) for a in alg.elements)
    if not hyper == (primes == maxes) == boolean_multiples:
        raise VerificationError("hyperarchimedean criteria disagree")

    if simple and not hyper or hyper and not semisimple:
        raise VerificationError("simple ⇒ hyperarchimedean ⇒ semisimple fails")
    return Classification(simple, semisimple, hyper, C)
