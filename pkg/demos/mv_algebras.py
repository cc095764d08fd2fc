"""Finite MV-algebras, Chang's algebra and one-variable McNaughton functions."""

from mvlogic.core import parse_formula
from mvlogic.logics import lukasiewicz
from mvlogic.mv import (
    ChangView,
    LexPair,
    chain,
    chang_order,
    check_axioms,
    classify,
    enumerate_ideals,
    gamma_z,
    is_isomorphic,
    mcnaughton_compile,
    pl_decide,
    product,
    quotient,
    two,
)

# --- Chains and products ---
for alg in (chain(4), product(two(), chain(3))):
    c = classify(alg)
    print(alg.name, check_axioms(alg, "M"), "| simple:", c.simple, "semisimple:", c.semisimple)

# --- Quotients of a product give back its factors ---
alg = product(two(), chain(3))
for J in enumerate_ideals(alg):
    if alg.one in J:
        continue
    q, _ = quotient(alg, J)
    names = [f"I{n}" for n in range(2, 7) if is_isomorphic(q, chain(n))]
    print("  quotient by", "{" + ", ".join(alg.format_element(a) for a in alg.elements if a in J) + "}", "->", names or q.name)

print("Gamma(Z, 2) is I3:", is_isomorphic(gamma_z(2), chain(3)))

# --- Chang's algebra: infinitesimals never add up to 1 ---
print(check_axioms(ChangView(10), "M"))
for x in (LexPair(0, 1), LexPair(1, -3), LexPair(1, 0)):
    cert = chang_order(x)
    print(f"order of {x}: {cert.order}  ({cert.reason})")

# --- McNaughton functions ---
L = lukasiewicz(3)
for text in ("p + p", "p * p", "p + ~p", "p | ~p"):
    f = parse_formula(text, L)
    print(f"{text:8} {mcnaughton_compile(f)}   valid on [0,1]: {pl_decide(f)}")
