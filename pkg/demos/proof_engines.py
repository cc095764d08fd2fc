"""Three proof engines on one query, each with a checkable certificate."""

from mvlogic.core import format_formula, parse_formula
from mvlogic.deduction import check_derivation, format_derivation, sequent_decide, to_sequent
from mvlogic.logics import lukasiewicz
from mvlogic.resolution import check_refutation, format_refutation, resolve_consequence
from mvlogic.tableau import format_proof, tableau_decide

L3 = lukasiewicz(3)
goal = parse_formula("p -> (q -> p)", L3)

# --- Signed tableau ---
verdict, proof = tableau_decide([], goal, L3)
print("tableau:", verdict.holds)
print(format_proof(proof))

# --- Many-sided sequent calculus ---
seq = to_sequent([], goal, L3)
sv = sequent_decide(seq, L3)
print("\nsequent:", sv.holds)
print(format_derivation(sv.derivation, L3))
print("checker:", bool(check_derivation(sv.derivation, L3, goal=seq)))

# --- Signed resolution on p, N(goal) ---
rv, sat = resolve_consequence([], goal, L3)
print("\nresolution:", rv.holds)
print(format_refutation(sat.refutation, L3))
print("checker:", check_refutation(sat.refutation)[0])

# --- A non-theorem gives a countermodel instead ---
bad = parse_formula("(p -> q) | ~q", L3)
for engine in ("tableau", "resolution"):
    verdict = tableau_decide([], bad, L3)[0] if engine == "tableau" else resolve_consequence([], bad, L3)[0]
    cm = {a: str(x) for a, x in verdict.witness.items()}
    print(f"{engine}: {format_formula(bad, L3)} holds={verdict.holds} countermodel={cm}")
