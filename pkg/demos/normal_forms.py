"""Signed normal forms of connectives and clause translations of formulas."""

import itertools

from mvlogic.core import format_formula, parse_formula
from mvlogic.core.values import format_value
from mvlogic.logics import builtin, lukasiewicz
from mvlogic.resolution import clausify, format_clauses
from mvlogic.signed import default_sign_system, normal_form

L3 = lukasiewicz(3)

# --- imp takes value 0 only at p=1, q=0 ---
for value in (0, "1/2", 1):
    sign = {L3.value(str(value))}
    print(f"imp = {value}")
    for mode, glue in (("cnf", " & "), ("dnf", " | ")):
        lines = normal_form("imp", sign, mode, matrix=L3).format(L3).splitlines()
        print(f"  {mode}:", glue.join(f"({x})" for x in lines))

# --- The sign system used by default ---
print("\nsigns of P4 with D = {2, 3}:")
P = builtin("post:4:2")
for s in sorted(default_sign_system(P), key=lambda s: (len(s), sorted(s))):
    print("  {" + ",".join(format_value(v) for v in sorted(s)) + "}")

# --- Clause form of a whole formula, checked row by row ---
f = parse_formula("p -> (p -> ~p)", L3)
cs = clausify(f, L3)
print("\nclauses of", format_formula(f, L3))
print(format_clauses(cs, L3))
for a in L3.values:
    print(f"  p={format_value(a)}", all(c.holds({"p": a}) for c in cs))
