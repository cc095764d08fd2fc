"""A first look at Łukasiewicz's three-valued logic."""

from mvlogic.core import decide, format_formula, parse_formula, truth_table
from mvlogic.core.values import format_value
from mvlogic.logics import builtin, lukasiewicz

L3 = lukasiewicz(3)
print(L3.name, "values:", [format_value(v) for v in L3.values])

# --- Excluded middle is no longer a tautology ---
lem = parse_formula("p | ~p", L3)
for row, v in truth_table(lem, L3):
    print(f"  p={format_value(row['p'])}  ->  {format_value(v)}")
print("valid in L3?", decide("valid", [], lem, L3).holds)
print("valid classically?", decide("valid", [], lem, builtin("classical")).holds)

# --- but its strong form survives ---
strong = parse_formula("p + ~p", L3)
print(format_formula(strong, L3), "valid?", decide("valid", [], strong, L3).holds)

# --- Modus ponens is still sound ---
v = decide("consequence", [parse_formula("p", L3), parse_formula("p -> q", L3)], parse_formula("q", L3), L3)
print("p, p -> q |- q:", v.holds)

# --- Same formula, other three-valued logics ---
for name in ("kleene-strong", "bochvar", "godel:3", "post:3"):
    m = builtin(name)
    f = parse_formula("p -> p", m) if m.has_connective("imp") else parse_formula("p | ~p", m)
    verdict = decide("valid", [], f, m)
    witness = {a: format_value(x) for a, x in (verdict.witness or {}).items()}
    print(f"{name:14} {format_formula(f, m):8} valid={verdict.holds} countermodel={witness or '-'}")
