from .firstorder import (
    Conn,
    Elem,
    FOStructure,
    Func,
    Pred,
    Quant,
    Var,
    evaluate_sentence,
    nonempty_subsets,
    quantifier_from_order,
)
from .formula import (
    App,
    Atom,
    Formula,
    app,
    atom,
    atoms_of,
    enumerate_formulas,
    match,
    placeholder_atoms,
    sorted_atoms,
    subformulas,
    substitute,
)
from .matrix import Alias, Connective, Matrix, chain_order
from .semantics import (
    DEFAULT_ATOM_CAP,
    Verdict,
    compile_formula,
    decide,
    evaluate,
    is_valid,
    truth_table,
    unary_function,
    valuations,
)
from .syntax import format_formula, parse_formula
from .values import as_value, format_sign, format_value, parse_value, unit_interval_grid
