from .expressions import (
    FALSE,
    TRUE,
    And,
    Const,
    Lit,
    Not,
    Or,
    SFExpression,
    eval_sfe,
    expr_formulas,
    format_expr,
    lit,
    simplify,
)
from .normal_forms import ClauseSet, SignSystemError, instantiate, normal_form
from .signs import (
    SignedFormula,
    default_sign_system,
    make_sign,
    sign_apply,
    sign_closure,
    signed,
    singleton_signs,
    sort_signs,
)
