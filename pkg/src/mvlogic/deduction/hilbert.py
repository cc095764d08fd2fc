"""Checker for Hilbert-style proofs in the Łukasiewicz axiom systems.

A proof is a list of numbered lines; each is an instance of an axiom scheme
or follows by modus ponens from two earlier lines. Lines and schemes are
compared after expanding the derived connectives into (->, ~).
"""

import re
from dataclasses import dataclass

from ..core.formula import App, match, substitute
from ..core.syntax import parse_formula
from ..errors import FormulaSyntaxError, MVLogicError
from ..logics.axioms import METAVARS, axiom_system, expand_derived
from ..logics.builtins import lukasiewicz
from .sequents import CheckResult


@dataclass(frozen=True)
class HilbertLine:
    """``justification`` is ``("axiom", name, substitution-or-None)`` or ``("mp", k, l)``."""

    number: int
    formula: object
    justification: tuple


@dataclass
class HilbertProof:
    lines: list

    @property
    def conclusion(self):
        return self.lines[-1].formula


def _is_imp(f):
    return isinstance(f, App) and f.conn == "imp"


def check_hilbert_proof(proof, system, n=None):
    """Accept iff every line is a scheme instance or a correct MP step.

    MP k, l needs line l to be (line k) -> (this line). On rejection the
    result names the first bad line.
    """
    try:
        schemes = axiom_system(system, n)
    except (MVLogicError, ValueError) as exc:
        return CheckResult(False, None, str(exc))
    if not proof.lines:
        return CheckResult(False, None, "empty proof")
    seen = {}
    for pos, line in enumerate(proof.lines, 1):
        num = line.number
        if num in seen:
            return CheckResult(False, num, f"line {num} appears twice")
        f = expand_derived(line.formula)
        kind = line.justification[0]
        if kind == "axiom":
            _, name, subst = line.justification
            if name not in schemes:
                return CheckResult(False, num, f"{name} is not an axiom of {system}")
            scheme = schemes[name]
            if subst:
                inst = expand_derived(substitute(scheme, subst))
                if inst != f:
                    return CheckResult(False, num, f"substitution does not turn {name} into this line")
            elif match(scheme, f, METAVARS) is None:
                return CheckResult(False, num, f"not an instance of {name}")
        elif kind == "mp":
            _, k, l = line.justification
            for ref in (k, l):
                if ref not in seen:
                    return CheckResult(False, num, f"MP cites line {ref}, which is not an earlier line")
            minor, major = seen[k], seen[l]
            if not _is_imp(major):
                return CheckResult(False, num, f"MP: line {l} is not an implication")
            if major.args[0] != minor:
                return CheckResult(False, num, f"MP: antecedent of line {l} is not line {k}")
            if major.args[1] != f:
                return CheckResult(False, num, f"MP: consequent of line {l} is not this line")
        else:
            return CheckResult(False, num, f"unknown justification {kind!r}")
        seen[num] = f
    return CheckResult(True)


_LINE = re.compile(r"^\s*(\d+)\s*[:.]\s*(.*?)\s+by\s+(.*?)\s*$")
_MP = re.compile(r"^MP\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?$", re.IGNORECASE)
_AX = re.compile(r"^(Ax[0-9A-Za-z_']+)\s*(?:\[(.*)\])?$")


def parse_hilbert_proof(text, matrix=None):
    """Read lines ``N: formula by Ax1`` / ``by Ax1 [alpha:=p, beta:=q]`` / ``by MP k, l``."""
    matrix = matrix or lukasiewicz(3)
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = _LINE.match(body)
        if not m:
            raise FormulaSyntaxError(f"line {lineno}: expected 'N: formula by justification'", 0)
        num, ftext, just = int(m.group(1)), m.group(2), m.group(3).strip()
        formula = parse_formula(ftext, matrix)
        mp = _MP.match(just)
        ax = _AX.match(just)
        if mp:
            lines.append(HilbertLine(num, formula, ("mp", int(mp.group(1)), int(mp.group(2)))))
        elif ax:
            subst = None
            if ax.group(2):
                subst = {}
                for part in _split_args(ax.group(2)):
                    if ":=" not in part:
                        raise FormulaSyntaxError(f"line {lineno}: substitution entries look like alpha:=p", 0)
                    var, val = part.split(":=", 1)
                    var = {"α": "alpha", "β": "beta", "γ": "gamma"}.get(var.strip(), var.strip())
                    if var not in METAVARS:
                        raise FormulaSyntaxError(f"line {lineno}: unknown metavariable {var!r}", 0)
                    subst[var] = parse_formula(val, matrix)
            lines.append(HilbertLine(num, formula, ("axiom", ax.group(1), subst)))
        else:
            raise FormulaSyntaxError(f"line {lineno}: cannot read justification {just!r}", 0)
    return HilbertProof(lines)


def _split_args(text):
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return out


def format_hilbert_proof(proof, matrix=None):
    from ..core.syntax import format_formula

    matrix = matrix or lukasiewicz(3)
    out = []
    for line in proof.lines:
        j = line.justification
        if j[0] == "mp":
            just = f"MP {j[1]}, {j[2]}"
        else:
            just = j[1]
            if j[2]:
                just += " [" + ", ".join(f"{k}:={format_formula(v, matrix)}" for k, v in sorted(j[2].items())) + "]"
        out.append(f"{line.number}: {format_formula(line.formula, matrix)} by {just}")
    return "\n".join(out)
