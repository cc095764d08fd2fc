"""Signed tableaux with sets as signs.

A node is read conjunctively. Expanding ``(c A1 ... Au)^S`` replaces it,
on each branch, by one conjunct of an S-th DNF of c with the Ai put in for
the placeholders. Branches close on an empty sign intersection for some
formula, or on a compound formula whose sign the connective never reaches.
"""

import itertools
from dataclasses import dataclass, field

from ..core.formula import Atom, sorted_atoms
from ..core.semantics import Verdict, evaluate
from ..core.values import format_sign, format_value
from ..errors import MVLogicError, ResourceLimitExceeded, VerificationError
from ..signed.normal_forms import instantiate, normal_form
from ..signed.signs import SignedFormula, default_sign_system, singleton_signs

DEFAULT_NODE_CAP = 200_000


@dataclass(eq=False)
class TableauNode:
    formulas: tuple
    used: frozenset = frozenset()
    parent: "TableauNode" = field(default=None, repr=False)
    added: tuple = ()
    expanded: SignedFormula = None
    rule: object = None
    children: list = field(default_factory=list)
    status: str = None
    reason: str = None
    countermodel: dict = None

    def leaves(self):
        stack = [self]
        while stack:
            node = stack.pop()
            if node.children:
                stack.extend(reversed(node.children))
            else:
                yield node

    @property
    def closed(self):
        return all(leaf.status == "closed" for leaf in self.leaves())


@dataclass
class TableauProof:
    roots: list
    matrix: object
    signsystem: frozenset
    mode: str

    @property
    def closed(self):
        return all(r.closed for r in self.roots)

    def open_leaves(self):
        for r in self.roots:
            for leaf in r.leaves():
                if leaf.status == "open":
                    yield leaf

    def node_count(self):
        count = 0
        stack = list(self.roots)
        while stack:
            n = stack.pop()
            count += 1
            stack.extend(n.children)
        return count

    def format(self):
        return format_proof(self)


def build_roots(premises, goal, matrix, mode="sets"):
    """Root nodes refuting ``premises |= goal``.

    ``mode="sets"`` gives the single root {B^D, ..., A^(M\\D)}; ``"singletons"``
    gives one root per choice of a designated value for each premise and an
    undesignated value for the goal.
    """
    premises = list(premises)
    undesignated = [v for v in matrix.values if v not in matrix.designated]
    designated = [v for v in matrix.values if v in matrix.designated]
    if not undesignated or (premises and not designated):
        return []
    if mode == "sets":
        sfs = [SignedFormula(b, frozenset(designated)) for b in premises]
        sfs.append(SignedFormula(goal, frozenset(undesignated)))
        return [TableauNode(_dedupe(sfs))]
    if mode != "singletons":
        raise ValueError("mode is 'sets' or 'singletons'")
    roots = []
    for choice in itertools.product(*([designated] * len(premises) + [undesignated])):
        sfs = [SignedFormula(f, frozenset([v])) for f, v in zip(premises + [goal], choice)]
        roots.append(TableauNode(_dedupe(sfs)))
    return roots


def _dedupe(sfs):
    return tuple(dict.fromkeys(sfs))


class _Rules:
    """Per-tableau cache of elimination rules (DNFs)."""

    def __init__(self, matrix, signsystem):
        self.matrix = matrix
        self.signsystem = signsystem

    def dnf(self, sf):
        f = sf.formula
        return normal_form(f.conn, sf.sign, "dnf", self.signsystem, self.matrix)

    def branches(self, sf):
        return instantiate(self.dnf(sf), sf.formula.args).clauses


def _signs_by_formula(formulas):
    out = {}
    for sf in formulas:
        out[sf.formula] = out.get(sf.formula, sf.sign) & sf.sign
    return out


def _close_reason(node, rules, matrix):
    for f, s in _signs_by_formula(node.formulas).items():
        if not s:
            signs = [sf.sign for sf in node.formulas if sf.formula == f]
            shown = " and ".join(format_sign(x, matrix) for x in signs)
            return f"{_fmt(f, matrix)} has signs {shown} with empty intersection"
    for sf in node.formulas:
        if sf in node.used or isinstance(sf.formula, Atom):
            continue
        if not rules.dnf(sf).clauses:
            return f"{sf.format(matrix)}: {sf.formula.conn} never takes a value in {format_sign(sf.sign, matrix)}"
    return None


def _fmt(f, matrix):
    from ..core.syntax import format_formula

    return format_formula(f, matrix)


def expand(proof, node_cap=DEFAULT_NODE_CAP):
    """Expand every root of ``proof`` to terminal leaves (in place) and return it."""
    rules = _Rules(proof.matrix, proof.signsystem)
    matrix = proof.matrix
    count = 0
    stack = list(reversed(proof.roots))
    while stack:
        node = stack.pop()
        count += 1
        if count > node_cap:
            raise ResourceLimitExceeded(f"tableau exceeds {node_cap} nodes")
        reason = _close_reason(node, rules, matrix)
        if reason is not None:
            node.status, node.reason = "closed", reason
            continue
        pending = [sf for sf in node.formulas if sf not in node.used and not isinstance(sf.formula, Atom)]
        if not pending:
            node.status = "open"
            node.countermodel = _read_model(node, matrix)
            continue
        # fewest branches first; ties keep the leftmost
        pick = min(pending, key=lambda sf: len(rules.dnf(sf).clauses))
        node.expanded = pick
        node.rule = (pick.formula.conn, pick.sign)
        used = node.used | {pick}
        for conj in rules.branches(pick):
            new = [sf for sf in conj if sf not in node.formulas]
            child = TableauNode(_dedupe(node.formulas + tuple(new)), used, node, tuple(new))
            node.children.append(child)
        stack.extend(reversed(node.children))
    return proof


def _read_model(node, matrix):
    signs = _signs_by_formula(node.formulas)
    return {f.name: matrix.least(s) for f, s in signs.items() if isinstance(f, Atom)}


def tableau_decide(premises, goal, matrix, signsystem=None, mode="sets", node_cap=DEFAULT_NODE_CAP):
    """Decide ``premises |= goal`` by refutation.

    Returns ``(verdict, proof)``. On failure ``verdict.witness`` is a
    countermodel read off an open leaf and re-checked by evaluation.
    """
    premises = list(premises)
    if signsystem is None:
        signsystem = singleton_signs(matrix) if mode == "singletons" else default_sign_system(matrix)
    signsystem = frozenset(map(frozenset, signsystem))
    proof = TableauProof(build_roots(premises, goal, matrix, mode), matrix, signsystem, mode)
    expand(proof, node_cap)
    for leaf in proof.open_leaves():
        model = dict(leaf.countermodel)
        default = matrix.least()
        for a in sorted_atoms(premises + [goal]):
            model.setdefault(a, default)
        if any(evaluate(b, model, matrix) not in matrix.designated for b in premises) or (
            evaluate(goal, model, matrix) in matrix.designated
        ):
            raise VerificationError("open branch does not yield a countermodel")
        return Verdict(False, model), proof
    return Verdict(True), proof


def format_proof(proof):
    """Indented text: expansions as ``sign formula [rule: c@S] -> k children``,
    closures as ``✕ reason`` and open leaves as ``○ open: p=...``."""
    matrix = proof.matrix
    lines = []

    def show(node, depth):
        pad = "  " * depth
        if node.parent is None:
            lines.append(pad + "root: " + ", ".join(sf.format(matrix) for sf in node.formulas))
        else:
            added = ", ".join(sf.format(matrix) for sf in node.added) or "(nothing new)"
            lines.append(pad + "+ " + added)
        inner = pad + "  "
        if node.children:
            sf = node.expanded
            conn, sign = node.rule
            lines.append(
                f"{inner}{format_sign(sf.sign, matrix)} {_fmt(sf.formula, matrix)} "
                f"[rule: {conn}@{format_sign(sign, matrix)}] → {len(node.children)} children"
            )
            for child in node.children:
                show(child, depth + 2)
        elif node.status == "closed":
            lines.append(f"{inner}✕ {node.reason}")
        else:
            model = ", ".join(f"{a}={format_value(v)}" for a, v in sorted(node.countermodel.items()))
            lines.append(f"{inner}○ open: {model or '(no atoms)'}")

    for root in proof.roots:
        show(root, 0)
    if not proof.roots:
        lines.append("no roots: the goal cannot be refuted with premises designated")
    return "\n".join(lines)


def check_step(parent, matrix, valuation):
    """Whether ``valuation`` satisfies ``parent`` iff it satisfies some child."""
    if not parent.children:
        raise MVLogicError("node has no children")
    lhs = all(sf.holds(valuation, matrix) for sf in parent.formulas)
    rhs = any(
        all(sf.holds(valuation, matrix) for sf in child.formulas if sf != parent.expanded)
        for child in parent.children
    )
    return lhs == rhs
