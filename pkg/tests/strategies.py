from hypothesis import strategies as st

from mvlogic.core import App, Atom


def formulas(matrix, atoms=("p", "q"), max_leaves=8, conns=None):
    """Random formulas over ``conns`` (every connective of the matrix by default)."""
    chosen = [c for c in matrix.connectives if conns is None or c.name in conns]
    leaves = [Atom(a) for a in atoms] + [App(c.name, ()) for c in chosen if c.arity == 0]
    ops = [c for c in chosen if c.arity]

    def extend(children):
        return st.one_of(
            [st.tuples(*([children] * c.arity)).map(lambda args, n=c.name: App(n, args)) for c in ops]
        )

    return st.recursive(st.sampled_from(leaves), extend, max_leaves=max_leaves)


def valuations(matrix, atoms=("p", "q")):
    return st.fixed_dictionaries({a: st.sampled_from(matrix.values) for a in atoms})
