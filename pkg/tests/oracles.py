"""Independent brute-force oracles used by the test-suite.

None of these reuse the package's solvers: the level oracle evaluates term
levels directly under every variable assignment, the closure oracle uses
boolean matrix powers instead of union-find, and the rank oracle recurses on
frozensets.
"""

from __future__ import annotations

import random
from itertools import product

import numpy as np

from stratcat.formula import (
    Abst,
    And,
    App,
    Enum,
    Eq,
    Exists,
    Forall,
    Iff,
    Implies,
    Mem,
    Not,
    Or,
    Pair,
    PairingConvention,
    Pow,
    Union_,
    Var,
)
from stratcat.hfset import HFSet

# ---------------------------------------------------------------------------
# Level search


def _binders(node, out):
    """Assign one slot per binder and per free variable (by walk order)."""
    if isinstance(node, Var):
        return
    if isinstance(node, (Abst, Forall, Exists)):
        out.append(("bound", id(node)))
        _binders(node.body, out)
        return
    if isinstance(node, Enum):
        for e in node.elems:
            _binders(e, out)
    elif isinstance(node, (Union_, Pow)):
        _binders(node.inner, out)
    elif isinstance(node, Not):
        _binders(node.body, out)
    elif isinstance(node, App):
        _binders(node.fun, out)
        _binders(node.arg, out)
    else:
        _binders(node.left, out)
        _binders(node.right, out)


def _free(node, bound, out):
    if isinstance(node, Var):
        if node.name not in bound and node.name not in out:
            out.append(node.name)
        return
    if isinstance(node, (Abst, Forall, Exists)):
        _free(node.body, bound | {node.var}, out)
        return
    kids = []
    if isinstance(node, Enum):
        kids = list(node.elems)
    elif isinstance(node, (Union_, Pow)):
        kids = [node.inner]
    elif isinstance(node, Not):
        kids = [node.body]
    elif isinstance(node, App):
        kids = [node.fun, node.arg]
    else:
        kids = [node.left, node.right]
    for k in kids:
        _free(k, bound, out)


class _LevelEval:
    """Vectorised evaluation over a grid of assignments.

    A term evaluates to ``(levels, free)``: ``free`` marks terms such as ``∅``
    that may take any level; ``self.ok`` accumulates the atoms' constraints.
    """

    def __init__(self, f, conv: PairingConvention, lo: int, hi: int):
        self.conv = conv
        free: list[str] = []
        _free(f, frozenset(), free)
        binders: list = []
        _binders(f, binders)
        slots = [("free", n) for n in free] + binders
        self.slot_index = {s: k for k, s in enumerate(slots)}
        n = len(slots)
        grids = np.meshgrid(*([np.arange(lo, hi + 1)] * n), indexing="ij") if n else []
        self.values = [g.ravel() for g in grids]
        size = (hi - lo + 1) ** n
        self.ok = np.ones(size, dtype=bool)

    def _eq(self, a, b, delta=0):
        (la, fa), (lb, fb) = a, b
        if not fa and not fb:
            self.ok &= (lb - la) == delta

    def term(self, t, env):
        if isinstance(t, Var):
            slot = env.get(t.name, ("free", t.name))
            return self.values[self.slot_index[slot]], False
        if isinstance(t, Abst):
            slot = ("bound", id(t))
            self.formula(t.body, {**env, t.var: slot})
            return self.values[self.slot_index[slot]] + 1, False
        if isinstance(t, Enum):
            vals = [self.term(e, env) for e in t.elems]
            fixed = [v for v in vals if not v[1]]
            for v in fixed[1:]:
                self._eq(fixed[0], v)
            if not fixed:
                return None, True
            return fixed[0][0] + 1, False
        if isinstance(t, (Union_, Pow)):
            lv, fr = self.term(t.inner, env)
            if fr:
                return None, True
            return lv + (-1 if isinstance(t, Union_) else 1), False
        if isinstance(t, Pair):
            a = self.term(t.left, env)
            b = self.term(t.right, env)
            self._eq(a, b)
            base = a if not a[1] else b
            if base[1]:
                return None, True
            return base[0] + (0 if self.conv is PairingConvention.QUINE else 2), False
        if isinstance(t, App):
            fn = self.term(t.fun, env)
            arg = self.term(t.arg, env)
            lift = 1 if self.conv is PairingConvention.QUINE else 3
            self._eq(arg, fn, lift)
            if arg[1] and not fn[1]:
                return fn[0] - lift, False
            return arg
        raise TypeError(t)

    def formula(self, f, env):
        if isinstance(f, (Eq, Mem)):
            a = self.term(f.left, env)
            b = self.term(f.right, env)
            self._eq(a, b, 0 if isinstance(f, Eq) else 1)
        elif isinstance(f, (Forall, Exists)):
            self.formula(f.body, {**env, f.var: ("bound", id(f))})
        elif isinstance(f, Not):
            self.formula(f.body, env)
        else:
            self.formula(f.left, env)
            self.formula(f.right, env)


def brute_force_stratifiable(f, conv: PairingConvention = PairingConvention.QUINE, lo: int = 0, hi: int = 8) -> bool:
    """Is there an assignment of levels in ``lo..hi`` to every variable slot satisfying all atoms?"""
    ev = _LevelEval(f, conv, lo, hi)
    ev.formula(f, {})
    return bool(ev.ok.any())


# ---------------------------------------------------------------------------
# Random formulas


VARS = ["x", "y", "z", "w"]


def random_term(rng: random.Random, depth: int, names):
    if depth <= 0 or rng.random() < 0.5:
        return Var(rng.choice(names))
    k = rng.randrange(7)
    if k == 0:
        return Enum(tuple(random_term(rng, depth - 1, names) for _ in range(rng.randrange(0, 3))))
    if k == 1:
        return Pair(random_term(rng, depth - 1, names), random_term(rng, depth - 1, names))
    if k == 2:
        return Union_(random_term(rng, depth - 1, names))
    if k == 3:
        return Pow(random_term(rng, depth - 1, names))
    if k == 4:
        return App(random_term(rng, depth - 1, names), random_term(rng, depth - 1, names))
    if k == 5:
        v = rng.choice(VARS)
        return Abst(v, random_formula(rng, depth - 1, names + [v]))
    return Enum((random_term(rng, depth - 1, names),))


def random_formula(rng: random.Random, depth: int, names=None):
    names = list(names or VARS)
    if depth <= 0 or rng.random() < 0.35:
        cls = rng.choice([Eq, Mem, Mem])
        return cls(random_term(rng, depth - 1, names), random_term(rng, depth - 1, names))
    k = rng.randrange(7)
    if k == 0:
        return Not(random_formula(rng, depth - 1, names))
    if k in (1, 2, 3, 4):
        cls = [And, Or, Implies, Iff][k - 1]
        return cls(random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names))
    v = rng.choice(VARS)
    cls = Forall if k == 5 else Exists
    return cls(v, random_formula(rng, depth - 1, names))


# ---------------------------------------------------------------------------
# Sets and partitions


def closure_classes(b, pairs) -> set[frozenset]:
    """Equivalence classes of the relation generated by ``pairs`` via boolean matrix closure."""
    elems = list(b)
    idx = {x: k for k, x in enumerate(elems)}
    n = len(elems)
    m = np.eye(n, dtype=bool)
    for x, y in pairs:
        m[idx[x], idx[y]] = m[idx[y], idx[x]] = True
    while True:
        nxt = (m.astype(int) @ m.astype(int)) > 0
        if (nxt == m).all():
            break
        m = nxt
    return {frozenset(elems[j] for j in range(n) if m[i, j]) for i in range(n)}


def set_partitions(items: list):
    """Every partition of ``items`` as a list of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]
        yield [[first]] + part


def rank_of(x: HFSet) -> int:
    """Rank by direct recursion on the frozenset view."""
    return max((rank_of(e) + 1 for e in x.as_frozenset()), default=0)


def all_maps(dom: list, cod: list):
    for vals in product(cod, repeat=len(dom)):
        yield dict(zip(dom, vals))


# ---------------------------------------------------------------------------
# Small-map axioms over plain integer carriers


def _max_fibre(mapping: tuple, n_cod: int) -> int:
    counts = [0] * max(n_cod, 1)
    for y in mapping:
        counts[y] += 1
    return max(counts, default=0)


def _maps(n_dom: int, n_cod: int):
    return product(range(n_cod), repeat=n_dom)


def brute_force_axiom(axiom: str, bound: int | None, max_n: int = 3) -> bool:
    """Does the axiom hold for every instance over carriers ``range(n)``, ``n <= max_n``?

    Maps are tuples of images; ``bound`` is the fibre bound (``None`` means every
    map is small).  The composition axiom also tries a domain of ``max_n + 1``.
    """

    def small(m, n_cod):
        return bound is None or _max_fibre(m, n_cod) <= bound

    sizes = range(max_n + 1)
    if axiom == "i":
        for na in range(max_n + 2):
            if not small(tuple(range(na)), na):
                return False
            for nb, nc in product(sizes, sizes):
                for f in _maps(na, nb):
                    if not small(f, nb):
                        continue
                    for g in _maps(nb, nc):
                        if small(g, nc) and not small(tuple(g[x] for x in f), nc):
                            return False
        return True
    if axiom == "ii":
        for na, nb, nc in product(sizes, repeat=3):
            for f in _maps(na, nb):
                if not small(f, nb):
                    continue
                for g in _maps(nc, nb):
                    # the pulled-back map sends <c, a> with g(c) = f(a) to c
                    pulled = tuple(c for c in range(nc) for a in range(na) if g[c] == f[a])
                    if not small(pulled, nc):
                        return False
        return True
    if axiom == "iii":
        return all(small(tuple(x * n + x for x in range(n)), n * n) for n in sizes)
    if axiom == "iv":
        for na, nb, nc in product(sizes, repeat=3):
            for e in _maps(na, nb):
                if set(e) != set(range(nb)):
                    continue
                for f in _maps(nb, nc):
                    if small(tuple(f[x] for x in e), nc) and not small(f, nc):
                        return False
        return True
    if axiom == "v":
        for na, nb, nc, nd in product(sizes, repeat=4):
            for f in _maps(na, nb):
                if not small(f, nb):
                    continue
                for g in _maps(nc, nd):
                    if small(g, nd) and not small(f + tuple(nb + y for y in g), nb + nd):
                        return False
        return True
    raise KeyError(axiom)
