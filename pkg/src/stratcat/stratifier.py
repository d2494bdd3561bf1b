"""Stratification checking by difference constraints.

Every variable gets one level node (bound variables one node per binder) and
every compound term occurrence gets its own node.  Atoms and term formers
contribute equations ``level(target) - level(source) = offset``; the system is
solved by breadth-first propagation of potentials, and an inconsistent system
yields a shortest cycle of constraints whose offsets do not cancel.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .formula import (
    Abst,
    App,
    Enum,
    Eq,
    Formula,
    Iff,
    Mem,
    Pair,
    PairingConvention,
    Pow,
    Span,
    Term,
    Union_,
    Var,
    all_vars,
    binder_var,
    children,
    free_vars,
    render,
    render_term,
)


QUINE = PairingConvention.QUINE
WK = PairingConvention.WK


@dataclass(frozen=True)
class LevelNode:
    id: int
    origin: str
    is_var: bool = False
    span: Span | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Constraint:
    """``level(target) - level(source) == offset``."""

    source: int
    target: int
    offset: int
    atom: str = ""
    span: Span | None = field(default=None, compare=False)

    def reversed(self) -> "Constraint":
        return Constraint(self.target, self.source, -self.offset, self.atom, self.span)


@dataclass
class ConstraintGraph:
    nodes: list[LevelNode] = field(default_factory=list)
    edges: list[Constraint] = field(default_factory=list)

    def add_node(self, origin: str, is_var: bool = False, span: Span | None = None) -> int:
        node = LevelNode(len(self.nodes), origin, is_var, span)
        self.nodes.append(node)
        return node.id

    def add_edge(self, source: int, target: int, offset: int, atom: str, span: Span | None) -> None:
        if not (0 <= source < len(self.nodes) and 0 <= target < len(self.nodes)):
            raise ValueError("constraint references an unknown node")
        self.edges.append(Constraint(source, target, offset, atom, span))

    def var_nodes(self) -> dict[str, int]:
        """Display name of each variable node; repeated binder names get ``#k`` suffixes."""
        seen: dict[str, int] = {}
        out: dict[str, int] = {}
        for n in self.nodes:
            if not n.is_var:
                continue
            k = seen.get(n.origin, 0)
            seen[n.origin] = k + 1
            out[n.origin if k == 0 else f"{n.origin}#{k + 1}"] = n.id
        return out


@dataclass(frozen=True)
class Stratification:
    levels: dict[int, int]
    var_levels: dict[str, int]

    def satisfies(self, g: ConstraintGraph) -> bool:
        return all(self.levels[e.target] - self.levels[e.source] == e.offset for e in g.edges)


@dataclass(frozen=True)
class FailureWitness:
    """Closed cycle of constraints, oriented so that its weight is positive."""

    cycle: tuple[Constraint, ...]
    weight: int
    graph: ConstraintGraph = field(compare=False, repr=False)

    def is_closed(self) -> bool:
        c = self.cycle
        return bool(c) and all(c[i].target == c[(i + 1) % len(c)].source for i in range(len(c)))


# ---------------------------------------------------------------------------
# Constraint generation


class _Collector:
    def __init__(self, conv: PairingConvention):
        self.conv = conv
        self.g = ConstraintGraph()
        self.free: dict[str, int] = {}

    def var(self, name: str, env: dict[str, int], span) -> int:
        if name in env:
            return env[name]
        if name not in self.free:
            self.free[name] = self.g.add_node(name, is_var=True, span=span)
        return self.free[name]

    def formula(self, f, env: dict[str, int]) -> None:
        if isinstance(f, (Eq, Mem)):
            s = self.term(f.left, env)
            t = self.term(f.right, env)
            self.g.add_edge(s, t, 0 if isinstance(f, Eq) else 1, render(f), f.span)
            return
        bound = binder_var(f)
        if bound is not None:
            node = self.g.add_node(bound, is_var=True, span=f.span)
            self.formula(f.body, {**env, bound: node})
            return
        for c in children(f):
            self.formula(c, env)

    def term(self, t: Term, env: dict[str, int]) -> int:
        if isinstance(t, Var):
            return self.var(t.name, env, t.span)
        text = render_term(t)
        r = self.g.add_node(text, span=t.span)
        if isinstance(t, Abst):
            x = self.g.add_node(t.var, is_var=True, span=t.span)
            self.g.add_edge(x, r, 1, text, t.span)
            self.formula(t.body, {**env, t.var: x})
        elif isinstance(t, Enum):
            for e in t.elems:
                self.g.add_edge(self.term(e, env), r, 1, text, t.span)
        elif isinstance(t, (Union_, Pow)):
            inner = self.term(t.inner, env)
            self.g.add_edge(inner, r, -1 if isinstance(t, Union_) else 1, text, t.span)
        elif isinstance(t, Pair):
            s = self.term(t.left, env)
            u = self.term(t.right, env)
            self.g.add_edge(s, u, 0, text, t.span)
            self.g.add_edge(s, r, 0 if self.conv is QUINE else 2, text, t.span)
        elif isinstance(t, App):
            fn = self.term(t.fun, env)
            arg = self.term(t.arg, env)
            self.g.add_edge(arg, r, 0, text, t.span)
            self.g.add_edge(arg, fn, 1 if self.conv is QUINE else 3, text, t.span)
        else:
            raise TypeError(f"not a term: {t!r}")
        return r


def collect_constraints(f: Formula, conv: PairingConvention = QUINE) -> ConstraintGraph:
    """Level constraints of ``f`` under the given pairing convention."""
    c = _Collector(conv)
    c.formula(f, {})
    return c.g


# ---------------------------------------------------------------------------
# Solving


def _adjacency(g: ConstraintGraph) -> list[list[tuple[int, int, int]]]:
    """Undirected adjacency: ``(neighbour, offset towards neighbour, edge index)``."""
    adj: list[list[tuple[int, int, int]]] = [[] for _ in g.nodes]
    for i, e in enumerate(g.edges):
        adj[e.source].append((e.target, e.offset, i))
        if e.source != e.target:
            adj[e.target].append((e.source, -e.offset, i))
    return adj


def _oriented(g: ConstraintGraph, idx: int, start: int) -> Constraint:
    e = g.edges[idx]
    return e if e.source == start else e.reversed()


def _bfs(adj, root: int):
    dist = {root: 0}
    pot = {root: 0}
    parent: dict[int, tuple[int, int]] = {}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v, off, idx in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                pot[v] = pot[u] + off
                parent[v] = (u, idx)
                queue.append(v)
    return dist, pot, parent


def _path_to_root(parent, v: int) -> list[tuple[int, int]]:
    """``[(node, edge index into node), ...]`` from ``v`` up to the root."""
    out = []
    while v in parent:
        u, idx = parent[v]
        out.append((v, idx))
        v = u
    return out


def _shortest_bad_cycle(g: ConstraintGraph, adj, component: list[int]) -> FailureWitness:
    best = None
    for root in component:
        dist, pot, parent = _bfs(adj, root)
        for idx, e in enumerate(g.edges):
            if e.source not in dist:
                continue
            if pot[e.source] + e.offset == pot[e.target]:
                continue
            length = dist[e.source] + dist[e.target] + 1
            if best is None or length < best[0]:
                best = (length, root, idx, parent)
        if best is not None and best[0] == 1:
            break
    assert best is not None
    _, root, idx, parent = best
    e = g.edges[idx]
    up_s = _path_to_root(parent, e.source)  # source -> root
    up_t = _path_to_root(parent, e.target)  # target -> root
    # drop the shared segment above the lowest common ancestor
    while up_s and up_t and up_s[-1] == up_t[-1]:
        up_s.pop()
        up_t.pop()
    cycle: list[Constraint] = []
    # lca -> source, then the bad edge, then target -> lca
    for node, eidx in reversed(up_s):
        cycle.append(_oriented(g, eidx, parent[node][0]))
    cycle.append(e)
    for node, eidx in up_t:
        cycle.append(_oriented(g, eidx, node))
    weight = sum(c.offset for c in cycle)
    if weight < 0:
        cycle = [c.reversed() for c in reversed(cycle)]
        weight = -weight
    return FailureWitness(tuple(cycle), weight, g)


def solve(g: ConstraintGraph) -> Stratification | FailureWitness:
    """Assign levels, or return a shortest cycle with nonzero total offset."""
    adj = _adjacency(g)
    levels: dict[int, int] = {}
    for start in range(len(g.nodes)):
        if start in levels:
            continue
        _, pot, _ = _bfs(adj, start)
        component = list(pot)
        for e in g.edges:
            if e.source in pot and pot[e.source] + e.offset != pot[e.target]:
                return _shortest_bad_cycle(g, adj, component)
        low = min(pot.values())
        for v, p in pot.items():
            levels[v] = p - low
    var_levels = {name: levels[i] for name, i in g.var_nodes().items()}
    return Stratification(levels, var_levels)


def stratify(f: Formula, conv: PairingConvention = QUINE) -> Stratification | FailureWitness:
    return solve(collect_constraints(f, conv))


def is_stratified(f: Formula, conv: PairingConvention = QUINE) -> bool:
    return isinstance(stratify(f, conv), Stratification)


# ---------------------------------------------------------------------------
# Comprehension


@dataclass(frozen=True)
class ComprehensionVerdict:
    accept: bool
    instance: Formula
    set_var: str
    degenerate: bool
    result: Stratification | FailureWitness

    @property
    def verdict(self) -> str:
        return "ACCEPT" if self.accept else "REJECT"

    @property
    def stratification(self) -> Stratification | None:
        return self.result if isinstance(self.result, Stratification) else None


def fresh_name(avoid, base: str = "y") -> str:
    if base not in avoid:
        return base
    k = 1
    while f"{base}{k}" in avoid:
        k += 1
    return f"{base}{k}"


def check_comprehension(phi: Formula, z: str, conv: PairingConvention = QUINE) -> ComprehensionVerdict:
    """Decide whether ``{z | phi}`` exists by stratified comprehension.

    The instance ``z ∈ y ↔ phi`` is checked with ``y`` fresh; the outer
    quantifiers do not affect stratifiability.  When ``z`` is not free in
    ``phi`` the verdict is still computed but flagged as degenerate.
    """
    y = fresh_name(all_vars(phi) | {z})
    instance = Iff(Mem(Var(z), Var(y)), phi)
    result = stratify(instance, conv)
    return ComprehensionVerdict(
        accept=isinstance(result, Stratification),
        instance=instance,
        set_var=y,
        degenerate=z not in free_vars(phi),
        result=result,
    )


# ---------------------------------------------------------------------------
# Diagnostics


def _node_label(g: ConstraintGraph, i: int) -> str:
    names = {v: k for k, v in g.var_nodes().items()}
    return names.get(i, g.nodes[i].origin)


def cycle_json(w: FailureWitness) -> list[dict]:
    out = []
    for c in w.cycle:
        out.append(
            {
                "from": _node_label(w.graph, c.source),
                "to": _node_label(w.graph, c.target),
                "offset": c.offset,
                "atom": c.atom,
                "at": str(c.span) if c.span else None,
            }
        )
    return out


def explain(w: FailureWitness) -> str:
    """Human-readable account of why no level assignment exists."""
    lines = [f"unstratifiable: cycle of {len(w.cycle)} constraint(s) with total offset {w.weight:+d}"]
    for c in w.cycle:
        where = f" at {c.span}" if c.span else ""
        lines.append(
            f"  level({_node_label(w.graph, c.target)}) = level({_node_label(w.graph, c.source)})"
            f" {'+' if c.offset >= 0 else '-'} {abs(c.offset)}   from {c.atom}{where}"
        )
    return "\n".join(lines)
