"""Systems of small maps over hereditarily finite carriers.

A smallness predicate classifies maps by their fibres.  ``STCAN_CEILING(k)``
is the finite stand-in for "strongly cantorian": a fibre ``x`` passes when the
graph of the singleton map on ``x`` has rank at most ``k`` (or, with the
element measure, when ``x`` itself has rank at most ``k``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from itertools import product as cartesian
from typing import Callable, Iterable, Iterator, Mapping

from .fincat.limits import (
    Coequalizer,
    coequalizer_from_classes,
    coproduct_map,
    is_pullback_cone,
    pullback,
)
from .fincat.morphism import SetMor, compose, identity
from .hfset import (
    HFSet,
    graph_of,
    iota_graph,
    kpair,
    product,
    rank,
    sets_of_rank_at_most,
    to_text,
    union_big,
    unpair,
)

# ---------------------------------------------------------------------------
# Predicates


@lru_cache(maxsize=None)
def iota_rank(x: HFSet) -> int:
    return rank(iota_graph(x).graph)


@dataclass(frozen=True)
class SmallnessPredicate:
    kind: str  # "all", "fibre" or "stcan"
    bound: int = 0
    measure: str = "graph"  # for "stcan": "graph" or "element"

    def __post_init__(self):
        if self.kind not in ("all", "fibre", "stcan"):
            raise ValueError(f"unknown predicate kind {self.kind!r}")
        if self.measure not in ("graph", "element"):
            raise ValueError(f"unknown measure {self.measure!r}")
        if self.bound < 0:
            raise ValueError("bound must be non-negative")

    @classmethod
    def parse(cls, text: str) -> "SmallnessPredicate":
        """``all``, ``fibre:N``, ``stcan:K`` or ``stcan:K:element``."""
        parts = text.strip().lower().split(":")
        try:
            if parts == ["all"]:
                return ALL
            if parts[0] == "fibre" and len(parts) == 2:
                return FIBRE_BOUND(int(parts[1]))
            if parts[0] == "stcan" and len(parts) in (2, 3):
                return STCAN_CEILING(int(parts[1]), *parts[2:])
        except ValueError:
            pass
        raise ValueError(f"cannot parse smallness predicate {text!r}")

    def fibre_measure(self, x: HFSet) -> int:
        if self.kind == "all":
            return 0
        if self.kind == "fibre":
            return len(x)
        return iota_rank(x) if self.measure == "graph" else rank(x)

    def fibre_ok(self, x: HFSet) -> bool:
        return self.kind == "all" or self.fibre_measure(x) <= self.bound

    def __str__(self) -> str:
        if self.kind == "all":
            return "all"
        if self.kind == "fibre":
            return f"fibre:{self.bound}"
        suffix = "" if self.measure == "graph" else ":element"
        return f"stcan:{self.bound}{suffix}"


ALL = SmallnessPredicate("all")


def FIBRE_BOUND(n: int) -> SmallnessPredicate:
    return SmallnessPredicate("fibre", n)


def STCAN_CEILING(k: int, measure: str = "graph") -> SmallnessPredicate:
    return SmallnessPredicate("stcan", k, measure)


def fibres(f: SetMor) -> dict[HFSet, HFSet]:
    """``b ↦ f⁻¹{b}`` for every ``b`` in the codomain (empty fibres included)."""
    out: dict[HFSet, list[HFSet]] = {b: [] for b in f.codomain}
    for a, b in f.items():
        out[b].append(a)
    return {b: HFSet(v) for b, v in out.items()}


def is_small(f: SetMor, p: SmallnessPredicate) -> bool:
    if p.kind == "all":
        return True
    return all(p.fibre_ok(x) for x in fibres(f).values())


def worst_fibre(f: SetMor, p: SmallnessPredicate) -> tuple[HFSet, HFSet] | None:
    """The fibre with the largest measure, as ``(point, fibre)``."""
    fs = fibres(f)
    if not fs:
        return None
    b = max(fs, key=lambda k: p.fibre_measure(fs[k]))
    return b, fs[b]


# ---------------------------------------------------------------------------
# Audit of the five axioms


AXIOMS = {
    "i": "identities and composites of small maps are small",
    "ii": "pullbacks of small maps are small",
    "iii": "diagonals are small",
    "iv": "if f∘e is small and e is a regular epi then f is small",
    "v": "copairs f+g of small maps are small",
}


@dataclass(frozen=True)
class Witness:
    axiom: str
    maps: dict[str, SetMor]
    offending: str  # name of the map that should be small but is not
    fibre_point: HFSet | None = None
    fibre: HFSet | None = None

    def to_json(self) -> dict:
        out = {
            "axiom": self.axiom,
            "maps": {k: _mor_json(v) for k, v in sorted(self.maps.items())},
            "offending": self.offending,
        }
        if self.fibre is not None:
            out["fibre_over"] = to_text(self.fibre_point)
            out["fibre"] = to_text(self.fibre)
            out["fibre_size"] = len(self.fibre)
        return out


def _mor_json(f: SetMor) -> dict:
    return {"domain": to_text(f.domain), "codomain": to_text(f.codomain), "graph": to_text(f.graph)}


@dataclass
class AxiomResult:
    axiom: str
    checks: int = 0
    vacuous: int = 0
    witness: Witness | None = None
    severity: int = -1

    @property
    def status(self) -> str:
        return "FAIL" if self.witness is not None else "PASS"

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "statement": AXIOMS[self.axiom],
            "status": self.status,
            "checks": self.checks,
            "vacuous": self.vacuous,
            "witness": self.witness.to_json() if self.witness else None,
        }


@dataclass
class AxiomReport:
    predicate: str
    sample_rank: int
    seed: int
    cap: int
    results: dict[str, AxiomResult] = field(default_factory=dict)

    def status(self, axiom: str) -> str:
        return self.results[axiom].status

    @property
    def all_pass(self) -> bool:
        return all(r.status == "PASS" for r in self.results.values())

    def to_json(self) -> dict:
        return {
            "predicate": self.predicate,
            "sample_rank": self.sample_rank,
            "seed": self.seed,
            "cap": self.cap,
            "axioms": [self.results[k].to_json() for k in AXIOMS if k in self.results],
        }


# Each check takes the instance maps, returns None when the premise fails,
# otherwise (conclusion map name, conclusion map).


def _instance_i(p: SmallnessPredicate, maps: Mapping[str, SetMor]):
    if "id" in maps:
        return "id", maps["id"]
    f, g = maps["f"], maps["g"]
    if not (is_small(f, p) and is_small(g, p)):
        return None
    return "g∘f", compose(g, f)


def _instance_ii(p, maps):
    f, g = maps["f"], maps["g"]
    if not is_small(f, p):
        return None
    pb = pullback(g, f)
    return "g*f", pb.p1


def _instance_iii(p, maps):
    c = maps["id"].domain
    delta = SetMor(c, product(c, c), {x: kpair(x, x) for x in c}, check=False)
    return "Δ", delta


def _instance_iv(p, maps):
    e, f = maps["e"], maps["f"]
    if not e.is_surjective() or not is_small(compose(f, e), p):
        return None
    return "f", f


def _instance_v(p, maps):
    f, g = maps["f"], maps["g"]
    if not (is_small(f, p) and is_small(g, p)):
        return None
    return "f+g", coproduct_map(f, g)


_INSTANCES: dict[str, Callable] = {
    "i": _instance_i,
    "ii": _instance_ii,
    "iii": _instance_iii,
    "iv": _instance_iv,
    "v": _instance_v,
}


def check_instance(axiom: str, maps: Mapping[str, SetMor], p: SmallnessPredicate) -> Witness | None:
    """Check one instance; a witness is returned when the conclusion fails."""
    out = _INSTANCES[axiom](p, maps)
    if out is None:
        return None
    name, conclusion = out
    if is_small(conclusion, p):
        return None
    b, fib = worst_fibre(conclusion, p)
    return Witness(axiom, dict(maps), name, b, fib)


def premise_holds(axiom: str, maps: Mapping[str, SetMor], p: SmallnessPredicate) -> bool:
    return _INSTANCES[axiom](p, maps) is not None


def replay(w: Witness, p: SmallnessPredicate) -> bool:
    """True when the recorded instance still violates the axiom."""
    return check_instance(w.axiom, w.maps, p) is not None


def sample_carriers(sample_rank: int, max_card: int = 4) -> list[HFSet]:
    """Carriers drawn from the sets of rank ``<= sample_rank``, at most ``max_card`` elements."""
    base = HFSet(sets_of_rank_at_most(sample_rank)).elements
    out = []
    for k in range(min(max_card, len(base)) + 1):
        out.extend(HFSet(c) for c in combinations(base, k))
    return out


class _InstanceGen:
    def __init__(self, carriers: list[HFSet], seed: int):
        self.carriers = carriers
        self.rng = random.Random(seed)

    def carrier(self) -> HFSet:
        return self.rng.choice(self.carriers)

    def nonempty(self) -> HFSet:
        while True:
            c = self.carrier()
            if c:
                return c

    def map(self, a: HFSet, b: HFSet) -> SetMor:
        values = b.elements
        return SetMor(a, b, {x: self.rng.choice(values) for x in a}, check=False)

    def surjection(self, a: HFSet, b: HFSet) -> SetMor | None:
        if len(b) > len(a) or (b and not a) or (a and not b):
            return None
        elems = list(a.elements)
        self.rng.shuffle(elems)
        vals = list(b.elements) + [self.rng.choice(b.elements) for _ in range(len(a) - len(b))]
        return SetMor(a, b, dict(zip(elems, vals)), check=False)

    def codomain_for(self, a: HFSet) -> HFSet:
        return self.nonempty() if a else self.carrier()

    def instance(self, axiom: str) -> dict[str, SetMor] | None:
        a = self.carrier()
        if axiom == "i":
            if self.rng.random() < 0.05:
                return {"id": identity(a)}
            b = self.codomain_for(a)
            c = self.codomain_for(b)
            return {"f": self.map(a, b), "g": self.map(b, c)}
        if axiom == "ii":
            b = self.codomain_for(a)
            c = self.carrier() if b else HFSet()
            return {"f": self.map(a, b), "g": self.map(c, b)}
        if axiom == "iii":
            return {"id": identity(a)}
        if axiom == "iv":
            b = self.carrier()
            e = self.surjection(a, b)
            if e is None:
                return None
            c = self.codomain_for(b)
            return {"e": e, "f": self.map(b, c)}
        if axiom == "v":
            b = self.codomain_for(a)
            c = self.carrier()
            d = self.codomain_for(c)
            return {"f": self.map(a, b), "g": self.map(c, d)}
        raise KeyError(axiom)


DEFAULT_AUDIT_CAP = 4000
MAX_SAMPLE_RANK = 3


def _severity(w: Witness, p: SmallnessPredicate) -> int:
    return p.fibre_measure(w.fibre) if w.fibre is not None else 0


def audit_small_maps(
    p: SmallnessPredicate,
    sample_rank: int = 2,
    seed: int = 0,
    cap: int = DEFAULT_AUDIT_CAP,
    max_card: int = 4,
) -> AxiomReport:
    """Search seeded random instances of each axiom for counterexamples.

    Up to ``cap`` instances are drawn per axiom; for a failing axiom the
    witness kept is the one whose offending fibre has the largest measure
    (ties go to the earliest draw).
    """
    if not 0 <= sample_rank <= MAX_SAMPLE_RANK:
        raise ValueError(f"sample rank must be between 0 and {MAX_SAMPLE_RANK}")
    carriers = sample_carriers(sample_rank, max_card)
    report = AxiomReport(str(p), sample_rank, seed, cap)
    for k, axiom in enumerate(AXIOMS):
        gen = _InstanceGen(carriers, seed * 7919 + k)
        res = AxiomResult(axiom)
        if axiom == "iii":
            instances: Iterable = ({"id": identity(c)} for c in carriers)
        else:
            instances = (gen.instance(axiom) for _ in range(cap))
        for maps in instances:
            if maps is None or not premise_holds(axiom, maps, p):
                res.vacuous += 1
                continue
            res.checks += 1
            w = check_instance(axiom, maps, p)
            if w is not None:
                sev = _severity(w, p)
                if sev > res.severity:
                    res.witness, res.severity = w, sev
        report.results[axiom] = res
    return report


# ---------------------------------------------------------------------------
# Descent


@dataclass
class DescentReport:
    predicate: str
    checks: int = 0
    vacuous: int = 0
    witness: dict | None = None

    @property
    def status(self) -> str:
        return "FAIL" if self.witness else "PASS"


def check_descent_square(f: SetMor, q: SetMor, e: SetMor, g: SetMor, p: SmallnessPredicate) -> bool | None:
    """Square ``D -f-> C -e-> A``, ``D -q-> B -g-> A``.

    Requires a pullback square with ``e`` surjective (otherwise ``ValueError``).
    Returns ``None`` if ``f`` is not small, else whether ``g`` is small.
    """
    if not e.is_surjective():
        raise ValueError("e is not a regular epimorphism")
    if not is_pullback_cone(f, q, e, g):
        raise ValueError("the square is not a pullback")
    if not is_small(f, p):
        return None
    return is_small(g, p)


def descent_check(p: SmallnessPredicate, sample_rank: int = 2, seed: int = 0, cap: int = DEFAULT_AUDIT_CAP) -> DescentReport:
    carriers = sample_carriers(sample_rank)
    gen = _InstanceGen(carriers, seed)
    rep = DescentReport(str(p))
    for _ in range(cap):
        c, a = gen.carrier(), gen.carrier()
        e = gen.surjection(c, a)
        if e is None:
            rep.vacuous += 1
            continue
        b = gen.carrier() if a else HFSet()
        g = gen.map(b, a)
        pb = pullback(e, g)
        verdict = check_descent_square(pb.p1, pb.p2, e, g, p)
        if verdict is None:
            rep.vacuous += 1
            continue
        rep.checks += 1
        if not verdict:
            rep.witness = {"e": _mor_json(e), "g": _mor_json(g)}
            break
    return rep


# ---------------------------------------------------------------------------
# Sumsets


@dataclass(frozen=True)
class ScuRow:
    family: HFSet
    premise: bool
    conclusion: bool


@dataclass
class ScuReport:
    k: int
    measure: str
    rows: list[ScuRow]

    @property
    def premise_count(self) -> int:
        return sum(r.premise for r in self.rows)

    @property
    def violations(self) -> list[ScuRow]:
        return [r for r in self.rows if r.premise and not r.conclusion]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "measure": self.measure,
            "families": len(self.rows),
            "premise_holds": self.premise_count,
            "violations": [to_text(r.family) for r in self.violations],
        }


def stcan(x: HFSet, k: int, measure: str = "graph") -> bool:
    return STCAN_CEILING(k, measure).fibre_ok(x)


def scu_check(k: int, sample_rank: int = 2, measure: str = "graph") -> ScuReport:
    """For each family ``X`` of rank ``<= sample_rank``: does the premise imply ``stcan(⋃X)``?"""
    if not 0 <= sample_rank <= MAX_SAMPLE_RANK:
        raise ValueError(f"sample rank must be between 0 and {MAX_SAMPLE_RANK}")
    rows = []
    for x in sets_of_rank_at_most(sample_rank):
        premise = stcan(x, k, measure) and all(stcan(m, k, measure) for m in x)
        rows.append(ScuRow(x, premise, stcan(union_big(x), k, measure)))
    return ScuReport(k, measure, rows)


# ---------------------------------------------------------------------------
# Indexed products and inverse limits


def indexed_product(family: Mapping[HFSet, HFSet]) -> HFSet:
    """Graphs of all choice functions ``i ↦ a_i ∈ A_i``."""
    index = sorted(family)
    return HFSet(graph_of(dict(zip(index, vals))) for vals in cartesian(*(family[i].elements for i in index)))


def choice_embedding(graph: HFSet) -> HFSet:
    """``{<a, i> | <i, a> ∈ graph}``, an element of ``P(⋃A_i × I)``."""
    return HFSet(kpair(b, a) for a, b in (unpair(p) for p in graph))


def embedding_holds(family: Mapping[HFSet, HFSet]) -> bool:
    """The embedding of the product into ``P(⋃A_i × I)`` is well defined and injective."""
    ambient = product(union_big(HFSet(family.values())), HFSet(family))
    images = [choice_embedding(g) for g in indexed_product(family)]
    return all(im.issubset(ambient) for im in images) and len(set(images)) == len(images)


@dataclass(frozen=True)
class DirectedSystem:
    """``bonds[(i, j)] : A_i -> A_j`` for every ``j < i``; ``leq`` holds pairs ``(j, i)`` with ``j <= i``."""

    index: tuple[HFSet, ...]
    leq: frozenset[tuple[HFSet, HFSet]]
    carriers: dict[HFSet, HFSet]
    bonds: dict[tuple[HFSet, HFSet], SetMor]

    def __post_init__(self):
        idx = set(self.index)
        for i in idx:
            if (i, i) not in self.leq:
                raise ValueError("order is not reflexive")
        for j, i in self.leq:
            if j != i and (i, j) in self.leq:
                raise ValueError("order is not antisymmetric")
            for k in idx:
                if (i, k) in self.leq and (j, k) not in self.leq:
                    raise ValueError("order is not transitive")
        for i in idx:
            for j in idx:
                if not any((i, k) in self.leq and (j, k) in self.leq for k in idx):
                    raise ValueError("index poset is not directed")
        for j, i in self.leq:
            if j == i:
                continue
            b = self.bonds.get((i, j))
            if b is None or b.domain != self.carriers[i] or b.codomain != self.carriers[j]:
                raise ValueError("missing or mis-shaped bonding map")
            if not b.is_surjective():
                raise ValueError("bonding maps must be surjective")
        for k, j in self.leq:
            for j2, i in self.leq:
                if j2 == j and k != j and j != i:
                    if compose(self.bonds[(j, k)], self.bonds[(i, j)]) != self.bonds[(i, k)]:
                        raise ValueError("bonding maps do not commute")

    def above(self, i: HFSet) -> list[HFSet]:
        return [j for j in self.index if j != i and (i, j) in self.leq]


@dataclass(frozen=True)
class InverseLimit:
    obj: HFSet
    projections: dict[HFSet, SetMor]
    fibre_report: dict[tuple[HFSet, HFSet], bool]

    @property
    def fibres_ok(self) -> bool:
        return all(self.fibre_report.values())


def _compatible_families(sys: DirectedSystem) -> Iterator[dict[HFSet, HFSet]]:
    order = list(sys.index)

    def extend(k: int, chosen: dict[HFSet, HFSet]):
        if k == len(order):
            yield dict(chosen)
            return
        i = order[k]
        for x in sys.carriers[i]:
            ok = True
            for j, y in chosen.items():
                if (j, i) in sys.leq and sys.bonds[(i, j)](x) != y:
                    ok = False
                elif (i, j) in sys.leq and sys.bonds[(j, i)](y) != x:
                    ok = False
                if not ok:
                    break
            if ok:
                chosen[i] = x
                yield from extend(k + 1, chosen)
                del chosen[i]

    yield from extend(0, {})


def inverse_limit(sys: DirectedSystem) -> InverseLimit:
    """Compatible families with their projections and the fibre containment report."""
    fams = list(_compatible_families(sys))
    obj = HFSet(graph_of(f) for f in fams)
    by_graph = {graph_of(f): f for f in fams}
    projections = {
        i: SetMor(obj, sys.carriers[i], {g: f[i] for g, f in by_graph.items()}, check=False) for i in sys.index
    }
    report = {}
    for i in sys.index:
        ups = sys.above(i)
        for x in sys.carriers[i]:
            fibre = [f for f in by_graph.values() if f[i] == x]
            bonded = {j: fibres(sys.bonds[(j, i)])[x] for j in ups}
            restricted = [tuple(f[j] for j in ups) for f in fibre]
            lands = all(all(f[j] in bonded[j] for j in ups) for f in fibre)
            report[(i, x)] = lands and len(set(restricted)) == len(restricted)
    return InverseLimit(obj, projections, report)


# ---------------------------------------------------------------------------
# Neighbourhoods and coequalizers of small maps


def graph_vertices(g: HFSet) -> HFSet:
    return union_big(g)


def neighborhood_sequence(g: HFSet, v: HFSet, nmax: int, vertices: HFSet | None = None) -> list[HFSet]:
    """``N_0 = {v}``, ``N_{n+1} = N_n ∪ neighbours(N_n)``; edges are one- or two-element sets."""
    verts = graph_vertices(g) | (vertices or HFSet())
    if v not in verts:
        raise ValueError(f"{to_text(v)} is not a vertex")
    adj: dict[HFSet, set[HFSet]] = {}
    for edge in g:
        for a in edge:
            adj.setdefault(a, set()).update(edge)
    seq = [HFSet((v,))]
    current = {v}
    for _ in range(nmax):
        current = current | {w for u in current for w in adj.get(u, ())}
        seq.append(HFSet(current))
    return seq


def component(g: HFSet, v: HFSet, vertices: HFSet | None = None) -> HFSet:
    verts = graph_vertices(g) | (vertices or HFSet())
    seq = neighborhood_sequence(g, v, len(verts), vertices)
    return seq[-1]


@dataclass(frozen=True)
class SmallCoequalizer:
    coequalizer: Coequalizer
    graph: HFSet
    precondition_ok: bool
    quotient_small: bool

    @property
    def obj(self) -> HFSet:
        return self.coequalizer.obj

    @property
    def quotient(self) -> SetMor:
        return self.coequalizer.quotient


def coequalizer_small(f: SetMor, g: SetMor, p: SmallnessPredicate) -> SmallCoequalizer:
    """Coequalizer via connected components of the graph ``{{f(a), g(a)} | a ∈ A}`` on ``B``."""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ValueError("expected a parallel pair")
    b = f.codomain
    edges = HFSet(HFSet((f(a), g(a))) for a in f.domain)
    classes = {component(edges, x, b) for x in b}
    coeq = coequalizer_from_classes(b, classes)
    pre = is_small(f, p) and is_small(g, p)
    return SmallCoequalizer(coeq, edges, pre, is_small(coeq.quotient, p))


__all__ = [
    "ALL",
    "AXIOMS",
    "AxiomReport",
    "AxiomResult",
    "DescentReport",
    "DirectedSystem",
    "FIBRE_BOUND",
    "InverseLimit",
    "STCAN_CEILING",
    "ScuReport",
    "SmallCoequalizer",
    "SmallnessPredicate",
    "Witness",
    "audit_small_maps",
    "check_descent_square",
    "check_instance",
    "choice_embedding",
    "coequalizer_small",
    "component",
    "descent_check",
    "embedding_holds",
    "fibres",
    "indexed_product",
    "inverse_limit",
    "iota_rank",
    "is_small",
    "neighborhood_sequence",
    "replay",
    "sample_carriers",
    "scu_check",
    "stcan",
]
