"""Internal categories and internal diagrams in the finite category of sets.

An internal category is a six-tuple ``(C0, C1, d0, d1, i, m)``.  ``d0`` is the
domain and ``d1`` the codomain map; composable pairs are ``<g, f>`` with
``d0(g) == d1(f)`` and ``m(<g, f>) = g ∘ f``.  An internal diagram (a discrete
opfibration) is ``(F0, γ0, e)`` with ``e`` acting on pairs ``<x, f>`` where
``γ0(x) == d0(f)``; the result lies over ``d1(f)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as cartesian
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from .fincat.morphism import MorphismError, SetMor, homset
from .fincat.slices import SliceObj
from .hfset import (
    EMPTY,
    HFSet,
    apply_graph,
    from_text,
    graph_to_dict,
    kpair,
    product,
    sets_of_rank_at_most,
    singleton,
    to_text,
    unpair,
    von_neumann,
)


@dataclass(frozen=True)
class Failure:
    law: str
    witness: tuple[HFSet, ...]

    def to_json(self) -> dict:
        return {"law": self.law, "witness": [to_text(w) for w in self.witness]}


@dataclass
class ValidationReport:
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, law: str, *witness: HFSet) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(Failure(law, witness))


# ---------------------------------------------------------------------------
# Internal categories


@dataclass(frozen=True)
class InternalCategory:
    C0: HFSet
    C1: HFSet
    d0: SetMor
    d1: SetMor
    i: SetMor
    m: SetMor

    def composable(self) -> HFSet:
        """``C1 ×_{C0} C1`` as pairs ``<g, f>`` with ``d0(g) == d1(f)``."""
        return composable_pairs(self.C1, self.d0, self.d1)

    def comp(self, g: HFSet, f: HFSet) -> HFSet:
        return self.m(kpair(g, f))

    def ident(self, u: HFSet) -> HFSet:
        return self.i(u)

    def arrows_from(self, u: HFSet) -> HFSet:
        return HFSet(f for f in self.C1 if self.d0(f) == u)


def composable_pairs(c1: HFSet, d0: SetMor, d1: SetMor) -> HFSet:
    return HFSet(kpair(g, f) for g in c1 for f in c1 if d0(g) == d1(f))


def category_from_table(
    objects: Sequence[str],
    arrows: Mapping[str, tuple[str, str]],
    identities: Mapping[str, str],
    compose: Mapping[tuple[str, str], str],
) -> InternalCategory:
    """Build an internal category from named objects and arrows.

    ``arrows`` maps an arrow name to ``(domain, codomain)``; ``compose`` maps
    ``(g, f)`` to the name of ``g ∘ f``.  Composites with an identity may be
    omitted.  Names are encoded as distinct HF sets.
    """
    names = list(objects) + [a for a in arrows if a not in objects]
    code = {n: von_neumann(k) for k, n in enumerate(names)}
    ob = {o: code[o] for o in objects}
    ar = {a: code[a] for a in arrows}
    c0 = HFSet(ob.values())
    c1 = HFSet(ar.values())
    d0 = SetMor(c1, c0, {ar[a]: ob[s] for a, (s, _) in arrows.items()})
    d1 = SetMor(c1, c0, {ar[a]: ob[t] for a, (_, t) in arrows.items()})
    i = SetMor(c0, c1, {ob[o]: ar[identities[o]] for o in objects})
    table = dict(compose)
    for a, (s, t) in arrows.items():
        table.setdefault((identities[t], a), a)
        table.setdefault((a, identities[s]), a)
    pairs = composable_pairs(c1, d0, d1)
    mp = {}
    for g, f in (unpair(p) for p in pairs):
        gn = next(n for n, v in ar.items() if v == g)
        fn = next(n for n, v in ar.items() if v == f)
        if (gn, fn) not in table:
            raise ValueError(f"missing composite {gn} ∘ {fn}")
        mp[kpair(g, f)] = ar[table[(gn, fn)]]
    return InternalCategory(c0, c1, d0, d1, i, SetMor(pairs, c1, mp))


def monoid_category(elements: Sequence[str], unit: str, mult: Mapping[tuple[str, str], str]) -> InternalCategory:
    """One-object category of a monoid; ``mult[(g, f)]`` is ``g·f``."""
    return category_from_table(["*"], {e: ("*", "*") for e in elements}, {"*": unit}, mult)


def discrete_category(c0: HFSet) -> InternalCategory:
    ident = SetMor(c0, c0, {u: u for u in c0})
    pairs = composable_pairs(c0, ident, ident)
    m = SetMor(pairs, c0, {p: unpair(p)[0] for p in pairs})
    return InternalCategory(c0, c0, ident, ident, ident, m)


def validate_internal_category(c: InternalCategory) -> ValidationReport:
    """Check the category axioms pointwise; failures carry the offending elements."""
    r = ValidationReport()
    shapes = [
        (c.d0, c.C1, c.C0),
        (c.d1, c.C1, c.C0),
        (c.i, c.C0, c.C1),
        (c.m, c.composable(), c.C1),
    ]
    for name, (f, dom, cod) in zip(("d0", "d1", "i", "m"), shapes):
        if f.domain != dom or f.codomain != cod:
            r.check(False, f"shape of {name}")
    if not r.ok:
        return r
    for u in c.C0:
        r.check(c.d0(c.i(u)) == u, "d0 ∘ i = 1", u)
        r.check(c.d1(c.i(u)) == u, "d1 ∘ i = 1", u)
    for p in c.composable():
        g, f = unpair(p)
        gf = c.m(p)
        r.check(c.d0(gf) == c.d0(f), "d0 of a composite", g, f)
        r.check(c.d1(gf) == c.d1(g), "d1 of a composite", g, f)
    for f in c.C1:
        r.check(c.comp(c.i(c.d1(f)), f) == f, "left unit", c.i(c.d1(f)), f)
        r.check(c.comp(f, c.i(c.d0(f))) == f, "right unit", f, c.i(c.d0(f)))
    if not r.ok:
        return r
    for p in c.composable():
        g, f = unpair(p)
        for h in c.C1:
            if c.d0(h) == c.d1(g):
                lhs = c.comp(h, c.comp(g, f))
                rhs = c.comp(c.comp(h, g), f)
                r.check(lhs == rhs, "associativity", h, g, f)
    return r


def hom_fibration(c: InternalCategory) -> dict[HFSet, HFSet]:
    """Fibres of ``<d0, d1> : C1 -> C0 × C0``, keyed by ``<u, v>``."""
    out = {kpair(u, v): [] for u in c.C0 for v in c.C0}
    for f in c.C1:
        out[kpair(c.d0(f), c.d1(f))].append(f)
    return {k: HFSet(v) for k, v in out.items()}


# ---------------------------------------------------------------------------
# Internal diagrams


@dataclass(frozen=True)
class InternalDiagram:
    F0: HFSet
    gamma0: SetMor
    e: SetMor

    def act(self, x: HFSet, f: HFSet) -> HFSet:
        return self.e(kpair(x, f))

    def fibre(self, u: HFSet) -> HFSet:
        return HFSet(x for x in self.F0 if self.gamma0(x) == u)


def action_domain(f0: HFSet, gamma0: SetMor, c: InternalCategory) -> HFSet:
    """``F0 ×_{C0} C1`` along ``γ0`` and ``d0``."""
    return HFSet(kpair(x, f) for x in f0 for f in c.C1 if gamma0(x) == c.d0(f))


def validate_diagram(F: InternalDiagram, c: InternalCategory) -> ValidationReport:
    r = ValidationReport()
    if F.gamma0.domain != F.F0 or F.gamma0.codomain != c.C0:
        r.check(False, "shape of gamma0")
        return r
    if F.e.domain != action_domain(F.F0, F.gamma0, c) or F.e.codomain != F.F0:
        r.check(False, "shape of e")
        return r
    for p in F.e.domain:
        x, f = unpair(p)
        r.check(F.gamma0(F.e(p)) == c.d1(f), "γ0 ∘ e = d1 ∘ π2", x, f)
    for x in F.F0:
        r.check(F.act(x, c.i(F.gamma0(x))) == x, "e(1 × i) = 1", x)
    if not r.ok:
        return r
    for p in F.e.domain:
        x, f = unpair(p)
        for g in c.C1:
            if c.d0(g) == c.d1(f):
                r.check(F.act(F.act(x, f), g) == F.act(x, c.comp(g, f)), "e(e × 1) = e(1 × m)", x, f, g)
    return r


@dataclass(frozen=True)
class DiagramMorphism:
    h: SetMor
    source: InternalDiagram = field(repr=False)
    target: InternalDiagram = field(repr=False)


def is_diagram_morphism(h: SetMor, F: InternalDiagram, G: InternalDiagram) -> bool:
    if h.domain != F.F0 or h.codomain != G.F0:
        return False
    if any(G.gamma0(h(x)) != F.gamma0(x) for x in F.F0):
        return False
    return all(h(F.e(p)) == G.act(h(unpair(p)[0]), unpair(p)[1]) for p in F.e.domain)


def _fibrewise_maps(F0: HFSet, gF: SetMor, G0: HFSet, gG: SetMor) -> Iterator[SetMor]:
    fibres = {u: [y for y in G0 if gG(y) == u] for u in gG.codomain}
    dom = F0.elements
    for vals in cartesian(*(fibres.get(gF(x), []) for x in dom)):
        yield SetMor(F0, G0, dict(zip(dom, vals)), check=False)


def nat_transformations(F: InternalDiagram, G: InternalDiagram) -> list[DiagramMorphism]:
    """All maps ``F0 -> G0`` over ``C0`` that commute with the actions."""
    out = []
    for h in _fibrewise_maps(F.F0, F.gamma0, G.F0, G.gamma0):
        if is_diagram_morphism(h, F, G):
            out.append(DiagramMorphism(h, F, G))
    return out


# ---------------------------------------------------------------------------
# The adjunction R ⊣ U


def U(F: InternalDiagram) -> SliceObj:
    """Forget the action."""
    return SliceObj(F.F0, F.gamma0.codomain, F.gamma0)


def R(gamma: SliceObj, c: InternalCategory) -> InternalDiagram:
    """Free diagram on ``γ : X -> C0``: carrier ``X ×_{C0} C1``, fibred by ``d1 ∘ π2``."""
    if gamma.base != c.C0:
        raise MorphismError("slice object is not over C0")
    f0 = HFSet(kpair(x, f) for x in gamma.total for f in c.C1 if gamma.proj(x) == c.d0(f))
    g0 = SetMor(f0, c.C0, {p: c.d1(unpair(p)[1]) for p in f0}, check=False)
    dom = action_domain(f0, g0, c)
    act = {}
    for q in dom:
        p, g = unpair(q)
        x, f = unpair(p)
        act[q] = kpair(x, c.comp(g, f))
    return InternalDiagram(f0, g0, SetMor(dom, f0, act, check=False))


def R_mor(s: SetMor, gamma: SliceObj, gamma2: SliceObj, c: InternalCategory) -> SetMor:
    """``R(s) : <x, f> ↦ <s(x), f>`` for a slice map ``s : γ -> γ'``."""
    src, dst = R(gamma, c), R(gamma2, c)
    return SetMor(src.F0, dst.F0, {p: kpair(s(unpair(p)[0]), unpair(p)[1]) for p in src.F0})


def adjunction_transpose(h: SetMor, gamma: SliceObj, c: InternalCategory) -> SetMor:
    """``hom(R γ, F) -> hom(γ, U F)``: ``x ↦ h(<x, i(γ x)>)``."""
    return SetMor(gamma.total, h.codomain, {x: h(kpair(x, c.i(gamma.proj(x)))) for x in gamma.total})


def adjunction_untranspose(k: SetMor, gamma: SliceObj, F: InternalDiagram, c: InternalCategory) -> SetMor:
    """``hom(γ, U F) -> hom(R γ, F)``: ``<x, f> ↦ e(<k(x), f>)``."""
    free = R(gamma, c)
    out = {}
    for p in free.F0:
        x, f = unpair(p)
        out[p] = F.act(k(x), f)
    return SetMor(free.F0, F.F0, out)


@dataclass(frozen=True)
class AdjunctionReport:
    left_count: int
    right_count: int
    round_trips: bool

    @property
    def ok(self) -> bool:
        return self.left_count == self.right_count and self.round_trips


def check_adjunction(gamma: SliceObj, F: InternalDiagram, c: InternalCategory) -> AdjunctionReport:
    from .fincat.slices import slice_homset

    left = [d.h for d in nat_transformations(R(gamma, c), F)]
    right = slice_homset(gamma, U(F))
    ok = all(adjunction_untranspose(adjunction_transpose(h, gamma, c), gamma, F, c) == h for h in left)
    ok = ok and all(adjunction_transpose(adjunction_untranspose(k, gamma, F, c), gamma, c) == k for k in right)
    ok = ok and all(
        is_diagram_morphism(adjunction_untranspose(k, gamma, F, c), R(gamma, c), F) for k in right
    )
    return AdjunctionReport(len(left), len(right), ok)


def representable(c: InternalCategory, u: HFSet) -> InternalDiagram:
    """``R`` at the point ``u : 1 -> C0``; elements are ``<∅, f>`` with ``d0(f) == u``."""
    if u not in c.C0:
        raise ValueError(f"{to_text(u)} is not an object")
    point = SliceObj(singleton(EMPTY), c.C0, SetMor(singleton(EMPTY), c.C0, {EMPTY: u}))
    return R(point, c)


# ---------------------------------------------------------------------------
# Yoneda


@dataclass(frozen=True)
class YonedaReport:
    u: HFSet
    fibre: HFSet
    pullback_carrier: HFSet
    nat_count: int
    table: dict[SetMor, HFSet]
    inverse: dict[HFSet, SetMor]
    ok: bool

    def to_json(self) -> dict:
        return {
            "object": to_text(self.u),
            "fibre_size": len(self.fibre),
            "nat_count": self.nat_count,
            "verdict": "PASS" if self.ok else "FAIL",
        }


def yoneda_check(c: InternalCategory, u: HFSet, F: InternalDiagram) -> YonedaReport:
    """Exhibit ``Nat(R(u), F) ≅ T(F(U))`` by ``η ↦ {η(<∅, i(u)>)}``."""
    pb = HFSet(kpair(EMPTY, x) for x in F.F0 if F.gamma0(x) == u)
    fu = HFSet(unpair(p)[1] for p in pb)
    ru = representable(c, u)
    nats = [d.h for d in nat_transformations(ru, F)]
    gen = kpair(EMPTY, c.i(u))
    table = {eta: singleton(eta(gen)) for eta in nats}
    inverse = {}
    for x in fu:
        inverse[singleton(x)] = SetMor(ru.F0, F.F0, {p: F.act(x, unpair(p)[1]) for p in ru.F0})
    t_fu = HFSet(singleton(x) for x in fu)
    ok = (
        set(table.values()) == set(t_fu)
        and len(set(table.values())) == len(table)
        and all(inverse[table[eta]] == eta for eta in nats)
        and all(is_diagram_morphism(eta, ru, F) and table[eta] == sx for sx, eta in inverse.items())
    )
    return YonedaReport(u, fu, pb, len(nats), table, inverse, ok)


# ---------------------------------------------------------------------------
# Enumerating small diagrams


def diagrams_over(c: InternalCategory, max_fibre: int) -> Iterator[InternalDiagram]:
    """Every valid diagram whose fibres have at most ``max_fibre`` elements.

    Carrier elements over ``u`` are ``<u, k>`` for von Neumann ``k``, so each
    isomorphism class of fibre sizes is represented by one carrier.
    """
    objs = c.C0.elements
    for sizes in cartesian(range(max_fibre + 1), repeat=len(objs)):
        f0 = HFSet(kpair(u, von_neumann(k)) for u, n in zip(objs, sizes) for k in range(n))
        g0 = SetMor(f0, c.C0, {x: unpair(x)[0] for x in f0}, check=False)
        dom = action_domain(f0, g0, c)
        fixed = {}
        free_keys = []
        for p in dom:
            x, f = unpair(p)
            if f == c.i(g0(x)):
                fixed[p] = x
            else:
                free_keys.append(p)
        choices = [
            [y for y in f0 if g0(y) == c.d1(unpair(p)[1])] for p in free_keys
        ]
        for vals in cartesian(*choices):
            act = dict(fixed)
            act.update(zip(free_keys, vals))
            F = InternalDiagram(f0, g0, SetMor(dom, f0, act, check=False))
            if validate_diagram(F, c).ok:
                yield F


# ---------------------------------------------------------------------------
# Full internal subcategory


@dataclass(frozen=True)
class GenericFamily:
    V: HFSet
    gamma: SliceObj
    funct: HFSet
    dc: SetMor
    ev_gen: SetMor
    fibre_counts: dict[tuple[HFSet, HFSet], tuple[int, int]]
    fullness_ok: bool
    ev_ok: bool

    @property
    def ok(self) -> bool:
        return self.fullness_ok and self.ev_ok

    def to_json(self) -> dict:
        return {
            "universe_size": len(self.V),
            "funct_size": len(self.funct),
            "pairs_checked": len(self.fibre_counts),
            "fullness": "PASS" if self.fullness_ok else "FAIL",
            "ev_gen": "PASS" if self.ev_ok else "FAIL",
        }


MAX_UNIVERSE_RANK = 3


def funct_element(graph: HFSet, a: HFSet, b: HFSet) -> HFSet:
    """A function as an element of ``Funct``: its graph tagged with ``<dom, cod>``."""
    return kpair(graph, kpair(a, b))


def funct_parts(phi: HFSet) -> tuple[HFSet, HFSet, HFSet]:
    graph, ab = unpair(phi)
    a, b = unpair(ab)
    return graph, a, b


def generic_family(universe_rank: int) -> GenericFamily:
    """The membership family over ``V_r`` and the object of all functions between its members."""
    if not 0 <= universe_rank <= MAX_UNIVERSE_RANK:
        raise ValueError(f"universe rank must be between 0 and {MAX_UNIVERSE_RANK}")
    v = HFSet(sets_of_rank_at_most(universe_rank))
    mem = HFSet(kpair(singleton(x), y) for y in v for x in y)
    gamma = SliceObj(mem, v, SetMor(mem, v, {p: unpair(p)[1] for p in mem}, check=False))

    funct_list = []
    homs: dict[tuple[HFSet, HFSet], list[SetMor]] = {}
    for a in v:
        for b in v:
            hs = list(homset(a, b))
            homs[(a, b)] = hs
            funct_list.extend(funct_element(h.graph, a, b) for h in hs)
    funct = HFSet(funct_list)
    vv = product(v, v)
    dc = SetMor(funct, vv, {phi: kpair(*funct_parts(phi)[1:]) for phi in funct}, check=False)

    fibres: dict[HFSet, list[HFSet]] = {}
    for phi in funct:
        fibres.setdefault(dc(phi), []).append(phi)
    counts = {}
    full = True
    for (a, b), hs in homs.items():
        fib = fibres.get(kpair(a, b), [])
        read_back = {SetMor(a, b, graph_to_dict(funct_parts(phi)[0])) for phi in fib}
        counts[(a, b)] = (len(fib), len(hs))
        full = full and len(fib) == len(hs) and read_back == set(hs)

    dom_pb = HFSet(kpair(phi, singleton(x)) for phi in funct for x in funct_parts(phi)[1])
    cod_pb = HFSet(kpair(phi, singleton(y)) for phi in funct for y in funct_parts(phi)[2])
    ev = {}
    for p in dom_pb:
        phi, sx = unpair(p)
        (x,) = sx.elements
        ev[p] = kpair(phi, singleton(apply_graph(funct_parts(phi)[0], x)))
    ev_gen = SetMor(dom_pb, cod_pb, ev)
    ev_ok = all(
        unpair(ev_gen(p))[0] == unpair(p)[0]
        and unpair(ev_gen(p))[1] == singleton(graph_to_dict(funct_parts(unpair(p)[0])[0])[unpair(p)[1].elements[0]])
        for p in dom_pb
    )
    return GenericFamily(v, gamma, funct, dc, ev_gen, counts, full, ev_ok)


# ---------------------------------------------------------------------------
# File formats


class ConfigError(ValueError):
    pass


def _hf(value) -> HFSet:
    if isinstance(value, list):
        if len(value) != 2:
            raise ConfigError(f"pair inputs must have two entries, got {value!r}")
        return kpair(_hf(value[0]), _hf(value[1]))
    if not isinstance(value, str):
        raise ConfigError(f"expected an hf string, got {value!r}")
    return from_text(value)


def _map(entries, domain: HFSet, codomain: HFSet, name: str) -> SetMor:
    if not isinstance(entries, list):
        raise ConfigError(f"{name} must be a list of [input, output] entries")
    table = {}
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ConfigError(f"{name}: malformed entry {entry!r}")
        table[_hf(entry[0])] = _hf(entry[1])
    try:
        return SetMor(domain, codomain, table)
    except MorphismError as exc:
        raise ConfigError(f"{name}: {exc}") from None


def _load(path) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a JSON object")
    return data


def category_from_json(data: dict) -> InternalCategory:
    try:
        c0 = _hf(data["C0"])
        c1 = _hf(data["C1"])
        d0 = _map(data["d0"], c1, c0, "d0")
        d1 = _map(data["d1"], c1, c0, "d1")
        i = _map(data["i"], c0, c1, "i")
        m = _map(data["m"], composable_pairs(c1, d0, d1), c1, "m")
    except KeyError as exc:
        raise ConfigError(f"missing field {exc}") from None
    return InternalCategory(c0, c1, d0, d1, i, m)


def diagram_from_json(data: dict, c: InternalCategory) -> InternalDiagram:
    try:
        f0 = _hf(data["F0"])
        g0 = _map(data["gamma0"], f0, c.C0, "gamma0")
        e = _map(data["e"], action_domain(f0, g0, c), f0, "e")
    except KeyError as exc:
        raise ConfigError(f"missing field {exc}") from None
    return InternalDiagram(f0, g0, e)


def load_category(path) -> InternalCategory:
    return category_from_json(_load(path))


def load_diagram(path, c: InternalCategory) -> InternalDiagram:
    return diagram_from_json(_load(path), c)


def _json_arg(x: HFSet, pair_input: bool) -> object:
    if pair_input:
        a, b = unpair(x)
        return [to_text(a), to_text(b)]
    return to_text(x)


def _map_json(f: SetMor, pair_input: bool = False) -> list:
    return [[_json_arg(x, pair_input), to_text(y)] for x, y in sorted(f.items())]


def category_to_json(c: InternalCategory) -> dict:
    return {
        "C0": to_text(c.C0),
        "C1": to_text(c.C1),
        "d0": _map_json(c.d0),
        "d1": _map_json(c.d1),
        "i": _map_json(c.i),
        "m": _map_json(c.m, pair_input=True),
    }


def diagram_to_json(F: InternalDiagram) -> dict:
    return {"F0": to_text(F.F0), "gamma0": _map_json(F.gamma0), "e": _map_json(F.e, pair_input=True)}


# ---------------------------------------------------------------------------
# A small zoo


def standard_categories() -> dict[str, InternalCategory]:
    """Small categories with at most two objects and four arrows."""
    cats = {
        "terminal": discrete_category(von_neumann(1)),
        "discrete2": discrete_category(von_neumann(2)),
        "walking_arrow": category_from_table(
            ["a", "b"], {"1a": ("a", "a"), "1b": ("b", "b"), "f": ("a", "b")}, {"a": "1a", "b": "1b"}, {}
        ),
        "parallel_pair": category_from_table(
            ["a", "b"],
            {"1a": ("a", "a"), "1b": ("b", "b"), "f": ("a", "b"), "g": ("a", "b")},
            {"a": "1a", "b": "1b"},
            {},
        ),
        "walking_iso": category_from_table(
            ["a", "b"],
            {"1a": ("a", "a"), "1b": ("b", "b"), "f": ("a", "b"), "f'": ("b", "a")},
            {"a": "1a", "b": "1b"},
            {("f'", "f"): "1a", ("f", "f'"): "1b"},
        ),
        "arrow_with_idempotent": category_from_table(
            ["a", "b"],
            {"1a": ("a", "a"), "1b": ("b", "b"), "f": ("a", "b"), "e": ("a", "a")},
            {"a": "1a", "b": "1b"},
            {("e", "e"): "e", ("f", "e"): "f"},
        ),
        "idempotent_plus_point": category_from_table(
            ["a", "b"],
            {"1a": ("a", "a"), "1b": ("b", "b"), "e": ("a", "a")},
            {"a": "1a", "b": "1b"},
            {("e", "e"): "e"},
        ),
        "Z2": monoid_category(["1", "s"], "1", {("s", "s"): "1"}),
        "idempotent_monoid": monoid_category(["1", "e"], "1", {("e", "e"): "e"}),
        "Z3": monoid_category(["1", "r", "r2"], "1", {("r", "r"): "r2", ("r", "r2"): "1", ("r2", "r"): "1", ("r2", "r2"): "r"}),
        "left_zero_2": monoid_category(
            ["1", "a", "b"], "1", {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"}
        ),
        "Z2xZ2": monoid_category(
            ["1", "p", "q", "pq"],
            "1",
            {
                ("p", "p"): "1", ("q", "q"): "1", ("pq", "pq"): "1",
                ("p", "q"): "pq", ("q", "p"): "pq",
                ("p", "pq"): "q", ("pq", "p"): "q",
                ("q", "pq"): "p", ("pq", "q"): "p",
            },
        ),
    }
    return cats


__all__ = [
    "AdjunctionReport",
    "ConfigError",
    "DiagramMorphism",
    "Failure",
    "GenericFamily",
    "InternalCategory",
    "InternalDiagram",
    "R",
    "R_mor",
    "U",
    "ValidationReport",
    "YonedaReport",
    "action_domain",
    "adjunction_transpose",
    "adjunction_untranspose",
    "category_from_json",
    "category_from_table",
    "category_to_json",
    "check_adjunction",
    "composable_pairs",
    "diagram_from_json",
    "diagram_to_json",
    "diagrams_over",
    "discrete_category",
    "funct_element",
    "funct_parts",
    "generic_family",
    "hom_fibration",
    "is_diagram_morphism",
    "load_category",
    "load_diagram",
    "monoid_category",
    "nat_transformations",
    "representable",
    "standard_categories",
    "validate_internal_category",
    "yoneda_check",
]
