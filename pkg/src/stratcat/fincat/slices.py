"""Slice categories, the pseudo dependent product and relative adjunctions.

For ``f : A -> B`` the functor ``pi_tilde(f, -)`` sends ``(D, γ)`` over ``A``
to the set of pairs ``<g, {b}>`` where ``g`` is a section of ``γ`` over the
fibre ``f⁻¹{b}``; it lands over ``TB`` rather than ``B``.  The pullback
functor ``f*`` is left adjoint to it relative to ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from ..hfset import HFSet, graph_of, graph_to_dict, kpair, singleton, unpair
from .limits import pullback
from .morphism import MorphismError, SetMor, T_mor, T_ob, compose, identity


@dataclass(frozen=True)
class SliceObj:
    total: HFSet
    base: HFSet
    proj: SetMor

    def __post_init__(self):
        if self.proj.domain != self.total or self.proj.codomain != self.base:
            raise MorphismError("projection does not run from total to base")

    def fibre(self, b: HFSet) -> HFSet:
        return HFSet(x for x in self.total if self.proj(x) == b)


def slice_of(proj: SetMor) -> SliceObj:
    return SliceObj(proj.domain, proj.codomain, proj)


def identity_slice(a: HFSet) -> SliceObj:
    return SliceObj(a, a, identity(a))


def slice_homset(x: SliceObj, y: SliceObj) -> list[SetMor]:
    """All maps ``h : X -> Y`` with ``y.proj ∘ h == x.proj``."""
    if x.base != y.base:
        raise MorphismError("slice objects live over different bases")
    fibres = {b: y.fibre(b).elements for b in y.base}
    dom = x.total.elements
    choices = [fibres[x.proj(p)] for p in dom]
    return [SetMor(x.total, y.total, dict(zip(dom, vals)), check=False) for vals in cartesian(*choices)]


def is_slice_mor(h: SetMor, x: SliceObj, y: SliceObj) -> bool:
    return h.domain == x.total and h.codomain == y.total and compose(y.proj, h) == x.proj


def pullback_along(f: SetMor, c: SliceObj) -> SliceObj:
    """``f*(C, ρ) = (C ×_B A, π₂)`` with elements ``<c, a>``."""
    if c.base != f.codomain:
        raise MorphismError("slice object is not over the codomain of f")
    pb = pullback(c.proj, f)
    return SliceObj(pb.obj, f.domain, pb.p2)


def pullback_along_mor(f: SetMor, h: SetMor, c: SliceObj, c2: SliceObj) -> SetMor:
    """``f*(h)`` for a slice map ``h : (C, ρ) -> (C', ρ')`` over ``B``."""
    src, dst = pullback_along(f, c), pullback_along(f, c2)
    out = {}
    for p in src.total:
        z, a = unpair(p)
        out[p] = kpair(h(z), a)
    return SetMor(src.total, dst.total, out, check=False)


def sigma(f: SetMor, d: SliceObj) -> SliceObj:
    """``Σ_f``: post-composition with ``f``."""
    return SliceObj(d.total, f.codomain, compose(f, d.proj))


def T_slice(c: SliceObj) -> SliceObj:
    """``(C, ρ) ↦ (TC, Tρ)`` over ``TB``."""
    return SliceObj(T_ob(c.total), T_ob(c.base), T_mor(c.proj))


def preimage_fibre(f: SetMor, b: HFSet) -> HFSet:
    return HFSet(a for a in f.domain if f(a) == b)


def _sections(fibre: HFSet, d: SliceObj) -> list[HFSet]:
    options = [d.fibre(a).elements for a in fibre]
    return [graph_of(dict(zip(fibre.elements, vals))) for vals in cartesian(*options)]


def pi_tilde(f: SetMor, d: SliceObj) -> SliceObj:
    """Object part of ``Π̃_f`` applied to ``(D, γ)`` over ``A``."""
    if d.base != f.domain:
        raise MorphismError("slice object is not over the domain of f")
    elems: dict[HFSet, HFSet] = {}
    for b in f.codomain:
        sb = singleton(b)
        for g in _sections(preimage_fibre(f, b), d):
            elems[kpair(g, sb)] = sb
    total = HFSet(elems)
    tb = T_ob(f.codomain)
    return SliceObj(total, tb, SetMor(total, tb, elems, check=False))


def pi_tilde_mor(f: SetMor, h: SetMor, d: SliceObj, d2: SliceObj) -> SetMor:
    """``Π̃_f(h)``: ``<g, {b}> ↦ <h ∘ g, {b}>``."""
    if not is_slice_mor(h, d, d2):
        raise MorphismError("h is not a morphism of slices over A")
    src, dst = pi_tilde(f, d), pi_tilde(f, d2)
    out = {}
    for p in src.total:
        g, sb = unpair(p)
        out[p] = kpair(graph_of({a: h(y) for a, y in graph_to_dict(g).items()}), sb)
    return SetMor(src.total, dst.total, out, check=False)


def pi_sigma(f: SetMor, c: SliceObj) -> SetMor:
    """Universal arrow ``σ : (TC, Tρ) -> Π̃_f f*(C, ρ)``; ``{c} ↦ λa.<c, a>``."""
    target = pi_tilde(f, pullback_along(f, c))
    out = {}
    for z in c.total:
        b = c.proj(z)
        fib = preimage_fibre(f, b)
        out[singleton(z)] = kpair(graph_of({a: kpair(z, a) for a in fib}), singleton(b))
    return SetMor(T_ob(c.total), target.total, out, check=False)


def m_acute(m: SetMor, f: SetMor, c: SliceObj, d: SliceObj) -> SetMor:
    """Transpose ``m : (TC, Tρ) -> Π̃_f(D, γ)`` to ``f*(C, ρ) -> (D, γ)``."""
    src = pullback_along(f, c)
    out = {}
    for p in src.total:
        z, a = unpair(p)
        g, _ = unpair(m(singleton(z)))
        out[p] = graph_to_dict(g)[a]
    return SetMor(src.total, d.total, out, check=False)


def xi_inverse(n: SetMor, f: SetMor, c: SliceObj, d: SliceObj) -> SetMor:
    """``n ↦ Π̃_f(n) ∘ σ``."""
    return compose(pi_tilde_mor(f, n, pullback_along(f, c), d), pi_sigma(f, c))


@dataclass
class UniversalArrowReport:
    sigma: SetMor
    sigma_acute_is_identity: bool
    factorization_ok: bool = True
    uniqueness_ok: bool = True
    bijection_ok: bool = True
    hom_counts: list[tuple[int, int]] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sigma_acute_is_identity and self.factorization_ok and self.uniqueness_ok and self.bijection_ok


def pi_tilde_universal(f: SetMor, c: SliceObj, targets: Iterable[SliceObj] | None = None) -> UniversalArrowReport:
    """Check that ``(σ, f*(C, ρ))`` is a ``Π̃_f``-universal arrow from ``(TC, Tρ)``.

    For each target ``(D, γ)`` over ``A`` every ``m`` into ``Π̃_f(D, γ)`` must
    factor as ``Π̃_f(ḿ) ∘ σ`` and ``ḿ`` must be the only slice map that does.
    When no targets are given, ``f*(C, ρ)`` and ``(A, id)`` are used.
    """
    if c.base != f.codomain:
        raise MorphismError("slice object is not over the codomain of f")
    fc = pullback_along(f, c)
    sig = pi_sigma(f, c)
    tc = T_slice(c)
    report = UniversalArrowReport(sig, m_acute(sig, f, c, fc) == identity(fc.total))
    if not report.sigma_acute_is_identity:
        report.witnesses.append({"obligation": 1, "sigma": repr(sig)})
    if targets is None:
        targets = [fc, identity_slice(f.domain)]
    for d in targets:
        pd = pi_tilde(f, d)
        left = slice_homset(tc, pd)
        right = slice_homset(fc, d)
        report.hom_counts.append((len(left), len(right)))
        pushed = {n: xi_inverse(n, f, c, d) for n in right}
        for m in left:
            ma = m_acute(m, f, c, d)
            if not is_slice_mor(ma, fc, d) or pushed.get(ma) != m:
                report.factorization_ok = False
                report.witnesses.append({"obligation": 2, "m": repr(m)})
                continue
            others = [n for n, back in pushed.items() if back == m and n != ma]
            if others:
                report.uniqueness_ok = False
                report.witnesses.append({"obligation": 3, "m": repr(m), "other": repr(others[0])})
        if len(left) != len(right) or len(set(pushed.values())) != len(right):
            report.bijection_ok = False
            report.witnesses.append({"obligation": "xi", "counts": [len(left), len(right)]})
    return report


# ---------------------------------------------------------------------------
# Composing relative adjunctions from explicit tables


@dataclass(frozen=True)
class FunctorTable:
    """An object assignment over a declared finite sample."""

    name: str
    table: Mapping[Hashable, Hashable]

    def __call__(self, x):
        try:
            return self.table[x]
        except KeyError:
            raise KeyError(f"{self.name} is not tabulated at {x!r}") from None


def _check_bijection(table: Mapping, dom: Sequence, cod: Sequence, what: str) -> None:
    if set(table) != set(dom):
        raise ValueError(f"{what}: table is not total on its hom-set")
    values = list(table.values())
    if len(set(values)) != len(values) or set(values) != set(cod):
        raise ValueError(f"{what}: table is not a bijection")


@dataclass
class DerivedAdjunction:
    ok: bool
    tables: dict


def derived_relative_adjunction_check(
    J: FunctorTable,
    G: FunctorTable,
    F: FunctorTable,
    H: FunctorTable,
    rel_bijection: Callable[[Hashable, Hashable], Mapping],
    adj_bijection: Callable[[Hashable, Hashable], Mapping],
    objects: Sequence,
    hom_c: Callable,
    hom_d: Callable,
    hom_e: Callable,
) -> DerivedAdjunction:
    """From ``F _J⊣ G`` and ``H ⊣ F`` build ``HF _J⊣ GF`` on a sample.

    ``rel_bijection(a, c)`` tabulates ``hom_C(Fa, c) -> hom_D(Ja, Gc)`` and
    ``adj_bijection(c, e)`` tabulates ``hom_E(Hc, e) -> hom_C(c, Fe)``.  Both
    are validated as bijections (``ValueError`` otherwise); the result
    composes them into ``hom_E(HFa, b) -> hom_D(Ja, GFb)`` for every pair of
    sample objects.
    """
    tables = {}
    ok = True
    for a in objects:
        for b in objects:
            fa, fb = F(a), F(b)
            adj = adj_bijection(fa, b)
            _check_bijection(adj, hom_e(H(fa), b), hom_c(fa, fb), f"{H.name} ⊣ {F.name} at ({a!r}, {b!r})")
            rel = rel_bijection(a, fb)
            _check_bijection(rel, hom_c(fa, fb), hom_d(J(a), G(fb)), f"{F.name} _{J.name}⊣ {G.name} at ({a!r}, {b!r})")
            composite = {x: rel[adj[x]] for x in adj}
            target = hom_d(J(a), G(fb))
            values = list(composite.values())
            if len(set(values)) != len(values) or set(values) != set(target):
                ok = False
            tables[(a, b)] = composite
    return DerivedAdjunction(ok, tables)


def sigma_pullback_bijection(f: SetMor, x: SliceObj, e: SliceObj) -> dict[SetMor, SetMor]:
    """``Σ_f ⊣ f*``: ``hom(Σ_f X, E) -> hom(X, f* E)``, ``u ↦ <u, x.proj>``."""
    target = pullback_along(f, e)
    out = {}
    for u in slice_homset(sigma(f, x), e):
        out[u] = SetMor(x.total, target.total, {p: kpair(u(p), x.proj(p)) for p in x.total}, check=False)
    return out


def pullback_pi_bijection(f: SetMor, c: SliceObj, d: SliceObj) -> dict[SetMor, SetMor]:
    """``f* _T⊣ Π̃_f``: ``hom(f*C, D) -> hom(TC, Π̃_f D)``, ``n ↦ Π̃_f(n) ∘ σ``."""
    return {n: xi_inverse(n, f, c, d) for n in slice_homset(pullback_along(f, c), d)}


__all__ = [
    "DerivedAdjunction",
    "FunctorTable",
    "SliceObj",
    "T_slice",
    "UniversalArrowReport",
    "derived_relative_adjunction_check",
    "identity_slice",
    "is_slice_mor",
    "m_acute",
    "pi_sigma",
    "pi_tilde",
    "pi_tilde_mor",
    "pi_tilde_universal",
    "preimage_fibre",
    "pullback_along",
    "pullback_along_mor",
    "pullback_pi_bijection",
    "sigma",
    "sigma_pullback_bijection",
    "slice_homset",
    "slice_of",
    "xi_inverse",
]
