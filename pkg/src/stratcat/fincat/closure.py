"""Function sets, the T-relative adjunctions and pseudo-powerobjects."""

from __future__ import annotations

from ..hfset import (
    EMPTY,
    HFSet,
    apply_graph,
    graph_of,
    graph_to_dict,
    kpair,
    powerset,
    singleton,
    union_big,
    unpair,
)
from ..hfset import product as set_product
from .limits import FALSE, OMEGA, TRUE, SubobjectRep, char, product_map, terminal
from .morphism import MorphismError, SetMor, T_inverse, T_mor, T_ob, compose, homset, identity


def exp_set(a: HFSet, b: HFSet) -> HFSet:
    """``A ⇒ B``: the set of graphs of all functions ``A -> B``."""
    return HFSet(f.graph for f in homset(a, b))


def graph_mor(graph: HFSet, a: HFSet, b: HFSet) -> SetMor:
    """Read an element of ``A ⇒ B`` back as a morphism."""
    return SetMor(a, b, graph_to_dict(graph), check=False)


def ev_prime(a: HFSet, b: HFSet) -> SetMor:
    """``ev' : TA × (A ⇒ B) -> TB``, ``<{x}, f> ↦ {f(x)}``."""
    dom = set_product(T_ob(a), exp_set(a, b))
    out = {}
    for p in dom:
        sx, f = unpair(p)
        (x,) = sx.elements
        out[p] = singleton(apply_graph(f, x))
    return SetMor(dom, T_ob(b), out, check=False)


def exp_map(f: SetMor, g: SetMor) -> SetMor:
    """``f ⇒ g : (A ⇒ B) -> (A' ⇒ B')`` for ``f : A' -> A``, ``g : B -> B'``; ``h ↦ g∘h∘f``."""
    src = exp_set(f.codomain, g.domain)
    dst = exp_set(f.domain, g.codomain)
    out = {}
    for h in src:
        hd = graph_to_dict(h)
        out[h] = graph_of({x: g(hd[f(x)]) for x in f.domain})
    return SetMor(src, dst, out, check=False)


def post_exp(a: HFSet, g: SetMor) -> SetMor:
    """``A ⇒ g``, post-composition with ``g``."""
    return exp_map(identity(a), g)


def _check_shape(f: SetMor, domain: HFSet, codomain: HFSet, what: str) -> None:
    if f.domain != domain or f.codomain != codomain:
        raise MorphismError(f"{what} has the wrong domain or codomain")


# ---------------------------------------------------------------------------
# (TA × -) ⊣_T (A ⇒ -)


def theta(f: SetMor, a: HFSet, b: HFSet, c: HFSet) -> SetMor:
    """Transpose ``f : TA × C -> TB`` to ``C -> (A ⇒ B)``: ``c ↦ λa.⋃ f(<{a}, c>)``."""
    _check_shape(f, set_product(T_ob(a), c), T_ob(b), "theta argument")
    out = {}
    for z in c:
        out[z] = graph_of({x: union_big(f(kpair(singleton(x), z))) for x in a})
    return SetMor(c, exp_set(a, b), out, check=False)


def theta_inv(m: SetMor, a: HFSet, b: HFSet, c: HFSet) -> SetMor:
    """Inverse transpose ``m : C -> (A ⇒ B)`` to ``<{a}, c> ↦ {m(c)(a)}``."""
    _check_shape(m, c, exp_set(a, b), "theta_inv argument")
    dom = set_product(T_ob(a), c)
    out = {}
    for p in dom:
        sx, z = unpair(p)
        (x,) = sx.elements
        out[p] = singleton(apply_graph(m(z), x))
    return SetMor(dom, T_ob(b), out, check=False)


def counit_factor(f: SetMor, a: HFSet, b: HFSet, c: HFSet) -> SetMor:
    """``ev' ∘ (1_TA × theta(f))``, which must equal ``f``."""
    return compose(ev_prime(a, b), product_map(identity(T_ob(a)), theta(f, a, b, c)))


# ---------------------------------------------------------------------------
# (A × -) _T⊣ (A ⇒ -)


def unit_k(a: HFSet, c: HFSet) -> SetMor:
    """``k_C : TC -> A ⇒ (A × C)``, ``{c} ↦ λa.<a, c>``."""
    out = {singleton(z): graph_of({x: kpair(x, z) for x in a}) for z in c}
    return SetMor(T_ob(c), exp_set(a, set_product(a, c)), out, check=False)


def unit_transpose(f: SetMor, a: HFSet, b: HFSet, c: HFSet) -> SetMor:
    """``f' : A × C -> B``, ``<a, c> ↦ f({c})(a)``, for ``f : TC -> A ⇒ B``."""
    _check_shape(f, T_ob(c), exp_set(a, b), "unit_transpose argument")
    dom = set_product(a, c)
    out = {}
    for p in dom:
        x, z = unpair(p)
        out[p] = apply_graph(f(singleton(z)), x)
    return SetMor(dom, b, out, check=False)


def unit_factorization(f: SetMor, a: HFSet, b: HFSet, c: HFSet) -> SetMor:
    """``(A ⇒ f') ∘ k_C``, which must equal ``f``."""
    return compose(post_exp(a, unit_transpose(f, a, b, c)), unit_k(a, c))


# ---------------------------------------------------------------------------
# T preserves ⇒ and the coherence maps


def e_iso(a: HFSet, b: HFSet) -> tuple[SetMor, SetMor]:
    """Mutually inverse maps ``T(A ⇒ B) -> (TA ⇒ TB)`` and back; ``{h} ↦ Th``."""
    t_exp = T_ob(exp_set(a, b))
    exp_t = exp_set(T_ob(a), T_ob(b))
    fwd = {}
    for sh in t_exp:
        (h,) = sh.elements
        fwd[sh] = T_mor(graph_mor(h, a, b)).graph
    bwd = {v: k for k, v in fwd.items()}
    return SetMor(t_exp, exp_t, fwd), SetMor(exp_t, t_exp, bwd)


def i_iso(a: HFSet) -> SetMor:
    """``i_A : TA ≅ 1 ⇒ A``, ``{x} ↦ {<∅, x>}``."""
    return SetMor(T_ob(a), exp_set(terminal(), a), {singleton(x): graph_of({EMPTY: x}) for x in a}, check=False)


def alpha(a: HFSet) -> SetMor:
    """``α_A : 1 -> A ⇒ A`` naming the identity."""
    return SetMor(terminal(), exp_set(a, a), {EMPTY: identity(a).graph}, check=False)


def beta(a: HFSet, b: HFSet, x: HFSet) -> SetMor:
    """``β : TA ⇒ TB -> (X ⇒ A) ⇒ (X ⇒ B)``, sending ``Tφ`` to post-composition with ``φ``."""
    src = exp_set(T_ob(a), T_ob(b))
    dst = exp_set(exp_set(x, a), exp_set(x, b))
    out = {}
    for k in src:
        phi = T_inverse(graph_mor(k, T_ob(a), T_ob(b)))
        out[k] = post_exp(x, phi).graph
    return SetMor(src, dst, out, check=False)


# ---------------------------------------------------------------------------
# Pseudo-powerobjects


def power_obj(a: HFSet) -> tuple[HFSet, SubobjectRep]:
    """``PA`` with the membership relation ``{<{x}, S> | x ∈ S} ⊆ TA × PA``."""
    pa = powerset(a)
    rel = HFSet(kpair(singleton(x), s) for s in pa for x in s)
    return pa, SubobjectRep(rel, set_product(T_ob(a), pa))


def p_transpose(r: SubobjectRep, a: HFSet, b: HFSet) -> SetMor:
    """``r̂ : B -> PA``, ``b ↦ {x ∈ A | <{x}, b> ∈ R}``."""
    if r.ambient != set_product(T_ob(a), b):
        raise MorphismError("relation is not a subobject of TA × B")
    out = {y: HFSet(x for x in a if kpair(singleton(x), y) in r.subset) for y in b}
    return SetMor(b, powerset(a), out, check=False)


def transpose_square_commutes(r: SubobjectRep, a: HFSet, b: HFSet, rhat: SetMor) -> bool:
    """``∈_A ∘ (1_TA × r̂) == char(R)`` as maps ``TA × B -> 2``."""
    pa, mem = power_obj(a)
    if rhat.domain != b or rhat.codomain != pa:
        return False
    chi_mem = char(mem.inclusion())
    return compose(chi_mem, product_map(identity(T_ob(a)), rhat)) == char(r.inclusion())


def relation_of_transpose(rhat: SetMor, a: HFSet) -> SubobjectRep:
    """Pull the membership relation back along ``1 × r̂``."""
    b = rhat.domain
    rel = HFSet(kpair(singleton(x), y) for y in b for x in rhat(y) if x in a)
    return SubobjectRep(rel, set_product(T_ob(a), b))


__all__ = [
    "FALSE",
    "OMEGA",
    "TRUE",
    "alpha",
    "beta",
    "counit_factor",
    "e_iso",
    "ev_prime",
    "exp_map",
    "exp_set",
    "graph_mor",
    "i_iso",
    "p_transpose",
    "post_exp",
    "power_obj",
    "relation_of_transpose",
    "theta",
    "theta_inv",
    "transpose_square_commutes",
    "unit_factorization",
    "unit_k",
    "unit_transpose",
]
