"""Exhaustive verification of the stratified-topos axioms on a finite sample.

Every check enumerates morphisms between small HF sets and compares the
constructed data against its universal property.  Failures keep the
offending values (in HF notation) so they can be replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterable, Sequence

from ..hfset import HFSet, kpair, sets_of_rank_at_most, singleton, subsets
from ..hfset import product as set_product
from . import closure as cl
from . import limits as lim
from . import slices as sl
from .morphism import SetMor, T_inverse, T_mor, T_ob, compose, hom_count, homset, identity, injections

AXIOMS = {
    "1": "regular category with finite coproducts and a subobject classifier",
    "2": "T is a full embedding creating finite limits",
    "3a": "natural isomorphism i_A : TA = 1 => A",
    "3b": "extranatural alpha_A : 1 -> A => A",
    "3c": "beta : TA => TB -> (X => A) => (X => B), natural in A, B and extranatural in X",
    "3d": "natural isomorphism e_AB : TA => TB = T(A => B)",
    "3e": "coherence identities between the transformations",
    "4": "f* is a T_B-relative left adjoint of Pi~_f",
    "5": "Sub(TA x -) is representable",
}

MAX_RANK = 4
DEFAULT_OBJECT_CAP = 6
DEFAULT_INSTANCE_CAP = 400


@dataclass
class AxiomResult:
    axiom: str
    name: str
    status: str = "PASS"
    checks: int = 0
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "name": self.name,
            "status": self.status,
            "checks": self.checks,
            "witness": self.witness or {},
        }


@dataclass
class SpeReport:
    rank_budget: int
    seed: int
    objects: list[HFSet]
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[tuple[str, dict]]:
        return [(r.axiom, r.witness) for r in self.results if r.status == "FAIL"]

    def status(self, axiom: str) -> str:
        return next(r.status for r in self.results if r.axiom == axiom)

    @property
    def all_pass(self) -> bool:
        return all(r.status in ("PASS", "UNCHECKED") for r in self.results)

    def to_json(self) -> dict:
        return {
            "rank_budget": self.rank_budget,
            "seed": self.seed,
            "objects": [repr(o) for o in self.objects],
            "entries": [r.to_json() for r in self.results],
        }


class _Checker:
    def __init__(self, axiom: str):
        self.result = AxiomResult(axiom, AXIOMS[axiom])

    def __call__(self, ok: bool, construction: str, **values) -> bool:
        self.result.checks += 1
        if not ok and self.result.status != "FAIL":
            self.result.status = "FAIL"
            self.result.witness = {"construction": construction, **{k: repr(v) for k, v in values.items()}}
        return ok


class _Sampler:
    def __init__(self, seed: int, cap: int):
        self.rng = random.Random(seed)
        self.cap = cap

    def __call__(self, items: Iterable) -> list:
        items = list(items)
        if len(items) <= self.cap:
            return items
        picked = sorted(self.rng.sample(range(len(items)), self.cap))
        return [items[i] for i in picked]


def sample_objects(rank_budget: int, seed: int, cap: int = DEFAULT_OBJECT_CAP, max_card: int = 2) -> list[HFSet]:
    """Objects of rank ``<= rank_budget`` with at most ``max_card`` elements."""
    pool = [x for x in sets_of_rank_at_most(rank_budget) if len(x) <= max_card]
    if len(pool) > cap:
        pool = sorted(random.Random(seed).sample(pool, cap))
    return pool


def _homs(a: HFSet, b: HFSet) -> list[SetMor]:
    return list(homset(a, b))


def _bijective_by(fn, source: Sequence, target: Sequence) -> bool:
    images = [fn(x) for x in source]
    return len(set(images)) == len(images) and set(images) == set(target)


# ---------------------------------------------------------------------------


def _check_regular(objs, sample, chk: _Checker) -> None:
    one = lim.terminal()
    for a in objs:
        chk(hom_count(a, one) == 1, "terminal", object=a)
        chk(hom_count(lim.initial(), a) == 1, "initial", object=a)
    for a, b in cartesian(objs, repeat=2):
        prod = lim.product(a, b)
        cop = lim.coproduct(a, b)
        for l in objs:
            legs = [(f, g) for f in _homs(l, a) for g in _homs(l, b)]
            chk(
                _bijective_by(lambda u: (compose(prod.p1, u), compose(prod.p2, u)), _homs(l, prod.obj), legs),
                "product universal property",
                left=a,
                right=b,
                test_object=l,
            )
            colegs = [(f, g) for f in _homs(a, l) for g in _homs(b, l)]
            chk(
                _bijective_by(lambda u: (compose(u, cop.inl), compose(u, cop.inr)), _homs(cop.obj, l), colegs),
                "coproduct universal property",
                left=a,
                right=b,
                test_object=l,
            )
        for f, g in sample(cartesian(_homs(a, b), repeat=2)):
            eq = lim.equalizer(f, g)
            chk(lim.is_equalizer_cone(eq.incl, f, g), "equalizer cone", f=f, g=g)
            for l in objs:
                cone = [k for k in _homs(l, a) if compose(f, k) == compose(g, k)]
                chk(_bijective_by(lambda u: compose(eq.incl, u), _homs(l, eq.obj), cone), "equalizer universal property", f=f, g=g, test_object=l)
        for f in _homs(a, b):
            # image factorization through the coequalizer of the kernel pair
            kp = lim.kernel_pair(f)
            coeq = lim.coequalizer(kp.p1, kp.p2)
            fact = lim.image_factorization(f)
            chk(fact.mono.is_injective() and compose(fact.mono, fact.epi) == f, "image factorization", f=f)
            comparison = coeq.factor(fact.epi)
            chk(comparison.is_bijective(), "epi part is the coequalizer of the kernel pair", f=f)
            if f.is_surjective():
                chk(coeq.factor(f).is_bijective(), "surjection is regular", f=f)
    # pullbacks and pullback-stability of regular epis
    cospans = [(f, g) for a, b, c in cartesian(objs, repeat=3) for f in _homs(a, c) for g in _homs(b, c)]
    for f, g in sample(cospans):
        pb = lim.pullback(f, g)
        chk(lim.is_pullback_cone(pb.p1, pb.p2, f, g), "pullback cone", f=f, g=g)
        for l in objs:
            cones = [(h, k) for h in _homs(l, f.domain) for k in _homs(l, g.domain) if compose(f, h) == compose(g, k)]
            chk(
                _bijective_by(lambda u: (compose(pb.p1, u), compose(pb.p2, u)), _homs(l, pb.obj), cones),
                "pullback universal property",
                f=f,
                g=g,
                test_object=l,
            )
        if f.is_surjective():
            chk(pb.p2.is_surjective(), "regular epi stable under pullback", e=f, along=g)
    # subobject classifier
    omega, true = lim.subobject_classifier()
    for a in objs:
        for s in objs:
            for m in injections(s, a):
                classifying = [phi for phi in _homs(a, omega) if lim.classifies(phi, m)]
                chk(classifying == [lim.char(m)], "unique characteristic map", mono=m)


def _check_T(objs, sample, chk: _Checker) -> None:
    for a, b in cartesian(objs, repeat=2):
        chk((T_ob(a) == T_ob(b)) == (a == b), "T injective on objects", left=a, right=b)
        homs = _homs(a, b)
        chk(_bijective_by(T_mor, homs, _homs(T_ob(a), T_ob(b))), "T full and faithful", domain=a, codomain=b)
        chk(T_mor(identity(a)) == identity(T_ob(a)), "T preserves identities", object=a)
        for c in objs:
            for f, g in sample(cartesian(homs, _homs(b, c))):
                chk(T_mor(compose(g, f)) == compose(T_mor(g), T_mor(f)), "T preserves composition", f=f, g=g)
        prod = lim.product(a, b)
        t_prod = lim.product(T_ob(a), T_ob(b))
        chk(lim.is_product_cone(T_mor(prod.p1), T_mor(prod.p2), T_ob(a), T_ob(b)), "T preserves products", left=a, right=b)
        chk(len(t_prod.obj) == len(T_ob(prod.obj)), "limit of T-diagram lifts (products)", left=a, right=b)
        for l in objs:
            for p, q in sample(cartesian(_homs(l, a), _homs(l, b))):
                chk(
                    lim.is_product_cone(T_mor(p), T_mor(q), T_ob(a), T_ob(b)) == lim.is_product_cone(p, q, a, b),
                    "T reflects products",
                    p=p,
                    q=q,
                )
        for f, g in sample(cartesian(homs, repeat=2)):
            eq = lim.equalizer(f, g)
            chk(lim.is_equalizer_cone(T_mor(eq.incl), T_mor(f), T_mor(g)), "T preserves equalizers", f=f, g=g)
            for l in objs:
                for e in _homs(l, a):
                    chk(
                        lim.is_equalizer_cone(T_mor(e), T_mor(f), T_mor(g)) == lim.is_equalizer_cone(e, f, g),
                        "T reflects equalizers",
                        e=e,
                        f=f,
                        g=g,
                    )
    one = lim.terminal()
    chk(len(T_ob(one)) == 1, "T preserves the terminal object")
    cospans = [(f, g) for a, b, c in cartesian(objs, repeat=3) for f in _homs(a, c) for g in _homs(b, c)]
    for f, g in sample(cospans):
        pb = lim.pullback(f, g)
        chk(lim.is_pullback_cone(T_mor(pb.p1), T_mor(pb.p2), T_mor(f), T_mor(g)), "T preserves pullbacks", f=f, g=g)
        for l in objs:
            for p, q in sample(cartesian(_homs(l, f.domain), _homs(l, g.domain))):
                chk(
                    lim.is_pullback_cone(T_mor(p), T_mor(q), T_mor(f), T_mor(g)) == lim.is_pullback_cone(p, q, f, g),
                    "T reflects pullbacks",
                    p=p,
                    q=q,
                )


def _check_i(objs, chk: _Checker) -> None:
    one = lim.terminal()
    for a in objs:
        i_a = cl.i_iso(a)
        chk(i_a.is_bijective() and len(T_ob(a)) == len(cl.exp_set(one, a)) == len(a), "i_A bijective", object=a)
        for b in objs:
            for f in _homs(a, b):
                lhs = compose(cl.post_exp(one, f), i_a)
                rhs = compose(cl.i_iso(b), T_mor(f))
                chk(lhs == rhs, "i natural", f=f)


def _check_alpha(objs, chk: _Checker) -> None:
    for a, b in cartesian(objs, repeat=2):
        for f in _homs(a, b):
            lhs = compose(cl.post_exp(a, f), cl.alpha(a))
            rhs = compose(cl.exp_map(f, identity(b)), cl.alpha(b))
            chk(lhs == rhs, "alpha extranatural", f=f)
            chk(lhs(lhs.domain.elements[0]) == f.graph, "alpha names identities", f=f)


def _check_beta(objs, sample, chk: _Checker) -> None:
    for a, b, x in sample(cartesian(objs, repeat=3)):
        beta = cl.beta(a, b, x)
        for k in beta.domain:
            phi = T_inverse(cl.graph_mor(k, T_ob(a), T_ob(b)))
            expected = cl.post_exp(x, phi).graph
            chk(beta(k) == expected, "beta acts by post-composition", a=a, b=b, x=x, k=k)
        for a2, b2 in sample(cartesian(objs, repeat=2)):
            for ma, mb in sample(cartesian(_homs(a2, a), _homs(b, b2))):
                lhs = compose(cl.beta(a2, b2, x), cl.exp_map(T_mor(ma), T_mor(mb)))
                rhs = compose(cl.exp_map(cl.post_exp(x, ma), cl.post_exp(x, mb)), beta)
                chk(lhs == rhs, "beta natural in A, B", a=ma, b=mb, x=x)
        for x2 in objs:
            beta2 = cl.beta(a, b, x2)
            for mx in _homs(x2, x):
                pre_a = cl.exp_map(mx, identity(a))
                pre_b = cl.exp_map(mx, identity(b))
                for k in beta.domain:
                    left = compose(pre_b, cl.graph_mor(beta(k), cl.exp_set(x, a), cl.exp_set(x, b)))
                    right = compose(cl.graph_mor(beta2(k), cl.exp_set(x2, a), cl.exp_set(x2, b)), pre_a)
                    chk(left == right, "beta extranatural in X", x_map=mx, k=k)


def _check_e(objs, sample, chk: _Checker) -> None:
    for a, b in cartesian(objs, repeat=2):
        fwd, bwd = cl.e_iso(a, b)
        chk(compose(bwd, fwd) == identity(fwd.domain) and compose(fwd, bwd) == identity(bwd.domain), "e inverse pair", a=a, b=b)
        for a2, b2 in sample(cartesian(objs, repeat=2)):
            fwd2, _ = cl.e_iso(a2, b2)
            for f, g in sample(cartesian(_homs(a2, a), _homs(b, b2))):
                lhs = compose(fwd2, T_mor(cl.exp_map(f, g)))
                rhs = compose(cl.exp_map(T_mor(f), T_mor(g)), fwd)
                chk(lhs == rhs, "e natural", f=f, g=g)


def _check_pi(objs, sample, chk: _Checker) -> None:
    instances = []
    for a, b in cartesian(objs, repeat=2):
        for f in _homs(a, b):
            for c in objs:
                for rho in _homs(c, b):
                    instances.append((f, sl.slice_of(rho)))
    for f, cs in sample(instances):
        targets = [sl.pullback_along(f, cs), sl.identity_slice(f.domain)]
        targets += [sl.slice_of(g) for d in objs for g in _homs(d, f.domain)]
        report = sl.pi_tilde_universal(f, cs, sample(targets))
        chk(report.ok, "Pi~ universal arrow", f=f, rho=cs.proj, details=report.witnesses[:1])
    for a, b in cartesian(objs, repeat=2):
        for f in sample(_homs(a, b)):
            for d in objs:
                for gamma in _homs(d, a):
                    ds = sl.slice_of(gamma)
                    chk(sl.pi_tilde_mor(f, identity(d), ds, ds) == identity(sl.pi_tilde(f, ds).total), "Pi~ preserves identities", f=f, gamma=gamma)


def _check_sub(objs, chk: _Checker) -> None:
    for a, b in cartesian(objs, repeat=2):
        amb = set_product(T_ob(a), b)
        pa, _ = cl.power_obj(a)
        candidates = _homs(b, pa)
        for rel in subsets(amb):
            r = lim.SubobjectRep(rel, amb)
            rhat = cl.p_transpose(r, a, b)
            chk(cl.transpose_square_commutes(r, a, b, rhat), "transpose square commutes", a=a, b=b, relation=rel)
            good = [phi for phi in candidates if cl.transpose_square_commutes(r, a, b, phi)]
            chk(good == [rhat], "transpose unique", a=a, b=b, relation=rel)
            for b2 in objs:
                for h in _homs(b2, b):
                    pulled = HFSet(kpair(singleton(x), y) for y in b2 for x in a if kpair(singleton(x), h(y)) in rel)
                    r2 = lim.SubobjectRep(pulled, set_product(T_ob(a), b2))
                    chk(cl.p_transpose(r2, a, b2) == compose(rhat, h), "transpose natural in B", relation=rel, h=h)


def verify_spe(
    rank_budget: int = 2,
    seed: int = 0,
    object_cap: int = DEFAULT_OBJECT_CAP,
    instance_cap: int = DEFAULT_INSTANCE_CAP,
) -> SpeReport:
    """Run every axiom check over objects of rank ``<= rank_budget``."""
    if not 0 <= rank_budget <= MAX_RANK:
        raise ValueError(f"rank_budget must lie in 0..{MAX_RANK}")
    objs = sample_objects(rank_budget, seed, object_cap)
    sample = _Sampler(seed, instance_cap)
    report = SpeReport(rank_budget, seed, objs)

    steps = [
        ("1", lambda c: _check_regular(objs, sample, c)),
        ("2", lambda c: _check_T(objs, sample, c)),
        ("3a", lambda c: _check_i(objs, c)),
        ("3b", lambda c: _check_alpha(objs, c)),
        ("3c", lambda c: _check_beta(objs, sample, c)),
        ("3d", lambda c: _check_e(objs, sample, c)),
        ("4", lambda c: _check_pi(objs, sample, c)),
        ("5", lambda c: _check_sub(objs, c)),
    ]
    for key, run in steps:
        chk = _Checker(key)
        run(chk)
        report.results.append(chk.result)
    unchecked = AxiomResult("3e", AXIOMS["3e"], status="UNCHECKED")
    report.results.insert(6, unchecked)
    return report
