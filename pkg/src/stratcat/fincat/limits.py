"""Finite limits, coproducts, coequalizers and the subobject classifier."""

from __future__ import annotations

from dataclasses import dataclass

from ..hfset import (
    EMPTY,
    LEFT_TAG,
    RIGHT_TAG,
    HFSet,
    disjoint_union,
    kpair,
    singleton,
    union_big,
    unpair,
)
from ..hfset import product as set_product
from .morphism import MorphismError, SetMor, compose, identity


def terminal() -> HFSet:
    return singleton(EMPTY)


def initial() -> HFSet:
    return EMPTY


def bang(a: HFSet) -> SetMor:
    """The unique map ``a -> 1``."""
    return SetMor(a, terminal(), {x: EMPTY for x in a}, check=False)


def from_initial(b: HFSet) -> SetMor:
    return SetMor(EMPTY, b, {}, check=False)


@dataclass(frozen=True)
class Product:
    obj: HFSet
    left: HFSet
    right: HFSet
    p1: SetMor
    p2: SetMor

    def pair(self, f: SetMor, g: SetMor) -> SetMor:
        """Mediating map ``<f, g>`` for a cone ``(f, g)``."""
        if f.domain != g.domain or f.codomain != self.left or g.codomain != self.right:
            raise MorphismError("cone does not match the product")
        return SetMor(f.domain, self.obj, {x: kpair(f(x), g(x)) for x in f.domain}, check=False)


def product(a: HFSet, b: HFSet) -> Product:
    obj = set_product(a, b)
    p1 = SetMor(obj, a, {p: unpair(p)[0] for p in obj}, check=False)
    p2 = SetMor(obj, b, {p: unpair(p)[1] for p in obj}, check=False)
    return Product(obj, a, b, p1, p2)


def product_map(f: SetMor, g: SetMor) -> SetMor:
    """``f × g``."""
    src = set_product(f.domain, g.domain)
    dst = set_product(f.codomain, g.codomain)
    out = {}
    for p in src:
        a, b = unpair(p)
        out[p] = kpair(f(a), g(b))
    return SetMor(src, dst, out, check=False)


@dataclass(frozen=True)
class Coproduct:
    obj: HFSet
    left: HFSet
    right: HFSet
    inl: SetMor
    inr: SetMor

    def copair(self, f: SetMor, g: SetMor) -> SetMor:
        if f.codomain != g.codomain or f.domain != self.left or g.domain != self.right:
            raise MorphismError("cocone does not match the coproduct")
        out = {kpair(a, LEFT_TAG): f(a) for a in self.left}
        out.update({kpair(b, RIGHT_TAG): g(b) for b in self.right})
        return SetMor(self.obj, f.codomain, out, check=False)


def coproduct(a: HFSet, b: HFSet) -> Coproduct:
    obj = disjoint_union(a, b)
    inl = SetMor(a, obj, {x: kpair(x, LEFT_TAG) for x in a}, check=False)
    inr = SetMor(b, obj, {y: kpair(y, RIGHT_TAG) for y in b}, check=False)
    return Coproduct(obj, a, b, inl, inr)


def coproduct_map(f: SetMor, g: SetMor) -> SetMor:
    """``f + g : A + C -> B + D``."""
    src = coproduct(f.domain, g.domain)
    dst = coproduct(f.codomain, g.codomain)
    return src.copair(compose(dst.inl, f), compose(dst.inr, g))


@dataclass(frozen=True)
class Equalizer:
    obj: HFSet
    incl: SetMor
    f: SetMor
    g: SetMor

    def factor(self, k: SetMor) -> SetMor:
        """The unique ``u`` with ``incl ∘ u = k`` for ``k`` equalizing f, g."""
        if compose(self.f, k) != compose(self.g, k):
            raise MorphismError("map does not equalize the pair")
        return SetMor(k.domain, self.obj, k.mapping, check=False)


def _check_parallel(f: SetMor, g: SetMor) -> None:
    if f.domain != g.domain or f.codomain != g.codomain:
        raise MorphismError("expected a parallel pair of morphisms")


def equalizer(f: SetMor, g: SetMor) -> Equalizer:
    _check_parallel(f, g)
    obj = HFSet(x for x in f.domain if f(x) == g(x))
    return Equalizer(obj, SetMor(obj, f.domain, {x: x for x in obj}, check=False), f, g)


@dataclass(frozen=True)
class Pullback:
    obj: HFSet
    p1: SetMor
    p2: SetMor
    f: SetMor
    g: SetMor

    def factor(self, h: SetMor, k: SetMor) -> SetMor:
        if compose(self.f, h) != compose(self.g, k):
            raise MorphismError("cone does not commute")
        return SetMor(h.domain, self.obj, {x: kpair(h(x), k(x)) for x in h.domain}, check=False)


def pullback(f: SetMor, g: SetMor) -> Pullback:
    """Pullback of the cospan ``A -f-> C <-g- B`` as pairs ``<a, b>``."""
    if f.codomain != g.codomain:
        raise MorphismError("expected a cospan")
    by_value: dict[HFSet, list[HFSet]] = {}
    for b in g.domain:
        by_value.setdefault(g(b), []).append(b)
    pairs = {}
    for a in f.domain:
        for b in by_value.get(f(a), ()):
            pairs[kpair(a, b)] = (a, b)
    obj = HFSet(pairs)
    p1 = SetMor(obj, f.domain, {p: ab[0] for p, ab in pairs.items()}, check=False)
    p2 = SetMor(obj, g.domain, {p: ab[1] for p, ab in pairs.items()}, check=False)
    return Pullback(obj, p1, p2, f, g)


def kernel_pair(f: SetMor) -> Pullback:
    return pullback(f, f)


# ---------------------------------------------------------------------------
# Cone recognisers (used for creation/reflection of limits)


def is_product_cone(p: SetMor, q: SetMor, a: HFSet, b: HFSet) -> bool:
    if p.domain != q.domain or p.codomain != a or q.codomain != b:
        return False
    return product(a, b).pair(p, q).is_bijective()


def is_equalizer_cone(e: SetMor, f: SetMor, g: SetMor) -> bool:
    if e.codomain != f.domain or compose(f, e) != compose(g, e):
        return False
    return e.is_injective() and e.image() == equalizer(f, g).obj


def is_pullback_cone(p: SetMor, q: SetMor, f: SetMor, g: SetMor) -> bool:
    if p.domain != q.domain or p.codomain != f.domain or q.codomain != g.domain:
        return False
    if compose(f, p) != compose(g, q):
        return False
    return pullback(f, g).factor(p, q).is_bijective()


# ---------------------------------------------------------------------------
# Coequalizers


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the canonically least element as root
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def equivalence_classes(b: HFSet, pairs) -> list[HFSet]:
    """Classes of the least equivalence relation on ``b`` containing ``pairs``."""
    uf = _UnionFind(b.elements)
    for x, y in pairs:
        uf.union(x, y)
    classes: dict[HFSet, list[HFSet]] = {}
    for x in b:
        classes.setdefault(uf.find(x), []).append(x)
    return sorted(HFSet(c) for c in classes.values())


@dataclass(frozen=True)
class Coequalizer:
    obj: HFSet
    quotient: SetMor
    classes: tuple[HFSet, ...]

    def factor(self, k: SetMor) -> SetMor:
        """The unique ``u`` with ``u ∘ quotient = k`` for ``k`` constant on classes."""
        out = {}
        for cls in self.classes:
            values = {k(x) for x in cls}
            if len(values) != 1:
                raise MorphismError(f"map is not constant on the class {cls!r}")
            out[min(cls)] = values.pop()
        return SetMor(self.obj, k.codomain, out, check=False)


def coequalizer_from_classes(b: HFSet, classes) -> Coequalizer:
    classes = tuple(sorted(classes))
    reps = {}
    for cls in classes:
        rep = min(cls)
        for x in cls:
            reps[x] = rep
    obj = HFSet(min(c) for c in classes)
    return Coequalizer(obj, SetMor(b, obj, reps, check=False), classes)


def coequalizer(f: SetMor, g: SetMor) -> Coequalizer:
    """Quotient of the codomain by the equivalence generated by ``f(a) ~ g(a)``.

    Each class is represented by its least member in the canonical HF order.
    """
    _check_parallel(f, g)
    return coequalizer_from_classes(f.codomain, equivalence_classes(f.codomain, ((f(a), g(a)) for a in f.domain)))


def ptj_from_partition(partition: HFSet) -> tuple[HFSet, SetMor, SetMor]:
    """A parallel pair whose induced partition is ``partition``."""
    blocks = partition.elements
    seen: set[HFSet] = set()
    for block in blocks:
        if not block:
            raise ValueError("partition blocks must be nonempty")
        if seen & block.as_frozenset():
            raise ValueError("partition blocks overlap")
        seen |= block.as_frozenset()
    b = union_big(partition)
    pairs = {kpair(x, y): (x, y) for block in blocks for x in block for y in block}
    a = HFSet(pairs)
    f = SetMor(a, b, {p: xy[0] for p, xy in pairs.items()}, check=False)
    g = SetMor(a, b, {p: xy[1] for p, xy in pairs.items()}, check=False)
    return a, f, g


@dataclass(frozen=True)
class ImageFactorization:
    image: HFSet
    epi: SetMor
    mono: SetMor


def image_factorization(f: SetMor) -> ImageFactorization:
    img = f.image()
    return ImageFactorization(
        img,
        SetMor(f.domain, img, f.mapping, check=False),
        SetMor(img, f.codomain, {y: y for y in img}, check=False),
    )


# ---------------------------------------------------------------------------
# Subobject classifier


FALSE = EMPTY
TRUE = singleton(EMPTY)
OMEGA = HFSet((FALSE, TRUE))


def subobject_classifier() -> tuple[HFSet, SetMor]:
    return OMEGA, SetMor(terminal(), OMEGA, {EMPTY: TRUE}, check=False)


def char(m: SetMor) -> SetMor:
    """Characteristic map of a mono ``m : S >-> A``."""
    if not m.is_injective():
        raise MorphismError("characteristic maps need a monomorphism")
    img = m.image()
    return SetMor(m.codomain, OMEGA, {x: TRUE if x in img else FALSE for x in m.codomain}, check=False)


def classifies(phi: SetMor, m: SetMor) -> bool:
    """Whether ``(m, !, phi, true)`` is a pullback square."""
    if phi.domain != m.codomain or phi.codomain != OMEGA:
        return False
    _, true = subobject_classifier()
    return is_pullback_cone(m, bang(m.domain), phi, true)


def subset_of_char(phi: SetMor) -> HFSet:
    return HFSet(x for x in phi.domain if phi(x) == TRUE)


# ---------------------------------------------------------------------------
# Subobject lattices: image ⊣ preimage ⊣ dual image


@dataclass(frozen=True)
class SubobjectRep:
    subset: HFSet
    ambient: HFSet

    def __post_init__(self):
        if not self.subset.issubset(self.ambient):
            raise ValueError("subobject is not contained in its ambient set")

    def inclusion(self) -> SetMor:
        return SetMor(self.subset, self.ambient, {x: x for x in self.subset}, check=False)


def _check_ambient(f: SetMor, s: SubobjectRep, side: str) -> None:
    expected = f.domain if side == "domain" else f.codomain
    if s.ambient != expected:
        raise MorphismError(f"subobject ambient does not match the {side}")


def image(f: SetMor, s: SubobjectRep) -> SubobjectRep:
    _check_ambient(f, s, "domain")
    return SubobjectRep(HFSet(f(a) for a in s.subset), f.codomain)


def preimage(f: SetMor, t: SubobjectRep) -> SubobjectRep:
    _check_ambient(f, t, "codomain")
    return SubobjectRep(HFSet(a for a in f.domain if f(a) in t.subset), f.domain)


def dual_image(f: SetMor, s: SubobjectRep) -> SubobjectRep:
    """``∀_f S = {b | every a with f(a) = b lies in S}``."""
    _check_ambient(f, s, "domain")
    return SubobjectRep(
        HFSet(b for b in f.codomain if all(a in s.subset for a in f.domain if f(a) == b)),
        f.codomain,
    )


__all__ = [
    "Coequalizer",
    "Coproduct",
    "Equalizer",
    "FALSE",
    "ImageFactorization",
    "OMEGA",
    "Product",
    "Pullback",
    "SubobjectRep",
    "TRUE",
    "bang",
    "char",
    "classifies",
    "coequalizer",
    "coequalizer_from_classes",
    "coproduct",
    "coproduct_map",
    "dual_image",
    "equalizer",
    "equivalence_classes",
    "from_initial",
    "identity",
    "image",
    "image_factorization",
    "initial",
    "is_equalizer_cone",
    "is_product_cone",
    "is_pullback_cone",
    "kernel_pair",
    "preimage",
    "product",
    "product_map",
    "ptj_from_partition",
    "subobject_classifier",
    "subset_of_char",
    "terminal",
]
