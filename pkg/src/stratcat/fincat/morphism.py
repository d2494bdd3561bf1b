"""Morphisms of the category of finite sets, hom-set enumeration, and T."""

from __future__ import annotations

from itertools import product as cartesian
from typing import Callable, Iterator, Mapping

from ..hfset import (
    FuncGraph,
    HFSet,
    graph_of,
    graph_to_dict,
    singleton,
    singleton_image,
    union_big,
)


class MorphismError(ValueError):
    """Raised on ill-typed morphism data or incompatible composites."""


class SetMor:
    """A function between HF sets, stored as a dictionary.

    The Kuratowski-pair graph is built on demand; equality and hashing are by
    ``(domain, codomain, mapping)`` so two morphisms with the same graph but
    different codomains are different arrows.
    """

    __slots__ = ("domain", "codomain", "_map", "_graph", "_hash")

    def __init__(self, domain: HFSet, codomain: HFSet, mapping: Mapping[HFSet, HFSet], *, check: bool = True):
        self.domain = domain
        self.codomain = codomain
        self._map = dict(mapping)
        self._graph = None
        self._hash = None
        if check:
            if len(self._map) != len(domain) or any(a not in domain for a in self._map):
                raise MorphismError("mapping is not total on the domain")
            for a, b in self._map.items():
                if b not in codomain:
                    raise MorphismError(f"value {b!r} of {a!r} is outside the codomain")

    @classmethod
    def from_fn(cls, domain: HFSet, codomain: HFSet, fn: Callable[[HFSet], HFSet]) -> SetMor:
        return cls(domain, codomain, {a: fn(a) for a in domain})

    @classmethod
    def from_graph(cls, domain: HFSet, codomain: HFSet, graph: HFSet) -> SetMor:
        FuncGraph(domain, codomain, graph)
        return cls(domain, codomain, graph_to_dict(graph))

    def __call__(self, x: HFSet) -> HFSet:
        try:
            return self._map[x]
        except KeyError:
            raise MorphismError(f"{x!r} is not in the domain") from None

    @property
    def mapping(self) -> dict[HFSet, HFSet]:
        return dict(self._map)

    def items(self):
        return self._map.items()

    @property
    def graph(self) -> HFSet:
        if self._graph is None:
            self._graph = graph_of(self._map)
        return self._graph

    def as_funcgraph(self) -> FuncGraph:
        return FuncGraph(self.domain, self.codomain, self.graph)

    def image(self) -> HFSet:
        return HFSet(self._map.values())

    def is_injective(self) -> bool:
        return len(set(self._map.values())) == len(self._map)

    def is_surjective(self) -> bool:
        return len(set(self._map.values())) == len(self.codomain)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetMor):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self._map == other._map

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.domain, self.codomain, frozenset(self._map.items())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{a!r}->{b!r}" for a, b in sorted(self._map.items()))
        return f"SetMor({self.domain!r} -> {self.codomain!r}: {body})"

    def __matmul__(self, other: SetMor) -> SetMor:
        return compose(self, other)


def identity(a: HFSet) -> SetMor:
    return SetMor(a, a, {x: x for x in a}, check=False)


def compose(g: SetMor, f: SetMor) -> SetMor:
    """``g ∘ f``."""
    if f.codomain != g.domain:
        raise MorphismError(f"cannot compose: codomain {f.codomain!r} != domain {g.domain!r}")
    gm = g._map
    return SetMor(f.domain, g.codomain, {a: gm[b] for a, b in f._map.items()}, check=False)


def constant(a: HFSet, b: HFSet, value: HFSet) -> SetMor:
    if value not in b:
        raise MorphismError(f"{value!r} is not in {b!r}")
    return SetMor(a, b, {x: value for x in a}, check=False)


def inclusion(sub: HFSet, ambient: HFSet) -> SetMor:
    if not sub.issubset(ambient):
        raise MorphismError("not a subset")
    return SetMor(sub, ambient, {x: x for x in sub}, check=False)


def homset(a: HFSet, b: HFSet) -> Iterator[SetMor]:
    """Every function ``a -> b`` in a deterministic order."""
    dom = a.elements
    for values in cartesian(b.elements, repeat=len(dom)):
        yield SetMor(a, b, dict(zip(dom, values)), check=False)


def hom_count(a: HFSet, b: HFSet) -> int:
    return len(b) ** len(a)


def injections(a: HFSet, b: HFSet) -> Iterator[SetMor]:
    for m in homset(a, b):
        if m.is_injective():
            yield m


# ---------------------------------------------------------------------------
# The T functor


def T_ob(a: HFSet) -> HFSet:
    return singleton_image(a)


def T_mor(f: SetMor) -> SetMor:
    """``<{a},{b}> ∈ Tf`` whenever ``<a,b> ∈ f``."""
    return SetMor(T_ob(f.domain), T_ob(f.codomain), {singleton(a): singleton(b) for a, b in f.items()}, check=False)


def T_inverse(k: SetMor) -> SetMor:
    """The unique ``f`` with ``T_mor(f) == k`` (fullness of T).

    Raises :class:`MorphismError` when ``k`` does not run between singleton
    images.
    """
    dom, cod = union_big(k.domain), union_big(k.codomain)
    if T_ob(dom) != k.domain or T_ob(cod) != k.codomain:
        raise MorphismError("morphism is not between T-objects")
    return SetMor(dom, cod, {_only(x): _only(y) for x, y in k.items()}, check=False)


def _only(x: HFSet) -> HFSet:
    if len(x) != 1:
        raise MorphismError(f"{x!r} is not a singleton")
    return x.elements[0]
