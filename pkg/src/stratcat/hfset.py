"""Hereditarily finite sets with a canonical representation.

An :class:`HFSet` is an immutable value whose elements are kept duplicate-free
and sorted by the canonical order: smaller cardinality first, then
lexicographic comparison of the sorted element lists.  Equality is
extensional and ordering is total, so every HF set has exactly one printed
form and one Ackermann code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping


class HFSet:
    """A hereditarily finite set.

    >>> e = HFSet()
    >>> one = HFSet([e])
    >>> HFSet([one, e, e])
    {{},{{}}}
    """

    __slots__ = ("_elems", "_set", "_hash", "_key", "_rank")

    def __init__(self, elems: Iterable[HFSet] = ()):
        members = frozenset(elems)
        for m in members:
            if not isinstance(m, HFSet):
                raise TypeError(f"HFSet elements must be HFSet, got {type(m).__name__}")
        self._set = members
        self._elems = tuple(sorted(members, key=_order_key))
        self._hash = hash(members)
        self._key = None
        self._rank = None

    @property
    def elements(self) -> tuple[HFSet, ...]:
        """Elements in canonical order."""
        return self._elems

    def __iter__(self) -> Iterator[HFSet]:
        return iter(self._elems)

    def __len__(self) -> int:
        return len(self._elems)

    def __contains__(self, item: object) -> bool:
        return item in self._set

    def __bool__(self) -> bool:
        return bool(self._elems)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, HFSet):
            return NotImplemented
        return self._hash == other._hash and self._set == other._set

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: HFSet) -> bool:
        return _order_key(self) < _order_key(other)

    def __le__(self, other: HFSet) -> bool:
        return _order_key(self) <= _order_key(other)

    def __gt__(self, other: HFSet) -> bool:
        return _order_key(self) > _order_key(other)

    def __ge__(self, other: HFSet) -> bool:
        return _order_key(self) >= _order_key(other)

    def __repr__(self) -> str:
        return to_text(self)

    # set algebra, all returning new values
    def __or__(self, other: HFSet) -> HFSet:
        return HFSet(self._set | other._set)

    def __and__(self, other: HFSet) -> HFSet:
        return HFSet(self._set & other._set)

    def __sub__(self, other: HFSet) -> HFSet:
        return HFSet(self._set - other._set)

    def issubset(self, other: HFSet) -> bool:
        return self._set <= other._set

    def as_frozenset(self) -> frozenset[HFSet]:
        return self._set


def _order_key(x: HFSet) -> tuple:
    key = x._key
    if key is None:
        key = (len(x._elems), tuple(_order_key(e) for e in x._elems))
        x._key = key
    return key


EMPTY = HFSet()


def hf(*elems: HFSet) -> HFSet:
    """Build ``{e1, ..., en}`` from already-canonical elements."""
    return HFSet(elems)


def normalize(raw) -> HFSet:
    """Canonicalize a nested literal made of lists, tuples, sets or HFSets.

    >>> normalize([[], []])
    {{}}
    >>> normalize([[[]], []])
    {{},{{}}}
    """
    if isinstance(raw, HFSet):
        return raw
    if isinstance(raw, (list, tuple, set, frozenset)):
        return HFSet(normalize(r) for r in raw)
    raise TypeError(f"cannot normalize {raw!r} into an HF set")


def mem(a: HFSet, b: HFSet) -> bool:
    return a in b


def union_big(x: HFSet) -> HFSet:
    """The sumset ``⋃x``."""
    out: set[HFSet] = set()
    for y in x:
        out.update(y.as_frozenset())
    return HFSet(out)


def powerset(x: HFSet) -> HFSet:
    return HFSet(subsets(x))


def subsets(x: HFSet, max_size: int | None = None) -> list[HFSet]:
    """All subsets of ``x`` (optionally bounded in size), in canonical order."""
    elems = x.elements
    top = len(elems) if max_size is None else min(max_size, len(elems))
    out = [HFSet(c) for k in range(top + 1) for c in combinations(elems, k)]
    out.sort()
    return out


def rank(x: HFSet) -> int:
    r = x._rank
    if r is None:
        r = 1 + max(rank(e) for e in x) if x else 0
        x._rank = r
    return r


def singleton(x: HFSet) -> HFSet:
    return HFSet((x,))


def singleton_image(x: HFSet) -> HFSet:
    """``ι``x``, the set of singletons of members of ``x``."""
    return HFSet(singleton(y) for y in x)


def kpair(a: HFSet, b: HFSet) -> HFSet:
    """Wiener-Kuratowski pair ``{{a},{a,b}}``."""
    return HFSet((singleton(a), HFSet((a, b))))


@lru_cache(maxsize=1 << 16)
def unpair(p: HFSet) -> tuple[HFSet, HFSet]:
    """Inverse of :func:`kpair`; raises ``ValueError`` on non-pairs."""
    if len(p) == 1:
        (only,) = p.elements
        if len(only) == 1:
            (a,) = only.elements
            return a, a
    elif len(p) == 2:
        small, big = p.elements
        if len(small) == 1 and len(big) == 2:
            (a,) = small.elements
            if a in big:
                (b,) = (e for e in big if e != a)
                return a, b
    raise ValueError(f"{p!r} is not a Kuratowski pair")


def is_pair(p: HFSet) -> bool:
    try:
        unpair(p)
    except ValueError:
        return False
    return True


def fst(p: HFSet) -> HFSet:
    return unpair(p)[0]


def snd(p: HFSet) -> HFSet:
    return unpair(p)[1]


def product(a: HFSet, b: HFSet) -> HFSet:
    return HFSet(kpair(x, y) for x in a for y in b)


LEFT_TAG = EMPTY
RIGHT_TAG = singleton(EMPTY)


def disjoint_union(a: HFSet, b: HFSet) -> HFSet:
    """``A ⊔ B`` as pairs ``<a, ∅>`` and ``<b, {∅}>``."""
    return HFSet([kpair(x, LEFT_TAG) for x in a] + [kpair(y, RIGHT_TAG) for y in b])


def von_neumann(n: int) -> HFSet:
    """The ordinal ``n = {0, ..., n-1}``."""
    out = EMPTY
    for _ in range(n):
        out = out | singleton(out)
    return out


@lru_cache(maxsize=None)
def sets_of_rank_at_most(r: int) -> tuple[HFSet, ...]:
    """Every HF set of rank ``<= r`` (the cumulative level ``V_{r+1}``)."""
    if r < 0:
        return ()
    return tuple(subsets(HFSet(sets_of_rank_at_most(r - 1))))


def small_sets(max_card: int, max_rank: int) -> list[HFSet]:
    """HF sets with at most ``max_card`` elements and rank at most ``max_rank``."""
    return [x for x in sets_of_rank_at_most(max_rank) if len(x) <= max_card]


# ---------------------------------------------------------------------------
# Graphs of functions


@dataclass(frozen=True)
class FuncGraph:
    """A total single-valued relation ``graph ⊆ domain × codomain``."""

    domain: HFSet
    codomain: HFSet
    graph: HFSet

    def __post_init__(self):
        seen: dict[HFSet, HFSet] = {}
        for p in self.graph:
            a, b = unpair(p)
            if a not in self.domain or b not in self.codomain:
                raise ValueError(f"pair {p!r} lies outside domain × codomain")
            if a in seen:
                raise ValueError(f"graph is not single-valued at {a!r}")
            seen[a] = b
        if len(seen) != len(self.domain):
            raise ValueError("graph is not total on its domain")


def graph_of(mapping: Mapping[HFSet, HFSet]) -> HFSet:
    return HFSet(kpair(a, b) for a, b in mapping.items())


@lru_cache(maxsize=1 << 16)
def _graph_dict(graph: HFSet) -> tuple[tuple[HFSet, HFSet], ...]:
    return tuple(unpair(p) for p in graph)


def graph_to_dict(graph: HFSet) -> dict[HFSet, HFSet]:
    """Read a function graph back into a dictionary."""
    out = dict(_graph_dict(graph))
    if len(out) != len(graph):
        raise ValueError("graph is not single-valued")
    return out


def apply_graph(graph: HFSet, x: HFSet) -> HFSet:
    for a, b in _graph_dict(graph):
        if a == x:
            return b
    raise KeyError(x)


def iota_graph(x: HFSet) -> FuncGraph:
    """Graph of the singleton map restricted to ``x``."""
    return FuncGraph(x, singleton_image(x), HFSet(kpair(a, singleton(a)) for a in x))


# ---------------------------------------------------------------------------
# Text notation and Ackermann coding


def to_text(x: HFSet) -> str:
    return "{" + ",".join(to_text(e) for e in x) + "}"


class HFSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


def from_text(text: str) -> HFSet:
    """Parse brace notation such as ``{{},{{}}}`` (whitespace ignored)."""
    s = "".join(text.split())
    pos = 0

    def parse() -> HFSet:
        nonlocal pos
        if pos >= len(s) or s[pos] != "{":
            raise HFSyntaxError("expected '{'", pos)
        pos += 1
        elems = []
        if pos < len(s) and s[pos] == "}":
            pos += 1
            return EMPTY
        while True:
            elems.append(parse())
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == "}":
                pos += 1
                return HFSet(elems)
            raise HFSyntaxError("expected ',' or '}'", pos)

    out = parse()
    if pos != len(s):
        raise HFSyntaxError("trailing input", pos)
    return out


def encode(x: HFSet) -> int:
    """Ackermann code: ``encode(x) = Σ 2**encode(y)`` over ``y ∈ x``."""
    return sum(1 << encode(y) for y in x)


def decode(n: int) -> HFSet:
    if n < 0:
        raise ValueError("Ackermann codes are non-negative")
    elems = []
    bit = 0
    while n:
        if n & 1:
            elems.append(decode(bit))
        n >>= 1
        bit += 1
    return HFSet(elems)
