import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hf_sets, small_hf_sets
from oracles import rank_of
from stratcat.hfset import (
    EMPTY,
    FuncGraph,
    HFSet,
    HFSyntaxError,
    apply_graph,
    decode,
    disjoint_union,
    encode,
    from_text,
    fst,
    graph_of,
    graph_to_dict,
    hf,
    iota_graph,
    is_pair,
    kpair,
    normalize,
    powerset,
    product,
    rank,
    sets_of_rank_at_most,
    singleton,
    singleton_image,
    small_sets,
    snd,
    to_text,
    union_big,
    unpair,
    von_neumann,
)

ONE = singleton(EMPTY)
TWO = hf(EMPTY, ONE)


def test_canonical_form_ignores_order_and_duplicates():
    assert HFSet([ONE, EMPTY, EMPTY]) == HFSet([EMPTY, ONE])
    assert HFSet([ONE, EMPTY]).elements == (EMPTY, ONE)
    assert normalize([[[]], [], []]) == TWO


def test_text_notation():
    assert to_text(TWO) == "{{},{{}}}"
    assert from_text(" { {} , {{}} } ") == TWO
    with pytest.raises(HFSyntaxError):
        from_text("{{}")
    with pytest.raises(HFSyntaxError):
        from_text("{}}")


@given(hf_sets)
def test_text_round_trip(x):
    assert from_text(to_text(x)) == x


@given(st.integers(min_value=0, max_value=5000))
def test_ackermann_round_trip(n):
    assert encode(decode(n)) == n


def test_ordering_is_total_and_consistent():
    xs = sorted(sets_of_rank_at_most(3))
    assert len(xs) == 16
    assert all(a < b for a, b in zip(xs, xs[1:]))
    assert xs[0] == EMPTY


@given(hf_sets)
def test_rank_matches_recursive_oracle(x):
    assert rank(x) == rank_of(x)


def test_levels_of_the_cumulative_hierarchy():
    assert [len(sets_of_rank_at_most(r)) for r in range(4)] == [1, 2, 4, 16]
    assert all(rank(x) <= 2 for x in sets_of_rank_at_most(2))
    assert len(small_sets(2, 2)) == 4


def test_kuratowski_pairs():
    a, b = EMPTY, ONE
    p = kpair(a, b)
    assert p == hf(singleton(a), hf(a, b))
    assert unpair(p) == (a, b)
    assert fst(p) == a and snd(p) == b
    assert unpair(kpair(a, a)) == (a, a)
    assert is_pair(p) and not is_pair(TWO | hf(hf(ONE)))
    with pytest.raises(ValueError):
        unpair(hf(ONE, TWO, hf(TWO)))


@given(small_hf_sets, small_hf_sets)
def test_pairs_are_injective_and_two_levels_up(a, b):
    assert unpair(kpair(a, b)) == (a, b)
    assert rank(kpair(a, b)) == max(rank(a), rank(b)) + 2


def test_products_and_sums():
    assert len(product(TWO, von_neumann(3))) == 6
    s = disjoint_union(TWO, TWO)
    assert len(s) == 4
    assert union_big(hf(ONE, TWO)) == TWO
    assert len(powerset(TWO)) == 4
    assert singleton_image(TWO) == hf(ONE, singleton(ONE))


def test_von_neumann_ordinals():
    assert von_neumann(0) == EMPTY
    assert von_neumann(2) == TWO
    assert all(len(von_neumann(n)) == n for n in range(6))


def test_function_graphs():
    g = graph_of({EMPTY: ONE, ONE: ONE})
    fg = FuncGraph(TWO, TWO, g)
    assert apply_graph(fg.graph, EMPTY) == ONE
    assert graph_to_dict(g) == {EMPTY: ONE, ONE: ONE}
    with pytest.raises(ValueError):
        FuncGraph(TWO, TWO, graph_of({EMPTY: ONE}))
    with pytest.raises(ValueError):
        FuncGraph(TWO, hf(EMPTY), g)


@given(hf_sets)
def test_iota_graph_rank(x):
    expected = 0 if not x else rank(x) + 3
    assert rank(iota_graph(x).graph) == expected


def test_iota_graph_of_singleton_of_empty_has_rank_four():
    assert rank(iota_graph(ONE).graph) == 4
