from collections import Counter
from itertools import product as cartesian

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_force_axiom, closure_classes, rank_of
from stratcat.fincat import SetMor, coequalizer, compose, homset, identity, pullback
from stratcat.hfset import EMPTY, HFSet, graph_to_dict, hf, iota_graph, singleton, union_big, von_neumann
from stratcat.smallness import (
    ALL,
    AXIOMS,
    FIBRE_BOUND,
    STCAN_CEILING,
    DirectedSystem,
    SmallnessPredicate,
    audit_small_maps,
    check_descent_square,
    check_instance,
    coequalizer_small,
    component,
    descent_check,
    embedding_holds,
    fibres,
    indexed_product,
    inverse_limit,
    iota_rank,
    is_small,
    neighborhood_sequence,
    replay,
    scu_check,
    stcan,
)

ONE, TWO, THREE, FOUR = (von_neumann(n) for n in (1, 2, 3, 4))


def const(a, b, value):
    return SetMor(a, b, {x: value for x in a})


def test_predicate_parsing():
    assert SmallnessPredicate.parse("all") == ALL
    assert SmallnessPredicate.parse("fibre:2") == FIBRE_BOUND(2)
    assert SmallnessPredicate.parse("stcan:4") == STCAN_CEILING(4)
    assert SmallnessPredicate.parse("stcan:4:element") == STCAN_CEILING(4, "element")
    for bad in ("fibre", "fibre:x", "stcan:-1", "huge"):
        with pytest.raises(ValueError):
            SmallnessPredicate.parse(bad)
    assert str(FIBRE_BOUND(2)) == "fibre:2"


def test_fibres_partition_the_domain():
    for f in homset(THREE, TWO):
        fib = fibres(f)
        assert set(fib) == set(TWO)
        assert sum(len(v) for v in fib.values()) == 3
        assert union_big(HFSet(fib.values())) == THREE
    assert all(len(v) == 1 for v in fibres(identity(THREE)).values())
    fib = fibres(const(THREE, TWO, EMPTY))
    assert len(fib[EMPTY]) == 3 and len(fib[ONE]) == 0


def test_is_small_examples():
    assert is_small(identity(THREE), FIBRE_BOUND(1))
    assert not is_small(const(THREE, ONE, EMPTY), FIBRE_BOUND(2))
    assert is_small(const(THREE, ONE, EMPTY), ALL)
    f = SetMor(ONE, ONE, {EMPTY: EMPTY})  # single fibre {∅}
    assert is_small(f, STCAN_CEILING(4))
    assert not is_small(f, STCAN_CEILING(3))


def test_iota_rank_against_rank_oracle():
    for x in [EMPTY, ONE, TWO, THREE, hf(ONE)]:
        expected = rank_of(iota_graph(x).graph)
        assert iota_rank(x) == expected
        assert expected == (rank_of(x) + 3 if x else 0)
    assert stcan(ONE, 4) and not stcan(ONE, 3)
    assert stcan(ONE, 1, "element")


@given(st.integers(0, 3), st.integers(1, 3), st.integers(1, 3), st.data())
def test_predicates_are_monotone(na, nb, n, data):
    f = data.draw(st.sampled_from(list(homset(von_neumann(na), von_neumann(nb)))))
    if is_small(f, FIBRE_BOUND(n)):
        assert is_small(f, FIBRE_BOUND(n + 1))
    if is_small(f, STCAN_CEILING(n + 3)):
        assert is_small(f, STCAN_CEILING(n + 4))


def test_audit_fibre_bound_two():
    report = audit_small_maps(FIBRE_BOUND(2), sample_rank=2)
    assert report.status("i") == "FAIL"
    for axiom in ("ii", "iii", "iv", "v"):
        assert report.status(axiom) == "PASS", axiom
    w = report.results["i"].witness
    assert replay(w, FIBRE_BOUND(2))
    assert len(w.fibre) == 4
    f, g = w.maps["f"], w.maps["g"]
    sizes = Counter(g(f(x)) for x in f.domain)
    assert max(sizes.values()) == 4


def test_audit_all_and_large_ceiling_pass():
    assert audit_small_maps(ALL, sample_rank=2).all_pass
    assert audit_small_maps(STCAN_CEILING(8), sample_rank=2, cap=500).all_pass


def test_audit_verdicts_match_brute_force():
    for p, bound in ((FIBRE_BOUND(2), 2), (ALL, None), (FIBRE_BOUND(1), 1)):
        report = audit_small_maps(p, sample_rank=2, cap=1500)
        for axiom in AXIOMS:
            expected = "PASS" if brute_force_axiom(axiom, bound) else "FAIL"
            assert report.status(axiom) == expected, (str(p), axiom)


def test_audit_is_deterministic():
    a = audit_small_maps(FIBRE_BOUND(2), sample_rank=1, seed=3, cap=300).to_json()
    b = audit_small_maps(FIBRE_BOUND(2), sample_rank=1, seed=3, cap=300).to_json()
    assert a == b


def test_audit_rejects_large_rank():
    with pytest.raises(ValueError):
        audit_small_maps(ALL, sample_rank=4)


def test_check_instance_on_hand_built_witness():
    f = SetMor(FOUR, TWO, {x: EMPTY if x in TWO else ONE for x in FOUR})
    g = const(TWO, ONE, EMPTY)
    w = check_instance("i", {"f": f, "g": g}, FIBRE_BOUND(2))
    assert w is not None and w.offending == "g∘f" and len(w.fibre) == 4
    assert check_instance("i", {"f": f, "g": g}, FIBRE_BOUND(4)) is None


def test_descent_examples():
    e = identity(TWO)
    g = const(THREE, TWO, EMPTY)
    pb = pullback(e, g)
    assert check_descent_square(pb.p1, pb.p2, e, g, FIBRE_BOUND(3)) is True
    assert descent_check(FIBRE_BOUND(2), sample_rank=2, cap=500).status == "PASS"
    assert descent_check(FIBRE_BOUND(1), sample_rank=2, cap=500).status == "PASS"


def test_descent_refuses_bad_squares():
    e = identity(TWO)
    g = const(THREE, TWO, EMPTY)
    pb = pullback(e, g)
    wrong_q = compose(const(THREE, THREE, EMPTY), pb.p2)
    with pytest.raises(ValueError):
        check_descent_square(pb.p1, wrong_q, e, g, FIBRE_BOUND(2))
    not_epi = SetMor(ONE, TWO, {EMPTY: EMPTY})
    with pytest.raises(ValueError):
        check_descent_square(identity(ONE), identity(ONE), not_epi, not_epi, FIBRE_BOUND(2))


def test_scu_examples():
    rep = scu_check(8, sample_rank=2)
    assert not rep.violations and rep.premise_count == len(rep.rows)
    by_family = {r.family: r for r in scu_check(4, sample_rank=2).rows}
    assert by_family[EMPTY].conclusion
    row = by_family[hf(ONE)]
    assert row.conclusion == (rank_of(iota_graph(ONE).graph) <= 4)
    for r in scu_check(5, sample_rank=3).rows:
        assert r.conclusion == (rank_of(iota_graph(union_big(r.family)).graph) <= 5)


def test_indexed_product():
    assert indexed_product({}) == HFSet([EMPTY])
    fam = {EMPTY: TWO, ONE: THREE}
    assert len(indexed_product(fam)) == 6
    assert embedding_holds(fam)
    assert indexed_product({EMPTY: TWO, ONE: EMPTY}) == EMPTY


def _two_level(top, bottom, bond):
    i, j = ONE, EMPTY
    leq = frozenset({(i, i), (j, j), (j, i)})
    return DirectedSystem((j, i), leq, {i: top, j: bottom}, {(i, j): bond})


def test_inverse_limit_examples():
    sys = _two_level(TWO, ONE, const(TWO, ONE, EMPTY))
    lim = inverse_limit(sys)
    assert len(lim.obj) == 2 and lim.fibres_ok
    same = _two_level(THREE, THREE, identity(THREE))
    assert len(inverse_limit(same).obj) == 3


def test_inverse_limit_matches_generate_and_filter():
    a, b, c = ONE, TWO, THREE  # index elements: a <= b, a <= c, b <= c
    leq = frozenset({(a, a), (b, b), (c, c), (a, b), (a, c), (b, c)})
    for top in homset(THREE, TWO):
        if not top.is_surjective():
            continue
        for mid in homset(TWO, ONE):
            bonds = {(c, b): top, (b, a): mid, (c, a): compose(mid, top)}
            sys = DirectedSystem((a, b, c), leq, {a: ONE, b: TWO, c: THREE}, bonds)
            lim = inverse_limit(sys)
            expected = set()
            for g in indexed_product(sys.carriers):
                pick = graph_to_dict(g)
                if all(bonds[(i, j)](pick[i]) == pick[j] for (i, j) in bonds):
                    expected.add(g)
            assert set(lim.obj) == expected
            assert lim.fibres_ok


def test_directed_system_validation():
    with pytest.raises(ValueError):  # bond has the wrong domain
        _two_level(TWO, ONE, SetMor(ONE, ONE, {EMPTY: EMPTY}))
    with pytest.raises(ValueError):  # bond is not surjective
        _two_level(ONE, TWO, SetMor(ONE, TWO, {EMPTY: EMPTY}))
    with pytest.raises(ValueError):  # two maximal elements, nothing above both
        a, b = EMPTY, ONE
        DirectedSystem((a, b), frozenset({(a, a), (b, b)}), {a: ONE, b: ONE}, {})


def test_neighborhood_sequence():
    v0, v1, v2 = EMPTY, ONE, TWO
    path = HFSet([hf(v0, v1), hf(v1, v2)])
    sizes = [len(n) for n in neighborhood_sequence(path, v0, 4)]
    assert sizes == [1, 2, 3, 3, 3]
    assert neighborhood_sequence(HFSet(), v0, 2, vertices=hf(v0)) == [hf(v0)] * 3
    with pytest.raises(ValueError):
        neighborhood_sequence(path, THREE, 2)
    assert component(path, v2) == hf(v0, v1, v2)


def test_coequalizer_small_examples():
    f = identity(THREE)
    q = coequalizer_small(f, f, ALL)
    assert q.quotient.is_bijective()
    chain_f = SetMor(TWO, THREE, {EMPTY: EMPTY, ONE: ONE})
    chain_g = SetMor(TWO, THREE, {EMPTY: ONE, ONE: TWO})
    assert coequalizer_small(chain_f, chain_g, FIBRE_BOUND(3)).quotient_small
    assert not coequalizer_small(chain_f, chain_g, FIBRE_BOUND(2)).quotient_small
    assert len(coequalizer_small(chain_f, chain_g, ALL).obj) == 1


def test_coequalizer_small_agrees_with_fincat():
    for na, nb in cartesian(range(3), range(1, 4)):
        a, b = von_neumann(na), von_neumann(nb)
        for f, g in cartesian(list(homset(a, b)), repeat=2):
            ours = coequalizer_small(f, g, ALL)
            theirs = coequalizer(f, g)
            assert ours.coequalizer.classes == theirs.classes
            expected = closure_classes(b.elements, [(f(x), g(x)) for x in a])
            assert {c.as_frozenset() for c in ours.coequalizer.classes} == expected


def test_singleton_fibre_measures():
    assert FIBRE_BOUND(1).fibre_measure(singleton(EMPTY)) == 1
    assert STCAN_CEILING(4).fibre_measure(singleton(EMPTY)) == 4
