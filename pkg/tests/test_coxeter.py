import itertools
from math import comb

import hypothesis.strategies as st
import pytest
from hypothesis import given

from cambrep.coxeter import (
    UnsupportedType,
    build_group,
    c_sorting_word,
    cambrian,
    fiber_is_interval,
    is_c_sortable,
    parse_coxeter_element,
    parse_type,
    pi_down,
    pi_down_morphism,
    sortable_elements,
    weak_order,
)
from cambrep.poset import from_covers, hasse_regularity, induced_subposet, is_isomorphic, is_lattice, product

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "C3": 48, "B4": 384, "H3": 120,
          "I2(5)": 10, "I2(9)": 18, "A1xA1xA1": 8, "A1xI2(4)": 16}
CAMBRIAN_SIZES = {"A1": 2, "A2": 5, "A3": 14, "A4": 42, "B2": 6, "B3": 20, "B4": 70, "H3": 32,
                  "A1xA1xA1": 8, "A1xI2(5)": 14}


def catalan(n):
    return comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("t,order", ORDERS.items())
def test_group_orders_and_longest_element(t, order):
    G = build_group(t)
    assert G.order == order == parse_type(t).order
    assert G.length(G.longest) == G.num_positive_roots


@pytest.mark.parametrize("t", ["A3", "B3", "H3", "A1xI2(5)", "B4"])
def test_generator_relations(t):
    G = build_group(t)
    m = G.coxeter_matrix
    for i in range(1, G.rank + 1):
        for j in range(1, G.rank + 1):
            st_ = G.multiply(G.from_word([i]), G.from_word([j]))
            w, k = st_, 1
            while w != 0:
                w, k = G.multiply(w, st_), k + 1
            assert k == m[i - 1][j - 1]


def test_parse_errors():
    for bad in ("E6", "I2(2)", "A0", "A5", "H4", "Q3"):
        with pytest.raises(UnsupportedType):
            parse_type(bad)
    assert str(parse_type("(A1)^3")) == "A1xA1xA1"
    with pytest.raises(ValueError):
        parse_coxeter_element("1,2,2", 3)
    assert parse_coxeter_element("c=3,1,2", 3) == (3, 1, 2)


def _perm_weak_order(n):
    """Right weak order on S_n through inversion pairs, built from scratch."""
    perms = list(itertools.permutations(range(n)))
    inv = [{(p[i], p[j]) for i in range(n) for j in range(i + 1, n) if p[i] > p[j]} for p in perms]
    pairs = [(a, b) for a in range(len(perms)) for b in range(len(perms))
             if inv[a] < inv[b] and len(inv[b]) == len(inv[a]) + 1]
    return perms, from_covers(len(perms), pairs)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weak_order_type_a_matches_permutations(n):
    _, P = _perm_weak_order(n + 1)
    assert is_isomorphic(weak_order(build_group(f"A{n}")), P) is not None


def _avoids_231(p):
    return not any(p[k] < p[i] < p[j] for i, j, k in itertools.combinations(range(len(p)), 3))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_linear_cambrian_is_tamari(n):
    perms, W = _perm_weak_order(n + 1)
    keep = [i for i, p in enumerate(perms) if _avoids_231(p)]
    tamari = induced_subposet(W, keep)
    C = cambrian(build_group(f"A{n}"), tuple(range(1, n + 1)))
    assert C.n == catalan(n + 1)
    assert is_isomorphic(C, tamari) is not None


@pytest.mark.parametrize("t,size", CAMBRIAN_SIZES.items())
def test_cambrian_sizes_lattice_and_regular(t, size):
    G = build_group(t)
    for c in G.coxeter_elements():
        C = cambrian(G, c)
        assert C.n == size
        assert is_lattice(C)
        assert hasse_regularity(C).uniform == G.rank


@pytest.mark.parametrize("h", range(3, 10))
def test_dihedral_cambrian(h):
    G = build_group(f"I2({h})")
    for c in ((1, 2), (2, 1)):
        C = cambrian(G, c)
        assert C.n == h + 2
        assert hasse_regularity(C).uniform == 2


def test_type_b_cambrian_counts():
    for n in (2, 3, 4):
        assert cambrian(build_group(f"B{n}"), tuple(range(1, n + 1))).n == comb(2 * n, n)


def test_sorting_word_examples():
    G = build_group("A2")
    assert c_sorting_word(G, G.longest, (1, 2)) == [[1, 2], [1]]
    assert is_c_sortable(G, G.longest, (1, 2))
    # s2 s1 is not (1,2)-sortable: its passes are {2}, {1}
    assert not is_c_sortable(G, G.from_word([2, 1]), (1, 2))


@given(st.sampled_from(["A3", "B3", "H3", "A1xI2(4)"]), st.data())
def test_sorting_word_is_reduced_word(t, data):
    G = build_group(t)
    w = data.draw(st.integers(0, G.order - 1))
    c = data.draw(st.sampled_from(G.coxeter_elements()))
    word = [s for p in c_sorting_word(G, w, c) for s in p]
    assert len(word) == G.length(w)
    assert G.from_word(word) == w


@given(st.sampled_from(["A3", "B3", "H3", "I2(7)"]), st.data())
def test_length_changes_by_one(t, data):
    G = build_group(t)
    w = data.draw(st.integers(0, G.order - 1))
    i = data.draw(st.integers(1, G.rank))
    assert abs(G.length(G.right_mul(w, i)) - G.length(w)) == 1
    assert G.right_mul(G.right_mul(w, i), i) == w


@pytest.mark.parametrize("t", ["A3", "B3"])
def test_weak_leq_agrees_with_weak_order(t):
    G = build_group(t)
    W = weak_order(G)
    for u in range(G.order):
        for v in range(G.order):
            assert W.leq(u, v) == G.weak_leq(u, v)
    assert is_lattice(W)


@pytest.mark.parametrize("h", [3, 4, 5])
def test_reducible_weak_order_is_product(h):
    G = build_group(f"A1xI2({h})")
    P = product(weak_order(build_group("A1")), weak_order(build_group(f"I2({h})")))
    assert is_isomorphic(weak_order(G), P) is not None


@pytest.mark.parametrize("t", ["A3", "B3", "H3"])
def test_pi_down_contraction(t):
    G = build_group(t)
    for c in G.coxeter_elements():
        f = pi_down_morphism(G, c)
        assert f.is_surjective()
        sortables = sortable_elements(G, c)
        for i, v in enumerate(sortables):
            assert f.mapping[v] == i  # identity on sortables
        for fib in f.fibers():
            assert fiber_is_interval(f.source, fib)


def test_pi_down_below_w():
    G = build_group("A3")
    c = (1, 2, 3)
    for w in range(G.order):
        v = pi_down(G, c, w)
        assert G.weak_leq(v, w) and is_c_sortable(G, v, c)
