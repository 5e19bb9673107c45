from collections import Counter
from dataclasses import replace
from itertools import permutations, product
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauercat.kronecker import (
    Entry,
    Helix,
    HelixArrow,
    HelixSystem,
    HMatrix,
    InvalidSystemError,
    a_of_n,
    canonical_entries,
    canonical_system,
    check_helix,
    enumerate_helices,
    helix_count,
    partition_count,
    random_system,
    render_helix,
    word_to_partition,
    words,
)


def brute_partitions(n, k, m):
    """Multisets of at most k parts in 1..n summing to m, by exhaustion."""
    count = 0
    for parts in product(range(n + 1), repeat=k):
        if sum(parts) == m and list(parts) == sorted(parts, reverse=True):
            count += 1
    return count


def test_words_small():
    assert words(1) == ["AB", "BA"]
    assert words(2) == ["AABB", "ABAB", "ABBA", "BAAB", "BABA", "BBAA"]


@pytest.mark.parametrize("n", range(1, 7))
def test_word_count_is_central_binomial(n):
    ws = words(n)
    assert len(ws) == len(set(ws)) == comb(2 * n, n)
    assert ws == sorted(ws)


def test_word_to_partition_examples():
    assert word_to_partition("AABB") == ()
    assert word_to_partition("BBAA") == (2, 2)
    assert word_to_partition("BABA") == (2, 1)
    with pytest.raises(ValueError):
        word_to_partition("AAB")
    with pytest.raises(ValueError):
        word_to_partition("ABC")


@pytest.mark.parametrize("n", range(1, 5))
def test_partition_count_against_exhaustion(n):
    for k in range(1, n + 1):
        for m in range(n * k + 1):
            assert partition_count(n, k, m) == brute_partitions(n, k, m)


def test_partition_count_against_gaussian_binomial():
    sympy = pytest.importorskip("sympy")
    q = sympy.symbols("q")
    for n in range(1, 6):
        num = sympy.prod([1 - q ** (2 * n - i) for i in range(n)])
        den = sympy.prod([1 - q ** (i + 1) for i in range(n)])
        poly = sympy.Poly(sympy.cancel(num / den), q)
        for m in range(n * n + 1):
            assert poly.coeff_monomial(q**m) == partition_count(n, n, m)


@pytest.mark.parametrize("n", range(1, 7))
def test_partition_image_multiplicities(n):
    image = Counter(sum(word_to_partition(w)) for w in words(n))
    for m in range(n * n + 1):
        assert image[m] == partition_count(n, n, m)


def test_canonical_system_layout():
    s = canonical_system(3)
    assert s.matrix.entries.shape == (4, 6)
    assert s.row_i == 1 and s.row_j == 4
    assert dict(s.pivots_A) == {2: 1, 3: 2, 4: 3}
    assert dict(s.pivots_B) == {1: 1, 2: 2, 3: 3}
    assert (canonical_entries(3).sum(axis=0) == 1).all()


def test_invalid_system_rejected():
    s = canonical_system(2)
    with pytest.raises(InvalidSystemError):
        replace(s, pivots_A={1: 1, 2: 2})
    with pytest.raises(InvalidSystemError):
        HMatrix(2, "AABB", np.zeros((2, 4), dtype=np.int8))
    with pytest.raises(ValueError):
        HMatrix(2, "AAAB", np.zeros((3, 4), dtype=np.int8))


def test_fixed_start_n3_sequences():
    got = {tuple(str(v) for v in h.vertices) for h in enumerate_helices(canonical_system(3), 1)}
    assert got == {
        ("a1,1", "b1,1", "b2,1", "a2,1", "a3,1", "b3,3", "b4,3", "a4,3"),
        ("a1,1", "b1,1", "b3,1", "a3,2", "a2,2", "b2,2", "b4,2", "a4,3"),
        ("a1,1", "b1,1", "b4,1", "a4,3", "a3,3", "b3,3", "b2,3", "a2,1"),
        ("a1,1", "b1,1", "b4,1", "a4,3", "a2,3", "b2,2", "b3,2", "a3,2"),
    }


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_and_fixed_start_counts(n):
    s = canonical_system(n)
    assert len(enumerate_helices(s)) == helix_count(n)
    assert len(enumerate_helices(s, fixed_start=1)) == factorial(n - 1) * ((n + 1) // 2)


def test_closed_form_values():
    assert [helix_count(n) for n in range(1, 7)] == [1, 2, 12, 48, 360, 2160]
    assert [a_of_n(n) for n in range(1, 7)] == [1, 1, 4, 12, 72, 360]


@pytest.mark.parametrize("n", range(1, 5))
def test_every_helix_passes_the_checker(n):
    s = canonical_system(n)
    helices = enumerate_helices(s)
    assert len({h.vertices for h in helices}) == len(helices)
    for h in helices:
        assert check_helix(s, h) == []
        assert sorted(h.rows) == list(range(1, n + 2))


def test_checker_rejects_broken_helices():
    s = canonical_system(3)
    h = enumerate_helices(s, 1)[0]
    truncated = Helix(h.arrows[:-2])
    assert check_helix(s, truncated)
    bad = list(h.arrows)
    a = bad[1]
    bad[1] = HelixArrow("V", a.src, Entry(a.dst.block, a.dst.row, a.dst.col + 1))
    assert check_helix(s, Helix(tuple(bad)))
    # a row-permuting helix on a different system does not validate
    other = HelixSystem(s.matrix, 1, 4, {2: 2, 3: 1, 4: 3}, dict(s.pivots_B))
    assert check_helix(other, h)


def test_random_system_is_seeded():
    a, b = random_system(4, 11), random_system(4, 11)
    assert a.matrix.word == b.matrix.word
    assert (a.matrix.entries == b.matrix.entries).all()
    assert (a.row_i, a.row_j, a.pivots_A, a.pivots_B) == (b.row_i, b.row_j, b.pivots_A, b.pivots_B)
    assert len({random_system(4, seed).matrix.word for seed in range(20)}) > 1


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 5), seed=st.integers(0, 10**6))
def test_count_is_independent_of_the_system(n, seed):
    s = random_system(n, seed)
    helices = enumerate_helices(s)
    assert len(helices) == helix_count(n)
    for h in helices[:50]:
        assert check_helix(s, h) == []


def test_render_marks_visit_order():
    s = canonical_system(2)
    text = render_helix(s, enumerate_helices(s)[0])
    assert text.splitlines()[0].split() == ["A", "A", "B", "B"]
    assert "0" in text and "4" in text


def test_start_column_out_of_range():
    with pytest.raises(InvalidSystemError):
        enumerate_helices(canonical_system(3), fixed_start=4)


def test_permutations_of_rows_visited():
    # each helix visits rows in a distinct order when the start is fixed
    s = canonical_system(4)
    orders = [h.rows for h in enumerate_helices(s, 1)]
    assert len(set(orders)) == len(orders)
    assert set(orders) <= set((1,) + p for p in permutations(range(2, 6)))
