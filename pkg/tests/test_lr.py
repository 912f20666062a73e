"""Classical coefficient route against a brute-force oracle.

The oracle enumerates every labeling of the skew diagram outright and
filters; it shares no code with the implementation under test.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hornlab import Partition, lr_coefficient, lr_nonzero


def oracle_lr(lam, mu, nu):
    """Count semistandard skew fillings of nu/lam with content mu whose
    reverse reading word is a lattice word. Exponential; tiny inputs only."""
    lam_t = lam.trimmed().parts
    mu_t = mu.trimmed().parts
    nu_t = nu.trimmed().parts
    if sum(nu_t) != sum(lam_t) + sum(mu_t):
        return 0
    rows = len(nu_t)
    inner = list(lam_t) + [0] * (rows - len(lam_t))
    if any(inner[i] > nu_t[i] for i in range(rows)):
        return 0
    cells = [(r, c) for r in range(rows) for c in range(inner[r], nu_t[r])]
    m = len(mu_t)
    if not cells:
        return 1 if m == 0 else 0
    count = 0
    for labels in itertools.product(range(1, m + 1), repeat=len(cells)):
        grid = dict(zip(cells, labels))
        if any(labels.count(k + 1) != mu_t[k] for k in range(m)):
            continue
        ok = True
        for (r, c), v in grid.items():
            if (r, c - 1) in grid and grid[(r, c - 1)] > v:
                ok = False
                break
            if (r - 1, c) in grid and grid[(r - 1, c)] >= v:
                ok = False
                break
        if not ok:
            continue
        # right to left along each row, top row first
        word = [grid[(r, c)] for r in range(rows)
                for c in range(nu_t[r] - 1, inner[r] - 1, -1)]
        counts = [0] * (m + 1)
        for v in word:
            counts[v] += 1
            if v > 1 and counts[v] > counts[v - 1]:
                ok = False
                break
        if ok:
            count += 1
    return count


def P(parts):
    return Partition(tuple(parts))


small_partitions = st.lists(st.integers(0, 3), max_size=3).map(
    lambda xs: P(sorted(xs, reverse=True))
)


class TestFixedValues:
    def test_textbook_two(self):
        assert lr_coefficient(P([2, 1]), P([2, 1]), P([3, 2, 1])) == 2

    def test_trivial_identity(self):
        assert lr_coefficient(P([1]), P([]), P([1])) == 1
        assert lr_coefficient(P([]), P([]), P([])) == 1

    def test_weight_mismatch(self):
        assert lr_coefficient(P([1]), P([1]), P([3])) == 0

    def test_containment_failure(self):
        assert lr_coefficient(P([3]), P([1]), P([2, 2])) == 0

    def test_square_of_single_column(self):
        # s_{11}^2 = s_22 + s_211 + s_1111
        lam = mu = P([1, 1])
        assert lr_coefficient(lam, mu, P([2, 2])) == 1
        assert lr_coefficient(lam, mu, P([2, 1, 1])) == 1
        assert lr_coefficient(lam, mu, P([1, 1, 1, 1])) == 1
        assert lr_coefficient(lam, mu, P([3, 1])) == 0

    def test_long_rows(self):
        assert lr_coefficient(P([5, 2]), P([3, 0]), P([8, 2])) == 1


def horizontal_strip(lam, nu):
    lam_p = list(lam.trimmed().parts)
    nu_p = list(nu.trimmed().parts)
    if len(lam_p) > len(nu_p):
        return False
    lam_p += [0] * (len(nu_p) - len(lam_p))
    for i in range(len(nu_p)):
        if lam_p[i] > nu_p[i]:
            return False
        if i + 1 < len(nu_p) and nu_p[i + 1] > lam_p[i]:
            return False
    return True


class TestPieri:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_row_multiplication(self, k):
        shapes = [P(s) for s in [(2, 1), (3,), (2, 2), (1, 1, 1), (3, 1)]]
        for lam in shapes:
            total = sum(lam.parts) + k
            for nu in _all_partitions(total, 4, 6):
                expected = 1 if horizontal_strip(lam, nu) else 0
                assert lr_coefficient(lam, P([k]), nu) == expected


def _all_partitions(total, max_len, max_part):
    out = []

    def rec(rest, longest, acc):
        if rest == 0:
            out.append(P(acc))
            return
        if len(acc) == max_len:
            return
        for part in range(min(rest, longest), 0, -1):
            rec(rest - part, part, acc + [part])

    rec(total, max_part, [])
    return out


class TestOracle:
    def test_exhaustive_small(self):
        shapes = [P(s) for s in [(), (1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1)]]
        for lam in shapes:
            for mu in shapes:
                total = sum(lam.parts) + sum(mu.parts)
                for nu in _all_partitions(total, 4, 5) or [P([])]:
                    assert lr_coefficient(lam, mu, nu) == oracle_lr(lam, mu, nu), (
                        lam.parts,
                        mu.parts,
                        nu.parts,
                    )

    @settings(max_examples=60, deadline=None)
    @given(small_partitions, small_partitions, small_partitions)
    def test_random_triples(self, lam, mu, nu):
        assert lr_coefficient(lam, mu, nu) == oracle_lr(lam, mu, nu)


class TestProperties:
    @settings(max_examples=80, deadline=None)
    @given(small_partitions, small_partitions, small_partitions)
    def test_symmetry(self, lam, mu, nu):
        assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)

    @settings(max_examples=80, deadline=None)
    @given(small_partitions, small_partitions, small_partitions)
    def test_nonzero_agrees(self, lam, mu, nu):
        assert lr_nonzero(lam, mu, nu) == (lr_coefficient(lam, mu, nu) > 0)

    @settings(max_examples=40, deadline=None)
    @given(small_partitions, small_partitions)
    def test_padding_invariance(self, lam, mu):
        total = sum(lam.parts) + sum(mu.parts)
        for nu in _all_partitions(total, 3, 6)[:10]:
            a = lr_coefficient(lam, mu, nu)
            b = lr_coefficient(
                lam.padded(len(lam) + 2), mu.padded(len(mu) + 1), nu.padded(len(nu) + 3)
            )
            assert a == b

    def test_empty_mu_is_kronecker(self):
        for lam in _all_partitions(4, 3, 4):
            for nu in _all_partitions(4, 3, 4):
                expected = 1 if lam.trimmed() == nu.trimmed() else 0
                assert lr_coefficient(lam, P([]), nu) == expected
