"""Domino tableau enumeration, reading words, and the tileability test."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hornlab import (
    Domino,
    DominoTableau,
    Partition,
    cl_coefficient,
    enumerate_domino_tableaux,
    enumerate_yamanouchi_tableaux,
    is_domino_decomposable,
    is_yamanouchi,
    lr_coefficient,
    reading_word,
    tau_partitions,
    yamanouchi_tableaux_by_weight,
    yamanouchi_weight_census,
)


def P(parts):
    return Partition(tuple(parts))


def oracle_tileable(shape):
    """Plain backtracking over unlabeled domino placements."""
    rows = shape.trimmed().parts
    cells = {(r + 1, c + 1) for r, length in enumerate(rows) for c in range(length)}
    if len(cells) % 2:
        return False

    def rec(free):
        if not free:
            return True
        cell = min(free)
        r, c = cell
        for other in ((r, c + 1), (r + 1, c)):
            if other in free:
                if rec(free - {cell, other}):
                    return True
        return False

    return rec(frozenset(cells))


def word_str(t):
    return "".join(str(x) for x in reading_word(t))


class TestTileability:
    @pytest.mark.parametrize(
        "parts,expected",
        [
            ((), True),
            ((2,), True),
            ((1, 1), True),
            ((1,), False),
            ((2, 1), False),
            ((3, 1), True),
            ((2, 1, 1), True),
            ((3, 2, 1), False),
            ((10, 6, 4, 0), True),
            ((2, 2, 2, 2), True),
        ],
    )
    def test_fixed(self, parts, expected):
        assert is_domino_decomposable(P(parts)) is expected

    def test_matches_backtracking_oracle(self):
        seen = 0
        for total in range(0, 9):
            for shape in _partitions(total, 5, 8):
                assert is_domino_decomposable(shape) == oracle_tileable(shape), shape.parts
                seen += 1
        assert seen >= 60


def _partitions(total, max_len, max_part):
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


class TestReadingWord:
    def test_single_horizontal(self):
        t = DominoTableau(P([2]), [Domino(1, 1, True, 1)])
        assert reading_word(t) == (1,)

    def test_single_vertical(self):
        t = DominoTableau(P([1, 1]), [Domino(1, 1, False, 1)])
        assert reading_word(t) == (1,)

    def test_column_order_top_to_bottom(self):
        t = DominoTableau(
            P([1, 1, 1, 1]),
            [Domino(1, 1, False, 1), Domino(3, 1, False, 2)],
        )
        assert reading_word(t) == (1, 2)

    def test_columns_right_to_left(self):
        t = DominoTableau(
            P([2, 2]),
            [Domino(1, 1, False, 1), Domino(1, 2, False, 2)],
        )
        assert reading_word(t) == (2, 1)

    def test_yamanouchi_predicate(self):
        assert is_yamanouchi((1, 1, 2, 1, 2))
        assert is_yamanouchi(())
        assert not is_yamanouchi((2,))
        assert not is_yamanouchi((1, 2, 2))
        assert is_yamanouchi((1, 2, 1, 3, 2, 1))


class TestFixtureShape:
    """Shape (10,6,4,0): the pinned two-label census."""

    def test_census_weights_and_words(self):
        by_weight = yamanouchi_tableaux_by_weight(P([10, 6, 4, 0]), max_labels=2)
        assert set(by_weight) == {(5, 5), (6, 4), (7, 3), (8, 2)}
        words = {w: [word_str(t) for t in ts] for w, ts in by_weight.items()}
        assert words[(5, 5)] == ["1112212212"]
        assert words[(6, 4)] == ["1112212112"]
        assert words[(7, 3)] == ["1112112112"]
        assert words[(8, 2)] == ["1111112112"]

    def test_census_counts_only(self):
        census = yamanouchi_weight_census(P([10, 6, 4, 0]), max_labels=2)
        assert census == {(5, 5): 1, (6, 4): 1, (7, 3): 1, (8, 2): 1}

    def test_non_yamanouchi_enumeration_is_larger(self):
        shape = P([10, 6, 4, 0])
        allt = enumerate_domino_tableaux(shape, P([5, 5]))
        yam = enumerate_yamanouchi_tableaux(shape, P([5, 5]))
        assert set(yam) <= set(allt)
        assert len(allt) > len(yam)


class TestEnumeration:
    def test_size_mismatch_is_empty(self):
        assert enumerate_domino_tableaux(P([2, 2]), P([3])) == []

    def test_untileable_shape_is_empty(self):
        assert enumerate_domino_tableaux(P([2, 1]), P([1])) == []
        assert enumerate_yamanouchi_tableaux(P([3, 2, 1]), P([3])) == []

    def test_empty_shape(self):
        ts = enumerate_domino_tableaux(P([]), P([]))
        assert len(ts) == 1
        assert reading_word(ts[0]) == ()

    def test_deterministic_order(self):
        shape, weight = P([4, 2, 2]), P([2, 2])
        first = enumerate_domino_tableaux(shape, weight)
        second = enumerate_domino_tableaux(shape, weight)
        assert first == second
        texts = [t.to_text() for t in first]
        assert texts == sorted(texts) or len(set(texts)) == len(texts)

    def test_column_strictness_rejects_stacked_same_label(self):
        # shape (2,2,2,2) with weight (3,1) has no Yamanouchi filling:
        # the three label-1 dominoes cannot avoid a repeated label in a column
        assert enumerate_yamanouchi_tableaux(P([2, 2, 2, 2]), P([3, 1])) == []

    def test_weight_reported_matches_request(self):
        for t in enumerate_domino_tableaux(P([4, 4]), P([2, 2])):
            assert t.weight() == (2, 2)


class TestSerialization:
    def test_round_trip_fixture_shape(self):
        for t in enumerate_domino_tableaux(P([4, 2, 2]), P([2, 2])):
            assert DominoTableau.from_text(t.to_text()) == t

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from(_partitions(8, 4, 5)))
    def test_round_trip_random_shapes(self, shape):
        for weight in _partitions(4, 4, 4):
            for t in enumerate_domino_tableaux(shape, weight)[:5]:
                assert DominoTableau.from_text(t.to_text()) == t

    def test_invalid_construction_rejected(self):
        with pytest.raises(ValueError):
            # overlapping dominoes
            DominoTableau(P([2, 2]), [Domino(1, 1, True, 1), Domino(1, 1, False, 1)])
        with pytest.raises(ValueError):
            # escapes the diagram
            DominoTableau(P([2]), [Domino(1, 2, True, 1)])
        with pytest.raises(ValueError):
            # column repeats a label across two vertical dominoes
            DominoTableau(
                P([1, 1, 1, 1]),
                [Domino(1, 1, False, 1), Domino(3, 1, False, 1)],
            )


class TestAgainstClassicalRoute:
    def test_box_sweep(self):
        shapes = [s.padded(2) for s in _partitions_upto(6, 2, 3)]
        for lam in shapes:
            for mu in shapes:
                total = sum(lam.parts) + sum(mu.parts)
                for nu in _partitions(total, 4, 6) or [P([])]:
                    assert cl_coefficient(lam, mu, nu) == lr_coefficient(lam, mu, nu), (
                        lam.parts,
                        mu.parts,
                        nu.parts,
                    )

    def test_tau_shape_is_decomposable(self):
        for lam in _partitions_upto(4, 2, 2):
            for mu in _partitions_upto(4, 2, 2):
                r = max(len(lam), len(mu))
                shape = tau_partitions(lam.padded(r), mu.padded(r))
                assert is_domino_decomposable(shape)


def _partitions_upto(total, max_len, max_part):
    out = []
    for k in range(total + 1):
        out.extend(_partitions(k, max_len, max_part))
    return out
