"""The row-doubling injection and its inverse.

Each domino labeled k becomes two stacked copies labeled 2k-1 (upper) and
2k (lower); the reading word of the image is the letterwise doubling of the
input word, so the Yamanouchi property transfers. undo_duplicate recognizes
exactly the image.
"""

import pytest

from hornlab import (
    Domino,
    DominoTableau,
    Partition,
    doubled,
    duplicate,
    enumerate_yamanouchi_tableaux,
    is_yamanouchi,
    reading_word,
    sigma_split,
    tau_partitions,
    undo_duplicate,
    yamanouchi_tableaux_by_weight,
)


def P(parts):
    return Partition(tuple(parts))


def word_str(t):
    return "".join(str(x) for x in reading_word(t))


def letterwise_double(word):
    out = []
    for k in word:
        out += [2 * k - 1, 2 * k]
    return tuple(out)


class TestSmallestCases:
    def test_single_horizontal(self):
        t = DominoTableau(P([2]), [Domino(1, 1, True, 1)])
        u = duplicate(t)
        assert u.shape.trimmed().parts == (2, 2)
        assert sorted(u.dominoes) == [Domino(1, 1, True, 1), Domino(2, 1, True, 2)]
        assert reading_word(u) == (1, 2)
        assert undo_duplicate(u) == t

    def test_single_vertical(self):
        t = DominoTableau(P([1, 1]), [Domino(1, 1, False, 1)])
        u = duplicate(t)
        assert u.shape.trimmed().parts == (1, 1, 1, 1)
        assert sorted(u.dominoes) == [Domino(1, 1, False, 1), Domino(3, 1, False, 2)]
        assert reading_word(u) == (1, 2)
        assert undo_duplicate(u) == t

    def test_empty(self):
        t = DominoTableau(P([]), [])
        u = duplicate(t)
        assert u.dominoes == ()
        assert undo_duplicate(u) == t

    def test_odd_parts_allowed(self):
        (t,) = enumerate_yamanouchi_tableaux(P([2, 1, 1]), P([1, 1]))
        u = duplicate(t)
        assert u.shape.trimmed().parts == (2, 2, 1, 1, 1, 1)
        assert reading_word(u) == (1, 2, 3, 4)
        assert undo_duplicate(u) == t


class TestFixtureTableaux:
    """The four pinned tableaux of shape (10,6,4,0) and their images."""

    expected = {
        (5, 5): "12121234341234341234",
        (6, 4): "12121234341234121234",
        (7, 3): "12121234121234121234",
        (8, 2): "12121212121234121234",
    }

    def test_images(self):
        shape = P([10, 6, 4, 0])
        sigma = P([5, 3, 2, 0])
        target_shape = tau_partitions(sigma, sigma)
        by_weight = yamanouchi_tableaux_by_weight(shape, max_labels=2)
        for weight, tableaux in by_weight.items():
            (t,) = tableaux
            u = duplicate(t)
            assert word_str(u) == self.expected[weight]
            assert reading_word(u) == letterwise_double(reading_word(t))
            assert u.shape.trimmed() == target_shape.trimmed()
            assert u.weight() == doubled(P(weight)).trimmed().parts
            assert is_yamanouchi(reading_word(u))
            assert undo_duplicate(u) == t


class TestLaws:
    def sweep(self):
        for sigma_parts in [(2, 1, 1, 0), (3, 2, 1, 0), (3, 3, 2, 2), (4, 2, 2, 0)]:
            sigma = P(sigma_parts)
            minus, plus = sigma_split(sigma)
            shape = tau_partitions(plus, minus)
            for weight, tableaux in yamanouchi_tableaux_by_weight(
                shape, max_labels=2
            ).items():
                yield sigma, P(weight), tableaux

    def test_shape_weight_word_laws(self):
        for sigma, nu, tableaux in self.sweep():
            target = tau_partitions(sigma, sigma)
            for t in tableaux:
                u = duplicate(t)
                assert u.shape.trimmed() == target.trimmed()
                assert u.weight() == doubled(nu).trimmed().parts
                assert reading_word(u) == letterwise_double(reading_word(t))

    def test_injective_and_invertible(self):
        for sigma, nu, tableaux in self.sweep():
            images = [duplicate(t) for t in tableaux]
            assert len(set(images)) == len(tableaux)
            for t, u in zip(tableaux, images):
                assert undo_duplicate(u) == t


class TestImageRecognition:
    def test_side_by_side_verticals_rejected(self):
        u = DominoTableau(
            P([2, 2]), [Domino(1, 1, False, 1), Domino(1, 2, False, 2)]
        )
        assert undo_duplicate(u) is None

    def test_odd_label_count_rejected(self):
        u = DominoTableau(P([2]), [Domino(1, 1, True, 1)])
        assert undo_duplicate(u) is None

    def test_mismatched_orientation_rejected(self):
        # labels 1,2 but the partner of the horizontal 1 is not a horizontal 2
        u = DominoTableau(
            P([2, 1, 1]), [Domino(1, 1, True, 1), Domino(2, 1, False, 2)]
        )
        assert undo_duplicate(u) is None

    def test_vertical_partner_position_enforced(self):
        # odd count of labels and the label-3 vertical has no partner two
        # rows down, so recognition must fail on either ground
        u = DominoTableau(
            P([2, 2, 1, 1]),
            [Domino(1, 1, True, 1), Domino(2, 1, True, 2), Domino(3, 1, False, 3)],
        )
        assert undo_duplicate(u) is None

    def test_strictness_witness_exists(self):
        sigma = P([7, 6, 4, 3])
        shape = tau_partitions(sigma, sigma)
        weight = P([10, 10, 8, 8, 2, 2])
        outside = [
            t
            for t in enumerate_yamanouchi_tableaux(shape, weight)
            if undo_duplicate(t) is None
        ]
        assert outside
