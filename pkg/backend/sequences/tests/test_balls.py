import numpy as np
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, tag

from sequences.balls import (ball_size, check_ball_maximum,
                             check_ball_recurrence, deletion_ball,
                             is_subsequence, lcs_length, levenshtein_distance,
                             max_ball_size)
from sequences.core import BinarySequence, all_sequences, alternating
from sequences.intersect import intersection_size_enumerated


def seq(text):
    return BinarySequence.parse(text)


def smallest_common_radius(x, y):
    t = 0
    while not intersection_size_enumerated(x, t, y, t):
        t += 1
    return t


class DeletionBallTests(SimpleTestCase):

    def test_single_deletions_are_deduplicated(self):
        ball = deletion_ball(seq('1010'), 1)
        self.assertEqual(
            [str(z) for z in ball], ['010', '100', '101', '110']
        )
        self.assertEqual(len(ball), 4)

    def test_zero_radius(self):
        x = seq('0110')
        self.assertEqual(list(deletion_ball(x, 0)), [x])

    def test_single_run_collapses(self):
        self.assertEqual(list(deletion_ball(seq('1111'), 2)), [seq('11')])

    def test_radius_outside_range_gives_empty_ball(self):
        self.assertEqual(len(deletion_ball(seq('101'), 4)), 0)
        self.assertEqual(len(deletion_ball(seq('101'), -1)), 0)
        self.assertEqual(ball_size(seq('101'), 4), 0)

    def test_membership(self):
        ball = deletion_ball(seq('1010'), 1)
        self.assertIn(seq('110'), ball)
        self.assertNotIn(seq('011'), ball)
        self.assertNotIn(seq('10'), ball)

    def test_full_radius_gives_empty_word(self):
        self.assertEqual(list(deletion_ball(seq('101'), 3)), [seq('')])


class SubsequenceTests(SimpleTestCase):

    def test_examples(self):
        self.assertTrue(is_subsequence(seq('101'), seq('1001')))
        self.assertTrue(is_subsequence(seq('110'), seq('1010')))
        self.assertFalse(is_subsequence(seq('011'), seq('1010')))
        self.assertTrue(is_subsequence(seq(''), seq('1010')))

    def test_agrees_with_ball_membership(self):
        for x in all_sequences(6):
            for t in range(0, 7):
                ball = deletion_ball(x, t)
                for z in all_sequences(6 - t):
                    self.assertEqual(is_subsequence(z, x), z in ball)


class BallSizeTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(ball_size(alternating(10, 1), 3), 64)
        self.assertEqual(ball_size(seq('0110'), 0), 1)
        self.assertEqual(ball_size(seq('1111'), 3), 1)
        self.assertEqual(ball_size(seq('011001010'), 4), 29)

    def test_counting_matches_enumeration(self):
        for n in range(0, 11):
            for x in all_sequences(n):
                for t in range(0, 5):
                    self.assertEqual(ball_size(x, t), len(deletion_ball(x, t)))

    @tag('slow')
    def test_counting_matches_enumeration_up_to_twelve(self):
        for n in (11, 12):
            for x in all_sequences(n):
                for t in range(0, 5):
                    self.assertEqual(ball_size(x, t), len(deletion_ball(x, t)))


class MaxBallSizeTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(max_ball_size(10, 3), 64)
        self.assertEqual(max_ball_size(8, 1), 8)
        self.assertEqual(max_ball_size(5, 7), 0)
        self.assertEqual(max_ball_size(-1, 0), 0)
        self.assertEqual(max_ball_size(5, -1), 0)

    def test_recurrence(self):
        for n in range(2, 41):
            for t in range(1, n):
                self.assertTrue(check_ball_recurrence(n, t), (n, t))

    def test_alternating_word_is_largest(self):
        for n in range(0, 11):
            for t in range(0, min(n, 5) + 1):
                self.assertTrue(check_ball_maximum(n, t), (n, t))

    @tag('slow')
    def test_alternating_word_is_largest_up_to_fourteen(self):
        for n in range(11, 15):
            for t in range(0, 6):
                self.assertTrue(check_ball_maximum(n, t), (n, t))


class DistanceTests(SimpleTestCase):

    def test_examples(self):
        x = seq('0110010')
        self.assertEqual(levenshtein_distance(x, x), 0)
        self.assertEqual(levenshtein_distance(seq('1010'), seq('0101')), 1)
        self.assertEqual(
            levenshtein_distance(seq('1010101010110'), seq('0110011010101')),
            3,
        )

    def test_lcs_examples(self):
        x = seq('1010')
        self.assertEqual(lcs_length(x, seq('0101')), 3)
        self.assertEqual(lcs_length(x, seq('')), 0)
        self.assertEqual(lcs_length(x, x), 4)

    def test_rejects_unequal_lengths(self):
        with self.assertRaises(ValidationError):
            levenshtein_distance(seq('101'), seq('10'))

    def test_lcs_matches_table(self):
        def table_lcs(x, y):
            rows = [[0] * (y.length + 1) for _ in range(x.length + 1)]
            for i in range(1, x.length + 1):
                for j in range(1, y.length + 1):
                    if x[i] == y[j]:
                        rows[i][j] = rows[i - 1][j - 1] + 1
                    else:
                        rows[i][j] = max(rows[i - 1][j], rows[i][j - 1])
            return rows[x.length][y.length]

        for x in all_sequences(6):
            for m in (4, 5, 6):
                for y in all_sequences(m):
                    self.assertEqual(lcs_length(x, y), table_lcs(x, y))

    def test_distance_is_smallest_common_radius(self):
        for n in range(1, 8):
            words = list(all_sequences(n))
            for x in words:
                for y in words:
                    self.assertEqual(
                        levenshtein_distance(x, y),
                        smallest_common_radius(x, y),
                    )

    @tag('slow')
    def test_distance_is_smallest_common_radius_up_to_ten(self):
        for n in range(8, 11):
            words = list(all_sequences(n))
            for x in words:
                for y in words:
                    self.assertEqual(
                        levenshtein_distance(x, y),
                        smallest_common_radius(x, y),
                    )

    def assert_metric(self, n):
        words = list(all_sequences(n))
        distances = np.array(
            [[levenshtein_distance(x, y) for y in words] for x in words],
            dtype=np.int8,
        )
        self.assertTrue((distances == distances.T).all())
        self.assertTrue((np.diag(distances) == 0).all())
        self.assertEqual(int((distances == 0).sum()), len(words))
        through = distances[:, :, None] + distances[None, :, :]
        self.assertTrue((distances[:, None, :] <= through).all(), n)

    def test_metric_axioms(self):
        for n in range(1, 8):
            self.assert_metric(n)

    @tag('slow')
    def test_metric_axioms_at_eight(self):
        self.assert_metric(8)
