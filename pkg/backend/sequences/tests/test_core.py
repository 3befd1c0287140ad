from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from sequences.core import (EMPTY, BinarySequence, Run, all_sequences,
                            alternating, concat)


def seq(text):
    return BinarySequence.parse(text)


class BinarySequenceParseTests(SimpleTestCase):

    def test_empty_text_gives_empty_word(self):
        self.assertEqual(seq(''), EMPTY)
        self.assertEqual(len(seq('')), 0)

    def test_bits_follow_text(self):
        x = seq('1010')
        self.assertEqual([x[i] for i in range(1, 5)], [1, 0, 1, 0])

    def test_format_inverts_parse(self):
        self.assertEqual(str(seq('011001010')), '011001010')
        for x in all_sequences(6):
            self.assertEqual(seq(x.format()), x)

    def test_rejects_non_binary_characters(self):
        with self.assertRaises(ValidationError):
            seq('10a1')

    def test_rejects_words_longer_than_64(self):
        seq('1' * 64)
        with self.assertRaises(ValidationError):
            seq('1' * 65)

    def test_index_out_of_range(self):
        with self.assertRaises(IndexError):
            seq('101')[4]


class BinarySequenceOperationsTests(SimpleTestCase):

    def test_complement(self):
        self.assertEqual(seq('1010').complement(), seq('0101'))
        self.assertEqual(seq('').complement(), seq(''))
        x = seq('0110010')
        self.assertEqual(x.complement().complement(), x)

    def test_reverse(self):
        self.assertEqual(seq('100').reverse(), seq('001'))
        self.assertEqual(seq('010').reverse(), seq('010'))
        x = seq('011001010')
        self.assertEqual(x.reverse().reverse(), x)

    def test_concat(self):
        self.assertEqual(seq('10').concat(seq('01')), seq('1001'))
        self.assertEqual(seq('0110').concat(EMPTY), seq('0110'))
        self.assertEqual(
            concat(seq('101010'), concat(seq('10101'), seq('10'))),
            seq('1010101010110'),
        )

    def test_concat_rejects_long_result(self):
        with self.assertRaises(ValidationError):
            concat(seq('1' * 40), seq('0' * 25))

    def test_project(self):
        x = seq('1010')
        self.assertEqual(x.project(2, 3), seq('01'))
        self.assertEqual(x.project(1, 4), x)
        self.assertEqual(x.project(3, 2), EMPTY)

    def test_project_out_of_range(self):
        with self.assertRaises(ValidationError):
            seq('1010').project(2, 5)
        with self.assertRaises(ValidationError):
            seq('1010').project(4, 2)

    def test_alternating(self):
        self.assertEqual(alternating(5, 1), seq('10101'))
        self.assertEqual(alternating(1, 0), seq('0'))
        self.assertEqual(alternating(0, 1), EMPTY)

    def test_alternating_predicates(self):
        self.assertTrue(seq('10101').is_alternating())
        self.assertFalse(seq('1100').is_two_periodic())
        self.assertFalse(seq('1100').is_alternating())
        self.assertTrue(seq('0').is_alternating())
        self.assertTrue(seq('11').is_two_periodic())
        self.assertFalse(seq('11').is_alternating())

    def test_runs(self):
        self.assertEqual(
            seq('11011').runs(), [Run(1, 2, 1), Run(3, 3, 0), Run(4, 5, 1)]
        )
        self.assertEqual(seq('0000').runs(), [Run(1, 4, 0)])
        self.assertEqual(seq('').runs(), [])


class BinarySequencePropertyTests(SimpleTestCase):

    def test_reverse_of_concat(self):
        for u in all_sequences(3):
            for v in all_sequences(4):
                self.assertEqual(
                    concat(u, v).reverse(), concat(v.reverse(), u.reverse())
                )

    def test_alternating_word_has_n_runs(self):
        for n in range(0, 65):
            self.assertEqual(len(alternating(n, 1).runs()), n)

    def test_projections_reassemble(self):
        for n in range(0, 8):
            for x in all_sequences(n):
                for k in range(0, n + 1):
                    self.assertEqual(
                        concat(x.project(1, k), x.project(k + 1, n)), x
                    )

    def test_runs_count_transitions(self):
        for n in range(1, 9):
            for x in all_sequences(n):
                runs = x.runs()
                self.assertEqual(len(runs), 1 + x.transitions())
                self.assertEqual(runs[0].start, 1)
                self.assertEqual(runs[-1].end, n)
                for left, right in zip(runs, runs[1:]):
                    self.assertEqual(left.end + 1, right.start)
                    self.assertNotEqual(left.symbol, right.symbol)

    def test_two_periodic_definition(self):
        for n in range(0, 9):
            for x in all_sequences(n):
                expected = all(x[k] == x[k + 2] for k in range(1, n - 1))
                self.assertEqual(x.is_two_periodic(), expected)
