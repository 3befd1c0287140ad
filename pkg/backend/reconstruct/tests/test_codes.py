from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from reconstruct.channel import ReadSet
from reconstruct.codes import Codebook, decode, greedy_code, vt_code
from sequences.balls import deletion_ball, is_subsequence
from sequences.core import BinarySequence, all_sequences


def seq(text):
    return BinarySequence.parse(text)


class GreedyCodeTests(SimpleTestCase):

    def test_distance_one_keeps_everything(self):
        code = greedy_code(4, 1)
        self.assertEqual(len(code), 16)
        self.assertEqual(code.words[0], seq('0000'))

    def test_unattainable_distance(self):
        self.assertEqual(len(greedy_code(5, 6)), 1)

    def test_pairwise_distance(self):
        code = greedy_code(8, 3)
        self.assertGreater(len(code), 1)
        self.assertTrue(code.is_valid())
        self.assertEqual(code.words[0], seq('00000000'))

    def test_greedy_is_deterministic(self):
        self.assertEqual(greedy_code(7, 2), greedy_code(7, 2))

    def test_seed_words_come_first(self):
        x, y = seq('011001010'), seq('101011001')
        code = greedy_code(9, 3, (x, y))
        self.assertEqual(code.words[:2], (x, y))
        self.assertTrue(code.is_valid())

    def test_invalid_seed_words(self):
        with self.assertRaises(ValidationError) as error:
            greedy_code(4, 2, (seq('0000'), seq('0001')))
        self.assertEqual(error.exception.code, 'precondition')
        with self.assertRaises(ValidationError) as error:
            greedy_code(4, 2, (seq('000'),))
        self.assertEqual(error.exception.code, 'length_mismatch')

    def test_length_limit(self):
        with self.assertRaises(ValidationError) as error:
            greedy_code(17, 2)
        self.assertEqual(error.exception.code, 'out_of_range')


class VtCodeTests(SimpleTestCase):

    def test_single_deletion_correcting(self):
        for n in range(1, 9):
            code = vt_code(n)
            self.assertTrue(code.is_valid(), n)

    def test_residue_classes_partition_words(self):
        total = sum(len(vt_code(6, residue)) for residue in range(7))
        self.assertEqual(total, 64)


class DecodeTests(SimpleTestCase):

    def test_single_read_over_all_words(self):
        read = seq('101')
        code = Codebook(4, 1, tuple(all_sequences(4)))
        candidates = decode(ReadSet(1, (read,)), code)
        self.assertEqual(
            candidates,
            [word for word in all_sequences(4) if is_subsequence(read, word)],
        )

    def test_whole_ball_identifies_codeword(self):
        code = greedy_code(8, 3)
        word = code.words[len(code) // 2]
        reads = ReadSet(2, deletion_ball(word, 2).elements)
        self.assertEqual(decode(reads, code), [word])

    def test_foreign_read(self):
        code = Codebook(3, 3, (seq('000'),))
        self.assertEqual(decode(ReadSet(1, (seq('11'),)), code), [])

    def test_empty_reads(self):
        with self.assertRaises(ValidationError):
            decode(ReadSet(1, ()), greedy_code(4, 1))

    def test_length_mismatch(self):
        with self.assertRaises(ValidationError) as error:
            decode(ReadSet(1, (seq('10'),)), greedy_code(4, 1))
        self.assertEqual(error.exception.code, 'length_mismatch')
