from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from reconstruct.channel import ReadSet, channel_reads, delete_positions
from sequences.balls import ball_size, deletion_ball
from sequences.core import BinarySequence


def seq(text):
    return BinarySequence.parse(text)


class ChannelTests(SimpleTestCase):

    def test_delete_positions(self):
        self.assertEqual(delete_positions(seq('110100'), [1, 4]), seq('1000'))
        self.assertEqual(delete_positions(seq('10'), []), seq('10'))

    def test_whole_ball_on_exhaustion(self):
        x = seq('011001010')
        reads = channel_reads(x, 4, ball_size(x, 4), seed=3)
        self.assertEqual(reads.reads, deletion_ball(x, 4).elements)

    def test_no_deletions(self):
        x = seq('1011')
        self.assertEqual(channel_reads(x, 0, 1, seed=5).reads, (x,))

    def test_reads_are_distinct_members_of_ball(self):
        x = seq('0110011001')
        ball = deletion_ball(x, 3)
        reads = channel_reads(x, 3, 20, seed=11)
        self.assertEqual(len(reads), 20)
        self.assertEqual(len(set(reads)), 20)
        for read in reads:
            self.assertIn(read, ball)

    def test_deterministic_for_seed(self):
        x = seq('0110011001')
        self.assertEqual(
            channel_reads(x, 3, 15, seed=42), channel_reads(x, 3, 15, seed=42)
        )

    def test_count_exceeds_ball(self):
        with self.assertRaises(ValidationError) as error:
            channel_reads(seq('0000'), 1, 2, seed=0)
        self.assertEqual(error.exception.code, 'precondition')

    def test_radius_out_of_range(self):
        with self.assertRaises(ValidationError) as error:
            channel_reads(seq('01'), 3, 1, seed=0)
        self.assertEqual(error.exception.code, 'out_of_range')

    def test_read_set_invariants(self):
        with self.assertRaises(ValidationError):
            ReadSet(1, (seq('10'), seq('1')))
        with self.assertRaises(ValidationError):
            ReadSet(1, (seq('10'), seq('10')))
