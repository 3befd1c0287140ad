from django.test import SimpleTestCase, tag

from reconstruct.experiment import (ThresholdReport, resolve_nvalue,
                                   threshold_experiment)


class ThresholdExperimentTests(SimpleTestCase):

    def assert_threshold(self, report):
        self.assertEqual(report.successes, report.attempted)
        self.assertEqual(report.sharp_reads, report.nvalue)
        self.assertGreaterEqual(report.sharp_candidates, 2)
        self.assertTrue(report.passed)

    def test_extremal_pair_at_nine(self):
        report = threshold_experiment(9, 3, 4, trials=200, seed=1,
                                      use_cache=False)
        self.assertEqual(report.nvalue, 26)
        self.assertEqual(report.threshold, 27)
        self.assertEqual(str(report.sharp_x), '011001010')
        self.assertGreater(report.attempted, 0)
        self.assert_threshold(report)

    def test_single_deletion_with_all_words(self):
        report = threshold_experiment(6, 1, 1, trials=40, seed=2,
                                      use_cache=False)
        self.assertEqual(report.nvalue, 2)
        self.assertEqual(report.code_size, 64)
        self.assertEqual(report.nvalue_source, 'formula:d1')
        self.assertGreater(report.attempted, 0)
        self.assertEqual(report.positive_pass_rate, 1.0)
        self.assertTrue(report.passed)

    def test_searched_witness(self):
        report = threshold_experiment(7, 2, 3, trials=100, seed=3,
                                      use_cache=False)
        self.assertEqual(report.nvalue, 13)
        self.assertEqual(report.nvalue_source, 'table:quoted')
        self.assert_threshold(report)

    def test_reproducible(self):
        first = threshold_experiment(8, 2, 3, trials=100, seed=9,
                                     use_cache=False)
        second = threshold_experiment(8, 2, 3, trials=100, seed=9,
                                      use_cache=False)
        self.assertEqual(first, second)
        self.assertEqual(
            (first.nvalue, first.nvalue_source), (18, 'formula:d2')
        )
        self.assert_threshold(first)

    def test_vt_code(self):
        report = threshold_experiment(8, 2, 3, trials=30, seed=4, code='vt',
                                      use_cache=False)
        self.assertEqual(report.successes, report.attempted)

    def test_resolve_large_n_uses_construction(self):
        value, source, witness = resolve_nvalue(20, 3, 4)
        self.assertEqual((value, source), (234, 'formula:d3t4'))
        self.assertEqual(witness.intersection, 234)

    @tag('slow')
    def test_ten_with_many_trials(self):
        for n in (9, 10):
            report = threshold_experiment(n, 3, 4, trials=200, seed=0,
                                          use_cache=False)
            self.assert_threshold(report)

    def test_missing_witness_is_not_a_pass(self):
        report = ThresholdReport(
            n=5, d=2, t=2, trials=3, seed=0, code='greedy', code_size=4,
            nvalue=4, nvalue_source='table:quoted', successes=3, skipped=0,
            sharp_x=None, sharp_y=None, sharp_reads=0, sharp_candidates=0,
        )
        self.assertFalse(report.sharpness_checked)
        self.assertFalse(report.passed)
