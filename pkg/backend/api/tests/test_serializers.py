from io import BytesIO

from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from api.serializers import (BinarySequenceField, CacheDocumentSerializer,
                             ClaimRecordSerializer, FamilyReportSerializer,
                             SearchReportSerializer,
                             ThresholdReportSerializer)
from reconstruct.experiment import ThresholdReport
from search.engine import nvalue_search
from search.families import constrained_max
from search.reports import ClaimRecord
from sequences.core import BinarySequence


def seq(text):
    return BinarySequence.parse(text)


class BinarySequenceFieldTests(SimpleTestCase):

    def test_parse_and_format(self):
        field = BinarySequenceField()
        self.assertEqual(field.run_validation('0101'), seq('0101'))
        self.assertEqual(field.to_representation(seq('0011')), '0011')

    def test_rejects_invalid_text(self):
        field = BinarySequenceField()
        for value in ('01a', 5, '1' * 65):
            with self.assertRaises(ValidationError):
                field.run_validation(value)


class CacheDocumentSerializerTests(SimpleTestCase):

    def document(self, **changes):
        data = CacheDocumentSerializer.from_report(nvalue_search(6, 3, 4))
        data.update(changes)
        return data

    def test_round_trip_through_json(self):
        report = nvalue_search(6, 3, 4)
        document = CacheDocumentSerializer.from_report(report)
        raw = JSONRenderer().render(document)
        serializer = CacheDocumentSerializer(
            data=JSONParser().parse(BytesIO(raw))
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.to_report(), report)

    def test_rejects_witness_of_wrong_length(self):
        serializer = CacheDocumentSerializer(
            data=self.document(witness_x='0101')
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn('witness_x', serializer.errors)

    def test_rejects_half_witness(self):
        serializer = CacheDocumentSerializer(
            data=self.document(witness_y=None)
        )
        self.assertFalse(serializer.is_valid())

    def test_rejects_distance_above_radius(self):
        serializer = CacheDocumentSerializer(data=self.document(d=5))
        self.assertFalse(serializer.is_valid())


class ReportSerializerTests(SimpleTestCase):

    def test_search_report(self):
        data = SearchReportSerializer(nvalue_search(5, 3, 4)).data
        self.assertEqual(data['schema_version'], 1)
        self.assertEqual(data['value'], 2)
        self.assertEqual(data['witness']['intersection'], 2)
        self.assertGreaterEqual(data['witness']['distance'], 3)
        self.assertEqual(
            list(data),
            ['schema_version', 'n', 'd', 't', 'value', 'witness',
             'pairs_scanned', 'classes_scanned', 'engine', 'engine_version',
             'elapsed'],
        )

    def test_claim_record(self):
        data = ClaimRecordSerializer(
            ClaimRecord.trusted('N(14,3,4)', 'таблица', 114)
        ).data
        self.assertIsNone(data['computed'])
        self.assertEqual(data['status'], 'trusted-not-recomputed')

    def test_family_report(self):
        data = FamilyReportSerializer(constrained_max('tail-pair')).data
        self.assertEqual(data['params'], {})
        self.assertEqual(data['x_radius'], 4)
        self.assertEqual(len(data['x']), 8)

    def test_threshold_report_without_witness(self):
        report = ThresholdReport(
            n=5, d=2, t=2, trials=3, seed=0, code='greedy', code_size=4,
            nvalue=4, nvalue_source='table:quoted', successes=2, skipped=1,
            sharp_x=None, sharp_y=None, sharp_reads=0, sharp_candidates=0,
        )
        data = ThresholdReportSerializer(report).data
        self.assertIsNone(data['sharpness_witness'])
        self.assertEqual(data['threshold'], 5)
        self.assertEqual(data['positive_pass_rate'], 1.0)
        self.assertEqual(data['params']['seed_rule'], 'seed + trial')
        self.assertFalse(data['sharpness_checked'])
        self.assertFalse(data['passed'])
