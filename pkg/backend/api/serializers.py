from django.core.exceptions import ValidationError as DjangoValidationError

from rest_framework import serializers

from search.reports import SearchReport
from sequences.core import BinarySequence
from sequences.formulas import PairWitness

SCHEMA_VERSION = 1
RELATIONS = ('eq', 'le')
STATUSES = ('pass', 'fail', 'trusted-not-recomputed')


class BinarySequenceField(serializers.Field):
    """Двоичное слово в виде строки из символов 0 и 1."""

    default_error_messages = {
        'invalid': 'Ожидается строка из символов 0 и 1.',
    }

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail('invalid')
        try:
            return BinarySequence.parse(data)
        except DjangoValidationError as error:
            raise serializers.ValidationError(error.messages)

    def to_representation(self, value):
        return str(value)


class PairWitnessSerializer(serializers.Serializer):
    x = BinarySequenceField()
    y = BinarySequenceField()
    n = serializers.IntegerField(min_value=0)
    min_distance = serializers.IntegerField(min_value=1)
    radius = serializers.IntegerField(min_value=0)
    intersection = serializers.IntegerField(min_value=0)
    distance = serializers.IntegerField(read_only=True)
    rule = serializers.CharField(allow_blank=True)


class SearchReportSerializer(serializers.Serializer):
    """Отчёт о переборе N(n, d, t) для вывода в JSON."""

    schema_version = serializers.SerializerMethodField()
    n = serializers.IntegerField()
    d = serializers.IntegerField()
    t = serializers.IntegerField()
    value = serializers.IntegerField()
    witness = PairWitnessSerializer(allow_null=True)
    pairs_scanned = serializers.IntegerField()
    classes_scanned = serializers.IntegerField()
    engine = serializers.CharField()
    engine_version = serializers.CharField()
    elapsed = serializers.FloatField()

    def get_schema_version(self, obj):
        return SCHEMA_VERSION


class CacheDocumentSerializer(serializers.Serializer):
    """
    Запись кэша перебора. Свидетель хранится двумя строками,
    elapsed не сохраняется.
    """

    schema_version = serializers.IntegerField(min_value=1)
    n = serializers.IntegerField(min_value=1)
    d = serializers.IntegerField(min_value=1)
    t = serializers.IntegerField(min_value=1)
    value = serializers.IntegerField(min_value=0)
    witness_x = BinarySequenceField(allow_null=True)
    witness_y = BinarySequenceField(allow_null=True)
    pairs_scanned = serializers.IntegerField(min_value=0)
    classes_scanned = serializers.IntegerField(min_value=0)
    engine = serializers.CharField()
    engine_version = serializers.CharField()

    @staticmethod
    def from_report(report):
        witness = report.witness
        return {
            'schema_version': SCHEMA_VERSION,
            'n': report.n,
            'd': report.d,
            't': report.t,
            'value': report.value,
            'witness_x': str(witness.x) if witness else None,
            'witness_y': str(witness.y) if witness else None,
            'pairs_scanned': report.pairs_scanned,
            'classes_scanned': report.classes_scanned,
            'engine': report.engine,
            'engine_version': report.engine_version,
        }

    def validate(self, data):
        if data['d'] > data['t']:
            raise serializers.ValidationError('Требуется d <= t.')
        for key in ('witness_x', 'witness_y'):
            word = data[key]
            if word is not None and word.length != data['n']:
                raise serializers.ValidationError(
                    {key: f'Длина свидетеля должна быть {data["n"]}.'}
                )
        if (data['witness_x'] is None) != (data['witness_y'] is None):
            raise serializers.ValidationError(
                'Свидетель задаётся обоими словами или не задаётся.'
            )
        return data

    def to_report(self):
        data = self.validated_data
        witness = None
        if data['witness_x'] is not None:
            witness = PairWitness(
                data['witness_x'], data['witness_y'], data['n'], data['d'],
                data['t'], data['value'], 'search',
            )
        return SearchReport(
            n=data['n'], d=data['d'], t=data['t'], value=data['value'],
            witness=witness, pairs_scanned=data['pairs_scanned'],
            classes_scanned=data['classes_scanned'], engine=data['engine'],
            engine_version=data['engine_version'],
        )


class NValueSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    d = serializers.IntegerField()
    t = serializers.IntegerField()
    value = serializers.IntegerField(allow_null=True)
    source = serializers.CharField(allow_null=True)


class ClaimRecordSerializer(serializers.Serializer):
    claim_id = serializers.CharField()
    location = serializers.CharField()
    expected = serializers.IntegerField()
    computed = serializers.IntegerField(allow_null=True)
    relation = serializers.ChoiceField(choices=RELATIONS)
    status = serializers.ChoiceField(choices=STATUSES)
    blocking = serializers.BooleanField()


class FamilyReportSerializer(serializers.Serializer):
    family = serializers.CharField()
    params = serializers.SerializerMethodField()
    value = serializers.IntegerField()
    x = BinarySequenceField(allow_null=True)
    y = BinarySequenceField(allow_null=True)
    x_radius = serializers.IntegerField()
    y_radius = serializers.IntegerField()
    pairs_scanned = serializers.IntegerField()

    def get_params(self, obj):
        return dict(obj.params)


class SharpnessWitnessSerializer(serializers.Serializer):
    x = BinarySequenceField(source='sharp_x')
    y = BinarySequenceField(source='sharp_y')
    reads_count = serializers.IntegerField(source='sharp_reads')
    candidates = serializers.IntegerField(source='sharp_candidates')


class ThresholdReportSerializer(serializers.Serializer):
    """Итог эксперимента с порогом N + 1 прочтений."""

    schema_version = serializers.SerializerMethodField()
    params = serializers.SerializerMethodField()
    nvalue = serializers.IntegerField()
    nvalue_source = serializers.CharField()
    threshold = serializers.IntegerField()
    code_size = serializers.IntegerField()
    successes = serializers.IntegerField()
    skipped = serializers.IntegerField()
    positive_pass_rate = serializers.FloatField()
    sharpness_witness = serializers.SerializerMethodField()
    sharpness_checked = serializers.BooleanField()
    passed = serializers.BooleanField()
    elapsed = serializers.FloatField()

    def get_schema_version(self, obj):
        return SCHEMA_VERSION

    def get_params(self, obj):
        return {
            'n': obj.n, 'd': obj.d, 't': obj.t, 'trials': obj.trials,
            'seed': obj.seed, 'seed_rule': 'seed + trial',
            'code': obj.code, 'generator': obj.generator,
        }

    def get_sharpness_witness(self, obj):
        if obj.sharp_x is None:
            return None
        return SharpnessWitnessSerializer(obj).data
