from dataclasses import dataclass
from typing import List

from django.core.exceptions import ValidationError
from django.core.validators import MaxLengthValidator, RegexValidator

MAX_LENGTH = 64

binary_text_validator = RegexValidator(
    regex=r'^[01]*$',
    message='Последовательность должна состоять только из символов 0 и 1!',
    code='invalid',
)
max_length_validator = MaxLengthValidator(
    MAX_LENGTH,
    f'Длина последовательности не должна превышать {MAX_LENGTH}!',
)


def _mask(length):
    return (1 << length) - 1


def _check_length(length):
    if not 0 <= length <= MAX_LENGTH:
        raise ValidationError(
            f'Недопустимая длина {length}: ожидается от 0 до {MAX_LENGTH}.',
            code='out_of_range',
        )


@dataclass(frozen=True, order=True)
class BinarySequence:
    """
    Двоичное слово x_1 ... x_n длины не более 64.

    Бит x_1 хранится в старшем разряде ``bits``, поэтому порядок по
    (length, bits) совпадает с лексикографическим для слов одной длины.
    """

    length: int
    bits: int

    def __post_init__(self):
        _check_length(self.length)
        if self.bits < 0 or self.bits >> self.length:
            raise ValidationError(
                'Значащие биты выходят за пределы длины последовательности.',
                code='invalid',
            )

    @classmethod
    def parse(cls, text):
        """
        Разбор текстового представления: крайний левый символ — x_1.
        """

        max_length_validator(text)
        binary_text_validator(text)
        return cls(len(text), int(text, 2) if text else 0)

    def format(self):
        if not self.length:
            return ''
        return format(self.bits, f'0{self.length}b')

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BinarySequence('{self.format()}')"

    def __len__(self):
        return self.length

    def __getitem__(self, i):
        """Бит x_i, индексация с единицы."""

        if not 1 <= i <= self.length:
            raise IndexError(f'Индекс {i} вне диапазона [1, {self.length}].')
        return (self.bits >> (self.length - i)) & 1

    def __iter__(self):
        for i in range(1, self.length + 1):
            yield self[i]

    def complement(self):
        return BinarySequence(self.length, self.bits ^ _mask(self.length))

    def reverse(self):
        reversed_bits = 0
        bits = self.bits
        for _ in range(self.length):
            reversed_bits = (reversed_bits << 1) | (bits & 1)
            bits >>= 1
        return BinarySequence(self.length, reversed_bits)

    def concat(self, *others):
        return concat(self, *others)

    def project(self, i, j):
        """
        Проекция x_i ... x_j; при i = j + 1 получается пустое слово.
        """

        if not (1 <= i <= j + 1 and j <= self.length):
            raise ValidationError(
                f'Недопустимый интервал [{i}, {j}] для длины {self.length}.',
                code='out_of_range',
            )
        width = j - i + 1
        return BinarySequence(
            width, (self.bits >> (self.length - j)) & _mask(width)
        )

    def is_two_periodic(self):
        if self.length <= 2:
            return True
        return (self.bits >> 2) == (self.bits & _mask(self.length - 2))

    def is_alternating(self):
        if self.length <= 1:
            return True
        return self.is_two_periodic() and self[1] != self[2]

    def transitions(self):
        """Число индексов i, для которых x_i != x_{i+1}."""

        if self.length <= 1:
            return 0
        return bin((self.bits ^ (self.bits >> 1)) & _mask(self.length - 1)
                   ).count('1')

    def runs(self) -> List['Run']:
        result = []
        start = 1
        for i in range(2, self.length + 2):
            if i > self.length or self[i] != self[start]:
                result.append(Run(start, i - 1, self[start]))
                start = i
        return result

    def hamming_distance(self, other):
        if self.length != other.length:
            raise ValidationError(
                'Расстояние Хэмминга определено для слов равной длины.',
                code='length_mismatch',
            )
        return bin(self.bits ^ other.bits).count('1')


@dataclass(frozen=True)
class Run:
    """Максимальный интервал одинаковых символов."""

    start: int
    end: int
    symbol: int

    def __len__(self):
        return self.end - self.start + 1


EMPTY = BinarySequence(0, 0)


def concat(*parts):
    length = sum(part.length for part in parts)
    if length > MAX_LENGTH:
        raise ValidationError(
            f'Суммарная длина {length} превышает {MAX_LENGTH}.',
            code='out_of_range',
        )
    bits = 0
    for part in parts:
        bits = (bits << part.length) | part.bits
    return BinarySequence(length, bits)


def alternating(n, first=1):
    """
    Чередующаяся последовательность длины n с первым битом ``first``.

    alternating(n, 1) — это 1010...
    """

    _check_length(n)
    pattern = int(('10' * ((n + 1) // 2))[:n] or '0', 2)
    if first == 0:
        pattern ^= _mask(n)
    return BinarySequence(n, pattern)


def all_sequences(n):
    """Все слова длины n в лексикографическом порядке."""

    _check_length(n)
    for bits in range(1 << n):
        yield BinarySequence(n, bits)
