from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Tuple

from django.core.exceptions import ValidationError

from .core import BinarySequence, all_sequences, alternating


@lru_cache(maxsize=1 << 16)
def _ball_bits(bits, length, t):
    """
    Множество подпоследовательностей длины length - t как целые числа.
    """

    if t < 0 or t > length:
        return frozenset()
    if t == 0:
        return frozenset((bits,))
    if t == length:
        return frozenset((0,))
    rest_length = length - 1
    rest = bits & ((1 << rest_length) - 1)
    head = (bits >> rest_length) << (rest_length - t)
    kept = frozenset(head | z for z in _ball_bits(rest, rest_length, t))
    return kept | _ball_bits(rest, rest_length, t - 1)


def ball_bits(x, t):
    """Элементы D_t(x) в виде целых чисел длины len(x) - t."""

    return _ball_bits(x.bits, x.length, t)


@dataclass(frozen=True)
class DeletionBall:
    """
    Шар удалений D_t(x): все подпоследовательности x длины n - t.

    Элементы хранятся в порядке возрастания.
    """

    center: BinarySequence
    radius: int
    elements: Tuple[BinarySequence, ...]

    @property
    def center_length(self):
        return self.center.length

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return (
            item.length == self.center.length - self.radius
            and item.bits in ball_bits(self.center, self.radius)
        )

    def intersection(self, other):
        if (self.center.length - self.radius
                != other.center.length - other.radius):
            return ()
        common = (ball_bits(self.center, self.radius)
                  & ball_bits(other.center, other.radius))
        length = self.center.length - self.radius
        return tuple(BinarySequence(length, bits) for bits in sorted(common))


def deletion_ball(x, t):
    length = x.length - t
    elements = tuple(
        BinarySequence(length, bits) for bits in sorted(ball_bits(x, t))
    )
    return DeletionBall(x, t, elements)


def is_subsequence(y, x):
    """Жадное вложение y в x слева направо."""

    position = 1
    for symbol in y:
        while position <= x.length and x[position] != symbol:
            position += 1
        if position > x.length:
            return False
        position += 1
    return True


def ball_size(x, t):
    """
    Размер D_t(x) без построения множества.

    Число различных подпоследовательностей длины n - t считается
    динамикой по префиксам с вычитанием повторов от предыдущего
    вхождения того же символа.
    """

    n = x.length
    if t < 0 or t > n:
        return 0
    target = n - t
    counts = [[1] + [0] * target]
    last = {}
    for i, symbol in enumerate(x, start=1):
        previous = counts[i - 1]
        row = [1] + [0] * target
        for k in range(1, min(i, target) + 1):
            row[k] = previous[k] + previous[k - 1]
            if symbol in last:
                row[k] -= counts[last[symbol] - 1][k - 1]
        last[symbol] = i
        counts.append(row)
    return counts[n][target]


def max_ball_size(n, t):
    """D(n, t): наибольший размер шара, достигается на чередующемся слове."""

    if n < 0 or t < 0 or t > n:
        return 0
    return sum(comb(n - t, i) for i in range(t + 1))


def check_ball_recurrence(n, t):
    """Проверка рекуррентности D(n, t) = D(n-1, t) + D(n-2, t-1)."""

    return max_ball_size(n, t) == (
        max_ball_size(n - 1, t) + max_ball_size(n - 2, t - 1)
    )


def check_ball_maximum(n, t):
    """
    Полный перебор слов длины n: максимум ball_size равен D(n, t)
    и достигается на чередующемся слове.
    """

    expected = max_ball_size(n, t)
    largest = max(ball_size(x, t) for x in all_sequences(n))
    return largest == expected == ball_size(alternating(n, 1), t)


def lcs_length(x, y):
    """Длина наибольшей общей подпоследовательности, побитовый алгоритм."""

    full = (1 << x.length) - 1
    matches = {0: 0, 1: 0}
    for i, symbol in enumerate(x):
        matches[symbol] |= 1 << i
    vector = full
    for symbol in y:
        match = matches[symbol]
        vector = ((vector + (vector & match)) | (vector & ~match)) & full
    return x.length - bin(vector).count('1')


def levenshtein_distance(x, y):
    if x.length != y.length:
        raise ValidationError(
            'Расстояние Левенштейна определено для слов равной длины.',
            code='length_mismatch',
        )
    return x.length - lcs_length(x, y)
