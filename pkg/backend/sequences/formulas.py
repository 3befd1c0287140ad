from dataclasses import dataclass
from math import comb

from django.core.exceptions import ValidationError

from .balls import levenshtein_distance, max_ball_size as D
from .core import BinarySequence, alternating, concat
from .intersect import intersection_size

# Пары с наибольшим |D_4(x) ∩ D_4(y)| при d_L(x, y) >= 3, найденные перебором.
EXTREMAL_PAIRS_D3_T4 = {
    5: ('00010', '11101', 2),
    6: ('010110', '110001', 4),
    7: ('0101110', '1100101', 8),
    8: ('01101001', '10010110', 16),
    9: ('011001010', '101011001', 26),
    10: ('0110011001', '1010101010', 40),
    11: ('01100110101', '10101010110', 57),
    12: ('011001010101', '101010100110', 75),
}

# Опубликованные значения N(n, d, t) для малых n.
QUOTED_VALUES = {
    (2, 2, 2): 1, (3, 2, 2): 2, (4, 2, 2): 4, (5, 2, 2): 4,
    (2, 2, 3): 0, (3, 2, 3): 1, (4, 2, 3): 2, (5, 2, 3): 4,
    (6, 2, 3): 8, (7, 2, 3): 13,
    (13, 3, 4): 94, (14, 3, 4): 114,
}
QUOTED_VALUES.update(
    {(n, 3, 4): value for n, (_, _, value) in EXTREMAL_PAIRS_D3_T4.items()}
)


def _out_of_range(message):
    return ValidationError(message, code='out_of_range')


def n_value_d1(n, t):
    """N(n, 1, t) = 2 D(n-2, t-1) при 1 <= t < n."""

    if not 1 <= t < n:
        raise _out_of_range('Формула применима при 1 <= t < n.')
    return 2 * D(n - 2, t - 1)


def n_value_d2(n, t):
    if not (2 <= t < n and n >= 8):
        raise _out_of_range('Формула применима при 2 <= t < n и n >= 8.')
    return (
        2 * D(n - 4, t - 2) + 2 * D(n - 5, t - 2) + 2 * D(n - 7, t - 2)
        + D(n - 6, t - 3) + D(n - 7, t - 3)
    )


def n_value_d2_t3(n):
    if n < 8:
        raise _out_of_range('Формула N(n, 2, 3) = 6n - 30 верна при n >= 8.')
    return 6 * n - 30


def lower_bound_d3(n, t):
    """
    M(n, t): нижняя граница N(n, 3, t) при n >= 13, точная при t = 4.

    Слагаемые с отрицательными аргументами равны нулю.
    """

    return (
        6 * D(n - 6, t - 3) + 4 * D(n - 8, t - 3) + 6 * D(n - 9, t - 3)
        + 4 * D(n - 11, t - 3) + 2 * D(n - 13, t - 5) + D(n - 13, t - 6)
    )


def n_value_d3_t4(n):
    if n < 5:
        raise _out_of_range('Значение N(n, 3, 4) задано при n >= 5.')
    if n in EXTREMAL_PAIRS_D3_T4:
        return EXTREMAL_PAIRS_D3_T4[n][2]
    return 20 * n - 166


def upper_bound_d3_t4(n):
    return 20 * n - 150


def n_value_diagonal(d, n=None):
    """N(n, d, d) = C(2d, d) при n >= 4d - 2."""

    if d < 1:
        raise _out_of_range('Требуется d >= 1.')
    if n is not None and n < 4 * d - 2:
        raise _out_of_range(f'Формула верна при n >= {4 * d - 2}.')
    return comb(2 * d, d)


def n_value_d3_t3(n):
    if n < 10:
        raise _out_of_range('Значение N(n, 3, 3) = 20 известно при n >= 10.')
    return n_value_diagonal(3, n)


def alternating_ball_sizes(n, t):
    """
    Размеры шаров слов 1 a_{n-1} и 0 1 a_{n-2}.
    """

    if n < 4:
        raise _out_of_range('Формулы применимы при n >= 4.')
    if t > n - 2:
        raise _out_of_range('Формулы применимы при t <= n - 2.')
    return (
        D(n - 1, t) + D(n - 3, t - 2),
        D(n - 2, t) + D(n - 2, t - 1) + D(n - 4, t - 2),
    )


def closed_form_value(n, d, t):
    """
    Значение N(n, d, t) по замкнутой формуле и её обозначение.

    Возвращает None, если ни одна формула не применима.
    """

    if d == 1 and 1 <= t < n:
        return n_value_d1(n, t), 'formula:d1'
    if d == 2 and 2 <= t < n and n >= 8:
        return n_value_d2(n, t), 'formula:d2'
    if d == t and d >= 1 and n >= 4 * d - 2:
        return n_value_diagonal(d, n), 'formula:diagonal'
    if d == 3 and t == 4 and n >= 13:
        return n_value_d3_t4(n), 'formula:d3t4'
    return None


def table_value(n, d, t):
    if (n, d, t) in QUOTED_VALUES:
        return QUOTED_VALUES[(n, d, t)], 'table:quoted'
    return None


@dataclass(frozen=True)
class PairWitness:
    """Пара слов одной длины с размером пересечения шаров радиуса radius."""

    x: BinarySequence
    y: BinarySequence
    n: int
    min_distance: int
    radius: int
    intersection: int
    rule: str = ''

    @property
    def distance(self):
        return levenshtein_distance(self.x, self.y)

    def is_consistent(self):
        return (
            self.x.length == self.y.length == self.n
            and self.distance >= self.min_distance
            and self.intersection == intersection_size(
                self.x, self.radius, self.y, self.radius
            )
        )


def extremal_pair_d3(n):
    """
    Пара с d_L = 3 и |D_4 ∩ D_4| = M(n, 4) для n >= 13.

    При нечётном n: x = 101010 a_{n-8} 10, y = 011001 a_{n-8} 01,
    при чётном хвосты меняются местами.
    """

    middle = alternating(n - 8, 1)
    ten, one = BinarySequence.parse('10'), BinarySequence.parse('01')
    x_tail, y_tail = (ten, one) if n % 2 else (one, ten)
    x = concat(BinarySequence.parse('101010'), middle, x_tail)
    y = concat(BinarySequence.parse('011001'), middle, y_tail)
    return x, y, 'odd' if n % 2 else 'even'


def construct_extremal(n, d, t=None):
    if d == 3 and n >= 13:
        x, y, rule = extremal_pair_d3(n)
        t = 4 if t is None else t
    elif d == 3 and n in EXTREMAL_PAIRS_D3_T4:
        x_text, y_text, _ = EXTREMAL_PAIRS_D3_T4[n]
        x, y, rule = (
            BinarySequence.parse(x_text), BinarySequence.parse(y_text),
            'table',
        )
        t = 4 if t is None else t
    elif d == 1 and n >= 2:
        x, y, rule = alternating(n, 1), concat(
            BinarySequence.parse('0'), alternating(n - 1, 1)
        ), 'single-deletion'
        t = 1 if t is None else t
    else:
        raise ValidationError(
            f'Построение для n={n}, d={d} не поддерживается.',
            code='unsupported',
        )
    if not 0 <= t <= n:
        raise _out_of_range('Радиус должен лежать в пределах [0, n].')
    return PairWitness(
        x, y, n, d, t, intersection_size(x, t, y, t), rule
    )
