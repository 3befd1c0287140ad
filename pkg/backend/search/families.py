"""
Максимумы пересечений шаров на ограниченных семействах пар.

Каждое семейство перечисляет пары (x, y) с радиусами (r_x, r_y),
где len(x) - r_x == len(y) - r_y, и возвращает наибольшее
|D_{r_x}(x) ∩ D_{r_y}(y)|.
"""
import logging
import time
from itertools import product

import numpy as np
from django.core.exceptions import ValidationError

from sequences.balls import levenshtein_distance
from sequences.core import (EMPTY, BinarySequence, all_sequences, alternating,
                            concat)
from sequences.intersect import intersection_size

from .engine import membership_matrix
from .reports import FamilyReport

logger = logging.getLogger(__name__)


def _parse(text):
    return BinarySequence.parse(text) if text else EMPTY


def _best_pair(candidates, x_radius, y_radius):
    best, best_pair, scanned = -1, (None, None), 0
    for x, y in candidates:
        scanned += 1
        value = intersection_size(x, x_radius, y, y_radius)
        if value > best or (
            value == best
            and (x.bits, y.bits) < (best_pair[0].bits, best_pair[1].bits)
        ):
            best, best_pair = value, (x, y)
    return max(best, 0), best_pair, scanned


def longer_against_shorter(n):
    """
    f(n): x длины n, y длины n + 2, x не лежит в D_2(y),
    значение |D_2(x) ∩ D_4(y)|.
    """

    if n < 2:
        raise ValidationError('Требуется n >= 2.', code='out_of_range')
    shorter = membership_matrix(n, 2).astype(np.float32)
    longer = membership_matrix(n + 2, 4).astype(np.float32)
    counts = (shorter @ longer.T).astype(np.int64)
    contained = membership_matrix(n + 2, 2).T.astype(bool)
    counts[contained] = -1
    value = int(counts.max())
    row, column = (int(i[0]) for i in np.nonzero(counts == value))
    return value, BinarySequence(n, row), BinarySequence(n + 2, column), \
        2, 4, int(np.count_nonzero(~contained))


def prefix_pair():
    """
    x = c̄ c v (длина 8) и y = ṽ (длина 6) с ṽ_1 = c, v_1 ≠ ṽ_1,
    v_6 ≠ ṽ_6 и d_L(c̄ c v_1..v_4, ṽ) >= 2; значение |D_4(x) ∩ D_2(y)|.
    """

    def candidates():
        for c, v, w in product((0, 1), all_sequences(6), all_sequences(6)):
            if w[1] != c or v[1] == w[1] or v[6] == w[6]:
                continue
            head = concat(_parse(f'{1 - c}{c}'), v.project(1, 4))
            if levenshtein_distance(head, w) < 2:
                continue
            yield concat(_parse(f'{1 - c}{c}'), v), w

    value, (x, y), scanned = _best_pair(candidates(), 4, 2)
    return value, x, y, 4, 2, scanned


TAIL_PAIRS = (('101010', '011001', '10'), ('010101', '100110', '01'))


def tail_pair():
    """x = v 10, y = ṽ для пары 101010/011001 и её дополнения."""

    candidates = (
        (concat(_parse(v), _parse(tail)), _parse(w))
        for v, w, tail in TAIL_PAIRS
    )
    value, (x, y), scanned = _best_pair(candidates, 4, 2)
    return value, x, y, 4, 2, scanned


def six_bit(radius):
    """
    v = c c̄ c x y ā, ṽ = c̄ p q r ā a с d_L(v, ṽ) >= 2;
    значение |D_r(v) ∩ D_r(ṽ)|.
    """

    if radius not in (2, 3):
        raise ValidationError('Радиус должен быть 2 или 3.',
                              code='out_of_range')

    def candidates():
        for c, a, x, y, p, q, r in product((0, 1), repeat=7):
            v = _parse(f'{c}{1 - c}{c}{x}{y}{1 - a}')
            w = _parse(f'{1 - c}{p}{q}{r}{1 - a}{a}')
            if levenshtein_distance(v, w) >= 2:
                yield v, w

    value, (x, y), scanned = _best_pair(candidates(), radius, radius)
    return value, x, y, radius, radius, scanned


def middle_block(n, middle, radius):
    """
    x = u v w, y = u ṽ w с |v| = middle, |u|, |w| >= 1, где u и w —
    наибольшие общие префикс и суффикс, и d_L(x, y) >= 2;
    значение |D_r(x) ∩ D_r(y)|.
    """

    if middle < 2 or n - middle < 2:
        raise ValidationError(
            'Требуется 2 <= middle <= n - 2.', code='out_of_range'
        )
    pairs = []
    for s in range(1, n - middle):
        t = n - middle - s
        for u, w in product(all_sequences(s), all_sequences(t)):
            for v, v_tilde in product(all_sequences(middle), repeat=2):
                if v[1] == v_tilde[1] or v[middle] == v_tilde[middle]:
                    continue
                x, y = concat(u, v, w), concat(u, v_tilde, w)
                if levenshtein_distance(x, y) >= 2:
                    pairs.append((x.bits, y.bits))
    if not pairs:
        return 0, None, None, radius, radius, 0
    pairs = np.array(sorted(pairs), dtype=np.int64)
    membership = membership_matrix(n, radius).astype(np.int64)
    counts = np.einsum(
        'ij,ij->i', membership[pairs[:, 0]], membership[pairs[:, 1]]
    )
    index = int(np.argmax(counts))
    x, y = (BinarySequence(n, int(bits)) for bits in pairs[index])
    return int(counts[index]), x, y, radius, radius, len(pairs)


def alternating_frame(n, middle_x, middle_y, radius=3):
    """
    x = u v w, y = u ṽ w для фиксированной середины, где u и w —
    чередующиеся слова длин s, t >= 1 с любым начальным символом.
    """

    v, v_tilde = _parse(middle_x), _parse(middle_y)
    rest = n - v.length

    def candidates():
        for s in range(1, rest):
            for first_u, first_w in product((0, 1), repeat=2):
                u = alternating(s, first_u)
                w = alternating(rest - s, first_w)
                x, y = concat(u, v, w), concat(u, v_tilde, w)
                if levenshtein_distance(x, y) >= 2:
                    yield x, y

    value, (x, y), scanned = _best_pair(candidates(), radius, radius)
    return value, x, y, radius, radius, scanned


def shifted(n, shift, radius):
    """
    x длины n + shift, y длины n, y не лежит в D_shift(x);
    значение |D_{radius + shift}(x) ∩ D_radius(y)|.
    """

    if shift not in (1, 2) or not 1 <= radius < n:
        raise ValidationError(
            'Требуется shift из {1, 2} и 1 <= radius < n.',
            code='out_of_range',
        )
    longer = membership_matrix(n + shift, radius + shift)
    shorter = membership_matrix(n, radius)
    counts = (
        longer.astype(np.float32) @ shorter.astype(np.float32).T
    ).astype(np.int64)
    contained = membership_matrix(n + shift, shift).astype(bool)
    counts[contained] = -1
    value = int(counts.max())
    row, column = (int(i[0]) for i in np.nonzero(counts == value))
    x, y = BinarySequence(n + shift, row), BinarySequence(n, column)
    return value, x, y, radius + shift, radius, \
        int(np.count_nonzero(~contained))


FAMILIES = {
    'f': longer_against_shorter,
    'prefix-pair': prefix_pair,
    'tail-pair': tail_pair,
    'six-bit': six_bit,
    'middle-block': middle_block,
    'alternating-frame': alternating_frame,
    'shifted': shifted,
}


def constrained_max(family, **params):
    """Запускает перебор семейства family с параметрами params."""

    if family not in FAMILIES:
        raise ValidationError(
            f'Неизвестное семейство: {family}.', code='unknown_family'
        )
    started = time.perf_counter()
    value, x, y, x_radius, y_radius, scanned = FAMILIES[family](**params)
    report = FamilyReport(
        family=family, params=tuple(sorted(params.items())), value=value,
        x=x, y=y, x_radius=x_radius, y_radius=y_radius,
        pairs_scanned=scanned, elapsed=time.perf_counter() - started,
    )
    logger.info('Семейство %s %s: максимум %d', family, params, value)
    return report
