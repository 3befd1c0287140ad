from functools import lru_cache
from itertools import product

import numpy as np
from django.core.exceptions import ValidationError

from sequences.core import BinarySequence


def orbit(x, y):
    """
    Восемь образов пары под перестановкой, совместным дополнением
    и совместным обращением.
    """

    images = []
    for swap, flip, turn in product((False, True), repeat=3):
        a, b = (y, x) if swap else (x, y)
        if flip:
            a, b = a.complement(), b.complement()
        if turn:
            a, b = a.reverse(), b.reverse()
        images.append((a, b))
    return images


def canonical_pair(x, y):
    """Лексикографически наименьший представитель орбиты пары."""

    if x.length != y.length:
        raise ValidationError(
            'Пара должна состоять из слов одной длины.',
            code='length_mismatch',
        )
    return min(orbit(x, y), key=lambda pair: (pair[0].bits, pair[1].bits))


@lru_cache(maxsize=None)
def reversal_table(n):
    """rev[b] — обращение n-битного слова b."""

    words = np.arange(1 << n, dtype=np.int64)
    result = np.zeros_like(words)
    for i in range(n):
        result |= ((words >> i) & 1) << (n - 1 - i)
    return result


@lru_cache(maxsize=None)
def word_representatives(n):
    """
    Для каждого слова длины n — наименьший элемент его орбиты
    под дополнением и обращением.
    """

    words = np.arange(1 << n, dtype=np.int64)
    full = (1 << n) - 1
    reversed_words = reversal_table(n)
    return np.minimum.reduce([
        words, words ^ full, reversed_words, reversed_words ^ full
    ])


def least_orbit_key(n, xs, ys):
    """
    Наименьший ключ x * 2^n + y по всем образам пар (xs[i], ys[i])
    с упорядочением x < y внутри образа.
    """

    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    full = (1 << n) - 1
    rev = reversal_table(n)
    keys = []
    for a, b in (
        (xs, ys),
        (xs ^ full, ys ^ full),
        (rev[xs], rev[ys]),
        (rev[xs] ^ full, rev[ys] ^ full),
    ):
        low, high = np.minimum(a, b), np.maximum(a, b)
        keys.append((low << n) | high)
    return int(np.min(keys))


def pair_from_key(n, key):
    return (
        BinarySequence(n, key >> n),
        BinarySequence(n, key & ((1 << n) - 1)),
    )
