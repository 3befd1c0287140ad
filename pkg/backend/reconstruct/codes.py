import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from django.conf import settings
from django.core.exceptions import ValidationError

from search.engine import distance_block
from sequences.balls import ball_bits, levenshtein_distance
from sequences.core import BinarySequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Codebook:
    """Код длины n с попарным расстоянием d_L >= min_distance."""

    n: int
    min_distance: int
    words: Tuple[BinarySequence, ...]

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word):
        return word in self.words

    def is_valid(self):
        return all(word.length == self.n for word in self.words) and all(
            levenshtein_distance(a, b) >= self.min_distance
            for i, a in enumerate(self.words)
            for b in self.words[i + 1:]
        )


def _check_code_length(n):
    if not 1 <= n <= settings.DELRECON_HARD_MAX_N:
        raise ValidationError(
            f'Длина кода должна лежать в [1, {settings.DELRECON_HARD_MAX_N}].',
            code='out_of_range',
        )


def greedy_code(n, d, seed_words=()):
    """
    Жадный код: сначала seed_words, затем слова F_2^n по возрастанию,
    каждое берётся, если d_L >= d до всех уже выбранных.
    """

    _check_code_length(n)
    if d < 1:
        raise ValidationError('Требуется d >= 1.', code='out_of_range')
    seed_words = tuple(seed_words)
    for word in seed_words:
        if word.length != n:
            raise ValidationError(
                f'Слово {word} имеет длину {word.length}, ожидалась {n}.',
                code='length_mismatch',
            )
    seed = Codebook(n, d, seed_words)
    if not seed.is_valid():
        raise ValidationError(
            'Начальные слова нарушают минимальное расстояние.',
            code='precondition',
        )
    if d == 1:
        rest = tuple(
            BinarySequence(n, bits) for bits in range(1 << n)
            if BinarySequence(n, bits) not in seed_words
        )
        return Codebook(n, d, seed_words + rest)
    words = np.arange(1 << n, dtype=np.int64)
    available = np.ones(1 << n, dtype=bool)
    chosen = list(seed_words)

    def take(bits):
        available[distance_block(n, [bits], words)[0] < d] = False

    for word in seed_words:
        take(word.bits)
    while available.any():
        bits = int(np.argmax(available))
        chosen.append(BinarySequence(n, bits))
        take(bits)
    logger.info('Жадный код (%d, %d): %d слов', n, d, len(chosen))
    return Codebook(n, d, tuple(chosen))


def vt_code(n, residue=0):
    """Код Варшамова–Тененгольца: sum(i * x_i) ≡ residue (mod n + 1)."""

    _check_code_length(n)
    if not 0 <= residue <= n:
        raise ValidationError(
            f'Остаток должен лежать в [0, {n}].', code='out_of_range'
        )
    words = tuple(
        word
        for word in (BinarySequence(n, bits) for bits in range(1 << n))
        if sum(i * word[i] for i in range(1, n + 1)) % (n + 1) == residue
    )
    return Codebook(n, 2, words)


def decode(reads, code):
    """Кодовые слова c, для которых reads лежат в D_t(c), в порядке кода."""

    if not len(reads):
        raise ValidationError('Нужно хотя бы одно прочтение.',
                              code='precondition')
    if reads.length != code.n - reads.t:
        raise ValidationError(
            f'Прочтения длины {reads.length} не согласуются с n={code.n}, '
            f't={reads.t}.',
            code='length_mismatch',
        )
    observed = frozenset(read.bits for read in reads)
    return [
        word for word in code if observed <= ball_bits(word, reads.t)
    ]
