import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from django.core.exceptions import ValidationError

from sequences.balls import ball_size, deletion_ball
from sequences.core import BinarySequence

GENERATOR = 'PCG64'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReadSet:
    """Различные выходы каналов, каждый с ровно t удалениями."""

    t: int
    reads: Tuple[BinarySequence, ...]
    center: Optional[BinarySequence] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if len({read.length for read in self.reads}) > 1:
            raise ValidationError(
                'Прочтения должны иметь одинаковую длину.',
                code='length_mismatch',
            )
        if len(set(self.reads)) != len(self.reads):
            raise ValidationError(
                'Прочтения должны быть различными.', code='precondition'
            )

    @property
    def length(self):
        return self.reads[0].length if self.reads else None

    def __len__(self):
        return len(self.reads)

    def __iter__(self):
        return iter(self.reads)


def delete_positions(x, positions):
    """Слово x без символов на позициях positions (с единицы)."""

    removed = set(positions)
    kept = [x[i] for i in range(1, x.length + 1) if i not in removed]
    bits = 0
    for symbol in kept:
        bits = (bits << 1) | symbol
    return BinarySequence(len(kept), bits)


def channel_reads(x, t, count, seed):
    """
    count различных элементов D_t(x): позиции удалений выбираются
    генератором PCG64 с зерном seed, повторы отбрасываются.
    """

    if not 0 <= t <= x.length:
        raise ValidationError(
            f'Радиус t={t} вне [0, {x.length}].', code='out_of_range'
        )
    size = ball_size(x, t)
    if count > size:
        raise ValidationError(
            f'Нельзя получить {count} различных прочтений: '
            f'|D_{t}(x)| = {size}.',
            code='precondition',
        )
    if count == size:
        return ReadSet(t, deletion_ball(x, t).elements, x, seed)
    rng = np.random.default_rng(seed)
    reads = set()
    while len(reads) < count:
        positions = rng.choice(x.length, size=t, replace=False) + 1
        reads.add(delete_positions(x, positions.tolist()))
    return ReadSet(t, tuple(sorted(reads)), x, seed)
