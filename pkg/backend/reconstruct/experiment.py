"""
Эксперимент с порогом реконструкции: N(n, d, t) + 1 различных
прочтений достаточно, а N(n, d, t) — нет.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from django.core.exceptions import ValidationError

from search.cache import cached_search
from search.engine import search_limit
from sequences.balls import ball_size
from sequences.core import BinarySequence
from sequences.formulas import (closed_form_value, construct_extremal,
                                table_value)
from sequences.intersect import intersection

from .channel import GENERATOR, ReadSet, channel_reads
from .codes import decode, greedy_code, vt_code

CODES = ('greedy', 'vt')

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThresholdReport:
    n: int
    d: int
    t: int
    trials: int
    seed: int
    code: str
    code_size: int
    nvalue: int
    nvalue_source: str
    successes: int
    skipped: int
    sharp_x: Optional[BinarySequence]
    sharp_y: Optional[BinarySequence]
    sharp_reads: int
    sharp_candidates: int
    generator: str = GENERATOR
    elapsed: float = field(default=0.0, compare=False)

    @property
    def threshold(self):
        return self.nvalue + 1

    @property
    def attempted(self):
        return self.trials - self.skipped

    @property
    def positive_pass_rate(self):
        return self.successes / self.attempted if self.attempted else 0.0

    @property
    def sharpness_checked(self):
        return self.sharp_x is not None

    @property
    def passed(self):
        return (
            self.successes == self.attempted
            and self.sharpness_checked
            and self.sharp_candidates >= 2
        )


def resolve_nvalue(n, d, t, use_cache=True):
    """
    N(n, d, t) и экстремальная пара: формула, таблица или перебор.
    """

    found = closed_form_value(n, d, t) or table_value(n, d, t)
    report = None
    if found is None:
        if n > search_limit():
            raise ValidationError(
                f'N({n}, {d}, {t}) неизвестно и вне пределов перебора.',
                code='unsupported',
            )
        report = cached_search(n, d, t, use_cache=use_cache)
        found = report.value, 'search'
    value, source = found
    try:
        witness = construct_extremal(n, d, t)
    except ValidationError:
        witness = None
    if witness is None or witness.intersection != value:
        witness = None
        if n <= search_limit():
            if report is None:
                report = cached_search(n, d, t, use_cache=use_cache)
            witness = report.witness
    return value, source, witness


def threshold_experiment(n, d, t, trials=200, seed=0, code='greedy',
                         use_cache=True):
    """
    Положительная часть: случайное кодовое слово и N + 1 прочтение,
    декодер обязан вернуть ровно его. Часть о точности порога:
    прочтения D_t(x) ∩ D_t(y) экстремальной пары дают два кандидата.

    Испытание i использует зерно seed + i.
    """

    if code not in CODES:
        raise ValidationError(f'Неизвестный код: {code}.', code='unsupported')
    if code == 'vt' and d > 2:
        raise ValidationError(
            'Код ВТ гарантирует только d_L >= 2.', code='precondition'
        )
    started = time.perf_counter()
    value, source, witness = resolve_nvalue(n, d, t, use_cache)
    seed_words = (witness.x, witness.y) if witness is not None else ()
    sharp_code = greedy_code(n, d, seed_words)
    codebook = sharp_code if code == 'greedy' else vt_code(n)
    successes = skipped = 0
    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        word = codebook.words[int(rng.integers(len(codebook)))]
        if ball_size(word, t) < value + 1:
            logger.warning(
                'Испытание %d пропущено: |D_%d(%s)| < %d',
                trial, t, word, value + 1,
            )
            skipped += 1
            continue
        reads = channel_reads(word, t, value + 1, seed + trial)
        if decode(reads, codebook) == [word]:
            successes += 1
        else:
            logger.warning('Испытание %d: неоднозначное декодирование', trial)
    sharp_reads = sharp_candidates = 0
    if witness is not None:
        reads = ReadSet(t, intersection(witness.x, t, witness.y, t))
        sharp_reads = len(reads)
        if sharp_reads:
            sharp_candidates = len(decode(reads, sharp_code))
    else:
        logger.warning('Нет экстремальной пары для (%d, %d, %d)', n, d, t)
    report = ThresholdReport(
        n=n, d=d, t=t, trials=trials, seed=seed, code=code,
        code_size=len(codebook), nvalue=value, nvalue_source=source,
        successes=successes, skipped=skipped,
        sharp_x=witness.x if witness else None,
        sharp_y=witness.y if witness else None,
        sharp_reads=sharp_reads, sharp_candidates=sharp_candidates,
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        'Порог (%d, %d, %d): %d из %d, пропущено %d, кандидатов на N: %d',
        n, d, t, successes, report.attempted, skipped, sharp_candidates,
    )
    return report
