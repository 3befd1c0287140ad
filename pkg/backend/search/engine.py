import logging
import multiprocessing
import time
from functools import lru_cache

import numpy as np
from django.conf import settings
from django.core.exceptions import ValidationError

from sequences.balls import _ball_bits, ball_size, levenshtein_distance
from sequences.core import BinarySequence
from sequences.formulas import PairWitness
from sequences.intersect import intersection_size

from .reports import SearchReport
from .symmetry import (least_orbit_key, pair_from_key, reversal_table,
                       word_representatives)

SEARCH_ENGINE_VERSION = '1'
ENGINES = ('vector', 'scalar')
MATRIX_CELLS_LIMIT = 1 << 26

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def membership_matrix(n, r):
    """
    Матрица B[x, z] = 1, если z лежит в D_r(x); строки — все слова длины n.
    """

    columns = 1 << (n - r) if 0 <= r <= n else 0
    matrix = np.zeros((1 << n, columns), dtype=np.uint8)
    if columns:
        for x in range(1 << n):
            matrix[x, list(_ball_bits(x, n, r))] = 1
    return matrix


@lru_cache(maxsize=8)
def _float_membership(n, r):
    return membership_matrix(n, r).astype(np.float32)


def is_dense(n, r):
    return 0 <= r <= n and (1 << (2 * n - r)) <= MATRIX_CELLS_LIMIT


@lru_cache(maxsize=8)
def ball_sizes(n, r):
    if r > n:
        return np.zeros(1 << n, dtype=np.int64)
    if is_dense(n, r):
        return membership_matrix(n, r).sum(axis=1, dtype=np.int64)
    return np.array(
        [ball_size(BinarySequence(n, bits), r) for bits in range(1 << n)],
        dtype=np.int64,
    )


@lru_cache(maxsize=None)
def _popcount_table(n):
    return np.array(
        [bin(value).count('1') for value in range(1 << n)], dtype=np.int64
    )


def distance_block(n, rows, columns):
    """
    d_L(x, y) для x из rows и y из columns побитовым алгоритмом НОП.

    Разряд i маски соответствует x_{i+1}, поэтому маска совпадений
    для символа 1 — это обращённое слово.
    """

    full = (1 << n) - 1
    rows = np.asarray(rows, dtype=np.int64)
    columns = np.asarray(columns, dtype=np.int64)
    match_one = reversal_table(n)[rows][:, None]
    match_zero = match_one ^ full
    vector = np.full((rows.size, columns.size), full, dtype=np.int64)
    for j in range(1, n + 1):
        symbol = ((columns >> (n - j)) & 1).astype(bool)[None, :]
        match = np.where(symbol, match_one, match_zero)
        vector = ((vector + (vector & match)) | (vector & ~match)) & full
    return _popcount_table(n)[vector]


def candidate_rows(n, t, symmetric):
    """
    Первые слова пар: представители орбит (или все слова),
    по убыванию размера шара.
    """

    words = np.arange(1 << n, dtype=np.int64)
    if symmetric:
        words = np.unique(word_representatives(n))
    sizes = ball_sizes(n, t)[words]
    order = np.lexsort((words, -sizes))
    return words[order]


def _column_mask(n, row, symmetric):
    words = np.arange(1 << n, dtype=np.int64)
    if symmetric:
        mask = word_representatives(n) >= row
    else:
        mask = words > row
    mask &= words != row
    return mask


def count_candidates(n, rows, symmetric):
    if symmetric:
        ordered = np.sort(word_representatives(n))
        at_least = ordered.size - np.searchsorted(ordered, rows, side='left')
        return int(np.sum(at_least - 1))
    return int(np.sum((1 << n) - 1 - np.asarray(rows)))


def _merge(best, key, block_best, block_key):
    if block_best > best:
        return block_best, block_key
    if block_best == best and block_key is not None:
        key = block_key if key is None else min(key, block_key)
    return best, key


def _counts_by_recursion(n, t, block, columns, allowed):
    counts = np.zeros(allowed.shape, dtype=np.int64)
    for i, j in zip(*np.nonzero(allowed)):
        counts[i, j] = intersection_size(
            BinarySequence(n, int(block[i])), t,
            BinarySequence(n, int(columns[j])), t,
        )
    return counts


def scan_vector(n, d, t, rows, symmetric, block_rows):
    """
    Перебор блоками строк: фильтр расстояния, затем пересечения шаров
    как произведение матриц принадлежности. Если матрица слишком велика,
    пересечения считаются динамикой по допустимым парам.
    """

    sizes = ball_sizes(n, t)
    dense = is_dense(n, t)
    membership = _float_membership(n, t) if dense else None
    words = np.arange(1 << n, dtype=np.int64)
    best, key = -1, None
    rows = np.asarray(rows, dtype=np.int64)
    for start in range(0, rows.size, block_rows):
        block = rows[start:start + block_rows]
        block = block[sizes[block] >= best]
        if not block.size:
            continue
        columns = words[sizes >= best]
        if symmetric:
            representatives = word_representatives(n)[columns]
            allowed = representatives[None, :] >= block[:, None]
        else:
            allowed = columns[None, :] > block[:, None]
        allowed &= columns[None, :] != block[:, None]
        allowed &= distance_block(n, block, columns) >= d
        if not allowed.any():
            continue
        if dense:
            counts = membership[block] @ membership[columns].T
            counts = counts.astype(np.int64)
        elif t <= n:
            counts = _counts_by_recursion(n, t, block, columns, allowed)
        else:
            counts = np.zeros(allowed.shape, dtype=np.int64)
        counts[~allowed] = -1
        block_best = int(counts.max())
        row_index, column_index = np.nonzero(counts == block_best)
        block_key = least_orbit_key(
            n, block[row_index], columns[column_index]
        )
        best, key = _merge(best, key, block_best, block_key)
        logger.debug('Блок %d: максимум %d', start // block_rows, best)
    return best, key


def scan_scalar(n, d, t, rows, symmetric):
    """
    Попарный перебор: расстояние по НОП, отсечение по размерам шаров,
    затем подсчёт пересечения динамикой.
    """

    sizes = [ball_size(BinarySequence(n, bits), t) for bits in range(1 << n)]
    best, key = -1, None
    for row in rows:
        row = int(row)
        x = BinarySequence(n, row)
        for column in np.nonzero(_column_mask(n, row, symmetric))[0]:
            column = int(column)
            y = BinarySequence(n, column)
            if levenshtein_distance(x, y) < d:
                continue
            if min(sizes[row], sizes[column]) < best:
                continue
            value = intersection_size(x, t, y, t)
            best, key = _merge(
                best, key, value, least_orbit_key(n, [row], [column])
            )
    return best, key


def _scan_chunk(arguments):
    n, d, t, rows, symmetric, block_rows = arguments
    return scan_vector(n, d, t, rows, symmetric, block_rows)


def search_limit(extended=False):
    if extended:
        return settings.DELRECON_HARD_MAX_N
    return settings.DELRECON_MAX_SEARCH_N


def validate_search(n, d, t, extended=False, engine='vector'):
    limit = search_limit(extended)
    if not 1 <= n <= limit:
        raise ValidationError(
            f'Недопустимое n={n}: поиск поддерживается при 1 <= n <= {limit}'
            + ('' if extended else ' (больше — с флагом --extended)') + '.',
            code='out_of_range',
        )
    if not 1 <= d <= t:
        raise ValidationError(
            f'Требуется 1 <= d <= t, получено d={d}, t={t}.',
            code='precondition',
        )
    if engine not in ENGINES:
        raise ValidationError(
            f'Неизвестный движок поиска: {engine}.', code='unsupported'
        )


def nvalue_search(n, d, t, *, engine='vector', threads=None, symmetric=True,
                  block_rows=None, extended=False):
    """
    Точное N(n, d, t) полным перебором пар с d_L >= d.

    Свидетель — лексикографически наименьшая пара (x < y) среди всех
    пар, на которых достигается максимум.
    """

    validate_search(n, d, t, extended, engine)
    threads = threads or settings.DELRECON_THREADS
    block_rows = block_rows or settings.DELRECON_BLOCK_ROWS
    started = time.perf_counter()
    logger.info(
        'Поиск N(%d, %d, %d): движок %s, потоков %d, симметрии %s',
        n, d, t, engine, threads, symmetric,
    )
    rows = candidate_rows(n, t, symmetric)
    if engine == 'scalar':
        best, key = scan_scalar(n, d, t, rows, symmetric)
    elif threads == 1:
        best, key = scan_vector(n, d, t, rows, symmetric, block_rows)
    else:
        chunks = [
            (n, d, t, rows[i::threads], symmetric, block_rows)
            for i in range(threads)
        ]
        with multiprocessing.Pool(threads) as pool:
            results = pool.map(_scan_chunk, chunks)
        best, key = -1, None
        for chunk_best, chunk_key in results:
            best, key = _merge(best, key, chunk_best, chunk_key)
    witness = None
    if key is not None:
        x, y = pair_from_key(n, key)
        witness = PairWitness(x, y, n, d, t, best, 'search')
    report = SearchReport(
        n=n, d=d, t=t, value=max(best, 0), witness=witness,
        pairs_scanned=count_candidates(n, rows, symmetric),
        classes_scanned=int(rows.size), engine=engine,
        engine_version=SEARCH_ENGINE_VERSION,
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        'N(%d, %d, %d) = %d за %.2f с', n, d, t, report.value, report.elapsed
    )
    return report
