"""
Пересчёт опубликованных констант перебором.

Каждая константа превращается в ClaimRecord; блокирующие записи
со статусом fail означают расхождение с опубликованным значением.
"""
import logging

from sequences.formulas import (QUOTED_VALUES, construct_extremal,
                                lower_bound_d3, n_value_d2_t3, n_value_d3_t3,
                                n_value_diagonal, upper_bound_d3_t4)

from .cache import cached_search
from .engine import search_limit
from .families import constrained_max
from .reports import ClaimRecord

logger = logging.getLogger(__name__)

LONGER_AGAINST_SHORTER = {2: 1, 3: 2, 4: 4, 5: 7, 6: 11}


def _nvalue_claims():
    """(claim_id, location, expected, (n, d, t), relation) для N(n, d, t)."""

    claims = []
    for n in range(5, 15):
        expected = QUOTED_VALUES[(n, 3, 4)]
        claims.append((
            f'N({n},3,4)', 'значения N(n, 3, 4) для малых n',
            expected, (n, 3, 4), 'eq',
        ))
    for n in range(9, 15):
        claims.append((
            f'N({n},3,4)<=20n-150', 'верхняя оценка N(n, 3, 4) <= 20n - 150',
            upper_bound_d3_t4(n), (n, 3, 4), 'le',
        ))
    for n in range(2, 10):
        expected = (
            QUOTED_VALUES[(n, 2, 2)] if n < 6 else n_value_diagonal(2, n)
        )
        claims.append((
            f'N({n},2,2)', 'значения N(n, 2, 2) для малых n',
            expected, (n, 2, 2), 'eq',
        ))
    for n in range(2, 10):
        expected = QUOTED_VALUES[(n, 2, 3)] if n < 8 else n_value_d2_t3(n)
        claims.append((
            f'N({n},2,3)', 'значения N(n, 2, 3) для малых n',
            expected, (n, 2, 3), 'eq',
        ))
    for n in range(10, 13):
        claims.append((
            f'N({n},3,3)', 'база индукции N(n, 3, 3) = 20',
            n_value_d3_t3(n), (n, 3, 3), 'eq',
        ))
    return claims


def _family_claims():
    """(claim_id, location, bound, family, params, relation, blocking)."""

    claims = [
        (
            f'f({n})', 'максимум |D_2(x) ∩ D_4(y)| при |y| = |x| + 2',
            value, 'f', {'n': n}, 'eq', True,
        )
        for n, value in LONGER_AGAINST_SHORTER.items()
    ]
    claims += [
        (
            'prefix-pair<=11', 'оценка |D_4(c̄ c v) ∩ D_2(ṽ)| <= 11',
            11, 'prefix-pair', {}, 'le', True,
        ),
        (
            'tail-pair<=8', 'оценка |D_4(v 10) ∩ D_2(ṽ)| <= 8',
            8, 'tail-pair', {}, 'le', True,
        ),
        (
            'six-bit-D2<=6', 'оценка |D_2 ∩ D_2| для шестибитных пар',
            6, 'six-bit', {'radius': 2}, 'le', True,
        ),
        (
            'six-bit-D3<=8', 'оценка |D_3 ∩ D_3| для шестибитных пар',
            8, 'six-bit', {'radius': 3}, 'le', True,
        ),
        (
            'middle-block(10,4)<=22',
            'оценка |D_3 ∩ D_3| при n = 10 и средней части длины 4',
            22, 'middle-block', {'n': 10, 'middle': 4, 'radius': 3},
            'le', True,
        ),
    ]
    for n in range(3, 8):
        claims += [
            (
                f'shifted({n},1,1)<=3',
                'оценка |D_2(x) ∩ D_1(y)| при |x| = |y| + 1',
                3, 'shifted', {'n': n, 'shift': 1, 'radius': 1}, 'le', False,
            ),
            (
                f'shifted({n},2,1)<=4',
                'оценка |D_3(x) ∩ D_1(y)| при |x| = |y| + 2',
                4, 'shifted', {'n': n, 'shift': 2, 'radius': 1}, 'le', False,
            ),
        ]
    for n in range(4, 8):
        claims.append((
            f'shifted({n},1,2)<=3n-8',
            'оценка |D_3(x) ∩ D_2(y)| при |x| = |y| + 1',
            3 * n - 8, 'shifted', {'n': n, 'shift': 1, 'radius': 2},
            'le', False,
        ))
    for n in range(5, 8):
        claims.append((
            f'shifted({n},2,2)<=4n-13',
            'оценка |D_4(x) ∩ D_2(y)| при |x| = |y| + 2',
            4 * n - 13, 'shifted', {'n': n, 'shift': 2, 'radius': 2},
            'le', False,
        ))
    for n in range(10, 14):
        claims.append((
            f'alternating-frame({n},6)=6n-34',
            'значение |D_3 ∩ D_3| для средней части 101010/011001',
            6 * n - 34, 'alternating-frame',
            {'n': n, 'middle_x': '101010', 'middle_y': '011001'},
            'eq', False,
        ))
    for n in range(11, 14):
        claims.append((
            f'alternating-frame({n},7)=6n-35',
            'значение |D_3 ∩ D_3| для средней части 1010110/0110101',
            6 * n - 35, 'alternating-frame',
            {'n': n, 'middle_x': '1010110', 'middle_y': '0110101'},
            'eq', False,
        ))
    return claims


def _conjecture_claims():
    """Построение с d_L = 3 при радиусах 5 и 6 против M(n, t); не блокирует."""

    return [
        (
            f'construct({n},3,{t})=M({n},{t})',
            'гипотеза N(n, 3, t) = M(n, t): значение построения',
            lower_bound_d3(n, t), n, t,
        )
        for t in (5, 6)
        for n in range(13, 19)
    ]


def _matches(claim_id, only):
    return only is None or any(claim_id.startswith(prefix) for prefix in only)


def verify_constants(extended=False, only=None, threads=None,
                     use_cache=True, cache_directory=None):
    """
    Реестр всех констант. Без extended перебор ограничен
    settings.DELRECON_MAX_SEARCH_N, остальное помечается
    как trusted-not-recomputed.
    """

    limit = search_limit(extended)
    records = []
    values = {}

    def search(n, d, t):
        if (n, d, t) not in values:
            values[(n, d, t)] = cached_search(
                n, d, t, directory=cache_directory, use_cache=use_cache,
                threads=threads, extended=extended,
            ).value
        return values[(n, d, t)]

    for claim_id, location, expected, (n, d, t), relation in (
        _nvalue_claims()
    ):
        if not _matches(claim_id, only):
            continue
        if n > limit:
            records.append(ClaimRecord.trusted(
                claim_id, location, expected, relation
            ))
            continue
        records.append(ClaimRecord.checked(
            claim_id, location, expected, search(n, d, t), relation
        ))
    for claim_id, location, bound, family, params, relation, blocking in (
        _family_claims()
    ):
        if not _matches(claim_id, only):
            continue
        report = constrained_max(family, **params)
        records.append(ClaimRecord.checked(
            claim_id, location, bound, report.value, relation, blocking
        ))
    for claim_id, location, expected, n, t in _conjecture_claims():
        if not _matches(claim_id, only):
            continue
        witness = construct_extremal(n, 3, t)
        records.append(ClaimRecord.checked(
            claim_id, location, expected, witness.intersection,
            blocking=False,
        ))
    if extended and _matches('N(13,3,5)', only):
        records.append(ClaimRecord.checked(
            'N(13,3,5)=M(13,5)', 'гипотеза N(n, 3, t) = M(n, t): перебор',
            lower_bound_d3(13, 5), search(13, 3, 5), blocking=False,
        ))
    for record in records:
        level = logging.WARNING if record.failed else logging.DEBUG
        logger.log(
            level, '%s: ожидалось %s, получено %s (%s)',
            record.claim_id, record.expected, record.computed, record.status,
        )
    return records

