from dataclasses import dataclass, field
from typing import Optional, Tuple

from sequences.core import BinarySequence
from sequences.formulas import PairWitness


@dataclass(frozen=True)
class SearchReport:
    """
    Результат полного перебора N(n, d, t).

    pairs_scanned — число пар-кандидатов после учёта симметрий,
    classes_scanned — число первых слов пары (представителей орбит).
    """

    n: int
    d: int
    t: int
    value: int
    witness: Optional[PairWitness]
    pairs_scanned: int
    classes_scanned: int
    engine: str
    engine_version: str
    elapsed: float = field(default=0.0, compare=False)


@dataclass(frozen=True)
class FamilyReport:
    """Максимум пересечения шаров на ограниченном семействе пар."""

    family: str
    params: Tuple[Tuple[str, int], ...]
    value: int
    x: Optional[BinarySequence]
    y: Optional[BinarySequence]
    x_radius: int
    y_radius: int
    pairs_scanned: int
    elapsed: float = field(default=0.0, compare=False)


@dataclass(frozen=True)
class ClaimRecord:
    """
    Опубликованная константа и её пересчитанное значение.

    relation 'eq' требует равенства, 'le' — чтобы найденный максимум
    не превышал заявленную границу.
    """

    claim_id: str
    location: str
    expected: int
    computed: Optional[int]
    relation: str = 'eq'
    status: str = 'pass'
    blocking: bool = True

    @classmethod
    def checked(cls, claim_id, location, expected, computed,
                relation='eq', blocking=True):
        if relation == 'eq':
            holds = computed == expected
        else:
            holds = computed <= expected
        return cls(claim_id, location, expected, computed, relation,
                   'pass' if holds else 'fail', blocking)

    @classmethod
    def trusted(cls, claim_id, location, expected, relation='eq',
                blocking=True):
        return cls(claim_id, location, expected, None, relation,
                   'trusted-not-recomputed', blocking)

    @property
    def failed(self):
        return self.status == 'fail'
