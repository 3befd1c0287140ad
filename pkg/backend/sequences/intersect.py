import enum
from dataclasses import dataclass
from functools import lru_cache

from django.core.exceptions import ValidationError

from .balls import ball_bits, ball_size, deletion_ball, levenshtein_distance
from .core import EMPTY, BinarySequence, all_sequences


def _radii_compatible(x, s, y, t):
    return (
        0 <= s <= x.length and 0 <= t <= y.length
        and x.length - s == y.length - t
    )


def _next_occurrence(x):
    """Таблица nxt[i][b]: наименьший индекс j >= i с x_j = b (с нуля)."""

    table = [[None, None] for _ in range(x.length + 1)]
    for i in range(x.length - 1, -1, -1):
        table[i] = list(table[i + 1])
        table[i][x[i + 1]] = i
    return table


def intersection_size(x, s, y, t):
    """
    |D_s(x) ∩ D_t(y)| без построения шаров.

    Каждая общая подпоследовательность считается один раз по своему
    жадному вложению в оба слова.
    """

    if not _radii_compatible(x, s, y, t):
        return 0
    target = x.length - s
    next_x = _next_occurrence(x)
    next_y = _next_occurrence(y)

    @lru_cache(maxsize=None)
    def count(i, j, k):
        if k == 0:
            return 1
        if x.length - i < k or y.length - j < k:
            return 0
        total = 0
        for symbol in (0, 1):
            a, b = next_x[i][symbol], next_y[j][symbol]
            if a is not None and b is not None:
                total += count(a + 1, b + 1, k - 1)
        return total

    return count(0, 0, target)


def intersection_size_enumerated(x, s, y, t):
    if not _radii_compatible(x, s, y, t):
        return 0
    return len(ball_bits(x, s) & ball_bits(y, t))


def intersection(x, s, y, t):
    """Элементы D_s(x) ∩ D_t(y) в порядке возрастания."""

    return deletion_ball(x, s).intersection(deletion_ball(y, t))


@dataclass(frozen=True)
class RestrictedBallSpec:
    """
    Часть шара D_t(center), начинающаяся с prefix и оканчивающаяся suffix.

    Суффикс задаётся в обычном порядке чтения.
    """

    center: BinarySequence
    radius: int
    prefix: BinarySequence = EMPTY
    suffix: BinarySequence = EMPTY

    def __post_init__(self):
        if (self.prefix.length + self.suffix.length
                > self.center.length - self.radius):
            raise ValidationError(
                'Суммарная длина префикса и суффикса превышает длину '
                'элементов шара.',
                code='precondition',
            )


def restricted_ball(restriction):
    length = restriction.center.length - restriction.radius
    m1, m2 = restriction.prefix.length, restriction.suffix.length
    result = set()
    for bits in ball_bits(restriction.center, restriction.radius):
        if bits >> (length - m1) != restriction.prefix.bits:
            continue
        if bits & ((1 << m2) - 1) != restriction.suffix.bits:
            continue
        result.add(BinarySequence(length, bits))
    return frozenset(result)


def check_affix_partition(x, t, m1, m2):
    """
    Сумма размеров ограниченных шаров по всем префиксам длины m1
    и суффиксам длины m2 равна |D_t(x)|.
    """

    total = 0
    for prefix in all_sequences(m1):
        for suffix in all_sequences(m2):
            total += len(restricted_ball(
                RestrictedBallSpec(x, t, prefix, suffix)
            ))
    return total == ball_size(x, t)


@dataclass(frozen=True)
class Reduced:
    inner: BinarySequence
    t_star: int
    k1: int
    k2: int

    def size(self):
        return ball_size(self.inner, self.t_star)


@dataclass(frozen=True)
class Degenerate:
    reason: str

    def size(self):
        return 0


def _leftmost_end(x, u):
    position = 0
    for symbol in u:
        position += 1
        while position <= x.length and x[position] != symbol:
            position += 1
        if position > x.length:
            return None
    return position


def _rightmost_start(x, u):
    position = x.length + 1
    for symbol in reversed(list(u)):
        position -= 1
        while position >= 1 and x[position] != symbol:
            position -= 1
        if position < 1:
            return None
    return position


def reduce_restricted_ball(center, t, prefix, suffix):
    """
    Сводит ограниченный шар к обычному шару D_{t*}(inner).

    k1 — конец самого левого вложения prefix, k2 — начало самого
    правого вложения suffix. При k1 < k2 слово inner = x_{k1+1..k2-1}.
    """

    RestrictedBallSpec(center, t, prefix, suffix)
    n, m1, m2 = center.length, prefix.length, suffix.length
    k1 = _leftmost_end(center, prefix)
    k2 = _rightmost_start(center, suffix)
    if k1 is None or k2 is None:
        return Degenerate('affix_not_embedded')
    if k1 >= k2:
        return Degenerate('affixes_overlap')
    t_star = t - (k1 - m1) - (n - k2 + 1 - m2)
    return Reduced(center.project(k1 + 1, k2 - 1), t_star, k1, k2)


@dataclass(frozen=True)
class AffixDecomposition:
    """x = u v w, y = u ṽ w с наибольшими общими u и w."""

    prefix: BinarySequence
    mid_x: BinarySequence
    mid_y: BinarySequence
    suffix: BinarySequence


def _common_prefix_length(x, y):
    limit = min(x.length, y.length)
    p = 0
    while p < limit and x[p + 1] == y[p + 1]:
        p += 1
    return p


def _common_suffix_length(x, y, skip=0):
    limit = min(x.length, y.length) - skip
    s = 0
    while s < limit and x[x.length - s] == y[y.length - s]:
        s += 1
    return s


def affix_decompose(x, y):
    if x == y:
        raise ValidationError(
            'Разложение определено только для различных слов.',
            code='precondition',
        )
    p = _common_prefix_length(x, y)
    s = _common_suffix_length(x, y, skip=p)
    return AffixDecomposition(
        x.project(1, p),
        x.project(p + 1, x.length - s),
        y.project(p + 1, y.length - s),
        x.project(x.length - s + 1, x.length),
    )


def _join(prefix_set, prefix_length, middle, middle_length, suffix_set,
          suffix_length):
    return {
        (a << (middle_length + suffix_length)) | (m << suffix_length) | c
        for a in prefix_set for m in middle for c in suffix_set
    }


def check_common_affix_union(u, v, v_tilde, w, t, s):
    """
    D_t(uvw) ∩ D_s(uṽw) совпадает с объединением по p + q <= min(t, s)
    множеств D_p(u) ∘ (D_{t-p-q}(v) ∩ D_{s-p-q}(ṽ)) ∘ D_q(w).
    """

    x = u.concat(v, w)
    y = u.concat(v_tilde, w)
    if _radii_compatible(x, t, y, s):
        expected = ball_bits(x, t) & ball_bits(y, s)
    else:
        expected = frozenset()
    union = set()
    for p in range(min(t, s) + 1):
        for q in range(min(t, s) - p + 1):
            if not _radii_compatible(v, t - p - q, v_tilde, s - p - q):
                continue
            middle = ball_bits(v, t - p - q) & ball_bits(v_tilde, s - p - q)
            union |= _join(
                ball_bits(u, p), u.length - p,
                middle, v.length - (t - p - q),
                ball_bits(w, q), w.length - q,
            )
    return union == expected


def check_common_affix_collapse(u, v, v_tilde, w, t):
    """
    При |v| = |ṽ| и d_L(v, ṽ) >= t:
    D_t(uvw) ∩ D_t(uṽw) = u ∘ (D_t(v) ∩ D_t(ṽ)) ∘ w.
    """

    if levenshtein_distance(v, v_tilde) < t:
        raise ValidationError(
            'Требуется d_L(v, ṽ) >= t.', code='precondition'
        )
    x = u.concat(v, w)
    y = u.concat(v_tilde, w)
    if not _radii_compatible(x, t, y, t):
        return True
    middle = (ball_bits(v, t) & ball_bits(v_tilde, t)
              if t <= v.length else frozenset())
    collapsed = _join(
        {u.bits}, u.length, middle, v.length - t, {w.bits}, w.length
    )
    return collapsed == ball_bits(x, t) & ball_bits(y, t)


def _require_equal_lengths(x, y):
    if x.length != y.length:
        raise ValidationError(
            'Слова должны иметь одинаковую длину.', code='length_mismatch'
        )


def type_a_witness(x, y):
    """
    Разложение x = u v w, y = u v̄ w с чередующимся v длины не меньше 2.

    Такое разложение единственно, поэтому u и w — наибольшие общие
    префикс и суффикс. Возвращает None, если его нет.
    """

    _require_equal_lengths(x, y)
    if x == y:
        return None
    decomposition = affix_decompose(x, y)
    middle = decomposition.mid_x
    if (middle.length >= 2 and middle.is_alternating()
            and decomposition.mid_y == middle.complement()):
        return decomposition
    return None


def _type_b_oriented(mx, my):
    m = mx.length
    if m < 3:
        return False
    a = mx[1]
    b = mx[m]
    return (
        mx[2] != a
        and my[1] != a
        and mx.project(3, m - 1) == my.project(2, m - 2)
        and my[m - 1] == b
        and my[m] != b
    )


def is_type_b_confusable(x, y):
    """
    x = u a ā v b w и y = u ā v b b̄ w (или наоборот).

    u и w обязаны быть наибольшими общими префиксом и суффиксом.
    """

    _require_equal_lengths(x, y)
    if x == y:
        return False
    p = _common_prefix_length(x, y)
    s = _common_suffix_length(x, y, skip=p)
    mx = x.project(p + 1, x.length - s)
    my = y.project(p + 1, y.length - s)
    return _type_b_oriented(mx, my) or _type_b_oriented(my, mx)


class PairClass(str, enum.Enum):
    """Значение |D_2(x) ∩ D_2(y)| для пары на расстоянии 1."""

    TWO_N_MINUS_4 = '2n-4'
    TWO_N_MINUS_5 = '2n-5'
    TWO_N_MINUS_6 = '2n-6'
    AT_MOST_N = '<=n'
    OTHER = 'other'

    def expected_size(self, n):
        return {
            PairClass.TWO_N_MINUS_4: 2 * n - 4,
            PairClass.TWO_N_MINUS_5: 2 * n - 5,
            PairClass.TWO_N_MINUS_6: 2 * n - 6,
        }.get(self)

    def upper_bound(self, n):
        if self is PairClass.AT_MOST_N:
            return n
        if self is PairClass.OTHER:
            return 2 * n - 7
        return self.expected_size(n)


def classify_single_deletion_pair(x, y):
    """
    Классификация пары с d_L(x, y) = 1 и n >= 7 по разложению Type-A.

    s, l, t — длины общего префикса, чередующегося блока и общего суффикса.
    """

    _require_equal_lengths(x, y)
    n = x.length
    if n < 7 or levenshtein_distance(x, y) != 1:
        raise ValidationError(
            'Классификация требует n >= 7 и d_L(x, y) = 1.',
            code='precondition',
        )
    if intersection_size(x, 1, y, 1) <= 1:
        return PairClass.AT_MOST_N
    witness = type_a_witness(x, y)
    s, l, t = (
        witness.prefix.length, witness.mid_x.length, witness.suffix.length
    )
    if not (witness.prefix.is_alternating()
            and witness.suffix.is_alternating()):
        # l = 2, один аффикс пуст: размер равен 2 * (число серий другого)
        if l == 2 and min(s, t) == 0:
            affix = witness.prefix if t == 0 else witness.suffix
            if affix.transitions() == affix.length - 2:
                return PairClass.TWO_N_MINUS_6
        return PairClass.OTHER
    if l == n or (l == 2 and min(s, t) == 0):
        return PairClass.TWO_N_MINUS_4
    if (l == n - 1
            or (l == n - 2 and {s, t} == {0, 2})
            or (l == 2 and s >= 1 and t >= 1)
            or (3 <= l <= n - 2 and min(s, t) == 0 and max(s, t) >= 1)):
        return PairClass.TWO_N_MINUS_5
    return PairClass.TWO_N_MINUS_6


def single_deletion_neighbours(x):
    """Все y той же длины с d_L(x, y) = 1."""

    neighbours = set()
    for z in ball_bits(x, 1):
        for position in range(x.length):
            head = z >> (x.length - 1 - position)
            tail = z & ((1 << (x.length - 1 - position)) - 1)
            for symbol in (0, 1):
                bits = (
                    (head << (x.length - position))
                    | (symbol << (x.length - 1 - position))
                    | tail
                )
                if bits != x.bits:
                    neighbours.add(bits)
    return [BinarySequence(x.length, bits) for bits in sorted(neighbours)]
