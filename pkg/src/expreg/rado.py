"""Exact rational linear algebra and the columns-property decision procedure.

Everything here works over unbounded integers and `fractions.Fraction`;
the columns property is a brittle algebraic predicate and floating point
is never acceptable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence


class DimensionMismatch(ValueError):
    pass


class ColumnBudgetExceeded(ValueError):
    pass


class NotPrime(ValueError):
    pass


DEFAULT_COLUMN_BUDGET = 12


@dataclass(frozen=True)
class IntMatrix:
    """A rectangular integer matrix; zero rows are allowed, zero columns are not."""

    num_rows: int
    num_cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_cols < 1:
            raise ValueError("matrix must have at least one column")
        if self.num_rows < 0 or len(self.entries) != self.num_rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.num_cols:
                raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], num_cols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if num_cols is None:
            if not rows:
                raise ValueError("num_cols required for a matrix with no rows")
            num_cols = len(rows[0])
        return cls(len(rows), num_cols, rows)

    def column(self, j: int) -> tuple[int, ...]:
        """Column j, 1-based."""
        return tuple(row[j - 1] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(1, self.num_cols + 1)]

    def scale_row(self, i: int, factor: int) -> "IntMatrix":
        """New matrix with row i (1-based) multiplied by factor."""
        rows = [
            tuple(factor * v for v in row) if r == i - 1 else row
            for r, row in enumerate(self.entries)
        ]
        return IntMatrix(self.num_rows, self.num_cols, tuple(rows))


class _Span:
    """Incrementally built row-echelon basis for a rational span."""

    def __init__(self) -> None:
        self.rows: list[tuple[Fraction, ...]] = []  # each normalized to leading 1
        self.pivots: list[int] = []

    def copy(self) -> "_Span":
        s = _Span()
        s.rows = list(self.rows)
        s.pivots = list(self.pivots)
        return s

    def _residual(self, vec: Sequence[int | Fraction]) -> list[Fraction]:
        v = [Fraction(x) for x in vec]
        for pivot, row in zip(self.pivots, self.rows):
            if v[pivot]:
                c = v[pivot]
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence[int | Fraction]) -> bool:
        return not any(self._residual(vec))

    def add(self, vec: Sequence[int | Fraction]) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        v = self._residual(vec)
        for pivot, x in enumerate(v):
            if x:
                inv = 1 / x
                self.rows.append(tuple(a * inv for a in v))
                self.pivots.append(pivot)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(m: IntMatrix) -> int:
    """Rational rank, by exact elimination."""
    span = _Span()
    for row in m.entries:
        span.add(row)
    return span.rank


def in_span(vectors: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """True iff target is a rational linear combination of the given vectors.

    The empty list spans only the zero vector.
    """
    dim = len(target)
    span = _Span()
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatch(f"vector of length {len(v)} against target of length {dim}")
        span.add(v)
    return span.contains(target)


@dataclass(frozen=True)
class ColumnsPartition:
    """Ordered partition S_0, ..., S_d of the column indices (1-based)."""

    blocks: tuple[tuple[int, ...], ...]


def check_columns_partition(m: IntMatrix, part: ColumnsPartition) -> list[str]:
    """Re-validate a partition against the columns-property definition.

    Returns violations; empty means the certificate is sound.  Exact
    arithmetic throughout.
    """
    problems = []
    seen: set[int] = set()
    for block in part.blocks:
        if not block:
            problems.append("empty block")
        for j in block:
            if not 1 <= j <= m.num_cols:
                problems.append(f"column index {j} out of range")
            elif j in seen:
                problems.append(f"column {j} appears twice")
            seen.add(j)
    if seen != set(range(1, m.num_cols + 1)):
        problems.append("blocks do not cover all columns")
    if problems:
        return problems

    cols = m.columns()
    first_sum = _vector_sum(cols[j - 1] for j in part.blocks[0])
    if any(first_sum):
        problems.append("first block does not sum to zero")
    span = _Span()
    for j in part.blocks[0]:
        span.add(cols[j - 1])
    for i, block in enumerate(part.blocks[1:], start=1):
        s = _vector_sum(cols[j - 1] for j in block)
        if not span.contains(s):
            problems.append(f"block {i} sum is outside the span of earlier columns")
        for j in block:
            span.add(cols[j - 1])
    return problems


def _vector_sum(vectors) -> tuple[int, ...]:
    total: tuple[int, ...] | None = None
    for v in vectors:
        total = v if total is None else tuple(a + b for a, b in zip(total, v))
    assert total is not None
    return total


def _ordered_subsets(items: Sequence[int]) -> Iterator[list[int]]:
    # Nonempty subsets, ordered so that membership of earlier items dominates:
    # the full set comes first and dropping a later item is preferred over
    # dropping an earlier one.  This makes the block-by-block partition
    # search agree with lexicographic order on column-label vectors.
    r = len(items)
    for mask in range((1 << r) - 1, 0, -1):
        yield [items[i] for i in range(r) if mask & (1 << (r - 1 - i))]


def columns_property(
    m: IntMatrix, max_cols: int = DEFAULT_COLUMN_BUDGET
) -> ColumnsPartition | None:
    """Find an ordered column partition witnessing Rado's criterion, or None.

    Deterministic: returns the first valid partition under lexicographic
    order on column-label vectors (block membership of low-index columns
    decided first).  A matrix with no rows has all-zero columns in Q^0, so
    the single block S_0 = all columns always works there.

    Raises ColumnBudgetExceeded when the column count is above max_cols;
    the search is exponential in the number of columns.  A matrix with no
    rows never searches (S_0 = everything is immediate), so the budget does
    not apply there.
    """
    if m.num_rows == 0:
        return ColumnsPartition((tuple(range(1, m.num_cols + 1)),))
    if m.num_cols > max_cols:
        raise ColumnBudgetExceeded(
            f"{m.num_cols} columns exceeds the search budget of {max_cols}"
        )
    cols = m.columns()

    def extend(remaining: list[int], blocks: list[tuple[int, ...]], span: _Span):
        if not remaining:
            return tuple(blocks)
        for block in _ordered_subsets(remaining):
            s = _vector_sum(cols[j - 1] for j in block)
            if not blocks:
                if any(s):
                    continue
            elif not span.contains(s):
                continue
            wider = span.copy()
            for j in block:
                wider.add(cols[j - 1])
            chosen = set(block)
            result = extend(
                [j for j in remaining if j not in chosen], blocks + [tuple(block)], wider
            )
            if result is not None:
                return result
        return None

    found = extend(list(range(1, m.num_cols + 1)), [], _Span())
    if found is None:
        return None
    part = ColumnsPartition(found)
    problems = check_columns_partition(m, part)
    assert not problems, f"internal error: unsound partition {found}: {problems}"
    return part


def is_partition_regular(
    m: IntMatrix, max_cols: int = DEFAULT_COLUMN_BUDGET
) -> tuple[bool, ColumnsPartition | None]:
    """Rado's theorem: partition regular iff the columns property holds.

    The certificate (the partition, or None) comes along with the verdict.
    """
    part = columns_property(m, max_cols=max_cols)
    return part is not None, part


def single_equation_oracle(coeffs: Sequence[int]) -> bool:
    """Independent oracle for one equation c . x = 0 with nonzero coefficients:
    partition regular iff some nonempty subset of the coefficients sums to zero.
    """
    if any(c == 0 for c in coeffs):
        raise ValueError("oracle requires nonzero coefficients")
    for size in range(1, len(coeffs) + 1):
        for combo in combinations(coeffs, size):
            if sum(combo) == 0:
                return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for anything a desk search will meet."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def rado_colour(p: int, x: int) -> int:
    """The lowest nonzero base-p digit of x, a colour in [1, p-1].

    For p = 2 this is identically 1 (a single colour); allowed but useless
    for forbidding anything.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if x < 1:
        raise ValueError("colouring is defined on positive integers")
    while x % p == 0:
        x //= p
    return x % p
