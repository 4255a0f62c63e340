"""Brute-force oracles: colouring evaluation and exhaustive searches.

Everything here enumerates honestly.  Assignments whose intermediate
values would blow past the ceiling are skipped and counted, never treated
as silent non-solutions, and every Found result re-verifies before it is
reported.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .eqsys import ExpSystem
from .graphs import build_linear_system
from .rado import IntMatrix, NotPrime, is_prime, rado_colour
from .witness import (
    Plain,
    Tower,
    TowerValue,
    Witness,
    iter_positive_solutions,
    lift,
    prime_omega,
    tower_to_int,
)


class RestrictionUnsupported(ValueError):
    pass


# colour reserved for 1 under factor-count colourings; real colours are >= 0
SENTINEL_COLOUR = -1


# ---------------------------------------------------------------------------
# colouring specs


@dataclass(frozen=True)
class Constant:
    colour: int

    def __post_init__(self) -> None:
        if self.colour < 0:
            raise ValueError("colours must be non-negative")


@dataclass(frozen=True)
class Mod:
    """colour(x) = x mod m."""

    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be at least 1")


@dataclass(frozen=True)
class RadoP:
    """colour(x) = lowest nonzero base-p digit of x."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")


@dataclass(frozen=True)
class RadoPNu:
    """The base-p digit colouring composed with the prime-factor count; x >= 2."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")


@dataclass(frozen=True)
class OmegaOf:
    """An arbitrary colouring composed with the prime-factor count; x >= 2."""

    base: "ColouringSpec"


@dataclass(frozen=True)
class Table:
    """Explicit colours for 1..len(colours), default beyond that range."""

    colours: tuple[int, ...]
    default: int = 0

    def __post_init__(self) -> None:
        if self.default < 0 or any(c < 0 for c in self.colours):
            raise ValueError("colours must be non-negative")


ColouringSpec = Constant | Mod | RadoP | RadoPNu | OmegaOf | Table


def colour_of(spec: ColouringSpec, x: int) -> int:
    """Evaluate the colouring at a positive integer.

    Factor-count colourings return the sentinel at x = 1, where the count
    is undefined.
    """
    if x < 1:
        raise ValueError("colourings are defined on positive integers")
    if isinstance(spec, Constant):
        return spec.colour
    if isinstance(spec, Mod):
        return x % spec.modulus
    if isinstance(spec, RadoP):
        return rado_colour(spec.p, x)
    if isinstance(spec, RadoPNu):
        return SENTINEL_COLOUR if x == 1 else rado_colour(spec.p, prime_omega(x))
    if isinstance(spec, OmegaOf):
        return SENTINEL_COLOUR if x == 1 else colour_of(spec.base, prime_omega(x))
    if isinstance(spec, Table):
        return spec.colours[x - 1] if x <= len(spec.colours) else spec.default
    raise TypeError(f"not a colouring spec: {spec!r}")


def colour_count(spec: ColouringSpec) -> int:
    """Size of the colour set the spec can produce (sentinel excluded)."""
    if isinstance(spec, Constant):
        return 1
    if isinstance(spec, Mod):
        return spec.modulus
    if isinstance(spec, (RadoP, RadoPNu)):
        return max(spec.p - 1, 1)
    if isinstance(spec, OmegaOf):
        return colour_count(spec.base)
    if isinstance(spec, Table):
        return len(set(spec.colours) | {spec.default})
    raise TypeError(f"not a colouring spec: {spec!r}")


def colour_of_tower(spec: ColouringSpec, tv: TowerValue) -> int:
    """Colour of a (possibly astronomically large) tower, in the exponents."""
    if isinstance(tv, Plain):
        return colour_of(spec, tv.value)
    a, b, k = tv.base, tv.expbase, tv.level
    if isinstance(spec, Constant):
        return spec.colour
    if isinstance(spec, Mod):
        return pow(a, b**k, spec.modulus)
    if isinstance(spec, RadoP):
        p = spec.p
        u = a
        while u % p == 0:
            u //= p
        if u == 1:
            return 1  # a pure power of p: the only nonzero digit is 1
        return pow(u, b**k, p)
    if isinstance(spec, (RadoPNu, OmegaOf)):
        count = b**k * prime_omega(a)  # complete additivity of the factor count
        if isinstance(spec, RadoPNu):
            return rado_colour(spec.p, count)
        return colour_of(spec.base, count)
    if isinstance(spec, Table):
        value = tower_to_int(tv, len(spec.colours)) if spec.colours else None
        return spec.colours[value - 1] if value is not None else spec.default
    raise TypeError(f"not a colouring spec: {spec!r}")


# ---------------------------------------------------------------------------
# bounded evaluation of exponential equations

PASS = "pass"
FAIL = "fail"
CEILING = "ceiling"


def _bounded_pow(base: int, exp: int, ceiling: int) -> int | None:
    """base**exp, or None as soon as the value exceeds the ceiling."""
    if exp < 0:
        raise ValueError("negative exponent")
    result = 1
    b = base
    e = exp
    while e:
        if e & 1:
            result *= b
            if result > ceiling:
                return None
        e >>= 1
        if e:
            b *= b
            if b > ceiling:
                # some remaining bit would multiply this (or a bigger square) in
                return None
    return result


def _edge_status(edge, xs, ys, ceiling: int) -> str:
    num = den = 1
    for c, y in zip(edge.coeffs, ys):
        if c > 0:
            p = _bounded_pow(y, c, ceiling)
            if p is None:
                return CEILING
            num *= p
            if num > ceiling:
                return CEILING
        elif c < 0:
            p = _bounded_pow(y, -c, ceiling)
            if p is None:
                return CEILING
            den *= p
            if den > ceiling:
                return CEILING
    g = math.gcd(num, den)
    num, den = num // g, den // g
    # X_tail^(num/den) = X_head  <=>  X_tail^num = X_head^den over the reals
    lhs = _bounded_pow(xs[edge.tail - 1], num, ceiling)
    rhs = _bounded_pow(xs[edge.head - 1], den, ceiling)
    if lhs is None or rhs is None:
        return CEILING
    return PASS if lhs == rhs else FAIL


def eval_exp(sys: ExpSystem, xs, ys, ceiling: int) -> list[str]:
    """Per-edge status of an explicit assignment: pass, fail, or ceiling.

    Negative exponents are handled exactly through the rational exponent
    num/den; the comparison cross-multiplies instead of taking roots.
    """
    xs = tuple(xs)
    ys = tuple(ys)
    if len(xs) != sys.num_vertices or len(ys) != sys.num_y:
        raise ValueError("assignment length mismatch")
    if any(v < 2 for v in xs) or any(v < 2 for v in ys):
        raise ValueError("all assigned values must exceed 1")
    return [_edge_status(e, xs, ys, ceiling) for e in sys.edges]


# ---------------------------------------------------------------------------
# exhaustive searches


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive monochromatic search.

    `assignment` is the lexicographically first solution when one exists;
    otherwise the full lattice was enumerated and `skipped` counts the
    monochromatic candidates whose evaluation hit the ceiling.
    """

    var_low: int
    var_high: int
    ceiling: int | None
    num_variables: int
    assignment: tuple[int, ...] | None
    skipped: int

    @property
    def found(self) -> bool:
        return self.assignment is not None

    @property
    def exhausted(self) -> bool:
        return self.assignment is None


def _colour_classes(spec: ColouringSpec, low: int, high: int) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for v in range(low, high + 1):
        c = colour_of(spec, v)
        if c == SENTINEL_COLOUR:
            continue  # 1 is uncoloured under factor-count colourings
        classes.setdefault(c, []).append(v)
    return classes


def search_exp(
    sys: ExpSystem, colouring: ColouringSpec, var_bound: int, ceiling: int
) -> SearchReport:
    """First monochromatic solution of the system with all variables in [2, var_bound].

    A monochromatic assignment must give all X- and Y-variables the same
    colour, so the enumeration runs per colour class and keeps the global
    lexicographic-first winner (X-variables before Y-variables).
    """
    classes = _colour_classes(colouring, 2, var_bound)
    nx = sys.num_vertices
    nvars = nx + sys.num_y
    best: tuple[int, ...] | None = None
    skipped = 0
    for colour in sorted(classes):
        values = classes[colour]
        for assignment in itertools.product(values, repeat=nvars):
            if best is not None and assignment >= best:
                break
            xs, ys = assignment[:nx], assignment[nx:]
            failed = ceilinged = False
            for e in sys.edges:
                st = _edge_status(e, xs, ys, ceiling)
                if st == FAIL:
                    failed = True
                    break
                if st == CEILING:
                    ceilinged = True
            if failed:
                continue
            if ceilinged:
                skipped += 1
                continue
            best = assignment
            break
    if best is not None:
        statuses = eval_exp(sys, best[:nx], best[nx:], ceiling)
        assert all(s == PASS for s in statuses), "found assignment failed re-verification"
    return SearchReport(2, var_bound, ceiling, nvars, best, skipped)


def search_lin(matrix: IntMatrix, colouring: ColouringSpec, bound: int) -> SearchReport:
    """First monochromatic z in [1, bound]^n with A z = 0, by exhaustion."""
    classes = _colour_classes(colouring, 1, bound)
    rows = matrix.entries
    n = matrix.num_cols
    best: tuple[int, ...] | None = None
    for colour in sorted(classes):
        values = classes[colour]
        for z in itertools.product(values, repeat=n):
            if best is not None and z >= best:
                break
            if all(sum(c * v for c, v in zip(row, z)) == 0 for row in rows):
                best = z
                break
    if best is not None:
        assert all(sum(c * v for c, v in zip(row, best)) == 0 for row in rows)
    return SearchReport(1, bound, None, n, best, 0)


def _solution_value_sets(matrix: IntMatrix, bound: int) -> list[tuple[int, ...]]:
    """Distinct-value sets of solutions within [1, bound]^n, deduplicated."""
    seen: set[tuple[int, ...]] = set()
    for z in iter_positive_solutions(matrix, bound):
        seen.add(tuple(sorted(set(z))))
    return sorted(seen)


def _exists_avoiding_colouring(n: int, colours: int, constraints) -> list[int] | None:
    """A colouring of [1, n] making no constraint set monochromatic, or None.

    Backtracking over values in increasing order; colour symmetry is broken
    by never introducing colour c before all colours below c are in use, so
    the search is exhaustive up to colour permutation.
    """
    by_max: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    for members in constraints:
        if members and members[-1] <= n:
            by_max[members[-1]].append(members)
    assigned = [0] * (n + 1)

    def dfs(v: int, used: int) -> bool:
        if v > n:
            return True
        for c in range(min(used + 1, colours)):
            assigned[v] = c
            ok = True
            for members in by_max[v]:
                first = assigned[members[0]]
                if all(assigned[u] == first for u in members[1:]):
                    ok = False
                    break
            if ok and dfs(v + 1, used + (1 if c == used else 0)):
                return True
        return False

    if dfs(1, 0):
        return assigned[1:]
    return None


def rado_number(matrix: IntMatrix, colours: int, max_n: int) -> int | None:
    """Least N <= max_n such that every colouring of [1, N] has a monochromatic
    solution with entries <= N; None when the threshold exceeds max_n."""
    if colours < 1:
        raise ValueError("at least one colour required")
    sets = _solution_value_sets(matrix, max_n)
    for n in range(1, max_n + 1):
        active = [s for s in sets if s[-1] <= n]
        if _exists_avoiding_colouring(n, colours, active) is None:
            return n
    return None


def find_progression(table, length: int) -> tuple[int, int] | None:
    """First (a, d) whose arithmetic progression of the given length is
    monochromatic in the colour table over [1, len(table)].

    Length 1 degenerates to the single element (1, 0).
    """
    if length < 1:
        raise ValueError("length must be positive")
    n = len(table)
    if n == 0:
        return None
    if length == 1:
        return (1, 0)
    for a in range(1, n + 1):
        for d in range(1, (n - a) // (length - 1) + 1):
            first = table[a - 1]
            if all(table[a - 1 + i * d] == first for i in range(1, length)):
                return (a, d)
    return None


def vdw_number(colours: int, length: int, max_n: int) -> int | None:
    """Least N <= max_n such that every colouring of [1, N] has a monochromatic
    arithmetic progression of the given length; None beyond max_n."""
    if colours < 1 or length < 1:
        raise ValueError("colours and length must be positive")
    if length == 1:
        return 1
    for n in range(1, max_n + 1):
        aps = [
            tuple(a + i * d for i in range(length))
            for a in range(1, n + 1)
            for d in range(1, (n - a) // (length - 1) + 1)
        ]
        if _exists_avoiding_colouring(n, colours, aps) is None:
            return n
    return None


def d_restrict(colouring: ColouringSpec, d: int, x: int) -> int:
    """Colour of 2^(d * 2^x) without materializing the value.

    The doubly exponential argument only ever appears through its factor
    count d * 2^x or through modular exponentiation, except for Table specs
    which need the value itself and fail once it leaves their range.
    """
    if d < 1 or x < 1:
        raise ValueError("d and x must be positive")
    if x > 64:
        raise ValueError("x above 64 is not supported")
    e = d << x
    if isinstance(colouring, Constant):
        return colouring.colour
    if isinstance(colouring, Mod):
        return pow(2, e, colouring.modulus)
    if isinstance(colouring, RadoP):
        return 1 if colouring.p == 2 else pow(2, e, colouring.p)
    if isinstance(colouring, RadoPNu):
        return rado_colour(colouring.p, e)
    if isinstance(colouring, OmegaOf):
        return colour_of(colouring.base, e)
    if isinstance(colouring, Table):
        size = len(colouring.colours)
        if size == 0 or e > size.bit_length() - 1:
            raise RestrictionUnsupported("2^(d*2^x) is beyond the table range")
        return colouring.colours[(1 << e) - 1]
    raise TypeError(f"not a colouring spec: {colouring!r}")


DEFAULT_WITNESS_BASES = ((2, 2), (3, 3), (2, 3), (3, 2), (5, 5))


def search_witnesses(
    sys: ExpSystem,
    colouring: ColouringSpec,
    z_bound: int = 12,
    bases=DEFAULT_WITNESS_BASES,
    max_solutions: int = 200,
) -> Witness | None:
    """First lifted witness that is monochromatic under the given colouring.

    Scans solutions of the linear side in lexicographic order and base pairs
    in the given order; colours of the tower values are evaluated in the
    exponents.  Returns None when nothing within the bounds is monochromatic
    (which never refutes anything: existence is guaranteed, location is not).
    """
    lin = build_linear_system(sys)
    for count, z in enumerate(iter_positive_solutions(lin.matrix, z_bound)):
        if count >= max_solutions:
            break
        for a, b in bases:
            w = lift(sys, z, a, b)
            seen = {colour_of_tower(colouring, tv) for tv in w.xs}
            seen.update(colour_of_tower(colouring, tv) for tv in w.ys)
            if len(seen) == 1 and SENTINEL_COLOUR not in seen:
                return w
    return None
