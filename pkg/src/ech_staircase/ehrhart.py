"""Lattice-point counts of dilated rational right triangles, quasi-polynomial
fits, the domination criterion for ellipsoid embeddings, and the horizontal
slice machinery used by the eccentricity-4/3 analysis.

Counting uses exact integer arithmetic throughout; irrational parameters go
through adaptive rational enclosures (see intervals).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd, lcm

from .core import Ellipsoid
from .intervals import MAX_BITS, START_BITS, AdaptiveScalar, PrecisionError
from .render import decimal_str


@dataclass(frozen=True)
class RightTriangle:
    """Right triangle with legs on the axes: vertices (0,0), (u,0), (0,v)."""

    u: Fraction
    v: Fraction

    def __post_init__(self):
        u, v = Fraction(self.u), Fraction(self.v)
        if u <= 0 or v <= 0:
            raise ValueError("triangle legs must be positive")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def transpose(self) -> "RightTriangle":
        return RightTriangle(self.v, self.u)

    def __str__(self) -> str:
        return f"T({self.u}, {self.v})"


TRIANGLE_HALF_SIXTH = RightTriangle(Fraction(1, 2), Fraction(1, 6))
TRIANGLE_THIRD_QUARTER = RightTriangle(Fraction(1, 3), Fraction(1, 4))


def parameter_triangle(a: Fraction) -> RightTriangle:
    """Reciprocal-leg triangle of the normalized source ellipsoid for parameter a:
    legs (a+3)/12 and (a+3)/(12a).  At a = 3 this degenerates to legs (1/2, 1/6).
    """
    a = Fraction(a)
    if a <= 0:
        raise ValueError("parameter must be positive")
    return RightTriangle((a + 3) / 12, (a + 3) / (12 * a))


def _floor_sum(n: int, m: int, a: int, b: int) -> int:
    """sum_{i=0}^{n-1} (a + b*i) // m for n >= 0, m >= 1, a >= 0, b >= 0."""
    total = 0
    while True:
        if a >= m:
            total += n * (a // m)
            a %= m
        if b >= m:
            total += n * (n - 1) // 2 * (b // m)
            b %= m
        y_max = (a + b * n) // m
        if y_max == 0:
            return total
        x_max = y_max * m - a
        total += y_max * (n - (x_max + b - 1) // b)
        n, m, a, b = y_max, b, (b - x_max % b) % b, m


def triangle_count(tri: RightTriangle, t: int) -> int:
    """Lattice points in the t-fold dilate of tri; t = 0 counts just the origin."""
    if t < 0:
        raise ValueError("dilation must be nonnegative")
    if t == 0:
        return 1
    u, v = tri.u, tri.v
    # iterate over the shorter leg
    if t * u < t * v:
        u, v = v, u
    # row y holds floor(t*u - y*u/v) + 1 points; in integers over beta*B:
    alpha, beta = u.numerator, u.denominator
    gamma, delta = v.numerator, v.denominator
    g = gcd(alpha * delta, beta * gamma)
    slope_num = alpha * delta // g
    slope_den = beta * gamma // g
    m = beta * slope_den
    rows = (t * gamma) // delta + 1
    top = t * alpha * slope_den - (rows - 1) * slope_num * beta
    return rows + _floor_sum(rows, m, top, slope_num * beta)


class FitConsistencyError(RuntimeError):
    """A fitted quasi-polynomial failed its hold-out verification (counting bug)."""


@dataclass(frozen=True)
class QuasiPolynomial:
    """Degree-2 quasi-polynomial A t^2 + B_r t + C_r with r = t mod period."""

    period: int
    leading: Fraction
    linear: tuple[Fraction, ...]
    constant: tuple[Fraction, ...]

    def __call__(self, t: int) -> Fraction:
        r = t % self.period
        return self.leading * t * t + self.linear[r] * t + self.constant[r]


def fit_quasi_polynomial(tri: RightTriangle) -> QuasiPolynomial:
    """Fit the Ehrhart quasi-polynomial of tri exactly.

    The leading coefficient is the area u*v/2, so two counts per residue pin
    the linear and constant terms; counts at r + 2p and r + 3p then verify
    the fit (failure signals a counting bug, not bad input).
    """
    period = lcm(tri.u.denominator, tri.v.denominator)
    leading = tri.u * tri.v / 2
    linear: list[Fraction] = []
    constant: list[Fraction] = []
    for r in range(period):
        l0 = triangle_count(tri, r)
        l1 = triangle_count(tri, r + period)
        b = Fraction(l1 - l0 - leading * ((r + period) ** 2 - r * r), period)
        c = l0 - leading * r * r - b * r
        for t in (r + 2 * period, r + 3 * period):
            if leading * t * t + b * t + c != triangle_count(tri, t):
                raise FitConsistencyError(f"fit for {tri} fails hold-out at t={t}")
        linear.append(b)
        constant.append(c)
    return QuasiPolynomial(period, leading, tuple(linear), tuple(constant))


@dataclass(frozen=True)
class DominationVerdict:
    """Outcome of a termwise lattice-count comparison.

    checked_through is the last dilation examined for a truncated scan, or
    None when the verdict covers every positive dilation (exact mode).
    """

    holds: bool
    fails_at: int | None
    checked_through: int | None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            scope = "for all t" if self.checked_through is None else f"through t={self.checked_through}"
            return f"holds {scope}"
        return f"fails at t={self.fails_at}"


def ehrhart_dominates(lhs: RightTriangle, rhs: RightTriangle, t_max: int) -> DominationVerdict:
    """Check count(lhs, t) >= count(rhs, t) for t = 1..t_max (truncated verdict)."""
    if t_max < 1:
        raise ValueError("t_max must be positive")
    for t in range(1, t_max + 1):
        if triangle_count(lhs, t) < triangle_count(rhs, t):
            return DominationVerdict(False, t, t_max)
    return DominationVerdict(True, None, t_max)


def ehrhart_dominates_exact(lhs: RightTriangle, rhs: RightTriangle) -> DominationVerdict:
    """Decide count(lhs, t) >= count(rhs, t) for every t >= 1.

    Compares the fitted quasi-polynomials residue by residue; beyond an
    explicit crossover bound the sign of each residue's difference polynomial
    is locked by its leading nonzero coefficient, so a finite exact scan
    settles the infinite check.
    """
    qp1 = fit_quasi_polynomial(lhs)
    qp2 = fit_quasi_polynomial(rhs)
    period = lcm(qp1.period, qp2.period)
    alpha = qp1.leading - qp2.leading
    scan_to = period
    for r in range(period):
        beta = qp1.linear[r % qp1.period] - qp2.linear[r % qp2.period]
        gamma = qp1.constant[r % qp1.period] - qp2.constant[r % qp2.period]
        if alpha > 0:
            bound = (abs(beta) + abs(gamma)) / alpha
        elif alpha == 0 and beta > 0:
            bound = max(Fraction(0), -gamma) / beta
        elif alpha == 0 and beta == 0:
            if gamma >= 0:
                continue
            bound = Fraction(period + r)
        elif alpha == 0:
            bound = abs(gamma) / (-beta) + period
        else:
            bound = (abs(beta) + abs(gamma)) / (-alpha) + period
        scan_to = max(scan_to, ceil(bound) + 1)
    for t in range(1, scan_to + 1):
        if qp1(t) < qp2(t):
            return DominationVerdict(False, t, None)
    return DominationVerdict(True, None, None)


def embedding_decision(
    source: Ellipsoid, target: Ellipsoid, t_max: int = 300, exact: bool = False
) -> DominationVerdict:
    """Decide whether source embeds into target via reciprocal-leg domination.

    The embedding exists iff the lattice counts of the source's reciprocal
    triangle dominate the target's at every dilation; rational inputs make
    both triangles rational.  Default mode truncates at t_max and says so;
    exact mode settles all t through quasi-polynomial comparison.
    """
    lhs = RightTriangle(1 / source.a, 1 / source.b)
    rhs = RightTriangle(1 / target.a, 1 / target.b)
    if exact:
        return ehrhart_dominates_exact(lhs, rhs)
    return ehrhart_dominates(lhs, rhs, t_max)


# -- the horizontal-slice machinery ------------------------------------------
#
# For 3 < a <= 4 and a positive integer t, the plane region between the
# reference edge 2x + 6y = t and the parameter edge
# (12/(a+3)) x + (12a/(a+3)) y = t splits at their crossing (t/4, t/12) into
# an upper wedge (against the y-axis) and a lower wedge (against the x-axis).
# Slice x-bounds at integer height y are rational for the reference edge and
# affine in a for the parameter edge:
#
#     parameter edge:  x = t/4 + a * (t - 12 y) / 12     (exact t/4 at y = t/12)
#     reference edge:  x = (t - 6 y) / 2
#
# Counting conventions (fixed by requiring the exact difference identity
# count_parameter(t) = count_reference(t) + lower - upper - boundary):
# the lower wedge is counted closed; the upper wedge excludes lattice points
# that fall on the parameter edge except the crossing point itself, which is
# counted in both wedges; `boundary` counts reference-edge lattice points
# strictly below the crossing, ceil(t/12) of them for even t and none for odd.


class _Straddle(Exception):
    """Internal: an enclosure straddles a decision boundary; refine and retry."""


@dataclass(frozen=True)
class SliceCounts:
    """Lattice tallies of the two wedges for one dilation t."""

    t: int
    a: object
    upper: int
    lower: int
    boundary: int


def boundary_lattice_count(t: int) -> int:
    """Reference-edge lattice points strictly below the crossing: ceil(t/12)
    for even t, 0 for odd t."""
    return (t + 11) // 12 if t % 2 == 0 else 0


def _region_tallies(n_lo: int, n_hi: int, den: int, t: int, exact: bool) -> tuple[int, int]:
    """Wedge tallies with a enclosed in [n_lo, n_hi] / den.

    exact=True means a is exactly n_lo/den (== n_hi/den) and lattice points
    on the parameter edge are handled by the stated conventions; otherwise
    any floor/ceil ambiguity raises _Straddle for the caller to refine.
    """
    m = 12 * den
    base = 3 * t * den
    upper = 0
    for y in range((t + 11) // 12, t // 6 + 1):
        fl_ref = (t - 6 * y) // 2
        c1 = t - 12 * y
        if c1 == 0:
            upper += 1  # crossing point, a lattice point exactly when 12 | t
            continue
        lo_num = base + c1 * n_hi
        hi_num = base + c1 * n_lo
        if exact:
            num = lo_num
            if num >= 0 and num % m == 0:
                lo = num // m + 1  # on the parameter edge: excluded from the upper wedge
            elif num <= 0:
                lo = 0
            else:
                lo = -((-num) // m)
        else:
            if hi_num < 0:
                lo = 0
            elif lo_num > 0 and lo_num % m and hi_num % m:
                lo = -((-lo_num) // m)
                if lo != -((-hi_num) // m):
                    raise _Straddle
            else:
                raise _Straddle
        upper += max(0, fl_ref - lo + 1)
    lower = 0
    for y in range(t // 12 + 1):
        ce_ref = (t - 6 * y + 1) // 2
        c1 = t - 12 * y
        if c1 == 0:
            lower += 1
            continue
        lo_num = base + c1 * n_lo
        hi_num = base + c1 * n_hi
        if exact:
            fl = lo_num // m
        else:
            fl = lo_num // m
            if fl != hi_num // m:
                raise _Straddle
        lower += max(0, fl - ce_ref + 1)
    return upper, lower


def _interval_ints(iv) -> tuple[int, int, int]:
    den = lcm(iv.lo.denominator, iv.hi.denominator)
    return iv.lo.numerator * (den // iv.lo.denominator), iv.hi.numerator * (den // iv.hi.denominator), den


def _run_refined(a: AdaptiveScalar, t: int, worker):
    """Call worker(n_lo, n_hi, den, t) under refinement, checking 3 < a <= 4."""
    bits = START_BITS
    while True:
        iv = a.enclosure(bits)
        if iv.hi <= 3 or iv.lo > 4:
            raise ValueError(f"parameter {a!r} lies outside (3, 4]")
        if iv.lo > 3 and iv.hi <= 4:
            if iv.lo == iv.hi:
                # degenerate enclosure: route to the exact rational path
                return worker(iv.lo.numerator, iv.lo.numerator, iv.lo.denominator, t, True)
            try:
                n_lo, n_hi, den = _interval_ints(iv)
                return worker(n_lo, n_hi, den, t, False)
            except _Straddle:
                pass
        if bits >= MAX_BITS:
            raise PrecisionError(
                f"{a!r} did not resolve at {MAX_BITS} bits; degenerate rational input?"
            )
        bits *= 2


def region_counts(a, t: int) -> SliceCounts:
    """Exact lattice tallies (upper, lower, boundary) for 3 < a <= 4 and t >= 1.

    a may be a rational (exact path) or an AdaptiveScalar enclosing an
    irrational; enclosures are refined until every slice floor resolves.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if isinstance(a, (int, Fraction)):
        a = Fraction(a)
        if not (3 < a <= 4):
            raise ValueError(f"parameter {a} lies outside (3, 4]")
        upper, lower = _region_tallies(a.numerator, a.numerator, a.denominator, t, True)
    elif isinstance(a, AdaptiveScalar):
        upper, lower = _run_refined(a, t, _region_tallies)
    else:
        raise TypeError(f"unsupported scalar type {type(a).__name__}")
    return SliceCounts(t, a, upper, lower, boundary_lattice_count(t))


@dataclass(frozen=True)
class SliceCheck:
    """One matched pair of slice counts: upper height y0 against lower height y1."""

    y0: int
    y1: int
    x1: str
    x2: Fraction
    x3: Fraction
    x4: str
    lhs: int
    rhs: int
    ok: bool


@dataclass(frozen=True)
class SliceInequalityReport:
    t: int
    a: object
    slices: tuple[SliceCheck, ...]
    vacuous: bool

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.slices)


def _slant_bounds(base: int, c1: int, n_lo: int, n_hi: int) -> tuple[int, int]:
    nums = (base + c1 * n_lo, base + c1 * n_hi)
    return min(nums), max(nums)


def _slice_rows(n_lo: int, n_hi: int, den: int, t: int, exact: bool) -> list[SliceCheck]:
    m = 12 * den
    base = 3 * t * den

    def slant_str(lo_num: int, hi_num: int) -> str:
        if exact:
            return str(Fraction(lo_num, m))
        return "~" + decimal_str(Fraction(lo_num + hi_num, 2 * m), 12)

    rows: list[SliceCheck] = []
    y_top = t // 6
    for y0 in range((t + 11) // 12, y_top + 1):
        y1 = y_top - y0
        x2 = Fraction(t - 6 * y0, 2)
        x3 = Fraction(t - 6 * y1, 2)
        c1_up = t - 12 * y0
        c1_dn = t - 12 * y1
        # ceil(max(0, x1)) on the parameter edge at the upper height
        if c1_up == 0:
            ce1 = t // 4
            x1_str = str(Fraction(t, 4))
        else:
            lo_num, hi_num = _slant_bounds(base, c1_up, n_lo, n_hi)
            x1_str = slant_str(lo_num, hi_num)
            if exact:
                if lo_num >= 0 and lo_num % m == 0:
                    raise ValueError(
                        f"slice bound is integral at t={t}, y0={y0}; "
                        "the per-slice inequality needs a with non-integral bounds"
                    )
                ce1 = 0 if lo_num <= 0 else -((-lo_num) // m)
            else:
                if hi_num < 0:
                    ce1 = 0
                elif lo_num > 0 and lo_num % m and hi_num % m:
                    ce1 = -((-lo_num) // m)
                    if ce1 != -((-hi_num) // m):
                        raise _Straddle
                else:
                    raise _Straddle
        # floor(x4) on the parameter edge at the lower height
        if c1_dn == 0:
            fl4 = t // 4
            x4_str = str(Fraction(t, 4))
        else:
            lo_num, hi_num = _slant_bounds(base, c1_dn, n_lo, n_hi)
            x4_str = slant_str(lo_num, hi_num)
            fl4 = lo_num // m
            if not exact and fl4 != hi_num // m:
                raise _Straddle
        lhs = (t - 6 * y0) // 2 - ce1 + 1
        rhs = fl4 - (t - 6 * y1 + 1) // 2 + 1
        rows.append(
            SliceCheck(y0, y1, x1_str, x2, x3, x4_str, lhs, rhs, lhs <= rhs)
        )
    return rows


def verify_slice_inequality(a, t: int) -> SliceInequalityReport:
    """Per-slice count comparison pairing upper height y0 with y1 = floor(t/6) - y0.

    Asserts floor(x2) - ceil(max(0, x1)) + 1 <= floor(x4) - ceil(x3) + 1 for
    every integer y0 in [t/12, t/6]; an empty height range is reported as
    vacuous.  Rational a must keep the upper parameter-edge bound
    non-integral away from the crossing (otherwise ValueError).
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if isinstance(a, (int, Fraction)):
        a = Fraction(a)
        if not (3 < a <= 4):
            raise ValueError(f"parameter {a} lies outside (3, 4]")
        rows = _slice_rows(a.numerator, a.numerator, a.denominator, t, True)
    elif isinstance(a, AdaptiveScalar):
        rows = _run_refined(a, t, _slice_rows)
    else:
        raise TypeError(f"unsupported scalar type {type(a).__name__}")
    return SliceInequalityReport(t, a, tuple(rows), vacuous=not rows)


@dataclass(frozen=True)
class DiffIdentityReport:
    """Scan of count(T(1/2,1/6), t) - count(T(1/3,1/4), t) against the boundary count.

    min_difference records the smallest observed difference and where it
    occurs; the scan records margins rather than asserting strictness.
    """

    t_max: int
    violations: tuple[tuple[int, int, int], ...]  # (t, observed, expected)
    min_difference: tuple[int, int]  # (t, difference)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_diff_identity(t_max: int) -> DiffIdentityReport:
    """Check that the two reference counts differ by boundary_lattice_count(t),
    less one exactly when t = 4 mod 12, for t = 1..t_max."""
    if t_max < 12:
        raise ValueError("t_max must be at least 12")
    violations = []
    min_diff = (1, triangle_count(TRIANGLE_HALF_SIXTH, 1) - triangle_count(TRIANGLE_THIRD_QUARTER, 1))
    for t in range(1, t_max + 1):
        observed = triangle_count(TRIANGLE_HALF_SIXTH, t) - triangle_count(
            TRIANGLE_THIRD_QUARTER, t
        )
        expected = boundary_lattice_count(t) - (1 if t % 12 == 4 else 0)
        if observed != expected:
            violations.append((t, observed, expected))
        if observed < min_diff[1]:
            min_diff = (t, observed)
    return DiffIdentityReport(t_max, tuple(violations), min_diff)
