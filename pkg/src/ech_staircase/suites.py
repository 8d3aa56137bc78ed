"""Batch verification suites: each returns NamedCheck rows for the CLI and tests.

These are the independent oracles of the project.  Where an operation has a
clever path (heap frontier, closed-form identities, slice tallies), the suite
recomputes the answer by brute force and compares exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

from .analysis import (
    NICEBOUND_EXCLUDED,
    NamedCheck,
    STEP5_LEFTOVERS,
    verify_43_case,
    verify_claim_steps,
    verify_exceptional,
    verify_nicebound,
)
from .capacities import capacity_prefix
from .core import Ellipsoid, negative_weight_sequence, per_vol, weight_sequence
from .ehrhart import (
    TRIANGLE_HALF_SIXTH,
    TRIANGLE_THIRD_QUARTER,
    fit_quasi_polynomial,
    region_counts,
    verify_diff_identity,
)
from .intervals import AdaptiveScalar

HALF_SIXTH_CONSTANTS = (
    Fraction(1), Fraction(5, 8), Fraction(1), Fraction(5, 8), Fraction(2, 3), Fraction(7, 24),
)
THIRD_QUARTER_CONSTANTS = (
    Fraction(1), Fraction(5, 8), Fraction(1, 6), Fraction(5, 8), Fraction(1), Fraction(7, 24),
    Fraction(1, 2), Fraction(5, 8), Fraction(2, 3), Fraction(5, 8), Fraction(1, 2), Fraction(7, 24),
)

_LARGE_PRIME_DENOMINATORS = (3607, 4001, 4999)


def brute_capacities(ellipsoid: Ellipsoid, count: int) -> list[Fraction]:
    """Materialize-and-sort oracle for the first `count` capacities.

    Grows the lattice box until the candidate value is certainly below every
    excluded lattice point; independent of the heap-frontier generator.
    """
    a, b = ellipsoid.a, ellipsoid.b
    m = 1
    while True:
        if (m + 1) ** 2 >= count:
            values = sorted(
                i * a + j * b for i in range(m + 1) for j in range(m + 1)
            )[:count]
            if values[-1] < m * a and values[-1] < m * b:
                return values
        m *= 2


def sample_scalars(count: int, seed: int) -> list[tuple[str, object]]:
    """Deterministic mix of parameters in (3, 4): sqrt- and pi-based
    irrationals plus rationals with a large prime denominator."""
    rng = random.Random(seed)
    out: list[tuple[str, object]] = []
    while len(out) < count:
        kind = len(out) % 3
        if kind == 0:
            m = rng.randrange(2, 10**6)
            r = isqrt(m)
            if r * r == m:
                m += 1
                r = isqrt(m)
            out.append((f"3+frac(sqrt({m}))", AdaptiveScalar.sqrt(m) + (3 - r)))
        elif kind == 1:
            q = rng.choice(_LARGE_PRIME_DENOMINATORS)
            p = rng.randrange(3 * q + 1, 4 * q)
            out.append((f"{p}/{q}", Fraction(p, q)))
        else:
            j = rng.randrange(1, 120)
            x = AdaptiveScalar.pi() * Fraction(j, 10)
            out.append((f"3+frac({j}*pi/10)", x - x.floor() + 3))
    return out


def _check(name: str, hypothesis: str, ok: bool, witness: str) -> NamedCheck:
    return NamedCheck(name, hypothesis, "pass" if ok else "fail", witness)


def weight_identity_checks(max_value: int = 200) -> list[NamedCheck]:
    """sum(w) = p/q + 1 - 1/q and sum(w^2) = p/q for every p/q in lowest terms,
    plus the per/vol closed forms (k+l+1)/l and k/l."""
    bad_sum = bad_pv = None
    pairs = 0
    for q in range(1, max_value + 1):
        for p in range(q, max_value + 1):
            if gcd(p, q) != 1:
                continue
            pairs += 1
            x = Fraction(p, q)
            ws = weight_sequence(x)
            if sum(ws) != x + 1 - Fraction(1, q) or sum(w * w for w in ws) != x:
                bad_sum = bad_sum or (p, q)
            per, vol = per_vol(negative_weight_sequence(x))
            if per != Fraction(p + q + 1, q) or vol != x:
                bad_pv = bad_pv or (p, q)
    return [
        _check(
            "weight-sum-identities",
            f"all p/q >= 1 with p, q <= {max_value}",
            bad_sum is None,
            f"{pairs} expansions" if bad_sum is None else f"first failure {bad_sum}",
        ),
        _check(
            "per-vol-closed-forms",
            f"per = (k+l+1)/l and vol = k/l, k, l <= {max_value}",
            bad_pv is None,
            f"{pairs} expansions" if bad_pv is None else f"first failure {bad_pv}",
        ),
    ]


def capacity_oracle_checks(k_max: int = 300, seed: int = 0, pairs: int = 10) -> list[NamedCheck]:
    """Heap-frontier capacities against the materialize-and-sort oracle."""
    rng = random.Random(seed)
    ellipsoids = [Ellipsoid(Fraction(1), Fraction(1)), Ellipsoid(Fraction(1), Fraction(4, 3))]
    while len(ellipsoids) < pairs:
        num = rng.randrange(1, 13)
        den = rng.randrange(1, 20 - num)
        a = Fraction(num, den)
        if a < Fraction(1, 8) or a > 8:
            continue
        ellipsoids.append(Ellipsoid(Fraction(1), a))
    first_bad = None
    for e in ellipsoids:
        if capacity_prefix(e, k_max + 1) != brute_capacities(e, k_max + 1):
            first_bad = e
            break
    return [
        _check(
            "capacity-oracle",
            f"{len(ellipsoids)} ellipsoids, k <= {k_max}",
            first_bad is None,
            "heap prefix equals sorted sum-set" if first_bad is None else f"mismatch at {first_bad}",
        )
    ]


def ehrhart_table_checks() -> list[NamedCheck]:
    """Exact constant tables and linear terms of the two reference triangles."""
    qp1 = fit_quasi_polynomial(TRIANGLE_HALF_SIXTH)
    qp2 = fit_quasi_polynomial(TRIANGLE_THIRD_QUARTER)
    ok_const = qp1.constant == HALF_SIXTH_CONSTANTS and qp2.constant == THIRD_QUARTER_CONSTANTS
    ok_lead = qp1.leading == Fraction(1, 24) and qp2.leading == Fraction(1, 24)
    ok_linear = all(b == Fraction(1, 3) for b in qp2.linear) and all(
        qp1.linear[r] == (Fraction(5, 12) if r % 2 == 0 else Fraction(1, 3))
        for r in range(6)
    )
    return [
        _check("ehrhart-constant-tables", "periods 6 and 12", ok_const,
               "both constant tables exact"),
        _check("ehrhart-leading-linear", "leading 1/24; linear 5/12|1/3 and 1/3", ok_lead and ok_linear,
               "leading and linear terms exact"),
    ]


def diff_identity_checks(t_max: int = 1000) -> list[NamedCheck]:
    rep = verify_diff_identity(t_max)
    return [
        _check(
            "count-difference-identity",
            f"difference equals the boundary count (less 1 when t = 4 mod 12), t <= {t_max}",
            rep.ok,
            "identity exact" if rep.ok else f"violations {rep.violations[:3]}",
        )
    ]


def slice_checks(samples: int = 40, t_max: int = 300, seed: int = 0) -> list[NamedCheck]:
    """Wedge-count comparison on sampled parameters: upper <= lower always,
    and upper <= lower - 1 when t = 4 mod 12."""
    first_bad = None
    for label, a in sample_scalars(samples, seed):
        for t in range(1, t_max + 1):
            rc = region_counts(a, t)
            slack = 1 if t % 12 == 4 else 0
            if rc.upper > rc.lower - slack:
                first_bad = (label, t)
                break
        if first_bad:
            break
    return [
        _check(
            "slice-lemma",
            f"{samples} sampled parameters in (3, 4), t <= {t_max}",
            first_bad is None,
            "upper wedge never outcounts" if first_bad is None else f"failure at {first_bad}",
        )
    ]


def lemma_checks(k_max: int = 60, claims_k: int = 200, claims_l: int = 50) -> list[NamedCheck]:
    out = []
    bad = [
        (k, l)
        for k in range(2, k_max + 1)
        for l in range(2, k)
        if gcd(k, l) == 1 and (k, l) not in NICEBOUND_EXCLUDED and not verify_nicebound(k, l).passed
    ]
    out.append(
        _check("nicebound", f"coprime (k, l), l >= 2, k <= {k_max}, outside exclusions",
               not bad, "all strict" if not bad else f"failures {bad[:3]}")
    )
    bad = [
        (k, l)
        for (k, l) in [(5, 2), (5, 3), (5, 4)] + [(k, 1) for k in range(3, k_max + 1)]
        if not verify_exceptional(k, l).passed
    ]
    out.append(
        _check("exceptional-and-integral", f"(5,2),(5,3),(5,4) and l = 1, 3 <= k <= {k_max}",
               not bad, "all strict" if not bad else f"failures {bad[:3]}")
    )
    rep = verify_claim_steps(claims_k, claims_l)
    out.append(
        _check("discriminant-claims", f"k <= {claims_k}, l <= {claims_l}",
               rep.ok,
               f"{rep.claim_low_l.checked}+{rep.claim_wide_gap.checked}+{rep.quadratic_step.checked} inequalities")
    )
    leftovers_ok = all(verify_nicebound(k, l).passed for k, l in STEP5_LEFTOVERS)
    out.append(
        _check("finite-leftover-list", "the eleven directly-checked pairs",
               leftovers_ok, "all strict")
    )
    return out


def case43_checks(t_max: int = 300, step: Fraction = Fraction(1, 20)) -> list[NamedCheck]:
    from .analysis import grid_43

    rep = verify_43_case(t_max, grid_43(step))
    bad = [r.a for r in rep.rows if not r.ok]
    return [
        _check(
            "four-thirds-function",
            f"plateau 3/2 on [2,3], line (a+3)/4 on [3,4], t_max = {t_max}",
            rep.ok,
            f"{len(rep.rows)} grid points" if rep.ok else f"failures at a = {bad[:3]}",
        )
    ]


SUITES = {
    "weights": weight_identity_checks,
    "capacities": capacity_oracle_checks,
    "ehrhart-tables": ehrhart_table_checks,
    "diff-identity": diff_identity_checks,
    "slices": slice_checks,
    "lemmas": lemma_checks,
    "case-43": case43_checks,
}


def run_suites(
    names: list[str],
    t_max: int = 300,
    n_cap: int = 2000,
    seed: int = 0,
    samples: int = 40,
) -> list[NamedCheck]:
    checks: list[NamedCheck] = []
    for name in names:
        if name == "diff-identity":
            checks.extend(diff_identity_checks(max(t_max, 12)))
        elif name == "slices":
            checks.extend(slice_checks(samples=samples, t_max=t_max, seed=seed))
        elif name == "case-43":
            checks.extend(case43_checks(t_max=t_max))
        elif name == "capacities":
            checks.extend(capacity_oracle_checks(k_max=min(n_cap, 300), seed=seed))
        else:
            checks.extend(SUITES[name]())
    return checks
