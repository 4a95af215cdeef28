"""Exact closed-form census of group-stable code classes.

Everything in this module is plain unbounded-integer arithmetic: no field
is ever constructed.  The counting works on the set S of elements of degree
exactly r over F_q inside F_{q^r}.  Two partitions of S matter:

* affine sets, orbits of z -> a*z + b (a != 0), each of size q*(q-1);
* projective linear sets, orbits of z -> (a*z+b)/(c*z+d), size q^3 - q.

The Frobenius group G = <sigma>, sigma(z) = z^q, of order r acts on both
partitions.  ``n_irr`` and ``n_ext`` are the number of G-orbits, obtained
by averaging fixed-set counts over the subgroups <sigma^r1>, r1 | r.  They
upper-bound the number of inequivalent irreducible (length q) and extended
irreducible (length q+1) Goppa codes of degree r over F_p.

Which fixed-set formula applies for a divisor r1 depends on the order
rbar = r/r1 of the multiplier that a stable set forces:

* rbar = 1: everything is stable.
* rbar = p: translation multiplier z -> z + 1 (order p).
* rbar | q-1, p does not divide rbar: scaling multiplier of order rbar.
* rbar | q+1, p does not divide rbar: a genuinely fractional multiplier
  whose lift has an irreducible quadratic minimal polynomial (projective
  order rbar; the lift's matrix order may be larger).  For rbar = 2 with
  q odd this coexists with the scaling case: the projective line has two
  involution classes, and both contribute stable sets.
* anything else: no affine or projective map has that order, so nothing
  is stable.

The root counts feeding those formulas (``t_count``, ``u_count``,
``x_count``) count roots lying in S of the polynomial families

    x^(q^r1) - zeta*x,   x^(q^(r/p)) - x - 1,   c*x^(q^r1+1) + d*x^(q^r1) - a*x - b

respectively, via Moebius inversion over subfield degrees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import CaseViolation, DegenerateDegree, IntegralityViolation, NotPrime

__all__ = [
    "Params",
    "FixCase",
    "DivisorCase",
    "CensusReport",
    "factorize",
    "is_prime",
    "mobius",
    "euler_phi",
    "divisors",
    "count_S",
    "t_count",
    "u_count",
    "x_count",
    "classify_divisor",
    "fix_affine",
    "fix_projective",
    "fix_projective_split_part",
    "fix_projective_nonsplit_part",
    "n_irr",
    "n_ext",
    "census_report",
]


# ---------------------------------------------------------------------------
# Elementary number theory (trial division scale).
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a sorted tuple of (prime, exponent)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == ((n, 1),)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    out = n
    for prime, _ in factorize(n):
        out = out // prime * (prime - 1)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    out = [1]
    for prime, e in factorize(n):
        out = [d * prime**k for d in out for k in range(e + 1)]
    return sorted(out)


def _char_of(q: int) -> tuple[int, int]:
    """Return (p, t) with q = p^t, or raise if q is not a prime power."""
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac[0]


def _exact_div(num: int, den: int, what: str) -> int:
    quot, rem = divmod(num, den)
    if rem:
        raise IntegralityViolation(f"{what}: {num} not divisible by {den}")
    return quot


# ---------------------------------------------------------------------------
# Parameters and divisor classification.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Params:
    """Census parameters: characteristic p, q = p^t, degree r >= 3."""

    p: int
    t: int
    r: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrime(f"p = {self.p} is not prime")
        if self.t < 1:
            raise ValueError(f"t = {self.t} must be >= 1")
        if self.r < 3:
            raise DegenerateDegree(f"r = {self.r} must be >= 3")

    @property
    def q(self) -> int:
        return self.p**self.t


class FixCase(enum.Enum):
    FULL = "full"
    UNIPOTENT = "unipotent"
    SPLIT_TORUS = "split_torus"
    NONSPLIT_TORUS = "nonsplit_torus"
    EVEN_NONSPLIT = "even_nonsplit"
    NONE = "none"


@dataclass(frozen=True)
class DivisorCase:
    """A divisor r1 of r with rbar = r/r1 and its fixed-set case."""

    r1: int
    rbar: int
    case: FixCase
    reason: str


def classify_divisor(params: Params, r1: int) -> DivisorCase:
    """Decide which fixed-set rule applies to the subgroup <sigma^r1>.

    Resolution order matters only for rbar = 2 with q odd, which divides
    both q-1 and q+1 and is deliberately routed to the split-torus rule.
    """
    r, p, q = params.r, params.p, params.q
    if r % r1:
        raise CaseViolation(f"r1 = {r1} does not divide r = {r}")
    rbar = r // r1
    if rbar == 1:
        return DivisorCase(r1, rbar, FixCase.FULL, "identity subgroup fixes every set")
    if rbar == p:
        return DivisorCase(r1, rbar, FixCase.UNIPOTENT, "translation multiplier of order p")
    if rbar % p == 0:
        return DivisorCase(
            r1, rbar, FixCase.NONE,
            f"no affine or projective map has order {rbar} (p*{rbar // p})",
        )
    if (q - 1) % rbar == 0:
        return DivisorCase(r1, rbar, FixCase.SPLIT_TORUS, f"scaling multiplier of order {rbar}")
    if (q + 1) % rbar == 0 and rbar % 2 == 1:
        return DivisorCase(
            r1, rbar, FixCase.NONSPLIT_TORUS, f"fractional multiplier of order {rbar}"
        )
    if (q + 1) % rbar == 0:
        return DivisorCase(
            r1, rbar, FixCase.EVEN_NONSPLIT,
            f"even order {rbar} > 2 forces a square root of the identity map",
        )
    return DivisorCase(
        r1, rbar, FixCase.NONE,
        f"{rbar} divides neither q-1, q+1 nor equals p: no map of this order",
    )


# ---------------------------------------------------------------------------
# Root counts of the three polynomial families, restricted to S.
# ---------------------------------------------------------------------------

def count_S(q: int, r: int) -> int:
    """Number of elements of F_{q^r} of degree exactly r over F_q."""
    if r < 3:
        raise DegenerateDegree(f"r = {r} must be >= 3")
    return sum(mobius(d) * q ** (r // d) for d in divisors(r))


def t_count(q: int, r: int, rbar: int) -> int:
    """Roots in S of x^(q^r1) = zeta*x for one scaling zeta of order rbar.

    Requires rbar | q-1, rbar > 1 coprime to the characteristic, and
    rbar | r (otherwise there are no degree-r factors and the count is 0).
    """
    p, _ = _char_of(q)
    if rbar <= 1 or (q - 1) % rbar or gcd(p, rbar) != 1:
        raise CaseViolation(f"t_count needs rbar | q-1, rbar > 1, p coprime (got rbar={rbar})")
    if r % rbar:
        return 0
    u = r // rbar
    return sum(
        mobius(d) * (q ** (u // d) - 1) for d in divisors(u) if gcd(d, rbar) == 1
    )


def u_count(q: int, r: int) -> int:
    """Roots in S of x^(q^(r/p)) = x + 1; zero unless p divides r."""
    p, _ = _char_of(q)
    if r % p:
        return 0
    u = r // p
    return sum(mobius(d) * q ** (u // d) for d in divisors(u) if d % p)


def x_count(q: int, r: int, rbar: int) -> int:
    """Roots in S of the fractional family for one multiplier of order rbar.

    The multiplier is a projective map whose lift has an irreducible
    quadratic minimal polynomial; its projective order rbar divides q+1.
    The count is independent of which of the phi(rbar) eigen-ratios is
    chosen.

    Counted in the torus coordinate w = (x - omega)/(x - omega^q), where
    omega spans the multiplier's eigen-directions in F_{q^2}: there the
    Frobenius acts by w -> w^(-q) and the multiplier by w -> lambda * w,
    so the fixed-point condition collapses to a power equation inside a
    cyclic group.  Points of P^1(F_{q^m}) map to the cyclic group of order
    q^m - 1 for even m and to the norm-one circle of order q^m + 1 for odd
    m, and the roots of exact degree r follow by Moebius inversion over
    the levels m | r.
    """
    p, _ = _char_of(q)
    if rbar <= 1 or (q + 1) % rbar or gcd(p, rbar) != 1 or r % rbar:
        raise CaseViolation(f"x_count needs rbar | q+1, rbar > 1 coprime to p, rbar | r (got rbar={rbar})")
    r1 = r // rbar
    exp = q**r1 - 1 if r1 % 2 == 0 else q**r1 + 1

    def level(m: int) -> int:
        n = q**m - 1 if m % 2 == 0 else q**m + 1
        g = gcd(exp, n)
        return g if (n // g) % rbar == 0 else 0

    return sum(mobius(r // m) * level(m) for m in divisors(r))


# ---------------------------------------------------------------------------
# Fixed-set counts per divisor, and the Burnside averages.
# ---------------------------------------------------------------------------

def fix_affine(params: Params, r1: int) -> int:
    """Number of affine sets stable under <sigma^r1>."""
    q, r = params.q, params.r
    dc = classify_divisor(params, r1)
    if dc.case is FixCase.FULL:
        return _exact_div(count_S(q, r), q * q - q, "affine sets")
    if dc.case is FixCase.UNIPOTENT:
        return _exact_div(u_count(q, r), q, "translation-stable affine sets")
    if dc.case is FixCase.SPLIT_TORUS:
        total = euler_phi(dc.rbar) * t_count(q, r, dc.rbar)
        return _exact_div(total, q - 1, "scaling-stable affine sets")
    return 0


def fix_projective_split_part(params: Params, r1: int) -> int:
    """Stable projective sets whose multiplier has eigenvalues in F_q.

    Each such set contains exactly two stable affine sets, so this is half
    of ``fix_affine``.  Zero unless rbar divides q-1.
    """
    dc = classify_divisor(params, r1)
    if dc.case is not FixCase.SPLIT_TORUS:
        return 0
    return _exact_div(fix_affine(params, r1), 2, "half of scaling-stable affine sets")


def fix_projective_nonsplit_part(params: Params, r1: int) -> int:
    """Stable projective sets whose multiplier lives in the order-(q+1) torus.

    Fires whenever rbar divides q+1 and is coprime to p.  For rbar = 2 with
    q odd this is an extra conjugacy class on top of the split involution:
    both parts contribute.  Each representative's root family meets a stable
    set in q+1 points, except that the rbar = 2 class meets it twice per
    affine set; summed over eigen-ratio pairs both cases give the same
    phi(rbar)/(2(q+1)) normalization.
    """
    q, r = params.q, params.r
    dc = classify_divisor(params, r1)
    rbar = dc.rbar
    if rbar <= 1 or (q + 1) % rbar or rbar % params.p == 0:
        return 0
    total = euler_phi(rbar) * x_count(q, r, rbar)
    return _exact_div(total, 2 * (q + 1), "fraction-stable projective sets")


def fix_projective(params: Params, r1: int) -> int:
    """Number of projective linear sets stable under <sigma^r1>."""
    q, r = params.q, params.r
    dc = classify_divisor(params, r1)
    if dc.case is FixCase.FULL:
        return _exact_div(count_S(q, r), q**3 - q, "projective sets")
    if dc.case is FixCase.UNIPOTENT:
        return _exact_div(u_count(q, r), q, "translation-stable projective sets")
    if dc.case is FixCase.NONE:
        return 0
    return fix_projective_split_part(params, r1) + fix_projective_nonsplit_part(params, r1)


@dataclass(frozen=True)
class CensusReport:
    """Per-divisor fixed counts plus the two Burnside totals."""

    params: Params
    S_size: int
    affine_sets: int
    projective_sets: int
    rows: tuple[tuple[DivisorCase, int, int, int], ...]
    N: int
    Ne: int

    def to_json_dict(self) -> dict:
        p = self.params
        return {
            "params": {"p": str(p.p), "t": str(p.t), "r": str(p.r), "q": str(p.q)},
            "S_size": str(self.S_size),
            "affine_sets": str(self.affine_sets),
            "projective_sets": str(self.projective_sets),
            "rows": [
                {
                    "r1": str(dc.r1),
                    "rbar": str(dc.rbar),
                    "case": dc.case.value,
                    "reason": dc.reason,
                    "phi_weight": str(w),
                    "fix_affine": str(fa),
                    "fix_projective": str(fp),
                }
                for dc, fa, fp, w in self.rows
            ],
            "N": str(self.N),
            "Ne": str(self.Ne),
        }

    def csv_row(self) -> str:
        p = self.params
        return f"{p.p},{p.t},{p.r},{p.q},{self.N},{self.Ne}"


def census_report(params: Params) -> CensusReport:
    """Evaluate every divisor of r and aggregate the two Burnside counts.

    Averaging over the group runs over all r powers of sigma; the power
    sigma^k generates <sigma^gcd(k, r)>, so each divisor r1 enters with
    multiplicity phi(r/r1).
    """
    q, r = params.q, params.r
    s_size = count_S(q, r)
    rows = []
    total_a = 0
    total_p = 0
    for r1 in divisors(r):
        dc = classify_divisor(params, r1)
        fa = fix_affine(params, r1)
        fp = fix_projective(params, r1)
        weight = euler_phi(dc.rbar)
        rows.append((dc, fa, fp, weight))
        total_a += weight * fa
        total_p += weight * fp
    n = _exact_div(total_a, r, "Burnside sum over affine sets")
    ne = _exact_div(total_p, r, "Burnside sum over projective sets")
    return CensusReport(
        params=params,
        S_size=s_size,
        affine_sets=_exact_div(s_size, q * q - q, "affine partition"),
        projective_sets=_exact_div(s_size, q**3 - q, "projective partition"),
        rows=tuple(rows),
        N=n,
        Ne=ne,
    )


def n_irr(params: Params) -> int:
    """Upper bound on inequivalent irreducible Goppa codes of length q."""
    total = sum(
        euler_phi(params.r // r1) * fix_affine(params, r1) for r1 in divisors(params.r)
    )
    return _exact_div(total, params.r, "Burnside sum over affine sets")


def n_ext(params: Params) -> int:
    """Upper bound on inequivalent extended codes of length q+1."""
    total = sum(
        euler_phi(params.r // r1) * fix_projective(params, r1) for r1 in divisors(params.r)
    )
    return _exact_div(total, params.r, "Burnside sum over projective sets")
