"""Prime divisors of polynomials, quadratic fields, ternary forms and conics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from . import kernels
from .algebra import (
    ExcludedPrime,
    RatPoly,
    check_good_prime,
    factorize,
    is_prime,
    is_square_int,
    is_square_rational,
    primes_up_to,
    rational_sqrt,
    roots_mod_p,
    to_rational,
)


class NotParametric(ValueError):
    """b^2 - 4ac is not a rational square."""


class NotApplicable(ValueError):
    """The requested certificate does not apply to this input."""


# ---------------------------------------------------------------------------
# Quadratic fields


def squarefree_kernel(n: int) -> int:
    """The squarefree d (sign kept) with n/d a perfect square."""
    if n == 0:
        raise ValueError("squarefree kernel of 0 is undefined")
    d = -1 if n < 0 else 1
    for q, e in factorize(n).items():
        if e % 2:
            d *= q
    return d


def rational_kernel(q) -> int:
    """Squarefree kernel of a nonzero rational: Q(sqrt(q)) = Q(sqrt(kernel))."""
    q = to_rational(q)
    if q == 0:
        raise ValueError("squarefree kernel of 0 is undefined")
    return squarefree_kernel(q.numerator * q.denominator)


def same_quadratic_field(d1, d2) -> bool:
    d1, d2 = to_rational(d1), to_rational(d2)
    if d1 == 0 or d2 == 0:
        raise ValueError("zero does not define a quadratic field")
    return is_square_rational(d1 * d2)


def legendre_symbol(a: int, p: int) -> int:
    """(a/p) for an odd prime p, by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def is_qr_mod(a: int, m: int) -> bool:
    """Whether a is a square modulo the squarefree positive integer m."""
    m = abs(m)
    if m == 1:
        return True
    for p in factorize(m):
        if p != 2 and legendre_symbol(a, p) == -1:
            return False
    return True


# ---------------------------------------------------------------------------
# Prime divisors


@dataclass(frozen=True)
class PrimeDivisorReport:
    prime: int
    verdict: str  # "divisor" | "non_divisor" | "excluded"
    witness: int | None = None
    reason: str = ""

    def to_wire(self) -> dict:
        out: dict = {"prime": self.prime, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason:
            out["reason"] = self.reason
        return out


def is_prime_divisor(P: RatPoly, p: int) -> PrimeDivisorReport:
    """Decide whether p is a prime divisor of P over Z.

    For p not dividing the leading coefficient or scaling data of P, a
    rational t0 of negative p-adic valuation gives v_p(P(t0)) < 0, so P has a
    t0 with v_p(P(t0)) >= 1 exactly when it has a root modulo p.
    """
    if P.degree < 1:
        raise ValueError("prime divisors are defined for nonconstant polynomials")
    try:
        check_good_prime(P, p)
    except ExcludedPrime as exc:
        return PrimeDivisorReport(p, "excluded", reason=exc.reason)
    roots = roots_mod_p(P, p)
    if roots:
        return PrimeDivisorReport(p, "divisor", witness=roots[0])
    return PrimeDivisorReport(p, "non_divisor")


@dataclass
class Census:
    bound: int
    divisors: list[int] = field(default_factory=list)
    non_divisors: list[int] = field(default_factory=list)
    excluded: list[int] = field(default_factory=list)
    witnesses: dict[int, int] = field(default_factory=dict)


def prime_divisor_census(P: RatPoly, bound: int) -> Census:
    census = Census(bound)
    for p in primes_up_to(bound):
        rep = is_prime_divisor(P, p)
        if rep.verdict == "divisor":
            census.divisors.append(p)
            census.witnesses[p] = rep.witness
        elif rep.verdict == "non_divisor":
            census.non_divisors.append(p)
        else:
            census.excluded.append(p)
    return census


# ---------------------------------------------------------------------------
# Ternary forms


@dataclass(frozen=True)
class TernaryForm:
    """Diagonal form a X^2 + b Y^2 + c Z^2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a * self.b * self.c == 0:
            raise ValueError("ternary form coefficients must be nonzero")

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.a * x * x + self.b * y * y + self.c * z * z

    def to_wire(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}

    def __str__(self) -> str:
        return f"{self.a}X^2 + {self.b}Y^2 + {self.c}Z^2".replace("+ -", "- ")


@dataclass(frozen=True)
class LegendreReport:
    form: TernaryForm
    solvable: bool
    reduced: TernaryForm
    steps: tuple[str, ...]
    reason: str


def _reduce_form(f: TernaryForm) -> tuple[TernaryForm, list[str]]:
    """Squarefree, pairwise coprime form with the same solvability."""
    a, b, c = f.a, f.b, f.c
    steps = []
    g = math.gcd(math.gcd(a, b), c)
    if g > 1:
        a, b, c = a // g, b // g, c // g
        steps.append(f"divide by common factor {g}")
    while True:
        ka, kb, kc = squarefree_kernel(a), squarefree_kernel(b), squarefree_kernel(c)
        if (ka, kb, kc) != (a, b, c):
            steps.append(f"remove square factors: ({a},{b},{c}) -> ({ka},{kb},{kc})")
            a, b, c = ka, kb, kc
        for (u, v, w), name in (((a, b, c), "ab"), ((b, c, a), "bc"), ((c, a, b), "ca")):
            g = math.gcd(u, v)
            if g > 1:
                # g(u'X^2 + v'Y^2) = -wZ^2 forces g | Z
                u, v, w = u // g, v // g, w * g
                steps.append(f"gcd {g} of {name} coefficients moved onto the third variable")
                if name == "ab":
                    a, b, c = u, v, w
                elif name == "bc":
                    b, c, a = u, v, w
                else:
                    c, a, b = u, v, w
                break
        else:
            return TernaryForm(a, b, c), steps


def legendre_certificate(f: TernaryForm) -> LegendreReport:
    """Legendre's theorem after reduction to squarefree pairwise coprime form."""
    red, steps = _reduce_form(f)
    a, b, c = red.a, red.b, red.c
    if (a > 0) == (b > 0) == (c > 0):
        return LegendreReport(f, False, red, tuple(steps), "coefficients of one sign (definite form)")
    for val, mod, label in ((-b * c, a, "-bc mod |a|"), (-c * a, b, "-ca mod |b|"), (-a * b, c, "-ab mod |c|")):
        if not is_qr_mod(val, mod):
            bad = [p for p in factorize(abs(mod)) if p != 2 and legendre_symbol(val, p) == -1]
            return LegendreReport(f, False, red, tuple(steps), f"{label} is a non-residue modulo {bad[0]}")
    return LegendreReport(f, True, red, tuple(steps), "indefinite and all three residue conditions hold")


def legendre_solvable(f: TernaryForm) -> bool:
    return legendre_certificate(f).solvable


def holzer_bound(f: TernaryForm) -> int:
    """ceil(sqrt(max |ab|, |bc|, |ca|)); small solutions exist within it when any exist."""
    m = max(abs(f.a * f.b), abs(f.b * f.c), abs(f.c * f.a))
    r = math.isqrt(m)
    return r if r * r == m else r + 1


def brute_force_ternary(f: TernaryForm, B: int) -> tuple[int, int, int] | None:
    if B < 1:
        raise ValueError("search bound must be positive")
    return kernels.ternary_search(f.a, f.b, f.c, B)


# ---------------------------------------------------------------------------
# Conics d Y^2 = a T^2 + b T + c


@dataclass(frozen=True)
class ConicParametrization:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    base: tuple[Fraction, Fraction]

    def on_curve(self, t, y) -> bool:
        return self.d * y * y == self.a * t * t + self.b * t + self.c

    def __call__(self, lam) -> tuple[Fraction, Fraction] | None:
        """Second intersection with the line of slope ``lam`` through the base
        point, or None when that line meets the conic only at infinity."""
        lam = to_rational(lam)
        t1, y1 = self.base
        den = self.d * lam * lam - self.a
        if den == 0:
            return None
        s = (2 * self.a * t1 + self.b - 2 * self.d * y1 * lam) / den
        return t1 + s, y1 + lam * s


def conic_parametrize(a, b, c, d, base_point) -> ConicParametrization:
    a, b, c, d = map(to_rational, (a, b, c, d))
    if d == 0:
        raise ValueError("d must be nonzero")
    if b * b - 4 * a * c == 0:
        raise ValueError("degenerate conic: b^2 - 4ac = 0")
    if a == 0 and b == 0:
        raise ValueError("degenerate conic: right-hand side is constant")
    base = (to_rational(base_point[0]), to_rational(base_point[1]))
    par = ConicParametrization(a, b, c, d, base)
    if not par.on_curve(*base):
        raise ValueError(f"base point {base} is not on {d}Y^2 = {a}T^2 + {b}T + {c}")
    return par


def _slopes() -> Iterator[Fraction]:
    """Nonzero rationals ordered by height: 1, -1, 2, -2, 1/2, -1/2, 3, ..."""
    h = 1
    while True:
        for num, den in sorted({(h, q) for q in range(1, h + 1)} | {(q, h) for q in range(1, h + 1)}):
            if math.gcd(num, den) == 1:
                yield Fraction(num, den)
                yield -Fraction(num, den)
        h += 1


@dataclass(frozen=True)
class SpecializationPoint:
    t0: Fraction
    value: Fraction
    y: Fraction
    slope: Fraction | None


def prop31_specialization_point(a, b, c, d: int, max_tries: int = 1000) -> SpecializationPoint:
    """t0 with a t0^2 + b t0 + c = d y^2, y != 0, when b^2 - 4ac is a nonzero square."""
    a, b, c = map(to_rational, (a, b, c))
    d = int(d)
    if d == 0:
        raise ValueError("d must be nonzero")
    disc = b * b - 4 * a * c
    if disc == 0:
        raise ValueError("b^2 - 4ac must be nonzero")
    if not is_square_rational(disc):
        raise NotParametric(f"b^2 - 4ac = {disc} is not a square in Q")
    if a == 0:
        t0 = (d - c) / b
        return SpecializationPoint(t0, to_rational(d), Fraction(1), None)
    t1 = (-b + rational_sqrt(disc)) / (2 * a)
    par = conic_parametrize(a, b, c, d, (t1, 0))
    for i, lam in enumerate(_slopes()):
        if i >= max_tries:
            break
        pt = par(lam)
        if pt is None or pt[1] == 0:
            continue
        t0, y = pt
        value = a * t0 * t0 + b * t0 + c
        return SpecializationPoint(t0, value, y, lam)
    raise RuntimeError("no point with y != 0 found on the conic")


@dataclass(frozen=True)
class ObstructionPrime:
    prime: int
    discriminant: int  # integral discriminant after clearing denominators
    symbol: int

    def to_wire(self) -> dict:
        return {"prime": self.prime, "discriminant": self.discriminant, "legendre": self.symbol}


def prop31_obstruction_primes(a, b, c, count: int) -> list[ObstructionPrime]:
    """Odd primes p, prime to 2 a disc, with (disc/p) = -1.

    For such p, Q(sqrt(p)) is not Q(sqrt(a t0^2 + b t0 + c)) for any t0:
    otherwise disc would be a square modulo p.
    """
    a, b, c = map(to_rational, (a, b, c))
    disc = b * b - 4 * a * c
    if disc == 0 or is_square_rational(disc):
        raise NotApplicable(f"b^2 - 4ac = {disc} is a square; the extension is parametric")
    L = math.lcm(a.denominator, b.denominator, c.denominator)
    A, B, C = (int(x * L * L) for x in (a, b, c))
    D = B * B - 4 * A * C
    out = []
    p = 2
    while len(out) < count:
        p += 1
        if not is_prime(p) or (2 * A * D) % p == 0:
            continue
        s = legendre_symbol(D, p)
        if s == -1:
            out.append(ObstructionPrime(p, D, s))
    return out


# ---------------------------------------------------------------------------
# Biquadratic obstruction pairs


def prop32_forms(a: int, b: int, d1: int, d2: int) -> list[TernaryForm]:
    """The six forms whose solvability a coincidence of quadratic subfields requires."""
    return [
        TernaryForm(a * d1, -b * d2, -1),
        TernaryForm(a, -b * d2, -d1),
        TernaryForm(a * d2, -b * d1, -1),
        TernaryForm(a, -b * d1, -d2),
        TernaryForm(a * d2, -b, -d1),
        TernaryForm(a * d1, -b, -d2),
    ]


@dataclass(frozen=True)
class CertifiedPair:
    d1: int
    d2: int
    forms: tuple[TernaryForm, ...]
    legendre: tuple[LegendreReport, ...]
    brute_force: tuple[tuple[int, int, int] | None, ...]
    bounds: tuple[int, ...]

    @property
    def certified(self) -> bool:
        return all(not r.solvable for r in self.legendre) and all(s is None for s in self.brute_force)

    def to_wire(self) -> dict:
        return {
            "d1": self.d1,
            "d2": self.d2,
            "forms": [
                {**f.to_wire(), "legendre": r.reason, "holzer_bound": B, "brute_force": s}
                for f, r, B, s in zip(self.forms, self.legendre, self.bounds, self.brute_force)
            ],
        }


def certify_pair(a: int, b: int, d1: int, d2: int) -> CertifiedPair:
    if d1 == d2:
        raise ValueError("d1 and d2 must be distinct")
    for d in (d1, d2):
        if d == 0 or squarefree_kernel(d) != d:
            raise ValueError(f"{d} is not a nonzero squarefree integer")
    forms = prop32_forms(a, b, d1, d2)
    reports = tuple(legendre_certificate(f) for f in forms)
    bounds = tuple(holzer_bound(f) for f in forms)
    brute = tuple(brute_force_ternary(f, B) for f, B in zip(forms, bounds))
    return CertifiedPair(d1, d2, tuple(forms), reports, brute, bounds)


def _squarefree_candidates(sign: int) -> Iterator[int]:
    n = 2
    while True:
        if squarefree_kernel(n) == n:
            yield sign * n
        n += 1


def prop32_nonspecializable_pairs(a: int, b: int, count: int, prime_bound: int = 500) -> list[CertifiedPair]:
    """Pairs (d1, d2) of distinct squarefree integers (neither 1) for which
    Q(sqrt d1, sqrt d2) is not a specialization of Q(T)(sqrt(aT), sqrt(bT - b)).

    Only pairs whose six forms are refused both by Legendre's criterion and by
    exhaustive search up to the Holzer bound are returned.
    """
    for v in (a, b):
        if v == 0 or squarefree_kernel(v) != v:
            raise ValueError(f"{v} is not a nonzero squarefree integer")
    out: list[CertifiedPair] = []

    def accept(d1: int, d2: int) -> bool:
        if d1 == d2 or 1 in (d1, d2) or is_square_int(d1 * d2):
            return False
        pair = certify_pair(a, b, d1, d2)
        if pair.certified:
            out.append(pair)
        return len(out) >= count

    if a < 0 < b:
        # every one of the six forms is negative definite for d1, d2 > 0
        d2 = 2
        for d1 in _squarefree_candidates(1):
            if d1 > prime_bound or accept(d1, d2):
                break
        return out

    if a > 0 and b > 0:
        d2 = next(d for d in _squarefree_candidates(1)
                  if not is_square_int(a * d) and not is_square_int(a * b * d))
        for p in primes_up_to(prime_bound):
            if (2 * a * b * d2) % p == 0:
                continue
            if legendre_symbol(a * d2, p) == -1 and legendre_symbol(a * b * d2, p) == -1:
                if accept(-p, d2):
                    break
        return out

    # remaining sign patterns: search d1 = +-p against small squarefree d2
    for d2 in [d * s for d in (2, 3, 5, 6, 7) for s in (1, -1)]:
        for p in primes_up_to(prime_bound):
            for d1 in (-p, p):
                if accept(d1, d2):
                    return out
    return out
