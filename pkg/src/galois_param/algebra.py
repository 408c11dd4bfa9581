"""Exact arithmetic over Q and over prime fields.

Rationals are :class:`fractions.Fraction`.  :class:`RatPoly` is a dense,
immutable univariate polynomial with rational coefficients stored lowest
degree first; :class:`PrimeFieldPoly` is its counterpart over GF(p).

Resultants use the subresultant pseudo-remainder sequence and work for any
coefficient domain that supports ``+ - *`` and exact division, so the same
code computes discriminants over Q and over Q[T].
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Sequence

from . import kernels

Rational = Fraction


class ExcludedPrime(ValueError):
    """Raised when a prime divides the scaling data of a polynomial."""

    def __init__(self, p: int, reason: str):
        super().__init__(f"prime {p} excluded: {reason}")
        self.p = p
        self.reason = reason


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coefficients")
    return Fraction(x)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_square_rational(q) -> bool:
    """True iff ``q`` is the square of a rational number (0 included)."""
    q = to_rational(q)
    return is_square_int(q.numerator) and is_square_int(q.denominator)


def rational_sqrt(q: Fraction) -> Fraction:
    if not is_square_rational(q):
        raise ValueError(f"{q} is not a rational square")
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
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


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a nonzero integer (sign dropped)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n).items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# Polynomials over Q


def _strip(coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RatPoly:
    """Immutable dense polynomial over Q, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "__dict__")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[Fraction, ...] = _strip(to_rational(c) for c in coeffs)

    @classmethod
    def constant(cls, c) -> RatPoly:
        return cls([c])

    @classmethod
    def x(cls) -> RatPoly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> RatPoly:
        out = cls([1])
        for r in roots:
            out = out * cls([-to_rational(r), 1])
        return out

    @classmethod
    def from_wire(cls, data: Sequence[str]) -> RatPoly:
        """Parse ``["-2","0","1"]`` (lowest degree first) into T^2 - 2."""
        if not isinstance(data, (list, tuple)):
            raise ValueError("polynomial wire format is a JSON array of strings")
        return cls(to_rational(str(c)) for c in data)

    def to_wire(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs] or ["0"]

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = format_rational(abs(c)) + (f"*{mono}" if mono else "")
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> RatPoly:
        if isinstance(other, RatPoly):
            return other
        return RatPoly([other])

    def __add__(self, other) -> RatPoly:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> RatPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RatPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> RatPoly:
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RatPoly:
        out = RatPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other) -> tuple[RatPoly, RatPoly]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return RatPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / other.lc
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quot), RatPoly(rem[:dq])

    def __floordiv__(self, other) -> RatPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> RatPoly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> RatPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def scale(self, c) -> RatPoly:
        c = to_rational(c)
        return RatPoly(c * a for a in self.coeffs)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a rational or another RatPoly."""
        if isinstance(x, RatPoly):
            acc = RatPoly()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> RatPoly:
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> RatPoly:
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def reverse(self) -> RatPoly:
        """T^deg * P(1/T)."""
        return RatPoly(reversed(self.coeffs))

    def shift(self, k: int) -> RatPoly:
        """Multiply by T^k."""
        return RatPoly([0] * k + list(self.coeffs))

    # -- normal forms ----------------------------------------------------

    @cached_property
    def primitive_data(self) -> tuple[Fraction, tuple[int, ...]]:
        """``(c, f)`` with ``self == c * f``, ``f`` integral, content 1, lc > 0."""
        if self.is_zero():
            raise ValueError("zero polynomial has no primitive form")
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), tuple(i // g for i in ints)

    def primitive(self) -> RatPoly:
        return RatPoly(self.primitive_data[1])

    def integer_coeffs(self) -> tuple[int, ...]:
        return self.primitive_data[1]


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd over Q (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_squarefree(P: RatPoly) -> bool:
    if P.is_zero():
        raise ValueError("zero polynomial")
    return poly_gcd(P, P.derivative()).degree == 0


def squarefree_part(P: RatPoly) -> RatPoly:
    """P / gcd(P, P') in primitive integer form."""
    if P.is_zero():
        raise ValueError("squarefree_part of the zero polynomial")
    if P.is_constant():
        return RatPoly([1])
    g = poly_gcd(P, P.derivative())
    return P.exact_div(g).primitive()


# ---------------------------------------------------------------------------
# Resultants over an integral domain


def _exquo(a, b):
    if isinstance(a, RatPoly) or isinstance(b, RatPoly):
        return RatPoly._coerce(a).exact_div(RatPoly._coerce(b))
    return a / b


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, RatPoly) else c == 0


def _trim(coeffs: list) -> list:
    while coeffs and _is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def _prem(A: list, B: list) -> list:
    """Pseudo-remainder of A by B: lc(B)^(degA-degB+1) * A mod B."""
    R = list(A)
    dB = len(B) - 1
    lcB = B[-1]
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= dB:
        lr = R[-1]
        shift = len(R) - 1 - dB
        R = [c * lcB for c in R]
        for j, b in enumerate(B):
            R[j + shift] = R[j + shift] - lr * b
        R.pop()
        R = _trim(R)
        e -= 1
    if e > 0:
        scale = lcB**e
        R = [c * scale for c in R]
    return R


def resultant(A: Sequence, B: Sequence):
    """Resultant of two polynomials given as coefficient lists (low degree first).

    Coefficients may be Fractions or RatPolys.  Subresultant PRS without
    content removal.
    """
    A = _trim(list(A))
    B = _trim(list(B))
    if not A or not B:
        return 0
    one = RatPoly([1]) if isinstance(A[-1], RatPoly) or isinstance(B[-1], RatPoly) else Fraction(1)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 == 1 and (len(B) - 1) % 2 == 1:
            s = -1
    if len(B) == 1:
        return one * s * B[0] ** (len(A) - 1)
    g = one
    h = one
    while len(B) > 1:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = _prem(A, B)
        A = B
        if not R:
            return one * 0
        div = g * h**delta
        B = [_exquo(c, div) for c in R]
        g = A[-1]
        # h <- g^delta / h^(delta-1)
        if delta == 1:
            h = g
        elif delta > 1:
            h = _exquo(g**delta, h ** (delta - 1))
    dA = len(A) - 1
    # h <- lc(B)^dA / h^(dA-1)
    if dA == 0:
        res = one
    elif dA == 1:
        res = B[0]
    else:
        res = _exquo(B[0] ** dA, h ** (dA - 1))
    return res * s


def discriminant(P):
    """Discriminant of a univariate polynomial.

    ``P`` is a :class:`RatPoly` or a coefficient list whose entries are
    rationals or RatPolys (a polynomial in Y over Q[T]).
    """
    coeffs = list(P.coeffs) if isinstance(P, RatPoly) else _trim(list(P))
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    deriv = [i * c for i, c in enumerate(coeffs) if i]
    if n == 1:
        return RatPoly([1]) if isinstance(coeffs[-1], RatPoly) else Fraction(1)
    res = resultant(coeffs, deriv)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return _exquo(res * sign, coeffs[-1])


def critical_values_poly(M: RatPoly) -> RatPoly:
    """Monic polynomial in T whose roots are the critical values M(beta), M'(beta)=0."""
    if M.degree < 2:
        raise ValueError("critical values need deg M >= 2")
    Mp = [RatPoly([c]) for c in M.derivative().coeffs]
    T = RatPoly.x()
    shifted = [(-RatPoly([c])) for c in M.coeffs]
    shifted[0] = shifted[0] + T
    res = resultant(Mp, shifted)
    return RatPoly._coerce(res).monic()


def reciprocal_minpoly(m: RatPoly) -> RatPoly:
    """Primitive form of T^deg m(1/T); the polynomial T maps to the constant 1."""
    if m.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    rev = m.reverse()
    if rev.is_constant():
        return RatPoly([1])
    return rev.primitive()


def sturm_real_root_count(P: RatPoly) -> int:
    """Number of distinct real roots, by a Sturm sequence over Q."""
    if P.is_zero():
        raise ValueError("zero polynomial")
    if P.is_constant():
        return 0
    seq = [P, P.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)

    def changes(signs: list[int]) -> int:
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def sign(x) -> int:
        return (x > 0) - (x < 0)

    at_pos = [sign(q.lc) for q in seq]
    at_neg = [sign(q.lc) * (-1 if q.degree % 2 else 1) for q in seq]
    return changes(at_neg) - changes(at_pos)


def rational_roots(P: RatPoly) -> list[Fraction]:
    """All rational roots (distinct), by the rational root test on the primitive form."""
    if P.is_zero():
        raise ValueError("zero polynomial")
    f = list(P.integer_coeffs())
    roots: list[Fraction] = []
    while f and f[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        f.pop(0)
    if len(f) <= 1:
        return roots
    poly = RatPoly(f)
    for q in divisors(f[-1]):
        for pn in divisors(f[0]):
            for cand in (Fraction(pn, q), Fraction(-pn, q)):
                if cand not in roots and poly(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


# ---------------------------------------------------------------------------
# Polynomials over GF(p)


class PrimeFieldPoly:
    """Immutable polynomial over GF(p), coefficients lowest degree first."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Iterable[int], p: int):
        self.p = p
        self.coeffs: tuple[int, ...] = _strip([c % p for c in coeffs])

    @classmethod
    def reduce(cls, P: RatPoly, p: int) -> PrimeFieldPoly:
        """Reduce the primitive integer form of P modulo p (checks exclusion)."""
        check_good_prime(P, p)
        return cls(P.integer_coeffs(), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeFieldPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"PrimeFieldPoly({list(self.coeffs)}, p={self.p})"

    def _new(self, coeffs) -> PrimeFieldPoly:
        return PrimeFieldPoly(coeffs, self.p)

    def __add__(self, other: PrimeFieldPoly) -> PrimeFieldPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return self._new(x + y for x, y in zip(a, b))

    def __neg__(self) -> PrimeFieldPoly:
        return self._new(-c for c in self.coeffs)

    def __sub__(self, other: PrimeFieldPoly) -> PrimeFieldPoly:
        return self + (-other)

    def __mul__(self, other: PrimeFieldPoly) -> PrimeFieldPoly:
        if not self.coeffs or not other.coeffs:
            return self._new(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self._new(out)

    def __divmod__(self, other: PrimeFieldPoly) -> tuple[PrimeFieldPoly, PrimeFieldPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return self._new(()), self
        inv = pow(other.coeffs[-1], -1, p)
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv % p
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % p
        return self._new(quot), self._new(rem[:dq])

    def __mod__(self, other: PrimeFieldPoly) -> PrimeFieldPoly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: PrimeFieldPoly) -> PrimeFieldPoly:
        return divmod(self, other)[0]

    def monic(self) -> PrimeFieldPoly:
        if self.is_zero():
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return self._new(c * inv for c in self.coeffs)

    def derivative(self) -> PrimeFieldPoly:
        return self._new(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: PrimeFieldPoly) -> PrimeFieldPoly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, mod: PrimeFieldPoly) -> PrimeFieldPoly:
        out = self._new([1]) % mod
        base = self % mod
        while e:
            if e & 1:
                out = (out * base) % mod
            base = (base * base) % mod
            e >>= 1
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc


def check_good_prime(P: RatPoly, p: int) -> None:
    """Raise ExcludedPrime when p divides the leading coefficient of the
    primitive form or the rational scaling factor between P and that form."""
    if P.is_zero():
        raise ValueError("zero polynomial")
    c, f = P.primitive_data
    if f[-1] % p == 0:
        raise ExcludedPrime(p, "divides the leading coefficient")
    if c.numerator % p == 0 or c.denominator % p == 0:
        raise ExcludedPrime(p, "divides a coefficient denominator or the content")


_BRUTE_FORCE_LIMIT = 1 << 20


def roots_mod_p(P: RatPoly, p: int) -> list[int]:
    """All residues x in [0, p) with P(x) = 0 mod p."""
    check_good_prime(P, p)
    f = P.integer_coeffs()
    if p <= _BRUTE_FORCE_LIMIT:
        return kernels.roots_mod_p([c % p for c in f], p)
    return _roots_by_splitting(PrimeFieldPoly(f, p))


def _roots_by_splitting(f: PrimeFieldPoly) -> list[int]:
    """Roots via gcd(x^p - x, f) and Cantor-Zassenhaus splitting (large p)."""
    p = f.p
    x = f._new([0, 1])
    g = f.gcd(x.powmod(p, f) - x)
    roots: list[int] = []
    stack = [g]
    shift = 1
    while stack:
        h = stack.pop()
        if h.degree <= 0:
            continue
        if h.degree == 1:
            h = h.monic()
            roots.append((-h.coeffs[0]) % p)
            continue
        while True:
            probe = f._new([shift, 1]).powmod((p - 1) // 2, h) - f._new([1])
            shift += 1
            d = h.gcd(probe)
            if 0 < d.degree < h.degree:
                stack.extend([d, h // d])
                break
    return sorted(roots)


def distinct_degree_factorization(f: PrimeFieldPoly) -> list[tuple[int, PrimeFieldPoly]]:
    """Pairs (d, product of all monic irreducible factors of degree d); f squarefree."""
    out = []
    f = f.monic()
    x = f._new([0, 1])
    h = x
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(f.p, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((d, g))
            f = f // g
            h = h % f if f.degree > 0 else h
    if f.degree > 0:
        out.append((f.degree, f))
    return out


def factor_degree_pattern_mod_p(P: RatPoly, p: int) -> list[int]:
    """Sorted degrees of the irreducible factors of P mod p."""
    f = PrimeFieldPoly.reduce(P, p)
    if f.degree < 1:
        return []
    if f.gcd(f.derivative()).degree > 0:
        raise ExcludedPrime(p, "polynomial not squarefree mod p (p divides the discriminant)")
    pattern: list[int] = []
    for d, g in distinct_degree_factorization(f):
        pattern.extend([d] * (g.degree // d))
    return sorted(pattern)


def irreducible_over_q(P: RatPoly, tries: int = 25) -> bool | None:
    """Exact for degree <= 3; otherwise True when some good prime among the
    first ``tries`` gives an irreducible reduction, False when a rational
    root exists, None when undecided."""
    if P.degree < 1:
        raise ValueError("irreducibility of a constant")
    if P.degree == 1:
        return True
    if rational_roots(P):
        return False
    if P.degree <= 3:
        return True
    found = 0
    for p in primes_up_to(10_000):
        try:
            pattern = factor_degree_pattern_mod_p(P, p)
        except ExcludedPrime:
            continue
        if pattern == [P.degree]:
            return True
        found += 1
        if found >= tries:
            break
    return None


def cyclotomic(n: int) -> RatPoly:
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    out = RatPoly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n):
        if d < n:
            out = out.exact_div(cyclotomic(d))
    return out


def squarefree_kernel_of_rational(q: Fraction) -> int:
    """Squarefree integer d with q / d a rational square."""
    q = to_rational(q)
    if q == 0:
        raise ValueError("kernel of zero")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    d = 1
    for prime, e in factorize(n).items():
        if e % 2:
            d *= prime
    return sign * d
