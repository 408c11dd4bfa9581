"""Regular Galois extensions of k(T) described by their branch data.

An :class:`ExtensionDescriptor` records the Galois group, the Galois orbits
of branch points (each with its minimal polynomial and inertia class), the
base field's relevant properties and, when known, a defining polynomial
P(T, Y).  Builders produce descriptors for the standard realizations;
:func:`specialize` computes the residue extension at a rational point.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .algebra import (
    ExcludedPrime,
    RatPoly,
    critical_values_poly,
    cyclotomic,
    discriminant,
    factor_degree_pattern_mod_p,
    irreducible_over_q,
    is_square_rational,
    is_squarefree,
    primes_up_to,
    rational_roots,
    reciprocal_minpoly,
    sturm_real_root_count,
    to_rational,
)
from .groups import (
    Abstract,
    AbstractGroup,
    AnType,
    AnyGroup,
    ClassLabel,
    CycleType,
    Explicit,
    PermGroup,
    SnType,
    check_perm,
    cyclic,
    group_from_wire,
    group_to_wire,
    symmetric,
)
from .numbertheory import rational_kernel


class NotMorse(ValueError):
    """The polynomial fails one of the Morse conditions."""


class NonSeparable(ValueError):
    """The specialized polynomial is not separable (t0 is a bad point)."""

    def __init__(self, t0, reason: str):
        super().__init__(f"t0 = {t0}: {reason}")
        self.t0 = t0


# ---------------------------------------------------------------------------
# Base fields

FIELD_KINDS = ("Q", "function_field", "hilbertian", "dedekind")


@dataclass(frozen=True)
class FieldKind:
    """Base field k, described only by the properties the criteria consume.

    ``"Q"`` is the rationals; ``"function_field"`` a finite extension of
    kappa(X) with kappa algebraically closed of characteristic zero;
    ``"hilbertian"`` an abstract hilbertian field; ``"dedekind"`` the fraction
    field of a Dedekind domain with infinitely many primes.  The first two
    force both flags true.
    """

    kind: str = "Q"
    hilbertian: bool = False
    infinite_prime_divisors: bool = False

    def __post_init__(self):
        if self.kind not in FIELD_KINDS:
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind in ("Q", "function_field"):
            object.__setattr__(self, "hilbertian", True)
            object.__setattr__(self, "infinite_prime_divisors", True)
        elif self.kind == "hilbertian":
            object.__setattr__(self, "hilbertian", True)

    @classmethod
    def rationals(cls) -> FieldKind:
        return cls("Q")

    @property
    def is_number_field(self) -> bool:
        return self.kind == "Q"

    @property
    def number_field_or_function_field(self) -> bool:
        return self.kind in ("Q", "function_field")

    @classmethod
    def from_wire(cls, data: dict | None) -> FieldKind:
        data = data or {"kind": "Q"}
        kind = data.get("kind", "Q")
        return cls(kind, bool(data.get("hilbertian", False)),
                   bool(data.get("infinite_prime_divisors", False)))

    def to_wire(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind not in ("Q", "function_field"):
            out["hilbertian"] = self.hilbertian
            out["infinite_prime_divisors"] = self.infinite_prime_divisors
        return out


# ---------------------------------------------------------------------------
# Branch orbits and descriptors

Locus = Union[RatPoly, str]  # RatPoly | "infinity" | "zero" | "unspecified"


@dataclass(frozen=True)
class BranchOrbit:
    """A Galois orbit of branch points with its inertia class.

    ``locus`` is the monic minimal polynomial of the orbit, ``"infinity"``,
    ``"zero"``, or ``"unspecified"`` when only class data is known (then
    ``degree`` is the number of points and ``rational`` is as asserted).
    """

    locus: Locus
    label: ClassLabel
    ramification_index: int
    rational: bool
    degree: int = 1

    def __post_init__(self):
        if isinstance(self.locus, RatPoly):
            if self.locus.degree < 1:
                raise ValueError("orbit locus must be nonconstant")
            object.__setattr__(self, "locus", self.locus.monic())
            object.__setattr__(self, "degree", self.locus.degree)
            if self.rational != (self.locus.degree == 1):
                raise ValueError(f"orbit {self.locus}: rational flag disagrees with its degree")
        elif self.locus in ("infinity", "zero"):
            object.__setattr__(self, "degree", 1)
            if not self.rational:
                raise ValueError(f"the branch point {self.locus} is rational")
        elif self.locus != "unspecified":
            raise ValueError(f"bad locus {self.locus!r}")
        if self.degree < 1:
            raise ValueError("orbit degree must be positive")
        if self.ramification_index != self.label.order:
            raise ValueError(
                f"class {self.label} has element order {self.label.order}, "
                f"but ramification index {self.ramification_index} was declared"
            )

    @property
    def known_locus(self) -> bool:
        return self.locus != "unspecified"

    def m_pair(self) -> tuple[RatPoly, RatPoly]:
        """(m, m*) for this orbit: minimal polynomials of t and of 1/t."""
        if self.locus == "infinity":
            return RatPoly([1]), RatPoly([0, 1])
        if self.locus == "zero":
            return RatPoly([0, 1]), RatPoly([1])
        if self.locus == "unspecified":
            raise ValueError("orbit locus is unspecified")
        return self.locus.primitive(), reciprocal_minpoly(self.locus)


@dataclass(frozen=True)
class ExtensionDescriptor:
    label: str
    group: AnyGroup
    orbits: tuple[BranchOrbit, ...]
    field: FieldKind = field(default_factory=FieldKind)
    defining_poly: tuple[RatPoly, ...] | None = None  # coefficient of Y^i at index i
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "orbits", tuple(self.orbits))
        if self.defining_poly is not None:
            object.__setattr__(self, "defining_poly", tuple(self.defining_poly))
        if sum(1 for o in self.orbits if o.locus == "infinity") > 1:
            raise ValueError("at most one orbit can be the point at infinity")
        if sum(1 for o in self.orbits if o.locus == "zero") > 1:
            raise ValueError("at most one orbit can be the point 0")
        for o in self.orbits:
            _check_label_in_group(o.label, self.group)

    @property
    def classes(self) -> list[ClassLabel]:
        return [o.label for o in self.orbits]

    @property
    def branch_point_count(self) -> int:
        return sum(o.degree for o in self.orbits)

    @property
    def has_rational_branch_point(self) -> bool:
        return any(o.rational for o in self.orbits)

    @property
    def loci_known(self) -> bool:
        return all(o.known_locus for o in self.orbits)

    def to_wire(self) -> dict:
        out: dict = {
            "label": self.label,
            "group": group_to_wire(self.group),
            "field": self.field.to_wire(),
            "orbits": [_orbit_to_wire(o) for o in self.orbits],
        }
        if self.defining_poly is not None:
            out["defining_poly"] = [c.to_wire() for c in self.defining_poly]
        if self.notes:
            out["notes"] = self.notes
        return out

    @classmethod
    def from_wire(cls, data: dict) -> ExtensionDescriptor:
        return builder_manual(data)


def _check_label_in_group(label: ClassLabel, G: AnyGroup) -> None:
    if isinstance(G, AbstractGroup):
        if not isinstance(label, Abstract):
            raise ValueError(f"abstract group {G.name} needs abstract classes, got {label}")
        known = dict(G.class_orders)
        if label.name in known and known[label.name] != label.order:
            raise ValueError(f"class {label.name} of {G.name} has order {known[label.name]}")
        return
    if isinstance(label, SnType):
        if G.kind != "Sn" or label.ct.degree != G.degree:
            raise ValueError(f"{label} is not a class of {G.name}")
    elif isinstance(label, AnType):
        if G.kind != "An" or label.ct.degree != G.degree:
            raise ValueError(f"{label} is not a class of {G.name}")
    elif isinstance(label, Explicit):
        if label.group_id != G.group_id:
            raise ValueError(f"{label} is not a class of {G.name}")
    elif isinstance(label, Abstract):
        pass  # order-only data is allowed for any group
    if label.order == 1:
        raise ValueError("a branch point cannot carry the trivial class")


# ---------------------------------------------------------------------------
# Wire format


def class_from_wire(data: dict, G: AnyGroup) -> ClassLabel:
    kind = data.get("kind")
    if kind == "Sn":
        return SnType(CycleType.parse(data["type"], G.degree))
    if kind == "An":
        tag = data.get("tag")
        return AnType(CycleType.parse(data["type"], G.degree), None if tag is None else int(tag))
    if kind == "abstract":
        name = str(data["name"])
        order = data.get("order")
        if order is None:
            if not isinstance(G, AbstractGroup):
                raise ValueError(f"abstract class {name} needs an order")
            return G.label(name)
        return Abstract(name, int(order))
    if kind == "explicit":
        if not isinstance(G, PermGroup):
            raise ValueError("explicit classes need a permutation group")
        if "rep" in data:
            rep = check_perm(data["rep"])
            if rep not in G:
                raise ValueError(f"{list(rep)} is not an element of {G.name}")
            return G.label_of(rep)
        return G.label_by_name(str(data["name"]))
    raise ValueError(f"unknown class kind {kind!r}")


def class_to_wire(label: ClassLabel) -> dict:
    if isinstance(label, SnType):
        return {"kind": "Sn", "type": str(label.ct)}
    if isinstance(label, AnType):
        out = {"kind": "An", "type": str(label.ct)}
        if label.tag is not None:
            out["tag"] = label.tag
        return out
    if isinstance(label, Abstract):
        return {"kind": "abstract", "name": label.name, "order": label.order}
    out = {"kind": "explicit", "rep": list(label.rep)}
    if label.name:
        out["name"] = label.name
    return out


def _orbit_to_wire(o: BranchOrbit) -> dict:
    out: dict = {
        "locus": o.locus.to_wire() if isinstance(o.locus, RatPoly) else o.locus,
        "class": class_to_wire(o.label),
        "ramification_index": o.ramification_index,
        "rational": o.rational,
    }
    if o.locus == "unspecified":
        out["degree"] = o.degree
    return out


def builder_manual(data: dict) -> ExtensionDescriptor:
    """Validate a descriptor given in the JSON wire format."""
    if not isinstance(data, dict):
        raise ValueError("descriptor must be a JSON object")
    for key in ("group", "orbits"):
        if key not in data:
            raise ValueError(f"descriptor is missing {key!r}")
    G = group_from_wire(data["group"])
    orbits = []
    for od in data["orbits"]:
        label = class_from_wire(od["class"], G)
        raw = od["locus"]
        locus = RatPoly.from_wire(raw) if isinstance(raw, list) else str(raw)
        if isinstance(locus, RatPoly):
            rational = od.get("rational", locus.degree == 1)
        else:
            rational = od.get("rational", locus in ("infinity", "zero"))
        index = int(od.get("ramification_index", label.order))
        orbits.append(BranchOrbit(locus, label, index, bool(rational), int(od.get("degree", 1))))
    poly = data.get("defining_poly")
    return ExtensionDescriptor(
        label=str(data.get("label", "")),
        group=G,
        orbits=tuple(orbits),
        field=FieldKind.from_wire(data.get("field")),
        defining_poly=None if poly is None else tuple(RatPoly.from_wire(c) for c in poly),
        notes=str(data.get("notes", "")),
    )


# ---------------------------------------------------------------------------
# m-polynomials


def m_polys(E: ExtensionDescriptor) -> tuple[RatPoly, RatPoly]:
    """(m_E, m_E*): products over the orbits of the minimal polynomials of t and 1/t."""
    m, ms = RatPoly([1]), RatPoly([1])
    for o in E.orbits:
        a, b = o.m_pair()
        m, ms = m * a, ms * b
    return m, ms


def m_product(E: ExtensionDescriptor) -> RatPoly:
    m, ms = m_polys(E)
    return m * ms


# ---------------------------------------------------------------------------
# Builders


def _split_over_q(P: RatPoly, factors: Sequence[RatPoly] | None, what: str) -> list[RatPoly]:
    """Monic irreducible factors of a squarefree P.

    Rational roots are split off exactly; a remainder of degree <= 3 is then
    irreducible.  Larger remainders need an irreducibility certificate or a
    caller-supplied factorization.
    """
    out: list[RatPoly] = []
    rest = P.monic()
    for r in rational_roots(P):
        lin = RatPoly([-r, 1])
        out.append(lin)
        rest = rest.exact_div(lin)
    if rest.degree < 1:
        return out
    if rest.degree <= 3 or irreducible_over_q(rest):
        return out + [rest]
    if factors is None:
        raise ValueError(
            f"could not certify that {rest} is irreducible over Q; "
            f"pass the irreducible factors of the {what} explicitly"
        )
    given = [RatPoly(f.coeffs).monic() for f in factors if RatPoly(f.coeffs).degree >= 1]
    given = [f for f in given if f.degree > 1 or f not in out]
    prod = RatPoly([1])
    for f in given:
        if irreducible_over_q(f) is False:
            raise ValueError(f"supplied factor {f} is reducible over Q")
        prod = prod * f
    if prod.monic() != rest:
        raise ValueError(f"supplied factors multiply to {prod}, expected {rest}")
    return out + given


def builder_quadratic_sqrt(P: RatPoly, factors: Sequence[RatPoly] | None = None,
                           field_kind: FieldKind | None = None) -> ExtensionDescriptor:
    """k(T)(sqrt(P(T))): branch points are the roots of P, plus infinity when deg P is odd."""
    if P.degree < 1:
        raise ValueError("P must be nonconstant")
    if not is_squarefree(P):
        raise ValueError("P is not squarefree; pass its squarefree part instead")
    G = cyclic(2)
    inv = G.label_of((1, 0))
    orbits = []
    for f in _split_over_q(P, factors, "radicand"):
        if f == RatPoly([0, 1]):
            orbits.append(BranchOrbit("zero", inv, 2, True))
        else:
            orbits.append(BranchOrbit(f, inv, 2, f.degree == 1))
    if P.degree % 2:
        orbits.append(BranchOrbit("infinity", inv, 2, True))
    return ExtensionDescriptor(
        label=f"Q(T)(sqrt({P}))",
        group=G,
        orbits=tuple(orbits),
        field=field_kind or FieldKind(),
        defining_poly=(-P, RatPoly(), RatPoly([1])),
    )


def trinomial_branch_value(n: int, m: int) -> Fraction:
    return Fraction(m**m * (n - m) ** (n - m), n**n)


def _power(x: str, e: int) -> str:
    return x if e == 1 else f"{x}^{e}"


def builder_trinomial(n: int, m: int, q: int, s: int,
                      field_kind: FieldKind | None = None) -> ExtensionDescriptor:
    """Y^n - T^q Y^m + T^s: group S_n, branch points 0, infinity and m^m (n-m)^(n-m) / n^n."""
    if not (1 <= m < n):
        raise ValueError("need 1 <= m < n")
    if math.gcd(m, n) != 1:
        raise ValueError("need gcd(m, n) = 1")
    if q < 1 or s < 1:
        raise ValueError("q and s must be positive")
    if s * (n - m) - q * n != 1:
        raise ValueError(f"s(n-m) - qn = {s * (n - m) - q * n}, must equal 1")
    beta = trinomial_branch_value(n, m)
    orbits = (
        BranchOrbit("zero", SnType(CycleType.from_lengths([m, n - m])), _lcm(m, n - m), True),
        BranchOrbit("infinity", SnType(CycleType.from_lengths([n])), n, True),
        BranchOrbit(RatPoly([-beta, 1]), SnType(CycleType.parse("2^1", n)), 2, True),
    )
    coeffs = [RatPoly()] * (n + 1)
    coeffs[0] = RatPoly([0] * s + [1])
    coeffs[m] = RatPoly([0] * q + [-1])
    coeffs[n] = RatPoly([1])
    return ExtensionDescriptor(
        label=f"Y^{n} - {_power('T', q)} {_power('Y', m)} + {_power('T', s)}",
        group=symmetric(n),
        orbits=orbits,
        field=field_kind or FieldKind(),
        defining_poly=tuple(coeffs),
    )


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def builder_morse(M: RatPoly, factors: Sequence[RatPoly] | None = None,
                  field_kind: FieldKind | None = None) -> ExtensionDescriptor:
    """M(Y) - T for a Morse polynomial M: an n-cycle over infinity and a
    transposition over each critical value."""
    n = M.degree
    if n < 3:
        raise ValueError("Morse realizations need degree >= 3")
    if M.lc != 1:
        raise ValueError("M must be monic")
    dM = M.derivative()
    if not is_squarefree(dM):
        raise NotMorse("the critical points (zeros of M') are not simple")
    cv = critical_values_poly(M)
    if not is_squarefree(cv):
        raise NotMorse("two critical points share a critical value")
    transposition = SnType(CycleType.parse("2^1", n))
    orbits = [BranchOrbit(f, transposition, 2, f.degree == 1)
              for f in _split_over_q(cv, factors, "critical-value polynomial")]
    orbits.append(BranchOrbit("infinity", SnType(CycleType.from_lengths([n])), n, True))
    return ExtensionDescriptor(
        label=f"M(Y) - T, M = {str(M).replace('T', 'Y')}",
        group=symmetric(n),
        orbits=tuple(orbits),
        field=field_kind or FieldKind(),
        defining_poly=(M - RatPoly([0, 1]),) + tuple(RatPoly([c]) for c in M.coeffs[1:]),
    )


def builder_cyclic_cyclotomic(n: int, field_kind: FieldKind | None = None) -> ExtensionDescriptor:
    """Cyclic realization of Z/n branched exactly at the primitive n-th roots of unity."""
    if n < 3:
        raise ValueError("n must be at least 3")
    G = cyclic(n)
    gen = G.label_of(G.generators[0])
    phi = cyclotomic(n)
    return ExtensionDescriptor(
        label=f"Z/{n} branched at primitive {n}-th roots of unity",
        group=G,
        orbits=(BranchOrbit(phi, gen, n, phi.degree == 1),),
        field=field_kind or FieldKind(),
    )


def builder_cubic_prop34() -> ExtensionDescriptor:
    """Splitting field of Y^3 + T^2 Y + T^2 over Q(T).

    Discriminant -T^4 (4T^2 + 27): a 3-cycle over 0 and a transposition over
    each root of T^2 + 27/4.  Over infinity, Y = W/u with T = 1/u gives
    W^3 + W + u, separable at u = 0, so infinity is unramified.
    """
    S3 = symmetric(3)
    return ExtensionDescriptor(
        label="Y^3 + T^2 Y + T^2",
        group=S3,
        orbits=(
            BranchOrbit("zero", SnType(CycleType.parse("3^1")), 3, True),
            BranchOrbit(RatPoly([Fraction(27, 4), 0, 1]), SnType(CycleType.parse("1^1 2^1")), 2, False),
        ),
        defining_poly=(RatPoly([0, 0, 1]), RatPoly([0, 0, 1]), RatPoly(), RatPoly([1])),
        notes="branch data derived from the discriminant and the expansion at infinity",
    )


# ---------------------------------------------------------------------------
# Specialization


@dataclass
class SpecializationResult:
    t0: Fraction
    polynomial: RatPoly
    separable: bool
    discriminant: Fraction
    quadratic_kernel: int | None = None
    cubic_group: str | None = None
    quartic_group: str | None = None
    totally_real: bool | None = None
    real_roots: int | None = None
    degree_pattern_census: dict[tuple[int, ...], int] | None = None

    def to_wire(self) -> dict:
        out: dict = {
            "t0": str(self.t0),
            "polynomial": self.polynomial.to_wire(),
            "separable": self.separable,
            "discriminant": str(self.discriminant),
            "totally_real": self.totally_real,
            "real_roots": self.real_roots,
        }
        if self.quadratic_kernel is not None:
            out["quadratic_kernel"] = self.quadratic_kernel
        if self.cubic_group is not None:
            out["cubic_group"] = self.cubic_group
        if self.quartic_group is not None:
            out["quartic_group"] = self.quartic_group
        if self.degree_pattern_census is not None:
            out["degree_pattern_census"] = {
                " ".join(map(str, k)): v for k, v in sorted(self.degree_pattern_census.items())
            }
        return out


def specialized_polynomial(E: ExtensionDescriptor, t0) -> RatPoly:
    if E.defining_poly is None:
        raise ValueError(f"descriptor {E.label!r} has no defining polynomial")
    t0 = to_rational(t0)
    return RatPoly(c(t0) for c in E.defining_poly)


def cubic_galois_group(f: RatPoly) -> str:
    """Galois group of a separable cubic: "C1", "C2", "C3" or "S3"."""
    roots = rational_roots(f)
    if len(roots) == 3:
        return "C1"
    if len(roots) == 1:
        return "C2"
    return "C3" if is_square_rational(discriminant(f)) else "S3"


def quartic_galois_group(f: RatPoly) -> str:
    """Galois group of a separable quartic via rational roots and the resolvent cubic.

    Irreducible cases give "S4", "A4", "D4", "C4" or "V4"; reducible ones are
    reported as "reducible:" followed by the factor degrees.
    """
    f = f.monic()
    d, c, b, a = (f[i] for i in range(4))
    roots = rational_roots(f)
    if roots:
        rest = f
        for r in roots:
            rest = rest.exact_div(RatPoly([-r, 1]))
        degs = [1] * len(roots) + ([rest.degree] if rest.degree > 0 else [])
        return "reducible:" + ",".join(map(str, sorted(degs)))
    R = RatPoly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1])
    disc = discriminant(f)
    r_roots = rational_roots(R)
    for r in r_roots:
        # a factorization (Y^2 + pY + q)(Y^2 + p'Y + q') has q + q' = r for some root r
        dq, dp = r * r - 4 * d, a * a - 4 * (b - r)
        if dq >= 0 and dp >= 0 and is_square_rational(dq) and is_square_rational(dp):
            sq, sp = _sqrt(dq), _sqrt(dp)
            for sign in (1, -1):
                g = RatPoly([(r + sq) / 2, (a + sign * sp) / 2, 1])
                h = RatPoly([(r - sq) / 2, (a - sign * sp) / 2, 1])
                if g * h == f:
                    return "reducible:2,2"
    if not r_roots:
        return "A4" if is_square_rational(disc) else "S4"
    if len(r_roots) == 3:
        return "V4"
    r = r_roots[0]
    u, v = (a * a - 4 * (b - r)) * disc, (r * r - 4 * d) * disc
    if is_square_rational(u) and is_square_rational(v):
        return "C4"
    return "D4"


def _sqrt(q: Fraction) -> Fraction:
    from .algebra import rational_sqrt

    return rational_sqrt(q)


def specialize(E: ExtensionDescriptor, t0, census_bound: int = 200) -> SpecializationResult:
    """Splitting field data of P(t0, Y) over Q."""
    t0 = to_rational(t0)
    for o in E.orbits:
        if isinstance(o.locus, RatPoly) and o.locus(t0) == 0:
            raise NonSeparable(t0, f"t0 is a branch point (root of {o.locus})")
        if o.locus == "zero" and t0 == 0:
            raise NonSeparable(t0, "t0 = 0 is a branch point")
    f = specialized_polynomial(E, t0)
    full_degree = max(i for i, c in enumerate(E.defining_poly) if not c.is_zero())
    if f.degree != full_degree:
        raise NonSeparable(t0, "leading coefficient vanishes at t0")
    if f.degree < 1:
        raise NonSeparable(t0, "specialized polynomial is constant")
    disc = discriminant(f) if f.degree >= 2 else Fraction(1)
    if disc == 0:
        raise NonSeparable(t0, "P(t0, Y) has a repeated root")
    real = sturm_real_root_count(f)
    res = SpecializationResult(t0, f, True, disc, real_roots=real, totally_real=real == f.degree)
    if f.degree == 2:
        res.quadratic_kernel = rational_kernel(disc)
    elif f.degree == 3:
        res.cubic_group = cubic_galois_group(f)
    elif f.degree == 4:
        res.quartic_group = quartic_galois_group(f)
    elif f.degree >= 5:
        census: Counter = Counter()
        for p in primes_up_to(census_bound):
            try:
                census[tuple(factor_degree_pattern_mod_p(f, p))] += 1
            except ExcludedPrime:
                continue
        res.degree_pattern_census = dict(census)
    return res


# ---------------------------------------------------------------------------
# Genus


@dataclass(frozen=True)
class GenusBound:
    two_g_at_least: Fraction
    genus_at_least: int


def genus_lower_bound(degree: int, r: int) -> GenusBound:
    """2g >= 2 + degree * (r/2 - 2) from Riemann-Hurwitz with every index >= 2."""
    val = 2 + degree * (Fraction(r, 2) - 2)
    g = max(0, math.ceil(val / 2))
    return GenusBound(val, g)


def genus_lower_bound_of(E: ExtensionDescriptor) -> GenusBound:
    if not isinstance(E.group, PermGroup):
        raise ValueError("group order unknown for an abstract group")
    return genus_lower_bound(E.group.order, E.branch_point_count)


# ---------------------------------------------------------------------------
# Bundled descriptors


def fixture_names() -> list[str]:
    from importlib import resources

    root = resources.files("galois_param") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> ExtensionDescriptor:
    import json
    from importlib import resources

    path = resources.files("galois_param") / "fixtures" / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"no bundled descriptor {name!r}; available: {', '.join(fixture_names())}")
    return builder_manual(json.loads(path.read_text()))
