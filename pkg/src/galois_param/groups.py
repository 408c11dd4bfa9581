"""Permutation groups and conjugacy-class arithmetic.

Permutations are tuples of images on ``{0..n-1}``; ``mul(p, q)`` applies
``q`` first, so ``mul(p, q)[i] == p[q[i]]``.  Symmetric and alternating
groups of any degree are handled through cycle types alone; every other
group is enumerated by breadth-first closure up to a configurable cap
(environment variable ``GALOIS_PARAM_CAP``, default 20000).
"""

from __future__ import annotations

import itertools
import math
import os
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence, Union

from . import kernels

Perm = tuple

DEFAULT_CAP = 20000
CONJUGATE_IN_AN_MAX_DEGREE = 12


class CapExceeded(RuntimeError):
    """The requested computation needs more elements than the enumeration cap."""


class OrderOnly(ValueError):
    """An operation needed a representative but only an element order is known."""


class NoInvolution(ValueError):
    """The group has odd order."""


def enumeration_cap() -> int:
    return int(os.environ.get("GALOIS_PARAM_CAP", DEFAULT_CAP))


# ---------------------------------------------------------------------------
# Permutations


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def power(p: Perm, a: int) -> Perm:
    if a < 0:
        return power(inverse(p), -a)
    result = identity(len(p))
    base = p
    while a:
        if a & 1:
            result = mul(result, base)
        base = mul(base, base)
        a >>= 1
    return result


def conjugate(g: Perm, s: Perm) -> Perm:
    """s g s^-1."""
    return mul(mul(s, g), inverse(s))


def cycles(p: Perm, include_fixed: bool = True) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        if include_fixed or len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def from_cycles(n: int, cycs: Iterable[Sequence[int]]) -> Perm:
    img = list(range(n))
    for cyc in cycs:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    perm = tuple(img)
    if sorted(perm) != list(range(n)):
        raise ValueError("cycles overlap")
    return perm


def perm_order(p: Perm) -> int:
    return reduce(math.lcm, (len(c) for c in cycles(p)), 1)


def is_even(p: Perm) -> bool:
    return sum(len(c) - 1 for c in cycles(p)) % 2 == 0


def check_perm(images: Sequence[int]) -> Perm:
    perm = tuple(int(x) for x in images)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {list(images)}")
    return perm


# ---------------------------------------------------------------------------
# Cycle types


@dataclass(frozen=True, order=True)
class CycleType:
    """Cycle type ``1^l1 2^l2 ...`` of a permutation of ``degree`` points.

    Stored sparsely as sorted ``(length, count)`` pairs so that degrees in the
    hundreds of thousands cost nothing.
    """

    degree: int
    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if sum(length * c for length, c in self.counts) != self.degree:
            raise ValueError(f"cycle counts do not add up to degree {self.degree}")
        if any(length < 1 or c < 1 for length, c in self.counts):
            raise ValueError("cycle lengths and counts must be positive")

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> CycleType:
        tally: dict[int, int] = {}
        for length in lengths:
            tally[length] = tally.get(length, 0) + 1
        return cls(sum(k * v for k, v in tally.items()), tuple(sorted(tally.items())))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> CycleType:
        items = tuple(sorted((k, v) for k, v in counts.items() if v))
        return cls(sum(k * v for k, v in items), items)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> CycleType:
        """Parse ``"1^3 2^1"`` (brackets optional).

        If ``degree`` exceeds the listed points, the remainder is filled with
        fixed points, so ``parse("2^1", 5)`` is ``1^3 2^1``.
        """
        body = text.strip().strip("[]").strip()
        tally: dict[int, int] = {}
        for token in body.split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if not m:
                raise ValueError(f"bad cycle-type token {token!r}")
            length = int(m.group(1))
            count = int(m.group(2) or 1)
            tally[length] = tally.get(length, 0) + count
        ct = cls.from_counts(tally)
        if degree is not None and degree != ct.degree:
            if degree < ct.degree:
                raise ValueError(f"cycle type {text!r} needs more than {degree} points")
            tally[1] = tally.get(1, 0) + degree - ct.degree
            ct = cls.from_counts(tally)
        return ct

    def count(self, length: int) -> int:
        for k, v in self.counts:
            if k == length:
                return v
        return 0

    def lengths(self) -> list[int]:
        return [k for k, v in self.counts for _ in range(v)]

    @property
    def order(self) -> int:
        return reduce(math.lcm, (k for k, _ in self.counts), 1)

    @property
    def is_even(self) -> bool:
        return sum((k - 1) * v for k, v in self.counts) % 2 == 0

    def power(self, a: int) -> CycleType:
        return cycle_type_power(self, a)

    def representative(self) -> Perm:
        """Canonical element: consecutive cycles, shortest first."""
        img = []
        start = 0
        for length, count in self.counts:
            for _ in range(count):
                img.extend(start + (i + 1) % length for i in range(length))
                start += length
        return tuple(img)

    def __str__(self) -> str:
        return " ".join(f"{k}^{v}" for k, v in self.counts)


def cycle_type(g: Perm) -> CycleType:
    return CycleType.from_lengths(len(c) for c in cycles(g))


def cycle_type_power(ct: CycleType, a: int) -> CycleType:
    """Cycle type of g^a: a length-l cycle splits into gcd(l, a) cycles of length l/gcd(l, a)."""
    if a < 1:
        raise ValueError("exponent must be positive")
    tally: dict[int, int] = {}
    for length, count in ct.counts:
        d = math.gcd(length, a)
        tally[length // d] = tally.get(length // d, 0) + count * d
    return CycleType.from_counts(tally)


def an_class_splits(ct: CycleType) -> bool:
    """Whether the S_n class of an even type splits into two A_n classes.

    The class stays whole exactly when some length p has l_p >= 2 or some
    even length 2p occurs; otherwise (all lengths odd and distinct) it splits.
    """
    if not ct.is_even:
        raise ValueError(f"type {ct} is odd, so it is not contained in A_n")
    if ct.degree < 2:
        return False
    for length, count in ct.counts:
        if count >= 2 or length % 2 == 0:
            return False
    return True


def _aligned_conjugator(g: Perm, h: Perm) -> Perm | None:
    """Some s with s g s^-1 = h, built by matching cycles of equal length."""
    cg = sorted(cycles(g), key=len)
    ch = sorted(cycles(h), key=len)
    if [len(c) for c in cg] != [len(c) for c in ch]:
        return None
    s = [0] * len(g)
    for c, d in zip(cg, ch):
        for x, y in zip(c, d):
            s[x] = y
    return tuple(s)


def _centralizer_has_odd(g: Perm) -> bool:
    # An even-length cycle is itself odd and commutes with g; two cycles of
    # equal length can be swapped.  Otherwise the centralizer is the product
    # of the cyclic groups generated by the (odd-length) cycles.
    lengths = [len(c) for c in cycles(g)]
    return any(l % 2 == 0 for l in lengths) or len(set(lengths)) < len(lengths)


def _conjugate_in_an(g: Perm, h: Perm) -> bool:
    s = _aligned_conjugator(g, h)
    if s is None:
        return False
    return is_even(s) or _centralizer_has_odd(g)


def conjugate_in_An(g: Perm, h: Perm) -> bool:
    """Exact A_n-conjugacy of two even permutations."""
    if len(g) != len(h):
        raise ValueError("permutations of different degrees")
    if len(g) > CONJUGATE_IN_AN_MAX_DEGREE:
        raise CapExceeded(f"conjugate_in_An supports degree <= {CONJUGATE_IN_AN_MAX_DEGREE}")
    if not (is_even(g) and is_even(h)):
        raise ValueError("both permutations must be even")
    return _conjugate_in_an(g, h)


# ---------------------------------------------------------------------------
# Class labels


@dataclass(frozen=True)
class SnType:
    ct: CycleType

    @property
    def order(self) -> int:
        return self.ct.order

    def __str__(self) -> str:
        return f"[{self.ct}]"


@dataclass(frozen=True)
class AnType:
    """A_n class: an even cycle type, tagged 1 or 2 when the S_n class splits.

    Tag 1 is the class of ``ct.representative()``; tag 2 is its conjugate by
    the transposition (0 1).
    """

    ct: CycleType
    tag: int | None = None

    def __post_init__(self):
        splits = an_class_splits(self.ct)
        if splits and self.tag not in (1, 2):
            raise ValueError(f"type {self.ct} splits in A_{self.ct.degree}; tag 1 or 2 required")
        if not splits and self.tag is not None:
            raise ValueError(f"type {self.ct} does not split in A_{self.ct.degree}; no tag allowed")

    @property
    def order(self) -> int:
        return self.ct.order

    @property
    def representative(self) -> Perm:
        rep = self.ct.representative()
        if self.tag == 2:
            t = from_cycles(self.ct.degree, [(0, 1)])
            rep = conjugate(rep, t)
        return rep

    def __str__(self) -> str:
        return f"[{self.ct}]" + (f"_{self.tag}" if self.tag else "")


@dataclass(frozen=True)
class Abstract:
    """Class known only by its name and element order (e.g. Atlas ``55A``)."""

    name: str
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("element order must be positive")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Explicit:
    """Class of an enumerated group, identified by its index in ``group.classes``."""

    group_id: str
    index: int
    rep: Perm = field(compare=False)
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return perm_order(self.rep)

    def __str__(self) -> str:
        return self.name or f"class#{self.index}"


ClassLabel = Union[SnType, AnType, Abstract, Explicit]


def label_order(label: ClassLabel) -> int:
    return label.order


def an_label_of(g: Perm) -> AnType:
    ct = cycle_type(g)
    if not an_class_splits(ct):
        return AnType(ct)
    return AnType(ct, 1 if _conjugate_in_an(g, ct.representative()) else 2)


# ---------------------------------------------------------------------------
# Groups


class PermGroup:
    """A permutation group.

    ``kind`` is ``"Sn"``, ``"An"``, ``"psl2"`` or ``"perm"``.  For ``Sn`` and
    ``An`` the order and class labels come from cycle-type arithmetic, so
    large degrees are fine as long as nothing needs enumeration.
    """

    def __init__(self, degree: int, generators: Sequence[Sequence[int]] | None = None,
                 kind: str = "perm", name: str = "", params: dict | None = None):
        self.degree = degree
        self.kind = kind
        self.params = dict(params or {})
        self._generators = None if generators is None else [check_perm(g) for g in generators]
        if self._generators is not None:
            for g in self._generators:
                if len(g) != degree:
                    raise ValueError(f"generator {g} has wrong degree")
        self.name = name or self._default_name()

    def _default_name(self) -> str:
        gens = ";".join(",".join(map(str, g)) for g in self.generators)
        return f"perm[{self.degree}]<{gens}>"

    @property
    def group_id(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"PermGroup({self.name})"

    def _key(self) -> tuple:
        if self.kind in ("Sn", "An", "psl2"):
            return (self.kind, self.degree)
        return (self.kind, self.degree, self.name, tuple(self.generators))

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    # -- generators, elements, order --------------------------------------

    @property
    def generators(self) -> list[Perm]:
        if self._generators is None:
            self._generators = self._standard_generators()
        return self._generators

    def _standard_generators(self) -> list[Perm]:
        n = self.degree
        if self.kind == "Sn":
            if n < 2:
                return []
            return [from_cycles(n, [(0, 1)]), from_cycles(n, [tuple(range(n))])]
        if self.kind == "An":
            if n < 3:
                return []
            long_cycle = tuple(range(n)) if n % 2 else tuple(range(1, n))
            return [from_cycles(n, [(0, 1, 2)]), from_cycles(n, [long_cycle])]
        raise ValueError("group has no generators")

    @cached_property
    def order(self) -> int:
        if self.kind == "Sn":
            return math.factorial(self.degree)
        if self.kind == "An":
            return max(1, math.factorial(self.degree) // 2)
        return len(self.elements)

    @cached_property
    def elements(self) -> list[Perm]:
        cap = enumeration_cap()
        if self.kind in ("Sn", "An") and self.order > cap:
            raise CapExceeded(f"{self.name} has order {self.order} > cap {cap}")
        elems = kernels.closure(self.generators, self.degree, cap)
        if len(elems) > cap:
            raise CapExceeded(f"{self.name} has more than {cap} elements")
        return [tuple(e) for e in elems]

    @cached_property
    def _index(self) -> dict[Perm, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def __contains__(self, g: Perm) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        if self.kind == "Sn":
            return True
        if self.kind == "An":
            return is_even(g)
        return g in self._index

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    # -- conjugacy classes --------------------------------------------------

    @cached_property
    def _class_data(self) -> tuple[list[tuple[Perm, int]], dict[Perm, int]]:
        elems = self.elements
        gens = self.generators
        gens_inv = [inverse(g) for g in gens]
        which: dict[Perm, int] = {}
        classes: list[tuple[Perm, int]] = []
        for x in elems:
            if x in which:
                continue
            idx = len(classes)
            which[x] = idx
            queue = deque([x])
            size = 1
            while queue:
                y = queue.popleft()
                for g, gi in zip(gens, gens_inv):
                    z = mul(mul(g, y), gi)
                    if z not in which:
                        which[z] = idx
                        size += 1
                        queue.append(z)
            classes.append((x, size))
        return classes, which

    @property
    def classes(self) -> list[tuple[Perm, int]]:
        """Conjugacy classes as (representative, size), identity class first."""
        return self._class_data[0]

    def class_index(self, g: Perm) -> int:
        return self._class_data[1][tuple(g)]

    def class_elements(self, idx: int) -> list[Perm]:
        which = self._class_data[1]
        return [g for g in self.elements if which[g] == idx]

    @cached_property
    def class_names(self) -> list[str]:
        """Atlas-style names: element order followed by A, B, ... by increasing class size."""
        by_order: dict[int, list[int]] = {}
        for idx, (rep, _) in enumerate(self.classes):
            by_order.setdefault(perm_order(rep), []).append(idx)
        names = [""] * len(self.classes)
        for order, idxs in by_order.items():
            idxs.sort(key=lambda i: (self.classes[i][1], i))
            for j, i in enumerate(idxs):
                names[i] = f"{order}{_letters(j)}"
        return names

    def label_of(self, g: Perm) -> ClassLabel:
        """The class label of an element of this group."""
        g = tuple(g)
        if self.kind == "Sn":
            return SnType(cycle_type(g))
        if self.kind == "An":
            return an_label_of(g)
        idx = self.class_index(g)
        return Explicit(self.group_id, idx, self.classes[idx][0], self.class_names[idx])

    def class_labels(self) -> list[ClassLabel]:
        return [self.label_of(rep) for rep, _ in self.classes]

    def label_by_name(self, name: str) -> Explicit:
        idx = self.class_names.index(name)
        return Explicit(self.group_id, idx, self.classes[idx][0], name)

    def representative(self, label: ClassLabel) -> Perm:
        if isinstance(label, SnType):
            if self.kind not in ("Sn",) or label.ct.degree != self.degree:
                raise ValueError(f"{label} is not a class of {self.name}")
            return label.ct.representative()
        if isinstance(label, AnType):
            if self.kind != "An" or label.ct.degree != self.degree:
                raise ValueError(f"{label} is not a class of {self.name}")
            return label.representative
        if isinstance(label, Explicit):
            if label.group_id != self.group_id:
                raise ValueError(f"{label} belongs to {label.group_id}, not {self.name}")
            return label.rep
        raise OrderOnly(f"class {label} carries only its element order")

    def class_index_of_label(self, label: ClassLabel) -> int:
        if isinstance(label, Explicit) and label.group_id == self.group_id:
            return label.index
        return self.class_index(self.representative(label))

    def centralizer(self, g: Perm) -> list[Perm]:
        return [x for x in self.elements if mul(x, g) == mul(g, x)]

    @cached_property
    def exponent(self) -> int:
        if self.kind == "Sn":
            return reduce(math.lcm, range(1, self.degree + 1), 1)
        return reduce(math.lcm, (perm_order(rep) for rep, _ in self.classes), 1)

    def generated_by(self, elems: Sequence[Perm]) -> bool:
        """True iff ``elems`` generate the whole group."""
        half = self.order // 2
        if self.order == 1:
            return True
        return kernels.closure_size(list(elems), self.degree, half) > half


def _letters(j: int) -> str:
    s = ""
    j += 1
    while j:
        j, r = divmod(j - 1, 26)
        s = chr(ord("A") + r) + s
    return s


@dataclass(frozen=True)
class AbstractGroup:
    """A group known only through named classes and their element orders."""

    name: str
    class_orders: tuple[tuple[str, int], ...]

    @property
    def group_id(self) -> str:
        return self.name

    kind = "abstract"

    def label(self, name: str) -> Abstract:
        for n, o in self.class_orders:
            if n == name:
                return Abstract(n, o)
        raise KeyError(f"{self.name} has no class named {name!r}")


AnyGroup = Union[PermGroup, AbstractGroup]


# -- constructors --------------------------------------------------------------


def symmetric(n: int) -> PermGroup:
    return PermGroup(n, None, kind="Sn", name=f"S{n}", params={"n": n})


def alternating(n: int) -> PermGroup:
    return PermGroup(n, None, kind="An", name=f"A{n}", params={"n": n})


def cyclic(n: int) -> PermGroup:
    gen = tuple((i + 1) % n for i in range(n))
    return PermGroup(n, [gen], name=f"Z{n}")


def dihedral(m: int) -> PermGroup:
    """Symmetries of an m-gon (order 2m)."""
    rot = tuple((i + 1) % m for i in range(m))
    refl = tuple((-i) % m for i in range(m))
    return PermGroup(m, [rot, refl], name=f"D{m}")


def klein_four() -> PermGroup:
    return PermGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)], name="V4")


def direct_product(g1: PermGroup, g2: PermGroup) -> PermGroup:
    n1, n2 = g1.degree, g2.degree
    gens = [tuple(g) + tuple(range(n1, n1 + n2)) for g in g1.generators]
    gens += [tuple(range(n1)) + tuple(x + n1 for x in g) for g in g2.generators]
    return PermGroup(n1 + n2, gens, name=f"{g1.name}x{g2.name}")


def psl2_group(p: int) -> PermGroup:
    """PSL_2(F_p) on the projective line {0..p-1, inf=p}, generated by x+1 and -1/x."""
    from .algebra import is_prime

    if not (is_prime(p) and 5 <= p <= 13):
        raise ValueError("psl2_group supports primes 5 <= p <= 13")
    inf = p
    shift = tuple([(x + 1) % p for x in range(p)] + [inf])
    inv = []
    for x in range(p):
        inv.append(inf if x == 0 else (-pow(x, -1, p)) % p)
    inv.append(0)
    G = PermGroup(p + 1, [shift, tuple(inv)], kind="psl2", name=f"PSL2({p})", params={"p": p})
    expected = p * (p * p - 1) // 2
    if G.order != expected:
        raise AssertionError(f"PSL2({p}) enumerated to order {G.order}, expected {expected}")
    return G


def group_from_wire(data: dict) -> AnyGroup:
    kind = data.get("kind")
    if kind == "Sn":
        return symmetric(int(data["n"]))
    if kind == "An":
        return alternating(int(data["n"]))
    if kind == "psl2":
        return psl2_group(int(data["p"]))
    if kind == "perm":
        gens = [check_perm(g) for g in data["generators"]]
        return PermGroup(int(data["degree"]), gens, name=data.get("name", ""))
    if kind == "abstract":
        orders = data.get("class_orders", {})
        return AbstractGroup(str(data["name"]), tuple((str(k), int(v)) for k, v in orders.items()))
    raise ValueError(f"unknown group kind {kind!r}")


def group_to_wire(G: AnyGroup) -> dict:
    if isinstance(G, AbstractGroup):
        return {"kind": "abstract", "name": G.name, "class_orders": dict(G.class_orders)}
    if G.kind in ("Sn", "An"):
        return {"kind": G.kind, "n": G.degree}
    if G.kind == "psl2":
        return {"kind": "psl2", "p": G.params["p"]}
    out = {"kind": "perm", "degree": G.degree, "generators": [list(g) for g in G.generators]}
    if not G.name.startswith("perm["):
        out["name"] = G.name
    return out


# ---------------------------------------------------------------------------
# Class arithmetic


def enumerate_elements(G: PermGroup) -> tuple[list[Perm], int]:
    elems = G.elements
    return elems, len(elems)


def conjugacy_classes(G: PermGroup) -> list[tuple[Perm, int]]:
    return G.classes


def class_power(G: AnyGroup, C: ClassLabel, a: int) -> ClassLabel:
    if a < 1:
        raise ValueError("exponent must be positive")
    if isinstance(C, SnType):
        return SnType(cycle_type_power(C.ct, a))
    if isinstance(C, AnType):
        return an_label_of(power(C.representative, a))
    if isinstance(C, Explicit):
        if not isinstance(G, PermGroup):
            raise ValueError("explicit class needs a permutation group")
        return G.label_of(power(G.representative(C), a))
    raise OrderOnly(f"class {C} carries only its element order")


def power_closure(G: AnyGroup, classes: Iterable[ClassLabel]) -> set[ClassLabel]:
    """All C^a for C in ``classes`` and a >= 1."""
    out: set[ClassLabel] = set()
    for C in classes:
        order = C.order
        if isinstance(C, SnType):
            exps: Iterable[int] = _divisors(order)  # C^a depends only on gcd(a, order)
        else:
            exps = range(1, order + 1)
        for a in exps:
            out.add(class_power(G, C, a))
    return out


def _divisors(n: int) -> list[int]:
    from .algebra import divisors

    return divisors(n)


def is_rational_class_set(G: AnyGroup, classes: Sequence[ClassLabel]) -> bool:
    """Closure of the union under m-th powers, m prime to the lcm of the orders."""
    classes = list(classes)
    if not classes:
        return True
    target = set(classes)
    L = reduce(math.lcm, (C.order for C in classes), 1)
    for C in classes:
        for m in range(1, L + 1):
            if math.gcd(m, L) == 1 and class_power(G, C, m) not in target:
                return False
    return True


# ---------------------------------------------------------------------------
# g-completeness and subgroups


@dataclass(frozen=True)
class GCompleteness:
    complete: bool
    witness: tuple[Perm, ...] | None = None
    tuples_checked: int = 0


def is_g_complete(G: PermGroup, classes: Sequence[ClassLabel]) -> GCompleteness:
    """Whether no proper subgroup of G meets every class in ``classes``.

    Equivalent test: every tuple (x_1, ..., x_s) with x_i in C_i generates G.
    Up to simultaneous conjugation the entry from the largest class is fixed
    to its representative and the next entry runs over orbit representatives
    of the fixed element's centralizer.  Tuples are visited in a fixed order
    and the first non-generating one is returned as witness.
    """
    idxs = [G.class_index_of_label(C) for C in classes]
    uniq = list(dict.fromkeys(idxs))
    if not uniq:
        trivial = G.order == 1
        return GCompleteness(trivial, None if trivial else (), 0)
    sizes = {i: G.classes[i][1] for i in uniq}
    order = sorted(uniq, key=lambda i: (-sizes[i], i))
    first = order[0]
    x1 = G.classes[first][0]
    members = [G.class_elements(i) for i in order[1:]]
    if members:
        cent = G.centralizer(x1)
        seen: set[Perm] = set()
        reps = []
        for y in members[0]:
            if y in seen:
                continue
            reps.append(y)
            for c in cent:
                seen.add(conjugate(y, c))
        members[0] = reps
    checked = 0
    for rest in itertools.product(*members):
        checked += 1
        tup = (x1,) + rest
        if not G.generated_by(tup):
            by_idx = dict(zip(order, tup))
            return GCompleteness(False, tuple(by_idx[i] for i in uniq), checked)
    return GCompleteness(True, None, checked)


def enumerate_subgroups(G: PermGroup, max_order: int = 360) -> list[frozenset]:
    """All subgroups, as frozensets of elements, sorted by size.

    Every subgroup is a join of cyclic subgroups, so joining the current layer
    with each cyclic subgroup until nothing new appears finds them all.
    """
    if G.order > max_order:
        raise CapExceeded(f"subgroup enumeration limited to order <= {max_order}")
    cyclics: dict[frozenset, Perm] = {}
    for g in G.elements:
        H = frozenset(kernels.closure([g], G.degree))
        cyclics.setdefault(H, g)
    found: dict[frozenset, tuple[Perm, ...]] = {H: (g,) for H, g in cyclics.items()}
    layer = dict(found)
    while layer:
        nxt: dict[frozenset, tuple[Perm, ...]] = {}
        for H, gens in layer.items():
            for Z, g in cyclics.items():
                if Z <= H:
                    continue
                new_gens = gens + (g,)
                J = frozenset(kernels.closure(list(new_gens), G.degree))
                if J not in found and J not in nxt:
                    nxt[J] = new_gens
        found.update(nxt)
        layer = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def is_g_complete_by_subgroups(G: PermGroup, classes: Sequence[ClassLabel]) -> bool:
    """Oracle: fails iff some proper subgroup meets every class."""
    idxs = {G.class_index_of_label(C) for C in classes}
    for H in enumerate_subgroups(G):
        if len(H) == G.order:
            continue
        hit = {G.class_index(h) for h in H}
        if idxs <= hit:
            return False
    return True


# ---------------------------------------------------------------------------
# Searches


def find_class_set_cor53(G: PermGroup, max_r: int = 4):
    """Smallest set of nontrivial classes that generates G and whose power
    closure misses some class C.  Returns (classes, C) or None."""
    labels = G.class_labels()
    nontrivial = [i for i, (rep, _) in enumerate(G.classes) if rep != G.identity]
    for r in range(1, max_r + 1):
        for subset in itertools.combinations(nontrivial, r):
            if not _classes_generate(G, subset):
                continue
            chosen = [labels[i] for i in subset]
            closure = power_closure(G, chosen)
            for j in nontrivial:
                if labels[j] not in closure:
                    return chosen, labels[j]
    return None


def _classes_generate(G: PermGroup, idxs: Sequence[int]) -> bool:
    gens = [G.classes[i][0] for i in idxs]
    if G.generated_by(gens):
        return True
    sub = set(kernels.closure(gens, G.degree))
    for i in idxs:
        for g in G.class_elements(i):
            if g not in sub:
                gens.append(g)
                sub = set(kernels.closure(gens, G.degree))
                if len(sub) == G.order:
                    return True
    return len(sub) == G.order


@dataclass(frozen=True)
class RealTuple:
    g0: Perm
    elements: tuple[Perm, ...]
    product_is_one: bool
    generates: bool
    g0_is_involution: bool
    symmetric: bool
    all_nontrivial: bool

    @property
    def as_tuple(self) -> tuple[Perm, ...]:
        return (self.g0,) + self.elements

    @property
    def verified(self) -> bool:
        return (self.product_is_one and self.generates and self.g0_is_involution
                and self.symmetric and self.all_nontrivial)


def verify_real_tuple(G: PermGroup, g0: Perm, hs: Sequence[Perm]) -> RealTuple:
    e = G.identity
    prod = reduce(mul, hs, e)
    R = len(hs)
    sym = R % 2 == 0 and all(
        hs[R - 1 - i] == mul(mul(g0, inverse(hs[i])), g0) for i in range(R // 2)
    )
    return RealTuple(
        g0=g0,
        elements=tuple(hs),
        product_is_one=prod == e,
        generates=G.generated_by(list(hs)) if hs else G.order == 1,
        g0_is_involution=g0 != e and mul(g0, g0) == e,
        symmetric=sym,
        all_nontrivial=all(h != e for h in hs) and g0 != e,
    )


def real_tuple_construction(G: PermGroup) -> RealTuple:
    """Build (g0, h_1, ..., h_{4r-2}) with h_1...h_R = 1, <h> = G, g0 an
    involution and h_{R+1-i} = g0 h_i^-1 g0."""
    e = G.identity
    involution = next((g for g in G.elements if g != e and mul(g, g) == e), None)
    if involution is None:
        raise NoInvolution(f"{G.name} has odd order")
    gs = [involution]
    span = set(kernels.closure(gs, G.degree))
    for g in G.generators:
        if len(span) == G.order:
            break
        if g not in span and g != e:
            gs.append(g)
            span = set(kernels.closure(gs, G.degree))
    # g_{r+1}, ..., g_{2r-1} = g_r^-1, ..., g_2^-1
    full = gs + [inverse(g) for g in reversed(gs[1:])]
    g0 = involution
    first_half = [mul(mul(g0, inverse(g)), g0) for g in reversed(full)]
    return verify_real_tuple(G, g0, first_half + full)
