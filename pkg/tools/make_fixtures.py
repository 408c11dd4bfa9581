"""Regenerate the bundled descriptor fixtures from the builders."""

from __future__ import annotations

import json
from pathlib import Path

from galois_param.algebra import RatPoly, cyclotomic
from galois_param.criteria import (
    baby_monster_descriptor,
    co1_descriptor,
    e2prime_descriptor,
    e3_descriptor,
    e3prime_descriptor,
    j2_descriptor,
    mestre_descriptor,
    monster_descriptors,
    psl2_descriptor,
    thompson_descriptor,
)
from galois_param.extensions import (
    builder_cubic_prop34,
    builder_cyclic_cyclotomic,
    builder_morse,
    builder_quadratic_sqrt,
    builder_trinomial,
)

OUT = Path(__file__).resolve().parents[1] / "src" / "galois_param" / "fixtures"


def main() -> None:
    m1, m2 = monster_descriptors()
    phis = [cyclotomic(n) for n in (3, 4, 5)]
    fixtures = {
        "morse_y5_plus_y": builder_morse(RatPoly([0, 1, 0, 0, 0, 1])),
        "trinomial_s5": builder_trinomial(5, 2, 1, 2),
        "trinomial_s7": builder_trinomial(7, 2, 2, 3),
        "e3_s6": e3_descriptor(6),
        "mestre_a7": mestre_descriptor(7),
        "e2prime_a6": e2prime_descriptor(6, 1),
        "e2prime_a5": e2prime_descriptor(5, 2),
        "e3prime_a8": e3prime_descriptor(8),
        "thompson_2a3a19a": thompson_descriptor(),
        "baby_monster_2c3a55a": baby_monster_descriptor(),
        "j2_5a5b7a": j2_descriptor(),
        "monster_2a3b29a": m1,
        "monster_2_3_71": m2,
        "co1_3a5c13a": co1_descriptor(),
        "psl2_5_2a3a5a": psl2_descriptor(5, ["2A", "3A", "5A"], True),
        "psl2_5_2a5a5b": psl2_descriptor(5, ["2A", "5A", "5B"], False),
        "psl2_5_3a5a5b": psl2_descriptor(5, ["3A", "5A", "5B"], False),
        "psl2_7_2a3a7a": psl2_descriptor(7, ["2A", "3A", "7A"], True),
        "psl2_7_3a7a7b": psl2_descriptor(7, ["3A", "7A", "7B"], False),
        "cyclotomic_z5": builder_cyclic_cyclotomic(5),
        "sqrt_t": builder_quadratic_sqrt(RatPoly([0, 1])),
        "sqrt_t2_plus_1": builder_quadratic_sqrt(RatPoly([1, 0, 1])),
        "sqrt_phi5": builder_quadratic_sqrt(cyclotomic(5)),
        "sqrt_phi3_phi4_phi5": builder_quadratic_sqrt(phis[0] * phis[1] * phis[2], factors=phis),
        "sqrt_t2m2_t2m3": builder_quadratic_sqrt(RatPoly([-2, 0, 1]) * RatPoly([-3, 0, 1]),
                                                 factors=[RatPoly([-2, 0, 1]), RatPoly([-3, 0, 1])]),
        "cubic_y3_t2y_t2": builder_cubic_prop34(),
    }
    OUT.mkdir(parents=True, exist_ok=True)
    for name, E in fixtures.items():
        (OUT / f"{name}.json").write_text(json.dumps(E.to_wire(), indent=2) + "\n")
    print(f"wrote {len(fixtures)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
