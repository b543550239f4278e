#!/usr/bin/env python3
"""Walk the three-point running example through the whole toolchain."""

from preord.alexandroff import is_T0, min_open, preorder_to_space
from preord.factorization import (
    classify,
    effective_descent_cover,
    monotone_light_factorization,
    reflective_factorization,
)
from preord.pretorsion import canonical_sequence, reflect
from preord.relations import FinPreorder


def show(title: str, body: str) -> None:
    print(f"== {title}")
    print(body)
    print()


def main() -> None:
    p = FinPreorder.from_edges(3, [(0, 1), (1, 0), (1, 2)], labels=("a", "b", "c"))
    show("object", f"closure of a<->b, b->c: {p.rel.pairs()}")

    poset, unit = reflect(p)
    show(
        "partial-order reflection",
        f"classes {poset.carrier.labels}, order {poset.rel.pairs()}, "
        f"unit {unit.map.values}",
    )

    seq = canonical_sequence(p)
    show(
        "canonical sequence",
        f"torsion relation {seq.torsion_part.src.rel.pairs()} -> "
        f"object -> quotient {seq.free_part.dst.rel.pairs()}",
    )

    flags = classify(unit)
    show(
        "classification of the unit",
        "\n".join(
            f"  {name}: {getattr(flags, name)}"
            for name in (
                "fully_faithful",
                "regular_epi",
                "in_E",
                "in_M",
                "in_E_bar",
                "in_M_star",
                "effective_descent",
            )
        ),
    )

    refl = reflective_factorization(unit)
    light = monotone_light_factorization(unit)
    show(
        "factorizations of the unit",
        f"reflective middle: {refl.mid.carrier.labels}\n"
        f"monotone-light middle: {light.mid.carrier.labels}",
    )

    total, projection = effective_descent_cover(p)
    show(
        "effective-descent cover",
        f"{total.size} elements over {p.size}; sample labels "
        f"{total.carrier.labels[:3]} ...; projection surjective: "
        f"{projection.is_surjective()}",
    )

    space = preorder_to_space(p)
    show(
        "topology",
        f"minimal opens: {[sorted(min_open(space, x)) for x in range(space.size)]}; "
        f"T0: {is_T0(space)}",
    )


if __name__ == "__main__":
    main()
