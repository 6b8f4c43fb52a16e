"""Print the lattice vertices of K(n) and J(n) next to their trees."""

import sys

from assocpoly.ratgeom import fmt
from assocpoly.trees import bearded_word, enum_bearded, enum_trivalent, shadow_a, v_coords, word


def main(n: int = 4) -> None:
    print(f"K({n}): {len(enum_trivalent(n))} lattice vertices")
    for t in enum_trivalent(n):
        print(f"  {word(t):<24} {fmt(shadow_a(t))}")
    print(f"J({n}): {len(enum_bearded(n))} lattice vertices")
    for t in enum_bearded(n):
        print(f"  {bearded_word(t, unicode=True):<24} {fmt(v_coords(t))}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
