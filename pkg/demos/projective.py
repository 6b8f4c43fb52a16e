"""Cell counts of the bar filtration for small cyclic monoids."""

from assocpoly.barcx import HOPF, STRICT, build_bar, cyclic, euler

for order in (2, 3):
    for model in (STRICT, HOPF):
        bc = build_bar(cyclic(order), 5, model)
        print(f"C{order} {model:<6} counts {bc.counts()} euler {euler(bc)}")

for n in range(7):
    print(f"P^{n}: euler {euler(build_bar(cyclic(2), n))}")
