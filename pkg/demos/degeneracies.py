"""Walk a point of K(5) down to K(2) with the shift-map degeneracies."""

from fractions import Fraction

from assocpoly.degeneracy import d_k, xi
from assocpoly.homeo import d_s, omega
from assocpoly.multiplihedron import HALF
from assocpoly.ratgeom import fmt

point = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(7, 6), Fraction(2))
print("sigma      ", fmt(point))
print("xi(sigma)  ", fmt(xi(point)))
print("omega      ", fmt(omega(HALF, point)))
p = q = point
while len(p) > 2:
    p, q = d_k(1, p), d_s(1, q)
    print(f"K({len(p)}): shift {fmt(p):<22} radial {fmt(q)}")
