"""Exact rational associahedra K(n), multiplihedra J^a(n) and their operators.

Modules
-------
ratgeom         exact H-representations, ray exits, vertex enumeration
associahedron   K(n), boundary insertions, face decompositions, monoid product
multiplihedron  J^a(n), delta insertions and grafts, the level sweep
degeneracy      the shift map xi and the canonical degeneracies
homeo           omega, eta, radial degeneracies, rescaling maps pi and f
trees           trivalent and bearded trees, lattice points, word codecs
operadcat       tuple morphisms, index lists and the six representations
barcx           finite monoids and bar construction cell complexes
suites          seeded property suites used by ``verify`` and the tests
cli             command-line interface
"""

__version__ = "0.1.0"
