"""kdeform: exact symbolic engine for kappa-deformed orthogonal Hopf algebras.

The package constructs deformed inhomogeneous orthogonal Hopf algebras for an
arbitrary rational metric g and deformation vector tau, machine-checks their
Hopf-algebra structure, expands Drinfeld twists, derives the induced
star-commutator algebras on kappa-Minkowski coordinates, and classifies the
resulting four-dimensional solvable Lie algebras.
"""

__version__ = "0.1.0"
