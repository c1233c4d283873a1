"""equilat: exact-arithmetic toolkit for lattice equable quadrilaterals."""

__version__ = "0.1.0"
