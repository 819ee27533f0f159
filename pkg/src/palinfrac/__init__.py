"""Exact palindromic continued fractions and perfect state transfer.

Layers, from exact to numeric:

* :mod:`palinfrac.numeric_cf` - continued fractions of rationals,
  convergents, and the Serret palindrome criterion.
* :mod:`palinfrac.polynomial` - dense polynomials over exact rationals,
  Chebyshev families, the Pell-Abel identity.
* :mod:`palinfrac.jfraction` - J-fraction expansion of rational functions,
  interlacing detection, the palindromicity criterion.
* :mod:`palinfrac.pfraction` - general polynomial continued fractions and
  the polynomial-ring palindrome criterion.
* :mod:`palinfrac.jacobi` - symmetric tridiagonal matrices, Sturm
  bisection eigensolving, persymmetry.
* :mod:`palinfrac.pst` - perfect state transfer verification, unitary
  evolution, inverse (persymmetric) design.
"""

from .errors import PalinfracError
from .jacobi import JacobiMatrix, Spectrum
from .jfraction import JFraction
from .numeric_cf import NumericCF
from .pfraction import PFraction
from .polynomial import BigRational, Polynomial
from .pst import AmplitudeTrace, PstCertificate

__version__ = "0.1.0"

__all__ = [
    "AmplitudeTrace",
    "BigRational",
    "JFraction",
    "JacobiMatrix",
    "NumericCF",
    "PFraction",
    "PalinfracError",
    "Polynomial",
    "PstCertificate",
    "Spectrum",
    "__version__",
]
