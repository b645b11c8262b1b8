"""Certified spectral analysis of nonnegative integer matrices.

Exact arbitrary-precision matrices, strongly-connected-component analysis,
Collatz-Wielandt interval enclosures of the spectral radius, column-sum
lower-bound certificates with an independent checker, substitution entropy,
and the shift-with-doubling example operator family.

Integers cross the boundary as Python ints, rationals as
fractions.Fraction; nothing is ever rounded.
"""

from ._perron import *  # noqa: F401,F403
from ._perron import __doc__ as _core_doc  # noqa: F401
