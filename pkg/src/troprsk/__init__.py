"""Exact tropical and combinatorial RSK machinery.

Row insertion, RSK correspondences and their inverses, the Schuetzenberger
involution and birational affine Weyl group actions, all evaluated exactly
over positive rationals or over the max-plus semifield.
"""

from .algebra import (
    MAXPLUS,
    RATIONAL,
    Scalar,
    TransportMatrix,
    get_algebra,
    make_maxplus,
    make_positive_rational,
    min_plus_dual,
)
from .tableau import TableauContent

__version__ = "0.1.0"

__all__ = [
    "MAXPLUS",
    "RATIONAL",
    "Scalar",
    "TableauContent",
    "TransportMatrix",
    "get_algebra",
    "make_maxplus",
    "make_positive_rational",
    "min_plus_dual",
]
