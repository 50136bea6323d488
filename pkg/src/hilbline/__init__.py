"""Exact computations with fat points supported at the origin of the affine line."""
from .errors import (
    BudgetExceeded, HilbError, MissingImageError, NotLocalError, NotSymmetricError,
    PolySyntaxError, PreconditionError, RingMismatchError, UnknownVariableError,
    UnsupportedRingError, VerificationError,
)
from .exactpoly import (
    GF, QQ, MonicPoly, MultiPoly, PolyRing, apply_hom, block_order, degrevlex, format_poly,
    lex, monic_divmod, parse_poly,
)
from .groebner import Ideal, QuotientRing, buchberger, ideal_contains, is_nilpotent, normal_form

__version__ = "0.1.0"
