"""Exact tools for eight-vertex Holant signatures: classification with
checkable certificates, exact partition-function evaluation, and the
gadget / Moebius machinery behind both."""

from .numeric import Cyclo8, Rational, Scalar, scalar, parse_scalar  # noqa: F401
from .signatures import Signature, EightVertexSig  # noqa: F401
