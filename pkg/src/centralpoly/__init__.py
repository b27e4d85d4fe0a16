"""Central polynomials of Grassmann algebras over fields of characteristic 0 or p > 2.

Exact arithmetic in the free algebra and in (truncated) Grassmann algebras,
normal forms modulo T^(3), generic-evaluation verdicts, separating
substitutions and bounded-degree T-space computations.
"""

from .canon import SSCombination, SSElement, T3, T3_PLUS_XP, classify, normalize, venkova_compare
from .errors import (
    CentralPolyError, CharacteristicMismatch, DivisionByZero, Incomparable, NotInM, NotInMPrime,
    NotInvertible, ParseError, ResourceLimit, TruncationMismatch, TypeMismatch, UnitInNonunitary,
    ZeroPolynomial,
)
from .exterior import DenseGrassmann, GrassmannElement, blade
from .field import QQ, Field, ModP, SymPoly
from .freealg import FreePoly, commutator, evaluate, multihomogeneous_components, substitute, x
from .generic import CENTRAL, IDENTITY, NEITHER, find_certificate, generic_image, verdict
from .parse import parse_grassmann, parse_poly
from .tspace import builtin_generators, central_search, member, span_at_type
from .witness import enumerate_m, enumerate_mprime, m_fact_witness, mprime_witness

__all__ = [
    "CENTRAL", "IDENTITY", "NEITHER", "QQ", "T3", "T3_PLUS_XP",
    "CentralPolyError", "CharacteristicMismatch", "DenseGrassmann", "DivisionByZero", "Field",
    "FreePoly", "GrassmannElement", "Incomparable", "ModP", "NotInM", "NotInMPrime",
    "NotInvertible", "ParseError", "ResourceLimit", "SSCombination", "SSElement", "SymPoly",
    "TruncationMismatch", "TypeMismatch", "UnitInNonunitary", "ZeroPolynomial",
    "blade", "builtin_generators", "central_search", "classify", "commutator", "enumerate_m",
    "enumerate_mprime", "evaluate", "find_certificate", "generic_image", "m_fact_witness", "member",
    "mprime_witness", "multihomogeneous_components", "normalize", "parse_grassmann", "parse_poly",
    "span_at_type", "substitute", "venkova_compare", "verdict", "x",
]
