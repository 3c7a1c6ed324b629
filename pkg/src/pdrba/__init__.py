"""Para-differential Rota-Baxter algebras: bracketed words, the monomial
order, the rewriting systems of types I, II and III, a Groebner-Shirshov
audit, the explicit free algebra, and Hurwitz series over small fixtures."""

from .free import P_X, d_X, diamond, is_drbw, theta_check
from .gsb import audit, enumerate_ambiguities
from .order import compare_zdp
from .parse import parse, parse_word
from .poly import Poly, to_text
from .rewrite import AlgebraConfig, normal_form, type_I, type_II, type_III
from .words import Word, concat, letter, to_str

__version__ = "0.1.0"

__all__ = [
    "AlgebraConfig", "P_X", "Poly", "Word", "audit", "compare_zdp", "concat", "d_X",
    "diamond", "enumerate_ambiguities", "is_drbw", "letter", "normal_form", "parse",
    "parse_word", "theta_check", "to_str", "to_text", "type_I", "type_II", "type_III",
]
