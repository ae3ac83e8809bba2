"""Arithmetic of polynomials in non-commuting variables.

Polynomials with nonzero constant term are studied through a finite
dimensional module of iterated cofactors; irreducibility, similarity,
division, gcds and factorizations reduce to linear algebra on it.
"""

from .arith import (DivisionResult, GcdResult, divmod, gcd, left_divides, left_quotient,
                    reduce_zero_constant, right_divides, right_quotient)
from .errors import (AlphabetMismatch, FieldMismatch, InfeasibleEnumeration,
                     InternalReconstructionFailure, NCFactorError, NotComonic, NotDivisible,
                     PolySyntaxError, SideMismatch, UnknownVariable, ZeroConstantTerm,
                     ZeroModule, ZeroPolynomial)
from .factor import (Factorization, atom_count, atomic_factorization, factor_zero_constant,
                     is_irreducible, is_similar, primary_components, similarity_class)
from .fields import GF, QQ, field_from_descriptor
from .freealg import (Poly, comonic_normalize, left_cofactor, right_cofactor, transpose)
from .leavitt import (LeavittElement, expansion_identity, involution, leavitt_mul,
                      parse_leavitt, verify_certificate)
from .modalg import (SubmoduleBasis, composition_series, endomorphism_ring, hom_space,
                     indecomposable_summands, is_isomorphic, is_simple, minimal_submodules,
                     spin)
from .parsing import format_poly, parse_poly
from .vmodule import (FDModule, build_v, build_w, iterated_cofactors, plain_action, star,
                      word_star)

__version__ = "0.1.0"
