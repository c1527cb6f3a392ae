"""Monic Groebner bases in free algebras over commutative coefficient rings.

Division by relation sets with leading coefficient 1 works over any
commutative ring, and the overlap termination criterion certifies such a
set as a Groebner basis of the ideal it generates.  On top of that sit
normal-word enumeration, ordered-product (PBW) basis verdicts,
coefficient base change, best-effort completion, and the transfer of a
presentation to its leading-homogeneous presentations.
"""

from .rings import (Ring, RingElement, ZZ, QQ, Zmod, LaurentZ, arith, is_unit,
                    invert_unit, format_coeff, parse_coeff, RingMismatchError,
                    NonUnitError)
from .words import (Word, concat, degree, subword_occurrences, word_overlaps,
                    format_word)
from .orders import (GradedLexOrder, EtLexOrder, MonomialOrder, abelianize,
                     natural_grlex)
from .polynomials import (NcPoly, Term, from_terms, normalize, zero, one,
                          monomial, ZeroPolynomialError)
from .reduction import (Reducer, ReductionResult, TraceStep, divide,
                        normal_form, reduces_to_zero, is_normal,
                        NonMonicError, UnitRelationError)
from .groebner import (Overlap, OverlapRecord, GBReport, CompletionResult,
                       is_lm_reduced, interreduce_lm, enumerate_overlaps,
                       overlap_element, check_gb, membership, monicize,
                       try_complete, base_change, map_coeff,
                       UncertifiedBasisError)
from .pbw import (normal_words, count_normal_words, pbw_verdict, PbwVerdict,
                  decomposition_oracle, DecompositionReport, words_up_to_degree)
from .lh import (lh_presentation, LhPresentation, check_theorem_3_3,
                 Theorem33Report, check_lemma_3_2, Lemma32Report, N_GRADE,
                 B_GRADE)
from .presentation import (Presentation, parse_presentation,
                           format_presentation, parse_poly, ParseError)
from . import presets

__all__ = [name for name in dir() if not name.startswith("_")]
