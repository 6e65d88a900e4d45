"""Exact-arithmetic engine for shuffle-algebra deformations, word
quasi-symmetric functions, and Hausdorff-series coefficients."""

__version__ = "0.1.0"

from .errors import (AlphabetSizeError, CoderivationError, ConstantTermError,
                     DegreeMismatchError, EmptyWordError,
                     LeadingCoefficientError, MissingImageError, MomentError,
                     NotExpressibleError, OrderError, ParseError,
                     ShuffleHopfError)
from .exact import Poly, Rational, format_rational, integrate, parse_rational
from .freecomm import AElem, Monomial, generator, mono_mul, parse_monomial, substitute
from .lincomb import LinComb
from .tensorhopf import (EMPTY_WORD, TElem, TensorWord, concat, deconcat,
                         format_telem, generic_word, half_shuffle_left,
                         half_shuffle_right, parse_tensor_word, qshuffle,
                         shuffle, shuffle_via_descents, twisted_product,
                         word_elem, word_of_generators)
from .fps import (Series, compose, derivative, eq_series, exp_minus_one,
                  identity_series, inverse, log_one_plus, monomial_series,
                  named_series, parse_series, series, xlog_one_plus)
from .nattrans import (coder_apply, coder_bracket, coder_exp_apply, coder_log,
                       conjugate_coder, conjugate_coder_check, f_apply,
                       grading_operator_series, grading_project,
                       naturality_check, phi_apply, phi_compose_check,
                       phi_inverse_apply)
from .wqsym import (PackedWord, WElem, act, coproduct_compose_identity_holds,
                    e1, e1_closed, embed_fqsym, fqsym_shuffle, identity_word,
                    nondecreasing_words, pack, packed_words,
                    parse_packed_word, permutation_words, readback, realize,
                    wcompose, wcompose_linear, wcoproduct, wproduct)
from .hausdorff import (EulerSignature, NCPoly, eulerian_E,
                        eulerian_identity_check, format_ncpoly,
                        goldberg_coeff, goldberg_moment_coeff,
                        goldberg_signature, hausdorff_series, log_moments,
                        nc_exp, nc_log, nc_mul, reconstruct_check,
                        reconstruct_report)
