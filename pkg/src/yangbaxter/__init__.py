"""Exact construction and verification of Yang-Baxter R-matrices.

The library works over the field of rational functions in the deformation
parameter q, with no floating point anywhere.  Solutions are built from
associative-triple data (permutation elements, canonical elements of paired
subspaces, diagonal Hecke solutions) and every construction is verified by
exhaustive tensor computation.
"""

from yangbaxter.algebra import (Algebra, BilinearForm, LinearMap, Subspace,
                                diagonal_algebra, direct_sum, direct_sum_many,
                                dual_basis, mat_algebra, solve_linear,
                                tensor_product)
from yangbaxter.bd import (BDResult, BDTriple, IdempotentData, assemble_bd_R,
                           bd_canonical_element, build_big_triple,
                           classical_limit, cremmer_gervais, diagonal_basis,
                           positive_roots, prec_pairs, validate_bd)
from yangbaxter.checks import (CheckReport, conventional_hecke_report,
                               find_hecke_constant, hecke_obstruction,
                               is_cybe, is_hecke, is_unitary, is_ybe)
from yangbaxter.kernel import BACKEND as KERNEL_BACKEND
from yangbaxter.scalars import (OMEGA, OMEGA_INV, ONE, Q, QINV, ZERO, RatQ,
                                derivative_at_one, eval_q, format_scalar,
                                laurent_terms, parse_scalar, q_power, ratq)
from yangbaxter.solutions import (DiagonalHeckeParams, TwistF, diagonal_hecke,
                                  drinfeld_jimbo, drinfeld_jimbo_recursive,
                                  hecke_coefficients, invert_tensor2, twist)
from yangbaxter.spectral import (SpectralPoly, SpectralTensor2, baxterize,
                                 hecke_flipped_inverse, spectral_ybe,
                                 unitary_deform_yang, yang_matrix)
from yangbaxter.tensors import (Tensor2, Tensor3, embed12, embed13, embed23,
                                tensor2, unit_tensor2, vec_tensor2)
from yangbaxter.triples import (AssocTriple, PairedSubspaces, SplitReport,
                                TripleReport, assemble_r_matrix,
                                canonical_pair_element, check_pair_split,
                                compatibility_subspaces, permutation_element,
                                projectors, triple_product_trivial, triple_sum,
                                triple_transpose, validate_triple)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
