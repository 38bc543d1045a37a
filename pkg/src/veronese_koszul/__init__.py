"""Exact Koszul homology of the square of the maximal ideal in ``k[x_1, ..., x_n]``."""
from .cycles import (CyclePair, TableauPair, expand_combination, garnir_sum, hook_cycle,
                     squarefree_Z_product, straighten, strand_span_check, tableau_generators,
                     z_cycle)
from .glaction import (ElementaryOperator, act, decomposition_verify, gl_closure, gl_module_dim,
                       homology_character, isotypic_verify)
from .koszul import (KoszulElement, boundary_matrix, class_is_nonzero, component_basis,
                     differential, homology_dim, is_boundary, is_cycle,
                     lowest_strand_span_check, wedge_multiply)
from .linalg import GF, QQ, Echelon, ExactField, SparseMatrix, field_of, in_span, kernel_basis, rank
from .matching import (char2_witness, matching_complex, petersen_check, reduced_homology,
                       squarefree_slice_compare)
from .partitions import (FrobeniusForm, NonSymmetricError, Partition, frobenius, from_frobenius,
                         lr_selfconjugate_check, schur_dim, schur_expand, schur_poly,
                         self_conjugate_enum)

__version__ = "0.1.0"
