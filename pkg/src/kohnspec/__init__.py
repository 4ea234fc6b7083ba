"""Spectra of the Kohn Laplacian on quotients of odd spheres by finite
unitary groups: exact group catalogs, characters, invariant dimensions,
eigenvalue counting with Weyl-law verification, generating functions,
Sobolev constants, and a brute-force linear-algebra oracle."""

from .characters import CharacterValue, admissible_pairs, char_general, char_su2_closed, sphere_dim
from .errors import (
    ClosureMismatch,
    ConstraintError,
    KohnspecError,
    NonFreeAction,
    NonIntegralDimension,
    ParseError,
    SizeLimit,
    TraceLookupError,
    TruncationError,
    UnsupportedFamily,
)
from .genfun import dim_h0_polynomial, exponent, fg_coefficients, pg_polynomial, reconstruct_dims
from .group_catalog import (
    ConjugacyClass,
    QuotientGroup,
    angle,
    check_free_action,
    from_classes,
    make_binary_dihedral,
    make_binary_icosahedral,
    make_binary_octahedral,
    make_binary_tetrahedral,
    make_cyclic,
    make_cyclic_semidirect,
    make_lens,
    make_product_with_center,
    make_q_semidirect,
    make_trivial,
)
from .invariant_dims import dim_closed_form, dim_invariant, reconcile
from .oracle import build_space, invariant_dim_bruteforce, matrix_closure, oracle_check, trace_bruteforce
from .sobolev import c_group, c_pq, c_pq_squared, greens_lower_witness
from .spectrum import (
    box_eigenvalue,
    compare_spectra,
    counting_function,
    multiplicity,
    sphere_counting_table,
    weyl_constant,
    weyl_report,
    xi_bound,
)
from .cli import parse_group_spec

__version__ = "0.1.0"
