"""Exact distance signatures of incidence graphs of affine resolvable designs."""

from affsig.designs import (Design, DesignError, DesignParams, build_affine_geometry,
                            build_hadamard_paley, build_hadamard_sylvester,
                            hadamard_to_affine_design, incidence_matrix, validate_affine)
from affsig.exact_linalg import IntPolynomial, Signature, char_poly, det_exact, inertia
from affsig.spectra import (signature_from_factors, theorem1_signature, theorem2_charpoly,
                            verify_design)

__version__ = "0.1.0"
