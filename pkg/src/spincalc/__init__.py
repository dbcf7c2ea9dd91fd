"""Exact intersection calculus for moduli of spin and Prym curves.

The package verifies, in exact rational arithmetic, the divisor-class
identities, test-curve pairings, lattice facts, Grassmannian degrees and
quadratic-line-complex linear algebra behind the birational geometry of
the even-spin and Prym moduli spaces, up to the genus-8 canonical-class
decomposition and its rigidity certificate.

Everything is pure-Python ``fractions.Fraction`` arithmetic: a check
either holds exactly or fails; there are no tolerances.
"""

from .checks import DEFAULT_SEED, CheckRecord, Report, verify_all
from .curves import (CurveClass, LiftedSpinCurve, SurfacePencilSpec,
                     btilde_curve, covering_degree, curve_class, gamma_curve,
                     noether_c2, pair, pencil_curve, pushforward_to_mbar,
                     r_curve_g8, septic_pencil_curve, xi_curve)
from .kodaira import (DecompositionResult, RigidityReport,
                      canonical_decomposition_g8, rigidity_report_g8,
                      theta_rigidity_report)
from .lattices import (CsCertificate, IntegerLattice, cs_obstruction,
                       doubly_elliptic_identities, e8, hyperbolic_u,
                       lambda_identities, lambda_lattice, nikulin_lattice)
from .linecomplex import (SymmetricForm, discriminant_tangency,
                          is_singular_point, plucker_quadric_rank,
                          second_compound, solve_in_basis, symmetric_form,
                          tangency, wedge_pairs)
from .picard import (DivisorClass, ModuliSpace, brill_noether_g8,
                     canonical_class, divisor_class, format_class, mbar,
                     named_divisor, non_very_ample_g5, prym_green,
                     prym_nikulin_g6, pullback_to_prym, pullback_to_spin,
                     rbar, slope, spin_plus, sym_power_c1, theta_null,
                     twisted_hodge_c1)
from .schubert import (SchubertCycle, catalan_degree, degree,
                       grassmannian_degree, multiply, pieri, sigma,
                       vq_dimension)

__all__ = [
    "DEFAULT_SEED", "CheckRecord", "Report", "verify_all",
    "CurveClass", "LiftedSpinCurve", "SurfacePencilSpec", "btilde_curve",
    "covering_degree", "curve_class", "gamma_curve", "noether_c2", "pair",
    "pencil_curve", "pushforward_to_mbar", "r_curve_g8",
    "septic_pencil_curve", "xi_curve",
    "DecompositionResult", "RigidityReport", "canonical_decomposition_g8",
    "rigidity_report_g8", "theta_rigidity_report",
    "CsCertificate", "IntegerLattice", "cs_obstruction",
    "doubly_elliptic_identities", "e8", "hyperbolic_u", "lambda_identities",
    "lambda_lattice", "nikulin_lattice",
    "SymmetricForm", "discriminant_tangency", "is_singular_point",
    "plucker_quadric_rank", "second_compound", "solve_in_basis",
    "symmetric_form", "tangency", "wedge_pairs",
    "DivisorClass", "ModuliSpace", "brill_noether_g8", "canonical_class",
    "divisor_class", "format_class", "mbar", "named_divisor",
    "non_very_ample_g5", "prym_green", "prym_nikulin_g6",
    "pullback_to_prym", "pullback_to_spin", "rbar", "slope", "spin_plus",
    "sym_power_c1", "theta_null", "twisted_hodge_c1",
    "SchubertCycle", "catalan_degree", "degree", "grassmannian_degree",
    "multiply", "pieri", "sigma", "vq_dimension",
]

__version__ = "0.1.0"
