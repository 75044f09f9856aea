"""crystalkit: exact combinatorics of crystals, MV polytopes and quiver orders."""

from .binfty import (CrystalElt, LusztigDatum, apply_e_string, b_rs,
                     enumerate_weight, parse_estring, string_param,
                     transition, unit)
from .frobmono import ZERO, eta_p, fr, fr_split, xi_p
from .orders import (Verdict, leq_i, leq_lex, leq_pol_via_words,
                     leq_stab_check, leq_str_check, moves)
from .polytopes import MVPolytope, bz_data, leq_pol, minkowski_sum, mv_polytope
from .quiverdeg import (cone_membership, degeneration_leq, delta, delta_scan,
                        euler_form, ext_dim, flag_bundle_dim, hom_dim,
                        orbit_dim)
from .rootsys import CartanData, cartan_data

__version__ = "0.1.0"

__all__ = [
    "CartanData", "cartan_data", "CrystalElt", "LusztigDatum", "unit",
    "apply_e_string", "b_rs", "enumerate_weight", "parse_estring",
    "string_param", "transition", "MVPolytope", "mv_polytope", "bz_data",
    "leq_pol", "minkowski_sum", "Verdict", "leq_lex", "leq_i",
    "leq_pol_via_words", "leq_str_check", "leq_stab_check", "moves",
    "ZERO", "fr", "fr_split", "xi_p", "eta_p", "euler_form", "hom_dim",
    "ext_dim", "degeneration_leq", "orbit_dim", "flag_bundle_dim", "delta",
    "delta_scan", "cone_membership", "__version__",
]
