"""PGL2(F_q) acting on monic irreducible polynomials: classification of
group elements, the rational transformations generating every invariant,
and exact invariant counts with independent brute-force oracles."""

from .fields import (ExtElt, ExtSpec, Felt, FieldSpec, element_of_mult_order,
                     embed, frobenius_q, is_square, make_ext, make_field,
                     smallest_nonsquare, try_descend)
from .polynomials import (Poly, compose, derivative, divides, divrem,
                          enumerate_monic_irreducibles, gcd, is_irreducible,
                          monic_polys, monicize, pow_mod, reciprocal, to_text)
from .projective import (IDENTITY, TYPE1, TYPE2, TYPE3, TYPE4, Mat2, ProjMat,
                         ReducedForm, TypeInfo, all_classes, classify,
                         element_of_order, power_closed_form, proj_canonical,
                         proj_eq, reduce, reduced_type1, reduced_type2,
                         reduced_type3, reduced_type4, sigma_product)
from .action import (F_poly, act, criterion_invariant, group_invariant,
                     invariant_set, is_cyclic, is_invariant, proj_act,
                     quadratic_invariants, star_act, subgroup_closure)
from .rational import (QConstruction, RationalMap, decompose,
                       generate_invariants, q_map, substitute_mobius,
                       transform)
from .counting import (CountParams, asymptotic_ratio, count_factors_of_degree,
                       count_invariants_bruteforce, count_invariants_formula,
                       count_params, count_via_criterion, euler_phi,
                       mobius_inversion, moebius_mu, principal_character,
                       quadratic_factor_of_F)

__version__ = "0.1.0"
