"""Real fields of moduli versus fields of definition for finite subgroups of PGL3(C).

Everything is exact: cyclotomic arithmetic, projective matrices, group
closures, resultants.  Floating point only appears in renderings and in
cross-checks.
"""

from .cyclotomic import (CycloElement, CycloField, conj, element_from_json, element_to_json, embed,
                         field, is_real, parse_element, re_im, to_complex)
from .curves import (HomogeneousPolynomial, QuinticFamilyMember, aut_contains, aut_sigma_compat, dihedral10,
                     fermat, format_polynomial, is_invariant, moduli_obstruction_quintic, polynomial_from_json, polynomial_to_json,
                     resultant_x, sigma_curve, smoothness_check_quintic, transform)
from .descent import (CyclicNormalForm, DescentVerdict, RealModelParams, cyclic_normal_form,
                      definable_cyclic, exists_real_charpoly_lift, real_model_cyclic, real_model_dihedral,
                      verdict_cyclic, verdict_from_normal_form)
from .errors import PseudoRealError
from .finitegroup import (FiniteSubgroup, closure, find_subgroup_C3xC3, fingerprint, group_from_json,
                          group_to_json, sigma_image, subgroup_conjugacy_search)
from .primitive import build_a5, build_hessian, catalog, pseudo_real_check, real_model_a5
from .projlinear import (Matrix3, ProjElement, charpoly, charpoly_class, matrix_from_json, matrix_to_json,
                         numeric_string, proj, proj_order)

__version__ = "0.1.0"
