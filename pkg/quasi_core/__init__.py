from .QuasialgConfig import QuasialgConfig, DEFAULT_CONFIG
from .Errors import QuasialgError
from .Scalar import Scalar, as_scalar, root_of_unity, galois, conj, parse_scalar, discrete_log
from .FiniteGroup import FiniteGroup, GroupElement, cyclic, trivial_group, direct_product, parse_product
from .CheckReport import CheckReport
from .Cochains import (Cochain2, Cocycle3, verify_cocycle, coboundary_of, cocycle_identities_check,
                       z3_cocycle, cochain_from_function)

from .GradedQuasialgebra import (GradedQuasialgebra, Element, verify_quasiassociativity,
                                 left_inverse, right_inverse, is_unit, is_strongly_graded,
                                 is_quasicrossed_product, mu, infer_cocycle, tables_equal)
from .DeformedGroupAlgebra import (DeformedGroupAlgebra, build, group_algebra, complex_algebra,
                                   quaternions, octonions, clifford, kfz3, as_system)
from .QuasicrossedSystem import (AssociativeAlgebra, QuasicrossedSystem, verify_system,
                                 build_product, extract_system, are_equivalent_systems,
                                 is_coboundary, are_equivalent_products)
from .CayleyDickson import (Involution, is_strong_involution, cd_double_algebra,
                            cd_double_cochain, alpha_doubling_check)
from .MatrixConstructions import (deformed_matrices, triangular_deformed, chessboard_matrices,
                                  antiassoc_division, mat_over_delta)
from .GradedModule import (GradedModule, verify_left_module, verify_right_module, verify_bimodule,
                           is_graded_submodule)
from .StructureAnalyzer import (Subspace, centralizer, center, is_central, ideal_generated_by,
                                is_simple, is_central_simple, is_semisimple_associative)
