"""Exact computations with root systems of finite and affine type:
parabolic partial-sum decompositions, weights of highest weight modules via
Minkowski differences, rational convex hulls, 212-closed subsets and weak
faces, and Chevalley structure constants with right-normed Lie words.
"""

from .cartan import CartanData, LieType, build_cartan, marks, parse_type, subsystem
from .errors import RootspaceError
from .roots import (RootSystem, WeylElement, generate_affine_window,
                    generate_finite, height, height_I, root_system,
                    unit_I_height_set, weyl_group)
from .psp import PspDecomposition, decompose, one_step, verify
from .weights import (HighestWeight, ModuleSpec, WeightSetWindow,
                      integrability, integrable_weights, minimal_generators,
                      weights_of_module)
from .polyfaces import (Polyhedron, all_face_sets, exposed_face,
                        fundamental_weights, hull, is_maximizer,
                        smallest_face_containing, standard_functional)
from .combfaces import (AmbientSet, FaceDescriptor, affine_lift,
                        affine_212_equivalence_check, classify, closure_212,
                        enumerate_212, is_212_closed, is_weak_face_bounded,
                        realize, roots_ambient, weights_ambient)
from .liewords import (LieWord, StructureTable, build_constants, evaluate,
                       verify_spanning)

__version__ = "1.0.0"
