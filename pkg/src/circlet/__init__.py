"""Even 2-complexes, circlet decompositions and Euler covers."""

from .complex import (ComplexError, DegreeReport, DomainError, InvalidComplexError,
                      NotEvenError, NotStronglyConnectedError, ParseError, TwoComplex,
                      degrees, is_connected, is_even, is_strongly_connected, parse_complex,
                      serialize_complex, subcomplex)
from .cover import (Census, CensusLimitError, CombinatorialSurface, CoverMap,
                    InvalidAssignmentError, SurfaceType, assignment_count, build_cover,
                    canonical_assignment, census, classify, classify_components, components,
                    enumerate_matchings, euler_characteristic, is_orientable, surface_type,
                    verify_cover)
from .generators import (cross_polytope_skeleton, figure2_complex, hypercube_skeleton,
                         pinched_sphere, platonic_circlets, simplex_skeleton,
                         simplex_sphere_decomposition, two_tetra_shared_edge)
from .gf2 import (FaceSubset, GF2Matrix, boundary_matrix, circlet_decomposition, is_circlet,
                  kernel_basis, kernel_dimension)
from .serialize import (parse_assignment, parse_surface, report_classification,
                        serialize_assignment, serialize_surface)
from .splice import SingleComponentError, euler_cover, find_splice_edge, splice

__version__ = "0.1.0"
