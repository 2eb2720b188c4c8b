"""Facet-pairing triangulations of 4-simplices and their hyperbolic bookkeeping."""
from .constructions import build_cone_c, build_fig8, build_identity_double, build_k6, build_triple_t
from .core4 import (
    ExactVolume,
    FaceCycle,
    FaceSlot,
    FacetSlot,
    Gluing,
    Triangulation4,
    edge_classes,
    euler_characteristic,
    exact_volume,
    face_cycles,
    is_manifold,
    is_six_valent,
    orientability,
    validate,
    vertex_classes,
)
from .formats import FormatError, dump, dumps, load, loads
from .iso import Isomorphism, isomorphic, signature, symmetries
from .link3 import (
    EdgeCycle3,
    TetrahedralCertificate,
    Triangulation3,
    cusp_link_surface,
    cusp_surface4,
    edge_cycles3,
    tetrahedral_certificate,
    vertex_link,
    volume3,
)
from .perm import Perm, Perm4, Perm5
from .surface2 import TriangulatedSurface, classify
from .triangulation import NotClosedError, TriangulationError

__version__ = "0.1.0"
