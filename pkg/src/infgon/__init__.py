"""Workbench for tagged-arc combinatorics of punctured disks with infinitely
many marked points, the symbolic calculus of the attached infinite type-D
categories, and a finite type-D oracle that cross-checks both."""

from .disk import INF, DiskModel, DomainError, MarkedPoint
from .arcs import TaggedEdge, crossing_number, elementary_moves_from, translate
from .category import Indecomposable, ar_translate, compatible, ext_sum_dim, phi, phi_inverse
from .triangulation import Triangulation, fan, is_mutable, mutate

__all__ = [
    "INF",
    "DiskModel",
    "DomainError",
    "MarkedPoint",
    "TaggedEdge",
    "crossing_number",
    "elementary_moves_from",
    "translate",
    "Indecomposable",
    "ar_translate",
    "compatible",
    "ext_sum_dim",
    "phi",
    "phi_inverse",
    "Triangulation",
    "fan",
    "is_mutable",
    "mutate",
]
