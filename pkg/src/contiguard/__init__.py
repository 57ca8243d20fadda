"""Contiguous boundary guarding of simple polygons with exact rational geometry."""
from .bounds import (
    ConstructionFailed, EmptyArc, chain_cover, comb_polygon, comb_polygon_odd,
    combinatorial_cover, lemma1_configuration,
)
from .exact import compute_extensions, compute_F, compute_Q, compute_S, exact_guarding
from .geometry import (
    BoundaryArc, BoundaryPoint, DegenerateRay, DuplicateVertex, GeometryError, InvalidPolygon,
    Overlap, Point, PointOutsidePolygon, Polygon, SelfIntersection, TooFewVertices, locate,
    orientation, point, ray_first_hit, segment_intersection, validate_polygon,
)
from .greedy import Guard, GuardSet, choose_guard_position, farthest_coverable, greedy_guarding
from .verify import reference_minimum, verify_guarding, visibility_oracle_check
from .visibility import (
    EmptyRegion, MultipleComponents, Region, covering_region, covers, kernel,
    region_intersection, sees, visibility_polygon,
)

__all__ = [
    "BoundaryArc", "BoundaryPoint", "ConstructionFailed", "DegenerateRay", "DuplicateVertex",
    "EmptyArc", "EmptyRegion", "GeometryError", "Guard", "GuardSet", "InvalidPolygon",
    "MultipleComponents", "Overlap", "Point", "PointOutsidePolygon", "Polygon", "Region",
    "SelfIntersection", "TooFewVertices", "chain_cover", "choose_guard_position",
    "comb_polygon", "comb_polygon_odd", "combinatorial_cover", "compute_F", "compute_Q",
    "compute_S", "compute_extensions", "covering_region", "covers", "exact_guarding",
    "farthest_coverable", "greedy_guarding", "kernel", "lemma1_configuration", "locate",
    "orientation", "point", "ray_first_hit", "reference_minimum", "region_intersection",
    "sees", "segment_intersection", "validate_polygon", "verify_guarding",
    "visibility_oracle_check", "visibility_polygon",
]
