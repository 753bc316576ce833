"""Exact distinct-distance counting on planar lattices."""

from latdist._core import (  # noqa: F401
    Configuration,
    Lattice,
    Point,
    central_hex_number,
    conjecture_constant,
    count_representable,
    disk_distance_overestimate,
    disk_point_count,
    disk_sq_radius_for_points,
    distinct_distances,
    distinct_distances_hex,
    distinct_distances_square,
    find_witness,
    heuristic_ratio,
    hex_array,
    known_witness_pairs,
    landau_ramanujan,
    loeschian_constant,
    lower_bound_g,
    parse_configuration,
    sq_disk,
    sq_norm,
    square_array,
    table1_csv,
    table2_csv,
    theorem_gaps,
    tri_disk,
    tri_norm,
)

__all__ = [
    "Configuration",
    "Lattice",
    "Point",
    "central_hex_number",
    "conjecture_constant",
    "count_representable",
    "disk_distance_overestimate",
    "disk_point_count",
    "disk_sq_radius_for_points",
    "distinct_distances",
    "distinct_distances_hex",
    "distinct_distances_square",
    "find_witness",
    "heuristic_ratio",
    "hex_array",
    "known_witness_pairs",
    "landau_ramanujan",
    "loeschian_constant",
    "lower_bound_g",
    "parse_configuration",
    "sq_disk",
    "sq_norm",
    "square_array",
    "table1_csv",
    "table2_csv",
    "theorem_gaps",
    "tri_disk",
    "tri_norm",
]
