"""Finite ultrametric spaces: representing trees, minimum spanning paths,
special-class tests and Hausdorff distance, all with exact arithmetic."""

from .classify import (
    ClassReport,
    all_msts_are_paths,
    classify,
    in_class_R,
    in_class_U,
    is_injective_labeling,
    is_strictly_binary,
    path_criterion_injective,
    path_criterion_strictly_binary,
)
from .core import (
    UltrametricSpace,
    Weight,
    as_weight,
    diameter,
    format_weight,
    multispectrum,
    set_distance,
    spectrum,
    validate_ultrametric,
)
from .errors import UltrametricError
from .generate import GeneratorSpec, generate_space, space_from_nested
from .hausdorff import bxy, hausdorff, hausdorff_oracle, hausdorff_via_path
from .io import export_tree_dot, load_space, parse_space, serialize_space
from .msp import (
    SpanningPath,
    SpanningTree,
    balls_from_path,
    enumerate_all_msts,
    eq4_distribution,
    kruskal_mst,
    max_edge_distance,
    msp_greedy,
    msp_tree_guided,
    verify_min_spanning_path,
)
from .tree import (
    Ball,
    RepresentingTree,
    ballean,
    build_representing_tree,
    diametrical_partition,
    is_complete_multipartite,
    level_graph,
    tree_distance,
)

__version__ = "0.1.0"
