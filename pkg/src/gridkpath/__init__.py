"""Paths and cycles of prescribed length in grid graphs."""

from .caves import Cave, contract, find_convex_contractible_cave, is_contractible, is_convex, iter_caves, next_cave
from .cycles import (
    ShrinkBudget,
    cycle_exists,
    find_cycle,
    longest_cycle,
    shrink_cycle,
    shrink_cycle_solid,
    staircase_solid_grid,
    subgrid_for_k,
)
from .errors import *  # noqa: F401,F403
from .grid import (
    Color,
    CycleSeq,
    Diagnostics,
    EdgeDir,
    PathSeq,
    RectGrid,
    SolidGrid,
    color,
    from_json,
    is_monotone,
    is_solid,
    monotone_shortest_path,
    shortest_len,
    validate_cycle,
    validate_path,
)
from .grid3d import Grid3D, cycle_exists_3d, find_cycle_3d, find_path_3d, map_F, map_F_inv, path_exists_3d
from .paths import find_contractible_cave, find_path, initial_path_for_k, longest_path, path_exists, shrink_path

__version__ = "0.1.0"
