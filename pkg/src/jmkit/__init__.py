"""Exact characters, Schur-function operators and content identities for
Jucys-Murphy-type sums in the symmetric group algebra."""
from .characters import character_table, characteristic, chi, dimension, restrict_branching
from .partitions import (
    Cell,
    Partition,
    addable_cells,
    classify_skew,
    content,
    corner_cells,
    parse_partition,
    partitions_of,
    removable_pairs,
    rimhook_additions,
    rimhook_removals,
)
from .permutations import Permutation, build_R, build_T, build_V, cycle_type, parse_cycles
from .symfunc import PowerExpansion, SchurExpansion, evaluate, mult_p, skew_Dp, z_of

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memo (rimhooks, operators, characters); used for cold timings."""
    from . import characters, partitions, symfunc

    for fn in (partitions.rimhook_removals, partitions.rimhook_additions,
               partitions.partitions_of, symfunc.lhs_eq3, symfunc.lhs_eq6, symfunc.lhs_t3):
        fn.cache_clear()
    characters.shared_cache = characters.CharacterCache()
