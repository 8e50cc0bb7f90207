"""Hosoya indices of multigraphs, counted directly and read off continued fractions."""

from .bigrat import FormalFraction, ff_add, ff_div_int, ff_from_int, ff_sub
from .contfrac import (
    Convergent,
    GeneralCF,
    NegativeCF,
    TreeCFSpec,
    convergents,
    eval_bottom_up,
    eval_negative_ring_cf,
    eval_tree_cf,
    negative_to_positive,
    radial_cf,
)
from .families import CaterpillarBondParams, RingParams
from .multigraph import Multigraph
from .oracle import hosoya, hosoya_by_definition, matching_count

__version__ = "0.1.0"
