"""Exact algebra of max-min and max-plus measures on finite spaces."""

from .cone import (
    LOGIT,
    ThresholdFunction,
    XiMap,
    cone_dist,
    g,
    g_inv,
    h,
    h_inv,
    hausdorff_dist,
    hausdorff_oracle,
    k,
    k_inv,
    measure_dist,
    saturate,
)
from .convexity import barycenter, hull_member, mm_combination, mm_combine
from .functorial import (
    MeasureSection,
    average,
    pushforward,
    section_lift,
    tensor_maxmin,
    tensor_maxplus,
)
from .measures import (
    MaxMinMeasure,
    MaxPlusMeasure,
    TestFunction,
    combine,
    eval_maxmin,
    eval_maxplus,
    from_functional,
    make_maxmin,
    make_maxplus,
    pointwise,
    support,
    weakstar_dist,
)
from .monad import counterexample, flatten, flatten_maxmin, flatten_maxplus, map_nested, unit
from .scalars import NEG_INF, POS_INF, ext, join, meet, translate
from .spaces import FiniteMap, FiniteSpace, compose, make_space, product, validate_metric

__all__ = [
    "average",
    "barycenter",
    "combine",
    "compose",
    "cone_dist",
    "counterexample",
    "eval_maxmin",
    "eval_maxplus",
    "ext",
    "FiniteMap",
    "FiniteSpace",
    "flatten",
    "flatten_maxmin",
    "flatten_maxplus",
    "from_functional",
    "g",
    "g_inv",
    "h",
    "h_inv",
    "hausdorff_dist",
    "hausdorff_oracle",
    "hull_member",
    "join",
    "k",
    "k_inv",
    "LOGIT",
    "make_maxmin",
    "make_maxplus",
    "make_space",
    "map_nested",
    "MaxMinMeasure",
    "MaxPlusMeasure",
    "measure_dist",
    "MeasureSection",
    "meet",
    "mm_combination",
    "mm_combine",
    "NEG_INF",
    "pointwise",
    "POS_INF",
    "product",
    "pushforward",
    "saturate",
    "section_lift",
    "support",
    "tensor_maxmin",
    "tensor_maxplus",
    "TestFunction",
    "ThresholdFunction",
    "translate",
    "unit",
    "validate_metric",
    "weakstar_dist",
    "XiMap",
]

__version__ = "0.1.0"
