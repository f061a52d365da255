"""Reducible configurations, their extension recipes, and the coloring pipelines."""

from .keylem import (
    extend_one_vertex,
    generally_easy,
    keylem_extend,
    keylem_find,
    struc_find,
)
from .pipelines import (
    OutsideHypothesisWarning,
    PipelineResult,
    extend,
    pipeline_planar6,
    pipeline_sparse,
    pipeline_sparse4,
    replay_deletions,
)
from .rc5 import rc5_extend, rc5_find
from .steps import (
    KINDS,
    DistinctnessViolated,
    ParityPreconditionViolated,
    PipelineTrace,
    RecipeStuck,
    ReductionStep,
)
from .threads import thread_extend, thread_find

__all__ = [
    "KINDS",
    "DistinctnessViolated",
    "OutsideHypothesisWarning",
    "ParityPreconditionViolated",
    "PipelineResult",
    "PipelineTrace",
    "RecipeStuck",
    "ReductionStep",
    "extend",
    "extend_one_vertex",
    "generally_easy",
    "keylem_extend",
    "keylem_find",
    "pipeline_planar6",
    "pipeline_sparse",
    "pipeline_sparse4",
    "rc5_extend",
    "rc5_find",
    "replay_deletions",
    "struc_find",
    "thread_extend",
    "thread_find",
]
