from expgroups.group_ops.evaluation import evaluate_hom
from expgroups.group_ops.handles import CentralizerHandle, RootDecomposition
from expgroups.group_ops.matcher import ReducedFormMatcher
from expgroups.group_ops.operations import GroupOperations

__all__ = [
    "CentralizerHandle",
    "GroupOperations",
    "ReducedFormMatcher",
    "RootDecomposition",
    "evaluate_hom",
]
