from .arms import ArmConfig, forward_kinematics, inverse_kinematics, UNREACHABLE
from .world import (
    Action,
    SimState,
    TASKS,
    SimConfig,
    reset,
    step,
    is_terminal,
)
from .render import render, Observation
from .flow import ground_truth_flow

__all__ = [
    "ArmConfig",
    "forward_kinematics",
    "inverse_kinematics",
    "UNREACHABLE",
    "Action",
    "SimState",
    "SimConfig",
    "TASKS",
    "reset",
    "step",
    "is_terminal",
    "render",
    "Observation",
    "ground_truth_flow",
]
