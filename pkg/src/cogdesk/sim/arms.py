"""Analytic kinematics for a planar 2-link arm.

Both arms of the simulator are 2-link chains in the x/y plane.  Inverse
kinematics is the closed-form law-of-cosines solution; the elbow branch is
fixed per arm so solutions are unique and replays deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Sentinel returned by inverse_kinematics for targets outside the annulus.
UNREACHABLE = None


@dataclass(frozen=True)
class ArmConfig:
    base_position: tuple  # (x, y) workspace units
    link_lengths: tuple  # (l1, l2), strictly positive
    joint_limits: tuple = ((-math.pi, math.pi), (-math.pi, math.pi))
    elbow_sign: int = 1  # +1 or -1, selects the IK branch

    def __post_init__(self):
        if min(self.link_lengths) <= 0:
            raise ValueError("link lengths must be strictly positive")
        for lo, hi in self.joint_limits:
            if not lo < hi:
                raise ValueError("joint limits must satisfy min < max")
        if self.elbow_sign not in (1, -1):
            raise ValueError("elbow_sign must be +1 or -1")


def forward_kinematics(arm: ArmConfig, joints) -> tuple:
    """End-effector pose of a 2-link arm.

    Returns ((x, y), angle) with
    position = base + l1*(cos t1, sin t1) + l2*(cos(t1+t2), sin(t1+t2)).
    """
    t1, t2 = float(joints[0]), float(joints[1])
    l1, l2 = arm.link_lengths
    bx, by = arm.base_position
    x = bx + l1 * math.cos(t1) + l2 * math.cos(t1 + t2)
    y = by + l1 * math.sin(t1) + l2 * math.sin(t1 + t2)
    return (x, y), t1 + t2


def elbow_position(arm: ArmConfig, joints) -> tuple:
    t1 = float(joints[0])
    l1 = arm.link_lengths[0]
    bx, by = arm.base_position
    return (bx + l1 * math.cos(t1), by + l1 * math.sin(t1))


def inverse_kinematics(arm: ArmConfig, target):
    """Closed-form IK for the configured elbow branch.

    Returns (t1, t2) such that forward_kinematics reproduces ``target`` to
    1e-9 workspace units, or UNREACHABLE when |target - base| lies outside
    [|l1 - l2|, l1 + l2].  Never raises for finite targets.
    """
    l1, l2 = arm.link_lengths
    bx, by = arm.base_position
    dx = float(target[0]) - bx
    dy = float(target[1]) - by
    d2 = dx * dx + dy * dy
    d = math.sqrt(d2)
    if d > l1 + l2 or d < abs(l1 - l2):
        return UNREACHABLE
    cos_t2 = (d2 - l1 * l1 - l2 * l2) / (2.0 * l1 * l2)
    cos_t2 = min(1.0, max(-1.0, cos_t2))
    t2 = arm.elbow_sign * math.acos(cos_t2)
    t1 = math.atan2(dy, dx) - math.atan2(l2 * math.sin(t2), l1 + l2 * math.cos(t2))
    # keep t1 in (-pi, pi]
    if t1 <= -math.pi:
        t1 += 2.0 * math.pi
    elif t1 > math.pi:
        t1 -= 2.0 * math.pi
    return (t1, t2)


def clamp_joints(arm: ArmConfig, joints) -> np.ndarray:
    out = np.asarray(joints, dtype=np.float64).copy()
    for i, (lo, hi) in enumerate(arm.joint_limits):
        out[i] = min(hi, max(lo, out[i]))
    return out
