"""Quasi-static dual-arm world: tasks, stepping, grasp attachment, rewards.

States are immutable values; ``step`` returns a new state.  There is no
dynamics engine: joints move toward their targets under a per-tick rate limit,
objects move only while rigidly attached to a gripper, and the binary reward
fires when the task predicate has held for the required number of
consecutive ticks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace, field

import numpy as np

from ..rng import SplitMix64
from .arms import ArmConfig, forward_kinematics, inverse_kinematics, clamp_joints

TASKS = ("lift_bag", "block_handover", "push_box")

INSTRUCTIONS = {
    "lift_bag": "the left arm grabs the left handle and the right arm grabs "
    "the right handle, then both arms lift the bag together",
    "block_handover": "the left arm picks up the block and hands it over to "
    "the right arm, which places it on the right target",
    "push_box": "both arms grasp the two sides of the box and pull together "
    "to bring the box closer to the table center",
}

# Workspace window rendered by the camera, in workspace units.
VIEW_X = (-1.2, 1.2)
VIEW_Y = (-0.3, 2.1)


@dataclass(frozen=True)
class SimConfig:
    resolution: int = 64
    step_rate: float = 0.1  # max joint motion per tick, rad
    grip_rate: float = 0.2  # max gripper motion per tick
    r_grasp: float = 0.15  # attach radius, workspace units
    attach_below: float = 0.3  # gripper value below which grasping engages
    release_above: float = 0.7  # gripper value above which the hold opens
    lift_height: float = 0.5  # bag height above table for success
    lift_hold: int = 10  # consecutive ticks the predicate must hold
    place_hold: int = 5
    place_radius: float = 0.12
    push_distance: float = 0.35
    left_arm: ArmConfig = field(
        default_factory=lambda: ArmConfig((-0.85, 0.05), (0.55, 0.45), elbow_sign=-1)
    )
    right_arm: ArmConfig = field(
        default_factory=lambda: ArmConfig((0.85, 0.05), (0.55, 0.45), elbow_sign=1)
    )
    home_targets: tuple = ((-0.45, 0.7), (0.45, 0.7))

    def arm(self, side: str) -> ArmConfig:
        return self.left_arm if side == "left" else self.right_arm

    @classmethod
    def from_dict(cls, cfg: dict) -> "SimConfig":
        kw = {}
        simple = (
            "resolution step_rate grip_rate r_grasp attach_below release_above "
            "lift_height lift_hold place_hold place_radius push_distance"
        ).split()
        for key in simple:
            if f"sim.{key}" in cfg:
                kw[key] = cfg[f"sim.{key}"]
        for side in ("left", "right"):
            base = cfg.get(f"sim.arm.{side}.base")
            links = cfg.get(f"sim.arm.{side}.links")
            if base is not None or links is not None:
                default = cls().arm(side)
                kw[f"{side}_arm"] = ArmConfig(
                    tuple(base) if base is not None else default.base_position,
                    tuple(links) if links is not None else default.link_lengths,
                    elbow_sign=cfg.get(f"sim.arm.{side}.elbow_sign", default.elbow_sign),
                )
        return cls(**kw)


@dataclass(frozen=True)
class ObjectState:
    kind: str  # bag | block | box
    position: tuple  # center (x, y)
    orientation: float
    # grasp-point index held by each arm, -1 when free
    held_left: int = -1
    held_right: int = -1

    @property
    def attachment(self) -> str:
        l, r = self.held_left >= 0, self.held_right >= 0
        if l and r:
            return "both"
        if l:
            return "left"
        if r:
            return "right"
        return "none"


# Object geometry: local grasp points, footprint, and table rest height.
OBJECT_GEOMETRY = {
    "bag": {
        "half": (0.25, 0.14),
        "grasp": ((-0.21, 0.16), (0.21, 0.16)),  # the two handles
        "rest_y": 0.14,
    },
    "block": {
        "half": (0.08, 0.08),
        "grasp": ((-0.08, 0.0), (0.08, 0.0)),
        "rest_y": 0.08,
    },
    "box": {
        "half": (0.22, 0.15),
        "grasp": ((-0.24, 0.0), (0.24, 0.0)),
        "rest_y": 0.15,
    },
}


@dataclass(frozen=True)
class SimState:
    task_id: str
    joints: tuple  # 4 floats: (left t1, left t2, right t1, right t2)
    grippers: tuple  # 2 floats in [0, 1], 1 = open
    objects: tuple  # ObjectState per scene object
    step_count: int
    rng_seed: int
    hold_count: int = 0
    done: bool = False
    # task-specific anchor, e.g. initial box x for the push predicate
    anchor: float = 0.0

    @property
    def object_poses(self):
        return [(o.position, o.orientation, o.attachment) for o in self.objects]


@dataclass(frozen=True)
class Action:
    joint_targets: tuple  # 4 floats, rad
    gripper_targets: tuple  # 2 floats in [0, 1]

    def as_array(self) -> np.ndarray:
        return np.array(
            list(self.joint_targets) + list(self.gripper_targets), dtype=np.float64
        )

    @classmethod
    def from_array(cls, arr) -> "Action":
        arr = np.asarray(arr, dtype=np.float64)
        return cls(tuple(arr[:4].tolist()), tuple(arr[4:6].tolist()))


def _home_joints(cfg: SimConfig) -> tuple:
    left = inverse_kinematics(cfg.left_arm, cfg.home_targets[0])
    right = inverse_kinematics(cfg.right_arm, cfg.home_targets[1])
    if left is None or right is None:
        raise ValueError("home targets unreachable for configured arms")
    return (left[0], left[1], right[0], right[1])


def reset(task_id: str, seed: int, cfg: SimConfig | None = None) -> SimState:
    """Initial state with object placement drawn from the splitmix64 stream.

    Draw order per task is part of the replay contract:
    lift_bag: bag_x ~ U(-0.25, 0.25);
    block_handover: block_x ~ U(-0.68, -0.38), target is fixed;
    push_box: box_x ~ U(0.10, 0.30).
    """
    cfg = cfg or SimConfig()
    if task_id not in TASKS:
        raise ValueError(f"unknown task_id {task_id!r}; expected one of {TASKS}")
    rng = SplitMix64(seed)
    if task_id == "lift_bag":
        bx = rng.uniform(-0.25, 0.25)
        objects = (ObjectState("bag", (bx, OBJECT_GEOMETRY["bag"]["rest_y"]), 0.0),)
        anchor = 0.0
    elif task_id == "block_handover":
        bx = rng.uniform(-0.68, -0.38)
        objects = (ObjectState("block", (bx, OBJECT_GEOMETRY["block"]["rest_y"]), 0.0),)
        anchor = 0.0
    else:  # push_box
        bx = rng.uniform(0.10, 0.30)
        objects = (ObjectState("box", (bx, OBJECT_GEOMETRY["box"]["rest_y"]), 0.0),)
        anchor = bx
    return SimState(
        task_id=task_id,
        joints=_home_joints(cfg),
        grippers=(1.0, 1.0),
        objects=objects,
        step_count=0,
        rng_seed=seed,
        anchor=anchor,
    )


# Fixed placement target for block_handover, on the right side of the table.
HANDOVER_TARGET = (0.55, 0.08)


def ee_positions(state: SimState, cfg: SimConfig) -> tuple:
    left, _ = forward_kinematics(cfg.left_arm, state.joints[0:2])
    right, _ = forward_kinematics(cfg.right_arm, state.joints[2:4])
    return left, right


def _rate_limit(current, target, rate):
    delta = np.clip(np.asarray(target) - np.asarray(current), -rate, rate)
    return np.asarray(current) + delta


def _grasp_points(obj: ObjectState) -> list:
    geom = OBJECT_GEOMETRY[obj.kind]
    c, s = math.cos(obj.orientation), math.sin(obj.orientation)
    pts = []
    for gx, gy in geom["grasp"]:
        pts.append((obj.position[0] + c * gx - s * gy, obj.position[1] + s * gx + c * gy))
    return pts


def _update_attachments(objects, grippers, ee, cfg: SimConfig):
    """Release opened holds, then engage new grasps within reach."""
    objects = list(objects)
    for side, gidx in (("left", 0), ("right", 1)):
        fieldname = f"held_{side}"
        if grippers[gidx] > cfg.release_above:
            objects = [
                replace(o, **{fieldname: -1}) if getattr(o, fieldname) >= 0 else o
                for o in objects
            ]
    for side, gidx in (("left", 0), ("right", 1)):
        fieldname = f"held_{side}"
        if grippers[gidx] >= cfg.attach_below:
            continue
        if any(getattr(o, fieldname) >= 0 for o in objects):
            continue  # this gripper already holds something
        best = None
        for oi, obj in enumerate(objects):
            other = "held_right" if side == "left" else "held_left"
            for pi, point in enumerate(_grasp_points(obj)):
                if getattr(obj, other) == pi:
                    continue  # grasp point occupied by the other arm
                d = math.hypot(point[0] - ee[gidx][0], point[1] - ee[gidx][1])
                if d <= cfg.r_grasp and (best is None or d < best[0]):
                    best = (d, oi, pi)
        if best is not None:
            _, oi, pi = best
            objects[oi] = replace(objects[oi], **{fieldname: pi})
    return tuple(objects)


def _carry_objects(objects, ee):
    """Move attached objects rigidly with the gripper(s) holding them.

    The held grasp point coincides with the holding end-effector; with two
    holders the grasp points track the two end-effectors on average.  Released
    objects settle back to their table rest height.
    """
    out = []
    for obj in objects:
        geom = OBJECT_GEOMETRY[obj.kind]
        grasp = geom["grasp"]
        if obj.held_left >= 0 and obj.held_right >= 0:
            gl, gr = grasp[obj.held_left], grasp[obj.held_right]
            cx = (ee[0][0] + ee[1][0]) / 2.0 - (gl[0] + gr[0]) / 2.0
            cy = (ee[0][1] + ee[1][1]) / 2.0 - (gl[1] + gr[1]) / 2.0
            out.append(replace(obj, position=(cx, cy)))
        elif obj.held_left >= 0:
            g = grasp[obj.held_left]
            out.append(replace(obj, position=(ee[0][0] - g[0], ee[0][1] - g[1])))
        elif obj.held_right >= 0:
            g = grasp[obj.held_right]
            out.append(replace(obj, position=(ee[1][0] - g[0], ee[1][1] - g[1])))
        else:
            rest = geom["rest_y"]
            if obj.position[1] != rest:
                out.append(replace(obj, position=(obj.position[0], rest)))
            else:
                out.append(obj)
    return tuple(out)


def _predicate(state: SimState, cfg: SimConfig) -> bool:
    obj = state.objects[0]
    if state.task_id == "lift_bag":
        return obj.attachment == "both" and obj.position[1] >= cfg.lift_height + OBJECT_GEOMETRY["bag"]["rest_y"]
    if state.task_id == "block_handover":
        dx = obj.position[0] - HANDOVER_TARGET[0]
        dy = obj.position[1] - HANDOVER_TARGET[1]
        return math.hypot(dx, dy) <= cfg.place_radius and obj.held_left < 0
    # push_box: displaced toward the table center by the required distance
    return state.anchor - obj.position[0] >= cfg.push_distance


def step(state: SimState, action: Action, cfg: SimConfig | None = None):
    """Advance one tick.  Returns (new_state, reward in {0, 1}).

    Terminal states are absorbing: stepping a done state returns it unchanged
    with reward 1.  Invalid targets are clamped, never rejected.
    """
    cfg = cfg or SimConfig()
    if state.done:
        return state, 1
    targets = np.asarray(action.joint_targets, dtype=np.float64)
    if not np.all(np.isfinite(targets)):
        raise ValueError("joint targets must be finite")
    tl = clamp_joints(cfg.left_arm, targets[0:2])
    tr = clamp_joints(cfg.right_arm, targets[2:4])
    gt = np.clip(np.asarray(action.gripper_targets, dtype=np.float64), 0.0, 1.0)

    joints = _rate_limit(state.joints, np.concatenate([tl, tr]), cfg.step_rate)
    grippers = _rate_limit(state.grippers, gt, cfg.grip_rate)
    new = replace(
        state,
        joints=tuple(joints.tolist()),
        grippers=tuple(grippers.tolist()),
        step_count=state.step_count + 1,
    )
    ee = ee_positions(new, cfg)
    objects = _update_attachments(new.objects, new.grippers, ee, cfg)
    objects = _carry_objects(objects, ee)
    new = replace(new, objects=objects)

    hold_needed = cfg.lift_hold if state.task_id == "lift_bag" else cfg.place_hold
    hold = new.hold_count + 1 if _predicate(new, cfg) else 0
    reward = 1 if hold >= hold_needed else 0
    new = replace(new, hold_count=hold, done=bool(reward))
    return new, reward


def is_terminal(state: SimState) -> bool:
    return state.done
