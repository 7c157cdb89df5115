"""Rasterizer for the dual-arm scene.

Rendering is a pure function of the state: elements are painted back-to-front
onto the pixel-center grid with hard coverage tests (no anti-aliasing), so
identical states produce bit-identical frames.  The same element list drives
the ground-truth flow computation in :mod:`cogdesk.sim.flow`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arms import forward_kinematics, elbow_position
from .world import (
    SimConfig,
    SimState,
    OBJECT_GEOMETRY,
    HANDOVER_TARGET,
    VIEW_X,
    VIEW_Y,
)

Observation = np.ndarray  # (H, W, 3) uint8

BACKGROUND = (235, 235, 240)
TABLE = (168, 126, 88)
TARGET_PAD = (196, 168, 140)
OBJECT_COLORS = {
    "bag": (158, 80, 170),
    "block": (60, 170, 90),
    "box": (214, 160, 56),
}
HANDLE_COLORS = {"bag": (118, 52, 130)}
ARM_COLORS = {
    "left": ((52, 96, 208), (92, 136, 240)),
    "right": ((204, 64, 52), (238, 108, 88)),
}

LINK_RADIUS = 0.06
FINGER_RADIUS = 0.055
FINGER_GAP = (0.05, 0.18)  # closed .. open separation from the wrist axis


@dataclass
class Element:
    shape: str  # capsule | disk | rect
    params: tuple
    color: tuple
    origin: tuple  # rigid frame for motion mapping
    angle: float
    name: str


def pixel_grid(resolution: int):
    """World coordinates of pixel centers, row-major with y down."""
    h = w = resolution
    sx = (VIEW_X[1] - VIEW_X[0]) / w
    sy = (VIEW_Y[1] - VIEW_Y[0]) / h
    xs = VIEW_X[0] + (np.arange(w) + 0.5) * sx
    ys = VIEW_Y[1] - (np.arange(h) + 0.5) * sy
    gx, gy = np.meshgrid(xs, ys)
    return gx, gy


def px_per_unit(resolution: int) -> float:
    return resolution / (VIEW_X[1] - VIEW_X[0])


def scene_elements(state: SimState, cfg: SimConfig) -> list:
    """Scene elements in paint order (background is implicit)."""
    els = [
        Element(
            "rect",
            ((0.0, (VIEW_Y[0] + 0.0) / 2.0), ((VIEW_X[1] - VIEW_X[0]) / 2.0, -VIEW_Y[0] / 2.0), 0.0),
            TABLE,
            (0.0, 0.0),
            0.0,
            "table",
        )
    ]
    if state.task_id == "block_handover":
        els.append(
            Element(
                "disk",
                (HANDOVER_TARGET, cfg.place_radius),
                TARGET_PAD,
                (0.0, 0.0),
                0.0,
                "target_pad",
            )
        )
    for oi, obj in enumerate(state.objects):
        geom = OBJECT_GEOMETRY[obj.kind]
        els.append(
            Element(
                "rect",
                (obj.position, geom["half"], obj.orientation),
                OBJECT_COLORS[obj.kind],
                obj.position,
                obj.orientation,
                f"{obj.kind}_{oi}",
            )
        )
        if obj.kind == "bag":
            c, s = math.cos(obj.orientation), math.sin(obj.orientation)
            for gi, (gx, gy) in enumerate(geom["grasp"]):
                hp = (
                    obj.position[0] + c * gx - s * gy,
                    obj.position[1] + s * gx + c * gy,
                )
                els.append(
                    Element(
                        "disk",
                        (hp, 0.055),
                        HANDLE_COLORS["bag"],
                        obj.position,
                        obj.orientation,
                        f"bag_{oi}_handle{gi}",
                    )
                )
    for side, jslice, gidx in (("left", slice(0, 2), 0), ("right", slice(2, 4), 1)):
        arm = cfg.arm(side)
        joints = state.joints[jslice]
        base = arm.base_position
        elbow = elbow_position(arm, joints)
        ee, ee_angle = forward_kinematics(arm, joints)
        c1, c2 = ARM_COLORS[side]
        els.append(
            Element("capsule", (base, elbow, LINK_RADIUS), c1, base, joints[0], f"{side}_link1")
        )
        els.append(
            Element(
                "capsule",
                (elbow, ee, LINK_RADIUS),
                c2,
                elbow,
                joints[0] + joints[1],
                f"{side}_link2",
            )
        )
        gap = FINGER_GAP[0] + (FINGER_GAP[1] - FINGER_GAP[0]) * state.grippers[gidx]
        perp = (-math.sin(ee_angle), math.cos(ee_angle))
        # finger brightness tracks the opening so grasp state is visible
        g = state.grippers[gidx]
        fcol = tuple(int(round(20 + 230 * g)) for _ in range(3))
        for fsign, fname in ((1.0, "a"), (-1.0, "b")):
            fc = (ee[0] + fsign * gap * perp[0], ee[1] + fsign * gap * perp[1])
            els.append(
                Element(
                    "disk",
                    (fc, FINGER_RADIUS),
                    fcol,
                    fc,
                    ee_angle,
                    f"{side}_finger_{fname}",
                )
            )
    return els


def _coverage(el: Element, gx: np.ndarray, gy: np.ndarray) -> np.ndarray:
    if el.shape == "disk":
        (cx, cy), r = el.params
        return (gx - cx) ** 2 + (gy - cy) ** 2 <= r * r
    if el.shape == "capsule":
        (x0, y0), (x1, y1), r = el.params
        vx, vy = x1 - x0, y1 - y0
        L2 = vx * vx + vy * vy
        if L2 == 0.0:
            return (gx - x0) ** 2 + (gy - y0) ** 2 <= r * r
        t = np.clip(((gx - x0) * vx + (gy - y0) * vy) / L2, 0.0, 1.0)
        dx = gx - (x0 + t * vx)
        dy = gy - (y0 + t * vy)
        return dx * dx + dy * dy <= r * r
    if el.shape == "rect":
        (cx, cy), (hx, hy), angle = el.params
        ca, sa = math.cos(angle), math.sin(angle)
        lx = ca * (gx - cx) + sa * (gy - cy)
        ly = -sa * (gx - cx) + ca * (gy - cy)
        return (np.abs(lx) <= hx) & (np.abs(ly) <= hy)
    raise ValueError(f"unknown shape {el.shape!r}")


def render_with_ids(state: SimState, cfg: SimConfig | None = None):
    """Render and return (pixels uint8, element-id map, element list).

    The id map holds -1 for background and the index of the top-most covering
    element otherwise.
    """
    cfg = cfg or SimConfig()
    res = cfg.resolution
    gx, gy = pixel_grid(res)
    img = np.empty((res, res, 3), dtype=np.uint8)
    img[:] = BACKGROUND
    ids = np.full((res, res), -1, dtype=np.int32)
    elements = scene_elements(state, cfg)
    for idx, el in enumerate(elements):
        mask = _coverage(el, gx, gy)
        img[mask] = el.color
        ids[mask] = idx
    return img, ids, elements


def render(state: SimState, cfg: SimConfig | None = None) -> Observation:
    return render_with_ids(state, cfg)[0]
