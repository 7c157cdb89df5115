"""Exact pixel displacement fields from simulator motion.

Every scene element moves rigidly between states, so the displacement of each
pixel is computed analytically: identify the top-most element covering the
pixel in the source frame, map the covered world point through that element's
rigid motion, and convert back to pixel units (u right, v down).  Background
and static furniture contribute zero flow.
"""

from __future__ import annotations

import math

import numpy as np

from .render import render_with_ids, pixel_grid, px_per_unit
from .world import SimConfig, SimState


def ground_truth_flow(
    src: SimState, dst: SimState, cfg: SimConfig | None = None
) -> np.ndarray:
    """Flow field src -> dst as an (H, W, 2) float32 array in pixels."""
    cfg = cfg or SimConfig()
    _, ids, els_src = render_with_ids(src, cfg)
    els_dst = render_with_ids(dst, cfg)[2]
    if len(els_src) != len(els_dst):
        raise ValueError("states produce different scene structures")
    res = cfg.resolution
    gx, gy = pixel_grid(res)
    scale = px_per_unit(res)
    flow = np.zeros((res, res, 2), dtype=np.float32)
    for idx, (e0, e1) in enumerate(zip(els_src, els_dst)):
        mask = ids == idx
        if not mask.any():
            continue
        same_frame = e0.origin == e1.origin and e0.angle == e1.angle
        if same_frame:
            continue
        wx, wy = gx[mask], gy[mask]
        c0, s0 = math.cos(e0.angle), math.sin(e0.angle)
        lx = c0 * (wx - e0.origin[0]) + s0 * (wy - e0.origin[1])
        ly = -s0 * (wx - e0.origin[0]) + c0 * (wy - e0.origin[1])
        c1, s1 = math.cos(e1.angle), math.sin(e1.angle)
        nx = c1 * lx - s1 * ly + e1.origin[0]
        ny = s1 * lx + c1 * ly + e1.origin[1]
        flow[mask, 0] = (nx - wx) * scale
        flow[mask, 1] = -(ny - wy) * scale  # image rows grow downward
    return flow


def flow_sequence(states: list, cfg: SimConfig | None = None) -> np.ndarray:
    """Flows from states[0] to each later state, stacked (N-1, H, W, 2)."""
    if len(states) < 2:
        raise ValueError("need at least two states")
    return np.stack([ground_truth_flow(states[0], s, cfg) for s in states[1:]])
