"""Desk-scale two-stage flow-guided video prediction for bimanual manipulation.

The package is organised as a numpy/torch library:

- ``cogdesk.sim``: deterministic 2D dual-arm simulator (kinematics, rendering,
  ground-truth pixel flow).
- ``cogdesk.data``: scripted-expert demonstration collection, episode storage,
  and the clip preprocessing pipeline.
- ``cogdesk.flowcodec``: displacement-field <-> color-wheel flow-video codec.
- ``cogdesk.diffusion``: shared denoising-diffusion machinery and the small
  conditional video denoiser.
- ``cogdesk.text2flow`` / ``cogdesk.flow2video``: the two generation stages.
- ``cogdesk.policy``: goal-conditioned diffusion policy over action chunks.
- ``cogdesk.evalharness``: closed-loop rollouts, metrics, ablation table.
- ``cogdesk.teleop``: websocket teleoperation server with retargeting.
"""

__version__ = "0.1.0"
