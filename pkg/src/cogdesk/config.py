"""Plain-text key=value configuration files.

Format, one entry per line::

    # comment
    resolution = 64
    arm.left.base = -0.85 0.05
    tasks = lift_bag block_handover push_box

Values are parsed as int, then float, else kept as strings; whitespace-separated
multi-token values become lists.  Dotted keys stay flat (the dot is part of the
key).  Unknown keys are preserved so configs can carry module-specific entries.
"""

from __future__ import annotations

from pathlib import Path


def _parse_scalar(tok: str):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        return float(tok)
    except ValueError:
        pass
    if tok.lower() in ("true", "false"):
        return tok.lower() == "true"
    return tok


def parse_config_text(text: str) -> dict:
    cfg: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        key = key.strip()
        toks = value.split()
        if not key or not toks:
            raise ValueError(f"line {lineno}: empty key or value in {raw!r}")
        parsed = [_parse_scalar(t) for t in toks]
        cfg[key] = parsed[0] if len(parsed) == 1 else parsed
    return cfg


def load_config(path) -> dict:
    return parse_config_text(Path(path).read_text())


def dump_config(cfg: dict) -> str:
    lines = []
    for key, value in cfg.items():
        if isinstance(value, (list, tuple)):
            value = " ".join(str(v) for v in value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def save_config(cfg: dict, path) -> None:
    Path(path).write_text(dump_config(cfg))
