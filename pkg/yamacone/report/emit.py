"""Serialize reports and portrait runs to JSON, CSV and SVG.

Output bytes depend only on the input data: no timestamps, fixed key order,
fixed number formats.
"""

import json
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from loguru import logger

from yamacone.engine.integrator import Trajectory
from yamacone.engine.portrait import PortraitRun
from yamacone.errors import DomainError, OutputError
from yamacone.utils.helpers import ensure_dir, format_real

CSV_HEADER = "traj_id,t,x,y"

SVG_WIDTH = 640
SVG_HEIGHT = 480
SVG_MARGIN = 40


def report_json(data: dict[str, Any]) -> str:
    """Canonical JSON text; floats use the shortest round-trip repr."""
    return json.dumps(data, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def trajectories_csv(
    trajectories: Iterable[tuple[int, Trajectory]], digits: int = 17
) -> str:
    """One ``traj_id,t,x,y`` row per sample, LF line endings."""
    lines = [CSV_HEADER]
    for traj_id, traj in trajectories:
        for t, x, y in zip(traj.physical_t.tolist(), traj.x.tolist(), traj.y.tolist()):
            lines.append(
                f"{traj_id},{format_real(t, digits)},{format_real(x, digits)},"
                f"{format_real(y, digits)}"
            )
    return "\n".join(lines) + "\n"


def portrait_csv(run: PortraitRun, digits: int = 17) -> str:
    return trajectories_csv(
        ((s.seed_id, s.trajectory) for s in run.seeds if s.trajectory is not None), digits
    )


def _svg_mapper(x_range: tuple[float, float], y_range: tuple[float, float]):
    inner_w = SVG_WIDTH - 2 * SVG_MARGIN
    inner_h = SVG_HEIGHT - 2 * SVG_MARGIN
    x0, x1 = x_range
    y0, y1 = y_range

    def to_px(x: float, y: float) -> tuple[float, float]:
        px = SVG_MARGIN + (x - x0) / (x1 - x0) * inner_w
        py = SVG_HEIGHT - SVG_MARGIN - (y - y0) / (y1 - y0) * inner_h
        return px, py

    return to_px


def portrait_svg(run: PortraitRun) -> str:
    """Polylines of all trajectories in a fixed viewBox, clipped to the sampled window."""
    spec = run.spec
    to_px = _svg_mapper(spec.x_range, spec.y_range)
    left, top = SVG_MARGIN, SVG_MARGIN
    width = SVG_WIDTH - 2 * SVG_MARGIN
    height = SVG_HEIGHT - 2 * SVG_MARGIN

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" '
        f'width="{SVG_WIDTH}" height="{SVG_HEIGHT}">',
        f'<defs><clipPath id="window"><rect x="{left}" y="{top}" width="{width}" '
        f'height="{height}"/></clipPath></defs>',
        f'<rect x="{left}" y="{top}" width="{width}" height="{height}" '
        'fill="none" stroke="#888888"/>',
    ]
    # Axes x = 0 and y = 0 when they fall inside the window.
    if spec.x_range[0] <= 0.0 <= spec.x_range[1]:
        px, _ = to_px(0.0, spec.y_range[0])
        out.append(
            f'<line x1="{px:.3f}" y1="{top}" x2="{px:.3f}" y2="{top + height}" stroke="#000000"/>'
        )
    if spec.y_range[0] <= 0.0 <= spec.y_range[1]:
        _, py = to_px(spec.x_range[0], 0.0)
        out.append(
            f'<line x1="{left}" y1="{py:.3f}" x2="{left + width}" y2="{py:.3f}" stroke="#000000"/>'
        )
    out.append(
        f'<text x="{left + width}" y="{SVG_HEIGHT - 10}" text-anchor="end" '
        'font-size="12">x</text>'
    )
    out.append(f'<text x="10" y="{top}" font-size="12">y</text>')

    out.append('<g clip-path="url(#window)" fill="none" stroke="#1f4e9a" stroke-width="1">')
    for seed in run.seeds:
        traj = seed.trajectory
        if traj is None:
            continue
        points = " ".join(
            "{:.3f},{:.3f}".format(*to_px(x, y))
            for x, y in zip(traj.x.tolist(), traj.y.tolist())
        )
        out.append(f'<polyline data-traj="{seed.seed_id}" points="{points}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_text(path: Path, text: str) -> Path:
    """Write UTF-8 text with LF newlines; failures carry the path."""
    try:
        ensure_dir(path.parent)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e.strerror or e}") from e
    logger.debug(f"wrote {len(text)} characters to {path}")
    return path


def emit_portrait(run: PortraitRun, path: Path, fmt: str, digits: int = 17) -> Path:
    """Write a portrait run as ``"csv"`` or ``"svg"``."""
    if fmt == "csv":
        return write_text(path, portrait_csv(run, digits))
    if fmt == "svg":
        return write_text(path, portrait_svg(run))
    raise DomainError(f"unknown portrait format {fmt!r}")
