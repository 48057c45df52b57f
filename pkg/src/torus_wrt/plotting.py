"""Scan tables and pictures: CSV through pandas, a plain SVG scatter and a plotly figure."""

from __future__ import annotations

import html
import io
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Sequence

import pandas as pd
import plotly.graph_objects as go

from .wrt import InvariantResult

__all__ = [
    "SCAN_COLUMNS",
    "ScanRecord",
    "scan_frame",
    "scan_csv",
    "scan_svg",
    "scan_figure",
    "write_html",
]

SCAN_COLUMNS = ["k", "r", "re", "im", "abs", "arg"]

SVG_SIZE = 480
SVG_MARGIN = 24


@dataclass(frozen=True)
class ScanRecord:
    k: int
    r: int
    re: float
    im: float
    abs: float
    arg: float

    @classmethod
    def from_result(cls, result: InvariantResult) -> "ScanRecord":
        re, im = float(result.value.real), float(result.value.imag)
        arg = math.atan2(im, re)
        if arg == -math.pi:
            arg = math.pi
        return cls(result.k, result.r, re, im, math.hypot(re, im), arg)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def scan_frame(records: Iterable[ScanRecord]) -> pd.DataFrame:
    data = [record.to_dict() for record in records]
    if not data:
        return pd.DataFrame(columns=SCAN_COLUMNS)
    return pd.DataFrame(data, columns=SCAN_COLUMNS)


def scan_csv(records: Sequence[ScanRecord]) -> str:
    """Header ``k,r,re,im,abs,arg`` and 17 significant digits per float."""

    buffer = io.StringIO()
    scan_frame(records).to_csv(buffer, index=False, float_format="%.17g", lineterminator="\n")
    return buffer.getvalue()


def _extent(records: Sequence[ScanRecord]) -> float:
    return 1.1 * max([1.0] + [record.abs for record in records])


def scan_svg(records: Sequence[ScanRecord], title: str = "") -> str:
    """Self-contained scatter of ``(re, im)`` with the unit circle and axes drawn in."""

    extent = _extent(records)
    half = SVG_SIZE / 2
    scale = (half - SVG_MARGIN) / extent

    def x(value: float) -> str:
        return f"{half + scale * value:.4f}"

    def y(value: float) -> str:
        return f"{half - scale * value:.4f}"

    lines: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
    ]
    if title:
        lines.append(f'<title>{html.escape(title)}</title>')
    radius = 1
    while radius <= extent:
        lines.append(
            f'<circle cx="{x(0)}" cy="{y(0)}" r="{scale * radius:.4f}" fill="none" stroke="#cbd5e1" stroke-width="1"/>'
        )
        radius += 1
    lines.append(f'<line x1="{x(-extent)}" y1="{y(0)}" x2="{x(extent)}" y2="{y(0)}" stroke="#94a3b8"/>')
    lines.append(f'<line x1="{x(0)}" y1="{y(-extent)}" x2="{x(0)}" y2="{y(extent)}" stroke="#94a3b8"/>')
    for record in records:
        lines.append(f'<circle cx="{x(record.re)}" cy="{y(record.im)}" r="2" fill="#7c3aed"><title>k={record.k}</title></circle>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def scan_figure(records: Sequence[ScanRecord], title: str = "") -> go.Figure:
    fig = go.Figure()
    if not records:
        fig.add_annotation(text="No levels scanned", showarrow=False, font=dict(color="#94a3b8", size=18))
        fig.update_layout(height=220, xaxis=dict(visible=False), yaxis=dict(visible=False))
        return fig

    angles = [2 * math.pi * step / 256 for step in range(257)]
    fig.add_trace(
        go.Scatter(
            x=[math.cos(t) for t in angles],
            y=[math.sin(t) for t in angles],
            mode="lines",
            line=dict(color="#cbd5e1", width=1),
            hoverinfo="skip",
            showlegend=False,
        )
    )
    fig.add_trace(
        go.Scatter(
            x=[record.re for record in records],
            y=[record.im for record in records],
            mode="markers",
            marker=dict(color=[record.k for record in records], colorscale="Viridis", size=6, showscale=True),
            text=[str(record.k) for record in records],
            hovertemplate="k=%{text}<br>Re=%{x}<br>Im=%{y}",
            showlegend=False,
        )
    )
    fig.update_layout(
        title=title or None,
        height=520,
        template="plotly_white",
        xaxis_title="Re Z",
        yaxis_title="Im Z",
        yaxis=dict(scaleanchor="x", scaleratio=1),
    )
    return fig


def write_html(records: Sequence[ScanRecord], path: Path, title: str = "") -> Path:
    scan_figure(records, title).write_html(str(path), include_plotlyjs="cdn")
    return path
