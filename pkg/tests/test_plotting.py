import math

import pytest

from torus_wrt.plotting import SCAN_COLUMNS, ScanRecord, scan_csv, scan_figure, scan_frame, scan_svg, write_html
from torus_wrt.wrt import InvariantResult, Trace2, invariant


def _records(kmax=5):
    return [ScanRecord.from_result(invariant(2, k, Trace2(1), "closed")) for k in range(kmax + 1)]


def test_negative_real_axis_has_argument_pi():
    record = ScanRecord.from_result(InvariantResult(complex(-1.0, 0.0), 2, 0, 2, "closed"))
    assert record.arg == math.pi
    record = ScanRecord.from_result(InvariantResult(complex(-1.0, -0.0), 2, 0, 2, "closed"))
    assert record.arg == math.pi
    assert record.abs == 1.0


def test_csv_layout():
    text = scan_csv(_records())
    lines = text.splitlines()
    assert lines[0] == ",".join(SCAN_COLUMNS)
    assert len(lines) == 7
    k, r, re, im, *_ = lines[2].split(",")
    assert (k, r) == ("1", "3")
    assert float(re) == pytest.approx(1.0)
    assert float(im) == pytest.approx(-1.0)


def test_empty_frame_keeps_columns():
    assert list(scan_frame([]).columns) == SCAN_COLUMNS
    assert scan_csv([]).strip() == ",".join(SCAN_COLUMNS)


def test_svg_is_deterministic():
    records = _records()
    first = scan_svg(records, "SU(2) <b=1>")
    assert first == scan_svg(records, "SU(2) <b=1>")
    assert first.startswith("<svg")
    assert "&lt;b=1&gt;" in first
    assert first.count('fill="#7c3aed"') == len(records)


def test_figure_traces():
    assert len(scan_figure(_records()).data) == 2
    empty = scan_figure([])
    assert len(empty.data) == 0
    assert empty.layout.annotations[0].text == "No levels scanned"


def test_write_html(tmp_path):
    target = write_html(_records(), tmp_path / "scan.html", "scan")
    assert target.exists()
    assert "plotly" in target.read_text()
