import json

import numpy as np
import pytest

from bergzeros import BetaGrid, ParameterError, trace_zero_curves
from bergzeros.export import (
    SvgStyle,
    curves_rows,
    export_curves,
    export_svg_scatter,
    format_float,
    parse_curves_csv,
    rows_to_csv,
    rows_to_json,
    svg_scatter,
)


@pytest.fixture(scope="module")
def curves():
    return trace_zero_curves(1, BetaGrid.default(40, 1e-5))


def test_format_float_round_trip(rng):
    for x in rng.normal(scale=1e8, size=200):
        assert float(format_float(float(x))) == float(x)
    for x in (1e-300, -0.0, 123456789.123456789, 2.0 ** -1022):
        assert float(format_float(x)) == x


def test_curves_rows_layout(curves):
    rows = curves_rows(curves)
    assert len(rows) == 2 * len(curves[0].betas)
    # beta ascending, then k ascending within each beta
    betas = [r["beta"] for r in rows]
    assert betas == sorted(betas)
    assert [r["k"] for r in rows[:2]] == [0, 1]


def test_csv_header_and_row_count(curves, tmp_path):
    path = tmp_path / "curves.csv"
    export_curves(curves, path)
    text = path.read_text()
    lines = text.strip().split("\n")
    assert lines[0] == "alpha,beta,k,re,im"
    assert len(lines) == 1 + 2 * len(curves[0].betas)
    assert text.endswith("\n")


def test_round_trip_exact(curves, tmp_path):
    path = tmp_path / "curves.csv"
    export_curves(curves, path)
    rows = parse_curves_csv(path)
    src = curves_rows(curves)
    assert len(rows) == len(src)
    for got, want in zip(rows, src):
        assert got["beta"] == want["beta"]
        assert got["re"] == want["re"]
        assert got["im"] == want["im"]
        assert got["k"] == want["k"]


def test_conjugate_rows(curves, tmp_path):
    path = tmp_path / "curves.csv"
    export_curves(curves, path)
    rows = parse_curves_csv(path)
    by_key = {(round(r["beta"], 15), r["k"]): r for r in rows}
    alpha = 1
    for (beta, k), row in by_key.items():
        partner = by_key.get((beta, alpha + 1 - k))
        if partner is not None and 1 <= k <= alpha:
            assert abs(row["im"] + partner["im"]) < 1e-9


def test_json_mirror(curves, tmp_path):
    csv_path = tmp_path / "curves.csv"
    json_path = tmp_path / "curves.json"
    export_curves(curves, csv_path, mirror_json=json_path)
    doc = json.loads(json_path.read_text())
    assert doc["schema"] == "curves"
    assert doc["rows"] == curves_rows(curves)


def test_determinism_byte_identical(curves, tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    export_curves(curves, p1)
    export_curves(curves, p2)
    assert p1.read_bytes() == p2.read_bytes()
    s1 = svg_scatter([0.1 + 0.2j, -0.5 - 0.1j])
    s2 = svg_scatter([0.1 + 0.2j, -0.5 - 0.1j])
    assert s1 == s2


def test_empty_curve_list_rejected():
    with pytest.raises(ParameterError):
        curves_rows([])


def test_svg_marker_count(tmp_path):
    pts = [complex(k, -k) for k in range(6)]
    path = tmp_path / "pts.svg"
    export_svg_scatter(pts, path)
    text = path.read_text()
    assert text.count("<circle") == 6
    assert 'width="800" height="800"' in text


def test_svg_empty_input_valid():
    text = svg_scatter([])
    assert text.startswith("<svg")
    assert text.rstrip().endswith("</svg>")
    assert "<circle" not in text
    assert "<line" in text  # axes ticks are still drawn


def test_svg_rejects_nonfinite():
    with pytest.raises(ParameterError):
        svg_scatter([complex(np.inf, 0)])


def test_svg_fixed_limits():
    text = svg_scatter([0.5 + 0.5j], SvgStyle(xlim=(-2, 2), ylim=(-2, 2)))
    assert "<circle" in text


def test_rows_to_json_sorted_keys():
    out = rows_to_json("s_alpha", 1, [{"alpha": 1, "s_alpha": -0.5}])
    assert out.index('"alpha"') < out.index('"s_alpha"')


def test_rows_to_csv_int_vs_float_formatting():
    out = rows_to_csv("s_alpha", [{"alpha": 3, "s_alpha": -0.10761028550679577}])
    line = out.strip().split("\n")[1]
    assert line.startswith("3,")
    assert float(line.split(",")[1]) == -0.10761028550679577
