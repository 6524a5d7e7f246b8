"""Acceptance: figures render from real 40-node impulse runs, repeatably."""

from netosc_figures import PanelSpec, render, render_compare
from netosc_figures.panels import build_figure
from netosc_figures.csvdata import load_trajectory

PANEL_TIMES = (0.0, 2.0, 4.0, 6.0, 8.0, 10.0)


def test_six_panel_displacement_figure(impulse40_csvs, tmp_path):
    spec = PanelSpec(quantity="displacement", times=PANEL_TIMES)
    table = load_trajectory(impulse40_csvs["fermion"])
    assert len(build_figure(table, spec).axes) == 6
    out = tmp_path / "fermion_displacement.png"
    render(impulse40_csvs["fermion"], spec, out)
    first = out.read_bytes()
    render(impulse40_csvs["fermion"], spec, out)
    assert out.read_bytes() == first


def test_two_column_comparison_figure(impulse40_csvs, tmp_path):
    for quantity in ("displacement", "velocity"):
        spec = PanelSpec(quantity=quantity, times=PANEL_TIMES)
        out = tmp_path / f"compare_{quantity}.png"
        render_compare(
            impulse40_csvs["boson"],
            impulse40_csvs["fermion"],
            spec,
            out,
            label_a="boson",
            label_b="fermion",
        )
        first = out.read_bytes()
        render_compare(
            impulse40_csvs["boson"],
            impulse40_csvs["fermion"],
            spec,
            out,
            label_a="boson",
            label_b="fermion",
        )
        assert out.read_bytes() == first


def test_shifted_frame_panels(impulse40_csvs, tmp_path):
    spec = PanelSpec(quantity="velocity", times=PANEL_TIMES)
    out = tmp_path / "shifted_velocity.png"
    render(impulse40_csvs["shifted"], spec, out)
    assert out.stat().st_size > 0
