import itertools
import math
import re

import numpy as np
import pytest
from hypothesis import given

from antipodal.cli import run_command
from antipodal.core import Selection, regular_set
from antipodal.music import PITCH_NAMES, has_tritone, max_even_scale, music_clock_set, scale_notes
from antipodal.oracle import brute_extremes
from antipodal.setfile import (
    SetFileError,
    parse_set_file,
    parse_set_text,
    parse_vectors,
    serialize_set,
)
from antipodal.solvers import solve
from antipodal.svg import emit_svg, render_svg
from reference import antipodal_sets


@pytest.fixture
def reg3_file(tmp_path):
    p = tmp_path / "reg3.txt"
    p.write_text("0\n60\n120\n")
    return p


@pytest.fixture
def reg6_file(tmp_path):
    p = tmp_path / "reg6.txt"
    p.write_text("".join(f"{30 * k}\n" for k in range(6)))
    return p


class TestSetFiles:
    def test_reg3(self, reg3_file):
        assert np.allclose(parse_set_file(reg3_file).angles, regular_set(3).angles, atol=1e-15)

    def test_duplicate(self):
        with pytest.raises(SetFileError, match="duplicate"):
            parse_set_text("0\n0.0000000001\n90\n")

    def test_comments_and_blanks(self):
        plain = parse_set_text("10\n50\n100\n")
        commented = parse_set_text("# header\n10\n\n50  # middle\n   \n100\n")
        assert plain == commented

    def test_radians(self):
        s = parse_set_text("0\n1\n2\n", unit="rad")
        assert np.allclose(s.angles, [0, 1, 2])

    def test_line_number_in_error(self):
        with pytest.raises(SetFileError, match="line 3"):
            parse_set_text("0\n10\nforty\n")

    def test_empty(self):
        with pytest.raises(SetFileError):
            parse_set_text("# nothing\n\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(SetFileError, match="cannot read"):
            parse_set_file(tmp_path / "absent.txt")

    def test_serialize_format(self):
        assert serialize_set(regular_set(3)) == "0.000000000000\n60.000000000000\n120.000000000000\n"

    @given(antipodal_sets(max_n=12))
    def test_round_trip(self, aset):
        canon = parse_set_text(serialize_set(aset))
        again = parse_set_text(serialize_set(canon))
        assert serialize_set(again) == serialize_set(canon)
        assert np.allclose(canon.angles, aset.angles, atol=1e-13)

    @given(antipodal_sets(max_n=12))
    def test_round_trip_radians(self, aset):
        canon = parse_set_text(serialize_set(aset, "rad"), unit="rad")
        assert serialize_set(parse_set_text(serialize_set(canon, "rad"), unit="rad"), "rad") == serialize_set(canon, "rad")

    def test_vectors(self):
        rows = parse_vectors("1 0 0\n# c\n0 1 0\n")
        assert rows.shape == (2, 3)
        with pytest.raises(SetFileError, match="line 2"):
            parse_vectors("1 0\n1 0 0\n")


class TestSvg:
    def test_deterministic(self, reg3, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        emit_svg(reg3, [Selection("000")], a)
        emit_svg(reg3, [Selection("000")], b)
        assert a.read_bytes() == b.read_bytes()

    def test_layout(self, reg3):
        text = render_svg(reg3, [Selection("000")])
        assert 'width="600" height="600"' in text
        assert 'r="250.000000"' in text
        # three filled base points and three hollow antipodes
        assert text.count('fill="#000000"') == 3
        assert text.count('fill="#ffffff" stroke="#000000"') == 3
        assert "time" not in text.lower()

    def test_six_decimals(self, reg3):
        text = render_svg(reg3, [Selection("010")])
        coords = re.findall(r'c[xy]="([^"]+)"', text)
        coords += re.findall(r'd="([^"]+)"', text)[0].replace("M", "").replace("L", "").replace("Z", "").split()
        assert len(coords) > 12
        assert all(re.fullmatch(r"-?\d+\.\d{6}", c) for c in coords)

    def test_two_styles(self, reg3):
        text = render_svg(reg3, [(Selection("000"), 0), (Selection("010"), 1)])
        paths = re.findall(r"<path [^>]*>", text)
        assert len(paths) == 2
        assert 'data-class="thin"' in paths[0] and 'data-class="thick"' in paths[1]
        assert re.search(r'stroke="([^"]+)"', paths[0]).group(1) != re.search(r'stroke="([^"]+)"', paths[1]).group(1)

    def test_overlay_limit(self, reg3):
        with pytest.raises(ValueError):
            render_svg(reg3, [Selection("000")] * 5)

    def test_bytes_written(self, reg3, tmp_path):
        p = tmp_path / "x.svg"
        assert emit_svg(reg3, [Selection("000")], p) == p.stat().st_size

    def test_unwritable(self, reg3, tmp_path):
        with pytest.raises(OSError):
            emit_svg(reg3, [Selection("000")], tmp_path / "missing" / "x.svg")


class TestMusic:
    def test_clock(self):
        aset, labels = music_clock_set()
        assert aset.n == 6 and len(labels) == 12
        assert np.allclose(np.degrees(aset.angles), [0, 30, 60, 90, 120, 150])
        assert labels[0] == "C" and labels[6] == "F#"

    def test_every_selection_avoids_tritones(self):
        for bits in itertools.product((0, 1), repeat=6):
            pcs = [k + 6 * b for k, b in enumerate(bits)]
            assert not has_tritone(pcs)

    def test_tritone_detection(self):
        assert has_tritone([0, 6])
        assert not has_tritone([0, 4, 7])

    def test_max_scale_is_enumeration_max(self):
        aset, _ = music_clock_set()
        sel, area, notes = max_even_scale()
        assert area == pytest.approx(brute_extremes(aset)[1].area, abs=1e-12)
        assert len(notes) == 6 and set(notes) <= set(PITCH_NAMES)

    def test_scale_notes_sorted_by_pitch(self):
        assert scale_notes(Selection("000000")) == ["C", "C#", "D", "D#", "E", "F"]
        assert scale_notes(Selection("100000")) == ["C#", "D", "D#", "E", "F", "F#"]


class TestCommands:
    def test_solve_max(self, reg3_file, capsys):
        assert run_command(["solve", str(reg3_file), "--objective", "max"]) == 0
        out = capsys.readouterr().out
        assert "selection: 010" in out
        assert "area: 1.299038" in out
        assert "classification: thick" in out

    def test_solve_area_matches_library(self, tmp_path, capsys):
        p = tmp_path / "s.txt"
        p.write_text("3\n41\n77\n98\n151\n170\n")
        aset = parse_set_file(p)
        for obj in ("min", "max"):
            assert run_command(["solve", str(p), "--objective", obj]) == 0
            out = capsys.readouterr().out
            assert f"area: {solve(aset, obj).area:.6f}" in out

    def test_solve_k(self, reg6_file, capsys):
        assert run_command(["solve", str(reg6_file), "--objective", "min", "--k", "3"]) == 0
        out = capsys.readouterr().out
        assert f"area: {(1 - math.sqrt(3) / 2) / 2:.6f}" in out

    def test_classify(self, reg6_file, capsys):
        assert run_command(["classify", str(reg6_file), "--selection", "000000"]) == 0
        out = capsys.readouterr().out
        assert "thin: yes" in out and "thick: no" in out and "classification: thin" in out

    def test_k_with_classify_is_usage_error(self, reg3_file):
        assert run_command(["classify", str(reg3_file), "--selection", "010", "--k", "3"]) == 2

    def test_bad_selection(self, reg3_file):
        assert run_command(["classify", str(reg3_file), "--selection", "01"]) == 2
        assert run_command(["classify", str(reg3_file), "--selection", "0a0"]) == 2

    def test_parse_error_exit(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("0\nx\n")
        assert run_command(["solve", str(p), "--objective", "min"]) == 2

    def test_unknown_command(self):
        assert run_command(["frobnicate"]) == 2

    def test_verify(self, capsys):
        assert run_command(["verify", "--max-n", "8", "--seed", "42"]) == 0
        out = capsys.readouterr().out
        assert "passed: no" not in out
        assert "summary: 0 failing report(s)" in out

    def test_verify_range(self):
        assert run_command(["verify", "--max-n", "40"]) == 2

    def test_flips(self, reg6_file, capsys):
        assert run_command(["flips", str(reg6_file), "--selection", "110011"]) == 0
        out = capsys.readouterr().out
        assert "flip_run" in out and "(thick)" in out.splitlines()[-1]

    def test_counterexample(self, capsys):
        assert run_command(["counterexample", "--n", "6", "--eta", "0.01"]) == 0
        out = capsys.readouterr().out
        assert "Q non-thick beats P thick" in out
        area_p = float(re.search(r"P: \d+ area ([\d.]+)", out).group(1))
        area_q = float(re.search(r"Q: \d+ area ([\d.]+)", out).group(1))
        assert area_p == pytest.approx(1, abs=0.05) and area_q == pytest.approx(2, abs=0.05)

    def test_counterexample_bad_n(self):
        assert run_command(["counterexample", "--n", "5"]) == 2

    def test_polytope(self, capsys):
        assert run_command(["polytope", "--d", "3", "--eps", "0.01"]) == 0
        out = capsys.readouterr().out
        assert "volume_first: 0.659868 origin_inside: no" in out
        assert "origin_inside: yes" in out

    def test_gale(self, capsys):
        assert run_command(["gale", "--d", "3", "--k", "2"]) == 0
        assert "hemisphere_min_count: 2" in capsys.readouterr().out

    def test_scales(self, capsys):
        assert run_command(["scales"]) == 0
        out = capsys.readouterr().out
        assert "tritone-free: yes" in out and "matches enumeration: yes" in out

    def test_plot(self, reg3_file, tmp_path):
        out = tmp_path / "fig.svg"
        assert run_command(["plot", str(reg3_file), "--selection", "000", "--selection", "010", "--out", str(out)]) == 0
        first = out.read_bytes()
        run_command(["plot", str(reg3_file), "--selection", "000", "--selection", "010", "--out", str(out)])
        assert out.read_bytes() == first

    def test_plot_too_many(self, reg3_file, tmp_path):
        args = ["plot", str(reg3_file), "--out", str(tmp_path / "f.svg")]
        assert run_command(args + ["--selection", "000"] * 5) == 2

    def test_bench(self, capsys):
        assert run_command(["bench", "--sizes", "100", "200", "--repeats", "1"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 3 and lines[0].split()[0] == "n"
