import io

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cosconv import Group, Signal, cosine_convolve, dct_fast
from cosconv import csvio
from cosconv.cli import generate, main
from cosconv.rng import SplitMix64
from cosconv.transform import cosine_transform_real


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, f):
    p = tmp_path / name
    p.write_text(csvio.signal_to_csv(f))
    return str(p)


def rows(text):
    return [line.split(",") for line in text.splitlines()[2:]]


def test_gen_delta(capsys):
    code, out, _ = run(capsys, "gen", "--group", "cyclic:4", "--kind", "delta:0")
    assert code == 0
    assert out == "# group=cyclic:n=4\npoint,value\n0,1\n1,0\n2,0\n3,0\n"


def test_gen_gaussian_and_random(capsys):
    _, out, _ = run(capsys, "gen", "--group", "real:L=8,h=0.125", "--kind", "gaussian")
    f = csvio.read_signal(out)
    np.testing.assert_array_equal(f.values, np.exp(-np.pi * f.group.points() ** 2))
    _, a, _ = run(capsys, "gen", "--group", "cyclic:8", "--kind", "random:42")
    _, b, _ = run(capsys, "gen", "--group", "cyclic:8", "--kind", "random:42")
    assert a == b
    np.testing.assert_array_equal(csvio.read_signal(a).values, SplitMix64(42).uniform(8))


@pytest.mark.parametrize("argv", [
    ["gen", "--group", "cyclic:4", "--kind", "spike"],
    ["gen", "--group", "cyclic:4", "--kind", "random"],
    ["gen", "--group", "torus:4", "--kind", "delta:0"],
    ["gen", "--group", "integers:3", "--kind", "delta:7"],
    ["gen", "--group", "cyclic:4"],
    ["frobnicate"],
    ["gen", "--group", "cyclic:4", "--kind", "delta:0", "-o", "/nonexistent/dir/x.csv"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_transform_example(capsys, tmp_path):
    path = write(tmp_path, "f.csv", Signal(Group.cyclic(4), [1, 2, 3, 4]))
    for extra in ([], ["--naive"]):
        code, out, _ = run(capsys, "transform", "--input", path, *extra)
        assert code == 0
        assert rows(out) == [["0", "10"], ["1", "-2"], ["2", "-2"]]
    _, out, _ = run(capsys, "transform", "--input", path, "--tokens")
    assert rows(out)[1] == ["cyclic4:l=1", "-2"]
    _, out, _ = run(capsys, "transform", "--input", path, "--full")
    assert [r[1] for r in rows(out)] == ["10", "-2", "-2", "-2"]
    code, _, err = run(capsys, "transform", "--input", path, "--coords", "3")
    assert code == 2 and "cyclic coordinate" in err


def test_transform_real_gaussian(capsys, tmp_path):
    g = Group.real(8, 1 / 64)
    path = write(tmp_path, "g.csv", generate(g, "gaussian"))
    code, out, _ = run(capsys, "transform", "--input", path, "--coords", "0,1,2,3,4")
    assert code == 0
    S = csvio.read_spectrum(out)
    np.testing.assert_allclose(S.values, np.exp(-np.pi * np.arange(5.0) ** 2), atol=1e-6)
    code, _, _ = run(capsys, "transform", "--input", path)
    assert code == 2


def test_transform_circle_default_count(capsys, tmp_path):
    g = Group.circle(8)
    path = write(tmp_path, "c.csv", Signal.from_function(g, lambda x: np.cos(2 * np.pi * x)))
    _, out, _ = run(capsys, "transform", "--input", path)
    S = csvio.read_spectrum(out)
    assert list(S.coords) == [0, 1, 2, 3]
    np.testing.assert_allclose(S.values, [0, 0.5, 0, 0], atol=1e-12)


def test_gen_transform_round_trip_is_exact(capsys, tmp_path):
    out = tmp_path / "f.csv"
    assert main(["gen", "--group", "cyclic:1000", "--kind", "random:5", "-o", str(out)]) == 0
    _, text, _ = run(capsys, "transform", "--input", str(out))
    S = csvio.read_spectrum(text)
    expected = dct_fast(Signal(Group.cyclic(1000), SplitMix64(5).uniform(1000)))
    np.testing.assert_array_equal(S.values, expected.values)

    g = Group.real(2, 0.125)
    assert main(["gen", "--group", g.describe(), "--kind", "box:0:1", "-o", str(out)]) == 0
    _, text, _ = run(capsys, "transform", "--input", str(out), "--coords", "0.25,real:y=1.5")
    ref = cosine_transform_real(generate(g, "box:0:1"), [0.25, 1.5])
    np.testing.assert_array_equal(csvio.read_spectrum(text).values, ref.values)


@pytest.mark.parametrize("mode, f, h, n, expected", [
    ("cosine", 1, 1, 4, [0.5, 0, 0.5, 0]),
    ("classic", 1, 2, 8, [0, 0, 0, 1, 0, 0, 0, 0]),
    ("anti", 1, 0, 4, [0, 0, 0, 1]),
])
def test_convolve_examples(capsys, tmp_path, mode, f, h, n, expected):
    g = Group.cyclic(n)
    pf = write(tmp_path, "f.csv", Signal.delta(g, f))
    ph = write(tmp_path, "h.csv", Signal.delta(g, h))
    code, out, _ = run(capsys, "convolve", "--f", pf, "--g", ph, "--mode", mode)
    assert code == 0
    np.testing.assert_array_equal(csvio.read_signal(out).values, expected)


def test_convolve_fast_and_errors(capsys, tmp_path):
    g = Group.cyclic(16)
    rng = SplitMix64(2)
    f, h = Signal(g, rng.uniform(16)), Signal(g, rng.uniform(16))
    pf, ph = write(tmp_path, "f.csv", f), write(tmp_path, "h.csv", h)
    _, out, _ = run(capsys, "convolve", "--f", pf, "--g", ph, "--fast")
    np.testing.assert_allclose(csvio.read_signal(out).values, cosine_convolve(f, h).values, atol=1e-14)
    other = write(tmp_path, "o.csv", Signal.delta(Group.cyclic(8), 0))
    assert run(capsys, "convolve", "--f", pf, "--g", other)[0] == 2
    assert run(capsys, "convolve", "--f", pf, "--g", ph, "--fast", "--mode", "anti")[0] == 2
    assert run(capsys, "convolve", "--f", pf, "--g", ph, "--group", "cyclic:8")[0] == 2


def test_verify_exit_codes(capsys, tmp_path):
    small = ["--trials", "2", "--cyclic-sizes", "1,4,8", "--circle-sizes", "8"]
    code, out, _ = run(capsys, "verify", *small)
    assert code == 0 and out.endswith("properties)\n") and "overall: PASS" in out
    code, out, _ = run(capsys, "verify", *small, "--tol", "0")
    assert code == 1 and "overall: FAIL" in out
    csv = tmp_path / "r.csv"
    rep = tmp_path / "r.txt"
    assert main(["verify", *small, "--csv", str(csv), "--report", str(rep)]) == 0
    assert csv.read_text().startswith("property,residual,tol,verdict\n")
    assert rep.read_text().startswith("cosconv verification report\n")
    assert run(capsys, "verify", "--tol", "-1")[0] == 2
    assert run(capsys, "verify", "--cyclic-sizes", "a,b")[0] == 2


def test_seed_from_environment(capsys, monkeypatch):
    small = ["verify", "--trials", "1", "--cyclic-sizes", "4", "--circle-sizes", "8"]
    monkeypatch.setenv("COSCONV_SEED", "9")
    _, env_out, _ = run(capsys, *small)
    assert "seed=9 " in env_out
    _, flag_out, _ = run(capsys, *small, "--seed", "9")
    assert env_out == flag_out
    monkeypatch.setenv("COSCONV_SEED", "nine")
    assert run(capsys, *small)[0] == 2


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "1,64,512", "--repeats", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,dct_naive_ns,dct_fast_ns,cosine_naive_ns,cosine_fast_ns"
    table = [list(map(int, l.split(","))) for l in lines[1:]]
    assert [r[0] for r in table] == [1, 64, 512]
    naive = [r[1] for r in table]
    assert naive[0] < naive[1] < naive[2]
    assert run(capsys, "bench", "--sizes", "0")[0] == 2
    assert run(capsys, "bench", "--repeats", "0")[0] == 2


def test_bench_reports_mismatch(capsys, monkeypatch):
    from cosconv import bench
    monkeypatch.setattr(bench, "cosine_convolve_fast", lambda f, g: f)
    code, _, err = run(capsys, "bench", "--sizes", "8", "--repeats", "1")
    assert code == 1 and "mismatch" in err


def test_signal_csv_format_and_errors():
    g = Group.cyclic(3)
    text = csvio.signal_to_csv(Signal(g, [0.1, 1 / 3, -2.5]))
    assert text == "# group=cyclic:n=3\npoint,value\n0,0.10000000000000001\n1,0.33333333333333331\n2,-2.5\n"
    shuffled = "# group=cyclic:n=3\npoint,value\n2,-2.5\n0,0.1\n1,1\n"
    assert csvio.read_signal(shuffled).values.tolist() == [0.1, 1, -2.5]
    bad = [
        "point,value\n0,1\n",                                   # no group at all
        "# group=cyclic:n=2\npoint,value\n0,1\n",               # missing point
        "# group=cyclic:n=2\npoint,value\n0,1\n0,2\n1,0\n",     # duplicate
        "# group=cyclic:n=2\nx,y\n0,1\n1,0\n",                  # header
        "# group=cyclic:n=2\npoint,value\n0,1,2\n1,0\n",        # columns
        "# group=cyclic:n=2\npoint,value\n0,abc\n1,0\n",        # value
        "# group=cyclic:n=2\n",                                 # empty
    ]
    for t in bad:
        with pytest.raises(ValueError):
            csvio.read_signal(t)
    with pytest.raises(ValueError, match="declares"):
        csvio.read_signal(text, Group.cyclic(4))
    assert csvio.read_signal("point,value\n0,1\n1,2\n", Group.cyclic(2)).values.tolist() == [1, 2]


def test_complex_values_round_trip():
    g = Group.cyclic(3)
    f = Signal(g, [1 + 2j, -0.5j, 3 + 0j])
    back = csvio.read_signal(csvio.signal_to_csv(f))
    np.testing.assert_array_equal(back.values, f.values)


finite = st.floats(allow_nan=False, allow_infinity=False)


@given(st.sampled_from([Group.cyclic(5), Group.circle(7), Group.integers(2), Group.real(1, 0.25)]),
       st.data())
def test_signal_csv_round_trip_is_bit_exact(g, data):
    vals = data.draw(st.lists(finite, min_size=g.size, max_size=g.size))
    f = Signal(g, vals)
    back = csvio.read_signal(io.StringIO(csvio.signal_to_csv(f)))
    assert back.group == g
    assert back.values.tobytes() == f.values.tobytes()


@given(st.lists(finite, min_size=3, max_size=3))
def test_spectrum_csv_round_trip(vals):
    from cosconv.transform import Spectrum
    S = Spectrum(Group.integers(3), [0.0, 0.1, 0.5], vals, "discrete-time-cosine")
    back = csvio.read_spectrum(csvio.spectrum_to_csv(S))
    assert list(back.coords) == list(S.coords) and back.kind == S.kind
    assert back.values.tobytes() == S.values.tobytes()
