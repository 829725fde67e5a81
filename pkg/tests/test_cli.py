import dataclasses
import io
import json
import pathlib

import numpy as np
import pytest

from ctxsim import cli, demo
from ctxsim.report import ReportDocument

HERE = pathlib.Path(__file__).parent
DATA = pathlib.Path(demo.__file__).parent / "data"
CTX1 = str(DATA / "countries_poland.csv")
CTX2 = str(DATA / "countries_norway.csv")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--output", "json")
    assert code == 0, err
    return json.loads(out)


def test_weights_context1(capsys):
    doc = run_json(capsys, "weights", CTX1)
    assert [a["probability"] for a in doc["attributes"]] == [0.25, 0.5, 0.5, 0.5]
    assert [a["weight"] for a in doc["attributes"]] == pytest.approx([0.678, 1, 1, 1], abs=5e-4)
    code, out, _ = run(capsys, "weights", CTX1)
    assert "h(p_j)     0.678  1.000    1.000      1.000" in out


def test_weights_context2(capsys):
    doc = run_json(capsys, "weights", CTX2)
    assert [a["probability"] for a in doc["attributes"]] == [0.5, 0.5, 0.25, 0.5]
    assert [a["weight"] for a in doc["attributes"]] == pytest.approx([1, 1, 0.678, 1], abs=5e-4)


def test_weights_identical_rows(capsys, tmp_path):
    f = tmp_path / "same.csv"
    f.write_text("name,a,b\nx,1,0\ny,1,0\nz,1,0\n")
    doc = run_json(capsys, "weights", str(f))
    assert [a["weight"] for a in doc["attributes"]] == [0.0, 0.0]


def test_json_numbers_equal_api_exactly(capsys):
    from ctxsim import dissimilarity_matrix
    ds = demo.load_dataset("countries_poland.csv")
    ctx = ds.context()
    doc = run_json(capsys, "weights", CTX1)
    assert [a["weight"] for a in doc["attributes"]] == ctx.weights.tolist()
    doc = run_json(capsys, "distmat", CTX1)
    assert doc["matrix"] == dissimilarity_matrix(ctx, ds.cases).entries.tolist()


def test_report_json_roundtrip():
    doc = demo.run_demo()
    again = ReportDocument.from_json(doc.to_json())
    assert again.to_dict() == doc.to_dict()
    assert again.to_text() == doc.to_text()


def test_distmat_text(capsys):
    _, out, _ = run(capsys, "distmat", CTX1)
    assert "Poland   Hungary  1.000" in out
    _, out, _ = run(capsys, "distmat", CTX2)
    assert "Sweden   Norway   1.000" in out


def test_distmat_single_case(capsys, tmp_path):
    f = tmp_path / "one.csv"
    f.write_text("name,a\nx,1\n")
    doc = run_json(capsys, "distmat", str(f))
    assert doc["matrix"] == [[0.0]] and doc["pairs"] == []


def test_rank(capsys):
    assert run_json(capsys, "rank", CTX1, "Austria")["winner"] == "Sweden"
    doc = run_json(capsys, "rank", CTX2, "Austria")
    assert doc["winner"] == "Hungary"
    assert [r["name"] for r in doc["ranked"]] == ["Hungary", "Sweden", "Norway"]
    assert doc["ties"] == []


def test_rank_candidates_and_self(capsys):
    doc = run_json(capsys, "rank", CTX1, "Austria", "--candidates", "Hungary,Austria,Poland")
    assert doc["winner"] == "Austria"
    assert doc["ranked"][0]["distance"] == 0.0


def test_rank_with_external_context(capsys):
    # Austria/Sweden/Hungary compared under the Norway context
    doc = run_json(capsys, "rank", CTX1, "Austria", "--candidates", "Sweden,Hungary", "--context", CTX2)
    assert doc["winner"] == "Hungary"


def test_rank_unknown_case(capsys):
    code, _, err = run(capsys, "rank", CTX1, "Norway")
    assert code == 1 and "Norway" in err


def test_bad_input_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.csv"
    f.write_text("name,a\nx,2\n")
    code, out, err = run(capsys, "weights", str(f))
    assert code == 1
    assert "row 2, column 2" in err and out == ""
    code, _, err = run(capsys, "weights", str(tmp_path / "missing.csv"))
    assert code == 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["stream", CTX1, "--alpha-floor", "0"])
    assert info.value.code == 1


def test_json_input_via_stdin(capsys, monkeypatch):
    text = json.dumps({"attributes": ["a", "b"], "cases": [{"name": "x", "values": [1, 0]},
                                                           {"name": "y", "values": [0, 0]}]})
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    doc = run_json(capsys, "weights", "-", "--format", "json")
    assert doc["attributes"][0]["probability"] == 0.5


def test_stream_matches_weights(capsys):
    batch = [a["weight"] for a in run_json(capsys, "weights", CTX1)["attributes"]]
    doc = run_json(capsys, "stream", CTX1, "--alpha-floor", "4")
    assert len(doc["snapshots"]) == 1
    np.testing.assert_allclose(doc["snapshots"][0]["weights"], batch, atol=1e-9)


def test_stream_snapshot_every(capsys):
    doc = run_json(capsys, "stream", CTX1, "--snapshot-every", "3", "--alpha-floor", "none")
    assert [s["observed"] for s in doc["snapshots"]] == [3, 4]
    assert doc["alpha_floor"] is None
    doc = run_json(capsys, "stream", CTX1, "--snapshot-every", "50")
    assert [s["observed"] for s in doc["snapshots"]] == [4]


def periodic_ewma_limit(period_rows, alpha):
    """Fixed point of p <- (1 - a) p + a x over one full period, ending after its last row."""
    X = np.asarray(period_rows, dtype=float)
    T = len(X)
    decay = (1 - alpha) ** np.arange(T)[::-1]
    return alpha * (decay[:, None] * X).sum(axis=0) / (1 - (1 - alpha) ** T)


def test_stream_drifts_toward_new_context(capsys, tmp_path):
    from ctxsim.weights import attribute_weight
    c1 = (DATA / "countries_poland.csv").read_text().splitlines()
    c2 = (DATA / "countries_norway.csv").read_text().splitlines()[1:]
    rows = c1[:]
    for rep in range(60):
        rows += [f"{line.split(',', 1)[0]}{rep},{line.split(',', 1)[1]}" for line in c2]
    f = tmp_path / "drift.csv"
    f.write_text("\n".join(rows) + "\n")
    doc = run_json(capsys, "stream", str(f), "--alpha-floor", "8", "--snapshot-every", "4")
    target = [a["weight"] for a in run_json(capsys, "weights", CTX2)["attributes"]]
    first = np.abs(np.subtract(doc["snapshots"][0]["weights"], target)).max()
    assert first > 0.3
    # context-1 influence has decayed by (7/8)^240; only the periodic ripple remains
    period = [[int(v) for v in line.split(",")[1:]] for line in c2]
    limit = attribute_weight(periodic_ewma_limit(period, 1 / 8))
    np.testing.assert_allclose(doc["snapshots"][-1]["weights"], limit, atol=1e-9)
    last = np.abs(np.subtract(doc["snapshots"][-1]["weights"], target)).max()
    assert last < first


def test_demo_matches_golden(capsys):
    code, out, _ = run(capsys, "demo")
    assert code == 0
    assert out == (HERE / "golden" / "demo.txt").read_text()


def test_demo_precision(capsys):
    code, out, _ = run(capsys, "demo", "--precision", "6")
    assert code == 0
    assert "Austria  Sweden   1.678072" in out
    assert out == (HERE / "golden" / "demo_p6.txt").read_text()


def test_demo_json(capsys):
    doc = run_json(capsys, "demo")
    assert doc["passed"] is True
    assert [c["rank"]["winner"] for c in doc["contexts"]] == ["Sweden", "Hungary"]


_load_original = demo.load_demo_contexts


def _perturbed():
    from ctxsim import CaseVector
    from ctxsim.dataset import Dataset
    contexts = _load_original()
    ds = contexts[1].dataset
    # Norway no longer northern: the grouping flip disappears
    cases = tuple(CaseVector(c.name, (0, 0, 0, 0)) if c.name == "Norway" else c for c in ds.cases)
    contexts[1] = dataclasses.replace(contexts[1], dataset=Dataset(ds.schema, cases))
    return contexts


def test_demo_fails_on_perturbed_table(capsys, monkeypatch):
    monkeypatch.setattr(demo, "load_demo_contexts", _perturbed)
    code, out, err = run(capsys, "demo")
    assert code == 2
    assert "[FAIL]" in out and "result: FAIL" in out
    assert "deviate" in err


def test_demo_fails_on_perturbed_expectation(monkeypatch):
    contexts = demo.load_demo_contexts()
    contexts[0] = dataclasses.replace(contexts[0], weights=(0.6784, 1, 1, 1))
    assert demo.run_demo(contexts=contexts).passed is True  # within 5e-4
    contexts[0] = dataclasses.replace(contexts[0], weights=(0.6790, 1, 1, 1))
    assert demo.run_demo(contexts=contexts).passed is False
