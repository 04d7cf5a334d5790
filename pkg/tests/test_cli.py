import csv
import io
import json
import logging
import math
from pathlib import Path

import pytest

from leray_trudinger.cli import (
    EXIT_CONFIG,
    EXIT_INVARIANT,
    EXIT_OK,
    ScenarioConfig,
    cell_digest,
    csv_text,
    format_float,
    main,
    parse_config,
    sweep_cells,
    verify_manifest,
)
from leray_trudinger.errors import ConfigurationError
from leray_trudinger.funcspace import FamilySpec, make_family
from leray_trudinger.geometry import BallDomain


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def test_constants_table():
    code, text = run("constants", "--n", "2", "3", "4")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [int(r["n"]) for r in rows] == [2, 3, 4]
    assert [int(r["C1"]) for r in rows] == [1, 3, 7]
    assert float(rows[0]["C_n"]) == pytest.approx(2 / math.sqrt(math.pi), rel=1e-14)


def test_counterexample_divergent_and_control():
    code, text = run("counterexample", "--n", "2", "--beta", "0.25", "--s", "0.4", "--c", "0.2")
    assert code == EXIT_OK
    assert text.strip().endswith("verdict: DIVERGENT")
    header = text.splitlines()[0]
    assert header == "epsilon,truncated_T,growth_ratio,I_n"
    code, text = run("counterexample", "--n", "2", "--beta", "1.0", "--s", "0.4", "--c", "0.2")
    assert code == EXIT_OK
    assert text.strip().endswith("verdict: CONVERGENT")


def test_counterexample_outside_window_exits_3(capsys):
    code, _ = run("counterexample", "--n", "2", "--beta", "0.25", "--s", "0.6", "--c", "0.2")
    assert code == EXIT_CONFIG
    assert "(beta, 1/n)" in capsys.readouterr().err


def test_functional_command_json():
    code, text = run("functional", "I_n", "--n", "2", "--family", "pure_power",
                     "--param", "a=1", "--param", "t_cap=2")
    assert code == EXIT_OK
    rep = json.loads(text)
    assert rep["status"] == "converged"
    assert rep["value"] == pytest.approx(2 * math.pi - math.pi * (1 - math.log(2)), rel=1e-10)


def test_bad_config_rejected(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"command": "constants", "colour": "blue"}))
    code, _ = run("--config", str(bad))
    assert code == EXIT_CONFIG
    with pytest.raises(ConfigurationError):
        parse_config("[1, 2]")
    with pytest.raises(ConfigurationError):
        ScenarioConfig.from_dict({"command": "functional", "rho": 2.0, "R": 1.0})
    with pytest.raises(ConfigurationError):
        ScenarioConfig.from_dict({"command": "functional", "n": 2.5})


def test_config_round_trip():
    cfg = ScenarioConfig.from_dict({"command": "counterexample", "n": 2, "beta": 0.25,
                                    "s": 0.4, "c": 0.2, "seed": 7})
    back = parse_config(cfg.canonical_json())
    assert back == cfg
    assert back.digest() == cfg.digest()
    assert json.loads(cfg.canonical_json())["seed"] == 7


def test_config_file_drives_command(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"command": "constants", "ns": [5]}))
    code, text = run("--config", str(path))
    assert code == EXIT_OK
    assert text.splitlines()[1].startswith("5,15,")


def test_format_float_round_trips():
    for x in (0.1, 1 / 3, 1e-300, math.pi * 1e12):
        assert float(format_float(x)) == x
    text = csv_text(["a", "b"], [{"a": 1, "b": 0.5}])
    assert text == "a,b\n1,0.5\n"


def test_sweep_reproducible_and_cached(tmp_path):
    out = tmp_path / "run"
    code, first = run("--out", str(out), "sweep", "--preset", "gap")
    assert code == EXIT_OK
    body1 = (out / "sweep.csv").read_bytes()
    assert json.loads(first)["cache_hits"] == 0
    code, second = run("--out", str(out), "sweep", "--preset", "gap")
    assert code == EXIT_OK
    assert (out / "sweep.csv").read_bytes() == body1
    summary = json.loads(second)
    assert summary["full_cache_hit"] and summary["cache_hits"] == summary["cells"]
    manifests = sorted(out.glob("manifest-*.json"))
    assert len(manifests) == 2
    for m in manifests:
        assert verify_manifest(m) == []
        doc = json.loads(m.read_text())
        assert doc["seed"] == 0 and doc["config"]["preset"] == "gap"


def test_sweep_fresh_directory_matches(tmp_path):
    run("--out", str(tmp_path / "a"), "sweep", "--preset", "gap")
    run("--out", str(tmp_path / "b"), "sweep", "--preset", "gap")
    assert (tmp_path / "a" / "sweep.csv").read_bytes() == (tmp_path / "b" / "sweep.csv").read_bytes()


def test_manifest_detects_tampering(tmp_path):
    out = tmp_path / "run"
    run("--out", str(out), "constants")
    (out / "constants.csv").write_text("tampered\n")
    manifest = next(out.glob("manifest-*.json"))
    assert verify_manifest(manifest) == ["constants.csv"]


def test_sweep_needs_out():
    code, _ = run("sweep", "--preset", "gap")
    assert code == EXIT_CONFIG


def test_cell_digest_stable():
    cells = sweep_cells(ScenarioConfig.from_dict({"command": "sweep", "preset": "gap"}))
    assert len(cells) == 72
    assert len({cell_digest(c) for c in cells}) == 72
    assert cell_digest(cells[0]) == cell_digest(dict(reversed(list(cells[0].items()))))


def test_verify_passes():
    code, text = run("verify", "--profile-count", "3")
    assert code == EXIT_OK
    assert all(line.startswith("PASS") for line in text.splitlines())


def test_verify_replay_fails_deterministically(tmp_path):
    dom = BallDomain(2)
    # A growing profile lies outside the dual-path invariant's class.
    u = make_family(FamilySpec("ground_state_power", {"s": 0.3}), dom)
    case = {"invariant": "dual_path", "domain": dom.to_dict(), "profile": u.to_dict(), "params": {}}
    path = tmp_path / "replay.json"
    path.write_text(json.dumps([case]))
    outs = []
    for k in range(2):
        out = tmp_path / f"out{k}"
        code, text = run("--out", str(out), "verify", "--replay", str(path))
        assert code == EXIT_INVARIANT
        assert "FAIL dual_path (1 cases, 1 failures)" in text
        outs.append((out / "replay.json").read_bytes())
    assert outs[0] == outs[1]


def test_verify_warns_on_loose_tolerance(caplog):
    with caplog.at_level(logging.WARNING):
        code, _ = run("--tol", "1e-3", "verify", "--profile-count", "1")
    assert code == EXIT_OK
    assert any("exceeds the invariant thresholds" in r.message for r in caplog.records)


def test_gapscan_header():
    code, text = run("gapscan", "--n", "2", "--beta-grid", "0.6", "--c-grid", "0.1")
    assert code == EXIT_OK
    assert "EMPIRICAL" in text.splitlines()[0]


def test_no_command_prints_help():
    code, text = run()
    assert code == EXIT_CONFIG
    assert "usage" in text
