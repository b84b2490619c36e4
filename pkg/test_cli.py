#!/usr/bin/env python3
"""
Tests for the command-line interface: exit codes, the artifact store,
manifests and replay
"""

import sys
sys.path.insert(0, 'src')

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli.artifacts import CertificateStore, RunManifest, load_artifact, slug
from src.cli.main import cli
from src.errors import CertificateSchemaError
from src.ring_core import ring_from_text
from src.unit_translate import certificate_to_dict, check_gui


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def invoke(workdir, *args):
    runner = CliRunner()
    return runner.invoke(cli, ["--jobs", "1", "--output-dir", str(workdir / "out"), *args])


def stored(workdir, command):
    return CertificateStore(str(workdir / "out")).list(command)


def test_gui_check_exit_codes(workdir):
    result = invoke(workdir, "gui", "check", "--ring", "gf(4)", "--k", "3")
    assert result.exit_code == 0, result.output
    paths = stored(workdir, "gui check")
    assert len(paths) == 1
    artifact = load_artifact(str(paths[0]))
    assert artifact.certificate.verdict == "exhaustive-pass"
    assert artifact.manifest.ring == "gf(4)"
    assert artifact.manifest.args["k"] == 3

    result = invoke(workdir, "gui", "check", "--ring", "mat(2,gf(2))", "--k", "3")
    assert result.exit_code == 1
    print("✅ gui check exit codes")


def test_gui_check_usage_errors(workdir):
    assert invoke(workdir, "gui", "check", "--ring", "gf(4)").exit_code == 2
    assert invoke(workdir, "gui", "check", "--ring", "nope(3)", "--k", "2").exit_code == 2
    result = invoke(workdir, "gui", "check", "--ring", "gf(4)", "--k", "3", "--exhaustive", "--samples", "5")
    assert result.exit_code == 2
    assert invoke(workdir, "nope").exit_code == 2


def test_instance_check_and_replay(workdir):
    result = invoke(workdir, "gui", "check", "--ring", "gf(5)", "--values", "1,2")
    assert result.exit_code == 0, result.output
    path = stored(workdir, "gui check")[0]
    assert load_artifact(str(path)).certificate.verdict == "witness"

    result = invoke(workdir, "replay", "--certificate", str(path))
    assert result.exit_code == 0, result.output
    print("✅ witness replay")


def test_tampered_witness_fails_replay(workdir):
    assert invoke(workdir, "gui", "check", "--ring", "gf(5)", "--values", "1,2").exit_code == 0
    path = stored(workdir, "gui check")[0]
    document = json.loads(path.read_text())
    # 3 + 2 = 0 in F_5
    document["certificate"]["witness"] = 3
    path.write_text(json.dumps(document))

    result = invoke(workdir, "replay", "--certificate", str(path))
    assert result.exit_code == 1


def test_sharded_run_matches_unsharded(workdir):
    assert invoke(workdir, "gui", "check", "--ring", "mat(2,gf(3))", "--k", "3", "--exhaustive").exit_code == 0
    result = invoke(workdir, "gui", "check", "--ring", "mat(2,gf(3))", "--k", "3", "--exhaustive",
                    "--shards", "3")
    assert result.exit_code == 0, result.output

    artifacts = [load_artifact(str(p)) for p in stored(workdir, "gui check")]
    assert len(artifacts) == 2
    plain = next(a for a in artifacts if a.manifest.shards == 1)
    sharded = next(a for a in artifacts if a.manifest.shards == 3)
    assert plain.certificate.verdict == sharded.certificate.verdict == "exhaustive-pass"
    assert plain.certificate.stats.tested == sharded.certificate.stats.tested

    result = invoke(workdir, "replay", "--certificate", str(sharded.path))
    assert result.exit_code == 0, result.output
    print("✅ sharded run merges and replays")


def test_replay_rejects_reports(workdir):
    assert invoke(workdir, "gui", "bounds", "--n", "2", "--q", "4", "--kernel-samples", "0").exit_code == 0
    path = stored(workdir, "gui bounds")[0]
    assert invoke(workdir, "replay", "--certificate", str(path)).exit_code == 1

    garbage = workdir / "garbage.json"
    garbage.write_text("not json")
    assert invoke(workdir, "replay", "--certificate", str(garbage)).exit_code == 1


def test_families(workdir):
    result = invoke(workdir, "gui", "families", "--n", "2", "--q", "2")
    assert result.exit_code == 0, result.output
    cert = load_artifact(str(stored(workdir, "gui families antn")[0])).certificate
    assert cert.verdict == "exhausted-failure"

    result = invoke(workdir, "gui", "families", "--n", "2", "--base", "gf(2)")
    assert result.exit_code == 0, result.output
    assert stored(workdir, "gui families atwh")

    assert invoke(workdir, "gui", "families", "--n", "2").exit_code == 2


def test_bounds_and_classify(workdir):
    result = invoke(workdir, "gui", "bounds", "--n", "3", "--q", "2", "--kernel-samples", "5")
    assert result.exit_code == 0, result.output
    report = json.loads(stored(workdir, "gui bounds")[0].read_text())["report"]
    assert report["kernel_checked"] == 5
    assert report["kernel_holds"]

    result = invoke(workdir, "gui", "classify", "--ring", "gf(4)")
    assert result.exit_code == 0, result.output
    assert stored(workdir, "gui classify")


def test_pe2_commands(workdir):
    result = invoke(workdir, "pe2", "groups", "--ring", "gf(4)")
    assert result.exit_code == 0, result.output
    assert stored(workdir, "pe2 groups")

    result = invoke(workdir, "pe2", "reduce", "--ring", "gf(3)", "--word", "e(1) e(0) e(2)")
    assert result.exit_code == 0, result.output
    report = json.loads(stored(workdir, "pe2 reduce")[0].read_text())["report"]
    assert report["ring"] == "gf(3)"

    assert invoke(workdir, "pe2", "ord", "--ring", "gf(3)").exit_code == 2


def test_continuant_commands(workdir):
    result = invoke(workdir, "continuant", "words", "--k", "6")
    assert result.exit_code == 0, result.output
    report = json.loads(stored(workdir, "continuant words")[0].read_text())["report"]
    assert [c["monomial_count"] for c in report["checks"]] == [1, 1, 2, 3, 5, 8, 13]

    result = invoke(workdir, "continuant", "eval", "--ring", "gf(5)", "--tuple", "1,2,3")
    assert result.exit_code == 0, result.output
    report = json.loads(stored(workdir, "continuant eval")[0].read_text())["report"]
    assert report["k"] == 3
    assert len(report["Q"]) == 4

    assert invoke(workdir, "continuant", "eval", "--ring", "gf(5)", "--tuple", "1,2", "--k", "4").exit_code == 2


def test_report_smoke(workdir):
    result = invoke(workdir, "report", "--suite", "smoke", "--claims", "word-model,bounds")
    assert result.exit_code == 0, result.output
    csv = workdir / "out" / "reports" / "smoke.csv"
    assert csv.exists()
    assert "word-model" in csv.read_text()

    assert invoke(workdir, "report", "--suite", "smoke", "--claims", "nope").exit_code == 1
    print("✅ smoke report")


def test_manifest_digest_ignores_timestamps():
    a = RunManifest(command="gui check", ring="gf(4)", args={"k": 3}, argv=["gui", "check"])
    b = RunManifest(command="gui check", ring="gf(4)", args={"k": 3}, started_at="2020-01-01T00:00:00")
    assert a.digest() == b.finish().digest()
    c = RunManifest(command="gui check", ring="gf(4)", args={"k": 4})
    assert a.digest() != c.digest()


def test_store_paths_and_bare_certificates(tmp_path):
    store = CertificateStore(str(tmp_path))
    manifest = RunManifest(command="gui check", ring="mat(2,gf(3))", args={"k": 2})
    path = store.path_for(manifest)
    assert path.parent == tmp_path / "certs" / "mat_2_gf_3" / "gui_check"
    assert slug("") == "none"

    cert = check_gui(ring_from_text("gf(3)"), 2)
    bare = tmp_path / "bare.json"
    bare.write_text(json.dumps(certificate_to_dict(cert)))
    artifact = load_artifact(str(bare))
    assert artifact.manifest.command == cert.command
    assert artifact.certificate.verdict == cert.verdict

    listed = tmp_path / "list.json"
    listed.write_text("[1, 2]")
    with pytest.raises(CertificateSchemaError):
        load_artifact(str(listed))


def test_launcher_routes_tests_and_commands():
    script = (Path(__file__).parent / "run.sh").read_text()
    assert 'if [ "$1" = "test" ]' in script
    assert 'exec python -m pytest "$@"' in script
    assert script.rstrip().endswith('exec python main.py "$@"')
    assert "test" not in cli.commands


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
