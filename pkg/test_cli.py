"""
Command line front end, driven through click's test runner.
"""

import json
import re
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli import main

Z6_MODULE = {"kind": "regular", "ring": {"kind": "Zn", "n": 6}}
Z6_RING = {"kind": "Zn", "n": 6}


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def workdir(tmp_path):
    """Quiet config plus a few spec files."""
    (tmp_path / "modtop.json").write_text(json.dumps({"logging": {"level": "ERROR"}}))
    (tmp_path / "z6.json").write_text(json.dumps(Z6_MODULE))
    (tmp_path / "ring_z6.json").write_text(json.dumps(Z6_RING))
    (tmp_path / "broken.json").write_text("{\"kind\": \"regular\", ")
    return tmp_path


def invoke(runner, workdir, *args, **kwargs):
    return runner.invoke(main, ["--config", str(workdir / "modtop.json"), *args], **kwargs)


def test_inspect_module_json(runner, workdir):
    result = invoke(runner, workdir, "--format", "json", "inspect", str(workdir / "z6.json"))
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["order"] == 6
    assert record["submodules"] == 4
    assert record["fully_invariant"] == 4
    assert record["classify"]["duo"]
    assert record["end_ring_order"] == 6


def test_inspect_ring_json(runner, workdir):
    result = invoke(runner, workdir, "--format", "json", "inspect", str(workdir / "ring_z6.json"))
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert sorted(record["spec"]) == [[0, 2, 4], [0, 3]]
    assert record["predicates"]["von_neumann_regular"]


def test_inspect_text(runner, workdir):
    result = invoke(runner, workdir, "inspect", str(workdir / "z6.json"))
    assert result.exit_code == 0, result.output
    assert "order: 6" in result.stdout
    assert "classify:" in result.stdout


def test_malformed_spec_exits_2(runner, workdir):
    result = invoke(runner, workdir, "inspect", str(workdir / "broken.json"))
    assert result.exit_code == 2


def test_missing_spec_exits_2(runner, workdir):
    result = invoke(runner, workdir, "spectrum", str(workdir / "nowhere.json"))
    assert result.exit_code == 2


def test_missing_config_exits_2(runner, workdir):
    result = runner.invoke(main, ["--config", str(workdir / "absent.json"), "inspect", str(workdir / "z6.json")])
    assert result.exit_code == 2


def test_module_cap_option(runner, workdir):
    result = invoke(runner, workdir, "--cap-module", "4", "inspect", str(workdir / "z6.json"))
    assert result.exit_code == 2


def test_spectrum_json(runner, workdir):
    result = invoke(runner, workdir, "--format", "json", "spectrum", str(workdir / "z6.json"))
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert [p["id"] for p in record["points"]] == [1, 2]
    assert record["rad_fp"] == [0]


def test_topology_json(runner, workdir):
    result = invoke(runner, workdir, "--format", "json", "topology", str(workdir / "z6.json"))
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["closed_sets"] == [[], [1], [2], [1, 2]]
    assert record["properties"]["discrete"]
    assert record["specialization"] == []


def test_topology_dot(runner, workdir):
    target = workdir / "z6.gv"
    result = invoke(runner, workdir, "topology", str(workdir / "z6.json"), "--dot", str(target))
    assert result.exit_code == 0, result.output
    assert target.read_text(encoding="utf-8").startswith("digraph")

    result = invoke(runner, workdir, "--format", "dot", "topology", str(workdir / "z6.json"))
    assert result.exit_code == 0, result.output
    assert result.stdout.startswith("digraph")


def test_dot_format_only_for_topology(runner, workdir):
    result = invoke(runner, workdir, "--format", "dot", "inspect", str(workdir / "z6.json"))
    assert result.exit_code == 2


def test_verify_rejects_dot_format(runner, workdir):
    catalog = workdir / "catalog.json"
    catalog.write_text(json.dumps([{"name": "ring Z6", "spec": Z6_RING}]))
    report_file = workdir / "verify.json"
    result = invoke(runner, workdir, "--format", "dot", "verify", "--catalog", str(catalog),
                    "--output", str(report_file))
    assert result.exit_code == 2
    assert "--format dot" in result.output
    assert not report_file.exists()


def test_verify_small_catalog(runner, workdir):
    catalog = workdir / "catalog.json"
    catalog.write_text(json.dumps([{"name": "Z4", "spec": {"kind": "regular", "ring": {"kind": "Zn", "n": 4}}}]))
    report_file = workdir / "reports" / "verify.json"
    result = invoke(runner, workdir, "--format", "json", "verify", "--catalog", str(catalog),
                    "--filter", "prop_ultra", "--no-quotients", "--output", str(report_file))
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["totals"]["pass"] == 1
    assert doc["results"][0]["subject"]["name"] == "Z4"
    assert json.loads(report_file.read_text(encoding="utf-8"))["digest"] == doc["digest"]


def test_verify_catalog_from_environment(runner, workdir):
    catalog = workdir / "catalog.json"
    catalog.write_text(json.dumps([{"name": "ring Z6", "spec": Z6_RING}]))
    result = invoke(runner, workdir, "verify", "--filter", "ring_star_is_product",
                    env={"MODTOP_CATALOG": str(catalog)})
    assert result.exit_code == 0, result.output
    assert "pass: 1" in result.stdout


def test_verify_skipped_entry_exits_2(runner, workdir):
    catalog = workdir / "catalog.json"
    catalog.write_text(json.dumps([
        {"name": "Z4", "spec": {"kind": "regular", "ring": {"kind": "Zn", "n": 4}}},
        {"name": "Z100", "spec": {"kind": "regular", "ring": {"kind": "Zn", "n": 100}}},
    ]))
    result = invoke(runner, workdir, "verify", "--catalog", str(catalog), "--filter", "prop_ultra",
                    "--no-quotients")
    assert result.exit_code == 2
    assert "SKIPPED Z100" in result.stdout


def test_verify_unknown_check_exits_2(runner, workdir):
    catalog = workdir / "catalog.json"
    catalog.write_text(json.dumps([{"name": "ring Z6", "spec": Z6_RING}]))
    result = invoke(runner, workdir, "verify", "--catalog", str(catalog), "--filter", "lemma_nonexistent")
    assert result.exit_code == 2


def test_requirements_are_all_imported():
    root = Path(__file__).parent
    import_names = {"python-dotenv": "dotenv"}
    listed = [re.split(r"[<>=]", line)[0].strip()
              for line in (root / "requirements.txt").read_text(encoding="utf-8").splitlines()
              if line.strip() and not line.startswith("#")]
    sources = "\n".join(p.read_text(encoding="utf-8") for p in [*root.glob("*.py"), *root.glob("src/**/*.py")])
    for name in listed:
        module = import_names.get(name, name)
        assert re.search(rf"^\s*(import|from) {module}\b", sources, re.MULTILINE), name
    assert "ipython" not in listed
