import json
import os
import subprocess
import sys

from kegraph import (
    CSV_COLUMNS,
    AnalysisReport,
    analyze_graph,
    csv_row,
    emit_graph6,
    fixture,
    generate,
)

RUN = [sys.executable, "-m", "kegraph"]


def run_cli(*args, stdin: str = "", env_extra: dict | None = None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        RUN + list(args), input=stdin, capture_output=True, text=True, env=env,
    )


def test_analyze_report_h3():
    r = analyze_graph(fixture("H3"), "H3")
    assert not r.is_ke
    assert r.alpha == 2 and r.mu == 2
    assert r.alpha + r.mu == 4 < 5 == r.n
    assert r.certificates["non_ke_witness"]["alpha_c"] == 1


def test_analyze_report_gf10():
    r = analyze_graph(fixture("GF10"), "GF10")
    assert r.d == 1 and r.core == ["a", "h"] and r.deficiency == 2
    assert r.chain == {
        "d": 1, "core_surplus": 1, "alpha_minus_mu": 1, "def": 2,
        "chain_holds": False,
    }


def test_report_json_roundtrip_bit_exact():
    r = analyze_graph(fixture("G2"), "G2")
    text = r.to_json()
    back = AnalysisReport.from_json(text)
    assert back == r
    assert back.to_json() == text
    assert json.loads(text)["alpha_c"] == 3


def test_csv_row_layout():
    r = analyze_graph(fixture("GF10"), "GF10")
    row = csv_row(r)
    cells = row.split(",")
    assert len(cells) == len(CSV_COLUMNS)
    assert cells[0] == "GF10"
    assert cells[CSV_COLUMNS.index("alpha")] == "4"
    assert cells[CSV_COLUMNS.index("is_ke")] == "false"
    assert cells[CSV_COLUMNS.index("core_size")] == "2"


def test_gated_report_nulls():
    g = generate("empty", 70)
    r = analyze_graph(g, "big")
    assert r.gated and r.alpha is None and r.core is None and r.chain is None
    cells = csv_row(r).split(",")
    assert cells[CSV_COLUMNS.index("alpha")] == ""
    forced = analyze_graph(g, "big", force=True)
    assert not forced.gated and forced.alpha == 70


def test_poly_only_skips_exact_fields():
    r = analyze_graph(fixture("H1"), "H1", poly_only=True)
    assert r.alpha is None and r.gated
    assert r.mu == 2 and r.is_ke


def test_oracle_cross_check_flag():
    r = analyze_graph(fixture("G2"), "G2", with_oracle=True)
    assert r.oracle_checked


def test_ke_certificate_in_report():
    r = analyze_graph(fixture("H1"), "H1")
    assert r.is_ke
    assert r.certificates["ke_witness"]["independent_set"] == ["1", "3"]
    assert r.certificates["ke_witness"]["matching"]


def test_report_integer_fields_consistent():
    for name in ("H1", "H2", "H3", "G1", "G2", "GF10"):
        r = analyze_graph(fixture(name), name)
        assert 0 <= r.d <= r.alpha_c <= r.alpha <= r.n - r.mu
        assert r.deficiency == r.n - 2 * r.mu >= 0


# --- CLI subprocess tests ---


def test_cli_analyze_fixture_csv():
    out = run_cli("analyze", "--fixture", "H3", "--csv")
    assert out.returncode == 0
    header, row = out.stdout.strip().splitlines()
    assert header == ",".join(CSV_COLUMNS)
    assert row.startswith("H3,5,5,2,2,1,0,1")
    assert ",false" in row


def test_cli_analyze_stdin_graph6():
    out = run_cli("analyze", stdin=emit_graph6(fixture("GF10")) + "\n")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["d"] == 1 and data["def"] == 2 and data["alpha"] == 4


def test_cli_analyze_edges_format():
    out = run_cli("analyze", "--format", "edges", stdin="0 1\n1 2\n")
    assert out.returncode == 0
    assert json.loads(out.stdout)["n"] == 3


def test_cli_analyze_empty_stdin_exit_2():
    out = run_cli("analyze", stdin="")
    assert out.returncode == 2
    assert "error" in out.stderr


def test_cli_analyze_garbage_exit_2():
    out = run_cli("analyze", stdin="\x01\x02\n")
    assert out.returncode == 2


def test_cli_analyze_gate_exit_3(tmp_path):
    big = tmp_path / "big.g6"
    big.write_text(emit_graph6(generate("empty", 70)) + "\n")
    out = run_cli("analyze", str(big))
    assert out.returncode == 3
    assert json.loads(out.stdout)["gated"] is True
    forced = run_cli("analyze", str(big), "--force")
    assert forced.returncode == 0
    assert json.loads(forced.stdout)["alpha"] == 70


def test_cli_batch_fixture_corpus(tmp_path):
    path = tmp_path / "corpus.g6"
    names = ("H1", "H2", "H3", "G1", "G2", "GF10")
    path.write_text("".join(emit_graph6(fixture(n)) + "\n" for n in names))
    out = run_cli("batch", str(path))
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    rows = [ln for ln in lines[1:] if not ln.startswith("#")]
    assert len(rows) == 6
    ke_flags = [row.split(",")[CSV_COLUMNS.index("is_ke")] for row in rows]
    assert ke_flags == ["true", "true", "false", "true", "false", "false"]
    assert lines[-1].startswith("#summary total=6 ke=3")


def test_cli_batch_skips_malformed_lines(tmp_path):
    path = tmp_path / "mixed.g6"
    path.write_text("A_\nnot graph6 at all!!\x01\nBw\n")
    out = run_cli("batch", str(path))
    assert out.returncode == 0
    rows = [
        ln for ln in out.stdout.strip().splitlines()[1:] if not ln.startswith("#")
    ]
    assert len(rows) == 2
    assert "line 2" in out.stderr


def test_cli_batch_empty_exit_2(tmp_path):
    path = tmp_path / "empty.g6"
    path.write_text("")
    assert run_cli("batch", str(path)).returncode == 2


def test_cli_batch_parallel_order_preserved(tmp_path):
    path = tmp_path / "many.g6"
    names = ("H1", "H2", "H3", "G1", "G2", "GF10") * 5
    path.write_text("".join(emit_graph6(fixture(n)) + "\n" for n in names))
    seq = run_cli("batch", str(path))
    par = run_cli("batch", str(path), "--jobs", "2")
    assert seq.stdout == par.stdout


def test_cli_gen():
    out = run_cli("gen", "complete_minus_edge", "6")
    assert out.returncode == 0
    assert out.stdout.strip() == emit_graph6(generate("complete_minus_edge", 6))
    cyc = run_cli("gen", "cycle", "4")
    assert cyc.stdout.strip() == "Cl"


def test_cli_gen_bad_params():
    assert run_cli("gen", "cycle", "2").returncode == 2
    assert run_cli("gen", "complete_bipartite", "3").returncode == 2


def test_cli_verify_quick():
    out = run_cli("verify", "--scope", "quick")
    assert out.returncode == 0
    assert "all checks passed" in out.stderr


def test_cli_verify_env_seed():
    out = run_cli("verify", "--scope", "quick", env_extra={"KEG_SEED": "12345"})
    assert out.returncode == 0


def test_cli_batch_bipartite_graphs_all_ke(tmp_path):
    import random

    from kegraph import random_bipartite_graph

    rng = random.Random(20090001)
    path = tmp_path / "bip.g6"
    path.write_text(
        "".join(
            emit_graph6(random_bipartite_graph(rng, rng.randint(0, 12), rng.random())[0])
            + "\n"
            for _ in range(100)
        )
    )
    out = run_cli("batch", str(path))
    assert out.returncode == 0
    rows = [
        ln for ln in out.stdout.strip().splitlines()[1:] if not ln.startswith("#")
    ]
    assert len(rows) == 100
    ke_col = CSV_COLUMNS.index("is_ke")
    assert all(row.split(",")[ke_col] == "true" for row in rows)
    assert out.stdout.strip().splitlines()[-1].startswith("#summary total=100 ke=100")


def test_cli_batch_equals_analyze_rows(tmp_path):
    path = tmp_path / "two.g6"
    path.write_text(
        emit_graph6(fixture("H1")) + "\n" + emit_graph6(fixture("GF10")) + "\n"
    )
    out = run_cli("batch", str(path))
    rows = [
        ln for ln in out.stdout.strip().splitlines()[1:] if not ln.startswith("#")
    ]
    for row, name in zip(rows, ("H1", "GF10")):
        g6 = emit_graph6(fixture(name))
        direct = csv_row(analyze_graph(fixture(name), name=g6))
        assert row == direct
