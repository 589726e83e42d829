import json

import pytest

from indturan.cli import main
from indturan.generators import cycle, complete_bipartite
from indturan.io import emit_graph, parse_graph6


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["c4"] = tmp_path / "c4.g6"
    paths["c4"].write_bytes(emit_graph(cycle(4)))
    paths["c6"] = tmp_path / "c6.g6"
    paths["c6"].write_bytes(emit_graph(cycle(6)))
    paths["k22"] = tmp_path / "k22.g6"
    paths["k22"].write_bytes(emit_graph(complete_bipartite(2, 2)))
    paths["tree"] = tmp_path / "tree.el"
    paths["tree"].write_bytes(b"0 1\n1 2\n2 3\n3 4\n")
    paths["tmp"] = tmp_path
    return paths


def run(args, out):
    return main(list(args) + ["--output", str(out)])


def test_gen_prism_spec_example(files):
    out = files["tmp"] / "prism.g6"
    assert run(["gen", "prism", "--l", "10"], out) == 0
    g = parse_graph6(out.read_bytes())
    assert g.n == 20 and g.edge_count == 30


def test_gen_lift_figure_two(files):
    out = files["tmp"] / "lift.g6"
    code = run(
        ["gen", "lift", "--tree", str(files["tree"]), "--roots", "0,4",
         "--set", "3", "--p", "3"],
        out,
    )
    assert code == 0
    g = parse_graph6(out.read_bytes())
    assert g.n == 9 and g.edge_count == 10


def test_check_witness_spec_example(files):
    out = files["tmp"] / "w.csv"
    code = run(
        ["check", "witness", "--s", "2", "--family", str(files["c4"]),
         "--input", str(files["c6"])],
        out,
    )
    assert code == 0
    header, row = out.read_text().splitlines()
    assert header.split(",")[:4] == ["n", "e", "s", "passed"]
    assert row.split(",")[3] == "true"


def test_check_kss_violation_exit_code(files):
    out = files["tmp"] / "kss.csv"
    code = run(["check", "kss", "--s", "2", "--input", str(files["k22"])], out)
    assert code == 1


def test_check_induced_budget_exit_code(files):
    out = files["tmp"] / "ind.csv"
    code = run(
        ["check", "induced", "--input", str(files["c6"]),
         "--pattern", str(files["c4"]), "--budget", "1"],
        out,
    )
    assert code == 2


def test_count_hom_spec_example(files):
    out = files["tmp"] / "hom.csv"
    assert run(["count", "hom", "--k", "4", "--input", str(files["c4"])], out) == 0
    header, row = out.read_text().splitlines()
    idx = header.split(",").index("count")
    assert row.split(",")[idx] == "32"


def test_count_json_emit(files):
    out = files["tmp"] / "c4count.json"
    assert run(
        ["count", "c4", "--input", str(files["k22"]), "--emit", "json"], out
    ) == 0
    rows = json.loads(out.read_text())
    assert rows[0]["count"] == "1"


def test_embed_tree_json_output(files):
    out = files["tmp"] / "embed.json"
    code = run(
        ["embed", "tree", "--input", str(files["c6"]),
         "--tree", str(files["tree"]), "--format", "graph6",
         "--beta-threshold", "10"],
        out,
    )
    payload = json.loads(out.read_text())
    assert code == 0 and payload["found"]
    assert len(payload["embedding"]) == 5


def test_pipeline_rich_set_absence_exit(files):
    out = files["tmp"] / "rich.json"
    code = run(
        ["pipeline", "rich-set", "--input", str(files["c6"]),
         "--tau", "1", "--c1", "1", "--c2", "2"],
        out,
    )
    assert code == 1
    assert not json.loads(out.read_text())["found"]


def test_sweep_csv_columns_and_sorting(files):
    out = files["tmp"] / "sweep.csv"
    code = run(
        ["sweep", "--generator", "polarity", "--values", "7,3,5",
         "--family", str(files["c4"]), "--s", "2"],
        out,
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "generator,param,n,e,passed,seed"
    ns = [int(line.split(",")[2]) for line in lines[1:]]
    assert ns == sorted(ns) == [13, 31, 57]


def test_sweep_plot_rendered(files):
    out = files["tmp"] / "sweep.csv"
    fig = files["tmp"] / "sweep.png"
    code = run(
        ["sweep", "--generator", "polarity", "--values", "3,5",
         "--plot", str(fig)],
        out,
    )
    assert code == 0
    assert fig.stat().st_size > 0


def test_missing_file_is_input_error(files, capsys):
    out = files["tmp"] / "x.csv"
    code = run(["count", "c4", "--input", str(files["tmp"] / "nope.g6")], out)
    assert code == 3
    err = json.loads(capsys.readouterr().err)
    assert "error" in err


def test_malformed_graph_is_input_error(files, capsys):
    bad = files["tmp"] / "bad.g6"
    bad.write_bytes(b"\x00\x01")
    out = files["tmp"] / "x.csv"
    assert run(["count", "c4", "--input", str(bad)], out) == 3


def test_timing_column_off_by_default(files):
    out = files["tmp"] / "t.csv"
    run(["count", "c4", "--input", str(files["c4"])], out)
    assert "runtime_ms" not in out.read_text()
    run(["count", "c4", "--input", str(files["c4"]), "--timing"], out)
    assert "runtime_ms" in out.read_text()
