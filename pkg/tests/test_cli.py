import json
import subprocess
import sys

import pytest

from letterkit.cli import main, parse_certificate, parse_graph_text
from letterkit.graph import complete_graph, format_edge_list, parse_edge_list, path_graph, to_graph6

AB_TEXT = "2\n0 1\n"
LOOP_TEXT = "1\n0 0\n"
P4_TEXT = "4\n0 1\n1 2\n2 3\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decode(capsys, files):
    code, out, _ = run(capsys, "decode", files("d", AB_TEXT), "abab")
    assert code == 0
    assert parse_edge_list(out).edges() == [(0, 1), (0, 3), (2, 3)]
    code, out, _ = run(capsys, "decode", files("l", LOOP_TEXT), "aaa")
    assert parse_edge_list(out) == complete_graph(3)
    code, out, _ = run(capsys, "decode", files("d2", AB_TEXT), "0,1,0", "--word-format", "ids")
    assert parse_edge_list(out).edges() == [(0, 1)]


def test_decode_bad_word(capsys, files):
    code, out, err = run(capsys, "decode", files("d", AB_TEXT), "a1b")
    assert code == 2 and out == "" and err.startswith("error:")
    code, _, _ = run(capsys, "decode", files("d2", AB_TEXT), "abc")
    assert code == 2


def test_lettericity_p4(capsys, files):
    code, out, _ = run(capsys, "lettericity", files("g", P4_TEXT))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "lettericity 2"
    assert lines[1] == "decoder"
    assert lines[-1] == "verified true"
    assert any(ln.startswith("word ") for ln in lines)


def test_lettericity_k5_and_graph6_input(capsys, files):
    code, out, _ = run(capsys, "lettericity", files("k5", format_edge_list(complete_graph(5))))
    assert out.splitlines()[0] == "lettericity 1"
    code, out2, _ = run(capsys, "lettericity", files("k5g6", to_graph6(complete_graph(5)) + "\n"))
    assert out2 == out


def test_lettericity_exceeds(capsys, files):
    code, out, _ = run(capsys, "lettericity", files("g", P4_TEXT), "--max-k", "1")
    assert code == 0 and out == "exceeds 1\n"


def test_lettericity_methods_agree(capsys, files, corpus):
    for g in corpus[::9]:
        path = files("g", format_edge_list(g))
        _, brute, _ = run(capsys, "lettericity", path)
        _, dp, _ = run(capsys, "lettericity", path, "--method", "dp", "--order", "lrw")
        assert brute.splitlines()[0] == dp.splitlines()[0]


def test_lettericity_json(capsys, files):
    code, out, _ = run(capsys, "lettericity", files("g", P4_TEXT), "--json")
    data = json.loads(out)
    assert data["lettericity"] == 2 and data["verified"] is True
    assert sorted(data["sequence"]) == [0, 1, 2, 3]


def test_lettericity_explicit_order(capsys, files):
    code, out, _ = run(capsys, "lettericity", files("g", P4_TEXT), "--method", "dp", "--order", "3,1,2,0")
    assert out.splitlines()[0] == "lettericity 2"
    code, _, _ = run(capsys, "lettericity", files("g2", P4_TEXT), "--method", "dp", "--order", "0,0,1,2")
    assert code == 2


def test_certificate_pipes_into_verify(capsys, files, corpus):
    for g in corpus[::7]:
        graph = files("g", format_edge_list(g))
        for fmt in ([], ["--json"]):
            _, cert, _ = run(capsys, "lettericity", graph, "--max-k", "6", *fmt)
            code, out, _ = run(capsys, "verify", graph, "--certificate", files("c", cert))
            assert (code, out) == (0, "ok\n")


def test_verify_with_decoder_and_word(capsys, files):
    graph = files("g", "4\n0 1\n0 3\n2 3\n")
    code, out, _ = run(capsys, "verify", graph, "--decoder", files("d", AB_TEXT), "--word", "abab",
                       "--sequence", "0 1 2 3")
    assert out == "ok\n"
    code, out, _ = run(capsys, "verify", graph, "--decoder", files("d2", AB_TEXT), "--word", "abab",
                       "--sequence", "1 0 2 3")
    assert out.startswith("violation")
    # without a sequence the word is compared up to isomorphism
    code, out, _ = run(capsys, "verify", files("p4", P4_TEXT), "--decoder", files("d3", AB_TEXT),
                       "--word", "abab")
    assert out == "ok\n"
    code, out, _ = run(capsys, "verify", files("p4b", P4_TEXT), "--decoder", files("d4", AB_TEXT),
                       "--word", "aabb")
    assert out == "violation not-isomorphic\n"


def test_verify_needs_inputs(capsys, files):
    code, _, err = run(capsys, "verify", files("g", P4_TEXT))
    assert code == 2 and "certificate" in err


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "2")
    assert out == "1 3\n2 23\n"
    code, _, _ = run(capsys, "bound", "0")
    assert code == 2


def test_lrw_and_cutrank(capsys, files):
    code, out, _ = run(capsys, "lrw", files("p6", format_edge_list(path_graph(6))))
    lines = out.splitlines()
    assert lines[0] == "lrw 1"
    assert sorted(map(int, lines[1].split()[1:])) == list(range(6))
    code, out, _ = run(capsys, "cutrank", files("p4", P4_TEXT), "--set", "0,1")
    assert out == "cutrank 1\n"
    code, _, _ = run(capsys, "cutrank", files("p4b", P4_TEXT), "--set", "0,9")
    assert code == 2


def test_obstructions(capsys, files):
    code, out, _ = run(capsys, "obstructions", "1", "--max-n", "4")
    assert out == "g6 BG k 1 verdict true\ng6 BW k 1 verdict true\n"
    code, out, _ = run(capsys, "obstructions", "1", "--max-n", "3", "--json")
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert [r["g6"] for r in rows] == ["BG", "BW"]
    assert all(r["lettericity"] == 2 and r["deletions"] == [1, 1, 1] for r in rows)


def test_obstructions_from_graph6_stream(capsys, files):
    stream = files("s.g6", "Bg\nBw\nCr\n")
    code, out, _ = run(capsys, "obstructions", "1", "--g6", stream, "--all")
    assert out.splitlines() == [
        "g6 Bg k 1 verdict true",
        "g6 Bw k 1 verdict false",
        "g6 Cr k 1 verdict false",
    ]


def test_critical(capsys, files):
    code, out, _ = run(capsys, "critical", files("p4", P4_TEXT))
    assert out.splitlines()[:3] == ["lettericity 2", "deletions 2 2 2 2", "critical false"]
    code, out, _ = run(capsys, "critical", files("p3", "3\n0 1\n1 2\n"))
    assert out.splitlines() == ["lettericity 2", "deletions 1 1 1", "critical true",
                                "structure-violations 0"]


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "aaabca")
    lines = out.splitlines()
    assert lines[0] == "length 6"
    assert lines[1] == "longest 1 3 0 3"
    assert "inter a b 1" in lines


def test_input_errors(capsys, files, tmp_path):
    assert run(capsys, "lettericity", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "lettericity", files("bad", "3\n0 5\n"))[0] == 2
    assert run(capsys, "lettericity", files("bad6", "A\n"))[0] == 2
    assert run(capsys, "decode", files("badd", "2\n0 7\n"), "ab")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_size_cap_exit_code(capsys, files, monkeypatch):
    monkeypatch.delenv("LETTERKIT_MAX_N", raising=False)
    big = files("big", format_edge_list(path_graph(11)))
    code, _, err = run(capsys, "lettericity", big)
    assert code == 3 and "LETTERKIT_MAX_N" in err
    assert run(capsys, "lrw", files("big2", format_edge_list(path_graph(17))))[0] == 3
    assert run(capsys, "obstructions", "1", "--max-n", "7")[0] == 3


def test_parse_graph_text():
    assert parse_graph_text("# comment\n" + P4_TEXT) == path_graph(4)
    assert parse_graph_text(">>graph6<<Bw\n").n == 3


def test_parse_certificate_errors():
    from letterkit.cli import InputError
    with pytest.raises(InputError):
        parse_certificate("lettericity 2\n")
    with pytest.raises(InputError):
        parse_certificate("decoder\n2\n")


def test_module_entry_point_is_deterministic(tmp_path):
    graph = tmp_path / "g"
    graph.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    cmd = [sys.executable, "-m", "letterkit", "lettericity", str(graph), "--method", "dp"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first.startswith(b"lettericity 3\n")
