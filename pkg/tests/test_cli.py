import io
import json

import pytest

from raagco import (
    CoContractionSpec,
    Graph,
    build_hom,
    co_contract,
    complement,
    find_well_pairing,
    make_family,
    parse_word,
    render_svg,
)
from raagco.cli import main
from helpers import HEXCO_EDGES, hexco


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def hexco_file(tmp_path):
    path = tmp_path / "hexco.json"
    path.write_text(json.dumps(hexco().to_json_obj()))
    return str(path)


class TestFamily:
    def test_cycle(self, capsys):
        code, out, _ = run(capsys, "family", "cycle", "6")
        assert code == 0
        assert json.loads(out) == make_family("cycle", 6).to_json_obj()

    def test_cocycle_alias(self, capsys):
        code, out, _ = run(capsys, "family", "cocycle", "5")
        assert code == 0
        assert json.loads(out) == make_family("complement_cycle", 5).to_json_obj()

    def test_unknown_kind(self, capsys):
        code, _, err = run(capsys, "family", "moebius", "5")
        assert code == 2

    def test_too_small(self, capsys):
        code, _, err = run(capsys, "family", "cycle", "2")
        assert code == 2
        assert err.startswith("error:")


class TestGraphCommands:
    def test_complement_from_file(self, capsys, hexco_file):
        code, out, _ = run(capsys, "graph", "complement", "--graph", hexco_file)
        assert code == 0
        assert json.loads(out) == complement(hexco()).to_json_obj()

    def test_stdin_default(self, capsys, monkeypatch):
        blob = json.dumps(hexco().to_json_obj())
        monkeypatch.setattr("sys.stdin", io.StringIO(blob))
        code, out, _ = run(capsys, "graph", "complement")
        assert code == 0
        assert json.loads(out) == complement(hexco()).to_json_obj()

    def test_dot_input(self, capsys, tmp_path):
        path = tmp_path / "g.dot"
        path.write_text("graph G { a -- b -- c; }\n")
        code, out, _ = run(capsys, "graph", "induce", "--graph", str(path), "--set", "a,b")
        assert code == 0
        assert json.loads(out)["vertices"] == ["a", "b"]

    def test_cocontract_golden(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "graph", "cocontract", "--graph", hexco_file, "--set", "a,b"
        )
        assert code == 0
        assert json.loads(out) == co_contract(hexco(), {"a", "b"}).to_json_obj()

    def test_contract_validation_error(self, capsys, hexco_file):
        # a and b are not adjacent, so ordinary contraction refuses
        code, _, err = run(
            capsys, "graph", "contract", "--graph", hexco_file, "--set", "a,b"
        )
        assert code == 2
        assert err.startswith("error:")

    def test_chain(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "graph", "chain", "--graph", hexco_file, "--set", "a,b,d"
        )
        assert code == 0
        obj = json.loads(out)
        assert len(obj["steps"]) == 2
        assert obj["steps"][0]["pair"] == ["a", "b"]
        assert obj["final"] == co_contract(hexco(), {"a", "b", "d"}).to_json_obj()

    def test_iso_found(self, capsys, tmp_path, hexco_file):
        relabeled = Graph(
            "uvwxyz",
            [
                (dict(zip("abcdef", "uvwxyz"))[a], dict(zip("abcdef", "uvwxyz"))[b])
                for a, b in HEXCO_EDGES
            ],
        )
        other = tmp_path / "other.json"
        other.write_text(json.dumps(relabeled.to_json_obj()))
        code, out, _ = run(
            capsys, "graph", "iso", "--graph", hexco_file, "--graph2", str(other)
        )
        assert code == 0
        mapping = json.loads(out)["isomorphism"]
        assert set(mapping) == set("abcdef")

    def test_iso_not_found(self, capsys, tmp_path, hexco_file):
        other = tmp_path / "other.json"
        other.write_text(json.dumps(make_family("cycle", 6).to_json_obj()))
        code, out, _ = run(
            capsys, "graph", "iso", "--graph", hexco_file, "--graph2", str(other)
        )
        assert code == 1
        assert json.loads(out) == {"isomorphism": None}

    def test_recognize(self, capsys, hexco_file):
        code, out, _ = run(capsys, "graph", "recognize", "--graph", hexco_file)
        assert code == 0
        obj = json.loads(out)
        assert obj == {"chordal": False, "weakly_chordal": False, "induced_cycle": None}

    def test_recognize_min_len(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "graph", "recognize", "--graph", hexco_file, "--min-len", "3"
        )
        assert code == 0
        assert json.loads(out)["induced_cycle"] is not None


class TestWordCommands:
    def test_nf(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "word", "nf", "--graph", hexco_file, "--word", "c e d"
        )
        assert code == 0
        assert json.loads(out) == {"normal_form": "c d e"}

    def test_eq_exit_codes(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "word", "eq", "--graph", hexco_file,
            "--word", "a c", "--word2", "c a",
        )
        assert code == 0 and json.loads(out) == {"equal": True}
        code, out, _ = run(
            capsys, "word", "eq", "--graph", hexco_file,
            "--word", "a b", "--word2", "b a",
        )
        assert code == 1 and json.loads(out) == {"equal": False}

    def test_support(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "word", "support", "--graph", hexco_file,
            "--word", "e c a c^-1 a^-1",
        )
        assert code == 0
        assert json.loads(out) == {"support": ["e"]}

    def test_parabolic(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "word", "parabolic", "--graph", hexco_file,
            "--word", "c a c^-1", "--set", "a,b",
        )
        assert code == 0 and json.loads(out) == {"in_parabolic": True}
        code, out, _ = run(
            capsys, "word", "parabolic", "--graph", hexco_file,
            "--word", "e", "--set", "a,b",
        )
        assert code == 1 and json.loads(out) == {"in_parabolic": False}

    def test_cyclic(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "word", "cyclic", "--graph", hexco_file, "--word", "e^-1 a e"
        )
        assert code == 0
        assert json.loads(out) == {"u": "e", "v": "a"}

    def test_qpair(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "word", "qpair", "--graph", hexco_file,
            "--word", "b^-1 a b b^-1 a^-1 b",
        )
        assert code == 0
        assert json.loads(out) == {
            "witness": {"i": 1, "j": 4, "vertex": "a", "intermediate": "b b^-1"}
        }

    def test_qpair_none(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "word", "qpair", "--graph", hexco_file, "--word", "a e"
        )
        assert code == 1
        assert json.loads(out) == {"witness": None}

    def test_malformed_word(self, capsys, hexco_file):
        code, _, err = run(
            capsys, "word", "nf", "--graph", hexco_file, "--word", "a^2"
        )
        assert code == 2
        assert err.startswith("error:")


class TestContractionWordCommands:
    def test_check(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "cw", "check", "--graph", hexco_file,
            "--word", "b^-1 a b", "--set", "a,b",
        )
        assert code == 0 and json.loads(out) == {"is_contraction_word": True}
        code, out, _ = run(
            capsys, "cw", "check", "--graph", hexco_file,
            "--word", "a b", "--set", "a,b",
        )
        assert code == 1 and json.loads(out) == {"is_contraction_word": False}

    def test_default(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "cw", "default", "--graph", hexco_file, "--set", "a,b,d"
        )
        assert code == 0
        assert json.loads(out) == {"word": "a b d b a b d b a"}

    def test_element(self, capsys, hexco_file):
        code, out, _ = run(
            capsys, "cw", "element", "--graph", hexco_file,
            "--word", "b b^-1 b^-1 a b", "--set", "a,b",
        )
        assert code == 0 and json.loads(out) == {"is_contraction_element": True}

    def test_set_must_be_anticonnected(self, capsys, hexco_file):
        code, _, err = run(
            capsys, "cw", "default", "--graph", hexco_file, "--set", "a,c"
        )
        assert code == 2
        assert err.startswith("error:")


def spec_file(tmp_path, name="spec.json"):
    spec = CoContractionSpec.make(hexco(), [({"a", "b"}, None)])
    path = tmp_path / name
    path.write_text(json.dumps(spec.to_json_obj()))
    return str(path)


class TestHomCommands:
    def test_build(self, capsys, tmp_path):
        code, out, _ = run(capsys, "hom", "build", "--spec", spec_file(tmp_path))
        assert code == 0
        want = build_hom(CoContractionSpec.make(hexco(), [({"a", "b"}, None)]))
        assert json.loads(out) == want.to_json_obj()

    def test_build_rejects_hom_json(self, capsys, tmp_path):
        hom = build_hom(CoContractionSpec.make(hexco(), [({"a", "b"}, None)]))
        path = tmp_path / "hom.json"
        path.write_text(hom.to_json())
        code, _, err = run(capsys, "hom", "build", "--spec", str(path))
        assert code == 2
        assert "spec" in err

    def test_apply_accepts_both_formats(self, capsys, tmp_path):
        spec_path = spec_file(tmp_path)
        code, out, _ = run(
            capsys, "hom", "apply", "--spec", spec_path,
            "--word", "v{a,b} c v{a,b}^-1",
        )
        assert code == 0 and json.loads(out) == {"image": "c"}

        hom = build_hom(CoContractionSpec.make(hexco(), [({"a", "b"}, None)]))
        hom_path = tmp_path / "hom.json"
        hom_path.write_text(hom.to_json())
        code, out, _ = run(
            capsys, "hom", "apply", "--spec", str(hom_path), "--word", "v{a,b}"
        )
        assert code == 0 and json.loads(out) == {"image": "b^-1 a b"}

    def test_check_corrupted(self, capsys, tmp_path):
        hom = build_hom(CoContractionSpec.make(hexco(), [({"a", "b"}, None)]))
        obj = hom.to_json_obj()
        obj["images"]["v{a,b}"] = "b^-1 a b d"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, out, _ = run(
            capsys, "hom", "check", "--spec", str(path), "--unchecked-word"
        )
        assert code == 1
        assert json.loads(out) == {"well_defined": False}

    def test_check_good(self, capsys, tmp_path):
        code, out, _ = run(capsys, "hom", "check", "--spec", spec_file(tmp_path))
        assert code == 0
        assert json.loads(out) == {"well_defined": True}

    def test_loaded_images_are_validated(self, capsys, tmp_path):
        hom = build_hom(CoContractionSpec.make(hexco(), [({"a", "b"}, None)]))
        obj = hom.to_json_obj()
        obj["images"]["v{a,b}"] = "a b"  # inside the set, but not a contraction word
        path = tmp_path / "loose.json"
        path.write_text(json.dumps(obj))
        code, _, err = run(capsys, "hom", "check", "--spec", str(path))
        assert code == 2
        assert "contraction word" in err

        code, out, err = run(
            capsys, "hom", "check", "--spec", str(path), "--unchecked-word"
        )
        assert code == 0
        assert json.loads(out) == {"well_defined": True}
        assert "warning" in err

    def test_sample_ok(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "hom", "sample", "--spec", spec_file(tmp_path),
            "--trials", "40", "--max-len", "6", "--seed", "7",
        )
        assert code == 0
        assert json.loads(out) == {
            "trials": 40,
            "max_len": 6,
            "seed": 7,
            "failures": [],
        }

    def test_sample_catches_collapse(self, capsys, tmp_path):
        edge = Graph("ab", [("a", "b")])
        obj = {
            "source": edge.to_json_obj(),
            "target": edge.to_json_obj(),
            "images": {"a": "", "b": "b"},
        }
        path = tmp_path / "collapse.json"
        path.write_text(json.dumps(obj))
        code, out, _ = run(
            capsys, "hom", "sample", "--spec", str(path),
            "--trials", "40", "--max-len", "6", "--seed", "0",
        )
        assert code == 1
        assert json.loads(out)["failures"]


class TestPairingCommands:
    GRAPH = json.dumps(
        {"vertices": ["a", "b", "c"], "edges": [["a", "b"]]}
    )

    @pytest.fixture
    def fence_file(self, tmp_path):
        path = tmp_path / "fence.json"
        path.write_text(self.GRAPH)
        return str(path)

    def test_pair(self, capsys, fence_file):
        code, out, _ = run(
            capsys, "dvk", "pair", "--graph", fence_file,
            "--word", "c^-1 a b a^-1 b^-1 c",
        )
        assert code == 0
        assert json.loads(out) == {"pairs": [[0, 5], [1, 3], [2, 4]]}

    def test_pair_none(self, capsys, fence_file):
        code, out, _ = run(
            capsys, "dvk", "pair", "--graph", fence_file, "--word", "a b"
        )
        assert code == 1
        assert json.loads(out) == {"pairs": None}

    def test_svg_to_file(self, capsys, fence_file, tmp_path):
        out_path = tmp_path / "diagram.svg"
        code, out, _ = run(
            capsys, "dvk", "svg", "--graph", fence_file,
            "--word", "c^-1 a b a^-1 b^-1 c", "--out", str(out_path),
        )
        assert code == 0
        g = Graph("abc", [("a", "b")])
        w = parse_word("c^-1 a b a^-1 b^-1 c", g)
        assert out_path.read_text() == render_svg(find_well_pairing(w))

    def test_svg_to_stdout(self, capsys, fence_file):
        code, out, _ = run(
            capsys, "dvk", "svg", "--graph", fence_file, "--word", "a a^-1"
        )
        assert code == 0
        assert out.startswith("<svg ")

    def test_svg_nontrivial(self, capsys, fence_file):
        code, out, err = run(
            capsys, "dvk", "svg", "--graph", fence_file, "--word", "a b"
        )
        assert code == 1
        assert out == ""
        assert "no pairing" in err


class TestUsageAndErrors:
    def test_no_arguments(self, capsys):
        assert run(capsys, *[])[0] == 2

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_missing_required_flag(self, capsys, hexco_file):
        assert run(capsys, "graph", "induce", "--graph", hexco_file)[0] == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "graph", "complement", "--graph", "/no/such/file")
        assert code == 2
        assert err.startswith("error:")

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "graph", "complement", "--graph", str(path))
        assert code == 2

    def test_empty_set_flag(self, capsys, hexco_file):
        code, _, err = run(
            capsys, "graph", "induce", "--graph", hexco_file, "--set", ","
        )
        assert code == 2


class TestDeterminism:
    def test_identical_bytes_across_runs(self, capsys, hexco_file):
        first = run(
            capsys, "graph", "chain", "--graph", hexco_file, "--set", "a,b,d"
        )
        second = run(
            capsys, "graph", "chain", "--graph", hexco_file, "--set", "a,b,d"
        )
        assert first == second

    def test_pipe_style_composition(self, capsys, monkeypatch):
        code, family_out, _ = run(capsys, "family", "cocycle", "6")
        assert code == 0
        monkeypatch.setattr("sys.stdin", io.StringIO(family_out))
        code, out, _ = run(capsys, "graph", "cocontract", "--set", "v1,v2")
        assert code == 0
        got = Graph.from_json(out)
        want = co_contract(make_family("complement_cycle", 6), {"v1", "v2"})
        assert got == want
