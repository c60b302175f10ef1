from __future__ import annotations

import io
import json
import subprocess
import sys

import jsonschema
import pytest

from bundleseq import schemas
from bundleseq.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    lines = [json.loads(x) for x in buf.getvalue().splitlines() if x.startswith("{")]
    return code, lines, buf.getvalue()


def check(obj, schema):
    jsonschema.validate(obj, schema)


class TestEnumerate:
    @pytest.mark.parametrize("a, b, n", [(2, 0, 1), (4, 0, 3), (3, -3, 8)])
    def test_counts(self, a, b, n):
        code, lines, _ = run("enumerate", "--a", str(a), "--b", str(b))
        assert code == 0
        assert lines[-1] == {"start": [a, b], "count": n}
        assert len(lines) == n + 1
        for row in lines[:-1]:
            check(row, schemas.INVARIANT_REPORT)
        check(lines[-1], schemas.ENUMERATE_SUMMARY)

    def test_z_only_when_normalized(self):
        _, lines, _ = run("enumerate", "--a", "4", "--b", "0")
        assert all(r["z"] is None and r["j"] is None for r in lines[:-1])
        _, lines, _ = run("enumerate", "--a", "2", "--b", "-2")
        assert all(r["z"] is not None and r["j"] == 2 for r in lines[:-1])

    def test_csv(self, capsys):
        code, _, text = run("enumerate", "--a", "3", "--b", "-3", "--format", "csv")
        assert code == 0
        rows = text.splitlines()
        assert rows[0] == "sequence,t,w,c2_defect,z,j,epsilon,split"
        assert len(rows) == 1 + 8
        assert json.loads(capsys.readouterr().err) == {"start": [3, -3], "count": 8}

    def test_w_null_below_minus_one(self):
        _, lines, _ = run("enumerate", "--a", "-2", "--b", "-4")
        assert lines[0]["w"] is None and lines[0]["c2_defect"] is not None

    def test_bad_order(self):
        assert run("enumerate", "--a", "0", "--b", "2")[0] == 2

    def test_cap(self):
        assert run("enumerate", "--a", "3", "--b", "-3", "--max-j", "2")[0] == 2

    def test_non_integer(self):
        with pytest.raises(SystemExit) as info:
            run("enumerate", "--a", "x", "--b", "0")
        assert info.value.code == 2


class TestInvariants:
    def test_example(self):
        code, [r], _ = run("invariants", "3,-3;3,-2;1,1")
        assert code == 0
        assert (r["w"], r["c2_defect"], r["z"]) == (3, 5, 2)
        check(r, schemas.INVARIANT_REPORT)

    def test_trivial(self):
        code, [r], _ = run("invariants", "0,0")
        assert code == 0 and (r["w"], r["c2_defect"], r["z"]) == (0, 0, 0)

    def test_invalid(self):
        code, [r], _ = run("invariants", "2,-2;2,0")
        assert code == 2
        assert r["valid"] is False and "ii" in r["violated"]

    def test_unparseable(self):
        assert run("invariants", "2,-2;x")[0] == 2


class TestAudit:
    def test_thm05(self):
        code, [r], _ = run("audit", "--claim", "thm05", "--j", "3")
        assert code == 0 and r["holds"] is True
        assert r["attained"] == list(range(3, 10))
        check(r, schemas.AUDIT_REPORT)

    def test_thm02_strict(self):
        code, [r], _ = run("audit", "--claim", "thm02", "--j", "3", "--strict")
        assert code == 3
        assert len(r["missing"]) == 4

    def test_thm02_default_exit_zero(self):
        code, [r], _ = run("audit", "--claim", "thm02", "--j", "3")
        assert code == 0 and r["holds"] is False

    def test_thm02_j2(self):
        code, [r], _ = run("audit", "--claim", "thm02", "--j", "2", "--strict")
        assert code == 0 and r["holds"] is True

    @pytest.mark.parametrize("claim", ["prop04", "lemma11"])
    @pytest.mark.parametrize("eps", ["0", "-1"])
    def test_schema(self, claim, eps):
        code, [r], _ = run("audit", "--claim", claim, "--j", "3", "--epsilon", eps)
        assert code == 0
        check(r, schemas.AUDIT_REPORT)

    def test_csv(self):
        code, _, text = run("audit", "--claim", "thm02", "--j", "2", "--format", "csv")
        assert code == 0 and text.splitlines() == ["z,w", "1,1", "2,1", "3,1"]

    def test_bad_j(self):
        assert run("audit", "--claim", "thm02", "--j", "0")[0] == 2


class TestBundle:
    def test_cech(self):
        code, [r], _ = run("bundle", "--j", "2", "--p", "[]", "--op", "cech")
        assert code == 0 and r["cech_w"] == 1

    def test_invariants(self):
        code, [r], _ = run("bundle", "--j", "3", "--p", "[]", "--op", "invariants")
        assert code == 0 and (r["w"], r["z"]) == (3, 6)
        check(r, schemas.INVARIANT_REPORT)

    def test_verify(self):
        code, [r], _ = run("bundle", "--j", "2", "--p", '[{"i":1,"l":1,"c":"1"}]', "--op", "verify")
        assert code == 0 and r["agree"] is True and r["w"] == r["cech_w"] == 1
        check(r, schemas.INVARIANT_REPORT)

    def test_sequence(self):
        code, [r], _ = run("bundle", "--j", "1", "--op", "sequence")
        assert code == 0 and r["sequence"] == [[1, -1], [1, 0], [1, 1]]

    def test_p_file(self, tmp_path):
        f = tmp_path / "p.json"
        f.write_text('[{"i":1,"l":1,"c":"1"}]')
        assert run("bundle", "--j", "2", "--p-file", str(f), "--op", "cech")[1][0]["cech_w"] == 1
        assert run("bundle", "--j", "2", "--p-file", str(tmp_path / "nope.json"))[0] == 2

    def test_dump(self):
        code, [r], _ = run("bundle", "--j", "1", "--op", "dump")
        assert code == 0 and r["matrix"]["N"] == 4

    @pytest.mark.parametrize("p", ['[{"i":1,"l":5,"c":"1"}]', "not json", '[{"i":1,"l":1,"c":"1.5x"}]'])
    def test_bad_p(self, p):
        assert run("bundle", "--j", "2", "--p", p)[0] == 2

    def test_truncation_too_small(self):
        assert run("bundle", "--j", "3", "--N", "2", "--op", "sequence")[0] == 2

    def test_disagreement_exit_code(self, monkeypatch):
        import bundleseq.cli as cli

        monkeypatch.setattr(cli, "cech_w", lambda *a, **k: 99)
        code, [r], _ = run("bundle", "--j", "2", "--op", "verify")
        assert code == 4 and r["agree"] is False


class TestRankR:
    @pytest.mark.parametrize("tuples, op, key, val", [
        ("0,0,-2;0,0,-1", "w", "w", 1),
        ("1,0,-1", "w", "w", 0),
        ("0,-2,-3", "bound", "bound", 3),
    ])
    def test_examples(self, tuples, op, key, val):
        code, [r], _ = run("rank-r", "--tuples", tuples, "--op", op)
        assert code == 0 and r[key] == val

    def test_hypothesis_fails(self):
        assert run("rank-r", "--tuples", "0,-2,-3", "--op", "w")[0] == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert "schema 1" in capsys.readouterr().out


def test_byte_determinism_subprocess():
    cmd = [sys.executable, "-m", "bundleseq", "enumerate", "--a", "4", "--b", "-4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.count(b"\n") == 22


def test_exit_codes_disjoint():
    codes = {
        run("invariants", "1,1")[0],
        run("invariants", "1,0;1,5")[0],
        run("audit", "--claim", "thm02", "--j", "3", "--strict")[0],
    }
    assert codes == {0, 2, 3}
