"""Spec files, CLI commands, exit codes, JSON reports."""

import io
import json

import pytest

import cct
import cct.cli
from cct.cli import run
from cct.errors import ParseError, UndefinedName
from cct.specfile import builtin_group, parse_spec_text, resolve_name


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def invoke_json(argv):
    code, out, err = invoke(argv + ["--format", "json"])
    assert code in (0, 1), err
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# spec files


def test_spec_file_grammar():
    env = parse_spec_text("""
# a small environment
group s3 = perm 3 : (1 2); (1 2 3)
group z4 = cyclic 4
group v = abelian 2,2
group d = dihedral 8
group q = quaternion
group sym = symmetric 3
group alt = alternating 4
group pq = product z4, v   # trailing comment
group qp = present <a,b | a^4, a^2 b^-2, b^-1 a b a> budget 500
genspec b = truncated 2 3
genspec fp = freeprod z4, s3
""")
    assert env["s3"].order == 6
    assert env["z4"].order == 4
    assert env["pq"].order == 16
    assert cct.isomorphic(env["qp"], cct.quaternion())
    assert [f.order for f in env["b"].factors] == [2, 4, 8]
    assert [f.order for f in env["fp"].factors] == [4, 6]


def test_spec_file_undefined_name():
    with pytest.raises(UndefinedName) as exc:
        parse_spec_text("group x = product s3, undefined_name\n")
    assert exc.value.name == "s3"  # first unresolved reference wins


def test_spec_file_duplicate_name():
    with pytest.raises(ParseError):
        parse_spec_text("group a = cyclic 2\ngroup a = cyclic 3\n")


def test_spec_file_syntax_error_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_spec_text("group ok = cyclic 2\ngroup bad = nonsense 5\n")
    assert exc.value.line == 2


def test_spec_file_perm_cycles_are_one_based():
    env = parse_spec_text("group t = perm 4 : (1 2)(3 4)\n")
    assert env["t"].order == 2


def test_builtin_names():
    assert builtin_group("z6").order == 6
    assert builtin_group("s4").order == 24
    assert builtin_group("a5").order == 60
    assert builtin_group("d10").order == 10
    assert builtin_group("q8").order == 8
    assert builtin_group("v4").order == 4
    assert builtin_group("nope") is None
    with pytest.raises(UndefinedName):
        resolve_name({}, "zz9")


# ---------------------------------------------------------------------------
# commands


def test_socle_command_payload():
    code, rep = invoke_json(["socle", "--gen", "z2", "--target", "z4"])
    assert code == 0
    assert rep["result"]["subgroup"]["order"] == 2
    assert rep["result"]["subgroup"]["elements"] == [0, 2]
    assert rep["result"]["is_generated"] is False


def test_hierarchy_command_a5_s5():
    code, rep = invoke_json(["hierarchy", "--gen", "a5", "--target", "s5"])
    assert code == 0
    r = rep["result"]
    assert r["socle"]["order"] == 60 and r["radical"]["order"] == 60
    assert r["socle_in_radical"] is True
    assert r["is_generated"] is False and r["is_constructible"] is False


def test_radical_command_chain():
    code, out, err = invoke(["radical", "--gen", "z2", "--target", "z4"])
    assert code == 0
    assert "chain of lengths [2, 4]" in out


def test_homs_and_iso_commands():
    code, rep = invoke_json(["homs", "--gen", "z2", "--target", "s3"])
    assert rep["result"]["count"] == 4
    code, rep = invoke_json(["iso", "--gen", "z6", "--target", "d6"])
    assert rep["result"]["isomorphic"] is False
    code, rep = invoke_json(["iso", "--gen", "d6", "--target", "s3"])
    assert rep["result"]["isomorphic"] is True
    assert rep["result"]["witness_gen_images"] is not None


def test_factor_command():
    code, rep = invoke_json(["factor", "--gen", "z2", "--target", "s3",
                             "--class", "2-group", "--hom", "1"])
    assert rep["result"]["found"] is True
    assert rep["result"]["subgroup"]["order"] == 2


def test_classify_command_with_spec(tmp_path):
    spec = tmp_path / "groups.spec"
    spec.write_text(
        "group g1 = cyclic 8\n"
        "group g2 = abelian 4,2\n"
        "group g3 = abelian 2,2,2\n"
        "group g4 = dihedral 8\n"
        "group g5 = quaternion\n"
        "group g6 = present <r,s | r^4, s^2, (r s)^2>\n"
        "group g7 = abelian 2,4\n"
    )
    code, rep = invoke_json(["classify", "--spec", str(spec)])
    assert code == 0
    assert rep["result"]["class_count"] == 5


def test_verify_command_passes():
    code, out, err = invoke(["verify", "--max-order", "8", "--seed", "1"])
    assert code == 0
    assert "all passed" in out


def test_verify_exit_code_on_failure(monkeypatch):
    # force one invariant check to report a violation; the report must
    # carry a witness and the exit code must flip to 1
    monkeypatch.setattr(cct.cli, "is_normal", lambda group, sub: False)
    code, rep = invoke_json(["verify", "--max-order", "4", "--seed", "1"])
    assert code == 1
    assert rep["result"]["passed"] is False
    assert rep["result"]["failures"]
    assert all(f["witness"] for f in rep["result"]["failures"])


def test_usage_errors_exit_2():
    code, out, err = invoke(["socle", "--gen", "z2"])
    assert code == 2 and "required" in err
    code, out, err = invoke(["socle", "--gen", "z2", "--target", "zz9q"])
    assert code == 2 and "undefined" in err
    code, out, err = invoke(["factor", "--gen", "z2", "--target", "s3", "--hom", "99"])
    assert code == 2 and "out of range" in err


def test_multi_factor_genspec_rejected_where_group_needed(tmp_path):
    spec = tmp_path / "g.spec"
    spec.write_text("genspec b = truncated 2 3\n")
    code, out, err = invoke(["homs", "--spec", str(spec), "--gen", "b", "--target", "s3"])
    assert code == 2 and "multi-factor" in err
    # but socle accepts a multi-factor generator
    code, rep = invoke_json(["socle", "--spec", str(spec), "--gen", "b", "--target", "z8"])
    assert code == 0
    assert rep["result"]["is_generated"] is True
    assert rep["inputs"]["gen_factor_orders"] == [2, 4, 8]


def test_verify_with_spec_file(tmp_path):
    spec = tmp_path / "env.spec"
    spec.write_text(
        "group h1 = cyclic 8\n"
        "group h2 = dihedral 8\n"
        "group h3 = perm 4 : (1 2 3); (2 3 4)\n"
        "genspec b = truncated 2 2\n"
    )
    code, rep = invoke_json(["verify", "--spec", str(spec), "--seed", "3"])
    assert code == 0
    assert rep["result"]["passed"] is True
    assert rep["result"]["checks"] > 0


def test_parse_error_exit_2(tmp_path):
    spec = tmp_path / "bad.spec"
    spec.write_text("group x = presen <a | a^2>\n")
    code, out, err = invoke(["classify", "--spec", str(spec)])
    assert code == 2


def test_budget_error_exit_2(tmp_path):
    spec = tmp_path / "inf.spec"
    spec.write_text("group f2 = present <a,b | a b a^-1 b^-1> budget 500\n")
    code, out, err = invoke(["classify", "--spec", str(spec)])
    assert code == 2 and "coset" in err


# ---------------------------------------------------------------------------
# catalog round trip and JSON contract


def test_catalog_text_round_trip():
    code, out, err = invoke(["catalog", "--max-order", "16"])
    assert code == 0
    env = parse_spec_text(out)
    catalog = cct.build_small_catalog(16)
    assert set(env) == {e.name for e in catalog}
    for entry in catalog:
        assert cct.isomorphic(env[entry.name], entry.group), entry.name


def test_reports_validate_against_schema():
    import importlib.resources

    import jsonschema
    schema = json.loads(
        importlib.resources.files("cct").joinpath("report.schema.json").read_text()
    )
    commands = [
        ["socle", "--gen", "z2", "--target", "z4"],
        ["radical", "--gen", "z2", "--target", "z8"],
        ["homs", "--gen", "z2", "--target", "s3"],
        ["iso", "--gen", "z8", "--target", "d8"],
        ["classify", "--max-order", "8"],
        ["hierarchy", "--gen", "z3", "--target", "s3"],
        ["factor", "--gen", "z2", "--target", "d8", "--hom", "1"],
        ["verify", "--max-order", "6", "--seed", "2"],
        ["catalog", "--max-order", "8"],
    ]
    for argv in commands:
        code, rep = invoke_json(argv)
        jsonschema.validate(rep, schema)


def test_json_index_convention():
    # cycles are 1-based in spec files, element indices 0-based in JSON
    code, rep = invoke_json(["socle", "--gen", "z2", "--target", "z4"])
    elements = rep["result"]["subgroup"]["elements"]
    assert elements[0] == 0
    assert all(isinstance(e, int) for e in elements)


def test_json_determinism_excluding_timing():
    argv = ["hierarchy", "--gen", "z2", "--target", "d8", "--seed", "9"]
    _, first = invoke_json(argv)
    _, second = invoke_json(argv)
    first.pop("timing")
    second.pop("timing")
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
