import json

import pytest

from eulerlab.cli import main, parse_n_range, record_to_plain


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------- count


def test_count_single(capsys):
    code, out, _ = run(capsys, "count", "--class", "C", "--n", "7")
    assert code == 0
    assert out == "7 C 4\n"


def test_count_weight_zero(capsys):
    code, out, _ = run(capsys, "count", "--class", "A", "--n", "0")
    assert code == 0
    assert out == "0 A 1\n"


def test_count_range_matches_enumeration(capsys):
    code, out, _ = run(capsys, "count", "--class", "D", "--n", "2..8", "--method", "enumeration")
    assert code == 0
    got = [int(line.split()[2]) for line in out.splitlines()]
    assert got == [2, 2, 4, 4, 6, 8, 10]
    code, out2, _ = run(capsys, "count", "--class", "D", "--n", "2..8")
    assert [int(line.split()[2]) for line in out2.splitlines()] == got


def test_count_bad_range(capsys):
    code, _, err = run(capsys, "count", "--class", "A", "--n", "8..2")
    assert code == 2
    assert "error" in err


def test_parse_n_range():
    assert parse_n_range("7") == (7,)
    assert parse_n_range("2..5") == (2, 3, 4, 5)


# ------------------------------------------------------------- enumerate


def test_enumerate_d7_matches_table(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "D", "--n", "7")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8
    assert set(lines) == {
        "0+0+7",
        "0+0+6+1",
        "0+0+5+2",
        "0+0+4+3",
        "0+0+4+2+1",
        "1+1+5",
        "1+1+2+3",
        "2+2+3",
    }


def test_enumerate_simple(capsys):
    assert run(capsys, "enumerate", "--class", "A", "--n", "1")[1] == "1\n"
    assert run(capsys, "enumerate", "--class", "C", "--n", "2")[1] == "2\n"


def test_enumerate_cutoff_exit_2(capsys):
    code, _, err = run(capsys, "enumerate", "--class", "A", "--n", "99")
    assert code == 2
    assert "cutoff" in err


def test_enumerate_rejects_range(capsys):
    code, _, _ = run(capsys, "enumerate", "--class", "A", "--n", "2..4")
    assert code == 2


def test_cutoff_flag_is_capped(capsys):
    code, _, err = run(capsys, "enumerate", "--class", "A", "--n", "5", "--cutoff", "500")
    assert code == 2
    assert "cutoff" in err


# ------------------------------------------------------------------- map


@pytest.mark.parametrize(
    "bijection,text,expected",
    [
        ("c2b", "2+2+2+1", "1+1+1+1+1+1"),
        ("glaisher", "6", "3+3"),
        ("glaisher-inv", "3+1+1+1", "3+2+1"),
        ("b2c", "3+1+1+1", "4+2+1"),
    ],
)
def test_map_examples(capsys, bijection, text, expected):
    code, out, _ = run(capsys, "map", "--bijection", bijection, text)
    assert code == 0
    assert out == expected + "\n"


def test_map_d_reduce_reports_case_and_bit(capsys):
    code, out, _ = run(capsys, "map", "--bijection", "d-reduce", "0+0+7")
    assert code == 0
    assert out == "6 (case 1, bit 0)\n"
    code, out, _ = run(capsys, "map", "--bijection", "d-reduce", "1+1+5")
    assert out == "5+1 (case 3, bit 1)\n"


def test_map_d_lift_renders_class_d(capsys):
    code, out, _ = run(capsys, "map", "--bijection", "d-lift", "--bit", "1", "5+1")
    assert code == 0
    assert out == "1+1+5\n"
    code, out, _ = run(capsys, "map", "--bijection", "d-lift", "--bit", "0", "6")
    assert out == "0+0+7\n"


def test_map_class_violation_exit_1(capsys):
    code, _, err = run(capsys, "map", "--bijection", "c2b", "3+3")
    assert code == 1
    assert "class C" in err


def test_map_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "map", "--bijection", "c2b", "x+3")
    assert code == 2
    assert "bad part" in err


def test_map_zero_parts_only_for_d_input(capsys):
    code, _, _ = run(capsys, "map", "--bijection", "glaisher", "0+0+6")
    assert code == 2


def test_map_d_lift_needs_bit(capsys):
    code, _, err = run(capsys, "map", "--bijection", "d-lift", "5+1")
    assert code == 2
    assert "--bit" in err


# ---------------------------------------------------------------- verify


def test_verify_pass_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "euler_AB", "--order", "50")
    assert code == 0
    assert out == "euler_AB order=50 PASS\n"


def test_verify_half_d_tiny_order(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "half_D", "--order", "2")
    assert code == 0
    assert "PASS" in out


def test_verify_thm_all(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "thm_all", "--order", "40")
    assert code == 0


def test_verify_unknown_identity_exit_2(capsys):
    code, _, _ = run(capsys, "verify", "--identity", "everything")
    assert code == 2


def test_verify_bad_order_exit_2(capsys):
    code, _, _ = run(capsys, "verify", "--identity", "euler_AB", "--order", "0")
    assert code == 2


# ---------------------------------------------------------------- series


def test_series_dump_golden(capsys):
    code, out, _ = run(capsys, "series", "--class", "C", "--order", "7")
    assert code == 0
    assert out == "0\t1\n1\t0\n2\t1\n3\t1\n4\t2\n5\t2\n6\t3\n7\t4\n"


def test_series_form_and_stage(capsys):
    code, out, _ = run(capsys, "series", "--form", "odd_poch_ratio", "--order", "4")
    assert code == 0
    assert out.splitlines()[0] == "0\t1"
    code, out, _ = run(capsys, "series", "--stage", "final", "--order", "4")
    assert code == 0
    assert out.splitlines()[0] == "0\t2"  # stages are doubled


def test_series_requires_exactly_one_source(capsys):
    code, _, _ = run(capsys, "series", "--order", "5")
    assert code == 2
    code, _, _ = run(capsys, "series", "--class", "A", "--form", "odd_poch_ratio")
    assert code == 2


# ------------------------------------------------------- output contracts


def test_determinism_byte_identical(capsys):
    outputs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "enumerate", "--class", "D", "--n", "9", "--format", "json-lines")
        outputs.add(out)
    assert len(outputs) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "--class", "C", "--n", "5..9"),
        ("enumerate", "--class", "D", "--n", "7"),
        ("enumerate", "--class", "A", "--n", "0"),
        ("map", "--bijection", "d-reduce", "2+2+3"),
        ("map", "--bijection", "b2c", "3+3"),
        ("verify", "--identity", "shift_BC", "--order", "30"),
        ("series", "--class", "B", "--order", "6"),
        ("selftest", "--only", "golden_table"),
    ],
)
def test_json_lines_round_trip_to_plain(capsys, argv):
    code_plain, plain, _ = run(capsys, *argv, "--format", "plain")
    code_json, jsonl, _ = run(capsys, *argv, "--format", "json-lines")
    assert code_plain == code_json
    regenerated = [record_to_plain(json.loads(line)) for line in jsonl.splitlines()]
    assert regenerated == plain.splitlines()


def test_selftest_single_criterion(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "golden_table")
    assert code == 0
    assert out == "[PASS] golden_table\n"


def test_usage_error_exit_2(capsys):
    assert run(capsys, "count", "--class", "Z", "--n", "1")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
