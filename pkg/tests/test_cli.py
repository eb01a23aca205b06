import pytest

from runpad.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_transform(capsys):
    code, out, _ = run(capsys, "transform", "--n", "89", "--d0", "0", "--d1", "1", "--mode", "append")
    assert code == 0
    assert out == "3299\n"


def test_transform_empty_pads_identity(capsys):
    code, out, _ = run(capsys, "transform", "--n", "1", "--d0", "", "--d1", "", "--mode", "append")
    assert code == 0
    assert out == "1\n"


def test_transform_prepend_show_bits(capsys):
    code, out, _ = run(
        capsys, "transform", "--n", "5", "--d0", "00", "--d1", "01", "--mode", "prepend", "--show-bits"
    )
    assert code == 0
    assert out.splitlines() == ["195", "011000011"]


def test_transform_bad_pad_alphabet(capsys):
    code, _, err = run(capsys, "transform", "--n", "5", "--d0", "0x", "--d1", "1", "--mode", "append")
    assert code == 2
    assert "error:" in err


def test_inverse(capsys):
    assert run(capsys, "inverse", "--n", "3299")[:2] == (0, "89\n")
    assert run(capsys, "inverse", "--n", "3")[:2] == (0, "1\n")
    assert run(capsys, "inverse", "--n", "2")[:2] == (0, "EMPTY\n")


def test_records(capsys):
    code, out, _ = run(
        capsys, "records", "--mode", "append", "--d0", "0", "--d1", "1", "--limit", "21"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert lines[0] == "1 3"
    assert lines[-1] == "21 819"


def test_records_prepend_same_indices(capsys):
    _, fwd, _ = run(capsys, "records", "--mode", "append", "--d0", "0", "--d1", "1", "--limit", "21")
    _, rev, _ = run(capsys, "records", "--mode", "prepend", "--d0", "0", "--d1", "1", "--limit", "21")
    assert [l.split()[0] for l in fwd.splitlines()] == [l.split()[0] for l in rev.splitlines()]


def test_records_deterministic_across_chunks(capsys):
    outputs = set()
    for chunk in ("1", "64", "4096"):
        _, out, _ = run(
            capsys,
            "records", "--mode", "append", "--d0", "0", "--d1", "1",
            "--limit", "2000", "--chunk", chunk,
        )
        outputs.add(out)
    assert len(outputs) == 1


def test_records_bfile_diffs_clean_against_itself(tmp_path, capsys):
    path = str(tmp_path / "records.txt")
    code, _, _ = run(
        capsys,
        "records", "--mode", "append", "--d0", "0", "--d1", "1",
        "--limit", "100", "--bfile", path,
    )
    assert code == 0
    code, out, _ = run(capsys, "diff", "--a", path, "--b", path)
    assert code == 0
    assert out.splitlines()[-1] == "RESULT: PASS"


def test_enumerate_t(capsys):
    code, out, _ = run(capsys, "enumerate-t", "--count", "9")
    assert code == 0
    assert out.splitlines() == ["1", "2", "4", "5", "9", "10", "18", "20", "21"]
    assert run(capsys, "enumerate-t", "--count", "1")[:2] == (0, "1\n")


def test_verify_theorem_pass(capsys):
    code, out, _ = run(
        capsys,
        "verify", "theorem", "--mode", "append", "--d0", "0", "--d1", "1", "--max-n", "2000",
    )
    assert code == 0
    assert out.splitlines()[-1] == "RESULT: PASS"


def test_verify_theorem_hypothesis_violation_exits_2(capsys):
    code, _, err = run(
        capsys,
        "verify", "theorem", "--mode", "append", "--d0", "", "--d1", "1", "--max-n", "10",
    )
    assert code == 2
    assert "error:" in err


def test_verify_bound(capsys):
    code, out, _ = run(capsys, "verify", "bound", "--max-n", "1000")
    assert code == 0
    assert out.splitlines()[-1] == "RESULT: PASS"
    assert "2 10 42 170 682" in out


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--max-n", "300")
    assert code == 0
    assert out.splitlines()[-1] == "RESULT: PASS"


def test_emit_then_diff(tmp_path, capsys):
    path = str(tmp_path / "f.txt")
    code, _, _ = run(capsys, "emit", "--key", "append-values-01", "--count", "3", "--out", path)
    assert code == 0
    assert (tmp_path / "f.txt").read_text() == "1 3\n2 12\n3 7\n"
    code, out, _ = run(capsys, "diff", "--a", path, "--b", path)
    assert code == 0
    assert out.splitlines()[-1] == "RESULT: PASS"


def test_emit_unknown_key_exits_2(capsys):
    code, _, err = run(capsys, "emit", "--key", "nope", "--count", "3", "--out", "/tmp/x.txt")
    assert code == 2
    assert "unknown sequence key" in err


def test_diff_detects_divergence(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("1 3\n2 12\n3 7\n")
    b.write_text("1 3\n2 12\n3 8\n")
    code, out, _ = run(capsys, "diff", "--a", str(a), "--b", str(b))
    assert code == 1
    assert "first divergence at index 3" in out


def test_diff_unreadable_file_exits_2(capsys):
    code, _, _ = run(capsys, "diff", "--a", "/nonexistent/a.txt", "--b", "/nonexistent/b.txt")
    assert code == 2


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["transform", "--n", "0", "--d0", "0", "--d1", "1", "--mode", "append"])
    assert err.value.code == 2
