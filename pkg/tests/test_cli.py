import io

import pytest

from edrkit.cli import main


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def matrix_file(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("2 2\n2 0\n0 3\n", encoding="utf-8")
    return str(path)


# -- snf -------------------------------------------------------------------


def test_snf_golden_output(matrix_file):
    code, text = run_cli("snf", "Z", matrix_file)
    assert code == 0
    assert text.splitlines()[0] == "# edr-kit v1"
    blocks = text.split("D\n")
    assert "2 2\n1 0\n0 6\n" in blocks[1]


def test_snf_rejects_non_bezout_ring(matrix_file, capsys):
    code, _ = run_cli("snf", "Z/12", matrix_file)
    assert code == 1
    assert "Bezout domain" in capsys.readouterr().err


def test_snf_empty_matrix(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("0 0\n", encoding="utf-8")
    code, text = run_cli("snf", "Z", str(path))
    assert code == 0
    assert "D\n0 0\n" in text


def test_snf_missing_file():
    code, _ = run_cli("snf", "Z", "/nonexistent/never.txt")
    assert code == 2


def test_snf_output_file(matrix_file, tmp_path):
    target = tmp_path / "cert.txt"
    code, text = run_cli("snf", "Z", matrix_file, "--output", str(target))
    assert code == 0 and text == ""
    assert target.read_text(encoding="utf-8").startswith("# edr-kit v1\nP\n")


# -- check -----------------------------------------------------------------


def test_check_single_property():
    code, text = run_cli("check", "Z/12", "gelfand")
    assert code == 0
    assert text == "# edr-kit v1\nproperty=gelfand ring=Z/12 holds=true checked=12\n"


def test_check_infinite_ring_rejected(capsys):
    code, _ = run_cli("check", "Z", "stable-range-1")
    assert code == 2
    assert "infinite ring" in capsys.readouterr().err


def test_check_all_emits_one_line_per_property():
    code, text = run_cli("check", "Z/12", "all")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "# edr-kit v1"
    assert len(lines) == 9
    assert all(line.startswith("property=") for line in lines[1:])


def test_check_unknown_property():
    code, _ = run_cli("check", "Z/12", "noetherian")
    assert code == 2


def test_check_bound_guard():
    code, _ = run_cli("check", "Z/40", "stable-range-2")
    assert code == 2
    code, _ = run_cli("check", "Z/40", "stable-range-2", "--bound", "40")
    assert code == 0


# -- diadem -----------------------------------------------------------------


def test_diadem_over_integers():
    code, text = run_cli("diadem", "Z", "3", "5")
    assert code == 0
    assert text == "# edr-kit v1\nmultiplier=0 diadem=3 evidence=quotient-sr1\n"


def test_diadem_non_comaximal(capsys):
    code, _ = run_cli("diadem", "Z", "4", "6")
    assert code == 1
    assert "not comaximal" in capsys.readouterr().err


def test_diadem_on_finite_ring():
    code, text = run_cli("diadem", "Z/12", "3", "4")
    assert code == 0
    assert "evidence=exhaustive" in text


def test_diadem_negative_literal_after_separator():
    code, text = run_cli("diadem", "Z", "7", "--", "-1")
    assert code == 0
    assert "diadem=7" in text


# -- witness ----------------------------------------------------------------


def test_witness_valid_triple():
    code, text = run_cli("witness", "Z", "6", "10", "15")
    assert code == 0
    assert text == "# edr-kit v1\np=0 q=1\n"


def test_witness_trivial_triples():
    code, text = run_cli("witness", "Z", "1", "0", "0")
    assert code == 0 and "p=0 q=0" in text


def test_witness_non_comaximal(capsys):
    code, _ = run_cli("witness", "Z", "2", "4", "6")
    assert code == 1
    assert "not comaximal" in capsys.readouterr().err


# -- verify -----------------------------------------------------------------


def test_verify_round_trip(matrix_file, tmp_path):
    cert_path = tmp_path / "cert.txt"
    run_cli("snf", "Z", matrix_file, "--output", str(cert_path))
    code, text = run_cli("verify", "Z", matrix_file, str(cert_path))
    assert code == 0
    assert text.endswith("valid\n")


def test_verify_reordered_diagonal_fails_chain(matrix_file, tmp_path):
    cert_path = tmp_path / "cert.txt"
    cert_path.write_text(
        "P\n2 2\n0 1\n1 0\nD\n2 2\n3 0\n0 2\nQ\n2 2\n0 1\n1 0\n", encoding="utf-8"
    )
    code, text = run_cli("verify", "Z", matrix_file, str(cert_path))
    assert code == 1
    assert text.endswith("invalid: chain\n")


def test_verify_tampered_entry_fails_product(matrix_file, tmp_path):
    cert_path = tmp_path / "cert.txt"
    run_cli("snf", "Z", matrix_file, "--output", str(cert_path))
    lines = cert_path.read_text(encoding="utf-8").splitlines()
    d_header = lines.index("D")
    row = lines[d_header + 2].split()
    row[0] = str(int(row[0]) + 1)
    lines[d_header + 2] = " ".join(row)
    cert_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    code, text = run_cli("verify", "Z", matrix_file, str(cert_path))
    assert code == 1
    assert text.endswith("invalid: product\n")


def test_verify_malformed_certificate(matrix_file, tmp_path):
    cert_path = tmp_path / "cert.txt"
    cert_path.write_text("garbage\n", encoding="utf-8")
    code, _ = run_cli("verify", "Z", matrix_file, str(cert_path))
    assert code == 2


# -- exit-code contract on malformed input -------------------------------------


def test_exit_codes_on_fuzzed_invocations(tmp_path):
    bad_matrix = tmp_path / "bad.txt"
    bad_matrix.write_text("2 2\n1 2\n3\n", encoding="utf-8")
    ragged = tmp_path / "ragged.txt"
    ragged.write_text("1 1\nx\n", encoding="utf-8")
    good = tmp_path / "good.txt"
    good.write_text("1 1\n5\n", encoding="utf-8")
    invocations = [
        [],
        ["frobnicate"],
        ["snf"],
        ["snf", "Q", str(good)],
        ["snf", "Z/", str(good)],
        ["snf", "Z", str(bad_matrix)],
        ["snf", "Z", str(ragged)],
        ["snf", "GF(9)[x]", str(good)],
        ["check", "Z/abc", "clean"],
        ["check", "Z/12", ""],
        ["diadem", "Z", "x", "y"],
        ["diadem", "Z/0", "1", "1"],
        ["witness", "Z", "1", "2", "zzz"],
        ["verify", "Z", str(good), "/does/not/exist"],
    ]
    for argv in invocations:
        code = main(argv, out=io.StringIO())
        assert code in (1, 2), argv


def test_byte_identical_reruns(matrix_file):
    first = run_cli("check", "Z/12", "all")
    second = run_cli("check", "Z/12", "all")
    assert first == second
    snf1 = run_cli("snf", "Z", matrix_file)
    snf2 = run_cli("snf", "Z", matrix_file)
    assert snf1 == snf2
