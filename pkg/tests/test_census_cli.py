import json
from fractions import Fraction

import pytest

from bitorus.census import diag_distribution, exceptional_pairs
from bitorus.cli import cli_main
from bitorus.verify import run_verify


def test_exceptional_pairs_below_first_entry():
    assert exceptional_pairs(18) == []


def test_exceptional_pairs_up_to_29():
    got = [(r.n, r.m) for r in exceptional_pairs(29)]
    assert got == [(5, 19), (7, 27), (7, 29), (13, 29), (20, 29)]


def test_exceptional_pairs_records_are_coprime_and_sorted():
    records = exceptional_pairs(29)
    assert all(not r.hamiltonian and r.diag >= 2 for r in records)
    keys = [(r.n, r.m) for r in records]
    assert keys == sorted(keys)


def test_exceptional_pairs_validates_input():
    with pytest.raises(ValueError):
        exceptional_pairs(1)


def test_distribution_single_pair():
    report = diag_distribution(2)
    assert report.pairs == 1
    assert (report.p1, report.p2, report.p3) == (0, 0, 1)


def test_distribution_small_horizon():
    report = diag_distribution(40)
    assert report.pairs == sum(1 for _ in _coprime(40))
    assert report.count1 + report.count2 + report.count3 <= report.pairs
    assert abs(report.p1 - Fraction(4, 9)) < Fraction(1, 20)


def _coprime(h):
    import math

    for m in range(2, h + 1):
        for n in range(1, m):
            if math.gcd(n, m) == 1:
                yield n, m


# --- CLI -------------------------------------------------------------------

def test_cli_diag(capsys):
    assert cli_main(["diag", "2", "3"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    for method in ("naive", "string", "reduction", "tree"):
        assert cli_main(["diag", "6", "10", "--method", method]) == 0
        assert capsys.readouterr().out.strip() == "4"


def test_cli_ham(capsys):
    assert cli_main(["ham", "5", "19"]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert cli_main(["ham", "3", "3", "--method", "brute"]) == 0
    assert capsys.readouterr().out.strip() == "true"


def test_cli_ham_witness(capsys):
    assert cli_main(["ham", "3", "3", "--witness"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "true"
    assert set(lines[1]) <= {"U", "R"}
    assert len(lines) == 2 + 36
    assert lines[2].count(",") == 1


def test_cli_ham_witness_from_link_tier(capsys):
    assert cli_main(["ham", "4", "6", "--witness", "--method", "link"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "true"
    assert len(lines) == 2 + 4 * 4 * 6


def test_cli_ham_no_witness_lines_when_negative(capsys):
    assert cli_main(["ham", "2", "3", "--witness"]) == 0
    assert capsys.readouterr().out.strip() == "false"


def test_cli_ham_size_one_note(capsys):
    assert cli_main(["ham", "1", "3"]) == 0
    captured = capsys.readouterr()
    assert captured.out.strip() == "true"
    assert "size-1" in captured.err


def test_cli_usage_errors(capsys):
    assert cli_main(["diag", "0", "3"]) == 1
    assert "positive" in capsys.readouterr().err
    assert cli_main(["diag", "2"]) == 1
    capsys.readouterr()
    assert cli_main(["unknown"]) == 1
    capsys.readouterr()


def test_cli_table_csv(capsys):
    assert cli_main(["table", "--max", "29", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,m,diag,hamiltonian"
    assert lines[1] == "5,19,2,false"
    assert len(lines) == 6


def test_cli_table_json(capsys):
    assert cli_main(["table", "--max", "20", "--format", "json"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ['{"n": 5, "m": 19, "diag": 2, "hamiltonian": false, "method": "link"}']
    record = json.loads(lines[0])
    assert record["diag"] == 2


def test_cli_census_json(capsys):
    assert cli_main(["census", "--max", "30", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["h"] == 30
    assert record["pairs"] > 0
    assert abs(record["p1"] + record["p2"] + record["p3"] - 1.0) < 0.2


def test_cli_census_csv(capsys):
    assert cli_main(["census", "--max", "10", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "h,pairs,count1,count2,count3,p1,p2,p3"
    assert lines[1].startswith("10,")


def test_cli_verify(capsys):
    assert cli_main(["verify", "--max", "10"]) == 0
    out = capsys.readouterr().out
    assert out.count("ok ") == 7 and "FAIL" not in out


def test_run_verify_all_green():
    assert all(res.ok for res in run_verify(6))


def test_deterministic_table_output(capsys):
    cli_main(["table", "--max", "29"])
    first = capsys.readouterr().out
    cli_main(["table", "--max", "29"])
    assert capsys.readouterr().out == first
