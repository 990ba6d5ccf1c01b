import pytest

from affhecke import cli, hecke, soergel, weyl
from affhecke.ratq import RatQ


def test_verify_weyl_exit_code(capsys):
    assert cli.main(["verify", "weyl", "--r", "3"]) == 0
    out = capsys.readouterr().out
    assert "WEYL" in out and "FAIL" not in out


def test_verify_rejects_bad_rank():
    with pytest.raises(SystemExit):
        cli.main(["verify", "schur", "--r", "4", "--n", "4"])
    with pytest.raises(SystemExit):
        cli.main(["verify", "singular", "--r", "5", "--n", "4"])


def test_report_line_format(capsys):
    cli.main(["verify", "hecke", "--r", "3"])
    lines = capsys.readouterr().out.strip().splitlines()
    for line in lines[:-1]:
        suite, cid, status = line.split()[:3]
        assert suite == "HECKE"
        assert status in ("PASS", "FAIL")
    assert sorted(lines[:-1]) == lines[:-1]


def test_weyl_commands(capsys):
    assert cli.main(["weyl", "nf", "--word", "rho s1", "--r", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("rho^1 * s1")
    assert cli.main(["weyl", "act", "--word", "rho", "--weight", "1,2,3",
                     "--m", "0", "--r", "3"]) == 0
    assert capsys.readouterr().out.strip() == "(3,1,2; -3)"


def test_hecke_mul_command(capsys):
    assert cli.main(["hecke", "mul", "--lhs", "T[s1]", "--rhs", "T[s1]",
                     "--r", "3"]) == 0
    assert capsys.readouterr().out.strip() \
        == "(q^2 - 1)*T[s1] + q^2*T[e]"


def test_hecke_kl_command(capsys):
    assert cli.main(["hecke", "kl", "--max-length", "2", "--r", "3"]) == 0
    out = capsys.readouterr().out
    assert "C[e]" in out and "BAR-FAIL" not in out


def test_schur_commands(capsys):
    assert cli.main(["schur", "act", "--word", "E1", "--tensor", "(2,1,3)",
                     "--n", "4", "--r", "3"]) == 0
    capsys.readouterr()
    assert cli.main(["schur", "equal", "--lhs", "K1 K1^-1", "--rhs",
                     "K2 K2^-1", "--n", "4", "--r", "3"]) == 0
    assert capsys.readouterr().out.strip() == "EQUAL"
    assert cli.main(["schur", "equal", "--lhs", "E1", "--rhs", "E2",
                     "--n", "4", "--r", "3"]) == 1


def test_soergel_commands(capsys):
    assert cli.main(["soergel", "check", "--relation",
                     cli.relations.RELATION_IDS[0], "--r", "3"]) == 0
    capsys.readouterr()
    assert cli.main(["soergel", "eval", "--object", "2,2", "--morphism",
                     "vcomp(split(2), merge(2))", "--r", "3"]) == 0
    out = capsys.readouterr().out
    assert "->" in out


def test_morphism_parser_matches_library():
    r = 3
    f = cli.parse_morphism("hcomp(id(1), enddot(2))", r)
    g = soergel.tensor_mor(soergel.idmor(r, (1,)), soergel.enddot(2, r))
    assert soergel.mor_equal(f, g)
    assert soergel.mor_equal(cli.parse_morphism("cap+", r),
                             soergel.cap_or("+", r))
    assert soergel.mor_equal(cli.parse_morphism("box(y)", r),
                             soergel.boxy(r))
    assert soergel.mor_equal(cli.parse_morphism("m4ur(1)", r),
                             soergel.m4("ur", 1, r))


def test_rouquier_commands(capsys):
    assert cli.main(["rouquier", "build", "--braid", "s1 rho",
                     "--r", "3"]) == 0
    capsys.readouterr()
    assert cli.main(["rouquier", "d2", "--braid", "s1 s2^-1",
                     "--r", "3"]) == 0
    capsys.readouterr()
    assert cli.main(["rouquier", "euler", "--braid", "rho", "--r", "3"]) == 0
    assert capsys.readouterr().out.strip() == "T[rho]"


def test_singular_commands(capsys):
    assert cli.main(["singular", "lemma", "--n", "5", "--k", "3"]) == 0
    capsys.readouterr()
    assert cli.main(["singular", "bubbles", "--lambda", "1,1,1,0"]) == 0
    capsys.readouterr()
    assert cli.main(["singular", "triangle", "--r", "3", "--n", "4"]) == 0
    capsys.readouterr()
    assert cli.main(["singular", "twist", "--blocks", "2,1"]) == 0


def test_scalar_parser():
    assert cli.parse_ratq("q^2 - 1") == RatQ.q_power(2) - RatQ([1])
    assert cli.parse_ratq("(q + q^-1)") == RatQ.q() + RatQ.q_power(-1)
    assert cli.parse_ratq("-3/2") == RatQ.from_fraction(
        __import__("fractions").Fraction(-3, 2))
    assert cli.parse_ratq("2*q^-1") == RatQ.q_power(-1) * RatQ.from_int(2)
