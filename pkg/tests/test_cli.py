import pytest

from composites.cli import execute, main, parse_config
from composites.composite import z_in_q, z_localized
from composites.errors import NotAMember, ParseError
from composites.fieldtower import ExtensionPair


class TestParseConfig:
    def test_verify_config(self, proper_ring):
        cfg = parse_config("ring=composite(gf(2),gf(4,2)) cmd=verify")
        assert cfg.command == "verify"
        assert cfg.ring == proper_ring

    def test_chain_config(self):
        cfg = parse_config("ring=composite(Z,Q) cmd=chain f=[0,1] d=2 steps=5")
        assert cfg.ring == z_in_q()
        assert cfg.values["d"] == 2
        assert cfg.values["steps"] == 5

    def test_localized_ring(self):
        assert parse_config("ring=composite(Z_loc[3,5],Q) cmd=props").ring == z_localized([3, 5])

    @pytest.mark.parametrize(
        "ring, message",
        [
            ("composite(Z_loc[4],Q)", "not prime"),
            ("composite(Z_loc[3],gf(2))", "Z_loc pairs with Q"),
            ("composite(Z[3],Q)", "Z takes no primes"),
        ],
    )
    def test_localized_ring_errors(self, ring, message):
        with pytest.raises(ParseError, match=message):
            parse_config(f"ring={ring} cmd=props")

    def test_gf_with_explicit_modulus(self, proper_ring):
        assert parse_config("ring=composite(gf(2),gf(2,2,[1,1,1])) cmd=props").ring == proper_ring
        cfg = parse_config("ring=composite(gf(3),gf(3,2,[2,1,1])) cmd=props")
        assert cfg.ring.big.modulus == (2, 1, 1)
        assert cfg.ring.big.order == 9

    def test_gf_prime_and_degree(self, gf4):
        assert parse_config("small=gf(2,2) cover gf big=gf(4,2) b=w").values["small"] == gf4

    def test_gf_modulus_must_be_irreducible(self):
        with pytest.raises(ParseError, match="reducible"):
            parse_config("ring=composite(gf(2),gf(2,2,[1,0,1])) cmd=props")
        with pytest.raises(ParseError, match="modulus needs 3 coefficients"):
            parse_config("ring=composite(gf(2),gf(2,2,[1,1])) cmd=props")

    def test_numberfield(self, cube_root_two):
        cfg = parse_config("ring=composite(Q,numberfield([-2,0,0,1])) cmd=props")
        assert cfg.ring.big == cube_root_two

    def test_function_fields(self, inseparable_pair, inseparable_ring):
        assert parse_config("pair=pair(funcsub(2,1),funcfield(2)) cmd=verify").ring == inseparable_pair
        assert parse_config("ring=composite(funcsub(2,1),funcfield(2)) cmd=props").ring == inseparable_ring

    def test_funcsub_needs_exponent(self):
        with pytest.raises(ParseError, match="funcsub\\(\\) takes p and e"):
            parse_config("ring=composite(funcsub(2),funcfield(2)) cmd=props")

    def test_pair_and_options(self):
        cfg = parse_config("pair=pair(funcsub(2,1),funcfield(2)) cmd=verify format=table seed=7 assume=quasilocal")
        assert isinstance(cfg.ring, ExtensionPair)
        assert cfg.fmt == "table"
        assert cfg.seed == 7
        assert cfg.options().assume_quasilocal

    def test_comments_and_lines(self):
        cfg = parse_config("# instance\nring=composite(gf(3),gf(9))\ncmd=props  # report\n")
        assert cfg.command == "props"

    def test_unknown_key(self):
        with pytest.raises(ParseError, match="unknown key 'colour'"):
            parse_config("ring=composite(Z,Q) cmd=chain colour=3")

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_config("cmd=verify\nring=composite(gf(2),gf(4)) steps=x")
        assert info.value.line == 2
        assert "cannot parse the value of 'steps'" in info.value.message

    def test_duplicate_key(self):
        with pytest.raises(ParseError, match="duplicate key 'cmd'"):
            parse_config("cmd=verify cmd=props")

    def test_missing_command(self):
        with pytest.raises(ParseError, match="no command"):
            parse_config("ring=composite(Z,Q)")

    def test_not_a_prime_power(self):
        with pytest.raises(ParseError, match="not a prime power"):
            parse_config("ring=composite(gf(2),gf(6)) cmd=props")

    def test_evaluation_errors_carry_the_coefficient_position(self):
        text = "ring=composite(gf(2),gf(4,2)) cmd=factor elem=[0,1/0]"
        with pytest.raises(ParseError) as info:
            execute(parse_config(text))
        assert info.value.line == 1
        assert info.value.column == text.index("1/0") + 1

    @pytest.mark.parametrize(
        "text",
        [
            "ring=composite(gf(2),gf(4)) cmd=factor elem=[0,t]",
            "ring=composite(Z,Q) cmd=chain f=[0,1/(1-1)] d=2",
            "cover gf small=gf(2) big=gf(4) b=w/0",
        ],
    )
    def test_evaluation_errors_are_parse_errors(self, text):
        with pytest.raises(ParseError, match="cannot evaluate coefficient"):
            execute(parse_config(text))

    def test_constant_outside_small_field(self):
        cfg = parse_config("ring=composite(gf(2),gf(8,3)) cmd=factor elem=[w]")
        with pytest.raises(NotAMember):
            execute(cfg)


class TestExecute:
    def test_chain(self):
        status, lines = execute(parse_config("ring=composite(Z,Q) cmd=chain f=[0,1] d=2 steps=5"))
        assert status == 0
        assert lines[0] == "IDEAL (X)"
        assert len([line for line in lines if line.startswith("IDEAL")]) == 6
        assert lines[-1] == "CERTIFIED true"

    def test_factor_with_expressions(self):
        status, lines = execute(parse_config("ring=composite(gf(2),gf(4)) cmd=factor elem=[0, w^2 + w, 1]"))
        assert status == 0
        assert lines[0] == "ELEMENT X^2 + X"
        assert "LENGTH 2" in lines

    def test_divisors(self):
        _, lines = execute(parse_config("ring=composite(gf(2),gf(4)) cmd=divisors elem=[0,0,1]"))
        assert lines[0] == "IRREDUCIBLE_DIVISORS 3"

    def test_ideal(self):
        _, lines = execute(parse_config("ring=composite(gf(2),gf(4)) cmd=ideal gens=[[0,1],[0,w]]"))
        assert "INVERTIBLE false" in lines

    def test_finite_subring_cover(self):
        _, lines = execute(parse_config("cover gf small=gf(2) big=gf(4) b=w"))
        assert lines[0] == "WITNESS w*X^2 + w*X"
        assert "MEMBER true" in lines

    def test_single_claim(self):
        status, lines = execute(parse_config("ring=composite(gf(2),gf(4)) cmd=verify claim=T_DEDEKIND"))
        assert status == 1
        assert lines[0].startswith("CLAIM T_DEDEKIND asserted=true tested=FAIL")


class TestMain:
    def test_residue_cover(self, capsys):
        assert main(["cover", "z", "r=2"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "WITNESS (1/2)*X^2 + (-1/2)*X"
        assert out[1] == "COVER Z + X*Q[X]"

    def test_identity_pair_verifies(self, capsys):
        assert main(["ring=composite(gf(2),gf(2))", "cmd=verify"]) == 0
        assert "contradict=0" in capsys.readouterr().out.splitlines()[-1]

    def test_proper_pair_contradicts(self, tmp_path):
        out = tmp_path / "records.txt"
        assert main(["ring=composite(gf(2),gf(4))", "cmd=verify", "--out", str(out)]) == 1
        lines = out.read_text().splitlines()
        contradicted = {line.split()[1] for line in lines if line.startswith("CLAIM") and "asserted=true tested=FAIL" in line}
        assert contradicted == {"P13", "T_DEDEKIND", "P14a", "P14c"}

    def test_config_file(self, tmp_path, capsys):
        path = tmp_path / "chain.cfg"
        path.write_text("ring=composite(Z,Q)\ncmd=chain f=[0,1] d=3 steps=2\n")
        assert main(["--config", str(path)]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == "CERTIFIED true"

    def test_errors_exit_two(self, capsys):
        assert main(["ring=composite(Z,Q)", "cmd=chain", "f=[1,1]", "d=2"]) == 2
        assert capsys.readouterr().err.startswith("error: accp_failure_chain:")

    def test_division_by_zero_in_element_exits_two(self, capsys):
        assert main(["ring=composite(gf(2),gf(4,2))", "cmd=factor", "elem=[0,1/0]"]) == 2
        err = capsys.readouterr().err
        assert err.startswith("error: parse_config: cannot evaluate coefficient in GF(4)")
        assert "(line 1, column" in err

    def test_localized_and_explicit_modulus_rings_run(self, capsys):
        assert main(["ring=composite(Z_loc[3],Q)", "cmd=chain", "f=[0,1]", "d=3", "steps=2"]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == "CERTIFIED true"
        assert main(["ring=composite(gf(2),gf(2,2,[1,1,1]))", "cmd=divisors", "elem=[0,0,1]"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "IRREDUCIBLE_DIVISORS 3"

    def test_missing_config_file_exits_two(self, tmp_path, capsys):
        assert main(["--config", str(tmp_path / "missing.cfg")]) == 2
        assert capsys.readouterr().err.startswith("error: cannot read the configuration")
