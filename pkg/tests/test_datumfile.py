from __future__ import annotations

import pytest

from pointed_hopf.cartan import DatumError, a2_datum, taft_datum
from pointed_hopf.datumfile import DatumSyntaxError, parse_datum

EXPECTED_DIMS = {
    "taft2.toml": 4,
    "taft3.toml": 9,
    "taft4.toml": 16,
    "a2_33.toml": 243,
    "a2_two_param.toml": 243,
    "group_z2.toml": 2,
    "a1xa1.toml": 81,
}


@pytest.mark.parametrize("fname, dim", sorted(EXPECTED_DIMS.items()))
def test_shipped_datums(datums_dir, fname, dim):
    assert parse_datum(datums_dir / fname).dimension == dim


def test_named_examples_match(datums_dir):
    for fname, ref in (("taft3.toml", taft_datum(3)), ("a2_33.toml", a2_datum())):
        d = parse_datum(datums_dir / fname)
        assert (d.group, d.g, d.chi, d.cartan) == (ref.group, ref.g, ref.chi, ref.cartan)


def test_explicit_matrix():
    text = 'group = [3, 3]\ng = [[1, 0], [0, 1]]\nchi = [[1, 2], [0, 1]]\ncartan = [[2, -1], [-1, 2]]\n'
    d = parse_datum("m.toml", text)
    assert d.name == "m" and d.dimension == 243


def test_two_param_table():
    d = parse_datum("tp", '[two_param]\ntype = "A1"\nN = 3\nr_exp = 1\ns_exp = 0\n')
    assert (d.g, d.chi) == (taft_datum(3).g, taft_datum(3).chi)


@pytest.mark.parametrize(
    "text, message, line",
    [
        ('group = [3]\ng = [[1]]\nchi = [[1]\ncartan = "A1"\n', "Unclosed array", 4),
        ('group = [3]\ng = [1]\nchi = [[1]]\ncartan = "A1"\n', "g must be a list of integer vectors", 2),
        ('group = [3]\ng = [[1]]\nchi = [[1]]\ncartan = "A1"\nfoo = 1\n', "unknown key 'foo'", 5),
        ('group = [3]\ng = [[1]]\nchi = [[1]]\ncartan = "Z9"\n', "unknown Cartan type", 4),
        ('[two_param]\ntype = "A1"\nN = 3\nr_exp = 1\n', "missing key 's_exp'", 1),
    ],
)
def test_syntax_errors_carry_location(text, message, line):
    with pytest.raises(DatumSyntaxError) as exc:
        parse_datum("t.toml", text)
    assert message in str(exc.value)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"t.toml:{line}:")


def test_missing_key():
    with pytest.raises(DatumSyntaxError, match="missing key 'cartan'"):
        parse_datum("t.toml", 'group = [3]\ng = [[1]]\nchi = [[1]]\n')


@pytest.mark.parametrize(
    "text, message",
    [
        ('group = [3]\ng = [[0]]\nchi = [[1]]\ncartan = "A1"\n', r"χ_i\(g_i\) ≠ 1 violated at i=1"),
        ('group = [3, 3]\ng = [[1, 0], [0, 1]]\nchi = [[1, 0], [0, 1]]\ncartan = "A2"\n', "Cartan condition"),
        ('group = [3, 3]\ng = [[1, 0], [0, 1]]\nchi = [[1, 0], [0, 1]]\ncartan = [[2, -1], [0, 2]]\n',
         "a_ij=0 ⇔ a_ji=0 violated at"),
        ('group = [3, 3]\ng = [[1, 0], [0, 1]]\nchi = [[1, 0], [0, 1]]\ncartan = "A1xA1"\nlinking = [[0, 1], [0, 0]]\n',
         "nonzero linking parameters λ"),
        ('group = [3]\ng = [[1]]\nchi = [[1]]\ncartan = "A1"\nrootparams = [2]\n', "nonzero root-vector parameters μ"),
    ],
)
def test_invalid_data_raise_datum_error(text, message):
    with pytest.raises(DatumError, match=message):
        parse_datum("bad.toml", text)
