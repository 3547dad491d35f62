import json

import pytest

import concordia


def test_poly_arithmetic():
    s, t = concordia.parse("s", ["s", "t"]), concordia.parse("t", ["s", "t"])
    one = concordia.parse("1", ["s", "t"])
    assert str((one - s) * (one - t)) == "s*t-s-t+1"
    assert (s * t).involute() == concordia.parse("s^-1*t^-1", ["s", "t"])
    assert concordia.parse("s^-3*(1-s)", ["s"]).canonical() == concordia.parse(
        "s-1", ["s"]
    )


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        concordia.parse("2*v", ["u"])


def test_mazur_family():
    p3 = concordia.mazur_alexander(3)
    assert str(p3) == "3*s^2*t-3*s^2+3*s*t^2-5*s*t+3*s-3*t^2+3*t"
    pairing = concordia.mazur_pairing(3)
    assert pairing[0][0] == "3*s*t-3*s-3*t+3"


def test_divides_and_factor():
    u2m1 = concordia.parse("u^2-1", ["u"])
    um1 = concordia.parse("u-1", ["u"])
    assert str(concordia.divides(um1, u2m1)) == "u+1"
    assert concordia.divides(concordia.parse("u-2", ["u"]), u2m1) is None

    factors, candidates = concordia.factor_univariate(concordia.parse("2*u^4-5*u^2+2", ["u"]))
    assert factors == [("u^2-2", 1), ("2*u^2-1", 1)]
    assert candidates > 0


def test_alexander_from_ccomplex():
    doc = {
        "components": 1,
        "generators": 2,
        "linking": {"0": [[-1, 1], [0, -1]], "1": [[-1, 0], [1, -1]]},
    }
    out = concordia.alexander_from_ccomplex(doc)
    assert out["alexander"] == "t^2-t+1"


def test_parity_and_satellite():
    g3 = "-6*u^4+11*u^2-6"
    cls = {"factors": [{"poly": g3, "mult": 1}]}
    assert concordia.parity(g3, cls) == 1
    assert concordia.parity("-10*u^4+19*u^2-10", cls) == 0

    updated = concordia.satellite({"factors": []}, 3, "u^2")
    assert updated["specialized"] == g3
    assert updated["class"]["factors"] == [{"poly": "6*u^4-11*u^2+6", "mult": 1}]


def test_distinguish():
    cert = concordia.distinguish(3, 5)
    assert cert["distinguished"] is True
    assert cert["parity_table"]["rho0"] == {"on_I_n": 0, "on_I_m": 1}
    assert concordia.distinguish(3, 3)["distinguished"] is False


def test_admissible_primes():
    one = concordia.parse("1", ["u"])
    assert concordia.admissible_primes(one, 20) == [3, 5, 7, 11, 13, 17, 19]


def test_covers():
    assert concordia.cover_spherical(5, 1, 3) == {"0": 5, "3": 5}
    assert concordia.cover_spherical(2, 1, 4) == {"8": 1}
    assert concordia.cover_handlebody(4, 2) == {"0": 2, "2": 4}
    assert concordia.cover_handlebody(2, 5, two_torsion=True) == {"10": 1}


def test_torsion():
    out = concordia.torsion_of_complex({"ranks": [1, 1], "boundaries": [[["t"]]]})
    assert out == {"acyclic": True, "torsion": "t"}
    out = concordia.torsion_of_complex({"ranks": [1, 1], "boundaries": [[["0"]]]})
    assert out["acyclic"] is False


def test_cli_round_trip():
    code, output = concordia.run_cli(["mazur", "3"])
    assert code == 0
    doc = json.loads(output)
    assert doc["value_at_1_1"] == "1"
    code2, output2 = concordia.run_cli(["mazur", "3"])
    assert output == output2
