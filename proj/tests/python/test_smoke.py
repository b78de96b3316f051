import pytest

import quintic


def test_classify_forms():
    assert quintic.classify(301)["form"] == "form1"
    assert quintic.classify(35)["form"] == "form2"
    assert quintic.classify(30)["form"] == "form3"
    assert quintic.classify(77)["form"] == "unsupported"


def test_not_fifth_power_free():
    with pytest.raises(quintic.QuinticError) as exc:
        quintic.classify(96)
    assert exc.value.kind == "NotFifthPowerFree"


def test_rank_and_predict():
    r = quintic.rank(30)
    assert (r["ambiguous"]["d"], r["ambiguous"]["q_star"], r["ambiguous"]["t"]) == (3, 1, 1)
    p = quintic.predict(301)
    assert p["prediction_theorem"]["h_k5"] == 5
    assert p["prediction_theorem"]["h_gamma5"] == 1


def test_audit_flags_alpha11():
    a = quintic.audit(301)
    assert a["matrix"]["entries"][0]["engine"] == 0
    assert any(f["claim"] == "alpha_11 != 0" for f in a["flags"])


def test_cli_errors_raise():
    with pytest.raises(quintic.CliError) as exc:
        quintic.rank(77)
    assert exc.value.code == 3
    assert exc.value.kind == "UnsupportedForm"


def test_symbols():
    assert quintic.power_residue_symbol(2, 11, 0) in range(5)
    assert quintic.power_residue_symbol(12345, 13) == 0
    assert quintic.norm_residue_symbol(7, 43, 7) == 0
    assert quintic.norm_residue_symbol(15, [1, -1, 0, 0], 5) == 3
    assert quintic.symbol(15, [1, -1, 0, 0], "5")["exponent"] == 3


def test_lambda_and_mod25():
    assert not quintic.lambda_ramified(301)
    assert quintic.lambda_ramified(30)
    assert quintic.signed_mod25(43) == -7


def test_tables_and_primes():
    t = quintic.table(2)
    assert len(t["table"]["rows"]) == 16
    assert "607,7,3035,5,1," in quintic.table(2, "csv")
    assert quintic.primes("pm7mod25", 3) == [7, 43, 107]
