from fractions import Fraction

import pytest
from hypothesis import given

from urkit.biglog import BigLogNumber
from urkit.cosmic import (
    EXACT,
    OOM,
    CosmologyParams,
    bekenstein_area_entropy,
    bekenstein_mass_entropy,
    discrepancy_report,
    hilbert_dimension_label,
    holographic_particle_bits,
    load_params,
    nucleon_count,
    headline_exponents,
    parse_params,
    particle_entropy_delta,
    total_urs,
    ur_count_particle,
)
from urkit.errors import NegativeArea, NegativeMass, NonPositiveInput, ParameterError

from strategies import positive_fraction

B = BigLogNumber
P = CosmologyParams()


def test_defaults():
    assert P.R == B.power_of_ten(60)
    assert P.lambda_electron == B(1836, 20)
    assert P.m_nucleon == B.power_of_ten(-20)
    assert P.m_electron * 1836 == P.m_nucleon


def test_headline_numbers():
    assert ur_count_particle(P.R, P.lambda_nucleon) == B.power_of_ten(40)
    assert total_urs(P.R, P.lambda_nucleon) == B.power_of_ten(120)
    assert nucleon_count(P) == B.power_of_ten(80)
    assert hilbert_dimension_label(total_urs(P.R, P.lambda_nucleon)) == "2^(1e120)"


def test_electron_urs():
    exact = ur_count_particle(P.R, P.lambda_electron)
    assert abs(float(exact) / 5.4466e36 - 1) < 1e-4
    assert exact.order_of_magnitude() == 37
    assert ur_count_particle(P.R, P.lambda_electron, OOM) == B.power_of_ten(37)


def test_trivial_cases():
    assert ur_count_particle(5, 5) == B(1)
    assert total_urs(7, 7) == B(1)
    assert bekenstein_area_entropy(4) == B(1)
    assert bekenstein_mass_entropy(0) == B(0)
    assert holographic_particle_bits(3, 3) == B(1)
    assert particle_entropy_delta(10, 0).exact == B(0)


def test_doubled_radius():
    p = CosmologyParams(R=B(2, 60))
    assert nucleon_count(p) == B(4, 80)


def test_mass_entropy():
    s = bekenstein_mass_entropy(1)
    assert s == B(4, 0, 1)
    assert abs(float(s) - 12.57) < 0.01
    assert bekenstein_mass_entropy(P.M_u, OOM) == B.power_of_ten(120)
    assert bekenstein_mass_entropy(P.M_u).order_of_magnitude() == 121


def test_errors():
    with pytest.raises(NonPositiveInput):
        ur_count_particle(0, 1)
    with pytest.raises(NonPositiveInput):
        total_urs(1, -1)
    with pytest.raises(NegativeArea):
        bekenstein_area_entropy(-1)
    with pytest.raises(NegativeMass):
        bekenstein_mass_entropy(-2)
    with pytest.raises(NegativeMass):
        particle_entropy_delta(1, -1)
    with pytest.raises(ValueError):
        ur_count_particle(1, 1, mode="fuzzy")


@given(positive_fraction, positive_fraction)
def test_linearisation_bound(big, small):
    d = particle_entropy_delta(big, small, EXACT)
    assert d.relative_deviation == small / (2 * big + small)
    assert d.relative_deviation <= small / (2 * big)
    assert d.exact == d.linearized + B(4 * small * small, 0, 1)


def test_entropy_deltas():
    assert particle_entropy_delta(P.M_u, P.m_nucleon, OOM).linearized == B.power_of_ten(40)
    assert particle_entropy_delta(P.M_u, P.m_electron, OOM).linearized == B.power_of_ten(37)
    assert particle_entropy_delta(P.M_u, P.m_nucleon).linearized == B(8, 40, 1)


def test_headline_exponents():
    e = headline_exponents()
    assert (e["nucleon_urs"], e["total_urs"], e["nucleon_count"], e["cutoff_over_R"]) == (40, 120, 80, -60)
    assert (e["universe_entropy"], e["holographic_nucleon"], e["holographic_electron"], e["ur_electron"]) == (120, 40, 46, 37)


def test_exact_electron_rounds_differently():
    # without the power-of-ten rounding of inputs the electron lands one order higher
    assert holographic_particle_bits(P.lambda_electron, P.l_o, EXACT).order_of_magnitude() == 47


def test_discrepancy_report_defaults():
    rows = {r.name: r for r in discrepancy_report()}
    assert rows["universe"].agree and rows["nucleon"].agree
    assert not rows["electron"].agree
    assert (rows["electron"].ur_exponent, rows["electron"].holographic_exponent, rows["electron"].gap) == (37, 46, 9)


def test_degenerate_electron_equals_nucleon():
    p = CosmologyParams(lambda_electron=P.lambda_nucleon)
    rows = {r.name: r for r in discrepancy_report(p)}
    assert rows["electron"].ur_bits == rows["nucleon"].ur_bits
    assert rows["electron"].holographic_bits == rows["nucleon"].holographic_bits


def test_custom_particle():
    p = CosmologyParams(lambda_electron=B.power_of_ten(10))
    row = {r.name: r for r in discrepancy_report(p)}["electron"]
    assert (row.ur_exponent, row.holographic_exponent) == (50, 20)


def test_parse_params(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("# comment\nR = 1e61\nlambda_electron = 1/2 # inline\n")
    p = load_params(f)
    assert p.R == B.power_of_ten(61)
    assert p.lambda_electron == B(Fraction(1, 2))
    assert p.m_electron == B(2)


@pytest.mark.parametrize(
    "text",
    ["R 1e60", "speed = 3", "R = abc", "R = 0", "R = -5", "R = 1\nR = 2"],
)
def test_parse_params_errors(text):
    with pytest.raises(ParameterError):
        parse_params(text)


def test_missing_file(tmp_path):
    with pytest.raises(ParameterError):
        load_params(tmp_path / "nope.txt")
