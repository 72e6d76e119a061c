# Copyright 2026 The minlen-thermo Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import minlen_thermo as mt


def test_pairing_counts():
    assert [mt.pairing_count(d) for d in (1, 2, 3)] == [1, 3, 15]


def test_kempf_jacobian_closed_form():
    beta, beta_prime, p2 = 0.01, 0.02, 3.0
    expected = (1 + beta * p2) ** 2 * (1 + (beta + beta_prime) * p2)
    assert mt.kempf_jacobian(beta, beta_prime, p2) == pytest.approx(expected, rel=1e-14)
    x, p = [0.3, -1.0, 2.0], [1.0, 1.0, 1.0]
    assert mt.jacobian_generic(beta, beta_prime, x, p) == pytest.approx(expected, rel=1e-12)


def test_undeformed_ideal_gas():
    point = mt.ideal_gas_thermo(1.0)
    assert point.Z1 == pytest.approx(math.pi ** 1.5, rel=1e-10)
    assert point.E_per_N == pytest.approx(1.5, rel=1e-10)
    assert point.C_per_N == pytest.approx(1.5, rel=1e-8)
    assert point.method == mt.Method.classical


def test_quantum_oscillator_matches_einstein():
    t = 2.0
    point = mt.quantum_oscillator_thermo(t)
    x = 1.0 / t
    einstein = 3 * x * x * math.exp(x) / math.expm1(x) ** 2
    assert point.C_per_N == pytest.approx(einstein, abs=1e-8)
    assert point.Z1 == pytest.approx((2 * math.sinh(x / 2)) ** -3, rel=1e-10)


def test_deformed_results():
    assert mt.energy_nl(0, 0, 0.01, 0.01) == pytest.approx(1.51507499813, rel=1e-11)
    z_limit, plateau = mt.high_t_ideal_gas(0.01, 0.01)
    assert z_limit == pytest.approx(1693.35, rel=1e-5)
    assert plateau == pytest.approx(241.42, rel=1e-5)
    hot = mt.oscillator_thermo(1e3, 0.01, 0.01)
    assert 1.5 < hot.C_per_N < 1.6


def test_pressure_and_power_law():
    assert mt.ideal_gas_pressure(3.0, 0.01, 0.01, volume=2.0, particles=4.0) == 6.0
    numeric = mt.ideal_gas_pressure(3.0, 0.01, 0.01, volume=2.0, particles=4.0, numeric=True)
    assert numeric == pytest.approx(6.0, rel=1e-10)
    assert mt.power_law_thermo(1e6, exponent=1.0, beta=0.01).C_per_N == pytest.approx(3.0, abs=1e-3)


def test_sweep_csv():
    text = mt.sweep_csv(points=3, methods=["classical", "nondeformed"])
    lines = text.splitlines()
    assert lines[0] == "T,Z1,E_per_N,C_per_N,method"
    assert len(lines) == 1 + 3 * 2
    assert text == mt.sweep_csv(points=3, methods=["classical", "nondeformed"])


def test_errors():
    with pytest.raises(mt.InvalidArgument):
        mt.ideal_gas_thermo(-1.0)
    with pytest.raises(mt.MinlenError):
        mt.energy_nl(2, 1)
    with pytest.raises(mt.InvalidArgument):
        mt.sweep_csv(methods=["bogus"])
    assert issubclass(mt.InvalidArgument, mt.MinlenError)
