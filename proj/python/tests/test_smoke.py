# Copyright 2026 The qamp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import math

import numpy as np
import pytest

import qamp


def random_matrix(rng, n):
    d = 2**n
    return rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))


def test_desk_case():
    pm = qamp.prepare(0.5 * np.eye(2), c=0.5)
    assert pm.n == 1
    assert pm.scale == pytest.approx(1.0)
    r = qamp.multiply(pm, pm)
    np.testing.assert_allclose(r["matrix_hat"], 0.25 * np.eye(2), atol=1e-12)
    assert r["b_hat"] == pytest.approx(0.5, abs=1e-12)
    assert r["g_exact"] == pytest.approx(math.sqrt(0.375), abs=1e-12)
    assert r["branch_probability"] == pytest.approx(3 / 32, abs=1e-12)
    assert r["total_qubits"] == 10


@pytest.mark.parametrize("n", [1, 2])
def test_products_match_numpy(n):
    rng = np.random.default_rng(n)
    a = random_matrix(rng, n)
    b = random_matrix(rng, n)
    pa = qamp.prepare(a, c=0.8)
    pb = qamp.prepare(b, c=1.3)
    r = qamp.multiply(pa, pb)
    np.testing.assert_allclose(r["matrix_recovered"], a @ b, atol=1e-9)
    r = qamp.multiply(pa, pb, dagger_a=True)
    np.testing.assert_allclose(r["matrix_recovered"], a.conj().T @ b, atol=1e-9)
    r = qamp.multiply(pa, pb, swap_order=True)
    np.testing.assert_allclose(r["matrix_recovered"], b @ a, atol=1e-9)
    r = qamp.multiply(pa, pb, swap_order=True, dagger_a=True, dagger_b=True, controlled=True)
    np.testing.assert_allclose(r["matrix_recovered"], (a @ b).conj().T, atol=1e-9)


def test_conjugate_and_oracles():
    rng = np.random.default_rng(7)
    a = random_matrix(rng, 2)
    pm = qamp.prepare(a)
    np.testing.assert_allclose(qamp.hermitian_conjugate(pm), pm.matrix.conj().T, atol=1e-12)
    np.testing.assert_allclose(qamp.dagger_oracle(a), a.conj().T)
    np.testing.assert_allclose(qamp.matmul_oracle(a, a), a @ a, atol=1e-12)


def test_padding():
    pm = qamp.prepare(np.array([[1.0, 2.0, 3.0]]))
    assert pm.n == 2
    assert pm.matrix.shape == (4, 4)


def test_estimate_g():
    pm = qamp.prepare(0.5 * np.eye(2), c=0.5)
    e = qamp.estimate_g(pm, pm, shots=100000, seed=1)
    assert e["s1_tilde_exact"] == pytest.approx(2 / 3, abs=1e-12)
    assert abs(e["g_hat"] - e["g_exact"]) <= 5 * e["stderr"]
    assert e == qamp.estimate_g(pm, pm, shots=100000, seed=1)


def test_resources_and_layout():
    for n in range(1, 7):
        assert qamp.resource_report(n)["qubits"] == 4 * n + 6
        assert qamp.resource_report(n, with_controls=True)["qubits"] == 4 * n + 9
    assert qamp.layout(1)["K1"] == (6, 1)
    assert qamp.layout(2, True)["Q3"] == (16, 1)


def test_errors():
    with pytest.raises(qamp.ParameterError):
        qamp.prepare(np.eye(2), c=0.0)
    with pytest.raises(qamp.DimensionError):
        qamp.multiply(qamp.prepare(np.eye(2)), qamp.prepare(np.eye(4)))
    with pytest.raises(qamp.QampError):
        qamp.resource_report(0)
    with pytest.raises(qamp.ValidationError):
        qamp.PreparedMatrix(np.full((2, 2), 0.5), 0.0, 1.0, 1.0)
    pm = qamp.PreparedMatrix(0.5 * np.eye(2), math.sqrt(0.5), 0.5, 0.5)
    assert pm.b == pytest.approx(math.sqrt(0.5))
