import math

import numpy as np
import pytest

import jordanlab as jl


def pauli():
    alg = jl.family("herm_c:2")
    one = alg.element([1, 1, 0, 0])
    sx = alg.element([0, 0, 1, 0])
    sz = alg.element([1, -1, 0, 0])
    p0 = alg.element([1, 0, 0, 0])
    return alg, one, sx, sz, p0


def test_family_dimensions():
    dims = {"sym_r:3": 6, "herm_c:3": 9, "herm_q:2": 6, "spin:5": 5, "albert": 27}
    for spec, dim in dims.items():
        alg = jl.family(spec)
        assert alg.dim == dim
        assert len(alg.basis_labels) == dim


def test_bad_spec_raises():
    with pytest.raises(jl.JordanError):
        jl.family("octonion:3")


def test_pauli_products():
    alg, one, sx, sz, p0 = pauli()
    assert jl.jordan_mul(sx, sz).norm() < 1e-15
    assert np.allclose(jl.jordan_mul(sx, sx).coords, one.coords)
    assert np.allclose(jl.q_operator(sx) @ sz.coords, (-1.0 * sz).coords)


def test_spectrum_and_sqrt():
    r = jl.family("sym_r:2")
    values, idempotents = jl.spectrum(r.element([2, 2, 1]))
    assert values == pytest.approx([1.0, 3.0])
    assert len(idempotents) == 2
    s = jl.sqrt(r.element([4, 9, 0]))
    assert np.allclose(s.coords, [2, 3, 0])
    f = jl.apply_function(r.element([1, 4, 0]), math.sqrt)
    assert np.allclose(f.coords, [1, 2, 0])
    assert jl.order_unit_norm(r.element([1, -3, 0])) == pytest.approx(3.0)


def test_theorem_report_and_panel():
    alg, one, sx, sz, p0 = pauli()
    report = jl.theorem_report(sx, sz)
    assert report["verdict"] == "Consistent"
    assert not report["op_commute"]
    commuting = jl.theorem_report(p0, sz)
    assert commuting["op_commute"] and commuting["assoc"] and commuting["q_identity"]
    panel = jl.q_panel(sx + 2.0 * one, sz)
    assert not (panel["qq_commute"] or panel["q_cross_identity"] or panel["full_commute"])


def test_commutant_of_sigma_z():
    alg, one, sx, sz, p0 = pauli()
    assert len(jl.commutant([sz])) == 2


def test_sequential_product():
    alg, one, sx, sz, p0 = pauli()
    plus = alg.element([0.5, 0.5, 0.5, 0])
    assert np.allclose(jl.seq_product(plus, p0).coords, 0.5 * plus.coords)
    with pytest.raises(jl.JordanError):
        jl.seq_product(sz, p0)


def test_counterexamples():
    for name in jl.counterexample_names():
        assert jl.counterexample_matches(name)


def test_suite_is_deterministic():
    a = jl.suite_records("spin:3", 10, 5)
    b = jl.suite_records("spin:3", 10, 5)
    assert a == b
    assert a.strip().endswith("status=ok")


def test_cli_exit_codes():
    code, out, _ = jl.cli(["describe", "spin:4"])
    assert code == 0 and "dim       4" in out
    assert jl.cli(["describe", "nope"])[0] == 2
