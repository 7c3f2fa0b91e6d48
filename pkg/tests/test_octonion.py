"""Octonion algebra: multiplication table, norms, Moufang/alternative laws."""

import numpy as np
import pytest

from octhls import octonion as oc
from octhls.octonion import ImOctonion, Octonion


def rand(n, seed=0):
    return np.random.default_rng(seed).standard_normal((n, 8))


def test_table_shape_and_unit():
    assert oc.MULT_TABLE.shape == (8, 8, 8)
    e0 = np.eye(8)[0]
    x = rand(5)[0]
    assert np.allclose(oc.mul(e0, x), x)
    assert np.allclose(oc.mul(x, e0), x)


def test_imaginary_units_square_to_minus_one():
    for k in range(1, 8):
        ek = np.eye(8)[k]
        sq = oc.mul(ek, ek)
        assert np.allclose(sq, -np.eye(8)[0])


def test_table_antisymmetry_of_imaginary_products():
    for a in range(1, 8):
        for b in range(1, 8):
            if a == b:
                continue
            assert np.allclose(
                oc.mul(np.eye(8)[a], np.eye(8)[b]), -oc.mul(np.eye(8)[b], np.eye(8)[a])
            )


def test_composition_law():
    x, y = rand(300, 1), rand(300, 2)
    lhs = np.linalg.norm(oc.mul(x, y), axis=-1)
    rhs = np.linalg.norm(x, axis=-1) * np.linalg.norm(y, axis=-1)
    assert np.max(np.abs(lhs - rhs)) < 1e-12 * np.max(rhs)


def test_conjugation_antiautomorphism():
    x, y = rand(200, 3), rand(200, 4)
    assert np.allclose(oc.conj(oc.mul(x, y)), oc.mul(oc.conj(y), oc.conj(x)), atol=1e-12)


def test_norm_via_conjugate():
    x = rand(100, 5)
    prod = oc.mul(x, oc.conj(x))
    assert np.allclose(prod[..., 1:], 0.0, atol=1e-12)
    assert np.allclose(prod[..., 0], np.linalg.norm(x, axis=-1) ** 2)


def test_inverse():
    x = rand(100, 6)
    one = np.zeros(8)
    one[0] = 1.0
    assert np.allclose(oc.mul(x, oc.inv(x)), one, atol=1e-12)
    assert np.allclose(oc.mul(oc.inv(x), x), one, atol=1e-12)


def test_alternative_laws():
    x, y = rand(300, 7), rand(300, 8)
    assert np.allclose(oc.mul(oc.mul(x, x), y), oc.mul(x, oc.mul(x, y)), atol=1e-10)
    assert np.allclose(oc.mul(oc.mul(y, x), x), oc.mul(y, oc.mul(x, x)), atol=1e-10)


def test_moufang_identity():
    # a (x y) a = (a x)(y a)
    a, x, y = rand(200, 9), rand(200, 10), rand(200, 11)
    lhs = oc.mul(oc.mul(a, oc.mul(x, y)), a)
    rhs = oc.mul(oc.mul(a, x), oc.mul(y, a))
    assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_nonassociative_generic():
    rng = np.random.default_rng(12)
    x, y, z = rng.standard_normal((3, 8))
    assert np.max(np.abs(oc.mul(oc.mul(x, y), z) - oc.mul(x, oc.mul(y, z)))) > 1e-3


def test_quaternion_subalgebra_associative():
    rng = np.random.default_rng(13)
    x, y, z = rng.standard_normal((3, 8))
    x[4:] = y[4:] = z[4:] = 0.0
    assert np.allclose(oc.mul(oc.mul(x, y), z), oc.mul(x, oc.mul(y, z)), atol=1e-13)


def test_octonion_class_roundtrip():
    rng = np.random.default_rng(14)
    x = Octonion(rng.standard_normal(8))
    y = Octonion(rng.standard_normal(8))
    assert np.allclose((x * y).c, oc.mul(x.c, y.c))
    assert abs((x * x.inv()).re() - 1.0) < 1e-13
    assert abs(x.norm() - np.linalg.norm(x.c)) < 1e-14
    assert np.allclose((x + (-x)).c, 0.0)
    assert np.allclose(x.conj().c, oc.conj(x.c))
    assert abs(x.re() - x.c[0]) == 0.0


def test_im_octonion():
    t = ImOctonion(np.arange(1.0, 8.0))
    o = t.as_octonion()
    assert o.c[0] == 0.0
    assert np.allclose(o.c[1:], t.v)
    assert np.allclose(oc.from_im(t.v)[1:], t.v)
    assert np.allclose((2.0 * Octonion(oc.from_im(t.v))).im().v, 2.0 * t.v)


def test_basis_table_text():
    text = oc.basis_table_text()
    assert "e1" in text and len(text.splitlines()) >= 8
