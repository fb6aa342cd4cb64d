import random
from fractions import Fraction

import pytest

from g2orbits.cayley import (
    MULT_TABLE,
    ComplexModelElement,
    Octonion,
    from_complex_model,
    gamma,
    gamma1,
    gamma1_matrix,
    gamma_matrix,
    inner,
    is_automorphism_matrix,
    norm,
    to_complex_model,
)
from g2orbits.linalg import GaussianRational, Matrix

E = [Octonion.basis(i) for i in range(8)]


def random_octonion(rng):
    return Octonion([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)])


class TestProduct:
    def test_unit(self):
        rng = random.Random(1)
        for _ in range(20):
            x = random_octonion(rng)
            assert E[0] * x == x
            assert x * E[0] == x

    def test_e4_squared(self):
        assert E[4] * E[4] == -E[0]

    def test_quaternion_convention(self):
        assert E[1] * E[2] == E[3]
        assert E[2] * E[3] == E[1]
        assert E[3] * E[1] == E[2]
        for i in (1, 2, 3):
            assert E[i] * E[i] == -E[0]

    def test_doubling_names(self):
        assert E[1] * E[4] == E[5]
        assert E[2] * E[4] == E[6]
        assert E[3] * E[4] == E[7]

    def test_non_associativity_witness(self):
        assert (E[1] * E[2]) * E[4] == E[7]
        assert E[1] * (E[2] * E[4]) == -E[7]

    def test_alternativity_random(self):
        rng = random.Random(2)
        for _ in range(100):
            x, y = random_octonion(rng), random_octonion(rng)
            assert x * (x * y) == (x * x) * y
            assert (y * x) * x == y * (x * x)

    def test_composition_random(self):
        rng = random.Random(3)
        for _ in range(100):
            x, y = random_octonion(rng), random_octonion(rng)
            assert norm(x * y) == norm(x) * norm(y)

    def test_table_is_signed_permutation(self):
        for i in range(8):
            for j in range(8):
                k, s = MULT_TABLE[i][j]
                assert s in (1, -1)
                prod = E[i] * E[j]
                assert prod == (E[k] if s > 0 else -E[k])


class TestConjugationAndInner:
    def test_conj_basis(self):
        assert E[0].conj() == E[0]
        assert E[5].conj() == -E[5]

    def test_conj_linear(self):
        x = 3 * E[0] + 2 * E[6]
        assert x.conj() == 3 * E[0] - 2 * E[6]

    def test_anti_automorphism(self):
        rng = random.Random(4)
        for _ in range(100):
            x, y = random_octonion(rng), random_octonion(rng)
            assert (x * y).conj() == y.conj() * x.conj()

    def test_conj_via_inner(self):
        # conjugation is 2(x, e0) e0 - x
        rng = random.Random(5)
        for _ in range(20):
            x = random_octonion(rng)
            assert x.conj() == 2 * inner(x, E[0]) * E[0] - x

    def test_inner_examples(self):
        assert inner(E[2], E[2]) == 1
        assert inner(E[2], E[3]) == 0
        assert norm(E[0] + E[1]) == 2

    def test_inner_product_polarization(self):
        # 2(x,y) = e0-part of x*conj(y) + y*conj(x)
        rng = random.Random(6)
        for _ in range(50):
            x, y = random_octonion(rng), random_octonion(rng)
            z = x * y.conj() + y * x.conj()
            assert 2 * inner(x, y) == z.coords[0]


class TestGammaMaps:
    def test_gamma_on_basis(self):
        assert gamma(E[1]) == E[1]
        assert gamma(E[4]) == -E[4]
        for i in range(4):
            assert gamma(E[i]) == E[i]
            assert gamma(E[i + 4]) == -E[i + 4]

    def test_gamma1_on_basis(self):
        assert gamma1(E[1]) == -E[1]
        assert gamma1(E[2]) == E[2]
        assert gamma1(E[3]) == -E[3]
        for i in (0, 2, 4, 6):
            assert gamma1(E[i]) == E[i]
        for i in (1, 3, 5, 7):
            assert gamma1(E[i]) == -E[i]

    def test_involutions(self):
        rng = random.Random(7)
        for _ in range(50):
            x = random_octonion(rng)
            assert gamma(gamma(x)) == x
            assert gamma1(gamma1(x)) == x

    def test_automorphism_on_all_basis_pairs(self):
        for f in (gamma, gamma1):
            for i in range(8):
                for j in range(8):
                    assert f(E[i] * E[j]) == f(E[i]) * f(E[j])

    def test_matrices_are_automorphisms(self):
        assert is_automorphism_matrix(gamma_matrix())
        assert is_automorphism_matrix(gamma1_matrix())

    def test_non_automorphism_detected(self):
        assert not is_automorphism_matrix(Matrix.identity(8) * Fraction(2))
        bad = Matrix.from_rows(
            [[Fraction(1 if (i, j) in {(0, 1), (1, 0)} else (1 if i == j and i > 1 else 0))
              for j in range(8)] for i in range(8)]
        )
        assert not is_automorphism_matrix(bad)


class TestComplexModel:
    def test_basis_decomposition(self):
        u = to_complex_model(E[0])
        assert u.a == GaussianRational(1) and not any(u.m)
        u = to_complex_model(E[2])
        assert u.a == GaussianRational(0)
        assert u.m == (GaussianRational(1), GaussianRational(0), GaussianRational(0))

    def test_roundtrip_basis(self):
        for i in range(8):
            assert from_complex_model(to_complex_model(E[i])) == E[i]

    def test_roundtrip_random(self):
        rng = random.Random(8)
        for _ in range(50):
            x = random_octonion(rng)
            assert from_complex_model(to_complex_model(x)) == x

    def test_unit(self):
        one = to_complex_model(E[0])
        rng = random.Random(9)
        v = to_complex_model(random_octonion(rng))
        assert one * v == v

    def test_hermitian_term(self):
        # parallel unit vectors: scalar part is -<m, n> = -1
        m = (GaussianRational(1), GaussianRational(0), GaussianRational(0))
        u = ComplexModelElement(GaussianRational(0), m)
        p = u * u
        assert p.a == GaussianRational(-1)
        assert not any(p.m)

    def test_cross_orientation(self):
        # (1,0,0) x (0,1,0) slot: e2 * e4 = e6 forces the sign
        u = ComplexModelElement(0, (1, 0, 0))
        v = ComplexModelElement(0, (0, 1, 0))
        p = u * v
        assert p.a == GaussianRational(0)
        assert p.m == (GaussianRational(0), GaussianRational(0), GaussianRational(1))
        assert from_complex_model(p) == E[6]

    def test_model_agreement_all_pairs(self):
        for i in range(8):
            for j in range(8):
                via = from_complex_model(to_complex_model(E[i]) * to_complex_model(E[j]))
                assert via == E[i] * E[j], (i, j)

    def test_model_agreement_random(self):
        rng = random.Random(10)
        for _ in range(50):
            x, y = random_octonion(rng), random_octonion(rng)
            via = from_complex_model(to_complex_model(x) * to_complex_model(y))
            assert via == x * y


def test_octonion_validation():
    with pytest.raises(ValueError):
        Octonion([1, 2, 3])
