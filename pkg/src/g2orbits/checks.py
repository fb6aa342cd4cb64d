"""End-to-end verification suite.

Each check function performs one acceptance-level verification and returns
a one-line summary; it raises AssertionError (with a descriptive message)
on failure.  The CLI `check` subcommand and the acceptance tests both run
these, so there is a single source of truth for what "correct" means.

All arithmetic is exact except check 11, which drives the floating-point
exponential bridge and uses the 1e-9 residual bound.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import numpy as np

from .cayley import (
    MULT_TABLE,
    Octonion,
    from_complex_model,
    gamma,
    gamma1,
    gamma1_matrix,
    gamma_matrix,
    inner,
    to_complex_model,
)
from .derivations import (
    adjoint_matrix,
    bracket,
    derivation_basis,
    exp_derivation_numeric,
    fixed_subalgebra,
    killing_form,
    leibniz_system,
    stabilizer_subalgebra,
    subalgebra_structure,
)
from .linalg import Matrix, det, kernel_basis, rref
from .orbits import OrbitType, classify, scan
from .roots import CartanElement, cartan_element, root_system, weyl_reflect

_CENSUS6 = None


def _census6():
    global _CENSUS6
    if _CENSUS6 is None:
        _CENSUS6 = scan(6)
    return _CENSUS6


def _random_fraction(rng, num=9, den=9) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _random_octonion(rng) -> Octonion:
    return Octonion([_random_fraction(rng) for _ in range(8)])


def _random_cartan(rng) -> CartanElement:
    t1 = _random_fraction(rng)
    t2 = _random_fraction(rng)
    return CartanElement.of(t1, t2, -t1 - t2)


def check_01_derivation_dimension() -> str:
    """Nullity of the 512x64 Leibniz system is exactly 14, in under 5s."""
    system = leibniz_system()
    t0 = time.perf_counter()
    kern = kernel_basis(system)
    elapsed = time.perf_counter() - t0
    assert len(kern) == 14, f"nullity {len(kern)} != 14"
    red, pivots = rref(system)
    assert len(pivots) == 50, f"rank {len(pivots)} != 50"
    assert elapsed < 5.0, f"kernel computation took {elapsed:.2f}s (budget 5s)"
    return f"nullity 14, rank 50, kernel in {elapsed:.2f}s"


def check_02_four_orbit_types() -> str:
    """scan --radius 6: dims only in {2,4,14}, FULL exactly once, all of
    TORUS / DIM4_SHORT / DIM4_LONG nonempty."""
    census = _census6()
    dims = {rep.stabilizer_dim for rep in census.reports}
    assert dims <= {2, 4, 14}, f"unexpected stabilizer dims {dims - {2, 4, 14}}"
    counts = census.counts
    assert counts["FULL"] == 1, f"FULL count {counts['FULL']} != 1"
    assert counts["DIM4_SHORT"] > 0, "no DIM4_SHORT points"
    assert counts["DIM4_LONG"] > 0, "no DIM4_LONG points"
    assert counts["TORUS"] > 0, "no TORUS points"
    return f"radius 6: {counts}"


def check_03_named_triples() -> str:
    """The four named example triples classify exactly as stated."""
    rep = classify(CartanElement.of(0, 0, 0))
    assert rep.stabilizer_dim == 14, rep
    rep = classify(CartanElement.of(1, 2, -3))
    assert rep.stabilizer_dim == 2, rep
    rep = classify(CartanElement.of(1, 0, -1))
    assert rep.stabilizer_dim == 4, rep
    assert {r.length_class for r in rep.vanishing} == {"short"}, rep
    rep = classify(CartanElement.of(1, 1, -2))
    assert rep.stabilizer_dim == 4, rep
    assert {r.length_class for r in rep.vanishing} == {"long"}, rep
    return "(0,0,0)->14, (1,2,-3)->2, (1,0,-1)->4 short, (1,1,-2)->4 long"


def check_04_root_system() -> str:
    """12 roots, 6 short + 6 long, length ratio exactly 3, Weyl reflections
    permute the root set preserving length."""
    roots = root_system()
    assert len(roots) == 12, f"{len(roots)} roots"
    short = [r for r in roots if r.length_class == "short"]
    long_ = [r for r in roots if r.length_class == "long"]
    assert len(short) == 6 and len(long_) == 6, "length classes not 6+6"
    ratio = long_[0].killing_sq_length / short[0].killing_sq_length
    assert ratio == 3, f"length ratio {ratio} != 3"
    from .roots import TAU_H1, TAU_H2, canonical_root_coeffs

    by_coeffs = {r.coeffs: r for r in roots}
    for r in roots:
        for rp in roots:
            # image functional of rp under the reflection in r
            v1 = rp.value(weyl_reflect(r, CartanElement(TAU_H1)))
            v2 = rp.value(weyl_reflect(r, CartanElement(TAU_H2)))
            image = canonical_root_coeffs((v1, Fraction(0), -v2))
            assert image in by_coeffs, f"reflection in {r.coeffs} maps {rp.coeffs} outside"
            assert by_coeffs[image].killing_sq_length == rp.killing_sq_length, (
                f"reflection in {r.coeffs} changed the length of {rp.coeffs}"
            )
    return "12 roots (6 short, 6 long), ratio 3, reflections permute preserving length"


def check_05_stabilizer_fingerprints() -> str:
    """Every DIM4 centralizer in the radius-6 census fingerprints as
    {derived 3, center 1}; every TORUS one is abelian of dim 2."""
    census = _census6()
    n4 = n2 = 0
    for rep in census.reports:
        s = rep.structure
        if rep.stabilizer_dim == 4:
            assert (s.dim, s.derived_dim, s.center_dim) == (4, 3, 1), (rep.tau, s)
            n4 += 1
        elif rep.stabilizer_dim == 2:
            assert s.is_abelian and s.dim == 2 and s.center_dim == 2, (rep.tau, s)
            n2 += 1
    # bracket closure is enforced inside subalgebra_structure (it raises)
    return f"{n4} DIM4 fingerprints (4,3,1), {n2} TORUS fingerprints abelian dim 2"


def check_06_involution_shadows() -> str:
    """Fixed subalgebra of gamma: dim 6, derived 6, center 0; of gamma1:
    asserted per the stated contract as dim 8, derived 8, center 0.

    The gamma1 half is expected to fail: gamma and gamma1 are conjugate
    involutions, so both fixed subalgebras are isomorphic to
    su(2)+su(2) of dimension 6.  The 8-dimensional su(3) lives in the
    algebra as the stabilizer of e1, which check 6b covers.
    """
    b = derivation_basis()
    fg = fixed_subalgebra(gamma_matrix(), b)
    s = subalgebra_structure(fg, b)
    assert (s.dim, s.derived_dim, s.center_dim) == (6, 6, 0), f"gamma fixed: {s}"
    fg1 = fixed_subalgebra(gamma1_matrix(), b)
    s1 = subalgebra_structure(fg1, b)
    assert (s1.dim, s1.derived_dim, s1.center_dim) == (8, 8, 0), (
        f"gamma1 fixed subalgebra is {(s1.dim, s1.derived_dim, s1.center_dim)}, "
        "not (8, 8, 0): gamma1 is an involution conjugate to gamma, so its "
        "fixed subalgebra is 6-dimensional; the 8-dimensional su(3) is the "
        "stabilizer of e1 (see notes/decisions.md)"
    )
    return "gamma fixed (6,6,0); gamma1 fixed (8,8,0)"


def check_06b_su3_stabilizer_shadow() -> str:
    """The stabilizer of e1 is the 8-dimensional su(3): dim 8, derived 8,
    center 0 (the subgroup shadow that is actually 8-dimensional)."""
    b = derivation_basis()
    sub = stabilizer_subalgebra(Octonion.basis(1), b)
    s = subalgebra_structure(sub, b)
    assert (s.dim, s.derived_dim, s.center_dim) == (8, 8, 0), f"e1 stabilizer: {s}"
    return "stabilizer of e1 fingerprints (8,8,0)"


def check_07_cayley_laws() -> str:
    """Alternativity, composition and conjugation anti-automorphism on 500
    random rational octonions; gamma/gamma1 are automorphisms on all 64
    basis pairs and involutions."""
    rng = random.Random(20240801)
    for _ in range(500):
        x = _random_octonion(rng)
        y = _random_octonion(rng)
        assert x * (x * y) == (x * x) * y, "left alternativity fails"
        assert (y * x) * x == y * (x * x), "right alternativity fails"
        assert inner(x * y, x * y) == inner(x, x) * inner(y, y), "composition fails"
        assert (x * y).conj() == y.conj() * x.conj(), "anti-automorphism fails"
        assert gamma(gamma(x)) == x and gamma1(gamma1(x)) == x, "involution fails"
    basis = [Octonion.basis(i) for i in range(8)]
    for f in (gamma, gamma1):
        for i in range(8):
            for j in range(8):
                assert f(basis[i] * basis[j]) == f(basis[i]) * f(basis[j]), (
                    f"{f.__name__} not multiplicative on ({i},{j})"
                )
    return "500 random octonions: alternative, composition, anti-automorphism; gamma, gamma1 automorphisms"


def check_08_model_agreement() -> str:
    """The complex-vector product matches the doubling product on all 64
    basis pairs under the documented identification."""
    basis = [Octonion.basis(i) for i in range(8)]
    for i in range(8):
        for j in range(8):
            via = from_complex_model(to_complex_model(basis[i]) * to_complex_model(basis[j]))
            assert via == basis[i] * basis[j], f"models disagree on ({i},{j})"
    return "both products agree on all 64 basis pairs"


def check_09_lie_algebra_integrity() -> str:
    """Structure constants satisfy Jacobi exactly; Killing form negative
    definite (leading minors); ad-invariance on 100 random triples."""
    b = derivation_basis()
    c = b.structure_constants
    n = b.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(n):
                    total = Fraction(0)
                    for m in range(n):
                        if c[j][k][m]:
                            total += c[j][k][m] * c[i][m][l]
                        if c[k][i][m]:
                            total += c[k][i][m] * c[j][m][l]
                        if c[i][j][m]:
                            total += c[i][j][m] * c[k][m][l]
                    assert total == 0, f"Jacobi fails at ({i},{j},{k},{l})"
    gram = b.killing_gram()
    neg = -gram
    for k in range(1, n + 1):
        minor = Matrix(k, k, [neg.entry(i, j) for i in range(k) for j in range(k)])
        assert det(minor) > 0, f"leading minor {k} of -B not positive"
    rng = random.Random(909)
    for _ in range(100):
        x, y, z = (
            b.from_coordinates([Fraction(rng.randint(-3, 3)) for _ in range(n)])
            for _ in range(3)
        )
        lhs = killing_form(bracket(z, x), y, b) + killing_form(x, bracket(z, y), b)
        assert lhs == 0, "Killing form not ad-invariant"
    return "Jacobi exact, -B positive definite (14 minors), ad-invariance on 100 triples"


def check_10_weyl_scaling_invariance() -> str:
    """Orbit type is stable under all 12 Weyl reflections for 50 random
    Cartan elements, and the whole report (minus tau) under rescaling."""
    rng = random.Random(4242)
    roots = root_system()
    for _ in range(50):
        tau = _random_cartan(rng)
        rep = classify(tau)
        for r in roots:
            rep2 = classify(weyl_reflect(r, tau))
            assert rep2.orbit_type == rep.orbit_type, (tau.tau, r.coeffs)
        c = Fraction(0)
        while c == 0:
            c = _random_fraction(rng)
        rep3 = classify(tau.scaled(c))
        assert rep3.orbit_type == rep.orbit_type, (tau.tau, c)
        assert rep3.stabilizer_dim == rep.stabilizer_dim
        assert rep3.structure == rep.structure
        assert rep3.vanishing == rep.vanishing
    return "50 random tau: 12 reflections + rescaling leave the classification unchanged"


def check_11_numeric_bridge() -> str:
    """exp(tD) is numerically orthogonal and an algebra automorphism to
    1e-9 for 20 random derivations and times."""
    b = derivation_basis()
    rng = random.Random(1618)
    worst_orth = worst_auto = 0.0
    mult = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            k, s = MULT_TABLE[i][j]
            mult[i][j][k] = s

    def omul(u, v):
        return np.einsum("i,j,ijk->k", u, v, mult)

    for _ in range(20):
        d = b.from_coordinates([Fraction(rng.randint(-2, 2)) for _ in range(b.dim)])
        t = rng.uniform(-2.0, 2.0)
        a = exp_derivation_numeric(d, t)
        orth = float(np.abs(a.T @ a - np.eye(8)).max())
        x = np.array([rng.uniform(-1, 1) for _ in range(8)])
        y = np.array([rng.uniform(-1, 1) for _ in range(8)])
        x /= np.linalg.norm(x)
        y /= np.linalg.norm(y)
        auto = float(np.abs(a @ omul(x, y) - omul(a @ x, a @ y)).max())
        worst_orth = max(worst_orth, orth)
        worst_auto = max(worst_auto, auto)
        assert orth < 1e-9, f"orthogonality residual {orth:.2e}"
        assert auto < 1e-9, f"automorphism residual {auto:.2e}"
    return f"20 samples: orthogonality <= {worst_orth:.1e}, automorphism <= {worst_auto:.1e}"


ALL_CHECKS = (
    ("1 derivation dimension", check_01_derivation_dimension),
    ("2 four orbit types", check_02_four_orbit_types),
    ("3 named triples", check_03_named_triples),
    ("4 root system", check_04_root_system),
    ("5 stabilizer fingerprints", check_05_stabilizer_fingerprints),
    ("6 involution shadows", check_06_involution_shadows),
    ("6b su(3) stabilizer shadow", check_06b_su3_stabilizer_shadow),
    ("7 cayley laws", check_07_cayley_laws),
    ("8 model agreement", check_08_model_agreement),
    ("9 lie algebra integrity", check_09_lie_algebra_integrity),
    ("10 weyl and scaling invariance", check_10_weyl_scaling_invariance),
    ("11 numeric bridge", check_11_numeric_bridge),
)


def run_all(out=print) -> bool:
    """Run every check, print one PASS/FAIL line each, return overall."""
    ok = True
    for name, fn in ALL_CHECKS:
        try:
            detail = fn()
        except AssertionError as exc:
            out(f"FAIL {name}: {exc}")
            ok = False
        else:
            out(f"PASS {name}: {detail}")
    return ok
