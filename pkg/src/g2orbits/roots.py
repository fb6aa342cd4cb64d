"""A fixed Cartan subalgebra of the derivation algebra and its root system.

The Cartan subalgebra is the rank-2 space of derivations that act on the
complex-model vector part as i*diag(t1, t2, t3) with t1+t2+t3 = 0 (and kill
the scalar part).  Roots are extracted as exact eigenvalue kernels of the
adjoint action over the Gaussian rationals; no floating point is involved.
Squared root lengths are measured in the positive-definite form -B (B is
the Killing form, negative definite here), so "short" is the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .derivations import (
    Derivation,
    G2AlgebraBasis,
    adjoint_matrix,
    derivation_basis,
    killing_form,
)
from .errors import InternalInvariantError, SumNonzeroError
from .linalg import GaussianRational, Matrix, kernel_basis, solve

#: tau coordinates of the two Cartan generators
TAU_H1 = (Fraction(1), Fraction(-1), Fraction(0))
TAU_H2 = (Fraction(0), Fraction(1), Fraction(-1))

#: designated generic element: all 12 root values are distinct there
TAU_GENERIC = (Fraction(1), Fraction(-4), Fraction(3))


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class CartanElement:
    """A traceless rational triple (t1, t2, t3), t1+t2+t3 = 0."""

    __slots__ = ("tau",)

    def __init__(self, tau):
        tau = tuple(_frac(x) for x in tau)
        if len(tau) != 3:
            raise ValueError("a Cartan element needs 3 components")
        if sum(tau) != 0:
            raise SumNonzeroError(f"components must sum to zero, got {tau}")
        self.tau = tau

    @classmethod
    def of(cls, t1, t2, t3) -> "CartanElement":
        return cls((t1, t2, t3))

    def is_zero(self) -> bool:
        return not any(self.tau)

    def scaled(self, c) -> "CartanElement":
        c = _frac(c)
        return CartanElement(tuple(c * t for t in self.tau))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CartanElement):
            return NotImplemented
        return self.tau == other.tau

    def __hash__(self):
        return hash(self.tau)

    def __iter__(self):
        return iter(self.tau)

    def __repr__(self) -> str:
        return "CartanElement(%s, %s, %s)" % self.tau


def _coerce_cartan(tau) -> CartanElement:
    return tau if isinstance(tau, CartanElement) else CartanElement(tau)


def _rotation_matrix(tau) -> Matrix:
    """8x8 matrix of the action a -> 0, m -> i*diag(t1,t2,t3)*m.

    The three complex coordinate planes are (e2,e3), (e4,e5), (e6,e7); the
    third plane carries the conjugated identification (m3 = x6 - x7*i), so
    its rotation block has the opposite sign.
    """
    t1, t2, t3 = tau
    zero = Fraction(0)
    rows = [[zero] * 8 for _ in range(8)]
    rows[2][3] = -t1
    rows[3][2] = t1
    rows[4][5] = -t2
    rows[5][4] = t2
    rows[6][7] = t3
    rows[7][6] = -t3
    return Matrix.from_rows(rows)


@lru_cache(maxsize=1)
def cartan_basis():
    """The two commuting Cartan generators H1 (tau=(1,-1,0)) and H2
    (tau=(0,1,-1)) as verified derivations."""
    h1 = Derivation(_rotation_matrix(TAU_H1))
    h2 = Derivation(_rotation_matrix(TAU_H2))
    for h in (h1, h2):
        if not h.satisfies_leibniz():
            raise InternalInvariantError(
                "Cartan generator fails the Leibniz check; "
                "sign conventions are out of sync with the product table"
            )
    return h1, h2


def cartan_element(tau) -> Derivation:
    """The derivation realizing a traceless triple (block rotation rates)."""
    tau = _coerce_cartan(tau)
    return Derivation(_rotation_matrix(tau.tau))


@dataclass(frozen=True)
class Root:
    """A root of the Cartan action: the functional sum_i a_i t_i on the
    traceless plane, with canonical integer coefficients (minimum entry 0)."""

    coeffs: tuple
    killing_sq_length: Fraction
    length_class: str  # "short" or "long"

    def value(self, tau) -> Fraction:
        t = tau.tau if isinstance(tau, CartanElement) else tau
        return self.coeffs[0] * t[0] + self.coeffs[1] * t[1] + self.coeffs[2] * t[2]


def canonical_root_coeffs(a) -> tuple:
    """Reduce (a1,a2,a3) modulo (1,1,1): subtract the minimum entry.

    The result has minimum 0, so its first nonzero entry is positive.
    """
    m = min(a)
    out = tuple(int(x - m) for x in a)
    if any(out):
        lead = next(v for v in out if v)
        if lead <= 0:
            raise InternalInvariantError("canonical root has nonpositive lead")
    return out


@lru_cache(maxsize=1)
def _cartan_gram() -> Matrix:
    """2x2 Killing Gram matrix of (H1, H2)."""
    b = derivation_basis()
    h1, h2 = cartan_basis()
    g11 = killing_form(h1, h1, b)
    g12 = killing_form(h1, h2, b)
    g22 = killing_form(h2, h2, b)
    return Matrix.from_rows([[g11, g12], [g12, g22]])


def _eigenvalue_on(ad: Matrix, w) -> int:
    """The exact eigenvalue i*v of ad on the eigenvector w; returns v.

    Verifies ad w = lambda w exactly and that lambda is purely imaginary
    with an integer coefficient.
    """
    u = ad.apply(w)
    k = next(i for i, x in enumerate(w) if x)
    lam = u[k] / w[k]
    if any(u[i] != lam * w[i] for i in range(len(w))):
        raise InternalInvariantError("root space vector is not a joint eigenvector")
    if lam.re != 0 or lam.im.denominator != 1:
        raise InternalInvariantError(f"eigenvalue {lam} is not an integer multiple of i")
    return int(lam.im)


def _gaussian_shifted(ad: Matrix, v: int) -> Matrix:
    """ad - i*v*I over the Gaussian rationals."""
    n = ad.rows
    ents = []
    for i in range(n):
        for j in range(n):
            e = ad.entry(i, j)
            if i == j:
                ents.append(GaussianRational(e, Fraction(-v)))
            else:
                ents.append(GaussianRational(e))
    return Matrix(n, n, ents)


def _compute_root_system(b: G2AlgebraBasis):
    h_star = cartan_element(CartanElement(TAU_GENERIC))
    ad_star = adjoint_matrix(h_star, b)
    h1, h2 = cartan_basis()
    ad1 = adjoint_matrix(h1, b)
    ad2 = adjoint_matrix(h2, b)

    zero_dim = len(kernel_basis(ad_star))
    if zero_dim != 2:
        raise InternalInvariantError(
            f"generic Cartan element has centralizer dimension {zero_dim}, expected 2"
        )

    # |eigenvalues|^2 sum to -B(H*, H*), which bounds the integer scan
    total = -killing_form(h_star, h_star, b)
    vmax = isqrt(int(total))

    gram = _cartan_gram()
    raw = []
    for v in range(-vmax, vmax + 1):
        if v == 0:
            continue
        kern = kernel_basis(_gaussian_shifted(ad_star, v))
        if not kern:
            continue
        if len(kern) > 1:
            raise InternalInvariantError(
                f"eigenvalue {v}i of the generic element has multiplicity {len(kern)}"
            )
        w = kern[0]
        r1 = _eigenvalue_on(_to_gaussian(ad1), w)
        r2 = _eigenvalue_on(_to_gaussian(ad2), w)
        raw.append((canonical_root_coeffs((r1, 0, -r2)), Fraction(r1), Fraction(r2)))

    if len(raw) + zero_dim != b.dim:
        raise InternalInvariantError(
            f"root spaces ({len(raw)}) plus Cartan ({zero_dim}) do not fill the algebra"
        )

    lengths = {}
    for coeffs, r1, r2 in raw:
        x = solve(gram, (r1, r2))
        if x is None:
            raise InternalInvariantError("Killing Gram matrix is singular")
        lengths[coeffs] = -(r1 * x[0] + r2 * x[1])

    min_len = min(lengths.values())
    roots = tuple(
        Root(coeffs, lengths[coeffs], "short" if lengths[coeffs] == min_len else "long")
        for coeffs in sorted(lengths)
    )
    if len(roots) != 12:
        raise InternalInvariantError(f"expected 12 distinct roots, got {len(roots)}")
    return roots


def _to_gaussian(m: Matrix) -> Matrix:
    return Matrix(m.rows, m.cols, [GaussianRational(e) for e in m.entries])


_DEFAULT_ROOTS = None


def root_system(b: G2AlgebraBasis = None):
    """All 12 roots with exact Killing lengths, sorted by coefficients."""
    global _DEFAULT_ROOTS
    if b is None or b is derivation_basis():
        if _DEFAULT_ROOTS is None:
            _DEFAULT_ROOTS = _compute_root_system(derivation_basis())
        return _DEFAULT_ROOTS
    return _compute_root_system(b)


def vanishing_roots(tau, roots=None):
    """The roots vanishing on tau (always an even count)."""
    tau = _coerce_cartan(tau)
    if roots is None:
        roots = root_system()
    return tuple(r for r in roots if r.value(tau) == 0)


def weyl_reflect(root: Root, tau) -> CartanElement:
    """Reflection of tau in the hyperplane where the root vanishes.

    Computed via the Killing form: s_r(H) = H - 2 B(H, H_r)/B(H_r, H_r) H_r
    with H_r the Killing-dual of the root, expressed in tau coordinates.
    """
    tau = _coerce_cartan(tau)
    gram = _cartan_gram()
    rv = (root.value(TAU_H1), root.value(TAU_H2))
    x = solve(gram, rv)
    if x is None:
        raise InternalInvariantError("Killing Gram matrix is singular")
    denom = rv[0] * x[0] + rv[1] * x[1]
    coef = 2 * root.value(tau) / denom
    new = tuple(
        tau.tau[i] - coef * (x[0] * TAU_H1[i] + x[1] * TAU_H2[i]) for i in range(3)
    )
    return CartanElement(new)
