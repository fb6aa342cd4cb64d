"""The derivation algebra of the octonions.

A derivation is an 8x8 rational matrix D with D(xy) = (Dx)y + x(Dy).  The
space of all of them is the compact 14-dimensional simple Lie algebra of
type G2; it is carved out here as the exact kernel of a 512x64 linear
system (one equation per basis pair and coordinate).  On top of the
canonical basis the module provides the bracket, adjoint matrices,
structure constants, the Killing form, fixed-point subalgebras of algebra
automorphisms, structural fingerprints of subalgebras, and a
floating-point exponential linking derivations to automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cayley import MULT_TABLE, Octonion, apply_matrix, is_automorphism_matrix
from .errors import InternalInvariantError, NotBracketClosedError, NotInSpanError
from .linalg import Matrix, kernel_basis, rank, rref

G2_DIM = 14


class Derivation:
    """A linear map on octonion coordinates obeying the product rule.

    The matrix acts on coordinate columns: (D x)_p = sum_q m[p][q] x_q.
    Instances are cheap wrappers; the Leibniz property is enforced where
    derivations are produced (the kernel construction below) and can be
    re-checked with :meth:`satisfies_leibniz`.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if (matrix.rows, matrix.cols) != (8, 8):
            raise ValueError("a derivation is an 8x8 matrix")
        self.matrix = matrix

    @classmethod
    def from_flat(cls, vec) -> "Derivation":
        return cls(Matrix(8, 8, vec))

    @classmethod
    def zero(cls) -> "Derivation":
        return cls(Matrix(8, 8, [Fraction(0)] * 64))

    def flat(self):
        return self.matrix.entries

    def apply(self, x: Octonion) -> Octonion:
        return Octonion(self.matrix.apply(x.coords))

    def __add__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(self.matrix + other.matrix)

    def __sub__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(self.matrix - other.matrix)

    def __neg__(self):
        return Derivation(-self.matrix)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Derivation(self.matrix * other)
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def satisfies_leibniz(self) -> bool:
        """Exact product-rule check on all 64 basis pairs."""
        images = [self.apply(Octonion.basis(i)) for i in range(8)]
        basis = [Octonion.basis(i) for i in range(8)]
        for i in range(8):
            for j in range(8):
                k, sign = MULT_TABLE[i][j]
                lhs = images[k] if sign > 0 else -images[k]
                if lhs != images[i] * basis[j] + basis[i] * images[j]:
                    return False
        return True

    def kills_unit(self) -> bool:
        return self.apply(Octonion.basis(0)).is_zero()

    def is_skew(self) -> bool:
        m = self.matrix
        return all(m.entry(i, j) == -m.entry(j, i) for i in range(8) for j in range(i, 8))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self) -> str:
        return "Derivation(%r)" % (self.matrix,)


def bracket(d1: Derivation, d2: Derivation) -> Derivation:
    """Commutator [d1, d2] = d1 d2 - d2 d1."""
    return Derivation(d1.matrix * d2.matrix - d2.matrix * d1.matrix)


def leibniz_system() -> Matrix:
    """The 512x64 constraint system whose kernel is the derivation algebra.

    Unknowns are the matrix entries d[p][q] in row-major order (index
    8p + q).  Rows run over ordered basis pairs (i, j), eight coordinate
    equations per pair:

        D(e_i e_j)_k - ((D e_i) e_j)_k - (e_i (D e_j))_k = 0.
    """
    rows = []
    for i in range(8):
        for j in range(8):
            kp, sp = MULT_TABLE[i][j]
            for k in range(8):
                row = [0] * 64
                row[k * 8 + kp] += sp
                for p in range(8):
                    kk, ss = MULT_TABLE[p][j]
                    if kk == k:
                        row[p * 8 + i] -= ss
                for q in range(8):
                    kk, ss = MULT_TABLE[i][q]
                    if kk == k:
                        row[q * 8 + j] -= ss
                rows.append([Fraction(v) for v in row])
    return Matrix.from_rows(rows)


@dataclass(frozen=True)
class SubalgebraSummary:
    """Structural fingerprint of a bracket-closed set of derivations."""

    dim: int
    derived_dim: int
    center_dim: int
    is_abelian: bool


class G2AlgebraBasis:
    """Canonical ordered basis of the derivation algebra.

    ``basis[i]`` are the 14 kernel basis vectors of the Leibniz system
    reshaped to 8x8 matrices; ``structure_constants[i][j][k]`` gives
    [D_i, D_j] = sum_k c[i][j][k] D_k exactly.
    """

    __slots__ = ("basis", "structure_constants", "_pivots", "_flat_rows", "_gram")

    def __init__(self, basis, structure_constants, pivots):
        self.basis = tuple(basis)
        self.structure_constants = structure_constants
        self._pivots = tuple(pivots)
        self._flat_rows = tuple(d.flat() for d in self.basis)
        self._gram = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, d: Derivation):
        """Exact coordinates of d in this basis; NotInSpanError otherwise.

        The basis rows are in reduced echelon form, so coordinates can be
        read off at the pivot positions; the read-off is then verified by
        exact reconstruction.
        """
        vec = d.flat()
        coeffs = tuple(vec[p] for p in self._pivots)
        recon = [Fraction(0)] * 64
        for c, row in zip(coeffs, self._flat_rows):
            if c:
                for idx, r in enumerate(row):
                    if r:
                        recon[idx] += c * r
        if tuple(recon) != tuple(vec):
            raise NotInSpanError("derivation is not in the span of the basis")
        return coeffs

    def from_coordinates(self, coeffs) -> Derivation:
        if len(coeffs) != self.dim:
            raise ValueError("coordinate length mismatch")
        out = [Fraction(0)] * 64
        for c, row in zip(coeffs, self._flat_rows):
            if c:
                for idx, r in enumerate(row):
                    if r:
                        out[idx] += c * r
        return Derivation.from_flat(out)

    def adjoint_of_basis(self, i: int) -> Matrix:
        """Matrix of ad(D_i) read from the structure constants."""
        c = self.structure_constants
        return Matrix(
            G2_DIM,
            G2_DIM,
            [c[i][j][k] for k in range(G2_DIM) for j in range(G2_DIM)],
        )

    def killing_gram(self) -> Matrix:
        """Gram matrix of the Killing form on the basis (symmetric)."""
        if self._gram is None:
            ads = [self.adjoint_of_basis(i) for i in range(self.dim)]
            n = self.dim
            g = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    t = (ads[i] * ads[j]).trace()
                    g[i][j] = t
                    g[j][i] = t
            self._gram = Matrix.from_rows(g)
        return self._gram


@lru_cache(maxsize=1)
def derivation_basis() -> G2AlgebraBasis:
    """Canonical basis of the 14-dimensional derivation algebra.

    Deterministic (the kernel basis is canonical) and cached; fails hard
    if the kernel dimension is not 14, which would mean the multiplication
    table is broken.
    """
    kern = kernel_basis(leibniz_system())
    if len(kern) != G2_DIM:
        raise InternalInvariantError(
            f"Leibniz kernel has dimension {len(kern)}, expected {G2_DIM}"
        )
    pivots = []
    for row in kern:
        lead = next(idx for idx, v in enumerate(row) if v)
        pivots.append(lead)
    basis = [Derivation.from_flat(v) for v in kern]

    def coords_of(vec):
        coeffs = tuple(vec[p] for p in pivots)
        recon = [Fraction(0)] * 64
        for c, row in zip(coeffs, kern):
            if c:
                for idx, r in enumerate(row):
                    if r:
                        recon[idx] += c * r
        if tuple(recon) != tuple(vec):
            raise InternalInvariantError("bracket left the derivation algebra")
        return coeffs

    n = G2_DIM
    c = [[None] * n for _ in range(n)]
    zero_row = (Fraction(0),) * n
    for i in range(n):
        c[i][i] = zero_row
    for i in range(n):
        for j in range(i + 1, n):
            br = bracket(basis[i], basis[j])
            cij = coords_of(br.flat())
            c[i][j] = cij
            c[j][i] = tuple(-x for x in cij)
    structure = tuple(tuple(c[i][j] for j in range(n)) for i in range(n))
    return G2AlgebraBasis(basis, structure, pivots)


def adjoint_matrix(d: Derivation, b: G2AlgebraBasis) -> Matrix:
    """Matrix of X -> [d, X] in the basis b.

    d must lie in the span of b (checked exactly).  Uses linearity of the
    adjoint action: ad(sum c_i D_i) = sum c_i ad(D_i) with the per-basis
    adjoints read from the structure constants.
    """
    coeffs = b.coordinates(d)
    n = b.dim
    out = [[Fraction(0)] * n for _ in range(n)]
    c = b.structure_constants
    for i, ci in enumerate(coeffs):
        if ci:
            ci_rows = c[i]
            for j in range(n):
                cij = ci_rows[j]
                for k in range(n):
                    v = cij[k]
                    if v:
                        out[k][j] += ci * v
    return Matrix.from_rows(out)


def killing_form(x: Derivation, y: Derivation, b: G2AlgebraBasis) -> Fraction:
    """Killing form tr(ad x ad y), evaluated bilinearly on the Gram matrix."""
    cx = b.coordinates(x)
    cy = b.coordinates(y)
    g = b.killing_gram()
    total = Fraction(0)
    for i, xi in enumerate(cx):
        if xi:
            for j, yj in enumerate(cy):
                if yj:
                    gij = g.entry(i, j)
                    if gij:
                        total += xi * gij * yj
    return total


def fixed_subalgebra(sigma: Matrix, b: G2AlgebraBasis):
    """Canonical basis of the derivations commuting with an automorphism.

    sigma must be an exact algebra automorphism given as an 8x8 rational
    matrix; the fixed-point condition sigma D sigma^-1 = D is solved as
    sigma D - D sigma = 0 inside the span of b.
    """
    if not is_automorphism_matrix(sigma):
        raise ValueError("sigma is not an exact algebra automorphism")
    cols = []
    for d in b.basis:
        m = sigma * d.matrix - d.matrix * sigma
        cols.append(m.entries)
    system = Matrix(64, b.dim, [cols[i][r] for r in range(64) for i in range(b.dim)])
    kern = kernel_basis(system)
    return tuple(b.from_coordinates(v) for v in kern)


def stabilizer_subalgebra(x: Octonion, b: G2AlgebraBasis):
    """Canonical basis of the derivations annihilating a fixed octonion.

    For x = e1 this is the 8-dimensional subalgebra of derivations
    commuting with the complex structure (left multiplication by e1), the
    infinitesimal stabilizer of a point on the 6-sphere of imaginary
    units.
    """
    cols = [d.apply(x).coords for d in b.basis]
    system = Matrix(8, b.dim, [cols[i][r] for r in range(8) for i in range(b.dim)])
    kern = kernel_basis(system)
    return tuple(b.from_coordinates(v) for v in kern)


def _span_rows(flats):
    """Reduced echelon basis of the row span of the given flat vectors."""
    m = Matrix.from_rows(flats)
    red, pivots = rref(m)
    return [red.row(i) for i in range(len(pivots))], pivots


def subalgebra_structure(s, b: G2AlgebraBasis) -> SubalgebraSummary:
    """Fingerprint {dim, derived_dim, center_dim, is_abelian} of a
    bracket-closed collection of derivations.

    Raises NotBracketClosedError if some bracket leaves the span of s.
    """
    if not s:
        return SubalgebraSummary(0, 0, 0, True)
    rows, pivots = _span_rows([d.flat() for d in s])
    dim = len(rows)
    if dim == 0:
        return SubalgebraSummary(0, 0, 0, True)
    red = [Derivation.from_flat(r) for r in rows]

    def in_span(vec) -> bool:
        coeffs = [vec[p] for p in pivots]
        recon = [Fraction(0)] * 64
        for c, row in zip(coeffs, rows):
            if c:
                for idx, r in enumerate(row):
                    if r:
                        recon[idx] += c * r
        return tuple(recon) == tuple(vec)

    pair_brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            br = bracket(red[i], red[j])
            if not in_span(br.flat()):
                raise NotBracketClosedError(
                    "bracket of subalgebra elements leaves the span"
                )
            pair_brackets[(i, j)] = br

    nonzero = [br.flat() for br in pair_brackets.values() if not br.is_zero()]
    derived_dim = rank(Matrix.from_rows(nonzero)) if nonzero else 0

    # centralizer of the subalgebra inside itself: x = sum c_i red_i with
    # [x, red_j] = 0 for all j
    zero_flat = (Fraction(0),) * 64
    stacked = []
    for j in range(dim):
        for r in range(64):
            row = []
            for i in range(dim):
                if i == j:
                    row.append(zero_flat[r])
                elif i < j:
                    row.append(pair_brackets[(i, j)].flat()[r])
                else:
                    row.append(-pair_brackets[(j, i)].flat()[r])
            stacked.append(row)
    center_dim = len(kernel_basis(Matrix.from_rows(stacked)))
    return SubalgebraSummary(dim, derived_dim, center_dim, derived_dim == 0)


def exp_derivation_numeric(d: Derivation, t: float, terms: int = 16) -> np.ndarray:
    """Floating-point exp(t d) by scaling and squaring.

    Taylor degree ``terms`` (>= 12 by contract) after scaling the matrix
    below norm 1/2; the result is approximately orthogonal and
    approximately an algebra automorphism.
    """
    if terms < 12:
        raise ValueError("series degree must be at least 12")
    a = np.array([[float(x) for x in d.matrix.row(i)] for i in range(8)]) * float(t)
    nrm = float(np.abs(a).sum(axis=1).max())
    squarings = 0
    while nrm > 0.5:
        nrm /= 2.0
        squarings += 1
    m = a / (2.0 ** squarings)
    eye = np.eye(8)
    p = np.eye(8)
    for k in range(terms, 0, -1):
        p = eye + (m @ p) / k
    for _ in range(squarings):
        p = p @ p
    return p
