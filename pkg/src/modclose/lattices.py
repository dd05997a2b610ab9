"""Integer lattices in Z^dim, held by their unique column echelon basis.

Every finitely presented module in this package is a quotient Z^g / L for a
lattice L, and every submodule is an intermediate lattice; keeping each
lattice in Hermite-style canonical form makes equality syntactic and coset
reduction deterministic.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

from .matrices import IntMatrix, _kernel_over_z, _snf_with_inverses
from .rings import Ring, ZZ


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g


class Lattice:
    """A sublattice of Z^dim with canonical echelon basis.

    The basis columns have strictly increasing pivot rows, positive pivots,
    and entries of earlier columns reduced into ``[0, pivot)`` at every pivot
    row; two lattices are equal iff their bases are identical tuples.
    """

    __slots__ = ("dim", "basis", "pivots", "_hash")

    def __init__(self, dim: int, basis: tuple, pivots: tuple):
        self.dim = dim
        self.basis = basis
        self.pivots = pivots  # (row, value) per basis column, rows ascending
        self._hash = None

    @classmethod
    def from_columns(cls, dim: int, columns: Iterable[Sequence[int]]) -> "Lattice":
        basis: list[list[int]] = []
        pivrows: list[int] = []
        for col in columns:
            v = [int(x) for x in col]
            if len(v) != dim:
                raise ValueError(f"column of length {len(v)} in Z^{dim}")
            while True:
                r = next((i for i, x in enumerate(v) if x), None)
                if r is None:
                    break
                pos = bisect_left(pivrows, r)
                if pos < len(pivrows) and pivrows[pos] == r:
                    b = basis[pos]
                    a, c = b[r], v[r]
                    if c % a == 0:
                        q = c // a
                        v = [vi - q * bi for vi, bi in zip(v, b)]
                    else:
                        x, y, g = _xgcd(a, c)
                        ag, cg = a // g, c // g
                        nb = [x * bi + y * vi for bi, vi in zip(b, v)]
                        v = [-cg * bi + ag * vi for bi, vi in zip(b, v)]
                        basis[pos] = nb
                else:
                    basis.insert(pos, v)
                    pivrows.insert(pos, r)
                    break
        # normalize: positive pivots, then reduce earlier columns at each
        # pivot row into [0, pivot)
        for j, r in enumerate(pivrows):
            if basis[j][r] < 0:
                basis[j] = [-x for x in basis[j]]
        for j, r in enumerate(pivrows):
            p = basis[j][r]
            for j2 in range(j):
                q = basis[j2][r] // p
                if q:
                    basis[j2] = [a - q * b for a, b in zip(basis[j2], basis[j])]
        return cls(
            dim,
            tuple(tuple(b) for b in basis),
            tuple((r, basis[j][r]) for j, r in enumerate(pivrows)),
        )

    # -- coset arithmetic ----------------------------------------------------

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of ``vec`` modulo this lattice."""
        v = [int(x) for x in vec]
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in Z^{self.dim}")
        for (r, p), col in zip(self.pivots, self.basis):
            q = v[r] // p
            if q:
                for i in range(r, self.dim):
                    v[i] -= q * col[i]
        return tuple(v)

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(c) for c in other.basis)

    # -- lattice arithmetic ---------------------------------------------------

    def sum(self, other: "Lattice") -> "Lattice":
        if self.dim != other.dim:
            raise ValueError("lattice sum needs a common ambient dimension")
        return Lattice.from_columns(self.dim, self.basis + other.basis)

    def intersect(self, other: "Lattice") -> "Lattice":
        if self.dim != other.dim:
            raise ValueError("lattice intersection needs a common ambient dimension")
        if not self.basis or not other.basis:
            return Lattice.from_columns(self.dim, [])
        block = IntMatrix.from_columns(
            list(self.basis) + [tuple(-x for x in c) for c in other.basis],
            self.dim,
            ZZ,
        )
        k = _kernel_over_z(block)
        s = len(self.basis)
        cols = []
        for c in k.columns():
            coeff = c[:s]
            cols.append(
                tuple(
                    sum(self.basis[j][i] * coeff[j] for j in range(s))
                    for i in range(self.dim)
                )
            )
        return Lattice.from_columns(self.dim, cols)

    def saturation(self) -> "Lattice":
        """The lattice of all x with k*x in self for some k >= 1."""
        if not self.basis:
            return self
        mat = IntMatrix.from_columns(self.basis, self.dim, ZZ)
        _, d, _, uinv, _ = _snf_with_inverses(mat)
        cols = []
        for i in range(min(mat.rows, mat.cols)):
            if d[i][i]:
                cols.append(tuple(uinv[r][i] for r in range(self.dim)))
        return Lattice.from_columns(self.dim, cols)

    def transform(self, f: IntMatrix) -> "Lattice":
        """Image lattice ``{f @ x : x in self}`` inside Z^(f.rows)."""
        if f.cols != self.dim:
            raise ValueError("matrix does not act on this lattice's ambient space")
        return Lattice.from_columns(f.rows, [f.apply(c) for c in self.basis])

    def preimage(self, f: IntMatrix) -> "Lattice":
        """The lattice ``{x in Z^(f.cols) : f @ x in self}``."""
        if f.rows != self.dim:
            raise ValueError("matrix does not map into this lattice's ambient space")
        cols = [f.column(j) for j in range(f.cols)] + [
            tuple(-x for x in c) for c in self.basis
        ]
        block = IntMatrix.from_columns(cols, self.dim, ZZ)
        k = _kernel_over_z(block)
        return Lattice.from_columns(f.cols, [c[: f.cols] for c in k.columns()])

    # -- quotient data ---------------------------------------------------------

    def quotient_invariants(self) -> tuple[int, ...]:
        """Invariant factors of Z^dim / self: nonunits only, each dividing the
        next, with 0 (free factor) last."""
        if not self.basis:
            return tuple([0] * self.dim)
        mat = IntMatrix.from_columns(self.basis, self.dim, ZZ)
        _, d, _, _, _ = _snf_with_inverses(mat)
        diag_len = min(mat.rows, mat.cols)
        factors = [d[i][i] for i in range(diag_len)]
        factors += [0] * (self.dim - diag_len)
        return tuple(f for f in factors if f != 1)

    def covolume(self) -> int | None:
        """Order of Z^dim / self, or ``None`` when the quotient is infinite."""
        if len(self.pivots) != self.dim:
            return None
        out = 1
        for _, p in self.pivots:
            out *= p
        return out

    def basis_matrix(self, ring: Ring = ZZ) -> IntMatrix:
        return IntMatrix.from_columns(self.basis, self.dim, ring)

    # -- value semantics --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Lattice)
            and self.dim == other.dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, self.basis))
        return self._hash

    def __repr__(self) -> str:
        return f"Lattice(dim={self.dim}, basis={[list(c) for c in self.basis]!r})"
