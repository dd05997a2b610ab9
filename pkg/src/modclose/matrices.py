"""Exact matrix arithmetic over Z and Z/n.

Smith normal form with transformation matrices, integer kernels, and linear
solving.  Everything runs on arbitrary-precision Python integers; modular
computations are performed by lifting to Z and augmenting with multiples of
the modulus, so one integer code path (and one oracle) covers both rings.

Matrices are immutable values and may be shared freely between threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .rings import Ring, ZZ


class IntMatrix:
    """An immutable rows x cols matrix of integers over a :class:`Ring`.

    Entries are stored row-major; modular entries are kept reduced into
    ``[0, n)``.  Matrices with zero rows or zero columns are legal and denote
    zero maps and zero modules.
    """

    __slots__ = ("rows", "cols", "entries", "ring", "_hash")

    def __init__(
        self,
        entries: Iterable[Sequence[int]],
        ring: Ring = ZZ,
        *,
        rows: int | None = None,
        cols: int | None = None,
    ):
        data = [tuple(ring.reduce(int(x)) for x in row) for row in entries]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(
                f"entry grid does not match declared shape {rows}x{cols}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = tuple(data)
        self.ring = ring
        self._hash = None

    @classmethod
    def from_columns(
        cls, columns: Iterable[Sequence[int]], rows: int, ring: Ring = ZZ
    ) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in columns]
        for c in cols:
            if len(c) != rows:
                raise ValueError(f"column of length {len(c)} in a {rows}-row matrix")
        grid = [[c[i] for c in cols] for i in range(rows)]
        return cls(grid, ring, rows=rows, cols=len(cols))

    @classmethod
    def identity(cls, n: int, ring: Ring = ZZ) -> "IntMatrix":
        return cls(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], ring
        )

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: Ring = ZZ) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], ring, rows=rows, cols=cols)

    # -- accessors ---------------------------------------------------------

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    # -- arithmetic --------------------------------------------------------

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        if self.ring != other.ring:
            raise ValueError("matrix product needs a common ring")
        a, b = self.entries, other.entries
        grid = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix(grid, self.ring, rows=self.rows, cols=other.cols)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product, returned as a plain integer tuple."""
        if len(vec) != self.cols:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} matrix, vector of length {len(vec)}"
            )
        return tuple(
            self.ring.reduce(sum(row[k] * vec[k] for k in range(self.cols)))
            for row in self.entries
        )

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows or self.ring != other.ring:
            raise ValueError("hstack needs equal row counts and a common ring")
        grid = [self.entries[i] + other.entries[i] for i in range(self.rows)]
        return IntMatrix(grid, self.ring, rows=self.rows, cols=self.cols + other.cols)

    def transpose(self) -> "IntMatrix":
        grid = [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return IntMatrix(grid, self.ring, rows=self.cols, cols=self.rows)

    def lift(self) -> "IntMatrix":
        """The same entries viewed over the integers."""
        if not self.ring.is_modular:
            return self
        return IntMatrix(self.entries, ZZ, rows=self.rows, cols=self.cols)

    def with_ring(self, ring: Ring) -> "IntMatrix":
        """Reinterpret over ``ring`` (integer matrices may be reduced; a modular
        matrix only recasts to its own ring)."""
        if ring == self.ring:
            return self
        if self.ring.is_modular:
            raise ValueError(f"cannot recast a {self.ring} matrix into {ring}")
        return IntMatrix(self.entries, ring, rows=self.rows, cols=self.cols)

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        return f"IntMatrix({list(map(list, self.entries))!r}, ring={self.ring})"


class SNFResult:
    """Smith normal form ``D = U @ A @ V`` of an integer matrix.

    ``U`` and ``V`` are unimodular over Z; ``D`` is diagonal with nonnegative
    entries, each dividing the next.
    """

    __slots__ = ("u", "d", "v")

    def __init__(self, u: IntMatrix, d: IntMatrix, v: IntMatrix):
        self.u = u
        self.d = d
        self.v = v

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.d.diagonal()

    def __repr__(self) -> str:
        return f"SNFResult(diagonal={list(self.diagonal)!r})"


def _snf_with_inverses(a: IntMatrix):
    """Core Smith reduction.

    Returns ``(u, d, v, uinv, vinv)`` as lists of lists with
    ``d = u @ a @ v``, ``uinv = u^-1`` and ``vinv = v^-1``.

    Pivoting is deterministic: the nonzero entry of minimal absolute value is
    chosen, ties broken by lowest (row, col), so results are reproducible.
    """
    rows, cols = a.rows, a.cols
    d = [list(r) for r in a.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    uinv = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    vinv = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, k):
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]
        for r in uinv:
            r[i], r[k] = r[k], r[i]

    def swap_cols(j, l):
        for r in d:
            r[j], r[l] = r[l], r[j]
        for r in v:
            r[j], r[l] = r[l], r[j]
        vinv[j], vinv[l] = vinv[l], vinv[j]

    def row_sub(i, q, k):
        # row i -= q * row k
        di, dk = d[i], d[k]
        for j in range(cols):
            di[j] -= q * dk[j]
        ui, uk = u[i], u[k]
        for j in range(rows):
            ui[j] -= q * uk[j]
        for r in uinv:
            r[k] += q * r[i]

    def col_sub(j, q, k):
        # col j -= q * col k
        for r in d:
            r[j] -= q * r[k]
        for r in v:
            r[j] -= q * r[k]
        vj, vk = vinv[j], vinv[k]
        for t in range(cols):
            vk[t] += q * vj[t]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    for k in range(min(rows, cols)):
        # deterministic pivot: least |entry| in the trailing block,
        # row-major scan keeps the first hit on ties
        best = None
        best_abs = 0
        for i in range(k, rows):
            row = d[i]
            for j in range(k, cols):
                e = row[j]
                if e and (best is None or abs(e) < best_abs):
                    best = (i, j)
                    best_abs = abs(e)
        if best is None:
            break
        swap_rows(k, best[0])
        swap_cols(k, best[1])

        while True:
            if d[k][k] < 0:
                negate_row(k)
            p = d[k][k]
            # clear column k; a nonzero remainder becomes the new, smaller pivot
            dirty = False
            for i in range(k + 1, rows):
                e = d[i][k]
                if e:
                    q, r = divmod(e, p)
                    row_sub(i, q, k)
                    if r:
                        swap_rows(i, k)
                        dirty = True
                        break
            if dirty:
                continue
            # clear row k by column operations
            dirty = False
            for j in range(k + 1, cols):
                e = d[k][j]
                if e:
                    q, r = divmod(e, p)
                    col_sub(j, q, k)
                    if r:
                        swap_cols(j, k)
                        dirty = True
                        break
            if dirty:
                continue
            # enforce the divisibility chain: pivot must divide the whole
            # trailing block before moving on
            offender = None
            for i in range(k + 1, rows):
                row = d[i]
                for j in range(k + 1, cols):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_sub(k, -1, offender)  # fold the offending row into row k

    return u, d, v, uinv, vinv


def smith_normal_form(a: IntMatrix) -> SNFResult:
    """Smith normal form of an integer matrix, with both transforms.

    Modular matrices must be lifted by the caller; the reduction itself is an
    integer computation.  Intermediate entries can grow large, which is why
    everything stays in arbitrary precision.
    """
    if a.ring.is_modular:
        raise ValueError("Smith reduction runs over the integers; lift the matrix first")
    u, d, v, _, _ = _snf_with_inverses(a)
    return SNFResult(
        IntMatrix(u, ZZ, rows=a.rows, cols=a.rows),
        IntMatrix(d, ZZ, rows=a.rows, cols=a.cols),
        IntMatrix(v, ZZ, rows=a.cols, cols=a.cols),
    )


def _kernel_over_z(a: IntMatrix) -> IntMatrix:
    """Basis of ``{x : a @ x = 0}`` over Z, as columns (a lattice basis)."""
    _, d, v, _, _ = _snf_with_inverses(a)
    diag_len = min(a.rows, a.cols)
    cols = []
    for j in range(a.cols):
        if j >= diag_len or d[j][j] == 0:
            cols.append(tuple(v[i][j] for i in range(a.cols)))
    return IntMatrix.from_columns(cols, a.cols, ZZ)


def kernel_basis(a: IntMatrix, ring: Ring | None = None) -> IntMatrix:
    """Generators of ``{x : a @ x = 0}`` over the ring, as matrix columns.

    Over Z the columns are a lattice basis.  Over Z/n the kernel is computed
    by lifting to Z through the augmented system ``[a | n*I]`` and projecting
    solutions back, then reducing mod n.
    """
    mat = a if ring is None else a.with_ring(ring)
    if not mat.ring.is_modular:
        return _kernel_over_z(mat)
    n = mat.ring.modulus
    lifted = mat.lift()
    aug = lifted.hstack(
        IntMatrix(
            [[n if i == j else 0 for j in range(mat.rows)] for i in range(mat.rows)],
            ZZ,
        )
    )
    k = _kernel_over_z(aug)
    seen = set()
    cols = []
    for c in k.columns():
        head = tuple(x % n for x in c[: mat.cols])
        if any(head) and head not in seen:
            seen.add(head)
            cols.append(head)
    return IntMatrix.from_columns(cols, mat.cols, mat.ring)


def _solve_over_z(a: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    u, d, v, _, _ = _snf_with_inverses(a)
    c = [sum(u[i][k] * b[k] for k in range(a.rows)) for i in range(a.rows)]
    diag_len = min(a.rows, a.cols)
    y = [0] * a.cols
    for i in range(a.rows):
        di = d[i][i] if i < diag_len else 0
        if di:
            q, r = divmod(c[i], di)
            if r:
                return None
            y[i] = q
        elif c[i]:
            return None
    return tuple(sum(v[i][j] * y[j] for j in range(a.cols)) for i in range(a.cols))


def solve_linear(
    a: IntMatrix, b: Sequence[int], ring: Ring | None = None
) -> tuple[tuple[int, ...] | None, IntMatrix]:
    """Solve ``a @ x = b`` over the ring.

    Returns ``(particular, kernel)`` where ``particular`` is one solution (or
    ``None`` when the system is unsolvable) and ``kernel`` is
    :func:`kernel_basis` of ``a``; the full solution set is the particular
    solution plus the kernel span.
    """
    mat = a if ring is None else a.with_ring(ring)
    vec = [int(x) for x in b]
    if len(vec) != mat.rows:
        raise ValueError(
            f"dimension mismatch: matrix has {mat.rows} rows, vector has {len(vec)}"
        )
    kernel = kernel_basis(mat)
    if not mat.ring.is_modular:
        return _solve_over_z(mat, vec), kernel
    n = mat.ring.modulus
    aug = mat.lift().hstack(
        IntMatrix(
            [[n if i == j else 0 for j in range(mat.rows)] for i in range(mat.rows)],
            ZZ,
        )
    )
    sol = _solve_over_z(aug, [x % n for x in vec])
    if sol is None:
        return None, kernel
    return tuple(x % n for x in sol[: mat.cols]), kernel
