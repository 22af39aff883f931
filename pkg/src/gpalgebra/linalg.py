"""Exact dense linear algebra: matrices, reduced echelon forms, subspaces.

Conventions used everywhere downstream:

* matrices act on column vectors, ``m.apply(v)`` computes ``m @ v``;
* spans are stored as row spaces, canonicalized to reduced row echelon form,
  so two subspaces are equal iff their stored bases are entrywise equal.
"""

from __future__ import annotations

from .errors import DimensionMismatchError, FieldMismatchError
from .fields import Field


def _freeze(rows):
    return tuple(tuple(r) for r in rows)


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows, ncols=None):
        rows = [[field.scalar(x) for x in r] for r in rows]
        self.field = field
        self.nrows = len(rows)
        if rows:
            self.ncols = len(rows[0])
            if any(len(r) != self.ncols for r in rows):
                raise DimensionMismatchError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols
        self.rows = _freeze(rows)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_cols(cls, field, cols, nrows=0):
        if not cols:
            return cls(field, [[] for _ in range(nrows)], ncols=0)
        n = len(cols[0])
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)], ncols=len(cols))

    # -- basic structure ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}: {body})"

    def entry(self, i, j):
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def transpose(self):
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], ncols=self.nrows)

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("shape mismatch in +")
        return Matrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __sub__(self, other):
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("shape mismatch in -")
        return Matrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def scale(self, c):
        c = self.field.scalar(c)
        return Matrix(self.field, [[c * x for x in r] for r in self.rows], ncols=self.ncols)

    def __matmul__(self, other):
        self._check_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError("inner dimension mismatch in @")
        z = self.field.zero
        out = [[z] * other.ncols for _ in range(self.nrows)]
        orows = other.rows
        for i, arow in enumerate(self.rows):
            oi = out[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                br = orows[k]
                for j, b in enumerate(br):
                    if b:
                        oi[j] = oi[j] + a * b
        return Matrix(self.field, out, ncols=other.ncols)

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.ncols:
            raise DimensionMismatchError("vector length mismatch")
        z = self.field.zero
        out = []
        for r in self.rows:
            acc = z
            for a, x in zip(r, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def vstack(self, other):
        self._check_field(other)
        if self.ncols != other.ncols:
            raise DimensionMismatchError("column count mismatch in vstack")
        return Matrix(self.field, list(self.rows) + list(other.rows), ncols=self.ncols)

    def hstack(self, other):
        self._check_field(other)
        if self.nrows != other.nrows:
            raise DimensionMismatchError("row count mismatch in hstack")
        return Matrix(self.field, [list(r) + list(s) for r, s in zip(self.rows, other.rows)],
                      ncols=self.ncols + other.ncols)

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form.

        Returns ``(echelon_matrix, rank, pivot_columns)``; the echelon matrix
        is the unique RREF of this matrix, with its zero rows kept.
        """
        m = [list(r) for r in self.rows]
        nrows, ncols = self.nrows, self.ncols
        pivots = []
        pr = 0
        for pc in range(ncols):
            pivot_row = None
            for r in range(pr, nrows):
                if m[r][pc]:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
            inv = self.field.one / m[pr][pc]
            if inv != self.field.one:
                m[pr] = [inv * x for x in m[pr]]
            prow = m[pr]
            for r in range(nrows):
                if r == pr:
                    continue
                f = m[r][pc]
                if f:
                    m[r] = [x - f * y for x, y in zip(m[r], prow)]
            pivots.append(pc)
            pr += 1
            if pr == nrows:
                break
        return Matrix(self.field, m, ncols=ncols), pr, pivots

    def rank(self):
        return self.rref()[1]

    def kernel(self) -> "Subspace":
        """Null space {v : m v = 0} as a canonical subspace of dim ncols."""
        ech, rank, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        z, o = self.field.zero, self.field.one
        gens = []
        for j in free:
            v = [z] * self.ncols
            v[j] = o
            for r, pc in enumerate(pivots):
                v[pc] = -ech.rows[r][j]
            gens.append(v)
        return Subspace(self.field, self.ncols, gens)

    def solve(self, rhs):
        """One exact solution of ``m x = rhs`` or None when inconsistent."""
        if len(rhs) != self.nrows:
            raise DimensionMismatchError("rhs length mismatch")
        aug = Matrix(self.field, [list(r) + [b] for r, b in zip(self.rows, rhs)],
                     ncols=self.ncols + 1)
        ech, rank, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        z = self.field.zero
        x = [z] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = ech.rows[r][self.ncols]
        return tuple(x)

    def inverse(self):
        if self.nrows != self.ncols:
            raise DimensionMismatchError("inverse of non-square matrix")
        aug = self.hstack(Matrix.identity(self.field, self.nrows))
        ech, rank, pivots = aug.rref()
        if rank != self.nrows or pivots != list(range(self.nrows)):
            return None
        n = self.nrows
        return Matrix(self.field, [r[n:] for r in ech.rows], ncols=n)

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def is_zero_vec(v):
    return all(not x for x in v)


class Subspace:
    """Row-span of a generator list, stored canonically in RREF.

    Two subspaces of the same ambient space are equal iff their echelon bases
    are entrywise equal.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, generators):
        gens = [[field.scalar(x) for x in g] for g in generators]
        for g in gens:
            if len(g) != ambient_dim:
                raise DimensionMismatchError("generator length mismatch")
        if gens:
            ech, rank, pivots = Matrix(field, gens, ncols=ambient_dim).rref()
            rows = ech.rows[:rank]
        else:
            rows, pivots = (), []
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = Matrix(field, list(rows), ncols=ambient_dim)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, [])

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim).rows)

    @property
    def dim(self):
        return self.basis.nrows

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim} over {self.field})"

    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")

    def reduce(self, vec):
        """Residue of ``vec`` after eliminating this subspace's pivots."""
        if len(vec) != self.ambient_dim:
            raise DimensionMismatchError("vector length mismatch")
        v = [self.field.scalar(x) for x in vec]
        for r, pc in enumerate(self.pivots):
            c = v[pc]
            if c:
                row = self.basis.rows[r]
                v = [x - c * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, vec) -> bool:
        return is_zero_vec(self.reduce(vec))

    def contains_subspace(self, other) -> bool:
        self._check_compatible(other)
        return all(self.contains(r) for r in other.basis.rows)

    def coords_of(self, vec):
        """Coefficients of ``vec`` in the echelon basis, or None if outside.

        Echelon rows have unit pivots and zeros above them, so the
        coefficients can be read off the pivot coordinates directly.
        """
        v = [self.field.scalar(x) for x in vec]
        coeffs = tuple(v[pc] for pc in self.pivots)
        if not is_zero_vec(self.reduce(v)):
            return None
        return coeffs

    def add(self, other) -> "Subspace":
        self._check_compatible(other)
        return Subspace(self.field, self.ambient_dim,
                        list(self.basis.rows) + list(other.basis.rows))

    def intersect(self, other) -> "Subspace":
        """Zassenhaus block elimination on stacked [u|u] and [w|0] rows."""
        self._check_compatible(other)
        n = self.ambient_dim
        z = self.field.zero
        rows = [list(r) + list(r) for r in self.basis.rows]
        rows += [list(r) + [z] * n for r in other.basis.rows]
        if not rows:
            return Subspace.zero(self.field, n)
        ech, rank, _ = Matrix(self.field, rows, ncols=2 * n).rref()
        gens = []
        for r in ech.rows[:rank]:
            if is_zero_vec(r[:n]):
                gens.append(r[n:])
        return Subspace(self.field, n, gens)

    def complement_columns(self):
        pivot_set = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in pivot_set]


def quotient_basis(sub: Subspace):
    """Complement data for the quotient of the ambient space by ``sub``.

    Returns ``(representatives, project)`` where representatives are the
    standard basis vectors at the non-pivot columns of ``sub`` and ``project``
    is the matrix of the linear quotient map: it kills ``sub`` exactly and is
    the identity on the representatives' coordinates.
    """
    field = sub.field
    n = sub.ambient_dim
    free = sub.complement_columns()
    z, o = field.zero, field.one
    reps = []
    for j in free:
        v = [z] * n
        v[j] = o
        reps.append(tuple(v))
    # column j of the projection is the reduction of e_j read at free coords
    cols = []
    for j in range(n):
        e = [z] * n
        e[j] = o
        red = sub.reduce(e)
        cols.append([red[f] for f in free])
    proj = Matrix(field, [[cols[j][i] for j in range(n)] for i in range(len(free))], ncols=n)
    return reps, proj
