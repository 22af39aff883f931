"""Finite-dimensional associative algebras given by structure constants.

An algebra of dimension n over an exact field is the data of a rank-3 tensor
``c[i][j]`` (the coordinate vector of the product of basis elements i and j).
Associativity is verified at construction; a two-sided unity is detected by
solving the defining linear system and recorded when it exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CharacteristicTooSmallError,
    DimensionMismatchError,
    FieldMismatchError,
    InternalCheckError,
    NoUnityError,
    NonAssociativeError,
    NotAnIdealError,
    NotNilpotentError,
)
from .fields import Field
from .linalg import Matrix, Subspace, is_zero_vec, quotient_basis, vec_add, vec_scale


class FDAlgebra:
    """Immutable structure-constant algebra.

    ``structure[i][j]`` is the coordinate tuple of ``b_i * b_j``; ``unity`` is
    the coordinate tuple of the two-sided unity or None; ``labels`` are
    display names for the basis.
    """

    __slots__ = ("field", "dim", "structure", "unity", "labels", "_left", "_right")

    def __init__(self, field, dim, structure, unity, labels):
        self.field = field
        self.dim = dim
        self.structure = structure
        self.unity = unity
        self.labels = labels
        self._left = None
        self._right = None

    # -- elements ----------------------------------------------------------

    def element(self, coords) -> "Element":
        coords = tuple(self.field.scalar(x) for x in coords)
        if len(coords) != self.dim:
            raise DimensionMismatchError("coordinate length mismatch")
        return Element(self, coords)

    def basis_element(self, i) -> "Element":
        z, o = self.field.zero, self.field.one
        return Element(self, tuple(o if j == i else z for j in range(self.dim)))

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> "Element":
        return Element(self, (self.field.zero,) * self.dim)

    def one(self) -> "Element":
        if self.unity is None:
            raise NoUnityError("algebra has no unity element")
        return Element(self, self.unity)

    @property
    def has_unity(self):
        return self.unity is not None

    # -- multiplication ----------------------------------------------------

    def mult_coords(self, x, y):
        z = self.field.zero
        out = [z] * self.dim
        struct = self.structure
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = struct[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in enumerate(row[j]):
                    if s:
                        out[k] = out[k] + c * s
        return tuple(out)

    def left_mult_matrix(self, i) -> Matrix:
        if self._left is None:
            self._left = [None] * self.dim
        if self._left[i] is None:
            cols = [self.structure[i][j] for j in range(self.dim)]
            self._left[i] = Matrix.from_cols(self.field, cols, nrows=self.dim)
        return self._left[i]

    def right_mult_matrix(self, i) -> Matrix:
        if self._right is None:
            self._right = [None] * self.dim
        if self._right[i] is None:
            cols = [self.structure[j][i] for j in range(self.dim)]
            self._right[i] = Matrix.from_cols(self.field, cols, nrows=self.dim)
        return self._right[i]

    def left_action_matrix(self, coords) -> Matrix:
        """Matrix of left multiplication by the element with these coords."""
        acc = Matrix.zeros(self.field, self.dim, self.dim)
        for i, c in enumerate(coords):
            if c:
                acc = acc + self.left_mult_matrix(i).scale(c)
        return acc

    def __repr__(self):
        u = "unital" if self.unity is not None else "no unity"
        return f"FDAlgebra(dim {self.dim} over {self.field}, {u})"


def _detect_unity(field, dim, structure):
    """Solve u . b_i = b_i = b_i . u for all i; None when unsolvable."""
    if dim == 0:
        return ()
    rows = []
    rhs = []
    z, o = field.zero, field.one
    for i in range(dim):
        for k in range(dim):
            rows.append([structure[a][i][k] for a in range(dim)])
            rhs.append(o if k == i else z)
            rows.append([structure[i][a][k] for a in range(dim)])
            rhs.append(o if k == i else z)
    sol = Matrix(field, rows, ncols=dim).solve(rhs)
    return tuple(sol) if sol is not None else None


def make_algebra(field: Field, structure, labels=None, *, check=True) -> FDAlgebra:
    """Build an algebra from its structure tensor.

    ``structure[i][j]`` must be a length-n coordinate sequence.  When
    ``check`` is set the full associativity scan runs (comparing the left
    action of ``b_i b_j`` with the product of left actions, which covers all
    n^3 triples at once).
    """
    dim = len(structure)
    tensor = []
    for i, row in enumerate(structure):
        if len(row) != dim:
            raise DimensionMismatchError("structure tensor is not n x n x n")
        new_row = []
        for j, coords in enumerate(row):
            if len(coords) != dim:
                raise DimensionMismatchError("structure tensor is not n x n x n")
            new_row.append(tuple(field.scalar(x) for x in coords))
        tensor.append(tuple(new_row))
    tensor = tuple(tensor)
    if labels is None:
        labels = tuple(f"b{i}" for i in range(dim))
    else:
        labels = tuple(labels)
        if len(labels) != dim:
            raise DimensionMismatchError("label count mismatch")
    alg = FDAlgebra(field, dim, tensor, None, labels)
    if check:
        for i in range(dim):
            li = alg.left_mult_matrix(i)
            for j in range(dim):
                prod = li @ alg.left_mult_matrix(j)
                expected = alg.left_action_matrix(tensor[i][j])
                if prod != expected:
                    for k in range(dim):
                        if prod.col(k) != expected.col(k):
                            raise NonAssociativeError(i, j, k)
                    raise NonAssociativeError(i, j, -1)
    unity = _detect_unity(field, dim, tensor)
    return FDAlgebra(field, dim, tensor, unity, labels)


class Element:
    """An algebra element as a coordinate vector over the basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: FDAlgebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise FieldMismatchError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, vec_add(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra, self.algebra.mult_coords(self.coords, other.coords))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self.algebra.field.scalar(c)
        return Element(self.algebra, vec_scale(c, self.coords))

    def __pow__(self, e: int):
        if e < 1:
            if e == 0:
                return self.algebra.one()
            raise ValueError("negative powers are not defined")
        acc = self
        for _ in range(e - 1):
            acc = acc * self
        return acc

    def is_zero(self):
        return is_zero_vec(self.coords)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        field = self.algebra.field
        terms = [f"{field.format(c)}*{lbl}"
                 for c, lbl in zip(self.coords, self.algebra.labels) if c]
        return " + ".join(terms) if terms else "0"


class Ideal:
    """A two-sided ideal, stored as its canonical subspace."""

    __slots__ = ("algebra", "space")

    def __init__(self, algebra: FDAlgebra, space: Subspace, *, check=True):
        if space.ambient_dim != algebra.dim:
            raise DimensionMismatchError("ideal ambient dimension mismatch")
        if check and not _is_ideal(algebra, space):
            raise NotAnIdealError("subspace is not closed under multiplication by the algebra")
        self.algebra = algebra
        self.space = space

    @property
    def dim(self):
        return self.space.dim

    def __repr__(self):
        return f"Ideal(dim {self.dim} of {self.algebra.dim})"


def _is_ideal(algebra, space):
    for v in space.basis.rows:
        for i in range(algebra.dim):
            b = algebra.basis_element(i).coords
            if not space.contains(algebra.mult_coords(b, v)):
                return False
            if not space.contains(algebra.mult_coords(v, b)):
                return False
    return True


def ideal_closure(algebra: FDAlgebra, generators) -> Ideal:
    """Smallest two-sided ideal containing the generators (span saturation)."""
    vecs = [g.coords if isinstance(g, Element) else tuple(g) for g in generators]
    space = Subspace(algebra.field, algebra.dim, vecs)
    while True:
        new_vecs = list(space.basis.rows)
        grew = False
        for v in space.basis.rows:
            for i in range(algebra.dim):
                b = algebra.basis_element(i).coords
                for w in (algebra.mult_coords(b, v), algebra.mult_coords(v, b)):
                    if not space.contains(w):
                        new_vecs.append(w)
                        grew = True
        if not grew:
            return Ideal(algebra, space, check=False)
        space = Subspace(algebra.field, algebra.dim, new_vecs)


def subspace_product(algebra: FDAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of pairwise products of the two subspaces' bases."""
    gens = [algebra.mult_coords(u, v) for u in a.basis.rows for v in b.basis.rows]
    return Subspace(algebra.field, algebra.dim, gens)


def nilpotency_index(algebra: FDAlgebra, space: Subspace, cap=None):
    """Minimal t with space^t = 0, or None when no power vanishes by the cap."""
    cap = algebra.dim + 1 if cap is None else cap
    power = space
    t = 1
    while power.dim:
        if t > cap:
            return None
        nxt = subspace_product(algebra, power, space)
        if nxt.dim >= power.dim and nxt == power:
            return None
        power = nxt
        t += 1
    return t


def quotient_algebra(algebra: FDAlgebra, ideal: Ideal):
    """Quotient by a two-sided ideal.

    Returns ``(quotient, projection)`` where the projection matrix sends old
    coordinates to quotient coordinates and the quotient basis is indexed by
    the non-pivot columns of the ideal's echelon basis.
    """
    if ideal.algebra is not algebra:
        raise NotAnIdealError("ideal belongs to a different algebra")
    reps, proj = quotient_basis(ideal.space)
    q = len(reps)
    structure = []
    for a in range(q):
        row = []
        for b in range(q):
            prod = algebra.mult_coords(reps[a], reps[b])
            row.append(proj.apply(prod))
        structure.append(row)
    free_cols = ideal.space.complement_columns()
    labels = tuple(algebra.labels[j] for j in free_cols)
    quot = make_algebra(algebra.field, structure, labels)
    # surjection property: proj(xy) = proj(x) proj(y) on all basis pairs
    for i in range(algebra.dim):
        bi = algebra.basis_element(i).coords
        pi = proj.apply(bi)
        for j in range(algebra.dim):
            bj = algebra.basis_element(j).coords
            lhs = proj.apply(algebra.mult_coords(bi, bj))
            rhs = quot.mult_coords(pi, proj.apply(bj))
            if lhs != rhs:
                raise InternalCheckError("quotient projection is not multiplicative")
    return quot, proj


def subalgebra_on(algebra: FDAlgebra, space: Subspace, labels=None, unity_coords=None):
    """Realize a multiplicatively closed subspace as its own algebra.

    Returns ``(sub, basis_elements)``; ``basis_elements`` are the echelon
    basis vectors of the subspace as elements of the parent, in the order of
    the sub's own basis.  Raises when the subspace is not closed.
    """
    rows = list(space.basis.rows)
    q = len(rows)
    structure = []
    for a in range(q):
        row = []
        for b in range(q):
            prod = algebra.mult_coords(rows[a], rows[b])
            coeffs = space.coords_of(prod)
            if coeffs is None:
                raise NotAnIdealError("subspace is not multiplicatively closed")
            row.append(coeffs)
        structure.append(row)
    if labels is None:
        labels = tuple(f"s{i}" for i in range(q))
    sub = make_algebra(algebra.field, structure, labels)
    if unity_coords is not None and sub.unity is None:
        raise InternalCheckError("declared unity not detected in subalgebra")
    elements = [Element(algebra, r) for r in rows]
    return sub, elements


def sub_to_parent(space: Subspace, coords):
    """Map coordinates in the subspace basis back to ambient coordinates."""
    n = space.ambient_dim
    z = space.field.zero
    out = [z] * n
    for c, row in zip(coords, space.basis.rows):
        if c:
            for k, x in enumerate(row):
                if x:
                    out[k] = out[k] + c * x
    return tuple(out)


def direct_sum(a: FDAlgebra, b: FDAlgebra) -> FDAlgebra:
    if a.field != b.field:
        raise FieldMismatchError("direct sum over different fields")
    n, m = a.dim, b.dim
    z = a.field.zero
    structure = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            out = [z] * (n + m)
            if i < n and j < n:
                for k, c in enumerate(a.structure[i][j]):
                    out[k] = c
            elif i >= n and j >= n:
                for k, c in enumerate(b.structure[i - n][j - n]):
                    out[n + k] = c
            row.append(out)
        structure.append(row)
    labels = tuple(f"l.{x}" for x in a.labels) + tuple(f"r.{x}" for x in b.labels)
    return make_algebra(a.field, structure, labels)


def change_of_basis(algebra: FDAlgebra, t: Matrix) -> FDAlgebra:
    """Transport the structure constants along an invertible matrix.

    New basis vector i is the element with old coordinates ``t`` column i.
    """
    tinv = t.inverse()
    if tinv is None:
        raise DimensionMismatchError("change of basis matrix is singular")
    n = algebra.dim
    structure = []
    for i in range(n):
        ci = t.col(i)
        row = []
        for j in range(n):
            prod = algebra.mult_coords(ci, t.col(j))
            row.append(tinv.apply(prod))
        structure.append(row)
    return make_algebra(algebra.field, structure, algebra.labels)


def center(algebra: FDAlgebra) -> Subspace:
    """Solution space of x b_i = b_i x for every basis element."""
    n = algebra.dim
    if n == 0:
        return Subspace.zero(algebra.field, 0)
    rows = []
    for i in range(n):
        diff_rows = (algebra.left_mult_matrix(i) - algebra.right_mult_matrix(i)).rows
        rows.extend(diff_rows)
    return Matrix(algebra.field, rows, ncols=n).kernel()


def minimal_polynomial(x: Element, *, unity=None):
    """Monic minimal polynomial of x in a unital algebra (low to high)."""
    alg = x.algebra
    field = alg.field
    one = tuple(unity) if unity is not None else alg.unity
    if one is None:
        raise NoUnityError("minimal polynomial needs a unity element")
    powers = [one]
    while True:
        span = Subspace(field, alg.dim, powers)
        if span.dim < len(powers):
            break
        powers.append(alg.mult_coords(powers[-1], x.coords))
    # the last power is dependent on the previous ones: solve for it
    mat = Matrix.from_cols(field, powers[:-1], nrows=alg.dim)
    sol = mat.solve(powers[-1])
    if sol is None:
        raise InternalCheckError("dependent power did not solve")
    coeffs = [-c for c in sol] + [field.one]
    return coeffs


@dataclass
class RadicalData:
    """Radical with its nilpotency certificate and semisimplification."""

    radical: Ideal
    nilpotency_index: int
    semisimple_quotient: FDAlgebra
    quotient_map: Matrix


def _trace_gram(algebra: FDAlgebra) -> Matrix:
    n = algebra.dim
    lmats = [algebra.left_mult_matrix(i) for i in range(n)]
    rows = []
    for i in range(n):
        li = lmats[i]
        row = []
        for j in range(n):
            lj = lmats[j]
            acc = algebra.field.zero
            for r in range(n):
                for k in range(n):
                    a = li.rows[r][k]
                    if a:
                        b = lj.rows[k][r]
                        if b:
                            acc = acc + a * b
            row.append(acc)
        rows.append(row)
    return Matrix(algebra.field, rows, ncols=n)


def _adjoin_unity(algebra: FDAlgebra) -> FDAlgebra:
    n = algebra.dim
    z, o = algebra.field.zero, algebra.field.one
    structure = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            out = [z] * (n + 1)
            if i == 0:
                out[j] = o
            elif j == 0:
                out[i] = o
            else:
                for k, c in enumerate(algebra.structure[i - 1][j - 1]):
                    out[1 + k] = c
            row.append(out)
        structure.append(row)
    labels = ("u",) + tuple(algebra.labels)
    return make_algebra(algebra.field, structure, labels)


def radical(algebra: FDAlgebra, *, adjoin_unity=False) -> RadicalData:
    """Radical via the trace pairing of the left regular representation.

    Valid in characteristic 0 or p > (working dimension); smaller primes are
    rejected.  Unity is required; an algebra without one is handled by the
    explicit ``adjoin_unity`` flag, which computes in the unity extension and
    intersects back.
    """
    work = algebra
    embedded = False
    if algebra.unity is None:
        if not adjoin_unity:
            raise NoUnityError("radical needs a unity element (or adjoin_unity=True)")
        work = _adjoin_unity(algebra)
        embedded = True
    p = algebra.field.characteristic
    if p != 0 and p <= work.dim:
        raise CharacteristicTooSmallError(p, work.dim)
    gram = _trace_gram(work)
    rad_space = gram.kernel()
    if embedded:
        coord_sub = Subspace(algebra.field, work.dim,
                             [tuple(algebra.field.one if k == 1 + i else algebra.field.zero
                                    for k in range(work.dim)) for i in range(algebra.dim)])
        rad_space = rad_space.intersect(coord_sub)
        rad_space = Subspace(algebra.field, algebra.dim,
                             [r[1:] for r in rad_space.basis.rows])
    rad = Ideal(algebra, rad_space)  # closure check doubles as a certificate
    t = nilpotency_index(algebra, rad_space)
    if t is None:
        raise NotNilpotentError("trace-pairing kernel is not nilpotent")
    quot, proj = quotient_algebra(algebra, rad)
    if quot.dim:
        check = _trace_gram(quot).kernel()
        if check.dim != 0:
            raise InternalCheckError("semisimple quotient still has a radical")
    return RadicalData(rad, t, quot, proj)
