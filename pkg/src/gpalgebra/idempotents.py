"""Complete orthogonal idempotent sets, block decompositions, lifting.

A complete set of pairwise orthogonal idempotents turns an algebra into a
grid of blocks ``A_ij = e_i A e_j`` whose pairwise products respect the grid.
This module validates such sets, computes the block grid, lifts idempotents
through a nilpotent ideal, and splits a semisimple algebra into its simple
two-sided summands via primitive idempotents of the center.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .algebra import (
    Element,
    FDAlgebra,
    Ideal,
    center,
    minimal_polynomial,
    nilpotency_index,
    quotient_algebra,
    radical,
    sub_to_parent,
    subalgebra_on,
)
from .errors import (
    BadPartitionError,
    InternalCheckError,
    InvalidIdempotentSetError,
    LiftDivergedError,
    NoUnityError,
    NotNilpotentError,
    NotSemisimpleError,
    SplittingFailedError,
)
from .linalg import Matrix, Subspace, is_zero_vec
from .polynomials import (
    poly_divmod,
    poly_ext_gcd,
    poly_mul,
    roots_in_field,
    trim,
)


class IdempotentSet:
    """A validated complete set of pairwise orthogonal idempotents."""

    __slots__ = ("algebra", "idempotents")

    def __init__(self, algebra: FDAlgebra, elements, *, check=True):
        elements = tuple(e if isinstance(e, Element) else algebra.element(e) for e in elements)
        if check:
            _validate(algebra, elements)
        self.algebra = algebra
        self.idempotents = elements

    def __len__(self):
        return len(self.idempotents)

    def __iter__(self):
        return iter(self.idempotents)

    def __getitem__(self, i):
        return self.idempotents[i]

    def total(self) -> Element:
        acc = self.algebra.zero()
        for e in self.idempotents:
            acc = acc + e
        return acc

    def __repr__(self):
        return f"IdempotentSet({len(self.idempotents)} idempotents in dim {self.algebra.dim})"


def _validate(algebra, elements):
    for e in elements:
        if e.is_zero():
            raise InvalidIdempotentSetError("zero-element", "a candidate is zero")
    for a, ea in enumerate(elements):
        for b, eb in enumerate(elements):
            prod = ea * eb
            want = ea if a == b else algebra.zero()
            if prod != want:
                raise InvalidIdempotentSetError(
                    "orthogonality", f"e[{a}]*e[{b}] is not {'e[%d]' % a if a == b else '0'}")
    s = elements[0]
    for e in elements[1:]:
        s = s + e
    for i in range(algebra.dim):
        b = algebra.basis_element(i)
        if s * b != b or b * s != b:
            raise InvalidIdempotentSetError(
                "completeness", f"sum does not act as unity on basis element {i}")
    if algebra.unity is not None and s.coords != algebra.unity:
        raise InvalidIdempotentSetError("sum", "sum of the set differs from the unity element")


def validate_complete_set(algebra: FDAlgebra, candidates) -> IdempotentSet:
    """Check all defining conditions and return the validated set."""
    return IdempotentSet(algebra, candidates)


@dataclass
class GmDecomposition:
    """Block grid A_ij = e_i A e_j induced by a complete idempotent set."""

    algebra: FDAlgebra
    unit: IdempotentSet
    blocks: dict = dc_field(default_factory=dict)

    @property
    def index_set(self):
        return range(len(self.unit))

    def block(self, i, j) -> Subspace:
        return self.blocks[(i, j)]

    def block_dims(self):
        n = len(self.unit)
        return [[self.blocks[(i, j)].dim for j in range(n)] for i in range(n)]


def gm_decompose(algebra: FDAlgebra, idems: IdempotentSet) -> GmDecomposition:
    """Compute the block grid and verify the grid laws exactly.

    Checks that the blocks sum directly to the whole algebra and that block
    products land where the grid says (zero unless the inner indices meet).
    """
    if idems.algebra is not algebra:
        raise InvalidIdempotentSetError("completeness", "idempotents belong to a different algebra")
    n = len(idems)
    blocks = {}
    total = 0
    for i in range(n):
        for j in range(n):
            gens = []
            for b in range(algebra.dim):
                x = idems[i] * algebra.basis_element(b) * idems[j]
                gens.append(x.coords)
            blocks[(i, j)] = Subspace(algebra.field, algebra.dim, gens)
            total += blocks[(i, j)].dim
    if total != algebra.dim:
        raise InvalidIdempotentSetError("completeness",
                                        f"block dimensions sum to {total}, not {algebra.dim}")
    for (i, j), bij in blocks.items():
        for (s, t), bst in blocks.items():
            target = blocks[(i, t)]
            for u in bij.basis.rows:
                for v in bst.basis.rows:
                    prod = algebra.mult_coords(u, v)
                    if j != s:
                        if not is_zero_vec(prod):
                            raise InternalCheckError(
                                f"block ({i},{j})*({s},{t}) is nonzero")
                    elif not target.contains(prod):
                        raise InternalCheckError(
                            f"block ({i},{j})*({s},{t}) leaves block ({i},{t})")
    return GmDecomposition(algebra, idems, blocks)


def merge_idempotents(idems: IdempotentSet, partition) -> IdempotentSet:
    """Sum the set along a partition of its index set."""
    n = len(idems)
    seen = []
    for group in partition:
        if not group:
            raise BadPartitionError("empty group")
        seen.extend(group)
    if sorted(seen) != list(range(n)):
        raise BadPartitionError("partition does not cover the index set exactly once")
    merged = []
    for group in partition:
        acc = idems.algebra.zero()
        for i in group:
            acc = acc + idems[i]
        merged.append(acc)
    return IdempotentSet(idems.algebra, merged)


# -- lifting through a nilpotent ideal --------------------------------------

_REFINE_CAP = 64


def _refine_idempotent(e: Element):
    """Iterate e <- 3e^2 - 2e^3 until e^2 = e (quadratic convergence)."""
    for _ in range(_REFINE_CAP):
        sq = e * e
        if sq == e:
            return e
        e = 3 * sq - 2 * (sq * e)
    raise LiftDivergedError("idempotent refinement did not converge")


def lift_idempotents(algebra: FDAlgebra, nilpotent_ideal: Ideal,
                     residual: IdempotentSet, quotient_map: Matrix = None) -> IdempotentSet:
    """Lift a complete set from the quotient by a nilpotent ideal.

    Preimages are refined to exact idempotents and then orthogonalized
    sequentially; each lift projects back onto its residual idempotent.
    """
    if nilpotency_index(algebra, nilpotent_ideal.space) is None:
        raise NotNilpotentError("ideal is not nilpotent")
    if quotient_map is None:
        quot, quotient_map = quotient_algebra(algebra, nilpotent_ideal)
    else:
        quot = residual.algebra
    if residual.algebra.dim != quotient_map.nrows:
        raise InvalidIdempotentSetError("completeness",
                                        "residual set does not live in the stated quotient")
    lifted = []
    done = []
    for e in residual:
        pre = quotient_map.solve(e.coords)
        if pre is None:
            raise InvalidIdempotentSetError("completeness",
                                            "residual idempotent has no preimage")
        x = _refine_idempotent(algebra.element(pre))
        # orthogonalize against the lifts collected so far, then re-refine
        s = algebra.zero()
        for f in done:
            s = s + f
        x = x - s * x - x * s + s * (x * s)
        x = _refine_idempotent(x)
        done.append(x)
        lifted.append(x)
    out = IdempotentSet(algebra, lifted)
    for e, f in zip(residual, lifted):
        if quotient_map.apply(f.coords) != e.coords:
            raise InternalCheckError("lift does not project onto its residual idempotent")
    return out


# -- splitting a semisimple algebra into simple summands ---------------------


def _poly_eval_element(coeffs, x: Element, unity: Element) -> Element:
    acc = x.algebra.zero()
    for c in reversed(coeffs):
        acc = acc * x + c * unity
    return acc


def _split_once(corner: FDAlgebra, rng, budget):
    """Find orthogonal idempotents summing to 1 in a corner algebra.

    Works through candidate elements: whenever the minimal polynomial has at
    least two coprime factors with at least one root in the ground field, the
    corresponding polynomial interpolants evaluate to a nontrivial idempotent
    split.  Returns None when the corner resisted ``budget`` candidates.
    """
    one = corner.one()
    candidates = list(corner.basis())
    tried = 0
    while tried < budget:
        if candidates:
            x = candidates.pop(0)
        else:
            x = corner.element([rng.randrange(-3, 4) for _ in range(corner.dim)])
        tried += 1
        mp = minimal_polynomial(x)
        if len(mp) - 1 < 2:
            continue
        roots = roots_in_field(mp, corner.field)
        if not roots:
            continue
        fld = corner.field
        if len(roots) == len(mp) - 1:
            # fully split: classical interpolation idempotents
            idems = []
            for r in roots:
                num = [fld.one]
                denom = fld.one
                for s in roots:
                    if s == r:
                        continue
                    num = poly_mul(num, [-s, fld.one], fld)
                    denom = denom * (r - s)
                coeffs = [c / denom for c in num]
                idems.append(_poly_eval_element(coeffs, x, one))
            return idems
        # partial split against the rootless cofactor
        lin = [fld.one]
        for r in roots:
            lin = poly_mul(lin, [-r, fld.one], fld)
        cof, rem = poly_divmod(mp, lin, fld)
        if trim(rem):
            continue  # repeated roots: not the semisimple shape we rely on
        g, u, v = poly_ext_gcd(lin, cof, fld)
        if len(g) != 1:
            continue
        e = _poly_eval_element(poly_mul(u, lin, fld), x, one)
        if e.is_zero() or e == one:
            continue
        return [e, one - e]
    return None


def orthogonal_primitive_idempotents(algebra: FDAlgebra, seed=0, budget=32):
    """Refine the unity into idempotents whose corners are 1-dimensional.

    Raises SplittingFailedError when a corner of dimension > 1 admits no
    split within the candidate budget.
    """
    if algebra.unity is None:
        raise NoUnityError("splitting needs a unity element")
    rng = random.Random(seed)
    finished = []
    work = [algebra.one()]
    while work:
        e = work.pop(0)
        corner_space = Subspace(algebra.field, algebra.dim,
                                [(e * b * e).coords for b in algebra.basis()])
        if corner_space.dim == 1:
            finished.append(e)
            continue
        corner, corner_basis = subalgebra_on(algebra, corner_space)
        split = _split_once(corner, rng, budget)
        if split is None:
            raise SplittingFailedError(budget)
        for part in split:
            if part * part != part:
                raise InternalCheckError("splitting produced a non-idempotent; "
                                         "input is not semisimple")
            amb = sub_to_parent(corner_space, part.coords)
            work.append(algebra.element(amb))
    return finished


@dataclass
class WedderburnData:
    """Simple two-sided summands of a semisimple algebra."""

    algebra: FDAlgebra
    central_idempotents: IdempotentSet
    blocks: list          # FDAlgebra per summand
    block_spaces: list    # Subspace of the ambient algebra per summand
    n_blocks: int


def wedderburn_blocks(semisimple: FDAlgebra, seed=0, budget=32) -> WedderburnData:
    """Split a unital semisimple algebra along its central idempotents.

    The center is commutative semisimple, so primitive idempotents of the
    center are found by minimal-polynomial splitting; the resulting set is
    canonical (sorted by coordinates), independent of the seed.
    """
    if semisimple.unity is None:
        raise NoUnityError("block decomposition needs a unity element")
    rd = radical(semisimple)
    if rd.radical.dim != 0:
        raise NotSemisimpleError(f"radical has dimension {rd.radical.dim}")
    z_space = center(semisimple)
    zc, z_basis = subalgebra_on(semisimple, z_space)
    prim = orthogonal_primitive_idempotents(zc, seed=seed, budget=budget)
    ambient = [semisimple.element(sub_to_parent(z_space, e.coords)) for e in prim]
    ambient.sort(key=lambda e: tuple(semisimple.field.sort_key(c) for c in e.coords))
    idems = IdempotentSet(semisimple, ambient)
    blocks = []
    spaces = []
    for e in idems:
        space = Subspace(semisimple.field, semisimple.dim,
                         [(e * b).coords for b in semisimple.basis()])
        blk, _ = subalgebra_on(semisimple, space,
                               labels=None, unity_coords=None)
        if blk.unity is None:
            raise InternalCheckError("simple summand lost its unity")
        blocks.append(blk)
        spaces.append(space)
    if sum(b.dim for b in blocks) != semisimple.dim:
        raise InternalCheckError("block dimensions do not sum to the algebra dimension")
    return WedderburnData(semisimple, idems, blocks, spaces, len(blocks))


def is_primitive(algebra: FDAlgebra, e: Element, seed=0) -> bool:
    """Whether e admits no splitting into two orthogonal nonzero idempotents.

    Certified through the corner algebra: e is primitive iff the corner
    modulo its radical is one-dimensional (a single ground-field block).
    """
    if e.is_zero() or e * e != e:
        return False
    corner_space = Subspace(algebra.field, algebra.dim,
                            [(e * b * e).coords for b in algebra.basis()])
    corner, _ = subalgebra_on(algebra, corner_space)
    rd = radical(corner)
    return rd.semisimple_quotient.dim == 1
