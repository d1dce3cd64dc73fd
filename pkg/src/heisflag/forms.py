"""Quadratic spaces, subspaces and flags over the rationals.

A quadratic space is an ambient dimension together with a symmetric Gram
matrix, possibly degenerate.  This module computes the classical invariants
of subspaces (signature, radical, refined line signature), the complete
orbit invariants of nested subspace pairs under the indefinite orthogonal
group, the seven intersection counts dual to them, and the constructive
orthogonal-system machinery (scaled systems, light-like splitting, null
system extension, basis extension) that powers isometry construction.

Everything here is exact.  Floating-point isometry witnesses live in
`heisflag.witness`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .linalg import Matrix, Vector, frac, vec


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


@dataclass(frozen=True)
class Signature:
    """Counts of positive, negative and zero diagonal entries after congruence."""

    pos: int
    neg: int
    nul: int

    def __post_init__(self):
        if self.pos < 0 or self.neg < 0 or self.nul < 0:
            raise ValueError("signature components must be nonnegative")

    @property
    def dim(self) -> int:
        return self.pos + self.neg + self.nul

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.pos, self.neg, self.nul)

    def __str__(self) -> str:
        return f"({self.pos}, {self.neg}, {self.nul})"


class LineSignature(enum.Enum):
    """Signature of a line inside a subspace, with the null case refined.

    A null line is RADICAL when it lies in the radical of the surrounding
    subspace and LIGHTLIKE when it is null but meets the radical trivially.
    """

    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    RADICAL = "radical"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class QuadraticSpace:
    """Ambient dimension plus a symmetric (possibly degenerate) Gram matrix."""

    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        g = [list(row) for row in self.gram]
        if not linalg.is_symmetric(g):
            raise PreconditionError("Gram matrix must be square and symmetric")

    @classmethod
    def from_matrix(cls, gram: Sequence[Sequence]) -> "QuadraticSpace":
        return cls(tuple(tuple(frac(x) for x in row) for row in gram))

    @classmethod
    def standard(cls, p: int, q: int) -> "QuadraticSpace":
        """The standard space of signature (p, q): Gram = diag(+1 x p, -1 x q)."""
        if p < 0 or q < 0 or p + q == 0:
            raise PreconditionError("standard space needs p, q >= 0 with p + q >= 1")
        return cls.from_matrix(linalg.diag([1] * p + [-1] * q))

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def gram_matrix(self) -> Matrix:
        return [list(row) for row in self.gram]

    def inner(self, x: Vector, y: Vector) -> Fraction:
        if len(x) != self.dim or len(y) != self.dim:
            raise linalg.ShapeError("vector length does not match ambient dimension")
        return sum(xi * sum(g * yj for g, yj in zip(row, y))
                   for xi, row in zip(x, self.gram))

    def is_nondegenerate(self) -> bool:
        return linalg.det(self.gram_matrix) != 0

    def ambient_radical(self) -> "Subspace":
        return Subspace(self.dim, tuple(linalg.kernel(self.gram_matrix)))


@dataclass(frozen=True)
class Subspace:
    """Span of linearly independent vectors inside a fixed ambient dimension."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise linalg.ShapeError("basis vector has wrong length")
        if self.basis and linalg.rank([list(v) for v in self.basis]) != len(self.basis):
            raise PreconditionError("basis vectors must be linearly independent")

    @classmethod
    def spanned_by(cls, vectors: Sequence[Sequence], ambient_dim: int | None = None) -> "Subspace":
        """Span of arbitrary vectors; dependent ones are dropped."""
        vecs = [vec(v) for v in vectors]
        if ambient_dim is None:
            if not vecs:
                raise linalg.ShapeError("ambient dimension needed for an empty span")
            ambient_dim = len(vecs[0])
        return cls(ambient_dim, tuple(linalg.row_space(vecs)))

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Sequence[int]) -> "Subspace":
        rows = []
        for i in indices:
            row = [Fraction(0)] * ambient_dim
            row[i] = Fraction(1)
            rows.append(tuple(row))
        return cls(ambient_dim, tuple(rows))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.coordinate(ambient_dim, range(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vector) -> bool:
        return linalg.in_span(v, self.basis)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates_of(self, v: Vector) -> Vector:
        """Coefficients of v in this basis; raises if v lies outside."""
        cols = [[bv[i] for bv in self.basis] for i in range(self.ambient_dim)]
        coeffs = linalg.solve(cols, v)
        if coeffs is None:
            raise PreconditionError("vector does not lie in the subspace")
        return coeffs

    def canonical_key(self) -> tuple:
        return tuple(linalg.row_space(list(self.basis)))


@dataclass(frozen=True)
class Flag:
    """A nested pair of subspaces small < big of a common ambient space."""

    small: Subspace
    big: Subspace

    def __post_init__(self):
        if self.small.ambient_dim != self.big.ambient_dim:
            raise linalg.ShapeError("flag parts live in different ambient spaces")
        if not self.small.dim < self.big.dim <= self.big.ambient_dim:
            raise PreconditionError("flag needs dim(small) < dim(big) <= ambient")
        if not self.big.contains_subspace(self.small):
            raise PreconditionError("small subspace is not contained in the big one")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.small.dim, self.big.dim)


@dataclass(frozen=True)
class FlagInvariants:
    """Complete orbit data of a flag: two signatures plus one intersection dimension."""

    sig_big: Signature
    sig_small: Signature
    dim_small_cap_rad: int


@dataclass(frozen=True)
class MatsukiData:
    """Seven intersection counts with the coordinate axes splitting.

    For a flag (V_1, V_{n-2}) and the coordinate subspaces U+ (first p axes)
    and U- (last q axes): c* count intersections of the big part, d* of the
    line, and d_pm measures the line against (big cap U+) + (big cap U-).
    """

    c_plus: int
    c_minus: int
    c_zero: int
    d_plus: int
    d_minus: int
    d_zero: int
    d_pm: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.c_plus, self.c_minus, self.c_zero,
                self.d_plus, self.d_minus, self.d_zero, self.d_pm)


@dataclass(frozen=True)
class ScaledSystem:
    """Pairwise orthogonal vectors whose norms realize a signature pattern.

    Norms are arbitrary rationals of the correct signs, positive first, then
    negative, then zero; the zero-norm vectors span the radical of the span.
    """

    vectors: tuple[Vector, ...]
    norms: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.vectors) != len(self.norms):
            raise linalg.ShapeError("one norm per vector required")
        order = [0 if x > 0 else (1 if x < 0 else 2) for x in self.norms]
        if order != sorted(order):
            raise PreconditionError("norms must come positive, then negative, then zero")

    @property
    def signature(self) -> Signature:
        pos = sum(1 for x in self.norms if x > 0)
        neg = sum(1 for x in self.norms if x < 0)
        return Signature(pos, neg, len(self.norms) - pos - neg)

    def positives(self) -> list[Vector]:
        return [v for v, m in zip(self.vectors, self.norms) if m > 0]

    def negatives(self) -> list[Vector]:
        return [v for v, m in zip(self.vectors, self.norms) if m < 0]

    def nulls(self) -> list[Vector]:
        return [v for v, m in zip(self.vectors, self.norms) if m == 0]

    def check(self, space: QuadraticSpace) -> None:
        """Verify orthogonality and the stored norms against a space, exactly."""
        for i, v in enumerate(self.vectors):
            if space.inner(v, v) != self.norms[i]:
                raise PreconditionError(f"vector {i} has wrong norm")
            for j in range(i + 1, len(self.vectors)):
                if space.inner(v, self.vectors[j]) != 0:
                    raise PreconditionError(f"vectors {i}, {j} are not orthogonal")


# ---------------------------------------------------------------------------
# restriction, signature, radical


def restrict(space: QuadraticSpace, w: Subspace) -> Matrix:
    """Gram matrix of the form restricted to W, in the given basis of W."""
    if w.ambient_dim != space.dim:
        raise linalg.ShapeError("subspace ambient dimension mismatch")
    if w.dim == 0:
        return []
    rows = [list(v) for v in w.basis]
    paired = linalg.mat_mul(rows, space.gram_matrix)
    return linalg.mat_mul(paired, linalg.transpose(rows))


def signature(space: QuadraticSpace, w: Subspace | None = None) -> Signature:
    """Signature of the form on W (or on the whole space), basis independent."""
    if w is None:
        w = Subspace.full(space.dim)
    res = linalg.congruence_diagonalize(restrict(space, w))
    return Signature(*res.sign_counts())


def radical(space: QuadraticSpace, w: Subspace | None = None) -> Subspace:
    """The subspace {v in W : <v, x> = 0 for all x in W}, in ambient coordinates."""
    if w is None:
        w = Subspace.full(space.dim)
    if w.dim == 0:
        return Subspace(space.dim, ())
    coeff_kernel = linalg.kernel(restrict(space, w))
    ambient = [tuple(sum(c * bv[i] for c, bv in zip(coeffs, w.basis))
                     for i in range(space.dim))
               for coeffs in coeff_kernel]
    return Subspace(space.dim, tuple(linalg.row_space(ambient)))


def refined_line_signature(space: QuadraticSpace, v_sub: Subspace, line: Subspace) -> LineSignature:
    """Classify a line inside V as spacelike, timelike, lightlike or radical."""
    if line.dim != 1:
        raise PreconditionError("refined signature is defined for lines only")
    if v_sub.dim < 2:
        raise PreconditionError("surrounding subspace must have dimension >= 2")
    if not v_sub.contains_subspace(line):
        raise PreconditionError("line does not lie in the surrounding subspace")
    v = line.basis[0]
    norm = space.inner(v, v)
    if norm > 0:
        return LineSignature.SPACELIKE
    if norm < 0:
        return LineSignature.TIMELIKE
    if all(space.inner(v, b) == 0 for b in v_sub.basis):
        return LineSignature.RADICAL
    return LineSignature.LIGHTLIKE


# ---------------------------------------------------------------------------
# flag orbit invariants


def flag_invariants(space: QuadraticSpace, f: Flag) -> FlagInvariants:
    """The complete orbit invariants of a flag under the isometry group.

    Requires a nondegenerate ambient form; returns the signatures of both
    flag parts plus dim(small cap rad(big)).
    """
    if f.big.ambient_dim != space.dim:
        raise linalg.ShapeError("flag ambient dimension mismatch")
    if not space.is_nondegenerate():
        raise PreconditionError("flag invariants require a nondegenerate ambient form")
    rad_big = radical(space, f.big)
    cap = linalg.intersect(list(f.small.basis), list(rad_big.basis)) if rad_big.dim else []
    return FlagInvariants(
        sig_big=signature(space, f.big),
        sig_small=signature(space, f.small),
        dim_small_cap_rad=len(cap),
    )


def flags_equivalent(space: QuadraticSpace, f1: Flag, f2: Flag) -> bool:
    """True iff the two flags lie in one orbit of the isometry group."""
    if f1.shape != f2.shape:
        raise linalg.ShapeError(f"flag shapes differ: {f1.shape} vs {f2.shape}")
    return flag_invariants(space, f1) == flag_invariants(space, f2)


def matsuki_data(f: Flag, p: int, q: int) -> MatsukiData:
    """The seven coordinate-splitting counts of a flag of type (1, p+q-2)."""
    n = p + q
    if f.big.ambient_dim != n:
        raise linalg.ShapeError("flag ambient dimension is not p + q")
    if f.shape != (1, n - 2):
        raise linalg.ShapeError("seven-count data is defined for flags of type (1, n-2)")
    u_plus = Subspace.coordinate(n, range(p))
    u_minus = Subspace.coordinate(n, range(p, n))
    big, small = list(f.big.basis), list(f.small.basis)
    big_plus = linalg.intersect(big, list(u_plus.basis))
    big_minus = linalg.intersect(big, list(u_minus.basis))
    c_plus, c_minus = len(big_plus), len(big_minus)
    d_plus = len(linalg.intersect(small, list(u_plus.basis)))
    d_minus = len(linalg.intersect(small, list(u_minus.basis)))
    direct_sum = big_plus + big_minus
    d_pm = len(linalg.intersect(small, direct_sum)) if direct_sum else 0
    return MatsukiData(c_plus, c_minus, n - 2 - c_plus - c_minus,
                       d_plus, d_minus, 1 - d_plus - d_minus, d_pm)


# ---------------------------------------------------------------------------
# possible signature sets


def possible_codim2_signatures(p: int, q: int) -> set[Signature]:
    """All signatures realized by codimension-two subspaces of the standard (p, q) space."""
    if p + q < 2:
        raise PreconditionError("need p + q >= 2")
    candidates = [
        (p - 2, q, 0), (p - 1, q - 1, 0), (p, q - 2, 0),
        (p - 2, q - 1, 1), (p - 1, q - 2, 1), (p - 2, q - 2, 2),
    ]
    return {Signature(*c) for c in candidates if min(c) >= 0}


def possible_line_signatures(s: int, t: int, u: int) -> set[LineSignature]:
    """All refined line signatures occurring inside a subspace of signature (s, t, u)."""
    if s < 0 or t < 0 or u < 0 or s + t + u < 1:
        raise PreconditionError("need a valid signature with positive dimension")
    out = set()
    if s >= 1:
        out.add(LineSignature.SPACELIKE)
    if t >= 1:
        out.add(LineSignature.TIMELIKE)
    if s >= 1 and t >= 1:
        out.add(LineSignature.LIGHTLIKE)
    if u >= 1:
        out.add(LineSignature.RADICAL)
    return out


# ---------------------------------------------------------------------------
# constructive orthogonal systems


def _first_nonzero_index(v: Vector) -> int:
    return next((i for i, x in enumerate(v) if x != 0), len(v))


def scaled_system(space: QuadraticSpace, w: Subspace) -> ScaledSystem:
    """Orthogonal basis of W with norms ordered positive, negative, zero.

    The zero-norm vectors automatically span the radical of W.  Within each
    sign group, vectors are ordered by the position of their first nonzero
    coordinate, which makes the output deterministic.
    """
    basis = linalg.lll_reduce(list(w.basis)) if w.dim else []
    res = linalg.congruence_diagonalize(
        restrict(space, Subspace(space.dim, tuple(basis))) if basis else [])
    k = w.dim
    cols = []
    for j in range(k):
        coeffs = [res.transform[i][j] for i in range(k)]
        ambient = tuple(sum(c * bv[i] for c, bv in zip(coeffs, basis))
                        for i in range(space.dim))
        reduced = linalg.primitive_vector(ambient)
        cols.append((reduced, space.inner(reduced, reduced)))
    ordered = sorted(
        cols,
        key=lambda vm: (0 if vm[1] > 0 else (1 if vm[1] < 0 else 2),
                        _first_nonzero_index(vm[0])),
    )
    return ScaledSystem(tuple(v for v, _ in ordered), tuple(m for _, m in ordered))


def lightlike_split(space: QuadraticSpace, v_sub: Subspace, v: Vector) -> tuple[Vector, Vector]:
    """Split a null vector v (outside rad V) as v = v_plus + v_minus.

    The two parts lie in V, are orthogonal, and have opposite nonzero norms
    of equal magnitude.  With w in V pairing nontrivially against v, the
    vector h := 2<v,w> w - <w,w> v is null with <v, h> != 0, so (v +- h)/2
    is the wanted pair up to orientation; h is kept as a primitive integer
    vector so entries stay small.  No square roots are needed.
    """
    if linalg.is_zero_vector(v):
        raise PreconditionError("cannot split the zero vector")
    if not v_sub.contains(v):
        raise PreconditionError("vector does not lie in the subspace")
    if space.inner(v, v) != 0:
        raise PreconditionError("vector is not null")
    w = next((b for b in v_sub.basis if space.inner(v, b) != 0), None)
    if w is None:
        raise PreconditionError("vector lies in the radical of the subspace")
    c = space.inner(v, w)
    d = space.inner(w, w)
    h = linalg.primitive_vector(linalg.vec_sub(linalg.vec_scale(2 * c, w),
                                               linalg.vec_scale(d, v)))
    if space.inner(v, h) < 0:
        h = linalg.vec_scale(-1, h)
    half = Fraction(1, 2)
    plus = linalg.vec_scale(half, linalg.vec_add(v, h))
    minus = linalg.vec_scale(half, linalg.vec_sub(v, h))
    return plus, minus


def _perp_within(space: QuadraticSpace, ambient_sub: Subspace, vectors: Sequence[Vector]) -> Subspace:
    """{u in ambient_sub : <u, v> = 0 for all given v}, in ambient coordinates."""
    if not vectors:
        return ambient_sub
    pairing = [[space.inner(v, b) for b in ambient_sub.basis] for v in vectors]
    coeff_kernel = linalg.kernel(pairing)
    ambient = [tuple(sum(c * bv[i] for c, bv in zip(coeffs, ambient_sub.basis))
                     for i in range(space.dim))
               for coeffs in coeff_kernel]
    return Subspace(space.dim, tuple(linalg.lll_reduce(linalg.row_space(ambient))))


def _split_nulls_within(space: QuadraticSpace, start: Subspace,
                        nulls: Sequence[Vector]) -> tuple[list[tuple[Vector, Vector]], Subspace]:
    """Split each null vector into a +1/-1 pair inside `start`, peeling off planes.

    Returns the list of (plus, minus) pairs with nulls[i] = plus + minus and
    the orthogonal complement of all the planes within `start`.
    """
    current = start
    pairs = []
    for i, w in enumerate(nulls):
        rest = list(nulls[i + 1:])
        arena = _perp_within(space, current, rest)
        plus, minus = lightlike_split(space, arena, w)
        pairs.append((plus, minus))
        current = _perp_within(space, current, [plus, minus])
    return pairs, current


def extend_nullsystem(space: QuadraticSpace, nulls: Sequence[Vector]) -> ScaledSystem:
    """Extend pairwise-orthogonal independent null vectors to a full scaled basis.

    The ambient form must be nondegenerate.  The result lists positives
    x_1..x_p then negatives y_1..y_q, with nulls[i] = x_i + y_i exactly and
    <x_i, x_i> = -<y_i, y_i> > 0 for the split pairs.
    """
    nulls = [vec(v) for v in nulls]
    if not space.is_nondegenerate():
        raise PreconditionError("ambient form must be nondegenerate")
    if nulls:
        if linalg.rank([list(v) for v in nulls]) != len(nulls):
            raise PreconditionError("null vectors must be independent")
        for i, a in enumerate(nulls):
            for b in nulls[i:]:
                if space.inner(a, b) != 0:
                    raise PreconditionError("null vectors must be pairwise orthogonal and null")
    pairs, remainder = _split_nulls_within(space, Subspace.full(space.dim), nulls)
    fill = scaled_system(space, remainder) if remainder.dim else ScaledSystem((), ())
    if fill.signature.nul:
        raise PreconditionError("ambient form must be nondegenerate")
    xs = [p for p, _ in pairs] + fill.positives()
    ys = [m for _, m in pairs] + fill.negatives()
    pos_norms = [space.inner(p, p) for p, _ in pairs] + [m for m in fill.norms if m > 0]
    neg_norms = [space.inner(m, m) for _, m in pairs] + [m for m in fill.norms if m < 0]
    return ScaledSystem(tuple(xs + ys), tuple(pos_norms + neg_norms))


def extend_basis(space: QuadraticSpace, w: Subspace, w_system: ScaledSystem) -> ScaledSystem:
    """Extend a scaled system of W to one of the whole space.

    The input must realize the signature of W, with its null vectors ordered
    so the ones lying in the ambient radical come last.  Writing the input as
    x_1..x_s, y_1..y_t, z_1..z_u (k of the z's ambient-radical), the output
    alpha_1..alpha_p, beta_1..beta_q, gamma_1..gamma_r satisfies

        x_i = alpha_i,  y_i = beta_i,
        z_i = alpha_{s+i} + beta_{t+i}   (i <= u - k),
        z_{u-k+i} = gamma_i              (i <= k).
    """
    n = space.dim
    if w.ambient_dim != n:
        raise linalg.ShapeError("subspace ambient dimension mismatch")
    w_system.check(space)
    if len(w_system.vectors) != w.dim or not all(w.contains(v) for v in w_system.vectors):
        raise PreconditionError("system is not a basis of the subspace")

    xs = w_system.positives()
    ys = w_system.negatives()
    zs = w_system.nulls()
    s, t, u = len(xs), len(ys), len(zs)

    rad_v = space.ambient_radical()
    in_rad = [rad_v.contains(z) for z in zs]
    k = sum(in_rad)
    if in_rad != [False] * (u - k) + [True] * k:
        raise PreconditionError("ambient-radical null vectors must come last")
    z_split, z_rad = zs[: u - k], zs[u - k:]

    # complement U of the ambient radical containing the non-radical part
    seed = xs + ys + z_split
    target = n - rad_v.dim
    pool = [vec(row) for row in linalg.identity(n)]
    u_basis = []
    for cand in seed + pool:
        trial = u_basis + [cand] + list(rad_v.basis)
        if linalg.rank([list(x) for x in trial]) == len(u_basis) + 1 + rad_v.dim:
            u_basis.append(cand)
        if len(u_basis) == target:
            break
    if len(u_basis) != target:
        raise PreconditionError("could not complement the ambient radical")
    u_sub = Subspace(n, tuple(u_basis))

    arena = _perp_within(space, u_sub, xs + ys)
    pairs, remainder = _split_nulls_within(space, arena, z_split)
    fill = scaled_system(space, remainder) if remainder.dim else ScaledSystem((), ())
    if fill.signature.nul:
        raise PreconditionError("complement of the radical is unexpectedly degenerate")

    gammas = linalg.extend_to_independent(z_rad, list(rad_v.basis), rad_v.dim)

    alphas = xs + [p for p, _ in pairs] + fill.positives()
    betas = ys + [m for _, m in pairs] + fill.negatives()
    pos_norms = ([m for m in w_system.norms if m > 0]
                 + [space.inner(p, p) for p, _ in pairs]
                 + [m for m in fill.norms if m > 0])
    neg_norms = ([m for m in w_system.norms if m < 0]
                 + [space.inner(m, m) for _, m in pairs]
                 + [m for m in fill.norms if m < 0])
    return ScaledSystem(tuple(alphas + betas + gammas),
                        tuple(pos_norms + neg_norms + [Fraction(0)] * len(gammas)))


def subspaces_equivalent(space: QuadraticSpace, u_sub: Subspace, w_sub: Subspace) -> bool:
    """True iff some linear isometry of the space maps one subspace onto the other.

    Works for degenerate ambient forms: the criterion is equal signatures
    plus equal intersection dimension with the ambient radical.
    """
    if u_sub.ambient_dim != space.dim or w_sub.ambient_dim != space.dim:
        raise linalg.ShapeError("subspace ambient dimension mismatch")
    if signature(space, u_sub) != signature(space, w_sub):
        return False
    rad_v = space.ambient_radical()
    if not rad_v.dim:
        return True
    cap_u = len(linalg.intersect(list(u_sub.basis), list(rad_v.basis)))
    cap_w = len(linalg.intersect(list(w_sub.basis), list(rad_v.basis)))
    return cap_u == cap_w
