"""Classification of inner products on h3 + R^(n-3) up to scaling and automorphisms.

The Lie algebra is spanned by e_0, ..., e_{n-1} (indices 0-based) with the
single nonzero bracket [e_{n-2}, e_{n-1}] = e_0.  Its center is spanned by
the first n-2 basis vectors and its derived ideal by e_0.  An inner product
of signature (p, q) with p + q = n >= 4 is classified, up to a nonzero scale
and a Lie algebra automorphism, by the signature of its restriction to the
center together with the refined line signature of the derived ideal inside
the center.  The admissible pairs form a fixed 21-row taxonomy; which rows
occur for a given (p, q) is derived from the possible-signature sets, never
hardcoded.

The scaling-and-automorphism group acts through the invertible block upper
triangular matrices of block sizes (1, n-3, 2); `parabolic_sample` draws
exact rational elements and splits them into scale times automorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .forms import (
    Flag,
    LineSignature,
    PreconditionError,
    QuadraticSpace,
    Signature,
    Subspace,
    possible_codim2_signatures,
    possible_line_signatures,
    refined_line_signature,
    signature,
)
from .linalg import Matrix, Vector, frac


class UnsupportedSignatureError(PreconditionError):
    """Signature outside the scope of the classification (q = 0 or n = 3)."""


@dataclass(frozen=True)
class HeisenbergAlgebra:
    """h3 + R^(n-3): two-step nilpotent, one bracket [e_{n-2}, e_{n-1}] = e_0."""

    n: int

    def __post_init__(self):
        if self.n < 4:
            raise UnsupportedSignatureError(
                "the n = 3 Heisenberg algebra is out of scope; need n >= 4")

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a coefficient vector."""
        out = [Fraction(0)] * self.n
        if (i, j) == (self.n - 2, self.n - 1):
            out[0] = Fraction(1)
        elif (i, j) == (self.n - 1, self.n - 2):
            out[0] = Fraction(-1)
        return tuple(out)

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """[x, y] for coefficient vectors, bilinear in both slots."""
        coef = x[self.n - 2] * y[self.n - 1] - x[self.n - 1] * y[self.n - 2]
        out = [Fraction(0)] * self.n
        out[0] = coef
        return tuple(out)

    @property
    def center(self) -> Subspace:
        return Subspace.coordinate(self.n, range(self.n - 2))

    @property
    def derived_ideal(self) -> Subspace:
        return Subspace.coordinate(self.n, [0])


# ---------------------------------------------------------------------------
# the 21-row taxonomy

# center signature patterns relative to (p, q), in fixed row-group order
_PATTERNS: list[tuple[int, int, int]] = [
    (-2, 0, 0),   # (p-2, q,   0)
    (-1, -1, 0),  # (p-1, q-1, 0)
    (0, -2, 0),   # (p,   q-2, 0)
    (-2, -1, 1),  # (p-2, q-1, 1)
    (-1, -2, 1),  # (p-1, q-2, 1)
    (-2, -2, 2),  # (p-2, q-2, 2)
]

_REFINED_ORDER = [LineSignature.SPACELIKE, LineSignature.TIMELIKE,
                  LineSignature.LIGHTLIKE, LineSignature.RADICAL]


@dataclass(frozen=True)
class MetricClass:
    """One row of the taxonomy: a center-signature pattern plus a refined line type."""

    id: int
    pattern: tuple[int, int, int]  # (dp, dq, u): center signature (p+dp, q+dq, u)
    refined: LineSignature

    def center_signature(self, p: int, q: int) -> Signature:
        dp, dq, u = self.pattern
        return Signature(p + dp, q + dq, u)

    def pattern_str(self) -> str:
        dp, dq, u = self.pattern
        ps = "p" if dp == 0 else f"p{dp:+d}"
        qs = "q" if dq == 0 else f"q{dq:+d}"
        return f"({ps}, {qs}, {u})"


def _build_rows() -> tuple[MetricClass, ...]:
    rows = []
    next_id = 1
    for pattern in _PATTERNS:
        refined_choices = _REFINED_ORDER if pattern[2] >= 1 else _REFINED_ORDER[:3]
        for refined in refined_choices:
            rows.append(MetricClass(next_id, pattern, refined))
            next_id += 1
    return tuple(rows)


CLASS_ROWS: tuple[MetricClass, ...] = _build_rows()
assert len(CLASS_ROWS) == 21


def metric_class(class_id: int) -> MetricClass:
    if not 1 <= class_id <= 21:
        raise PreconditionError(f"class id must be in 1..21, got {class_id}")
    return CLASS_ROWS[class_id - 1]


@dataclass(frozen=True)
class ClassTable:
    """The admissible classes for one signature, in taxonomy order."""

    p: int
    q: int
    classes: tuple[MetricClass, ...]

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(c.id for c in self.classes)

    @property
    def count(self) -> int:
        return len(self.classes)


@lru_cache(maxsize=None)
def admissible_classes(p: int, q: int) -> ClassTable:
    """Derive the admissible taxonomy rows for signature (p, q).

    Canonicalizes to p >= q (the two orders have identical tables).  A row is
    admissible iff its concrete center signature is a possible codimension-two
    signature and its refined line type can occur inside that signature.
    """
    if p < 1 or q < 1:
        raise UnsupportedSignatureError("need p, q >= 1 (definite metrics are out of scope)")
    if p + q < 4:
        raise UnsupportedSignatureError("need p + q >= 4; lower dimensions are out of scope")
    p, q = max(p, q), min(p, q)
    possible = possible_codim2_signatures(p, q)
    rows = []
    for row in CLASS_ROWS:
        dp, dq, u = row.pattern
        if p + dp < 0 or q + dq < 0:
            continue
        sig = row.center_signature(p, q)
        if sig not in possible:
            continue
        if row.refined not in possible_line_signatures(sig.pos, sig.neg, sig.nul):
            continue
        rows.append(row)
    concrete = {(r.center_signature(p, q), r.refined) for r in rows}
    if len(concrete) != len(rows):
        raise AssertionError("admissible rows must have distinct concrete invariants")
    return ClassTable(p, q, tuple(rows))


@dataclass(frozen=True)
class Classification:
    """Result of classifying one Gram matrix: a taxonomy row in (max, min) convention."""

    p: int
    q: int
    swapped: bool
    metric_class: MetricClass
    center_signature: Signature
    refined: LineSignature

    @property
    def class_id(self) -> int:
        return self.metric_class.id


def classify_metric(alg: HeisenbergAlgebra, gram: Matrix) -> Classification:
    """Map a nondegenerate signature-(p, q) Gram matrix to its taxonomy row.

    Inputs with p < q are first negated (the signature-swap correspondence);
    the result records the swap and reports in the p >= q convention.
    """
    n = alg.n
    if len(gram) != n or any(len(row) != n for row in gram):
        raise PreconditionError(f"Gram matrix must be {n}x{n}")
    if not linalg.is_symmetric(gram):
        raise PreconditionError("Gram matrix must be symmetric")
    sig = Signature(*linalg.congruence_diagonalize(gram).sign_counts())
    if sig.nul:
        raise PreconditionError(f"Gram matrix is degenerate: signature {sig}")
    if sig.pos == 0 or sig.neg == 0:
        raise UnsupportedSignatureError(
            "definite (Riemannian) inner products are out of scope here")
    swapped = sig.pos < sig.neg
    work = [[-x for x in row] for row in gram] if swapped else gram
    p, q = max(sig.pos, sig.neg), min(sig.pos, sig.neg)

    # the center is a coordinate subspace, so its restricted Gram is the
    # leading block and the derived line reads off the first row directly;
    # this equals signature()/refined_line_signature() on those subspaces
    center_block = [row[: n - 2] for row in work[: n - 2]]
    center_sig = Signature(*linalg.congruence_diagonalize(center_block).sign_counts())
    norm = work[0][0]
    if norm > 0:
        refined = LineSignature.SPACELIKE
    elif norm < 0:
        refined = LineSignature.TIMELIKE
    elif all(work[0][j] == 0 for j in range(n - 2)):
        refined = LineSignature.RADICAL
    else:
        refined = LineSignature.LIGHTLIKE
    for row in admissible_classes(p, q).classes:
        if row.center_signature(p, q) == center_sig and row.refined == refined:
            return Classification(p, q, swapped, row, center_sig, refined)
    raise AssertionError(
        f"no taxonomy row matches center signature {center_sig}, {refined}")


def representative(class_id: int, p: int, q: int) -> Matrix:
    """A canonical signature-(p, q) Gram matrix classifying to the given row.

    Entries are 0 and +-1 only: the center gets a diagonal block realizing
    the pattern (with the derived direction placed per the refined type, a
    light-like derived direction pairing hyperbolically inside the center),
    and each center-radical direction pairs hyperbolically with one of the
    last two basis vectors.
    """
    want_swap = p < q
    pp, qq = max(p, q), min(p, q)
    table = admissible_classes(pp, qq)
    row = next((r for r in table.classes if r.id == class_id), None)
    if row is None:
        raise PreconditionError(
            f"class {class_id} is not admissible for signature ({pp}, {qq})")
    n = pp + qq
    s, t, u = row.center_signature(pp, qq).as_tuple()
    g = linalg.zeros(n, n)

    center = list(range(n - 2))
    radical_dirs: list[int] = []
    cursor = 0

    def take() -> int:
        nonlocal cursor
        idx = center[cursor]
        cursor += 1
        return idx

    used_s = used_t = used_u = 0
    if row.refined is LineSignature.SPACELIKE:
        g[take()][0] = Fraction(1)
        used_s = 1
    elif row.refined is LineSignature.TIMELIKE:
        g[take()][0] = Fraction(-1)
        used_t = 1
    elif row.refined is LineSignature.LIGHTLIKE:
        i, j = take(), take()
        g[i][j] = g[j][i] = Fraction(1)
        used_s = used_t = 1
    else:  # RADICAL: pair the derived direction out of the center later
        radical_dirs.append(take())
        used_u = 1

    for _ in range(s - used_s):
        i = take()
        g[i][i] = Fraction(1)
    for _ in range(t - used_t):
        i = take()
        g[i][i] = Fraction(-1)
    for _ in range(u - used_u):
        radical_dirs.append(take())

    # center-radical directions pair with the last non-center slots
    noncenter = [n - 2, n - 1]
    for k, i in enumerate(radical_dirs):
        j = noncenter[2 - u + k]
        g[i][j] = g[j][i] = Fraction(1)
    free = noncenter[: 2 - u]
    fill = [Fraction(1)] * (pp - s - u) + [Fraction(-1)] * (qq - t - u)
    if len(fill) != len(free):
        raise AssertionError("representative budget mismatch")
    for i, val in zip(free, fill):
        g[i][i] = val

    if want_swap:
        g = [[-x for x in row_] for row_ in g]
    return g


def representative_flag(class_id: int, p: int, q: int) -> Flag:
    """A flag in the standard (p, q) space realizing the row's orbit invariants."""
    p, q = max(p, q), min(p, q)
    table = admissible_classes(p, q)
    row = next((r for r in table.classes if r.id == class_id), None)
    if row is None:
        raise PreconditionError(
            f"class {class_id} is not admissible for signature ({p}, {q})")
    n = p + q
    s, t, u = row.center_signature(p, q).as_tuple()
    pos = [i for i in range(p)]
    neg = [i for i in range(p, n)]
    big: list[Vector] = []

    def unit(i: int) -> Vector:
        return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))

    for _ in range(s):
        big.append(unit(pos.pop(0)))
    for _ in range(t):
        big.append(unit(neg.pop(0)))
    nulls = []
    for _ in range(u):
        v = linalg.vec_add(unit(pos.pop(0)), unit(neg.pop(0)))
        nulls.append(v)
        big.append(v)
    if row.refined is LineSignature.SPACELIKE:
        small = big[0]
    elif row.refined is LineSignature.TIMELIKE:
        small = big[s]
    elif row.refined is LineSignature.LIGHTLIKE:
        small = linalg.vec_add(big[0], big[s])
    else:
        small = nulls[0]
    return Flag(Subspace.spanned_by([small], n), Subspace(n, tuple(big)))


# ---------------------------------------------------------------------------
# the scaling-and-automorphism group


@dataclass(frozen=True)
class ScaledAutomorphism:
    """An invertible (1, n-3, 2) block upper triangular matrix, split as scale * automorphism.

    The (0, 0) entry a and the trailing 2x2 block D of any such matrix
    satisfy a * c = det D for the scale c = det(D) / a, and matrix / c
    preserves the bracket.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    scale: Fraction
    automorphism: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_matrix(cls, m: Matrix) -> "ScaledAutomorphism":
        n = len(m)
        if not is_scaled_automorphism(m, n):
            raise PreconditionError("matrix is not invertible block upper triangular (1, n-3, 2)")
        a = m[0][0]
        det_d = m[n - 2][n - 2] * m[n - 1][n - 1] - m[n - 2][n - 1] * m[n - 1][n - 2]
        c = det_d / a
        phi = [[x / c for x in row] for row in m]
        return cls(tuple(tuple(row) for row in m), c, tuple(tuple(row) for row in phi))

    def preserves_bracket(self, alg: HeisenbergAlgebra) -> bool:
        """Check phi([e_i, e_j]) = [phi e_i, phi e_j] on all basis pairs."""
        n = alg.n
        phi = [list(row) for row in self.automorphism]
        cols = [tuple(phi[i][j] for i in range(n)) for j in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = linalg.mat_vec(phi, alg.bracket_basis(i, j))
                rhs = alg.bracket(cols[i], cols[j])
                if lhs != rhs:
                    return False
        return True


def is_scaled_automorphism(g: Matrix, n: int) -> bool:
    """True iff g is invertible and block upper triangular with block sizes (1, n-3, 2)."""
    if len(g) != n or any(len(row) != n for row in g):
        return False
    for i in range(1, n):
        if g[i][0] != 0:
            return False
    for i in (n - 2, n - 1):
        for j in range(1, n - 2):
            if g[i][j] != 0:
                return False
    return linalg.det(g) != 0


def parabolic_sample(n: int, seed: int | random.Random) -> ScaledAutomorphism:
    """A random exact rational element of the scaling-and-automorphism group.

    Entries are drawn from a small pool of fractions; singular draws are
    rejected and resampled.
    """
    if n < 4:
        raise PreconditionError("need n >= 4")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    def draw() -> Fraction:
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))

    while True:
        m = linalg.zeros(n, n)
        m[0][0] = draw()
        for j in range(1, n):
            m[0][j] = draw()
        for i in range(1, n - 2):
            for j in range(1, n):
                m[i][j] = draw()
        for i in (n - 2, n - 1):
            for j in (n - 2, n - 1):
                m[i][j] = draw()
        if linalg.det(m) != 0:
            return ScaledAutomorphism.from_matrix(m)


def act_on_metric(g: Matrix, gram: Matrix) -> Matrix:
    """The pullback action on Gram matrices: g . A = g^{-T} A g^{-1}, exactly."""
    if len(g) != len(gram):
        raise linalg.ShapeError("matrix sizes do not match")
    g_inv = linalg.invert(g)
    return linalg.mat_mul(linalg.transpose(g_inv), linalg.mat_mul(gram, g_inv))
