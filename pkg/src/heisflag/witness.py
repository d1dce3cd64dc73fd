"""Floating-point isometry witnesses between equivalent flags.

Equality of orbit invariants is decided exactly; this module produces the
constructive half: a matrix g in O(p, q) mapping one flag onto another.
The construction builds, for each flag, an adapted basis of the whole space
in which both flag parts occupy a fixed coefficient pattern depending only
on the invariants.  Everything is exact rational until a final per-column
normalization by square roots of the diagonal norms; null directions are
handled by hyperbolic pairs of exact norm +-1, so the patterns survive the
normalization unchanged.

Residuals are always checked: a witness outside tolerance raises instead of
being returned silently.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from mpmath import mp, mpf

from . import linalg
from .forms import (
    Flag,
    FlagInvariants,
    PreconditionError,
    QuadraticSpace,
    ScaledSystem,
    Subspace,
    flag_invariants,
    radical,
    restrict,
    scaled_system,
    extend_basis,
)
from .linalg import Matrix, Vector

RESIDUAL_TOL = 1e-9


class InequivalentFlagsError(PreconditionError):
    """The flags lie in different orbits; the message names the differing invariant."""


class WitnessFailureError(RuntimeError):
    """The computed witness failed its residual checks."""


def describe_inequivalence(inv1: FlagInvariants, inv2: FlagInvariants) -> str | None:
    """Name the first differing invariant, or None if all agree."""
    if inv1.sig_big != inv2.sig_big:
        return f"sig_big {inv1.sig_big} != {inv2.sig_big}"
    if inv1.sig_small != inv2.sig_small:
        return f"sig_small {inv1.sig_small} != {inv2.sig_small}"
    if inv1.dim_small_cap_rad != inv2.dim_small_cap_rad:
        return (f"dim(small cap rad big) {inv1.dim_small_cap_rad} "
                f"!= {inv2.dim_small_cap_rad}")
    return None


def _to_subspace_coords(sub: Subspace, vectors) -> list[Vector]:
    return [sub.coordinates_of(v) for v in vectors]


def _from_subspace_coords(sub: Subspace, vectors) -> list[Vector]:
    return [tuple(sum(c * bv[i] for c, bv in zip(coeffs, sub.basis))
                  for i in range(sub.ambient_dim))
            for coeffs in vectors]


def _rescale_frame(vectors: list[Vector], norms: list[Fraction],
                   pair_slots: list[tuple[int, int]]) -> tuple[list[Vector], list[Fraction]]:
    """Rescale frame columns to primitive integer vectors, norms adjusted.

    Hyperbolic-pair slots are rescaled by a common factor so that the fixed
    sum patterns spanning the flag parts survive; this keeps the later float
    arithmetic well conditioned without touching any span.
    """
    vecs = list(vectors)
    ms = list(norms)
    paired: set[int] = set()

    def factor(old: Vector, new: Vector) -> Fraction:
        idx = next(i for i, x in enumerate(old) if x != 0)
        return old[idx] / new[idx]

    for ia, ib in pair_slots:
        joint = vecs[ia] + vecs[ib]
        prim = linalg.primitive_vector(joint)
        rho = factor(joint, prim)
        n = len(vecs[ia])
        vecs[ia], vecs[ib] = prim[:n], prim[n:]
        ms[ia] = ms[ia] / rho ** 2
        ms[ib] = ms[ib] / rho ** 2
        paired.update((ia, ib))
    for i, v in enumerate(vecs):
        if i in paired:
            continue
        prim = linalg.primitive_vector(v)
        rho = factor(v, prim)
        vecs[i] = prim
        ms[i] = ms[i] / rho ** 2
    return vecs, ms


def _adapted_frame(space: QuadraticSpace, f: Flag) -> tuple[list[Vector], list[Fraction]]:
    """Exact scaled basis of the whole space adapted to the flag.

    The output lists the positive-norm vectors then the negative-norm ones.
    Both flag parts are spanned by fixed coefficient patterns in this basis,
    determined by the flag invariants alone.
    """
    # lattice-reduced bases keep the exact construction well conditioned
    small = Subspace(f.small.ambient_dim,
                     tuple(linalg.lll_reduce(linalg.row_space(list(f.small.basis)))))
    big = Subspace(f.big.ambient_dim,
                   tuple(linalg.lll_reduce(linalg.row_space(list(f.big.basis)))))

    # system of the small part, its null block reordered so that the
    # rad(big) members come last
    sys_small = scaled_system(space, small)
    rad_big = radical(space, big)
    nulls = sys_small.nulls()
    if nulls:
        cap = linalg.intersect(nulls, list(rad_big.basis)) if rad_big.dim else []
        reordered = linalg.extend_to_independent(cap, nulls, len(nulls))
        nulls = reordered[len(cap):] + reordered[: len(cap)]
    sys_small = ScaledSystem(
        tuple(sys_small.positives() + sys_small.negatives() + nulls),
        tuple([m for m in sys_small.norms if m > 0]
              + [m for m in sys_small.norms if m < 0]
              + [Fraction(0)] * len(nulls)))

    # extend to a system of the big part, working in big coordinates
    space_big = QuadraticSpace.from_matrix(restrict(space, big))
    small_in_big = Subspace(big.dim, tuple(_to_subspace_coords(big, sys_small.vectors)))
    sys_small_b = ScaledSystem(small_in_big.basis, sys_small.norms)
    sys_big_b = extend_basis(space_big, small_in_big, sys_small_b)
    sys_big = ScaledSystem(tuple(_from_subspace_coords(big, sys_big_b.vectors)),
                           sys_big_b.norms)

    # extend to the whole (nondegenerate) space: every null of big splits
    full = extend_basis(space, big, sys_big)
    if full.signature.nul:
        raise PreconditionError("ambient form must be nondegenerate")

    # hyperbolic-pair slots carry the sum patterns of both flag parts
    s_sm, t_sm = len(sys_small.positives()), len(sys_small.negatives())
    u_sm, k_cap = len(sys_small.nulls()), len(cap) if nulls else 0
    s_bg, t_bg = len(sys_big.positives()), len(sys_big.negatives())
    u_bg = len(sys_big.nulls())
    p_full = len(full.positives())
    pair_slots = ([(s_sm + i, p_full + t_sm + i) for i in range(u_sm - k_cap)]
                  + [(s_bg + i, p_full + t_bg + i) for i in range(u_bg)])
    return _rescale_frame(list(full.vectors), list(full.norms), pair_slots)


def subspace_distance(vectors1, vectors2) -> float:
    """Max-norm difference of orthogonal projectors onto the two spans."""
    a = np.array([[float(x) for x in v] for v in vectors1], dtype=float).T
    b = np.array([[float(x) for x in v] for v in vectors2], dtype=float).T
    qa, _ = np.linalg.qr(a)
    qb, _ = np.linalg.qr(b)
    return float(np.max(np.abs(qa @ qa.T - qb @ qb.T)))


def isometry_witness(p: int, q: int, f1: Flag, f2: Flag,
                     tol: float = RESIDUAL_TOL) -> np.ndarray:
    """A matrix g in O(p, q) with g . f2 = f1, verified numerically.

    Raises InequivalentFlagsError when the orbit invariants differ and
    WitnessFailureError when the residuals exceed `tol`.
    """
    if f1.shape != f2.shape:
        raise linalg.ShapeError(f"flag shapes differ: {f1.shape} vs {f2.shape}")
    space = QuadraticSpace.standard(p, q)
    inv1 = flag_invariants(space, f1)
    inv2 = flag_invariants(space, f2)
    diff = describe_inequivalence(inv1, inv2)
    if diff is not None:
        raise InequivalentFlagsError(f"inequivalent flags: {diff}")

    cols1, norms1 = _adapted_frame(space, f1)
    cols2, norms2 = _adapted_frame(space, f2)
    n = space.dim
    c1 = [[cols1[j][i] for j in range(n)] for i in range(n)]
    c2 = [[cols2[j][i] for j in range(n)] for i in range(n)]
    c2_inv = linalg.invert(c2)

    # g = C1 . diag(sqrt(m2_j / m1_j)) . C2^{-1}; ratios are positive exactly
    ratios = []
    for m1, m2 in zip(norms1, norms2):
        r = m2 / m1
        if r <= 0:
            raise WitnessFailureError("adapted frames disagree on norm signs")
        ratios.append(r)
    # everything up to the square roots is exact; assemble in high precision
    # and round once, so cancellation between large frame entries cannot
    # contaminate the returned binary64 matrix
    with mp.workprec(256):
        def hp(x: Fraction):
            return mpf(x.numerator) / mpf(x.denominator)

        scale = [mp.sqrt(hp(r)) for r in ratios]
        g = np.empty((n, n), dtype=float)
        for i in range(n):
            for j in range(n):
                acc = mpf(0)
                for k in range(n):
                    if c1[i][k] and c2_inv[k][j]:
                        acc += hp(c1[i][k] * c2_inv[k][j]) * scale[k]
                g[i, j] = float(acc)

    ipq = np.diag([1.0] * p + [-1.0] * q)
    residual = float(np.max(np.abs(g.T @ ipq @ g - ipq)))
    if residual > tol:
        raise WitnessFailureError(f"form residual {residual:.3e} exceeds {tol:.1e}")

    g_small = (g @ np.array([[float(x) for x in v] for v in f2.small.basis]).T).T
    g_big = (g @ np.array([[float(x) for x in v] for v in f2.big.basis]).T).T
    d_small = subspace_distance(g_small, [[float(x) for x in v] for v in f1.small.basis])
    d_big = subspace_distance(g_big, [[float(x) for x in v] for v in f1.big.basis])
    if max(d_small, d_big) > tol:
        raise WitnessFailureError(
            f"flag mapping distance {max(d_small, d_big):.3e} exceeds {tol:.1e}")
    return g


def witness_residuals(p: int, q: int, g: np.ndarray, f1: Flag, f2: Flag) -> dict[str, float]:
    """Residual diagnostics for a candidate witness (form error and mapping distances)."""
    ipq = np.diag([1.0] * p + [-1.0] * q)
    form = float(np.max(np.abs(g.T @ ipq @ g - ipq)))
    g_small = (g @ np.array([[float(x) for x in v] for v in f2.small.basis]).T).T
    g_big = (g @ np.array([[float(x) for x in v] for v in f2.big.basis]).T).T
    return {
        "form": form,
        "small": subspace_distance(g_small, [[float(x) for x in v] for v in f1.small.basis]),
        "big": subspace_distance(g_big, [[float(x) for x in v] for v in f1.big.basis]),
    }
