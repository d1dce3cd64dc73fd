"""Exact rational samplers for isometries, flags and Gram matrices.

Invariance tests want exact group elements, not floating-point ones.  The
Cayley transform g = (I - S)(I + S)^{-1} of a rational S that is skew with
respect to the standard form lands in O(p, q) exactly; composing with signed
block permutations reaches beyond the identity component.  Flags and Gram
matrices are sampled from small integer vectors so that degenerate
configurations, which carry the interesting orbit types, actually occur.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .forms import Flag, Subspace
from .linalg import Matrix, Vector


def standard_form_matrix(p: int, q: int) -> Matrix:
    return linalg.diag([1] * p + [-1] * q)


def cayley_opq(p: int, q: int, rng: random.Random) -> Matrix:
    """Exact element of O(p, q) via the Cayley transform.

    S = I_{p,q} K with K skew-symmetric satisfies S^T I_{p,q} + I_{p,q} S = 0,
    and then (I - S)(I + S)^{-1} preserves the form exactly.  Draws are
    rejected until I + S is invertible.
    """
    n = p + q
    ipq = standard_form_matrix(p, q)
    while True:
        k = linalg.zeros(n, n)
        for i in range(n):
            for j in range(i + 1, n):
                x = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                k[i][j] = x
                k[j][i] = -x
        s = linalg.mat_mul(ipq, k)
        i_plus_s = [[s[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
        try:
            inverse = linalg.invert(i_plus_s)
        except linalg.SingularMatrixError:
            continue
        i_minus_s = [[-s[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
        return linalg.mat_mul(i_minus_s, inverse)


def signed_permutation_opq(p: int, q: int, rng: random.Random) -> Matrix:
    """Signed permutation preserving the standard form: permutes the first p
    axes among themselves, the last q among themselves, with arbitrary signs."""
    n = p + q
    perm = list(range(p))
    rng.shuffle(perm)
    tail = list(range(p, n))
    rng.shuffle(tail)
    perm += tail
    m = linalg.zeros(n, n)
    for j, i in enumerate(perm):
        m[i][j] = Fraction(rng.choice((1, -1)))
    return m


def random_opq(p: int, q: int, rng: random.Random) -> Matrix:
    """Signed permutation composed with a Cayley element: exact, beyond the identity component."""
    return linalg.mat_mul(signed_permutation_opq(p, q, rng), cayley_opq(p, q, rng))


def plane_cayley_opq(p: int, q: int, rng: random.Random) -> Matrix:
    """Cayley element supported on one coordinate plane: exact and small.

    Entries stay bounded independently of the dimension, which keeps
    downstream floating-point work well conditioned; useful wherever group
    images feed the numerical witness rather than exact invariant checks.
    """
    n = p + q
    i = rng.randrange(n)
    j = rng.randrange(n)
    while j == i:
        j = rng.randrange(n)
    k = linalg.zeros(n, n)
    x = Fraction(rng.randint(1, 2), rng.randint(1, 3))
    k[i][j] = x
    k[j][i] = -x
    ipq = standard_form_matrix(p, q)
    s = linalg.mat_mul(ipq, k)
    i_plus = [[s[a][b] + (1 if a == b else 0) for b in range(n)] for a in range(n)]
    if linalg.det(i_plus) == 0:
        return plane_cayley_opq(p, q, rng)
    i_minus = [[-s[a][b] + (1 if a == b else 0) for b in range(n)] for a in range(n)]
    return linalg.mat_mul(i_minus, linalg.invert(i_plus))


def mild_opq(p: int, q: int, rng: random.Random) -> Matrix:
    """Signed permutation times two plane Cayley rotations: exact, well conditioned."""
    g = linalg.mat_mul(plane_cayley_opq(p, q, rng), plane_cayley_opq(p, q, rng))
    return linalg.mat_mul(signed_permutation_opq(p, q, rng), g)


def apply_to_flag(g: Matrix, f: Flag) -> Flag:
    """The flag (g . small, g . big), with basis vectors rescaled to primitive
    integer form (spans are unchanged; later exact arithmetic stays cheap)."""
    small = [linalg.primitive_vector(linalg.mat_vec(g, v)) for v in f.small.basis]
    big = [linalg.primitive_vector(linalg.mat_vec(g, v)) for v in f.big.basis]
    n = f.big.ambient_dim
    return Flag(Subspace(n, tuple(small)), Subspace(n, tuple(big)))


def small_vector_pool(n: int) -> list[Vector]:
    """All {-1, 0, 1} vectors with at most two nonzero entries, first nonzero +1."""
    out = []
    for i in range(n):
        v = [0] * n
        v[i] = 1
        out.append(linalg.vec(v))
        for j in range(i + 1, n):
            for sign in (1, -1):
                w = [0] * n
                w[i] = 1
                w[j] = sign
                out.append(linalg.vec(w))
    return out


def random_flag(p: int, q: int, rng: random.Random,
                shape: tuple[int, int] | None = None) -> Flag:
    """Random flag spanned by small integer vectors; degenerate types occur often."""
    n = p + q
    k1, k2 = shape if shape is not None else (1, n - 2)
    pool = small_vector_pool(n)
    while True:
        picks: list[Vector] = []
        while len(picks) < k2:
            cand = rng.choice(pool)
            if linalg.rank([list(v) for v in picks] + [list(cand)]) == len(picks) + 1:
                picks.append(cand)
        big = Subspace(n, tuple(picks))
        coeffs_pool = [-1, 0, 1]
        for _ in range(20):
            rows = [[Fraction(rng.choice(coeffs_pool)) for _ in range(k2)] for _ in range(k1)]
            if linalg.rank(rows) != k1:
                continue
            small_vecs = [tuple(sum(c * bv[i] for c, bv in zip(row, big.basis))
                                for i in range(n)) for row in rows]
            return Flag(Subspace(n, tuple(small_vecs)), big)


def random_gram(p: int, q: int, rng: random.Random) -> Matrix:
    """Random Gram matrix of signature (p, q): pullback of the standard form
    by an invertible matrix with columns from the small-vector pool."""
    n = p + q
    pool = small_vector_pool(n)
    while True:
        cols = [rng.choice(pool) for _ in range(n)]
        h = [[cols[j][i] for j in range(n)] for i in range(n)]
        if linalg.det(h) != 0:
            ipq = standard_form_matrix(p, q)
            return linalg.mat_mul(linalg.transpose(h), linalg.mat_mul(ipq, h))


def random_symmetric(n: int, rng: random.Random,
                     num_range: tuple[int, int] = (-9, 9),
                     den_range: tuple[int, int] = (1, 9)) -> Matrix:
    """Random symmetric rational matrix with bounded numerators and denominators."""
    m = linalg.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            x = Fraction(rng.randint(*num_range), rng.randint(*den_range))
            m[i][j] = x
            m[j][i] = x
    return m
