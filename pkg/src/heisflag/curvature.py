"""Exact curvature of left-invariant metrics from structure constants.

For a left-invariant metric, every geometric quantity reduces to rational
arithmetic on the Lie algebra: the Levi-Civita connection comes from the
Koszul formula

    2 <nabla_x y, z> = <[x,y], z> - <[y,z], x> + <[z,x], y>,

the curvature tensor from R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z
- nabla_[x,y] z, and the Ricci tensor by tracing.  Flatness is exact
vanishing of every Riemann entry; there is no tolerance anywhere.

A metric is an algebraic Ricci soliton when its Ricci operator equals
c * Id + D with D a derivation of the algebra; this is decided by an exact
linear solve, and an Einstein metric is the special case D = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .forms import PreconditionError
from .heisenberg import HeisenbergAlgebra
from .linalg import Matrix, Vector

RiemannTable = tuple[tuple[tuple[Vector, ...], ...], ...]


@dataclass(frozen=True)
class ConnectionTable:
    """Connection coefficients: entry [i][j] is nabla_{e_i} e_j in basis coordinates."""

    gamma: tuple[tuple[Vector, ...], ...]

    @property
    def n(self) -> int:
        return len(self.gamma)

    def nabla(self, i: int, j: int) -> Vector:
        return self.gamma[i][j]

    def derivative_of(self, i: int, v: Vector) -> Vector:
        """nabla_{e_i} applied to a constant coefficient vector."""
        out = [Fraction(0)] * self.n
        for m, c in enumerate(v):
            if c != 0:
                for r, x in enumerate(self.gamma[i][m]):
                    out[r] += c * x
        return tuple(out)

    def is_metric_compatible(self, gram: Matrix) -> bool:
        n = self.n
        for i in range(n):
            for j in range(n):
                for k in range(j, n):
                    lhs = sum(x * y for x, y in zip(linalg.mat_vec(gram, self.gamma[i][j]),
                                                    _unit(n, k)))
                    rhs = sum(x * y for x, y in zip(linalg.mat_vec(gram, self.gamma[i][k]),
                                                    _unit(n, j)))
                    if lhs + rhs != 0:
                        return False
        return True

    def is_torsion_free(self, alg: HeisenbergAlgebra) -> bool:
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                diff = linalg.vec_sub(self.gamma[i][j], self.gamma[j][i])
                if diff != alg.bracket_basis(i, j):
                    return False
        return True


def _unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def levi_civita(alg: HeisenbergAlgebra, gram: Matrix) -> ConnectionTable:
    """The unique metric-compatible torsion-free connection, via the Koszul formula."""
    n = alg.n
    if len(gram) != n or not linalg.is_symmetric(gram):
        raise PreconditionError(f"Gram matrix must be symmetric {n}x{n}")
    try:
        g_inv = linalg.invert(gram)
    except linalg.SingularMatrixError:
        raise PreconditionError("Levi-Civita connection requires a nondegenerate Gram matrix")

    def pairing(x: Vector, y: Vector) -> Fraction:
        return sum(a * b for a, b in zip(linalg.mat_vec(gram, x), y))

    table = []
    for i in range(n):
        row = []
        e_i = _unit(n, i)
        for j in range(n):
            e_j = _unit(n, j)
            br_ij = alg.bracket_basis(i, j)
            rhs = []
            for k in range(n):
                e_k = _unit(n, k)
                val = (pairing(br_ij, e_k)
                       - pairing(alg.bracket_basis(j, k), e_i)
                       + pairing(alg.bracket_basis(k, i), e_j))
                rhs.append(val / 2)
            row.append(linalg.mat_vec(g_inv, tuple(rhs)))
        table.append(tuple(row))
    return ConnectionTable(tuple(table))


def riemann(conn: ConnectionTable, alg: HeisenbergAlgebra) -> RiemannTable:
    """Curvature tensor: entry [i][j][k] is R(e_i, e_j) e_k in basis coordinates."""
    n = conn.n
    out = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = []
            br = alg.bracket_basis(i, j)
            for k in range(n):
                val = linalg.vec_sub(conn.derivative_of(i, conn.gamma[j][k]),
                                     conn.derivative_of(j, conn.gamma[i][k]))
                for m, c in enumerate(br):
                    if c != 0:
                        val = linalg.vec_sub(val, linalg.vec_scale(c, conn.gamma[m][k]))
                row.append(val)
            plane.append(tuple(row))
        out.append(tuple(plane))
    return tuple(out)


def ricci(riem: RiemannTable, gram: Matrix) -> tuple[Matrix, Fraction]:
    """Ricci tensor Ric(y, z) = trace(x -> R(x, y) z) and scalar curvature."""
    n = len(riem)
    ric = linalg.zeros(n, n)
    for j in range(n):
        for k in range(n):
            ric[j][k] = sum(riem[i][j][k][i] for i in range(n))
    g_inv = linalg.invert(gram)
    scalar = sum(g_inv[k][j] * ric[j][k] for j in range(n) for k in range(n))
    return ric, scalar


def is_flat(riem: RiemannTable) -> bool:
    """True iff every curvature entry is exactly zero."""
    return all(x == 0 for plane in riem for row in plane for v in row for x in v)


def derivation_space(alg: HeisenbergAlgebra) -> list[Vector]:
    """Basis of Der(g) = {D : D[x,y] = [Dx,y] + [x,Dy]}, as flattened n*n vectors."""
    n = alg.n
    units = [_unit(n, i) for i in range(n)]

    def constraint_rows(d: Matrix) -> list[Fraction]:
        cols = [tuple(d[r][c] for r in range(n)) for c in range(n)]
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                lhs = linalg.mat_vec(d, alg.bracket_basis(i, j))
                rhs = linalg.vec_add(alg.bracket(cols[i], units[j]),
                                     alg.bracket(units[i], cols[j]))
                rows.extend(linalg.vec_sub(lhs, rhs))
        return rows

    columns = []
    for r in range(n):
        for c in range(n):
            elem = linalg.zeros(n, n)
            elem[r][c] = Fraction(1)
            columns.append(constraint_rows(elem))
    constraint_matrix = [list(row) for row in zip(*columns)]
    return linalg.kernel(constraint_matrix)


def soliton_check(alg: HeisenbergAlgebra, gram: Matrix,
                  ric: Matrix) -> tuple[Fraction, Matrix] | None:
    """Solve Ric_op = c * Id + D with D a derivation, exactly.

    Returns (c, D) if the linear system is consistent, None otherwise.  The
    Einstein case is the solution with D = 0.
    """
    n = alg.n
    g_inv = linalg.invert(gram)
    ric_op = linalg.mat_mul(g_inv, ric)
    der_basis = derivation_space(alg)
    target = tuple(x for row in ric_op for x in row)
    id_vec = tuple(x for row in linalg.identity(n) for x in row)
    cols = [list(b) for b in der_basis] + [list(id_vec)]
    system = [[cols[c][r] for c in range(len(cols))] for r in range(n * n)]
    sol = linalg.solve(system, target)
    if sol is None:
        return None
    c = sol[-1]
    d = [[ric_op[i][j] - (c if i == j else 0) for j in range(n)] for i in range(n)]
    return c, d


@dataclass(frozen=True)
class CurvatureReport:
    """Exact curvature data of one metric, with flatness and soliton verdicts."""

    riemann: RiemannTable
    ricci: tuple[tuple[Fraction, ...], ...]
    scalar_curv: Fraction
    is_flat: bool
    soliton: tuple[Fraction, tuple[tuple[Fraction, ...], ...]] | None

    @property
    def is_einstein(self) -> bool:
        if self.soliton is None:
            return False
        _, d = self.soliton
        return all(x == 0 for row in d for x in row)


def curvature_report(alg: HeisenbergAlgebra, gram: Matrix,
                     check_soliton: bool = True) -> CurvatureReport:
    """Full exact curvature summary for one Gram matrix."""
    conn = levi_civita(alg, gram)
    riem = riemann(conn, alg)
    ric, scalar = ricci(riem, gram)
    soliton = None
    if check_soliton:
        res = soliton_check(alg, gram, ric)
        if res is not None:
            c, d = res
            soliton = (c, tuple(tuple(row) for row in d))
    return CurvatureReport(
        riemann=riem,
        ricci=tuple(tuple(row) for row in ric),
        scalar_curv=scalar,
        is_flat=is_flat(riem),
        soliton=soliton,
    )
