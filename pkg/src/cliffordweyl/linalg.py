"""Exact linear algebra over Gaussian rationals.

Small dense matrices (representation images, tensor/Kronecker assembly) and
a sparse reduced-row-echelon solver used by the centralizer probes and the
linear-independence checks.  Everything is exact; there is no floating point
anywhere in this package.
"""

from __future__ import annotations

from .scalars import GR_ONE, GR_ZERO, GaussianRational


class GrMatrix:
    """Immutable dense matrix with GaussianRational entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self_rows = tuple(tuple(_as_gr(x) for x in r) for r in rows)
        if self_rows:
            w = len(self_rows[0])
            if any(len(r) != w for r in self_rows):
                raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", self_rows)

    def __setattr__(self, name, value):
        raise AttributeError("GrMatrix is immutable")

    @staticmethod
    def identity(n):
        return GrMatrix(
            [[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zeros(r, c):
        return GrMatrix([[GR_ZERO] * c for _ in range(r)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, rc):
        return self.rows[rc[0]][rc[1]]

    def __add__(self, other):
        return GrMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GrMatrix([[-a for a in r] for r in self.rows])

    def scale(self, g):
        g = _as_gr(g)
        return GrMatrix([[a * g for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, GrMatrix):
            n, m = self.shape
            m2, p = other.shape
            if m != m2:
                raise ValueError("shape mismatch %s x %s" % (self.shape, other.shape))
            cols = list(zip(*other.rows)) if other.rows else []
            return GrMatrix(
                [
                    [sum((a * b for a, b in zip(row, col)), GR_ZERO) for col in cols]
                    for row in self.rows
                ]
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def kron(self, other):
        """Kronecker product, self's index varying slowest."""
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([a * b for a in ra for b in rb])
        return GrMatrix(out)

    def apply(self, vec):
        """Matrix times column vector (a list), exact."""
        return [sum((a * b for a, b in zip(row, vec)), GR_ZERO) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, GrMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "GrMatrix([%s])" % ", ".join(
            "[%s]" % ", ".join(str(x) for x in r) for r in self.rows
        )


def _as_gr(x):
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


# -- sparse exact elimination --------------------------------------------------


def sparse_rref(rows):
    """Reduced row echelon form of sparse homogeneous equations.

    rows: iterable of {column_key: GaussianRational}.  Column keys only need
    to be orderable and hashable.  Returns {pivot_column: normalized_row}
    where each normalized row maps non-pivot columns to coefficients and the
    implicit pivot coefficient is 1.
    """
    pivots = {}
    for raw in rows:
        r = {c: v for c, v in raw.items() if v}
        # Reduce by existing pivots.  Pivot rows hold only non-pivot columns,
        # so one pass over a snapshot of r's keys is complete.
        for c in list(r):
            if c in pivots and c in r:
                f = r.pop(c)
                for cc, v in pivots[c].items():
                    nv = r.get(cc, GR_ZERO) - f * v
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
        if not r:
            continue  # dependent equation
        c = min(r)
        inv = r.pop(c).inverse()
        r = {cc: v * inv for cc, v in r.items()}
        for pr in pivots.values():
            if c in pr:
                f = pr.pop(c)
                for cc, v in r.items():
                    nv = pr.get(cc, GR_ZERO) - f * v
                    if nv:
                        pr[cc] = nv
                    else:
                        pr.pop(cc, None)
        pivots[c] = r
    return pivots


def sparse_rank(rows):
    return len(sparse_rref(rows))


def sparse_nullspace(rows, variables):
    """Basis of the solution space of the homogeneous sparse system.

    variables: ordered list of all column keys (free variables not mentioned
    in any equation are genuinely free).  Returns a list of solution vectors,
    each {variable: GaussianRational}, one per free variable, with that free
    variable set to 1.  Deterministic given input order.
    """
    pivots = sparse_rref(rows)
    free = [v for v in variables if v not in pivots]
    basis = []
    for f in free:
        vec = {f: GR_ONE}
        for pc, pr in pivots.items():
            coef = pr.get(f)
            if coef:
                vec[pc] = -coef
        basis.append(vec)
    return basis


def vectors_independent(vecs):
    """Whether sparse vectors {key: GaussianRational} are linearly independent."""
    vecs = list(vecs)
    return sparse_rank(vecs) == len(vecs)
