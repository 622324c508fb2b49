"""The orthosymplectic subalgebra generated by the degree-one symbols.

V is the span of the generators, graded by Bose parity into V0 (the w_i)
and V1 (the p_a, q_a).  Under the parity-graded bracket, g = V + [V, V]
closes into a Lie superalgebra of dimension

    n(n+1)/2 + 2(n+1)k + k(2k+1),

and C + V carries an invariant bilinear form with (1|1) = -2, (1|V) = 0 and
(X|Y) = {X,Y} on V.  The twisted adjoint action differs from the graded
bracket by an extra total-parity sign on the acting element, which is what
keeps C + V stable.
"""

from .algebra import (
    AlgebraError,
    AlgebraSignature,
    bidegree,
    bose_p,
    bose_q,
    check_same_signature,
    element_bidegree,
    fermi_gen,
    unit,
    z_degree,
    zero,
)
from .scalars import Scalar
from .starprod import poisson, star, super_bracket


class OspContext:
    """Degree-one generators of one algebra, split by Bose parity."""

    __slots__ = ("signature", "v0_basis", "v1_basis")

    def __init__(self, signature):
        n, k = signature.n_fermi, signature.n_bose
        object.__setattr__(self, "signature", signature)
        object.__setattr__(
            self, "v0_basis", [fermi_gen(signature, i) for i in range(1, n + 1)]
        )
        object.__setattr__(
            self,
            "v1_basis",
            [bose_p(signature, j) for j in range(1, k + 1)]
            + [bose_q(signature, j) for j in range(1, k + 1)],
        )

    def __setattr__(self, name, value):
        raise AttributeError("OspContext is immutable")

    def v_basis(self):
        return self.v0_basis + self.v1_basis

    def h_basis(self):
        """Basis of C + V: the unit first, then the generators."""
        return [unit(self.signature)] + self.v_basis()


def split_constant_and_v(x):
    """Decompose an element of C + V; reject anything of symbol degree > 1."""
    const = Scalar()
    v_part = zero(x.signature)
    for m, c in x.terms.items():
        d = z_degree(m)
        if d == 0:
            const = const + c
        elif d == 1:
            v_part = v_part + x.__class__(x.signature, {m: c})
        else:
            raise AlgebraError("element leaves C + V: degree-%d monomial %r" % (d, m))
    return const, v_part


def form(ctx, x, y):
    """The invariant bilinear form on C + V (a Scalar)."""
    cx, vx = split_constant_and_v(x)
    cy, vy = split_constant_and_v(y)
    return poisson(vx, vy).constant_term() - (cx * cy) * Scalar.of(2)


def twisted_adjoint(a, b):
    """a * b - (-1)^(d2(a)d2(b) + d1(a)) b * a, extended bilinearly.

    Each argument is split into parity-homogeneous components first, so
    non-homogeneous inputs are handled by linearity rather than rejected.
    """
    check_same_signature(a, b)
    out = zero(a.signature)
    for xa, da in _bidegree_parts(a):
        for xb, db in _bidegree_parts(b):
            sign = (da.delta2 * db.delta2 + da.delta1) & 1
            right = star(xb, xa)
            out = out + star(xa, xb) + (right if sign else -right)
    return out


def _bidegree_parts(x):
    parts = {}
    for m, c in x.terms.items():
        parts.setdefault(bidegree(m), {})[m] = c
    return [(x.__class__(x.signature, terms), d) for d, terms in sorted(parts.items())]


# -- the subalgebra g = V + [V, V] ------------------------------------------------


def element_row(x):
    """Flatten an element to a sparse row keyed by (monomial, L-power)."""
    row = {}
    for m, c in x.terms.items():
        for power, g in c.coeffs.items():
            row[((m.cliff, m.wp, m.wq), power)] = g
    return row


def _reduce_against(pivots, row):
    """Eliminate known pivot columns from row; returns the residue."""
    row = dict(row)
    while row:
        col = min(row)
        if col not in pivots:
            return row
        coef = row.pop(col)
        for c2, g2 in pivots[col].items():
            s = row.get(c2, None)
            s = -coef * g2 if s is None else s - coef * g2
            if s:
                row[c2] = s
            else:
                row.pop(c2, None)
    return row


def _insert_pivot(pivots, residue):
    col = min(residue)
    inv = residue[col].inverse()
    pivots[col] = {c: g * inv for c, g in residue.items() if c != col}


def independent_subset(elements):
    """Indices of a maximal independent prefix-greedy subset, smallest-monomial pivots."""
    pivots = {}
    keep = []
    for idx, x in enumerate(elements):
        residue = _reduce_against(pivots, element_row(x))
        if residue:
            _insert_pivot(pivots, residue)
            keep.append(idx)
    return keep


def span_contains(elements, x):
    pivots = {}
    for e in elements:
        residue = _reduce_against(pivots, element_row(e))
        if residue:
            _insert_pivot(pivots, residue)
    return not _reduce_against(pivots, element_row(x))


def build_g(ctx):
    """Linear basis of V + [V, V] with its component dimensions.

    Candidates are generated deterministically (V first, then the three
    bracket blocks) and reduced by Gaussian elimination pivoting on the
    smallest monomial, so the returned basis is reproducible.
    """
    v0, v1 = ctx.v0_basis, ctx.v1_basis
    blocks = [("v0", v0), ("v1", v1)]
    b00 = [
        super_bracket(v0[i], v0[j])
        for i in range(len(v0))
        for j in range(i + 1, len(v0))
    ]
    b11 = [
        super_bracket(v1[i], v1[j])
        for i in range(len(v1))
        for j in range(i, len(v1))
    ]
    b01 = [super_bracket(x, y) for x in v0 for y in v1]
    blocks += [("v0v0", b00), ("v1v1", b11), ("v0v1", b01)]

    basis = []
    dims = {}
    pivots = {}
    for name, cands in blocks:
        count = 0
        for x in cands:
            residue = _reduce_against(pivots, element_row(x))
            if residue:
                _insert_pivot(pivots, residue)
                basis.append(x)
                count += 1
        dims[name] = count
    dims["even"] = dims["v0"] + dims["v0v0"] + dims["v1v1"]
    dims["odd"] = dims["v1"] + dims["v0v1"]
    dims["total"] = len(basis)
    return basis, len(basis), dims


def expected_dimension(n, k):
    """n(n+1)/2 + 2(n+1)k + k(2k+1), the target for build_g's total."""
    return n * (n + 1) // 2 + 2 * (n + 1) * k + k * (2 * k + 1)


# -- verification reports ----------------------------------------------------------


def _report(suite, cases, failures):
    return {"suite": suite, "cases": cases, "failures": failures}


def verify_ps(ctx):
    """Check [[X,Y],Z] = 2({Y,Z}X - (-1)^(d2 d2){X,Z}Y) on all generator triples."""
    gens = ctx.v_basis()
    failures = []
    cases = 0
    for x in gens:
        d2x = element_bidegree(x).delta2
        for y in gens:
            d2y = element_bidegree(y).delta2
            bxy = super_bracket(x, y)
            sgn = -1 if d2x and d2y else 1
            for z in gens:
                cases += 1
                lhs = super_bracket(bxy, z)
                cyz = poisson(y, z).constant_term()
                cxz = poisson(x, z).constant_term()
                rhs = x.scale(cyz + cyz) - y.scale(cxz + cxz).scale(sgn)
                if lhs != rhs:
                    failures.append(
                        {
                            "inputs": [str(x), str(y), str(z)],
                            "lhs": str(lhs),
                            "rhs": str(rhs),
                        }
                    )
    return _report("parastatistics", cases, failures)


def verify_invariance(ctx):
    """Stability of C + V under the twisted action of g, and skew-invariance."""
    g_basis, _dim, _dims = build_g(ctx)
    h = ctx.h_basis()
    failures = []
    cases = 0
    for a in g_basis:
        d2a = element_bidegree(a).delta2
        images = []
        for zv in h:
            cases += 1
            img = twisted_adjoint(a, zv)
            try:
                split_constant_and_v(img)
            except AlgebraError:
                failures.append(
                    {
                        "inputs": ["ad'(%s)" % a, str(zv)],
                        "lhs": str(img),
                        "rhs": "element of C + V",
                    }
                )
                images.append(None)
            else:
                images.append(img)
        for iz, zv in enumerate(h):
            if images[iz] is None:
                continue
            d2z = element_bidegree(zv).delta2
            sign = 1 if d2z and d2a else -1
            for it, tv in enumerate(h):
                if images[it] is None:
                    continue
                cases += 1
                lhs = form(ctx, images[iz], tv)
                rhs = form(ctx, zv, images[it])
                rhs = rhs if sign == 1 else -rhs
                if lhs != rhs:
                    failures.append(
                        {
                            "inputs": [str(a), str(zv), str(tv)],
                            "lhs": str(lhs),
                            "rhs": str(rhs),
                        }
                    )
    return _report("twisted-invariance", cases, failures)
