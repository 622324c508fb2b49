"""Structure maps for the deformed algebras.

Everything here sits on top of the normal-form arithmetic in `ore`:

* the specialization at 0 identified with the odd Clifford-Weyl algebra
  (p = 2E-, q = 2E+),
* the rank-reduction tensor factorization over the even Clifford algebra,
  and its matrix realization,
* extraction of the first-order deformation cochain and its comparison
  with the antisymmetric volume-word cocycle,
* ghost/Casimir identities,
* the polynomial (one-variable) representation and its finite-dimensional
  quotients, with exact centralizer and commutant probes,
* the three-element orthosymplectic check around K = -1/4 w_odd + L.
"""

from fractions import Fraction

from .algebra import (
    AlgebraError,
    AlgebraSignature,
    CwMonomial,
    fermi_gen,
    monomial_element,
    zero,
)
from .linalg import sparse_nullspace
from .ore import (
    OreElement,
    OreMonomial,
    ghost_theta,
    ore_anti_bracket,
    ore_e_minus,
    ore_e_plus,
    ore_fermi,
    ore_generators,
    ore_lambda,
    ore_lie_bracket,
    ore_product,
    ore_scalar,
    ore_super_bracket,
    ore_unit,
    ore_zero,
    specialize,
    specialized_product,
)
from .periodicity import AlgebraMatrix
from .reps import ScalarMatrix, rep_matrix, spin
from .scalars import (
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    S_ONE,
    Scalar,
    _coerce,
    i_power,
    scalar_i_power,
)
from .starprod import _cliff_pair, element_star_words, star

_P0 = OreMonomial(1, 0, 0, 0)


def cw_odd_signature(n):
    """The Clifford-Weyl algebra matching the rank-n specialization at 0."""
    return AlgebraSignature(2 * n + 1, 1)


# -- specialization at 0 vs the odd Clifford-Weyl algebra --------------------------


def iso_a0_to_cw(n, a):
    """Identify a parameter-free rank-n element with C(2n+1, 2).

    E+ goes to q/2, E- to p/2 and the w_j are fixed; any occurrence of the
    central parameter is an error because the target is the specialization
    at 0.
    """
    if a.n != n:
        raise AlgebraError("rank mismatch: %d vs %d" % (a.n, n))
    sig = cw_odd_signature(n)
    out = zero(sig)
    for m, c in a.terms.items():
        if m.lam:
            raise AlgebraError("central parameter present: %r" % (m,))
        img = monomial_element(sig, CwMonomial(m.cliff, (0,), (m.e_plus,)))
        if m.e_minus:
            img = star(img, monomial_element(sig, CwMonomial(0, (m.e_minus,), (0,))))
        half = GaussianRational(Fraction(1, 2 ** (m.e_plus + m.e_minus)))
        out = out + img.scale(Scalar.from_gaussian(c * half))
    return out


def iso_cw_to_a0(n, x):
    """Inverse identification: p goes to 2E-, q to 2E+, w_j fixed.

    Returns the canonical parameter-free representative (coefficient of
    the zeroth power after rewriting).
    """
    if x.signature != cw_odd_signature(n):
        raise AlgebraError("expected an element of C(%d, 2)" % (2 * n + 1,))
    out = ore_zero(n)
    for coeff, word in element_star_words(x):
        if coeff.lam_degree() > 0:
            raise AlgebraError("central parameter in coefficients: %s" % coeff)
        g = ore_scalar(n, coeff.constant())
        for kind, idx in word:
            if kind == "w":
                f = ore_fermi(n, idx)
            elif kind == "p":
                f = ore_e_minus(n).scale(2)
            else:
                f = ore_e_plus(n).scale(2)
            g = ore_product(g, f)
        out = out + g
    return specialize(out, GR_ZERO)


# -- rank reduction over the even Clifford algebra ---------------------------------


class OreTensorElement:
    """Element of C(2n) tensor A_L: Fermi word on the left, rank-0 normal
    form on the right, plain slotwise product."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        clean = {}
        if terms:
            for (mask, m), c in terms.items():
                c = c if isinstance(c, GaussianRational) else _coerce(c)
                if not c:
                    continue
                if mask < 0 or mask >> (2 * n):
                    raise AlgebraError("left Fermi bits outside C(%d)" % (2 * n,))
                if m.cliff >> 1:
                    raise AlgebraError("right factor must have rank 0")
                clean[(mask, m)] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OreTensorElement is immutable")

    def _check(self, other):
        if not isinstance(other, OreTensorElement) or self.n != other.n:
            raise AlgebraError("tensor rank mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _raw_tensor(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return _raw_tensor(self.n, {k: -c for k, c in self.terms.items()})

    def scale(self, s):
        s = s if isinstance(s, GaussianRational) else _coerce(s)
        if not s:
            return _raw_tensor(self.n, {})
        return _raw_tensor(self.n, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        out = {}
        for (m1, r1), c1 in self.terms.items():
            for (m2, r2), c2 in other.terms.items():
                csign, tcount, mask = _cliff_pair(m1, m2)
                base = c1 * c2
                if (csign < 0) ^ (tcount & 1):
                    base = -base
                rprod = ore_product(
                    OreElement(0, {r1: GR_ONE}), OreElement(0, {r2: GR_ONE})
                )
                for rm, rc in rprod.terms.items():
                    key = (mask, rm)
                    s = out.get(key)
                    v = base * rc
                    s = v if s is None else s + v
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return _raw_tensor(self.n, out)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, OreTensorElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for mask, m in sorted(self.terms, key=lambda k: (k[0], k[1])):
            c = self.terms[(mask, m)]
            left = " ".join(
                "w%d" % (i + 1) for i in range(mask.bit_length()) if mask >> i & 1
            )
            right = str(OreElement(0, {m: GR_ONE}))
            body = "%s (x) %s" % (left or "1", right)
            cs = str(Scalar.from_gaussian(c))
            bits.append(body if cs == "1" else "-%s" % body if cs == "-1" else "%s * %s" % (cs, body))
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out

    def __repr__(self):
        return "<OreTensorElement n=%d | %s>" % (self.n, self)


def _raw_tensor(n, clean):
    e = object.__new__(OreTensorElement)
    object.__setattr__(e, "n", n)
    object.__setattr__(e, "terms", clean)
    return e


def ore_tensor_zero(n):
    return OreTensorElement(n)


def ore_tensor_unit(n):
    return OreTensorElement(n, {(0, OreMonomial(0, 0, 0, 0)): GR_ONE})


def ore_tensor_of(n, mask, m, coeff=GR_ONE):
    return OreTensorElement(n, {(mask, m): coeff})


def _forward_images(n):
    """Tensor images of w_1..w_{2n+1}, E+, E-: every Fermi generator picks
    up the rank-0 involution on the right so that mixed pairs anticommute."""
    full = (1 << (2 * n)) - 1
    imgs = {}
    for i in range(1, 2 * n + 1):
        imgs[("w", i)] = ore_tensor_of(n, 1 << (i - 1), _P0)
    imgs[("w", 2 * n + 1)] = ore_tensor_of(n, full, _P0, i_power(n))
    imgs[("E+", 0)] = ore_tensor_of(n, 0, OreMonomial(0, 1, 0, 0))
    imgs[("E-", 0)] = ore_tensor_of(n, 0, OreMonomial(0, 0, 1, 0))
    return imgs


def periodicity2_forward(n, x):
    """Factor a rank-n element through C(2n) tensor A_L."""
    if x.n != n:
        raise AlgebraError("rank mismatch: %d vs %d" % (x.n, n))
    imgs = _forward_images(n)
    out = ore_tensor_zero(n)
    for m, c in x.terms.items():
        acc = ore_tensor_of(n, 0, OreMonomial(0, 0, 0, m.lam))
        for i in m.cliff_indices():
            acc = acc * imgs[("w", i)]
        for _ in range(m.e_plus):
            acc = acc * imgs[("E+", 0)]
        for _ in range(m.e_minus):
            acc = acc * imgs[("E-", 0)]
        out = out + acc.scale(c)
    return out


def periodicity2_inverse(n, x):
    """Rebuild the rank-n element: the rank-0 involution returns as the
    full volume word i^n w_1...w_{2n+1}."""
    if not isinstance(x, OreTensorElement) or x.n != n:
        raise AlgebraError("expected a rank-%d tensor element" % n)
    full = (1 << (2 * n + 1)) - 1
    vol = OreElement(n, {OreMonomial(full, 0, 0, 0): i_power(n)})
    out = ore_zero(n)
    for (mask, m), c in x.terms.items():
        body = OreElement(n, {OreMonomial(mask, 0, 0, 0): c})
        if (mask.bit_count() + m.cliff) & 1:
            body = ore_product(body, vol)
        body = ore_product(body, OreElement(n, {OreMonomial(0, m.e_plus, m.e_minus, m.lam): GR_ONE}))
        out = out + body
    return out


def periodicity2(n, direction, x):
    if direction == "forward":
        return periodicity2_forward(n, x)
    if direction == "inverse":
        return periodicity2_inverse(n, x)
    raise AlgebraError("direction must be 'forward' or 'inverse'")


def _gr_entry(s):
    if s.lam_degree() > 0:
        raise AlgebraError("matrix entry involves the central parameter: %s" % s)
    return s.constant()


def ore_to_matrix(n, x):
    """The size-2^n matrix realization over A_L: factor through the tensor
    algebra and send the even Clifford factor to its irreducible matrices."""
    forward = periodicity2_forward(n, x)
    desc = spin(n)
    sig = desc.signature()
    dim = 1 << n
    mat_cache = {}
    entries = [[ore_zero(0) for _ in range(dim)] for _ in range(dim)]
    for (mask, m), c in forward.terms.items():
        M = mat_cache.get(mask)
        if M is None:
            M = rep_matrix(desc, monomial_element(sig, CwMonomial(mask, (), ())))
            mat_cache[mask] = M
        body = OreElement(0, {m: c})
        for i in range(dim):
            for j in range(dim):
                g = _gr_entry(M[i, j])
                if g:
                    entries[i][j] = entries[i][j] + body.scale(g)
    return AlgebraMatrix(entries)


# -- first-order deformation cochain ------------------------------------------------


def deformation_cochain_c1(n, a, b):
    """Coefficient of the first power of the central parameter in the
    deformed product, transported back to C(2n+1, 2)."""
    prod = ore_product(iso_cw_to_a0(n, a), iso_cw_to_a0(n, b))
    return iso_a0_to_cw(n, prod.lam_coefficient(1))


def volume_word_element(n):
    """i^n w_1...w_{2n+1} inside C(2n+1, 2)."""
    sig = cw_odd_signature(n)
    full = (1 << (2 * n + 1)) - 1
    return monomial_element(sig, CwMonomial(full, (0,), (0,)), scalar_i_power(n))


def compare_cocycle(n):
    """Antisymmetrize the first-order cochain on generator pairs and match
    it against the volume-word cocycle.

    Returns a report whose "constant" entry is the single proportionality
    scalar on the Bose-Bose block (normalized so the (p, q) slot carries
    symplectic value 1); raises if the table is not proportional.
    """
    sig = cw_odd_signature(n)
    ws = [fermi_gen(sig, j) for j in range(1, 2 * n + 2)]
    from .algebra import bose_p, bose_q

    p1, q1 = bose_p(sig, 1), bose_q(sig, 1)
    gens = [("w%d" % (j + 1), w) for j, w in enumerate(ws)]
    gens += [("p1", p1), ("q1", q1)]
    table = {}
    for na, a in gens:
        for nb, b in gens:
            lhs = deformation_cochain_c1(n, a, b) - deformation_cochain_c1(n, b, a)
            table[(na, nb)] = lhs.scale(Scalar.from_gaussian(GaussianRational(Fraction(1, 2))))
    failures = []
    cases = 0
    vol = volume_word_element(n)
    # the (p1, q1) slot fixes the constant
    probe = table[("p1", "q1")]
    terms = list(probe.terms.items())
    if len(terms) != 1:
        raise AlgebraError("no-proportionality: %s" % probe)
    mono, coeff = terms[0]
    vmono, vcoeff = next(iter(vol.terms.items()))
    if mono != vmono:
        raise AlgebraError("no-proportionality: %s" % probe)
    constant = coeff.constant() * vcoeff.constant().inverse()
    sympl = {("p1", "q1"): 1, ("q1", "p1"): -1}
    for na, _ in gens:
        for nb, _ in gens:
            cases += 1
            s = sympl.get((na, nb), 0)
            want = vol.scale(Scalar.from_gaussian(constant * GaussianRational(s))) if s else zero(sig)
            got = table[(na, nb)]
            if got != want:
                if na.startswith(("p", "q")) and nb.startswith(("p", "q")):
                    raise AlgebraError("no-proportionality at (%s, %s)" % (na, nb))
                failures.append({"inputs": [na, nb], "lhs": str(got), "rhs": str(want)})
    return {
        "suite": "cocycle",
        "cases": cases,
        "failures": failures,
        "constant": constant,
    }


# -- ghost and Casimir identities ---------------------------------------------------

_GHOST_SAMPLE_VALUES = (
    GaussianRational(Fraction(1)),
    GaussianRational(Fraction(2)),
    GaussianRational(Fraction(-3, 2)),
    GaussianRational(Fraction(0), Fraction(1)),
    GaussianRational(Fraction(1, 3), Fraction(-1, 2)),
)


def ghost_identities(n, lam_samples=_GHOST_SAMPLE_VALUES):
    """Exact checks of the distinguished involution-like element."""
    th = ghost_theta(n)
    ep, em = ore_e_plus(n), ore_e_minus(n)
    failures = []
    cases = 0

    def check(name, lhs, rhs):
        nonlocal cases
        cases += 1
        if lhs != rhs:
            failures.append({"inputs": [name], "lhs": str(lhs), "rhs": str(rhs)})

    check(
        "theta = 1/4 + [E+, E-]",
        th,
        ore_scalar(n, Fraction(1, 4)) + ore_lie_bracket(ep, em),
    )
    check("theta E+ = -E+ theta", ore_anti_bracket(th, ep), ore_zero(n))
    check("theta E- = -E- theta", ore_anti_bracket(th, em), ore_zero(n))
    check("theta^2 = L^2", ore_product(th, th), ore_lambda(n, 2))
    for i in range(1, 2 * n + 2):
        w = ore_fermi(n, i)
        check("[theta, w%d] = 0" % i, ore_lie_bracket(th, w), ore_zero(n))
    check("[theta, L] = 0", ore_lie_bracket(th, ore_lambda(n)), ore_zero(n))
    casimir = ore_product(th, th) - ore_scalar(n, Fraction(1, 16))
    for name, g in [("w1", ore_fermi(n, 1)), ("E+", ep), ("E-", em), ("L", ore_lambda(n))]:
        check("[theta^2 - 1/16, %s] = 0" % name, ore_lie_bracket(casimir, g), ore_zero(n))
    for lam in lam_samples:
        if not lam:
            continue
        pbar = specialize(th.scale(lam.inverse()), lam)
        check(
            "(theta/lam)^2 = 1 at lam = %s" % Scalar.from_gaussian(lam),
            specialized_product(pbar, pbar, lam),
            ore_unit(n),
        )
    return {"suite": "ghost", "cases": cases, "failures": failures}


# -- the one-variable polynomial representation ------------------------------------


class PolyOperator:
    """Exact operator on one-variable polynomials.

    Polynomials are sparse maps {exponent: Gaussian rational}; the rule
    gives the image of each power and extends linearly.
    """

    __slots__ = ("rule",)

    def __init__(self, rule):
        object.__setattr__(self, "rule", rule)

    def __setattr__(self, name, value):
        raise AttributeError("PolyOperator is immutable")

    def apply(self, poly):
        out = {}
        for m, c in poly.items():
            c = c if isinstance(c, GaussianRational) else _coerce(c)
            if not c:
                continue
            for mm, cc in self.rule(m).items():
                s = out.get(mm)
                v = c * cc
                s = v if s is None else s + v
                if s:
                    out[mm] = s
                else:
                    out.pop(mm, None)
        return out


def poly_clean(poly):
    """Canonical sparse form of {exponent: coefficient}."""
    out = {}
    for m, c in poly.items():
        c = c if isinstance(c, GaussianRational) else _coerce(c)
        if c:
            out[m] = out.get(m, GR_ZERO) + c
            if not out[m]:
                del out[m]
    return out


def verma_operator(lam, token):
    """Generator action on polynomials: E+ is half-derivative minus lam
    times the odd-part difference quotient, E- multiplies by -z/2, P is
    the parity flip."""
    lam = lam if isinstance(lam, GaussianRational) else _coerce(lam)
    if token == "E+":

        def rule(m):
            if m == 0:
                return {}
            c = GaussianRational(Fraction(m, 2))
            if m & 1:
                c = c - lam - lam
            return {m - 1: c} if c else {}

    elif token == "E-":

        def rule(m):
            return {m + 1: GaussianRational(Fraction(-1, 2))}

    elif token == "P":

        def rule(m):
            return {m: GaussianRational(Fraction(-1 if m & 1 else 1))}

    else:
        raise AlgebraError("unknown token %r" % (token,))
    return PolyOperator(rule)


def verma_apply(lam, a, f):
    """Apply a rank-0 element to a polynomial through the lam-action."""
    if a.n != 0:
        raise AlgebraError("rank-%d element: use the matrix transport instead" % a.n)
    lam = lam if isinstance(lam, GaussianRational) else _coerce(lam)
    ops = {t: verma_operator(lam, t) for t in ("E+", "E-", "P")}
    out = {}
    for m, c in a.terms.items():
        g = poly_clean(f)
        for _ in range(m.e_minus):
            g = ops["E-"].apply(g)
        for _ in range(m.e_plus):
            g = ops["E+"].apply(g)
        if m.cliff:
            g = ops["P"].apply(g)
        coeff = c
        for _ in range(m.lam):
            coeff = coeff * lam
        for mm, cc in g.items():
            s = out.get(mm)
            v = cc * coeff
            s = v if s is None else s + v
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
    return out


# -- finite-dimensional quotients ---------------------------------------------------


def _check_half_integer(h):
    h = Fraction(h)
    if h < 0 or (2 * h).denominator != 1:
        raise AlgebraError("h must be a non-negative half-integer, got %s" % h)
    return h


def _rank0_quotient_matrices(h, twist):
    """Generator matrices on the span of z^0..z^{4h} (highest power killed
    by the weight choice lam = h + 1/4)."""
    d = int(4 * h) + 1
    lam_use = h + Fraction(1, 4)
    zero_s, one_s = Scalar(), S_ONE

    ep = [[zero_s] * d for _ in range(d)]
    em = [[zero_s] * d for _ in range(d)]
    pp = [[zero_s] * d for _ in range(d)]
    for m in range(d):
        if m:
            c = Fraction(m, 2) - (lam_use * 2 if m & 1 else 0)
            if c:
                ep[m - 1][m] = Scalar.from_gaussian(GaussianRational(c))
        if m + 1 < d:
            em[m + 1][m] = Scalar.from_gaussian(GaussianRational(Fraction(-1, 2)))
        pp[m][m] = one_s if (m & 1) == 0 else -one_s
        if twist < 0:
            pp[m][m] = -pp[m][m]
    return {
        "P": ScalarMatrix(pp),
        "E+": ScalarMatrix(ep),
        "E-": ScalarMatrix(em),
    }


def _parse_sign(sign):
    if sign in ("+", 1, "plus"):
        return 1
    if sign in ("-", -1, "minus"):
        return -1
    raise AlgebraError("sign must be '+' or '-', got %r" % (sign,))


def pi_h_lambda(h, sign):
    """The specialization value carried by the quotient representation."""
    h = _check_half_integer(h)
    return GaussianRational(_parse_sign(sign) * (h + Fraction(1, 4)))


def pi_h_matrix(n, h, sign, x):
    """Evaluate any rank-n element in the dimension-2^n(4h+1) quotient."""
    h = _check_half_integer(h)
    twist = _parse_sign(sign)
    if x.n != n:
        raise AlgebraError("rank mismatch: %d vs %d" % (x.n, n))
    rank0 = _rank0_quotient_matrices(h, twist)
    lam_val = Scalar.from_gaussian(pi_h_lambda(h, sign))
    d0 = int(4 * h) + 1
    desc = spin(n)
    sig = desc.signature()
    dim_left = 1 << n
    forward = periodicity2_forward(n, x)
    left_cache = {}
    right_cache = {}
    total = None
    for (mask, m), c in forward.terms.items():
        L = left_cache.get(mask)
        if L is None:
            L = rep_matrix(desc, monomial_element(sig, CwMonomial(mask, (), ())))
            left_cache[mask] = L
        key = (m.cliff, m.e_plus, m.e_minus, m.lam)
        R = right_cache.get(key)
        if R is None:
            R = ScalarMatrix.identity(d0)
            if m.cliff:
                R = R * rank0["P"]
            for _ in range(m.e_plus):
                R = R * rank0["E+"]
            for _ in range(m.e_minus):
                R = R * rank0["E-"]
            for _ in range(m.lam):
                R = R.scale(lam_val)
            right_cache[key] = R
        piece = L.kron(R).scale(Scalar.from_gaussian(c))
        total = piece if total is None else total + piece
    if total is None:
        z = Scalar()
        dim = dim_left * d0
        total = ScalarMatrix([[z] * dim for _ in range(dim)])
    return total


def finite_irrep_pi_h(n, h, sign):
    """Generator matrices of the finite quotient, keyed by generator name
    (the central parameter maps to its specialization times the identity)."""
    h = _check_half_integer(h)
    dim = (1 << n) * (int(4 * h) + 1)
    out = {}
    for i in range(1, 2 * n + 2):
        out["w%d" % i] = pi_h_matrix(n, h, sign, ore_fermi(n, i))
    out["E+"] = pi_h_matrix(n, h, sign, ore_e_plus(n))
    out["E-"] = pi_h_matrix(n, h, sign, ore_e_minus(n))
    out["L"] = ScalarMatrix.identity(dim).scale(Scalar.from_gaussian(pi_h_lambda(h, sign)))
    return out


def matrix_direct_sum(a, b):
    ra, ca = a.shape
    rb, cb = b.shape
    z = Scalar()
    rows = []
    for i in range(ra):
        rows.append(list(a.rows[i]) + [z] * cb)
    for i in range(rb):
        rows.append([z] * ca + list(b.rows[i]))
    return ScalarMatrix(rows)


def rep_direct_sum(rep_a, rep_b):
    if set(rep_a) != set(rep_b):
        raise AlgebraError("generator sets differ")
    return {k: matrix_direct_sum(rep_a[k], rep_b[k]) for k in rep_a}


# -- exact structure probes ---------------------------------------------------------


def bounded_monomials(n, max_total_degree):
    """All normal-form monomials with Fermi+Bose degree plus twice the
    central power at most the bound, in canonical order."""
    width = 2 * n + 1
    out = []
    for mask in range(1 << width):
        base = mask.bit_count()
        if base > max_total_degree:
            continue
        for r in range((max_total_degree - base) // 2 + 1):
            rest = max_total_degree - base - 2 * r
            for a in range(rest + 1):
                for b in range(rest - a + 1):
                    out.append(OreMonomial(mask, a, b, r))
    out.sort(key=lambda m: (m.degree(), m.lam, m.cliff, m.e_plus, m.e_minus))
    return out


def center_probe(n, max_total_degree):
    """Basis of the degree-bounded solutions of [x, generator] = 0."""
    monos = bounded_monomials(n, max_total_degree)
    gens = ore_generators(n)
    rows = {}
    for gi, g in enumerate(gens):
        for m in monos:
            comm = ore_lie_bracket(OreElement(n, {m: GR_ONE}), g)
            for rm, c in comm.terms.items():
                rows.setdefault((gi, rm), {})[m] = c
    basis = sparse_nullspace([rows[k] for k in sorted(rows)], monos)
    return [OreElement(n, vec) for vec in basis]


def commutant_probe(rep):
    """Dimension of {X : [X, M] = 0 for every generator matrix M}."""
    mats = [rep[k] for k in sorted(rep)] if isinstance(rep, dict) else list(rep)
    if not mats:
        raise AlgebraError("empty representation")
    d = mats[0].shape[0]
    variables = [(i, j) for i in range(d) for j in range(d)]
    rows = []
    for gi, M in enumerate(mats):
        if M.shape != (d, d):
            raise AlgebraError("mixed matrix sizes")
        for i in range(d):
            for j in range(d):
                row = {}
                for k in range(d):
                    a = _gr_entry(M[k, j])
                    if a:
                        row[(i, k)] = row.get((i, k), GR_ZERO) + a
                    b = _gr_entry(M[i, k])
                    if b:
                        row[(k, j)] = row.get((k, j), GR_ZERO) - b
                row = {key: v for key, v in row.items() if v}
                if row:
                    rows.append(row)
    return len(sparse_nullspace(rows, variables))


# -- the three-element orthosymplectic check ---------------------------------------


def osp22_k_element(n):
    """K = -1/4 i^n w_1...w_{2n+1} + L."""
    full = (1 << (2 * n + 1)) - 1
    quarter = i_power(n) * GaussianRational(Fraction(-1, 4))
    return OreElement(n, {OreMonomial(full, 0, 0, 0): quarter}) + ore_lambda(n)


def osp22_check(n):
    """Exact triple-bracket law on {K, E+, E-} with the stated pairing."""
    K = osp22_k_element(n)
    ep, em = ore_e_plus(n), ore_e_minus(n)
    basis = [("K", K, 0), ("E+", ep, 1), ("E-", em, 1)]
    form = {
        ("K", "K"): GaussianRational(Fraction(1, 8)),
        ("E+", "E-"): GaussianRational(Fraction(-1, 4)),
        ("E-", "E+"): GaussianRational(Fraction(1, 4)),
    }
    failures = []
    cases = 0
    for nx, x, px in basis:
        for ny, y, py in basis:
            for nz, z, pz in basis:
                cases += 1
                lhs = ore_super_bracket(ore_super_bracket(x, y), z)
                cyz = form.get((ny, nz), GR_ZERO)
                cxz = form.get((nx, nz), GR_ZERO)
                rhs = x.scale(cyz + cyz) - y.scale(cxz + cxz).scale(
                    GaussianRational(-1 if px and py else 1)
                )
                if lhs != rhs:
                    failures.append(
                        {"inputs": [nx, ny, nz], "lhs": str(lhs), "rhs": str(rhs)}
                    )
    return {"suite": "osp22", "cases": cases, "failures": failures}
