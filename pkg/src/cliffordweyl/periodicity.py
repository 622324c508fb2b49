"""Tensor products, periodicity isomorphisms, and matrix realizations.

The tensor product implemented here is the plain one,

    (a (x) b) (a' (x) b') = (a * a') (x) (b * b'),

with no crossing sign.  The twist that turns the dimension-shift maps into
algebra homomorphisms is carried entirely by the volume involution z of the
even Fermi factor, which anticommutes with each of that factor's generators.
A crossing sign graded by Bose parity would agree with this product on every
tensor algebra built in this module, because left factors never carry Bose
generators.

Layout of the dimension-shift maps (2m even generators split off the front):

    forward:  w_j        -> w_j (x) 1            (j <= 2m)
              w_{2m+j}   -> z (x) w'_j           z = i^m w_1 * ... * w_{2m}
              p_j, q_j   -> z (x) p_j, z (x) q_j
    inverse:  left w_j   -> w_j
              right gen  -> z~ * (shifted gen)   z~ the same word upstairs

Both directions extend from generators through the exact star-word
decomposition of an element, so round-trips are literal identities.
"""

from .algebra import (
    AlgebraError,
    AlgebraSignature,
    CwElement,
    CwMonomial,
    SignatureMismatch,
    bose_p,
    bose_q,
    fermi_gen,
    monomial_element,
    unit,
    zero,
)
from .reps import rep_matrix, spin
from .scalars import S_HALF, S_ONE, Scalar, _coerce_scalar, scalar_i_power
from .starprod import element_star_words, star


# -- graded-free tensor elements -------------------------------------------------


class TensorElement:
    """Sparse sum of pure tensors m_left (x) m_right with Scalar coefficients."""

    __slots__ = ("left_signature", "right_signature", "terms")

    def __init__(self, left_signature, right_signature, terms=None):
        clean = {}
        if terms:
            for (ml, mr), c in terms.items():
                c = c if isinstance(c, Scalar) else _coerce_scalar(c)
                if c:
                    clean[(ml, mr)] = c
        object.__setattr__(self, "left_signature", left_signature)
        object.__setattr__(self, "right_signature", right_signature)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    def _same_shape(self, other):
        if (
            self.left_signature != other.left_signature
            or self.right_signature != other.right_signature
        ):
            raise SignatureMismatch(
                "tensor shapes differ: %r vs %r"
                % (
                    (self.left_signature, self.right_signature),
                    (other.left_signature, other.right_signature),
                )
            )

    def __add__(self, other):
        self._same_shape(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return _raw_tensor(self.left_signature, self.right_signature, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return _raw_tensor(
            self.left_signature,
            self.right_signature,
            {m: -c for m, c in self.terms.items()},
        )

    def scale(self, s):
        s = s if isinstance(s, Scalar) else _coerce_scalar(s)
        if not s:
            return _raw_tensor(self.left_signature, self.right_signature, {})
        return _raw_tensor(
            self.left_signature,
            self.right_signature,
            {m: c * s for m, c in self.terms.items()},
        )

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.left_signature == other.left_signature
            and self.right_signature == other.right_signature
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (
                self.left_signature,
                self.right_signature,
                frozenset(self.terms.items()),
            )
        )

    def __repr__(self):
        return "<TensorElement %r (x) %r | %d terms>" % (
            self.left_signature,
            self.right_signature,
            len(self.terms),
        )

    def to_json(self):
        out = []
        for (ml, mr), c in sorted(self.terms.items()):
            out.append(
                {
                    "coeff": c.to_json(),
                    "left": _monomial_json(ml),
                    "right": _monomial_json(mr),
                }
            )
        return out

    @staticmethod
    def from_json(left_signature, right_signature, data):
        terms = {}
        for rec in data:
            key = (
                _monomial_from_json(left_signature, rec["left"]),
                _monomial_from_json(right_signature, rec["right"]),
            )
            terms[key] = Scalar.from_json(rec["coeff"])
        return TensorElement(left_signature, right_signature, terms)


def _raw_tensor(ls, rs, clean):
    t = object.__new__(TensorElement)
    object.__setattr__(t, "left_signature", ls)
    object.__setattr__(t, "right_signature", rs)
    object.__setattr__(t, "terms", clean)
    return t


def _monomial_json(m):
    return {
        "cliff": m.cliff_indices(),
        "p": list(m.wp),
        "q": list(m.wq),
    }


def _monomial_from_json(sig, rec):
    mask = 0
    for i in rec["cliff"]:
        mask |= 1 << (i - 1)
    return CwMonomial(mask, tuple(rec["p"]), tuple(rec["q"]))


def tensor_zero(left_signature, right_signature):
    return TensorElement(left_signature, right_signature)


def tensor_unit(left_signature, right_signature):
    one = CwMonomial(0, (0,) * left_signature.n_bose, (0,) * left_signature.n_bose)
    one_r = CwMonomial(0, (0,) * right_signature.n_bose, (0,) * right_signature.n_bose)
    return TensorElement(left_signature, right_signature, {(one, one_r): S_ONE})


def tensor_of(a, b):
    """Outer product: the tensor with terms a_m (x) b_m' for every term pair."""
    terms = {}
    for ml, cl in a.terms.items():
        for mr, cr in b.terms.items():
            terms[(ml, mr)] = cl * cr
    return TensorElement(a.signature, b.signature, terms)


def tensor_star(x, y):
    """Slotwise product of tensor elements (no crossing sign; see module doc)."""
    x._same_shape(y)
    ls, rs = x.left_signature, x.right_signature
    out = {}
    for (al, ar), c1 in x.terms.items():
        for (bl, br), c2 in y.terms.items():
            left = star(monomial_element(ls, al), monomial_element(ls, bl))
            right = star(monomial_element(rs, ar), monomial_element(rs, br))
            base = c1 * c2
            for ml, cl in left.terms.items():
                for mr, cr in right.terms.items():
                    key = (ml, mr)
                    add = base * cl * cr
                    s = out.get(key)
                    s = add if s is None else s + add
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
    return _raw_tensor(ls, rs, out)


# -- the even-factor volume involution -------------------------------------------


def volume_involution(signature, m):
    """z = i^m w_1 * ... * w_{2m}: squares to 1, anticommutes with w_1..w_{2m}."""
    if 2 * m > signature.n_fermi:
        raise AlgebraError("volume word needs %d Fermi generators" % (2 * m))
    k = signature.n_bose
    mono = CwMonomial((1 << (2 * m)) - 1, (0,) * k, (0,) * k)
    return monomial_element(signature, mono, scalar_i_power(m))


# -- dimension shift: split 2m even generators off the front ---------------------


def periodicity1_forward(m, n, k, x):
    """Homomorphism from the (2m+n, k)-signature algebra to the tensor algebra."""
    src = AlgebraSignature(2 * m + n, k)
    if x.signature != src:
        raise SignatureMismatch("expected element of %r, got %r" % (src, x.signature))
    left = AlgebraSignature(2 * m, 0)
    right = AlgebraSignature(n, k)
    z = volume_involution(left, m)
    one_l, one_r = unit(left), unit(right)
    images = {}
    for j in range(1, 2 * m + 1):
        images[("w", j)] = tensor_of(fermi_gen(left, j), one_r)
    for j in range(1, n + 1):
        images[("w", 2 * m + j)] = tensor_of(z, fermi_gen(right, j))
    for j in range(1, k + 1):
        images[("p", j)] = tensor_of(z, bose_p(right, j))
        images[("q", j)] = tensor_of(z, bose_q(right, j))
    out = tensor_zero(left, right)
    for c, word in element_star_words(x):
        cur = tensor_unit(left, right)
        for tok in word:
            cur = tensor_star(cur, images[tok])
        out = out + cur.scale(c)
    return out


def periodicity1_inverse(m, n, k, X):
    """Inverse homomorphism, defined through the upstairs volume word."""
    left = AlgebraSignature(2 * m, 0)
    right = AlgebraSignature(n, k)
    if X.left_signature != left or X.right_signature != right:
        raise SignatureMismatch(
            "expected tensor over %r (x) %r" % (left, right)
        )
    tgt = AlgebraSignature(2 * m + n, k)
    z = volume_involution(tgt, m)
    images = {}
    for j in range(1, n + 1):
        images[("w", j)] = star(z, fermi_gen(tgt, 2 * m + j))
    for j in range(1, k + 1):
        images[("p", j)] = star(z, bose_p(tgt, j))
        images[("q", j)] = star(z, bose_q(tgt, j))
    out = zero(tgt)
    for (ml, mr), c in X.terms.items():
        # the left factor is pure Fermi: its monomial is already the star
        # word of its generators in ascending order
        acc = monomial_element(tgt, CwMonomial(ml.cliff, (0,) * k, (0,) * k))
        for cr, word in element_star_words(monomial_element(right, mr)):
            cur = acc.scale(cr)
            for tok in word:
                cur = star(cur, images[tok])
            out = out + cur.scale(c)
    return out


# -- odd Fermi count: split into two even-sized components -----------------------


def odd_projections(n):
    """The central idempotents (1 +/- i^n w_1*...*w_{2n+1})/2 upstairs."""
    sig = AlgebraSignature(2 * n + 1, 0)
    u = monomial_element(sig, CwMonomial((1 << (2 * n + 1)) - 1, (), ()), scalar_i_power(n))
    one = unit(sig)
    return (one + u).scale(S_HALF), (one - u).scale(S_HALF)


def odd_split(n, x):
    """Components of x in the two even-sized quotients (pair of elements).

    The last generator maps to +/- i^n w_1*...*w_{2n} respectively; the pair
    map is an algebra isomorphism onto the product of the two quotients.
    """
    src = AlgebraSignature(2 * n + 1, 0)
    if x.signature != src:
        raise SignatureMismatch("expected element of %r, got %r" % (src, x.signature))
    tgt = AlgebraSignature(2 * n, 0)
    vol = monomial_element(tgt, CwMonomial((1 << (2 * n)) - 1, (), ()), scalar_i_power(n))
    top = 1 << (2 * n)
    plus, minus = zero(tgt), zero(tgt)
    for mono, c in x.terms.items():
        body = monomial_element(tgt, CwMonomial(mono.cliff & (top - 1), (), ()), c)
        if mono.cliff & top:
            # ascending star word ends with the last generator
            plus = plus + star(body, vol)
            minus = minus - star(body, vol)
        else:
            plus = plus + body
            minus = minus + body
    return plus, minus


def odd_join(n, c_plus, c_minus):
    """Inverse of odd_split: assemble from the two components."""
    tgt = AlgebraSignature(2 * n, 0)
    if c_plus.signature != tgt or c_minus.signature != tgt:
        raise SignatureMismatch("expected pair of elements of %r" % (tgt,))
    src = AlgebraSignature(2 * n + 1, 0)
    zp, zm = odd_projections(n)
    return star(zp, include_element(c_plus, src)) + star(zm, include_element(c_minus, src))


def include_element(x, bigger_signature):
    """Reinterpret x inside a signature with at least as many Fermi generators."""
    sig = x.signature
    if (
        bigger_signature.n_fermi < sig.n_fermi
        or bigger_signature.n_bose != sig.n_bose
        or bigger_signature.t_param != sig.t_param
    ):
        raise SignatureMismatch("cannot include %r into %r" % (sig, bigger_signature))
    return CwElement(bigger_signature, dict(x.terms))


# -- matrices over an entry algebra ----------------------------------------------


def _entry_tag(e):
    tag = getattr(e, "signature", None)
    if tag is None:
        tag = getattr(e, "n", None)
    if tag is None:
        raise AlgebraError("matrix entries must be algebra elements, got %r" % (e,))
    return (type(e).__name__, tag)


class AlgebraMatrix:
    """Square matrix with entries in one algebra (entrywise exact arithmetic)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(r) for r in entries)
        r = len(rows)
        if any(len(row) != r for row in rows):
            raise AlgebraError("matrix must be square")
        tags = {_entry_tag(e) for row in rows for e in row}
        if len(tags) > 1:
            raise AlgebraError("mixed entry algebras: %r" % (tags,))
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraMatrix is immutable")

    @staticmethod
    def identity(r, one):
        z = one - one
        return AlgebraMatrix(
            [[one if i == j else z for j in range(r)] for i in range(r)]
        )

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, rc):
        return self.entries[rc[0]][rc[1]]

    def __add__(self, other):
        self._check_like(other)
        return AlgebraMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraMatrix([[-e for e in row] for row in self.entries])

    def scale(self, s):
        return AlgebraMatrix([[e.scale(s) for e in row] for row in self.entries])

    def _check_like(self, other):
        if not isinstance(other, AlgebraMatrix):
            raise AlgebraError("expected AlgebraMatrix, got %r" % (other,))
        if self.size != other.size:
            raise AlgebraError("size mismatch: %d vs %d" % (self.size, other.size))
        if self.size and _entry_tag(self.entries[0][0]) != _entry_tag(other.entries[0][0]):
            raise AlgebraError("entry algebras differ")

    def __mul__(self, other):
        return matrix_star(self, other)

    def __eq__(self, other):
        return isinstance(other, AlgebraMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "<AlgebraMatrix %dx%d>" % (self.size, self.size)

    def to_json(self):
        return {
            "size": self.size,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }


def matrix_star(A, B):
    """Matrix product with entrywise algebra product."""
    A._check_like(B)
    r = A.size
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = A[i, 0] * B[0, j]
            for l in range(1, r):
                acc = acc + A[i, l] * B[l, j]
            row.append(acc)
        out.append(row)
    return AlgebraMatrix(out)


def module_transport(action, r):
    """Lift a module action of the entry algebra to r-vectors over the matrix algebra.

    action(a, v) must apply an entry-algebra element to a carrier vector; the
    returned callable applies an AlgebraMatrix to a list of r carrier vectors.
    """

    def act_matrix(M, vectors):
        if M.size != r or len(vectors) != r:
            raise AlgebraError("transport expects size %d" % r)
        out = []
        for i in range(r):
            acc = None
            for j in range(r):
                w = action(M[i, j], vectors[j])
                acc = w if acc is None else acc + w
            out.append(acc)
        return out

    return act_matrix


# -- full even reduction to a matrix algebra --------------------------------------


def cw_to_matrix(n, k, x):
    """Matrix of size 2^n over the pure Bose algebra realizing x.

    Splits all 2n Fermi generators off the front in one dimension-shift step,
    then replaces the Fermi factor by its matrix in the even carrier.
    """
    src = AlgebraSignature(2 * n, k)
    if x.signature != src:
        raise SignatureMismatch("expected element of %r, got %r" % (src, x.signature))
    X = periodicity1_forward(n, 0, k, x)
    left = X.left_signature
    right = X.right_signature
    desc = spin(n)
    dim = 1 << n
    entries = [[zero(right) for _ in range(dim)] for _ in range(dim)]
    mat_cache = {}
    for (ml, mr), c in X.terms.items():
        M = mat_cache.get(ml.cliff)
        if M is None:
            M = rep_matrix(desc, monomial_element(left, ml))
            mat_cache[ml.cliff] = M
        body = monomial_element(right, mr, c)
        for i in range(dim):
            for j in range(dim):
                if M[i, j]:
                    entries[i][j] = entries[i][j] + body.scale(M[i, j])
    return AlgebraMatrix(entries)
