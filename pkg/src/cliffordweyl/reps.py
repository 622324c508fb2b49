"""Concrete faithful representations on Grassmann/polynomial vectors.

The carrier is the span of monomials xi^G x^E (G a Grassmann bitset of
length ell, E a polynomial multi-exponent of length k).  Generator actions:

    Fermi ladder pairs   Q_j = xi_j ^ .   P_j = d/dxi_j
    with w_{2j-1} = Q_j + P_j  and  w_{2j} = i (Q_j - P_j);
    an unpaired last generator w_{2l+1} acts as +- the parity operator
    (-1)^{total degree} (the sign picks the plus/minus module variant).

    Bose generators      p_j = (-1)^{|G|} d/dx_j   q_j = (-1)^{|G|} x_j .

The (-1)^{|G|} factor on the Bose actions makes the Fermi and Bose
generators anticommute as operators, matching the product's sign rule.
A general element acts through its star-word decomposition, so
act(a * b, v) = act(a, act(b, v)) holds exactly --- which is the independent
cross-check of the product kernels.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .algebra import AlgebraError, AlgebraSignature, fermi_gen, unit, zero
from .scalars import S_HALF, S_ONE, Scalar, _coerce_scalar, scalar_i_power
from .starprod import _shuffle_parity, element_star_words, star


class RepKind(enum.Enum):
    SPIN = "spin"
    SPIN_PLUS = "spin+"
    SPIN_MINUS = "spin-"
    METAPLECTIC = "metaplectic"
    SPIN_METAPLECTIC = "spin-metaplectic"
    SPIN_METAPLECTIC_PLUS = "spin-metaplectic+"
    SPIN_METAPLECTIC_MINUS = "spin-metaplectic-"


_ODD_KINDS = {RepKind.SPIN_PLUS, RepKind.SPIN_MINUS,
              RepKind.SPIN_METAPLECTIC_PLUS, RepKind.SPIN_METAPLECTIC_MINUS}
_MINUS_KINDS = {RepKind.SPIN_MINUS, RepKind.SPIN_METAPLECTIC_MINUS}
_FINITE_KINDS = {RepKind.SPIN, RepKind.SPIN_PLUS, RepKind.SPIN_MINUS}


class RepDescriptor(NamedTuple):
    kind: RepKind
    ell: int  # Grassmann variables in the carrier
    k: int  # polynomial variables in the carrier

    def signature(self):
        n = 2 * self.ell + (1 if self.kind in _ODD_KINDS else 0)
        return AlgebraSignature(n, self.k)

    def finite_dimension(self):
        if self.kind not in _FINITE_KINDS:
            raise AlgebraError("carrier of %s is infinite-dimensional" % (self.kind,))
        return 1 << self.ell


def spin(ell):
    return RepDescriptor(RepKind.SPIN, ell, 0)


def spin_plus(ell):
    return RepDescriptor(RepKind.SPIN_PLUS, ell, 0)


def spin_minus(ell):
    return RepDescriptor(RepKind.SPIN_MINUS, ell, 0)


def metaplectic(k):
    return RepDescriptor(RepKind.METAPLECTIC, 0, k)


def spin_metaplectic(ell, k):
    return RepDescriptor(RepKind.SPIN_METAPLECTIC, ell, k)


def spin_metaplectic_plus(ell, k):
    return RepDescriptor(RepKind.SPIN_METAPLECTIC_PLUS, ell, k)


def spin_metaplectic_minus(ell, k):
    return RepDescriptor(RepKind.SPIN_METAPLECTIC_MINUS, ell, k)


class GrassPolyVector:
    """Sparse exact vector: finite map (grass bitset, poly exps) -> Scalar."""

    __slots__ = ("ell", "k", "terms")

    def __init__(self, ell, k, terms=None):
        clean = {}
        if terms:
            for (g, e), c in terms.items():
                c = c if isinstance(c, Scalar) else _coerce_scalar(c)
                if not c:
                    continue
                if g < 0 or g >> ell:
                    raise AlgebraError("Grassmann bits outside carrier")
                if len(e) != k or any(x < 0 for x in e):
                    raise AlgebraError("bad polynomial exponents %r" % (e,))
                clean[(g, tuple(e))] = c
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GrassPolyVector is immutable")

    @staticmethod
    def basis(ell, k, g=0, e=None):
        e = (0,) * k if e is None else tuple(e)
        return GrassPolyVector(ell, k, {(g, e): S_ONE})

    def _same_carrier(self, other):
        if (self.ell, self.k) != (other.ell, other.k):
            raise AlgebraError("carrier mismatch")

    def __add__(self, other):
        self._same_carrier(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return _raw_vector(self.ell, self.k, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return _raw_vector(self.ell, self.k, {m: -c for m, c in self.terms.items()})

    def scale(self, s):
        s = s if isinstance(s, Scalar) else _coerce_scalar(s)
        if not s:
            return _raw_vector(self.ell, self.k, {})
        return _raw_vector(self.ell, self.k, {m: c * s for m, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, GrassPolyVector)
            and (self.ell, self.k) == (other.ell, other.k)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ell, self.k, frozenset(self.terms.items())))

    def total_degree_parity(self, key):
        g, e = key
        return (g.bit_count() + sum(e)) & 1

    def __repr__(self):
        if not self.terms:
            return "<vec 0>"
        bits = []
        for (g, e), c in sorted(self.terms.items()):
            facs = ["xi%d" % (i + 1) for i in range(self.ell) if g >> i & 1]
            facs += ["x%d^%d" % (i + 1, n) for i, n in enumerate(e) if n]
            bits.append("%s*%s" % (c, " ".join(facs) if facs else "1"))
        return "<vec %s>" % " + ".join(bits)


def _raw_vector(ell, k, clean):
    v = object.__new__(GrassPolyVector)
    object.__setattr__(v, "ell", ell)
    object.__setattr__(v, "k", k)
    object.__setattr__(v, "terms", clean)
    return v


def _parity_below(mask, i):
    return (mask & ((1 << i) - 1)).bit_count() & 1


def _gen_action(desc, token, v):
    """Action of one generator token on a vector."""
    kind, idx = token
    out = {}

    def add(key, c):
        s = out.get(key)
        s = c if s is None else s + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    if kind == "w":
        odd_index = 2 * desc.ell + 1
        if desc.kind in _ODD_KINDS and idx == odd_index:
            flip = desc.kind in _MINUS_KINDS
            for (g, e), c in v.terms.items():
                neg = ((g.bit_count() + sum(e)) & 1) ^ flip
                add((g, e), -c if neg else c)
            return _raw_vector(v.ell, v.k, out)
        j = (idx + 1) // 2  # ladder pair index, 1-based
        bit = 1 << (j - 1)
        even = idx % 2 == 0
        for (g, e), c in v.terms.items():
            cc = -c if _parity_below(g, j - 1) else c
            if g & bit:  # P_j contributes
                add((g ^ bit, e), cc * Scalar.of(0, -1) if even else cc)
            else:  # Q_j contributes
                add((g | bit, e), cc * Scalar.of(0, 1) if even else cc)
        return _raw_vector(v.ell, v.k, out)

    j = idx - 1
    if kind == "p":
        for (g, e), c in v.terms.items():
            if not e[j]:
                continue
            cc = c * Scalar.of(e[j])
            if g.bit_count() & 1:
                cc = -cc
            e2 = tuple(x - 1 if t == j else x for t, x in enumerate(e))
            add((g, e2), cc)
        return _raw_vector(v.ell, v.k, out)
    if kind == "q":
        for (g, e), c in v.terms.items():
            cc = -c if g.bit_count() & 1 else c
            e2 = tuple(x + 1 if t == j else x for t, x in enumerate(e))
            add((g, e2), cc)
        return _raw_vector(v.ell, v.k, out)
    raise ValueError("unknown token %r" % (token,))


def act(desc, a, v):
    """Apply the element a to the vector v through the representation.

    The element is rewritten as star words of generators; a word acts by
    composing generator actions right to left.
    """
    if a.signature != desc.signature():
        raise AlgebraError(
            "element signature %r does not match representation %r"
            % (a.signature, desc)
        )
    if (v.ell, v.k) != (desc.ell, desc.k):
        raise AlgebraError("vector carrier mismatch for %r" % (desc,))
    total = _raw_vector(v.ell, v.k, {})
    for c, word in element_star_words(a):
        cur = v
        for tok in reversed(word):
            cur = _gen_action(desc, tok, cur)
            if not cur:
                break
        total = total + cur.scale(c)
    return total


# -- matrices ------------------------------------------------------------------


class ScalarMatrix:
    """Rectangular matrix with exact Scalar entries (column action)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rr = tuple(
            tuple(x if isinstance(x, Scalar) else _coerce_scalar(x) for x in r)
            for r in rows
        )
        if rr and any(len(r) != len(rr[0]) for r in rr):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rr)

    def __setattr__(self, name, value):
        raise AttributeError("ScalarMatrix is immutable")

    @staticmethod
    def identity(n):
        z, o = Scalar(), S_ONE
        return ScalarMatrix([[o if i == j else z for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, rc):
        return self.rows[rc[0]][rc[1]]

    def __add__(self, other):
        return ScalarMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ScalarMatrix([[-a for a in r] for r in self.rows])

    def scale(self, s):
        s = s if isinstance(s, Scalar) else _coerce_scalar(s)
        return ScalarMatrix([[a * s for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, ScalarMatrix):
            n, m = self.shape
            m2, p = other.shape
            if m != m2:
                raise ValueError("shape mismatch %s x %s" % (self.shape, other.shape))
            cols = list(zip(*other.rows)) if other.rows else []
            zero_s = Scalar()
            return ScalarMatrix(
                [
                    [sum((a * b for a, b in zip(row, col)), zero_s) for col in cols]
                    for row in self.rows
                ]
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def kron(self, other):
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([a * b for a in ra for b in rb])
        return ScalarMatrix(out)

    def __eq__(self, other):
        return isinstance(other, ScalarMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "ScalarMatrix([%s])" % ", ".join(
            "[%s]" % ", ".join(str(x) for x in r) for r in self.rows
        )

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]

    @staticmethod
    def from_json(data):
        return ScalarMatrix([[Scalar.from_json(x) for x in r] for r in data])


def rep_matrix(desc, a):
    """Matrix of act(a, .) in the binary-ordered Grassmann monomial basis.

    Basis vector number g is xi^g (bit i set = xi_{i+1} present), so for
    ell = 1 the basis is {1, xi1}.  Column j holds the image of basis j.
    """
    dim = desc.finite_dimension()
    cols = []
    for g in range(dim):
        img = act(desc, a, GrassPolyVector.basis(desc.ell, desc.k, g))
        col = [Scalar() for _ in range(dim)]
        for (gm, _e), c in img.terms.items():
            col[gm] = c
        cols.append(col)
    return ScalarMatrix([[cols[j][i] for j in range(dim)] for i in range(dim)])


# -- operator -> symbol on the Fermi side ---------------------------------------


def ladder_raise(signature, j):
    """(w_{2j-1} - i w_{2j})/2: acts as wedge-by-xi_j (raises Grassmann degree)."""
    e = fermi_gen(signature, 2 * j - 1) - fermi_gen(signature, 2 * j).scale(Scalar.of(0, 1))
    return e.scale(S_HALF)


def ladder_lower(signature, j):
    """(w_{2j-1} + i w_{2j})/2: acts as d/dxi_j (lowers Grassmann degree)."""
    e = fermi_gen(signature, 2 * j - 1) + fermi_gen(signature, 2 * j).scale(Scalar.of(0, 1))
    return e.scale(S_HALF)


def clifford_op_to_symbol(n, T):
    """Element of the 2n-generator Fermi algebra whose spin action is T.

    Expands T against the wedge/contract normal form: for every index set I
    the coproduct splits xi^I across the two tensor slots (graded signs), the
    antipode weights the right slot, T acts on the left slot, and the
    surviving wedge monomial xi^M determines the normal-ordered word
    Q_{M} * P_{I} whose coefficients are read off exactly.  Inverse of
    rep_matrix for the even spin representation.
    """
    dim = 1 << n
    if T.shape != (dim, dim):
        raise AlgebraError("operator must be %dx%d, got %r" % (dim, dim, T.shape))
    sig = AlgebraSignature(2 * n, 0)
    Q = [ladder_raise(sig, j) for j in range(1, n + 1)]
    P = [ladder_lower(sig, j) for j in range(1, n + 1)]
    total = zero(sig)
    for imask in range(dim):
        r = imask.bit_count()
        sign_i = -1 if (r * (r - 1) // 2) & 1 else 1
        # graded coproduct of xi^imask: {(J,K): +-1}
        split = {(0, 0): 1}
        m = imask
        while m:
            bit = m & -m
            m ^= bit
            nxt = {}
            for (J, K), c in split.items():
                cL = -c if K.bit_count() & 1 else c
                nxt[(J | bit, K)] = nxt.get((J | bit, K), 0) + cL
                nxt[(J, K | bit)] = nxt.get((J, K | bit), 0) + c
            split = nxt
        for (J, K), csplit in split.items():
            if not csplit:
                continue
            # antipode of the right slot: graded anti-homomorphism sending
            # each generator to its negative, so xi^K picks up (-1)^{|K|}
            sK = -1 if K.bit_count() & 1 else 1
            for M in range(dim):
                tMJ = T[(M, J)]
                if not tMJ:
                    continue
                if M & K:
                    continue
                sh = -1 if _shuffle_parity(M, K) else 1
                coeff = tMJ * Scalar.of(csplit * sK * sh * sign_i)
                if not coeff:
                    continue
                word = unit(sig)
                qm = M | K
                for j in range(n):
                    if qm >> j & 1:
                        word = star(word, Q[j])
                for j in range(n):
                    if imask >> j & 1:
                        word = star(word, P[j])
                total = total + word.scale(coeff)
    return total


def spin_rep_odd_sign_check(n):
    """How the full Fermi volume word acts on the two odd-case modules.

    Returns a report dict; ok means the plus module sees +i^n times the
    identity and the minus module the opposite sign.
    """
    sig = AlgebraSignature(2 * n + 1, 0)
    vol = unit(sig)
    for i in range(1, 2 * n + 2):
        vol = star(vol, fermi_gen(sig, i))
    want = scalar_i_power(n)
    dim = 1 << n
    ident = ScalarMatrix.identity(dim)
    plus = rep_matrix(spin_plus(n), vol)
    minus = rep_matrix(spin_minus(n), vol)
    return {
        "n": n,
        "plus_ok": plus == ident.scale(want),
        "minus_ok": minus == ident.scale(-want),
        "ok": plus == ident.scale(want) and minus == ident.scale(-want),
    }
