"""Exact scalars: Gaussian rationals and polynomials in the central parameter L.

Every coefficient in this package is either a Gaussian rational (a + b*i with
a, b rational) or a polynomial in a single central formal parameter L with
Gaussian-rational coefficients.  Nothing is ever floated; equality everywhere
in the library and the test suite means exact equality of these objects.
"""

from __future__ import annotations

from fractions import Fraction


class GaussianRational:
    """a + b*i with exact rational a, b.  Immutable, hashable, a field."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons / hashing ---------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_zero(self):
        return not self

    # -- presentation --------------------------------------------------------

    def __repr__(self):
        return "GaussianRational(%r, %r)" % (str(self.re), str(self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%s*i" % self.im
        return "(%s + %s*i)" % (self.re, self.im) if self.im > 0 else "(%s - %s*i)" % (self.re, -self.im)

    def to_json(self):
        """[[re_num, re_den], [im_num, im_den]] with ints."""
        return [
            [self.re.numerator, self.re.denominator],
            [self.im.numerator, self.im.denominator],
        ]

    @staticmethod
    def from_json(data):
        (rn, rd), (im_n, im_d) = data
        return GaussianRational(Fraction(rn, rd), Fraction(im_n, im_d))


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)
GR_HALF = GaussianRational(Fraction(1, 2))


def i_power(n):
    """i**n as a GaussianRational (n any integer)."""
    return (GR_I ** (n % 4)) if n >= 0 else (GaussianRational(0, -1) ** ((-n) % 4))


class Scalar:
    """Sparse polynomial in the central parameter L over Gaussian rationals.

    Stored as a map {exponent: GaussianRational} with no zero values.  L is
    written `L` in all text forms.  Scalars are immutable after construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, v in coeffs.items():
                if not isinstance(v, GaussianRational):
                    v = GaussianRational(v)
                if v:
                    if not isinstance(k, int) or k < 0:
                        raise ValueError("L exponent must be a non-negative int, got %r" % (k,))
                    clean[k] = v
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_gaussian(g):
        return Scalar({0: g})

    @staticmethod
    def of(re, im=0):
        return Scalar({0: GaussianRational(re, im)})

    @staticmethod
    def lam(power=1, coeff=GR_ONE):
        """coeff * L**power."""
        return Scalar({power: coeff})

    # -- ring structure -------------------------------------------------------

    def __add__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, GR_ZERO) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _raw_scalar(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return _raw_scalar({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                s = out.get(k, GR_ZERO) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return _raw_scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out = S_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divide_by(self, g):
        """Exact division by a nonzero Gaussian rational (not by L-polynomials)."""
        if not isinstance(g, GaussianRational):
            g = GaussianRational(g)
        inv = g.inverse()
        return _raw_scalar({k: v * inv for k, v in self.coeffs.items()})

    # -- structure access ------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def lam_coefficient(self, power):
        """The GaussianRational coefficient of L**power."""
        return self.coeffs.get(power, GR_ZERO)

    def lam_degree(self):
        """Largest L exponent present, or -1 for the zero scalar."""
        return max(self.coeffs) if self.coeffs else -1

    def constant(self):
        """The Gaussian rational this scalar equals, or raise if L appears."""
        for k in self.coeffs:
            if k != 0:
                raise ValueError("scalar involves L: %s" % self)
        return self.coeffs.get(0, GR_ZERO)

    def specialize(self, value):
        """Substitute a GaussianRational for L, returning a GaussianRational."""
        if not isinstance(value, GaussianRational):
            value = GaussianRational(value)
        total = GR_ZERO
        for k, v in self.coeffs.items():
            total = total + v * value**k
        return total

    def __eq__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- presentation -----------------------------------------------------------

    def __repr__(self):
        return "Scalar(%r)" % ({k: str(v) for k, v in sorted(self.coeffs.items())},)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            parts.append(format_coefficient(self.coeffs[k], k))
        return " + ".join(parts)

    def to_json(self):
        """{"<L power>": [[re_num, re_den], [im_num, im_den]]}, keys sorted."""
        return {str(k): self.coeffs[k].to_json() for k in sorted(self.coeffs)}

    @staticmethod
    def from_json(data):
        return Scalar({int(k): GaussianRational.from_json(v) for k, v in data.items()})


def _raw_scalar(clean_dict):
    # internal: build a Scalar from an already-normalized dict without re-checking
    s = object.__new__(Scalar)
    object.__setattr__(s, "coeffs", clean_dict)
    return s


def _coerce_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, GaussianRational):
        return Scalar.from_gaussian(x)
    if isinstance(x, (int, Fraction)):
        return Scalar.of(x)
    return NotImplemented


def format_coefficient(g, lam_power=0):
    """Canonical text for one coefficient: (a/b + c/d*i) * L^r.

    The parenthesized complex form collapses to a bare rational when the
    imaginary part vanishes, and the L factor is omitted when r = 0.  This is
    exactly the coefficient grammar the expression parser accepts.
    """
    if g.im == 0:
        body = str(g.re)
    elif g.re == 0:
        if g.im == 1:
            body = "i"
        elif g.im == -1:
            body = "-i"
        else:
            body = "%s*i" % g.im
    else:
        sign = "+" if g.im > 0 else "-"
        mag = abs(g.im)
        istr = "i" if mag == 1 else "%s*i" % mag
        body = "(%s %s %s)" % (g.re, sign, istr)
    if lam_power == 0:
        return body
    lpart = "L" if lam_power == 1 else "L^%d" % lam_power
    if body == "1":
        return lpart
    if body == "-1":
        return "-%s" % lpart
    return "%s*%s" % (body, lpart)


S_ZERO = Scalar()
S_ONE = Scalar.of(1)
S_I = Scalar.of(0, 1)
S_HALF = Scalar.of(Fraction(1, 2))
S_LAMBDA = Scalar.lam(1)


def scalar_i_power(n):
    return Scalar.from_gaussian(i_power(n))
