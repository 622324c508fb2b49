"""Canonical plain-text rendering of algebra elements.

One term renders as `coeff * w1 w2 p1^2 q1` with the Clifford factors in
ascending order followed by p then q powers; the coefficient grammar is the
one produced by scalars.format_coefficient, with multi-power coefficients
parenthesized.  Terms are emitted in the deterministic monomial order used by
CwElement.monomials(), joined by " + " / " - ".

This is a display and fixture format.  The CLI expression grammar (module
exprs) is a different language: there, juxtaposition means the associative
star product, so the factor list of a basis monomial would not re-evaluate to
that monomial.
"""

from __future__ import annotations

from .scalars import format_coefficient


def monomial_factors_text(m):
    parts = ["w%d" % i for i in m.cliff_indices()]
    for j, e in enumerate(m.wp):
        if e == 1:
            parts.append("p%d" % (j + 1))
        elif e > 1:
            parts.append("p%d^%d" % (j + 1, e))
    for j, e in enumerate(m.wq):
        if e == 1:
            parts.append("q%d" % (j + 1))
        elif e > 1:
            parts.append("q%d^%d" % (j + 1, e))
    return " ".join(parts)


def coefficient_text(s):
    """Render a Scalar as a single multiplicative prefix."""
    items = sorted(s.coeffs.items())
    if not items:
        return "0"
    if len(items) == 1:
        power, g = items[0]
        return format_coefficient(g, power)
    return "(%s)" % " + ".join(format_coefficient(g, k) for k, g in items)


def term_text(m, c):
    coeff = coefficient_text(c)
    factors = monomial_factors_text(m)
    if not factors:
        return coeff
    if coeff == "1":
        return factors
    if coeff == "-1":
        return "-%s" % factors
    return "%s * %s" % (coeff, factors)


def element_to_text(e):
    terms = e.monomials()
    if not terms:
        return "0"
    out = []
    for m, c in terms:
        t = term_text(m, c)
        if not out:
            out.append(t)
        elif t.startswith("-"):
            out.append("- " + t[1:])
        else:
            out.append("+ " + t)
    return " ".join(out)
