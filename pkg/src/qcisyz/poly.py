"""Homogeneous polynomials in k[x, y, z] with exact coefficients."""

from __future__ import annotations

from .orders import GREVLEX, grevlex_key, mono_deg, mono_mul

VARS = ("x", "y", "z")


class Polynomial:
    """A polynomial as a map from exponent triples to nonzero coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms: dict):
        self.field = field
        self.terms = terms

    # --- constructors -------------------------------------------------

    @classmethod
    def from_terms(cls, field, items):
        terms = {}
        zero = field.zero
        for m, c in items:
            c = field.coerce(c)
            if m in terms:
                c = field.add(terms[m], c)
            if c == zero:
                terms.pop(m, None)
            else:
                terms[m] = c
        return cls(field, terms)

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, c):
        c = field.coerce(c)
        return cls(field, {} if c == field.zero else {(0, 0, 0): c})

    @classmethod
    def variable(cls, field, i: int):
        m = tuple(1 if j == i else 0 for j in range(3))
        return cls(field, {m: field.one})

    # --- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    # --- arithmetic ---------------------------------------------------

    def __add__(self, other):
        f = self.field
        terms = dict(self.terms)
        zero = f.zero
        for m, c in other.terms.items():
            s = f.add(terms.get(m, zero), c)
            if s == zero:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(f, terms)

    def __sub__(self, other):
        f = self.field
        terms = dict(self.terms)
        zero = f.zero
        for m, c in other.terms.items():
            s = f.sub(terms.get(m, zero), c)
            if s == zero:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(f, terms)

    def __neg__(self):
        f = self.field
        return Polynomial(f, {m: f.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        f = self.field
        if not isinstance(other, Polynomial):
            return self.scale(other)
        terms = {}
        zero = f.zero
        mul, add = f.mul, f.add
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                s = add(terms.get(m, zero), mul(c1, c2))
                if s == zero:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Polynomial(f, terms)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return Polynomial(f, {})
        return Polynomial(f, {m: f.mul(v, c) for m, v in self.terms.items()})

    def mono_shift(self, m, c):
        """self * c * x^m."""
        f = self.field
        return Polynomial(
            f, {mono_mul(t, m): f.mul(v, c) for t, v in self.terms.items()}
        )

    def partial(self, i: int):
        """Partial derivative with respect to variable i."""
        f = self.field
        terms = {}
        zero = f.zero
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            c2 = f.mul(c, f.coerce(e))
            if c2 == zero:
                continue
            m2 = list(m)
            m2[i] = e - 1
            terms[tuple(m2)] = c2
        return Polynomial(f, terms)

    # --- lead terms ---------------------------------------------------

    def lead(self, key=grevlex_key):
        """(monomial, coefficient) of the lead term."""
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def monic(self, key=grevlex_key):
        _, c = self.lead(key)
        return self.scale(self.field.inv(c))

    # --- equality, printing --------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"


def partial_derivatives(f: Polynomial):
    """The gradient (f_x, f_y, f_z) of a homogeneous polynomial."""
    if not f.is_homogeneous() or f.degree() < 1:
        raise ValueError("partial_derivatives expects a homogeneous polynomial of degree >= 1")
    return tuple(f.partial(i) for i in range(3))


def _format_monomial(m) -> str:
    parts = []
    for v, e in zip(VARS, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order=GREVLEX) -> str:
    """Canonical form: terms in decreasing order, explicit * and ^."""
    if not p.terms:
        return "0"
    f = p.field
    out = []
    for m in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[m]
        cs = f.format(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        ms = _format_monomial(m)
        if not ms:
            body = cs
        elif cs == "1":
            body = ms
        else:
            body = f"{cs}*{ms}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
