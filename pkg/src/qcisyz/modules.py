"""Graded free modules, their elements, and presented quotient modules.

A free graded module over S = k[x, y, z] is a twist vector (a_1, ..., a_r)
standing for S(-a_1) + ... + S(-a_r); a homogeneous element of degree t has
k-th component zero or homogeneous of degree t - a_k.  Elements are stored
as flat term maps {(position, monomial): coefficient} so the Groebner
machinery can treat ideals (rank one) and submodules uniformly.
"""

from __future__ import annotations

from .orders import mono_deg, mono_mul
from .poly import Polynomial


class FreeGradedModule:
    __slots__ = ("twists",)

    def __init__(self, twists):
        self.twists = tuple(twists)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def __eq__(self, other):
        return isinstance(other, FreeGradedModule) and other.twists == self.twists

    def __hash__(self):
        return hash(self.twists)

    def __repr__(self):
        return f"FreeGradedModule{self.twists}"


class ModuleElement:
    __slots__ = ("ambient", "field", "terms")

    def __init__(self, ambient: FreeGradedModule, field, terms: dict):
        self.ambient = ambient
        self.field = field
        self.terms = terms

    @classmethod
    def from_components(cls, ambient, field, comps):
        terms = {}
        for pos, p in enumerate(comps):
            if p is None:
                continue
            for m, c in p.terms.items():
                terms[(pos, m)] = c
        return cls(ambient, field, terms)

    @classmethod
    def basis_vector(cls, ambient, field, pos: int):
        return cls(ambient, field, {(pos, (0, 0, 0)): field.one})

    def component(self, pos: int) -> Polynomial:
        return Polynomial(
            self.field, {m: c for (p, m), c in self.terms.items() if p == pos}
        )

    def components(self):
        return [self.component(i) for i in range(self.ambient.rank)]

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Degree of a homogeneous element; -1 if zero."""
        if not self.terms:
            return -1
        tw = self.ambient.twists
        return max(mono_deg(m) + tw[p] for p, m in self.terms)

    def is_homogeneous(self) -> bool:
        tw = self.ambient.twists
        degs = {mono_deg(m) + tw[p] for p, m in self.terms}
        return len(degs) <= 1

    def __add__(self, other):
        f = self.field
        terms = dict(self.terms)
        zero = f.zero
        for t, c in other.terms.items():
            s = f.add(terms.get(t, zero), c)
            if s == zero:
                terms.pop(t, None)
            else:
                terms[t] = s
        return ModuleElement(self.ambient, f, terms)

    def __sub__(self, other):
        f = self.field
        terms = dict(self.terms)
        zero = f.zero
        for t, c in other.terms.items():
            s = f.sub(terms.get(t, zero), c)
            if s == zero:
                terms.pop(t, None)
            else:
                terms[t] = s
        return ModuleElement(self.ambient, f, terms)

    def __neg__(self):
        f = self.field
        return ModuleElement(self.ambient, f, {t: f.neg(c) for t, c in self.terms.items()})

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return ModuleElement(self.ambient, f, {})
        return ModuleElement(self.ambient, f, {t: f.mul(v, c) for t, v in self.terms.items()})

    def mono_shift(self, m, c):
        """self * c * x^m."""
        f = self.field
        return ModuleElement(
            self.ambient,
            f,
            {(p, mono_mul(t, m)): f.mul(v, c) for (p, t), v in self.terms.items()},
        )

    def poly_mul(self, p: Polynomial):
        acc = ModuleElement(self.ambient, self.field, {})
        for m, c in p.terms.items():
            acc = acc + self.mono_shift(m, c)
        return acc

    def lead(self, key):
        t = max(self.terms, key=key)
        return t, self.terms[t]

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.ambient == other.ambient
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def __repr__(self):
        comps = ", ".join(str(c) for c in self.components())
        return f"ModuleElement({comps})"


def poly_to_element(p: Polynomial, ambient=None) -> ModuleElement:
    """View a polynomial as an element of the rank-one free module S(0)."""
    if ambient is None:
        ambient = FreeGradedModule((0,))
    return ModuleElement(ambient, p.field, {(0, m): c for m, c in p.terms.items()})


def element_to_poly(e: ModuleElement) -> Polynomial:
    assert e.ambient.rank == 1
    return e.component(0)


class PresentedModule:
    """A quotient of a free graded module by explicit homogeneous relations."""

    __slots__ = ("generators", "relations")

    def __init__(self, generators: FreeGradedModule, relations):
        self.generators = generators
        self.relations = list(relations)
        for r in self.relations:
            if r.ambient != generators:
                raise ValueError("relation ambient mismatch")
            if not r.is_homogeneous():
                raise ValueError("relations must be homogeneous")

    def __repr__(self):
        return f"PresentedModule(gens={self.generators.twists}, nrel={len(self.relations)})"
