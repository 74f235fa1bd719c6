"""Monomial and module-term orders.

Monomials are exponent triples ``(ex, ey, ez)``.  Every order is exposed as
a *key function*: larger key means larger monomial, so ``max(terms,
key=...)`` picks the lead term and ``sorted(..., reverse=True)`` lists terms
in decreasing order.
"""

from __future__ import annotations

Monomial = tuple  # (ex, ey, ez)


def mono_deg(m) -> int:
    return m[0] + m[1] + m[2]


def mono_mul(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def mono_divides(a, b) -> bool:
    """a | b componentwise."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def mono_div(a, b):
    """a / b; caller guarantees divisibility."""
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def mono_lcm(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def grevlex_key(m):
    return (m[0] + m[1] + m[2], -m[2], -m[1])


def lex_key(m):
    return m


class MonomialOrder:
    """A total multiplicative order on monomials in x, y, z."""

    def __init__(self, kind: str = "grevlex"):
        if kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.key = grevlex_key if kind == "grevlex" else lex_key

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(("order", self.kind))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def top_key(mono_key):
    """Term-over-position key on (pos, mono); lower position breaks ties."""

    def key(t):
        pos, m = t
        return (mono_key(m), -pos)

    return key


def pot_key(mono_key):
    """Position-over-term key on (pos, mono); position 0 is largest."""

    def key(t):
        pos, m = t
        return (-pos, mono_key(m))

    return key


def block_elim_key(split: int, mono_key):
    """Block order: any term in positions < split beats any term beyond.

    Within each block, term-over-position.  Used for syzygy computations,
    where the first block holds the ambient module and the second the
    generator bookkeeping coordinates.
    """

    def key(t):
        pos, m = t
        return (pos < split, mono_key(m), -pos)

    return key
