"""Minimal graded free resolutions, Betti tables, and Hilbert series.

Resolutions are built bottom-up: a minimal generating set is extracted by
exact linear algebra, its syzygy generators are minimalized in turn, and so
on.  With membership-minimal generators at every level the differentials
carry no constant entries, so the result is minimal by construction; this
is asserted, and exactness of consecutive differentials is asserted too.
Presented modules are first stripped of unit relations (Gaussian
cancellation) so a non-minimal presentation resolves correctly.
"""

from __future__ import annotations

from collections import Counter

from .linalg import minimal_generators
from .modules import FreeGradedModule, ModuleElement, PresentedModule, poly_to_element
from .orders import mono_deg
from .poly import Polynomial

MAX_LENGTH = 3  # Hilbert's syzygy theorem in three variables


class ResolutionError(AssertionError):
    pass


class BettiTable:
    """Multiplicities of twists per homological position."""

    def __init__(self, entries=None):
        self.entries = Counter()
        if entries:
            for k, v in dict(entries).items():
                if v:
                    self.entries[k] = v

    @classmethod
    def from_twists(cls, twists_per_position):
        t = cls()
        for pos, twists in enumerate(twists_per_position):
            for a in twists:
                t.entries[(pos, a)] += 1
        return t

    def positions(self):
        if not self.entries:
            return []
        return list(range(max(p for p, _ in self.entries) + 1))

    def degrees_at(self, pos: int):
        """Sorted twist list (with multiplicity) at a homological position."""
        out = []
        for (p, d), c in self.entries.items():
            if p == pos:
                out.extend([d] * c)
        return sorted(out)

    def total_at(self, pos: int) -> int:
        return sum(c for (p, _), c in self.entries.items() if p == pos)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def to_json(self):
        out = {}
        for (p, d), c in sorted(self.entries.items()):
            out.setdefault(str(p), {})[str(d)] = c
        return out

    def to_tsv(self) -> str:
        """Macaulay-style layout: column = position, row = degree - position."""
        if not self.entries:
            return "total:\t0\n"
        positions = self.positions()
        rows = range(
            min(d - p for p, d in self.entries),
            max(d - p for p, d in self.entries) + 1,
        )
        lines = []
        totals = [self.total_at(p) for p in positions]
        lines.append("total:\t" + "\t".join(str(t) for t in totals))
        for r in rows:
            cells = []
            for p in positions:
                c = self.entries.get((p, r + p), 0)
                cells.append(str(c) if c else ".")
            lines.append(f"{r}:\t" + "\t".join(cells))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.entries.items()))})"


class GradedResolution:
    """Chain F_0 <- F_1 <- ... with differentials given column-wise.

    differentials[k] lists the columns of F_{k+1} -> F_k as homogeneous
    elements of the free module F_k.
    """

    def __init__(self, modules, differentials):
        self.modules = list(modules)
        self.differentials = [list(d) for d in differentials]
        self._validate()

    def _validate(self):
        if len(self.modules) - 1 != len(self.differentials):
            raise ResolutionError("module/differential count mismatch")
        if len(self.modules) - 1 > MAX_LENGTH:
            raise ResolutionError("resolution longer than three steps")
        for k, cols in enumerate(self.differentials):
            if len(cols) != self.modules[k + 1].rank:
                raise ResolutionError("differential width mismatch")
            for j, col in enumerate(cols):
                if col.ambient != self.modules[k]:
                    raise ResolutionError("differential ambient mismatch")
                if not col.is_homogeneous():
                    raise ResolutionError("non-homogeneous differential entry")
                if not col.is_zero() and col.degree() != self.modules[k + 1].twists[j]:
                    raise ResolutionError("differential degree mismatch")
        self._assert_minimal()
        self._assert_exact_composition()

    def _assert_minimal(self):
        for k, cols in enumerate(self.differentials):
            twists = self.modules[k].twists
            for col in cols:
                for (pos, m), _ in col.terms.items():
                    if mono_deg(m) == 0:
                        raise ResolutionError(
                            f"constant entry in differential {k}: resolution not minimal"
                        )

    def _assert_exact_composition(self):
        for k in range(len(self.differentials) - 1):
            lower = self.differentials[k]
            for col in self.differentials[k + 1]:
                acc = None
                for j in range(len(lower)):
                    comp = col.component(j)
                    if comp.is_zero():
                        continue
                    term = lower[j].poly_mul(comp)
                    acc = term if acc is None else acc + term
                if acc is not None and not acc.is_zero():
                    raise ResolutionError("consecutive differentials do not compose to zero")

    @property
    def length(self) -> int:
        return len(self.modules) - 1


def betti(res: GradedResolution) -> BettiTable:
    return BettiTable.from_twists([m.twists for m in res.modules])


def _resolve_from(gens, field):
    """Iterated minimal syzygies starting from a minimal generating set."""
    from .groebner import SubmoduleGB

    modules = []
    differentials = []
    current = minimal_generators(gens)
    modules.append(FreeGradedModule(tuple(g.degree() for g in current)))
    while current:
        sub = SubmoduleGB(current, syzygies=True)
        syz = minimal_generators(sub.syzygies)
        if not syz:
            break
        modules.append(FreeGradedModule(tuple(s.degree() for s in syz)))
        differentials.append(syz)
        current = syz
    return modules, differentials


def minimize_presentation(P: PresentedModule) -> PresentedModule:
    """Cancel unit entries of the presentation by Gaussian elimination.

    Whenever a relation carries a nonzero constant on some generator, that
    generator is expressed by the others, substituted everywhere, and both
    the generator and the relation are dropped.
    """
    twists = list(P.generators.twists)
    rels = [dict(r.terms) for r in P.relations]
    field = P.relations[0].field if P.relations else None

    def find_unit():
        for ri, terms in enumerate(rels):
            for (pos, m), c in sorted(terms.items()):
                if mono_deg(m) == 0:
                    return ri, pos, c
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        ri, pos, c = hit
        pivot = rels[ri]
        inv = field.inv(c)
        for rj, terms in enumerate(rels):
            if rj == ri:
                continue
            # eliminate every occurrence of generator `pos`
            occ = [(t, cc) for t, cc in terms.items() if t[0] == pos]
            for (p, m), cc in occ:
                factor = field.neg(field.mul(cc, inv))
                for (p2, m2), c2 in pivot.items():
                    key = (p2, (m2[0] + m[0], m2[1] + m[1], m2[2] + m[2]))
                    s = field.add(terms.get(key, field.zero), field.mul(c2, factor))
                    if s == field.zero:
                        terms.pop(key, None)
                    else:
                        terms[key] = s
        del rels[ri]
        del twists[pos]
        remap = lambda p: p if p < pos else p - 1  # noqa: E731
        rels = [
            {(remap(p), m): c for (p, m), c in terms.items() if p != pos}
            for terms in rels
        ]

    amb = FreeGradedModule(tuple(twists))
    out = []
    for terms in rels:
        if terms:
            out.append(ModuleElement(amb, field, terms))
    return PresentedModule(amb, out)


def minimal_resolution(X) -> GradedResolution:
    """Minimal graded free resolution of a submodule or presented module.

    Accepts a list of homogeneous polynomials (ideal generators), a list of
    module elements (submodule generators), or a PresentedModule.
    """
    if isinstance(X, PresentedModule):
        P = minimize_presentation(X)
        f0 = P.generators
        if not P.relations:
            return GradedResolution([f0], [])
        field = P.relations[0].field
        rel_min = minimal_generators(P.relations)
        modules = [f0, FreeGradedModule(tuple(r.degree() for r in rel_min))]
        differentials = [rel_min]
        tail_modules, tail_diffs = _resolve_from(rel_min, field)
        modules.extend(tail_modules[1:])
        differentials.extend(tail_diffs)
        return GradedResolution(modules, differentials)

    gens = list(X)
    if not gens:
        raise ValueError("empty input")
    if isinstance(gens[0], Polynomial):
        amb = FreeGradedModule((0,))
        gens = [poly_to_element(g, amb) for g in gens]
    field = gens[0].field
    modules, differentials = _resolve_from(gens, field)
    return GradedResolution(modules, differentials)


def hilbert_series(res: GradedResolution):
    """Numerator coefficients of the Hilbert series over (1-t)^3."""
    num = Counter()
    sign = 1
    for mod in res.modules:
        for a in mod.twists:
            num[a] += sign
        sign = -sign
    return {k: v for k, v in sorted(num.items()) if v}


def hilbert_series_value(num: dict, t: int) -> int:
    """Degree-t coefficient of num(t)/(1-t)^3."""
    total = 0
    for a, c in num.items():
        d = t - a
        if d >= 0:
            total += c * (d + 1) * (d + 2) // 2
    return total


def resolution_hilbert_function(res: GradedResolution, t: int) -> int:
    return hilbert_series_value(hilbert_series(res), t)


# --- predicted resolution of the saturated ideal (mapping cone) -----------


def predicted_sigma_tables(exponents, b, d: int):
    """Betti tables of the saturated ideal reachable from the mapping cone.

    The non-minimal predicted shape has generators at 2d-2-b_j and d-1
    (three copies), relations at 2d-2-d_i.  A degree-(d-1) generator may
    cancel only against a relation coming from an exponent d_i = d-1; no
    generator coming from a b_j may cancel.  Returns the list of tables for
    every admissible number of cancellations (0 included).
    """
    exponents = sorted(exponents)
    b = sorted(b)
    if sum(exponents) - sum(b) != d - 1:
        raise ValueError("inconsistent exponent data: sum d_i - sum b_j != d-1")
    gens = Counter({d - 1: 3})
    for bj in b:
        gens[2 * d - 2 - bj] += 1
    rels = Counter(2 * d - 2 - di for di in exponents)
    cancellable = min(3, sum(1 for di in exponents if di == d - 1))
    tables = []
    for c in range(cancellable + 1):
        g = Counter(gens)
        r = Counter(rels)
        if c:
            g[d - 1] -= c
            r[d - 1] -= c
        entries = {}
        for deg, cnt in g.items():
            if cnt:
                entries[(0, deg)] = cnt
        for deg, cnt in r.items():
            if cnt:
                entries[(1, deg)] = cnt
        tables.append(BettiTable(entries))
    return tables


def sigma_table_reachable(computed: BettiTable, exponents, b, d: int) -> bool:
    """Prop-4.1 check: the computed table arises by admissible cancellation."""
    return any(computed == t for t in predicted_sigma_tables(exponents, b, d))
