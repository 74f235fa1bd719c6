"""The analysis pipeline: from a curve or a triple of equal-degree forms to
the full invariant record (tau, exponents, second syzygy degrees, Chern
data, resolutions of the saturated ideal, of the syzygy-quotient module N,
and of the finite-length module Q = I_sat/J).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .fields import PrimeField
from .groebner import (
    SubmoduleGB,
    groebner_basis,
    ideal_equal,
    saturate,
    submodule_quotient,
)
from .linalg import hilbert_function, submodule_dim
from .modules import (
    FreeGradedModule,
    ModuleElement,
    PresentedModule,
    poly_to_element,
)
from .orders import grevlex_key
from .poly import Polynomial, partial_derivatives
from .resolution import (
    BettiTable,
    betti,
    minimal_resolution,
    resolution_hilbert_function,
    sigma_table_reachable,
)


class InputError(ValueError):
    """Invalid analysis input (exit code 2 at the CLI)."""


class InvariantError(AssertionError):
    """An internal cross-check failed (exit code 3 at the CLI)."""


@dataclass(frozen=True)
class QciInput:
    mode: str  # "curve" | "triple"
    polys: tuple
    field: object
    texts: tuple = ()

    @classmethod
    def curve(cls, f: Polynomial, text: str = ""):
        return cls("curve", (f,), f.field, (text,) if text else ())

    @classmethod
    def triple(cls, f1, f2, f3, texts=()):
        return cls("triple", (f1, f2, f3), f1.field, tuple(texts))


@dataclass
class ZReport:
    chosen_syzygy_degree: int
    deg_Z: int
    z_betti: BettiTable
    is_complete_intersection: bool
    ci_type: Optional[tuple]


@dataclass
class H1Report:
    generator_count: int
    h1_betti: BettiTable


@dataclass
class QciAnalysis:
    input: QciInput
    d: int
    s: int
    tau: int
    smooth: bool
    m: Optional[int] = None
    exponents: Optional[tuple] = None
    second_syzygy_degrees: Optional[tuple] = None
    c1: Optional[int] = None
    c2: Optional[int] = None
    deg_Z: Optional[int] = None
    ar_betti: Optional[BettiTable] = None
    sigma_betti: Optional[BettiTable] = None
    z: Optional[ZReport] = None
    h1: Optional[H1Report] = None
    classification: Optional[str] = None
    sigma_is_ci: Optional[bool] = None
    sigma_cone_ok: Optional[bool] = None
    warnings: list = dc_field(default_factory=list)
    internals: dict = dc_field(default_factory=dict, repr=False)

    @property
    def d1(self):
        return self.exponents[0] if self.exponents else None


def chern_and_formulas(d: int, tau: int, d1: int) -> dict:
    """Chern data, degree of Z, and the du Plessis-Wall / tau_+ bounds."""
    if d < 3 or not (1 <= d1 <= d - 1):
        raise InputError("chern_and_formulas requires d >= 3 and 1 <= d_1 <= d-1")
    out = {
        "c1": 1 - d,
        "c2": (d - 1) ** 2 - tau,
        "deg_Z": d1 * (1 - d) + (d - 1) ** 2 - tau + d1 * d1,
        "dpw_lower": (d - 1) * (d - 1 - d1),
        "dpw_upper": (d - 1) * (d - 1 - d1) + d1 * d1,
    }
    if 2 * d1 + 1 > d:
        out["tau_plus"] = (
            (d - 1) * (d - 1 - d1)
            + d1 * d1
            - (2 * d1 + 1 - d) * (2 * d1 + 2 - d) // 2
        )
    return out


def tau_plus(d: int, d1: int) -> int:
    if 2 * d1 + 1 <= d:
        raise ValueError("tau_plus defined only in the stable range 2*d1+1 > d")
    return chern_and_formulas(d, 0, d1)["tau_plus"]


def c2_from_exponents(exponents, b) -> int:
    """Second Chern class of the syzygy bundle from its resolution twists."""
    e1d = sum(exponents)
    e2d = sum(
        exponents[i] * exponents[j]
        for i in range(len(exponents))
        for j in range(i + 1, len(exponents))
    )
    e1b = sum(b)
    e2b = sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))
    h2b = e1b * e1b - e2b  # complete homogeneous symmetric of degree 2
    return e2d - e1d * e1b + h2b


def jacobian_ideal(f: Polynomial):
    """The ideal of partial derivatives of a homogeneous form."""
    return list(partial_derivatives(f))


def _element_sort_key(e: ModuleElement):
    lead = max(e.terms, key=lambda t: (grevlex_key(t[1]), -t[0]))
    return (e.degree(), -lead[0], grevlex_key(lead[1]), tuple(sorted(e.terms)))


def _validate(inp: QciInput):
    field = inp.field
    if inp.mode == "curve":
        (f,) = inp.polys
        if f.is_zero() or not f.is_homogeneous():
            raise InputError("curve must be a nonzero homogeneous form")
        d = f.degree()
        if d < 3:
            raise InputError("curve degree must be at least 3")
        if isinstance(field, PrimeField) and d % field.prime == 0:
            raise InputError(
                f"characteristic {field.prime} divides the degree {d}"
            )
        return d
    fs = inp.polys
    if len(fs) != 3:
        raise InputError("triple mode needs exactly three forms")
    degs = {g.degree() for g in fs}
    if len(degs) != 1 or any(g.is_zero() or not g.is_homogeneous() for g in fs):
        raise InputError("triple must be three nonzero homogeneous forms of equal degree")
    s = fs[0].degree()
    if s < 2:
        raise InputError("triple degree must be at least 2")
    return s + 1


def analyze(inp: QciInput, deep_checks: bool = False) -> QciAnalysis:
    """Run the full pipeline; raises InputError / InvariantError."""
    d = _validate(inp)
    s = d - 1
    field = inp.field
    warnings = []
    if isinstance(field, PrimeField) and field.prime < 4 * d * d:
        warnings.append(f"small characteristic {field.prime} < 4*d^2")

    if inp.mode == "curve":
        gens = jacobian_ideal(inp.polys[0])
        # a vanishing partial makes V(J) positive-dimensional; catch it
        # before it breaks the syzygy bookkeeping
        if any(g.is_zero() for g in gens):
            raise InputError("not a valid q.c.i.: a partial derivative vanishes")
    else:
        gens = list(inp.polys)

    sub = SubmoduleGB(gens, syzygies=True)
    gb_colength = sub._eventual_hf() if sub.ambient.rank == 1 else None
    if gb_colength is None:
        raise InputError("not a valid q.c.i.: codimension < 2")
    if gb_colength == 0:
        if inp.mode == "triple":
            raise InputError("triple has empty common zero locus")
        return QciAnalysis(
            input=inp, d=d, s=s, tau=0, smooth=True, warnings=warnings
        )

    # syzygy module AR, renormalized so that a syzygy's degree is the common
    # degree of its components (ambient twists zero)
    amb0 = FreeGradedModule((0, 0, 0))
    ar_gens = sorted(
        (ModuleElement(amb0, field, dict(e.terms)) for e in sub.syzygies),
        key=_element_sort_key,
    )
    ar_res = minimal_resolution(ar_gens)
    if ar_res.length > 1:
        raise InvariantError("syzygy module resolution longer than one step")
    exponents = tuple(ar_res.modules[0].twists)
    b = tuple(ar_res.modules[1].twists) if ar_res.length >= 1 else ()
    m = len(exponents)
    if m < 2:
        raise InvariantError("fewer than two minimal syzygies")
    if (m == 2) != (len(b) == 0):
        raise InvariantError("free/second-syzygy mismatch")

    # saturation and tau
    sigma_gens = saturate(gens)
    sigma_gb = groebner_basis(sigma_gens)
    tau = sigma_gb.colength()
    if tau != gb_colength:
        raise InvariantError("eventual Hilbert values of J and its saturation differ")
    if tau < 1:
        raise InvariantError("saturation lost the subscheme")

    sigma_res = minimal_resolution(sigma_gens)
    sigma_betti_table = betti(sigma_res)
    sigma_is_ci = sigma_betti_table.total_at(0) == 2

    # numeric invariants
    d1 = exponents[0]
    formulas = chern_and_formulas(d, tau, d1)
    c1, c2, deg_z = formulas["c1"], formulas["c2"], formulas["deg_Z"]
    if sum(exponents) - sum(b) != d - 1:
        raise InvariantError("sum d_i - sum b_j != d - 1")
    if c2_from_exponents(exponents, b) != c2:
        raise InvariantError("Chern class from exponents disagrees with (d-1)^2 - tau")
    # eventual HF of S/I = binom(t+2,2) - HF(I, t); check against tau
    t_big = _sigma_ideal_numerator_degree(sigma_res) + 1
    hf_ideal = resolution_hilbert_function(sigma_res, t_big)
    if (t_big + 1) * (t_big + 2) // 2 - hf_ideal != tau:
        raise InvariantError("resolution-based tau disagrees with staircase tau")

    sigma_cone_ok = sigma_table_reachable(sigma_betti_table, exponents, b, d)

    internals = {
        "gens": gens,
        "ar_gens": ar_gens,
        "ar_res": ar_res,
        "sigma_gens": sigma_gens,
        "sigma_res": sigma_res,
    }

    z = _z_report(ar_res, exponents, b, d, tau, field, internals)
    if z.deg_Z != deg_z:
        raise InvariantError("deg Z from Hilbert data disagrees with the Chern formula")
    h1 = _h1_report(sigma_gens, gens, exponents, b, d, m, field, internals)

    from .theorems import classify as _classify

    analysis = QciAnalysis(
        input=inp,
        d=d,
        s=s,
        tau=tau,
        smooth=False,
        m=m,
        exponents=exponents,
        second_syzygy_degrees=b,
        c1=c1,
        c2=c2,
        deg_Z=deg_z,
        ar_betti=betti(ar_res),
        sigma_betti=sigma_betti_table,
        z=z,
        h1=h1,
        sigma_is_ci=sigma_is_ci,
        sigma_cone_ok=sigma_cone_ok,
        warnings=warnings,
        internals=internals,
    )
    analysis.classification = _classify(analysis)
    if not sigma_cone_ok:
        raise InvariantError(
            "computed saturated-ideal Betti table not reachable from the mapping cone"
        )
    if deep_checks:
        verify_hilbert_consistency(analysis)
    return analysis


def _sigma_ideal_numerator_degree(sigma_res) -> int:
    return max(max(m.twists) for m in sigma_res.modules)


def _z_report(ar_res, exponents, b, d, tau, field, internals) -> ZReport:
    """Quotient of the syzygy module by its first minimal-degree generator."""
    f0 = ar_res.modules[0]
    m = f0.rank
    d1 = exponents[0]
    relations = list(ar_res.differentials[0]) if ar_res.length >= 1 else []
    # kill the chosen generator: the minimal generators are sorted by degree,
    # so index 0 has degree d_1
    kill = ModuleElement.basis_vector(f0, field, 0)
    n_pres = PresentedModule(f0, relations + [kill])
    n_res = minimal_resolution(n_pres)
    z_b = betti(n_res)
    expected = BettiTable.from_twists(
        [sorted(exponents[1:]), sorted(b)] if b else [sorted(exponents[1:])]
    )
    if z_b != expected:
        raise InvariantError(
            f"Betti table of AR/S*rho1 {z_b!r} differs from the predicted shape {expected!r}"
        )
    # degree of Z from the Hilbert data of N = I_Z(d1+1-d)
    shift = d1 + 1 - d
    t = max(max(mod.twists) for mod in n_res.modules) + 2 - shift
    vals = []
    for tt in (t, t + 1):
        hf = hilbert_function(n_pres, tt)
        u = tt + shift
        vals.append((u + 1) * (u + 2) // 2 - hf)
    if vals[0] != vals[1]:
        raise InvariantError("Hilbert function of N did not stabilize")
    deg_z_hilbert = vals[0]
    gens_count = z_b.total_at(0)
    is_ci = gens_count == 2
    ci_type = None
    if m == 3:
        ci_type = (
            exponents[0] + exponents[1] - d + 1,
            exponents[0] + exponents[2] - d + 1,
        )
    internals["n_pres"] = n_pres
    internals["n_res"] = n_res
    return ZReport(
        chosen_syzygy_degree=d1,
        deg_Z=deg_z_hilbert,
        z_betti=z_b,
        is_complete_intersection=is_ci,
        ci_type=ci_type,
    )


def _h1_report(sigma_gens, j_gens, exponents, b, d, m, field, internals) -> H1Report:
    """The finite-length module Q = I_sat / J, checked against the predicted
    four-term shape (generators at 2d-2-b_j, then 2d-2-d_i, d_i+d-1, b_j+d-1).
    """
    if m == 2:
        if not ideal_equal(sigma_gens, j_gens):
            raise InvariantError("free case but the q.c.i. ideal is not saturated")
        empty = BettiTable()
        internals["q_pres"] = None
        internals["q_res"] = None
        return H1Report(generator_count=0, h1_betti=empty)
    q_pres = submodule_quotient(sigma_gens, j_gens)
    q_res = minimal_resolution(q_pres)
    q_b = betti(q_res)
    expected = BettiTable.from_twists(
        [
            sorted(2 * d - 2 - bj for bj in b),
            sorted(2 * d - 2 - di for di in exponents),
            sorted(di + d - 1 for di in exponents),
            sorted(bj + d - 1 for bj in b),
        ]
    )
    if q_b != expected:
        raise InvariantError(
            f"Betti table of I_sat/J {q_b!r} differs from the predicted shape {expected!r}"
        )
    internals["q_pres"] = q_pres
    internals["q_res"] = q_res
    return H1Report(generator_count=q_b.total_at(0), h1_betti=q_b)


def verify_hilbert_consistency(analysis: QciAnalysis):
    """Oracle redundancy: the degree-wise linear-algebra Hilbert evaluator
    must agree with the resolution alternating sum at every degree up to
    three times the largest twist, for each computed resolution."""
    internals = analysis.internals
    field = analysis.input.field

    def check_presented(pres, res, label):
        bound = 3 * max(max(mod.twists) for mod in res.modules)
        for t in range(bound + 1):
            lhs = hilbert_function(pres, t)
            rhs = resolution_hilbert_function(res, t)
            if lhs != rhs:
                raise InvariantError(
                    f"Hilbert mismatch for {label} at degree {t}: {lhs} != {rhs}"
                )

    # S / I_sigma as a presented module
    amb1 = FreeGradedModule((0,))
    sigma_rel = [poly_to_element(g, amb1) for g in internals["sigma_gens"]]
    s_over_i = PresentedModule(amb1, sigma_rel)
    sigma_res = internals["sigma_res"]
    bound = 3 * max(max(mod.twists) for mod in sigma_res.modules)
    for t in range(bound + 1):
        lhs = hilbert_function(s_over_i, t)
        rhs = (t + 1) * (t + 2) // 2 - resolution_hilbert_function(sigma_res, t)
        if lhs != rhs:
            raise InvariantError(
                f"Hilbert mismatch for S/I_sigma at degree {t}: {lhs} != {rhs}"
            )

    # the syzygy submodule AR
    ar_res = internals["ar_res"]
    ar_gens = internals["ar_gens"]
    bound = 3 * max(max(mod.twists) for mod in ar_res.modules)
    for t in range(bound + 1):
        lhs = submodule_dim(ar_gens, ar_gens[0].ambient.twists, t)
        rhs = resolution_hilbert_function(ar_res, t)
        if lhs != rhs:
            raise InvariantError(
                f"Hilbert mismatch for AR at degree {t}: {lhs} != {rhs}"
            )

    if internals.get("n_pres") is not None:
        check_presented(internals["n_pres"], internals["n_res"], "AR/S*rho1")
    if internals.get("q_pres") is not None:
        check_presented(internals["q_pres"], internals["q_res"], "I_sat/J")

    # staircase tau against the Chern bookkeeping
    if analysis.tau != (analysis.d - 1) ** 2 - analysis.c2:
        raise InvariantError("staircase tau != (d-1)^2 - c2")
