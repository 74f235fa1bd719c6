"""Serialization of analysis results: versioned JSON (the source of truth),
TSV Betti tables, and a pretty text rendering derived from the JSON.
"""

from __future__ import annotations

import json

from .poly import format_polynomial
from .resolution import BettiTable

SCHEMA_VERSION = 1


def field_to_json(field) -> dict:
    return {"kind": field.kind, "prime": field.prime}


def input_to_json(inp) -> dict:
    return {
        "mode": inp.mode,
        "polynomials": [format_polynomial(f) for f in inp.polys],
    }


def analysis_to_json(a, report=None) -> dict:
    """The full record; keys are stable API."""
    doc = {
        "version": SCHEMA_VERSION,
        "input": input_to_json(a.input),
        "field": field_to_json(a.input.field),
        "d": a.d,
        "smooth": a.smooth,
        "tau": a.tau,
        "m": a.m,
        "exponents": list(a.exponents) if a.exponents else None,
        "b": list(a.second_syzygy_degrees)
        if a.second_syzygy_degrees is not None
        else None,
        "c1": a.c1,
        "c2": a.c2,
        "degZ": a.deg_Z,
        "betti": None
        if a.smooth
        else {
            "ar": a.ar_betti.to_json(),
            "sigma": a.sigma_betti.to_json(),
            "z": a.z.z_betti.to_json(),
            "h1": a.h1.h1_betti.to_json(),
        },
        "classification": a.classification,
        "warnings": list(a.warnings),
        "checks": report.to_json() if report is not None else None,
    }
    return doc


def render_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _betti_from_json(tbl: dict) -> BettiTable:
    t = BettiTable()
    for pos, row in tbl.items():
        for deg, c in row.items():
            t.entries[(int(pos), int(deg))] = c
    return t


def render_tsv(doc) -> str:
    """One Macaulay-style block per Betti table, plus a scalar header."""
    lines = []
    for key in ("d", "tau", "m", "c1", "c2", "degZ", "classification"):
        lines.append(f"{key}\t{doc[key]}")
    lines.append(f"exponents\t{' '.join(map(str, doc['exponents'] or []))}")
    lines.append(f"b\t{' '.join(map(str, doc['b'] or []))}")
    if doc["betti"]:
        for name in ("ar", "sigma", "z", "h1"):
            lines.append(f"[betti {name}]")
            lines.append(_betti_from_json(doc["betti"][name]).to_tsv().rstrip("\n"))
    return "\n".join(lines) + "\n"


def render_pretty(doc) -> str:
    """Human-readable view; strictly a function of the JSON document."""
    out = []
    polys = doc["input"]["polynomials"]
    if doc["input"]["mode"] == "curve":
        out.append(f"curve f = {polys[0]}")
    else:
        out.append("triple:")
        for p in polys:
            out.append(f"  {p}")
    fld = doc["field"]
    out.append(
        "field: rationals" if fld["kind"] == "q" else f"field: GF({fld['prime']})"
    )
    out.append(f"degree d = {doc['d']}")
    if doc["smooth"]:
        out.append("smooth: the jacobian subscheme is empty (tau = 0)")
        return "\n".join(out) + "\n"
    out.append(f"tau = {doc['tau']}   (c1 = {doc['c1']}, c2 = {doc['c2']})")
    out.append(
        f"syzygies: m = {doc['m']}, exponents {tuple(doc['exponents'])},"
        f" second syzygies {tuple(doc['b'])}"
    )
    out.append(f"deg Z = {doc['degZ']}   classification: {doc['classification']}")
    for name, label in (
        ("sigma", "I_sigma"),
        ("ar", "syzygy module"),
        ("z", "N = AR/S*rho1"),
        ("h1", "Q = I_sigma/J"),
    ):
        out.append(f"betti table of {label}:")
        tsv = _betti_from_json(doc["betti"][name]).to_tsv().rstrip("\n")
        out.extend("  " + ln for ln in tsv.split("\n"))
    for w in doc["warnings"]:
        out.append(f"warning: {w}")
    if doc["checks"]:
        out.append("checks:")
        for c in doc["checks"]:
            status = c["severity"]
            out.append(f"  {c['id']}: {status}")
    return "\n".join(out) + "\n"


RENDERERS = {"json": render_json, "tsv": render_tsv, "pretty": render_pretty}
