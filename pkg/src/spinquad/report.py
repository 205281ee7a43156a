"""Report documents for the command line.

Each ``*_report`` function returns a JSON-ready dict; rationals are always
reduced ``p/q`` strings.  ``render`` turns the same dict into plain text, so
the two output modes never disagree.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .homology import SurgeryPresentation, homology_of
from .qmodz import QmodZ
from .quad import (
    DEFAULT_TOLERANCE,
    TheoremReport,
    gauss,
    phi_from_chern,
)
from .spinc import SpincClass, charge_enumerate, charge_to_chern, chern_enumerate, spinc_from_charge
from .torsion import FamilyReport


def rat(x) -> str:
    if isinstance(x, QmodZ):
        x = x.as_fraction()
    return str(Fraction(x))


def _header(p: SurgeryPresentation, command: str) -> dict:
    g = homology_of(p)
    return {
        "command": command,
        "name": p.name,
        "matrix": [list(r) for r in p.matrix],
        "order": g.order,
        "invariant_factors": list(g.invariant_factors),
    }


def analyze_report(p: SurgeryPresentation) -> dict:
    g = homology_of(p)
    doc = _header(p, "analyze")
    doc["elements"] = [{"coords": list(h.coords), "lift": list(x)}
                       for h, x in zip(g.elements, g.lifts)]
    doc["meridians"] = [list(m.coords) for m in g.meridians]
    doc["linking"] = [[rat(v) for v in row] for row in g.linking_table()]
    return doc


def spinc_report(p: SurgeryPresentation, encoding: str = "chern", named=None) -> dict:
    doc = _header(p, "spinc")
    doc["encoding"] = encoding
    rows = []
    for k in charge_enumerate(p):
        s = charge_to_chern(p, k)
        sigma = spinc_from_charge(p, k)
        rows.append({"label": sigma.label, "chern": list(sigma.chern),
                     "charge": list(k), "chern_from_charge": list(s)})
    key = "chern" if encoding == "chern" else "charge"
    rows.sort(key=lambda r: r[key])
    doc["classes"] = rows
    doc["named"] = {name: sigma.label for name, sigma in (named or {}).items()}
    return doc


def quad_entry(sigma: SpincClass, tolerance: float = DEFAULT_TOLERANCE) -> dict:
    phi = phi_from_chern(sigma.presentation, sigma.chern)
    gd = gauss(phi, tolerance)
    return {
        "sigma": sigma.label,
        "phi": [rat(v) for v in phi.table()],
        "d": rat(gd.d),
        "d_bound": gd.bound,
        "modulus_squared": gd.modulus_squared,
        "phase_residual": gd.residual,
    }


def quad_report(p: SurgeryPresentation, sigmas, tolerance=DEFAULT_TOLERANCE) -> dict:
    doc = _header(p, "quad")
    doc["elements"] = [list(h.coords) for h in homology_of(p).elements]
    doc["tolerance"] = tolerance
    doc["functions"] = [quad_entry(s, tolerance) for s in sigmas]
    return doc


def verify_report(tr: TheoremReport, companion: SurgeryPresentation | None = None) -> dict:
    doc = _header(tr.presentation, "verify")
    if companion is not None:
        doc["companion"] = [list(r) for r in companion.matrix]
        doc["isometry"] = [list(y.coords) for y in tr.isometry.images]
    doc["rows"] = [
        {"charge": list(r.charge), "chern": list(r.chern),
         "verdict": "PASS" if r.passed else "FAIL",
         **({"matched": r.matched} if companion is not None else {})}
        for r in tr.rows
    ]
    doc["passed"] = tr.passed
    return doc


def torsion_report(fam: FamilyReport) -> dict:
    p = fam.reports[0].sigma.presentation
    doc = _header(p, "torsion")
    doc["tables"] = [
        {"sigma": r.sigma.label, "axiom": "PASS" if r.axiom_ok else "FAIL",
         "q_equals_phi": r.q_matches_phi,
         "q": [rat(v) for v in r.extracted_q.table()],
         "c_sigma": rat(r.c_sigma), "d_sigma": rat(r.d_sigma), "c_M": rat(r.c_M)}
        for r in fam.reports
    ]
    doc["c_M"] = rat(fam.c_M)
    doc["equivariance_pairs"] = fam.equivariance_pairs
    doc["sigma_independent"] = True
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2)


def _table(rows, headers) -> list[str]:
    cols = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(headers))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return [fmt.format(*r).rstrip() for r in cols]


def render(doc: dict) -> str:
    cmd = doc["command"]
    out = []
    if doc.get("name"):
        out.append(f"manifold: {doc['name']}")
    out.append(f"|H| = {doc['order']}, factors {doc['invariant_factors']}")
    if cmd == "analyze":
        out.append("elements (Smith coordinates -> lift):")
        out += [f"  {e['coords']} -> {e['lift']}" for e in doc["elements"]]
        out.append("linking pairing lambda(x_i, x_j):")
        out += ["  " + " ".join(row) for row in doc["linking"]]
    elif cmd == "spinc":
        out.append(f"{len(doc['classes'])} Spin^c classes (sorted by {doc['encoding']}):")
        rows = [(r["label"], r["charge"], r["chern_from_charge"]) for r in doc["classes"]]
        out += ["  " + line for line in _table(rows, ("class", "charge k", "s = 1 - k + col sums"))]
        for name, label in doc["named"].items():
            if name != label:
                out.append(f"  {name} = {label}")
    elif cmd == "quad":
        for f in doc["functions"]:
            out.append(f"sigma {f['sigma']}: d = {f['d']}  "
                       f"(|S|^2 = {f['modulus_squared']:.9g}, residual {f['phase_residual']:.2e})")
            out.append("  phi: " + " ".join(f["phi"]))
    elif cmd == "verify":
        if "isometry" in doc:
            out.append(f"isometry onto companion, generator images {doc['isometry']}")
        for r in doc["rows"]:
            extra = f"  -> {r['matched']}" if "matched" in r else ""
            out.append(f"  k={r['charge']}  s={r['chern']}  {r['verdict']}{extra}")
        n_pass = sum(r["verdict"] == "PASS" for r in doc["rows"])
        out.append(f"{n_pass}/{len(doc['rows'])} PASS")
    elif cmd == "torsion":
        rows = [(t["sigma"], t["axiom"], "yes" if t["q_equals_phi"] else "NO",
                 t["c_sigma"], t["d_sigma"], t["c_M"]) for t in doc["tables"]]
        out += ["  " + line for line in
                _table(rows, ("sigma", "axiom", "q = phi", "c_sigma", "d_sigma", "c(M)"))]
        out.append(f"c(M) = {doc['c_M']} (independent of sigma over "
                   f"{len(doc['tables'])} table(s))")
    return "\n".join(out) + "\n"
