"""Reidemeister-Turaev torsion tables reduced modulo 1.

The torsion itself is never computed here.  A table lists the rational
coefficients ``tau_sigma(h)`` for one Spin^c class, usually produced by an
external program.  From such tables we check

    tau(h1 + h2) - tau(h1) - tau(h2) + tau(0) = -lambda(h1, h2)   mod 1,

recover the quadratic function ``q(h) = tau(0) - tau(-h)`` and form the
constant ``c_sigma - d_sigma``, which must not depend on sigma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import AxiomViolation, DimensionMismatch, InconsistentFamily, IncompleteTable
from .homology import HomologyClass, HomologyGroup, homology_of
from .qmodz import QmodZ
from .quad import DEFAULT_TOLERANCE, QuadraticFunction, gauss, phi_from_chern
from .spinc import SpincClass, act, difference


@dataclass(frozen=True)
class TorsionTable:
    sigma: SpincClass
    values: Mapping[HomologyClass, Fraction]

    @property
    def group(self) -> HomologyGroup:
        return homology_of(self.sigma.presentation)

    @classmethod
    def from_sequence(cls, sigma: SpincClass, seq: Sequence) -> "TorsionTable":
        """Values listed in the canonical element order of the group."""
        g = homology_of(sigma.presentation)
        if len(seq) > g.order:
            raise DimensionMismatch(f"{len(seq)} values for a group of order {g.order}")
        return cls(sigma, {h: Fraction(v) for h, v in zip(g.elements, seq)})

    @property
    def complete(self) -> bool:
        return all(h in self.values for h in self.group.elements)

    def sequence(self) -> list[Fraction]:
        return [self.values[h] for h in self.group.elements]

    def __getitem__(self, h: HomologyClass) -> Fraction:
        return self.values[h]


@dataclass(frozen=True)
class AxiomCheck:
    ok: bool
    pair: tuple[HomologyClass, HomologyClass] | None = None

    def __bool__(self):
        return self.ok


def _residues(t: TorsionTable):
    """Table values and linking as integers modulo a common denominator."""
    g = t.group
    if not t.complete:
        missing = sum(1 for h in g.elements if h not in t.values)
        raise IncompleteTable(
            f"torsion table for {t.sigma.label} is missing {missing} of {g.order} values"
        )
    vals = t.sequence()
    den = g.den
    for v in vals:
        den = math.lcm(den, v.denominator)
    return [int(v * den) % den for v in vals], den


def check_axiom(t: TorsionTable) -> AxiomCheck:
    g = t.group
    vals, den = _residues(t)
    scale = den // g.den
    elements, lifts = g.elements, g.lifts
    flifts = g._form_lifts
    t0 = vals[0]
    for i, x in enumerate(elements):
        for j in range(i, g.order):
            y = elements[j]
            lam = (-2 * sum(a * b for a, b in zip(lifts[i], flifts[j]))) * scale
            k = g.index(x + y)
            if (vals[k] - vals[i] - vals[j] + t0 + lam) % den:
                return AxiomCheck(False, (x, y))
    return AxiomCheck(True)


def extract_q(t: TorsionTable) -> QuadraticFunction:
    """``q(h) = tau(0) - tau(-h) mod 1``."""
    check = check_axiom(t)
    if not check:
        h1, h2 = check.pair
        raise AxiomViolation(
            f"torsion table for {t.sigma.label} violates the mod 1 linking identity "
            f"at (h1, h2) = ({h1}, {h2})",
            pair=check.pair,
        )
    g = t.group
    t0 = t.values[g.zero]
    return QuadraticFunction.from_values(g, {h: t0 - t.values[-h] for h in g.elements})


def synthesize(sigma: SpincClass, t0=Fraction(0)) -> TorsionTable:
    """Table ``tau(h) = t0 - phi_sigma(-h)``, consistent with every checked identity."""
    phi = phi_from_chern(sigma.presentation, sigma.chern)
    t0 = Fraction(t0)
    return TorsionTable(sigma, {h: t0 - phi[-h].as_fraction() for h in phi.group.elements})


def translate(t: TorsionTable, h: HomologyClass) -> TorsionTable:
    """Table of ``h . sigma`` from the equivariance ``tau_{h.sigma}(x) = tau_sigma(x - h)``."""
    return TorsionTable(act(h, t.sigma), {x: t.values[x - h] for x in t.group.elements})


@dataclass(frozen=True)
class TorsionReport:
    sigma: SpincClass
    axiom_ok: bool
    extracted_q: QuadraticFunction
    q_matches_phi: bool
    c_sigma: QmodZ
    d_sigma: QmodZ
    c_M: QmodZ


@dataclass(frozen=True)
class FamilyReport:
    reports: tuple[TorsionReport, ...]
    c_M: QmodZ
    equivariance_pairs: int

    @property
    def all_q_match_phi(self) -> bool:
        return all(r.q_matches_phi for r in self.reports)


def report_for(t: TorsionTable, tolerance: float = DEFAULT_TOLERANCE) -> TorsionReport:
    q = extract_q(t)
    phi = phi_from_chern(t.sigma.presentation, t.sigma.chern)
    c = QmodZ(t.values[t.group.zero])
    d = gauss(phi, tolerance).d
    return TorsionReport(t.sigma, True, q, q == phi, c, d, c - d)


def c_invariant(tables: Sequence[TorsionTable], tolerance: float = DEFAULT_TOLERANCE) -> FamilyReport:
    """Per-class reports and the sigma-independent constant ``c_sigma - d_sigma``.

    With several tables the equivariance of the torsion and the transformation
    rule of ``c_sigma`` are checked against the first table.
    """
    if not tables:
        raise IncompleteTable("no torsion tables supplied")
    p = tables[0].sigma.presentation
    if any(t.sigma.presentation != p for t in tables):
        raise InconsistentFamily("tables belong to different presentations", identity="presentation")
    reports = [report_for(t, tolerance) for t in tables]
    base, base_report = tables[0], reports[0]
    g = base.group
    pairs = 0
    for t, r in zip(tables[1:], reports[1:]):
        h = difference(base.sigma, t.sigma)
        for x in g.elements:
            if t.values[x] != base.values[x - h]:
                raise InconsistentFamily(
                    f"equivariance fails: tau_{{{t.sigma.label}}}({x}) = {t.values[x]} but "
                    f"tau_{{{base.sigma.label}}}({x - h}) = {base.values[x - h]} with h = {h}",
                    identity="equivariance",
                )
        phi = phi_from_chern(p, base.sigma.chern)
        if r.c_sigma != base_report.c_sigma - phi[h]:
            raise InconsistentFamily(
                f"c_{{h.sigma}} = c_sigma - phi_sigma(h) fails for {t.sigma.label}",
                identity="c-shift",
            )
        if r.c_M != base_report.c_M:
            raise InconsistentFamily(
                f"c(M) differs: {base_report.c_M} for {base.sigma.label}, "
                f"{r.c_M} for {t.sigma.label}",
                identity="c(M)",
            )
        pairs += 1
    return FamilyReport(tuple(reports), base_report.c_M, pairs)
