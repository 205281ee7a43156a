"""Quadratic functions over the linking pairing.

A ``QuadraticFunction`` is a complete table of values on H.  Every
quadratic function refining the linking pairing takes values in
``(1/2e) Z / Z`` where ``e`` is the exponent of H, so tables are stored as
integers in units of ``1 / group.den``.  Equality of two tables is exact.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from operator import mul
from typing import Iterator, Sequence

from . import exactlin
from .errors import ConsistencyError, DegenerateFunction, NoMatch, NotAlgebraicallySplit
from .homology import HomologyClass, HomologyGroup, SurgeryPresentation, homology_of
from .qmodz import QmodZ
from .spinc import (
    SpincClass,
    charge_enumerate,
    charge_to_chern,
    check_charge,
    check_chern,
    chern_enumerate,
    spinc_from_charge,
    spinc_from_chern,
)

DEFAULT_TOLERANCE = 1e-6


class QuadraticFunction:
    __slots__ = ("group", "units")

    def __init__(self, group: HomologyGroup, units: Sequence[int], *, reduced: bool = False):
        if len(units) != group.order:
            raise ValueError(f"table has {len(units)} entries, group has order {group.order}")
        self.group = group
        den = group.den
        self.units = tuple(units) if reduced else tuple(int(u) % den for u in units)

    @classmethod
    def from_values(cls, group: HomologyGroup, values) -> "QuadraticFunction":
        """Build from a mapping ``HomologyClass -> rational`` covering all of H."""
        units = []
        for h in group.elements:
            f = Fraction(QmodZ(values[h]).as_fraction() * group.den)
            if f.denominator != 1:
                raise ConsistencyError(
                    f"value {QmodZ(values[h])} at {h} is not in (1/{group.den})Z; "
                    "no quadratic function over this pairing takes it"
                )
            units.append(f.numerator)
        return cls(group, units)

    def __getitem__(self, h: HomologyClass) -> QmodZ:
        return QmodZ(self.units[self.group.index(h)], self.group.den)

    def __call__(self, h: HomologyClass) -> QmodZ:
        return self[h]

    def items(self) -> Iterator[tuple[HomologyClass, QmodZ]]:
        den = self.group.den
        for h, u in zip(self.group.elements, self.units):
            yield h, QmodZ(u, den)

    def table(self) -> list[QmodZ]:
        den = self.group.den
        return [QmodZ(u, den) for u in self.units]

    def __eq__(self, other):
        if not isinstance(other, QuadraticFunction):
            return NotImplemented
        return (self.group.presentation == other.group.presentation
                and self.units == other.units)

    def __hash__(self):
        return hash((self.group.presentation, self.units))

    def __neg__(self):
        return QuadraticFunction(self.group, [-u for u in self.units])

    def __repr__(self):
        head = ", ".join(str(v) for v in self.table()[:8])
        more = ", ..." if self.group.order > 8 else ""
        return f"QuadraticFunction([{head}{more}])"

    def refinement_defect(self):
        """First pair (x, y) where q(x+y) - q(x) - q(y) != lambda(x, y), else None."""
        g = self.group
        if self.units[0] != 0:
            return (g.zero, g.zero)
        elements, lifts, flifts = g.elements, g.lifts, g._form_lifts
        den, u = g.den, self.units
        index = {h: i for i, h in enumerate(elements)}
        for i, x in enumerate(elements):
            xi = lifts[i]
            for j in range(i, len(elements)):
                lam = -2 * sum(a * b for a, b in zip(xi, flifts[j]))
                k = index[x + elements[j]]
                if (u[k] - u[i] - u[j] - lam) % den:
                    return (x, elements[j])
        return None

    def refines_linking(self) -> bool:
        return self.refinement_defect() is None


def _require_split(p: SurgeryPresentation) -> None:
    if not p.is_split:
        raise NotAlgebraicallySplit(
            "this formula needs an algebraically split presentation (diagonal linking matrix)"
        )


def phi_at(p: SurgeryPresentation, s: Sequence[int], x: Sequence[int]) -> QmodZ:
    """Value of phi_s on the class of an arbitrary integer vector ``x``."""
    g = homology_of(p)
    s = check_chern(p, s)
    fx = g.form_vector(x)
    total = sum(a * b for a, b in zip(x, fx)) + sum(a * b for a, b in zip(fx, s))
    return QmodZ(-total, g.den)


def phi_from_chern(p: SurgeryPresentation, s) -> QuadraticFunction:
    """phi(x) = -(X^T B^{-1} X + X^T B^{-1} s) / 2 mod 1."""
    if isinstance(s, SpincClass):
        s = s.chern
    g = homology_of(p)
    s = check_chern(p, s)
    fs = g.form_vector(s)
    den = g.den
    units = [-(qx + sum(map(mul, x, fs))) % den for qx, x in zip(g._quad_self, g.lifts)]
    return QuadraticFunction(g, units, reduced=True)


def phi_on_meridian_split(p: SurgeryPresentation, s: Sequence[int], i: int) -> QmodZ:
    """phi([m_i]) = -(1 - s_i) / (2 b_ii) mod 1 for a diagonal linking matrix."""
    _require_split(p)
    s = check_chern(p, s)
    return QmodZ(-(1 - s[i]), 2 * p.matrix[i][i])


def quad_extend(g: HomologyGroup, generator_values: Sequence) -> QuadraticFunction:
    """Extend values on the meridians to the unique quadratic function refining lambda.

    Propagates ``q(x + m_i) = q(x) + q(m_i) + lambda(x, m_i)`` along a spanning
    tree of the Cayley graph on the meridians, then checks every edge.  Edge
    consistency for all x and i is equivalent to the refinement identity on
    all pairs.
    """
    if len(generator_values) != g.n:
        raise ConsistencyError(f"need {g.n} generator values, got {len(generator_values)}")
    den = g.den
    gens = []
    for i, v in enumerate(generator_values):
        f = QmodZ(v).as_fraction() * den
        if f.denominator != 1:
            raise ConsistencyError(
                f"value {QmodZ(v)} on meridian {i + 1} is not in (1/{den})Z"
            )
        gens.append(int(f))
    succ, lam, tree = g._meridian_walk
    vals = [0] * g.order
    for y, x, i in tree:
        vals[y] = (vals[x] + gens[i] + lam[i][x]) % den
    for i, gi in enumerate(gens):
        for x, (vx, lx, y) in enumerate(zip(vals, lam[i], succ[i])):
            if (vx + gi + lx - vals[y]) % den:
                z = g.elements[x]
                raise ConsistencyError(
                    f"meridian values are inconsistent: q({z} + m_{i + 1}) would need to be "
                    f"{QmodZ(vx + gi + lx, den)} but is {QmodZ(vals[y], den)}"
                )
    return QuadraticFunction(g, vals, reduced=True)


def q_from_charge_split(p: SurgeryPresentation, k: Sequence[int]) -> QuadraticFunction:
    """Torsion quadratic function of a split presentation: q([m_j]) = 1/2 - k_j / (2 b_jj)."""
    _require_split(p)
    k = check_charge(p, k)
    values = [Fraction(1, 2) - Fraction(kj, 2 * p.matrix[j][j]) for j, kj in enumerate(k)]
    return quad_extend(homology_of(p), values)


def linking_units_with(g: HomologyGroup, h: HomologyClass) -> list[int]:
    fh = g.form_vector(g.lift(h))
    return [(-2 * sum(a * b for a, b in zip(x, fh))) % g.den for x in g.lifts]


def act_on_quad(q: QuadraticFunction, h: HomologyClass) -> QuadraticFunction:
    """(h . q)(x) = q(x) + lambda(h, x)."""
    lam = linking_units_with(q.group, h)
    return QuadraticFunction(q.group, [a + b for a, b in zip(q.units, lam)])


@dataclass(frozen=True)
class GaussData:
    """Normalised Gauss sum ``exp(2 pi i d) = |H|^{-1/2} sum_x exp(2 pi i q(x))``.

    ``modulus_squared`` is the floating value of ``|sum|^2``; ``d`` is
    snapped to the grid ``(1/bound) Z`` with ``bound = 4 N`` and ``N`` the lcm
    of the value denominators.
    """

    modulus_squared: float
    d: QmodZ
    phase_tally: dict = field(repr=False)
    order: int
    bound: int
    residual: float


def gauss(q: QuadraticFunction, tolerance: float = DEFAULT_TOLERANCE) -> GaussData:
    g = q.group
    den = g.den
    counts = Counter(q.units)
    tally = {QmodZ(u, den): c for u, c in sorted(counts.items())}
    lcm = 1
    for v in tally:
        lcm = math.lcm(lcm, v.denominator)
    re = math.fsum(c * math.cos(2 * math.pi * v.numerator / v.denominator) for v, c in tally.items())
    im = math.fsum(c * math.sin(2 * math.pi * v.numerator / v.denominator) for v, c in tally.items())
    modsq = re * re + im * im
    if abs(modsq - g.order) >= tolerance * g.order:
        raise DegenerateFunction(
            f"|Gauss sum|^2 = {modsq!r} differs from |H| = {g.order} beyond tolerance"
        )
    theta = (cmath.phase(complex(re, im)) / (2 * math.pi)) % 1.0
    bound = 4 * lcm
    m = round(theta * bound)
    residual = abs(theta - m / bound)
    residual = min(residual, 1.0 - residual)
    if residual >= tolerance:
        raise DegenerateFunction(
            f"Gauss phase {theta!r} is {residual:.3g} away from the grid (1/{bound})Z"
        )
    return GaussData(modsq, QmodZ(m % bound, bound), tally, g.order, bound, residual)


def block_sum(p1: SurgeryPresentation, p2: SurgeryPresentation) -> SurgeryPresentation:
    n1, n2 = p1.n, p2.n
    rows = [tuple(p1.matrix[i]) + (0,) * n2 for i in range(n1)]
    rows += [(0,) * n1 + tuple(p2.matrix[i]) for i in range(n2)]
    name = f"{p1.name}#{p2.name}" if p1.name and p2.name else ""
    return SurgeryPresentation(tuple(rows), name=name)


def direct_sum(p1: SurgeryPresentation, sigma1: SpincClass,
               p2: SurgeryPresentation, sigma2: SpincClass):
    """Connected sum at the presentation level: block matrix, concatenated Chern vectors."""
    p = block_sum(p1, p2)
    return p, spinc_from_chern(p, tuple(sigma1.chern) + tuple(sigma2.chern))


def negate(p: SurgeryPresentation, sigma: SpincClass):
    """Orientation reversal: ``(-B, -s)``.

    Both presentations have the same cokernel.  Reversing orientation reverses
    the meridians, so the class of ``X`` for ``B`` corresponds to the class of
    ``-X`` for ``-B``; under that identification ``phi_{-B,-s}`` is
    ``-phi_{B,s}`` entry by entry.  See ``negation_map``.
    """
    q = p.negated()
    return q, spinc_from_chern(q, tuple(-x for x in sigma.chern))


def negation_map(p: SurgeryPresentation) -> tuple[int, ...]:
    """Index map H(B) -> H(-B) sending the class of ``X`` to the class of ``-X``."""
    g, gn = homology_of(p), homology_of(p.negated())
    return tuple(gn.index(gn.project([-a for a in x])) for x in g.lifts)


@dataclass(frozen=True)
class Isometry:
    """Group isomorphism H(source) -> H(target) carrying one linking pairing to the other.

    ``images[i]`` is the image of the i-th Smith generator of the source.
    """

    source: HomologyGroup
    target: HomologyGroup
    images: tuple[HomologyClass, ...]

    def __call__(self, h: HomologyClass) -> HomologyClass:
        out = self.target.zero
        for c, y in zip(h.coords, self.images):
            out = out + c * y
        return out

    @cached_property
    def index_map(self) -> tuple[int, ...]:
        return tuple(self.target.index(self(h)) for h in self.source.elements)


def match_presentations(p1: SurgeryPresentation, p2: SurgeryPresentation) -> Isometry:
    """Brute-force search for an isometry of linking pairings.

    Generator images are tried in lexicographic order of Smith coordinates;
    the first isometry found is returned.
    """
    g1, g2 = homology_of(p1), homology_of(p2)
    if g1.order != g2.order:
        raise NoMatch(f"|H| differs: {g1.order} vs {g2.order}")
    r = len(g1.invariant_factors)
    gens = [g1.element(tuple(int(i == j) for j in range(r))) for i in range(r)]
    lam1 = [[g1.linking(a, b) for b in gens] for a in gens]
    candidates = [[y for y in g2.elements if (d * y).is_zero()]
                  for d in g1.invariant_factors]
    images: list[HomologyClass] = []

    def search(i):
        if i == r:
            return True
        for y in candidates[i]:
            if g2.linking(y, y) != lam1[i][i]:
                continue
            if any(g2.linking(y, images[j]) != lam1[i][j] for j in range(i)):
                continue
            images.append(y)
            if search(i + 1):
                return True
            images.pop()
        return False

    if not search(0):
        raise NoMatch("linking pairings are not isometric")
    return Isometry(g1, g2, tuple(images))


def pullback(q: QuadraticFunction, iso: Isometry) -> QuadraticFunction:
    """``q o iso`` as a quadratic function on the source group."""
    if q.group is not iso.target and q.group.presentation != iso.target.presentation:
        raise ValueError("function does not live on the isometry target")
    return QuadraticFunction(iso.source, [q.units[j] for j in iso.index_map])


@dataclass(frozen=True)
class TheoremRow:
    charge: tuple[int, ...]
    chern: tuple[int, ...]
    passed: bool
    matched: str | None = None


@dataclass(frozen=True)
class TheoremReport:
    presentation: SurgeryPresentation
    rows: tuple[TheoremRow, ...]
    isometry: Isometry | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)


def verify_theorem_split(p: SurgeryPresentation) -> TheoremReport:
    """Compare the charge-side and Chern-side quadratic functions class by class."""
    _require_split(p)
    rows = []
    for k in charge_enumerate(p):
        sigma = spinc_from_charge(p, k)
        q = q_from_charge_split(p, k)
        phi = phi_from_chern(p, charge_to_chern(p, k))
        rows.append(TheoremRow(k, sigma.chern, q == phi))
    return TheoremReport(p, tuple(rows))


def verify_with_companion(p: SurgeryPresentation, companion: SurgeryPresentation) -> TheoremReport:
    """Non-split check through a split presentation with an isometric linking pairing.

    For each charge class on the companion, the charge-side function is
    compared with the Chern-side function there, then pulled back along the
    isometry and located among the Chern-side functions of ``p``.  A row passes
    when both comparisons succeed; the matching must also be a bijection.
    """
    _require_split(companion)
    iso = match_presentations(p, companion)
    phis = {}
    for sigma in chern_enumerate(p):
        phis[phi_from_chern(p, sigma.chern).units] = sigma
    seen = set()
    rows = []
    for k in charge_enumerate(companion):
        q = q_from_charge_split(companion, k)
        s2 = charge_to_chern(companion, k)
        same = q == phi_from_chern(companion, s2)
        hit = phis.get(pullback(q, iso).units)
        fresh = hit is not None and hit not in seen
        if hit is not None:
            seen.add(hit)
        rows.append(TheoremRow(k, spinc_from_chern(companion, s2).chern, same and fresh,
                               matched=hit.label if hit else None))
    return TheoremReport(p, tuple(rows), isometry=iso)
