"""Surgery presentations, the group H = coker B and its linking pairing.

Sign convention: the linking of the classes of integer vectors X and Y is

    lambda(x, y) = -X^T B^{-1} Y  mod 1.

With this sign the quadratic functions built from Chern vectors refine
lambda (see ``quad.phi_from_chern``).  Other references use +B^{-1}, so
compare carefully when importing numbers from elsewhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from . import exactlin
from .errors import DimensionMismatch, DomainError, NotRationalHomologySphere, SingularMatrix
from .exactlin import IntMatrix, IntVector
from .qmodz import QmodZ


@dataclass(frozen=True)
class SurgeryPresentation:
    """Symmetric linking matrix: framings on the diagonal, linking numbers off it."""

    matrix: IntMatrix
    name: str = field(default="", compare=False)

    def __post_init__(self):
        m = exactlin.as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if n == 0 or any(len(row) != n for row in m):
            raise DimensionMismatch("linking matrix must be square and non-empty")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
            raise DomainError("linking matrix must be symmetric")
        if exactlin.determinant(m) == 0:
            raise NotRationalHomologySphere(
                "det B = 0: surgery gives a manifold with infinite H_1"
            )

    @classmethod
    def diagonal(cls, *framings: int, name: str = "") -> "SurgeryPresentation":
        n = len(framings)
        return cls(tuple(tuple(framings[i] if i == j else 0 for j in range(n))
                         for i in range(n)), name=name)

    @property
    def n(self) -> int:
        return len(self.matrix)

    @cached_property
    def determinant(self) -> int:
        return exactlin.determinant(self.matrix)

    @property
    def framings(self) -> IntVector:
        return tuple(self.matrix[i][i] for i in range(self.n))

    @property
    def is_split(self) -> bool:
        """Algebraically split, i.e. the linking matrix is diagonal."""
        m = self.matrix
        return all(m[i][j] == 0 for i in range(self.n) for j in range(self.n) if i != j)

    @cached_property
    def lattice(self) -> exactlin.HermiteBasis:
        """Hermite basis of Im B."""
        return exactlin.hermite(self.matrix)

    @cached_property
    def lattice2(self) -> exactlin.HermiteBasis:
        """Hermite basis of 2 Im B."""
        return exactlin.hermite(tuple(tuple(2 * x for x in row) for row in self.matrix))

    def negated(self) -> "SurgeryPresentation":
        return SurgeryPresentation(tuple(tuple(-x for x in row) for row in self.matrix),
                                   name=f"-{self.name}" if self.name else "")


@dataclass(frozen=True, order=True)
class HomologyClass:
    """Element of H in Smith coordinates: ``coords[i]`` is taken mod ``moduli[i]``."""

    coords: tuple[int, ...]
    moduli: tuple[int, ...] = field(compare=False)

    def __post_init__(self):
        if len(self.coords) != len(self.moduli):
            raise DimensionMismatch("coords and moduli differ in length")
        object.__setattr__(
            self, "coords", tuple(int(c) % d for c, d in zip(self.coords, self.moduli))
        )

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        return HomologyClass(tuple(a + b for a, b in zip(self.coords, other.coords)),
                             self.moduli)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-a for a in self.coords), self.moduli)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int) -> "HomologyClass":
        return HomologyClass(tuple(k * a for a in self.coords), self.moduli)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"


class HomologyGroup:
    """H_1 of the surgered manifold, presented as ``Z^n / Im B``.

    Classes are encoded by Smith coordinates: ``X`` maps to ``U @ X`` reduced
    modulo the nontrivial invariant factors.  Elements are enumerated in
    lexicographic order of those coordinates; ``index`` is the mixed-radix
    position in that order.
    """

    def __init__(self, presentation: SurgeryPresentation):
        self.presentation = presentation
        self.smith = exactlin.smith(presentation.matrix)
        diag = self.smith.diagonal
        self._slots = tuple(i for i, d in enumerate(diag) if d > 1)
        self.invariant_factors = tuple(diag[i] for i in self._slots)
        self.order = abs(presentation.determinant)
        self.exponent = self.invariant_factors[-1] if self.invariant_factors else 1
        # every quadratic function on H takes values in (1/den) Z / Z
        self.den = 2 * self.exponent
        strides, acc = [], 1
        for d in reversed(self.invariant_factors):
            strides.append(acc)
            acc *= d
        self._strides = tuple(reversed(strides))
        inv = exactlin.inverse_rational(self.smith.U)
        self._u_inv = tuple(tuple(int(x) for x in row) for row in inv)
        binv = exactlin.inverse_rational(presentation.matrix)
        # exponent * B^{-1} is integral
        self._form = tuple(tuple(int(x * self.exponent) for x in row) for row in binv)

    def __repr__(self):
        return f"HomologyGroup(order={self.order}, factors={list(self.invariant_factors)})"

    @property
    def n(self) -> int:
        return self.presentation.n

    @property
    def zero(self) -> HomologyClass:
        return HomologyClass((0,) * len(self.invariant_factors), self.invariant_factors)

    def element(self, coords: Sequence[int]) -> HomologyClass:
        return HomologyClass(tuple(coords), self.invariant_factors)

    @cached_property
    def elements(self) -> tuple[HomologyClass, ...]:
        return tuple(self.element(c)
                     for c in itertools.product(*(range(d) for d in self.invariant_factors)))

    def index(self, h: HomologyClass) -> int:
        return sum(c * s for c, s in zip(h.coords, self._strides))

    def project(self, x: Sequence[int]) -> HomologyClass:
        if len(x) != self.n:
            raise DimensionMismatch(f"expected a vector of length {self.n}, got {len(x)}")
        y = exactlin.matvec(self.smith.U, tuple(int(v) for v in x))
        return self.element(tuple(y[i] for i in self._slots))

    def meridian(self, i: int) -> HomologyClass:
        """Class of the oriented meridian of the i-th component.

        With the boundary orientation conventions the meridian is the class
        of ``-e_i``, not ``e_i``; only this choice makes the Chern-vector
        formula evaluate to ``-(1 - s_i) / (2 b_ii)`` on meridians of split links.
        """
        return self.project(tuple(-int(i == j) for j in range(self.n)))

    @property
    def meridians(self) -> tuple[HomologyClass, ...]:
        return tuple(self.meridian(i) for i in range(self.n))

    def _raw_lift(self, h: HomologyClass) -> IntVector:
        y = [0] * self.n
        for slot, c in zip(self._slots, h.coords):
            y[slot] = c
        x = exactlin.matvec(self._u_inv, y)
        return exactlin.coset_normal_form(x, self.presentation.lattice)

    @cached_property
    def lifts(self) -> tuple[IntVector, ...]:
        """Canonical integer lift of each element, by index."""
        return tuple(self._raw_lift(h) for h in self.elements)

    def lift(self, h: HomologyClass) -> IntVector:
        if "lifts" in self.__dict__:
            return self.lifts[self.index(h)]
        return self._raw_lift(h)

    @cached_property
    def _form_lifts(self) -> tuple[IntVector, ...]:
        # (exponent * B^{-1}) @ X for each lift X
        return tuple(exactlin.matvec(self._form, x) for x in self.lifts)

    @cached_property
    def _quad_self(self) -> tuple[int, ...]:
        # X^T (e B^{-1}) X for each canonical lift
        return tuple(sum(a * b for a, b in zip(x, fx))
                     for x, fx in zip(self.lifts, self._form_lifts))

    @cached_property
    def _meridian_walk(self):
        """Cayley graph of H on the meridians.

        Returns ``(succ, lam, tree)``: ``succ[i][x]`` is the index of x + m_i,
        ``lam[i][x]`` is lambda(x, m_i) in units of 1/den, and ``tree`` lists
        breadth-first spanning-tree edges ``(y, x, i)`` with y = x + m_i.
        """
        den = self.den
        succ, lam = [], []
        for m in self.meridians:
            succ.append(tuple(self.index(x + m) for x in self.elements))
            fm = self.form_vector(self.lift(m))
            lam.append(tuple((-2 * sum(a * b for a, b in zip(x, fm))) % den for x in self.lifts))
        seen = [False] * self.order
        seen[0] = True
        tree, frontier = [], [0]
        while frontier:
            nxt = []
            for x in frontier:
                for i, s in enumerate(succ):
                    y = s[x]
                    if not seen[y]:
                        seen[y] = True
                        tree.append((y, x, i))
                        nxt.append(y)
            frontier = nxt
        return tuple(succ), tuple(lam), tuple(tree)

    def form_vector(self, x: Sequence[int]) -> IntVector:
        """``exponent * B^{-1} @ x``, an integer vector."""
        return exactlin.matvec(self._form, x)

    def linking_units(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Linking of the classes of integer vectors x, y, in units of 1/den."""
        fy = self.form_vector(y)
        return (-2 * sum(a * b for a, b in zip(x, fy))) % self.den

    def linking(self, x: HomologyClass, y: HomologyClass) -> QmodZ:
        return QmodZ(self.linking_units(self.lift(x), self.lift(y)), self.den)

    def linking_of_vectors(self, x: Sequence[int], y: Sequence[int]) -> QmodZ:
        return QmodZ(self.linking_units(x, y), self.den)

    def linking_table(self) -> list[list[QmodZ]]:
        lifts, flifts = self.lifts, self._form_lifts
        den = self.den
        return [[QmodZ((-2 * sum(a * b for a, b in zip(x, fy))) % den, den) for fy in flifts]
                for x in lifts]


@lru_cache(maxsize=256)
def homology_of(p: SurgeryPresentation) -> HomologyGroup:
    try:
        return HomologyGroup(p)
    except SingularMatrix as exc:
        raise NotRationalHomologySphere(str(exc)) from exc


def project(g: HomologyGroup, x: Sequence[int]) -> HomologyClass:
    return g.project(x)


def lift(g: HomologyGroup, h: HomologyClass) -> IntVector:
    return g.lift(h)


def linking(g: HomologyGroup, x: HomologyClass, y: HomologyClass) -> QmodZ:
    return g.linking(x, y)
