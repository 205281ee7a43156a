"""Spin^c structures from a surgery presentation.

Two encodings, both taken modulo ``2 Im B``:

* Chern vectors ``s`` with ``s_i = b_ii (mod 2)``.
* Charges ``k`` with ``k_i = 1 + sum_{j != i} b_ij (mod 2)``.

They correspond through ``s_j = 1 - k_j + sum_i b_ij``.  The canonical
encoding of a class is the Hermite normal form of its Chern vector modulo
``2 Im B``.  H acts by ``[s] -> [s + 2 X_h]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import exactlin
from .errors import DimensionMismatch, InvalidCharge, InvalidChernVector, UnknownSpinc
from .exactlin import IntVector
from .homology import HomologyClass, SurgeryPresentation, homology_of


@dataclass(frozen=True)
class SpincClass:
    presentation: SurgeryPresentation
    chern: IntVector

    @property
    def charge(self) -> IntVector:
        """Canonical charge representative of the same class."""
        return charge_normal_form(self.presentation, chern_to_charge(self.presentation, self.chern))

    @property
    def label(self) -> str:
        return "s=" + ",".join(map(str, self.chern))

    def __lt__(self, other: "SpincClass") -> bool:
        return self.chern < other.chern

    def __str__(self):
        return self.label


def _vector(p: SurgeryPresentation, v: Sequence[int], exc) -> IntVector:
    if len(v) != p.n:
        raise exc(f"expected {p.n} entries, got {len(v)}")
    return tuple(int(x) for x in v)


def chern_parity(p: SurgeryPresentation) -> IntVector:
    return tuple(b % 2 for b in p.framings)


def charge_base(p: SurgeryPresentation) -> IntVector:
    """``k0_i = 1 + sum_{j != i} b_ij``, the charge parity representative."""
    m = p.matrix
    return tuple(1 + sum(m[i][j] for j in range(p.n) if j != i) for i in range(p.n))


def check_chern(p: SurgeryPresentation, s: Sequence[int]) -> IntVector:
    s = _vector(p, s, InvalidChernVector)
    for i, (si, bii) in enumerate(zip(s, p.framings)):
        if (si - bii) % 2:
            raise InvalidChernVector(
                f"s_{i + 1} = {si} must have the parity of the framing b_{i + 1}{i + 1} = {bii}"
            )
    return s


def check_charge(p: SurgeryPresentation, k: Sequence[int]) -> IntVector:
    k = _vector(p, k, InvalidCharge)
    for i, (ki, base) in enumerate(zip(k, charge_base(p))):
        if (ki - base) % 2:
            raise InvalidCharge(
                f"k_{i + 1} = {ki} must be congruent to {base % 2} mod 2"
            )
    return k


def spinc_from_chern(p: SurgeryPresentation, s: Sequence[int]) -> SpincClass:
    s = check_chern(p, s)
    return SpincClass(p, exactlin.coset_normal_form(s, p.lattice2))


def charge_normal_form(p: SurgeryPresentation, k: Sequence[int]) -> IntVector:
    return exactlin.coset_normal_form(check_charge(p, k), p.lattice2)


def charge_to_chern(p: SurgeryPresentation, k: Sequence[int]) -> IntVector:
    """``s_j = 1 - k_j + sum_i b_ij``."""
    k = check_charge(p, k)
    m = p.matrix
    return tuple(1 - k[j] + sum(m[i][j] for i in range(p.n)) for j in range(p.n))


def chern_to_charge(p: SurgeryPresentation, s: Sequence[int]) -> IntVector:
    s = check_chern(p, s)
    m = p.matrix
    return tuple(1 - s[j] + sum(m[i][j] for i in range(p.n)) for j in range(p.n))


def spinc_from_charge(p: SurgeryPresentation, k: Sequence[int]) -> SpincClass:
    return spinc_from_chern(p, charge_to_chern(p, k))


def chern_enumerate(p: SurgeryPresentation) -> list[SpincClass]:
    """All |det B| classes, sorted by canonical Chern vector."""
    base = p.framings
    out = {
        exactlin.coset_normal_form(tuple(b + 2 * x for b, x in zip(base, t)), p.lattice2)
        for t in exactlin.coset_enumerate(p.lattice)
    }
    return [SpincClass(p, s) for s in sorted(out)]


def charge_enumerate(p: SurgeryPresentation) -> list[IntVector]:
    """Canonical charges of all |det B| classes, sorted."""
    base = charge_base(p)
    return sorted({
        exactlin.coset_normal_form(tuple(b + 2 * x for b, x in zip(base, t)), p.lattice2)
        for t in exactlin.coset_enumerate(p.lattice)
    })


def act(h: HomologyClass, sigma: SpincClass) -> SpincClass:
    p = sigma.presentation
    x = homology_of(p).lift(h)
    s = tuple(a + 2 * b for a, b in zip(sigma.chern, x))
    return SpincClass(p, exactlin.coset_normal_form(s, p.lattice2))


def difference(sigma: SpincClass, tau: SpincClass) -> HomologyClass:
    """The unique h with ``act(h, sigma) == tau``."""
    if sigma.presentation != tau.presentation:
        raise DimensionMismatch("Spin^c classes live on different presentations")
    half = tuple((b - a) // 2 for a, b in zip(sigma.chern, tau.chern))
    return homology_of(sigma.presentation).project(half)


def parse_vector(text: str) -> IntVector:
    return tuple(int(t) for t in text.replace(",", " ").split())


def resolve(p: SurgeryPresentation, text: str, named: dict | None = None) -> SpincClass:
    """Look up a class by user label, ``s=...``, ``k=...`` or a bare Chern vector."""
    text = text.strip()
    if named and text in named:
        return named[text]
    if text.startswith("s="):
        return spinc_from_chern(p, parse_vector(text[2:]))
    if text.startswith("k="):
        return spinc_from_charge(p, parse_vector(text[2:]))
    try:
        vec = parse_vector(text)
    except ValueError:
        raise UnknownSpinc(f"unknown Spin^c label {text!r}") from None
    return spinc_from_chern(p, vec)
