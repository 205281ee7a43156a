"""Acceptance criteria, one test per criterion.

Each ``criterion_*`` function returns ``(ok, detail)``.  Under pytest the
verdict lines are collected and printed in the terminal summary; running this
file directly prints them as well::

    python3 tests/test_acceptance.py
"""

import cmath
import contextlib
import io
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from spinquad import (  # noqa: E402
    QmodZ,
    SurgeryPresentation,
    act,
    act_on_quad,
    c_invariant,
    charge_enumerate,
    charge_to_chern,
    check_axiom,
    chern_enumerate,
    chern_to_charge,
    direct_sum,
    extract_q,
    gauss,
    homology_of,
    negate,
    phi_from_chern,
    q_from_charge_split,
    spinc_from_chern,
    synthesize,
)
from spinquad.cli import main as cli_main  # noqa: E402
from spinquad.fileformat import load_presentation  # noqa: E402
from spinquad.torsion import translate  # noqa: E402

from _gen import random_presentation, random_split, seeded  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
GAUSS_TOLERANCE = 1e-6


def criterion_1():
    """Charge-side and Chern-side functions agree on random split presentations."""
    rng = seeded(1)
    presentations = [random_split(rng, n_max=5, max_order=500) for _ in range(100)]
    start = time.perf_counter()
    classes = 0
    for p in presentations:
        for k in charge_enumerate(p):
            q = q_from_charge_split(p, k)
            if q != phi_from_chern(p, charge_to_chern(p, k)):
                return False, f"mismatch on diag{p.framings} at k={k}"
            classes += 1
    elapsed = time.perf_counter() - start
    ok = elapsed < 10.0
    return ok, f"100 presentations, {classes} classes, exact tables, {elapsed:.2f} s (< 10 s)"


def criterion_2():
    """Charge to Chern conversion is a parity-preserving bijection."""
    rng = seeded(2)
    total = 0
    for _ in range(100):
        p = random_presentation(rng, n_max=6, max_order=1000, off=(-2, 2))
        order = abs(p.determinant)
        charges = charge_enumerate(p)
        chern = chern_enumerate(p)
        if not len(charges) == len(chern) == order:
            return False, f"class counts {len(charges)}, {len(chern)} vs |det| {order}"
        images = set()
        for k in charges:
            s = charge_to_chern(p, k)
            if any((a - b) % 2 for a, b in zip(s, p.framings)):
                return False, f"parity broken at k={k}"
            if chern_to_charge(p, s) != k:
                return False, f"round trip broken at k={k}"
            images.add(spinc_from_chern(p, s))
        if images != set(chern):
            return False, f"not a bijection for {p.matrix}"
        total += order
    return True, f"100 presentations (n <= 6), {total} classes, bijective and round-trip exact"


def _small_test_set():
    fixed = [
        SurgeryPresentation(((7,),)),
        SurgeryPresentation(((4, 1), (1, 2))),
        SurgeryPresentation(((1,),)),
        SurgeryPresentation.diagonal(3, -5),
        SurgeryPresentation.diagonal(2, 2, 2),
        SurgeryPresentation.diagonal(4, -4, 2),
        SurgeryPresentation(((2, 1), (1, 2))),
        SurgeryPresentation(((-6, 2, 0), (2, 5, 1), (0, 1, -7))),
        SurgeryPresentation(((197,),)),
        SurgeryPresentation.diagonal(8, 24),
    ]
    rng = seeded(3)
    fixed += [random_presentation(rng, n_max=4, max_order=200) for _ in range(30)]
    return [p for p in fixed if homology_of(p).order <= 200]


def criterion_3():
    """Equivariance of phi and d under the H-action, and refinement of lambda."""
    checks = 0
    sets = _small_test_set()
    for p in sets:
        g = homology_of(p)
        classes = chern_enumerate(p)
        sigma = classes[0]
        phi = phi_from_chern(p, sigma)
        d = gauss(phi).d
        for h in g.elements:
            tau = act(h, sigma)
            phi_tau = phi_from_chern(p, tau)
            if act_on_quad(phi, h) != phi_tau:
                return False, f"action on phi fails for {p.matrix} at h={h}"
            if gauss(phi_tau).d != d - phi[h]:
                return False, f"d shift fails for {p.matrix} at h={h}"
            checks += 1
        refine = classes if g.order <= 50 else classes[:: max(1, g.order // 4)]
        for s in refine:
            if not phi_from_chern(p, s).refines_linking():
                return False, f"phi_{s.label} does not refine lambda on {p.matrix}"
    return True, f"{len(sets)} presentations with |H| <= 200, {checks} (sigma, h) pairs exact"


def _numeric_sum(values):
    return sum(cmath.exp(2j * math.pi * float(v.as_fraction())) for v in values)


def criterion_4():
    """Gauss sums: modulus, denominator bound, phase residual, spot value."""
    lens = phi_from_chern(SurgeryPresentation(((7,),)), (7,))
    oracle = _numeric_sum(lens.table())
    if abs(oracle - (-1j) * math.sqrt(7)) > 1e-9 or gauss(lens).d != QmodZ(3, 4):
        return False, "spot value d = 3/4 for B=[[7]], s=(7) not reproduced"
    large = [
        SurgeryPresentation(((9973,),)),
        SurgeryPresentation.diagonal(100, 100),
        SurgeryPresentation(((100, 1), (1, 100))),
        SurgeryPresentation.diagonal(8, 8, 16),
        SurgeryPresentation.diagonal(2, 2, 2, 2, 2, 2),
        SurgeryPresentation(((12, 5, 0), (5, 31, 3), (0, 3, 20))),
    ]
    cases = [(p, s) for p in _small_test_set() for s in chern_enumerate(p)]
    cases += [(p, s) for p in large for s in chern_enumerate(p)[:3]]
    worst_mod, worst_res, biggest = 0.0, 0.0, 0
    for p, sigma in cases:
        phi = phi_from_chern(p, sigma)
        order = phi.group.order
        biggest = max(biggest, order)
        gd = gauss(phi, GAUSS_TOLERANCE)
        z = _numeric_sum(phi.table())
        mod_err = abs(abs(z) ** 2 - order) / order
        n_lcm = math.lcm(*(v.denominator for v in phi.table()))
        phase = (cmath.phase(z) / (2 * math.pi)) % 1.0
        res = abs(phase - float(gd.d.as_fraction()))
        res = min(res, 1.0 - res)
        if mod_err >= GAUSS_TOLERANCE or (4 * n_lcm) % gd.d.denominator or res >= GAUSS_TOLERANCE:
            return False, f"{p.matrix} {sigma.label}: modulus {mod_err:.2e}, residual {res:.2e}"
        worst_mod, worst_res = max(worst_mod, mod_err), max(worst_res, res)
    return True, (f"{len(cases)} functions, |H| up to {biggest}, max rel. modulus error "
                  f"{worst_mod:.1e}, max phase residual {worst_res:.1e}, d(L(7,1), s=7) = 3/4")


def criterion_5():
    """Synthetic torsion tables: axiom, extraction, constant c(M)."""
    rng = seeded(5)
    for _ in range(50):
        p = random_presentation(rng, n_max=4, max_order=100)
        sigma = rng.choice(chern_enumerate(p))
        t0 = Fraction(rng.randint(-50, 50), rng.randint(1, 30))
        t = synthesize(sigma, t0)
        if not check_axiom(t) or extract_q(t) != phi_from_chern(p, sigma):
            return False, f"round trip fails on {p.matrix}, {sigma.label}, t0={t0}"
    families = [SurgeryPresentation(((7,),)), SurgeryPresentation(((4, 1), (1, 2))),
                SurgeryPresentation.diagonal(2, 2, 2)]
    families += [random_presentation(rng, n_max=3, max_order=30) for _ in range(7)]
    for p in families:
        g = homology_of(p)
        sigma = chern_enumerate(p)[0]
        t0 = Fraction(rng.randint(-50, 50), rng.randint(1, 30))
        base = synthesize(sigma, t0)
        rep = c_invariant([translate(base, h) for h in g.elements])
        expected = QmodZ(t0) - gauss(phi_from_chern(p, sigma)).d
        if rep.c_M != expected or any(r.c_M != expected for r in rep.reports):
            return False, f"c(M) not constant on {p.matrix}"
    return True, f"50 round trips exact; c(M) = t0 - d constant on {len(families)} families"


def _cli(argv, out_path=None):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = cli_main([str(a) for a in argv])
    if out_path is not None:
        out_path.write_text(buf.getvalue(), encoding="utf-8")
    return code, buf.getvalue()


def criterion_6(tmp_dir):
    """Fixture pathway end to end on the two lens spaces of order 7; limitation documented."""
    details = []
    for data, t0 in (("lens7.txt", "1/5"), ("chain7.txt", "2/9")):
        src = ROOT / "data" / data
        fixture = tmp_dir / f"{data}.fixture"
        code, _ = _cli(["synth", src, "--t0", t0, "--family"], fixture)
        if code:
            return False, f"synth failed on {data}"
        code, out = _cli(["torsion", src, "--fixture", fixture, "--json"])
        if code:
            return False, f"torsion failed on {data}"
        doc = json.loads(out)
        pf = load_presentation(src)
        sigma = (list(pf.spinc.values()) or chern_enumerate(pf.presentation))[0]
        expected = QmodZ(Fraction(t0)) - gauss(phi_from_chern(pf.presentation, sigma)).d
        if doc["c_M"] != str(expected) or len(doc["tables"]) != 7:
            return False, f"c(M) from fixture {doc['c_M']} != {expected} on {data}"
        details.append(f"{data}: c(M)={doc['c_M']}")
    readme = (ROOT / "README.md").read_text(encoding="utf-8")
    if "8c(L(7,1)) = 3/7" not in readme or "8c(L(7,2)) = 2/7" not in readme:
        return False, "README does not declare the unreproduced lens-space values"
    return True, ("fixture pathway verified (" + ", ".join(details) + "); "
                  "8c(L(7,1)) = 3/7 and 8c(L(7,2)) = 2/7 not reproduced: need external torsion "
                  "data, declared in README")


def criterion_7():
    """Direct sums add d; orientation reversal negates phi and d."""
    rng = seeded(7)
    for _ in range(50):
        p1 = random_presentation(rng, n_max=3, max_order=40)
        p2 = random_presentation(rng, n_max=3, max_order=40)
        s1, s2 = rng.choice(chern_enumerate(p1)), rng.choice(chern_enumerate(p2))
        p, s = direct_sum(p1, s1, p2, s2)
        d1, d2 = gauss(phi_from_chern(p1, s1)).d, gauss(phi_from_chern(p2, s2)).d
        if gauss(phi_from_chern(p, s)).d != d1 + d2:
            return False, f"d does not add for {p1.matrix} + {p2.matrix}"
        pn, sn = negate(p1, s1)
        phi, phin = phi_from_chern(p1, s1), phi_from_chern(pn, sn)
        gn = homology_of(pn)
        g1 = homology_of(p1)
        for x, lift in zip(g1.elements, g1.lifts):
            # orientation reversal reverses meridians: [X] corresponds to [-X]
            if phin[gn.project([-a for a in lift])] != -phi[x]:
                return False, f"phi does not negate on {p1.matrix} at {x}"
        if gauss(phin).d != -d1:
            return False, f"d does not negate on {p1.matrix}"
    return True, "50 random pairs: d(sum) = d1 + d2, phi and d negate exactly"


CRITERIA = {
    1: ("theorem on split presentations", criterion_1),
    2: ("charge/Chern bijection", criterion_2),
    3: ("refinement and equivariance", criterion_3),
    4: ("Gauss sums", criterion_4),
    5: ("torsion round trip and c(M)", criterion_5),
    6: ("lens-space values declared, fixture pathway", criterion_6),
    7: ("direct sum and orientation reversal", criterion_7),
}


def _line(number, ok, detail):
    name = CRITERIA[number][0]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({name}): {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, acceptance_log, tmp_path):
    fn = CRITERIA[number][1]
    ok, detail = fn(tmp_path) if number == 6 else fn()
    line = _line(number, ok, detail)
    acceptance_log.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    import tempfile
    results = []
    with tempfile.TemporaryDirectory() as tmp:
        for number, (_, fn) in sorted(CRITERIA.items()):
            ok, detail = fn(Path(tmp)) if number == 6 else fn()
            results.append(ok)
            print(_line(number, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
