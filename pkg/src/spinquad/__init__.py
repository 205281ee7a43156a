"""Spin^c structures, linking pairings and quadratic functions of rational
homology 3-spheres, computed exactly from surgery presentations."""

from .errors import *  # noqa: F401,F403
from .homology import HomologyClass, HomologyGroup, SurgeryPresentation, homology_of
from .qmodz import QmodZ
from .quad import (
    GaussData,
    Isometry,
    QuadraticFunction,
    act_on_quad,
    direct_sum,
    gauss,
    match_presentations,
    negate,
    negation_map,
    phi_from_chern,
    phi_on_meridian_split,
    q_from_charge_split,
    quad_extend,
    verify_theorem_split,
    verify_with_companion,
)
from .spinc import (
    SpincClass,
    act,
    charge_enumerate,
    charge_to_chern,
    chern_enumerate,
    chern_to_charge,
    spinc_from_charge,
    spinc_from_chern,
)
from .torsion import TorsionTable, c_invariant, check_axiom, extract_q, synthesize

__version__ = "0.1.0"
