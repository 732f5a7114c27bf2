"""Abelian ideals of Borel subalgebras, their Hasse diagrams and symmetry groups."""

__version__ = "0.1.0"

from .rootsys import RootSystem, cartan_datum, root_system, sweep_cases
from .abelian import IdealSet, enumerate_ideals, from_antichain, ideal_by_weight
from .poset import LabeledHasse, graph_automorphisms, hasse, poset_automorphisms
from .dynkin import act_center, act_diagram, aut_pi, aut_pihat, center

__all__ = [
    "RootSystem",
    "cartan_datum",
    "root_system",
    "sweep_cases",
    "IdealSet",
    "enumerate_ideals",
    "from_antichain",
    "ideal_by_weight",
    "LabeledHasse",
    "hasse",
    "poset_automorphisms",
    "graph_automorphisms",
    "aut_pi",
    "aut_pihat",
    "center",
    "act_diagram",
    "act_center",
]
