"""SL(2,Z)-orbit graphs of primitive origamis in the stratum H(2).

Build the orbit graphs, test their planarity, and machine-check explicit
K_{3,3} subdivisions inside them.
"""

from .errors import OrigamiError
from .minors import build_family, expand_paths, verify_family
from .orbit import (
    OrbitGraph,
    enumerate_all_h2,
    enumerate_orbit,
    orbit_partition,
    orbits_for,
    standard_seed,
    t_orbit_length,
)
from .origami import (
    CanonicalOrigami,
    Origami,
    canonical_form,
    commutator,
    is_primitive,
    make_origami,
    monodromy_class,
    parse_origami,
    stratum,
)
from .perm import Permutation, compose, conjugate, inverse, parse_cycles, format_cycles
from .sl2 import Generator, apply_word, matrix_of, parse_word, word_P, word_R

__version__ = "0.1.0"

__all__ = [
    "OrigamiError",
    "build_family", "expand_paths", "verify_family",
    "OrbitGraph", "enumerate_all_h2", "enumerate_orbit", "orbit_partition", "orbits_for",
    "standard_seed", "t_orbit_length",
    "CanonicalOrigami", "Origami", "canonical_form", "commutator", "is_primitive",
    "make_origami", "monodromy_class", "parse_origami", "stratum",
    "Permutation", "compose", "conjugate", "inverse", "parse_cycles", "format_cycles",
    "Generator", "apply_word", "matrix_of", "parse_word", "word_P", "word_R",
]
