"""Minimal-genus trisected 4-manifolds from finite group presentations.

The pipeline reads a presentation, builds a link in #_n S^1 x S^2 whose
components read the relators together with a tunnel system, doubles the
resulting 2-handlebody, and certifies that the trisection genus of the double
meets the Chu-Tillmann lower bound.
"""

from .abelian import IntMatrix, RankReport, RankStatus, abelianization_matrix, rank_report, smith_normal_form
from .builder import (Link, LinkComponent, SpatialGraph, TunnelSystem, build_gamma0, build_link,
                      extract_link, slide_circle, tunnel_upper_bound)
from .errors import InvariantViolation
from .kirby import KirbyDiagram, TwoHandle, build_N, double, euler_characteristic, framings_mod2, stabilize
from .presentation import (Presentation, PresentationError, Word, concat, expand_commutator, format_presentation,
                           format_word, free_reduce, invert, parse_presentation, power)
from .trisect import (Certificate, Construction, TrisectionParams, certify, chu_tillmann_bound, construct,
                      trisection_from_link, verify_chain)

__version__ = "0.1.0"
