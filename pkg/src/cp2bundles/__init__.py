"""Invariants of S^2-bundles over CP^2: cohomology, action of the mapping class
group on H^2, the Kreck-Stolz lattice and Torelli groups, and the spin bordism
tables behind them."""

from .bundles import BundleParams, chern_c1, is_spin, milnor, params_for_r, pontrjagin_p1, r_of
from .gring import GradedElement, RingPresentation, make_pn_ring
from .intlat import FinAbGroup, IntMatrix, element_order, hnf, in_span, lattice_equal, quotient_group, snf
from .kreck_stolz import char_table, lattice_L, lattice_L_closed_form, milnor_torelli, torelli_group
from .mcg_action import brute_force_automorphisms, extension, image_of_R, is_admissible

__version__ = "0.1.0"
