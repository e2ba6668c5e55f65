"""Exact flatness and projectivity checks for finitely presented modules over finite rings."""

from .decide import (flat_quotient_criterion, is_projective, is_s_ring, pointwise_localization)
from .exterior import exterior_power, fitting_ideal, invariant_factor
from .ideals import Ideal, idempotent_generator, jacobson_radical, local_decomposition
from .modules import PresentedModule, annihilator, flatness_oracle, flatness_witness
from .rings import PolyQuotient, ProductRing, SeqRing, ZMod, construct_ring
from .seqring import example1_certificate
from .spectrum import prime_sites, rank_map, support

__version__ = "0.1.0"
