"""Linear codes over Z4: Hensel lifts, cyclic constructions, the Gray map,
weight enumerators and the Kerdock / Preparata / octacode families."""

from .codes import (QuaternaryCode, contains, cyclic_code, dual, enumerate_codewords,
                    equal_as_sets, extend_parity, lee_weight, min_lee_weight_search, row_reduce)
from .enumerators import (BivariateWeightEnumerator, TrivariateWeightEnumerator,
                          binary_macwilliams, hwe_direct, hwe_from_swe, macwilliams_swe, swe)
from .families import (kerdock_binary, kerdock_quaternary, nordstrom_robinson, octacode,
                       preparata_binary, preparata_quaternary, verify_family)
from .galois_ring import GaloisRing, GaloisRingElement, kerdock_via_trace
from .gray import (BinaryCode, component_maps, gray_image, gray_image_linear_span, gray_map,
                   image_is_linear, is_distance_invariant, min_distance_binary, reed_muller,
                   swap_condition_holds)
from .z4poly import BinPoly, Z4Poly, generator_poly_g, hensel_lift, is_primitive, reciprocal

__version__ = "0.1.0"
