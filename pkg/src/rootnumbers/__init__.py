"""Exact local constants of triple product L-functions at prime level, with
the mod-p orbit combinatorics and Weil-pairing realization that go with them."""

__version__ = "0.1.0"

from .fields import (CyclotomicNumber, ExtField, ExtFieldElement, FpElement,
                     PrimeField, build_extension, discrete_log, field_sqrt,
                     is_prime, legendre_symbol, primitive_root)
from .characters import (AdditiveCharacter, FormalProduct, HaarMeasure,
                         HeckeCharacterFamily, LocalCharacter,
                         MultiplicativeCharacter, char_eval, eps_character,
                         eps_unramified_twist, gauss_sum, hecke_lift,
                         hecke_product_check)
from .weildeligne import (DeltaQuotientReport, WDRep, delta_factor,
                          epsilon_prime, epsilon_weil, inertia_invariants,
                          local_root_number, wd_character, wd_conductor,
                          wd_sp2, wd_sum, wd_tensor, wd_twist)
from .tripleproduct import (FunctionalEquationData, GlobalRootNumberReport,
                            SingleFormReport, TripleProductSpec, assemble_local,
                            functional_equation_data, genus_positive,
                            global_conductor, global_root_number,
                            single_form_root_numbers)
from .orbits import (DiamondReport, FieldOfDefinitionReport, GksReport,
                     MarkingTriple, OrbitTable, classify_pm, det_invariant,
                     diamond_act, diamond_orbit_decomposition,
                     field_of_definition_report, galois_act,
                     gks_vanishing_check, prphi_witnesses, s3_act,
                     s3_class_behavior, sl2_act, sl2_orbit_table)
from .pairing import (BridgeResult, Curve, CurveSpec, OInvariantResult,
                      PairingSetup, Point, TorsionBasis, count_over_extension,
                      find_curve, full_torsion_field, o_det_bridge_check,
                      o_invariant, pairing_setup, point_count, torsion_basis,
                      trace_of_frobenius, weil_pairing)
