"""Finite-set semantics for a small dependent type theory.

A category engine on finite sets with chosen pullbacks and
pushforwards, map classes with machine-checked closure axioms,
polynomial functors, type-theoretic universes, elementary and algebraic
type formers with their law suites, translations between the two
presentations, and a surface language with a bidirectional checker.
"""

from .errors import (BoundsTooTight, CheckError, ClassViolation,
                     CodomainMismatch, DuplicateLabel, EmptyContext,
                     JsonFormatError, LawViolation, LiftInvalid, NonCommuting,
                     ParseError, PiclanError, SearchBudgetExceeded,
                     SquareViolation, TriangleViolation, TypeMismatch,
                     UniverseError)
from .fin import (FinMap, FinObj, PullbackResult, PushforwardResult, Square,
                  all_bijections, all_maps, bang, canonical_obj, compose,
                  is_pullback, label_key, label_str, objects_up_to, product,
                  product_map, pullback, pushforward, pushforward_transpose,
                  pushforward_untranspose, slice_homs, square_is_pullback,
                  terminal)
from .mapclass import (AxiomReport, ClassifyingSquare, MapClass,
                       all_maps_class, check_clan, check_pi_preclan,
                       check_preclan, explicit_class, fiber_size_class,
                       is_class_object, monomorphisms, predicate_class,
                       principal_class, pullback_square_oracle, run_axioms,
                       surjections, union_class)
from .universe import (PROP_FALSE, PROP_POINT, PROP_TRUE, ContextExtension,
                       Universe, UniverseLift, UniverseMorphism, UniverseTower,
                       build_cardinality_universe, build_fiber_universe,
                       build_propositional_universe, build_tower,
                       check_universe_lift, check_universe_morphism,
                       code_label, code_of, context_extend, pair_sub)
from .poly import (BcTransforms, CompositeSignature, DistributivityWitness,
                   PolyApplication, PolyDecomposition, PolySignature,
                   VerticalTransformation, apply_poly, bc_iso_verdict,
                   bc_transforms, compose_iso, decompose, distributivity,
                   poly_compose, poly_map, recompose, reroute_data,
                   vertical_nat_trans)
from .elementary import (ClauseVerdict, ElemFormers, ElemId, ElemPi,
                         ElemSigma, ElemUnit, IdContext, LawReport,
                         check_elem_formers, check_elem_id, check_elem_pi,
                         check_elem_sigma, check_elem_unit,
                         extensional_elementary_id, heterogeneous_pi_sigma,
                         id_context, propositional_elementary,
                         propositional_formers, singleton_elementary_unit,
                         terms_over, weaken)
from .algebraic import (AlgFormers, AlgId, AlgPi, AlgSigma, AlgUnit,
                        IdSkeleton, WeakPullbackStructure, build_id_skeleton,
                        check_alg_formers, check_alg_id, check_alg_pi,
                        check_alg_sigma, check_alg_unit, check_weak_pullback,
                        coherentize, extensional_id, lift_retraction,
                        search_lifter)
from .translate import (alg_to_elem, check_roundtrip_alg, check_roundtrip_elem,
                        elem_to_alg, extract_alg_from_closure,
                        hierarchy_corollary, principal_preclan_theorem)
from .surface import (parse_program, parse_term, parse_type, print_term,
                      print_type)
from .interp import (Ctx, FormersModel, Judgment, TowerModel, TypeVal,
                     check_context, check_judgment, check_source, check_term,
                     describe, elaborate_type, eval_judgment, prop_model,
                     subst_tyval, synth_term, tower_model)

__version__ = "0.1.0"
