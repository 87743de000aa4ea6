"""Exact line transversals for two families of vertical convex sets.

Core entry points are re-exported here; the submodules carry the
machinery: lpcore (rational simplex with certificates), scene (grids,
sections, general vertical scenes), transversal (primal systems, dual
certificates, the combined-system contradiction), fractional (the 3x3
construction and triple counting), highdim (the 2d-1 dimensional
analogue), lab (generators, fuzzing, oracles, instance files).
"""

from .errors import (ConfigError, DimensionError, EmptyFamilyError,
                     FeasibleError, MonotoneError, PiercingError, PlaneError,
                     SetIndexError, TheoremViolation)
from .lpcore import (FarkasCert, FeasOutcome, LinearSystem, Rat, as_rat,
                     point_in_hull, rat_str, solve_feasibility, verify_farkas)
from .scene import (Axis, ConvexSet, GeneralScene, GridInstance, PlaneFrame,
                    PlaneLine, ZInterval, build_grid, convex_set,
                    convex_sets_intersect, general_line_transversal_in_plane,
                    general_scene, line_pierces, plane_frame, section)
from .transversal import (BaryWitness, ContradictionLedger, DualCertificate,
                          build_primal, check_combined, dual_certificate,
                          extract_dual_certificate, find_piercing_line,
                          verify_dual_certificate)
from .fractional import (KALAI_FRACTION, FracResult, Lemma33Trace,
                         SegmentFamily, best_stab_line,
                         fractional_transversal, lemma33_pierce,
                         plane_sections, segment_family, stab_triples)
from .highdim import (HighDimInstance, HighDimPierce, QFamily, SplitWitness,
                      build_highdim, grid_to_highdim, highdim_pierce,
                      q_family, split_index)
from .lab import (FuzzSample, GenConfig, SplitMix64, counterexample_scene,
                  fuzz_combined, fuzz_report, load_instance,
                  oracle_best_plane_line, random_grid, random_highdim,
                  random_segment_family, random_subset_points, save_instance,
                  stress_report)
