"""Degree of finite partial groupoids, two ways: bounded higher-Segal checking
and Helly numbers of characteristic-action closure spaces, with exact
root-system convex geometry for punctured Weyl groups."""

from .closure import ClosureSpace, EmptyNotClosedError, order_convexity
from .degree import (DegreeReport, degree, degree_bound_check,
                     decalage_invariance_check, function_family_oracle,
                     reduction_invariance_check, replay_sphere_lower_bound,
                     sphere_degree_check)
from .segal import (GappedSet, PassReport, SegalVariant, SegalWitness,
                    check_lower_segal_spiny, check_lower_segal_words,
                    check_segal_generic, dec_bot, dec_top, gapped_subsets,
                    is_pass, lower_odd)
from .symcore import (GroupWords, PartialGroupoid, ResourceLimitExceeded,
                      SimplexRef, Violation, WordPresentation, materialize)
from .action import (CharacteristicAction, PartialGroupAction,
                     ambient_restriction, canonical_action, self_actions,
                     transporter)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
