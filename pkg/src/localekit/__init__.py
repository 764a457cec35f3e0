"""localekit: machine-checked point-free topology on finite carriers.

Frames (finite bounded distributive lattices with Heyting structure), the
coframe of sublocales, the frame of joins of closed sublocales, separation
axioms and their verified correspondences, finite topological spaces, and
an exact rational-interval calculus on the real line with certificate
replays for the statements that quantify over infinitely many stages.
"""

from .common import (BudgetExceeded, CheckReport, EquivalenceViolation,
                     TheoremViolation)
from .lattice import (BooleanizationView, FiniteFrame, FinitePoset,
                      NotALattice, NotDistributive, RegularPairFrame,
                      booleanization, find_order_isomorphism, heyting,
                      product_frame, pseudocomplement, regular_pair_frame,
                      validate_frame)
from .sublocales import (ClosedJoinFrame, Sublocale, SublocaleLattice,
                         all_sublocales, closed_join_frame, closed_join_meet,
                         closed_open_identities_check, closed_sublocale,
                         dual_booleanization, is_sublocale, open_sublocale,
                         sublocale_join, supplement)
from .separation import (SeparationReport, is_subfit, is_symmetric,
                         is_weakly_subfit, pseudocomplement_formula_check,
                         subfit_correspondence_check)
from .spaces import (FiniteSpace, enumerate_topologies, is_symmetric_space,
                     omega, space_proposition_check, specialization,
                     td_remark_check, uc_lattice)
from . import realline

__version__ = "0.1.0"
