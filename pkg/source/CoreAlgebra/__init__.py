from source.CoreAlgebra.Structures import FiniteAlgebra, RelationMatrix, MeetStructure, AxiomReport, Verdict, labelled
from source.CoreAlgebra.Engine import Axiom, AxiomContext, FiniteContext, evaluate, holds_at, MAX_CHECK_SIZE
from source.CoreAlgebra.Axioms import (
    BCI_AXIOMS, PROPERTIES_A, BCK_AXIOM, BCK_CRITERION, IMPLICATIVE_AXIOMS,
    check_bci, check_bck, check_bck_criterion, check_properties_a, check_implicative, first_failure,
)
from source.CoreAlgebra.SemiBCI import SBCI_AXIOMS, SBCI_DERIVED, SBCK_AXIOM, check_sbci, check_sbci_derived, check_sbck, total_elements
from source.CoreAlgebra.PseudoBCI import PBCI_AXIOMS, check_pbci
from source.CoreAlgebra.Relations import (
    derive_relation, to_star_form, from_star_form, compute_meet, meet_of,
    relations_coincide, coincidence_report, check_way_below, smallest_element,
)
from source.CoreAlgebra.Lattice import (
    CONDITION_STAR, MEET_DISTRIBUTIVITY, LEMMA_ORD, LEMMA_ORD_TWO,
    check_condition_star, check_meet_distributivity, check_lemma_ord, meet_is_semilattice,
)
from source.CoreAlgebra.Registry import CHECKERS, TWO_OPERATION_SYSTEMS, parse_systems, run_checkers, all_pass
