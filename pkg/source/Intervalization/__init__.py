from source.Intervalization.Carrier import (
    MAX_INTERVAL_SIZE, IntervalElement, IntervalSpace, build_interval_carrier, embed_degenerate,
)
from source.Intervalization.IntervalAlgebra import (
    IntervalAlgebra, IntervalOperation, intervalize, mapsto_construct, ibci_as_sbci, widen_to_top,
    best_operation, km_operation, mapsto_operation,
)
from source.Intervalization.Representation import (
    Refutation, check_representation, check_optimality, pointwise_image, refute_bci_representation,
    sweep_two_chain_candidates,
)
from source.Intervalization.Theorems import (
    IntervalContext, IBCI_AXIOMS, IBCI_DERIVED, OP_NEGATIVE, verify_ibci, verify_ibci_derived,
)
