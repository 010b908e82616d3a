from source.ContinuousExamples.Implications import UnitImplication, IMPLICATIONS, LK, R, GD, FD, YG, WB, get_implication
from source.ContinuousExamples.GridCheck import (
    GridSpec, GridContext, GRID_SYSTEMS, ORDER_PROPERTY, grid_axioms, grid_check, order_property_check, probe,
)
from source.ContinuousExamples.PlaneAlgebra import PlaneAlgebra, PlaneContext, plane_check, sbci1_difference
from source.ContinuousExamples.IntervalArithmetic import (
    RealInterval, moore_ops, markov_sub, real_interval_implication, sampled_correctness,
)
from source.ContinuousExamples.Restrictions import chain_restriction
from source.ContinuousExamples.Counterexamples import (
    EXACT_TOLERANCE, KnownCounterexample, known_counterexamples, verify_counterexample, counterexample,
)
