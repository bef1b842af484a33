"""Graphical degree sequences: exact tests, realization, counting, enumeration.

The package decides whether integer sequences are degree sequences of
simple graphs (seven exact algorithms, from quadratic Havel-Hakimi
reductions to a linear-time Erdos-Gallai variant), constructs witness
graphs, applies fast one-sided filters, evaluates exact enumerative
formulas, and counts graphical sequences by sliced exhaustive
enumeration of zerofree even sequences.
"""
from .counting import (
    binomial,
    block_count,
    count_bounded,
    count_even,
    count_regular,
    count_regular_n,
    count_zerofree_regular,
    expected_block_length,
    graphical_recurrence,
    rainbow_bounded_expectation,
    rainbow_bounded_variance,
    rainbow_count,
    rainbow_regular_expectation,
    rainbow_regular_variance,
)
from .enumeration import (
    CensusRow,
    CountReport,
    FilterCensus,
    SequenceGenerator,
    SequenceKind,
    SliceTask,
    aggregate,
    b1_distribution,
    census_table,
    count_graphical,
    egj_round_histogram,
    filter_census,
    generate,
    iter_sequences,
    slice_plan,
)
from .errors import (
    BadBoundsError,
    BadJError,
    BadKError,
    BudgetExceededError,
    DegseqError,
    EmptyConditionError,
    IncompleteTableError,
    LengthMismatchError,
    MixedReportsError,
    NotMonotoneError,
    OutOfBoundsError,
    UnknownAlgorithmError,
)
from .filters import (
    FilterVerdict,
    binomial_test,
    composite_test,
    full_degree_test,
    headsplitter_test,
    parity_test,
    positive_test,
)
from .sequence import (
    CheckpointSet,
    DegreeSequence,
    PrefixProfile,
    WeightVector,
    checkpoints,
    make_sequence,
    prefix_profile,
    strip_zeros,
    weight_points,
)
from .testers import (
    ALGORITHMS,
    DecisionReport,
    EdgeList,
    eg_basic,
    eg_jumping,
    eg_linear,
    eg_shortened,
    hh_parity,
    hh_shifting,
    hh_sorting,
    is_graphical,
    realize,
)

__version__ = "0.1.0"
