"""Concurrence and entanglement-of-formation lower bounds for qubit-qudit states.

Two interchangeable routes compute the same bound:

* :func:`c_db_full` applies one ``2d x 2d`` spin-flip matrix per qudit
  level pair on the whole state;
* :func:`c_db_partition` cuts the state into ``d(d-1)/2`` two-qubit blocks
  and treats each with the ordinary two-qubit spin-flip matrix.

:mod:`qqbound.tcsim` generates the two-atom Tavis-Cummings example states.
"""
from .entropy import binary_entropy, eof_from_concurrence
from .exceptions import (
    DimensionMismatch,
    IndexOutOfRange,
    InputError,
    InvalidDensityMatrix,
    InvalidPair,
    NoConvergence,
    NotHermitian,
    NotPositiveSemidefinite,
    NotSorted,
    NotXForm,
    NumericalError,
    OutOfRange,
    QQBoundError,
    UnsupportedTauConvention,
)
from .partition import (
    TwoQubitBlock,
    block_concurrence,
    c_db_partition,
    extract_block,
    is_x_form,
    xform_concurrence,
)
from .spinflip import build_s_2q, build_s_full, c_db_full, lambda_spectrum, pair_concurrence
from .states import BlockPair, BoundReport, DensityMatrix, all_pairs

__version__ = "0.1.0"
