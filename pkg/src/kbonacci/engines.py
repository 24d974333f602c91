"""Engine selection: one enum naming the four evaluation strategies.

Used by the CLI and by cross-validation; every engine must produce
byte-identical values for identical inputs.
"""

from __future__ import annotations

import enum

from .closed_form import kbonacci_closed, partial_sum_dunkel, partial_sum_dunkel_extended
from .matrix_power import kbonacci_matrix, partial_sum_matrix
from .sequence import kbonacci_recurrence, partial_sum_direct


class Engine(enum.Enum):
    RECURRENCE = "recurrence"
    DUNKEL = "dunkel"            # alternating closed form for partial sums
    DUNKEL_TERM = "dunkel-term"  # per-term closed form for single values
    MATRIX = "matrix"


_VALUE_DISPATCH = {
    Engine.RECURRENCE: kbonacci_recurrence,
    Engine.DUNKEL_TERM: kbonacci_closed,
    Engine.MATRIX: kbonacci_matrix,
}

_SUM_DISPATCH = {
    Engine.RECURRENCE: partial_sum_direct,
    Engine.DUNKEL: partial_sum_dunkel,
    Engine.MATRIX: partial_sum_matrix,
}


def compute_value(k: int, n: int, engine: Engine = Engine.RECURRENCE) -> int:
    """f(n) through the chosen engine."""
    try:
        fn = _VALUE_DISPATCH[engine]
    except KeyError:
        raise ValueError(f"engine {engine.value!r} computes partial sums, not single values") from None
    return fn(k, n)


def compute_sum(k: int, n: int, engine: Engine = Engine.RECURRENCE, m: int | None = None) -> int:
    """f(0) + ... + f(n) through the chosen engine.

    An explicit upper limit m selects the extended closed form and is only
    meaningful with the dunkel engine.
    """
    if m is not None:
        if engine is not Engine.DUNKEL:
            raise ValueError("an explicit limit m requires the dunkel engine")
        return partial_sum_dunkel_extended(k, n, m)
    try:
        fn = _SUM_DISPATCH[engine]
    except KeyError:
        raise ValueError(f"engine {engine.value!r} computes single values, not partial sums") from None
    return fn(k, n)
