"""Python bindings for the two-counter machine to VASS reduction and the
bounded language, game and resolver checks."""

from ._core import (
    CounterMachine,
    EqVerdict,
    ContainmentVerdict,
    GameVerdict,
    HdVerdict,
    Reduction,
    TheoremReport,
    Vass,
    VasseqError,
    InvalidMachine,
    ResourceBound,
    ParseError,
    PreconditionFailed,
    build_a,
    build_b,
    build_n,
    check_history_det,
    containment_bounded,
    cover_equal_bounded,
    cover_language,
    halting_word,
    parse_cm,
    parse_vass,
    print_cm,
    print_vass,
    random_machine,
    simulates_bounded,
    theorem_harness,
    trace_equal_bounded,
    trace_language,
)

__all__ = [name for name in dir() if not name.startswith("_")]
