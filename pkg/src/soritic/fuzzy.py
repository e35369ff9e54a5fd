"""Many-valued connectives and their divergence from two-valued book-keeping.

Statements about a responder's probabilities ("the r1 probability at x is
0.6") are plainly true or false, so their conjunctions and implications are
classical.  Interpreting the same numbers as degrees of truth and combining
them with many-valued connectives gives genuinely different values; the
report type below tabulates the contrast for a pair of levels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


def _check_tv(p: float, name: str = "truth value") -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise InputError(f"{name} {p!r} is outside [0, 1]")
    return p


def weak_conjunction(p: float, q: float) -> float:
    """min of the two values."""
    return min(_check_tv(p), _check_tv(q))


def strong_conjunction(p: float, q: float) -> float:
    """max(0, p + q - 1); drops below both inputs except at the endpoints."""
    return max(0.0, _check_tv(p) + _check_tv(q) - 1.0)


def implication(p: float, q: float) -> float:
    """min(1, 1 - p + q); exactly 1 whenever p <= q."""
    p = _check_tv(p)
    q = _check_tv(q)
    if p <= q:
        return 1.0
    return 1.0 - (p - q)


def negation(p: float) -> float:
    """1 - p."""
    return 1.0 - _check_tv(p)


_CONNECTIVES = {
    "weak_conj": (weak_conjunction, 2),
    "strong_conj": (strong_conjunction, 2),
    "implication": (implication, 2),
    "negation": (negation, 1),
}


def luk_eval(connective: str, p: float, q: float | None = None) -> float:
    """Evaluate one connective by name."""
    try:
        fn, arity = _CONNECTIVES[connective]
    except KeyError:
        raise InputError(f"unknown connective {connective!r}") from None
    if arity == 2:
        if q is None:
            raise InputError(f"{connective} needs a second argument")
        return fn(p, q)
    return fn(p)


@dataclass(frozen=True)
class MismatchReport:
    """Side-by-side of classical and many-valued combination for one pair.

    The classical side concerns the meta-statements that the two levels are
    what they are; those are definitely true, so their conjunction and the
    implication from the second to the combination are true as well.  The
    many-valued side combines the levels themselves.  Divergence flags fire
    when the many-valued value fails to be a classical one (strong
    conjunction off {0,1}) or falls short of the classically true
    implication.
    """

    p: float
    q: float
    weak: float
    strong: float
    implication_value: float
    classical_conjunction: bool
    classical_implication: bool
    conjunction_diverges: bool
    implication_diverges: bool

    @property
    def diverges(self) -> bool:
        return self.conjunction_diverges or self.implication_diverges


def mismatch_report(p: float, q: float) -> MismatchReport:
    """Tabulate the two readings for a pair of levels."""
    strong = strong_conjunction(p, q)
    impl = implication(p, q)
    return MismatchReport(
        p=float(p),
        q=float(q),
        weak=weak_conjunction(p, q),
        strong=strong,
        implication_value=impl,
        classical_conjunction=True,
        classical_implication=True,
        conjunction_diverges=strong not in (0.0, 1.0),
        implication_diverges=impl < 1.0,
    )
