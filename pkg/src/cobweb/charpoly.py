"""Characteristic polynomials of P_n from closed forms and from the recurrence.

For rank k >= 1 the Möbius value is ``mu_k = (-1)**k * prod(F_i - 1, i=1..k-1)``,
the first-kind Whitney number is ``w_k = F_k * mu_k`` (``w_0 = 1``), and

    chi_n(t) = sum(w_k * t**(n - k), k = 0..n)
    chi_n(t) = t * chi_{n-1}(t) + w_n,      chi_1 = t - F_1,  chi_0 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import golden
from .errors import ResourceError
from .oracle import DEFAULT_MAX_INTERVAL, mobius_table_bruteforce, whitney_bruteforce
from .polynomial import IntPolynomial, poly_add, poly_eval, poly_shift_mul
from .poset import build
from .sequence import SequenceSpec, values

__all__ = [
    "IntPolynomial",
    "poly_add",
    "poly_shift_mul",
    "poly_eval",
    "ClosedFormTables",
    "mobius_closed",
    "whitney_closed",
    "charpoly_closed",
    "charpoly_recurrence",
    "charpoly_by_method",
    "VerificationEntry",
    "VerificationReport",
    "verify",
]


@dataclass(frozen=True)
class ClosedFormTables:
    n: int
    mu_closed: Tuple[int, ...]
    w_closed: Tuple[int, ...]
    products: Tuple[int, ...]  # products[k] = prod(F_i - 1, i=1..k-1); products[0] = 1


def mobius_closed(spec: SequenceSpec, k: int) -> int:
    if k < 0:
        raise ValueError(f"rank must be non-negative, got {k}")
    if k == 0:
        return 1
    prod = 1
    for f in values(spec, k - 1)[1:]:
        prod *= f - 1
    return -prod if k % 2 else prod


def whitney_closed(spec: SequenceSpec, n: int) -> ClosedFormTables:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    F = values(spec, n)
    products = [1] * (n + 1)
    mu = [1] * (n + 1)
    w = [1] * (n + 1)
    for k in range(1, n + 1):
        if k >= 2:
            products[k] = products[k - 1] * (F[k - 1] - 1)
        mu[k] = -products[k] if k % 2 else products[k]
        w[k] = F[k] * mu[k]
    return ClosedFormTables(n, tuple(mu), tuple(w), tuple(products))


def charpoly_closed(spec: SequenceSpec, n: int) -> IntPolynomial:
    """Explicit formula: ``t**n + sum((-1)**k F_k prod(F_i - 1) t**(n-k))``."""
    return IntPolynomial(whitney_closed(spec, n).w_closed[::-1])


def charpoly_recurrence(spec: SequenceSpec, n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    F = values(spec, n)
    chi = IntPolynomial.constant(1)
    if n == 0:
        return chi
    chi = IntPolynomial([-F[1], 1])
    prod = 1  # (F_{m-1} - 1) ... (F_1 - 1)
    for m in range(2, n + 1):
        prod *= F[m - 1] - 1
        term = F[m] * prod
        chi = poly_add(poly_shift_mul(chi), IntPolynomial.constant(term if m % 2 == 0 else -term))
    return chi


def charpoly_by_method(spec: SequenceSpec, n: int, method: str = "closed", max_interval: int = DEFAULT_MAX_INTERVAL) -> IntPolynomial:
    """Dispatch on ``method`` in {closed, recurrence, brute}."""
    if method == "closed":
        return charpoly_closed(spec, n)
    if method == "recurrence":
        return charpoly_recurrence(spec, n)
    if method == "brute":
        from .oracle import charpoly_bruteforce

        return charpoly_bruteforce(build(spec, n), max_interval)
    raise ValueError(f"unknown method {method!r}")


def _strs(xs) -> List[str]:
    return [str(x) for x in xs]


@dataclass
class VerificationEntry:
    n: int
    closed: IntPolynomial
    recurrence: IntPolynomial
    bruteforce: Optional[IntPolynomial]
    mobius_closed: Tuple[int, ...]
    whitney_closed: Tuple[int, ...]
    mobius_bruteforce: Optional[Tuple[int, ...]] = None
    whitney_bruteforce: Optional[Tuple[int, ...]] = None
    level_sizes: Tuple[int, ...] = ()
    counted_sizes: Optional[Tuple[int, ...]] = None
    skip_reason: Optional[str] = None

    @property
    def agree(self) -> bool:
        ok = self.closed == self.recurrence
        if self.bruteforce is not None:
            ok = ok and self.bruteforce == self.closed
            ok = ok and self.mobius_bruteforce == self.mobius_closed
            ok = ok and self.whitney_bruteforce == self.whitney_closed
            ok = ok and self.counted_sizes == self.level_sizes
        return ok

    def to_dict(self) -> dict:
        skipped = "skipped"
        return {
            "n": self.n,
            "closed": _strs(self.closed.coefficients),
            "recurrence": _strs(self.recurrence.coefficients),
            "bruteforce": _strs(self.bruteforce.coefficients) if self.bruteforce is not None else skipped,
            "agree": self.agree,
            "mobius_closed": _strs(self.mobius_closed),
            "mobius_bruteforce": _strs(self.mobius_bruteforce) if self.mobius_bruteforce is not None else skipped,
            "whitney_closed": _strs(self.whitney_closed),
            "whitney_bruteforce": _strs(self.whitney_bruteforce) if self.whitney_bruteforce is not None else skipped,
            "whitney_second_kind": _strs(self.level_sizes),
            **({"skip_reason": self.skip_reason} if self.skip_reason else {}),
        }


@dataclass
class VerificationReport:
    spec_name: str
    n: int
    entries: List[VerificationEntry]
    printed: List[golden.PrintedComparison] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if all(e.agree for e in self.entries) else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def printed_mismatches(self) -> List[int]:
        return [c.n for c in self.printed if not c.match]

    def to_dict(self) -> dict:
        return {
            "spec_name": self.spec_name,
            "n": self.n,
            "status": self.status,
            "entries": [e.to_dict() for e in self.entries],
            "printed": [
                {
                    "example": c.example,
                    "n": c.n,
                    "printed": _strs(c.printed.coefficients),
                    "computed": _strs(c.computed.coefficients),
                    "match": c.match,
                }
                for c in self.printed
            ],
            "notes": list(self.notes),
        }


def verify(spec: SequenceSpec, n: int, max_interval: int = DEFAULT_MAX_INTERVAL) -> VerificationReport:
    """Cross-check closed form, recurrence and brute force for every m <= n.

    A brute-force resource error marks that leg skipped; it never fails the run.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    entries = []
    F = tuple(values(spec, n))
    for m in range(n + 1):
        tables = whitney_closed(spec, m)
        entry = VerificationEntry(
            n=m,
            closed=charpoly_closed(spec, m),
            recurrence=charpoly_recurrence(spec, m),
            bruteforce=None,
            mobius_closed=tables.mu_closed,
            whitney_closed=tables.w_closed,
            level_sizes=F[: m + 1],
        )
        try:
            p = build(spec, m)
            mt = mobius_table_bruteforce(p, max_interval)
            wt = whitney_bruteforce(p, max_interval, table=mt)
        except ResourceError as exc:
            entry.skip_reason = str(exc)
        else:
            entry.bruteforce = IntPolynomial(wt.first_kind[::-1])
            entry.mobius_bruteforce = tuple(mt.mu_by_rank)
            entry.whitney_bruteforce = wt.first_kind
            entry.counted_sizes = wt.second_kind
        entries.append(entry)
    printed = golden.compare_printed(spec, {e.n: e.closed for e in entries})
    notes = golden.printed_notes(spec, printed)
    return VerificationReport(spec.name, n, entries, printed, notes)
