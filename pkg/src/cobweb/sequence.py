"""Designating sequences F_0, F_1, ... and the ``--seq`` mini-language.

Grammar::

    fib | nat | odd | even | const:<k> | list:<c0,c1,...>

Every sequence is normalized so that ``F_0 == 1``.  Sequences whose first
term is zero (Fibonacci, or an explicit list starting with 0) have that
leading zero dropped and are re-indexed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import DomainError, RangeError, SpecParseError

__all__ = ["Kind", "SequenceSpec", "parse_spec", "evaluate", "values", "render"]


class Kind(enum.Enum):
    FIBONACCI = "fib"
    NATURALS = "nat"
    ODD = "odd"
    EVEN = "even"
    CONSTANT = "const"
    EXPLICIT = "list"


@dataclass(frozen=True)
class SequenceSpec:
    """An immutable designating sequence.

    ``k`` is only set for :attr:`Kind.CONSTANT`; ``terms`` only for
    :attr:`Kind.EXPLICIT` and holds the already-normalized terms (``terms[0] == 1``).
    """

    kind: Kind
    k: Optional[int] = None
    terms: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind is Kind.CONSTANT:
            if not isinstance(self.k, int) or self.k < 1:
                raise DomainError(f"const:{self.k} would produce empty levels; k must be >= 1")
        elif self.k is not None:
            raise DomainError(f"k is only meaningful for const sequences, got kind {self.kind.value}")
        if self.kind is Kind.EXPLICIT:
            if not self.terms:
                raise DomainError("explicit sequence needs at least one term")
            if self.terms[0] != 1:
                raise DomainError(f"explicit sequence must start with 1 after normalization, got {self.terms[0]}")
            for i, c in enumerate(self.terms):
                if c < 1:
                    raise DomainError(f"explicit sequence has empty level at index {i} (value {c})")
        elif self.terms is not None:
            raise DomainError("terms are only meaningful for list sequences")

    @classmethod
    def constant(cls, k: int) -> "SequenceSpec":
        return cls(Kind.CONSTANT, k=k)

    @classmethod
    def explicit(cls, raw) -> "SequenceSpec":
        """Build from raw terms; a leading 0 is dropped as for Fibonacci."""
        raw = [int(c) for c in raw]
        if not raw:
            raise DomainError("explicit sequence needs at least one term")
        if raw[0] not in (0, 1):
            raise DomainError(f"explicit sequence must start with 0 or 1, got {raw[0]}")
        for i, c in enumerate(raw[1:], start=1):
            if c < 1:
                raise DomainError(f"explicit sequence has empty level at index {i} (value {c})")
        if raw[0] == 0:
            raw = raw[1:]
            if not raw:
                raise DomainError("explicit sequence 'list:0' is empty after dropping the leading zero")
            if raw[0] != 1:
                raise DomainError(f"after dropping the leading zero the first term must be 1, got {raw[0]}")
        return cls(Kind.EXPLICIT, terms=tuple(raw))

    @property
    def name(self) -> str:
        return render(self)


def render(spec: SequenceSpec) -> str:
    """Inverse of :func:`parse_spec`; explicit lists render normalized."""
    if spec.kind is Kind.CONSTANT:
        return f"const:{spec.k}"
    if spec.kind is Kind.EXPLICIT:
        return "list:" + ",".join(str(c) for c in spec.terms)
    return spec.kind.value


_SIMPLE = {k.value: k for k in (Kind.FIBONACCI, Kind.NATURALS, Kind.ODD, Kind.EVEN)}


def _parse_int(token: str, text: str) -> int:
    tok = token.strip()
    if not tok or not (tok.isdigit() or (tok[0] in "+-" and tok[1:].isdigit())):
        raise SpecParseError(f"expected an integer, got {token!r} in {text!r}", token=token)
    return int(tok)


def parse_spec(text: str) -> SequenceSpec:
    """Parse the ``--seq`` mini-language.

    >>> parse_spec("const:3")
    SequenceSpec(kind=<Kind.CONSTANT: 'const'>, k=3, terms=None)
    >>> evaluate(parse_spec("nat"), 2)
    3
    """
    s = text.strip()
    if s in _SIMPLE:
        return SequenceSpec(_SIMPLE[s])
    head, sep, body = s.partition(":")
    if not sep:
        raise SpecParseError(f"unknown sequence {s!r}; expected fib|nat|odd|even|const:<k>|list:<c0,...>", token=s)
    if head == "const":
        return SequenceSpec.constant(_parse_int(body, text))
    if head == "list":
        if not body.strip():
            raise SpecParseError(f"empty list in {text!r}", token=body)
        return SequenceSpec.explicit(_parse_int(tok, text) for tok in body.split(","))
    raise SpecParseError(f"unknown sequence kind {head!r} in {text!r}", token=head)


def evaluate(spec: SequenceSpec, n: int) -> int:
    """Return F_n (normalized so that F_0 == 1)."""
    if n < 0:
        raise RangeError(f"index must be non-negative, got {n}")
    kind = spec.kind
    if kind is Kind.EXPLICIT:
        if n >= len(spec.terms):
            raise RangeError(f"index {n} out of range for {render(spec)} (length {len(spec.terms)})")
        return spec.terms[n]
    if n == 0:
        return 1
    if kind is Kind.NATURALS:
        return n + 1
    if kind is Kind.ODD:
        return 2 * n + 1
    if kind is Kind.EVEN:
        return 2 * n
    if kind is Kind.CONSTANT:
        return spec.k
    # normalized Fibonacci: 1, 1, 2, 3, 5, ...
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


def values(spec: SequenceSpec, n: int) -> List[int]:
    """Return ``[F_0, ..., F_n]`` in one pass."""
    if n < 0:
        raise RangeError(f"index must be non-negative, got {n}")
    if spec.kind is Kind.FIBONACCI:
        out = [1, 1]
        while len(out) <= n:
            out.append(out[-1] + out[-2])
        return out[: n + 1]
    return [evaluate(spec, i) for i in range(n + 1)]
