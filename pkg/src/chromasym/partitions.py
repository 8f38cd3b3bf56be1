"""Integer partitions in canonical form, plus the epsilon statistic.

A partition is a weakly decreasing tuple of positive ints; ``()`` is the
empty partition.  The statistic

    epsilon(lam) = len(lam)! * prod_j (j-1)^{m_j} / m_j!

(with m_j the multiplicity of the part j) is the coefficient weight that
appears when the reciprocal of 1 - sum_{i>=2} (i-1) e_i z^i is expanded in
the e-basis, so it drives every closed coefficient formula in this package.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

Partition = tuple


def make_partition(values: Iterable[int]) -> Partition:
    """Canonical weakly decreasing tuple from a multiset of positive ints."""
    parts = sorted(values, reverse=True)
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"partition parts must be positive integers, got {p!r}")
    return tuple(parts)


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part value -> multiplicity."""
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return mult


def support(lam: Partition) -> list[int]:
    """Distinct part values, ascending."""
    return sorted(set(lam))


def epsilon(lam: Partition) -> int:
    """len(lam)! * prod_j (j-1)^{m_j} / m_j! as an exact integer.

    Vanishes exactly when 1 is a part.  The multinomial factor
    len(lam)!/prod m_j! is accumulated as a product of binomials, so the
    computation never leaves the integers.
    """
    result = 1
    placed = 0
    for j, m in multiplicities(lam).items():
        placed += m
        result *= math.comb(placed, m) * (j - 1) ** m
    return result


def remove_part(lam: Partition, a: int) -> Optional[Partition]:
    """lam with one copy of a deleted, or None when a is not a part."""
    if a not in lam:
        return None
    parts = list(lam)
    parts.remove(a)
    return tuple(parts)


def epsilon_minus(lam: Partition, *removed: int) -> int:
    """epsilon after deleting the given parts in order; 0 if any is absent.

    Encodes the convention epsilon(lam - a) = 0 for a not a part of lam,
    which every coefficient formula below relies on.
    """
    cur: Optional[Partition] = lam
    for a in removed:
        cur = remove_part(cur, a)
        if cur is None:
            return 0
    return epsilon(cur)


def union(lam: Partition, mu: Partition) -> Partition:
    """Multiset union, re-sorted into canonical form."""
    return tuple(sorted(lam + mu, reverse=True))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in reverse-lexicographic order ((n) first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []
    prefix: list[int] = []

    def build(remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            build(remaining - part, part)
            prefix.pop()

    build(n, n)
    return out


def parse_partition(text: str) -> Partition:
    """Parse the CLI form "5,2"; "0" or "" denote the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad partition text {text!r}") from None
    return make_partition(values)


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition; the empty partition renders as "0"."""
    return ",".join(map(str, lam)) if lam else "0"
