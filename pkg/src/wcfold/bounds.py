"""Closed-form upper bounds and the explicit chain/folding families.

Two bounds apply to every folding of a chain:

* the bounding-box bound, n - 1 bonds for a chain of length 2n, from
  counting corner and extreme nodes of the folding's bounding box;
* the parity bound, min(odd-G, even-C) + min(even-G, odd-C) (plus the
  analogous A/U terms), because bonded nodes sit on adjacent lattice points
  and therefore have opposite index parity.

The generators build the G^n C^n block family, its 2 x n hairpin folding
(which attains n - 1 bonds and is uniquely optimal for n > 3), and the
mixed-alphabet family G^(m/2) A^(n/2) U^(n/2) C^(m/2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Chain, Folding


def bounding_box_bound(length: int) -> int:
    """Upper bound on bonds for any chain of this length.

    Exact statement for even lengths (length/2 - 1); odd lengths use the
    floor extension (length // 2) - 1.  Never negative.
    """
    if length < 1:
        raise ValueError("length must be positive")
    return max(0, length // 2 - 1)


def bbox_bound_is_extension(length: int) -> bool:
    """True when bounding_box_bound(length) relies on the odd-length extension."""
    return length % 2 == 1


@dataclass(frozen=True)
class ParityCensus:
    """Counts of each bondable base split by 1-based index parity."""

    odd_g: int = 0
    even_g: int = 0
    odd_c: int = 0
    even_c: int = 0
    odd_a: int = 0
    even_a: int = 0
    odd_u: int = 0
    even_u: int = 0

    @property
    def has_au(self) -> bool:
        return bool(self.odd_a or self.even_a or self.odd_u or self.even_u)

    def as_dict(self) -> dict[str, int]:
        return {
            "odd_g": self.odd_g,
            "even_g": self.even_g,
            "odd_c": self.odd_c,
            "even_c": self.even_c,
            "odd_a": self.odd_a,
            "even_a": self.even_a,
            "odd_u": self.odd_u,
            "even_u": self.even_u,
        }


def parity_census(chain: Chain) -> ParityCensus:
    """Count bondable bases by index parity (X nodes are not counted)."""
    counts = {k: 0 for k in ("odd_g", "even_g", "odd_c", "even_c",
                             "odd_a", "even_a", "odd_u", "even_u")}
    for i, base in enumerate(chain.seq, start=1):
        if base == "X":
            continue
        parity = "odd" if i % 2 else "even"
        counts[f"{parity}_{base.lower()}"] += 1
    return ParityCensus(**counts)


def parity_bound(chain: Chain) -> int:
    """Parity upper bound on bonds over all foldings of the chain.

    min(odd-G, even-C) + min(even-G, odd-C) for the G/C pair; the identical
    argument applied to A/U adds min(odd-A, even-U) + min(even-A, odd-U).
    The A/U terms are an extension beyond the G/C-only statement and are
    flagged by ParityCensus.has_au for callers that care.
    """
    c = parity_census(chain)
    return (
        min(c.odd_g, c.even_c)
        + min(c.even_g, c.odd_c)
        + min(c.odd_a, c.even_u)
        + min(c.even_a, c.odd_u)
    )


def gc_block_chain(n: int) -> Chain:
    """The chain of n G's followed by n C's."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Chain("G" * n + "C" * n)


def hairpin_folding(n: int) -> Folding:
    """The 2 x n hairpin: nodes 1..n left-to-right on row 0, nodes n+1..2n
    right-to-left on row 1.  Scores n - 1 against gc_block_chain(n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    bottom = [(x, 0) for x in range(n)]
    top = [(x, 1) for x in range(n - 1, -1, -1)]
    return Folding(tuple(bottom + top))


def mixed_block_chain(m: int, n: int) -> Chain:
    """The chain G^(m/2) A^(n/2) U^(n/2) C^(m/2); m and n must be even."""
    if m % 2 or n % 2:
        raise ValueError("m and n must be even")
    if m + n < 2:
        raise ValueError("m + n must be at least 2")
    h_m, h_n = m // 2, n // 2
    return Chain("G" * h_m + "A" * h_n + "U" * h_n + "C" * h_m)


@dataclass(frozen=True)
class ChainFamilySpec:
    """A generator request: family 'sn' (G^n C^n) or 'mixed' (with m)."""

    family: str
    n: int
    m: int | None = None

    def generate(self) -> Chain:
        if self.family == "sn":
            return gc_block_chain(self.n)
        if self.family == "mixed":
            if self.m is None:
                raise ValueError("mixed family needs both m and n")
            return mixed_block_chain(self.m, self.n)
        raise ValueError(f"unknown family {self.family!r}")

    @property
    def uniqueness_guaranteed(self) -> bool:
        """Whether the unique-optimal-folding guarantee applies to this size.

        Block chains of half-length above 3 have a unique optimal folding;
        the mixed family inherits the guarantee when (m + n) / 2 > 3.
        """
        if self.family == "sn":
            return self.n > 3
        if self.family == "mixed":
            return self.m is not None and (self.m + self.n) // 2 > 3
        return False
