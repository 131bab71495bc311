"""Symmetric group S_n and block-permutation group Theta_[n;kappa].

Everything is 1-indexed. A grouped object ``(i, alpha)`` (player ``i``,
strategy ``alpha``) has flat index ``(i - 1) * kappa + alpha``.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .config import DEFAULT_BOUNDS, BoundExceeded
from .stp_core import LogicalMatrix, RationalMatrix, block_diag

__all__ = [
    "Permutation",
    "BlockPermutation",
    "perm_from_cycles",
    "parse_cycles",
    "compose",
    "structure_matrix",
    "transposition_generators",
    "enumerate_sn",
    "block_decompose",
    "block_compose",
    "enumerate_theta",
]


@dataclass(frozen=True)
class Permutation:
    """``images[i - 1] = sigma(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __matmul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each led by its smallest element, in increasing order."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)

    def __repr__(self):
        return f"Permutation({self}, n={self.n})"


def perm_from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    """Build an element of S_n from disjoint cycles; uncovered points are fixed."""
    images = list(range(1, n + 1))
    seen = set()
    for cyc in cycles:
        for x in cyc:
            if not 1 <= x <= n:
                raise ValueError(f"cycle entry {x} outside 1..{n}")
            if x in seen:
                raise ValueError(f"cycle entry {x} repeated")
            seen.add(x)
        for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
            images[a - 1] = b
    return Permutation(tuple(images))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(n: int, text: str) -> Permutation:
    """Parse cycle notation such as ``(1,3)(2,5)``; ``()`` and ``id`` mean the identity."""
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "id", "()"):
        return Permutation.identity(n)
    if _CYCLE_RE.sub("", compact):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(compact):
        if body:
            cycles.append(tuple(int(x) for x in body.split(",")))
    return perm_from_cycles(n, cycles)


def compose(mu: Permutation, sigma: Permutation) -> Permutation:
    """``mu o sigma``: sigma is applied first."""
    if mu.n != sigma.n:
        raise ValueError(f"cannot compose permutations of sizes {mu.n} and {sigma.n}")
    return Permutation(tuple(mu(sigma(i)) for i in range(1, sigma.n + 1)))


def structure_matrix(sigma: Permutation) -> LogicalMatrix:
    """``P_sigma = [delta_n^{sigma(1)}, ..., delta_n^{sigma(n)}]``."""
    return LogicalMatrix(sigma.n, sigma.images)


def transposition_generators(n: int) -> list[Permutation]:
    """The generating set ``{(1, r) : 1 < r <= n}``."""
    return [perm_from_cycles(n, [(1, r)]) for r in range(2, n + 1)]


def enumerate_sn(n: int, bound: Optional[int] = None) -> list[Permutation]:
    """All of S_n in lexicographic order of image tuples."""
    bound = DEFAULT_BOUNDS.sn_degree if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"S_{n} exceeds the enumeration bound n <= {bound}")
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@dataclass(frozen=True)
class BlockPermutation:
    """``(pi; d_1, ..., d_n)`` where ``d_i`` maps block ``pi^{-1}(i)`` onto block ``i``."""

    n: int
    kappa: int
    pi: Permutation
    d: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.d))
        if self.pi.n != self.n or len(self.d) != self.n:
            raise ValueError("block permutation needs pi on n points and n local permutations")
        if any(di.n != self.kappa for di in self.d):
            raise ValueError(f"local permutations must act on {self.kappa} points")

    @classmethod
    def identity(cls, n: int, kappa: int) -> "BlockPermutation":
        e = Permutation.identity(kappa)
        return cls(n, kappa, Permutation.identity(n), (e,) * n)

    def to_full(self) -> Permutation:
        """The underlying element of S_{n kappa}."""
        k = self.kappa
        images = [0] * (self.n * k)
        for j in range(1, self.n + 1):
            i = self.pi(j)
            for a in range(1, k + 1):
                images[(j - 1) * k + a - 1] = (i - 1) * k + self.d[i - 1](a)
        return Permutation(tuple(images))

    def structure_matrix(self) -> LogicalMatrix:
        return structure_matrix(self.to_full())

    def d_matrix(self) -> RationalMatrix:
        """``D^theta = diag(D_1, ..., D_n)``."""
        return block_diag([structure_matrix(di) for di in self.d])

    def inverse(self) -> "BlockPermutation":
        return block_decompose(self.to_full().inverse(), self.n, self.kappa)

    def __matmul__(self, other: "BlockPermutation") -> "BlockPermutation":
        return block_compose(self, other)

    def __str__(self):
        return f"({self.pi}; {', '.join(str(x) for x in self.d)})"


def block_decompose(theta: Permutation, n: int, kappa: int) -> Optional[BlockPermutation]:
    """Split ``theta`` in S_{n kappa} into ``(pi; d_1..d_n)``, or ``None`` if it is not block."""
    if theta.n != n * kappa:
        raise ValueError(f"theta acts on {theta.n} points, expected {n * kappa}")
    pi = [0] * n
    d: list[Optional[tuple[int, ...]]] = [None] * n
    for j in range(1, n + 1):
        targets = [theta((j - 1) * kappa + a) for a in range(1, kappa + 1)]
        blocks = {(t - 1) // kappa + 1 for t in targets}
        if len(blocks) != 1:
            return None
        i = blocks.pop()
        pi[j - 1] = i
        d[i - 1] = tuple((t - 1) % kappa + 1 for t in targets)
    if sorted(pi) != list(range(1, n + 1)):
        return None
    return BlockPermutation(n, kappa, Permutation(tuple(pi)), tuple(Permutation(x) for x in d))


def block_compose(beta: BlockPermutation, alpha: BlockPermutation) -> BlockPermutation:
    """``beta o alpha`` via ``pi = pi_beta o pi_alpha`` and ``d_i = d^beta_i o d^alpha_{pi_beta^{-1}(i)}``."""
    if (beta.n, beta.kappa) != (alpha.n, alpha.kappa):
        raise ValueError("block permutations of different shapes")
    pinv = beta.pi.inverse()
    d = tuple(compose(beta.d[i - 1], alpha.d[pinv(i) - 1]) for i in range(1, beta.n + 1))
    return BlockPermutation(beta.n, beta.kappa, compose(beta.pi, alpha.pi), d)


def theta_order(n: int, kappa: int) -> int:
    return math.factorial(n) * math.factorial(kappa) ** n


def iter_theta(n: int, kappa: int, bound: Optional[int] = None) -> Iterator[BlockPermutation]:
    """Lazily enumerate Theta_[n;kappa]: pi lexicographic, then d-tuples lexicographic."""
    bound = DEFAULT_BOUNDS.theta_size if bound is None else bound
    size = theta_order(n, kappa)
    if size > bound:
        raise BoundExceeded(f"|Theta_[{n};{kappa}]| = {size} exceeds the bound {bound}")
    return _theta_elements(n, kappa)


def _theta_elements(n: int, kappa: int) -> Iterator[BlockPermutation]:
    local = [Permutation(p) for p in itertools.permutations(range(1, kappa + 1))]
    for pi in itertools.permutations(range(1, n + 1)):
        pi = Permutation(pi)
        for d in itertools.product(local, repeat=n):
            yield BlockPermutation(n, kappa, pi, d)


def enumerate_theta(n: int, kappa: int, bound: Optional[int] = None) -> list[BlockPermutation]:
    return list(iter_theta(n, kappa, bound))
