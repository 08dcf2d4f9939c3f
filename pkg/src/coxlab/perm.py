"""Exact permutations on plane indices 1..n.

One-line notation, 1-based, matching the plane numbering of the
degeneration diagrams.  The composition convention is fixed once and for
all as (p * q)(i) = p(q(i)), i.e. q acts first; every word evaluation in
the rest of the package is defined against this convention.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}, stored as the tuple (p(1), ..., p(n))."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def moved_points(self) -> list[int]:
        return [i + 1 for i, v in enumerate(self.images) if v != i + 1]

    def as_transposition(self) -> tuple[int, int] | None:
        """The swapped pair if this is a transposition, else None."""
        moved = self.moved_points()
        if len(moved) == 2 and self(moved[0]) == moved[1]:
            return (moved[0], moved[1])
        return None

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            k = self(start)
            while k != start:
                cyc.append(k)
                seen[k - 1] = True
                k = self(k)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(id, n={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation({body}, n={self.degree})"

    def to_json(self) -> list[int]:
        return list(self.images)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(alpha: int, beta: int, n: int) -> Permutation:
    """The transposition (alpha beta) in S_n."""
    if not (1 <= alpha <= n and 1 <= beta <= n):
        raise ValueError(f"transposition indices out of range 1..{n}: ({alpha}, {beta})")
    if alpha == beta:
        raise ValueError(f"degenerate transposition ({alpha}, {beta})")
    images = list(range(1, n + 1))
    images[alpha - 1], images[beta - 1] = beta, alpha
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p * q)(i) = p(q(i)): apply q first."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation(tuple(p.images[v - 1] for v in q.images))


def permutation_from_json(images: list[int]) -> Permutation:
    return Permutation(tuple(images))


def generates_full_symmetric(gens) -> bool:
    """Whether a set of transpositions generates the full symmetric group.

    True iff the graph with an edge per transposition is connected on all
    of {1..n}.  Defined only for transposition inputs; anything else is
    rejected rather than silently mishandled.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generating set")
    n = gens[0].degree
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if g.degree != n:
            raise ValueError("mixed degrees in generating set")
        pair = g.as_transposition()
        if pair is None:
            raise ValueError(f"not a transposition: {g!r}")
        a, b = find(pair[0]), find(pair[1])
        if a != b:
            parent[a] = b

    root = find(1)
    return all(find(i) == root for i in range(2, n + 1))
