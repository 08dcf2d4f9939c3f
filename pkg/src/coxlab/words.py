"""Words and relators over an involutive generator alphabet.

Words are tuples of generator indices.  Since every generator squares to
the identity in all the presentations handled here, letters are kept
positive and a formal inverse is just the letter itself; the inverse of a
word is its reversal.

Two relators define the same normal closure when one is a rotation of the
other or of its reversal, so relator identity goes through a canonical
form minimal over that whole orbit.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

Word = tuple[int, ...]
Pair = tuple[int, int]


class TrivialRelatorError(ValueError):
    """Raised when a word reduces to the empty relator."""


def as_word(letters) -> Word:
    """Normalise a letter sequence to a positive involutive word."""
    w = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a generator index")
        w.append(abs(x))
    return tuple(w)


def free_reduce_involutive(word) -> Word:
    """Delete subwords u.u until none remain (u^2 = 1 for every u)."""
    stack: list[int] = []
    for x in as_word(word):
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def normalise_pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


def reduce_with_commutations(word, comm) -> Word:
    """Fixpoint of u.u -> empty and u_i u_j u_i -> u_j for commuting pairs."""
    comm = {normalise_pair(*p) for p in comm}
    w = free_reduce_involutive(word)
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 2):
            i, j = w[k], w[k + 1]
            if w[k + 2] == i and i != j and normalise_pair(i, j) in comm:
                w = free_reduce_involutive(w[:k] + (j,) + w[k + 3:])
                changed = True
                break
    return w


def rotations(word: Word):
    for k in range(len(word)):
        yield word[k:] + word[:k]


def canonical_form(word) -> Word:
    """Lexicographic minimum over all rotations of the word and its reversal."""
    w = as_word(word)
    if not w:
        return w
    return min(min(rotations(w)), min(rotations(w[::-1])))


@dataclass(frozen=True)
class Relator:
    """A nonempty involutively reduced word together with its canonical form."""

    word: Word
    canonical: Word

    def __len__(self):
        return len(self.word)


def canonical_relator(word) -> Relator:
    w = free_reduce_involutive(word)
    if not w:
        raise TrivialRelatorError(f"word reduces to the empty relator: {tuple(word)}")
    return Relator(word=w, canonical=canonical_form(w))


def _match_pair_power(word: Word, copies: int) -> Pair | None:
    # (u_i u_j)^copies as a reduced word: alternating i, j of length 2*copies.
    if len(word) != 2 * copies:
        return None
    i, j = word[0], word[1]
    if i == j:
        return None
    if word == (i, j) * copies:
        return normalise_pair(i, j)
    return None


@dataclass
class CleanReport:
    """Fixpoint classification of a relator list.

    squares: generators seen as square relators (dropped), commutations and
    braids as unordered pairs, misc the surviving relators deduplicated by
    canonical form.  Every commutation discovered along the way was fed
    back into the rewriting until nothing changed; `passes` counts the
    sweeps that took.
    """

    squares: set[int] = field(default_factory=set)
    commutations: set[Pair] = field(default_factory=set)
    braids: set[Pair] = field(default_factory=set)
    misc: dict[Word, Relator] = field(default_factory=dict)
    passes: int = 0

    def misc_relators(self) -> list[Relator]:
        return [self.misc[k] for k in sorted(self.misc)]

    def to_json(self) -> dict:
        return {
            "squares": sorted(self.squares),
            "commutations": [list(p) for p in sorted(self.commutations)],
            "braids": [list(p) for p in sorted(self.braids)],
            "misc": [list(r.word) for r in self.misc_relators()],
            "passes": self.passes,
        }


def clean(relators) -> CleanReport:
    """Classify relators, rewriting with the squares and every commutation found.

    A relator reducing to (i j i j) registers the commutation {i, j}; one
    reducing to (i j i j i j) registers the braid pair {i, j}; squares are
    dropped.  Newly found commutations are used to re-reduce everything,
    repeating to a fixpoint.  Only commutations are used as rewriting
    rules, never braids.
    """
    pending = [as_word(w) for w in relators]
    report = CleanReport()
    while True:
        report.passes += 1
        survivors: list[Word] = []
        changed = False
        for w in pending:
            w = as_word(w)
            if len(w) == 2 and w[0] == w[1]:
                report.squares.add(w[0])
                changed = True
                continue
            w = reduce_with_commutations(w, report.commutations)
            if not w:
                changed = True
                continue
            pair = _match_pair_power(w, 2)
            if pair is not None:
                if pair not in report.commutations:
                    report.commutations.add(pair)
                changed = True
                continue
            pair = _match_pair_power(w, 3)
            if pair is not None:
                if pair not in report.braids:
                    report.braids.add(pair)
                changed = True
                continue
            survivors.append(w)
        pending = survivors
        if not changed:
            break
    if report.commutations & report.braids:
        overlap = sorted(report.commutations & report.braids)
        raise ValueError(f"degenerate input: pairs both commute and braid: {overlap}")
    for w in pending:
        rel = canonical_relator(w)
        kept = report.misc.get(rel.canonical)
        if kept is None or rel.word < kept.word:
            report.misc[rel.canonical] = rel
    return report


@dataclass
class Derivation:
    """Outcome of a bounded triviality search.

    found=True comes with a certificate chain of words from the target down
    to the empty word, each obtained from the previous one by a single
    relator substitution (up to rotation, reversal and square deletion).
    found=False is inconclusive, never a proof of independence.
    """

    found: bool
    chain: list[Word] | None
    explored: int


def _substitution_rules(known) -> dict[int, list[tuple[Word, Word]]]:
    # Every relator r, rotated and reversed, split as r = lhs.rhs, yields the
    # rewrite lhs -> reversed(rhs) (words are involutive).  Rules are indexed
    # by their first letter.
    rules: set[tuple[Word, Word]] = set()
    for raw in known:
        w = free_reduce_involutive(raw)
        if not w:
            continue
        forms = set(rotations(w)) | set(rotations(w[::-1]))
        for form in forms:
            for k in range(1, len(form) + 1):
                lhs, rhs = form[:k], form[k:]
                repl = rhs[::-1]
                if lhs != repl:
                    rules.add((lhs, repl))
    indexed: dict[int, list[tuple[Word, Word]]] = {}
    for lhs, repl in sorted(rules):
        indexed.setdefault(lhs[0], []).append((lhs, repl))
    return indexed


def derive_bounded(known, target, max_len: int, max_states: int = 300_000) -> Derivation:
    """Search for a derivation that the target word is trivial.

    Moves: replace a subword matching one side of a known relator by the
    other side, then reduce squares; states are identified up to rotation
    and reversal (conjugation and inversion preserve triviality).  Words
    never exceed max_len.  Short words are explored first, so derivations
    that stay near the target length are found quickly.
    """
    target_w = free_reduce_involutive(target)
    if max_len < len(target_w):
        raise ValueError(f"max_len {max_len} is below the reduced target length {len(target_w)}")
    if not target_w:
        return Derivation(found=True, chain=[tuple(as_word(target))], explored=0)

    rules = _substitution_rules(known)
    start = canonical_form(target_w)
    parents: dict[Word, Word | None] = {start: None}
    heap: list[tuple[int, int, Word]] = [(len(start), 0, start)]
    explored = 0

    while heap and explored < max_states:
        length, depth, state = heapq.heappop(heap)
        explored += 1
        # Rules apply at every rotation, so scan the doubled word once.
        doubled = state + state
        for pos in range(len(state)):
            for lhs, repl in rules.get(doubled[pos], ()):
                if len(lhs) > len(state):
                    continue
                if doubled[pos:pos + len(lhs)] != lhs:
                    continue
                rotated = doubled[pos:pos + len(state)]
                nxt = free_reduce_involutive(repl + rotated[len(lhs):])
                if len(nxt) > max_len:
                    continue
                nxt = canonical_form(nxt)
                if nxt in parents:
                    continue
                parents[nxt] = state
                if not nxt:
                    chain: list[Word] = []
                    node: Word | None = nxt
                    while node is not None:
                        chain.append(node)
                        node = parents[node]
                    chain.reverse()
                    return Derivation(found=True, chain=chain, explored=explored)
                heapq.heappush(heap, (len(nxt), depth + 1, nxt))
    return Derivation(found=False, chain=None, explored=explored)
