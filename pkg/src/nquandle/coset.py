"""Coset enumeration for finitely presented groups (Todd-Coxeter).

Enumerates the cosets of a finitely generated subgroup H in a finitely
presented group G, producing the complete right-action table of the
generators on the cosets when the index is finite and within the
configured bound.  Two definition strategies are provided: relator-based
HLT with lookahead (the default) and the deduction-driven Felsch scheme,
which is useful as a cross-check because both must agree on the index.

Cosets are numbered 0..n-1 with coset 0 = H, renumbered after collapse
by breadth-first discovery order so output is reproducible.  Reaching
the coset bound is reported as a LimitExceeded value rather than an
exception: it means "not proven finite", which callers treat as an
answer, not a failure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .freeword import FreeWord
from .presentation import GroupPresentation

UNDEF = -1
MAX_COSET_BOUND = 2**31 - 1


class EnumerationError(ValueError):
    """Malformed enumeration input (bad alphabet, bad limits)."""


@dataclass(frozen=True)
class EnumerationLimit:
    max_cosets: int = 10**6
    max_steps: int | None = None

    def __post_init__(self):
        if self.max_cosets < 1:
            raise EnumerationError("max_cosets must be >= 1")
        if self.max_cosets > MAX_COSET_BOUND:
            raise EnumerationError(f"max_cosets above {MAX_COSET_BOUND} is not supported")


@dataclass(frozen=True)
class LimitExceeded:
    """Distinguished non-result: the index may be infinite or above the cap."""

    max_cosets: int
    live_cosets: int
    reason: str
    strand: int | None = None

    def __str__(self):
        tail = f" (strand {self.strand})" if self.strand is not None else ""
        return f"exceeded {self.max_cosets} cosets{tail}: {self.reason}"


@dataclass(frozen=True)
class CosetTable:
    """Complete right-action table of signed generators on cosets.

    ``action[c, 2*g]`` is c * g and ``action[c, 2*g + 1]`` is c * g^-1.
    Coset 0 is the subgroup itself.  ``bfs_parent``/``bfs_letter`` span a
    breadth-first tree rooted at 0 from which representative words are
    read off.
    """

    n_cosets: int
    n_generators: int
    action: np.ndarray
    subgroup_words: tuple[FreeWord, ...]
    complete: bool = True
    bfs_parent: np.ndarray = field(default=None, repr=False)
    bfs_letter: np.ndarray = field(default=None, repr=False)

    def column(self, letter: int) -> np.ndarray:
        """Action column for a table letter (0..2m-1)."""
        return self.action[:, letter]

    def trace(self, start: int, w: FreeWord) -> int:
        """The coset reached from start by applying w left to right."""
        if not self.complete:
            raise EnumerationError("cannot trace in an incomplete table")
        c = start
        for x in w:
            c = self.action[c, _letter_of(x)]
        return int(c)

    def word_permutation(self, w: FreeWord) -> np.ndarray:
        """The permutation of all cosets effected by the word w."""
        perm = np.arange(self.n_cosets, dtype=self.action.dtype)
        for x in w:
            perm = self.action[:, _letter_of(x)][perm]
        return perm

    def rep_word(self, c: int) -> FreeWord:
        """A representative word for coset c (empty for coset 0)."""
        letters = []
        while c != 0:
            letter = int(self.bfs_letter[c])
            letters.append(_signed_of(letter))
            c = int(self.bfs_parent[c])
        letters.reverse()
        return FreeWord(tuple(letters))


def _letter_of(signed: int) -> int:
    # signed letter (nonzero int) -> table letter in 0..2m-1
    return 2 * (signed - 1) if signed > 0 else 2 * (-signed - 1) + 1


def _signed_of(letter: int) -> int:
    g, inv = divmod(letter, 2)
    return -(g + 1) if inv else g + 1


def _cyclically_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    w = list(letters)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


class _Enumerator:
    """One enumeration run; mutable state, discarded after completion."""

    def __init__(self, group: GroupPresentation, subgroup: list[FreeWord], limit: EnumerationLimit):
        self.m = len(group.generators)
        self.width = 2 * self.m
        self.limit = limit
        for w in list(subgroup) + list(group.relators):
            if w.max_index() >= self.m:
                raise EnumerationError("word uses a generator outside the presentation alphabet")
        self.relators = []
        seen = set()
        for r in group.relators:
            red = _cyclically_reduce(r.letters)
            if red and red not in seen:
                seen.add(red)
                self.relators.append(tuple(_letter_of(x) for x in red))
        self.subgroup_words = [tuple(_letter_of(x) for x in w) for w in subgroup if w]
        self.table = [[UNDEF] * self.width]
        self.p = [0]
        self.n_live = 1
        self.n_defined = 1
        self.deductions = deque()
        self.record_deductions = False
        self.min_merged = None  # smallest survivor of a merge, for cursor rewind

    # -- union-find over cosets (minimum index is the representative) --

    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def alive(self, k: int) -> bool:
        return self.p[k] == k

    # -- table manipulation --

    def define(self, alpha: int, x: int) -> int:
        if self.n_live >= self.limit.max_cosets:
            raise _TableFull
        if self.limit.max_steps is not None and self.n_defined >= self.limit.max_steps:
            raise _TableFull
        beta = len(self.table)
        self.table.append([UNDEF] * self.width)
        self.p.append(beta)
        self.table[alpha][x] = beta
        self.table[beta][x ^ 1] = alpha
        self.n_live += 1
        self.n_defined += 1
        if self.record_deductions:
            self.deductions.append((alpha, x))
        return beta

    def merge(self, k: int, lam: int, queue: deque):
        phi_k, phi_l = self.rep(k), self.rep(lam)
        if phi_k != phi_l:
            mu, nu = min(phi_k, phi_l), max(phi_k, phi_l)
            self.p[nu] = mu
            self.n_live -= 1
            queue.append(nu)
            if self.min_merged is None or mu < self.min_merged:
                self.min_merged = mu

    def coincidence(self, alpha: int, beta: int):
        table = self.table
        queue = deque()
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.popleft()
            row = table[gamma]
            for x in range(self.width):
                delta = row[x]
                if delta == UNDEF:
                    continue
                table[delta][x ^ 1] = UNDEF
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][x] != UNDEF:
                    self.merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] != UNDEF:
                    self.merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu
                    if self.record_deductions:
                        self.deductions.append((mu, x))

    def scan(self, alpha: int, word, fill: bool):
        """Trace word from alpha; close the cycle by deduction/coincidence.

        With fill=True, missing entries are defined along the way (HLT);
        otherwise an unclosable scan is abandoned (lookahead/Felsch).
        """
        table = self.table
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] != UNDEF:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] != UNDEF:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                if self.record_deductions:
                    self.deductions.append((f, word[i]))
                return
            if not fill:
                return
            self.define(f, word[i])

    # -- strategies --

    def run_hlt(self):
        for w in self.subgroup_words:
            self.scan(0, w, fill=True)
        alpha = 0
        while alpha < len(self.table):
            if not self.alive(alpha):
                alpha += 1
                continue
            try:
                self._hlt_process(alpha)
            except _TableFull:
                # Lookahead can only rescue the run if it frees a useful
                # amount of space; refilling a nearly full table over and
                # over makes no progress.
                self.lookahead()
                needed = max(1, self.limit.max_cosets // 5)
                if self.n_live > self.limit.max_cosets - needed:
                    raise
                alpha = self.compact(alpha)
                continue  # reprocess the same coset after the collapse
            alpha += 1
            if len(self.table) - self.n_live > max(100_000, 2 * self.n_live):
                alpha = self.compact(alpha)

    def _hlt_process(self, alpha: int):
        for r in self.relators:
            self.scan(alpha, r, fill=True)
            if not self.alive(alpha):
                return
        row = self.table[alpha]
        for x in range(self.width):
            if row[x] == UNDEF:
                self.define(alpha, x)

    def lookahead(self):
        """Scan every relator at every live coset without defining."""
        for alpha in range(len(self.table)):
            if not self.alive(alpha):
                continue
            for r in self.relators:
                self.scan(alpha, r, fill=False)
                if not self.alive(alpha):
                    break

    def run_felsch(self):
        self.record_deductions = True
        by_first = [[] for _ in range(self.width)]
        seen = [set() for _ in range(self.width)]
        for r in self.relators:
            for w in (r, tuple(x ^ 1 for x in reversed(r))):
                for k in range(len(w)):
                    rot = w[k:] + w[:k]
                    if rot not in seen[rot[0]]:
                        seen[rot[0]].add(rot)
                        by_first[rot[0]].append(rot)
        for w in self.subgroup_words:
            self.scan(0, w, fill=True)
            self._drain_deductions(by_first)
        # Coincidences can reopen gaps in rows the cursor already passed,
        # so merges rewind the cursor to the smallest surviving coset.
        alpha = 0
        while alpha < len(self.table):
            if not self.alive(alpha):
                alpha += 1
                continue
            row = self.table[alpha]
            gap = next((x for x in range(self.width) if row[x] == UNDEF), None)
            if gap is None:
                alpha += 1
                continue
            self.define(alpha, gap)
            self._drain_deductions(by_first)
            if self.min_merged is not None:
                alpha = min(alpha, self.min_merged)
                self.min_merged = None

    def _drain_deductions(self, by_first):
        while self.deductions:
            alpha, x = self.deductions.popleft()
            alpha = self.rep(alpha)
            for w in by_first[x]:
                self.scan(alpha, w, fill=False)
                if not self.alive(alpha):
                    break
            alpha = self.rep(alpha)
            beta = self.table[alpha][x]
            if beta != UNDEF:
                beta = self.rep(beta)
                for w in by_first[x ^ 1]:
                    self.scan(beta, w, fill=False)
                    if not self.alive(beta):
                        break

    def compact(self, cursor: int) -> int:
        """Renumber live cosets, preserving definition order; remap cursor."""
        new_index = {}
        for old in range(len(self.table)):
            if self.alive(old):
                new_index[old] = len(new_index)
        remap = [UNDEF] * len(self.table)
        for old, new in new_index.items():
            remap[old] = new
        new_table = []
        for old, new in new_index.items():
            row = self.table[old]
            new_table.append([UNDEF if e == UNDEF else remap[self.rep(e)] for e in row])
        new_cursor = len(new_index)
        for old in range(cursor, len(self.table)):
            if old in new_index:
                new_cursor = new_index[old]
                break
        self.table = new_table
        self.p = list(range(len(new_table)))
        self.min_merged = None
        return new_cursor

    # -- finishing --

    def finish(self) -> "CosetTable":
        live = [c for c in range(len(self.table)) if self.alive(c)]
        index = {}
        # breadth-first renumbering from coset 0 for reproducible output
        order = deque([0])
        index[0] = 0
        parents = [(UNDEF, UNDEF)]
        while order:
            c = order.popleft()
            row = self.table[c]
            for x in range(self.width):
                d = row[x]
                if d != UNDEF and d not in index:
                    index[d] = len(index)
                    parents.append((index[c], x))
                    order.append(d)
        if len(index) != len(live):
            raise AssertionError("coset table is not transitive; enumeration bug")
        n = len(live)
        action = np.full((n, self.width), UNDEF, dtype=np.int32)
        for old, new in index.items():
            row = self.table[old]
            for x in range(self.width):
                if row[x] == UNDEF:
                    raise AssertionError("incomplete table after successful enumeration")
                action[new, x] = index[row[x]]
        bfs_parent = np.array([p for p, _ in parents], dtype=np.int32)
        bfs_letter = np.array([l for _, l in parents], dtype=np.int32)
        return n, action, bfs_parent, bfs_letter


class _TableFull(Exception):
    pass


def _verify_table(t: CosetTable, group: GroupPresentation, subgroup: list[FreeWord]):
    n = t.n_cosets
    identity = np.arange(n, dtype=np.int64)
    for g in range(t.n_generators):
        fwd = t.action[:, 2 * g].astype(np.int64)
        back = t.action[:, 2 * g + 1].astype(np.int64)
        if not (np.array_equal(np.sort(fwd), identity) and np.array_equal(back[fwd], identity)):
            raise AssertionError(f"generator {g} does not act as a permutation")
    for r in group.relators:
        if not np.array_equal(t.word_permutation(r), identity):
            raise AssertionError("a relator does not trace to the identity everywhere")
    for w in subgroup:
        if t.trace(0, w) != 0:
            raise AssertionError("a subgroup word does not fix coset 0")


def enumerate_cosets(
    group: GroupPresentation,
    subgroup: list[FreeWord] | None = None,
    limit: EnumerationLimit | None = None,
    strategy: str = "hlt",
) -> CosetTable | LimitExceeded:
    """Enumerate cosets of <subgroup> in the presented group.

    Returns a complete, collapsed, breadth-first-renumbered CosetTable,
    or LimitExceeded if the live-coset cap was reached (the index may be
    infinite or merely larger than the cap).
    """
    subgroup = list(subgroup or [])
    limit = limit or EnumerationLimit()
    if strategy not in ("hlt", "felsch"):
        raise EnumerationError(f"unknown strategy {strategy!r}")
    enum = _Enumerator(group, subgroup, limit)
    try:
        if strategy == "hlt":
            enum.run_hlt()
        else:
            enum.run_felsch()
    except _TableFull:
        return LimitExceeded(
            max_cosets=limit.max_cosets,
            live_cosets=enum.n_live,
            reason="live cosets reached the cap" if enum.limit.max_steps is None else "step budget exhausted",
        )
    n, action, bfs_parent, bfs_letter = enum.finish()
    table = CosetTable(
        n_cosets=n,
        n_generators=enum.m,
        action=action,
        subgroup_words=tuple(subgroup),
        complete=True,
        bfs_parent=bfs_parent,
        bfs_letter=bfs_letter,
    )
    _verify_table(table, group, subgroup)
    return table


def group_order(group: GroupPresentation, limit: EnumerationLimit | None = None,
                strategy: str = "hlt") -> int | LimitExceeded:
    """Order of the presented group via enumeration over the trivial subgroup."""
    result = enumerate_cosets(group, [], limit, strategy)
    if isinstance(result, LimitExceeded):
        return result
    return result.n_cosets


def trace(t: CosetTable, start: int, w: FreeWord) -> int:
    return t.trace(start, w)
