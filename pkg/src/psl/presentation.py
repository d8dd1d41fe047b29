"""Finitely presented groups: abelianization, coset enumeration, relator triage.

The classifier implements a short chain of syntactic tests, each backed by a
group-theoretic argument that is valid inside any torsion-free overgroup
where the generators are nontrivial and distinct. A relator is marked:

  "T"  it forces a torsion element (a nontrivial g with g^k = 1, k >= 2),
  "A"  it forces the generated subgroup to be abelian,
  "*"  neither argument applies; the relator needs individual treatment.

Marks are conservative: "*" claims nothing. The degenerate flag on "A" marks
relators that additionally collapse the two generators into one (x = y or
x = 1 up to inversion), which the set constraints elsewhere rule out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .words import (
    Word,
    cyclic_reduce,
    expanded_alphabet,
    free_reduce,
    letter_count,
    proper_power,
    rotations,
    validate_word,
    word_generators,
)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        for rel in self.relators:
            validate_word(rel, self.generators)


# ---------------------------------------------------------------------------
# Abelianization


def exponent_vector(w: Word, generators: tuple[str, ...]) -> tuple[int, ...]:
    """Net exponent of each generator in w."""
    totals = {g: 0 for g in generators}
    for ch in w:
        totals[ch.lower()] += -1 if ch.isupper() else 1
    return tuple(totals[g] for g in generators)


def exponent_matrix(p: Presentation) -> list[list[int]]:
    return [list(exponent_vector(rel, p.generators)) for rel in p.relators]


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith form: nonnegative, each dividing the next.

    Plain integer row/column reduction; fine for the tiny matrices that
    presentations on two generators produce.
    """
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    t = 0
    while True:
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        A[t], A[i0] = A[i0], A[t]
        for row in A:
            row[t], row[j0] = row[j0], row[t]
        dirty = False
        for i in range(m):
            if i != t and A[i][t] != 0:
                q = A[i][t] // A[t][t]
                for j in range(n):
                    A[i][j] -= q * A[t][j]
                if A[i][t] != 0:
                    dirty = True
        for j in range(n):
            if j != t and A[t][j] != 0:
                q = A[t][j] // A[t][t]
                for i in range(m):
                    A[i][j] -= q * A[i][t]
                if A[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        fix = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t] != 0:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            for j in range(n):
                A[t][j] += A[fix][j]
            continue
        t += 1
    return [abs(A[k][k]) for k in range(t)]


def abelian_invariants(p: Presentation) -> tuple[tuple[int, ...], int]:
    """(torsion factors > 1, free rank) of the abelianized group."""
    diag = smith_normal_form(exponent_matrix(p))
    torsion = tuple(d for d in diag if d > 1)
    free_rank = len(p.generators) - len(diag)
    return torsion, free_rank


def abelianization_determinant(p: Presentation) -> int:
    """Determinant of the exponent matrix; zero means infinite abelianization.

    Only defined when the matrix is square (two relators on two generators is
    the case this package cares about).
    """
    M = exponent_matrix(p)
    if len(M) != len(p.generators):
        raise ValueError("determinant needs as many relators as generators")
    if len(M) == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if len(M) == 1:
        return M[0][0]
    raise ValueError("only 1x1 and 2x2 exponent matrices supported")


# ---------------------------------------------------------------------------
# Coset enumeration (HLT style, with coincidence handling)


class _CosetCap(Exception):
    pass


class CosetTable:
    """Flat coset table over the expanded alphabet, with union-find labels.

    Rows are allocated, never freed; a row is live while find(c) == c. All
    reads go through find so stale entries resolve to the surviving label.
    """

    def __init__(self, generators: tuple[str, ...], max_cosets: int):
        self.letters = expanded_alphabet(generators)
        self.width = len(self.letters)
        self.col = {ch: i for i, ch in enumerate(self.letters)}
        self.inv_col = [self.col[ch.swapcase()] for ch in self.letters]
        self.max_cosets = max_cosets
        self.table: list[int] = [-1] * self.width
        self.parent: list[int] = [0]

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def entry(self, c: int, col: int) -> int:
        d = self.table[c * self.width + col]
        return -1 if d < 0 else self.find(d)

    def _new_coset(self) -> int:
        if len(self.parent) >= self.max_cosets:
            raise _CosetCap
        d = len(self.parent)
        self.parent.append(d)
        self.table.extend([-1] * self.width)
        return d

    def define(self, c: int, col: int) -> int:
        d = self._new_coset()
        self.table[c * self.width + col] = d
        self.table[d * self.width + self.inv_col[col]] = c
        return d

    def set_edge(self, c: int, col: int, d: int) -> None:
        c, d = self.find(c), self.find(d)
        cur = self.entry(c, col)
        if cur >= 0:
            if cur != d:
                self.unify(cur, d)
            return
        self.table[c * self.width + col] = d
        back = self.entry(d, self.inv_col[col])
        if back < 0:
            self.table[d * self.width + self.inv_col[col]] = c
        elif back != c:
            self.unify(back, c)

    def unify(self, a: int, b: int) -> None:
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.parent[b] = a
            for col in range(self.width):
                d = self.table[b * self.width + col]
                if d < 0:
                    continue
                d = self.find(d)
                e = self.entry(a, col)
                if e < 0:
                    self.table[a * self.width + col] = d
                    ic = self.inv_col[col]
                    back = self.entry(d, ic)
                    if back < 0:
                        self.table[d * self.width + ic] = a
                    elif back != a:
                        stack.append((back, a))
                elif e != d:
                    stack.append((e, d))

    def scan_and_fill(self, start: int, word: str) -> None:
        f = self.find(start)
        b = f
        i, r = 0, len(word) - 1
        while True:
            while i <= r:
                nxt = self.entry(f, self.col[word[i]])
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > r:
                if f != b:
                    self.unify(f, b)
                return
            while r >= i:
                prv = self.entry(b, self.col[word[r].swapcase()])
                if prv < 0:
                    break
                b = prv
                r -= 1
            if r < i:
                self.unify(f, b)
                return
            if r == i:
                self.set_edge(f, self.col[word[i]], b)
                return
            f = self.find(self.define(f, self.col[word[i]]))
            i += 1

    def live_cosets(self) -> list[int]:
        return [c for c in range(len(self.parent)) if self.find(c) == c]

    def trace(self, start: int, word: str) -> int:
        c = self.find(start)
        for ch in word:
            c = self.entry(c, self.col[ch])
            if c < 0:
                return -1
        return c

    def permutation(self, letter: str) -> dict[int, int]:
        col = self.col[letter]
        return {c: self.entry(c, col) for c in self.live_cosets()}

    def permutation_order(self, letter: str) -> int:
        perm = self.permutation(letter)
        seen: set[int] = set()
        orders = [1]
        for start in perm:
            if start in seen:
                continue
            length = 0
            c = start
            while c not in seen:
                seen.add(c)
                c = perm[c]
                length += 1
            orders.append(length)
        return lcm(*orders)

    def verify(self, relators: list[Word]) -> bool:
        live = self.live_cosets()
        idx = set(live)
        for c in live:
            for col in range(self.width):
                d = self.entry(c, col)
                if d < 0 or d not in idx:
                    return False
                if self.entry(d, self.inv_col[col]) != c:
                    return False
            for rel in relators:
                if self.trace(c, rel) != c:
                    return False
        for letter in self.letters:
            perm = self.permutation(letter)
            if set(perm.values()) != idx:
                return False
        return True


@dataclass
class ToddCoxeterResult:
    completed: bool
    coset_count: int | None
    max_cosets: int
    generator_orders: dict[str, int] = field(default_factory=dict)
    table: CosetTable | None = None


def todd_coxeter(
    p: Presentation, max_cosets: int = 10**4, reverse_relators: bool = False
) -> ToddCoxeterResult:
    """Enumerate cosets of the trivial subgroup; the count is the group order.

    Returns completed=False when the table would exceed max_cosets, which
    proves nothing about the group (it may be finite but large).
    """
    rels = [free_reduce(r) for r in p.relators]
    rels = [r for r in rels if r]
    if reverse_relators:
        rels = rels[::-1]
    ct = CosetTable(p.generators, max_cosets)
    try:
        cid = 0
        while cid < len(ct.parent):
            if ct.find(cid) == cid:
                for rel in rels:
                    ct.scan_and_fill(cid, rel)
                    if ct.find(cid) != cid:
                        break
                if ct.find(cid) == cid:
                    for col in range(ct.width):
                        if ct.entry(cid, col) < 0:
                            ct.define(cid, col)
            cid += 1
    except _CosetCap:
        return ToddCoxeterResult(False, None, max_cosets)
    if not ct.verify(rels):
        raise RuntimeError("coset table failed verification; enumeration bug")
    orders = {g: ct.permutation_order(g) for g in p.generators}
    return ToddCoxeterResult(True, len(ct.live_cosets()), max_cosets, orders, ct)


def group_order(p: Presentation, max_cosets: int = 10**4) -> ToddCoxeterResult:
    """Coset enumeration run under two relator orders; results must agree."""
    first = todd_coxeter(p, max_cosets, reverse_relators=False)
    second = todd_coxeter(p, max_cosets, reverse_relators=True)
    if first.completed and second.completed and first.coset_count != second.coset_count:
        raise RuntimeError(
            f"coset enumeration strategies disagree: {first.coset_count} vs {second.coset_count}"
        )
    if first.completed:
        return first
    return second


# ---------------------------------------------------------------------------
# Relator classification


@dataclass(frozen=True)
class RelatorClass:
    mark: str  # "T", "A", or "*"
    rule: str
    degenerate: bool = False
    torsion_base: str | None = None
    torsion_exponent: int | None = None

    @property
    def table_mark(self) -> str:
        return self.mark


def classify_relator(w: Word, generators: tuple[str, ...] = ("x", "y")) -> RelatorClass:
    """Run the syntactic chain on one relator.

    Order matters: the two-letter test must precede the single-occurrence
    test so that x*y(+-1) keeps its degenerate flag, and the power test runs
    over all rotations because a conjugate relator forces the same facts.
    """
    w = cyclic_reduce(free_reduce(w))
    if not w:
        raise ValueError("relator is trivial after reduction")
    validate_word(w, generators)

    # Proper power w ~ base^k: torsion-free means base^k = 1 forces base = 1,
    # so the relator inherits whatever the base forces; a single-letter base
    # is outright torsion.
    for rot in rotations(w):
        base, k = proper_power(rot)
        if k >= 2:
            if len(base) == 1:
                return RelatorClass(
                    "T",
                    f"power:{base}^{k}",
                    torsion_base=base.lower(),
                    torsion_exponent=k,
                )
            inner = classify_relator(base, generators)
            return RelatorClass(
                inner.mark,
                f"power:{k}->" + inner.rule,
                degenerate=inner.degenerate,
                torsion_base=inner.torsion_base,
                torsion_exponent=inner.torsion_exponent,
            )

    # Two distinct letters: x = y or x = y^-1, a cyclic (hence abelian)
    # subgroup, but one that merges the generators.
    if len(w) == 2 and w[0].lower() != w[1].lower():
        return RelatorClass("A", "two-letter", degenerate=True)

    # One generator appearing exactly once is a word in the other, so the
    # subgroup is cyclic.
    for g in generators:
        if letter_count(w, g) == 1:
            return RelatorClass("A", f"single-occurrence:{g}")

    # Commutator up to rotation: the generators commute.
    if len(w) == 4:
        for rot in rotations(w):
            if (
                rot[2] == rot[0].swapcase()
                and rot[3] == rot[1].swapcase()
                and rot[0].lower() != rot[1].lower()
            ):
                return RelatorClass("A", "commutator")

    # Power tail v^k * g with k >= 2 where the generator other than g occurs
    # exactly once in v. Then v is conjugate to a word u with g's generator
    # only at the tail, g^-1 = u^k after the same conjugation, so g lies in
    # the cyclic group <u> and the other generator does too.
    gens_present = word_generators(w)
    for rot in rotations(w):
        tail = rot[-1]
        head = rot[:-1]
        base, k = proper_power(head)
        if k < 2:
            continue
        other = [g for g in gens_present if g != tail.lower()]
        if len(other) == 1 and letter_count(base, other[0]) == 1:
            return RelatorClass("A", f"power-tail:{base}^{k}*{tail}")

    return RelatorClass("*", "unresolved")
