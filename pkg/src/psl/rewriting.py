"""String rewriting and Knuth-Bendix completion for group presentations.

Rules rewrite words over an alphabet where each generator letter is followed
by its uppercase inverse (order "xXyY" gives shortlex x < X < y < Y). Every
rule (l, r) produced here satisfies l = r in the presented group, because the
seed rules do and critical-pair resolution preserves it. So rewriting a word
to the empty string proves it trivial in the group even when completion was
cut off before confluence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Word, expanded_alphabet, free_reduce, shortlex_key

Rule = tuple[str, str]

DEFAULT_MAX_RULES = 10**4
DEFAULT_MAX_PASSES = 50


def rewrite(w: Word, rules: list[Rule]) -> Word:
    """Apply rules left to right until no left-hand side occurs in w.

    Terminates because every rule replaces a substring by a shortlex-smaller
    one. The result depends on rule order for non-confluent systems, which is
    why rule lists are kept sorted.
    """
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            if lhs in w:
                w = w.replace(lhs, rhs)
                changed = True
    return w


@dataclass
class RewriteSystem:
    """Completion output: oriented rules plus status flags."""

    alphabet: str
    rules: list[Rule]
    confluent: bool
    passes_used: int
    rule_cap_hit: bool = False
    pass_cap_hit: bool = False
    goals_proved: frozenset[str] = field(default_factory=frozenset)

    def reduce(self, w: Word) -> Word:
        return rewrite(w, self.rules)

    def proves_trivial(self, w: Word) -> bool:
        """Whether the current rules rewrite w to the identity."""
        return self.reduce(free_reduce(w)) == ""


def _orient(u: str, v: str, alphabet: str) -> Rule | None:
    ku, kv = shortlex_key(u, alphabet), shortlex_key(v, alphabet)
    if ku == kv:
        return None
    return (u, v) if ku > kv else (v, u)


def _rule_sort_key(rule: Rule, alphabet: str):
    return shortlex_key(rule[0], alphabet), rule[0], rule[1]


def _interreduce(rules: list[Rule], alphabet: str) -> list[Rule]:
    """Reduce every rule by the others until the set is stable."""
    work = sorted(set(rules), key=lambda r: _rule_sort_key(r, alphabet))
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            lhs, rhs = work[i]
            others = work[:i] + work[i + 1 :]
            l2 = rewrite(lhs, others)
            r2 = rewrite(rhs, others)
            if (l2, r2) == (lhs, rhs):
                continue
            changed = True
            work.pop(i)
            oriented = _orient(l2, r2, alphabet)
            if oriented is not None and oriented not in work:
                work.append(oriented)
            work.sort(key=lambda r: _rule_sort_key(r, alphabet))
            break
    return work


def _superpositions(r1: Rule, r2: Rule) -> list[tuple[str, str]]:
    """Equations from overlaps of two left-hand sides.

    Overlap: a proper suffix of l1 equals a proper prefix of l2; the combined
    word reduces two ways. Containment: l2 inside l1 likewise.
    """
    (l1, a1), (l2, a2) = r1, r2
    out: list[tuple[str, str]] = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            out.append((a1 + l2[k:], l1[:-k] + a2))
    if len(l2) < len(l1):
        start = 0
        while True:
            i = l1.find(l2, start)
            if i < 0:
                break
            out.append((a1, l1[:i] + a2 + l1[i + len(l2) :]))
            start = i + 1
    return out


def knuth_bendix(
    relators: list[Word],
    generators: tuple[str, ...],
    max_rules: int = DEFAULT_MAX_RULES,
    max_passes: int = DEFAULT_MAX_PASSES,
    goal_words: list[Word] | None = None,
) -> RewriteSystem:
    """Complete the rewriting system of <generators | relators>.

    Seeds with free cancellation (gG -> e, Gg -> e) and one rule per relator,
    then resolves critical pairs pass by pass. Stops early with confluent=True
    when a pass adds nothing, with caps flagged when limits are hit, or as
    soon as every goal word rewrites to the identity (goal short-circuit; the
    system is then usable as a proof device but not as a normal-form oracle).
    """
    alphabet = expanded_alphabet(generators)
    seed: list[Rule] = []
    for g in generators:
        seed.append((g + g.upper(), ""))
        seed.append((g.upper() + g, ""))
    for rel in relators:
        w = free_reduce(rel)
        oriented = _orient(w, "", alphabet)
        if oriented is not None:
            seed.append(oriented)
    rules = _interreduce(seed, alphabet)
    goals = [free_reduce(g) for g in (goal_words or [])]

    def proved(current: list[Rule]) -> frozenset[str]:
        return frozenset(g for g in goals if rewrite(g, current) == "")

    if goals and len(proved(rules)) == len(goals):
        return RewriteSystem(alphabet, rules, False, 0, goals_proved=proved(rules))

    for pass_num in range(1, max_passes + 1):
        live = list(rules)
        added = False
        equations: set[tuple[str, str]] = set()
        for r1 in rules:
            for r2 in rules:
                equations.update(_superpositions(r1, r2))
        for u, v in sorted(equations):
            a = rewrite(u, live)
            b = rewrite(v, live)
            if a == b:
                continue
            oriented = _orient(a, b, alphabet)
            if oriented is None or oriented in live:
                continue
            live.append(oriented)
            added = True
            if len(live) > max_rules:
                final = _interreduce(live, alphabet)
                return RewriteSystem(
                    alphabet,
                    final,
                    False,
                    pass_num,
                    rule_cap_hit=True,
                    goals_proved=proved(final),
                )
        if not added:
            return RewriteSystem(alphabet, rules, True, pass_num - 1, goals_proved=proved(rules))
        rules = _interreduce(live, alphabet)
        if goals and len(proved(rules)) == len(goals):
            return RewriteSystem(alphabet, rules, False, pass_num, goals_proved=proved(rules))

    return RewriteSystem(
        alphabet, rules, False, max_passes, pass_cap_hit=True, goals_proved=proved(rules)
    )
