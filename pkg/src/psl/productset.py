"""Product sets, boundary fibers, and small-set isoperimetric search.

For finite subsets B, C of a group: the product set BC, the fiber of a point
x (the number of pairs (b, c) with bc = x, equal to |B intersect xC^-1|), and
the defect |BC| - |B|. The searches minimize the defect over subsets of a
declared finite universe, or enumerate subsets whose product stays under a
threshold. Results are exhaustive over that universe only; no claim is made
about sets reaching outside it, and reports must say so.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .groups import Element, Group


@dataclass(frozen=True)
class ProductStats:
    b_size: int
    c_size: int
    product_size: int
    defect: int
    boundary_size: int
    fiber_profile: tuple[int, ...]
    identity_fiber: int | None
    product: frozenset
    boundary: frozenset
    fibers: dict


def product_set(model: Group, B, C) -> set:
    return {model.multiply(b, c) for b in B for c in C}


def fiber_counts(model: Group, B, C) -> dict:
    """Pair counts per product point; values sum to |B| * |C|."""
    fibers: dict[Element, int] = {}
    for b in set(B):
        for c in set(C):
            x = model.multiply(b, c)
            fibers[x] = fibers.get(x, 0) + 1
    return fibers


def product_stats(model: Group, B, C) -> ProductStats:
    Bs, Cs = set(B), set(C)
    fibers = fiber_counts(model, Bs, Cs)
    product = frozenset(fibers)
    boundary = frozenset(x for x in product if x not in Bs)
    profile = tuple(sorted(fibers.values()))
    ident = model.identity()
    return ProductStats(
        b_size=len(Bs),
        c_size=len(Cs),
        product_size=len(product),
        defect=len(product) - len(Bs),
        boundary_size=len(boundary),
        fiber_profile=profile,
        identity_fiber=fibers.get(ident),
        product=product,
        boundary=boundary,
        fibers=fibers,
    )


@dataclass(frozen=True)
class KappaResult:
    mode: str  # "minimize" or "threshold"
    k: int
    universe_size: int
    best_defect: int | None
    best_product_size: int | None
    witnesses: tuple[frozenset, ...]
    candidates_checked: int
    nodes: int
    truncated: bool
    threshold: int | None = None


def _prepare(model: Group, C, universe):
    U = []
    seen = set()
    for el in universe:
        if el not in seen:
            seen.add(el)
            U.append(el)
    U.sort(key=model.sort_key)
    index: dict[Element, int] = {}
    extended: list[Element] = []

    def bit(el) -> int:
        if el not in index:
            index[el] = len(extended)
            extended.append(el)
        return 1 << index[el]

    selfbit = [bit(u) for u in U]
    colmask = []
    for u in U:
        m = 0
        for c in C:
            m |= bit(model.multiply(u, c))
        colmask.append(m)
    return U, selfbit, colmask


def kappa_search(
    model: Group,
    C,
    k: int,
    universe,
    threshold: int | None = None,
    witness_filter=None,
    max_witnesses: int = 10000,
) -> KappaResult:
    """Branch-and-bound over size-k subsets of the universe.

    minimize mode (threshold None): find the minimum of |BC| - |B| and every
    subset attaining it. threshold mode: collect every subset with
    |BC| <= threshold (after witness_filter, if given).

    Both lower bounds used for pruning assume the identity lies in C, which
    makes B a subset of BC; they are skipped otherwise. The search visits the
    whole universe either way, so results are exhaustive within it.
    """
    Cs = set(C)
    U, selfbit, colmask = _prepare(model, Cs, universe)
    n = len(U)
    if not (0 < k <= n):
        raise ValueError(f"subset size {k} out of range for universe of {n}")
    identity_in_c = model.identity() in Cs
    suffix_self = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_self[i] = suffix_self[i + 1] | selfbit[i]

    mode = "minimize" if threshold is None else "threshold"
    incumbent = None if mode == "minimize" else threshold - k
    witnesses: list[frozenset] = []
    stats = {"nodes": 0, "checked": 0, "truncated": False}

    def leaf(bmask: int, pmask: int) -> None:
        stats["checked"] += 1
        defect = pmask.bit_count() - k
        nonlocal incumbent
        if mode == "minimize":
            if incumbent is None or defect < incumbent:
                incumbent = defect
                witnesses.clear()
            elif defect > incumbent:
                return
        elif defect > incumbent:
            return
        B = frozenset(U[i] for i in range(n) if bmask >> index_of[i] & 1)
        if witness_filter is not None and not witness_filter(B):
            return
        if len(witnesses) < max_witnesses:
            witnesses.append(B)
        else:
            stats["truncated"] = True

    # bit position of each universe element, for decoding leaf masks
    index_of = [selfbit[i].bit_length() - 1 for i in range(n)]

    def walk(start: int, chosen: int, bmask: int, pmask: int) -> None:
        stats["nodes"] += 1
        m = k - chosen
        if m == 0:
            leaf(bmask, pmask)
            return
        if n - start < m:
            return
        if identity_in_c and incumbent is not None:
            lb = pmask.bit_count()
            pool_in_p = 0
            for i in range(start, n):
                if selfbit[i] & pmask:
                    pool_in_p += 1
            lb += max(0, m - pool_in_p)
            uncoverable = (pmask & ~(bmask | suffix_self[start])).bit_count()
            if max(lb - k, uncoverable) > incumbent:
                return
        elif incumbent is not None and pmask.bit_count() - k > incumbent:
            return
        for i in range(start, n - m + 1):
            walk(i + 1, chosen + 1, bmask | selfbit[i], pmask | colmask[i])

    walk(0, 0, 0, 0)
    best_defect = None
    best_product = None
    if mode == "minimize" and incumbent is not None and witnesses:
        best_defect = incumbent
        best_product = incumbent + k
    witnesses.sort(key=lambda B: sorted(model.sort_key(b) for b in B))
    return KappaResult(
        mode=mode,
        k=k,
        universe_size=n,
        best_defect=best_defect,
        best_product_size=best_product,
        witnesses=tuple(witnesses),
        candidates_checked=stats["checked"],
        nodes=stats["nodes"],
        truncated=stats["truncated"],
        threshold=threshold,
    )


def kappa_exhaustive(model: Group, C, k: int, universe) -> tuple[int, list[frozenset]]:
    """Plain combinations scan; the oracle the pruned search is tested against."""
    U = sorted(set(universe), key=model.sort_key)
    if not (0 < k <= len(U)):
        raise ValueError(f"subset size {k} out of range for universe of {len(U)}")
    best = None
    atoms: list[frozenset] = []
    for combo in combinations(U, k):
        size = len(product_set(model, combo, C))
        defect = size - k
        if best is None or defect < best:
            best = defect
            atoms = [frozenset(combo)]
        elif defect == best:
            atoms.append(frozenset(combo))
    atoms.sort(key=lambda B: sorted(model.sort_key(b) for b in B))
    return best, atoms


def normalize_translates(model: Group, sets) -> list[frozenset]:
    """Canonical representative of each left-translation class.

    Defects are invariant under B -> g^-1 B, so minimizers come in translate
    families; reporting one member per family (the lexicographically least
    translate, which always contains the identity) keeps output readable.
    """
    canon: set[frozenset] = set()
    for B in sets:
        candidates = []
        for a in B:
            shift = model.inverse(a)
            translated = frozenset(model.multiply(shift, b) for b in B)
            candidates.append(translated)
        best = min(candidates, key=lambda t: sorted(model.sort_key(x) for x in t))
        canon.add(best)
    return sorted(canon, key=lambda t: sorted(model.sort_key(x) for x in t))
