"""Collision graphs of product sets and their cycle bookkeeping.

The graph on B (with respect to C) joins b and b' when their translates bC
and b'C share a point. Every edge {b, b'} is witnessed by pairs (h, h') in
C x C with bh = b'h'; a cycle of length n therefore carries tuples of 2n
C-entries, two per edge. Walking the cycle the other way, or starting at a
different corner, permutes a tuple without changing its meaning, so tuples
are grouped into closure classes and each class is summarized by the relator
word r = h_1 h'_1^-1 h_2 h'_2^-1 ... that the cycle forces on the group.

The formal enumeration works over C = (e, x, y) in the free group; concrete
graphs work over any model from the groups module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .groups import Element, Group
from .words import Word, free_reduce, invert_word

FORMAL_C: tuple[Word, ...] = ("", "x", "y")


# ---------------------------------------------------------------------------
# Tuples along cycles


def block_rotations(t: tuple) -> list[tuple]:
    """Shift the starting edge: rotate by whole (h, h') blocks."""
    if len(t) % 2 != 0:
        raise ValueError("cycle tuple must have even length")
    return [t[2 * i :] + t[: 2 * i] for i in range(len(t) // 2)]


def tuple_closure(t: tuple) -> set[tuple]:
    """All tuples describing the same cycle: rotations, and rotations of the
    reversed traversal (plain tuple reversal swaps both edge order and the
    h/h' roles at once)."""
    out = set(block_rotations(t))
    out.update(block_rotations(tuple(reversed(t))))
    return out


def canonical_tuple(t: tuple) -> tuple:
    return min(tuple_closure(t))


def tuple_relator(t: tuple[Word, ...]) -> Word:
    """The word h_1 h'_1^-1 h_2 h'_2^-1 ... for a tuple of free-group entries."""
    word = ""
    for i in range(0, len(t), 2):
        word += t[i] + invert_word(t[i + 1])
    return free_reduce(word)


def tuple_relator_in_model(model: Group, t: tuple) -> Element:
    acc = model.identity()
    for i in range(0, len(t), 2):
        acc = model.multiply(acc, t[i])
        acc = model.multiply(acc, model.inverse(t[i + 1]))
    return acc


def coincidence_count(t: tuple) -> int:
    """Number of corners where the incoming h' equals the outgoing h."""
    n = len(t) // 2
    return sum(1 for i in range(n) if t[2 * i + 1] == t[(2 * i + 2) % (2 * n)])


def classify_cycle(t: tuple) -> str:
    """Type of a cycle tuple: "i", "ii", or "mixed".

    Triangles: type (i) has a coincidence at every corner, type (ii) at none.
    Squares: type (i) has exactly one, type (ii) none. Everything else is
    "mixed"; in a triangle-free graph squares are never mixed, because two or
    more coincidences force a chord and the chord makes a triangle.
    """
    n = len(t) // 2
    c = coincidence_count(t)
    if n == 3:
        if c == 3:
            return "i"
        return "ii" if c == 0 else "mixed"
    if n == 4:
        if c == 1:
            return "i"
        return "ii" if c == 0 else "mixed"
    return "ii" if c == 0 else "mixed"


def proper_tuples(n: int, colors: int = 3) -> list[tuple[int, ...]]:
    """Index tuples of length 2n with cyclically adjacent entries distinct.

    Adjacent-distinct encodes: the two C-entries of one edge differ (a
    collision needs two different elements), and no corner coincidence, so
    these are exactly the type (ii) candidate tuples.
    """
    length = 2 * n
    out: list[tuple[int, ...]] = []
    stack: list[int] = []

    def extend() -> None:
        if len(stack) == length:
            if stack[-1] != stack[0]:
                out.append(tuple(stack))
            return
        for c in range(colors):
            if stack and stack[-1] == c:
                continue
            stack.append(c)
            extend()
            stack.pop()

    extend()
    return out


@dataclass(frozen=True)
class CycleClassRow:
    index: int
    canonical: tuple[int, ...]
    relator: Word
    closure_size: int


def cycle_class_table(n: int, c_elements: tuple[Word, ...] = FORMAL_C) -> list[CycleClassRow]:
    """Type (ii) cycle classes for cycles of length n, in canonical order.

    Classes are the closure orbits of the proper tuples; rows are sorted by
    the canonical (minimum) index tuple and numbered from 1.
    """
    classes: set[tuple[int, ...]] = set()
    for t in proper_tuples(n, len(c_elements)):
        classes.add(canonical_tuple(t))
    rows = []
    for i, canon in enumerate(sorted(classes), start=1):
        entries = tuple(c_elements[j] for j in canon)
        rows.append(
            CycleClassRow(
                index=i,
                canonical=canon,
                relator=tuple_relator(entries),
                closure_size=len(tuple_closure(canon)),
            )
        )
    return rows


# ---------------------------------------------------------------------------
# Concrete collision graphs


@dataclass
class ProductGraph:
    vertices: tuple
    edges: frozenset  # of (i, j) index pairs, i < j
    labels: dict  # (i, j) -> tuple of shared product points
    adjacency: list = field(default_factory=list)

    def __post_init__(self):
        if not self.adjacency:
            adj = [set() for _ in self.vertices]
            for i, j in self.edges:
                adj[i].add(j)
                adj[j].add(i)
            self.adjacency = adj

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def triangles(self) -> list[tuple[int, int, int]]:
        out = []
        for i, j in sorted(self.edges):
            for k in sorted(self.adjacency[i] & self.adjacency[j]):
                if k > j:
                    out.append((i, j, k))
        return out

    def squares(self) -> list[tuple[int, int, int, int]]:
        """Four-cycles a-b-c-d, one representative per cycle, chords ignored."""
        seen = set()
        out = []
        n = len(self.vertices)
        for b in range(n):
            for d in range(b + 1, n):
                common = sorted(self.adjacency[b] & self.adjacency[d])
                for a, c in combinations(common, 2):
                    key = frozenset(((a, b), (b, c), (c, d), (d, a)))
                    norm = frozenset((min(p), max(p)) for p in key)
                    if norm in seen:
                        continue
                    seen.add(norm)
                    out.append(_canonical_cycle((a, b, c, d)))
        return sorted(set(out))

    def has_chord(self, cycle: tuple[int, ...]) -> bool:
        n = len(cycle)
        ring = {frozenset((cycle[i], cycle[(i + 1) % n])) for i in range(n)}
        for u, v in combinations(cycle, 2):
            if frozenset((u, v)) not in ring and v in self.adjacency[u]:
                return True
        return False


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    n = len(cycle)
    best = None
    for seq in (cycle, tuple(reversed(cycle))):
        for s in range(n):
            cand = seq[s:] + seq[:s]
            if best is None or cand < best:
                best = cand
    return best


def build_graph(model: Group, B, C) -> ProductGraph:
    verts = tuple(sorted(set(B), key=model.sort_key))
    translates = [frozenset(model.multiply(b, c) for c in C) for b in verts]
    edges = set()
    labels = {}
    for i, j in combinations(range(len(verts)), 2):
        shared = translates[i] & translates[j]
        if shared:
            edges.add((i, j))
            labels[(i, j)] = tuple(sorted(shared, key=model.sort_key))
    return ProductGraph(vertices=verts, edges=frozenset(edges), labels=labels)


def cycle_tuples(model: Group, graph: ProductGraph, cycle: tuple[int, ...], C) -> list[tuple]:
    """Every C-entry tuple realizing a given vertex cycle.

    Edge (b, b') with shared point x contributes the block (b^-1 x, b'^-1 x);
    edges with several shared points yield several tuples.
    """
    C_set = set(C)
    n = len(cycle)
    per_edge: list[list[tuple]] = []
    for i in range(n):
        u, v = cycle[i], cycle[(i + 1) % n]
        key = (u, v) if (u, v) in graph.labels else (v, u)
        options = []
        for x in graph.labels[key]:
            h = model.multiply(model.inverse(graph.vertices[u]), x)
            hp = model.multiply(model.inverse(graph.vertices[v]), x)
            if h in C_set and hp in C_set:
                options.append((h, hp))
        per_edge.append(options)
    out: list[tuple] = []

    def assemble(i: int, acc: tuple) -> None:
        if i == n:
            out.append(acc)
            return
        for h, hp in per_edge[i]:
            assemble(i + 1, acc + (h, hp))

    assemble(0, ())
    return out


def cayley_comparison(model: Group, B, C) -> dict:
    """Compare the collision graph with the difference-set Cayley construction.

    S = {h h'^-1 : h != h' in C}. An edge {b, b'} exists exactly when
    b^-1 b' lies in S, so the edge sets must always agree (this is a
    construction self-check). When the products h h'^-1 are pairwise
    distinct, every edge carries exactly one shared point and the graph is an
    induced subgraph of the Cayley graph of S, with no multi-edges.
    """
    graph = build_graph(model, B, C)
    C_list = sorted(set(C), key=model.sort_key)
    s_products = []
    for h in C_list:
        for hp in C_list:
            if h != hp:
                s_products.append(model.multiply(h, model.inverse(hp)))
    S = set(s_products)
    cayley_edges = set()
    for i, j in combinations(range(len(graph.vertices)), 2):
        diff = model.multiply(model.inverse(graph.vertices[i]), graph.vertices[j])
        if diff in S:
            cayley_edges.add((i, j))
    max_labels = max((len(v) for v in graph.labels.values()), default=0)
    return {
        "edges_match": cayley_edges == set(graph.edges),
        "s_size": len(S),
        "s_products_distinct": len(S) == len(s_products),
        "max_shared_points_per_edge": max_labels,
        "simple_cayley_embedding": len(S) == len(s_products) and max_labels <= 1,
        "graph": graph,
    }


# ---------------------------------------------------------------------------
# Pattern search

K4 = (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
CYCLE4 = (4, ((0, 1), (1, 2), (2, 3), (0, 3)))
TRIANGLE_PENDANT = (4, ((0, 1), (1, 2), (0, 2), (0, 3)))
GAMMA1 = (5, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4)))
GAMMA2 = (7, ((0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (1, 4), (0, 6), (2, 6)))
GAMMA3 = (8, ((0, 1), (0, 2), (2, 3), (1, 3), (0, 4), (4, 5), (1, 5), (0, 6), (6, 7), (1, 7)))
GAMMA4 = (6, ((0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (1, 4), (2, 3)))
GAMMA5 = (6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)))

PATTERNS = {
    "k4": K4,
    "c4": CYCLE4,
    "triangle-pendant": TRIANGLE_PENDANT,
    "gamma1": GAMMA1,
    "gamma2": GAMMA2,
    "gamma3": GAMMA3,
    "gamma4": GAMMA4,
    "gamma5": GAMMA5,
}


def find_pattern(
    graph: ProductGraph,
    pattern: tuple[int, tuple],
    induced: bool = False,
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """Embeddings of a small pattern graph into the collision graph.

    Plain subgraph embeddings by default (host may have extra edges between
    the image vertices); induced=True forbids extra edges. Returns vertex
    assignments as tuples; empty list means the pattern does not occur.
    """
    size, edges = pattern
    pat_adj = [set() for _ in range(size)]
    for u, v in edges:
        pat_adj[u].add(v)
        pat_adj[v].add(u)
    host_n = len(graph.vertices)
    assignment: list[int] = []
    used: set[int] = set()
    found: list[tuple[int, ...]] = []

    def backtrack() -> bool:
        if limit is not None and len(found) >= limit:
            return True
        p = len(assignment)
        if p == size:
            found.append(tuple(assignment))
            return limit is not None and len(found) >= limit
        for h in range(host_n):
            if h in used:
                continue
            if graph.degree(h) < len(pat_adj[p]):
                continue
            ok = True
            for q in range(p):
                pat_edge = q in pat_adj[p]
                host_edge = assignment[q] in graph.adjacency[h]
                if pat_edge and not host_edge:
                    ok = False
                    break
                if induced and not pat_edge and host_edge:
                    ok = False
                    break
            if not ok:
                continue
            assignment.append(h)
            used.add(h)
            if backtrack():
                return True
            assignment.pop()
            used.remove(h)
        return False

    backtrack()
    return found


# ---------------------------------------------------------------------------
# Export


def graph_to_dot(model: Group, graph: ProductGraph) -> str:
    lines = ["graph product_set {"]
    for i, v in enumerate(graph.vertices):
        lines.append(f'  n{i} [label="{model.render(v)}"];')
    for i, j in sorted(graph.edges):
        shared = ",".join(model.render(x) for x in graph.labels[(i, j)])
        lines.append(f'  n{i} -- n{j} [label="{shared}"];')
    lines.append("}")
    return "\n".join(lines)


def graph_to_dict(model: Group, graph: ProductGraph) -> dict:
    return {
        "vertices": [model.render(v) for v in graph.vertices],
        "edges": [
            {
                "ends": [i, j],
                "shared_points": [model.render(x) for x in graph.labels[(i, j)]],
            }
            for i, j in sorted(graph.edges)
        ],
    }
