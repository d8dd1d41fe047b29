"""Concrete group models sharing one small interface.

Each model exposes identity/multiply/inverse over hashable elements, a table
of named elements for the command line, word evaluation (lowercase letter =
generator, uppercase = its inverse), and breadth-first balls for building
finite search universes. The torsion_free_claimed flag records whether the
model is known torsion-free; consumers that certify anything group-theoretic
must check it rather than assume.
"""

from __future__ import annotations

from .rewriting import RewriteSystem, knuth_bendix
from .words import Word, format_word, free_reduce, invert_word, validate_word

Element = object


class Group:
    """Base class. Subclasses set name, generator data, and the three ops."""

    name: str = "group"
    torsion_free_claimed: bool = False
    generator_names: tuple[str, ...] = ()

    def identity(self) -> Element:
        raise NotImplementedError

    def multiply(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def inverse(self, a: Element) -> Element:
        raise NotImplementedError

    def render(self, a: Element) -> str:
        raise NotImplementedError

    def named_elements(self) -> dict[str, Element]:
        out: dict[str, Element] = {"e": self.identity()}
        for g in self.generator_names:
            out[g] = self.generator(g)
        return out

    def generator(self, name: str) -> Element:
        raise KeyError(name)

    def evaluate_word(self, w: Word) -> Element:
        """Multiply out a word letter by letter."""
        acc = self.identity()
        for ch in w:
            g = self.generator(ch.lower())
            if ch.isupper():
                g = self.inverse(g)
            acc = self.multiply(acc, g)
        return acc

    def ball(self, radius: int, extra_generators: tuple[Element, ...] = ()) -> list[Element]:
        """Elements within word length radius of the identity.

        Deterministic order: by discovery depth, then rendered form.
        """
        step = []
        for g in self.generator_names:
            el = self.generator(g)
            step.append(el)
            step.append(self.inverse(el))
        for el in extra_generators:
            step.append(el)
            step.append(self.inverse(el))
        seen: dict[Element, int] = {self.identity(): 0}
        frontier = [self.identity()]
        for depth in range(1, radius + 1):
            nxt = []
            for a in frontier:
                for g in step:
                    b = self.multiply(a, g)
                    if b not in seen:
                        seen[b] = depth
                        nxt.append(b)
            frontier = nxt
        return sorted(seen, key=lambda el: (seen[el], self.render(el)))

    def sort_key(self, a: Element):
        return self.render(a)


class FreeGroupOfRankTwo(Group):
    """Free group on x, y; elements are reduced words as strings."""

    name = "free2"
    torsion_free_claimed = True
    generator_names = ("x", "y")

    def identity(self) -> str:
        return ""

    def multiply(self, a: str, b: str) -> str:
        return free_reduce(a + b)

    def inverse(self, a: str) -> str:
        return invert_word(a)

    def generator(self, name: str) -> str:
        if name not in self.generator_names:
            raise KeyError(name)
        return name

    def render(self, a: str) -> str:
        return format_word(a)

    def sort_key(self, a: str):
        return (len(a), a)


class IntegerLattice(Group):
    """Z x Z under addition; generators x = (1,0), y = (0,1)."""

    name = "z2"
    torsion_free_claimed = True
    generator_names = ("x", "y")
    _gens = {"x": (1, 0), "y": (0, 1)}

    def identity(self) -> tuple[int, int]:
        return (0, 0)

    def multiply(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def inverse(self, a):
        return (-a[0], -a[1])

    def generator(self, name: str):
        return self._gens[name]

    def render(self, a) -> str:
        return f"({a[0]},{a[1]})"


class KleinBottleGroup(Group):
    """Fundamental group of the Klein bottle on pairs (m, n).

    (m1, n1) * (m2, n2) = (m1 + (-1)**n1 * m2, n1 + n2). Torsion-free and
    non-abelian; u = (0,1) and v = (1,1) satisfy u*u = v*v. The x, y names
    give the semidirect-product coordinates, u and v the two-glide reading.
    """

    name = "klein"
    torsion_free_claimed = True
    generator_names = ("x", "y")
    _gens = {"x": (1, 0), "y": (0, 1), "u": (0, 1), "v": (1, 1)}

    def identity(self) -> tuple[int, int]:
        return (0, 0)

    def multiply(self, a, b):
        m1, n1 = a
        m2, n2 = b
        return (m1 + (m2 if n1 % 2 == 0 else -m2), n1 + n2)

    def inverse(self, a):
        m, n = a
        return (-m if n % 2 == 0 else m, -n)

    def generator(self, name: str):
        return self._gens[name]

    def named_elements(self):
        out = super().named_elements()
        out["u"] = self._gens["u"]
        out["v"] = self._gens["v"]
        return out

    def render(self, a) -> str:
        return f"({a[0]},{a[1]})"


class HeisenbergGroup(Group):
    """Integer Heisenberg group on triples (a, b, c).

    (a,b,c) * (a',b',c') = (a+a', b+b', c+c'+a*b'); torsion-free, nilpotent,
    non-abelian. z = (0,0,1) generates the center.
    """

    name = "heisenberg"
    torsion_free_claimed = True
    generator_names = ("x", "y", "z")
    _gens = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}

    def identity(self):
        return (0, 0, 0)

    def multiply(self, p, q):
        a, b, c = p
        a2, b2, c2 = q
        return (a + a2, b + b2, c + c2 + a * b2)

    def inverse(self, p):
        a, b, c = p
        return (-a, -b, a * b - c)

    def generator(self, name: str):
        return self._gens[name]

    def render(self, a) -> str:
        return f"({a[0]},{a[1]},{a[2]})"


class RewritingQuotient(Group):
    """Finitely presented group via a confluent rewriting system.

    Elements are normal-form words; multiply concatenates and reduces. Only
    built when completion converged, so equality of normal forms is equality
    in the group. Not claimed torsion-free: the presentation may force
    torsion (that is the point of the control runs).
    """

    name = "quotient"
    torsion_free_claimed = False

    def __init__(self, system: RewriteSystem, generators: tuple[str, ...], relators: list[Word]):
        if not system.confluent:
            raise ValueError("rewriting system is not confluent; quotient undefined")
        self.system = system
        self.generator_names = generators
        self.relators = list(relators)
        self.name = "quotient<" + ",".join(relators) + ">"

    def identity(self) -> str:
        return ""

    def multiply(self, a: str, b: str) -> str:
        return self.system.reduce(free_reduce(a + b))

    def inverse(self, a: str) -> str:
        return self.system.reduce(invert_word(a))

    def generator(self, name: str) -> str:
        if name not in self.generator_names:
            raise KeyError(name)
        return self.system.reduce(name)

    def render(self, a: str) -> str:
        return format_word(a)

    def sort_key(self, a: str):
        return (len(a), a)


def instantiate_quotient(
    relators: list[Word],
    generators: tuple[str, ...] | None = None,
    max_rules: int = 10**4,
    max_passes: int = 50,
) -> RewritingQuotient:
    """Build a quotient model, inferring generators from the relators if absent."""
    if generators is None:
        letters = sorted({ch.lower() for rel in relators for ch in rel})
        generators = tuple(letters) if letters else ("x",)
    for rel in relators:
        validate_word(rel, generators)
    system = knuth_bendix(relators, generators, max_rules=max_rules, max_passes=max_passes)
    return RewritingQuotient(system, generators, relators)


_MODELS = {
    "free2": FreeGroupOfRankTwo,
    "free": FreeGroupOfRankTwo,
    "z2": IntegerLattice,
    "lattice": IntegerLattice,
    "klein": KleinBottleGroup,
    "kleinpair": KleinBottleGroup,
    "heisenberg": HeisenbergGroup,
    "heis": HeisenbergGroup,
}


def parse_model(text: str) -> Group:
    """Model from a command-line name.

    Plain names pick a built-in model; "quotient:r1;r2" builds the presented
    group with those relators (must complete to a confluent system).
    """
    key = text.strip().lower()
    if key.startswith("quotient:"):
        spec = text.strip()[len("quotient:") :]
        relators = [r.strip() for r in spec.split(";") if r.strip()]
        if not relators:
            raise ValueError("quotient model needs at least one relator")
        return instantiate_quotient(relators)
    if key in _MODELS:
        return _MODELS[key]()
    raise ValueError(f"unknown group model: {text!r}")


def _parse_coordinates(text: str, model: Group) -> Element:
    inner = text.strip()
    if inner.startswith("(") and inner.endswith(")"):
        inner = inner[1:-1]
    parts = [p.strip() for p in inner.split(",")]
    coords = tuple(int(p) for p in parts)
    ident = model.identity()
    if not isinstance(ident, tuple) or len(coords) != len(ident):
        raise ValueError(f"bad coordinate literal for {model.name}: {text!r}")
    return coords


def parse_element(text: str, model: Group) -> Element:
    """One element literal: a named element, a word, or a coordinate tuple."""
    t = text.strip()
    if not t:
        raise ValueError("empty element literal")
    named = model.named_elements()
    if t in named:
        return named[t]
    if t == "1":
        return model.identity()
    if any(ch.isdigit() or ch in "(,)-" for ch in t):
        return _parse_coordinates(t, model)
    allowed = {n for n in named if len(n) == 1 and n != "e"}
    for ch in t:
        if ch.lower() not in allowed:
            raise ValueError(f"unknown letter {ch!r} in element literal {text!r}")
    acc = model.identity()
    for ch in t:
        g = named[ch.lower()]
        if ch.isupper():
            g = model.inverse(g)
        acc = model.multiply(acc, g)
    return acc


def parse_elements(text: str, model: Group) -> list[Element]:
    """Split a set literal and parse each part.

    Semicolons always separate elements. Commas separate only when the text
    contains no digit, since coordinate tuples use commas internally.
    """
    t = text.strip()
    if t.startswith("{") and t.endswith("}"):
        t = t[1:-1]
    if ";" in t:
        parts = t.split(";")
    elif not any(ch.isdigit() for ch in t):
        parts = t.split(",")
    else:
        parts = _split_coordinate_list(t)
    out = []
    for p in parts:
        if p.strip():
            out.append(parse_element(p, model))
    if not out:
        raise ValueError(f"no elements in literal {text!r}")
    return out


def _split_coordinate_list(t: str) -> list[str]:
    """Split on commas at parenthesis depth zero, so "(1,0),(0,1)" works."""
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in t:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts
