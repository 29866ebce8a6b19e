"""Quivers and paths.

A quiver is a finite directed multigraph.  Paths are stored as arrow-id
sequences together with their endpoints; the empty sequence at a vertex
``v`` is the trivial path ``e_v``.  Composition follows the convention
that in a product the left factor is traversed first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    def __repr__(self):
        return f"{self.name}: {self.source} -> {self.target}"


class Quiver:
    """Vertices plus arrows with endpoints; all identifiers are strings."""

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Tuple[str, str, str]]):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex identifiers")
        vset = set(self.vertices)
        self.arrows: Tuple[Arrow, ...] = tuple(Arrow(*a) for a in arrows)
        self._by_name = {}
        for a in self.arrows:
            if a.name in self._by_name:
                raise QuiverError(f"duplicate arrow identifier {a.name!r}")
            if a.source not in vset or a.target not in vset:
                raise QuiverError(f"arrow {a.name!r} has undeclared endpoint")
            self._by_name[a.name] = a
        self._out = {v: tuple(a for a in self.arrows if a.source == v) for v in self.vertices}
        self._in = {v: tuple(a for a in self.arrows if a.target == v) for v in self.vertices}

    def arrow(self, name: str) -> Arrow:
        return self._by_name[name]

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def arrows_from(self, v: str) -> Tuple[Arrow, ...]:
        return self._out[v]

    def arrows_into(self, v: str) -> Tuple[Arrow, ...]:
        return self._in[v]

    def source(self, name: str) -> str:
        return self._by_name[name].source

    def target(self, name: str) -> str:
        return self._by_name[name].target

    def trivial_path(self, v: str) -> "Path":
        if v not in self._out:
            raise QuiverError(f"unknown vertex {v!r}")
        return Path(v, v, ())

    def path(self, arrow_names: Sequence[str]) -> "Path":
        """The path traversing the named arrows in order."""
        if not arrow_names:
            raise QuiverError("use trivial_path for the empty path")
        arrows = [self.arrow(n) for n in arrow_names]
        for x, y in zip(arrows, arrows[1:]):
            if x.target != y.source:
                raise QuiverError(f"arrows {x.name!r} and {y.name!r} do not compose")
        return Path(arrows[0].source, arrows[-1].target, tuple(a.name for a in arrows))

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            v = frontier.pop()
            for a in self._out[v] + self._in[v]:
                for w in (a.source, a.target):
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
        return len(seen) == len(self.vertices)

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


@dataclass(frozen=True)
class Path:
    """A directed path; ``arrows`` empty means the trivial path at ``source``."""

    source: str
    target: str
    arrows: Tuple[str, ...]

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __repr__(self):
        if self.is_trivial:
            return f"e_{self.source}"
        return "".join(f"({a})" if len(a) > 2 else a for a in self.arrows)


class LinearCombination:
    """A finite K-linear combination of paths; zero coefficients are dropped.

    Combinations whose paths all share source and target are *uniform*;
    only those can take part in socle identifications.
    """

    def __init__(self, field, terms=None):
        self.field = field
        self.terms: dict = {}
        for path, coeff in dict(terms or {}).items():
            if coeff:
                self.terms[path] = coeff

    def is_zero(self) -> bool:
        return not self.terms

    def is_uniform(self) -> bool:
        ends = {(p.source, p.target) for p in self.terms}
        return len(ends) <= 1

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        out = dict(self.terms)
        for path, coeff in other.terms.items():
            out[path] = out.get(path, self.field.zero) + coeff
        return LinearCombination(self.field, out)

    def scale(self, coeff) -> "LinearCombination":
        return LinearCombination(self.field, {p: coeff * c for p, c in self.terms.items()})

    def __mul__(self, other: "LinearCombination") -> "LinearCombination":
        out: dict = {}
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                prod = compose(p, q)
                if prod is None:
                    continue
                out[prod] = out.get(prod, self.field.zero) + cp * cq
        return LinearCombination(self.field, out)

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{p}" for p, c in sorted(self.terms.items(), key=lambda t: (t[0].source, t[0].arrows)))


def compose(p: Path, q: Path) -> Optional[Path]:
    """The concatenation p then q, or None when target(p) != source(q)."""
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


def path_ge(p: Path, q: Path) -> bool:
    """True when p = r*q for some path r, i.e. q is a terminal segment of p."""
    if p.target != q.target:
        return False
    n = len(q.arrows)
    if n > len(p.arrows):
        return False
    return n == 0 or p.arrows[-n:] == q.arrows


def divide_left(p: Path, q: Path) -> Optional[Path]:
    """The unique r with r*q = p, or None when q does not divide p."""
    if not path_ge(p, q):
        return None
    n = len(p.arrows) - len(q.arrows)
    rest = p.arrows[:n]
    return Path(p.source, q.source, rest)
