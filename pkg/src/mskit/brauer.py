"""Brauer configurations and their algebras.

A configuration consists of vertices, polygons (multisets of vertices),
a multiplicity function and, for every nontruncated vertex, a cyclic
order on its polygon occurrences.  Each nontruncated vertex contributes
a cycle of quiver arrows running from the polygon of an occurrence to
the polygon of its successor occurrence; the algebra is the quotient of
the path algebra by cycle-power difference relations, overflow relations
and all composable products missed by the cycles.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from mskit.fields import QQ
from mskit.presentation import SpecialPresentation
from mskit.quiver import Path, Quiver


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class Polygon:
    name: str
    members: Tuple[str, ...]

    def count(self, vertex: str) -> int:
        return self.members.count(vertex)

    def size(self) -> int:
        return len(self.members)

    def __repr__(self):
        return f"{self.name}={{{','.join(self.members)}}}"


Occurrence = Tuple[str, int]  # (polygon name, occurrence index of the vertex in it)


class BrauerConfiguration:
    """Vertices, polygons, multiplicity and orientation data."""

    def __init__(
        self,
        vertices: Iterable[str],
        polygons: Sequence[Tuple[str, Sequence[str]]],
        mu: Mapping[str, int],
        orientation: Optional[Mapping[str, Sequence[Occurrence]]] = None,
    ):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.polygons: Tuple[Polygon, ...] = tuple(
            Polygon(name, tuple(members)) for name, members in polygons
        )
        self.mu: Dict[str, int] = {v: int(mu.get(v, 1)) for v in self.vertices}
        orientation = orientation or {}
        self.orientation: Dict[str, Tuple[Occurrence, ...]] = {}
        for alpha in self.vertices:
            if alpha in orientation:
                self.orientation[alpha] = tuple(
                    (str(p), int(k)) for p, k in orientation[alpha]
                )
            elif self.val(alpha) == 1:
                self.orientation[alpha] = tuple(self.occurrences(alpha))

    def polygon(self, name: str) -> Polygon:
        for poly in self.polygons:
            if poly.name == name:
                return poly
        raise ConfigurationError(f"unknown polygon {name!r}")

    def val(self, alpha: str) -> int:
        return sum(poly.count(alpha) for poly in self.polygons)

    def occurrences(self, alpha: str) -> List[Occurrence]:
        out = []
        for poly in self.polygons:
            out.extend((poly.name, k) for k in range(poly.count(alpha)))
        return out

    def is_truncated(self, alpha: str) -> bool:
        return self.val(alpha) * self.mu[alpha] == 1

    def nontruncated(self) -> List[str]:
        return [a for a in self.vertices if not self.is_truncated(a)]

    # -- validation ------------------------------------------------------

    def violations(self) -> List[str]:
        out: List[str] = []
        if len(set(self.vertices)) != len(self.vertices):
            out.append("duplicate vertex identifiers")
        names = [p.name for p in self.polygons]
        if len(set(names)) != len(names):
            out.append("duplicate polygon identifiers")
        vset = set(self.vertices)
        for poly in self.polygons:
            for m in poly.members:
                if m not in vset:
                    out.append(f"polygon {poly.name} contains undeclared vertex {m}")
        for v, m in self.mu.items():
            if m < 1:
                out.append(f"mu({v}) must be a positive integer")
        if out:
            return out
        for alpha in self.vertices:
            if self.val(alpha) == 0:
                out.append(f"C1 violated: vertex {alpha} occurs in no polygon")
        for poly in self.polygons:
            if poly.size() < 2:
                out.append(f"C2 violated: polygon {poly.name} has fewer than two vertices")
            if all(self.val(a) * self.mu[a] <= 1 for a in set(poly.members)):
                out.append(
                    f"C3 violated: polygon {poly.name} has no vertex with val*mu > 1"
                )
        for alpha in self.vertices:
            if self.val(alpha) == 1 and self.is_truncated(alpha):
                poly = next(p for p in self.polygons if p.count(alpha))
                if poly.size() != 2:
                    out.append(
                        f"C4 violated: truncated vertex {alpha} lies in {poly.name}, not a 2-gon"
                    )
        for alpha in self.nontruncated():
            seq = self.orientation.get(alpha)
            if seq is None:
                out.append(f"orientation missing for nontruncated vertex {alpha}")
                continue
            if Counter(seq) != Counter(self.occurrences(alpha)):
                out.append(
                    f"orientation at {alpha} does not enumerate its occurrences exactly once"
                )
        return out

    def validate(self) -> None:
        problems = self.violations()
        if problems:
            raise ConfigurationError("; ".join(problems))

    def __repr__(self):
        return (
            f"BrauerConfiguration({len(self.vertices)} vertices, "
            f"{len(self.polygons)} polygons)"
        )


@dataclass(frozen=True)
class RelationSet:
    """Generating relations: cycle-power differences, overflows, dead products."""

    type_one: Tuple[Tuple[Path, Path], ...]
    type_two: Tuple[Path, ...]
    type_three: Tuple[Tuple[str, str], ...]

    def counts(self) -> Tuple[int, int, int]:
        return len(self.type_one), len(self.type_two), len(self.type_three)


def _arrow_table(
    cfg: BrauerConfiguration, arrow_names: Optional[Mapping[str, Sequence[str]]] = None
) -> List[Tuple[str, str, str, str, int]]:
    """Arrows as (name, source polygon, target polygon, vertex alpha, position)."""
    cfg.validate()
    out = []
    for alpha in cfg.vertices:
        if cfg.is_truncated(alpha):
            continue
        seq = cfg.orientation[alpha]
        names = None
        if arrow_names and alpha in arrow_names:
            names = list(arrow_names[alpha])
            if len(names) != len(seq):
                raise ConfigurationError(
                    f"arrow name list for {alpha} must have length {len(seq)}"
                )
        for j, (poly, _) in enumerate(seq):
            nxt_poly = seq[(j + 1) % len(seq)][0]
            name = names[j] if names else f"{alpha}#{j + 1}"
            out.append((name, poly, nxt_poly, alpha, j))
    return out


def build_quiver(
    cfg: BrauerConfiguration, arrow_names: Optional[Mapping[str, Sequence[str]]] = None
) -> Quiver:
    """One quiver vertex per polygon, one arrow per successor relation."""
    table = _arrow_table(cfg, arrow_names)
    return Quiver([p.name for p in cfg.polygons], [(n, s, t) for n, s, t, _, _ in table])


def special_cycles(
    cfg: BrauerConfiguration, arrow_names: Optional[Mapping[str, Sequence[str]]] = None
) -> Dict[Tuple[str, str, int], Tuple[str, ...]]:
    """All special cycles, keyed by (base quiver vertex, vertex alpha, occurrence position)."""
    table = _arrow_table(cfg, arrow_names)
    by_alpha: Dict[str, List[Tuple[str, str]]] = {}
    for name, src, _tgt, alpha, j in table:
        by_alpha.setdefault(alpha, []).append((name, src))
    out: Dict[Tuple[str, str, int], Tuple[str, ...]] = {}
    for alpha, entries in by_alpha.items():
        names = [n for n, _ in entries]
        m = len(names)
        for j, (_, base) in enumerate(entries):
            cyc = tuple(names[j:] + names[:j])
            out[(base, alpha, j)] = cyc
    return out


def _cycle_power_path(quiver: Quiver, cycle: Sequence[str], power: int) -> Path:
    return quiver.path(list(cycle) * power)


def build_relations(
    cfg: BrauerConfiguration, arrow_names: Optional[Mapping[str, Sequence[str]]] = None
) -> RelationSet:
    """The three relation families; redundant generators are kept."""
    quiver = build_quiver(cfg, arrow_names)
    cycles = special_cycles(cfg, arrow_names)
    by_base: Dict[str, List[Tuple[str, int, Tuple[str, ...]]]] = {}
    for (base, alpha, j), cyc in sorted(cycles.items()):
        by_base.setdefault(base, []).append((alpha, j, cyc))
    type_one: List[Tuple[Path, Path]] = []
    for base in quiver.vertices:
        entries = by_base.get(base, [])
        for i in range(len(entries)):
            for k in range(i + 1, len(entries)):
                a_i, _, cyc_i = entries[i]
                a_k, _, cyc_k = entries[k]
                type_one.append(
                    (
                        _cycle_power_path(quiver, cyc_i, cfg.mu[a_i]),
                        _cycle_power_path(quiver, cyc_k, cfg.mu[a_k]),
                    )
                )
    type_two: List[Path] = []
    for (base, alpha, j), cyc in sorted(cycles.items()):
        power = _cycle_power_path(quiver, cyc, cfg.mu[alpha])
        type_two.append(quiver.path(list(power.arrows) + [cyc[0]]))
    wrap_pairs = set()
    for cyc in cycles.values():
        wrap_pairs.update(zip(cyc, cyc[1:] + cyc[:1]))
    type_three: List[Tuple[str, str]] = []
    for a in quiver.arrows:
        for b in quiver.arrows:
            if a.target == b.source and (a.name, b.name) not in wrap_pairs:
                type_three.append((a.name, b.name))
    return RelationSet(tuple(type_one), tuple(type_two), tuple(sorted(type_three)))


def build_algebra(
    cfg: BrauerConfiguration,
    field=QQ,
    arrow_names: Optional[Mapping[str, Sequence[str]]] = None,
) -> SpecialPresentation:
    """The configuration's algebra as a validated special presentation."""
    quiver = build_quiver(cfg, arrow_names)
    cycles = special_cycles(cfg, arrow_names)
    pairs = set()
    cutoffs: Dict[str, int] = {}
    for (base, alpha, j), cyc in cycles.items():
        pairs.update(zip(cyc, cyc[1:] + cyc[:1]))
        for a in cyc:
            cutoffs[a] = cfg.val(alpha) * cfg.mu[alpha] - 1
    by_base: Dict[str, List[Path]] = {}
    for (base, alpha, j), cyc in sorted(cycles.items()):
        by_base.setdefault(base, []).append(_cycle_power_path(quiver, cyc, cfg.mu[alpha]))
    idents = []
    for base in quiver.vertices:
        powers = by_base.get(base, [])
        for extra in powers[1:]:
            idents.append((extra, powers[0], field.one))
    return SpecialPresentation(quiver, field, sorted(pairs), cutoffs, idents)
