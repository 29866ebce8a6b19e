"""Line-oriented text formats, JSON mirrors and DOT export.

Four file kinds: ``.bcfg`` configurations, ``.qpres`` presentations,
``.qrep`` representations (relative to a presentation) and ``.gram``
Gram specifications.  The text formats are diff-friendly; printing is
canonical, so parse-print stabilizes after one pass.  JSON is the
machine interface (schema tag ``mskit/1``) and DOT is display only.
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional, Tuple

from mskit.brauer import BrauerConfiguration
from mskit.fields import FieldError, field_by_name
from mskit.modules import Representation
from mskit.presentation import SpecialPresentation
from mskit.quiver import Quiver
from mskit.radcube import GramSpec

SCHEMA = "mskit/1"


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _logical_lines(text: str) -> List[Tuple[int, str]]:
    # full-line '#' comments only: '#' also appears inside occurrence tokens
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def _split_eq(lineno: int, line: str) -> Tuple[str, str]:
    if "=" not in line:
        raise ParseError(lineno, "expected '='")
    left, right = line.split("=", 1)
    return left.strip(), right.strip()


# -- configurations (.bcfg) ------------------------------------------------


def parse_configuration(text: str) -> BrauerConfiguration:
    vertices: List[str] = []
    polygons: List[Tuple[str, List[str]]] = []
    mu: Dict[str, int] = {}
    orientation: Dict[str, List[Tuple[str, int]]] = {}
    for lineno, line in _logical_lines(text):
        parts = line.split(None, 1)
        keyword = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if keyword == "vertex":
            if not rest:
                raise ParseError(lineno, "vertex needs an identifier")
            vertices.append(rest.strip())
        elif keyword == "polygon":
            name, body = _split_eq(lineno, rest)
            body = body.strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise ParseError(lineno, "polygon members must be bracketed")
            members = [m.strip() for m in body[1:-1].split(",") if m.strip()]
            if not members:
                raise ParseError(lineno, "polygon has no members")
            polygons.append((name, members))
        elif keyword == "mu":
            name, value = _split_eq(lineno, rest)
            try:
                mu[name] = int(value)
            except ValueError:
                raise ParseError(lineno, f"bad multiplicity {value!r}")
        elif keyword == "order":
            if ":" not in rest:
                raise ParseError(lineno, "order needs 'vertex: occurrences'")
            name, seq = rest.split(":", 1)
            entries = []
            for token in seq.split():
                if "#" not in token:
                    raise ParseError(lineno, f"occurrence {token!r} needs '#index'")
                poly, occ = token.rsplit("#", 1)
                try:
                    entries.append((poly, int(occ) - 1))
                except ValueError:
                    raise ParseError(lineno, f"bad occurrence index in {token!r}")
            orientation[name.strip()] = entries
        else:
            raise ParseError(lineno, f"unknown keyword {keyword!r} in configuration file")
    if not vertices:
        raise ParseError(0, "configuration has no vertices")
    return BrauerConfiguration(vertices, polygons, mu, orientation)


def print_configuration(cfg: BrauerConfiguration) -> str:
    lines = [f"vertex {v}" for v in cfg.vertices]
    for poly in cfg.polygons:
        lines.append(f"polygon {poly.name} = [{','.join(poly.members)}]")
    for v in cfg.vertices:
        lines.append(f"mu {v} = {cfg.mu[v]}")
    for v in cfg.vertices:
        if v in cfg.orientation:
            seq = " ".join(f"{p}#{k + 1}" for p, k in cfg.orientation[v])
            lines.append(f"order {v}: {seq}")
    return "\n".join(lines) + "\n"


# -- presentations (.qpres) -------------------------------------------------


def parse_presentation(text: str) -> SpecialPresentation:
    field = None
    vertices: List[str] = []
    arrows: List[Tuple[str, str, str]] = []
    pi: List[Tuple[str, str]] = []
    cutoffs: Dict[str, int] = {}
    raw_idents: List[Tuple[int, List[str], str, List[str]]] = []
    for lineno, line in _logical_lines(text):
        parts = line.split(None, 1)
        keyword = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if keyword == "field":
            try:
                field = field_by_name(rest)
            except FieldError as exc:
                raise ParseError(lineno, str(exc))
        elif keyword == "vertex":
            vertices.append(rest.strip())
        elif keyword == "arrow":
            if ":" not in rest or "->" not in rest:
                raise ParseError(lineno, "arrow syntax is 'arrow a: u -> v'")
            name, spanned = rest.split(":", 1)
            src, tgt = spanned.split("->", 1)
            arrows.append((name.strip(), src.strip(), tgt.strip()))
        elif keyword == "pi":
            pair = rest.split()
            if len(pair) != 2:
                raise ParseError(lineno, "pi needs exactly two arrows")
            pi.append((pair[0], pair[1]))
        elif keyword == "cutoff":
            name, value = _split_eq(lineno, rest)
            try:
                cutoffs[name] = int(value)
            except ValueError:
                raise ParseError(lineno, f"bad cutoff {value!r}")
        elif keyword == "ident":
            left, right = _split_eq(lineno, rest)
            left_arrows = left.split()
            right_parts = right.split()
            if len(right_parts) < 2:
                raise ParseError(lineno, "ident needs 'path = scalar path'")
            raw_idents.append((lineno, left_arrows, right_parts[0], right_parts[1:]))
        else:
            raise ParseError(lineno, f"unknown keyword {keyword!r} in presentation file")
    if field is None:
        raise ParseError(0, "presentation file must declare a field")
    quiver = Quiver(vertices, arrows)
    idents = []
    for lineno, left_arrows, scalar_text, right_arrows in raw_idents:
        try:
            lam = field.parse(scalar_text)
            p = quiver.path(left_arrows)
            q = quiver.path(right_arrows)
        except (FieldError, ValueError) as exc:
            raise ParseError(lineno, str(exc))
        idents.append((p, q, lam))
    return SpecialPresentation(quiver, field, pi, cutoffs, idents)


def print_presentation(pres: SpecialPresentation) -> str:
    lines = [f"field {pres.field.name}"]
    lines += [f"vertex {v}" for v in pres.quiver.vertices]
    for a in pres.quiver.arrows:
        lines.append(f"arrow {a.name}: {a.source} -> {a.target}")
    for a, b in pres.pi.pairs:
        lines.append(f"pi {a} {b}")
    for a in pres.quiver.arrows:
        lines.append(f"cutoff {a.name} = {pres.t[a.name]}")
    for p, q, lam in pres.idents:
        lines.append(
            f"ident {' '.join(p.arrows)} = {pres.field.fmt(lam)} {' '.join(q.arrows)}"
        )
    return "\n".join(lines) + "\n"


# -- representations (.qrep) -------------------------------------------------


def _parse_matrix(lineno: int, text: str, field) -> List[List]:
    text = text.strip()
    if not (text.startswith("[[") and text.endswith("]]")) and text != "[]":
        raise ParseError(lineno, "matrix must look like [[..],[..]] or []")
    if text == "[]":
        return []
    rows = []
    for row_text in text[1:-1].replace("],[", "]|[").split("|"):
        row_text = row_text.strip()
        if not (row_text.startswith("[") and row_text.endswith("]")):
            raise ParseError(lineno, "bad matrix row")
        entries = [e.strip() for e in row_text[1:-1].split(",")]
        try:
            rows.append([field.parse(e) for e in entries if e])
        except FieldError as exc:
            raise ParseError(lineno, str(exc))
    return rows


def parse_representation(text: str, pres: SpecialPresentation) -> Representation:
    dims: Dict[str, int] = {}
    mats: Dict[str, List[List]] = {}
    for lineno, line in _logical_lines(text):
        parts = line.split(None, 1)
        keyword = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if keyword == "field":
            if rest.strip() != pres.field.name:
                raise ParseError(lineno, f"field {rest!r} does not match the presentation")
        elif keyword == "dim":
            name, value = _split_eq(lineno, rest)
            try:
                dims[name] = int(value)
            except ValueError:
                raise ParseError(lineno, f"bad dimension {value!r}")
        elif keyword == "matrix":
            name, value = _split_eq(lineno, rest)
            mats[name] = _parse_matrix(lineno, value, pres.field)
        else:
            raise ParseError(lineno, f"unknown keyword {keyword!r} in representation file")
    return Representation(pres, dims, mats)


def print_representation(rep: Representation) -> str:
    lines = [f"field {rep.field.name}"]
    for v in rep.pres.quiver.vertices:
        lines.append(f"dim {v} = {rep.dims[v]}")
    for a in rep.pres.quiver.arrows:
        m = rep.mats[a.name]
        body = ",".join("[" + ",".join(rep.field.fmt(x) for x in row) + "]" for row in m)
        lines.append(f"matrix {a.name} = [{body}]" if m else f"matrix {a.name} = []")
    return "\n".join(lines) + "\n"


# -- gram specifications (.gram) ----------------------------------------------


def parse_gram(text: str) -> GramSpec:
    field = None
    vertices: List[str] = []
    arrows: List[Tuple[str, str, str]] = []
    gamma_raw: List[Tuple[int, str, str, str]] = []
    for lineno, line in _logical_lines(text):
        parts = line.split(None, 1)
        keyword = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if keyword == "field":
            try:
                field = field_by_name(rest)
            except FieldError as exc:
                raise ParseError(lineno, str(exc))
        elif keyword == "vertex":
            vertices.append(rest.strip())
        elif keyword == "arrow":
            if ":" not in rest or "->" not in rest:
                raise ParseError(lineno, "arrow syntax is 'arrow a: u -> v'")
            name, spanned = rest.split(":", 1)
            src, tgt = spanned.split("->", 1)
            arrows.append((name.strip(), src.strip(), tgt.strip()))
        elif keyword == "gamma":
            left, value = _split_eq(lineno, rest)
            pair = left.split()
            if len(pair) != 2:
                raise ParseError(lineno, "gamma needs exactly two arrows")
            gamma_raw.append((lineno, pair[0], pair[1], value))
        else:
            raise ParseError(lineno, f"unknown keyword {keyword!r} in gram file")
    if field is None:
        raise ParseError(0, "gram file must declare a field")
    quiver = Quiver(vertices, arrows)
    gamma = {}
    for lineno, a, b, value in gamma_raw:
        try:
            gamma[(a, b)] = field.parse(value)
        except FieldError as exc:
            raise ParseError(lineno, str(exc))
    return GramSpec(quiver, field, gamma)


def print_gram(spec: GramSpec) -> str:
    lines = [f"field {spec.field.name}"]
    lines += [f"vertex {v}" for v in spec.quiver.vertices]
    for a in spec.quiver.arrows:
        lines.append(f"arrow {a.name}: {a.source} -> {a.target}")
    for (a, b) in sorted(spec.gamma):
        if spec.gamma[(a, b)]:
            lines.append(f"gamma {a} {b} = {spec.field.fmt(spec.gamma[(a, b)])}")
    return "\n".join(lines) + "\n"


# -- JSON mirror ---------------------------------------------------------------


def to_json(obj, pres: Optional[SpecialPresentation] = None) -> str:
    if isinstance(obj, BrauerConfiguration):
        doc = {
            "schema": SCHEMA,
            "kind": "configuration",
            "vertices": list(obj.vertices),
            "polygons": [{"name": p.name, "members": list(p.members)} for p in obj.polygons],
            "mu": dict(obj.mu),
            "orientation": {
                v: [[p, k] for p, k in seq] for v, seq in obj.orientation.items()
            },
        }
    elif isinstance(obj, SpecialPresentation):
        doc = {
            "schema": SCHEMA,
            "kind": "presentation",
            "field": obj.field.name,
            "vertices": list(obj.quiver.vertices),
            "arrows": [
                {"name": a.name, "source": a.source, "target": a.target}
                for a in obj.quiver.arrows
            ],
            "pi": [[a, b] for a, b in obj.pi.pairs],
            "cutoffs": dict(obj.t),
            "idents": [
                {
                    "left": list(p.arrows),
                    "right": list(q.arrows),
                    "scalar": obj.field.fmt(lam),
                }
                for p, q, lam in obj.idents
            ],
        }
    elif isinstance(obj, Representation):
        doc = {
            "schema": SCHEMA,
            "kind": "representation",
            "field": obj.field.name,
            "dims": dict(obj.dims),
            "matrices": {
                a: [[obj.field.fmt(x) for x in row] for row in m]
                for a, m in obj.mats.items()
            },
        }
    elif isinstance(obj, GramSpec):
        doc = {
            "schema": SCHEMA,
            "kind": "gram",
            "field": obj.field.name,
            "vertices": list(obj.quiver.vertices),
            "arrows": [
                {"name": a.name, "source": a.source, "target": a.target}
                for a in obj.quiver.arrows
            ],
            "gamma": [
                {"pair": [a, b], "value": obj.field.fmt(v)}
                for (a, b), v in sorted(obj.gamma.items())
                if v
            ],
        }
    else:
        raise TypeError(f"no JSON mirror for {type(obj).__name__}")
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- DOT export -----------------------------------------------------------------


def to_dot(quiver: Quiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    for v in quiver.vertices:
        lines.append(f'  "{v}";')
    for a in quiver.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
