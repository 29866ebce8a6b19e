"""Finite-dimensional right modules as quiver representations.

A representation assigns a dimension to each vertex and a matrix to each
arrow; matrices act on row vectors, so the operator of a path is the
product of its arrow matrices in path order.  Elements are stored as
single global row vectors over the concatenated vertex blocks, which
keeps radicals, socles and kernels inside plain exact linear algebra.
Submodules split across vertex blocks (idempotents act), so subspaces
are kept as per-vertex echelon bases.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from mskit import linalg
from mskit.presentation import SpecialPresentation
from mskit.quiver import Path


class RepresentationError(ValueError):
    pass


class Representation:
    """Per-vertex dimensions plus per-arrow matrices over the presentation's field."""

    def __init__(
        self,
        pres: SpecialPresentation,
        dims: Mapping[str, int],
        mats: Mapping[str, Sequence[Sequence]],
    ):
        self.pres = pres
        self.field = pres.field
        self.dims: Dict[str, int] = {v: int(dims.get(v, 0)) for v in pres.quiver.vertices}
        self.mats: Dict[str, List[List]] = {}
        for arrow in pres.quiver.arrows:
            m = mats.get(arrow.name)
            nr, nc = self.dims[arrow.source], self.dims[arrow.target]
            if m is None:
                m = linalg.zero_matrix(nr, nc, self.field)
            self.mats[arrow.name] = [list(row) for row in m]
        self.offsets: Dict[str, int] = {}
        off = 0
        for v in pres.quiver.vertices:
            self.offsets[v] = off
            off += self.dims[v]
        self.total_dim = off

    # -- element plumbing ------------------------------------------------

    def zero_vector(self) -> List:
        return [self.field.zero] * self.total_dim

    def block(self, vec: Sequence, v: str) -> List:
        off = self.offsets[v]
        return list(vec[off : off + self.dims[v]])

    def embed(self, v: str, local: Sequence) -> List:
        out = self.zero_vector()
        off = self.offsets[v]
        for i, x in enumerate(local):
            out[off + i] = x
        return out

    def basis_vector(self, v: str, i: int) -> List:
        out = self.zero_vector()
        out[self.offsets[v] + i] = self.field.one
        return out

    def vertex_of(self, vec: Sequence) -> Optional[str]:
        """The unique vertex supporting a right-uniform element, or None."""
        found = None
        for v in self.pres.quiver.vertices:
            if any(self.block(vec, v)):
                if found is not None:
                    return None
                found = v
        return found

    def act_arrow(self, vec: Sequence, a: str) -> List:
        arrow = self.pres.quiver.arrow(a)
        local = self.block(vec, arrow.source)
        out = self.zero_vector()
        if not any(local):
            return out
        mat = self.mats[a]
        off = self.offsets[arrow.target]
        for i, x in enumerate(local):
            if x:
                row = mat[i]
                for j in range(self.dims[arrow.target]):
                    if row[j]:
                        out[off + j] = out[off + j] + x * row[j]
        return out

    def act_path(self, vec: Sequence, path: Path) -> List:
        if path.is_trivial:
            return self.embed(path.source, self.block(vec, path.source))
        cur = list(vec)
        for a in path.arrows:
            cur = self.act_arrow(cur, a)
            if not any(cur):
                return cur
        return cur

    def path_operator(self, path: Path) -> List[List]:
        """The matrix of right multiplication by a path, source block to target block."""
        n = self.dims[path.source]
        rows = []
        for i in range(n):
            img = self.act_path(self.basis_vector(path.source, i), path)
            rows.append(self.block(img, path.target))
        return rows

    # -- validation -------------------------------------------------------

    def violations(self) -> List[str]:
        out: List[str] = []
        for arrow in self.pres.quiver.arrows:
            m = self.mats[arrow.name]
            nr, nc = self.dims[arrow.source], self.dims[arrow.target]
            if len(m) != nr or any(len(r) != nc for r in m):
                out.append(f"matrix of {arrow.name} is not {nr} x {nc}")
                continue
            for r in m:
                for x in r:
                    if not self.field.contains(x):
                        out.append(f"matrix of {arrow.name} has a non-{self.field.name} entry")
                        break
        if out:
            return out
        quiver = self.pres.quiver
        for a in quiver.arrows:
            for b in quiver.arrows:
                if a.target == b.source and (a.name, b.name) not in self.pres.pi:
                    if _nonzero_product(self, a.name, b.name):
                        out.append(f"dead pair {a.name}{b.name} acts nonzero")
        for a in quiver.arrows:
            chain = self.pres.p_chain(a.name, self.pres.t[a.name])
            nxt = self.pres.next_arrow(chain.arrows[-1])
            if nxt is not None:
                op = self.path_operator(chain)
                follow = [self.block(self.act_arrow(self.embed(chain.target, row), nxt), quiver.target(nxt)) for row in op]
                if any(any(r) for r in follow):
                    out.append(f"overflow path {chain}{nxt} acts nonzero")
        for p, q, lam in self.pres.idents:
            op_p = self.path_operator(p)
            op_q = self.path_operator(q)
            for rp, rq in zip(op_p, op_q):
                if any(x - lam * y for x, y in zip(rp, rq)):
                    out.append(f"identification {p} = {lam} * {q} fails")
                    break
        return out

    def validate(self) -> None:
        problems = self.violations()
        if problems:
            raise RepresentationError("; ".join(problems))

    # -- canonical submodules ----------------------------------------------

    def radical(self) -> "Subspace":
        rows = []
        for arrow in self.pres.quiver.arrows:
            for i in range(self.dims[arrow.source]):
                rows.append(self.act_arrow(self.basis_vector(arrow.source, i), arrow.name))
        return Subspace.from_rows(self, rows)

    def radical_power(self, k: int) -> "Subspace":
        space = Subspace.from_rows(self, [self.basis_vector(v, i) for v in self.dims for i in range(self.dims[v])])
        for _ in range(k):
            space = self.radical_of(space)
        return space

    def radical_of(self, space: "Subspace") -> "Subspace":
        rows = []
        for v in self.pres.quiver.vertices:
            for local in space.by_vertex[v]:
                vec = self.embed(v, local)
                for arrow in self.pres.quiver.arrows_from(v):
                    rows.append(self.act_arrow(vec, arrow.name))
        return Subspace.from_rows(self, rows)

    def socle(self) -> "Subspace":
        rows = []
        for v in self.pres.quiver.vertices:
            arrows = self.pres.quiver.arrows_from(v)
            if not arrows:
                for i in range(self.dims[v]):
                    rows.append(self.basis_vector(v, i))
                continue
            stacked_cols = sum(self.dims[a.target] for a in arrows)
            stacked = []
            for i in range(self.dims[v]):
                row = []
                for a in arrows:
                    row.extend(self.mats[a.name][i])
                stacked.append(row)
            for rel in linalg.relations(stacked, self.field, stacked_cols):
                rows.append(self.embed(v, rel))
        return Subspace.from_rows(self, rows)

    def full_space(self) -> "Subspace":
        rows = [self.basis_vector(v, i) for v in self.pres.quiver.vertices for i in range(self.dims[v])]
        return Subspace.from_rows(self, rows)

    def __repr__(self):
        dims = ", ".join(f"{v}:{d}" for v, d in self.dims.items())
        return f"Representation({dims})"


def _nonzero_product(rep: Representation, a: str, b: str) -> bool:
    quiver = rep.pres.quiver
    for i in range(rep.dims[quiver.source(a)]):
        img = rep.act_arrow(rep.act_arrow(rep.basis_vector(quiver.source(a), i), a), b)
        if any(img):
            return True
    return False


class Subspace:
    """Per-vertex reduced echelon bases; the module structure lives in the parent."""

    def __init__(self, rep: Representation, by_vertex: Mapping[str, List[List]]):
        self.rep = rep
        self.by_vertex: Dict[str, List[List]] = {
            v: [list(r) for r in by_vertex.get(v, [])] for v in rep.pres.quiver.vertices
        }

    @classmethod
    def from_rows(cls, rep: Representation, rows: Iterable[Sequence]) -> "Subspace":
        """Split global rows into vertex blocks and echelonize each block.

        The rows of a submodule always split this way because projecting
        to a vertex block is multiplication by the trivial path there.
        """
        per: Dict[str, linalg.Echelon] = {
            v: linalg.Echelon(rep.field, rep.dims[v]) for v in rep.pres.quiver.vertices
        }
        for row in rows:
            for v in rep.pres.quiver.vertices:
                local = rep.block(row, v)
                if any(local):
                    per[v].add(local)
        return cls(rep, {v: ech.canonical() for v, ech in per.items()})

    def dim(self) -> int:
        return sum(len(rows) for rows in self.by_vertex.values())

    def dim_at(self, v: str) -> int:
        return len(self.by_vertex[v])

    def rows(self) -> List[List]:
        out = []
        for v in self.rep.pres.quiver.vertices:
            for local in self.by_vertex[v]:
                out.append(self.rep.embed(v, local))
        return out

    def contains(self, vec: Sequence) -> bool:
        for v in self.rep.pres.quiver.vertices:
            local = self.rep.block(vec, v)
            if not any(local):
                continue
            ech = linalg.Echelon(self.rep.field, self.rep.dims[v])
            for r in self.by_vertex[v]:
                ech.add(r)
            if not ech.contains(local):
                return False
        return True

    def is_submodule(self) -> bool:
        for vec in self.rows():
            v = self.rep.vertex_of(vec)
            for arrow in self.rep.pres.quiver.arrows_from(v):
                if not self.contains(self.rep.act_arrow(vec, arrow.name)):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.by_vertex == other.by_vertex

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows())

    def intersection(self, other: "Subspace") -> "Subspace":
        out: Dict[str, List[List]] = {}
        for v in self.rep.pres.quiver.vertices:
            out[v] = linalg.intersect_rowspaces(
                self.by_vertex[v], other.by_vertex[v], self.rep.field, self.rep.dims[v]
            )
        return Subspace(self.rep, out)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.from_rows(self.rep, self.rows() + other.rows())

    def __repr__(self):
        dims = ", ".join(f"{v}:{len(r)}" for v, r in self.by_vertex.items() if r)
        return f"Subspace({dims or '0'})"


# -- projectives ----------------------------------------------------------


def projective_rep(pres: SpecialPresentation, v: str) -> Representation:
    """The right projective e_v A in basis-label coordinates.

    The attached ``labels`` dictionary maps each vertex to the ordered
    basis labels (paths from v) spanning its block.
    """
    labels: Dict[str, List[Path]] = {w: [] for w in pres.quiver.vertices}
    for label in pres.basis():
        if label.source == v:
            labels[label.target].append(label)
    dims = {w: len(labels[w]) for w in pres.quiver.vertices}
    mats = {}
    index = {w: {lab: i for i, lab in enumerate(labels[w])} for w in labels}
    for arrow in pres.quiver.arrows:
        m = linalg.zero_matrix(dims[arrow.source], dims[arrow.target], pres.field)
        for i, lab in enumerate(labels[arrow.source]):
            hit = pres.right_action(lab, arrow.name)
            if hit is not None:
                c, out_lab = hit
                m[i][index[arrow.target][out_lab]] = c
        mats[arrow.name] = m
    rep = Representation(pres, dims, mats)
    rep.labels = labels
    return rep


# -- generators -----------------------------------------------------------


def uniform_generators(rep: Representation) -> List[Tuple[List, str]]:
    """Right-uniform elements projecting to a basis of M / rad M."""
    rad = rep.radical()
    out = []
    for v in rep.pres.quiver.vertices:
        ech = linalg.Echelon(rep.field, rep.dims[v])
        for r in rad.by_vertex[v]:
            ech.add(r)
        for i in range(rep.dims[v]):
            e = [rep.field.zero] * rep.dims[v]
            e[i] = rep.field.one
            if ech.add(e) is None:
                out.append((rep.embed(v, e), v))
    return out


def radical_generators(rep: Representation) -> List[Tuple[List, str, str, List]]:
    """Arrow-images of top generators forming a basis of rad M / rad^2 M.

    Returns (m, vertex of m, arrow, u = m * arrow) tuples; u is right
    uniform at the arrow's target and generates a uniserial submodule.
    """
    tops = uniform_generators(rep)
    rad2 = rep.radical_of(rep.radical())
    ech = linalg.Echelon(rep.field, rep.total_dim)
    for r in rad2.rows():
        ech.add(r)
    out = []
    for m_vec, v in tops:
        for arrow in rep.pres.quiver.arrows_from(v):
            u = rep.act_arrow(m_vec, arrow.name)
            if not any(u):
                continue
            if ech.add(u) is None:
                out.append((m_vec, v, arrow.name, u))
    rad = rep.radical()
    if ech.rank != rad.dim():
        # the selected images together with rad^2 must span the radical
        raise RepresentationError("internal: radical generators do not span rad/rad^2")
    return out


def direct_sum(left: Representation, right: Representation) -> Representation:
    """Block-diagonal sum of two representations over the same presentation."""
    if left.pres is not right.pres and left.pres != right.pres:
        raise RepresentationError("direct sum needs a common presentation")
    pres = left.pres
    dims = {v: left.dims[v] + right.dims[v] for v in pres.quiver.vertices}
    mats = {}
    for arrow in pres.quiver.arrows:
        nr, nc = dims[arrow.source], dims[arrow.target]
        m = linalg.zero_matrix(nr, nc, pres.field)
        lm, rm = left.mats[arrow.name], right.mats[arrow.name]
        for i, row in enumerate(lm):
            for j, x in enumerate(row):
                m[i][j] = x
        roff, coff = left.dims[arrow.source], left.dims[arrow.target]
        for i, row in enumerate(rm):
            for j, x in enumerate(row):
                m[roff + i][coff + j] = x
        mats[arrow.name] = m
    return Representation(pres, dims, mats)


def submodule_generated(rep: Representation, elements: Iterable[Sequence]) -> Subspace:
    """Close a set of elements under idempotent projections and arrow action."""
    rows = []
    for vec in elements:
        for v in rep.pres.quiver.vertices:
            local = rep.block(vec, v)
            if any(local):
                rows.append(rep.embed(v, local))
    space = Subspace.from_rows(rep, rows)
    while True:
        grown = space.sum(rep.radical_of(space))
        if grown.dim() == space.dim():
            return space
        space = grown


def quotient_rep(rep: Representation, sub: Subspace) -> Representation:
    """The quotient representation M / N for a submodule N.

    Coordinates at each vertex are the non-pivot columns of N's echelon
    basis there.
    """
    field = rep.field
    reducers: Dict[str, linalg.Echelon] = {}
    keep: Dict[str, List[int]] = {}
    for v in rep.pres.quiver.vertices:
        ech = linalg.Echelon(field, rep.dims[v])
        for r in sub.by_vertex[v]:
            ech.add(r)
        reducers[v] = ech
        piv = set(ech.pivots)
        keep[v] = [i for i in range(rep.dims[v]) if i not in piv]

    def project(local, v):
        res, _ = reducers[v].reduce(local)
        return [res[i] for i in keep[v]]

    dims = {v: len(keep[v]) for v in rep.pres.quiver.vertices}
    mats = {}
    for arrow in rep.pres.quiver.arrows:
        u, w = arrow.source, arrow.target
        m = []
        for i in keep[u]:
            img = rep.act_arrow(rep.basis_vector(u, i), arrow.name)
            m.append(project(rep.block(img, w), w))
        mats[arrow.name] = m
    return Representation(rep.pres, dims, mats)


def cyclic_uniserial(rep: Representation, m_vec: Sequence, a: str) -> Subspace:
    """The submodule generated by m * a, spanned along the successor chain."""
    v = rep.vertex_of(m_vec)
    if v is None or v != rep.pres.quiver.source(a):
        raise RepresentationError("element is not right uniform at the arrow's source")
    rows = []
    for i in range(rep.pres.t[a] + 1):
        p = rep.pres.p_chain(a, i)
        img = rep.act_path(m_vec, p)
        if not any(img):
            break
        rows.append(img)
    return Subspace.from_rows(rep, rows)
