"""Finite-dimensional quiver algebras in special shape.

An algebra ``KQ/I`` is described here by three pieces of data: the table
``pi`` of composable arrow pairs whose product survives in the quotient,
a cutoff ``t(a)`` per arrow bounding how far the unique composition
chain out of ``a`` stays nonzero, and a list of socle identifications
``p = lambda * q`` between parallel maximal paths.  Under condition (M),
every arrow has at most one surviving successor and predecessor, so the
nonzero paths of the algebra are exactly the chains ``p_i(a)`` and the
data above yields a normal form: any product of basis elements is a
scalar multiple of a basis element or zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from mskit import linalg
from mskit.quiver import LinearCombination, Path, Quiver, compose


class PresentationError(ValueError):
    pass


class PiTable:
    """Ordered composable arrow pairs (a, b) whose product is nonzero."""

    def __init__(self, pairs: Iterable[Tuple[str, str]]):
        self.pairs: Tuple[Tuple[str, str], ...] = tuple(sorted(set(pairs)))
        self._set = set(self.pairs)
        self._succ: Dict[str, List[str]] = {}
        self._pred: Dict[str, List[str]] = {}
        for a, b in self.pairs:
            self._succ.setdefault(a, []).append(b)
            self._pred.setdefault(b, []).append(a)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self._set

    def __len__(self) -> int:
        return len(self.pairs)

    def successors(self, a: str) -> Tuple[str, ...]:
        return tuple(self._succ.get(a, ()))

    def predecessors(self, b: str) -> Tuple[str, ...]:
        return tuple(self._pred.get(b, ()))

    def satisfies_m(self) -> bool:
        return all(len(v) <= 1 for v in self._succ.values()) and all(
            len(v) <= 1 for v in self._pred.values()
        )

    def transpose(self) -> "PiTable":
        return PiTable((b, a) for a, b in self.pairs)

    def __repr__(self):
        return f"PiTable({list(self.pairs)})"


@dataclass(frozen=True)
class SpecialCycleSet:
    """Basic cycles partitioning the arrows, wrap-consecutive pairs = pi."""

    cycles: Tuple[Tuple[str, ...], ...]

    def violations(self, quiver: Quiver, pi: PiTable) -> List[str]:
        out = []
        seen: Dict[str, int] = {}
        for idx, cyc in enumerate(self.cycles):
            if len(set(cyc)) != len(cyc):
                out.append(f"cycle {idx} repeats an arrow")
            for a in cyc:
                if a in seen:
                    out.append(f"arrow {a} occurs in cycles {seen[a]} and {idx}")
                seen[a] = idx
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if quiver.target(a) != quiver.source(b):
                    out.append(f"cycle {idx} is not a path at {a}->{b}")
        for a in quiver.arrows:
            if a.name not in seen:
                out.append(f"arrow {a.name} occurs in no cycle")
        wrap_pairs = set()
        for cyc in self.cycles:
            wrap_pairs.update(zip(cyc, cyc[1:] + cyc[:1]))
        if wrap_pairs != set(pi.pairs):
            out.append("consecutive pairs of the cycles do not reproduce pi")
        return out


@dataclass
class ConditionReport:
    """Independent verdicts for the five equivalent conditions plus arrow-freeness."""

    m: bool
    m_prime: bool
    phi_bijective: bool
    psi_bijective: bool
    special_cycles: Optional[SpecialCycleSet]
    arrow_free: bool

    def all_equivalent_flags(self) -> Tuple[bool, bool, bool, bool, bool]:
        return (
            self.m,
            self.m_prime,
            self.phi_bijective,
            self.psi_bijective,
            self.special_cycles is not None,
        )


def check_conditions(quiver: Quiver, pairs: Iterable[Tuple[str, str]]) -> ConditionReport:
    """Evaluate the condition flags on a raw pair set.

    The pair set is only assumed composable; in particular condition (M)
    itself may fail, which is exactly what the report records.
    """
    table = PiTable(pairs)
    for a, b in table.pairs:
        if not quiver.has_arrow(a) or not quiver.has_arrow(b):
            raise PresentationError(f"pair ({a}, {b}) names an unknown arrow")
        if quiver.target(a) != quiver.source(b):
            raise PresentationError(f"pair ({a}, {b}) is not composable")
    names = [a.name for a in quiver.arrows]
    nsucc = {a: len(table.successors(a)) for a in names}
    npred = {a: len(table.predecessors(a)) for a in names}
    m = all(n <= 1 for n in nsucc.values()) and all(n <= 1 for n in npred.values())
    phi = all(n == 1 for n in nsucc.values())
    psi = all(n == 1 for n in npred.values())
    m_prime = phi and psi
    cycles = _build_special_cycles(names, table) if m_prime else None
    if cycles is not None and cycles.violations(quiver, table):
        cycles = None
    arrow_free = all(n >= 1 for n in nsucc.values()) and all(n >= 1 for n in npred.values())
    return ConditionReport(m, m_prime, phi, psi, cycles, arrow_free)


def _build_special_cycles(names: Sequence[str], table: PiTable) -> Optional[SpecialCycleSet]:
    # Follow the unique successor of each arrow until the first repeat.
    leftover = set(names)
    cycles = []
    while leftover:
        start = min(leftover)
        cyc = [start]
        seen = {start}
        cur = start
        while True:
            nxt = table.successors(cur)
            if len(nxt) != 1:
                return None
            cur = nxt[0]
            if cur in seen:
                if cur != start:
                    return None
                break
            cyc.append(cur)
            seen.add(cur)
        leftover -= seen
        cycles.append(tuple(cyc))
    return SpecialCycleSet(tuple(cycles))


class SpecialPresentation:
    """The algebra ``KQ/I`` in special shape, with normal-form arithmetic."""

    def __init__(
        self,
        quiver: Quiver,
        field,
        pi: Iterable[Tuple[str, str]],
        cutoffs: Mapping[str, int],
        socle_idents: Sequence[Tuple[Path, Path, object]] = (),
    ):
        self.quiver = quiver
        self.field = field
        self.pi = pi if isinstance(pi, PiTable) else PiTable(pi)
        self.t: Dict[str, int] = {a.name: cutoffs[a.name] for a in quiver.arrows if a.name in cutoffs}
        self.idents: Tuple[Tuple[Path, Path, object], ...] = tuple(
            (p, q, lam) for p, q, lam in socle_idents
        )
        problems = self.violations()
        if problems:
            raise PresentationError("; ".join(problems))
        self._succ = {a: self.pi.successors(a)[0] for a in self.t if self.pi.successors(a)}
        self._pred = {a: self.pi.predecessors(a)[0] for a in self.t if self.pi.predecessors(a)}
        self._s = self._compute_s()
        self._rep = self._ident_classes()
        self._basis: Optional[List[Path]] = None

    # -- validation ----------------------------------------------------

    def violations(self) -> List[str]:
        out: List[str] = []
        for a in self.quiver.arrows:
            if a.name not in self.t:
                out.append(f"cutoff missing for arrow {a.name}")
            elif self.t[a.name] < 0:
                out.append(f"cutoff of {a.name} is negative")
        for a, b in self.pi.pairs:
            if not self.quiver.has_arrow(a) or not self.quiver.has_arrow(b):
                out.append(f"pi pair ({a}, {b}) names an unknown arrow")
            elif self.quiver.target(a) != self.quiver.source(b):
                out.append(f"pi pair ({a}, {b}) is not composable")
        if out:
            return out
        if not self.pi.satisfies_m():
            for a in self.quiver.arrows:
                if len(self.pi.successors(a.name)) > 1:
                    out.append(f"(M) fails: arrow {a.name} has two pi-successors")
                if len(self.pi.predecessors(a.name)) > 1:
                    out.append(f"(M) fails: arrow {a.name} has two pi-predecessors")
            return out
        for a, b in self.pi.pairs:
            if self.t[a] < 1:
                out.append(f"pair ({a}, {b}) in pi but t({a}) = 0")
            if self.t[a] > self.t[b] + 1:
                out.append(f"t({a}) = {self.t[a]} exceeds t({b}) + 1")
        for a in self.quiver.arrows:
            if self.t[a.name] >= 1 and not self.pi.successors(a.name):
                out.append(f"t({a.name}) >= 1 but {a.name} has no pi-successor")
        if out:
            return out
        out.extend(self._ident_violations())
        return out

    def _ident_violations(self) -> List[str]:
        out: List[str] = []
        succ = {a: self.pi.successors(a)[0] for a in self.t if self.pi.successors(a)}
        s_vals = _s_values(self.quiver, self.t, {a: self.pi.predecessors(a)[0] for a in self.t if self.pi.predecessors(a)})
        for k, (p, q, lam) in enumerate(self.idents):
            label = f"ident {k} ({p} = {lam} * {q})"
            ok = True
            for path in (p, q):
                if path.is_trivial:
                    out.append(f"{label}: trivial paths cannot be identified")
                    ok = False
                    continue
                for x in path.arrows:
                    if not self.quiver.has_arrow(x):
                        out.append(f"{label}: unknown arrow {x}")
                        ok = False
                if not ok:
                    continue
                if not self._is_chain(path, succ):
                    out.append(f"{label}: {path} is zero in the algebra")
                    ok = False
                    continue
                if len(path) != self.t[path.arrows[0]] + 1:
                    out.append(f"{label}: {path} is not right-maximal")
                    ok = False
                if len(path) != s_vals[path.arrows[-1]] + 1:
                    out.append(f"{label}: {path} is not left-maximal")
                    ok = False
            if not ok:
                continue
            if p.source != q.source or p.target != q.target:
                out.append(f"{label}: identified paths are not parallel")
            if not self.field.contains(lam):
                out.append(f"{label}: scalar not in {self.field.name}")
            elif not lam:
                out.append(f"{label}: scalar must be nonzero")
        if out:
            return out
        try:
            self._ident_classes()
        except PresentationError as exc:
            out.append(str(exc))
        return out

    def _is_chain(self, path: Path, succ: Mapping[str, str]) -> bool:
        arrows = path.arrows
        for x, y in zip(arrows, arrows[1:]):
            if succ.get(x) != y:
                return False
        return len(arrows) - 1 <= self.t[arrows[0]]

    # -- successor structure -------------------------------------------

    def next_arrow(self, a: str) -> Optional[str]:
        return self._succ.get(a)

    def prev_arrow(self, a: str) -> Optional[str]:
        return self._pred.get(a)

    def _compute_s(self) -> Dict[str, int]:
        return _s_values(self.quiver, self.t, self._pred)

    def s(self, a: str) -> int:
        return self._s[a]

    def p_chain(self, a: str, i: int) -> Optional[Path]:
        """The unique nonzero chain path p_i(a), or None outside the range."""
        if not self.quiver.has_arrow(a):
            raise PresentationError(f"unknown arrow {a}")
        if i >= 0:
            if i > self.t[a]:
                return None
            arrows = [a]
            cur = a
            for _ in range(i):
                cur = self._succ.get(cur)
                if cur is None:
                    return None
                arrows.append(cur)
            return self.quiver.path(arrows)
        j = -i
        if j > self._s[a]:
            return None
        arrows = [a]
        cur = a
        for _ in range(j):
            cur = self._pred.get(cur)
            if cur is None:
                return None
            arrows.insert(0, cur)
        return self.quiver.path(arrows)

    def max_path(self, a: str) -> Path:
        return self.p_chain(a, self.t[a])

    def maximal_paths_at(self, v: str) -> List[Path]:
        return [self.max_path(a.name) for a in self.quiver.arrows_from(v)]

    # -- socle identification classes ----------------------------------

    def _ident_classes(self) -> Dict[Path, Tuple[object, Path]]:
        """Map each identified maximal path p to (lam, rep) with p = lam * rep."""
        parent: Dict[Path, Path] = {}
        weight: Dict[Path, object] = {}  # x = weight[x] * parent[x]

        def raw_weight(x: Path):
            w = self.field.one
            while parent[x] != x:
                w = w * weight[x]
                x = parent[x]
            return x, w

        for p, q, lam in self.idents:
            for z in (p, q):
                if z not in parent:
                    parent[z] = z
                    weight[z] = self.field.one
            rp, wp = raw_weight(p)
            rq, wq = raw_weight(q)
            if rp == rq:
                if wp != lam * wq:
                    raise PresentationError(
                        f"inconsistent identification scalars in class of {rp}"
                    )
                continue
            # p = wp * rp, q = wq * rq, p = lam * q  =>  rp = (lam*wq/wp) * rq
            parent[rp] = rq
            weight[rp] = lam * wq / wp
        out: Dict[Path, Tuple[object, Path]] = {}
        members = sorted(parent, key=lambda z: (z.source, z.arrows))
        roots: Dict[Path, Path] = {}
        for z in members:
            r, _ = raw_weight(z)
            if r not in roots:
                roots[r] = z  # first member in sort order becomes representative
        for z in members:
            r, w = raw_weight(z)
            rep = roots[r]
            _, wrep = raw_weight(rep)
            out[z] = (w / wrep, rep)
        return out

    def ident_class_of(self, p: Path) -> Tuple[object, Path]:
        return self._rep.get(p, (self.field.one, p))

    # -- normal forms ----------------------------------------------------

    def normal_form(self, path: Path) -> Optional[Tuple[object, Path]]:
        """Express the image of a path as (scalar, basis label), or None for zero."""
        if path.is_trivial:
            return (self.field.one, path)
        if not self._is_chain(path, self._succ):
            return None
        return self.ident_class_of(path)

    def right_action(self, label: Path, a: str) -> Optional[Tuple[object, Path]]:
        """Multiply a basis label by an arrow on the right."""
        arr = self.quiver.arrow(a)
        step = Path(arr.source, arr.target, (a,))
        prod = compose(label, step)
        if prod is None:
            return None
        return self.normal_form(prod)

    def mult(self, x: Path, y: Path) -> Optional[Tuple[object, Path]]:
        prod = compose(x, y)
        if prod is None:
            return None
        return self.normal_form(prod)

    def reduce_combination(self, lc: LinearCombination) -> LinearCombination:
        """Rewrite a path-algebra element onto the basis labels."""
        out: Dict[Path, object] = {}
        for path, coeff in lc.terms.items():
            nf = self.normal_form(path)
            if nf is None:
                continue
            scalar, label = nf
            out[label] = out.get(label, self.field.zero) + coeff * scalar
        return LinearCombination(self.field, out)

    # -- basis -----------------------------------------------------------

    def basis(self) -> List[Path]:
        """Trivial paths plus all chain paths, identification classes collapsed."""
        if self._basis is not None:
            return self._basis
        labels: List[Path] = [self.quiver.trivial_path(v) for v in self.quiver.vertices]
        seen = set(labels)
        for a in self.quiver.arrows:
            for i in range(self.t[a.name] + 1):
                p = self.p_chain(a.name, i)
                _, rep = self.ident_class_of(p)
                if rep not in seen:
                    seen.add(rep)
                    labels.append(rep)
        self._basis = labels
        return labels

    def dimension(self) -> int:
        return len(self.basis())

    def uniserial_paths(self, a: str) -> List[Path]:
        """The chain basis of U_a = aA: [p_0(a), ..., p_t(a)]."""
        return [self.p_chain(a, i) for i in range(self.t[a] + 1)]

    # -- condition record -------------------------------------------------

    def check_conditions(self) -> ConditionReport:
        report = check_conditions(self.quiver, self.pi.pairs)
        report.arrow_free = all(self.t[a.name] >= 1 for a in self.quiver.arrows) and all(
            self._s[a.name] >= 1 for a in self.quiver.arrows
        )
        return report

    # -- multiserial check on the algebra itself --------------------------

    def multiserial_check(self) -> Tuple[bool, Dict[str, List[Tuple[str, List[Path]]]]]:
        """Check radical decompositions of all projectives on both sides."""
        ok_r, witness = self._multiserial_side()
        ok_l, _ = self.opposite()._multiserial_side()
        return ok_r and ok_l, witness

    def _multiserial_side(self) -> Tuple[bool, Dict[str, List[Tuple[str, List[Path]]]]]:
        witness: Dict[str, List[Tuple[str, List[Path]]]] = {}
        ok = True
        for v in self.quiver.vertices:
            labels = [b for b in self.basis() if b.source == v]
            index = {lab: k for k, lab in enumerate(labels)}
            n = len(labels)
            unis: List[Tuple[str, List[Path]]] = []
            vecs: List[List] = []
            for arr in self.quiver.arrows_from(v):
                chain = []
                vec = [self.field.zero] * n
                for p in self.uniserial_paths(arr.name):
                    _, rep = self.ident_class_of(p)
                    chain.append(rep)
                    vec[index[rep]] = self.field.one
                unis.append((arr.name, chain))
                vecs.append([row for row in self._indicator_rows(chain, index, n)])
            witness[v] = unis
            rad_labels = [lab for lab in labels if not lab.is_trivial]
            rad_rows = self._indicator_rows(rad_labels, index, n)
            sum_rows = [row for rows in vecs for row in rows]
            if not linalg.same_rowspace(sum_rows, rad_rows, self.field, n):
                ok = False
            for i in range(len(vecs)):
                for j in range(i + 1, len(vecs)):
                    meet = linalg.intersect_rowspaces(vecs[i], vecs[j], self.field, n)
                    if len(meet) > 1:
                        ok = False
                    elif len(meet) == 1 and not self._is_socle_vector(meet[0], labels):
                        ok = False
        return ok, witness

    def _indicator_rows(self, chain: Sequence[Path], index: Mapping[Path, int], n: int) -> List[List]:
        rows = []
        for lab in chain:
            row = [self.field.zero] * n
            row[index[lab]] = self.field.one
            rows.append(row)
        return rows

    def _is_socle_vector(self, vec: Sequence, labels: Sequence[Path]) -> bool:
        support = [lab for x, lab in zip(vec, labels) if x]
        for lab in support:
            for arr in self.quiver.arrows_from(lab.target):
                if self.right_action(lab, arr.name) is not None:
                    return False
        return True

    # -- opposite ----------------------------------------------------------

    def opposite(self) -> "SpecialPresentation":
        op_quiver = Quiver(
            self.quiver.vertices,
            [(a.name, a.target, a.source) for a in self.quiver.arrows],
        )
        op_pi = self.pi.transpose()
        op_t = {a: self._s[a] for a in self.t}
        op_idents = []
        for p, q, lam in self.idents:
            op_p = Path(p.target, p.source, tuple(reversed(p.arrows)))
            op_q = Path(q.target, q.source, tuple(reversed(q.arrows)))
            op_idents.append((op_p, op_q, lam))
        return SpecialPresentation(op_quiver, self.field, op_pi, op_t, op_idents)

    def __eq__(self, other):
        if not isinstance(other, SpecialPresentation):
            return NotImplemented
        return (
            self.quiver.vertices == other.quiver.vertices
            and self.quiver.arrows == other.quiver.arrows
            and self.field == other.field
            and self.pi.pairs == other.pi.pairs
            and self.t == other.t
            and set(self.idents) == set(other.idents)
        )

    def __repr__(self):
        return (
            f"SpecialPresentation({len(self.quiver.vertices)} vertices, "
            f"{len(self.quiver.arrows)} arrows, |pi|={len(self.pi)}, dim={self.dimension()})"
        )


def _s_values(quiver: Quiver, t: Mapping[str, int], pred: Mapping[str, str]) -> Dict[str, int]:
    out = {}
    for arr in quiver.arrows:
        a = arr.name
        s = 0
        cur = a
        j = 1
        while True:
            b = pred.get(cur)
            if b is None or t[b] < j:
                break
            s = j
            cur = b
            j += 1
        out[a] = s
    return out
