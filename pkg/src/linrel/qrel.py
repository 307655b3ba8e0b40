"""Quantale-valued relations between finite sets.

A relation is a dense matrix of carrier elements.  Tensor composition
joins pointwise products over the middle set; par composition meets
pointwise par sums.  Together with the two identity families this is the
1-cell calculus the law suites in :mod:`linrel.verify` exercise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Iterator, Sequence

from .errors import (
    DuplicateNameError,
    InputFormatError,
    MismatchError,
    NoParStructureError,
    NotGirardError,
)
from .quantale import MINUS_INF, PLUS_INF, Elem
from .report import LawReport, Sampler, law_entry

# Quantale, GirardQuantale, or LDQuantale; duck-typed on the shared
# order/multiplication surface.
Ambient = Any


@dataclass(frozen=True)
class FiniteSet:
    name: str
    members: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.members)


def finite_set(name: str, members: Sequence[str]) -> FiniteSet:
    members = tuple(members)
    if len(set(members)) != len(members):
        raise DuplicateNameError(f"set {name!r} has duplicate members")
    return FiniteSet(name=name, members=members)


@dataclass(frozen=True)
class QRelation:
    """A matrix of carrier elements indexed (source member, target member)."""

    source: FiniteSet
    target: FiniteSet
    ambient: Ambient
    values: tuple[tuple[Elem, ...], ...]

    def entry(self, x: str, y: str) -> Elem:
        return self.values[self.source.members.index(x)][self.target.members.index(y)]


def relation(source: FiniteSet, target: FiniteSet, ambient: Ambient,
             values: Sequence[Sequence[Elem]]) -> QRelation:
    """Validating constructor; composition results skip the entry scan."""
    rows = tuple(tuple(row) for row in values)
    if len(rows) != len(source) or any(len(r) != len(target) for r in rows):
        raise MismatchError(
            f"values must be {len(source)}x{len(target)} for "
            f"{source.name!r} to {target.name!r}")
    for row in rows:
        for v in row:
            if not ambient.contains(v):
                ambient.carrier.check(v)
    return QRelation(source=source, target=target, ambient=ambient, values=rows)


def _require_par(amb: Ambient) -> None:
    if not getattr(amb, "has_par", False):
        raise NoParStructureError("ambient quantale has no par structure")


def _require_composable(f: QRelation, g: QRelation) -> None:
    if f.target is not g.source and f.target != g.source:
        raise MismatchError(
            f"cannot compose {f.source.name}->{f.target.name} with "
            f"{g.source.name}->{g.target.name}")
    if f.ambient is not g.ambient and f.ambient != g.ambient:
        raise MismatchError("relations live over different quantales")


def compose_tensor(f: QRelation, g: QRelation) -> QRelation:
    """Join over the middle set of pointwise tensor products."""
    _require_composable(f, g)
    amb = f.ambient
    gv = g.values
    ny = len(f.target)
    nz = len(g.target)
    tm = getattr(amb, "tensor_map", None)
    jm = getattr(amb, "join_map", None)
    if tm is not None and jm is not None:
        bot = amb.bottom
        rows = []
        for frow in f.values:
            row = []
            for z in range(nz):
                acc = bot
                for y in range(ny):
                    acc = jm[acc][tm[frow[y]][gv[y][z]]]
                row.append(acc)
            rows.append(tuple(row))
        vals = tuple(rows)
    else:
        t = amb.tensor
        jn = amb.join
        vals = tuple(
            tuple(jn([t(frow[y], gv[y][z]) for y in range(ny)])
                  for z in range(nz))
            for frow in f.values)
    return QRelation(f.source, g.target, amb, vals)


def compose_par(f: QRelation, g: QRelation) -> QRelation:
    """Meet over the middle set of pointwise par sums."""
    _require_composable(f, g)
    _require_par(f.ambient)
    amb = f.ambient
    gv = g.values
    ny = len(f.target)
    nz = len(g.target)
    pm = getattr(amb, "par_map", None)
    mm = getattr(amb, "meet_map", None)
    if pm is not None and mm is not None:
        top = amb.top
        rows = []
        for frow in f.values:
            row = []
            for z in range(nz):
                acc = top
                for y in range(ny):
                    acc = mm[acc][pm[frow[y]][gv[y][z]]]
                row.append(acc)
            rows.append(tuple(row))
        vals = tuple(rows)
    else:
        p = amb.par
        mt = amb.meet
        vals = tuple(
            tuple(mt([p(frow[y], gv[y][z]) for y in range(ny)])
                  for z in range(nz))
            for frow in f.values)
    return QRelation(f.source, g.target, amb, vals)


def id_top(X: FiniteSet, amb: Ambient) -> QRelation:
    """Tensor identity: the unit on the diagonal, bottom elsewhere."""
    unit, bot = amb.unit, amb.bottom
    n = len(X)
    vals = tuple(tuple(unit if i == j else bot for j in range(n)) for i in range(n))
    return QRelation(X, X, amb, vals)


def id_bot(X: FiniteSet, amb: Ambient) -> QRelation:
    """Par identity: the par unit on the diagonal, top elsewhere."""
    _require_par(amb)
    pu, top = amb.par_unit, amb.top
    n = len(X)
    vals = tuple(tuple(pu if i == j else top for j in range(n)) for i in range(n))
    return QRelation(X, X, amb, vals)


def zero_relation(X: FiniteSet, Y: FiniteSet, amb: Ambient) -> QRelation:
    bot = amb.bottom
    return QRelation(X, Y, amb, tuple(tuple(bot for _ in Y.members)
                                      for _ in X.members))


def top_relation(X: FiniteSet, Y: FiniteSet, amb: Ambient) -> QRelation:
    top = amb.top
    return QRelation(X, Y, amb, tuple(tuple(top for _ in Y.members)
                                      for _ in X.members))


def rel_leq(f: QRelation, g: QRelation) -> bool:
    if f.source != g.source or f.target != g.target or f.ambient != g.ambient:
        raise MismatchError("relations are not parallel")
    leq = f.ambient.leq
    return all(leq(a, b) for fr, gr in zip(f.values, g.values)
               for a, b in zip(fr, gr))


def rel_join(f: QRelation, g: QRelation) -> QRelation:
    if f.source != g.source or f.target != g.target or f.ambient != g.ambient:
        raise MismatchError("relations are not parallel")
    jn = f.ambient.join
    vals = tuple(tuple(jn((a, b)) for a, b in zip(fr, gr))
                 for fr, gr in zip(f.values, g.values))
    return QRelation(f.source, f.target, f.ambient, vals)


def rel_meet(f: QRelation, g: QRelation) -> QRelation:
    if f.source != g.source or f.target != g.target or f.ambient != g.ambient:
        raise MismatchError("relations are not parallel")
    mt = f.ambient.meet
    vals = tuple(tuple(mt((a, b)) for a, b in zip(fr, gr))
                 for fr, gr in zip(f.values, g.values))
    return QRelation(f.source, f.target, f.ambient, vals)


def right_extension(f: QRelation, h: QRelation) -> QRelation:
    """Largest s with f (x) s <= h, for f: X->Y and h: X->Z; result Y->Z."""
    if f.source != h.source or f.ambient != h.ambient:
        raise MismatchError("right extension needs a common source")
    amb = f.ambient
    rr = amb.residual_right
    mt = amb.meet
    X, Y, Z = f.source, f.target, h.target
    vals = tuple(
        tuple(mt([rr(f.values[x][y], h.values[x][z]) for x in range(len(X))])
              for z in range(len(Z)))
        for y in range(len(Y)))
    return QRelation(Y, Z, amb, vals)


def right_lifting(h: QRelation, f: QRelation) -> QRelation:
    """Largest s with s (x) f <= h, for h: Z->Y and f: X->Y; result Z->X."""
    if f.target != h.target or f.ambient != h.ambient:
        raise MismatchError("right lifting needs a common target")
    amb = f.ambient
    rl = amb.residual_left
    mt = amb.meet
    Z, Y, X = h.source, f.target, f.source
    vals = tuple(
        tuple(mt([rl(h.values[z][y], f.values[x][y]) for y in range(len(Y))])
              for x in range(len(X)))
        for z in range(len(Z)))
    return QRelation(Z, X, amb, vals)


def dual_family(X: FiniteSet, amb: Ambient, d: Elem | None = None) -> QRelation:
    """The dualizing endo-relation: d on the diagonal, lattice top off it."""
    if d is None:
        d = getattr(amb, "dualizer", None)
        if d is None:
            raise NotGirardError("no dualizer available for the dual family")
    amb.carrier.check(d)
    top = amb.top
    n = len(X)
    vals = tuple(tuple(d if i == j else top for j in range(n)) for i in range(n))
    return QRelation(X, X, amb, vals)


def rel_dual(r: QRelation, d: Elem | None = None) -> QRelation:
    """Entrywise residual into the dualizer, transposed."""
    amb = r.ambient
    if d is None:
        d = getattr(amb, "dualizer", None)
        if d is None:
            raise NotGirardError("relation dual needs a Girard ambient")
    rr = amb.residual_right
    vals = tuple(
        tuple(rr(r.values[x][y], d) for x in range(len(r.source)))
        for y in range(len(r.target)))
    return QRelation(r.target, r.source, amb, vals)


def check_linear_adjoint(A: QRelation, B: QRelation) -> bool:
    """True iff id_top <= A par B and B (x) A <= id_bot, as 2-cells."""
    if A.source != B.target or A.target != B.source or A.ambient != B.ambient:
        raise MismatchError("candidate adjoint has the wrong boundary")
    _require_par(A.ambient)
    X, Y = A.source, A.target
    amb = A.ambient
    return (rel_leq(id_top(X, amb), compose_par(A, B))
            and rel_leq(compose_tensor(B, A), id_bot(Y, amb)))


# ---------------------------------------------------------------------------
# Enumeration and sampling


def enumerate_relations(amb: Ambient, X: FiniteSet, Y: FiniteSet) -> Iterator[QRelation]:
    """All relations X->Y over a finite carrier, in element declaration order."""
    els = amb.carrier.lattice.elements
    nx, ny = len(X), len(Y)
    for flat in product(els, repeat=nx * ny):
        vals = tuple(flat[i * ny:(i + 1) * ny] for i in range(nx))
        yield QRelation(X, Y, amb, vals)


def count_relations(amb: Ambient, X: FiniteSet, Y: FiniteSet) -> int | None:
    """Slot size for finite carriers, None when the carrier is infinite."""
    if not amb.carrier.is_finite:
        return None
    return len(amb.carrier.lattice.elements) ** (len(X) * len(Y))


def random_relation(rng, amb: Ambient, X: FiniteSet, Y: FiniteSet,
                    window: int = 10, inf_weight: float = 0.125) -> QRelation:
    if amb.carrier.is_finite:
        els = amb.carrier.lattice.elements
        vals = tuple(tuple(rng.choice(els) for _ in Y.members) for _ in X.members)
    else:
        def entry() -> Elem:
            u = rng.random()
            if u < inf_weight:
                return PLUS_INF
            if u < 2 * inf_weight:
                return MINUS_INF
            return rng.randint(-window, window)
        vals = tuple(tuple(entry() for _ in Y.members) for _ in X.members)
    return QRelation(X, Y, amb, vals)


def sample_relation_tuples(amb: Ambient, sets: Sequence[FiniteSet],
                           sampler: Sampler, n_points: int,
                           ) -> tuple[str, list[tuple[QRelation, ...]]]:
    """Composable relation tuples along a chain of ``n_points`` sets.

    Exhaustive when the finite carrier keeps every slot under the per-slot
    cap and the full tuple count under the budget; otherwise seeded random.
    Returns the sample mode label together with the realized cases.
    """
    boundaries = list(product(sets, repeat=n_points))
    total = 0
    exhaustive_ok = amb.carrier.is_finite
    if exhaustive_ok:
        for bnd in boundaries:
            slot_counts = [count_relations(amb, bnd[i], bnd[i + 1])
                           for i in range(n_points - 1)]
            if any(c > sampler.slot_cap for c in slot_counts):
                exhaustive_ok = False
                break
            prod = 1
            for c in slot_counts:
                prod *= c
            total += prod
            if total > sampler.tuple_budget:
                exhaustive_ok = False
                break
    if exhaustive_ok and sampler.mode == "exhaustive":
        cases = []
        for bnd in boundaries:
            slots = [list(enumerate_relations(amb, bnd[i], bnd[i + 1]))
                     for i in range(n_points - 1)]
            cases.extend(product(*slots))
        return sampler.exhaustive_label(), [tuple(c) for c in cases]
    rng = sampler.rng()
    cases = []
    for _ in range(sampler.count):
        bnd = boundaries[rng.randrange(len(boundaries))]
        cases.append(tuple(
            random_relation(rng, amb, bnd[i], bnd[i + 1],
                            sampler.window, sampler.inf_weight)
            for i in range(n_points - 1)))
    return sampler.random_label(), cases


# ---------------------------------------------------------------------------
# Relation-level law suite

# Each law maps to (number of chained sets, predicate).  Predicates receive
# the composable relation tuple and must be pure so the shrinker can replay
# them.

def _law_tensor_assoc(rels):
    f, g, h = rels
    return compose_tensor(compose_tensor(f, g), h).values == \
        compose_tensor(f, compose_tensor(g, h)).values


def _law_tensor_unit_left(rels):
    (f,) = rels
    return compose_tensor(id_top(f.source, f.ambient), f).values == f.values


def _law_tensor_unit_right(rels):
    (f,) = rels
    return compose_tensor(f, id_top(f.target, f.ambient)).values == f.values


def _law_par_assoc(rels):
    f, g, h = rels
    return compose_par(compose_par(f, g), h).values == \
        compose_par(f, compose_par(g, h)).values


def _law_par_unit_left(rels):
    (f,) = rels
    return compose_par(id_bot(f.source, f.ambient), f).values == f.values


def _law_par_unit_right(rels):
    (f,) = rels
    return compose_par(f, id_bot(f.target, f.ambient)).values == f.values


def _law_distribution_left(rels):
    f, g, h = rels
    lhs = compose_tensor(f, compose_par(g, h))
    rhs = compose_par(compose_tensor(f, g), h)
    return rel_leq(lhs, rhs)


def _law_distribution_right(rels):
    f, g, h = rels
    lhs = compose_tensor(compose_par(f, g), h)
    rhs = compose_par(f, compose_tensor(g, h))
    return rel_leq(lhs, rhs)


def _law_tensor_sup_left(rels):
    f1, f2, g = rels
    lhs = compose_tensor(rel_join(f1, f2), g)
    rhs = rel_join(compose_tensor(f1, g), compose_tensor(f2, g))
    return lhs.values == rhs.values


def _law_tensor_sup_right(rels):
    g1, g2, f = rels
    lhs = compose_tensor(f, rel_join(g1, g2))
    rhs = rel_join(compose_tensor(f, g1), compose_tensor(f, g2))
    return lhs.values == rhs.values


def _law_par_inf_left(rels):
    f1, f2, g = rels
    lhs = compose_par(rel_meet(f1, f2), g)
    rhs = rel_meet(compose_par(f1, g), compose_par(f2, g))
    return lhs.values == rhs.values


def _law_par_inf_right(rels):
    g1, g2, f = rels
    lhs = compose_par(f, rel_meet(g1, g2))
    rhs = rel_meet(compose_par(f, g1), compose_par(f, g2))
    return lhs.values == rhs.values


def _law_tensor_bottom_left(rels):
    (f,) = rels
    z = zero_relation(f.source, f.source, f.ambient)
    return compose_tensor(z, f).values == \
        zero_relation(f.source, f.target, f.ambient).values


def _law_tensor_bottom_right(rels):
    (f,) = rels
    z = zero_relation(f.target, f.target, f.ambient)
    return compose_tensor(f, z).values == \
        zero_relation(f.source, f.target, f.ambient).values


def _law_par_top_left(rels):
    (f,) = rels
    t = top_relation(f.source, f.source, f.ambient)
    return compose_par(t, f).values == \
        top_relation(f.source, f.target, f.ambient).values


def _law_par_top_right(rels):
    (f,) = rels
    t = top_relation(f.target, f.target, f.ambient)
    return compose_par(f, t).values == \
        top_relation(f.source, f.target, f.ambient).values


def _law_tensor_monotone_left(rels):
    f1, f2, g = rels
    return rel_leq(compose_tensor(f1, g), compose_tensor(rel_join(f1, f2), g))


def _law_tensor_monotone_right(rels):
    g1, g2, f = rels
    return rel_leq(compose_tensor(f, g1), compose_tensor(f, rel_join(g1, g2)))


def _law_par_monotone_left(rels):
    f1, f2, g = rels
    return rel_leq(compose_par(f1, g), compose_par(rel_join(f1, f2), g))


def _law_par_monotone_right(rels):
    g1, g2, f = rels
    return rel_leq(compose_par(f, g1), compose_par(f, rel_join(g1, g2)))


# shape "chain": n composable relations along X0 -> X1 -> ... ;
# shape "fork-left": two parallel relations X0 -> X1 plus one X1 -> X2;
# shape "fork-right": two parallel relations X1 -> X2 plus one X0 -> X1.
REL_LAW_SPECS: dict[str, tuple[str, Any]] = {
    "tensor-associativity": ("chain3", _law_tensor_assoc),
    "tensor-unit-left": ("chain1", _law_tensor_unit_left),
    "tensor-unit-right": ("chain1", _law_tensor_unit_right),
    "tensor-sup-left": ("fork-left", _law_tensor_sup_left),
    "tensor-sup-right": ("fork-right", _law_tensor_sup_right),
    "tensor-bottom-left": ("chain1", _law_tensor_bottom_left),
    "tensor-bottom-right": ("chain1", _law_tensor_bottom_right),
    "par-associativity": ("chain3", _law_par_assoc),
    "par-unit-left": ("chain1", _law_par_unit_left),
    "par-unit-right": ("chain1", _law_par_unit_right),
    "par-inf-left": ("fork-left", _law_par_inf_left),
    "par-inf-right": ("fork-right", _law_par_inf_right),
    "par-top-left": ("chain1", _law_par_top_left),
    "par-top-right": ("chain1", _law_par_top_right),
    "linear-distribution-left": ("chain3", _law_distribution_left),
    "linear-distribution-right": ("chain3", _law_distribution_right),
    "tensor-monotone-left": ("fork-left", _law_tensor_monotone_left),
    "tensor-monotone-right": ("fork-right", _law_tensor_monotone_right),
    "par-monotone-left": ("fork-left", _law_par_monotone_left),
    "par-monotone-right": ("fork-right", _law_par_monotone_right),
}


def _sample_forks(amb, sets, sampler: Sampler, left: bool):
    """Two parallel relations plus a composable third.

    ``left=True`` yields (f1: X->Y, f2: X->Y, g: Y->Z); otherwise
    (g1: Y->Z, g2: Y->Z, f: X->Y).
    """
    boundaries = list(product(sets, repeat=3))
    exhaustive_ok = amb.carrier.is_finite
    total = 0
    if exhaustive_ok:
        for X, Y, Z in boundaries:
            c_xy = count_relations(amb, X, Y)
            c_yz = count_relations(amb, Y, Z)
            if max(c_xy, c_yz) > sampler.slot_cap:
                exhaustive_ok = False
                break
            total += c_xy * c_xy * c_yz if left else c_yz * c_yz * c_xy
            if total > sampler.tuple_budget:
                exhaustive_ok = False
                break
    if exhaustive_ok and sampler.mode == "exhaustive":
        cases = []
        for X, Y, Z in boundaries:
            firsts = list(enumerate_relations(amb, X, Y))
            seconds = list(enumerate_relations(amb, Y, Z))
            if left:
                cases.extend(product(firsts, firsts, seconds))
            else:
                cases.extend(product(seconds, seconds, firsts))
        return sampler.exhaustive_label(), [tuple(c) for c in cases]
    rng = sampler.rng()
    cases = []
    for _ in range(sampler.count):
        X, Y, Z = boundaries[rng.randrange(len(boundaries))]
        draw = lambda A, B: random_relation(rng, amb, A, B,
                                            sampler.window, sampler.inf_weight)
        if left:
            cases.append((draw(X, Y), draw(X, Y), draw(Y, Z)))
        else:
            cases.append((draw(Y, Z), draw(Y, Z), draw(X, Y)))
    return sampler.random_label(), cases


def _cases_for_shape(amb, sets, sampler, shape):
    if shape == "chain1":
        return sample_relation_tuples(amb, sets, sampler, 2)
    if shape == "chain3":
        return sample_relation_tuples(amb, sets, sampler, 4)
    if shape == "fork-left":
        return _sample_forks(amb, sets, sampler, True)
    if shape == "fork-right":
        return _sample_forks(amb, sets, sampler, False)
    raise AssertionError(shape)


def _shrink_case(rels: tuple[QRelation, ...], pred) -> tuple[QRelation, ...]:
    """Greedy witness minimization: drop set members, then lower entries."""

    def restrict(rel: QRelation, victim: FiniteSet, keep: tuple[int, ...]) -> QRelation:
        src, tgt, vals = rel.source, rel.target, rel.values
        if src == victim:
            src = FiniteSet(src.name, tuple(src.members[i] for i in keep))
            vals = tuple(vals[i] for i in keep)
        if tgt == victim:
            tgt = FiniteSet(tgt.name, tuple(tgt.members[i] for i in keep))
            vals = tuple(tuple(row[i] for i in keep) for row in vals)
        return QRelation(src, tgt, rel.ambient, vals)

    changed = True
    while changed:
        changed = False
        seen: list[FiniteSet] = []
        for rel in rels:
            for s in (rel.source, rel.target):
                if s not in seen and len(s) > 1:
                    seen.append(s)
        for victim in seen:
            for drop in range(len(victim)):
                keep = tuple(i for i in range(len(victim)) if i != drop)
                candidate = tuple(restrict(r, victim, keep) for r in rels)
                try:
                    if not pred(candidate):
                        rels = candidate
                        changed = True
                        break
                except Exception:
                    continue
            if changed:
                break

    amb = rels[0].ambient
    if amb.carrier.is_finite:
        lows = list(amb.carrier.lattice.elements)
    else:
        lows = [MINUS_INF, 0]
    changed = True
    while changed:
        changed = False
        for ri, rel in enumerate(rels):
            for x in range(len(rel.source)):
                for y in range(len(rel.target)):
                    cur = rel.values[x][y]
                    for low in lows:
                        if low == cur or not amb.leq(low, cur):
                            continue
                        vals = list(map(list, rel.values))
                        vals[x][y] = low
                        cand_rel = QRelation(rel.source, rel.target, amb,
                                             tuple(map(tuple, vals)))
                        candidate = rels[:ri] + (cand_rel,) + rels[ri + 1:]
                        if not pred(candidate):
                            rels = candidate
                            rel = cand_rel
                            changed = True
                            break
    return rels


def _case_witness(rels: tuple[QRelation, ...]) -> dict:
    names = "fgh"
    wit: dict[str, Any] = {"sets": {}}
    for rel in rels:
        for s in (rel.source, rel.target):
            wit["sets"].setdefault(s.name, list(s.members))
    for i, rel in enumerate(rels):
        wit[names[i]] = {
            "source": rel.source.name,
            "target": rel.target.name,
            "values": [list(row) for row in rel.values],
        }
    return wit


def verify_qrel_laws(amb: Ambient, sets: Sequence[FiniteSet], sampler: Sampler,
                     suite: str = "qrel-laws",
                     labels: Sequence[str] | None = None) -> LawReport:
    """Run the linear-quantaloid law suite on sampled relation tuples."""
    _require_par(amb)
    if labels is None:
        labels = tuple(REL_LAW_SPECS)
    entries = []
    for label in labels:
        shape, pred = REL_LAW_SPECS[label]
        mode, cases = _cases_for_shape(amb, sets, sampler, shape)
        wit = None
        for case in cases:
            if not pred(case):
                shrunk = _shrink_case(case, lambda c: pred(c))
                wit = _case_witness(shrunk)
                break
        entries.append(law_entry(label, wit, mode))
    return LawReport(suite, tuple(entries))


def check_girard_qrel(amb: Ambient, sets: Sequence[FiniteSet], sampler: Sampler,
                      d: Elem | None = None,
                      suite: str = "girard-qrel") -> LawReport:
    """Cyclicity and double-dual of the diagonal dualizing family."""
    if d is None:
        d = getattr(amb, "dualizer", None)
        if d is None:
            raise NotGirardError("check needs a dualizer")
    mode, cases = sample_relation_tuples(amb, sets, sampler, 2)

    def cyclic(rels):
        (r,) = rels
        ext = right_extension(r, dual_family(r.source, r.ambient, d))
        lift = right_lifting(dual_family(r.target, r.ambient, d), r)
        return ext.values == lift.values

    def double_dual(rels):
        (r,) = rels
        return rel_dual(rel_dual(r, d), d).values == r.values

    entries = []
    for label, pred in (("girard-cyclic", cyclic), ("girard-double-dual", double_dual)):
        wit = None
        for case in cases:
            if not pred(case):
                shrunk = _shrink_case(case, lambda c: pred(c))
                wit = _case_witness(shrunk)
                wit["dualizer"] = d
                break
        entries.append(law_entry(label, wit, mode))
    return LawReport(suite, tuple(entries))


# Witness keys (a, b, c) name the roles in the element-level law display;
# the relation-level predicates take their arguments in a fixed slot order,
# which for the second distribution differs from the display order.
_TRANSFER_KEY_ORDER = {"linear-distribution-right": ("b", "c", "a")}


def transfer_quantale_witness(amb: Ambient, label: str, witness: dict) -> tuple[bool, dict]:
    """Replay a quantale-law failure as one-point relations.

    Element witnesses carry keys ``a``, ``b``, ``c``; the corresponding
    relation law is evaluated on 1x1 constant relations over a singleton
    set.  Returns the law outcome and the constructed relation witness.
    """
    point = FiniteSet("pt", ("*",))

    def const(v: Elem) -> QRelation:
        return QRelation(point, point, amb, ((v,),))

    shape, pred = REL_LAW_SPECS[label]
    order = _TRANSFER_KEY_ORDER.get(label, ("a", "b", "c"))
    keys = [k for k in order if k in witness]
    rels = tuple(const(witness[k]) for k in keys)
    if shape == "chain1":
        rels = rels[:1]
    elif len(rels) < 3:
        rels = rels + tuple(const(witness[keys[-1]]) for _ in range(3 - len(rels)))
    holds = pred(rels)
    return holds, _case_witness(rels)


# ---------------------------------------------------------------------------
# JSON interface


def _encode_entry(v: Elem) -> Any:
    return v


def _decode_entry(v: Any) -> Elem:
    if isinstance(v, str) and v not in (PLUS_INF, MINUS_INF):
        return v
    return v


def relation_to_json(r: QRelation) -> dict:
    return {
        "source": {"name": r.source.name, "members": list(r.source.members)},
        "target": {"name": r.target.name, "members": list(r.target.members)},
        "values": [[_encode_entry(v) for v in row] for row in r.values],
    }


def relation_from_json(obj: dict, amb: Ambient) -> QRelation:
    try:
        src = finite_set(obj["source"]["name"], obj["source"]["members"])
        tgt = finite_set(obj["target"]["name"], obj["target"]["members"])
        rows = obj["values"]
    except (KeyError, TypeError) as exc:
        raise InputFormatError(f"relation file is missing field: {exc}") from None
    return relation(src, tgt, amb, [[_decode_entry(v) for v in row] for row in rows])
