"""Finite quantaloids, their Girard families, and monads with bimodules.

Hom-sets are finite lattices; composition is diagrammatic (f: a->b then
g: b->c yields f.g: a->c) and given by explicit tables per composable
triple of objects.  An optional par layer adds the second composition and
its identities, making the structure a linear quantaloid candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .errors import (
    InputFormatError,
    MismatchError,
    NoParStructureError,
    NotGirardError,
    SearchSpaceError,
)
from .lattice import FiniteLattice, build_lattice, lattice_from_leq
from .quantale import (
    FiniteCarrier,
    LDQuantale,
    Quantale,
    TableOp,
)
from .report import LawReport, law_entry

Obj = str
Hom = tuple[str, str]


@dataclass(frozen=True)
class FiniteQuantaloid:
    objects: tuple[Obj, ...]
    homs: dict[Hom, FiniteLattice]
    tensor_tables: dict[tuple[Obj, Obj, Obj], tuple[tuple[str, ...], ...]]
    units_top: dict[Obj, str]
    par_tables: dict[tuple[Obj, Obj, Obj], tuple[tuple[str, ...], ...]] | None = None
    units_bot: dict[Obj, str] | None = None

    @property
    def has_par(self) -> bool:
        return self.par_tables is not None

    def hom(self, a: Obj, b: Obj) -> FiniteLattice:
        try:
            return self.homs[(a, b)]
        except KeyError:
            raise MismatchError(f"no hom from {a!r} to {b!r}") from None

    def compose(self, a: Obj, b: Obj, c: Obj, f: str, g: str) -> str:
        table = self.tensor_tables[(a, b, c)]
        return table[self.hom(a, b).index(f)][self.hom(b, c).index(g)]

    def par_compose(self, a: Obj, b: Obj, c: Obj, f: str, g: str) -> str:
        if self.par_tables is None:
            raise NoParStructureError("quantaloid has no par layer")
        table = self.par_tables[(a, b, c)]
        return table[self.hom(a, b).index(f)][self.hom(b, c).index(g)]

    def unit_top(self, a: Obj) -> str:
        return self.units_top[a]

    def unit_bot(self, a: Obj) -> str:
        if self.units_bot is None:
            raise NoParStructureError("quantaloid has no par layer")
        return self.units_bot[a]


def finite_quantaloid(objects: Sequence[Obj],
                      homs: Mapping[Hom, FiniteLattice],
                      tensor_tables: Mapping[tuple[Obj, Obj, Obj], Sequence[Sequence[str]]],
                      units_top: Mapping[Obj, str],
                      par_tables: Mapping[tuple[Obj, Obj, Obj], Sequence[Sequence[str]]] | None = None,
                      units_bot: Mapping[Obj, str] | None = None) -> FiniteQuantaloid:
    """Validating constructor: every pair needs a hom lattice, every
    composable triple a total table with entries in the target hom."""
    objs = tuple(objects)
    homs = dict(homs)
    for pair in product(objs, repeat=2):
        if pair not in homs:
            raise InputFormatError(f"missing hom lattice for {pair}")

    def normalize(tables: Mapping, label: str) -> dict:
        out = {}
        for trip in product(objs, repeat=3):
            a, b, c = trip
            if trip not in tables:
                raise InputFormatError(f"missing {label} table for {trip}")
            rows = tuple(tuple(r) for r in tables[trip])
            h_ab, h_bc, h_ac = homs[(a, b)], homs[(b, c)], homs[(a, c)]
            if len(rows) != len(h_ab) or any(len(r) != len(h_bc) for r in rows):
                raise InputFormatError(f"{label} table for {trip} has wrong shape")
            for r in rows:
                for v in r:
                    if v not in h_ac:
                        raise InputFormatError(
                            f"{label} table for {trip} hits unknown element {v!r}")
            out[trip] = rows
        return out

    t_tables = normalize(tensor_tables, "tensor")
    p_tables = None
    u_bot = None
    if par_tables is not None:
        if units_bot is None:
            raise InputFormatError("par layer needs par identity elements")
        p_tables = normalize(par_tables, "par")
        u_bot = dict(units_bot)
    u_top = dict(units_top)
    for a in objs:
        homs[(a, a)].index(u_top[a])
        if u_bot is not None:
            homs[(a, a)].index(u_bot[a])
    return FiniteQuantaloid(objects=objs, homs=homs, tensor_tables=t_tables,
                            units_top=u_top, par_tables=p_tables, units_bot=u_bot)


def one_object_quantaloid(amb, obj: Obj = "*") -> FiniteQuantaloid:
    """View a finite quantale (or LD/Girard structure) as a one-object
    quantaloid, carrying the par layer across when available."""
    if not amb.carrier.is_finite:
        raise MismatchError("only finite carriers can be materialized")
    lattice = amb.carrier.lattice
    els = lattice.elements
    t_table = tuple(tuple(amb.tensor(f, g) for g in els) for f in els)
    par_tables = None
    units_bot = None
    if getattr(amb, "has_par", False):
        par_tables = {(obj, obj, obj): tuple(tuple(amb.par(f, g) for g in els)
                                             for f in els)}
        units_bot = {obj: amb.par_unit}
    return FiniteQuantaloid(
        objects=(obj,),
        homs={(obj, obj): lattice},
        tensor_tables={(obj, obj, obj): t_table},
        units_top={obj: amb.unit},
        par_tables=par_tables,
        units_bot=units_bot,
    )


def quantaloid_to_quantale(Q: FiniteQuantaloid):
    """Inverse of the one-object embedding; round trips on tables."""
    if len(Q.objects) != 1:
        raise MismatchError("only one-object quantaloids collapse to quantales")
    obj = Q.objects[0]
    lattice = Q.hom(obj, obj)
    tensor = Quantale(carrier=FiniteCarrier(lattice),
                      op=TableOp(Q.tensor_tables[(obj, obj, obj)]),
                      unit=Q.unit_top(obj))
    if not Q.has_par:
        return tensor
    par = Quantale(carrier=FiniteCarrier(lattice.opposite()),
                   op=TableOp(Q.par_tables[(obj, obj, obj)]),
                   unit=Q.unit_bot(obj))
    return LDQuantale(tensor_part=tensor, par_part=par)


# ---------------------------------------------------------------------------
# Law suite


def _hom_elements(Q: FiniteQuantaloid, a: Obj, b: Obj) -> tuple[str, ...]:
    return Q.hom(a, b).elements


def check_quantaloid_laws(Q: FiniteQuantaloid,
                          suite: str = "quantaloid-laws") -> LawReport:
    """Exhaustive composition laws over all composable tuples; the par
    layer, when present, is checked dually plus both linear distributions."""
    entries = []
    mode = "exhaustive"

    def first(iterator):
        for wit in iterator:
            return wit
        return None

    def assoc_fail(compose):
        for a, b, c, d in product(Q.objects, repeat=4):
            for f in _hom_elements(Q, a, b):
                for g in _hom_elements(Q, b, c):
                    for h in _hom_elements(Q, c, d):
                        lhs = compose(a, c, d, compose(a, b, c, f, g), h)
                        rhs = compose(a, b, d, f, compose(b, c, d, g, h))
                        if lhs != rhs:
                            yield {"objects": [a, b, c, d], "f": f, "g": g,
                                   "h": h, "lhs": lhs, "rhs": rhs}

    def unit_fail(compose, unit, left):
        for a, b in product(Q.objects, repeat=2):
            for f in _hom_elements(Q, a, b):
                got = compose(a, a, b, unit(a), f) if left else \
                    compose(a, b, b, f, unit(b))
                if got != f:
                    yield {"objects": [a, b], "f": f, "lhs": got}

    def sup_fail(compose, bound, left):
        for a, b, c in product(Q.objects, repeat=3):
            h_ab, h_bc = Q.hom(a, b), Q.hom(b, c)
            h_ac = Q.hom(a, c)
            agg_src = h_ab if left else h_bc
            agg = agg_src.join if bound == "join" else agg_src.meet
            out = h_ac.join if bound == "join" else h_ac.meet
            for f1 in agg_src.elements:
                for f2 in agg_src.elements:
                    for g in (h_bc if left else h_ab).elements:
                        if left:
                            lhs = compose(a, b, c, agg((f1, f2)), g)
                            rhs = out((compose(a, b, c, f1, g),
                                       compose(a, b, c, f2, g)))
                        else:
                            lhs = compose(a, b, c, g, agg((f1, f2)))
                            rhs = out((compose(a, b, c, g, f1),
                                       compose(a, b, c, g, f2)))
                        if lhs != rhs:
                            yield {"objects": [a, b, c], "f1": f1, "f2": f2,
                                   "g": g, "lhs": lhs, "rhs": rhs}

    def absorb_fail(compose, bound, left):
        for a, b, c in product(Q.objects, repeat=3):
            if left:
                absorber = getattr(Q.hom(a, b), bound)
                for g in _hom_elements(Q, b, c):
                    got = compose(a, b, c, absorber, g)
                    want = getattr(Q.hom(a, c), bound)
                    if got != want:
                        yield {"objects": [a, b, c], "g": g, "lhs": got}
            else:
                absorber = getattr(Q.hom(b, c), bound)
                for f in _hom_elements(Q, a, b):
                    got = compose(a, b, c, f, absorber)
                    want = getattr(Q.hom(a, c), bound)
                    if got != want:
                        yield {"objects": [a, b, c], "f": f, "lhs": got}

    entries.append(law_entry("tensor-associativity", first(assoc_fail(Q.compose)), mode))
    entries.append(law_entry("tensor-unit-left",
                             first(unit_fail(Q.compose, Q.unit_top, True)), mode))
    entries.append(law_entry("tensor-unit-right",
                             first(unit_fail(Q.compose, Q.unit_top, False)), mode))
    entries.append(law_entry("tensor-sup-left",
                             first(sup_fail(Q.compose, "join", True)), mode))
    entries.append(law_entry("tensor-sup-right",
                             first(sup_fail(Q.compose, "join", False)), mode))
    entries.append(law_entry("tensor-bottom-left",
                             first(absorb_fail(Q.compose, "bottom", True)), mode))
    entries.append(law_entry("tensor-bottom-right",
                             first(absorb_fail(Q.compose, "bottom", False)), mode))

    if Q.has_par:
        entries.append(law_entry("par-associativity",
                                 first(assoc_fail(Q.par_compose)), mode))
        entries.append(law_entry("par-unit-left",
                                 first(unit_fail(Q.par_compose, Q.unit_bot, True)), mode))
        entries.append(law_entry("par-unit-right",
                                 first(unit_fail(Q.par_compose, Q.unit_bot, False)), mode))
        entries.append(law_entry("par-inf-left",
                                 first(sup_fail(Q.par_compose, "meet", True)), mode))
        entries.append(law_entry("par-inf-right",
                                 first(sup_fail(Q.par_compose, "meet", False)), mode))
        entries.append(law_entry("par-top-left",
                                 first(absorb_fail(Q.par_compose, "top", True)), mode))
        entries.append(law_entry("par-top-right",
                                 first(absorb_fail(Q.par_compose, "top", False)), mode))

        def dist_fail(left):
            for a, b, c, d in product(Q.objects, repeat=4):
                h_ad = Q.hom(a, d)
                for f in _hom_elements(Q, a, b):
                    for g in _hom_elements(Q, b, c):
                        for h in _hom_elements(Q, c, d):
                            if left:
                                lhs = Q.compose(a, b, d, f, Q.par_compose(b, c, d, g, h))
                                rhs = Q.par_compose(a, c, d, Q.compose(a, b, c, f, g), h)
                            else:
                                lhs = Q.compose(a, c, d, Q.par_compose(a, b, c, f, g), h)
                                rhs = Q.par_compose(a, b, d, f, Q.compose(b, c, d, g, h))
                            if not h_ad.leq(lhs, rhs):
                                yield {"objects": [a, b, c, d], "f": f, "g": g,
                                       "h": h, "lhs": lhs, "rhs": rhs}

        entries.append(law_entry("linear-distribution-left", first(dist_fail(True)), mode))
        entries.append(law_entry("linear-distribution-right", first(dist_fail(False)), mode))

    return LawReport(suite, tuple(entries))


# ---------------------------------------------------------------------------
# Girard families


def hom_dual(Q: FiniteQuantaloid, a: Obj, b: Obj, f: str,
             family: Mapping[Obj, str]) -> str:
    """Largest g: b->a with f.g below the family element at the source."""
    h_ba = Q.hom(b, a)
    d = family[a]
    keep = [g for g in h_ba.elements
            if Q.hom(a, a).leq(Q.compose(a, b, a, f, g), d)]
    return h_ba.join(keep)


def hom_dual_left(Q: FiniteQuantaloid, a: Obj, b: Obj, f: str,
                  family: Mapping[Obj, str]) -> str:
    """Largest g: b->a with g.f below the family element at the target."""
    h_ba = Q.hom(b, a)
    d = family[b]
    keep = [g for g in h_ba.elements
            if Q.hom(b, b).leq(Q.compose(b, a, b, g, f), d)]
    return h_ba.join(keep)


def check_girard_family(Q: FiniteQuantaloid, family: Mapping[Obj, str],
                        suite: str = "girard-family") -> LawReport:
    for a in Q.objects:
        if a not in family:
            raise MismatchError(f"family is missing object {a!r}")
        Q.hom(a, a).index(family[a])
    mode = "exhaustive"

    cyc_wit = None
    for a, b in product(Q.objects, repeat=2):
        for f in _hom_elements(Q, a, b):
            lhs = hom_dual(Q, a, b, f, family)
            rhs = hom_dual_left(Q, a, b, f, family)
            if lhs != rhs:
                cyc_wit = {"objects": [a, b], "f": f, "lhs": lhs, "rhs": rhs}
                break
        if cyc_wit:
            break

    dd_wit = None
    for a, b in product(Q.objects, repeat=2):
        for f in _hom_elements(Q, a, b):
            fd = hom_dual(Q, a, b, f, family)
            fdd = hom_dual(Q, b, a, fd, family)
            if fdd != f:
                dd_wit = {"objects": [a, b], "f": f, "dual": fd, "double": fdd}
                break
        if dd_wit:
            break

    return LawReport(suite, (
        law_entry("girard-cyclic", cyc_wit, mode),
        law_entry("girard-double-dual", dd_wit, mode),
    ))


def find_girard_families(Q: FiniteQuantaloid, cap: int = 20000) -> list[dict[Obj, str]]:
    sizes = 1
    for a in Q.objects:
        sizes *= len(Q.hom(a, a))
        if sizes > cap:
            raise SearchSpaceError(
                f"family search space exceeds cap of {cap}")
    found = []
    pools = [Q.hom(a, a).elements for a in Q.objects]
    for combo in product(*pools):
        family = dict(zip(Q.objects, combo))
        if check_girard_family(Q, family).ok:
            found.append(family)
    return found


# ---------------------------------------------------------------------------
# Monads and their bimodules


@dataclass(frozen=True)
class Monad:
    obj: Obj
    m: str


@dataclass(frozen=True)
class MonadBimodule:
    source: Monad
    target: Monad
    f: str


def check_monad(Q: FiniteQuantaloid, monad: Monad) -> bool:
    h = Q.hom(monad.obj, monad.obj)
    a, m = monad.obj, monad.m
    return h.leq(Q.unit_top(a), m) and h.leq(Q.compose(a, a, a, m, m), m)


def monads_of(Q: FiniteQuantaloid) -> list[Monad]:
    out = []
    for a in Q.objects:
        for m in _hom_elements(Q, a, a):
            cand = Monad(a, m)
            if check_monad(Q, cand):
                out.append(cand)
    return out


def check_monad_bimodule(Q: FiniteQuantaloid, bim: MonadBimodule) -> bool:
    a, b = bim.source.obj, bim.target.obj
    h = Q.hom(a, b)
    return (h.leq(Q.compose(a, a, b, bim.source.m, bim.f), bim.f)
            and h.leq(Q.compose(a, b, b, bim.f, bim.target.m), bim.f))


def monq_compose(Q: FiniteQuantaloid, f: MonadBimodule,
                 g: MonadBimodule) -> MonadBimodule:
    if f.target != g.source:
        raise MismatchError("monad bimodules are not composable")
    a, b, c = f.source.obj, f.target.obj, g.target.obj
    return MonadBimodule(f.source, g.target, Q.compose(a, b, c, f.f, g.f))


def monq_identity(Q: FiniteQuantaloid, monad: Monad) -> MonadBimodule:
    return MonadBimodule(monad, monad, monad.m)


def _sublattice(parent: FiniteLattice, keep: Sequence[str]) -> FiniteLattice:
    leq = [[parent.leq(x, y) for y in keep] for x in keep]
    return lattice_from_leq(tuple(keep), leq)


def monad_name(monad: Monad) -> str:
    return f"{monad.obj}|{monad.m}"


def monq_quantaloid(Q: FiniteQuantaloid, monads: Sequence[Monad] | None = None,
                    cap: int = 64) -> FiniteQuantaloid:
    """Materialize the quantaloid of monads and monad bimodules.

    Hom lattices are the bimodule subsets under the inherited order; they
    are closed under joins and meets whenever the base laws hold.
    """
    if monads is None:
        monads = monads_of(Q)
    if len(monads) > cap:
        raise SearchSpaceError(f"{len(monads)} monads exceed the cap of {cap}")
    names = {m: monad_name(m) for m in monads}
    homs = {}
    bim_elems: dict[tuple[Monad, Monad], list[str]] = {}
    for m in monads:
        for n in monads:
            elems = [f for f in _hom_elements(Q, m.obj, n.obj)
                     if check_monad_bimodule(Q, MonadBimodule(m, n, f))]
            bim_elems[(m, n)] = elems
            homs[(names[m], names[n])] = _sublattice(Q.hom(m.obj, n.obj), elems)
    tables = {}
    for m in monads:
        for n in monads:
            for p in monads:
                tables[(names[m], names[n], names[p])] = tuple(
                    tuple(Q.compose(m.obj, n.obj, p.obj, f, g)
                          for g in bim_elems[(n, p)])
                    for f in bim_elems[(m, n)])
    units = {names[m]: m.m for m in monads}
    return finite_quantaloid(tuple(names[m] for m in monads), homs, tables,
                             units)


def monq_girard_family(Q: FiniteQuantaloid, family: Mapping[Obj, str],
                       monads: Sequence[Monad] | None = None) -> dict[str, str]:
    """The induced dualizing family on monads: the dual of each monad's
    multiplication at its own object."""
    if not check_girard_family(Q, family).ok:
        raise NotGirardError("base family is not cyclic dualizing")
    if monads is None:
        monads = monads_of(Q)
    return {monad_name(m): hom_dual(Q, m.obj, m.obj, m.m, family)
            for m in monads}


# ---------------------------------------------------------------------------
# Linear monads


@dataclass(frozen=True)
class LinearMonad:
    obj: Obj
    m_tensor: str
    m_par: str


@dataclass(frozen=True)
class LinearMonadBimodule:
    source: LinearMonad
    target: LinearMonad
    f_tensor: str
    f_par: str


def check_linear_monad(Q: FiniteQuantaloid, lm: LinearMonad) -> bool:
    if not Q.has_par:
        raise NoParStructureError("linear monads need a par layer")
    a = lm.obj
    h = Q.hom(a, a)
    t, p = lm.m_tensor, lm.m_par
    comp = lambda f, g: Q.compose(a, a, a, f, g)
    pcomp = lambda f, g: Q.par_compose(a, a, a, f, g)
    return (h.leq(Q.unit_top(a), t)
            and h.leq(comp(t, t), t)
            and h.leq(p, Q.unit_bot(a))
            and h.leq(p, pcomp(p, p))
            and h.leq(t, pcomp(p, t))
            and h.leq(t, pcomp(t, p))
            and h.leq(comp(t, p), p)
            and h.leq(comp(p, t), p))


def validate_linear_monad(Q: FiniteQuantaloid, lm: LinearMonad,
                          suite: str = "linear-monad") -> LawReport:
    """Per-law report form of the linear monad conditions."""
    if not Q.has_par:
        raise NoParStructureError("linear monads need a par layer")
    a = lm.obj
    h = Q.hom(a, a)
    t, p = lm.m_tensor, lm.m_par
    comp = lambda f, g: Q.compose(a, a, a, f, g)
    pcomp = lambda f, g: Q.par_compose(a, a, a, f, g)
    checks = (
        ("monad-unit", h.leq(Q.unit_top(a), t)),
        ("monad-multiplication", h.leq(comp(t, t), t)),
        ("comonad-counit", h.leq(p, Q.unit_bot(a))),
        ("comonad-comultiplication", h.leq(p, pcomp(p, p))),
        ("monad-mixed-par-tensor", h.leq(t, pcomp(p, t))),
        ("monad-mixed-tensor-par", h.leq(t, pcomp(t, p))),
        ("monad-mixed-absorb-right", h.leq(comp(t, p), p)),
        ("monad-mixed-absorb-left", h.leq(comp(p, t), p)),
    )
    entries = tuple(
        law_entry(label, None if ok else {"object": a, "m_tensor": t, "m_par": p},
                  "exhaustive")
        for label, ok in checks)
    return LawReport(suite, entries)


def validate_linear_monad_bimodule(Q: FiniteQuantaloid, bim: LinearMonadBimodule,
                                   suite: str = "linear-monad-bimodule") -> LawReport:
    src, tgt = bim.source, bim.target
    a, b = src.obj, tgt.obj
    ft, fp = bim.f_tensor, bim.f_par
    h_ab, h_ba = Q.hom(a, b), Q.hom(b, a)
    checks = (
        ("mbim-tensor-right-action",
         h_ab.leq(Q.compose(a, b, b, ft, tgt.m_tensor), ft)),
        ("mbim-tensor-left-action",
         h_ab.leq(Q.compose(a, a, b, src.m_tensor, ft), ft)),
        ("mbim-tensor-left-coaction",
         h_ab.leq(ft, Q.par_compose(a, a, b, src.m_par, ft))),
        ("mbim-tensor-right-coaction",
         h_ab.leq(ft, Q.par_compose(a, b, b, ft, tgt.m_par))),
        ("mbim-par-left-coaction",
         h_ba.leq(fp, Q.par_compose(b, b, a, tgt.m_par, fp))),
        ("mbim-par-right-coaction",
         h_ba.leq(fp, Q.par_compose(b, a, a, fp, src.m_par))),
        ("mbim-par-left-action",
         h_ba.leq(Q.compose(b, b, a, tgt.m_tensor, fp), fp)),
        ("mbim-par-right-action",
         h_ba.leq(Q.compose(b, a, a, fp, src.m_tensor), fp)),
    )
    entries = tuple(
        law_entry(label, None if ok else {"f_tensor": ft, "f_par": fp},
                  "exhaustive")
        for label, ok in checks)
    return LawReport(suite, entries)


def linear_monads_of(Q: FiniteQuantaloid) -> list[LinearMonad]:
    out = []
    for a in Q.objects:
        for t in _hom_elements(Q, a, a):
            for p in _hom_elements(Q, a, a):
                cand = LinearMonad(a, t, p)
                if check_linear_monad(Q, cand):
                    out.append(cand)
    return out


def check_linear_monad_bimodule(Q: FiniteQuantaloid,
                                bim: LinearMonadBimodule) -> bool:
    src, tgt = bim.source, bim.target
    a, b = src.obj, tgt.obj
    ft, fp = bim.f_tensor, bim.f_par
    h_ab, h_ba = Q.hom(a, b), Q.hom(b, a)
    return (h_ab.leq(Q.compose(a, b, b, ft, tgt.m_tensor), ft)
            and h_ab.leq(Q.compose(a, a, b, src.m_tensor, ft), ft)
            and h_ab.leq(ft, Q.par_compose(a, a, b, src.m_par, ft))
            and h_ab.leq(ft, Q.par_compose(a, b, b, ft, tgt.m_par))
            and h_ba.leq(fp, Q.par_compose(b, b, a, tgt.m_par, fp))
            and h_ba.leq(fp, Q.par_compose(b, a, a, fp, src.m_par))
            and h_ba.leq(Q.compose(b, b, a, tgt.m_tensor, fp), fp)
            and h_ba.leq(Q.compose(b, a, a, fp, src.m_tensor), fp))


def linear_monad_bimodules(Q: FiniteQuantaloid, src: LinearMonad,
                           tgt: LinearMonad) -> list[LinearMonadBimodule]:
    out = []
    for ft in _hom_elements(Q, src.obj, tgt.obj):
        for fp in _hom_elements(Q, tgt.obj, src.obj):
            cand = LinearMonadBimodule(src, tgt, ft, fp)
            if check_linear_monad_bimodule(Q, cand):
                out.append(cand)
    return out


def linear_monq_compose_tensor(Q: FiniteQuantaloid, f: LinearMonadBimodule,
                               g: LinearMonadBimodule) -> LinearMonadBimodule:
    """Tensor of bimodule pairs: tensor parts compose with tensor, par
    parts with par in the reversed (composable) order."""
    if f.target != g.source:
        raise MismatchError("linear monad bimodules are not composable")
    a, b, c = f.source.obj, f.target.obj, g.target.obj
    return LinearMonadBimodule(
        f.source, g.target,
        Q.compose(a, b, c, f.f_tensor, g.f_tensor),
        Q.par_compose(c, b, a, g.f_par, f.f_par))


def linear_monq_compose_par(Q: FiniteQuantaloid, f: LinearMonadBimodule,
                            g: LinearMonadBimodule) -> LinearMonadBimodule:
    if f.target != g.source:
        raise MismatchError("linear monad bimodules are not composable")
    a, b, c = f.source.obj, f.target.obj, g.target.obj
    return LinearMonadBimodule(
        f.source, g.target,
        Q.par_compose(a, b, c, f.f_tensor, g.f_tensor),
        Q.compose(c, b, a, g.f_par, f.f_par))


def linear_monq_identity_top(Q: FiniteQuantaloid, lm: LinearMonad) -> LinearMonadBimodule:
    return LinearMonadBimodule(lm, lm, lm.m_tensor, lm.m_par)


def linear_monq_identity_bot(Q: FiniteQuantaloid, lm: LinearMonad) -> LinearMonadBimodule:
    return LinearMonadBimodule(lm, lm, lm.m_par, lm.m_tensor)


def linear_monad_name(lm: LinearMonad) -> str:
    return f"{lm.obj}|{lm.m_tensor}|{lm.m_par}"


def _pair_name(ft: str, fp: str) -> str:
    return f"{ft}|{fp}"


def linear_monq_quantaloid(Q: FiniteQuantaloid,
                           monads: Sequence[LinearMonad] | None = None,
                           cap: int = 64) -> FiniteQuantaloid:
    """Materialize the linear quantaloid of linear monads.

    Hom elements are bimodule pairs ordered with the par component
    reversed, so joins are pairs of join and meet.
    """
    if monads is None:
        monads = linear_monads_of(Q)
    if len(monads) > cap:
        raise SearchSpaceError(f"{len(monads)} linear monads exceed cap {cap}")
    names = {lm: linear_monad_name(lm) for lm in monads}
    bims: dict[tuple[LinearMonad, LinearMonad], list[LinearMonadBimodule]] = {}
    homs = {}
    for m in monads:
        for n in monads:
            items = linear_monad_bimodules(Q, m, n)
            bims[(m, n)] = items
            h_t = Q.hom(m.obj, n.obj)
            h_p = Q.hom(n.obj, m.obj)
            labels = [_pair_name(b.f_tensor, b.f_par) for b in items]
            leq = [[h_t.leq(x.f_tensor, y.f_tensor) and h_p.leq(y.f_par, x.f_par)
                    for y in items] for x in items]
            homs[(names[m], names[n])] = lattice_from_leq(labels, leq)
    t_tables = {}
    p_tables = {}
    for m in monads:
        for n in monads:
            for p in monads:
                key = (names[m], names[n], names[p])
                t_rows = []
                p_rows = []
                for f in bims[(m, n)]:
                    t_row = []
                    p_row = []
                    for g in bims[(n, p)]:
                        ct = linear_monq_compose_tensor(Q, f, g)
                        cp = linear_monq_compose_par(Q, f, g)
                        t_row.append(_pair_name(ct.f_tensor, ct.f_par))
                        p_row.append(_pair_name(cp.f_tensor, cp.f_par))
                    t_rows.append(tuple(t_row))
                    p_rows.append(tuple(p_row))
                t_tables[key] = tuple(t_rows)
                p_tables[key] = tuple(p_rows)
    units_top = {names[m]: _pair_name(m.m_tensor, m.m_par) for m in monads}
    units_bot = {names[m]: _pair_name(m.m_par, m.m_tensor) for m in monads}
    return finite_quantaloid(tuple(names[m] for m in monads), homs, t_tables,
                             units_top, p_tables, units_bot)


def transfer_to_linear_monq(Q: FiniteQuantaloid, label: str, witness: dict) -> bool:
    """Replay a base law failure inside the monad construction.

    Uses trivial linear monads and bimodule pairs (f, dual of f against
    the tensor unit); returns whether the corresponding law still holds
    (False reproduces the failure).
    """
    objs = witness.get("objects")
    fs = [witness[k] for k in ("f", "g", "h", "f1", "f2") if k in witness]
    if objs is None or not fs:
        return True

    def trivial(a: Obj) -> LinearMonad:
        return LinearMonad(a, Q.unit_top(a), Q.unit_bot(a))

    def embed(a: Obj, b: Obj, f: str) -> LinearMonadBimodule:
        companion = hom_dual(Q, a, b, f, {o: Q.unit_top(o) for o in Q.objects})
        return LinearMonadBimodule(trivial(a), trivial(b), f, companion)

    def pair_leq(x: LinearMonadBimodule, y: LinearMonadBimodule) -> bool:
        h_t = Q.hom(x.source.obj, x.target.obj)
        h_p = Q.hom(x.target.obj, x.source.obj)
        return h_t.leq(x.f_tensor, y.f_tensor) and h_p.leq(y.f_par, x.f_par)

    if label == "tensor-associativity" and len(objs) == 4 and len(fs) >= 3:
        a, b, c, d = objs
        F, G, H = embed(a, b, fs[0]), embed(b, c, fs[1]), embed(c, d, fs[2])
        lhs = linear_monq_compose_tensor(Q, linear_monq_compose_tensor(Q, F, G), H)
        rhs = linear_monq_compose_tensor(Q, F, linear_monq_compose_tensor(Q, G, H))
        return lhs.f_tensor == rhs.f_tensor
    if label == "par-associativity" and len(objs) == 4 and len(fs) >= 3:
        a, b, c, d = objs
        F, G, H = embed(a, b, fs[0]), embed(b, c, fs[1]), embed(c, d, fs[2])
        lhs = linear_monq_compose_par(Q, linear_monq_compose_par(Q, F, G), H)
        rhs = linear_monq_compose_par(Q, F, linear_monq_compose_par(Q, G, H))
        return lhs.f_tensor == rhs.f_tensor
    if label.startswith("linear-distribution") and len(objs) == 4 and len(fs) >= 3:
        a, b, c, d = objs
        F, G, H = embed(a, b, fs[0]), embed(b, c, fs[1]), embed(c, d, fs[2])
        if label.endswith("left"):
            lhs = linear_monq_compose_tensor(Q, F, linear_monq_compose_par(Q, G, H))
            rhs = linear_monq_compose_par(Q, linear_monq_compose_tensor(Q, F, G), H)
        else:
            lhs = linear_monq_compose_tensor(Q, linear_monq_compose_par(Q, F, G), H)
            rhs = linear_monq_compose_par(Q, F, linear_monq_compose_tensor(Q, G, H))
        return pair_leq(lhs, rhs)
    if label in ("tensor-unit-left", "tensor-unit-right") and len(fs) >= 1:
        a, b = objs
        F = embed(a, b, fs[0])
        if label.endswith("left"):
            got = linear_monq_compose_tensor(
                Q, linear_monq_identity_top(Q, trivial(a)), F)
        else:
            got = linear_monq_compose_tensor(
                Q, F, linear_monq_identity_top(Q, trivial(b)))
        return got.f_tensor == F.f_tensor
    if label in ("par-unit-left", "par-unit-right") and len(fs) >= 1:
        a, b = objs
        F = embed(a, b, fs[0])
        if label.endswith("left"):
            got = linear_monq_compose_par(
                Q, linear_monq_identity_bot(Q, trivial(a)), F)
        else:
            got = linear_monq_compose_par(
                Q, F, linear_monq_identity_bot(Q, trivial(b)))
        return got.f_tensor == F.f_tensor
    if label in ("tensor-bottom-left", "tensor-bottom-right",
                 "par-top-left", "par-top-right") and len(objs) == 3:
        a, b, c = objs
        par = label.startswith("par")
        left = label.endswith("left")
        f = fs[0]
        if par:
            if left:
                got = Q.par_compose(a, b, c, Q.hom(a, b).top, f)
            else:
                got = Q.par_compose(a, b, c, f, Q.hom(b, c).top)
            return got == Q.hom(a, c).top
        if left:
            got = Q.compose(a, b, c, Q.hom(a, b).bottom, f)
        else:
            got = Q.compose(a, b, c, f, Q.hom(b, c).bottom)
        return got == Q.hom(a, c).bottom
    if label in ("tensor-sup-left", "tensor-sup-right",
                 "par-inf-left", "par-inf-right") and len(objs) == 3:
        a, b, c = objs
        f1, f2, g = witness["f1"], witness["f2"], witness["g"]
        par = label.startswith("par")
        compose = (lambda x, y, z, u, v: Q.par_compose(x, y, z, u, v)) if par \
            else (lambda x, y, z, u, v: Q.compose(x, y, z, u, v))
        left = label.endswith("left")
        agg_hom = Q.hom(a, b) if left else Q.hom(b, c)
        out_hom = Q.hom(a, c)
        agg = agg_hom.meet if par else agg_hom.join
        out = out_hom.meet if par else out_hom.join
        if left:
            lhs = compose(a, b, c, agg((f1, f2)), g)
            rhs = out((compose(a, b, c, f1, g), compose(a, b, c, f2, g)))
        else:
            lhs = compose(a, b, c, g, agg((f1, f2)))
            rhs = out((compose(a, b, c, g, f1), compose(a, b, c, g, f2)))
        return lhs == rhs
    return True


# ---------------------------------------------------------------------------
# JSON interface
#
# {"objects": [...],
#  "homs": {"a->b": {"elements": [...], "covers": [[lo, hi], ...]}, ...},
#  "compose": {"a->b->c": [[...row-major...]], ...},
#  "units": {"a": elem, ...},
#  "par_compose": {...}?, "par_units": {...}?, "dualizers": {...}?}


def _pair_key(a: Obj, b: Obj) -> str:
    return f"{a}->{b}"


def _triple_key(a: Obj, b: Obj, c: Obj) -> str:
    return f"{a}->{b}->{c}"


def quantaloid_from_json(obj: dict) -> FiniteQuantaloid:
    try:
        objects = list(obj["objects"])
        hom_blobs = obj["homs"]
        compose_blobs = obj["compose"]
        units = dict(obj["units"])
    except (KeyError, TypeError) as exc:
        raise InputFormatError(f"quantaloid file is missing field: {exc}") from None
    homs = {}
    for a in objects:
        for b in objects:
            key = _pair_key(a, b)
            if key not in hom_blobs:
                raise InputFormatError(f"missing hom block {key!r}")
            blob = hom_blobs[key]
            homs[(a, b)] = build_lattice(blob["elements"],
                                         [tuple(p) for p in blob["covers"]])

    def tables_from(blobs, label):
        tables = {}
        for a in objects:
            for b in objects:
                for c in objects:
                    key = _triple_key(a, b, c)
                    if key not in blobs:
                        raise InputFormatError(f"missing {label} table {key!r}")
                    tables[(a, b, c)] = blobs[key]
        return tables

    par_tables = None
    par_units = None
    if "par_compose" in obj and obj["par_compose"] is not None:
        par_tables = tables_from(obj["par_compose"], "par")
        par_units = dict(obj.get("par_units") or {})
    return finite_quantaloid(objects, homs, tables_from(compose_blobs, "compose"),
                             units, par_tables, par_units)


def quantaloid_family_from_json(obj: dict) -> dict[Obj, str] | None:
    if "dualizers" in obj and obj["dualizers"] is not None:
        return dict(obj["dualizers"])
    return None


def quantaloid_to_json(Q: FiniteQuantaloid,
                       family: Mapping[Obj, str] | None = None) -> dict:
    out = {
        "objects": list(Q.objects),
        "homs": {},
        "compose": {},
        "units": dict(Q.units_top),
    }
    for (a, b), lat in Q.homs.items():
        covers = []
        n = len(lat.elements)
        for i in range(n):
            for j in range(n):
                if i != j and lat.leq_matrix[i][j]:
                    between = any(k not in (i, j) and lat.leq_matrix[i][k]
                                  and lat.leq_matrix[k][j] for k in range(n))
                    if not between:
                        covers.append([lat.elements[i], lat.elements[j]])
        out["homs"][_pair_key(a, b)] = {"elements": list(lat.elements),
                                        "covers": covers}
    for (a, b, c), table in Q.tensor_tables.items():
        out["compose"][_triple_key(a, b, c)] = [list(r) for r in table]
    if Q.has_par:
        out["par_compose"] = {_triple_key(a, b, c): [list(r) for r in table]
                              for (a, b, c), table in Q.par_tables.items()}
        out["par_units"] = dict(Q.units_bot)
    if family is not None:
        out["dualizers"] = dict(family)
    return out


def verify_linear_quantaloid_theorems(Q: FiniteQuantaloid,
                                      suite: str = "linear-monq-theorem",
                                      cap: int = 64) -> LawReport:
    """Check the base laws and the materialized monad construction, then
    report the two implications of the equivalence separately."""
    if not Q.has_par:
        raise NoParStructureError("theorem needs a par layer")
    base = check_quantaloid_laws(Q, suite=f"{suite}:base")
    entries = list(base.entries)
    mode = "exhaustive"

    if base.ok:
        monq = linear_monq_quantaloid(Q, cap=cap)
        derived = check_quantaloid_laws(monq, suite=f"{suite}:monq")
        derived_ok = derived.ok
        first_fail = None if derived_ok else derived.failing()[0]
        entries.append(law_entry(
            "theorem-forward",
            None if derived_ok else {"law": first_fail.law,
                                     "witness": first_fail.witness},
            mode))
        entries.append(law_entry("theorem-backward", None, mode))
        entries.append(law_entry("theorem-transfer", None, mode))
    else:
        fail = base.failing()[0]
        reproduced = not transfer_to_linear_monq(Q, fail.law, fail.witness or {})
        entries.append(law_entry("theorem-forward", None, mode))
        entries.append(law_entry(
            "theorem-backward",
            None if reproduced else {"law": fail.law,
                                     "note": "transfer did not reproduce"},
            mode))
        entries.append(law_entry(
            "theorem-transfer",
            None if reproduced else {"law": fail.law, "witness": fail.witness},
            mode))
    return LawReport(suite, tuple(entries))
