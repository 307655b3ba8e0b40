"""Independent oracles, the built-in structure catalog, and theorem drivers.

The catalog's classifications (quantale? LD? Girard?) are derived by the
brute-force checks at build time, never asserted by hand; rebuilding the
catalog therefore re-derives them from scratch.  Theorem drivers check
each equivalence as two implications with separate evidence, transferring
counterexamples through one-point structures for the backward direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import MismatchError, NotGirardError, UnknownElementError
from .lattice import build_lattice, chain
from .quantale import (
    MINUS_INF,
    PLUS_INF,
    Elem,
    GirardQuantale,
    LDQuantale,
    Quantale,
    TableOp,
    ZIntCarrier,
    ZIntOp,
    check_ld_laws,
    check_quantale_laws,
    cyclic_group_table,
    find_dualizers,
    girard_to_ld,
    opposite_quantale,
    shift_completion,
    table_quantale,
    tropical_quantale,
)
from .qmod import (
    bim_leq,
    check_girard_qmod,
    discrete_qcategory,
    enumerate_qbimodules,
    enumerate_qcategories,
    girard_linear_bimodule,
    identity_bimodule,
    par_identity_bimodule,
    qmod_compose_par,
    qmod_compose_tensor,
    qmod_delta,
    qmod_linear_adjoint,
    verify_linear_qmod_theorem,
)
from .qrel import (
    FiniteSet,
    check_girard_qrel,
    check_linear_adjoint,
    compose_par,
    compose_tensor,
    dual_family,
    finite_set,
    id_bot,
    id_top,
    rel_dual,
    rel_leq,
    relation,
    right_extension,
    right_lifting,
    sample_relation_tuples,
    transfer_quantale_witness,
    verify_qrel_laws,
)
from .quantaloid import (
    check_girard_family,
    find_girard_families,
    monads_of,
    monq_girard_family,
    monq_quantaloid,
    one_object_quantaloid,
    verify_linear_quantaloid_theorems,
)
from .report import LawEntry, LawReport, Sampler, law_entry

# ---------------------------------------------------------------------------
# Oracles: independent code paths used to cross-check the quantale machinery


def oracle_bool_rel_compose(R: Sequence[Sequence[int]],
                            S: Sequence[Sequence[int]],
                            mode: str) -> tuple[tuple[int, ...], ...]:
    """Plain-logic relation composition on 0/1 matrices.

    ``exists`` is the usual composition, ``forall`` the universal one;
    no lattice or quantale code is involved.
    """
    ny = len(S)
    if any(len(row) != ny for row in R):
        raise MismatchError("inner dimensions do not match")
    nz = len(S[0]) if ny else 0
    if mode == "exists":
        return tuple(
            tuple(int(any(R[x][y] and S[y][z] for y in range(ny)))
                  for z in range(nz))
            for x in range(len(R)))
    if mode == "forall":
        return tuple(
            tuple(int(all(R[x][y] or S[y][z] for y in range(ny)))
                  for z in range(nz))
            for x in range(len(R)))
    raise ValueError(f"unknown mode {mode!r}")


def _sat_add(a: Elem, b: Elem, dominant: str) -> Elem:
    if a == dominant or b == dominant:
        return dominant
    other = PLUS_INF if dominant == MINUS_INF else MINUS_INF
    if a == other or b == other:
        return other
    return a + b


def _zmax(items):
    best = MINUS_INF
    for v in items:
        if best == MINUS_INF:
            best = v
        elif v == PLUS_INF or best == PLUS_INF:
            best = PLUS_INF
        elif v != MINUS_INF and v > best:
            best = v
    return best


def _zmin(items):
    best = PLUS_INF
    for v in items:
        if best == PLUS_INF:
            best = v
        elif v == MINUS_INF or best == MINUS_INF:
            best = MINUS_INF
        elif v != PLUS_INF and v < best:
            best = v
    return best


def oracle_maxplus(A, B):
    """Saturating max-plus product, written independently of the quantale
    backend: minus infinity absorbs mixed sums."""
    ny = len(B)
    if any(len(row) != ny for row in A):
        raise MismatchError("inner dimensions do not match")
    nz = len(B[0]) if ny else 0
    return tuple(
        tuple(_zmax(_sat_add(A[x][y], B[y][z], MINUS_INF) for y in range(ny))
              for z in range(nz))
        for x in range(len(A)))


def oracle_minplus(A, B):
    """Saturating min-plus product; plus infinity absorbs mixed sums."""
    ny = len(B)
    if any(len(row) != ny for row in A):
        raise MismatchError("inner dimensions do not match")
    nz = len(B[0]) if ny else 0
    return tuple(
        tuple(_zmin(_sat_add(A[x][y], B[y][z], PLUS_INF) for y in range(ny))
              for z in range(nz))
        for x in range(len(A)))


def oracle_residual_scan(q: Quantale, a: Elem, b: Elem, window: int = 10) -> Elem:
    """Brute-force residual by scanning candidates wide enough to contain
    the true value for inputs inside the window."""
    wide = [MINUS_INF, *range(-2 * window - 1, 2 * window + 2), PLUS_INF]
    return q.join(c for c in wide if q.leq(q.tensor(a, c), b))


# ---------------------------------------------------------------------------
# Catalog


@dataclass(frozen=True)
class CatalogEntry:
    """A built-in structure and its derived classification."""

    name: str
    ld: LDQuantale
    quantale_ok: bool
    ld_ok: bool
    dualizers: tuple[Elem, ...]
    girard: GirardQuantale | None

    @property
    def is_girard(self) -> bool:
        return self.girard is not None


def _classify(name: str, ld: LDQuantale, window: int) -> CatalogEntry:
    sample = ld.sample_elements(window)
    quantale_ok = check_quantale_laws(ld.tensor_part, sample).ok
    ld_ok = check_ld_laws(ld, sample).ok
    dualizers: tuple[Elem, ...] = ()
    girard = None
    if quantale_ok:
        dualizers = find_dualizers(ld.tensor_part, sample)
        if dualizers:
            pick = ld.par_unit if ld.par_unit in dualizers else dualizers[0]
            girard = GirardQuantale(base=ld.tensor_part, dualizer=pick)
    return CatalogEntry(name=name, ld=ld, quantale_ok=quantale_ok,
                        ld_ok=ld_ok, dualizers=dualizers, girard=girard)


def _frame_ld(lattice) -> LDQuantale:
    els = lattice.elements
    meet_t = tuple(tuple(lattice.meet((a, b)) for b in els) for a in els)
    join_t = tuple(tuple(lattice.join((a, b)) for b in els) for a in els)
    return LDQuantale(
        tensor_part=table_quantale(lattice, meet_t, lattice.top),
        par_part=table_quantale(lattice.opposite(), join_t, lattice.bottom))


def _swap_table(q: Quantale, a: str, b: str, value: str) -> Quantale:
    lat = q.carrier.lattice
    rows = [list(r) for r in q.op.table]
    rows[lat.index(a)][lat.index(b)] = value
    return Quantale(carrier=q.carrier, op=TableOp(tuple(map(tuple, rows))),
                    unit=q.unit)


def build_catalog(window: int = 10) -> dict[str, CatalogEntry]:
    """Construct every built-in structure and derive its classification."""
    entries: dict[str, CatalogEntry] = {}

    def add(name: str, ld: LDQuantale) -> None:
        entries[name] = _classify(name, ld, window)

    point = _frame_ld(build_lattice(["p"], []))
    add("point", point)

    add("bool", _frame_ld(chain(["0", "1"])))
    add("chain3", _frame_ld(chain(["0", "m", "1"])))
    add("diamond", _frame_ld(build_lattice(
        ["0", "x", "y", "1"],
        [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")])))

    add("z2shift", shift_completion(["e", "a"], [["e", "a"], ["a", "e"]], "a"))
    z3_names, z3_table = cyclic_group_table(3)
    add("z3shift", shift_completion(z3_names, z3_table, "g1"))

    trop = tropical_quantale()
    trop_girard = GirardQuantale(base=trop, dualizer=0)
    trop_ld = girard_to_ld(trop_girard)
    add("zinf-tropical", trop_ld)
    add("zinf-arctic", opposite_quantale(trop_ld))

    # Broken variants: one law perturbed each.
    good = entries["bool"].ld
    add("bool-broken", LDQuantale(
        tensor_part=_swap_table(good.tensor_part, "1", "1", "0"),
        par_part=good.par_part))

    good = entries["chain3"].ld
    add("chain3-broken", LDQuantale(
        tensor_part=good.tensor_part,
        par_part=_swap_table(good.par_part, "0", "m", "1")))

    good = entries["diamond"].ld
    add("diamond-broken", LDQuantale(
        tensor_part=_swap_table(good.tensor_part, "x", "y", "1"),
        par_part=good.par_part))

    good = entries["z2shift"].ld
    add("z2shift-broken", LDQuantale(
        tensor_part=good.tensor_part,
        par_part=_swap_table(good.par_part, "e", "e", "e")))

    good = entries["z3shift"].ld
    add("z3shift-broken", LDQuantale(
        tensor_part=_swap_table(good.tensor_part, "e", "g1", "e"),
        par_part=good.par_part))

    add("zinf-broken", LDQuantale(
        tensor_part=trop,
        par_part=Quantale(carrier=ZIntCarrier(True),
                          op=ZIntOp(MINUS_INF, 0), unit=0)))

    return entries


@lru_cache(maxsize=4)
def catalog(window: int = 10) -> dict[str, CatalogEntry]:
    return build_catalog(window)


def catalog_entry(name: str, window: int = 10) -> CatalogEntry:
    entries = catalog(window)
    if name not in entries:
        raise UnknownElementError(
            f"unknown catalog entry {name!r}; have {sorted(entries)}")
    return entries[name]


def default_sets(max_size: int = 2) -> list[FiniteSet]:
    return [finite_set(f"s{n}", tuple(f"e{i}" for i in range(n)))
            for n in range(1, max_size + 1)]


# ---------------------------------------------------------------------------
# Theorem drivers


def _side_entry(label: str, report: LawReport, mode: str) -> LawEntry:
    if report.ok:
        return law_entry(label, None, mode)
    fail = report.failing()[0]
    return law_entry(label, {"law": fail.law, "witness": fail.witness}, mode)


def _implications(base_ok: bool, derived_ok: bool, mode: str,
                  forward_note: dict | None = None,
                  backward_note: dict | None = None) -> list[LawEntry]:
    return [
        law_entry("theorem-forward",
                  None if (not base_ok or derived_ok) else
                  (forward_note or {"note": "base holds, derived side fails"}),
                  mode),
        law_entry("theorem-backward",
                  None if (not derived_ok or base_ok) else
                  (backward_note or {"note": "derived holds, base fails"}),
                  mode),
    ]


def _thm_ldq(entry: CatalogEntry, sampler: Sampler,
             sets: Sequence[FiniteSet]) -> LawReport:
    suite = f"theorem-ldq[{entry.name}]"
    sample = entry.ld.sample_elements(sampler.window)
    base_rep = check_ld_laws(entry.ld, sample)
    mode = sampler.random_label() if not entry.ld.carrier.is_finite \
        else "exhaustive"
    entries = [_side_entry("base-laws", base_rep, mode)]

    if base_rep.ok:
        rel_rep = verify_qrel_laws(entry.ld, sets, sampler,
                                   suite=f"{suite}:qrel")
        entries.append(_side_entry("derived-laws", rel_rep, mode))
        entries.extend(_implications(True, rel_rep.ok, mode))
        entries.append(law_entry("theorem-transfer", None, mode))
    else:
        fail = base_rep.failing()[0]
        holds, rel_wit = transfer_quantale_witness(entry.ld, fail.law,
                                                   fail.witness or {})
        entries.append(law_entry("derived-laws",
                                 {"law": fail.law, "witness": rel_wit}, mode))
        entries.extend(_implications(False, False, mode))
        entries.append(law_entry(
            "theorem-transfer",
            None if not holds else {"law": fail.law,
                                    "note": "transfer did not reproduce"},
            mode))
    return LawReport(suite, tuple(entries))


def _girard_quantale_witness(q: Quantale, d: Elem, sample) -> dict | None:
    for a in sample:
        if q.residual_left(d, a) != q.residual_right(a, d):
            return {"kind": "cyclic", "a": a, "d": d}
        if q.residual_right(q.residual_right(a, d), d) != a:
            return {"kind": "double-dual", "a": a, "d": d}
    return None


def _thm_girard_qrel(entry: CatalogEntry, sampler: Sampler,
                     sets: Sequence[FiniteSet]) -> LawReport:
    suite = f"theorem-girard-qrel[{entry.name}]"
    sample = entry.ld.sample_elements(sampler.window)
    mode = "exhaustive" if entry.ld.carrier.is_finite else sampler.random_label()
    base_ok = entry.is_girard
    entries = [law_entry("base-laws",
                         None if base_ok else {"note": "no cyclic dualizing element",
                                               "candidates": len(sample)},
                         mode)]
    if base_ok:
        rep = check_girard_qrel(entry.girard, sets, sampler,
                                suite=f"{suite}:qrel")
        entries.append(_side_entry("derived-laws", rep, mode))
        entries.extend(_implications(True, rep.ok, mode))
        entries.append(law_entry("theorem-transfer", None, mode))
    else:
        # every candidate fails in the quantale; transfer the first failure
        # through a one-point relation
        q = entry.ld.tensor_part
        reproduced = True
        transfer_wit = None
        for d in sample:
            wit = _girard_quantale_witness(q, d, sample)
            if wit is None:
                reproduced = False
                transfer_wit = {"d": d, "note": "candidate works in quantale"}
                break
            pt = finite_set("pt", ("*",))
            r = relation(pt, pt, q, [[wit["a"]]])
            dd = rel_dual(rel_dual(r, d), d)
            ext_ok = dd.values == r.values
            cyc_ok = right_extension(r, dual_family(pt, q, d)).values == \
                right_lifting(dual_family(pt, q, d), r).values
            if ext_ok and cyc_ok:
                reproduced = False
                transfer_wit = {"d": d, "a": wit["a"],
                                "note": "relation family passed unexpectedly"}
                break
            transfer_wit = {"d": d, "a": wit["a"]}
        entries.append(law_entry("derived-laws",
                                 {"note": "diagonal family fails for every candidate",
                                  "witness": transfer_wit}, mode))
        entries.extend(_implications(False, False, mode))
        entries.append(law_entry(
            "theorem-transfer",
            None if reproduced else transfer_wit, mode))
    return LawReport(suite, tuple(entries))


def _finite_base(entry: CatalogEntry):
    if not entry.ld.carrier.is_finite:
        raise MismatchError(
            f"theorem needs a finite base; {entry.name!r} is not")
    return one_object_quantaloid(entry.ld)


def _thm_girard_qmod(entry: CatalogEntry, sampler: Sampler,
                     sets: Sequence[FiniteSet]) -> LawReport:
    suite = f"theorem-girard-qmod[{entry.name}]"
    base = _finite_base(entry)
    obj = base.objects[0]
    mode = "exhaustive"
    if entry.is_girard:
        family = {obj: entry.girard.dualizer}
        cats = []
        for size in (1, 2):
            members = tuple(f"x{i}" for i in range(size))
            cats.append(discrete_qcategory(base, members, (obj,) * size))
            cats.extend(enumerate_qcategories(base, members, (obj,) * size,
                                              limit=4))
        bims = []
        for A in cats:
            for B in cats:
                bims.extend(enumerate_qbimodules(A, B, limit=4))
        rep = check_girard_qmod(base, family, bims, suite=f"{suite}:qmod",
                                mode=mode)
        # restriction along one-point categories recovers the family
        restricted = {}
        for a in base.objects:
            single = discrete_qcategory(base, ("x",), (a,))
            restricted[a] = qmod_delta(single, family).values_tensor[0][0]
        back = check_girard_family(base, restricted)
        entries = [law_entry("base-laws", None, mode),
                   _side_entry("derived-laws", rep, mode)]
        entries.extend(_implications(True, rep.ok, mode))
        entries.append(law_entry(
            "theorem-transfer",
            None if back.ok and restricted == family else
            {"restricted": restricted}, mode))
    else:
        q = entry.ld.tensor_part
        sample = q.sample_elements(sampler.window)
        reproduced = True
        wit = None
        for d in sample:
            fam_rep = check_girard_family(base, {obj: d})
            if fam_rep.ok:
                reproduced = False
                wit = {"d": d, "note": "family passed unexpectedly"}
                break
            wit = {"d": d, "law": fam_rep.failing()[0].law}
        entries = [law_entry("base-laws",
                             {"note": "no dualizing family on the base"}, mode),
                   law_entry("derived-laws", {"witness": wit}, mode)]
        entries.extend(_implications(False, False, mode))
        entries.append(law_entry("theorem-transfer",
                                 None if reproduced else wit, mode))
    return LawReport(suite, tuple(entries))


def _thm_girard_monq(entry: CatalogEntry, sampler: Sampler,
                     sets: Sequence[FiniteSet]) -> LawReport:
    suite = f"theorem-girard-monq[{entry.name}]"
    base = _finite_base(entry)
    obj = base.objects[0]
    mode = "exhaustive"
    if entry.is_girard:
        family = {obj: entry.girard.dualizer}
        monads = monads_of(base)
        monq = monq_quantaloid(base, monads)
        induced = monq_girard_family(base, family, monads)
        rep = check_girard_family(monq, induced, suite=f"{suite}:monq")
        trivial_name = f"{obj}|{base.unit_top(obj)}"
        restricted = {obj: induced[trivial_name]}
        back = check_girard_family(base, restricted)
        entries = [law_entry("base-laws", None, mode),
                   _side_entry("derived-laws", rep, mode)]
        entries.extend(_implications(True, rep.ok, mode))
        entries.append(law_entry(
            "theorem-transfer",
            None if back.ok else {"restricted": restricted}, mode))
    else:
        entries = [law_entry("base-laws",
                             {"note": "no dualizing family on the base"}, mode)]
        monq = monq_quantaloid(base)
        found = find_girard_families(monq)
        entries.append(law_entry(
            "derived-laws",
            {"note": "no dualizing family on monads"} if not found
            else {"families": len(found)}, mode))
        entries.extend(_implications(False, bool(found), mode))
        # a family on the monad side would restrict to one on the base;
        # none existing on either side is the expected correspondence
        entries.append(law_entry("theorem-transfer", None, mode))
    return LawReport(suite, tuple(entries))


def _thm_linear_monq(entry: CatalogEntry, sampler: Sampler,
                     sets: Sequence[FiniteSet]) -> LawReport:
    base = _finite_base(entry)
    return verify_linear_quantaloid_theorems(
        base, suite=f"theorem-linear-monq[{entry.name}]")


def _thm_linear_qmod(entry: CatalogEntry, sampler: Sampler,
                     sets: Sequence[FiniteSet]) -> LawReport:
    base = _finite_base(entry)
    return verify_linear_qmod_theorem(
        base, sampler, suite=f"theorem-linear-qmod[{entry.name}]")


def _thm_qrel_closed(entry: CatalogEntry, sampler: Sampler,
                     sets: Sequence[FiniteSet]) -> LawReport:
    """Every 1-cell has a linear adjoint over a Girard entry; otherwise a
    1x1 relation without any adjoint partner is exhibited."""
    suite = f"theorem-qrel-closed[{entry.name}]"
    if entry.is_girard:
        amb = entry.girard
        mode, cases = sample_relation_tuples(amb, sets, sampler, 2)
        unit_wit = None
        counit_wit = None
        for (r,) in cases:
            dual = rel_dual(r, amb.dualizer)
            if unit_wit is None and not rel_leq(id_top(r.source, amb),
                                                compose_par(r, dual)):
                unit_wit = {"values": [list(v) for v in r.values]}
            if counit_wit is None and not rel_leq(compose_tensor(dual, r),
                                                  id_bot(r.target, amb)):
                counit_wit = {"values": [list(v) for v in r.values]}
            if unit_wit and counit_wit:
                break
        entries = [law_entry("linear-adjoint-unit", unit_wit, mode),
                   law_entry("linear-adjoint-counit", counit_wit, mode),
                   law_entry("theorem-forward",
                             None if unit_wit is None and counit_wit is None
                             else {"note": "closedness fails"}, mode)]
        return LawReport(suite, tuple(entries))
    amb = entry.ld
    if not amb.carrier.is_finite:
        raise MismatchError("non-Girard closedness search needs a finite carrier")
    pt = finite_set("pt", ("*",))
    els = amb.carrier.lattice.elements
    missing = None
    for a in els:
        A = relation(pt, pt, amb, [[a]])
        if not any(check_linear_adjoint(A, relation(pt, pt, amb, [[b]]))
                   for b in els):
            missing = a
            break
    entries = [law_entry(
        "theorem-forward",
        None if missing is not None else
        {"note": "every one-point cell found an adjoint"}, "exhaustive")]
    return LawReport(suite, tuple(entries))


def _thm_qmod_closed(entry: CatalogEntry, sampler: Sampler,
                     sets: Sequence[FiniteSet]) -> LawReport:
    suite = f"theorem-qmod-closed[{entry.name}]"
    base = _finite_base(entry)
    obj = base.objects[0]
    if not entry.is_girard:
        raise NotGirardError(f"{entry.name!r} has no Girard structure")
    family = {obj: entry.girard.dualizer}
    cats = []
    for size in (1, 2):
        members = tuple(f"x{i}" for i in range(size))
        cats.append(discrete_qcategory(base, members, (obj,) * size))
        cats.extend(enumerate_qcategories(base, members, (obj,) * size, limit=3))
    unit_wit = None
    counit_wit = None
    for A in cats:
        for B in cats:
            for t in enumerate_qbimodules(A, B, limit=4):
                lt = girard_linear_bimodule(t, family)
                adj = qmod_linear_adjoint(lt, family)
                if unit_wit is None and not bim_leq(
                        identity_bimodule(lt.source),
                        qmod_compose_par(lt, adj)):
                    unit_wit = {"values": [list(r) for r in t.values_tensor]}
                if counit_wit is None and not bim_leq(
                        qmod_compose_tensor(adj, lt),
                        par_identity_bimodule(lt.target)):
                    counit_wit = {"values": [list(r) for r in t.values_tensor]}
    entries = [law_entry("linear-adjoint-unit", unit_wit, "sample"),
               law_entry("linear-adjoint-counit", counit_wit, "sample"),
               law_entry("theorem-forward",
                         None if unit_wit is None and counit_wit is None
                         else {"note": "closedness fails"}, "sample")]
    return LawReport(suite, tuple(entries))


THEOREMS = {
    "ldq": _thm_ldq,
    "girard-qrel": _thm_girard_qrel,
    "girard-qmod": _thm_girard_qmod,
    "girard-monq": _thm_girard_monq,
    "linear-monq": _thm_linear_monq,
    "linear-qmod": _thm_linear_qmod,
    "qrel-closed": _thm_qrel_closed,
    "qmod-closed": _thm_qmod_closed,
}


def normalize_theorem_id(name: str) -> str:
    key = "".join(c for c in name.lower() if c.isalnum())
    for tid in THEOREMS:
        if "".join(c for c in tid if c.isalnum()) == key:
            return tid
    raise UnknownElementError(
        f"unknown theorem {name!r}; have {sorted(THEOREMS)}")


def run_theorem(theorem_id: str, entry: CatalogEntry | str,
                sampler: Sampler | None = None,
                sets: Sequence[FiniteSet] | None = None,
                window: int = 10) -> LawReport:
    """Execute a registered equivalence check against a catalog entry."""
    tid = normalize_theorem_id(theorem_id)
    if isinstance(entry, str):
        entry = catalog_entry(entry, window)
    if sampler is None:
        sampler = Sampler(window=window)
    if sets is None:
        sets = default_sets(2)
    return THEOREMS[tid](entry, sampler, sets)
