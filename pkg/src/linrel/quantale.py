"""Quantale structures on finite lattices and on the extended integers.

Two backends share one interface: finite multiplication tables over a
:class:`~linrel.lattice.FiniteLattice`, and closed-form saturating
addition on the extended integers.  The max-plus structure lives on the
usual order; its min-plus companion is represented as a quantale on the
opposite order rather than a separate backend, so one code path serves
both views.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Iterable, Sequence

from .errors import (
    InputFormatError,
    MonoidError,
    NotGirardError,
    StructureError,
    UnknownElementError,
)
from .lattice import FiniteLattice, build_lattice
from .report import LawEntry, LawReport, law_entry

Elem = Any  # str for finite carriers, int or an infinity marker for ZInt

PLUS_INF = "+inf"
MINUS_INF = "-inf"
_INFS = (MINUS_INF, PLUS_INF)


def zint_valid(v: object) -> bool:
    return v in _INFS or (isinstance(v, int) and not isinstance(v, bool))


def zint_leq(a: Elem, b: Elem) -> bool:
    """Comparison in the usual order, minus infinity at the bottom."""
    if a == b or a == MINUS_INF or b == PLUS_INF:
        return True
    if a == PLUS_INF or b == MINUS_INF:
        return False
    return a <= b


@dataclass(frozen=True)
class FiniteCarrier:
    lattice: FiniteLattice

    is_finite = True

    def contains(self, v: Elem) -> bool:
        return v in self.lattice

    def check(self, v: Elem) -> Elem:
        if v not in self.lattice:
            raise UnknownElementError(f"unknown element {v!r}")
        return v

    def leq(self, a: Elem, b: Elem) -> bool:
        return self.lattice.leq(a, b)

    def join(self, items: Iterable[Elem]) -> Elem:
        return self.lattice.join(items)

    def meet(self, items: Iterable[Elem]) -> Elem:
        return self.lattice.meet(items)

    @property
    def bottom(self) -> Elem:
        return self.lattice.bottom

    @property
    def top(self) -> Elem:
        return self.lattice.top

    def sample_elements(self, window: int = 10) -> list[Elem]:
        return list(self.lattice.elements)

    def opposite(self) -> "FiniteCarrier":
        return FiniteCarrier(self.lattice.opposite())


@dataclass(frozen=True)
class ZIntCarrier:
    """The extended integers, in the usual order or its reverse."""

    reverse: bool = False

    is_finite = False

    def contains(self, v: Elem) -> bool:
        return zint_valid(v)

    def check(self, v: Elem) -> Elem:
        if not zint_valid(v):
            raise UnknownElementError(f"not an extended integer: {v!r}")
        return v

    def leq(self, a: Elem, b: Elem) -> bool:
        return zint_leq(b, a) if self.reverse else zint_leq(a, b)

    def join(self, items: Iterable[Elem]) -> Elem:
        acc = self.bottom
        for v in items:
            if self.leq(acc, v):
                acc = v
        return acc

    def meet(self, items: Iterable[Elem]) -> Elem:
        acc = self.top
        for v in items:
            if self.leq(v, acc):
                acc = v
        return acc

    @property
    def bottom(self) -> Elem:
        return PLUS_INF if self.reverse else MINUS_INF

    @property
    def top(self) -> Elem:
        return MINUS_INF if self.reverse else PLUS_INF

    def sample_elements(self, window: int = 10) -> list[Elem]:
        return [MINUS_INF, *range(-window, window + 1), PLUS_INF]

    def opposite(self) -> "ZIntCarrier":
        return ZIntCarrier(not self.reverse)


@dataclass(frozen=True)
class TableOp:
    """A finite multiplication, row-major over the carrier's element order."""

    table: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class ZIntOp:
    """Saturating addition on the extended integers.

    ``dominant`` names the infinity that wins mixed sums; ``shift`` is
    subtracted from every finite sum, so the unit becomes ``shift``.
    """

    dominant: str
    shift: int = 0

    def apply(self, a: Elem, b: Elem) -> Elem:
        dom = self.dominant
        if a == dom or b == dom:
            return dom
        other = PLUS_INF if dom == MINUS_INF else MINUS_INF
        if a == other or b == other:
            return other
        return a + b - self.shift


@dataclass(frozen=True)
class Quantale:
    """A carrier with an associative, join-preserving multiplication."""

    carrier: FiniteCarrier | ZIntCarrier
    op: TableOp | ZIntOp
    unit: Elem

    has_par = False

    # -- order plumbing, delegated to the carrier ------------------------

    def contains(self, v: Elem) -> bool:
        return self.carrier.contains(v)

    def leq(self, a: Elem, b: Elem) -> bool:
        return self.carrier.leq(a, b)

    def join(self, items: Iterable[Elem]) -> Elem:
        return self.carrier.join(items)

    def meet(self, items: Iterable[Elem]) -> Elem:
        return self.carrier.meet(items)

    @property
    def bottom(self) -> Elem:
        return self.carrier.bottom

    @property
    def top(self) -> Elem:
        return self.carrier.top

    def sample_elements(self, window: int = 10) -> list[Elem]:
        return self.carrier.sample_elements(window)

    # -- multiplication and residuals ------------------------------------

    def tensor(self, a: Elem, b: Elem) -> Elem:
        if isinstance(self.op, TableOp):
            lat = self.carrier.lattice
            return self.op.table[lat.index(a)][lat.index(b)]
        self.carrier.check(a)
        self.carrier.check(b)
        return self.op.apply(a, b)

    def residual_right(self, a: Elem, b: Elem) -> Elem:
        """The largest c with a (x) c <= b."""
        if isinstance(self.op, ZIntOp):
            return self._zint_residual(a, b)
        self.carrier.check(a)
        self.carrier.check(b)
        tm = self.tensor_map
        return self.join(c for c in self.carrier.sample_elements()
                         if self.leq(tm[a][c], b))

    def residual_left(self, b: Elem, a: Elem) -> Elem:
        """The largest c with c (x) a <= b."""
        if isinstance(self.op, ZIntOp):
            # saturating addition is commutative
            return self._zint_residual(a, b)
        self.carrier.check(a)
        self.carrier.check(b)
        tm = self.tensor_map
        return self.join(c for c in self.carrier.sample_elements()
                         if self.leq(tm[c][a], b))

    def _zint_residual(self, a: Elem, b: Elem) -> Elem:
        self.carrier.check(a)
        self.carrier.check(b)
        top, bot = self.carrier.top, self.carrier.bottom
        if self.op.dominant != bot:
            raise StructureError(
                "closed-form residual needs the absorbing infinity "
                "at the bottom of the order"
            )
        if a == bot:
            return top
        if a == top:
            return top if b == top else bot
        if b == top:
            return top
        if b == bot:
            return bot
        return b - a + self.op.shift

    # -- lookup tables for hot composition loops -------------------------

    @cached_property
    def tensor_map(self) -> dict | None:
        """Nested name-to-name product table, or None for ZInt backends."""
        if not isinstance(self.op, TableOp):
            return None
        els = self.carrier.lattice.elements
        return {
            a: {b: self.op.table[i][j] for j, b in enumerate(els)}
            for i, a in enumerate(els)
        }

    @cached_property
    def join_map(self) -> dict | None:
        if not self.carrier.is_finite:
            return None
        els = self.carrier.lattice.elements
        return {a: {b: self.join((a, b)) for b in els} for a in els}

    @cached_property
    def meet_map(self) -> dict | None:
        if not self.carrier.is_finite:
            return None
        els = self.carrier.lattice.elements
        return {a: {b: self.meet((a, b)) for b in els} for a in els}


def table_quantale(lattice: FiniteLattice, table: Sequence[Sequence[str]],
                   unit: str) -> Quantale:
    """Validate shapes and element membership, then wrap the table."""
    n = len(lattice)
    rows = tuple(tuple(row) for row in table)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise InputFormatError("tensor table must be square over the elements")
    for row in rows:
        for v in row:
            if v not in lattice:
                raise UnknownElementError(f"table entry {v!r} is not an element")
    if unit not in lattice:
        raise UnknownElementError(f"unit {unit!r} is not an element")
    return Quantale(carrier=FiniteCarrier(lattice), op=TableOp(rows), unit=unit)


def tropical_quantale() -> Quantale:
    """Extended integers, usual order, saturating addition with -inf dominant."""
    return Quantale(carrier=ZIntCarrier(False), op=ZIntOp(MINUS_INF, 0), unit=0)


def arctic_quantale() -> Quantale:
    """Extended integers on the opposite order, +inf dominant."""
    return Quantale(carrier=ZIntCarrier(True), op=ZIntOp(PLUS_INF, 0), unit=0)


# ---------------------------------------------------------------------------
# Girard structure


@dataclass(frozen=True)
class GirardQuantale:
    """A quantale with a chosen cyclic dualizing element."""

    base: Quantale
    dualizer: Elem

    has_par = True

    @property
    def carrier(self):
        return self.base.carrier

    @property
    def unit(self) -> Elem:
        return self.base.unit

    @property
    def par_unit(self) -> Elem:
        return self.dualizer

    def contains(self, v):
        return self.base.contains(v)

    def leq(self, a, b):
        return self.base.leq(a, b)

    def join(self, items):
        return self.base.join(items)

    def meet(self, items):
        return self.base.meet(items)

    @property
    def bottom(self):
        return self.base.bottom

    @property
    def top(self):
        return self.base.top

    def sample_elements(self, window: int = 10):
        return self.base.sample_elements(window)

    def tensor(self, a, b):
        return self.base.tensor(a, b)

    def residual_right(self, a, b):
        return self.base.residual_right(a, b)

    def residual_left(self, b, a):
        return self.base.residual_left(b, a)

    def neg(self, a: Elem) -> Elem:
        """Linear negation: the residual of the dualizer."""
        return self.base.residual_right(a, self.dualizer)

    def par(self, a: Elem, b: Elem) -> Elem:
        """De Morgan dual multiplication: neg(neg(b) (x) neg(a))."""
        return self.neg(self.base.tensor(self.neg(b), self.neg(a)))

    @cached_property
    def tensor_map(self):
        return self.base.tensor_map

    @cached_property
    def join_map(self):
        return self.base.join_map

    @cached_property
    def meet_map(self):
        return self.base.meet_map

    @cached_property
    def par_map(self) -> dict | None:
        if not self.carrier.is_finite:
            return None
        els = self.carrier.lattice.elements
        return {a: {b: self.par(a, b) for b in els} for a in els}


def is_cyclic_dualizing(q: Quantale, d: Elem,
                        sample: Sequence[Elem] | None = None) -> bool:
    """True iff both residuations into d agree and double negation is identity."""
    q.carrier.check(d)
    if sample is None:
        sample = q.sample_elements()
    rr, rl = q.residual_right, q.residual_left
    for a in sample:
        if rl(d, a) != rr(a, d):
            return False
        if rr(rr(a, d), d) != a:
            return False
    return True


def find_dualizers(q: Quantale,
                   sample: Sequence[Elem] | None = None) -> tuple[Elem, ...]:
    """Scan candidate elements; empty result means no Girard structure found."""
    if sample is None:
        sample = q.sample_elements()
    return tuple(d for d in sample if is_cyclic_dualizing(q, d, sample))


def girard_quantale(base: Quantale, dualizer: Elem,
                    sample: Sequence[Elem] | None = None) -> GirardQuantale:
    if not is_cyclic_dualizing(base, dualizer, sample):
        raise NotGirardError(f"{dualizer!r} is not a cyclic dualizing element")
    return GirardQuantale(base=base, dualizer=dualizer)


# ---------------------------------------------------------------------------
# LD structure: two quantales related by linear distributions


@dataclass(frozen=True)
class LDQuantale:
    """A lattice carrying a tensor quantale and a par quantale.

    ``par_part`` lives on the opposite carrier, so its joins are the
    original meets; both multiplications can then be checked by the same
    quantale-law code, each against its own orientation.
    """

    tensor_part: Quantale
    par_part: Quantale

    has_par = True

    @property
    def carrier(self):
        return self.tensor_part.carrier

    @property
    def unit(self) -> Elem:
        return self.tensor_part.unit

    @property
    def par_unit(self) -> Elem:
        return self.par_part.unit

    def contains(self, v):
        return self.tensor_part.contains(v)

    def leq(self, a, b):
        return self.tensor_part.leq(a, b)

    def join(self, items):
        return self.tensor_part.join(items)

    def meet(self, items):
        return self.tensor_part.meet(items)

    @property
    def bottom(self):
        return self.tensor_part.bottom

    @property
    def top(self):
        return self.tensor_part.top

    def sample_elements(self, window: int = 10):
        return self.tensor_part.sample_elements(window)

    def tensor(self, a, b):
        return self.tensor_part.tensor(a, b)

    def par(self, a, b):
        return self.par_part.tensor(a, b)

    def residual_right(self, a, b):
        return self.tensor_part.residual_right(a, b)

    def residual_left(self, b, a):
        return self.tensor_part.residual_left(b, a)

    @cached_property
    def tensor_map(self):
        return self.tensor_part.tensor_map

    @cached_property
    def par_map(self):
        return self.par_part.tensor_map

    @cached_property
    def join_map(self):
        return self.tensor_part.join_map

    @cached_property
    def meet_map(self):
        return self.tensor_part.meet_map


def ld_quantale(tensor_part: Quantale, par_part: Quantale) -> LDQuantale:
    """Pair two quantales after checking they share a carrier, order-reversed."""
    if tensor_part.carrier.opposite() != par_part.carrier:
        raise StructureError("par part must live on the opposite carrier")
    return LDQuantale(tensor_part=tensor_part, par_part=par_part)


def girard_to_ld(g: GirardQuantale) -> LDQuantale:
    """Package a Girard quantale as tensor plus derived par."""
    if g.carrier.is_finite:
        els = g.carrier.lattice.elements
        table = tuple(tuple(g.par(a, b) for b in els) for a in els)
        par_q = Quantale(carrier=g.carrier.opposite(), op=TableOp(table),
                         unit=g.dualizer)
    else:
        dom = PLUS_INF if g.base.op.dominant == MINUS_INF else MINUS_INF
        par_q = Quantale(carrier=g.carrier.opposite(),
                         op=ZIntOp(dom, g.dualizer), unit=g.dualizer)
    return LDQuantale(tensor_part=g.base, par_part=par_q)


def opposite_quantale(ld: LDQuantale) -> LDQuantale:
    """Swap tensor with par and reverse the order; an involution."""
    return LDQuantale(tensor_part=ld.par_part, par_part=ld.tensor_part)


# ---------------------------------------------------------------------------
# Law suites

_TENSOR_LABELS = (
    "tensor-associativity",
    "tensor-unit-left",
    "tensor-unit-right",
    "tensor-sup-left",
    "tensor-sup-right",
    "tensor-bottom-left",
    "tensor-bottom-right",
)

_PAR_LABELS = (
    "par-associativity",
    "par-unit-left",
    "par-unit-right",
    "par-inf-left",
    "par-inf-right",
    "par-top-left",
    "par-top-right",
)


def _mult_law_entries(q: Quantale, sample: Sequence[Elem],
                      labels: Sequence[str], mode: str) -> list[LawEntry]:
    """Check one multiplication against the carrier order of ``q``.

    For a par part on the opposite carrier the same checks read as meet
    preservation and absorption by the original top, which is exactly the
    dual quantale axiom set.
    """
    t = q.tensor
    jn = q.join
    bot = q.bottom
    unit = q.unit
    lab_assoc, lab_ul, lab_ur, lab_sl, lab_sr, lab_bl, lab_br = labels

    wit = None
    for a, b, c in product(sample, repeat=3):
        lhs, rhs = t(t(a, b), c), t(a, t(b, c))
        if lhs != rhs:
            wit = {"a": a, "b": b, "c": c, "lhs": lhs, "rhs": rhs}
            break
    entries = [law_entry(lab_assoc, wit, mode)]

    wit = None
    for a in sample:
        if t(unit, a) != a:
            wit = {"a": a, "lhs": t(unit, a)}
            break
    entries.append(law_entry(lab_ul, wit, mode))

    wit = None
    for a in sample:
        if t(a, unit) != a:
            wit = {"a": a, "lhs": t(a, unit)}
            break
    entries.append(law_entry(lab_ur, wit, mode))

    wit = None
    for a, b, c in product(sample, repeat=3):
        lhs, rhs = t(jn((a, b)), c), jn((t(a, c), t(b, c)))
        if lhs != rhs:
            wit = {"a": a, "b": b, "c": c, "lhs": lhs, "rhs": rhs}
            break
    entries.append(law_entry(lab_sl, wit, mode))

    wit = None
    for a, b, c in product(sample, repeat=3):
        lhs, rhs = t(c, jn((a, b))), jn((t(c, a), t(c, b)))
        if lhs != rhs:
            wit = {"a": a, "b": b, "c": c, "lhs": lhs, "rhs": rhs}
            break
    entries.append(law_entry(lab_sr, wit, mode))

    wit = None
    for a in sample:
        if t(bot, a) != bot:
            wit = {"a": a, "lhs": t(bot, a)}
            break
    entries.append(law_entry(lab_bl, wit, mode))

    wit = None
    for a in sample:
        if t(a, bot) != bot:
            wit = {"a": a, "lhs": t(a, bot)}
            break
    entries.append(law_entry(lab_br, wit, mode))
    return entries


def check_quantale_laws(q: Quantale, domain_sample: Sequence[Elem] | None = None,
                        suite: str = "quantale-laws",
                        window: int = 10) -> LawReport:
    """Associativity, units, and two-sided join preservation over a sample."""
    sample = list(domain_sample) if domain_sample is not None \
        else q.sample_elements(window)
    mode = "exhaustive" if q.carrier.is_finite and domain_sample is None \
        else f"sample({len(sample)})"
    return LawReport(suite, tuple(_mult_law_entries(q, sample, _TENSOR_LABELS, mode)))


def check_ld_laws(ld: LDQuantale, domain_sample: Sequence[Elem] | None = None,
                  suite: str = "ld-laws", window: int = 10) -> LawReport:
    """Both quantale structures plus the two linear distributions."""
    sample = list(domain_sample) if domain_sample is not None \
        else ld.sample_elements(window)
    mode = "exhaustive" if ld.carrier.is_finite and domain_sample is None \
        else f"sample({len(sample)})"
    entries = _mult_law_entries(ld.tensor_part, sample, _TENSOR_LABELS, mode)
    entries += _mult_law_entries(ld.par_part, sample, _PAR_LABELS, mode)

    t, p, leq = ld.tensor, ld.par, ld.leq
    wit = None
    for a, b, c in product(sample, repeat=3):
        lhs, rhs = t(a, p(b, c)), p(t(a, b), c)
        if not leq(lhs, rhs):
            wit = {"a": a, "b": b, "c": c, "lhs": lhs, "rhs": rhs}
            break
    entries.append(law_entry("linear-distribution-left", wit, mode))

    wit = None
    for a, b, c in product(sample, repeat=3):
        lhs, rhs = t(p(b, c), a), p(b, t(c, a))
        if not leq(lhs, rhs):
            wit = {"a": a, "b": b, "c": c, "lhs": lhs, "rhs": rhs}
            break
    entries.append(law_entry("linear-distribution-right", wit, mode))
    return LawReport(suite, tuple(entries))


# ---------------------------------------------------------------------------
# Shift monoid completion


def _fresh_name(base: str, taken: Iterable[str]) -> str:
    name = base
    taken = set(taken)
    while name in taken:
        name = "_" + name
    return name


def shift_completion(elements: Sequence[str], add_table: Sequence[Sequence[str]],
                     shift: str) -> LDQuantale:
    """Complete a cancellative commutative monoid to a two-multiplication
    quantale on the discrete order with adjoined bottom and top.

    The first multiplication extends the monoid addition (top absorbs
    against monoid elements, bottom absorbs everything); the second is the
    shifted product x + y - shift, extended dually.
    """
    names = list(elements)
    n = len(names)
    if len(set(names)) != n or n == 0:
        raise MonoidError("monoid elements must be distinct and nonempty")
    idx = {v: i for i, v in enumerate(names)}
    if shift not in idx:
        raise UnknownElementError(f"shift {shift!r} is not a monoid element")
    tbl = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = add_table[i][j]
            if v not in idx:
                raise UnknownElementError(f"monoid table entry {v!r} unknown")
            tbl[i][j] = idx[v]

    for i in range(n):
        for j in range(n):
            if tbl[i][j] != tbl[j][i]:
                raise MonoidError(
                    f"monoid is not commutative at ({names[i]}, {names[j]})")
            for k in range(n):
                if tbl[tbl[i][j]][k] != tbl[i][tbl[j][k]]:
                    raise MonoidError(
                        f"monoid is not associative at "
                        f"({names[i]}, {names[j]}, {names[k]})")
    unit_idx = None
    for e in range(n):
        if all(tbl[e][b] == b for b in range(n)):
            unit_idx = e
            break
    if unit_idx is None:
        raise MonoidError("monoid table has no unit")
    for i in range(n):
        if len(set(tbl[i])) != n:
            raise MonoidError(f"monoid is not cancellative at {names[i]!r}")
    inv_idx = None
    for j in range(n):
        if tbl[idx[shift]][j] == unit_idx:
            inv_idx = j
            break
    if inv_idx is None:
        raise MonoidError(f"shift {shift!r} is not invertible")

    bot = _fresh_name("bot", names)
    top = _fresh_name("top", names)
    carrier_names = [bot, *names, top]
    covers = [(bot, m) for m in names] + [(m, top) for m in names]
    lattice = build_lattice(carrier_names, covers)

    def first_mult(a: str, b: str) -> str:
        if a == bot or b == bot:
            return bot
        if a == top or b == top:
            return top
        return names[tbl[idx[a]][idx[b]]]

    def second_mult(a: str, b: str) -> str:
        if a == top or b == top:
            return top
        if a == bot or b == bot:
            return bot
        return names[tbl[tbl[idx[a]][idx[b]]][inv_idx]]

    t_table = tuple(tuple(first_mult(a, b) for b in carrier_names)
                    for a in carrier_names)
    p_table = tuple(tuple(second_mult(a, b) for b in carrier_names)
                    for a in carrier_names)
    tensor_q = Quantale(carrier=FiniteCarrier(lattice), op=TableOp(t_table),
                        unit=names[unit_idx])
    par_q = Quantale(carrier=FiniteCarrier(lattice.opposite()),
                     op=TableOp(p_table), unit=shift)
    return LDQuantale(tensor_part=tensor_q, par_part=par_q)


def cyclic_group_table(n: int, prefix: str = "g") -> tuple[list[str], list[list[str]]]:
    """Addition table of the integers mod n; generator named ``<prefix>1``."""
    names = ["e"] + [f"{prefix}{i}" for i in range(1, n)]
    table = [[names[(i + j) % n] for j in range(n)] for i in range(n)]
    return names, table


# ---------------------------------------------------------------------------
# JSON interface


@dataclass(frozen=True)
class LoadedQuantale:
    """Everything a quantale file can describe: the tensor quantale,
    an LD pairing when a par is available, and a validated Girard
    structure when a dualizer is available."""

    quantale: Quantale
    ld: LDQuantale | None
    girard: GirardQuantale | None

    def ambient(self):
        """Richest structure available, for relation-level operations."""
        if self.girard is not None and self.ld is None:
            return self.girard
        return self.ld if self.ld is not None else self.quantale


def quantale_from_json(obj: dict, window: int = 10) -> LoadedQuantale:
    kind = obj.get("kind")
    if kind == "table":
        return _table_from_json(obj)
    if kind == "zinf":
        return _zinf_from_json(obj, window)
    raise InputFormatError(f"unknown quantale kind {obj.get('kind')!r}")


def _table_from_json(obj: dict) -> LoadedQuantale:
    for field in ("elements", "covers", "tensor", "unit"):
        if field not in obj:
            raise InputFormatError(f"quantale file is missing field {field!r}")
    lattice = build_lattice(obj["elements"],
                            [tuple(pair) for pair in obj["covers"]])
    q = table_quantale(lattice, obj["tensor"], obj["unit"])
    ld = None
    if "par" in obj and obj["par"] is not None:
        par_obj = obj["par"]
        if "table" not in par_obj or "unit" not in par_obj:
            raise InputFormatError("par block needs 'table' and 'unit'")
        par_q = table_quantale(lattice.opposite(), par_obj["table"],
                               par_obj["unit"])
        ld = LDQuantale(tensor_part=q, par_part=par_q)
    girard = None
    if "dualizer" in obj and obj["dualizer"] is not None:
        girard = girard_quantale(q, obj["dualizer"])
        if ld is None:
            ld = girard_to_ld(girard)
    return LoadedQuantale(quantale=q, ld=ld, girard=girard)


def _zinf_from_json(obj: dict, window: int) -> LoadedQuantale:
    flavor = obj.get("flavor")
    if flavor == "tropical":
        q = tropical_quantale()
    elif flavor == "arctic":
        q = arctic_quantale()
    else:
        raise InputFormatError(f"unknown zinf flavor {flavor!r}")
    d = obj.get("dualizer", 0)
    if not isinstance(d, int) or isinstance(d, bool):
        raise InputFormatError("zinf dualizer must be an integer")
    girard = girard_quantale(q, d, q.sample_elements(window))
    return LoadedQuantale(quantale=q, ld=girard_to_ld(girard), girard=girard)
