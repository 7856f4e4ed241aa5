"""Monogenicity at primes, Zariski-locally, and over geometric points.

Brute-force side of the dual oracle: reduce the index form mod p and
enumerate residue tuples.  The Artinian criterion in monogen.artin checks
the same verdicts independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BudgetExceeded, NotIntegerBase, ZeroIndexForm
from .exactring import content_primes, is_prime
from .algebra import StructureAlgebra
from .indexform import IndexForm, index_form
from . import artin
from .search import DEFAULT_ENUM_CAP, SearchResult, search_monogenerators

DEFAULT_ARTIN_BOUND = 7
DEFAULT_OBSTRUCTION_BOUND = 25


@dataclass(frozen=True)
class LocalVerdict:
    prime: int
    monogenic_at_p: bool
    witness: tuple | None = None

    def to_json(self):
        d = {"p": self.prime, "monogenic_at_p": self.monogenic_at_p}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


def is_monogenic_at_prime(
    alg: StructureAlgebra,
    p: int,
    cap: int = DEFAULT_ENUM_CAP,
    form: IndexForm | None = None,
) -> LocalVerdict:
    """Enumerate F_p tuples until the reduced index form is nonzero.

    Variables absent from the reduced form (always including the
    coefficient of 1 when 1 is a basis element) are skipped; the first
    witness in lexicographic order is reported.
    """
    _require_z(alg)
    if form is None:
        form = index_form(alg)
    fp_form = form.reduce_mod_p(p)
    if fp_form.is_zero:
        return LocalVerdict(p, False)
    used = fp_form.variables_used()
    m = len(used)
    if p**m > cap:
        raise BudgetExceeded(f"{p}^{m} exceeds the enumeration cap {cap}")
    n = alg.rank
    for combo in itertools.product(range(p), repeat=m):
        v = [0] * n
        for i, c in zip(used, combo):
            v[i] = c
        if fp_form.evaluate(v) != 0:
            return LocalVerdict(p, True, tuple(v))
    return LocalVerdict(p, False)


def common_index_divisors(
    alg: StructureAlgebra, cap: int = DEFAULT_ENUM_CAP, form: IndexForm | None = None
):
    """Sorted primes where no residue tuple makes the index form nonzero.

    Only p < n can fail: for p >= n the affine line over F_p has at least
    as many closed points of each residue degree as the fiber can use.
    """
    _require_z(alg)
    if form is None:
        form = index_form(alg)
    out = []
    for p in range(2, alg.rank):
        if is_prime(p) and not is_monogenic_at_prime(alg, p, cap, form).monogenic_at_p:
            out.append(p)
    return out


def geometric_point_verdict(
    alg: StructureAlgebra, form: IndexForm | None = None
) -> dict:
    """Monogenic over geometric points iff no fiber kills the index form."""
    _require_z(alg)
    if form is None:
        form = index_form(alg)
    if form.form.is_zero:
        raise ZeroIndexForm(f"index form of {alg.label!r} is identically zero")
    fibers = sorted(content_primes(form.form))
    return {
        "monogenic_over_geometric_points": not fibers,
        "vanishing_fiber_primes": set(fibers),
    }


def value_set_mod_p(form: IndexForm, p: int, cap: int = DEFAULT_ENUM_CAP):
    """All values of the index form over F_p tuples."""
    fp_form = form.reduce_mod_p(p)
    used = fp_form.variables_used()
    if p ** len(used) > cap:
        raise BudgetExceeded(f"{p}^{len(used)} exceeds the enumeration cap {cap}")
    n = form.rank
    values = set()
    for combo in itertools.product(range(p), repeat=len(used)):
        v = [0] * n
        for i, c in zip(used, combo):
            v[i] = c
        values.add(fp_form.evaluate(v))
    return values


def local_obstruction_primes(
    form: IndexForm, bound: int = DEFAULT_OBSTRUCTION_BOUND, cap: int = DEFAULT_ENUM_CAP
):
    """Primes p <= bound where the form never takes the values +-1 mod p.

    Any such prime rules out a global monogenerator even when no common
    index divisor exists.
    """
    out = []
    for p in range(2, bound + 1):
        if not is_prime(p):
            continue
        vals = value_set_mod_p(form, p, cap)
        if 1 not in vals and (p - 1) % p not in vals:
            out.append(p)
    return out


@dataclass
class MonogenicityReport:
    label: str
    rank: int
    global_status: str  # Monogenic | NotMonogenic | Unknown
    zariski_local: bool
    common_index_divisors: list
    geometric: bool
    vanishing_fibers: list
    primes: list
    artin_crosscheck: list
    search: SearchResult | None = None
    witness: tuple | None = None
    reason: str | None = None
    notes: list = field(default_factory=list)

    def to_json(self):
        g = {"status": self.global_status}
        if self.witness is not None:
            g["witness"] = list(self.witness)
        if self.reason is not None:
            g["reason"] = self.reason
        return {
            "label": self.label,
            "global": g,
            "zariski_local": self.zariski_local,
            "common_index_divisors": self.common_index_divisors,
            "geometric": self.geometric,
            "vanishing_fibers": self.vanishing_fibers,
            "primes": [v.to_json() for v in self.primes],
            "artin_crosscheck": self.artin_crosscheck,
            "search": None if self.search is None else self.search.to_json(),
            "notes": self.notes,
        }

    def render(self) -> str:
        lines = [f"algebra: {self.label} (rank {self.rank})"]
        g = f"global: {self.global_status}"
        if self.witness is not None:
            g += f" (witness {list(self.witness)})"
        if self.reason is not None:
            g += f" ({self.reason})"
        lines.append(g)
        lines.append(f"zariski-local: {self.zariski_local}"
                     f" (common index divisors: {self.common_index_divisors})")
        lines.append(f"geometric: {self.geometric}"
                     f" (vanishing fibers: {self.vanishing_fibers})")
        for v in self.primes:
            w = f", witness {list(v.witness)}" if v.witness is not None else ""
            lines.append(f"  p={v.prime}: monogenic_at_p={v.monogenic_at_p}{w}")
        for c in self.artin_crosscheck:
            lines.append(
                f"  artin p={c['p']}: fiber_monogenic={c['artin']} "
                f"brute_force={c['brute']} agree={c['agree']}"
            )
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def classify(
    alg: StructureAlgebra,
    height: int,
    cap: int = DEFAULT_ENUM_CAP,
    artin_bound: int = DEFAULT_ARTIN_BOUND,
    obstruction_bound: int = DEFAULT_OBSTRUCTION_BOUND,
) -> MonogenicityReport:
    """Aggregate every verdict for an integer algebra."""
    _require_z(alg)
    alg.require_valid()
    form = index_form(alg)
    if form.form.is_zero:
        raise ZeroIndexForm(f"index form of {alg.label!r} is identically zero")

    geo = geometric_point_verdict(alg, form)
    verdicts = [
        is_monogenic_at_prime(alg, p, cap, form)
        for p in range(2, max(alg.rank, 2))
        if is_prime(p)
    ]
    cids = [v.prime for v in verdicts if not v.monogenic_at_p]
    zariski = not cids

    result = search_monogenerators(alg, height, cap, form)

    crosscheck = []
    for p in range(2, artin_bound + 1):
        if not is_prime(p):
            continue
        dec = artin.decompose(alg.reduce_mod_p(p))
        brute = is_monogenic_at_prime(alg, p, cap, form).monogenic_at_p
        fiber = artin.fiber_monogenic(dec)
        crosscheck.append({"p": p, "brute": brute, "artin": fiber, "agree": brute == fiber})

    notes = []
    status, witness, reason = "Unknown", None, None
    if result.witnesses:
        witness = result.witnesses[0]
        status = "Monogenic"
    elif cids:
        status = "NotMonogenic"
        reason = f"common index divisor {cids[0]}"
    elif not geo["monogenic_over_geometric_points"]:
        status = "NotMonogenic"
        fiber = sorted(geo["vanishing_fiber_primes"])[0]
        reason = f"index form vanishes on the fiber over {fiber}"
    else:
        notes.append(f"height {height} exhausted without a witness")
        for p in local_obstruction_primes(form, obstruction_bound, cap):
            notes.append(f"local obstruction: values mod {p} never units")

    report = MonogenicityReport(
        label=alg.label,
        rank=alg.rank,
        global_status=status,
        zariski_local=zariski,
        common_index_divisors=cids,
        geometric=geo["monogenic_over_geometric_points"],
        vanishing_fibers=sorted(geo["vanishing_fiber_primes"]),
        primes=verdicts,
        artin_crosscheck=crosscheck,
        search=result,
        witness=witness,
        reason=reason,
        notes=notes,
    )
    _assert_implications(report)
    from .twisted import base_Z_twisted_note

    base_Z_twisted_note(report)
    return report


def _assert_implications(report: MonogenicityReport):
    """Monogenic => Zariski-locally monogenic => monogenic over geometric points."""
    if report.global_status == "Monogenic" and not report.zariski_local:
        raise AssertionError("monogenic but not Zariski-locally monogenic")
    if report.zariski_local and not report.geometric:
        raise AssertionError("Zariski-locally monogenic but not over geometric points")


def _require_z(alg):
    if alg.base.kind != "Z":
        raise NotIntegerBase("this operation needs base Z")
