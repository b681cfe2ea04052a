"""Assembles the whole verification: chain data, row factorizations, the
unit combination and the splitting it induces, the two non-freeness
conditions, the structured witnesses, and the aggregate report.

Basis conventions: edges are ordered (x, y); module maps act by left
multiplication on column coordinates, so composites pair the outer map's
entries on the left.  The kernel map is
psi(u, v) = (y + s) * u + r * v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import builtin
from .certificates import ConjugacyCertificate, equivalence_verdict
from .division import (
    StaffordInstance,
    in_V,
    no_monic_degree_one,
    witnesses,
    y_plus_s,
)
from .klein import SPoly, eval_combo
from .presentations import Presentation, boundary_matrices, euler_characteristic


@dataclass(frozen=True)
class BezoutWitness:
    """Pair with r * alpha + (y + s) * beta = 1, i.e. psi(beta, alpha) = 1."""

    alpha: SPoly
    beta: SPoly


@dataclass(frozen=True)
class ChainData:
    """Boundary rows for the one- and two-relator complexes.

    d2_p is the single row of the one-relator boundary, d2_q the two rows
    of the two-relator boundary, d1 the edge boundary column; all indexed
    by the (x, y) edge order.
    """

    d2_p: Tuple[SPoly, ...]
    d2_q: Tuple[Tuple[SPoly, ...], ...]
    d1: Tuple[SPoly, ...]


def build_chain_data(
    p: Optional[Presentation] = None, q: Optional[Presentation] = None
) -> ChainData:
    p = p if p is not None else builtin.presentation_p()
    q = q if q is not None else builtin.presentation_q()
    d2p, d1p = boundary_matrices(p, eval_combo)
    d2q, d1q = boundary_matrices(q, eval_combo)
    if d1p != d1q:
        raise ValueError("presentations disagree on the edge boundary")
    return ChainData(tuple(d2p[0]), tuple(tuple(row) for row in d2q), tuple(d1p))


def chain_composites_vanish(chains: ChainData) -> bool:
    """d1 after d2 is zero for both complexes (edge entries on the left)."""
    rows = [chains.d2_p] + [row for row in chains.d2_q]
    zero = SPoly.zero()
    for row in rows:
        total = SPoly.zero()
        for edge, entry in zip(chains.d1, row):
            total = total + edge * entry
        if total != zero:
            return False
    return True


def psi(u: SPoly, v: SPoly, inst: Optional[StaffordInstance] = None) -> SPoly:
    """(y + s) * u + r * v; its kernel is the second homotopy module."""
    inst = inst if inst is not None else builtin.stafford_instance()
    return y_plus_s(inst.s) * u + SPoly.from_rpoly(inst.r) * v


def verify_factorization(
    chains: ChainData, factors: Optional[Tuple[SPoly, SPoly]] = None
) -> bool:
    """Row identities: d2_q row i equals d2_p row times the i-th factor."""
    factors = factors if factors is not None else builtin.boundary_row_factors()
    if len(chains.d2_q) != len(factors):
        return False
    for row, factor in zip(chains.d2_q, factors):
        for base_entry, entry in zip(chains.d2_p, row):
            if entry != base_entry * factor:
                return False
    return True


def verify_bezout(w: BezoutWitness, inst: Optional[StaffordInstance] = None) -> bool:
    """Exact evaluation of r * alpha + (y + s) * beta against 1."""
    inst = inst if inst is not None else builtin.stafford_instance()
    return psi(w.beta, w.alpha, inst) == SPoly.one()


Matrix = List[List[SPoly]]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    out: Matrix = []
    for i in range(len(a)):
        row = []
        for j in range(len(b[0])):
            acc = SPoly.zero()
            for k in range(len(b)):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def splitting_projector(
    w: BezoutWitness, inst: Optional[StaffordInstance] = None
) -> Matrix:
    """id - t . psi, where t(c) = (beta*c, alpha*c) sections psi."""
    inst = inst if inst is not None else builtin.stafford_instance()
    ys = y_plus_s(inst.s)
    r = SPoly.from_rpoly(inst.r)
    one, zero = SPoly.one(), SPoly.zero()
    ident = [[one, zero], [zero, one]]
    t_psi = _matmul([[w.beta], [w.alpha]], [[ys, r]])
    return [
        [ident[i][j] - t_psi[i][j] for j in range(2)] for i in range(2)
    ]


def splitting_check(w: BezoutWitness, inst: Optional[StaffordInstance] = None) -> bool:
    """The witness splits psi: psi.t = id, pi^2 = pi, psi.pi = 0.

    All three are exact identities of 2x2 / 1x2 matrices over the twisted
    ring, checked on the basis; right-linearity extends them everywhere.
    """
    inst = inst if inst is not None else builtin.stafford_instance()
    if not verify_bezout(w, inst):
        return False
    ys = y_plus_s(inst.s)
    r = SPoly.from_rpoly(inst.r)
    proj = splitting_projector(w, inst)
    if _matmul(proj, proj) != proj:
        return False
    comp = _matmul([[ys, r]], proj)
    zero = SPoly.zero()
    return comp[0][0] == zero and comp[0][1] == zero


@dataclass(frozen=True)
class StaffordVerdict:
    condition_i: bool
    condition_ii: bool
    witnesses_ok: bool
    degree_one: Optional[SPoly] = None
    monic: Optional[SPoly] = None


def stafford_verdict(
    inst: StaffordInstance, w: Optional[BezoutWitness]
) -> StaffordVerdict:
    """Both non-freeness conditions plus the witness structure.

    condition_i needs the explicit unit combination; with no witness it is
    reported false.  witnesses_ok demands: both constructed elements pass
    the membership oracle, the degree-1 element spans exactly one y-degree
    with a non-unit top coefficient, the monic element has a unit top
    coefficient, and no monic degree-1 element exists at all.
    """
    condition_i = bool(w is not None and verify_bezout(w, inst))
    condition_ii = no_monic_degree_one(inst)
    degree_one = monic = None
    witnesses_ok = False
    try:
        degree_one, monic = witnesses(inst)
    except ValueError:
        witnesses_ok = False
    else:
        witnesses_ok = (
            in_V(degree_one, inst)
            and degree_one.span() == 1
            and not degree_one.row(degree_one.max_degree).is_unit()
            and in_V(monic, inst)
            and monic.row(monic.max_degree).is_unit()
            and condition_ii
        )
    return StaffordVerdict(condition_i, condition_ii, witnesses_ok, degree_one, monic)


_FLAG_DESCRIPTIONS = (
    ("chi_ok", "Euler characteristics: chi(Q) = 2 - 2 + 1 = 1 and chi(P) = 1 - 2 + 1 = 0"),
    ("pi1_ok", "presentation equivalence: every relator certified over the other presentation"),
    ("factorization_ok", "boundary rows: d2'(D1) = d2(D)*(y - x^-1) and d2'(D2) = d2(D)*(x^3 - x - 1)"),
    ("bezout_ok", "unit combination: (x^3-x-1)*alpha + (y - x^-1)*beta = 1"),
    ("splitting_ok", "explicit splitting: psi.t = id, pi^2 = pi, psi.pi = 0"),
    ("condition_i", "r*S + (y+s)*S = S, witnessed by the unit combination"),
    ("condition_ii", "s*sigma(r) is not divisible by r in Z[x, x^-1]"),
    ("witnesses_ok", "V holds a span-1 element with non-unit top coefficient and a monic element"),
)


@dataclass(frozen=True)
class NonFreenessReport:
    """Flag per checked identity; all_ok is their conjunction."""

    chi_ok: bool
    pi1_ok: bool
    factorization_ok: bool
    bezout_ok: bool
    splitting_ok: bool
    condition_i: bool
    condition_ii: bool
    witnesses_ok: bool
    inputs: Dict[str, object] = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return (
            self.chi_ok
            and self.pi1_ok
            and self.factorization_ok
            and self.bezout_ok
            and self.splitting_ok
            and self.condition_i
            and self.condition_ii
            and self.witnesses_ok
        )

    def flags(self) -> List[Tuple[str, bool]]:
        return [(name, getattr(self, name)) for name, _ in _FLAG_DESCRIPTIONS]

    def to_json_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {name: getattr(self, name) for name, _ in _FLAG_DESCRIPTIONS}
        out["all_ok"] = self.all_ok
        out["inputs"] = self.inputs
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self) -> str:
        lines = []
        for name, desc in _FLAG_DESCRIPTIONS:
            mark = "ok  " if getattr(self, name) else "FAIL"
            lines.append(f"[{mark}] {name:<16} {desc}")
        verdict = (
            "VERIFIED: the second homotopy module is stably free and not free,"
            " on a complex with chi = 1 and Klein bottle fundamental group"
            if self.all_ok
            else "NOT VERIFIED: at least one check failed"
        )
        lines.append(verdict)
        return "\n".join(lines)


def default_witness() -> BezoutWitness:
    return BezoutWitness(builtin.bezout_alpha(), builtin.bezout_beta())


def full_report(
    *,
    presentation_p: Optional[Presentation] = None,
    presentation_q: Optional[Presentation] = None,
    forward_certs: Optional[Sequence[ConjugacyCertificate]] = None,
    reverse_certs: Optional[Sequence[ConjugacyCertificate]] = None,
    instance: Optional[StaffordInstance] = None,
    witness: Optional[BezoutWitness] = None,
) -> NonFreenessReport:
    """Run every check against the built-ins, or against supplied overrides.

    Component failures (including raised errors from corrupted inputs) are
    recorded as false flags, never re-raised.
    """
    p = presentation_p if presentation_p is not None else builtin.presentation_p()
    q = presentation_q if presentation_q is not None else builtin.presentation_q()
    fwd = list(forward_certs) if forward_certs is not None else list(builtin.forward_certificates())
    rev = list(reverse_certs) if reverse_certs is not None else list(builtin.reverse_certificates())
    inst = instance if instance is not None else builtin.stafford_instance()
    w = witness if witness is not None else default_witness()

    def attempt(thunk) -> bool:
        try:
            return bool(thunk())
        except (ValueError, IndexError, KeyError):
            return False

    chi_ok = attempt(lambda: euler_characteristic(q) == 1 and euler_characteristic(p) == 0)
    pi1_ok = attempt(lambda: equivalence_verdict(p, q, fwd, rev))
    factorization_ok = attempt(
        lambda: verify_factorization(build_chain_data(p, q))
    )
    bezout_ok = attempt(lambda: verify_bezout(w, inst))
    splitting_ok = attempt(lambda: splitting_check(w, inst))
    fragment = stafford_verdict(inst, w)

    inputs: Dict[str, object] = {
        "presentation_P": p.to_dict(),
        "presentation_Q": q.to_dict(),
        "certificates_Q_over_P": [str(c.target) for c in fwd],
        "certificates_P_over_Q": [str(c.target) for c in rev],
        "r": str(inst.r),
        "s": str(inst.s),
        "alpha": str(w.alpha),
        "beta": str(w.beta),
        "degree_one_witness": str(fragment.degree_one) if fragment.degree_one else None,
        "monic_witness": str(fragment.monic) if fragment.monic else None,
    }
    return NonFreenessReport(
        chi_ok=chi_ok,
        pi1_ok=pi1_ok,
        factorization_ok=factorization_ok,
        bezout_ok=bezout_ok,
        splitting_ok=splitting_ok,
        condition_i=fragment.condition_i,
        condition_ii=fragment.condition_ii,
        witnesses_ok=fragment.witnesses_ok,
        inputs=inputs,
    )
