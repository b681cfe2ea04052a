"""Product-of-conjugates certificates.

A certificate asserts that its target word equals an explicit product
prod_i  w_i * R_{j_i}^{e_i} * w_i^-1  of conjugated relators of a source
presentation, hence lies in the relators' normal closure.  Checking is
pure free-group reduction.  Certificates compose: concatenation multiplies
targets, inversion reverses and flips signs, conjugation left-multiplies
every conjugator.

Each factor also has a chain-level shadow: once the relators bound disks,
the factor (w, j, e) moves disk j by the group image of w^-1 with sign e,
which is where the boundary factorization identities come from.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .klein import SPoly, eval_word
from .presentations import Presentation
from .words import Word, conjugate, parse_word


@dataclass(frozen=True)
class CertFactor:
    conjugator: Word
    relator: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("factor sign must be +1 or -1")


@dataclass(frozen=True)
class ConjugacyCertificate:
    target: Word
    factors: Tuple[CertFactor, ...]
    source: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))


def expand_certificate(src: Presentation, cert: ConjugacyCertificate) -> Word:
    """The freely reduced product the certificate claims equals its target."""
    acc = Word()
    for f in cert.factors:
        if not 0 <= f.relator < len(src.relators):
            raise IndexError(f"relator index {f.relator} out of range")
        rel = src.relators[f.relator]
        piece = rel if f.sign == 1 else ~rel
        acc = acc * conjugate(piece, f.conjugator)
    return acc


def check_certificate(src: Presentation, cert: ConjugacyCertificate) -> bool:
    return expand_certificate(src, cert) == cert.target


def boundary_factor(
    src: Presentation, cert: ConjugacyCertificate, per_relator: bool = True
):
    """Chain-level factor carried by each source relator.

    For a valid certificate, relator j picks up
    sum over its factors of  sign * (group image of conjugator^-1),
    as an element of the group ring.  With per_relator False the
    unaggregated (relator, contribution) list is returned instead.
    """
    if not check_certificate(src, cert):
        raise ValueError("invalid certificate: product does not reduce to target")
    contributions = [
        (f.relator, SPoly.from_group(eval_word(~f.conjugator), f.sign))
        for f in cert.factors
    ]
    if not per_relator:
        return contributions
    out: Dict[int, SPoly] = {}
    for j, term in contributions:
        out[j] = out.get(j, SPoly.zero()) + term
    return out


def _merge_sources(a: Optional[str], b: Optional[str]) -> Optional[str]:
    if a is not None and b is not None and a != b:
        raise ValueError(f"incompatible certificate sources {a!r} and {b!r}")
    return a if a is not None else b


def cert_concat(*certs: ConjugacyCertificate) -> ConjugacyCertificate:
    """Certificate for the product of the targets."""
    target = Word()
    factors: List[CertFactor] = []
    source: Optional[str] = None
    for c in certs:
        target = target * c.target
        factors.extend(c.factors)
        source = _merge_sources(source, c.source)
    return ConjugacyCertificate(target, tuple(factors), source)


def cert_invert(c: ConjugacyCertificate) -> ConjugacyCertificate:
    """Certificate for the inverse target: reversed factors, flipped signs."""
    factors = tuple(
        CertFactor(f.conjugator, f.relator, -f.sign) for f in reversed(c.factors)
    )
    return ConjugacyCertificate(~c.target, factors, c.source)


def cert_conjugate(c: ConjugacyCertificate, u: Word) -> ConjugacyCertificate:
    """Certificate for u * target * u^-1."""
    factors = tuple(
        CertFactor(u * f.conjugator, f.relator, f.sign) for f in c.factors
    )
    return ConjugacyCertificate(conjugate(c.target, u), factors, c.source)


def equivalence_verdict(
    p: Presentation,
    q: Presentation,
    certs_q_over_p: Iterable[ConjugacyCertificate],
    certs_p_over_q: Iterable[ConjugacyCertificate],
) -> bool:
    """True iff each presentation's relators are certified consequences
    of the other's, over the shared generator list."""
    if p.generators != q.generators:
        raise ValueError("generator mismatch between presentations")

    def covered(relators, src, certs) -> bool:
        certs = list(certs)
        for rel in relators:
            ok = False
            for c in certs:
                if c.target != rel:
                    continue
                try:
                    if check_certificate(src, c):
                        ok = True
                        break
                except IndexError:
                    continue
            if not ok:
                return False
        return True

    return covered(q.relators, p, certs_q_over_p) and covered(
        p.relators, q, certs_p_over_q
    )


def certificate_to_dict(cert: ConjugacyCertificate) -> Dict:
    data: Dict = {
        "target": str(cert.target),
        "factors": [
            {"w": str(f.conjugator), "rel": f.relator, "sign": f.sign}
            for f in cert.factors
        ],
    }
    if cert.source is not None:
        data["source"] = cert.source
    return data


def certificate_from_dict(data: Mapping) -> ConjugacyCertificate:
    if "target" not in data or "factors" not in data:
        raise ValueError("certificate JSON needs 'target' and 'factors'")
    factors = tuple(
        CertFactor(parse_word(f["w"]), int(f["rel"]), int(f["sign"]))
        for f in data["factors"]
    )
    return ConjugacyCertificate(
        parse_word(data["target"]), factors, data.get("source")
    )


def load_certificate(path) -> ConjugacyCertificate:
    with open(path, "r", encoding="utf-8") as fh:
        return certificate_from_dict(json.load(fh))
