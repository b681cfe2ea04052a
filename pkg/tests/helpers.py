"""Shared test machinery: seeded random generators, independent oracles,
and the reusable property checks behind the randomized suites.

The oracles deliberately avoid the code paths they judge:
normal_form_oracle sorts single letters with the rewriting rules instead
of using the closed-form group law, and spoly_mul_oracle multiplies group
ring elements term by term through the group law instead of the twisted
row convolution.
"""

from __future__ import annotations

import random
from typing import List, Tuple

from kleinverify import (
    CertFactor,
    ConjugacyCertificate,
    FreeCombo,
    GroupElem,
    Presentation,
    RPoly,
    SPoly,
    Word,
    boundary_matrices,
    cert_concat,
    cert_conjugate,
    cert_invert,
    conjugate,
    divide,
    eval_combo,
    eval_word,
    expand_certificate,
    fox_derivative,
    group_mul,
    in_V,
    witnesses,
    y_plus_s,
)
from kleinverify import builtin

SEED = 20230717


# ---------------------------------------------------------------- generators

def rand_word(rng: random.Random, gens=("x", "y"), max_runs=6, max_exp=3) -> Word:
    n = rng.randint(0, max_runs)
    exps = [e for e in range(-max_exp, max_exp + 1) if e != 0]
    return Word([(rng.choice(gens), rng.choice(exps)) for _ in range(n)])


def rand_rpoly(
    rng: random.Random, nonzero=False, max_terms=4, exp_range=(-4, 4), coeff_range=(-5, 5)
) -> RPoly:
    n = rng.randint(1 if nonzero else 0, max_terms)
    coeffs = {}
    for _ in range(n):
        e = rng.randint(*exp_range)
        c = rng.randint(*coeff_range)
        coeffs[e] = coeffs.get(e, 0) + c
    p = RPoly(coeffs)
    if nonzero and p.is_zero():
        return RPoly.monomial(rng.randint(*exp_range))
    return p


def rand_spoly(rng: random.Random, nonzero=False, max_rows=3, deg_range=(-3, 3)) -> SPoly:
    n = rng.randint(1 if nonzero else 0, max_rows)
    rows = {}
    for _ in range(n):
        rows[rng.randint(*deg_range)] = rand_rpoly(rng, nonzero=True, max_terms=3)
    f = SPoly(rows)
    if nonzero and f.is_zero():
        return SPoly.one()
    return f


def rand_consequence_presentation(rng: random.Random, max_relators=3) -> Presentation:
    """Random presentation whose relators all die in the Klein bottle group:
    products of conjugates of the one-relator presentation's relator."""
    base = builtin.presentation_p().relators[0]
    relators = []
    for _ in range(rng.randint(1, max_relators)):
        w = Word()
        for _ in range(rng.randint(1, 3)):
            u = rand_word(rng, max_runs=3, max_exp=2)
            piece = base if rng.random() < 0.5 else ~base
            w = w * conjugate(piece, u)
        relators.append(w)
    return Presentation(("x", "y"), tuple(relators))


def rand_valid_certificate(rng: random.Random, src: Presentation) -> ConjugacyCertificate:
    factors = tuple(
        CertFactor(
            rand_word(rng, max_runs=3, max_exp=2),
            rng.randrange(len(src.relators)),
            rng.choice((1, -1)),
        )
        for _ in range(rng.randint(0, 4))
    )
    cert = ConjugacyCertificate(Word(), factors)
    return ConjugacyCertificate(expand_certificate(src, cert), factors)


# ------------------------------------------------------------------- oracles

def normal_form_oracle(w: Word) -> Tuple[int, int]:
    """Normal form (m, n) by letter-level rewriting: push every y left
    with x y -> y x^-1 and its three sign variants, then add exponents."""
    seq: List[Tuple[str, int]] = []
    for name, exp in w.letters:
        step = 1 if exp > 0 else -1
        seq.extend((name, step) for _ in range(abs(exp)))
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            (n1, e1), (n2, e2) = seq[i], seq[i + 1]
            if n1 == "x" and n2 == "y":
                seq[i], seq[i + 1] = (n2, e2), (n1, -e1)
                changed = True
    return (
        sum(e for name, e in seq if name == "y"),
        sum(e for name, e in seq if name == "x"),
    )


def spoly_terms(f: SPoly) -> List[Tuple[int, GroupElem]]:
    return [(c, GroupElem(m, e)) for m, a in f.rows() for e, c in a.items()]


def spoly_from_terms(terms) -> SPoly:
    acc = SPoly.zero()
    for c, g in terms:
        acc = acc + SPoly.from_group(g, c)
    return acc


def spoly_mul_oracle(f: SPoly, g: SPoly) -> SPoly:
    """Group-algebra product: expand both operands into group elements,
    multiply pairwise with the group law, recollect."""
    out = []
    for c1, g1 in spoly_terms(f):
        for c2, g2 in spoly_terms(g):
            out.append((c1 * c2, group_mul(g1, g2)))
    return spoly_from_terms(out)


# ----------------------------------------------------------- property suites

def check_free_group_axioms(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    e = Word()
    for _ in range(cases):
        u, v, w = (rand_word(rng) for _ in range(3))
        assert (u * v) * w == u * (v * w)
        assert u * e == u and e * u == u
        assert u * ~u == e and ~u * u == e


def check_reduction_canonical(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    for _ in range(cases):
        w = rand_word(rng)
        letters = [
            (name, 1 if exp > 0 else -1)
            for name, exp in w.letters
            for _ in range(abs(exp))
        ]
        for _ in range(rng.randint(1, 5)):
            pos = rng.randint(0, len(letters))
            g = rng.choice(("x", "y"))
            ex = rng.choice((1, -1))
            letters[pos:pos] = [(g, ex), (g, -ex)]
        assert Word(letters) == w


def check_rpoly_ring_axioms(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    zero, one = RPoly.zero(), RPoly.one()
    for _ in range(cases):
        a, b, c = (rand_rpoly(rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a + zero == a and a - a == zero
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == a


def check_spoly_ring_axioms(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    zero, one = SPoly.zero(), SPoly.one()
    for _ in range(cases):
        f, g, h = (rand_spoly(rng) for _ in range(3))
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f + zero == f and f - f == zero
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h
        assert f * one == f and one * f == f
        assert f * g == spoly_mul_oracle(f, g)


def check_sigma_involution(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    for _ in range(cases):
        a, b = rand_rpoly(rng), rand_rpoly(rng)
        assert a.sigma().sigma() == a
        assert (a + b).sigma() == a.sigma() + b.sigma()
        assert (a * b).sigma() == a.sigma() * b.sigma()


def check_domain_property(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    for _ in range(cases):
        a = rand_rpoly(rng, nonzero=True)
        b = rand_rpoly(rng, nonzero=True)
        assert not (a * b).is_zero()
        assert (a * b).length() == a.length() + b.length()
    for _ in range(cases // 2):
        f = rand_spoly(rng, nonzero=True)
        g = rand_spoly(rng, nonzero=True)
        assert not (f * g).is_zero()


def check_division_recomposition(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    s = builtin.stafford_instance().s
    for i in range(cases):
        f = rand_spoly(rng)
        twist = s if i % 4 else rand_rpoly(rng, nonzero=True, max_terms=2)
        res = divide(f, twist)
        recomposed = y_plus_s(twist) * res.quotient + SPoly(
            {res.rem_degree: res.remainder}
        )
        assert recomposed == f
        if not f.is_zero():
            assert res.rem_degree == f.min_degree


def check_single_degree_span(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    s = builtin.stafford_instance().s
    for _ in range(cases):
        q = rand_spoly(rng, nonzero=True)
        assert (y_plus_s(s) * q).span() >= 1


def check_v_right_module(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    inst = builtin.stafford_instance()
    w1, w2 = witnesses(inst)
    for _ in range(cases):
        v = w1 * rand_spoly(rng, max_rows=2) + w2 * rand_spoly(rng, max_rows=2)
        assert in_V(v, inst)
        assert in_V(v * rand_spoly(rng, max_rows=2), inst)


def check_fox_fundamental(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    e = Word()
    for _ in range(cases):
        w = rand_word(rng)
        total = FreeCombo.zero()
        for g in ("x", "y"):
            d = fox_derivative(w, g)
            total = total + d.rmul(Word(((g, 1),))) - d
        assert total == FreeCombo.term(w) - FreeCombo.term(e)


def check_fox_product_rule(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    for _ in range(cases):
        u, v = rand_word(rng), rand_word(rng)
        for g in ("x", "y"):
            assert fox_derivative(u * v, g) == fox_derivative(u, g) + fox_derivative(
                v, g
            ).lmul(u)


def check_chain_composite_zero(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    for _ in range(cases):
        p = rand_consequence_presentation(rng)
        d2, d1 = boundary_matrices(p, eval_combo)
        for row in d2:
            total = SPoly.zero()
            for edge, entry in zip(d1, row):
                total = total + edge * entry
            assert total == SPoly.zero()


def check_eval_homomorphism(cases: int, seed: int = SEED) -> None:
    rng = random.Random(seed)
    for _ in range(cases):
        u, v = rand_word(rng), rand_word(rng)
        assert eval_word(u * v) == group_mul(eval_word(u), eval_word(v))
        got = eval_word(u)
        assert (got.m, got.n) == normal_form_oracle(u)


# ------------------------------------------------- reverse certificate replay

class Eq:
    """Certified equality u ~ v: a certificate whose target is u * v^-1.

    sym is certificate inversion, trans is concatenation, and around(p, q)
    is the congruence u ~ v => p u q ~ p v q, whose witness only needs
    conjugation by p (right factors cancel freely in the target).
    """

    def __init__(self, u: Word, v: Word, cert: ConjugacyCertificate):
        assert cert.target == u * ~v, (str(u), str(v), str(cert.target))
        self.u, self.v, self.cert = u, v, cert

    def sym(self) -> "Eq":
        return Eq(self.v, self.u, cert_invert(self.cert))

    def trans(self, other: "Eq") -> "Eq":
        assert self.v == other.u, (str(self.v), str(other.u))
        return Eq(self.u, other.v, cert_concat(self.cert, other.cert))

    def around(self, p: Word, q: Word) -> "Eq":
        return Eq(p * self.u * q, p * self.v * q, cert_conjugate(self.cert, p))

    def retarget(self, u: Word, v: Word) -> "Eq":
        """Reread the same witness word as a different equality."""
        return Eq(u, v, self.cert)


def build_reverse_certificate() -> ConjugacyCertificate:
    """Replay, in certificate algebra, the derivation that the one-relator
    presentation's relator follows from the two-relator presentation.

    With a = y^-1 x y and b = x the two relators say (after conjugation)
    a b^2 = b^3 a^2 and b a^2 = a^3 b^2; left-multiplying the first by a^2
    and cancelling yields a^2 b^2 = 1 and finally a b = 1, which is the
    target relator."""
    from kleinverify import parse_word

    q = builtin.presentation_q()
    a = parse_word("y^-1 x y")
    b = parse_word("x")
    y = parse_word("y")
    e = Word()

    trivial = [
        ConjugacyCertificate(rel, (CertFactor(e, i, 1),), "Q")
        for i, rel in enumerate(q.relators)
    ]
    # y^-1 a y ~ b: the witness word is the first relator itself.
    conj_rule = Eq(~y * a * y, b, trivial[0])
    # a b^2 ~ b^3 a^2: the second relator conjugated by b^3.
    swap_rule = Eq(a * b * b, b**3 * a * a, cert_conjugate(trivial[1], b**3))

    swapped = swap_rule.around(~y, y)                 # y^-1 a b^2 y ~ y^-1 b^3 a^2 y
    lhs = conj_rule.around(e, a * a)                  # (y^-1 a y) a^2 ~ b a^2
    rhs = conj_rule.around(a**3, ~y * a * y).trans(   # a^3 (y^-1 a y)^2 ~ a^3 b^2
        conj_rule.around(a**3 * b, e)
    )
    mirrored = lhs.sym().trans(swapped).trans(rhs)    # b a^2 ~ a^3 b^2
    shifted = swap_rule.around(a * a, e)              # a^3 b^2 ~ a^2 b^3 a^2
    collapse = (
        mirrored.trans(shifted).sym().retarget(a * a * b * b, e)
    )                                                 # a^2 b^2 ~ 1
    reduced = mirrored.trans(collapse.around(a, e))   # b a^2 ~ a
    final = reduced.retarget(b * a, e).around(a, ~a)  # a b ~ 1

    assert final.u == builtin.presentation_p().relators[0]
    return ConjugacyCertificate(final.cert.target, final.cert.factors, "Q")
