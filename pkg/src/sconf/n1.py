"""Restriction of the simple quotients to the N=1 algebras.

A simple quotient kills the center, so pushing generators through the
embeddings makes it a module over the centerless N=1 Ramond algebra (via the
direct embedding) and over the N=1 Neveu-Schwarz algebra (via the
mode-doubling embedding composed with it; the doubled modes are why ``lam``
effectively appears squared there).

Over the N=1 Ramond algebra the restriction is free of rank 1 over the
commuting pair (L_0, G_0): iterating L_0 on the even generator walks the even
monomials, and one application of G_0 reaches the odd part with the fixed
coefficient alp/sqrt2.  Simplicity of the restriction holds exactly for a
nonzero root parameter; at a = 0 the even span of x together with the whole
odd part closes under the restricted action and witnesses non-simplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebras import (
    AlgebraElement,
    BasisSymbol,
    GeneratorMap,
    apply_map,
    basis_symbols,
    bracket,
    compose,
    embed_ns1_in_r1,
    embed_r1_in_r2,
)
from .errors import AlgebraMismatch
from .freemod import EVEN, ODD
from .linalg import RowSpan
from .quotients import QuotientElement, QuotientParams, quotient_act
from .reports import VerificationReport
from .scalars import INV_SQRT2, QuadExt, Scalar, as_quadext


@dataclass(frozen=True)
class RestrictedAction:
    """A quotient module seen through an N=1 embedding."""

    source: str
    embedding: GeneratorMap
    params: QuotientParams

    def __post_init__(self):
        if self.source not in ("N1R", "N1NS"):
            raise AlgebraMismatch(f"restriction source must be N1R or N1NS, got {self.source}")
        if self.embedding.source != self.source or self.embedding.target != "R":
            raise AlgebraMismatch("embedding must map the source algebra into R")
        if not self.embedding.mod_center:
            raise AlgebraMismatch("the embedding must be taken modulo the center")

    @classmethod
    def ramond(cls, params):
        return cls("N1R", embed_r1_in_r2(), params)

    @classmethod
    def neveu_schwarz(cls, params):
        return cls("N1NS", compose(embed_r1_in_r2(), embed_ns1_in_r1()), params)


def restricted_act(x, v, r):
    """Push an N=1 element through the embedding and act on the quotient."""
    if isinstance(x, BasisSymbol):
        x = AlgebraElement.basis(x)
    if x.algebra != r.source:
        raise AlgebraMismatch(f"expected a {r.source} element, got {x.algebra}")
    return quotient_act(apply_map(r.embedding, x), v, r.params)


def check_n1_relations(r, index_window, degree_bound):
    """Bracket compatibility of the restricted action on the N=1 generators."""
    report = VerificationReport(
        "n1-relations",
        {
            "source": r.source,
            "params": r.params.describe(),
            "window": index_window,
            "degree": degree_bound,
        },
    )
    syms = basis_symbols(r.source, index_window)
    elems = {s: AlgebraElement.basis(s) for s in syms}
    vs = [
        QuotientElement.monomial(parity, k)
        for parity in (EVEN, ODD)
        for k in range(degree_bound + 1)
    ]
    acted = {s: [restricted_act(elems[s], v, r) for v in vs] for s in syms}
    for xs, ys in product(syms, repeat=2):
        br = bracket(elems[xs], elems[ys])
        odd_pair = bool(xs.parity and ys.parity)
        for k, v in enumerate(vs):
            lhs = restricted_act(br, v, r)
            xy = restricted_act(elems[xs], acted[ys][k], r)
            yx = restricted_act(elems[ys], acted[xs][k], r)
            rhs = xy + yx if odd_pair else xy - yx
            if lhs != rhs:
                report.record(
                    f"n1 {r.source} {r.params.describe()} ({xs}, {ys}) on {v}",
                    lhs.render(),
                    rhs.render(),
                )
    return report


def check_rank1_freeness(r, degree_bound):
    """The pair (L_0, G_0) generates the restriction freely from 1_even.

    L_0^k . 1_even must equal x^k and L_0^k G_0 . 1_even must equal
    (alp/sqrt2) s^k, so the iterated images enumerate a basis of the
    truncation bijectively.
    """
    if r.source != "N1R":
        raise AlgebraMismatch("rank-1 freeness is a statement about the N1R restriction")
    report = VerificationReport(
        "rank1-freeness", {"params": r.params.describe(), "degree": degree_bound}
    )
    L0 = BasisSymbol("N1R", "L", 0)
    G0 = BasisSymbol("N1R", "G", 0)
    odd_coeff = r.params.alp * Scalar.number(INV_SQRT2)
    even_word = QuotientElement.one(EVEN)
    odd_word = restricted_act(G0, QuotientElement.one(EVEN), r)
    for k in range(degree_bound + 1):
        expect_even = QuotientElement.monomial(EVEN, k)
        if even_word != expect_even:
            report.record(f"L0^{k} . 1_even", even_word.render(), expect_even.render())
        expect_odd = QuotientElement.monomial(ODD, k, odd_coeff)
        if odd_word != expect_odd:
            report.record(f"L0^{k} G0 . 1_even", odd_word.render(), expect_odd.render())
        even_word = restricted_act(L0, even_word, r)
        odd_word = restricted_act(L0, odd_word, r)
    return report


def _as_vector(v, max_degree):
    """Coordinates of a numeric quotient element in the truncated basis
    (even monomials first, then odd)."""
    dim = max_degree + 1
    out = [None] * (2 * dim)
    for k in range(2 * dim):
        out[k] = QuadExt(0)
    for k, c in v.terms.items():
        if k > max_degree:
            raise ValueError(f"degree {k} exceeds the truncation bound {max_degree}")
        out[k + (dim if v.parity == ODD else 0)] = c.constant()
    return out


def check_simplicity_witness(a_value, lam0, alp0, degree_bound, word_length,
                             index_window=3, starts=None):
    """Bounded simplicity certificate for the N=1 Ramond restriction.

    Everything is specialized to numbers (lam0, alp0 nonzero) so spans are
    exact linear algebra over Q(sqrt2).

    * a != 0: generator words of length <= word_length (modes |m| <=
      index_window) are applied to the starting monomials (by default every
      monomial of degree <= degree_bound in either parity); the pooled span
      of all word images must contain every monomial up to degree_bound in
      both parities.  Falling short is reported as inconclusive, never as
      failure -- the bounds may simply be too small.  Per-start coverage goes
      to the notes: a single application never lowers the degree, so low
      starts cannot reach the top odd monomials on their own within short
      words.
    * a == 0: the span of x C[x] + C[s] must be closed under all generators
      in the window, certifying a proper nonzero invariant subspace.
    """
    a_value = as_quadext(a_value)
    lam0 = as_quadext(lam0)
    alp0 = as_quadext(alp0)
    if lam0.is_zero() or alp0.is_zero():
        raise ValueError("lam0 and alp0 must be nonzero")
    params = QuotientParams(a=a_value, lam=Scalar.number(lam0), alp=Scalar.number(alp0))
    r = RestrictedAction.ramond(params)
    report = VerificationReport(
        "simplicity-witness",
        {
            "a": str(a_value),
            "lam0": str(lam0),
            "alp0": str(alp0),
            "degree": degree_bound,
            "words": word_length,
            "window": index_window,
        },
    )
    gens = [
        BasisSymbol("N1R", fam, 2 * m)
        for fam in ("L", "G")
        for m in range(-index_window, index_window + 1)
    ]

    if a_value.is_zero():
        # closure certificate for the proper subspace x C[x] + C[s]
        spanning = [QuotientElement.monomial(EVEN, k + 1) for k in range(degree_bound + 1)]
        spanning += [QuotientElement.monomial(ODD, k) for k in range(degree_bound + 1)]
        for sym in gens:
            for v in spanning:
                out = restricted_act(sym, v, r)
                if out.parity == EVEN and 0 in out.terms:
                    report.record(
                        f"a=0 closure {sym} on {v}", out.render(), "member of xC[x]+C[s]"
                    )
        report.notes.append(
            "a=0: the subspace x*C[x] + C[s] is closed and omits 1_even, "
            "so the restriction is not simple"
        )
        return report

    # words can raise the degree by one per letter
    max_degree = degree_bound + word_length
    dim = 2 * (max_degree + 1)
    target_monos = [
        QuotientElement.monomial(parity, k)
        for parity in (EVEN, ODD)
        for k in range(degree_bound + 1)
    ]
    targets = [_as_vector(t, max_degree) for t in target_monos]
    if starts is None:
        starts = [
            QuotientElement.monomial(parity, k)
            for parity in (EVEN, ODD)
            for k in range(degree_bound + 1)
        ]
    pooled = RowSpan(dim)
    for start in starts:
        # per-start orbit span (pruning against it is sound: a vector inside
        # the span of already-expanded vectors contributes nothing new, by
        # linearity of the action)
        span = RowSpan(dim)
        span.add(_as_vector(start, max_degree))
        frontier = [start]
        for _ in range(word_length):
            new_frontier = []
            for v in frontier:
                for sym in gens:
                    w = restricted_act(sym, v, r)
                    if w.is_zero():
                        continue
                    if span.add(_as_vector(w, max_degree)):
                        new_frontier.append(w)
            frontier = new_frontier
            if not frontier:
                break
        missed = sum(1 for t in targets if not span.contains(t))
        tag = "even" if start.parity == EVEN else "odd"
        if missed:
            report.notes.append(
                f"start {start} ({tag}): span misses {missed} of {len(targets)} monomials"
            )
        else:
            report.notes.append(f"start {start} ({tag}): full span reached")
        for _, row in span.rows:
            pooled.add(row)
    missing = [m for m, t in zip(target_monos, targets) if not pooled.contains(t)]
    if missing:
        report.inconclusive = True
        report.notes.append(
            "pooled span misses "
            + ", ".join(str(m) for m in missing)
            + f" (bounds degree={degree_bound}, words={word_length} too small to conclude)"
        )
    return report
