"""Simple quotients of the rank-2 module, their isomorphisms, and
composition series.

Factoring the rank-2 module by the maximal M-kind submodule with h = y + a
collapses the second variable: the quotient lives on C[x] (even) + C[s]
(odd), with y frozen at -a and t at -a-1.  The generator action becomes

    L_m . f(x) = lam^m (x - m a / 2) f(x+m)
    L_m . g(s) = lam^m (s - m a / 2 + m/2) g(s+m)
    H_m . f(x) = -a     lam^m f(x+m)
    H_m . g(s) = -(a+1) lam^m g(s+m)
    Gp_m . f   = 0
    Gp_m . g(s) = lam^m (2/alp) (x - m a) g(x+m)
    Gm_m . f(x) = lam^m alp f(s+m)
    Gm_m . g    = 0
    C  -> 0

The root parameter a is usually a concrete Q(sqrt2) number (projection and
kernel questions need to divide by y + a); passing ``a=None`` keeps it as the
formal Scalar parameter ``a``, which is enough for acting and for bracket
sweeps.  ``lam``/``alp`` default to the formal parameters but may be replaced
by any invertible monomial, e.g. concrete nonzero numbers for specializations
or ``mu``/``bet`` for a second family of modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .algebras import AlgebraElement, BasisSymbol, basis_symbols, bracket
from .errors import AlgebraMismatch, MixedParity, NotAUnit, ParamMismatch, UnsplitPolynomial
from .freemod import EVEN, ODD, ModuleElement, act_basis, monomials
from .reports import VerificationReport
from .scalars import QE_ONE, QuadExt, Scalar, as_quadext, as_scalar
from .submodules import SubmoduleSpec, UniPoly, check_containment, contains

_VAR = {EVEN: "x", ODD: "s"}


class QuotientElement:
    """A parity-tagged univariate polynomial: f(x) when even, g(s) when odd."""

    __slots__ = ("parity", "terms")

    def __init__(self, parity, terms=None):
        if parity not in (EVEN, ODD):
            raise ValueError("parity must be 0 (even) or 1 (odd)")
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "terms", terms or {})

    def __setattr__(self, name, value):
        raise AttributeError("QuotientElement is immutable")

    @classmethod
    def monomial(cls, parity, k, coeff=1):
        coeff = as_scalar(coeff)
        if coeff.is_zero():
            return cls(parity)
        return cls(parity, {k: coeff})

    @classmethod
    def one(cls, parity):
        return cls.monomial(parity, 0)

    @classmethod
    def zero(cls, parity):
        return cls(parity)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max(self.terms, default=-1)

    def __add__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.parity != other.parity:
            raise MixedParity("cannot add quotient elements of different parity")
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return QuotientElement(self.parity, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QuotientElement(self.parity, {k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar):
        scalar = as_scalar(scalar)
        if scalar.is_zero():
            return QuotientElement(self.parity)
        return QuotientElement(self.parity, {k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def shifted(self, d):
        """Substitute the variable v -> v + d (integer shift)."""
        if not d:
            return self
        out = {}
        for k, c in self.terms.items():
            for l in range(k + 1):
                w = c * Fraction(comb(k, l) * d ** (k - l))
                if w.is_zero():
                    continue
                s = out.get(l)
                if s is None:
                    out[l] = w
                else:
                    s = s + w
                    if s.is_zero():
                        del out[l]
                    else:
                        out[l] = s
        return QuotientElement(self.parity, out)

    def times_linear(self, const, slope=Scalar.number(1)):
        """Multiply by the linear polynomial slope*v + const."""
        out = {}
        for k, c in self.terms.items():
            for kk, w in ((k + 1, c * slope), (k, c * const)):
                if w.is_zero():
                    continue
                s = out.get(kk)
                if s is None:
                    out[kk] = w
                else:
                    s = s + w
                    if s.is_zero():
                        del out[kk]
                    else:
                        out[kk] = s
        return QuotientElement(self.parity, out)

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.parity == other.parity and self.terms == other.terms

    __hash__ = None

    def render(self):
        if not self.terms:
            return "0"
        var = _VAR[self.parity]
        out = ""
        for k in sorted(self.terms, reverse=True):
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            pieces = self.terms[k].render_terms()
            if len(pieces) == 1:
                sign, body = pieces[0]
                if mono:
                    body = mono if body == "1" else f"{body}*{mono}"
            else:
                sign = 1
                body = f"({self.terms[k].render()})"
                if mono:
                    body = f"{body}*{mono}"
            if not out:
                out = ("-" if sign < 0 else "") + body
            else:
                out += (" - " if sign < 0 else " + ") + body
        return out

    __str__ = render

    def __repr__(self):
        return f"<QuotientElement {'even' if self.parity == EVEN else 'odd'} {self.render()}>"


@dataclass(frozen=True)
class QuotientParams:
    """Parameters of one simple quotient: the root a and the pair (lam, alp).

    ``a`` is a concrete Q(sqrt2) number, or None for the formal parameter.
    ``lam`` and ``alp`` must be invertible monomials (formal parameters,
    nonzero numbers, or products of those).
    """

    a: QuadExt | None = None
    lam: Scalar = field(default_factory=lambda: Scalar.param("lam"))
    alp: Scalar = field(default_factory=lambda: Scalar.param("alp"))

    def __post_init__(self):
        if self.a is not None:
            object.__setattr__(self, "a", as_quadext(self.a))
        lam = as_scalar(self.lam)
        alp = as_scalar(self.alp)
        for name, value in (("lam", lam), ("alp", alp)):
            try:
                value.invert_monomial()
            except NotAUnit as exc:
                raise ValueError(f"{name} must be an invertible monomial: {exc}") from exc
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "alp", alp)

    @property
    def a_scalar(self):
        if self.a is None:
            return Scalar.param("a")
        return Scalar.number(self.a)

    def concrete_a(self):
        if self.a is None:
            raise ValueError("this operation needs a concrete value for a")
        return self.a

    def lam_pow(self, m):
        return self.lam.int_pow(m)

    def describe(self):
        a = "a" if self.a is None else str(self.a)
        return f"(lam={self.lam}, alp={self.alp}, a={a})"


def quotient_act_basis(sym, v, p):
    """Action of one Ramond basis generator on a quotient element."""
    if sym.algebra != "R":
        raise AlgebraMismatch(f"simple quotients are R-modules; got {sym.algebra}")
    fam = sym.family
    if fam == "C":
        return QuotientElement.zero(v.parity)
    m = sym.twice // 2
    lam_m = p.lam_pow(m)
    a_s = p.a_scalar
    if fam == "L":
        const = a_s * Fraction(-m, 2)
        if v.parity == ODD:
            const = const + Scalar.number(Fraction(m, 2))
        return v.shifted(m).times_linear(const) * lam_m
    if fam == "H":
        c = -a_s if v.parity == EVEN else -(a_s + Scalar.number(1))
        return v.shifted(m) * (c * lam_m)
    if fam == "Gp":
        if v.parity == EVEN:
            return QuotientElement.zero(ODD)
        out = QuotientElement(EVEN, v.shifted(m).terms)
        coeff = lam_m * Scalar.number(2) * p.alp.invert_monomial()
        return out.times_linear(a_s * (-m)) * coeff
    if fam == "Gm":
        if v.parity == ODD:
            return QuotientElement.zero(EVEN)
        out = QuotientElement(ODD, v.shifted(m).terms)
        return out * (lam_m * p.alp)
    raise AlgebraMismatch(f"family {fam} does not act")


def quotient_act(x, v, p):
    """Action of a homogeneous R-element on a quotient element."""
    if isinstance(x, BasisSymbol):
        x = AlgebraElement.basis(x)
    if x.algebra != "R":
        raise AlgebraMismatch(f"simple quotients are R-modules; got {x.algebra}")
    out_parity = (v.parity + x.parity()) % 2
    acc = QuotientElement.zero(out_parity)
    for sym, coeff in x.terms.items():
        acc = acc + quotient_act_basis(sym, v, p) * coeff
    return acc


def project(v, p):
    """Canonical projection from the rank-2 module onto the quotient.

    Freezes the second variable: y -> -a on the even part, t -> -a-1 on the
    odd part.  The kernel is exactly the M-kind submodule of h = y + a.
    """
    a = p.concrete_a()
    sub = -a if v.parity == EVEN else -a - QE_ONE
    out = {}
    for (i, j), c in v.terms.items():
        w = c * sub ** j
        if w.is_zero():
            continue
        s = out.get(i)
        if s is None:
            out[i] = w
        else:
            s = s + w
            if s.is_zero():
                del out[i]
            else:
                out[i] = s
    return QuotientElement(v.parity, out)


def kernel_spec(p):
    """The submodule that the projection kills: M-kind with h = y + a."""
    return SubmoduleSpec("M", UniPoly((p.concrete_a(), QE_ONE)))


def iso_phi(v, src, dst):
    """The quotient-to-quotient isomorphism: identity on the even part,
    rescaling by dst.alp/src.alp on the odd part.

    Exists exactly when the lam data and the root data agree; everything else
    raises ParamMismatch.
    """
    if src.lam != dst.lam:
        raise ParamMismatch(f"lam differs: {src.describe()} vs {dst.describe()}")
    if (src.a is None) != (dst.a is None) or src.a != dst.a:
        raise ParamMismatch(f"root parameter differs: {src.describe()} vs {dst.describe()}")
    if v.parity == EVEN:
        return QuotientElement(EVEN, dict(v.terms))
    ratio = dst.alp * src.alp.invert_monomial()
    return v * ratio


def iso_xi(v, h_tilde, p):
    """Embed a quotient element as a representative of the layer M_h~ / M_h
    with h = (y + a) h~: multiply by h~(y) (even) or h~(t+1) (odd)."""
    lift = h_tilde if v.parity == EVEN else h_tilde.shifted(1)
    out = {}
    for k, c in v.terms.items():
        for j, hc in enumerate(lift.coeffs):
            if hc.is_zero():
                continue
            w = c * hc
            key = (k, j)
            s = out.get(key)
            if s is None:
                out[key] = w
            else:
                s = s + w
                if s.is_zero():
                    del out[key]
                else:
                    out[key] = s
    return ModuleElement(v.parity, out)


# ---------------------------------------------------------------------------
# root finding and composition series
# ---------------------------------------------------------------------------

def _fraction_sqrt(f):
    """Exact square root of a nonnegative Fraction, or None."""
    if f < 0:
        return None
    n, d = f.numerator, f.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _rational_root(p):
    """One rational root of a monic UniPoly with rational coefficients."""
    if any(c.root2 for c in p.coeffs):
        return None
    rats = [c.rat for c in p.coeffs]
    if not rats[0]:
        return QuadExt(0)
    from math import lcm

    scale = lcm(*(c.denominator for c in rats))
    ints = [int(c * scale) for c in rats]
    c0, cn = abs(ints[0]), abs(ints[-1])
    num_divs = sorted({d for d in range(1, c0 + 1) if c0 % d == 0})
    den_divs = sorted({d for d in range(1, cn + 1) if cn % d == 0})
    candidates = sorted(
        {Fraction(n, d) for n in num_divs for d in den_divs},
    )
    for mag in candidates:
        for cand in (mag, -mag):
            if p(cand).is_zero():
                return QuadExt(cand)
    return None


def _quadratic_roots(p):
    """Roots of a monic rational quadratic if they lie in Q(sqrt2)."""
    if p.degree != 2 or any(c.root2 for c in p.coeffs):
        return None
    B, D = p.coeffs[1].rat, p.coeffs[0].rat
    disc = B * B - 4 * D
    r = _fraction_sqrt(disc)
    if r is not None:
        return [QuadExt((-B + r) / 2), QuadExt((-B - r) / 2)]
    r = _fraction_sqrt(disc / 2)
    if r is not None:  # sqrt(disc) = r*sqrt2
        return [
            QuadExt(Fraction(-B, 2), r / 2),
            QuadExt(Fraction(-B, 2), -r / 2),
        ]
    return None


def find_roots(h, root_hint=None):
    """All roots of a monic polynomial in Q(sqrt2), multiplicity included.

    Hints are consumed first (each one verified and deflated); the rest is
    covered by the rational-root search plus the quadratic conjugate-pair
    test.  Raises UnsplitPolynomial when the polynomial does not split.
    """
    work = h.monic()
    roots = []
    for cand in root_hint or ():
        cand = as_quadext(cand)
        if work.degree < 1 or not work(cand).is_zero():
            raise UnsplitPolynomial(
                f"hinted value {cand} is not a root of {work.render()}"
            )
        work, _ = work.divmod_monic(UniPoly((-cand, QE_ONE)))
        roots.append(cand)
    while work.degree > 0:
        if work.degree == 1:
            roots.append(-work.coeffs[0])
            break
        r = _rational_root(work)
        if r is not None:
            roots.append(r)
            work, _ = work.divmod_monic(UniPoly((-r, QE_ONE)))
            continue
        pair = _quadratic_roots(work) if work.degree == 2 else None
        if pair is not None:
            roots.extend(pair)
            break
        raise UnsplitPolynomial(
            f"cannot split {work.render()} over Q(sqrt2); supply root_hint"
        )
    return roots


@dataclass(frozen=True)
class CompositionSeries:
    """A maximal chain of M-kind submodules above M_h, with its factor list.

    ``chain[i]`` is the M-kind spec of (y - a_1)...(y - a_{i+1}); the factor
    below chain[i] is the simple quotient with root parameter ``factors[i]``
    = -a_{i+1}.
    """

    h: UniPoly
    chain: tuple
    factors: tuple

    def factor_multiset(self):
        out = {}
        for f in self.factors:
            out[f] = out.get(f, 0) + 1
        return out

    def render(self):
        lines = [f"series of quotient by M[h={self.h.render()}]:"]
        for k, spec in enumerate(self.chain):
            lines.append(f"  layer {k + 1}: {spec.render()}  factor a={self.factors[k]}")
        return "\n".join(lines)


def composition_series(h, root_hint=None):
    """Split h, build the chain of partial-product submodules, verify links."""
    h = h.monic()
    roots = find_roots(h, root_hint)
    chain = []
    acc = UniPoly.const(1)
    for r in roots:
        acc = acc * UniPoly((-r, QE_ONE))
        chain.append(SubmoduleSpec("M", acc))
    if chain and chain[-1].h != h:
        raise UnsplitPolynomial(
            f"roots {roots} do not multiply back to {h.render()}"
        )
    for inner, outer in zip(chain[1:], chain[:-1]):
        if not check_containment(inner, outer):
            raise AssertionError(
                f"chain link {inner} <= {outer} failed containment"
            )
    return CompositionSeries(h, tuple(chain), tuple(-r for r in roots))


# ---------------------------------------------------------------------------
# verification sweeps
# ---------------------------------------------------------------------------

def quotient_monomials(degree_bound, parities=(EVEN, ODD)):
    return [
        QuotientElement.monomial(parity, k)
        for parity in parities
        for k in range(degree_bound + 1)
    ]


def check_quotient_compatibility(p, index_window, degree_bound):
    """Bracket compatibility of the quotient action (same shape as the
    rank-2 module sweep)."""
    report = VerificationReport(
        "quotient-compatibility",
        {"params": p.describe(), "window": index_window, "degree": degree_bound},
    )
    syms = basis_symbols("R", index_window)
    elems = {s: AlgebraElement.basis(s) for s in syms}
    vs = quotient_monomials(degree_bound)
    acted = {s: [quotient_act_basis(s, v, p) for v in vs] for s in syms}
    for xs in syms:
        for ys in syms:
            br = bracket(elems[xs], elems[ys])
            odd_pair = bool(xs.parity and ys.parity)
            for k, v in enumerate(vs):
                lhs = quotient_act(br, v, p)
                xy = quotient_act(elems[xs], acted[ys][k], p)
                yx = quotient_act(elems[ys], acted[xs][k], p)
                rhs = xy + yx if odd_pair else xy - yx
                if lhs != rhs:
                    report.record(
                        f"quotient compat {p.describe()} ({xs}, {ys}) on {v}",
                        lhs.render(),
                        rhs.render(),
                    )
    return report


def check_projection_intertwines(p, index_window, degree_bound):
    """project(X . v) == X . project(v) for generators and monomials."""
    report = VerificationReport(
        "projection-intertwines",
        {"params": p.describe(), "window": index_window, "degree": degree_bound},
    )
    for sym in basis_symbols("R", index_window):
        for v in monomials(degree_bound):
            lhs = project(act_basis(sym, v), p)
            rhs = quotient_act_basis(sym, project(v, p), p)
            if lhs != rhs:
                report.record(
                    f"projection {p.describe()} {sym} on {v}", lhs.render(), rhs.render()
                )
    return report


def check_phi_intertwines(src, dst, index_window, degree_bound):
    """iso_phi commutes with every generator action in the window."""
    report = VerificationReport(
        "phi-intertwines",
        {
            "src": src.describe(),
            "dst": dst.describe(),
            "window": index_window,
            "degree": degree_bound,
        },
    )
    for sym in basis_symbols("R", index_window):
        for v in quotient_monomials(degree_bound):
            lhs = iso_phi(quotient_act_basis(sym, v, src), src, dst)
            rhs = quotient_act_basis(sym, iso_phi(v, src, dst), dst)
            if lhs != rhs:
                report.record(
                    f"phi {src.describe()}->{dst.describe()} {sym} on {v}",
                    lhs.render(),
                    rhs.render(),
                )
    return report


def check_xi_intertwines(h_tilde, p, index_window, degree_bound):
    """iso_xi commutes with every generator action, modulo the full kernel
    M_h with h = (y+a) h~ (membership-tested, not representative-equal)."""
    a = p.concrete_a()
    h = UniPoly((a, QE_ONE)) * h_tilde
    full = SubmoduleSpec("M", h)
    report = VerificationReport(
        "xi-intertwines",
        {
            "h_tilde": h_tilde.render(),
            "params": p.describe(),
            "window": index_window,
            "degree": degree_bound,
        },
    )
    for sym in basis_symbols("R", index_window):
        for v in quotient_monomials(degree_bound):
            lhs = act_basis(sym, iso_xi(v, h_tilde, p))
            rhs = iso_xi(quotient_act_basis(sym, v, p), h_tilde, p)
            diff = lhs - rhs
            if not contains(full, diff):
                report.record(
                    f"xi h~={h_tilde.render()} {p.describe()} {sym} on {v}",
                    lhs.render(),
                    rhs.render(),
                )
    return report
