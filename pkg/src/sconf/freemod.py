"""The rank-2 module of the Ramond N=2 algebra on two polynomial planes.

The underlying space is C[x,y] (even part) plus C[s,t] (odd part), with
coefficients in the Scalar ring so that the module parameters ``lam`` and
``alp`` stay formal.  Acting by the basis generators (modes written m):

    L_m . f(x,y) = lam^m (x + m/2 y) f(x+m, y)
    L_m . g(s,t) = lam^m (s + m/2 t + m) g(s+m, t)
    H_m . f(x,y) = lam^m y f(x+m, y)
    H_m . g(s,t) = lam^m t g(s+m, t)
    Gp_m . f     = 0
    Gp_m . g(s,t) = lam^m (2/alp) (x + m y) g(x+m, y-1)   (lands in the even part)
    Gm_m . f(x,y) = lam^m alp f(s+m, t+1)                 (lands in the odd part)
    Gm_m . g     = 0
    C . anything  = 0

Restricted to the commuting pair (L_0, H_0) the module is free with the two
basis vectors 1_even and 1_odd: L_0 multiplies by x resp. s and H_0 by y
resp. t.  Both parities share one bivariate representation; the parity tag
decides whether the variables read (x, y) or (s, t), and the odd->even /
even->odd substitutions above are plain variable shifts plus a parity flip.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebras import AlgebraElement, BasisSymbol, basis_symbols, bracket
from .errors import AlgebraMismatch, MixedParity
from .reports import VerificationReport
from .scalars import SC_ONE, Scalar, as_scalar

EVEN, ODD = 0, 1
_VARS = {EVEN: ("x", "y"), ODD: ("s", "t")}


# -- shared sparse bivariate helpers (exponent pair -> Scalar) ---------------

def _terms_add(p, q):
    out = dict(p)
    for k, c in q.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s.is_zero():
                del out[k]
            else:
                out[k] = s
    return out


def _terms_scale(p, c):
    if c.is_zero():
        return {}
    return {k: v * c for k, v in p.items()}


def _terms_mul(p, q):
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            k = (i1 + i2, j1 + j2)
            c = c1 * c2
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
    return out


def _terms_shift(p, dx, dy):
    """Substitute u -> u+dx, w -> w+dy (integer shifts, binomial expansion)."""
    if not dx and not dy:
        return dict(p)
    out = {}
    for (i, j), c in p.items():
        if dx:
            xparts = [(k, Fraction(comb(i, k) * dx ** (i - k))) for k in range(i + 1)]
        else:
            xparts = [(i, None)]
        if dy:
            yparts = [(l, Fraction(comb(j, l) * dy ** (j - l))) for l in range(j + 1)]
        else:
            yparts = [(j, None)]
        for k, cx in xparts:
            for l, cy in yparts:
                w = c
                if cx is not None:
                    w = w * cx
                if cy is not None:
                    w = w * cy
                if w.is_zero():
                    continue
                key = (k, l)
                s = out.get(key)
                if s is None:
                    out[key] = w
                else:
                    s = s + w
                    if s.is_zero():
                        del out[key]
                    else:
                        out[key] = s
    return out


class ModuleElement:
    """A parity-tagged polynomial: f(x,y) when even, g(s,t) when odd."""

    __slots__ = ("parity", "terms")

    def __init__(self, parity, terms=None):
        if parity not in (EVEN, ODD):
            raise ValueError("parity must be 0 (even) or 1 (odd)")
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "terms", terms or {})

    def __setattr__(self, name, value):
        raise AttributeError("ModuleElement is immutable")

    @classmethod
    def monomial(cls, parity, i, j, coeff=1):
        coeff = as_scalar(coeff)
        if coeff.is_zero():
            return cls(parity)
        return cls(parity, {(i, j): coeff})

    @classmethod
    def one(cls, parity):
        return cls.monomial(parity, 0, 0)

    @classmethod
    def zero(cls, parity):
        return cls(parity)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def __add__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.parity != other.parity:
            raise MixedParity("cannot add elements of different parity")
        return ModuleElement(self.parity, _terms_add(self.terms, other.terms))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ModuleElement(self.parity, {k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar):
        return ModuleElement(self.parity, _terms_scale(self.terms, as_scalar(scalar)))

    __rmul__ = __mul__

    def times_poly(self, poly_terms):
        """Multiply by a bivariate polynomial given as an exponent->Scalar map."""
        return ModuleElement(self.parity, _terms_mul(self.terms, poly_terms))

    def shifted(self, du, dv):
        return ModuleElement(self.parity, _terms_shift(self.terms, du, dv))

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        if not self.terms and not other.terms:
            return True  # the zero vector is shared by both parities
        return self.parity == other.parity and self.terms == other.terms

    __hash__ = None

    def render(self):
        if not self.terms:
            return "0"
        u, v = _VARS[self.parity]
        out = ""
        for i, j in sorted(self.terms, reverse=True):
            mono = []
            if i:
                mono.append(u if i == 1 else f"{u}^{i}")
            if j:
                mono.append(v if j == 1 else f"{v}^{j}")
            mono = "*".join(mono)
            pieces = self.terms[(i, j)].render_terms()
            if len(pieces) == 1:
                sign, body = pieces[0]
                if not mono:
                    pass
                elif body == "1":
                    body = mono
                else:
                    body = f"{body}*{mono}"
            else:
                sign = 1
                body = f"({self.terms[(i, j)].render()})"
                if mono:
                    body = f"{body}*{mono}"
            if not out:
                out = ("-" if sign < 0 else "") + body
            else:
                out += (" - " if sign < 0 else " + ") + body
        return out

    __str__ = render

    def __repr__(self):
        return f"<ModuleElement {'even' if self.parity == EVEN else 'odd'} {self.render()}>"


# ---------------------------------------------------------------------------
# the action
# ---------------------------------------------------------------------------

def _lam(m):
    return Scalar.param("lam", m)


_ALP = Scalar.param("alp")
_TWO_OVER_ALP = Scalar.monomial(2, alp=-1)


def act_basis(sym, v):
    """Action of one basis generator of the Ramond algebra."""
    if sym.algebra != "R":
        raise AlgebraMismatch(f"the rank-2 module is an R-module; got {sym.algebra}")
    fam = sym.family
    if fam == "C":
        return ModuleElement.zero(v.parity)
    m = sym.twice // 2
    lam_m = _lam(m)
    if fam == "L":
        shifted = v.shifted(m, 0)
        pre = {(1, 0): SC_ONE}
        if m:
            pre[(0, 1)] = Scalar.number(Fraction(m, 2))
        if v.parity == ODD and m:
            pre[(0, 0)] = Scalar.number(m)
        return shifted.times_poly(pre) * lam_m
    if fam == "H":
        return v.shifted(m, 0).times_poly({(0, 1): SC_ONE}) * lam_m
    if fam == "Gp":
        if v.parity == EVEN:
            return ModuleElement.zero(ODD)
        out = ModuleElement(EVEN, _terms_shift(v.terms, m, -1))
        pre = {(1, 0): SC_ONE}
        if m:
            pre[(0, 1)] = Scalar.number(m)
        return out.times_poly(pre) * (lam_m * _TWO_OVER_ALP)
    if fam == "Gm":
        if v.parity == ODD:
            return ModuleElement.zero(EVEN)
        out = ModuleElement(ODD, _terms_shift(v.terms, m, 1))
        return out * (lam_m * _ALP)
    raise AlgebraMismatch(f"family {fam} does not act")


def act(x, v):
    """Action of a homogeneous R-element on a module element."""
    if isinstance(x, BasisSymbol):
        x = AlgebraElement.basis(x)
    if x.algebra != "R":
        raise AlgebraMismatch(f"the rank-2 module is an R-module; got {x.algebra}")
    out_parity = (v.parity + x.parity()) % 2
    acc = ModuleElement.zero(out_parity)
    for sym, coeff in x.terms.items():
        acc = acc + act_basis(sym, v) * coeff
    return acc


@dataclass(frozen=True)
class ActionWord:
    """An ordered product of algebra elements, applied right-to-left."""

    factors: tuple

    def __post_init__(self):
        for f in self.factors:
            if not isinstance(f, AlgebraElement) or f.algebra != "R":
                raise AlgebraMismatch("action words are products of R elements")

    def act(self, v):
        for f in reversed(self.factors):
            v = act(f, v)
        return v


def monomials(degree_bound, parities=(EVEN, ODD)):
    """All monomials of total degree <= degree_bound in the given parities."""
    out = []
    for parity in parities:
        for i in range(degree_bound + 1):
            for j in range(degree_bound + 1 - i):
                out.append(ModuleElement.monomial(parity, i, j))
    return out


# ---------------------------------------------------------------------------
# verification sweeps
# ---------------------------------------------------------------------------

def check_module_compatibility(index_window, degree_bound):
    """Bracket compatibility of the action on all generator pairs/monomials.

    For every pair (X, Y) of basis generators with |mode| <= index_window and
    every monomial v of total degree <= degree_bound in either parity:

        [X, Y] . v  ==  X.(Y.v) - (-1)^{|X||Y|} Y.(X.v)
    """
    if index_window < 1 or degree_bound < 1:
        raise ValueError("index_window and degree_bound must be >= 1")
    report = VerificationReport(
        "module-compatibility", {"window": index_window, "degree": degree_bound}
    )
    syms = basis_symbols("R", index_window)
    elems = {s: AlgebraElement.basis(s) for s in syms}
    vs = monomials(degree_bound)
    acted = {s: [act_basis(s, v) for v in vs] for s in syms}
    for xs in syms:
        for ys in syms:
            br = bracket(elems[xs], elems[ys])
            odd_pair = bool(xs.parity and ys.parity)
            for k, v in enumerate(vs):
                lhs = act(br, v)
                xy = act(elems[xs], acted[ys][k])
                yx = act(elems[ys], acted[xs][k])
                rhs = xy + yx if odd_pair else xy - yx
                if lhs != rhs:
                    report.record(
                        f"compat ({xs}, {ys}) on {v}", lhs.render(), rhs.render()
                    )
    return report


def check_uh_freeness(degree_bound):
    """L_0 and H_0 act as multiplication by the two variables.

    Verifies the multiplication statement on every monomial up to the bound
    and that the iterated images L_0^i H_0^j . 1 enumerate the monomial basis
    of each parity exactly (so the two parity generators are free generators).
    """
    report = VerificationReport("uh-freeness", {"degree": degree_bound})
    L0 = BasisSymbol("R", "L", 0)
    H0 = BasisSymbol("R", "H", 0)
    for v in monomials(degree_bound):
        expect_l = v.times_poly({(1, 0): SC_ONE})
        expect_h = v.times_poly({(0, 1): SC_ONE})
        got_l = act_basis(L0, v)
        got_h = act_basis(H0, v)
        if got_l != expect_l:
            report.record(f"L0 on {v}", got_l.render(), expect_l.render())
        if got_h != expect_h:
            report.record(f"H0 on {v}", got_h.render(), expect_h.render())
    for parity in (EVEN, ODD):
        seen = set()
        for i in range(degree_bound + 1):
            for j in range(degree_bound + 1 - i):
                w = ModuleElement.one(parity)
                for _ in range(i):
                    w = act_basis(L0, w)
                for _ in range(j):
                    w = act_basis(H0, w)
                expect = ModuleElement.monomial(parity, i, j)
                if w != expect:
                    report.record(
                        f"L0^{i} H0^{j} 1_{'even' if parity == EVEN else 'odd'}",
                        w.render(),
                        expect.render(),
                    )
                else:
                    seen.add((i, j))
        want = {(i, j) for i in range(degree_bound + 1)
                for j in range(degree_bound + 1 - i)}
        if seen != want:
            report.record(
                f"monomial basis coverage parity {parity}", sorted(seen), sorted(want)
            )
    return report


def _iterate(sym, v, n):
    for _ in range(n):
        v = act_basis(sym, v)
    return v


def check_shift_identities(index_window, n_max, degree_bound):
    """Operator shift identities against the mode-0 pair.

    On every monomial up to the bound and for every generator X of mode m with
    |m| <= index_window and every n <= n_max:

        X . L0^n = (L0 + m)^n . X            (all four families)
        X . H0^n = (H0 - e)^n . X            (e = +1 for Gp, -1 for Gm, 0 else)
    """
    report = VerificationReport(
        "shift-identities",
        {"window": index_window, "n_max": n_max, "degree": degree_bound},
    )
    L0 = BasisSymbol("R", "L", 0)
    H0 = BasisSymbol("R", "H", 0)
    eps = {"L": 0, "H": 0, "Gp": 1, "Gm": -1}
    for fam in ("L", "H", "Gp", "Gm"):
        for m in range(-index_window, index_window + 1):
            X = BasisSymbol("R", fam, 2 * m)
            for n in range(1, n_max + 1):
                for v in monomials(degree_bound):
                    xv = act_basis(X, v)
                    # X . L0^n v
                    lhs = act_basis(X, _iterate(L0, v, n))
                    rhs = ModuleElement.zero(xv.parity)
                    for k in range(n + 1):
                        c = Fraction(comb(n, k) * m ** (n - k))
                        if c:
                            rhs = rhs + _iterate(L0, xv, k) * Scalar.number(c)
                    if lhs != rhs:
                        report.record(
                            f"shift L0^{n} under {X} on {v}", lhs.render(), rhs.render()
                        )
                    # X . H0^n v
                    e = eps[fam]
                    lhs = act_basis(X, _iterate(H0, v, n))
                    rhs = ModuleElement.zero(xv.parity)
                    for k in range(n + 1):
                        c = Fraction(comb(n, k) * (-e) ** (n - k))
                        if c:
                            rhs = rhs + _iterate(H0, xv, k) * Scalar.number(c)
                    if lhs != rhs:
                        report.record(
                            f"shift H0^{n} under {X} on {v}", lhs.render(), rhs.render()
                        )
    return report


def check_odd_square_zero(index_window, degree_bound):
    """Gp_m Gp_n = 0 and Gm_m Gm_n = 0 as operators on monomials."""
    report = VerificationReport(
        "odd-square-zero", {"window": index_window, "degree": degree_bound}
    )
    for fam in ("Gp", "Gm"):
        for m in range(-index_window, index_window + 1):
            for n in range(-index_window, index_window + 1):
                X = BasisSymbol("R", fam, 2 * m)
                Y = BasisSymbol("R", fam, 2 * n)
                for v in monomials(degree_bound):
                    out = act_basis(X, act_basis(Y, v))
                    if not out.is_zero():
                        report.record(f"{X} {Y} on {v}", out.render(), "0")
    return report


def check_central_triviality(degree_bound):
    """C, and the bracket combination that reconstructs it, act as zero.

    [H_1, H_-1] = C/3, so 3 H_1 H_-1 - 3 H_-1 H_1 must kill every element.
    """
    report = VerificationReport("central-triviality", {"degree": degree_bound})
    C = BasisSymbol("R", "C")
    H1 = BasisSymbol("R", "H", 2)
    Hm1 = BasisSymbol("R", "H", -2)
    three = Scalar.number(3)
    for v in monomials(degree_bound):
        cv = act_basis(C, v)
        if not cv.is_zero():
            report.record(f"C on {v}", cv.render(), "0")
        combo = act_basis(H1, act_basis(Hm1, v)) * three - act_basis(
            Hm1, act_basis(H1, v)
        ) * three
        if not combo.is_zero():
            report.record(f"3[H1,H-1] combo on {v}", combo.render(), "0")
    return report
