"""The complete submodule lattice of the rank-2 module.

Every submodule is cut out by a monic polynomial h(y) with coefficients in
Q(sqrt2) and a two-way kind tag:

    M-kind:  h(y) C[x,y]                    (even)  +  h(t+1) C[s,t]  (odd)
    N-kind:  h(y) (x C[x,y] + y C[x,y])     (even)  +  h(t+1) C[s,t]  (odd)

Membership reduces to exact division by a monic polynomial in the second
variable (with an extra no-constant-term condition on the quotient for the
N kind), so it is decidable term by term.  Coefficients of h are restricted
to Q(sqrt2) -- formal parameters inside h would make divisibility
undecidable, and the action formulas never need them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .algebras import basis_symbols
from .freemod import EVEN, ODD, ModuleElement, act_basis
from .reports import VerificationReport
from .scalars import PARAMS, QE_ONE, QE_ZERO, QuadExt, Scalar, as_quadext

_A_SLOT = PARAMS.index("a")
_B_SLOT = PARAMS.index("b")


class UniPoly:
    """A univariate polynomial with QuadExt coefficients (ascending order)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_quadext(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def const(cls, v):
        return cls((v,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots):
        out = cls.const(1)
        for r in roots:
            out = out * cls((-as_quadext(r), 1))
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else QE_ZERO

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == QE_ONE

    def monic(self):
        if self.is_zero():
            raise ValueError("the zero polynomial cannot be made monic")
        if self.is_monic():
            return self
        inv = self.leading().inverse()
        return UniPoly(tuple(c * inv for c in self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly(
            tuple(
                (a[k] if k < len(a) else QE_ZERO) + (b[k] if k < len(b) else QE_ZERO)
                for k in range(n)
            )
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, QuadExt)) or not isinstance(other, UniPoly):
            other = UniPoly.const(as_quadext(other))
        out = [QE_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def shifted(self, c):
        """The composition p(y + c)."""
        c = as_quadext(c)
        n = self.degree
        if n < 0 or c.is_zero():
            return self
        out = [QE_ZERO] * (n + 1)
        for k, ck in enumerate(self.coeffs):
            if ck.is_zero():
                continue
            # (y + c)^k
            for l in range(k + 1):
                out[l] = out[l] + ck * (comb(k, l) * c ** (k - l))
        return UniPoly(tuple(out))

    def __call__(self, v):
        v = as_quadext(v)
        acc = QE_ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def divmod_monic(self, d):
        """Quotient and remainder by a monic divisor."""
        if not d.is_monic():
            raise ValueError("divisor must be monic")
        dd = d.degree
        rem = list(self.coeffs)
        quo = [QE_ZERO] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            quo[k - dd] = c
            for l in range(dd + 1):
                rem[k - dd + l] = rem[k - dd + l] - c * d.coeffs[l]
        return UniPoly(tuple(quo)), UniPoly(tuple(rem[:dd]))

    def divides(self, other):
        _, rem = other.divmod_monic(self.monic())
        return rem.is_zero()

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def render(self, var="y"):
        if not self.coeffs:
            return "0"
        out = ""
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            for rat, is_sqrt in ((c.rat, False), (c.root2, True)):
                if not rat:
                    continue
                factors = []
                if is_sqrt:
                    factors.append("sqrt2")
                if mono:
                    factors.append(mono)
                mag = abs(rat)
                if mag != 1 or not factors:
                    factors.insert(0, str(mag))
                body = "*".join(factors)
                if not out:
                    out = ("-" if rat < 0 else "") + body
                else:
                    out += (" - " if rat < 0 else " + ") + body
        return out

    __str__ = render

    def __repr__(self):
        return f"<UniPoly {self.render()}>"


@dataclass(frozen=True)
class SubmoduleSpec:
    """A submodule of the rank-2 module: kind tag plus monic h(y)."""

    kind: str
    h: UniPoly

    def __post_init__(self):
        if self.kind not in ("M", "N"):
            raise ValueError("kind must be 'M' or 'N'")
        if self.h.is_zero():
            raise ValueError("h must be nonzero")
        if not self.h.is_monic():
            object.__setattr__(self, "h", self.h.monic())

    def render(self):
        return f"{self.kind}[h={self.h.render()}]"

    __str__ = render

    def odd_divisor(self):
        return self.h.shifted(1)

    def generators(self):
        """Module generators: enough to decide containment in any other spec."""
        gens = []
        h_even = _poly_in_second_var(self.h, EVEN)
        if self.kind == "M":
            gens.append(h_even)
        else:
            gens.append(h_even.times_poly({(1, 0): Scalar.number(1)}))
            gens.append(h_even.times_poly({(0, 1): Scalar.number(1)}))
        gens.append(_poly_in_second_var(self.odd_divisor(), ODD))
        return gens

    def spanning_elements(self, degree_bound):
        """Generators times all monomials up to the degree bound."""
        out = []
        for g in self.generators():
            for i in range(degree_bound + 1):
                for j in range(degree_bound + 1 - i):
                    out.append(g.times_poly({(i, j): Scalar.number(1)}))
        return out


def _poly_in_second_var(p, parity):
    """Lift h to a module element h(y) (even) or h(t) (odd)."""
    return ModuleElement(
        parity, {(0, k): Scalar.number(c) for k, c in enumerate(p.coeffs) if not c.is_zero()}
    )


def _check_param_free(v):
    for c in v.terms.values():
        for ev in c.terms:
            if ev[_A_SLOT] or ev[_B_SLOT]:
                raise ValueError(
                    "membership is defined for elements free of the parameters a, b"
                )


def _divide_in_second_var(terms, divisor):
    """Exact long division of a bivariate polynomial by monic h(second var).

    Returns (remainder, quotient) as exponent->Scalar maps.  Works over any
    coefficient ring because the divisor is monic.
    """
    dd = divisor.degree
    dcoeffs = divisor.coeffs
    work = dict(terms)
    quo = {}
    while work:
        jmax = max(j for _, j in work)
        if jmax < dd:
            break
        for key in [k for k in work if k[1] == jmax]:
            i, j = key
            c = work.pop(key)
            qkey = (i, j - dd)
            quo[qkey] = quo.get(qkey, Scalar.number(0)) + c
            for l in range(dd):  # leading term already cancelled by the pop
                dl = dcoeffs[l]
                if dl.is_zero():
                    continue
                tkey = (i, j - dd + l)
                nv = work.get(tkey, Scalar.number(0)) - c * dl
                if nv.is_zero():
                    work.pop(tkey, None)
                else:
                    work[tkey] = nv
    return work, quo


def contains(spec, v):
    """Exact membership of a module element in the submodule.

    The element must not involve the formal parameters a, b (membership is a
    question about the h-ideal, not a parametric one).
    """
    if v.is_zero():
        return True
    _check_param_free(v)
    if v.parity == EVEN:
        rem, quo = _divide_in_second_var(v.terms, spec.h)
        if rem:
            return False
        if spec.kind == "N":
            return (0, 0) not in quo
        return True
    rem, _ = _divide_in_second_var(v.terms, spec.odd_divisor())
    return not rem


def reduce_mod(spec, v):
    """Canonical representative of v modulo the M-kind submodule of spec.h."""
    divisor = spec.h if v.parity == EVEN else spec.odd_divisor()
    rem, _ = _divide_in_second_var(v.terms, divisor)
    return ModuleElement(v.parity, rem)


def check_closure(spec, index_window, degree_bound):
    """Every generator maps every spanning element back into the submodule."""
    report = VerificationReport(
        "submodule-closure",
        {"spec": spec.render(), "window": index_window, "degree": degree_bound},
    )
    elements = spec.spanning_elements(degree_bound)
    for sym in basis_symbols("R", index_window):
        for v in elements:
            out = act_basis(sym, v)
            if not contains(spec, out):
                report.record(
                    f"closure {spec} under {sym} on {v}", out.render(), "member"
                )
    return report


def check_containment(inner, outer):
    """Whether the inner submodule sits inside the outer one."""
    return all(contains(outer, g) for g in inner.generators())


def check_lattice_order(specs):
    """Containment facts across a battery of specs.

    For every spec: the N-kind sits inside the M-kind with the same h; and
    M_g contains M_h whenever g divides h.
    """
    report = VerificationReport("submodule-lattice", {"specs": [str(s) for s in specs]})
    by_h = {}
    for spec in specs:
        by_h.setdefault(spec.h, {})[spec.kind] = spec
    for h, kinds in by_h.items():
        if "M" in kinds and "N" in kinds:
            if not check_containment(kinds["N"], kinds["M"]):
                report.record(f"N<=M for h={h.render()}", "not contained", "contained")
    ms = [s for s in specs if s.kind == "M"]
    for s1, s2 in product(ms, repeat=2):
        if s2.h.divides(s1.h):
            if not check_containment(s1, s2):
                report.record(
                    f"M[{s1.h.render()}] <= M[{s2.h.render()}]",
                    "not contained",
                    "contained",
                )
    return report
