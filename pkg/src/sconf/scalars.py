"""Exact coefficient arithmetic: rationals, the field Q(sqrt2), and sparse
Laurent polynomials in the formal module parameters.

The coefficient tower used everywhere in this package is

    Fraction  <  QuadExt  <  Scalar

* ``Fraction`` -- stdlib exact rationals (gcd-reduced, positive denominator).
* ``QuadExt``  -- numbers ``p + q*sqrt(2)`` with rational p, q.  This is a
  field (sqrt(2) is irrational, so the norm ``p^2 - 2 q^2`` vanishes only at
  zero).  sqrt(2) is forced on us by the embeddings of the N=1 algebras.
* ``Scalar``   -- sparse polynomials over QuadExt in the six formal parameters
  ``lam, alp, mu, bet, a, b``.  The first four are Laurent parameters (they
  stand for nonzero complex numbers, so negative powers are legal); ``a`` and
  ``b`` stand for arbitrary complex numbers and only carry exponents >= 0.

A nonzero Scalar is a nonzero function of generic parameter values, so "is
zero in the formal ring" is the right reading of every "equals zero" check in
the verification sweeps.

All three types are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAUnit

Rational = Fraction

PARAMS = ("lam", "alp", "mu", "bet", "a", "b")
LAURENT_PARAMS = frozenset(("lam", "alp", "mu", "bet"))
_PARAM_INDEX = {name: k for k, name in enumerate(PARAMS)}
_NPARAMS = len(PARAMS)
_ZERO_EXP = (0,) * _NPARAMS

_F0 = Fraction(0)
_F1 = Fraction(1)


class QuadExt:
    """An element ``rat + root2*sqrt(2)`` of the field Q(sqrt2)."""

    __slots__ = ("rat", "root2")

    def __init__(self, rat=0, root2=0):
        object.__setattr__(self, "rat", Fraction(rat))
        object.__setattr__(self, "root2", Fraction(root2))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.rat and not self.root2

    def is_rational(self):
        return not self.root2

    def __bool__(self):
        return not self.is_zero()

    # -- field structure ----------------------------------------------------

    def __add__(self, other):
        other = _as_quadext(other)
        if other is None:
            return NotImplemented
        return QuadExt(self.rat + other.rat, self.root2 + other.root2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quadext(other)
        if other is None:
            return NotImplemented
        return QuadExt(self.rat - other.rat, self.root2 - other.root2)

    def __rsub__(self, other):
        other = _as_quadext(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QuadExt(-self.rat, -self.root2)

    def __mul__(self, other):
        other = _as_quadext(other)
        if other is None:
            return NotImplemented
        # (p + q*sqrt2)(u + v*sqrt2) = (pu + 2qv) + (pv + qu)*sqrt2
        return QuadExt(
            self.rat * other.rat + 2 * self.root2 * other.root2,
            self.rat * other.root2 + self.root2 * other.rat,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.rat, -self.root2)

    def norm(self):
        """Field norm ``p^2 - 2 q^2``; multiplicative, zero only at zero."""
        return self.rat * self.rat - 2 * self.root2 * self.root2

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return QuadExt(self.rat / n, -self.root2 / n)

    def __truediv__(self, other):
        other = _as_quadext(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_quadext(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QE_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        other = _as_quadext(other)
        if other is None:
            return NotImplemented
        return self.rat == other.rat and self.root2 == other.root2

    def __hash__(self):
        if not self.root2:
            return hash(self.rat)
        return hash((self.rat, self.root2))

    def __repr__(self):
        return f"QuadExt({self.rat!r}, {self.root2!r})"

    def __str__(self):
        parts = []
        if self.rat:
            parts.append((1 if self.rat > 0 else -1, str(abs(self.rat))))
        if self.root2:
            mag = abs(self.root2)
            body = "sqrt2" if mag == 1 else f"{mag}*sqrt2"
            parts.append((1 if self.root2 > 0 else -1, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += (" - " if sign < 0 else " + ") + body
        return out


def _as_quadext(v):
    if isinstance(v, QuadExt):
        return v
    if isinstance(v, (int, Fraction)):
        return QuadExt(v)
    return None


QE_ZERO = QuadExt(0)
QE_ONE = QuadExt(1)
SQRT2 = QuadExt(0, 1)
INV_SQRT2 = QuadExt(0, Fraction(1, 2))


class Scalar:
    """Sparse Laurent polynomial over Q(sqrt2) in the six formal parameters.

    Terms map an exponent vector (one integer slot per entry of ``PARAMS``)
    to a nonzero QuadExt coefficient.  ``lam, alp, mu, bet`` may carry
    negative exponents; ``a, b`` may not.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms is trusted to be normalized (no zero coefficients, valid
        # exponents); use the classmethod constructors from outside.
        object.__setattr__(self, "terms", terms or {})

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def number(cls, v):
        """Constant scalar from an int, Fraction, or QuadExt."""
        q = _as_quadext(v)
        if q is None:
            raise TypeError(f"cannot build a Scalar from {v!r}")
        if q.is_zero():
            return SC_ZERO
        return cls({_ZERO_EXP: q})

    @classmethod
    def param(cls, name, exp=1):
        """The monomial ``name**exp``; negative exp only for Laurent names."""
        if name not in _PARAM_INDEX:
            raise ValueError(f"unknown parameter {name!r}")
        if exp < 0 and name not in LAURENT_PARAMS:
            raise ValueError(f"parameter {name!r} is not invertible")
        if exp == 0:
            return SC_ONE
        ev = [0] * _NPARAMS
        ev[_PARAM_INDEX[name]] = exp
        return cls({tuple(ev): QE_ONE})

    @classmethod
    def monomial(cls, coeff, exps=None, **named):
        """Single term ``coeff * prod(name**exp)``."""
        q = _as_quadext(coeff)
        if q is None or q.is_zero():
            return SC_ZERO
        merged = dict(exps or {})
        merged.update(named)
        ev = [0] * _NPARAMS
        for name, exp in merged.items():
            if name not in _PARAM_INDEX:
                raise ValueError(f"unknown parameter {name!r}")
            if exp < 0 and name not in LAURENT_PARAMS:
                raise ValueError(f"parameter {name!r} is not invertible")
            ev[_PARAM_INDEX[name]] += exp
        return cls({tuple(ev): q})

    # -- predicates -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def constant(self):
        """The value of a constant scalar as a QuadExt."""
        if not self.terms:
            return QE_ZERO
        if self.is_constant():
            return self.terms[_ZERO_EXP]
        raise ValueError(f"scalar {self} is not constant")

    def uses_param(self, name):
        k = _PARAM_INDEX[name]
        return any(ev[k] for ev in self.terms)

    # -- ring structure -------------------------------------------------------

    def __add__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for ev, c in other.terms.items():
            s = out.get(ev)
            if s is None:
                out[ev] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[ev]
                else:
                    out[ev] = s
        return Scalar(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return Scalar({ev: -c for ev, c in self.terms.items()})

    def __mul__(self, other):
        q = _as_quadext(other)
        if q is not None:
            if q.is_zero():
                return SC_ZERO
            return Scalar({ev: c * q for ev, c in self.terms.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self.terms or not other.terms:
            return SC_ZERO
        out = {}
        for ev1, c1 in self.terms.items():
            for ev2, c2 in other.terms.items():
                ev = tuple(e1 + e2 for e1, e2 in zip(ev1, ev2))
                c = c1 * c2
                s = out.get(ev)
                if s is None:
                    out[ev] = c
                else:
                    s = s + c
                    if s.is_zero():
                        del out[ev]
                    else:
                        out[ev] = s
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert_monomial() ** (-n)
        out = SC_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def int_pow(self, n):
        """``self**n`` for any integer n; negative n inverts a unit monomial."""
        return self ** n

    def invert_monomial(self):
        """Inverse of a one-term scalar whose a/b exponents vanish.

        Raises NotAUnit for anything else: multi-term scalars are not units of
        this ring, and positive powers of a or b cannot be inverted.
        """
        if len(self.terms) != 1:
            raise NotAUnit(f"{self} is not a monomial")
        (ev, c), = self.terms.items()
        for name in ("a", "b"):
            if ev[_PARAM_INDEX[name]]:
                raise NotAUnit(f"{self} involves the non-invertible parameter {name}")
        return Scalar({tuple(-e for e in ev): c.inverse()})

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, values):
        """Specialize every parameter that occurs and return a QuadExt.

        ``values`` maps parameter names to int/Fraction/QuadExt.  A parameter
        occurring with a negative exponent must be assigned a nonzero value.
        """
        assigned = {}
        for name, v in values.items():
            if name not in _PARAM_INDEX:
                raise ValueError(f"unknown parameter {name!r}")
            q = _as_quadext(v)
            if q is None:
                raise TypeError(f"bad value for {name!r}: {v!r}")
            assigned[_PARAM_INDEX[name]] = q
        total = QE_ZERO
        for ev, c in self.terms.items():
            term = c
            for k, e in enumerate(ev):
                if not e:
                    continue
                if k not in assigned:
                    raise ValueError(f"no value supplied for parameter {PARAMS[k]!r}")
                v = assigned[k]
                if e < 0 and v.is_zero():
                    raise ValueError(f"parameter {PARAMS[k]!r} must be nonzero")
                term = term * v ** e
            total = total + term
        return total

    # -- comparison / rendering -----------------------------------------------

    def __eq__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def render_terms(self):
        """The canonical term list as (sign, body) pairs, used by renderers.

        A QuadExt coefficient ``p + q*sqrt2`` contributes up to two entries,
        the rational part first, so that every rendered term carries a single
        rational magnitude and at most one ``sqrt2`` factor.
        """
        parts = []
        for ev in sorted(self.terms, reverse=True):
            coeff = self.terms[ev]
            for rat, is_sqrt in ((coeff.rat, False), (coeff.root2, True)):
                if not rat:
                    continue
                factors = []
                for name, e in zip(PARAMS, ev):
                    if e == 1:
                        factors.append(name)
                    elif e:
                        factors.append(f"{name}^{e}")
                if is_sqrt:
                    factors.append("sqrt2")
                mag = abs(rat)
                if mag != 1 or not factors:
                    factors.insert(0, str(mag))
                parts.append((1 if rat > 0 else -1, "*".join(factors)))
        return parts

    def render(self):
        parts = self.render_terms()
        if not parts:
            return "0"
        out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += (" - " if sign < 0 else " + ") + body
        return out

    __str__ = render

    def __repr__(self):
        return f"<Scalar {self.render()}>"


def _as_scalar(v):
    if isinstance(v, Scalar):
        return v
    q = _as_quadext(v)
    if q is None:
        return None
    return Scalar.number(q)


SC_ZERO = Scalar({})
SC_ONE = Scalar({_ZERO_EXP: QE_ONE})


def as_scalar(v):
    """Coerce an int, Fraction, QuadExt, or Scalar to a Scalar."""
    s = _as_scalar(v)
    if s is None:
        raise TypeError(f"cannot coerce {v!r} to Scalar")
    return s


def as_quadext(v):
    """Coerce an int, Fraction, or QuadExt to a QuadExt."""
    q = _as_quadext(v)
    if q is None:
        raise TypeError(f"cannot coerce {v!r} to QuadExt")
    return q
