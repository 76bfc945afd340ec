"""Exact coefficient arithmetic for the deformation engine.

Coefficients live in the Gaussian rationals Q(i), represented as pairs of
``fractions.Fraction``.  Deformation scalars are Laurent polynomials in the
deformation parameter h (so expressions carrying kappa = h^(-1) stay exact)
and ordinary polynomials in the twist parameter xi.  They are stored sparsely
as dicts keyed by the bigrade (deg_h, deg_xi).

A scalar either carries a finite truncation order ``trunc = (N_h, N_xi)``,
meaning every bigrade with deg_h > N_h or deg_xi > N_xi has been dropped, or
``trunc = None`` for exact (untruncated) arithmetic.  Exact scalars combine
freely with truncated ones; the result inherits the finite truncation.  Two
different finite truncations never combine silently.

Negative h-degrees are allowed only in exact mode.  Truncating a Laurent
series is not a ring quotient (multiplying by h^(-1) re-enters the kept
range), so finite-truncation scalars enforce deg_h >= 0; this keeps truncated
multiplication associative.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TruncationMismatch

_FRAC_ZERO = Fraction(0)


class GaussianRational:
    """A complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        other = _as_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gr(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _as_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        other = _as_gr(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self):
        return self.im == 0

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%s*i" % self.im
        sign = "+" if self.im > 0 else "-"
        return "(%s %s %s*i)" % (self.re, sign, abs(self.im))


def _as_gr(v):
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, (int, Fraction)):
        return GaussianRational(v)
    return NotImplemented


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def gr(re, im=0):
    """Shorthand constructor, accepts ints, Fractions or 'p/q' strings."""
    if isinstance(re, str):
        re = Fraction(re)
    if isinstance(im, str):
        im = Fraction(im)
    return GaussianRational(re, im)


def merge_trunc(t1, t2):
    """Combine the truncations of two operands.

    Exact (None) is compatible with everything; two finite truncations must
    agree exactly.
    """
    if t1 is None:
        return t2
    if t2 is None:
        return t1
    if t1 != t2:
        raise TruncationMismatch(
            "cannot combine truncations %r and %r" % (t1, t2)
        )
    return t1


def _keep(key, trunc):
    return trunc is None or (key[0] <= trunc[0] and key[1] <= trunc[1])


def _check_laurent(terms, trunc):
    if trunc is not None:
        for key in terms:
            if key[0] < 0:
                raise ValueError(
                    "negative h-degree %r under finite truncation; "
                    "Laurent coefficients require exact mode" % (key,)
                )


class Scalar:
    """Sparse Laurent polynomial in (h, xi) over Q(i), optionally truncated.

    ``terms`` maps ``(deg_h, deg_xi)`` to a nonzero GaussianRational.
    deg_h may be negative (kappa = h^(-1) coefficients), deg_xi may not.
    """

    __slots__ = ("terms", "trunc")

    def __init__(self, terms=None, trunc=None):
        clean = {}
        if terms:
            for key, val in terms.items():
                if not isinstance(val, GaussianRational):
                    val = GaussianRational(val)
                if val and _keep(key, trunc):
                    if key[1] < 0:
                        raise ValueError("negative xi-degree %r" % (key,))
                    clean[key] = val
        _check_laurent(clean, trunc)
        self.terms = clean
        self.trunc = trunc

    @staticmethod
    def _make(terms, trunc):
        # internal fast path: caller guarantees cleaned terms
        s = Scalar.__new__(Scalar)
        s.terms = terms
        s.trunc = trunc
        return s

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, trunc=None):
        return cls._make({}, trunc)

    @classmethod
    def one(cls, trunc=None):
        return cls.monomial(GR_ONE, 0, 0, trunc)

    @classmethod
    def i(cls, trunc=None):
        return cls.monomial(GR_I, 0, 0, trunc)

    @classmethod
    def h(cls, power=1, trunc=None):
        return cls.monomial(GR_ONE, power, 0, trunc)

    @classmethod
    def xi(cls, power=1, trunc=None):
        return cls.monomial(GR_ONE, 0, power, trunc)

    @classmethod
    def rational(cls, value, trunc=None):
        return cls.monomial(_as_gr(Fraction(value)), 0, 0, trunc)

    @classmethod
    def monomial(cls, coeff, deg_h=0, deg_xi=0, trunc=None):
        coeff = _as_gr(coeff)
        if deg_xi < 0:
            raise ValueError("negative xi-degree")
        if not coeff or not _keep((deg_h, deg_xi), trunc):
            return cls._make({}, trunc)
        terms = {(deg_h, deg_xi): coeff}
        _check_laurent(terms, trunc)
        return cls._make(terms, trunc)

    # --- ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        trunc = merge_trunc(self.trunc, other.trunc)
        out = dict(self.terms)
        for key, val in other.terms.items():
            acc = out.get(key)
            acc = val if acc is None else acc + val
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        if trunc is not self.trunc:
            out = {k: v for k, v in out.items() if _keep(k, trunc)}
        if self.trunc is None or other.trunc is None:
            _check_laurent(out, trunc)
        return Scalar._make(out, trunc)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Scalar._make({k: -v for k, v in self.terms.items()}, self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _as_gr(other)
            if not c:
                return Scalar._make({}, self.trunc)
            return Scalar._make(
                {k: v * c for k, v in self.terms.items()}, self.trunc
            )
        if not isinstance(other, Scalar):
            return NotImplemented
        trunc = merge_trunc(self.trunc, other.trunc)
        out = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                if not _keep(key, trunc):
                    continue
                acc = out.get(key)
                prod = v1 * v2
                acc = prod if acc is None else acc + prod
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        if self.trunc is None or other.trunc is None:
            _check_laurent(out, trunc)
        return Scalar._make(out, trunc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms and self.trunc == other.trunc

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # --- structure --------------------------------------------------------

    def coeff(self, deg_h, deg_xi):
        return self.terms.get((deg_h, deg_xi), GR_ZERO)

    def shift(self, deg_h, deg_xi=0):
        """Multiply by the monomial h^deg_h * xi^deg_xi."""
        if deg_xi < 0:
            raise ValueError("negative xi-degree")
        out = {}
        for (a, b), v in self.terms.items():
            key = (a + deg_h, b + deg_xi)
            if _keep(key, self.trunc):
                out[key] = v
        _check_laurent(out, self.trunc)
        return Scalar._make(out, self.trunc)

    def conjugate(self, h_sign=1):
        """Complex-conjugate the coefficients.

        h and xi are treated as real parameters.  ``h_sign=-1`` models an
        imaginary deformation parameter, where conjugation also flips the
        sign of h (each term picks up (-1)^deg_h).
        """
        out = {}
        for (a, b), v in self.terms.items():
            w = v.conjugate()
            if h_sign == -1 and a % 2:
                w = -w
            out[(a, b)] = w
        return Scalar._make(out, self.trunc)

    def retrunc(self, new_trunc):
        """Tighten the truncation.  Loosening (or removing) it is an error."""
        if new_trunc is None:
            if self.trunc is None:
                return self
            raise TruncationMismatch("cannot drop a finite truncation")
        if self.trunc is not None:
            if new_trunc[0] > self.trunc[0] or new_trunc[1] > self.trunc[1]:
                raise TruncationMismatch(
                    "cannot loosen truncation %r to %r"
                    % (self.trunc, new_trunc)
                )
        out = {k: v for k, v in self.terms.items() if _keep(k, new_trunc)}
        _check_laurent(out, new_trunc)
        return Scalar._make(out, new_trunc)

    def specialize(self, h_value, xi_value=0):
        """Evaluate at rational parameter values; h_value may not be 0 when
        negative h-degrees are present."""
        h_value = Fraction(h_value)
        xi_value = Fraction(xi_value)
        total = GR_ZERO
        for (a, b), v in self.terms.items():
            total = total + v * (h_value ** a) * (xi_value ** b)
        return total

    def min_h_degree(self):
        if not self.terms:
            return 0
        return min(k[0] for k in self.terms)

    def max_h_degree(self):
        if not self.terms:
            return 0
        return max(k[0] for k in self.terms)

    def h_zero_part(self):
        """Keep only deg_h == 0 terms (any xi-degree)."""
        out = {k: v for k, v in self.terms.items() if k[0] == 0}
        return Scalar._make(out, self.trunc)

    def has_negative_h(self):
        return any(k[0] < 0 for k in self.terms)

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("scalar is not constant: %r" % self)
        return self.terms.get((0, 0), GR_ZERO)

    def __repr__(self):
        if not self.terms:
            return "Scalar(0)"
        bits = []
        for (a, b) in sorted(self.terms):
            v = self.terms[(a, b)]
            mono = []
            if a:
                mono.append("h^%d" % a if a != 1 else "h")
            if b:
                mono.append("xi^%d" % b if b != 1 else "xi")
            head = repr(v)
            bits.append("*".join([head] + mono) if mono else head)
        return "Scalar(%s)" % " + ".join(bits)
