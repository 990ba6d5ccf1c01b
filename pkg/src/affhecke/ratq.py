"""
Exact arithmetic in the field Q(q) of rational functions in one variable q.

A RatQ is stored as a reduced fraction of integer-coefficient polynomials,
with any power of q pulled out of the denominator, so Laurent polynomials
in q are exactly the values with trivial denominator.

>>> print(qint(2))
q + q^-1
>>> print(qint(3))
q^2 + 1 + q^-2
>>> qint(3) == (RatQ.q()**3 - RatQ.q()**-3) / (RatQ.q() - RatQ.q()**-1)
True
"""

__all__ = ["RatQ", "qint"]

from fractions import Fraction
from math import gcd


# -- helpers on dense integer coefficient lists (index = degree) --

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _pdivmod(a, b):
    """Division with remainder over Q; coefficients become Fractions."""
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = Fraction(b[-1])
    for i in reversed(range(len(q))):
        c = a[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _primitive(c):
    """Scale a Fraction list to a content-1 integer list, positive leading."""
    c = [Fraction(x) for x in c]
    if not c:
        return []
    denlcm = 1
    for x in c:
        denlcm = denlcm * x.denominator // gcd(denlcm, x.denominator)
    ints = [int(x * denlcm) for x in c]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def _pgcd(a, b):
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, _primitive(r)
    return _primitive(a)


def _pdiv_exact(a, b):
    q, r = _pdivmod(a, b)
    assert not r, "division not exact"
    out = []
    for x in q:
        assert x.denominator == 1
        out.append(int(x))
    return _trim(out)


class RatQ:
    """
    A rational function in q with integer-coefficient numerator and
    denominator.  Canonical form: the fraction is reduced, the denominator
    is an ordinary polynomial with nonzero constant term, content 1 and
    positive leading coefficient; `val` is the power of q multiplying the
    numerator polynomial (so negative powers of q live in `val`).
    """

    __slots__ = ("num", "val", "den", "_hash")

    def __init__(self, num, val=0, den=(1,)):
        num = list(num)
        den = list(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        # strip common q powers
        while num and num[0] == 0:
            num.pop(0)
            val += 1
        _trim(num)
        if not num:
            self.num, self.val, self.den = (), 0, (1,)
            self._hash = None
            return
        while den[0] == 0:
            den.pop(0)
            val -= 1
        if den == [1]:
            # fast path: Laurent polynomials need no reduction
            self.num = tuple(num)
            self.val = val
            self.den = (1,)
            self._hash = None
            return
        # reduce by the polynomial gcd, then by the joint integer content,
        # and make the denominator's leading coefficient positive
        g = _pgcd(num, den)
        if len(g) > 1 or g[0] != 1:
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        c = 0
        for x in num:
            c = gcd(c, x)
        for x in den:
            c = gcd(c, x)
        if den[-1] < 0:
            c = -c
        num = [x // c for x in num]
        den = [x // c for x in den]
        self.num = tuple(num)
        self.val = val
        self.den = tuple(den)
        self._hash = None

    # -- constructors --

    @classmethod
    def from_int(cls, n):
        return cls([n])

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls([f.numerator], 0, [f.denominator])

    @classmethod
    def q(cls):
        return cls([1], 1)

    @classmethod
    def q_power(cls, k):
        return cls([1], k)

    @classmethod
    def from_laurent(cls, terms):
        """Build from a {degree: int coefficient} map."""
        if not terms:
            return cls([])
        lo = min(terms)
        hi = max(terms)
        return cls([terms.get(d, 0) for d in range(lo, hi + 1)], lo)

    # -- queries --

    def is_zero(self):
        return not self.num

    def is_laurent(self):
        return self.den == (1,)

    def laurent_terms(self):
        """Return {degree: coefficient}; requires a Laurent polynomial."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial: %s" % self)
        return {self.val + i: c for i, c in enumerate(self.num) if c}

    def constant_term(self):
        """The q^0 coefficient; requires a Laurent polynomial."""
        return self.laurent_terms().get(0, 0)

    def min_degree(self):
        if not self.num:
            raise ValueError("zero has no degree")
        return self.val

    # -- arithmetic --

    def _coerce(self, other):
        if isinstance(other, RatQ):
            return other
        if isinstance(other, int):
            return RatQ([other])
        if isinstance(other, Fraction):
            return RatQ.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # align valuations
        v = min(self.val, other.val)
        a = [0] * (self.val - v) + list(self.num)
        b = [0] * (other.val - v) + list(other.num)
        num = _padd(_pmul(a, list(other.den)), _pmul(b, list(self.den)))
        return RatQ(num, v, _pmul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatQ)
        out.num = tuple(-c for c in self.num)
        out.val = self.val
        out.den = self.den
        out._hash = None
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatQ(_pmul(list(self.num), list(other.num)),
                    self.val + other.val,
                    _pmul(list(self.den), list(other.den)))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatQ(list(self.den), -self.val, list(self.num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatQ([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def bar(self):
        """The involution q -> q^-1."""
        num = list(reversed(self.num))
        den = list(reversed(self.den))
        v = -(self.val + len(self.num) - 1) + (len(self.den) - 1)
        return RatQ(num, v, den)

    # -- equality, hashing, printing --

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num, self.val, self.den) == (other.num, other.val, other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.val, self.den))
        return self._hash

    def __str__(self):
        if not self.num:
            return "0"
        parts = []
        for i in reversed(range(len(self.num))):
            c = self.num[i]
            if not c:
                continue
            d = self.val + i
            if d == 0:
                mono = None
            elif d == 1:
                mono = "q"
            else:
                mono = "q^%d" % d
            if mono is None:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = "%d*%s" % (abs(c), mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        s = ""
        for k, (sign, term) in enumerate(parts):
            if k == 0:
                s = ("-" if sign == "-" else "") + term
            else:
                s += " %s %s" % (sign, term)
        if self.den != (1,):
            s = "(%s) / (%s)" % (s, _poly_str(self.den))
        return s

    def __repr__(self):
        return "RatQ(%s)" % self


def _mono_str(c, d):
    if d == 0:
        return str(c)
    m = "q" if d == 1 else "q^%d" % d
    if c == 1:
        return m
    if c == -1:
        return "-" + m
    return "%d*%s" % (c, m)


def _poly_str(coeffs):
    parts = []
    for i in reversed(range(len(coeffs))):
        c = coeffs[i]
        if not c:
            continue
        t = _mono_str(abs(c), i)
        parts.append(("-" if c < 0 else "+", t))
    s = ""
    for k, (sign, term) in enumerate(parts):
        if k == 0:
            s = ("-" if sign == "-" else "") + term
        else:
            s += " %s %s" % (sign, term)
    return s or "0"


RATQ_ZERO = RatQ([])
RATQ_ONE = RatQ([1])


def qint(a):
    """
    The q-integer [a] = (q^a - q^-a)/(q - q^-1).

    >>> print(qint(0))
    0
    >>> qint(-3) == -qint(3)
    True
    """
    if a < 0:
        return -qint(-a)
    # [a] = q^{a-1} + q^{a-3} + ... + q^{1-a}
    return RatQ.from_laurent({a - 1 - 2 * i: 1 for i in range(a)})


if __name__ == "__main__":
    import doctest
    doctest.testmod()
