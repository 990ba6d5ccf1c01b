"""
Sparse polynomials with exact rational coefficients in the graded ring
Q[y][x_1, ..., x_r], where y and every x_k sit in degree 2.

Exponent vectors are tuples (e_y, e_{x_1}, ..., e_{x_r}).  Also provides
the cyclic-rotation and transposition ring automorphisms, the Demazure
operators and the rank-2 invariant splitting of R over the sigma_i
invariants.

>>> r = 3
>>> p = xvar(1, r) + xvar(2, r)
>>> demazure(1, p).is_zero()
True
>>> print(demazure(1, xvar(1, r)))
-1
>>> print(demazure(r, xvar(1, r)))
1
>>> A, B = split_invariant(1, xvar(2, r))
>>> print(A), print(B)
0
1
(None, None)
"""

__all__ = [
    "GradedPoly", "xvar", "yvar", "const", "one", "zero",
    "Xroot", "bgen", "apply_map", "sigma_map", "rho_map", "act_word",
    "demazure", "split_invariant",
]

from fractions import Fraction


class GradedPoly:
    """Sparse multivariate polynomial over Q in y, x_1 .. x_r."""

    __slots__ = ("r", "terms", "_hash")

    def __init__(self, r, terms=None):
        self.r = r
        t = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    t[e] = c
        self.terms = t
        self._hash = None

    # -- arithmetic --

    def _check(self, other):
        if self.r != other.r:
            raise ValueError("rank mismatch: %d vs %d" % (self.r, other.r))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = const(self.r, other)
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            elif e in t:
                del t[e]
        out = object.__new__(GradedPoly)
        out.r, out.terms, out._hash = self.r, t, None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(GradedPoly)
        out.r = self.r
        out.terms = {e: -c for e, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = const(self.r, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return zero(self.r)
            out = object.__new__(GradedPoly)
            out.r = self.r
            out.terms = {e: c * other for e, c in self.terms.items()}
            out._hash = None
            return out
        self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                elif e in t:
                    del t[e]
        out = object.__new__(GradedPoly)
        out.r, out.terms, out._hash = self.r, t, None
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        out = one(self.r)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure --

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Top degree (deg y = deg x_k = 2); None for the zero polynomial."""
        if not self.terms:
            return None
        return max(2 * sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {2 * sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, d):
        return GradedPoly(self.r, {e: c for e, c in self.terms.items()
                                   if 2 * sum(e) == d})

    def coefficient_of_y(self):
        """Split as sum_k y^k * p_k(x); returns {k: y-free GradedPoly}."""
        out = {}
        for e, c in self.terms.items():
            k = e[0]
            out.setdefault(k, {})[(0,) + e[1:]] = c
        return {k: GradedPoly(self.r, t) for k, t in out.items()}

    def divide_exact(self, d):
        """Exact division; raises ValueError when the remainder is nonzero."""
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        dlead = max(d.terms)  # lex on (e_y, e_x1, ...)
        dc = d.terms[dlead]
        rem = dict(self.terms)
        quot = {}
        while rem:
            lead = max(rem)
            e = tuple(a - b for a, b in zip(lead, dlead))
            if any(x < 0 for x in e):
                raise ValueError("division not exact")
            c = rem[lead] / dc
            quot[e] = quot.get(e, 0) + c
            for e2, c2 in d.terms.items():
                e3 = tuple(a + b for a, b in zip(e, e2))
                s = rem.get(e3, 0) - c * c2
                if s:
                    rem[e3] = s
                elif e3 in rem:
                    del rem[e3]
        return GradedPoly(self.r, quot)

    # -- equality, hashing, printing --

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = const(self.r, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        names = ["y"] + ["x%d" % k for k in range(1, self.r + 1)]
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for v, p in enumerate(e):
                if p == 1:
                    factors.append(names[v])
                elif p > 1:
                    factors.append("%s^%d" % (names[v], p))
            mono = "*".join(factors)
            ac = abs(c)
            if not mono:
                term = str(ac)
            elif ac == 1:
                term = mono
            else:
                term = "%s*%s" % (ac, mono)
            parts.append(("-" if c < 0 else "+", term))
        s = ""
        for k, (sign, term) in enumerate(parts):
            if k == 0:
                s = ("-" if sign == "-" else "") + term
            else:
                s += " %s %s" % (sign, term)
        return s

    def __repr__(self):
        return "GradedPoly(r=%d, %s)" % (self.r, self)


# -- constructors --

def zero(r):
    return GradedPoly(r)


def one(r):
    return const(r, 1)


def const(r, c):
    return GradedPoly(r, {(0,) * (r + 1): Fraction(c)})


def yvar(r):
    return GradedPoly(r, {(1,) + (0,) * r: Fraction(1)})


def xvar(k, r):
    if not 1 <= k <= r:
        raise ValueError("x index out of range: %d" % k)
    e = [0] * (r + 1)
    e[k] = 1
    return GradedPoly(r, {tuple(e): Fraction(1)})


def Xroot(i, r):
    """The root polynomial X_i: x_{i+1} - x_i for i < r, x_1 - x_r - y for i = r."""
    if not 1 <= i <= r:
        raise ValueError("color out of range: %d" % i)
    if i < r:
        return xvar(i + 1, r) - xvar(i, r)
    return xvar(1, r) - xvar(r, r) - yvar(r)


def bgen(i, r):
    """Basis complement of R over the sigma_i invariants: x_{i+1}, or x_1 for i = r."""
    if not 1 <= i <= r:
        raise ValueError("color out of range: %d" % i)
    return xvar(i + 1, r) if i < r else xvar(1, r)


# -- ring automorphisms --

def apply_map(p, images):
    """
    Apply the ring homomorphism sending generator v to images[v]
    (images indexed like exponent vectors: 0 -> y, k -> x_k).
    """
    r = p.r
    cache = {}

    def power(v, e):
        key = (v, e)
        if key not in cache:
            cache[key] = images[v] ** e
        return cache[key]

    out = zero(r)
    for e, c in p.terms.items():
        m = const(r, c)
        for v, ev in enumerate(e):
            if ev:
                m = m * power(v, ev)
        out = out + m
    return out


def sigma_map(i, r):
    """Generator images of the transposition sigma_i acting on R."""
    images = [yvar(r)] + [xvar(k, r) for k in range(1, r + 1)]
    if i < r:
        images[i], images[i + 1] = images[i + 1], images[i]
    else:
        images[1] = xvar(r, r) + yvar(r)
        images[r] = xvar(1, r) - yvar(r)
    return images


def rho_map(r, inverse=False):
    """Generator images of the rotation rho (or its inverse) acting on R."""
    images = [yvar(r)]
    if not inverse:
        # x_i -> x_{i+1}, x_r -> x_1 - y
        for k in range(1, r + 1):
            images.append(xvar(k + 1, r) if k < r else xvar(1, r) - yvar(r))
    else:
        # x_1 -> x_r + y, x_i -> x_{i-1}
        for k in range(1, r + 1):
            images.append(xvar(k - 1, r) if k > 1 else xvar(r, r) + yvar(r))
    return images


def act_word(letters, p):
    """
    Act on p by a word of letters, applied right to left.  Letters are
    integers 1..r for sigma_i, the strings "+" / "-" for rho / rho inverse.
    """
    for letter in reversed(letters):
        if letter == "+":
            p = apply_map(p, rho_map(p.r))
        elif letter == "-":
            p = apply_map(p, rho_map(p.r, inverse=True))
        else:
            p = apply_map(p, sigma_map(letter, p.r))
    return p


# -- Demazure operators and the invariant splitting --

def demazure(i, p):
    """
    The divided-difference operator (p - sigma_i p) / X_i.

    The division is exact for every p; a failure indicates a bug in the
    sigma_i action.
    """
    r = p.r
    diff = p - apply_map(p, sigma_map(i, r))
    return diff.divide_exact(Xroot(i, r))


def split_invariant(i, p):
    """
    Write p = A + b_i * B with A, B invariant under sigma_i, where b_i is
    x_{i+1} (i < r) or x_1 (i = r).  Returns (A, B) with B = demazure(i, p).
    """
    B = demazure(i, p)
    A = p - bgen(i, p.r) * B
    return A, B


if __name__ == "__main__":
    import doctest
    doctest.testmod()
