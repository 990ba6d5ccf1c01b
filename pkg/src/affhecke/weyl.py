"""
The extended affine Weyl group of type A_{r-1}^{(1)}, realized as the group
of window-periodic bijections f of the integers with f(i + r) = f(i) + r.

An element is stored by its window [f(1), ..., f(r)].  Generators are the
transpositions sigma_1 .. sigma_r (indices mod r), the rotation rho with
window [2, 3, ..., r+1], and the translations t_1 .. t_r.

>>> w = compose(from_generator("rho", 3), from_generator("s1", 3),
...             from_generator("rho^-1", 3))
>>> w == from_generator("s2", 3)
True
>>> normal_form(from_generator("t1", 3))
(1, [2, 1])
"""

__all__ = [
    "AffinePermutation", "GlWeight", "identity", "from_generator",
    "from_word", "parse_word", "compose", "normal_form", "length",
    "act_weight", "act_poly", "nf_letters",
]

from dataclasses import dataclass

from .poly import act_word


@dataclass(frozen=True)
class AffinePermutation:
    """Window [f(1), ..., f(r)] of a periodic bijection of the integers."""
    window: tuple

    @property
    def r(self):
        return len(self.window)

    def __post_init__(self):
        r = len(self.window)
        if sorted(((f - 1) % r) for f in self.window) != list(range(r)):
            raise ValueError("window residues are not a permutation: %s"
                             % (self.window,))

    def __call__(self, i):
        r = self.r
        quo, rem = divmod(i - 1, r)
        return self.window[rem] + quo * r

    def rho_power(self):
        r = self.r
        num = sum(self.window) - r * (r + 1) // 2
        assert num % r == 0
        return num // r

    def inverse(self):
        r = self.r
        win = [0] * r
        for i in range(1, r + 1):
            f = self.window[i - 1]
            quo, rem = divmod(f - 1, r)
            win[rem] = i - quo * r
        return AffinePermutation(tuple(win))

    def has_descent(self, i):
        """Right descent at sigma_i, 1 <= i <= r (i = r wraps the window)."""
        return self(i) > self(i + 1)


def identity(r):
    return AffinePermutation(tuple(range(1, r + 1)))


def from_generator(name, r):
    """
    Build a generator from its CLI name: "s1".."sr", "rho", "rho^-1",
    "t1".."tr".
    """
    if name == "rho":
        return AffinePermutation(tuple(range(2, r + 2)))
    if name == "rho^-1":
        return AffinePermutation(tuple(range(0, r)))
    if name.startswith("s"):
        i = int(name[1:])
        if not 1 <= i <= r:
            raise ValueError("generator index out of range: %s" % name)
        win = list(range(1, r + 1))
        if i < r:
            win[i - 1], win[i] = win[i], win[i - 1]
        else:
            win[r - 1], win[0] = r + 1, 0
        return AffinePermutation(tuple(win))
    if name.startswith("t"):
        j = int(name[1:])
        if not 1 <= j <= r:
            raise ValueError("generator index out of range: %s" % name)
        win = list(range(1, r + 1))
        win[j - 1] += r
        return AffinePermutation(tuple(win))
    raise ValueError("unknown generator: %s" % name)


def compose(*ws):
    """Left-to-right product: compose(u, v) maps i to u(v(i))."""
    if not ws:
        raise ValueError("empty composition")
    r = ws[0].r
    out = ws[0]
    for w in ws[1:]:
        if w.r != r:
            raise ValueError("rank mismatch")
        out = AffinePermutation(tuple(out(w(i)) for i in range(1, r + 1)))
    return out


def parse_word(text, r):
    """Parse a whitespace-separated generator word into a list of names."""
    names = text.split()
    for name in names:
        from_generator(name, r)  # validate
    return names


def from_word(text, r):
    """Compose a generator word, left to right."""
    names = parse_word(text, r)
    out = identity(r)
    for name in names:
        out = compose(out, from_generator(name, r))
    return out


def normal_form(w):
    """
    Decompose w = rho^k * sigma_{i_1} ... sigma_{i_l} with the word reduced.
    Returns (k, [i_1, ..., i_l]).
    """
    r = w.r
    word = []
    cur = w
    while True:
        for i in range(1, r + 1):
            if cur.has_descent(i):
                cur = compose(cur, from_generator("s%d" % i, r))
                word.append(i)
                break
        else:
            break
    k = cur.rho_power()
    assert cur.window == tuple(i + k for i in range(1, r + 1))
    word.reverse()
    return k, word


def nf_letters(w):
    """Normal form as soergel-style letters: "+"/"-" for rho^{+-1}, ints."""
    k, word = normal_form(w)
    return (["+"] * k if k >= 0 else ["-"] * (-k)) + word


def length(w):
    """Coxeter length of the non-extended part."""
    return len(normal_form(w)[1])


@dataclass(frozen=True)
class GlWeight:
    """A level-zero weight (kappa_1, ..., kappa_r; m)."""
    kappa: tuple
    m: int

    @property
    def r(self):
        return len(self.kappa)


def _gen_act_weight(letter, wt):
    r = wt.r
    kappa = list(wt.kappa)
    m = wt.m
    if letter == "+":
        kappa = [kappa[-1]] + kappa[:-1]
        m -= wt.kappa[-1]
    elif letter == "-":
        kappa = kappa[1:] + [kappa[0]]
        m += wt.kappa[0]
    elif letter == r:
        m += kappa[0] - kappa[-1]
        kappa[0], kappa[-1] = kappa[-1], kappa[0]
    else:
        i = letter
        kappa[i - 1], kappa[i] = kappa[i], kappa[i - 1]
    return GlWeight(tuple(kappa), m)


def act_weight(w, wt):
    """Act on a level-zero weight through the normal form of w."""
    for letter in reversed(nf_letters(w)):
        wt = _gen_act_weight(letter, wt)
    return wt


def act_poly(w, p):
    """Act on a graded polynomial through the normal form of w."""
    if w.r != p.r:
        raise ValueError("rank mismatch")
    return act_word(nf_letters(w), p)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
