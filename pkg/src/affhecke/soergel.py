"""
Bimodules over R = Q[y][x_1..x_r] attached to words in the colors 1..r and
the twist symbols "+", "-", together with the graded bimodule maps between
them (dots, trivalent vertices, 4- and 6-valent vertices, oriented cups and
caps, mixed 4-valent vertices, and box multiplications).

A color i stands for B_i = R tensor_{R^{sigma_i}} R; the symbol "+" ("-")
stands for a copy of R whose right action is twisted by rho (rho inverse).
Elements are kept in a canonical form: a free left R-module basis is indexed
by tags choosing 1 or b_i in each color slot, and all other coefficients are
pushed to the left, applying the twist when they cross an oriented letter.

>>> r = 3
>>> e = basis_element(r, (1,), (0,))
>>> print(enddot(1, r)(e))
{(): 1}
>>> print(startdot(1, r)(unit(r, ())))
{(0,): -x1, (1,): 1}
"""

__all__ = [
    "SoergelObject", "BimElement", "unit", "basis_element", "all_tags",
    "from_tensor", "Morphism", "idmor", "tensor_mor", "compose_mor",
    "sum_mor", "scale_mor", "enddot", "startdot", "merge", "split",
    "cap_or", "cup_or", "m4", "v4", "v6", "box", "boxy",
    "cap_one", "cup_one", "hom_basis", "decompose_witness",
    "twist_weight_check", "next_color", "prev_color",
]

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .poly import (GradedPoly, zero, one, const, xvar, yvar, Xroot, bgen,
                   apply_map, rho_map, split_invariant, demazure)

ORIENTED = ("+", "-")


def next_color(i, r):
    return i % r + 1


def prev_color(i, r):
    return (i - 2) % r + 1


def dual_letter(a):
    if a == "+":
        return "-"
    if a == "-":
        return "+"
    return a


def dual_word(word):
    return tuple(dual_letter(a) for a in reversed(word))


def unoriented_count(word):
    return sum(1 for a in word if a not in ORIENTED)


@dataclass(frozen=True)
class SoergelObject:
    """A tensor word over {1..r, +, -} with a grading shift."""
    letters: tuple
    shift: int = 0

    def net_twist(self):
        return (sum(1 for a in self.letters if a == "+")
                - sum(1 for a in self.letters if a == "-"))


def _check_word(word, r):
    for a in word:
        if a in ORIENTED:
            continue
        if not (isinstance(a, int) and 1 <= a <= r):
            raise ValueError("bad letter %r for r=%d" % (a, r))


def _normalize(r, word, contents):
    """
    Push a pure tensor into canonical tag coordinates.  `contents` lists the
    polynomial sitting in each of the len(word)+1 gaps between letters.
    Crossing an oriented letter right-to-left applies rho^{+-1}; a color
    letter splits the carried content over the sigma_i invariants.
    """
    state = {(): contents[len(word)]}
    for m in reversed(range(len(word))):
        a = word[m]
        new = {}
        if a in ORIENTED:
            images = rho_map(r, inverse=(a == "-"))
            for t, c in state.items():
                nc = contents[m] * apply_map(c, images)
                if not nc.is_zero():
                    new[t] = new.get(t, zero(r)) + nc
        else:
            for t, c in state.items():
                A, B = split_invariant(a, c)
                for bit, part in ((0, A), (1, B)):
                    p = contents[m] * part
                    if p.is_zero():
                        continue
                    key = (bit,) + t
                    s = new.get(key, zero(r)) + p
                    if s.is_zero():
                        new.pop(key, None)
                    else:
                        new[key] = s
        state = new
    return {t: c for t, c in state.items() if not c.is_zero()}


class BimElement:
    """An element of the bimodule attached to a word, in canonical form."""

    __slots__ = ("r", "word", "terms")

    def __init__(self, r, word, terms):
        self.r = r
        self.word = tuple(word)
        self.terms = {t: c for t, c in terms.items() if not c.is_zero()}

    # -- constructors --

    @classmethod
    def from_config(cls, r, word, contents):
        return cls(r, word, _normalize(r, word, contents))

    def is_zero(self):
        return not self.terms

    # -- linear structure --

    def _check(self, other):
        if self.r != other.r or self.word != other.word:
            raise ValueError("element word mismatch")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, zero(self.r)) + c
            if s.is_zero():
                t.pop(k, None)
            else:
                t[k] = s
        return BimElement(self.r, self.word, t)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return BimElement(self.r, self.word,
                          {t: p * c for t, p in self.terms.items()})

    def lmul(self, p):
        """Left action of p in R."""
        return BimElement(self.r, self.word,
                          {t: p * c for t, c in self.terms.items()})

    def _config(self, tag, coeff):
        contents = [coeff]
        ti = 0
        for a in self.word:
            if a in ORIENTED:
                contents.append(one(self.r))
            else:
                contents.append(bgen(a, self.r) if tag[ti] else one(self.r))
                ti += 1
        return contents

    def rmul(self, p):
        """Right action of p in R (renormalizes)."""
        out = BimElement(self.r, self.word, {})
        for t, c in self.terms.items():
            contents = self._config(t, c)
            contents[-1] = contents[-1] * p
            out = out + BimElement.from_config(self.r, self.word, contents)
        return out

    # -- grading --

    def term_degrees(self):
        """Degree of each canonical term; each color slot carries {-1}."""
        u = unoriented_count(self.word)
        out = {}
        for t, c in self.terms.items():
            out[t] = c.degree() + 2 * sum(t) - u
        return out

    def is_homogeneous(self):
        degs = set(self.term_degrees().values())
        ok = len(degs) <= 1
        ok = ok and all(c.is_homogeneous() for c in self.terms.values())
        return ok

    def degree(self):
        degs = set(self.term_degrees().values())
        if len(degs) != 1:
            raise ValueError("not homogeneous")
        return degs.pop()

    # -- comparison, printing --

    def __eq__(self, other):
        if not isinstance(other, BimElement):
            return NotImplemented
        return (self.r == other.r and self.word == other.word
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.r, self.word, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms):
            parts.append("%s: %s" % (t, self.terms[t]))
        return "{%s}" % ", ".join(parts)

    def __repr__(self):
        return "BimElement(%r, %s)" % (self.word, self)


def all_tags(word):
    u = unoriented_count(word)
    return list(product((0, 1), repeat=u))


def basis_element(r, word, tag):
    _check_word(word, r)
    return BimElement(r, word, {tuple(tag): one(r)})


def unit(r, word):
    """The element with all-1 content (tag of zeros)."""
    u = unoriented_count(word)
    return basis_element(r, word, (0,) * u)


def from_tensor(r, word, contents):
    """Normalize an explicit tensor given by its gap contents."""
    _check_word(word, r)
    if len(contents) != len(word) + 1:
        raise ValueError("need %d contents for %d letters"
                         % (len(word) + 1, len(word)))
    return BimElement.from_config(r, word, list(contents))


def tensor_concat(e1, e2):
    """e1 tensor e2 over R; the junction contents multiply."""
    if e1.r != e2.r:
        raise ValueError("rank mismatch")
    r = e1.r
    word = e1.word + e2.word
    out = BimElement(r, word, {})
    for t1, c1 in e1.terms.items():
        cfg1 = e1._config(t1, c1)
        for t2, c2 in e2.terms.items():
            cfg2 = e2._config(t2, c2)
            contents = cfg1[:-1] + [cfg1[-1] * cfg2[0]] + cfg2[1:]
            out = out + BimElement.from_config(r, word, contents)
    return out


# -- morphisms --

class Morphism:
    """
    A graded bimodule map between word bimodules, given by the images of
    the canonical left-basis elements of its source.
    """

    __slots__ = ("r", "src", "tgt", "deg", "images", "name")

    def __init__(self, r, src, tgt, deg, images, name="mor"):
        self.r = r
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.deg = deg
        self.images = images  # dict tag -> BimElement on tgt
        self.name = name

    def __call__(self, e):
        if e.word != self.src:
            raise ValueError("morphism %s expects word %s, got %s"
                             % (self.name, self.src, e.word))
        out = BimElement(self.r, self.tgt, {})
        for t, c in e.terms.items():
            img = self.images.get(t)
            if img is not None and not img.is_zero():
                out = out + img.lmul(c)
        return out

    def __repr__(self):
        return "Morphism(%s: %s -> %s, deg %d)" % (self.name, self.src,
                                                   self.tgt, self.deg)


def _mor_from_rule(r, src, tgt, deg, rule, name):
    images = {t: rule(t) for t in all_tags(src)}
    return Morphism(r, src, tgt, deg, images, name)


def idmor(r, word):
    _check_word(word, r)
    return _mor_from_rule(r, word, word, 0,
                          lambda t: basis_element(r, word, t),
                          "id%s" % (tuple(word),))


def compose_mor(*ms):
    """compose_mor(f, g) is f after g."""
    if not ms:
        raise ValueError("empty composition")
    ms = list(ms)
    g = ms[-1]
    for f in reversed(ms[:-1]):
        if f.src != g.tgt:
            raise ValueError("composition mismatch: %s after %s"
                             % (f.name, g.name))
        images = {t: f(e) for t, e in g.images.items()}
        g = Morphism(g.r, g.src, f.tgt, f.deg + g.deg, images,
                     "%s.%s" % (f.name, g.name))
    return g


def tensor_mor(*ms):
    """Horizontal composition, identity on no letters when a part is id()."""
    if not ms:
        raise ValueError("empty tensor")
    out = ms[0]
    for m in ms[1:]:
        if out.r != m.r:
            raise ValueError("rank mismatch")
        images = {}
        for t1, e1 in out.images.items():
            for t2, e2 in m.images.items():
                images[t1 + t2] = tensor_concat(e1, e2)
        out = Morphism(out.r, out.src + m.src, out.tgt + m.tgt,
                       out.deg + m.deg, images,
                       "(%s*%s)" % (out.name, m.name))
    return out


def sum_mor(*ms):
    if not ms:
        raise ValueError("empty sum")
    base = ms[0]
    images = {t: BimElement(base.r, base.tgt, {}) for t in base.images}
    for m in ms:
        if (m.src, m.tgt) != (base.src, base.tgt):
            raise ValueError("sum of morphisms with different types")
        for t, e in m.images.items():
            images[t] = images[t] + e
    return Morphism(base.r, base.src, base.tgt, base.deg, images, "sum")


def scale_mor(c, m):
    images = {t: e.scale(c) for t, e in m.images.items()}
    return Morphism(m.r, m.src, m.tgt, m.deg, images,
                    "%s*%s" % (c, m.name))


def mor_equal(f, g):
    if (f.src, f.tgt) != (g.src, g.tgt):
        return False
    return all(f.images[t] == g.images[t] for t in all_tags(f.src))


def is_zero_mor(f):
    return all(e.is_zero() for e in f.images.values())


# -- generating morphisms --

def enddot(i, r):
    """B_i -> R, a tensor b -> ab; degree 1."""
    def rule(t):
        p = bgen(i, r) if t[0] else one(r)
        return BimElement(r, (), {(): p})
    return _mor_from_rule(r, (i,), (), 1, rule, "enddot(%d)" % i)


def startdot(i, r):
    """R -> B_i, a -> (a/2)(X_i tensor 1 + 1 tensor X_i); degree 1."""
    X = Xroot(i, r)
    half = Fraction(1, 2)
    img = (from_tensor(r, (i,), [X * half, one(r)])
           + from_tensor(r, (i,), [const(r, half), X]))
    return Morphism(r, (), (i,), 1, {(): img}, "startdot(%d)" % i)


def merge(i, r):
    """B_i B_i -> B_i, a x m x b -> (demazure_i m) a x b; degree -1."""
    def rule(t):
        if t[0] == 0:
            return BimElement(r, (i,), {})
        return basis_element(r, (i,), (t[1],))
    return _mor_from_rule(r, (i, i), (i,), -1, rule, "merge(%d)" % i)


def split(i, r):
    """B_i -> B_i B_i, a x b -> a x 1 x b; degree -1."""
    def rule(t):
        return basis_element(r, (i, i), (0, t[0]))
    return _mor_from_rule(r, (i,), (i, i), -1, rule, "split(%d)" % i)


def cap_or(sign, r):
    """("+","-") or ("-","+") -> empty word, a x b -> a rho^{+-1}(b)."""
    src = ("+", "-") if sign == "+" else ("-", "+")
    img = BimElement(r, (), {(): one(r)})
    return Morphism(r, src, (), 0, {(): img}, "cap%s" % sign)


def cup_or(sign, r):
    """Empty word -> ("+","-") or ("-","+"), a -> a x 1."""
    tgt = ("+", "-") if sign == "+" else ("-", "+")
    img = BimElement(r, tgt, {(): one(r)})
    return Morphism(r, (), tgt, 0, {(): img}, "cup%s" % sign)


def m4(kind, i, r):
    """
    Mixed 4-valent vertices (degree 0), parametrized by the source color i:
      ur: ("+", i)   -> (i+1, "+")    content moves by rho
      ul: (i, "+")   -> ("+", i-1)    content moves by rho inverse
      dr: (i, "-")   -> ("-", i+1)    content moves by rho
      dl: ("-", i)   -> (i-1, "-")    content moves by rho inverse
    """
    nxt, prv = next_color(i, r), prev_color(i, r)
    if kind == "ur":
        src, tgt, inv, slot = ("+", i), (nxt, "+"), False, 1
    elif kind == "ul":
        src, tgt, inv, slot = (i, "+"), ("+", prv), True, 2
    elif kind == "dr":
        src, tgt, inv, slot = (i, "-"), ("-", nxt), False, 2
    elif kind == "dl":
        src, tgt, inv, slot = ("-", i), (prv, "-"), True, 1
    else:
        raise ValueError("unknown mixed vertex kind: %r" % kind)
    images = rho_map(r, inverse=inv)

    def rule(t):
        s = bgen(i, r) if t[0] else one(r)
        contents = [one(r), one(r), one(r)]
        contents[slot] = apply_map(s, images)
        return from_tensor(r, tgt, contents)
    return _mor_from_rule(r, src, tgt, 0, rule, "m4%s(%d)" % (kind, i))


def colors_distant(i, j, r):
    return i != j and j not in (next_color(i, r), prev_color(i, r))


def colors_adjacent(i, j, r):
    return j in (next_color(i, r), prev_color(i, r))


def v4(i, j, r):
    """Crossing of distant colors, B_i B_j -> B_j B_i; degree 0."""
    if not colors_distant(i, j, r):
        raise ValueError("colors %d, %d are not distant mod %d" % (i, j, r))

    def rule(t):
        s1 = bgen(i, r) if t[0] else one(r)
        s2 = bgen(j, r) if t[1] else one(r)
        return from_tensor(r, (j, i), [one(r), s2, s1])
    f = _mor_from_rule(r, (i, j), (j, i), 0, rule, "v4(%d,%d)" % (i, j))
    return f


# -- six-valent vertex: solved once per adjacent pair, shifted by rho --

_V6_CACHE = {}
_HOM_GENS = None


def _ring_gens(r):
    return [yvar(r)] + [xvar(k, r) for k in range(1, r + 1)]


def _monomials(r, k):
    """Exponent tuples (e_y, e_1..e_r) of total degree k."""
    def rec(nvars, total):
        if nvars == 1:
            yield (total,)
            return
        for h in range(total + 1):
            for rest in rec(nvars - 1, total - h):
                yield (h,) + rest
    return list(rec(r + 1, k))


def hom_basis(r, src, tgt, degree):
    """
    All bimodule maps src -> tgt of the given degree, found by linear
    algebra over Q: a map is a choice of homogeneous left coefficients on
    the target basis for each source basis tag, constrained by commuting
    with the right action of y and every x_k.
    """
    src_tags = all_tags(src)
    tgt_tags = all_tags(tgt)
    u_src, u_tgt = unoriented_count(src), unoriented_count(tgt)
    cols = []
    colindex = {}
    for t in src_tags:
        dt = 2 * sum(t) - u_src
        for tt in tgt_tags:
            dtt = 2 * sum(tt) - u_tgt
            d = dt + degree - dtt
            if d < 0 or d % 2:
                continue
            for mono in _monomials(r, d // 2):
                colindex[(t, tt, mono)] = len(cols)
                cols.append((t, tt, mono))
    ncols = len(cols)
    if ncols == 0:
        return []

    # precompute the right action of each ring generator on both bases
    gens = _ring_gens(r)
    src_rmul = {}
    for t in src_tags:
        e = basis_element(r, src, t)
        src_rmul[t] = [e.rmul(g) for g in gens]
    tgt_rmul = {}
    for tt in tgt_tags:
        e = basis_element(r, tgt, tt)
        tgt_rmul[tt] = [e.rmul(g) for g in gens]

    rows = []
    for t in src_tags:
        for gi in range(len(gens)):
            # sum_s p_s f(e_s) - f(e_t) g = 0, expanded over (tt, monomial)
            lhs = src_rmul[t][gi].terms  # tag s -> poly p_s
            eq = {}  # (tt, monomial exponent) -> dict col -> coeff
            for s, p in lhs.items():
                ds = 2 * sum(s) - u_src
                for tt in tgt_tags:
                    d = ds + degree - (2 * sum(tt) - u_tgt)
                    if d < 0 or d % 2:
                        continue
                    for mono in _monomials(r, d // 2):
                        col = colindex[(s, tt, mono)]
                        for e2, c2 in p.terms.items():
                            key = (tt, tuple(a + b for a, b in zip(e2, mono)))
                            row = eq.setdefault(key, {})
                            row[col] = row.get(col, Fraction(0)) + c2
            dt = 2 * sum(t) - u_src
            for tt in tgt_tags:
                d = dt + degree - (2 * sum(tt) - u_tgt)
                if d < 0 or d % 2:
                    continue
                for mono in _monomials(r, d // 2):
                    col = colindex[(t, tt, mono)]
                    img = tgt_rmul[tt][gi].terms  # tag tt2 -> poly q
                    for tt2, q in img.items():
                        for e2, c2 in q.terms.items():
                            key = (tt2,
                                   tuple(a + b for a, b in zip(e2, mono)))
                            row = eq.setdefault(key, {})
                            row[col] = row.get(col, Fraction(0)) - c2
            for row in eq.values():
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)

    basis = _nullspace(rows, ncols)
    out = []
    for vec in basis:
        images = {}
        for t in src_tags:
            terms = {}
            for tt in tgt_tags:
                p = zero(r)
                dt = 2 * sum(t) - u_src
                d = dt + degree - (2 * sum(tt) - u_tgt)
                if d < 0 or d % 2:
                    continue
                for mono in _monomials(r, d // 2):
                    c = vec[colindex[(t, tt, mono)]]
                    if c:
                        p = p + GradedPoly(r, {mono: c})
                if not p.is_zero():
                    terms[tt] = p
            images[t] = BimElement(r, tgt, terms)
        out.append(Morphism(r, src, tgt, degree, images, "hom"))
    return out


def _nullspace(rows, ncols):
    """Nullspace basis of a sparse rational matrix, by row echelon."""
    pivots = {}  # col -> reduced row (dict)
    for row in rows:
        row = dict(row)
        while row:
            c = max(row)
            if c in pivots:
                f = row[c]
                for c2, v in pivots[c].items():
                    s = row.get(c2, Fraction(0)) - f * v
                    if s:
                        row[c2] = s
                    else:
                        row.pop(c2, None)
            else:
                f = row[c]
                pivots[c] = {c2: v / f for c2, v in row.items()}
                break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        # each pivot row only involves smaller column indices
        for c in sorted(pivots):
            row = pivots[c]
            s = Fraction(0)
            for c2, v in row.items():
                if c2 != c:
                    s += v * vec[c2]
            vec[c] = -s
        basis.append(vec)
    return basis


def color_shift_elem(e, inverse=False):
    """Shift every color by one (via rho) and twist all coefficients."""
    r = e.r
    images = rho_map(r, inverse=inverse)
    step = prev_color if inverse else next_color
    word = tuple(a if a in ORIENTED else step(a, r) for a in e.word)
    out = BimElement(r, word, {})
    for t, c in e.terms.items():
        contents = [apply_map(p, images) for p in e._config(t, c)]
        out = out + BimElement.from_config(r, word, contents)
    return out


def color_shift_mor(f, inverse=False):
    """Conjugate a morphism by the color shift."""
    r = f.r
    step = prev_color if inverse else next_color
    src = tuple(a if a in ORIENTED else step(a, r) for a in f.src)
    images = {}
    for t in all_tags(src):
        e = color_shift_elem(basis_element(r, src, t), inverse=not inverse)
        images[t] = color_shift_elem(f(e), inverse=inverse)
    return Morphism(r, src,
                    tuple(a if a in ORIENTED else step(a, r) for a in f.tgt),
                    f.deg, images, "shift(%s)" % f.name)


def v6(i, j, r):
    """
    Six-valent vertex B_i B_j B_i -> B_j B_i B_j for adjacent colors;
    degree 0, normalized so the bottom basis element maps to the bottom
    basis element with coefficient 1.
    """
    if not colors_adjacent(i, j, r):
        raise ValueError("colors %d, %d are not adjacent mod %d" % (i, j, r))
    key = (r, i, j)
    if key in _V6_CACHE:
        return _V6_CACHE[key]
    # reduce to a base pair by conjugating with the color shift
    if (i, j) not in ((1, 2), (2, 1)):
        if j == next_color(i, r):
            base = v6(1, 2, r)
            k = i - 1
        else:
            base = v6(2, 1, r)
            k = (i - 2) % r
        f = base
        for _ in range(k):
            f = color_shift_mor(f)
        f.name = "v6(%d,%d)" % (i, j)
        _V6_CACHE[key] = f
        return f
    maps = hom_basis(r, (i, j, i), (j, i, j), 0)
    bottom = (0, 0, 0)
    cands = []
    for f in maps:
        c = f.images[bottom].terms.get(bottom)
        if c is not None and not (c - one(r)).is_zero():
            f = scale_mor(1 / c.terms[(0,) * (r + 1)], f)
            c = f.images[bottom].terms.get(bottom)
        if c is not None:
            cands.append(f)
    if len(maps) != 1 or not cands:
        raise RuntimeError("six-vertex space has dimension %d" % len(maps))
    f = cands[0]
    f.name = "v6(%d,%d)" % (i, j)
    _V6_CACHE[key] = f
    return f


def box(i, r):
    """Empty word -> empty word, multiplication by x_i; degree 2."""
    img = BimElement(r, (), {(): xvar(i, r)})
    return Morphism(r, (), (), 2, {(): img}, "box(%d)" % i)


def boxy(r):
    """Empty word -> empty word, multiplication by y; degree 2."""
    img = BimElement(r, (), {(): yvar(r)})
    return Morphism(r, (), (), 2, {(): img}, "box(y)")


def cap_one(i, r):
    """One-color cap B_i B_i -> R: merge then enddot; degree 0."""
    return compose_mor(enddot(i, r), merge(i, r))


def cup_one(i, r):
    """One-color cup R -> B_i B_i: startdot then split; degree 0."""
    return compose_mor(split(i, r), startdot(i, r))


# -- decompositions and the twist weight check --

def decompose_witness(kind, r, i=None, j=None):
    """
    Explicit maps realizing the direct-sum decompositions used at the
    Grothendieck-group level.  Returns (description, pairs) where pairs is
    a list of (name, morphism); verification is done by the caller via
    mor_equal / is_zero_mor.
    """
    if kind == "S1":
        ii = idmor(r, (i,))
        i1 = split(i, r)
        p1 = tensor_mor(enddot(i, r), ii)
        raw = tensor_mor(ii, startdot(i, r))
        corr = compose_mor(i1, p1, raw)
        i2 = sum_mor(raw, scale_mor(-1, corr))
        p2 = merge(i, r)
        return ("B_i B_i = B_i + B_i{2}",
                [("i1", i1), ("p1", p1), ("i2", i2), ("p2", p2)])
    if kind == "S2":
        return ("B_i B_j = B_j B_i (distant)",
                [("f", v4(i, j, r)), ("g", v4(j, i, r))])
    if kind == "S3":
        return ("B_i B_j B_i + B_j{2} = B_j B_i B_j + B_i{2} (adjacent)",
                s3_matrix(i, j, r))
    if kind == "S4":
        return ("B_rho B_i = B_{i+1} B_rho",
                [("f", m4("ur", i, r)), ("g", m4("ul", next_color(i, r), r))])
    if kind == "tiso2":
        f = None
        word = ("+",) * r + (i,)
        col = i
        for k in range(r):
            pos = r - 1 - k
            step = tensor_mor(idmor(r, word[:pos]), m4("ur", col, r),
                              idmor(r, ("+",) * k))
            f = step if f is None else compose_mor(step, f)
            word = word[:pos] + (next_color(col, r), "+") + ("+",) * k
            col = next_color(col, r)
        g = None
        for k in range(r):
            step = tensor_mor(idmor(r, (i,) * 0 + ("+",) * k),
                              m4("ul", col, r),
                              idmor(r, ("+",) * (r - 1 - k)))
            g = step if g is None else compose_mor(step, g)
            col = prev_color(col, r)
        return ("B_rho^r B_i = B_i B_rho^r",
                [("f", f), ("g", g)])
    raise ValueError("unknown witness kind: %r" % kind)


def s3_matrix(i, j, r):
    """
    2x2 matrix witnesses for the adjacent-colors direct sum equivalence.
    Entries are (name, morphism); the caller assembles and verifies the
    matrix identities.
    """
    ii, jj = idmor(r, (i,)), idmor(r, (j,))
    A = compose_mor(tensor_mor(jj, startdot(i, r), jj), split(j, r))
    B = compose_mor(merge(i, r), tensor_mor(ii, enddot(j, r), ii))
    Ap = compose_mor(tensor_mor(ii, startdot(j, r), ii), split(i, r))
    Bp = compose_mor(merge(j, r), tensor_mor(jj, enddot(i, r), jj))
    return [("v6", v6(i, j, r)), ("A", A), ("B", B),
            ("v6'", v6(j, i, r)), ("A'", Ap), ("B'", Bp)]


def twist_weight_check(e):
    """
    For an element on a word with net twist k: left and right multiplication
    by the invariant sum x_1 + ... + x_r differ by k*y.
    """
    r = e.r
    s = zero(r)
    for k in range(1, r + 1):
        s = s + xvar(k, r)
    knet = (sum(1 for a in e.word if a == "+")
            - sum(1 for a in e.word if a == "-"))
    lhs = e.lmul(s) - e.rmul(s)
    rhs = e.lmul(yvar(r) * knet)
    return lhs == rhs


if __name__ == "__main__":
    import doctest
    doctest.testmod()
