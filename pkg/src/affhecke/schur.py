"""
The affine q-Schur algebra realized through its action on tensor space.

Elements are Q(q)-linear combinations of words in the generators E_i,
E_{-i}, K_i^{+-1}, R^{+-1} (1 <= i <= n) and idempotents 1_lambda for
compositions lambda of r into n parts.  Equality is decided by the
faithful action on pure tensors e_{t_1} x ... x e_{t_r} over a finite
window of indices.

Letters of a word, innermost (rightmost) factor acting first:
    ("E", i)   E_i         ("F", i)   E_{-i}
    ("K", i, s)  K_i^s     ("R", s)   R^s        ("P", lam)  1_lam

>>> n, r = 4, 2
>>> v = act([("E", 2)], {(3, 3): RatQ([1])}, n)
>>> sorted((t, str(c)) for t, c in v.items())
[((2, 3), 'q^-1'), ((3, 2), '1')]
"""

__all__ = [
    "compositions", "weight_of", "act", "equal", "weight_project",
    "bilinear_form", "sigma_embed", "rho_antiinv", "iota",
    "word_length", "elem_length", "parse_genword", "genword_str",
    "presentation_relations", "RatQ",
]

from itertools import product

from .ratq import RatQ, qint

_ONE = RatQ([1])


def compositions(n, r):
    """All lambda in N^n with sum r, in lexicographic order."""
    out = []

    def rec(prefix, rest):
        if len(prefix) == n - 1:
            out.append(tuple(prefix) + (rest,))
            return
        for v in range(rest + 1):
            rec(prefix + [v], rest - v)
    rec([], r)
    return out


def weight_of(t, n):
    """Weight of the pure tensor e_t: counts of residues 1..n mod n."""
    lam = [0] * n
    for tj in t:
        lam[(tj - 1) % n] += 1
    return tuple(lam)


def _act_letter(letter, vec, n):
    out = {}

    def emit(t, c):
        s = out.get(t, RatQ([])) + c
        if s.is_zero():
            out.pop(t, None)
        else:
            out[t] = s

    kind = letter[0]
    if kind == "P":
        lam = letter[1]
        for t, c in vec.items():
            if weight_of(t, n) == lam:
                emit(t, c)
        return out
    if kind == "R":
        s = letter[1]
        for t, c in vec.items():
            emit(tuple(tj + s for tj in t), c)
        return out
    if kind == "K":
        i, s = letter[1], letter[2]
        for t, c in vec.items():
            count = sum(1 for tj in t if (tj - i) % n == 0)
            emit(t, c * RatQ.q_power(s * count))
        return out
    i = letter[1]
    if kind == "E":
        # E_i at slot k, K_i K_{i+1}^-1 to the right
        for t, c in vec.items():
            for k in range(len(t)):
                if (t[k] - 1 - i) % n != 0:
                    continue
                p = 0
                for tj in t[k + 1:]:
                    if (tj - i) % n == 0:
                        p += 1
                    elif (tj - i - 1) % n == 0:
                        p -= 1
                emit(t[:k] + (t[k] - 1,) + t[k + 1:], c * RatQ.q_power(p))
        return out
    if kind == "F":
        # E_{-i} at slot k, K_i^-1 K_{i+1} to the left
        for t, c in vec.items():
            for k in range(len(t)):
                if (t[k] - i) % n != 0:
                    continue
                p = 0
                for tj in t[:k]:
                    if (tj - i) % n == 0:
                        p -= 1
                    elif (tj - i - 1) % n == 0:
                        p += 1
                emit(t[:k] + (t[k] + 1,) + t[k + 1:], c * RatQ.q_power(p))
        return out
    raise ValueError("unknown letter: %r" % (letter,))


def act(word, vec, n):
    """Act by a word of letters on a tensor vector, rightmost letter first."""
    for letter in reversed(word):
        vec = _act_letter(letter, vec, n)
        if not vec:
            return {}
    return vec


def act_elem(elem, vec, n):
    """Act by a linear combination {word: coeff}."""
    out = {}
    for word, coeff in elem.items():
        for t, c in act(word, vec, n).items():
            s = out.get(t, RatQ([])) + coeff * c
            if s.is_zero():
                out.pop(t, None)
            else:
                out[t] = s
    return out


def word_length(word):
    return len(word)


def elem_length(elem):
    return max((len(w) for w in elem), default=0)


def default_window(x, y, n):
    return n + 2 * max(elem_length(x), elem_length(y)) + 2


def equal(x, y, n, r, window=None):
    """
    Tensor-space equality oracle: true iff x and y act identically on every
    pure tensor with indices in [0, window), where window defaults to
    n + 2*(max word length) + 2.

    Every generator action commutes with adding n to any single tensor
    coordinate (all coefficients only read residues mod n, and R shifts all
    coordinates uniformly), so the result is independent of the window as
    soon as it covers a full residue window [0, n)^r.  The enumeration
    below therefore runs over [0, n)^r; see shift_equivariant for the
    property test backing this reduction.
    """
    if window is None:
        window = default_window(x, y, n)
    if window < n:
        raise ValueError("window %d smaller than n = %d" % (window, n))
    for t in product(range(n), repeat=r):
        if act_elem(x, {t: _ONE}, n) != act_elem(y, {t: _ONE}, n):
            return False
    return True


def equal_exhaustive(x, y, n, r, window):
    """Reference oracle enumerating the full window; for cross-checks."""
    for t in product(range(window), repeat=r):
        if act_elem(x, {t: _ONE}, n) != act_elem(y, {t: _ONE}, n):
            return False
    return True


def shift_equivariant(word, t, n, j=None):
    """
    Check act(word, e_{t + n e_j}) equals the corresponding shift of
    act(word, e_t); with j = None, shift all coordinates at once.
    """
    js = range(len(t)) if j is None else [j]
    for jj in js:
        shifted = tuple(tk + n * (1 if k == jj or j is None else 0)
                        for k, tk in enumerate(t))
        if j is None:
            shifted = tuple(tk + n for tk in t)
        a = act(word, {shifted: _ONE}, n)
        b = act(word, {t: _ONE}, n)
        bshift = {}
        for s, c in b.items():
            key = tuple(sk + n * (1 if k == jj or j is None else 0)
                        for k, sk in enumerate(s))
            if j is None:
                key = tuple(sk + n for sk in s)
            bshift[key] = c
        if a != bshift:
            return False
    return True


def weight_project(lam, vec, n):
    return _act_letter(("P", tuple(lam)), vec, n)


def bilinear_form(v, w):
    """Factorwise form with <e_s, e_t> = delta_{st}."""
    out = RatQ([])
    for t, c in v.items():
        if t in w:
            out = out + c * w[t]
    return out


# -- algebra-level maps --

def _scale(elem, c):
    return {w: cw * c for w, cw in elem.items()}


def mul_elems(a, b):
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            s = out.get(w, RatQ([])) + ca * cb
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
    return out


def sigma_embed(symbol, n, r):
    """
    Image of a Hecke generator in the Schur algebra.  Symbols: "b1".."br",
    "rho", "rho^-1"; "b<i>.alt" gives the second displayed form of b_i.
    """
    if not 3 <= r < n:
        raise ValueError("requires 3 <= r < n (standing assumption)")
    unit_r = ("P", (1,) * r + (0,) * (n - r))
    alt = symbol.endswith(".alt")
    if alt:
        symbol = symbol[:-4]
    if symbol == "rho":
        word = ([("F", i) for i in range(n, r, -1)] +
                [("F", i) for i in range(1, r + 1)])
        if alt:
            word = ([("F", n)] + [("F", i) for i in range(1, r)] +
                    [("F", i) for i in range(n - 1, r - 1, -1)])
    elif symbol == "rho^-1":
        word = ([("E", i) for i in range(r, 0, -1)] +
                [("E", i) for i in range(r + 1, n + 1)])
        if alt:
            word = ([("E", i) for i in range(r, n)] +
                    [("E", i) for i in range(r - 1, 0, -1)] + [("E", n)])
    elif symbol.startswith("b"):
        i = int(symbol[1:])
        if not 1 <= i <= r:
            raise ValueError("color out of range: %s" % symbol)
        if i < r:
            word = [("E", i), ("F", i)] if alt else [("F", i), ("E", i)]
        else:
            if alt:
                raise ValueError("b%d has a single displayed form" % r)
            word = ([("F", j) for j in range(n, r - 1, -1)] +
                    [("E", j) for j in range(r, n + 1)])
    else:
        raise ValueError("unknown symbol: %s" % symbol)
    return {(unit_r,) + tuple(word) + (unit_r,): _ONE}


def rho_antiinv(elem, n):
    """
    The anti-involution with E_i -> q K_i K_{i+1}^-1 E_{-i},
    E_{-i} -> q K_i^-1 K_{i+1} E_i, K_i -> K_i, R -> R^-1, 1_lam -> 1_lam.
    """
    out = {}
    for word, coeff in elem.items():
        img = {(): coeff}
        for letter in word:
            kind = letter[0]
            if kind == "E":
                i = letter[1]
                j = i % n + 1
                piece = {(("K", i, 1), ("K", j, -1), ("F", i)): RatQ.q()}
            elif kind == "F":
                i = letter[1]
                j = i % n + 1
                piece = {(("K", i, -1), ("K", j, 1), ("E", i)): RatQ.q()}
            elif kind == "R":
                piece = {(("R", -letter[1]),): _ONE}
            else:
                piece = {(letter,): _ONE}
            img = mul_elems(piece, img)  # reversal: prepend
        for w, c in img.items():
            s = out.get(w, RatQ([])) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
    return out


def iota(elem, n):
    """
    Termwise embedding into the algebra at n+1: pads idempotents with a
    zero part and replaces E_{+-n} by the displayed two-letter words.
    Only defined on words over E_{+-i} and idempotents.
    """
    out = {}
    for word, coeff in elem.items():
        new = []
        for letter in word:
            kind = letter[0]
            if kind == "P":
                new.append(("P", tuple(letter[1]) + (0,)))
            elif kind == "E":
                if letter[1] == n:
                    new += [("E", n), ("E", n + 1)]
                else:
                    new.append(letter)
            elif kind == "F":
                if letter[1] == n:
                    new += [("F", n + 1), ("F", n)]
                else:
                    new.append(letter)
            else:
                raise ValueError("iota undefined on letter %r" % (letter,))
        out[tuple(new)] = coeff
    return out


# -- parsing and printing --

def parse_genword(text, n):
    """
    Parse a whitespace-separated generator word: E1, E-2, K3, K3^-1, R,
    R^-1, 1[(1,1,1,0)].
    """
    word = []
    for tok in text.split():
        if tok.startswith("1[") and tok.endswith("]"):
            lam = tuple(int(x) for x in tok[2:-1].strip("()").split(",") if x)
            if len(lam) != n:
                raise ValueError("idempotent has %d parts, expected %d"
                                 % (len(lam), n))
            word.append(("P", lam))
        elif tok == "R":
            word.append(("R", 1))
        elif tok == "R^-1":
            word.append(("R", -1))
        elif tok.startswith("K"):
            if tok.endswith("^-1"):
                word.append(("K", int(tok[1:-3]), -1))
            else:
                word.append(("K", int(tok[1:]), 1))
        elif tok.startswith("E-"):
            word.append(("F", int(tok[2:])))
        elif tok.startswith("E"):
            word.append(("E", int(tok[1:])))
        else:
            raise ValueError("bad generator token: %s" % tok)
    for letter in word:
        if letter[0] in "EFK" and not 1 <= letter[1] <= n:
            raise ValueError("index out of range in %r" % (letter,))
    return tuple(word)


def genword_str(word):
    parts = []
    for letter in word:
        kind = letter[0]
        if kind == "E":
            parts.append("E%d" % letter[1])
        elif kind == "F":
            parts.append("E-%d" % letter[1])
        elif kind == "K":
            parts.append("K%d" % letter[1] + ("^-1" if letter[2] < 0 else ""))
        elif kind == "R":
            parts.append("R" + ("^-1" if letter[1] < 0 else ""))
        else:
            parts.append("1[(%s)]" % ",".join(str(x) for x in letter[1]))
    return " ".join(parts)


# -- the defining relations, as (case id, lhs, rhs) element pairs --

def presentation_relations(n, r):
    """
    Yield (case_id, lhs, rhs) for every instance of the defining relations
    over the given n, r (idempotent relations instantiated per lambda).
    """
    lams = compositions(n, r)

    def albar(i):
        a = [0] * n
        a[i - 1] += 1
        a[i % n] -= 1
        return tuple(a)

    def addw(lam, al):
        return tuple(a + b for a, b in zip(lam, al))

    # idempotent orthogonality and completeness
    for li, lam in enumerate(lams):
        for mu in lams[li:li + 2]:
            lhs = {(("P", lam), ("P", mu)): _ONE}
            rhs = {(("P", lam),): _ONE} if lam == mu else {}
            yield ("idem-%s-%s" % (lam, mu), lhs, rhs)
    yield ("idem-sum", {(("P", lam),): _ONE for lam in lams}, {(): _ONE})
    # weight shifts E_{+-i} 1_lam = 1_{lam +- albar_i} E_{+-i}
    for i in range(1, n + 1):
        for lam in lams:
            up = addw(lam, albar(i))
            dn = addw(lam, tuple(-a for a in albar(i)))
            lhs = {(("E", i), ("P", lam)): _ONE}
            rhs = ({(("P", up), ("E", i)): _ONE}
                   if up in set(lams) else {})
            yield ("shift-E%d-%s" % (i, lam), lhs, rhs)
            lhs = {(("F", i), ("P", lam)): _ONE}
            rhs = ({(("P", dn), ("F", i)): _ONE}
                   if dn in set(lams) else {})
            yield ("shift-F%d-%s" % (i, lam), lhs, rhs)
    # commutators
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = {(("E", i), ("F", j)): _ONE, (("F", j), ("E", i)): -_ONE}
            if i == j:
                rhs = {}
                for lam in lams:
                    c = qint(lam[i - 1] - lam[i % n])
                    if not c.is_zero():
                        rhs[(("P", lam),)] = c
            else:
                rhs = {}
            yield ("comm-%d-%d" % (i, j), lhs, rhs)
    # Serre relations for cyclically adjacent pairs, both signs
    qq = RatQ.from_laurent({1: 1, -1: 1})
    for i in range(1, n + 1):
        for j in (i % n + 1, (i - 2) % n + 1):
            if j == i:
                continue
            for s in ("E", "F"):
                a, b = (s, i), (s, j)
                lhs = {(a, a, b): _ONE, (b, a, a): _ONE}
                rhs = {(a, b, a): qq}
                yield ("serre-%s-%d-%d" % (s, i, j), lhs, rhs)
    # distant commutativity, both signs
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (j - i) % n in (1, n - 1):
                continue
            for s in ("E", "F"):
                lhs = {((s, i), (s, j)): _ONE}
                rhs = {((s, j), (s, i)): _ONE}
                yield ("distant-%s-%d-%d" % (s, i, j), lhs, rhs)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
