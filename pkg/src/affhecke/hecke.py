"""
The extended affine Hecke algebra over Q(q): T-basis arithmetic with the
quadratic relation T_s^2 = (q^2 - 1) T_s + q^2, Kazhdan-Lusztig generators
b_i = q^-1 (1 + T_s), the bar involution, and the Kazhdan-Lusztig basis
elements T_rho^k C'_w computed by the classical recursion.

>>> r = 3
>>> h = t_gen(1, r)
>>> print(print_element(mul(h, h)))
(q^2 - 1)*T[s1] + q^2*T[e]
>>> print(print_element(kl_gen(1, r)))
q^-1*T[s1] + q^-1*T[e]
"""

__all__ = [
    "HeckeElement", "unit", "t_basis", "t_gen", "t_rho", "mul", "smul",
    "add", "sub", "kl_gen", "bar", "kl_basis", "braid_image",
    "print_element", "support_sorted",
]

from .ratq import RatQ
from .weyl import (AffinePermutation, identity, from_generator, compose,
                   normal_form, length)


# A HeckeElement is a dict AffinePermutation -> RatQ with zero values pruned.
HeckeElement = dict

_ONE = RatQ([1])


def _prune(d):
    return {w: c for w, c in d.items() if not c.is_zero()}


def unit(r):
    return {identity(r): _ONE}


def t_basis(w):
    return {w: _ONE}


def t_gen(i, r):
    return {from_generator("s%d" % i, r): _ONE}


def t_rho(r, k=1):
    g = from_generator("rho" if k >= 0 else "rho^-1", r)
    out = identity(r)
    for _ in range(abs(k)):
        out = compose(out, g)
    return {out: _ONE}


def add(a, b):
    out = dict(a)
    for w, c in b.items():
        s = out.get(w, RatQ([])) + c
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s
    return out


def sub(a, b):
    return add(a, {w: -c for w, c in b.items()})


def smul(c, a):
    if isinstance(c, int):
        c = RatQ([c])
    if c.is_zero():
        return {}
    return {w: c * cw for w, cw in a.items()}


def _mul_letter(a, i, r):
    """Right-multiply by T_{sigma_i}, using the quadratic relation."""
    s = from_generator("s%d" % i, r)
    q2m1 = RatQ([-1, 0, 1], 0)  # q^2 - 1
    q2 = RatQ([1], 2)
    out = {}
    for w, c in a.items():
        if w.has_descent(i):
            # T_w T_s = (q^2 - 1) T_w + q^2 T_{ws}
            ws = compose(w, s)
            for key, val in ((w, q2m1 * c), (ws, q2 * c)):
                cur = out.get(key, RatQ([])) + val
                if cur.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = cur
        else:
            ws = compose(w, s)
            cur = out.get(ws, RatQ([])) + c
            if cur.is_zero():
                out.pop(ws, None)
            else:
                out[ws] = cur
    return out


def mul(a, b):
    """Product of two elements written in the T-basis."""
    if not a or not b:
        return {}
    r = next(iter(a)).r
    out = {}
    for v, cv in b.items():
        k, word = normal_form(v)
        # T_v = T_rho^k T_{word}; T_rho-multiplication is relabeling
        rho_k = next(iter(t_rho(r, k))) if k else identity(r)
        cur = {compose(w, rho_k): cw * cv for w, cw in a.items()}
        for i in word:
            cur = _mul_letter(cur, i, r)
        out = add(out, cur)
    return out


def kl_gen(i, r):
    """b_i = q^-1 (1 + T_{sigma_i})."""
    qi = RatQ([1], -1)
    return add(smul(qi, unit(r)), smul(qi, t_gen(i, r)))


def _t_inv_letter(i, r):
    """T_{sigma_i}^{-1} = q^-2 T_{sigma_i} + (q^-2 - 1) T_e."""
    return add(smul(RatQ([1], -2), t_gen(i, r)),
               smul(RatQ([1, 0, -1], -2), unit(r)))


def bar(a):
    """
    The bar involution: q -> q^-1, T_w -> T_{w^-1}^-1 on the non-extended
    part, T_rho -> T_rho.
    """
    if not a:
        return {}
    r = next(iter(a)).r
    out = {}
    for w, c in a.items():
        k, word = normal_form(w)
        img = t_rho(r, k)
        for i in word:
            img = mul(img, _t_inv_letter(i, r))
        out = add(out, smul(c.bar(), img))
    return out


def kl_basis(w, budget=10, _memo=None):
    """
    The Kazhdan-Lusztig basis element T_rho^k C'_{w'} for w = rho^k w'.
    Raises ValueError when length(w) exceeds the budget.
    """
    k, word = normal_form(w)
    if len(word) > budget:
        raise ValueError("length %d exceeds budget %d" % (len(word), budget))
    r = w.r
    if _memo is None:
        _memo = {}
    cw = _kl_nonextended(word, r, _memo)
    return mul(t_rho(r, k), cw) if k else cw


def _kl_nonextended(word, r, memo):
    key = tuple(word)
    if key in memo:
        return memo[key]
    if not word:
        out = unit(r)
        memo[key] = out
        return out
    head, rest = word[0], word[1:]
    m = mul(kl_gen(head, r), _kl_nonextended(rest, r, memo))
    # remove lower KL terms whose coefficient has a nonzero constant part
    target_len = len(word)
    while True:
        cands = [(length(y), y, c) for y, c in m.items()]
        cands.sort(key=lambda t: -t[0])
        changed = False
        for ly, y, c in cands:
            if ly >= target_len:
                continue
            gamma = c.constant_term()
            if gamma:
                _, yword = normal_form(y)
                m = sub(m, smul(RatQ([gamma]), _kl_nonextended(yword, r, memo)))
                changed = True
                break
        if not changed:
            break
    memo[key] = m
    return m


def braid_image(word, r):
    """
    Image of an extended braid word in the Hecke algebra.  Letters:
    "s<i>", "s<i>^-1", "rho", "rho^-1".
    """
    out = unit(r)
    for name in word:
        if name == "rho":
            out = mul(out, t_rho(r, 1))
        elif name == "rho^-1":
            out = mul(out, t_rho(r, -1))
        elif name.endswith("^-1"):
            i = int(name[1:-3])
            out = mul(out, _t_inv_letter(i, r))
        else:
            i = int(name[1:])
            out = mul(out, t_gen(i, r))
    return out


def support_sorted(a):
    """Deterministic ordering of the support, by (length, rho power, window)."""
    return sorted(a, key=lambda w: (length(w), w.rho_power(), w.window))


def _word_str(w):
    k, word = normal_form(w)
    parts = (["rho"] * k if k >= 0 else ["rho^-1"] * (-k))
    parts += ["s%d" % i for i in word]
    return " ".join(parts) or "e"


def print_element(a):
    """Render in the T-basis, longest terms first."""
    if not a:
        return "0"
    parts = []
    for w in reversed(support_sorted(a)):
        c = a[w]
        cs = str(c)
        if cs == "1":
            cs = ""
        elif " " in cs or "/" in cs:
            cs = "(%s)*" % cs
        else:
            cs = cs + "*"
        parts.append("%sT[%s]" % (cs, _word_str(w)))
    return " + ".join(parts)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
