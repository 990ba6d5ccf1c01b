"""
Complexes of bimodules attached to extended affine braid words, with a
d-squared checker and the class map to the Hecke algebra.

A braid letter yields a one- or two-term complex:

    s<i>      :  R{2} -> B_i          (B_i in cohomological degree 0)
    s<i>^-1   :  B_i{-2} -> R{-2}     (B_i{-2} in cohomological degree 0)
    rho       :  B_rho in degree 0
    rho^-1    :  B_rho^{-1} in degree 0

Words are tensor products of these, totalized with a sign (-1)^a on the
second-factor differential out of cohomological degree a.  Internal shifts
{t} raise polynomial degrees by t; every differential entry is checked to
be degree preserving.

The class map sends a summand (word, shift) in cohomological degree a to
(-1)^a q^shift times the product of q*b_i per color letter and T_rho^{+-1}
per oriented letter.
"""

__all__ = ["BimComplex", "braid_complex", "tensor", "verify_d2",
           "euler_class", "parse_braid"]

from .ratq import RatQ
from . import hecke
from .soergel import (idmor, compose_mor, tensor_mor, sum_mor, scale_mor,
                      is_zero_mor, startdot, enddot, unoriented_count)


class BimComplex:
    """
    fields:
      r      -- number of colors
      terms  -- {cohomological degree: [(word, shift), ...]}
      diff   -- {a: matrix}; matrix[row][col] is the Morphism from
                terms[a][col] to terms[a+1][row], or None for zero
    """

    __slots__ = ("r", "terms", "diff")

    def __init__(self, r, terms, diff):
        self.r = r
        self.terms = terms
        self.diff = diff

    def degrees(self):
        return sorted(self.terms)

    def summands(self):
        return [(a, k, ws) for a in self.degrees()
                for k, ws in enumerate(self.terms[a])]

    def __repr__(self):
        parts = []
        for a in self.degrees():
            names = ["%s{%d}" % ("".join(str(x) for x in w) or "R", s)
                     for w, s in self.terms[a]]
            parts.append("%d: %s" % (a, " + ".join(names)))
        return "BimComplex(" + "; ".join(parts) + ")"


def _one_term(r, word, shift=0, deg=0):
    return BimComplex(r, {deg: [(tuple(word), shift)]}, {})


def unit_complex(r):
    return _one_term(r, ())


def _letter_complex(name, r):
    if name == "rho":
        return _one_term(r, ("+",))
    if name == "rho^-1":
        return _one_term(r, ("-",))
    if name.endswith("^-1"):
        i = int(name[1:-3])
        terms = {0: [((i,), -2)], 1: [((), -2)]}
        diff = {0: [[enddot(i, r)]]}
        return BimComplex(r, terms, diff)
    i = int(name[1:])
    terms = {-1: [((), 2)], 0: [((i,), 0)]}
    diff = {-1: [[startdot(i, r)]]}
    return BimComplex(r, terms, diff)


def parse_braid(text):
    """Split a braid word like "s1 s2^-1 rho" into letters."""
    letters = text.split()
    for name in letters:
        if name in ("rho", "rho^-1"):
            continue
        core = name[:-3] if name.endswith("^-1") else name
        if not (core.startswith("s") and core[1:].isdigit()):
            raise ValueError("bad braid letter: %r" % name)
    return letters


def braid_complex(word, r):
    """Complex of a braid word (list of letters or a string)."""
    if isinstance(word, str):
        word = parse_braid(word)
    c = unit_complex(r)
    for name in word:
        c = tensor(c, _letter_complex(name, r))
    return c


def tensor(c1, c2):
    """Tensor product of complexes, with the sign (-1)^a on the second
    differential out of first-factor degree a."""
    r = c1.r
    terms = {}
    index = {}
    for a1 in c1.degrees():
        for k1, (w1, s1) in enumerate(c1.terms[a1]):
            for a2 in c2.degrees():
                for k2, (w2, s2) in enumerate(c2.terms[a2]):
                    a = a1 + a2
                    lst = terms.setdefault(a, [])
                    index[(a1, k1, a2, k2)] = (a, len(lst))
                    lst.append((w1 + w2, s1 + s2))
    diff = {}
    for (a1, k1, a2, k2), (a, col) in index.items():
        w1, _ = c1.terms[a1][k1]
        w2, _ = c2.terms[a2][k2]
        if a + 1 in terms:
            m = diff.setdefault(a, [[None] * len(terms[a])
                                    for _ in terms[a + 1]])
        else:
            continue
        d1 = c1.diff.get(a1)
        if d1 is not None:
            for row1 in range(len(c1.terms[a1 + 1])):
                f = d1[row1][k1]
                if f is None:
                    continue
                _, rown = index[(a1 + 1, row1, a2, k2)]
                m[rown][col] = tensor_mor(f, idmor(r, w2))
        d2 = c2.diff.get(a2)
        if d2 is not None:
            sign = -1 if a1 % 2 else 1
            for row2 in range(len(c2.terms[a2 + 1])):
                f = d2[row2][k2]
                if f is None:
                    continue
                _, rown = index[(a1, k1, a2 + 1, row2)]
                g = tensor_mor(idmor(r, w1), f)
                m[rown][col] = g if sign == 1 else scale_mor(-1, g)
    return BimComplex(r, terms, diff)


def _entry_degree_ok(f, s_src, s_tgt):
    # plain polynomial degree of the map must equal the shift drop
    plain = f.deg + unoriented_count(f.tgt) - unoriented_count(f.src)
    return plain == s_src - s_tgt


def verify_d2(c):
    """
    Check that consecutive differentials compose to zero, entry by entry,
    and that every differential entry preserves degree.  Returns a report
    dict {ok, failures}.
    """
    failures = []
    for a, m in c.diff.items():
        for row in range(len(m)):
            for col in range(len(m[row])):
                f = m[row][col]
                if f is None:
                    continue
                _, s_src = c.terms[a][col]
                _, s_tgt = c.terms[a + 1][row]
                if not _entry_degree_ok(f, s_src, s_tgt):
                    failures.append(("degree", a, row, col))
    for a in c.degrees():
        m1 = c.diff.get(a)
        m2 = c.diff.get(a + 1)
        if m1 is None or m2 is None:
            continue
        for row in range(len(c.terms[a + 2])):
            for col in range(len(c.terms[a])):
                parts = []
                for mid in range(len(c.terms[a + 1])):
                    f, g = m1[mid][col], m2[row][mid]
                    if f is None or g is None:
                        continue
                    parts.append(compose_mor(g, f))
                if parts and not is_zero_mor(sum_mor(*parts)):
                    failures.append(("d2", a, row, col))
    return {"ok": not failures, "failures": failures}


def _summand_class(word, shift, r):
    out = hecke.smul(RatQ.q_power(shift), hecke.unit(r))
    for a in word:
        if a == "+":
            out = hecke.mul(out, hecke.t_rho(r, 1))
        elif a == "-":
            out = hecke.mul(out, hecke.t_rho(r, -1))
        else:
            out = hecke.mul(out, hecke.smul(RatQ.q(), hecke.kl_gen(a, r)))
    return out


def euler_class(c):
    """Alternating sum of the summand classes in the Hecke algebra."""
    out = {}
    for a in c.degrees():
        for word, shift in c.terms[a]:
            term = _summand_class(word, shift, c.r)
            if a % 2:
                term = hecke.smul(RatQ.from_int(-1), term)
            out = hecke.add(out, term)
    return out
