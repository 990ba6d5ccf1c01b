"""
Command-line front end: element parsing, ad-hoc computations, and the
verification suites.

Report format: one line per case, "SUITE CASE-ID PASS|FAIL [witness]".
Exit status is nonzero iff some case fails.
"""

__all__ = ["main", "run_suite", "parse_hecke_element", "parse_morphism",
           "parse_object", "SUITES"]

import argparse
import re
import sys
import time
from fractions import Fraction

from .ratq import RatQ
from . import weyl, hecke, schur, soergel, relations, rouquier, singular


# -- scalar and element parsing --

def _split_top(text, seps):
    """Split on separators at parenthesis/bracket depth zero."""
    parts, depth, cur = [], 0, ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps and cur.strip():
            # "^-1" and leading signs of exponents are not separators
            if ch == "-" and i > 0 and text[i - 1] in "^*/eE(":
                cur += ch
                i += 1
                continue
            parts.append((cur, ch))
            cur = ""
            i += 1
            continue
        cur += ch
        i += 1
    parts.append((cur, None))
    return parts


def parse_ratq(text):
    """Parse a scalar: sums of monomials c*q^k, fractions, parentheses."""
    text = text.strip()
    while (text.startswith("(") and text.endswith(")")
           and _balanced(text[1:-1])):
        text = text[1:-1].strip()
    pieces = _split_top(text, "+-")
    out = RatQ([])
    sign = 1
    for body, sep in pieces:
        body = body.strip()
        while body.startswith(("-", "+")):
            if body[0] == "-":
                sign = -sign
            body = body[1:].strip()
        if not body:
            if sep == "-":
                sign = -sign
            continue
        out = out + RatQ.from_int(sign) * _parse_product(body)
        sign = -1 if sep == "-" else 1
    return out


def _balanced(text):
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth < 0:
            return False
    return depth == 0


def _parse_product(text):
    out = RatQ([1])
    op = "*"
    for factor, sep in _split_top(text, "*/"):
        factor = factor.strip()
        if factor.startswith("(") and factor.endswith(")"):
            v = parse_ratq(factor)
        elif factor == "q":
            v = RatQ.q()
        elif factor.startswith("q^"):
            v = RatQ.q_power(int(factor[2:]))
        else:
            v = RatQ.from_fraction(Fraction(factor))
        out = out * v if op == "*" else out / v
        op = sep
    return out


_ATOM = re.compile(r"^(?:(?P<scalar>.+)\*)?(?P<kind>[TCb])"
                   r"\[(?P<body>[^\]]*)\]$")


def parse_hecke_element(text, r):
    """Parse sums of scalar*T[word] / C[word] / b[i] into a HeckeElement."""
    out = hecke.unit(r)
    out = hecke.sub(out, out)
    sign = 1
    for body, sep in _split_top(text, "+-"):
        body = body.strip()
        while body.startswith(("-", "+")):
            if body[0] == "-":
                sign = -sign
            body = body[1:].strip()
        if not body:
            if sep == "-":
                sign = -sign
            continue
        m = _ATOM.match(body)
        if not m:
            raise ValueError("bad term: %r" % body)
        c = parse_ratq(m.group("scalar")) if m.group("scalar") else RatQ([1])
        c = c * RatQ.from_int(sign)
        kind, inner = m.group("kind"), m.group("body").strip()
        if kind == "b":
            elem = hecke.kl_gen(int(inner), r)
        else:
            w = weyl.identity(r) if inner in ("", "e") \
                else weyl.from_word(inner, r)
            elem = hecke.t_basis(w) if kind == "T" else hecke.kl_basis(w)
        out = hecke.add(out, hecke.smul(c, elem))
        sign = -1 if sep == "-" else 1
    return out


def parse_object(text, r):
    """Parse a tensor word like "1,+,3" into a letter tuple."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    letters = []
    for tok in text.split(","):
        tok = tok.strip()
        letters.append(tok if tok in ("+", "-") else int(tok))
    soergel.idmor(r, tuple(letters))  # validate
    return tuple(letters)


def parse_morphism(text, r):
    """
    Parse a morphism expression: vcomp(a,b), hcomp(a,b), enddot(i),
    startdot(i), merge(i), split(i), v4(i,j), v6(i,j), cap+, cap-, cup+,
    cup-, m4ur(i), m4ul(i), m4dr(i), m4dl(i), box(i), box(y), id(word).
    """
    text = text.strip()
    for name, s in (("cap", "+"), ("cap", "-"), ("cup", "+"), ("cup", "-")):
        if text == name + s:
            return (soergel.cap_or if name == "cap"
                    else soergel.cup_or)(s, r)
    m = re.match(r"^([a-z0-9]+)\((.*)\)$", text, re.S)
    if not m:
        raise ValueError("bad morphism expression: %r" % text)
    name, inner = m.group(1), m.group(2)
    if name == "id":
        return soergel.idmor(r, parse_object(inner, r))
    args = [a for a, _ in _split_top(inner, ",")]
    if name == "vcomp":
        return soergel.compose_mor(*[parse_morphism(a, r) for a in args])
    if name == "hcomp":
        return soergel.tensor_mor(*[parse_morphism(a, r) for a in args])
    if name == "box" and args[0].strip() == "y":
        return soergel.boxy(r)
    ints = [int(a) for a in args]
    table = {"enddot": soergel.enddot, "startdot": soergel.startdot,
             "merge": soergel.merge, "split": soergel.split,
             "v4": soergel.v4, "v6": soergel.v6, "box": soergel.box}
    if name in table:
        return table[name](*ints, r)
    if name.startswith("m4") and name[2:] in ("ur", "ul", "dr", "dl"):
        return soergel.m4(name[2:], ints[0], r)
    raise ValueError("unknown morphism: %r" % name)


def _object_str(word):
    return ",".join(str(a) for a in word) or "e"


def _bim_str(e):
    if e.is_zero():
        return "0"
    return " + ".join("[%s]*(%s)" % (",".join(str(b) for b in t), p)
                      for t, p in sorted(e.terms.items()))


def _vec_str(vec):
    if not vec:
        return "0"
    return " + ".join("%s*(%s)" % (c, ",".join(str(x) for x in t))
                      for t, c in sorted(vec.items()))


# -- verification suites --

def _require_nr(n, r):
    if not 3 <= r < n:
        raise SystemExit(
            "invalid parameters n=%s r=%s: requires 3 <= r < n "
            "(standing assumption)" % (n, r))


def _adjacent(i, j, r):
    return (i - j) % r in (1, r - 1)


def suite_weyl(r=3, **_):
    cases = []
    e = weyl.identity(r)
    gens = {i: weyl.from_generator("s%d" % i, r) for i in range(1, r + 1)}
    rho = weyl.from_generator("rho", r)
    rhoi = weyl.from_generator("rho^-1", r)
    for i in range(1, r + 1):
        cases.append(("W1-s%d" % i, weyl.compose(gens[i], gens[i]) == e))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            if _adjacent(i, j, r):
                cases.append(("W3-s%d-s%d" % (i, j),
                              weyl.compose(gens[i], gens[j], gens[i])
                              == weyl.compose(gens[j], gens[i], gens[j])))
            else:
                cases.append(("W2-s%d-s%d" % (i, j),
                              weyl.compose(gens[i], gens[j])
                              == weyl.compose(gens[j], gens[i])))
    for i in range(1, r + 1):
        cases.append(("W4-s%d" % i,
                      weyl.compose(rho, gens[i], rhoi)
                      == gens[i % r + 1]))
    cases.append(("rho-inverse", weyl.compose(rho, rhoi) == e))
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            t = weyl.from_generator("t%d" % j, r)
            js = j
            if j == i:
                js = i % r + 1
            elif j == i % r + 1:
                js = i
            want = weyl.from_generator("t%d" % js, r)
            cases.append(("tconj-s%d-t%d" % (i, j),
                          weyl.compose(gens[i], t, gens[i]) == want))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            ti = weyl.from_generator("t%d" % i, r)
            tj = weyl.from_generator("t%d" % j, r)
            cases.append(("tcomm-t%d-t%d" % (i, j),
                          weyl.compose(ti, tj) == weyl.compose(tj, ti)))
    return [(cid, ok, None) for cid, ok in cases]


def suite_hecke(r=3, **_):
    cases = []
    unit = hecke.unit(r)
    q2m1 = RatQ.q_power(2) - RatQ([1])
    ts = {i: hecke.t_gen(i, r) for i in range(1, r + 1)}
    trho = hecke.t_rho(r, 1)
    trhoi = hecke.t_rho(r, -1)
    for i in range(1, r + 1):
        lhs = hecke.mul(ts[i], ts[i])
        rhs = hecke.add(hecke.smul(q2m1, ts[i]),
                        hecke.smul(RatQ.q_power(2), unit))
        cases.append(("H1-s%d" % i, lhs == rhs))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            if _adjacent(i, j, r):
                cases.append(("H3-s%d-s%d" % (i, j),
                              hecke.mul(ts[i], hecke.mul(ts[j], ts[i]))
                              == hecke.mul(ts[j], hecke.mul(ts[i], ts[j]))))
            else:
                cases.append(("H2-s%d-s%d" % (i, j),
                              hecke.mul(ts[i], ts[j])
                              == hecke.mul(ts[j], ts[i])))
    for i in range(1, r + 1):
        conj = hecke.mul(trho, hecke.mul(ts[i], trhoi))
        cases.append(("H4-s%d" % i, conj == ts[i % r + 1]))
    cases.append(("rho-inverse", hecke.mul(trho, trhoi) == unit))
    qpqi = RatQ.q() + RatQ.q_power(-1)
    for i in range(1, r + 1):
        b = hecke.kl_gen(i, r)
        cases.append(("b%d-idempotent" % i,
                      hecke.mul(b, b) == hecke.smul(qpqi, b)))
    return [(cid, ok, None) for cid, ok in cases]


def suite_schur(n=4, r=3, window=None, **_):
    _require_nr(n, r)
    out = []
    for cid, lhs, rhs in schur.presentation_relations(n, r):
        ok = schur.equal(lhs, rhs, n, r, window)
        out.append((cid, ok, None if ok else "tensor mismatch"))
    return out


def suite_soergel(r=3, **_):
    out = []
    for rep in relations.sweep(r):
        witness = None
        if not rep["ok"]:
            witness = "colors=%r part=%r tag=%r" % (
                rep.get("colors"), rep.get("part"), rep.get("tag"))
        out.append((rep["id"], rep["ok"], witness))
    bad = relations.degree_audit(r)
    out.append(("degree-audit", not bad, repr(bad[:3]) if bad else None))
    singles = [(k, i, None) for k in ("S1", "S4", "tiso2")
               for i in range(1, r + 1)]
    pairs = [(k, i, j) for i in range(1, r + 1) for j in range(1, r + 1)
             if i != j
             for k in (("S3",) if _adjacent(i, j, r) else ("S2",))]
    for kind, i, j in singles + pairs:
        checks = relations.verify_witness(kind, r, i, j)
        ok = all(v for _, v in checks)
        cid = "witness-%s-%d" % (kind, i) if j is None \
            else "witness-%s-%d-%d" % (kind, i, j)
        out.append((cid, ok,
                    None if ok else repr([c for c in checks if not c[1]])))
    return out


def _braid_letters(r):
    out = ["rho", "rho^-1"]
    for i in range(1, r + 1):
        out += ["s%d" % i, "s%d^-1" % i]
    return out


def suite_rouquier(r=3, max_length=2, **_):
    out = []
    letters = _braid_letters(r)
    words = [[]]
    for _ in range(max_length):
        words = [w + [a] for w in words for a in letters]
        for w in words:
            c = rouquier.braid_complex(w, r)
            rep = rouquier.verify_d2(c)
            out.append(("d2-" + "_".join(w), rep["ok"],
                        repr(rep["failures"][:2]) if not rep["ok"] else None))
    crho = rouquier.braid_complex(["rho"], r)
    out.append(("euler-rho",
                rouquier.euler_class(crho) == hecke.t_rho(r, 1), None))
    for w in (["s1"], ["s1^-1"], ["s1", "s2"], ["s2", "rho", "s1^-1"]):
        cw = rouquier.braid_complex(w, r)
        out.append(("euler-" + "_".join(w),
                    rouquier.euler_class(cw) == euler_expected(w, r),
                    None))
    for cid, w1, w2 in (("braid", ["s1", "s2", "s1"], ["s2", "s1", "s2"]),
                        ("rhoconj", ["rho", "s1", "rho^-1"], ["s2"])):
        e1 = rouquier.euler_class(rouquier.braid_complex(w1, r))
        e2 = rouquier.euler_class(rouquier.braid_complex(w2, r))
        out.append(("euler-rewrite-" + cid, e1 == e2, None))
    c1 = rouquier.braid_complex(["s1", "rho"], r)
    c2 = rouquier.braid_complex(["s2^-1"], r)
    out.append(("euler-multiplicative",
                rouquier.euler_class(rouquier.tensor(c1, c2))
                == hecke.mul(rouquier.euler_class(c1),
                             rouquier.euler_class(c2)), None))
    return out


def euler_expected(word, r):
    """Normalized class of a braid word: s_i -> q^2 T_i^-1, s_i^-1 ->
    q^-2 T_i, rho^{+-1} -> T_rho^{+-1}."""
    out = hecke.unit(r)
    for name in word:
        if name == "rho":
            out = hecke.mul(out, hecke.t_rho(r, 1))
        elif name == "rho^-1":
            out = hecke.mul(out, hecke.t_rho(r, -1))
        elif name.endswith("^-1"):
            out = hecke.mul(out, hecke.smul(
                RatQ.q_power(-2), hecke.t_gen(int(name[1:-3]), r)))
        else:
            out = hecke.mul(out, hecke.smul(
                RatQ.q_power(2),
                hecke.braid_image([name + "^-1"], r)))
    return out


def suite_singular(n=4, r=3, **_):
    _require_nr(n, r)
    out = []
    for nn in range(1, 7):
        for k in range(nn + 1):
            out.append(("lemma-%d-%d" % (nn, k),
                        singular.shifted_elementary_identity(nn, k), None))
    for blocks in [(1,) * r, (2,) + (1,) * (r - 2), (1,) * (r - 2) + (2,)]:
        rep = singular.twist_ring_check(blocks)
        out.append(("twist-" + "_".join(str(b) for b in blocks),
                    rep["ok"], repr(rep["failures"][:2]) or None))
    rep = singular.fprime_sweep(n, r, lmax=2, amax=2)
    out.append(("two-forms", rep["ok"], repr(rep["failures"][:2])
                if not rep["ok"] else None))
    rep = singular.quad_sweep(n, r)
    out.append(("double-crossing", rep["ok"], repr(rep["failures"][:2])
                if not rep["ok"] else None))
    rep = singular.bubble_sweep(n, r)
    out.append(("bubbles", rep["ok"], repr(rep["failures"][:2])
                if not rep["ok"] else None))
    for lam in singular.compositions(n, r):
        if 1 <= lam[0] <= 2 and lam[-1] <= 2:
            z = singular.zigzag_check(lam)
            out.append(("zigzag-" + "_".join(str(x) for x in lam),
                        z["ok"], repr(z["failures"][:2])
                        if not z["ok"] else None))
    rep = singular.triangle_check(r, n)
    out.append(("triangle", rep["ok"], repr(rep.get("failures", [])[:2])
                if not rep["ok"] else None))
    out.append(("bubble-sum-zero", singular.eqexpy3_check(r, n), None))
    return out


SUITES = {
    "weyl": suite_weyl,
    "hecke": suite_hecke,
    "schur": suite_schur,
    "soergel": suite_soergel,
    "rouquier": suite_rouquier,
    "singular": suite_singular,
}


def run_suite(name, **params):
    """
    Run one verification suite (or "all").  Returns a report dict with
    keys suite, cases (sorted (case-id, ok, witness) triples), ok, time.
    """
    t0 = time.time()
    if name == "all":
        cases = []
        for sub in ("weyl", "hecke", "schur", "soergel", "rouquier",
                    "singular"):
            cases += [("%s/%s" % (sub, cid), ok, wit)
                      for cid, ok, wit in SUITES[sub](**params)]
    elif name in SUITES:
        cases = SUITES[name](**params)
    else:
        raise SystemExit("unknown suite: %r" % name)
    cases.sort(key=lambda c: c[0])
    return {"suite": name, "cases": cases,
            "ok": all(ok for _, ok, _ in cases), "time": time.time() - t0}


def print_report(report, out=None):
    out = out if out is not None else sys.stdout
    for cid, ok, witness in report["cases"]:
        line = "%s %s %s" % (report["suite"].upper(), cid,
                             "PASS" if ok else "FAIL")
        if witness and not ok:
            line += " " + witness
        print(line, file=out)
    print("%s %s: %d cases, %.1fs" % (
        report["suite"].upper(), "OK" if report["ok"] else "FAILED",
        len(report["cases"]), report["time"]), file=out)
    return 0 if report["ok"] else 1


# -- subcommands --

def _cmd_weyl(args):
    r = args.r
    if args.sub == "nf":
        w = weyl.from_word(args.word, r)
        k, word = weyl.normal_form(w)
        print("rho^%d * %s" % (k, " ".join("s%d" % i for i in word) or "e"))
        print("window: %s" % (w.window,))
        return 0
    w = weyl.from_word(args.word, r)
    kappa = tuple(int(x) for x in args.weight.split(","))
    wt = weyl.GlWeight(kappa, args.m)
    res = weyl.act_weight(w, wt)
    print("(%s; %d)" % (",".join(str(x) for x in res.kappa), res.m))
    return 0


def _cmd_hecke(args):
    r = args.r
    if args.sub == "mul":
        a = parse_hecke_element(args.lhs, r)
        b = parse_hecke_element(args.rhs, r)
        print(hecke.print_element(hecke.mul(a, b)))
        return 0
    # kl: list C'_w for all w with non-extended length <= max-length
    seen = {weyl.identity(r)}
    frontier = list(seen)
    elems = [weyl.identity(r)]
    for _ in range(args.max_length):
        nxt = []
        for w in frontier:
            for i in range(1, r + 1):
                u = weyl.compose(w, weyl.from_generator("s%d" % i, r))
                if u not in seen and weyl.length(u) == weyl.length(w) + 1:
                    seen.add(u)
                    nxt.append(u)
        elems += nxt
        frontier = nxt
    rc = 0
    for w in sorted(elems, key=lambda u: (weyl.length(u), u.window)):
        c = hecke.kl_basis(w)
        bar_ok = hecke.bar(c) == c
        k, word = weyl.normal_form(w)
        name = " ".join("s%d" % i for i in word) or "e"
        print("C[%s] = %s%s" % (name, hecke.print_element(c),
                                "" if bar_ok else "  BAR-FAIL"))
        if not bar_ok:
            rc = 1
    return rc


def _parse_tensor(text):
    return tuple(int(x) for x in text.strip().strip("()").split(","))


def _cmd_schur(args):
    n, r = args.n, args.r
    _require_nr(n, r)
    if args.sub == "act":
        word = schur.parse_genword(args.word, n)
        vec = {_parse_tensor(args.tensor): RatQ([1])}
        res = schur.act(word, vec, n)
        print(_vec_str(res))
        return 0
    if args.sub == "equal":
        x = {schur.parse_genword(args.lhs, n): RatQ([1])}
        y = {schur.parse_genword(args.rhs, n): RatQ([1])}
        ok = schur.equal(x, y, n, r, args.window)
        print("EQUAL" if ok else "DIFFER")
        return 0 if ok else 1
    if args.sub == "sigma-verify":
        rc = 0
        for cid, ok in sigma_verify(n, r):
            print("SIGMA %s %s" % (cid, "PASS" if ok else "FAIL"))
            rc |= 0 if ok else 1
        return rc
    report = run_suite("schur", n=n, r=r, window=args.window)
    return print_report(report)


def sigma_verify(n, r):
    """
    Check that the Hecke generators' images satisfy the Hecke relations,
    that both displayed forms of each b_i agree, and that the images of
    rho and rho^-1 are mutually inverse.  Yields (case-id, ok).
    """
    _require_nr(n, r)
    img = {i: schur.sigma_embed("b%d" % i, n, r) for i in range(1, r + 1)}
    rho = schur.sigma_embed("rho", n, r)
    rhoi = schur.sigma_embed("rho^-1", n, r)
    eq = lambda a, b: schur.equal(a, b, n, r)
    mul = schur.mul_elems
    smul = schur._scale
    unit = {(("P", (1,) * r + (0,) * (n - r)),): RatQ([1])}
    qpqi = RatQ.q() + RatQ.q_power(-1)
    for i in range(1, r + 1):
        yield ("H1-b%d" % i, eq(mul(img[i], img[i]), smul(img[i], qpqi)))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            a, b = img[i], img[j]
            if _adjacent(i, j, r):
                lhs = _elem_add(mul(mul(a, b), a), b)
                rhs = _elem_add(mul(mul(b, a), b), a)
                yield ("H3-b%d-b%d" % (i, j), eq(lhs, rhs))
            else:
                yield ("H2-b%d-b%d" % (i, j), eq(mul(a, b), mul(b, a)))
    for i in range(1, r + 1):
        conj = mul(mul(rho, img[i]), rhoi)
        yield ("H4-b%d" % i, eq(conj, img[i % r + 1]))
    yield ("rho-inverse", eq(mul(rho, rhoi), unit))
    for i in range(1, r):
        alt = schur.sigma_embed("b%d.alt" % i, n, r)
        yield ("b%d-two-forms" % i, eq(img[i], alt))
    for s in ("rho", "rho^-1"):
        alt = schur.sigma_embed(s + ".alt", n, r)
        yield (s + "-two-forms", eq(schur.sigma_embed(s, n, r), alt))


def _elem_add(a, b):
    out = dict(a)
    for w, c in b.items():
        s = out.get(w, RatQ([])) + c
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s
    return out


def _cmd_soergel(args):
    r = args.r
    if args.sub == "check":
        colors = ([int(x) for x in args.colors.split(",")]
                  if args.colors else None)
        rep = relations.check_relation(args.relation, r, colors)
        ok = rep["ok"]
        print("SOERGEL %s %s%s" % (args.relation, "PASS" if ok else "FAIL",
                                   "" if ok else " " + repr(rep)))
        return 0 if ok else 1
    obj = parse_object(args.object, r)
    f = parse_morphism(args.morphism, r)
    if f.src != obj:
        raise SystemExit("morphism source %r does not match object %r"
                         % (f.src, obj))
    for t in soergel.all_tags(obj):
        img = f(soergel.basis_element(r, obj, t))
        print("[%s] -> %s" % (",".join(str(b) for b in t), _bim_str(img)))
    return 0


def _cmd_rouquier(args):
    r = args.r
    word = rouquier.parse_braid(args.braid)
    c = rouquier.braid_complex(word, r)
    if args.sub == "build":
        print(repr(c))
        return 0
    if args.sub == "d2":
        rep = rouquier.verify_d2(c)
        print("D2 %s %s" % ("PASS" if rep["ok"] else "FAIL",
                            "" if rep["ok"] else repr(rep["failures"][:4])))
        return 0 if rep["ok"] else 1
    print(hecke.print_element(rouquier.euler_class(c)))
    return 0


def _cmd_singular(args):
    if args.sub == "lemma":
        ok = singular.shifted_elementary_identity(args.n, args.k)
        print("SINGULAR lemma-%d-%d %s" % (args.n, args.k,
                                           "PASS" if ok else "FAIL"))
        return 0 if ok else 1
    if args.sub == "bubbles":
        lam = tuple(int(x) for x in args.lam.split(","))
        _require_nr(len(lam), sum(lam))
        rc = 0
        for orient in ("ccw", "cw"):
            for m in range(4):
                val = singular.bubble_value_n(lam, orient, m)
                deg = singular.bubble_degree(lam, orient, m)
                print("%s m=%d deg=%d: %s" % (orient, m, deg, val))
                if deg < 0 and not val.is_zero():
                    rc = 1
        return rc
    if args.sub == "triangle":
        rep = singular.triangle_check(args.r, args.n)
        print("SINGULAR triangle %s %s"
              % ("PASS" if rep["ok"] else "FAIL",
                 "" if rep["ok"] else repr(rep["failures"][:4])))
        return 0 if rep["ok"] else 1
    blocks = tuple(int(x) for x in args.blocks.split(","))
    rep = singular.twist_ring_check(blocks)
    print("SINGULAR twist-%s %s %s"
          % ("_".join(str(b) for b in blocks),
             "PASS" if rep["ok"] else "FAIL",
             "" if rep["ok"] else repr(rep["failures"][:4])))
    return 0 if rep["ok"] else 1


def _cmd_verify(args):
    params = {"r": args.r}
    if args.suite in ("schur", "singular", "all"):
        _require_nr(args.n, args.r)
        params["n"] = args.n
    if args.window:
        params["window"] = args.window
    if args.max_length:
        params["max_length"] = args.max_length
    return print_report(run_suite(args.suite, **params))


def build_parser():
    p = argparse.ArgumentParser(prog="affhecke")
    sub = p.add_subparsers(dest="cmd", required=True)

    pw = sub.add_parser("weyl")
    sw = pw.add_subparsers(dest="sub", required=True)
    w_nf = sw.add_parser("nf")
    w_nf.add_argument("--word", required=True)
    w_nf.add_argument("--r", type=int, default=3)
    w_act = sw.add_parser("act")
    w_act.add_argument("--word", required=True)
    w_act.add_argument("--weight", required=True)
    w_act.add_argument("--m", type=int, default=0)
    w_act.add_argument("--r", type=int, default=3)
    pw.set_defaults(func=_cmd_weyl)

    ph = sub.add_parser("hecke")
    sh = ph.add_subparsers(dest="sub", required=True)
    h_mul = sh.add_parser("mul")
    h_mul.add_argument("--lhs", required=True)
    h_mul.add_argument("--rhs", required=True)
    h_mul.add_argument("--r", type=int, default=3)
    h_kl = sh.add_parser("kl")
    h_kl.add_argument("--max-length", type=int, default=3)
    h_kl.add_argument("--r", type=int, default=3)
    ph.set_defaults(func=_cmd_hecke)

    ps = sub.add_parser("schur")
    ss = ps.add_subparsers(dest="sub", required=True)
    s_act = ss.add_parser("act")
    s_act.add_argument("--word", required=True)
    s_act.add_argument("--tensor", required=True)
    s_eq = ss.add_parser("equal")
    s_eq.add_argument("--lhs", required=True)
    s_eq.add_argument("--rhs", required=True)
    ss.add_parser("sigma-verify")
    ss.add_parser("presentation-sweep")
    for sp in (s_act, s_eq) + tuple(ss.choices[k] for k in
                                    ("sigma-verify", "presentation-sweep")):
        sp.add_argument("--n", type=int, default=4)
        sp.add_argument("--r", type=int, default=3)
        sp.add_argument("--window", type=int, default=None)
    ps.set_defaults(func=_cmd_schur)

    po = sub.add_parser("soergel")
    so = po.add_subparsers(dest="sub", required=True)
    o_chk = so.add_parser("check")
    o_chk.add_argument("--relation", required=True)
    o_chk.add_argument("--r", type=int, default=3)
    o_chk.add_argument("--colors", default=None)
    o_ev = so.add_parser("eval")
    o_ev.add_argument("--object", required=True)
    o_ev.add_argument("--morphism", required=True)
    o_ev.add_argument("--r", type=int, default=3)
    po.set_defaults(func=_cmd_soergel)

    pr = sub.add_parser("rouquier")
    sr = pr.add_subparsers(dest="sub", required=True)
    for name in ("build", "d2", "euler"):
        rp = sr.add_parser(name)
        rp.add_argument("--braid", required=True)
        rp.add_argument("--r", type=int, default=3)
    pr.set_defaults(func=_cmd_rouquier)

    pg = sub.add_parser("singular")
    sg = pg.add_subparsers(dest="sub", required=True)
    g_lem = sg.add_parser("lemma")
    g_lem.add_argument("--n", type=int, required=True)
    g_lem.add_argument("--k", type=int, required=True)
    g_bub = sg.add_parser("bubbles")
    g_bub.add_argument("--lambda", dest="lam", required=True)
    g_tri = sg.add_parser("triangle")
    g_tri.add_argument("--r", type=int, default=3)
    g_tri.add_argument("--n", type=int, default=4)
    g_tw = sg.add_parser("twist")
    g_tw.add_argument("--blocks", required=True)
    pg.set_defaults(func=_cmd_singular)

    pv = sub.add_parser("verify")
    pv.add_argument("suite", choices=sorted(SUITES) + ["all"])
    pv.add_argument("--r", type=int, default=3)
    pv.add_argument("--n", type=int, default=4)
    pv.add_argument("--window", type=int, default=None)
    pv.add_argument("--max-length", type=int, default=None)
    pv.add_argument("--jobs", type=int, default=1)
    pv.set_defaults(func=_cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
