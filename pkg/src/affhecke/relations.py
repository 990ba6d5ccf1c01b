"""
Catalogue of the defining relations of the diagrammatic calculus, each
checked through its bimodule image.

Every entry names a relation between composites of the generating maps
(dots, trivalent vertices, 4- and 6-valent vertices, oriented cups and
caps, mixed 4-valent vertices, boxes).  `check_relation` evaluates both
sides on every basis tag of the source object and compares canonical
forms; `sweep` runs every admissible color instantiation for a given
number of colors.

Relations that need more colors than available (three pairwise distant
colors, or an adjacent pair plus a color distant from both) report their
instantiation list as empty and pass vacuously for small r.
"""

__all__ = [
    "RELATION_IDS", "relation_instances", "check_relation", "sweep",
    "degree_audit", "rotate180", "capchain", "cupchain",
    "GENERATOR_DEGREES", "generator_list", "verify_witness",
]

from fractions import Fraction
from itertools import product

from .poly import one, xvar, yvar, Xroot, zero
from .soergel import (
    BimElement, Morphism, all_tags, basis_element, idmor, compose_mor,
    tensor_mor, sum_mor, scale_mor, mor_equal, is_zero_mor, enddot,
    startdot, merge, split, cap_or, cup_or, m4, v4, v6, box, boxy,
    cap_one, cup_one, next_color, prev_color, dual_word, colors_distant,
    colors_adjacent, decompose_witness, s3_matrix,
)


# -- rotation by 180 degrees, realized through cup and cap chains --

def capchain(word, r):
    """The map on (word + dual(word)) closing all strands off to the right."""
    word = tuple(word)
    f = idmor(r, word + dual_word(word))
    cur = word
    while cur:
        a = cur[-1]
        c = cap_or(a, r) if a in ("+", "-") else cap_one(a, r)
        rest = cur[:-1]
        f = compose_mor(tensor_mor(idmor(r, rest), c,
                                   idmor(r, dual_word(rest))), f)
        cur = rest
    return f


def cupchain(word, r):
    """The map from the empty word opening all strands of dual(word) + word."""
    word = tuple(word)
    f = idmor(r, ())
    cur = ()
    for a in reversed(word):
        ca = "-" if a == "+" else "+" if a == "-" else a
        c = cup_or(ca, r) if a in ("+", "-") else cup_one(a, r)
        f = compose_mor(tensor_mor(idmor(r, dual_word(cur)), c,
                                   idmor(r, cur)), f)
        cur = (a,) + cur
    return f


def rotate180(f, r):
    """Rotate a map by half a turn: dual(tgt) -> dual(src)."""
    A, B = f.src, f.tgt
    return compose_mor(
        tensor_mor(idmor(r, dual_word(A)), capchain(B, r)),
        tensor_mor(idmor(r, dual_word(A)), f, idmor(r, dual_word(B))),
        tensor_mor(cupchain(A, r), idmor(r, dual_word(B))))


# -- small builders reused across relations --

def _zero_mor(r, src, tgt, deg):
    return Morphism(r, tuple(src), tuple(tgt), deg, {}, "0")


def _lmul_mor(r, word, p, deg):
    images = {t: basis_element(r, word, t).lmul(p) for t in all_tags(word)}
    return Morphism(r, tuple(word), tuple(word), deg, images, "lmul")


def _rmul_mor(r, word, p, deg):
    images = {t: basis_element(r, word, t).rmul(p) for t in all_tags(word)}
    return Morphism(r, tuple(word), tuple(word), deg, images, "rmul")


def _dumbbell(i, r):
    """Floating double dot of color i: multiplication by X_i on R."""
    return compose_mor(enddot(i, r), startdot(i, r))


def _broken(i, r):
    """Dot pair breaking a strand of color i."""
    return compose_mor(startdot(i, r), enddot(i, r))


def _square_with(i, mid, r):
    """Open an i-strand, place mid on the inner strand, close it again."""
    ii = idmor(r, (i,))
    return compose_mor(merge(i, r), tensor_mor(ii, mid, ii), split(i, r))


def _cross_plus(word, r):
    """Slide a "+" strand from the left of word to its right; each color
    it crosses goes up by one."""
    f = idmor(r, ("+",) + tuple(word))
    out = []
    word = tuple(word)
    for k, c in enumerate(word):
        step = tensor_mor(idmor(r, tuple(out)), m4("ur", c, r),
                          idmor(r, word[k + 1:]))
        out.append(next_color(c, r))
        f = compose_mor(step, f)
    return f


def _cross_minus(word, r):
    """Slide a "-" strand from the left of word to its right; colors drop."""
    f = idmor(r, ("-",) + tuple(word))
    out = []
    word = tuple(word)
    for k, c in enumerate(word):
        step = tensor_mor(idmor(r, tuple(out)), m4("dl", c, r),
                          idmor(r, word[k + 1:]))
        out.append(prev_color(c, r))
        f = compose_mor(step, f)
    return f


def _six_correction(i, j, r):
    """The composite through B_i of the adjacent-colors recoupling:
    open the i-strand, grow a j-dot inside."""
    ii = idmor(r, (i,))
    A = compose_mor(tensor_mor(ii, startdot(j, r), ii), split(i, r))
    B = compose_mor(merge(i, r), tensor_mor(ii, enddot(j, r), ii))
    return A, B


# -- color instantiation helpers --

def _one_color(r):
    return [(i,) for i in range(1, r + 1)]


def _distant_pairs(r):
    return [(i, j) for i in range(1, r + 1) for j in range(1, r + 1)
            if colors_distant(i, j, r)]


def _adjacent_pairs(r):
    return [(i, j) for i in range(1, r + 1) for j in range(1, r + 1)
            if colors_adjacent(i, j, r)]


def _distant_triples(r):
    return [(i, j, k) for i in range(1, r + 1) for j in range(1, r + 1)
            for k in range(1, r + 1)
            if colors_distant(i, j, r) and colors_distant(i, k, r)
            and colors_distant(j, k, r)]


def _adjacent_plus_distant(r):
    return [(i, j, k) for (i, j) in _adjacent_pairs(r)
            for k in range(1, r + 1)
            if colors_distant(k, i, r) and colors_distant(k, j, r)]


def _mutually_adjacent_triples(r):
    return [(i, j, k) for i in range(1, r + 1) for j in range(1, r + 1)
            for k in range(1, r + 1) if len({i, j, k}) == 3
            and colors_adjacent(i, j, r) and colors_adjacent(j, k, r)
            and colors_adjacent(i, k, r)]


def _no_colors(r):
    return [()]


# -- the relations --

def _rel_snake(r, c):
    (i,) = c
    ii = idmor(r, (i,))
    l1 = compose_mor(tensor_mor(cap_one(i, r), ii),
                     tensor_mor(ii, cup_one(i, r)))
    l2 = compose_mor(tensor_mor(ii, cap_one(i, r)),
                     tensor_mor(cup_one(i, r), ii))
    return [("right-then-left", l1, ii), ("left-then-right", l2, ii)]


def _rel_curl_dot(r, c):
    (i,) = c
    ii = idmor(r, (i,))
    ed = enddot(i, r)
    l1 = compose_mor(cap_one(i, r), tensor_mor(ii, startdot(i, r)))
    l2 = compose_mor(cap_one(i, r), tensor_mor(startdot(i, r), ii))
    return [("curl-right", l1, ed), ("curl-left", l2, ed)]


def _rel_rot_trivalent(r, c):
    (i,) = c
    ii = idmor(r, (i,))
    m = merge(i, r)
    l1 = compose_mor(tensor_mor(ii, cap_one(i, r)),
                     tensor_mor(split(i, r), ii))
    l2 = compose_mor(tensor_mor(cap_one(i, r), ii),
                     tensor_mor(ii, split(i, r)))
    return [("rotate-left", l1, m), ("rotate-right", l2, m)]


def _rel_rot_cross_distant(r, c):
    i, j = c
    f = v4(i, j, r)
    return [("half-turn", rotate180(f, r), f)]


def _rel_rot_six_vertex(r, c):
    i, j = c
    return [("half-turn", rotate180(v6(i, j, r), r), v6(j, i, r))]


def _rel_snake_up(r, c):
    ip = idmor(r, ("+",))
    l1 = compose_mor(tensor_mor(cap_or("+", r), ip),
                     tensor_mor(ip, cup_or("-", r)))
    l2 = compose_mor(tensor_mor(ip, cap_or("-", r)),
                     tensor_mor(cup_or("+", r), ip))
    return [("right-then-left", l1, ip), ("left-then-right", l2, ip)]


def _rel_snake_down(r, c):
    im = idmor(r, ("-",))
    l1 = compose_mor(tensor_mor(cap_or("-", r), im),
                     tensor_mor(im, cup_or("+", r)))
    l2 = compose_mor(tensor_mor(im, cap_or("+", r)),
                     tensor_mor(cup_or("-", r), im))
    return [("right-then-left", l1, im), ("left-then-right", l2, im)]


def _rel_rot_mixed_up(r, c):
    (i,) = c
    f = m4("ur", i, r)
    g = m4("dl", next_color(i, r), r)
    return [("half-turn", rotate180(f, r), g),
            ("half-turn-back", rotate180(g, r), f)]


def _rel_rot_mixed_down(r, c):
    (i,) = c
    f = m4("dl", i, r)
    g = m4("ur", prev_color(i, r), r)
    return [("half-turn", rotate180(f, r), g),
            ("half-turn-back", rotate180(g, r), f)]


def _rel_rot_dumbbell(r, c):
    (i,) = c
    db = _dumbbell(i, r)
    return [("half-turn", rotate180(db, r), db)]


def _rel_lollipop(r, c):
    (i,) = c
    l1 = compose_mor(cap_one(i, r), split(i, r))
    l2 = compose_mor(merge(i, r), cup_one(i, r))
    return [("circle-above", l1, _zero_mor(r, (i,), (), -1)),
            ("circle-below", l2, _zero_mor(r, (), (i,), -1))]


def _rel_dumbbell_force(r, c):
    (i,) = c
    X = Xroot(i, r)
    lhs = sum_mor(_lmul_mor(r, (i,), X, 2), _rmul_mor(r, (i,), X, 2))
    rhs = scale_mor(2, _broken(i, r))
    return [("force", lhs, rhs)]


def _rel_reid2_distant(r, c):
    i, j = c
    lhs = compose_mor(v4(j, i, r), v4(i, j, r))
    return [("double-crossing", lhs, idmor(r, (i, j)))]


def _rel_dot_slide_distant(r, c):
    i, j = c
    ij, jj = idmor(r, (i,)), idmor(r, (j,))
    l1 = compose_mor(tensor_mor(jj, enddot(i, r)), v4(i, j, r))
    r1 = tensor_mor(enddot(i, r), jj)
    l2 = compose_mor(tensor_mor(enddot(j, r), ij), v4(i, j, r))
    r2 = tensor_mor(ij, enddot(j, r))
    return [("left-color", l1, r1), ("right-color", l2, r2)]


def _rel_trivalent_slide_distant(r, c):
    i, j = c
    ij, jj = idmor(r, (i,)), idmor(r, (j,))
    l1 = compose_mor(v4(i, j, r), tensor_mor(merge(i, r), jj))
    r1 = compose_mor(tensor_mor(jj, merge(i, r)),
                     tensor_mor(v4(i, j, r), ij),
                     tensor_mor(ij, v4(i, j, r)))
    l2 = compose_mor(tensor_mor(jj, split(i, r)), v4(i, j, r))
    r2 = compose_mor(tensor_mor(v4(i, j, r), ij),
                     tensor_mor(ij, v4(i, j, r)),
                     tensor_mor(split(i, r), jj))
    return [("merge", l1, r1), ("split", l2, r2)]


def _rel_dot_six_vertex(r, c):
    i, j = c
    ii, jj = idmor(r, (i,)), idmor(r, (j,))
    lhs = compose_mor(tensor_mor(enddot(j, r), ii, jj), v6(i, j, r))
    t1 = tensor_mor(ii, jj, enddot(i, r))
    t2 = compose_mor(tensor_mor(ii, startdot(j, r)), merge(i, r),
                     tensor_mor(ii, enddot(j, r), ii))
    return [("dot-on-top", lhs, sum_mor(t1, t2))]


def _rel_reid3(r, c):
    i, j = c
    lhs = compose_mor(v6(j, i, r), v6(i, j, r))
    A, B = _six_correction(i, j, r)
    rhs = sum_mor(idmor(r, (i, j, i)), compose_mor(A, B))
    return [("double-recoupling", lhs, rhs)]


def _rel_dumbbell_square(r, c):
    i, j = c
    lhs = _square_with(i, _dumbbell(j, r), r)
    return [("square", lhs, scale_mor(-1, idmor(r, (i,))))]


def _rel_dumbbell_slide_adjacent(r, c):
    i, j = c
    Xi, Xj = Xroot(i, r), Xroot(j, r)
    lhs = sum_mor(_lmul_mor(r, (i,), Xj, 2),
                  scale_mor(-1, _rmul_mor(r, (i,), Xj, 2)))
    rhs = scale_mor(Fraction(1, 2),
                    sum_mor(_rmul_mor(r, (i,), Xi, 2),
                            scale_mor(-1, _lmul_mor(r, (i,), Xi, 2))))
    return [("slide", lhs, rhs)]


def _rel_cross_slide_distant(r, c):
    i, j, k = c
    ii, jj, kk = idmor(r, (i,)), idmor(r, (j,)), idmor(r, (k,))
    lhs = compose_mor(tensor_mor(v4(j, k, r), ii),
                      tensor_mor(jj, v4(i, k, r)),
                      tensor_mor(v4(i, j, r), kk))
    rhs = compose_mor(tensor_mor(kk, v4(i, j, r)),
                      tensor_mor(v4(i, k, r), jj),
                      tensor_mor(ii, v4(j, k, r)))
    return [("triple-crossing", lhs, rhs)]


def _rel_six_vertex_slide_distant(r, c):
    i, j, k = c

    def crossk(word):
        f = idmor(r, tuple(word) + (k,))
        cur = list(word) + [k]
        for pos in reversed(range(len(word))):
            step = tensor_mor(idmor(r, tuple(cur[:pos])),
                              v4(cur[pos], k, r),
                              idmor(r, tuple(cur[pos + 2:])))
            cur[pos], cur[pos + 1] = k, cur[pos]
            f = compose_mor(step, f)
        return f
    kk = idmor(r, (k,))
    lhs = compose_mor(tensor_mor(kk, v6(i, j, r)), crossk((i, j, i)))
    rhs = compose_mor(crossk((j, i, j)), tensor_mor(v6(i, j, r), kk))
    return [("slide", lhs, rhs)]


def _rel_dumbbell_square_three(r, c):
    i, j, k = c
    mid = compose_mor(_dumbbell(j, r), _dumbbell(k, r))
    lhs = _square_with(i, mid, r)
    rhs = _lmul_mor(r, (i,), yvar(r), 2)
    return [("square", lhs, rhs)]


def _rel_oriented_circle(r, c):
    one_mor = idmor(r, ())
    l1 = compose_mor(cap_or("+", r), cup_or("+", r))
    l2 = compose_mor(cap_or("-", r), cup_or("-", r))
    return [("clockwise", l1, one_mor), ("counterclockwise", l2, one_mor)]


def _rel_cap_cup_ud(r, c):
    lhs = compose_mor(cup_or("+", r), cap_or("+", r))
    return [("cap-then-cup", lhs, idmor(r, ("+", "-")))]


def _rel_cap_cup_du(r, c):
    lhs = compose_mor(cup_or("-", r), cap_or("-", r))
    return [("cap-then-cup", lhs, idmor(r, ("-", "+")))]


def _rel_mixed_cross_slide_distant(r, c):
    i, j = c
    i1, j1 = next_color(i, r), next_color(j, r)
    lhs = compose_mor(_cross_plus((j, i), r),
                      tensor_mor(idmor(r, ("+",)), v4(i, j, r)))
    rhs = compose_mor(tensor_mor(v4(i1, j1, r), idmor(r, ("+",))),
                      _cross_plus((i, j), r))
    return [("slide", lhs, rhs)]


def _rel_reid2_mixed_left(r, c):
    (i,) = c
    i1 = next_color(i, r)
    l1 = compose_mor(m4("ul", i1, r), m4("ur", i, r))
    l2 = compose_mor(m4("ur", i, r), m4("ul", i1, r))
    return [("up-down", l1, idmor(r, ("+", i))),
            ("down-up", l2, idmor(r, (i1, "+")))]


def _rel_reid2_mixed_right(r, c):
    (i,) = c
    i1 = next_color(i, r)
    l1 = compose_mor(m4("dl", i1, r), m4("dr", i, r))
    l2 = compose_mor(m4("dr", i, r), m4("dl", i1, r))
    return [("up-down", l1, idmor(r, (i, "-"))),
            ("down-up", l2, idmor(r, ("-", i1)))]


def _rel_dot_slide_mixed_down(r, c):
    (i,) = c
    i1 = next_color(i, r)
    im = idmor(r, ("-",))
    lhs = compose_mor(m4("dr", i, r), tensor_mor(startdot(i, r), im))
    rhs = tensor_mor(im, startdot(i1, r))
    return [("slide", lhs, rhs)]


def _rel_dot_slide_mixed_up(r, c):
    (i,) = c
    i1 = next_color(i, r)
    ip = idmor(r, ("+",))
    lhs = compose_mor(m4("ur", i, r), tensor_mor(ip, startdot(i, r)))
    rhs = tensor_mor(startdot(i1, r), ip)
    return [("slide", lhs, rhs)]


def _rel_trivalent_slide_mixed(r, c):
    (i,) = c
    i1 = next_color(i, r)
    ip = idmor(r, ("+",))
    l1 = compose_mor(m4("ur", i, r), tensor_mor(ip, merge(i, r)))
    r1 = compose_mor(tensor_mor(merge(i1, r), ip),
                     tensor_mor(idmor(r, (i1,)), m4("ur", i, r)),
                     tensor_mor(m4("ur", i, r), idmor(r, (i,))))
    l2 = compose_mor(tensor_mor(idmor(r, (i1,)), m4("ur", i, r)),
                     tensor_mor(m4("ur", i, r), idmor(r, (i,))),
                     tensor_mor(ip, split(i, r)))
    r2 = compose_mor(tensor_mor(split(i1, r), ip), m4("ur", i, r))
    return [("merge", l1, r1), ("split", l2, r2)]


def _rel_six_vertex_slide_mixed(r, c):
    i, j = c
    i1, j1 = next_color(i, r), next_color(j, r)
    ip = idmor(r, ("+",))
    lhs = compose_mor(_cross_plus((i, j, i), r),
                      tensor_mor(ip, v6(j, i, r)))
    rhs = compose_mor(tensor_mor(v6(j1, i1, r), ip),
                      _cross_plus((j, i, j), r))
    return [("slide", lhs, rhs)]


def _rel_six_vertex_slide_mixed_2(r, c):
    i, j = c
    i1, j1 = next_color(i, r), next_color(j, r)
    ip = idmor(r, ("+",))
    lhs = compose_mor(_cross_plus((j, i, j), r),
                      tensor_mor(ip, v6(i, j, r)))
    rhs = compose_mor(tensor_mor(v6(i1, j1, r), ip),
                      _cross_plus((i, j, i), r))
    return [("slide", lhs, rhs)]


def _rel_box_dumbbell(r, c):
    (i,) = c
    lhs = _dumbbell(i, r)
    rhs = sum_mor(box(next_color(i, r), r), scale_mor(-1, box(i, r)))
    return [("expand", lhs, rhs)]


def _rel_box_dumbbell_last(r, c):
    lhs = _dumbbell(r, r)
    rhs = sum_mor(box(1, r), scale_mor(-1, box(r, r)),
                  scale_mor(-1, boxy(r)))
    return [("expand", lhs, rhs)]


def _rel_box_sum_edge(r, c):
    (i,) = c
    p = xvar(i, r) + xvar(next_color(i, r), r)
    return [("commute", _lmul_mor(r, (i,), p, 2), _rmul_mor(r, (i,), p, 2))]


def _rel_box_prod_edge(r, c):
    (i,) = c
    p = xvar(i, r) * xvar(i + 1, r)
    return [("commute", _lmul_mor(r, (i,), p, 4), _rmul_mor(r, (i,), p, 4))]


def _rel_box_prod_edge_last(r, c):
    h = Fraction(1, 2)
    p = (xvar(r, r) + yvar(r) * h) * (xvar(1, r) - yvar(r) * h)
    return [("commute", _lmul_mor(r, (r,), p, 4), _rmul_mor(r, (r,), p, 4))]


def _rel_box_distant_edge(r, c):
    i, j = c
    p = xvar(j, r)
    return [("commute", _lmul_mor(r, (i,), p, 2), _rmul_mor(r, (i,), p, 2))]


def _rel_box_y_edge(r, c):
    (i,) = c
    p = yvar(r)
    return [("commute", _lmul_mor(r, (i,), p, 2), _rmul_mor(r, (i,), p, 2))]


def _rel_box_y_up(r, c):
    p = yvar(r)
    return [("commute", _lmul_mor(r, ("+",), p, 2),
             _rmul_mor(r, ("+",), p, 2))]


def _rel_box_y_down(r, c):
    p = yvar(r)
    return [("commute", _lmul_mor(r, ("-",), p, 2),
             _rmul_mor(r, ("-",), p, 2))]


def _rel_box_shift_up(r, c):
    (i,) = c
    lhs = _lmul_mor(r, ("+",), xvar(i + 1, r), 2)
    rhs = _rmul_mor(r, ("+",), xvar(i, r), 2)
    return [("shift", lhs, rhs)]


def _rel_box_shift_up_last(r, c):
    lhs = _lmul_mor(r, ("+",), xvar(1, r) - yvar(r), 2)
    rhs = _rmul_mor(r, ("+",), xvar(r, r), 2)
    return [("shift", lhs, rhs)]


def _rel_box_shift_down(r, c):
    (i,) = c
    lhs = _lmul_mor(r, ("-",), xvar(i - 1, r), 2)
    rhs = _rmul_mor(r, ("-",), xvar(i, r), 2)
    return [("shift", lhs, rhs)]


def _rel_box_shift_down_last(r, c):
    lhs = _lmul_mor(r, ("-",), xvar(r, r) + yvar(r), 2)
    rhs = _rmul_mor(r, ("-",), xvar(1, r), 2)
    return [("shift", lhs, rhs)]


# derived identities recorded with the catalogue because they are used in
# redundancy arguments

def _rel_box_y_as_dumbbells(r, c):
    terms = [scale_mor(-1, _dumbbell(k, r)) for k in range(1, r + 1)]
    return [("expand", boxy(r), sum_mor(*terms))]


def _rel_dumbbell_slide_sum(r, c):
    (i,) = c
    a, b = prev_color(i, r), next_color(i, r)
    p = Xroot(a, r) + Xroot(i, r) + Xroot(b, r)
    return [("sum", _lmul_mor(r, (i,), p, 2), _rmul_mor(r, (i,), p, 2))]


def _rel_mixed_cross_slide_reversed(r, c):
    i, j = c
    i1, j1 = prev_color(i, r), prev_color(j, r)
    lhs = compose_mor(_cross_minus((j, i), r),
                      tensor_mor(idmor(r, ("-",)), v4(i, j, r)))
    rhs = compose_mor(tensor_mor(v4(i1, j1, r), idmor(r, ("-",))),
                      _cross_minus((i, j), r))
    return [("slide", lhs, rhs)]


RELATIONS = {
    # isotopy
    "snake": (_one_color, _rel_snake),
    "curl-dot": (_one_color, _rel_curl_dot),
    "rot-trivalent": (_one_color, _rel_rot_trivalent),
    "rot-cross-distant": (_distant_pairs, _rel_rot_cross_distant),
    "rot-six-vertex": (_adjacent_pairs, _rel_rot_six_vertex),
    "snake-up": (_no_colors, _rel_snake_up),
    "snake-down": (_no_colors, _rel_snake_down),
    "rot-mixed-up": (_one_color, _rel_rot_mixed_up),
    "rot-mixed-down": (_one_color, _rel_rot_mixed_down),
    # one color
    "rot-dumbbell": (_one_color, _rel_rot_dumbbell),
    "lollipop": (_one_color, _rel_lollipop),
    "dumbbell-force": (_one_color, _rel_dumbbell_force),
    # two distant colors
    "reid2-distant": (_distant_pairs, _rel_reid2_distant),
    "dot-slide-distant": (_distant_pairs, _rel_dot_slide_distant),
    "trivalent-slide-distant": (_distant_pairs, _rel_trivalent_slide_distant),
    # two adjacent colors
    "dot-six-vertex": (_adjacent_pairs, _rel_dot_six_vertex),
    "reid3": (_adjacent_pairs, _rel_reid3),
    "dumbbell-square": (_adjacent_pairs, _rel_dumbbell_square),
    "dumbbell-slide-adjacent": (_adjacent_pairs,
                                _rel_dumbbell_slide_adjacent),
    # three colors
    "cross-slide-distant": (_distant_triples, _rel_cross_slide_distant),
    "six-vertex-slide-distant": (_adjacent_plus_distant,
                                 _rel_six_vertex_slide_distant),
    "dumbbell-square-three": (_mutually_adjacent_triples,
                              _rel_dumbbell_square_three),
    # oriented strands
    "oriented-circle": (_no_colors, _rel_oriented_circle),
    "cap-cup-ud": (_no_colors, _rel_cap_cup_ud),
    "cap-cup-du": (_no_colors, _rel_cap_cup_du),
    # oriented and colored strands
    "mixed-cross-slide-distant": (_distant_pairs,
                                  _rel_mixed_cross_slide_distant),
    "reid2-mixed-left": (_one_color, _rel_reid2_mixed_left),
    "reid2-mixed-right": (_one_color, _rel_reid2_mixed_right),
    "dot-slide-mixed-down": (_one_color, _rel_dot_slide_mixed_down),
    "dot-slide-mixed-up": (_one_color, _rel_dot_slide_mixed_up),
    "trivalent-slide-mixed": (_one_color, _rel_trivalent_slide_mixed),
    "six-vertex-slide-mixed": (_adjacent_pairs, _rel_six_vertex_slide_mixed),
    "six-vertex-slide-mixed-2": (_adjacent_pairs,
                                 _rel_six_vertex_slide_mixed_2),
    # boxes
    "box-dumbbell": (lambda r: [(i,) for i in range(1, r)],
                     _rel_box_dumbbell),
    "box-dumbbell-last": (_no_colors, _rel_box_dumbbell_last),
    "box-sum-edge": (_one_color, _rel_box_sum_edge),
    "box-prod-edge": (lambda r: [(i,) for i in range(1, r)],
                      _rel_box_prod_edge),
    "box-prod-edge-last": (_no_colors, _rel_box_prod_edge_last),
    "box-distant-edge": (lambda r: [(i, j) for i in range(1, r + 1)
                                    for j in range(1, r + 1)
                                    if j not in (i, next_color(i, r))],
                         _rel_box_distant_edge),
    "box-y-edge": (_one_color, _rel_box_y_edge),
    "box-y-up": (_no_colors, _rel_box_y_up),
    "box-y-down": (_no_colors, _rel_box_y_down),
    "box-shift-up": (lambda r: [(i,) for i in range(1, r)],
                     _rel_box_shift_up),
    "box-shift-up-last": (_no_colors, _rel_box_shift_up_last),
    "box-shift-down": (lambda r: [(i,) for i in range(2, r + 1)],
                       _rel_box_shift_down),
    "box-shift-down-last": (_no_colors, _rel_box_shift_down_last),
    # derived identities used in redundancy arguments
    "box-y-as-dumbbells": (_no_colors, _rel_box_y_as_dumbbells),
    "dumbbell-slide-sum": (_one_color, _rel_dumbbell_slide_sum),
    "mixed-cross-slide-reversed": (_distant_pairs,
                                   _rel_mixed_cross_slide_reversed),
}

RELATION_IDS = tuple(RELATIONS)

# relations rederivable from the rest; checked independently all the same
REDUNDANT_IDS = (
    "cap-cup-du", "box-shift-down", "box-shift-up-last",
    "box-shift-down-last", "box-y-edge", "box-y-up", "box-y-down",
    "box-y-as-dumbbells", "dumbbell-slide-sum", "mixed-cross-slide-reversed",
)


def relation_instances(rel_id, r):
    """All admissible color tuples for a relation at r colors."""
    if rel_id not in RELATIONS:
        raise ValueError("unknown relation id: %r" % rel_id)
    inst, _ = RELATIONS[rel_id]
    return inst(r)


def _first_difference(lhs, rhs):
    for t in sorted(set(lhs.images) | set(rhs.images)):
        a = lhs.images.get(t)
        b = rhs.images.get(t)
        if a is None:
            a = b.scale(0)
        if b is None:
            b = a.scale(0)
        if a != b:
            return t, a, b
    return None


def check_relation(rel_id, r, colors=None):
    """
    Check one relation.  Returns a report dict with keys id, r, colors,
    ok, vacuous, and (on failure) part, tag, lhs, rhs.
    """
    if rel_id not in RELATIONS:
        raise ValueError("unknown relation id: %r" % rel_id)
    inst, build = RELATIONS[rel_id]
    cases = inst(r) if colors is None else [tuple(colors)]
    if colors is not None and tuple(colors) not in inst(r):
        raise ValueError("invalid color pattern %r for relation %s at r=%d"
                         % (tuple(colors), rel_id, r))
    if not cases:
        return {"id": rel_id, "r": r, "colors": None,
                "ok": True, "vacuous": True}
    for c in cases:
        for part, lhs, rhs in build(r, c):
            diff = _first_difference(lhs, rhs)
            if diff is not None:
                t, a, b = diff
                return {"id": rel_id, "r": r, "colors": c, "ok": False,
                        "vacuous": False, "part": part, "tag": t,
                        "lhs": str(a), "rhs": str(b)}
    return {"id": rel_id, "r": r, "colors": cases if colors is None else c,
            "ok": True, "vacuous": False}


def sweep(r, ids=None):
    """Check every relation over all admissible color patterns.  Returns a
    list of reports, one per relation id."""
    return [check_relation(rel_id, r) for rel_id in (ids or RELATION_IDS)]


# -- direct-sum decomposition witnesses --

def verify_witness(kind, r, i=None, j=None):
    """
    Verify the explicit maps realizing a direct-sum decomposition.
    Returns a list of (check name, bool).
    """
    if kind == "S1":
        _, ps = decompose_witness("S1", r, i)
        d = dict(ps)
        ii = idmor(r, (i,))
        return [
            ("p1 i1 = id", mor_equal(compose_mor(d["p1"], d["i1"]), ii)),
            ("p2 i2 = id", mor_equal(compose_mor(d["p2"], d["i2"]), ii)),
            ("p1 i2 = 0", is_zero_mor(compose_mor(d["p1"], d["i2"]))),
            ("p2 i1 = 0", is_zero_mor(compose_mor(d["p2"], d["i1"]))),
            ("i1 p1 + i2 p2 = id",
             mor_equal(sum_mor(compose_mor(d["i1"], d["p1"]),
                               compose_mor(d["i2"], d["p2"])),
                       idmor(r, (i, i)))),
        ]
    if kind in ("S2", "S4", "tiso2"):
        _, ps = decompose_witness(kind, r, i, j)
        d = dict(ps)
        f, g = d["f"], d["g"]
        return [
            ("g f = id", mor_equal(compose_mor(g, f), idmor(r, f.src))),
            ("f g = id", mor_equal(compose_mor(f, g), idmor(r, f.tgt))),
        ]
    if kind == "S3":
        # 2x2 matrix isomorphism between the two direct sums; the four
        # diagonal identities use the recoupling relations, the four
        # off-diagonal composites vanish.
        m = dict(s3_matrix(i, j, r))
        v, A, B = m["v6"], m["A"], m["B"]
        vp, Ap, Bp = m["v6'"], m["A'"], m["B'"]
        id_iji = idmor(r, (i, j, i))
        id_jij = idmor(r, (j, i, j))
        return [
            ("v6' v6 - A' B = id",
             mor_equal(sum_mor(compose_mor(vp, v),
                               scale_mor(-1, compose_mor(Ap, B))), id_iji)),
            ("v6 v6' - A B' = id",
             mor_equal(sum_mor(compose_mor(v, vp),
                               scale_mor(-1, compose_mor(A, Bp))), id_jij)),
            ("B' A = -id",
             mor_equal(compose_mor(Bp, A),
                       scale_mor(-1, idmor(r, (j,))))),
            ("B A' = -id",
             mor_equal(compose_mor(B, Ap),
                       scale_mor(-1, idmor(r, (i,))))),
            ("v6' A = 0", is_zero_mor(compose_mor(vp, A))),
            ("v6 A' = 0", is_zero_mor(compose_mor(v, Ap))),
            ("B' v6 = 0", is_zero_mor(compose_mor(Bp, v))),
            ("B v6' = 0", is_zero_mor(compose_mor(B, vp))),
        ]
    raise ValueError("unknown witness kind: %r" % kind)


# -- degree audit --

GENERATOR_DEGREES = {
    "enddot": 1, "startdot": 1, "merge": -1, "split": -1,
    "cap+": 0, "cap-": 0, "cup+": 0, "cup-": 0,
    "m4ur": 0, "m4ul": 0, "m4dr": 0, "m4dl": 0,
    "v4": 0, "v6": 0, "box": 2, "boxy": 2,
}


def generator_list(r):
    """All generating maps at r colors, as (name, colors, morphism)."""
    gens = []
    for i in range(1, r + 1):
        gens.append(("enddot", (i,), enddot(i, r)))
        gens.append(("startdot", (i,), startdot(i, r)))
        gens.append(("merge", (i,), merge(i, r)))
        gens.append(("split", (i,), split(i, r)))
        for kind in ("ur", "ul", "dr", "dl"):
            gens.append(("m4" + kind, (i,), m4(kind, i, r)))
        gens.append(("box", (i,), box(i, r)))
    for s in ("+", "-"):
        gens.append(("cap" + s, (), cap_or(s, r)))
        gens.append(("cup" + s, (), cup_or(s, r)))
    for i, j in _distant_pairs(r):
        gens.append(("v4", (i, j), v4(i, j, r)))
    for i, j in _adjacent_pairs(r):
        gens.append(("v6", (i, j), v6(i, j, r)))
    gens.append(("boxy", (), boxy(r)))
    return gens


def _word_degree(r, word, tag):
    # basis degrees: slot carries b_i (degree 2) or 1 minus the shift {-1}
    return 2 * sum(tag) - sum(1 for a in word if a not in ("+", "-"))


def degree_audit(r):
    """
    Verify that every generating map is homogeneous of its declared degree:
    the image of each basis tag is homogeneous and its degree equals the
    source basis degree plus the generator degree.  Returns a list of
    failures (empty when the audit is exact).
    """
    bad = []
    for name, colors, f in generator_list(r):
        want = GENERATOR_DEGREES[name]
        if f.deg != want:
            bad.append((name, colors, "declared %d" % f.deg))
            continue
        for t in all_tags(f.src):
            img = f(basis_element(r, f.src, t))
            if img.is_zero():
                continue
            if not img.is_homogeneous():
                bad.append((name, colors, "inhomogeneous at %r" % (t,)))
                continue
            d = img.degree() - _word_degree(r, f.src, t)
            if d != want:
                bad.append((name, colors,
                            "degree %d at %r, expected %d" % (d, t, want)))
    return bad
