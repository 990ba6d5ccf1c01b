import pytest

from affhecke import weyl
from affhecke.cli import suite_weyl
from affhecke.poly import xvar, yvar
from conftest import seeded_rng


@pytest.mark.parametrize("r", [3, 4, 5])
def test_group_relations(r):
    failures = [cid for cid, ok, _ in suite_weyl(r=r) if not ok]
    assert not failures


@pytest.mark.parametrize("r", [3, 4])
def test_normal_form_roundtrip(r):
    rng = seeded_rng("weyl-nf-%d" % r)
    letters = (["s%d" % i for i in range(1, r + 1)] + ["rho", "rho^-1"])
    for _ in range(100):
        word = " ".join(rng.choice(letters)
                        for _ in range(rng.randrange(0, 7)))
        w = weyl.from_word(word, r)
        k, nf = weyl.normal_form(w)
        parts = (["rho"] * k if k >= 0 else ["rho^-1"] * (-k))
        parts += ["s%d" % i for i in nf]
        rebuilt = weyl.from_word(" ".join(parts), r)
        assert rebuilt == w
        assert weyl.length(w) == len(nf)


def test_normal_form_examples():
    r = 3
    assert weyl.normal_form(weyl.identity(r)) == (0, [])
    assert weyl.normal_form(weyl.from_word("rho", r)) == (1, [])
    t1 = weyl.from_generator("t1", r)
    k, word = weyl.normal_form(t1)
    assert k == 1 and word == [2, 1]


def test_act_weight_rho():
    r = 3
    wt = weyl.GlWeight((1, 2, 3), 5)
    res = weyl.act_weight(weyl.from_generator("rho", r), wt)
    assert res == weyl.GlWeight((3, 1, 2), 5 - 3)


def test_act_weight_translation():
    r = 3
    wt = weyl.GlWeight((4, 1, 2), 0)
    for j in range(1, r + 1):
        res = weyl.act_weight(weyl.from_generator("t%d" % j, r), wt)
        assert res == weyl.GlWeight(wt.kappa, -wt.kappa[j - 1])


def test_actions_compose():
    r = 3
    rng = seeded_rng("weyl-act")
    letters = ["s1", "s2", "s3", "rho", "rho^-1", "t1", "t2"]
    p = xvar(1, r) * xvar(3, r) + yvar(r) ** 2
    for _ in range(25):
        u = weyl.from_word(" ".join(rng.choice(letters)
                                    for _ in range(3)), r)
        v = weyl.from_word(" ".join(rng.choice(letters)
                                    for _ in range(3)), r)
        uv = weyl.compose(u, v)
        wt = weyl.GlWeight((rng.randrange(5), rng.randrange(5),
                            rng.randrange(5)), rng.randrange(5))
        assert weyl.act_weight(uv, wt) == weyl.act_weight(
            u, weyl.act_weight(v, wt))
        assert weyl.act_poly(uv, p) == weyl.act_poly(u, weyl.act_poly(v, p))


def test_polynomial_action_faithful_small():
    # no nontrivial word of length <= 4 fixes every variable
    r = 3
    letters = ["s1", "s2", "s3", "rho", "rho^-1"]
    xs = [xvar(j, r) for j in range(1, r + 1)]
    stack = [([], weyl.identity(r))]
    for _ in range(4):
        nxt = []
        for word, w in stack:
            for a in letters:
                u = weyl.compose(w, weyl.from_generator(a, r))
                nxt.append((word + [a], u))
        stack = nxt
        for word, w in stack:
            fixes_all = all(weyl.act_poly(w, x) == x for x in xs)
            assert fixes_all == (w == weyl.identity(r)), word
