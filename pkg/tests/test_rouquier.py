import pytest

from affhecke import hecke, rouquier
from affhecke.cli import euler_expected, _braid_letters
from conftest import seeded_rng

R = 3


def test_parse_braid():
    assert rouquier.parse_braid("s1 s2^-1 rho") == ["s1", "s2^-1", "rho"]
    with pytest.raises(ValueError):
        rouquier.parse_braid("x7")


def test_d2_short_words():
    letters = _braid_letters(R)
    words = [[a] for a in letters]
    words += [[a, b] for a in letters for b in letters]
    for w in words:
        rep = rouquier.verify_d2(rouquier.braid_complex(w, R))
        assert rep["ok"], (w, rep["failures"][:3])


def test_euler_letters():
    for a in _braid_letters(R):
        c = rouquier.braid_complex([a], R)
        assert rouquier.euler_class(c) == euler_expected([a], R)
    assert rouquier.euler_class(rouquier.braid_complex(["rho"], R)) \
        == hecke.t_rho(R, 1)


def test_euler_multiplicative():
    rng = seeded_rng("rouquier-euler")
    letters = _braid_letters(R)
    for _ in range(10):
        w1 = [rng.choice(letters) for _ in range(2)]
        w2 = [rng.choice(letters) for _ in range(2)]
        c1 = rouquier.braid_complex(w1, R)
        c2 = rouquier.braid_complex(w2, R)
        assert rouquier.euler_class(rouquier.tensor(c1, c2)) \
            == hecke.mul(rouquier.euler_class(c1), rouquier.euler_class(c2))


def test_euler_rewrite_invariance():
    pairs = [
        (["s1", "s2", "s1"], ["s2", "s1", "s2"]),
        (["s2", "s3", "s2"], ["s3", "s2", "s3"]),
        (["rho", "s1", "rho^-1"], ["s2"]),
        (["rho", "s3", "rho^-1"], ["s1"]),
        (["s1", "s1^-1"], []),
        (["rho", "rho^-1"], []),
    ]
    for w1, w2 in pairs:
        e1 = rouquier.euler_class(rouquier.braid_complex(w1, R))
        e2 = rouquier.euler_class(rouquier.braid_complex(w2, R))
        assert e1 == e2, (w1, w2)


def test_inverse_letter_cancels_up_to_class():
    # complexes of s1 s1^-1 and the empty word share the euler class
    c = rouquier.braid_complex(["s1", "s1^-1"], R)
    assert rouquier.euler_class(c) == hecke.unit(R)
