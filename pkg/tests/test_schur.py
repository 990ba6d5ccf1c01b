import pytest

from affhecke import schur
from affhecke.cli import sigma_verify
from affhecke.ratq import RatQ
from conftest import seeded_rng

ONE = RatQ([1])


def random_word(rng, n, max_len=3):
    letters = []
    for _ in range(rng.randrange(1, max_len + 1)):
        kind = rng.choice(["E", "F", "K", "R"])
        if kind == "E":
            letters.append(("E", rng.randrange(1, n + 1)))
        elif kind == "F":
            letters.append(("F", rng.randrange(1, n + 1)))
        elif kind == "K":
            letters.append(("K", rng.randrange(1, n + 1),
                            rng.choice([1, -1])))
        else:
            letters.append(("R", rng.choice([1, -1])))
    return tuple(letters)


def test_presentation_sweep_small():
    n, r = 4, 3
    for cid, lhs, rhs in schur.presentation_relations(n, r):
        assert schur.equal(lhs, rhs, n, r), cid


def test_window_reduction_backed_by_shift_equivariance():
    n, r = 4, 3
    rng = seeded_rng("schur-shift")
    for _ in range(40):
        word = random_word(rng, n)
        t = tuple(rng.randrange(0, n) for _ in range(r))
        assert schur.shift_equivariant(word, t, n)
        assert schur.shift_equivariant(word, t, n, j=rng.randrange(r))


def test_equal_matches_exhaustive_window():
    n, r = 4, 3
    rng = seeded_rng("schur-window")
    for _ in range(10):
        x = {random_word(rng, n): ONE}
        y = {random_word(rng, n): ONE}
        w = schur.default_window(x, y, n)
        assert schur.equal(x, y, n, r) \
            == schur.equal_exhaustive(x, y, n, r, w)


def test_sigma_embedding():
    failures = [cid for cid, ok in sigma_verify(4, 3) if not ok]
    assert not failures


def test_sigma_requires_standing_assumption():
    with pytest.raises(ValueError):
        schur.sigma_embed("b1", 3, 3)


def test_rho_antiinv_is_adjoint_on_generators():
    n, r = 4, 3
    rng = seeded_rng("schur-adjoint")
    gens = ([("E", i) for i in range(1, n + 1)]
            + [("F", i) for i in range(1, n + 1)]
            + [("K", i, s) for i in range(1, n + 1) for s in (1, -1)]
            + [("R", 1), ("R", -1)])
    for g in gens:
        for _ in range(5):
            v = {tuple(rng.randrange(0, n) for _ in range(r)): ONE}
            w = {tuple(rng.randrange(0, n) for _ in range(r)): ONE}
            lhs = schur.bilinear_form(schur.act((g,), v, n), w)
            rhs = schur.bilinear_form(
                v, schur.act_elem(schur.rho_antiinv({(g,): ONE}, n), w, n))
            assert lhs == rhs, g


def test_parse_print_roundtrip():
    n = 4
    rng = seeded_rng("schur-parse")
    for _ in range(40):
        word = random_word(rng, n)
        text = schur.genword_str(word)
        assert schur.parse_genword(text, n) == word
    lamword = schur.parse_genword("E1 1[(1,1,1,0)] E-4", n)
    assert schur.genword_str(lamword) == "E1 1[(1,1,1,0)] E-4"


def test_iota_preserves_relations_sample():
    n, r = 4, 3
    count = 0
    for cid, lhs, rhs in schur.presentation_relations(n, r):
        if any(letter[0] not in "EFP" for word in lhs for letter in word):
            continue
        if any(letter[0] not in "EFP" for word in rhs for letter in word):
            continue
        assert schur.equal(schur.iota(lhs, n), schur.iota(rhs, n),
                           n + 1, r), cid
        count += 1
        if count >= 20:
            break
    assert count > 0
