import json

import pytest

import ehlab


def test_colouring_roundtrip():
    c = ehlab.Colouring(3, 3, [1, 2, 3])
    assert c.n == 3 and c.s == 3
    assert c.colour(2, 1) == 3
    text = ehlab.to_ehc(c)
    assert text == "ehc 1\n3 3\n1 2\n3\n"
    assert ehlab.parse_ehc(text) == c
    with pytest.raises(ValueError):
        ehlab.Colouring(3, 2, [1, 1, 4])
    with pytest.raises(ehlab.ParseError):
        ehlab.parse_ehc("ehc 1\n3 3\n1\n3\n")


def test_canonical_form_ignores_labels():
    c = ehlab.Colouring(4, 3, [1, 2, 3, 1, 2, 3])
    assert ehlab.canonical_form(c) == ehlab.canonical_form(c.relabel([3, 1, 0, 2]))


def test_detect_and_count():
    pats = ehlab.bundled_patterns()
    assert set(pats) >= {"rainbow3", "twoone", "doubleP4", "edge_1"}
    rainbow = pats["rainbow3"]
    assert ehlab.find_copy(rainbow, ehlab.Colouring(2, 2, [2])) == [0, 2]
    assert ehlab.count_copies(ehlab.Colouring.monochromatic(4, 1, 1), ehlab.Colouring.monochromatic(3, 1, 1)) == 4
    assert ehlab.find_palette_copy(rainbow, 3, [1, 1, 1]) == [0, 1, 2]
    g = ehlab.gallai_product_c4(3, seed=1, trials=4)
    assert g["product"].n == 27
    assert ehlab.is_free(g["product"], rainbow)


def test_homogeneous_numbers():
    mono = ehlab.Colouring.monochromatic(6, 2, 1)
    r = ehlab.homogeneous_number(mono)
    assert r["value"] == 6 and r["missing_colour"] == 2
    dp4 = ehlab.bundled_pattern("doubleP4")
    assert ehlab.homogeneous_number(dp4)["value"] == 2
    assert ehlab.h_from_s_cliques(dp4)["value"] == 2
    assert ehlab.s_clique(ehlab.bundled_pattern("rainbow3"), [1, 2])[0] == 2
    size, witness = ehlab.max_independent_set(7, [(i, (i + 1) % 7) for i in range(7)])
    assert size == 3 and len(witness) == 3


def test_product_identity():
    a = ehlab.random_colouring(4, 3, [1, 2, 3], seed=1)
    b = ehlab.random_colouring(5, 3, [1, 2, 3], seed=2)
    p = ehlab.lex_product(a, b)
    for colours in ([1], [2, 3], [1, 3]):
        assert ehlab.s_clique(p, colours)[0] == ehlab.s_clique(a, colours)[0] * ehlab.s_clique(b, colours)[0]


def test_exact_and_minimize():
    dp4 = ehlab.bundled_pattern("doubleP4")
    r = ehlab.exact_h(6, 2, dp4)
    assert r["value"] == 3
    assert ehlab.is_free(r["witness"], dp4)
    colouring, value = ehlab.minimize_h(4, 2, dp4, budget=5000, seed=1)
    assert value == 2 and ehlab.is_free(colouring, dp4)
    m = ehlab.verify_monotone(4, ehlab.bundled_pattern("twoone"), 3)
    assert m["holds"] and m["hypothesis_met"]
    with pytest.raises(ehlab.CapExceeded):
        ehlab.exact_h(7, 3, ehlab.bundled_pattern("twoone"), max_leaves=10)


def test_constructions_are_free():
    host = ehlab.k4_free_host_colouring(30, seed=2)
    assert ehlab.is_free(host, ehlab.bundled_pattern("doubleP4"))
    r = ehlab.recolour_extra(host, 0.5, seed=3)
    assert r.s == 4
    assert ehlab.is_free(r, ehlab.bundled_pattern("doubleP4"))


def test_cli_json_report():
    code, out, _ = ehlab.run_cli(["exact", "--n", "4", "--s", "2", "--pattern", "doubleP4", "--json"])
    assert code == 0
    report = json.loads(out)
    assert report["value"] == 2
    assert report["report_version"] == 1
    code, _, _ = ehlab.run_cli(["exact", "--n", "4"])
    assert code == 2
