import pytest

import tree_ramsey as tr


def test_parse_and_print():
    p = tr.parse_pattern("bistar 3 2")
    assert str(p) == "bistar 2 3"
    assert p.vertex_count == 7
    assert p.edge_count == 6
    assert p.is_tree
    assert not tr.parse_pattern("star 3 +e ll").is_tree
    with pytest.raises(ValueError, match="star <n>"):
        tr.parse_pattern("tree 4")


def test_bounds():
    assert tr.bounds(tr.parse_pattern("bistar 3 5")) == {
        "lo": 13,
        "hi": 14,
        "lo_source": "spine-split",
        "hi_source": "upper-bign",
    }
    b = tr.bistar_bounds(2, 2)
    assert (b["lo"], b["hi"]) == (8, 8)


def test_decide_and_compute():
    star3 = tr.parse_pattern("star 3")
    assert tr.decide(star3, 6)["classification"] == "AllColoringsContain"
    out = tr.decide(star3, 5)
    assert out["classification"] == "Counterexample"
    c = out["coloring"]
    assert not tr.contains_mono(c, "blue", star3)
    assert not tr.contains_mono(c, "red", star3)

    r = tr.compute(tr.parse_pattern("bistar 2 2"), threads=2)
    assert r["value"] == 8
    assert r["lower_certificate"].n == 7

    bounded = tr.compute(tr.parse_pattern("path 6"), node_budget=10)
    assert bounded["value"] is None
    assert bounded["lo"] <= 8 <= bounded["hi"]


def test_constructions_and_certificates():
    w = tr.split_clique_coloring(5, 2)
    assert w.complete
    assert w.color_of(0, 6) == "red"
    assert w.degree(0, "blue") == 4
    p = tr.parse_pattern("bistar 2 2")
    text = tr.certificate(p, w)
    assert text.startswith("ramsey-certificate v1\nclaim no-mono bistar 2 2\nn 7\n")
    assert tr.verify_certificate(text)["valid"]
    assert tr.verify_certificate(text[:20])["problem"] == "malformed"
    assert tr.lower_bound_witness(p) == w

    circ = tr.circulant_star_coloring(3)
    assert sorted(circ.blue_edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert tr.star_plus_edge_coloring(4).n == 8


def test_cli_entry():
    code, out, _ = tr.run_cli(["bounds", "star", "4"])
    assert code == 0
    assert out == "lo=7 hi=7 (star-exact)\n"
    code, _, err = tr.run_cli(["bounds", "nonsense"])
    assert code == 3
    assert "error" in err
