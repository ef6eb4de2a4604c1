import tcat


def test_lr_known_values():
    assert tcat.lr([3, 2, 1], [2, 1], [2, 1]) == 2
    assert tcat.lr([2], [1], [1]) == 1
    assert tcat.lr([2, 1], [1], [1]) == 0
    assert tcat.lr([3, 2, 1], [2, 1], [2, 1]) == tcat.lr_oracle([3, 2, 1], [2, 1], [2, 1])


def test_diagram_helpers():
    assert tcat.conjugate([3, 1]) == [2, 1, 1]
    assert tcat.sn_dim([2, 1]) == 2
    assert tcat.h_coeff([1], [1], [], []) == 1
    assert tcat.m_coeff([1], [1], [], []) == 1


def test_socle_layers_worked_example():
    layer1 = tcat.socle_layers_J("-|1;1|-", 0, 1)
    assert layer1 == {"1|-;1|-": 1, "-|-;-|-": 1, "-|1;-|1": 1}
    assert tcat.socle_layers_J("-|1;1|-", 0, 3) == {}
    assert tcat.q_max("0|1;1|0", 0) == 2


def test_resolution_and_ext():
    res = tcat.resolution_terms("bfT", "-|1;1|-", 0)
    assert res["length"] == 2
    assert res["terms"][0] == {"-|1;1|-": 1}
    assert tcat.ext_dim("bfT", "1|-;-|-", "-|1;-|-", 0, 1) == 1
    assert tcat.ext_dim("TT", "-|-;-|-", "-|-;-|-", 0, 0) == 1


def test_level_sets():
    levels = tcat.level_sets("0|1;1|0", 0, "bfP", 3)
    assert levels[0] == ["0|1;1|0"]
    assert sorted(levels[1]) == ["0|-0;-0|0".replace("-0", "0"), "0|1;0|1", "1|0;1|0"]
    assert levels[2] == ["1|0;0|1"]
    assert levels[3] == []


def test_levelizer():
    result = tcat.levelize([("a", "b", "1"), ("b", "a", "1"), ("c", "c", "1/2")])
    reps = {c["representative"] for c in result["classes"]}
    assert reps == {"a", "c"}
    assert result["order"] == ["a", "b", "c"]
    assert ("c", "c", "1/2") in result["phi_zero"]


def test_checks_pass():
    assert tcat.check_m_h_identity(3)["pass"]
    assert tcat.check_rev_symmetry(0, 2)["pass"]
