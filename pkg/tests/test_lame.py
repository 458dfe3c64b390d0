"""Grid configurations and the eight-of-nine closure machinery."""

import pytest
from hypothesis import given, settings, strategies as st

from dualnets.groups import builtin
from dualnets.lame import (
    C2C4_CHAIN,
    CertificateError,
    CollinearTriple,
    InvalidLameConfig,
    LameConfig,
    SEED_CORRECTED,
    SEED_FIRST_CONFIG,
    SEED_LITERAL_TOKENS,
    TriplePoint,
    all_lame_configs,
    all_net_points,
    closure_chain,
    parse_chain,
    parse_seed,
    pt,
    search_chain,
    serialize_chain,
    validate_lame,
)

C3 = builtin("c3")
C2C4 = builtin("c2c4")


def _c3_grid():
    # The unique grid of C3: rows against columns of the whole group.
    left = tuple(CollinearTriple(i, j, C3.mul(i, j)) for i, j in ((1, 1), (2, 2), (3, 3)))
    right = tuple(CollinearTriple(i, j, C3.mul(i, j)) for i, j in ((1, 2), (2, 3), (3, 1)))
    return LameConfig(left, right)


def test_triple_point_basics():
    p = pt(3, 2)
    assert str(p) == "3_2"
    assert TriplePoint.parse(" 3_2 ") == p
    with pytest.raises(ValueError):
        pt(3, 4)
    with pytest.raises(CertificateError):
        TriplePoint.parse("3_4")
    with pytest.raises(CertificateError):
        TriplePoint.parse("x_1")


def test_collinear_triple_parse_and_semantics():
    t = CollinearTriple.parse("{2_1,3_2,1_3}")
    assert t == CollinearTriple(2, 3, 1)
    assert t.holds_in(C3)  # 2*3=1 in C3
    assert not CollinearTriple(2, 3, 2).holds_in(C3)
    assert str(t) == "{2_1,3_2,1_3}"
    with pytest.raises(CertificateError):
        CollinearTriple.parse("{2_1,3_1,1_3}")


def test_validate_lame_accepts_the_c3_grid():
    cfg = _c3_grid()
    pts = validate_lame(cfg, C3)
    assert len(pts) == 9
    assert pts == tuple(sorted(all_net_points(C3), key=lambda p: (p.comp, p.label)))


def test_validate_lame_rejects_broken_grids():
    good = _c3_grid()
    # A non-collinear line.
    bad_line = LameConfig(
        (CollinearTriple(1, 1, 2),) + good.left[1:], good.right
    )
    with pytest.raises(InvalidLameConfig):
        validate_lame(bad_line, C3)
    # Duplicated line across the sides.
    with pytest.raises(InvalidLameConfig):
        validate_lame(LameConfig(good.left, good.left), C3)
    # Foreign label.
    with pytest.raises(InvalidLameConfig):
        validate_lame(
            LameConfig((CollinearTriple(7, 7, 7),) + good.left[1:], good.right), C3
        )
    with pytest.raises(InvalidLameConfig):
        LameConfig(good.left[:2], good.right)


def test_certificate_roundtrip():
    cfg = _c3_grid()
    line = str(cfg)
    assert line.startswith("LAME ")
    parsed = LameConfig.parse(line)
    assert parsed == cfg
    with pytest.raises(CertificateError):
        LameConfig.parse("GRID {1_1,1_2,1_3}")
    with pytest.raises(CertificateError):
        LameConfig.parse("LAME {1_1,1_2,1_3}+{2_1,2_2,2_3} | {1_1,2_2,2_3}")


def test_canonical_is_order_insensitive():
    cfg = _c3_grid()
    shuffled = LameConfig(tuple(reversed(cfg.right)), tuple(reversed(cfg.left)))
    assert shuffled.canonical() == cfg.canonical()


def test_chain_serialization_roundtrip():
    text = serialize_chain(C2C4_CHAIN)
    assert parse_chain(text) == C2C4_CHAIN
    assert parse_chain("# comment\n\n" + text) == C2C4_CHAIN


def test_parse_seed_formats():
    assert parse_seed("1_1, 2_2 3_3") == (pt(1, 1), pt(2, 2), pt(3, 3))
    with pytest.raises(CertificateError):
        parse_seed("1_1, 2_9")


def test_all_lame_configs_counts():
    # C3 has three line partitions; every pair of them forms a grid.
    assert len(all_lame_configs("c3")) == 3
    assert len(all_lame_configs("c2c4")) == 448
    # Canonicalized and unique.
    cfgs = all_lame_configs("c2c4")
    assert len({c.canonical() for c in cfgs}) == len(cfgs)
    for cfg in all_lame_configs("c3"):
        validate_lame(cfg, C3)


def test_c2c4_chain_configs_are_valid_grids():
    for cfg in C2C4_CHAIN:
        validate_lame(cfg, C2C4)
        assert cfg.canonical() in {c.canonical() for c in all_lame_configs("c2c4")}


def test_empty_chain_returns_seed():
    run = closure_chain(C2C4, SEED_CORRECTED, ())
    assert run.succeeded
    assert run.final_points == SEED_CORRECTED
    assert run.added_points() == ()


def test_corrected_seed_closes_to_all_24_points():
    run = closure_chain(C2C4, SEED_CORRECTED, C2C4_CHAIN)
    assert run.succeeded
    assert run.final_points == all_net_points(C2C4)
    assert len(run.final_points) == 24
    # Step-by-step openings, frozen: the first two forced points.
    assert [str(p) for p in run.added_points()[:2]] == ["5_2", "3_2"]
    assert {str(p) for p in run.added_points()[3:9]} == {
        "5_1", "7_1", "2_2", "4_2", "6_3", "8_3"
    }


def test_literal_seed_stalls():
    seed = frozenset(SEED_LITERAL_TOKENS)
    assert len(seed) == 8  # one token repeats
    run = closure_chain(C2C4, seed, C2C4_CHAIN)
    assert not run.succeeded
    assert run.failed_index == 1
    assert len(run.final_points) == 9
    assert {str(p) for p in run.steps[-1].missing} == {"3_2", "5_3"}


def test_first_config_seed_stalls_the_same_way():
    run = closure_chain(C2C4, SEED_FIRST_CONFIG, C2C4_CHAIN)
    assert not run.succeeded
    assert run.failed_index == 1


def test_search_saturates_c2c4():
    res = search_chain(C2C4, SEED_CORRECTED)
    assert res.final_points == all_net_points(C2C4)
    assert res.reached(all_net_points(C2C4))
    replay = closure_chain(C2C4, SEED_CORRECTED, res.chain)
    assert replay.succeeded
    assert replay.final_points == res.final_points


def test_search_respects_goal():
    goal = {pt(5, 2), pt(3, 2)}
    res = search_chain(C2C4, SEED_CORRECTED, goal=goal)
    assert res.reached(goal)
    assert res.rounds <= 2


def test_search_from_complete_set_is_empty():
    res = search_chain(C2C4, all_net_points(C2C4))
    assert res.chain == ()
    assert res.rounds == 0


def test_c3_single_grid_closure():
    # Eight points of the unique C3 grid force the ninth.
    cfg = _c3_grid()
    pts = sorted(cfg.point_set(), key=lambda p: (p.comp, p.label))
    seed = frozenset(pts[:-1])
    res = search_chain(C3, seed)
    assert res.final_points == all_net_points(C3)


def _label_perm_strategy():
    return st.permutations(list(C3.labels))


@given(_label_perm_strategy())
@settings(max_examples=20, deadline=None)
def test_validation_is_equivariant_under_relabeling(perm):
    """Renaming labels by a group automorphism preserves grid validity.

    Only permutations that are automorphisms of C3 keep collinearity, so
    filter by checking the table transports correctly."""
    mapping = dict(zip(C3.labels, perm))
    is_auto = all(
        mapping[C3.mul(i, j)] == C3.mul(mapping[i], mapping[j])
        for i in C3.labels
        for j in C3.labels
    )
    cfg = _c3_grid()
    moved = LameConfig(
        tuple(CollinearTriple(mapping[t.i], mapping[t.j], mapping[t.k]) for t in cfg.left),
        tuple(CollinearTriple(mapping[t.i], mapping[t.j], mapping[t.k]) for t in cfg.right),
    )
    if is_auto:
        validate_lame(moved, C3)
    else:
        with pytest.raises(InvalidLameConfig):
            validate_lame(moved, C3)
