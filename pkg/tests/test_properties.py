from hypothesis import given, settings
from hypothesis import strategies as st

from brauercat.config import (
    configuration_from_dict,
    configuration_to_dict,
    random_configuration,
    reduce,
    validate,
)
from brauercat.invariants import (
    basis_census,
    center_formula,
    dimension,
    heart_summands,
    loop_count,
    special_cycle_count,
)
from brauercat.quiver import build_quiver, relations, special_cycles

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_random_configurations_are_valid(seed):
    cfg = random_configuration(seed)
    assert validate(cfg).ok
    assert len(cfg.polygons) <= 4
    assert all(c <= 4 for p in cfg.polygons for _, c in p.occurrences)


@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_json_roundtrip(seed):
    cfg = random_configuration(seed)
    assert configuration_from_dict(configuration_to_dict(cfg)) == cfg


@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_quiver_counts_agree_with_configuration(seed):
    cfg = random_configuration(seed)
    q = build_quiver(cfg)
    assert len(q.arrows) == special_cycle_count(cfg)
    assert len(special_cycles(q, cfg)) == special_cycle_count(cfg)
    for node in q.nodes:
        assert q.in_degree(node) == q.out_degree(node) == heart_summands(cfg, node)
    assert q.loop_count == loop_count(cfg)


@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_census_equals_dimension(seed):
    cfg = random_configuration(seed)
    assert basis_census(cfg, explicit=True) == dimension(cfg)


@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_reduce_keeps_invariants(seed):
    cfg = random_configuration(seed)
    red = reduce(cfg)
    assert validate(red).ok
    assert dimension(red) == dimension(cfg)
    assert center_formula(red) == center_formula(cfg)
    assert reduce(red) == red


@settings(max_examples=50, deadline=None)
@given(seed=seeds)
def test_type_two_relations_one_per_cycle(seed):
    cfg = random_configuration(seed)
    q = build_quiver(cfg)
    twos = [r for r in relations(q, cfg) if r.kind == "II"]
    assert len(twos) == len(special_cycles(q, cfg))
