import pytest

from arglab import (
    CapExceededError,
    PreferencePolicy,
    build_arguments,
    build_graph,
    derive_attacks,
    enumerate_subtheories,
    induced_subgraph,
    is_legal,
    is_rule_complete,
    is_subargument_complete,
    parse_theory,
    to_dot,
)

from conftest import (
    A_B,
    A_B1,
    A_B2,
    A_C,
    A_D,
    C_A,
    C_AB,
    C_ABC,
    C_B,
    C_BC,
    RUNNING_EXAMPLE,
)


def test_running_example_arguments(running_theory):
    args = build_arguments(running_theory)
    assert set(args) == {A_B1, A_B2, A_B, A_C, A_D}
    assert args[A_B].direct_subs == (args[A_B1], args[A_B2])
    assert str(args[A_C].conclusion) == "c"


def test_running_example_attacks(running_graph):
    assert running_graph.attacks == {(A_B, A_C), (A_C, A_D), (A_D, A_C)}
    assert running_graph.sub_edges == {(A_B1, A_B), (A_B2, A_B)}


def test_superiority_blocks_rebuttal_under_last_link(running_theory):
    # making the rule for -c superior to the rule for c removes c's rebuttal
    text = RUNNING_EXAMPLE + "rd > rc.\n"
    graph = build_graph(parse_theory(text))
    assert graph.attacks == {(A_B, A_C), (A_D, A_C)}
    # undercutting is untouched by preferences
    text2 = RUNNING_EXAMPLE + "rc > rb.\nrd > rc.\nrc > rd.\n"
    graph2 = build_graph(parse_theory(text2))
    assert (A_B, A_C) in graph2.attacks


def test_policy_none_ignores_superiority():
    text = RUNNING_EXAMPLE + "rd > rc.\n"
    theory = parse_theory(text)
    args = build_arguments(theory)
    attacks = derive_attacks(theory, args, policy=PreferencePolicy.NONE)
    assert attacks == {(A_B, A_C), (A_C, A_D), (A_D, A_C)}


def test_chain_arguments(chain_graph):
    assert set(chain_graph.arguments) == {C_A, C_B, C_AB, C_BC, C_ABC}
    assert chain_graph.attacks == frozenset()
    assert chain_graph.sub_edges == {(C_A, C_AB), (C_B, C_BC), (C_AB, C_ABC)}


def test_attack_on_subargument_reaches_superargument():
    # -a rebuts the subargument for a, hence also the argument built on it
    theory = parse_theory("r1 : => a.\nr2 : a => b.\nr3 : => -a.\n")
    graph = build_graph(theory)
    assert ("r3()", "r1()") in graph.attacks
    assert ("r3()", "r2(r1())") in graph.attacks


def test_rule_reuse_banned_on_paths():
    # cyclic rule base stays finite: a rule never repeats on a path
    theory = parse_theory("r1 : => a.\nr2 : a => b.\nr3 : b => a.\n")
    args = build_arguments(theory)
    assert set(args) == {"r1()", "r2(r1())", "r3(r2(r1()))"}
    # siblings may still share a rule
    theory2 = parse_theory("r1 : => a.\nr2 : a, a => b.\n")
    args2 = build_arguments(theory2)
    assert "r2(r1(),r1())" in args2


def test_argument_cap():
    with pytest.raises(CapExceededError):
        build_arguments(parse_theory(RUNNING_EXAMPLE), max_args=2)


def test_subargument_completeness(chain_graph):
    assert is_subargument_complete(chain_graph, {C_A, C_B})
    assert is_subargument_complete(chain_graph, {C_A, C_AB, C_ABC})
    assert not is_subargument_complete(chain_graph, {C_BC})
    assert not is_subargument_complete(chain_graph, {C_ABC, C_AB})
    assert is_subargument_complete(chain_graph, set())


def test_rule_completeness(chain_graph):
    # {AB} uses r1 but omits the argument A built solely from r1
    assert not is_rule_complete(chain_graph, {C_AB})
    assert is_rule_complete(chain_graph, {C_A, C_AB})
    # BC's rule r4 is in use and BC's subargument B is present, so BC is owed
    assert not is_rule_complete(chain_graph, {C_A, C_B, C_AB, C_ABC})
    assert is_rule_complete(chain_graph, {C_A, C_B, C_BC})
    assert is_rule_complete(chain_graph, set(chain_graph.arguments))


def test_legal_sets(chain_graph):
    ids = sorted(chain_graph.arguments)
    import itertools

    subarg = [
        s
        for n in range(len(ids) + 1)
        for s in itertools.combinations(ids, n)
        if is_subargument_complete(chain_graph, s)
    ]
    legal = [s for s in subarg if is_legal(chain_graph, s)]
    assert len(subarg) == 12
    assert len(legal) == 10
    assert not is_legal(chain_graph, {C_A, C_B, C_AB, C_BC})
    assert not is_legal(chain_graph, {C_A, C_B, C_AB, C_ABC})


def test_enumerate_subtheories(chain_theory):
    subs = list(enumerate_subtheories(chain_theory))
    assert len(subs) == 16
    assert subs[0][0] == frozenset({"r1", "r2", "r3", "r4"})
    assert subs[1][0] == frozenset({"r1", "r2", "r3"})
    assert subs[-1][0] == frozenset()
    # superiority pairs survive only when both rules do
    theory = parse_theory("r1 : => a.\nr2 : => -a.\nr1 > r2.\n")
    for keep, sub in enumerate_subtheories(theory):
        if keep == {"r1"}:
            assert sub.superiority == frozenset()
        if keep == {"r1", "r2"}:
            assert sub.superiority == {("r1", "r2")}
    with pytest.raises(CapExceededError):
        list(enumerate_subtheories(chain_theory, max_rules=3))


def test_induced_subgraph(running_graph):
    sub = induced_subgraph(running_graph, {A_B1, A_C, A_D})
    assert set(sub.arguments) == {A_B1, A_C, A_D}
    assert sub.attacks == {(A_C, A_D), (A_D, A_C)}
    assert sub.sub_edges == frozenset()
    with pytest.raises(ValueError):
        induced_subgraph(running_graph, {"nope()"})


def test_to_dot(running_graph):
    dot = to_dot(running_graph)
    assert dot.startswith("digraph")
    assert f'"{A_D}" -> "{A_C}";' in dot
    assert f'"{A_B1}" -> "{A_B}" [style=dashed, label="sub"];' in dot
