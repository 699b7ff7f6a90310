import random

import pytest

from wadgetree.trees import (
    PORT,
    RegularTree,
    TreeFormatError,
    from_spec,
    format_tree,
    level_prefix,
    make_leaf,
    make_node,
    omega_power_tree,
    parse_tree,
    plug,
    plug_single,
    random_context,
    random_regular_tree,
    subtree,
    subtree_at_word,
    unfoldings_equal,
)


def test_roundtrip_serialization():
    t = from_spec(("a", ("b", "a", None), ("c", None, "@loop")))
    again = parse_tree(format_tree(t))
    assert unfoldings_equal(t, again)
    assert format_tree(again) == format_tree(t)


def test_parse_errors():
    with pytest.raises(TreeFormatError):
        parse_tree("node 0 label a left - right -\n")  # missing root
    with pytest.raises(TreeFormatError):
        parse_tree("root 0\nnode 0 label a left 3 right -\n")  # undeclared child
    with pytest.raises(TreeFormatError):
        parse_tree("root 0\nnode 0 label a left - right\n")


def test_plug_identity_context():
    port_only = RegularTree((PORT,), (None,), (None,))
    t = from_spec(("a", "b", None))
    assert unfoldings_equal(plug(port_only, {0: t}), t)


def test_level_prefix_zero_is_port():
    t = from_spec(("a", "a", "a"))
    p = level_prefix(t, 0)
    assert p.size == 1 and p.is_port(p.root)


def test_level_prefix_plug_roundtrip():
    rng = random.Random(7)
    for _ in range(40):
        t = random_regular_tree(rng, "ab", 4)
        for d in range(1, 6):
            p = level_prefix(t, d)
            assert p.is_prefix()
            assignment = {}
            # Ports of a level prefix sit exactly at depth d; recover the
            # subtree of t under each port by walking the prefix.
            def walk(pi, ti, depth):
                if p.is_port(pi):
                    assignment[pi] = subtree(t, ti)
                    return
                pl, pr = p.children(pi)
                tl, tr = t.children(ti)
                if pl is not None:
                    walk(pl, tl, depth + 1)
                if pr is not None:
                    walk(pr, tr, depth + 1)

            walk(p.root, t.root, 0)
            rebuilt = plug(p, assignment)
            assert rebuilt.unfold_to_depth(12) == t.unfold_to_depth(12)


def test_subtree_at_word():
    t = from_spec(("a", ("b", "c", None), None))
    s = subtree_at_word(t, "00")
    assert s is not None and s.labels[s.root] == "c"
    assert subtree_at_word(t, "1") is None


def test_omega_power_left_spine():
    v = make_node("a", left=RegularTree((PORT,), (None,), (None,)))
    t = omega_power_tree(v)
    # infinite left a-spine: the unfolding at any depth is all a's down the left
    u = t.unfold_to_depth(4)
    assert u == ("a", ("a", ("a", ("a", "...", None), None), None), None)


def test_omega_power_identity_undefined():
    ident = RegularTree((PORT,), (None,), (None,))
    with pytest.raises(ValueError):
        omega_power_tree(ident)


def test_context_detection():
    c = random_context(random.Random(3), "ab", 3)
    assert c.is_context()
    two_ports = from_spec(("a", PORT, PORT))
    assert not two_ports.is_context()
    assert two_ports.is_prefix()


def test_port_multiplicity_with_sharing():
    # one port node reachable along two paths: two ports in the unfolding
    t = RegularTree(("a", PORT), (1, None), (1, None), 0)
    assert t.port_multiplicity(1) == 2
    assert not t.is_context()


def test_plug_composes():
    c = from_spec(("a", PORT, "b"))
    inner = from_spec(("c", None, PORT))
    t = make_leaf("b")
    composed = plug_single(c, plug_single(inner, t))
    direct = plug_single(
        from_spec(("a", ("c", None, PORT), "b")), t
    )
    assert unfoldings_equal(composed, direct)
