import json

import pytest

from signedbalance import (
    MismatchedResultError,
    StyleOptions,
    UnknownGroupColorError,
    build_graph,
    classify_edges,
    compute_layout,
    eigen_decompose,
    render_svg,
)
from signedbalance.schema import validate


def layout_of(g):
    return compute_layout(g, eigen_decompose(g))


def test_x_is_eigenvector_entry(unbalanced_graph):
    r = eigen_decompose(unbalanced_graph)
    layout = compute_layout(unbalanced_graph, r)
    for u, (x, _y) in layout.coords.items():
        assert x == r.node_values[u]


def test_balanced_fixture_buckets(balanced_graph):
    layout = layout_of(balanced_graph)
    # the camp {1,2,3} shares one eigenvector value (up to solver noise),
    # so those nodes stack
    xs = [layout.coords[u][0] for u in (1, 2, 3)]
    assert max(xs) - min(xs) < 1e-12
    ys = sorted(layout.coords[u][1] for u in (1, 2, 3))
    assert ys == [0.0, 1.0, 2.0]
    ys45 = sorted(layout.coords[u][1] for u in (4, 5))
    assert ys45 == [0.0, 1.0]


def test_stack_order_follows_node_ids(balanced_graph):
    layout = layout_of(balanced_graph)
    by_y = sorted((layout.coords[u][1], u) for u in (1, 2, 3))
    assert [u for _, u in by_y] == [1, 2, 3]


def test_single_node_layout():
    g = build_graph([(1, {"group": "X"})], [])
    layout = layout_of(g)
    assert layout.coords[1] == (1.0, 0.0)
    assert layout.balance.is_balanced


def test_identical_values_single_bucket():
    # all-positive triangle: eigenvector is uniform, everything in bucket 0
    g = build_graph([1, 2, 3], [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    layout = layout_of(g)
    ys = sorted(xy[1] for xy in layout.coords.values())
    assert ys == [0.0, 1.0, 2.0]


def test_mismatched_result_rejected(balanced_graph):
    other = build_graph([7, 8, 9], [(7, 8, 1), (8, 9, 1), (7, 9, 1)])
    with pytest.raises(MismatchedResultError):
        compute_layout(balanced_graph, eigen_decompose(other))


def test_edge_classes(unbalanced_graph):
    layout = layout_of(unbalanced_graph)
    classes = list(layout.edge_classes.values())
    assert classes.count("frustrated_positive") == 1
    assert classes.count("frustrated_negative") == 0
    assert classes.count("non_frustrated") == 7


def test_classify_edges_negative_inside():
    g = build_graph([1, 2, 3], [(1, 2, 1), (2, 3, 1), (1, 3, -1)])
    part = {1: 1, 2: 1, 3: 1}
    classes = classify_edges(g, part)
    assert classes[g.edges[2]] == "frustrated_negative"
    assert classes[g.edges[0]] == "non_frustrated"


def test_svg_balanced_fixture(balanced_graph):
    svg = render_svg(layout_of(balanced_graph))
    assert svg.count('class="edge non_frustrated"') == 8
    assert 'frustrated_positive' not in svg
    assert 'frustrated_negative' not in svg
    assert svg.count('class="node"') == 5
    assert 'stroke="gray"' in svg


def test_svg_unbalanced_fixture(unbalanced_graph):
    svg = render_svg(layout_of(unbalanced_graph))
    assert svg.count('class="edge frustrated_positive"') == 1
    assert svg.count('stroke="blue"') == 1
    assert svg.count('class="edge frustrated_negative"') == 0
    assert svg.count('class="edge non_frustrated"') == 7


def test_svg_deterministic(unbalanced_graph):
    a = render_svg(layout_of(unbalanced_graph))
    b = render_svg(layout_of(unbalanced_graph))
    assert a == b


def test_svg_caption_carries_balance(unbalanced_graph):
    svg = render_svg(layout_of(unbalanced_graph))
    assert "0.7798" in svg
    assert "balanced = no" in svg
    svg_off = render_svg(layout_of(unbalanced_graph), StyleOptions(caption=False))
    assert "balanced" not in svg_off


def test_unknown_group_color_error():
    g = build_graph(
        [(1, {"group": "Whig"}), (2, {"group": "Whig"}), (3, {"group": "Whig"})],
        [(1, 2, 1), (2, 3, 1), (1, 3, 1)],
    )
    layout = layout_of(g)
    style = StyleOptions(group_colors={}, default_node_color=None)
    with pytest.raises(UnknownGroupColorError):
        render_svg(layout, style)
    # with a default color it renders fine
    svg = render_svg(layout, StyleOptions(group_colors={}, default_node_color="#123456"))
    assert "#123456" in svg


def test_group_colors_applied():
    g = build_graph(
        [(1, {"group": "Democrat"}), (2, {"group": "Republican"}), (3, {"group": "Democrat"})],
        [(1, 2, -1), (2, 3, -1), (1, 3, 1)],
    )
    svg = render_svg(layout_of(g))
    assert "#2166ac" in svg
    assert "#b2182b" in svg


def test_layout_json_shape(unbalanced_graph):
    obj = layout_of(unbalanced_graph).to_json_obj()
    validate(obj, "layout")
    assert len(obj["nodes"]) == 5
    assert len(obj["edges"]) == 8
    assert obj["balance"]["is_balanced"] is False
    # byte determinism of the serialized form
    assert json.dumps(obj) == json.dumps(layout_of(unbalanced_graph).to_json_obj())


def test_svg_viewport_and_margins(unbalanced_graph):
    svg = render_svg(layout_of(unbalanced_graph), StyleOptions(width=600, height=400))
    assert 'width="600"' in svg and 'height="400"' in svg
    assert 'viewBox="0 0 600 400"' in svg
