"""Render a generated signed network to an SVG you can open in a browser.

Node x-positions are the entries of the eigenvector belonging to the
smallest Laplacian eigenvalue, so the two camps separate horizontally.
Frustrated positive edges come out blue, frustrated negative ones red.
"""

import argparse

from signedbalance import (
    GenConfig,
    StyleOptions,
    compute_layout,
    eigen_decompose,
    generate,
    render_svg,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--na", type=int, default=15)
    ap.add_argument("--nb", type=int, default=15)
    ap.add_argument("--frustrated", type=float, default=0.15)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--out", default="layout_demo.svg")
    args = ap.parse_args()

    cfg = GenConfig(args.na, args.nb, 0.4, 0.4, args.frustrated, seed=args.seed)
    g, planted, flipped = generate(cfg)
    print(f"generated {g.n_nodes} nodes, {g.n_edges} edges, {len(flipped)} flipped")

    layout = compute_layout(g, eigen_decompose(g))
    classes = list(layout.edge_classes.values())
    print("frustrated under the eigenvector split:",
          classes.count("frustrated_positive"), "positive,",
          classes.count("frustrated_negative"), "negative")

    style = StyleOptions(group_colors={"A": "#2166ac", "B": "#b2182b"})
    svg = render_svg(layout, style)
    with open(args.out, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
