"""Roll-call ingestion end to end on a synthetic two-party chamber.

Writes a small Voteview-shaped pair of CSVs (20 members, 10 roll
calls, mostly party-line with two mavericks), collapses them into a
weighted agreement network, fits the kernel-density thresholds, builds
the signed graph, and reports who ends up frustrated with whom.

Point --votes/--members at real Voteview exports to run the same flow
on actual data.
"""

import argparse
import os
import tempfile

from signedbalance import (
    agreement_samples,
    compute_layout,
    eigen_decompose,
    frustration_anneal,
    homophily_overlap,
    ingest_to_graph,
    render_svg,
)


def write_synthetic(tmpdir):
    votes = ["congress,chamber,rollnumber,icpsr,cast_code"]
    members = ["congress,chamber,icpsr,bioname,party_code"]
    for i in range(1, 11):
        members.append(f"1,house,{100 + i},DEM {i},100")
        members.append(f"1,house,{200 + i},REP {i},200")
    for roll in range(1, 11):
        for i in range(1, 11):
            cast = 6 if (100 + i == 110 and roll <= 3) else 1
            votes.append(f"1,house,{roll},{100 + i},{cast}")
        for i in range(1, 11):
            cast = 1 if (200 + i == 210 and 4 <= roll <= 6) else 6
            votes.append(f"1,house,{roll},{200 + i},{cast}")
    votes_path = os.path.join(tmpdir, "votes.csv")
    members_path = os.path.join(tmpdir, "members.csv")
    with open(votes_path, "w") as fh:
        fh.write("\n".join(votes) + "\n")
    with open(members_path, "w") as fh:
        fh.write("\n".join(members) + "\n")
    return votes_path, members_path


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--votes", help="Voteview-shaped votes CSV (default: synthesize one)")
    ap.add_argument("--members", help="matching members CSV")
    ap.add_argument("--congress", type=int, default=1)
    ap.add_argument("--chamber", default="house")
    ap.add_argument("--svg", default="congress_demo.svg")
    args = ap.parse_args()

    with tempfile.TemporaryDirectory() as tmpdir:
        if args.votes and args.members:
            votes, members = args.votes, args.members
        else:
            votes, members = write_synthetic(tmpdir)
            print("using the synthetic 20-member fixture")

        collapsed, thresholds, g = ingest_to_graph(
            votes, members, congress=args.congress, chamber=args.chamber
        )
        print(f"{len(collapsed.members)} members, {len(collapsed.pair_stats)} co-voting pairs")
        print(f"positive threshold = {thresholds.positive_threshold:.4f}")
        print(f"negative threshold = {thresholds.negative_threshold:.4f}")

        samples = agreement_samples(collapsed)
        overlap = homophily_overlap(samples["p_plus_intra"], samples["p_plus_inter"])
        print(f"homophily overlap  = {overlap:.4f}  (near 0 means polarized)")

        r = eigen_decompose(g)
        layout = compute_layout(g, r)
        print(f"graph: {g.n_nodes} nodes, {g.n_edges} edges, "
              f"conflict score = {layout.balance.algebraic_conflict_normalized:.4f}")
        frustrated = [
            (e.u, e.v, cls) for e, cls in layout.edge_classes.items() if cls != "non_frustrated"
        ]
        print("frustrated pairs under the eigenvector split:", frustrated or "none")

        fr = frustration_anneal(g, seed=0)
        print(f"annealed frustration index = {fr.epsilon}")

        with open(args.svg, "w") as fh:
            fh.write(render_svg(layout))
        print(f"wrote {args.svg}")


if __name__ == "__main__":
    main()
