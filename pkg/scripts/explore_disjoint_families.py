"""Search for large pairwise disjoint families among the 352 lines.

Runs the best-effort independent-set search on the whole intersection
graph and on each orbit separately.  For each graph it also prints the
vertex-cover bound alpha <= n - ceil(m / maxdeg), which is a genuine upper
bound, unlike a failed search.

    python scripts/explore_disjoint_families.py --budget 20
"""

import argparse
import time

from maschke.certify import Pipeline, build_intersection_graph, independent_set_search


def search(name, lines, target, budget):
    lines = sorted(lines, key=lambda x: x.sort_key())
    t0 = time.perf_counter()
    graph = build_intersection_graph(lines)
    degree = [0] * graph.order
    for i, j in graph.adjacency:
        degree[i] += 1
        degree[j] += 1
    maxdeg = max(degree)
    bound = graph.order - -(-graph.edge_count // maxdeg) if maxdeg else graph.order
    print(f"{name}: {graph.order} lines, {graph.edge_count} meeting pairs, "
          f"degrees {sorted(set(degree))}, independence bound {bound}")
    found = independent_set_search(graph, target, budget=budget)
    dt = time.perf_counter() - t0
    if found is None:
        print(f"  no family of size {target} found ({dt:.1f} s)")
        return None
    print(f"  family of size {len(found)} found ({dt:.1f} s)")
    return {lines[i] for i in found}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--budget", type=float, default=10.0, help="seconds per search")
    parser.add_argument("--target", type=int, default=96)
    args = parser.parse_args()

    pipe = Pipeline()
    fam = search("all 352", pipe.all_lines, args.target, args.budget)
    if fam is not None:
        print(f"  lines from the 192-orbit: {len(fam & pipe.orbit192)}, "
              f"from the 160-orbit: {len(fam & pipe.orbit160)}, "
              f"shared with the <a,b>-orbit of L192: {len(fam & pipe.family96)}")
    search("orbit 160", pipe.orbit160, args.target, args.budget)
    search("orbit 192", pipe.orbit192, args.target, args.budget)


if __name__ == "__main__":
    main()
