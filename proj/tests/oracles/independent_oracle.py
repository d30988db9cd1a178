# Copyright 2026 The cubic2ec Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Freezes reference values for the graph6 corpus with networkx and HiGHS.

Shares no code with the C++ library. Output columns:
graph6,n,edge_connectivity,essentially4ec,opt,lp
with lp as an exact fraction recovered from the floating-point optimum.
"""

import argparse
import itertools
import sys
from fractions import Fraction

import networkx as nx
import numpy as np
from scipy.optimize import LinearConstraint, linprog, milp, Bounds


def all_cut_rows(g, edges):
    nodes = sorted(g.nodes())
    rest = nodes[1:]
    rows = []
    for k in range(0, len(rest)):
        for extra in itertools.combinations(rest, k):
            side = {nodes[0], *extra}
            if len(side) == len(nodes):
                continue
            rows.append([1.0 if (u in side) != (v in side) else 0.0 for u, v in edges])
    return np.array(rows)


def essentially_4ec(g):
    nodes = sorted(g.nodes())
    for k in range(2, len(nodes) - 1):
        for side in itertools.combinations(nodes, k):
            s = set(side)
            cut = sum(1 for u, v in g.edges() if (u in s) != (v in s))
            if cut != 3:
                continue
            inner = g.subgraph(s).number_of_edges()
            outer = g.subgraph(set(nodes) - s).number_of_edges()
            if inner > 0 and outer > 0:
                return False
    return True


def evaluate(line):
    g = nx.from_graph6_bytes(line.encode())
    edges = list(g.edges())
    m = len(edges)
    rows = all_cut_rows(g, edges)
    ones = np.ones(m)

    lp = linprog(ones, A_ub=-rows, b_ub=-2 * np.ones(len(rows)), bounds=[(0, 1)] * m,
                 method="highs")
    if lp.status != 0:
        raise RuntimeError("LP failed for " + line)
    lp_value = Fraction(lp.fun).limit_denominator(1000)

    ip = milp(ones, constraints=LinearConstraint(rows, lb=2, ub=np.inf),
              integrality=np.ones(m), bounds=Bounds(0, 1))
    if ip.status != 0:
        raise RuntimeError("ILP failed for " + line)
    opt = int(round(ip.fun))

    return [line, str(g.number_of_nodes()), str(nx.edge_connectivity(g)),
            "true" if essentially_4ec(g) else "false", str(opt), str(lp_value)]


def distinct_classes(lines):
    graphs = [nx.from_graph6_bytes(l.encode()) for l in lines]
    buckets = {}
    for g in graphs:
        buckets.setdefault(nx.weisfeiler_lehman_graph_hash(g, iterations=4), []).append(g)
    classes = 0
    for group in buckets.values():
        reps = []
        for g in group:
            if not any(nx.is_isomorphic(g, r) for r in reps):
                reps.append(g)
        classes += len(reps)
    return classes


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("corpus", nargs="+")
    parser.add_argument("-o", "--output", required=True)
    args = parser.parse_args()

    lines = []
    for path in args.corpus:
        with open(path) as f:
            lines.extend(l.strip() for l in f if l.strip())

    by_order = {}
    for l in lines:
        by_order.setdefault(nx.from_graph6_bytes(l.encode()).number_of_nodes(), []).append(l)
    for n in sorted(by_order):
        print(f"n={n} graphs={len(by_order[n])} classes={distinct_classes(by_order[n])}",
              file=sys.stderr)

    with open(args.output, "w") as out:
        out.write("graph6,n,edge_connectivity,essentially4ec,opt,lp\n")
        for l in lines:
            out.write(",".join(evaluate(l)) + "\n")


if __name__ == "__main__":
    main()
