# Copyright 2026 The edgecolor Authors
#
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

import itertools

import pytest

import edgecolor


def proper(edges, colors):
    seen = set()
    for (u, v), c in zip(edges, colors):
        if c == 0 or (u, c) in seen or (v, c) in seen:
            return False
        seen.add((u, c))
        seen.add((v, c))
    return True


def max_degree(n, edges):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return max(deg)


def test_families_listed():
    assert "gnm-random-simple" in edgecolor.families()
    assert "random-multigraph" in edgecolor.families()


@pytest.mark.parametrize("algorithm", ["greedy", "euler", "random-euler"])
def test_petersen(algorithm):
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges = outer + spokes + inner
    out = edgecolor.color(10, edges, algorithm=algorithm, seed=3)
    assert proper(edges, out["colors"])
    budget = 5 if algorithm == "greedy" else 4
    assert max(out["colors"]) <= budget
    assert edgecolor.chromatic_index(10, edges) == 4


def test_generated_graph_round_trip():
    n, edges = edgecolor.generate("gnm-random-simple", 500, m=2000, seed=7)
    d = max_degree(n, edges)
    out = edgecolor.color(n, edges, algorithm="euler")
    assert out["max_degree"] == d
    assert max(out["colors"]) <= d + 1
    report = edgecolor.verify(n, edges, out["colors"])
    assert report["legal"] and report["within_budget"]


def test_verify_reports_conflict():
    edges = [(0, 1), (1, 2)]
    report = edgecolor.verify(3, edges, [1, 1], budget=3)
    assert not report["legal"]
    assert report["conflicts"] == [(1, 1, 0, 1)]


def test_multigraph_needs_greedy():
    edges = [(0, 1), (0, 1), (1, 2)]
    with pytest.raises(edgecolor.EdgeColorError, match="NotSimple"):
        edgecolor.color(3, edges, algorithm="euler")
    out = edgecolor.color(3, edges, algorithm="greedy")
    assert proper(edges, out["colors"])


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        edgecolor.color(2, [(0, 1)], algorithm="nope")


def test_small_graphs_match_oracle():
    pairs = list(itertools.combinations(range(4), 2))
    for k in range(1, len(pairs) + 1):
        for edges in itertools.combinations(pairs, k):
            used = {x for e in edges for x in e}
            if used != set(range(4)):
                continue
            d = max_degree(4, edges)
            chi = edgecolor.chromatic_index(4, list(edges))
            assert chi in (d, d + 1)
            out = edgecolor.color(4, list(edges), algorithm="random-euler", seed=k)
            assert proper(edges, out["colors"])
            assert chi <= len(set(out["colors"])) <= d + 1
