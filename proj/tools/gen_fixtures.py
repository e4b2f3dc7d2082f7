#!/usr/bin/env python3
# Copyright 2026 The mcknot Authors.
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
"""Writes double-crossing fixture diagrams from KnotInfo PD codes.

Each knot through 9 crossings becomes fixtures/<name>.json; composites are
spliced from their factors.  fixtures/expected_jones.json records the
KnotInfo Jones polynomial of each fixture in A (t = A^-4) for cross-checks.

Usage: gen_fixtures.py [OUT_DIR]
"""

import json
import pathlib
import sys

import sympy
from database_knotinfo import link_list

MAX_CROSSINGS = 9

COMPOSITES = [
    ["3_1", "3_1"], ["3_1", "m3_1"], ["3_1", "4_1"], ["4_1", "4_1"],
    ["3_1", "5_1"], ["3_1", "m5_1"], ["3_1", "5_2"], ["3_1", "m5_2"],
    ["3_1", "6_1"], ["3_1", "m6_1"], ["3_1", "6_2"], ["3_1", "m6_2"],
    ["3_1", "6_3"], ["4_1", "5_1"], ["4_1", "5_2"],
    ["3_1", "3_1", "3_1"], ["3_1", "3_1", "m3_1"],
]
# 4_1 is amphichiral, so 4_1#mK is the mirror image of 4_1#K; the table
# identifies up to mirror and keeps only 4_1#K.

# Fixtures whose Jones polynomial equals another fixture's; written to
# OUT_DIR/ambiguous so the default table build does not see them.
AMBIGUOUS = {"4_1#4_1", "4_1#5_2"}  # same Jones as 8_9 and 9_12


def pd_to_diagram(pd):
    """PD X[a,b,c,d] lists labels counterclockwise from the incoming
    understrand; our spokes run clockwise from the overstrand."""
    ends = {}
    for c, labels in enumerate(pd):
        for k, label in enumerate(labels):
            ends.setdefault(label, []).append([c, 3 - k])
    edges = []
    for label in sorted(ends):
        a, b = ends[label]
        edges.append([a, b])
    return {"free_loops": 0,
            "crossings": [{"order": 2, "type": [1, 2]} for _ in pd],
            "edges": edges}


def mirror(d):
    # Order-2 crossings: swapping heights moves the top strand to spoke 1.
    out = json.loads(json.dumps(d))
    for e in out["edges"]:
        for end in e:
            end[1] = (end[1] - 1) % 4
    return out


def connect(d1, d2):
    if not d1["crossings"]:
        return d2
    shift = len(d1["crossings"])
    e1 = d1["edges"]
    e2 = [[[a[0] + shift, a[1]], [b[0] + shift, b[1]]] for a, b in d2["edges"]]
    (a1, b1), (a2, b2) = e1[0], e2[0]
    return {"free_loops": 0,
            "crossings": d1["crossings"] + d2["crossings"],
            "edges": e1[1:] + e2[1:] + [[a1, a2], [b1, b2]]}


T = sympy.Symbol("t")


def jones_terms(text):
    """KnotInfo Jones in t to [[exponent of A, coefficient], ...]."""
    expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"t": T}))
    terms = {}
    for term in sympy.Add.make_args(expr):
        coeff, power = term.as_coeff_exponent(T)
        terms[-4 * int(power)] = terms.get(-4 * int(power), 0) + int(coeff)
    return {e: c for e, c in terms.items() if c}


def multiply(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def machine(p):
    return [[e, p[e]] for e in sorted(p, reverse=True)]


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    out_dir.mkdir(parents=True, exist_ok=True)
    diagrams, jones = {}, {}
    diagrams["0_1"] = {"free_loops": 1, "crossings": [], "edges": []}
    jones["0_1"] = {0: 1}
    for k in link_list():
        name, pd = k["name"], k["pd_notation"]
        prefix = name.split("_")[0]
        if not pd or "_" not in name or not prefix.isdigit():
            continue
        if not 3 <= int(prefix) <= MAX_CROSSINGS:
            continue
        diagrams[name] = pd_to_diagram(json.loads(pd))
        jones[name] = jones_terms(k["jones_polynomial"])

    def factor(name):
        if name.startswith("m"):
            base = name[1:]
            return mirror(diagrams[base]), {-e: c for e, c in jones[base].items()}
        return diagrams[name], jones[name]

    for parts in COMPOSITES:
        d, j = factor(parts[0])
        for p in parts[1:]:
            d2, j2 = factor(p)
            d, j = connect(d, d2), multiply(j, j2)
        name = "#".join(parts)
        diagrams[name], jones[name] = d, j

    (out_dir / "ambiguous").mkdir(exist_ok=True)
    for name, d in diagrams.items():
        folder = out_dir / "ambiguous" if name in AMBIGUOUS else out_dir
        path = folder / (name.replace("#", "__") + ".json")
        path.write_text(json.dumps({"name": name, **d}, separators=(",", ":")) + "\n")
    lines = [f" {json.dumps(name)}: {json.dumps(machine(jones[name]))}" for name in sorted(jones)]
    (out_dir / "expected_jones.json").write_text("{\n" + ",\n".join(lines) + "\n}\n")
    print(f"wrote {len(diagrams)} fixtures to {out_dir}")


if __name__ == "__main__":
    main()
