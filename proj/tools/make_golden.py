#!/usr/bin/env python3
# Copyright 2026 The acm-atlas Authors
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
"""Writes golden/*.json from the published classification lists.

Rows are written from the closed forms in g (prime Fano) and r = deg X
(ciCY) only; nothing here calls the C++ engine.
"""

import json
import pathlib
import sys

FANO_GENERA = [2, 3, 4, 5, 6, 7, 8, 9, 10, 12]
CICY_TYPES = [[5], [3, 3], [2, 4], [2, 2, 3], [2, 2, 2, 2]]


def rng(lo, hi, min_stated=True):
    if lo == hi:
        return lo
    out = {"min": lo, "max": hi}
    if not min_stated:
        out["min_stated"] = False
    return out


def row(c1, c2, degree, genus, level, tag, defect, known):
    return {
        "c1": c1,
        "c2": c2,
        "curve": {"degree": degree, "genus": genus, "subcanonical_level": level},
        "tag": tag,
        "linear_span_defect": defect,
        "existence": "known" if known else "conjectural",
    }


def fano_rows(g):
    return [
        row(-1, 1, 1, 0, -2, "line", None, True),
        row(0, 2, 2, 0, -1, "conic", None, True),
        row(1, rng(3, g + 2), rng(3, g + 2), 1, 0, "elliptic", rng(0, g - 1), g in (4, 5, 6, 8)),
        row(2, 2 * g + 2, 2 * g + 2, g + 2, 1, "half_canonical", None, g == 4),
        row(3, 5 * g - 1, 5 * g - 1, 5 * g, 2, "two_canonical", None, False),
    ]


def cicy_rows(r, quintic):
    return [
        row(-2, 1, 1, 0, -2, "line", None, True),
        row(-1, 2, 2, 0, -1, "conic", None, True),
        row(0, rng(3, r), rng(3, r), 1, 0, "elliptic", None, quintic),
        row(1, 2 * r - 2, 2 * r - 2, r, 1, "half_canonical", None, quintic),
        row(2, rng(1, 3 * r - 1, False), rng(1, 3 * r - 1), rng(2, 3 * r), 2, "two_canonical", None, False),
        row(3, 4 * r, 4 * r, 6 * r + 1, 3, "other", None, False),
        row(4, 6 * r, 6 * r, 12 * r + 1, 4, "other", None, quintic),
    ]


def write(directory, name, variety, rows):
    doc = {"schema_version": "1", "variety": variety, "rows": rows}
    (directory / name).write_text(json.dumps(doc, indent=2) + "\n")


def main():
    directory = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "golden")
    directory.mkdir(parents=True, exist_ok=True)
    for g in FANO_GENERA:
        write(directory, f"fano_g{g}.json", f"fano:g={g}", fano_rows(g))
    for degrees in CICY_TYPES:
        r = 1
        for d in degrees:
            r *= d
        tag = "x".join(map(str, degrees))
        write(directory, f"cicy_{tag}.json", f"cicy:{tag}", cicy_rows(r, degrees == [5]))


if __name__ == "__main__":
    main()
