#!/usr/bin/env python3
"""Writes the canonical .rcx documents under tests/data.

The output format matches serialize_document byte for byte: compact JSON,
sorted keys, every section present, rationals as reduced "num/den" strings,
and a trailing newline.

Usage: python3 tools/make_goldens.py [output_dir]
"""

import json
import sys
from fractions import Fraction
from pathlib import Path


def rat(value):
    f = Fraction(str(value))
    return f"{f.numerator}/{f.denominator}"


class Complex:
    """Collects vertices and structures; equal coordinates share one vertex id."""

    def __init__(self, names=None):
        self.vertices = {}
        self.by_point = {}
        self.names = {Fraction_point(p): n for p, n in (names or {}).items()}
        self.cycles = {}
        self.ribbons = {}
        self.ribbon_complexes = {}
        self.ribbon_nerves = {}
        self.vortex_nerves = {}
        self.edges = {}
        self.triangles = {}

    def vertex(self, point, fallback):
        key = Fraction_point(point)
        if key not in self.by_point:
            vid = self.names.get(key, fallback)
            assert vid not in self.vertices, vid
            self.vertices[vid] = [rat(point[0]), rat(point[1])]
            self.by_point[key] = vid
        return self.by_point[key]

    def cycle(self, name, points):
        self.cycles[name] = [self.vertex(p, f"{name}.{i}") for i, p in enumerate(points)]
        return name

    def id_at(self, point):
        return self.by_point[Fraction_point(point)]

    def ribbon(self, name, outer, inner, holes=(), filaments=(), allow_concentric=False):
        self.ribbons[name] = {
            "allow_concentric": allow_concentric,
            "filaments": [[self.id_at(q), self.id_at(p)] for q, p in filaments],
            "holes": [{"at": [rat(x), rat(y)], "label": f"h{i + 1}"} for i, (x, y) in enumerate(holes)],
            "inner": inner,
            "outer": outer,
        }
        return name

    def to_json(self):
        return {
            "cycles": self.cycles,
            "edges": self.edges,
            "ribbon_complexes": {k: {"ribbons": v} for k, v in self.ribbon_complexes.items()},
            "ribbon_nerves": {k: {"ribbons": v} for k, v in self.ribbon_nerves.items()},
            "ribbons": self.ribbons,
            "triangles": self.triangles,
            "vertices": self.vertices,
            "vortex_nerves": self.vortex_nerves,
        }


def Fraction_point(p):
    return (Fraction(str(p[0])), Fraction(str(p[1])))


def document(complexes, probes=(), threshold=None):
    return {
        "complexes": {name: c.to_json() for name, c in complexes.items()},
        "format_version": 1,
        "probes": list(probes),
        "threshold": None if threshold is None else rat(threshold),
    }


def dump(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


# Shared outlines -----------------------------------------------------------

OUTER_A = [(0, 0), (1, .5), (2, 0), (3, .5), (3, 1.5), (2, 2), (1, 1.5), (0, 2), (-1, 1.5), (-1, .5)]
INNER_E = [(0, .25), (1, .75), (2, .25), (2.5, .5), (2.5, .75), (2, 1.35), (1, 1.25), (0, 1.5),
           (-.55, 1.25), (-.55, .75)]
INNER_A = [(0, .25), (1, .75), (2, .25), (2.5, .5), (2.5, 1.25), (2, 1.55), (1, 1.25), (0, 1.5),
           (-.55, 1.25), (-.55, .75)]
OUTER_B = [(2, 2), (1, 2.25), (1, 3.55), (2.25, 3.85), (3.5, 3.25), (3.5, 2.25)]
INNER_B = [(2, 2.25), (1.25, 2.5), (1.25, 3), (2.25, 3.25), (3.25, 3), (3.25, 2.35)]
HOLES_B = [(2.3, 3.41), (2.5, 3.61), (2.8, 3.31)]
HOLES_A3 = [(-.8, 1.05), (2.8, .85), (2.8, 1.2)]
OUTER_B1 = [(2, 2), (1, 2), (0, 3), (-.2, 3.25), (-1, 3.25), (-1, 2.25), (0, 2.15), (1, 1.75)]
INNER_B1 = [(-.85, 2.75), (-.85, 2.35), (0, 2.35), (.25, 2.15), (.25, 2.45)]
SHARED = {(2, 2): "a"}


def fig1():
    single = Complex()
    single.cycle("cycA", OUTER_A)
    single.cycle("cycB", INNER_E)
    single.ribbon("rbE", "cycA", "cycB", holes=[(-.8, 1.05), (2.8, .55)])
    single.ribbon_complexes["rbxK1"] = ["rbE"]

    pair = Complex(SHARED)
    pair.cycle("rbA.outer", OUTER_A)
    pair.cycle("rbA.inner", INNER_A)
    pair.cycle("rbB.outer", OUTER_B)
    pair.cycle("rbB.inner", INNER_B)
    pair.ribbon("rbA", "rbA.outer", "rbA.inner", holes=[(-.8, 1.05), (2.8, .85)])
    pair.ribbon("rbB", "rbB.outer", "rbB.inner", holes=HOLES_B)
    pair.ribbon_complexes["rbxK2"] = ["rbA", "rbB"]
    pair.ribbon_nerves["rbNrvK"] = ["rbA", "rbB"]
    return document({"fig1_1": single, "fig1_2": pair}, probes=["b1_cycles"], threshold=1)


def fig2():
    c = Complex()
    c.cycle("cycA", [(0, .35), (1, .85), (2, .35), (2.3, .65), (2.3, .85), (2, 1.05), (1, 1.15),
                     (0, 1.25), (-.35, 1), (-.35, .75)])
    c.cycle("cycA'", [(0, .25), (1, .75), (2, .25), (2.5, .5), (2.5, 1), (2, 1.35), (1, 1.55),
                      (0, 1.85), (-.55, 1.25), (-.55, .75)])
    c.cycle("cycB", [(0, 0), (1, .5), (2, 0), (3, .5), (3, 1.8), (2, 2), (1, 2.5), (0, 2.25),
                     (-1, 1.5), (-1, .5)])
    c.vortex_nerves["vNrvE"] = {"cycles": ["cycA", "cycA'", "cycB"], "filaments": []}
    return document({"fig2": c})


def fig3():
    c = Complex(SHARED)
    c.cycle("rbA.outer", OUTER_A)
    c.cycle("rbA.inner", INNER_A)
    c.cycle("rbB.outer", OUTER_B)
    c.cycle("rbB.inner", INNER_B)
    c.cycle("rbB'.outer", OUTER_B1)
    c.cycle("rbB'.inner", INNER_B1)
    c.cycle("rbA'.outer", [(7, .25), (7, 1.25), (4, 1.25), (4, .25)])
    c.cycle("rbA'.inner", [(6.5, .35), (6.25, 1), (5.5, .75), (4.5, 1), (4.5, .35), (5.5, .45)])
    c.cycle("rbB''.outer", [(6, 1.75), (6, 2), (5, 3.25), (4.5, 3.25), (4.5, 1.75)])
    c.cycle("rbB''.inner", [(5.75, 2), (5, 2.75), (4.75, 2.75), (4.75, 2)])
    c.ribbon("rbA", "rbA.outer", "rbA.inner", holes=HOLES_A3)
    c.ribbon("rbB", "rbB.outer", "rbB.inner", holes=HOLES_B)
    c.ribbon("rbB'", "rbB'.outer", "rbB'.inner")
    c.ribbon("rbA'", "rbA'.outer", "rbA'.inner")
    c.ribbon("rbB''", "rbB''.outer", "rbB''.inner")
    c.ribbon_complexes["rbxK"] = ["rbA", "rbB'", "rbB", "rbA'", "rbB''"]
    return document({"fig3": c})


def fig4():
    inner = [(0, .25), (1, .75), (2, .25), (2.5, .5), (2.5, 1), (2, 1.35), (1, 1.25), (0, 1.5),
             (-.55, 1.25), (-.55, .75)]
    c = Complex({(1, .5): "q", (1, .75): "p"})
    c.cycle("cycA", OUTER_A)
    c.cycle("cycB", inner)
    c.ribbon("rbE", "cycA", "cycB", holes=[(-.8, 1.3), (-.8, .8), (0, 1.8)],
             filaments=[((1, .5), (1, .75))])
    return document({"fig4": c}, probes=["betti_rb"], threshold=1)


def fig5():
    left = Complex(SHARED)
    left.cycle("rbA.outer", OUTER_A)
    left.cycle("rbA.inner", INNER_A)
    left.cycle("rbB.outer", OUTER_B)
    left.cycle("rbB.inner", INNER_B)
    left.cycle("rbB'.outer", OUTER_B1)
    left.cycle("rbB'.inner", INNER_B1)
    left.ribbon("rbA", "rbA.outer", "rbA.inner", holes=HOLES_A3)
    left.ribbon("rbB", "rbB.outer", "rbB.inner", holes=HOLES_B)
    left.ribbon("rbB'", "rbB'.outer", "rbB'.inner")
    left.ribbon_nerves["rbNrvE"] = ["rbA", "rbB'", "rbB"]

    right = Complex({(2, 2): "a", (1, 1.5): "a'"})
    outer_a2 = [(-1, 1.3) if p == (-1, 1.5) else p for p in OUTER_A]
    inner_a2 = [(1, 1.05) if p == (1, 1.25) else p for p in INNER_A]
    right.cycle("rbA'.outer", outer_a2)
    right.cycle("rbA'.inner", inner_a2)
    right.cycle("rbB'.outer", [(1, 1.5) if p == (1, 2.25) else p for p in OUTER_B])
    right.cycle("rbB'.inner", INNER_B)
    right.ribbon("rbA'", "rbA'.outer", "rbA'.inner", holes=HOLES_A3)
    right.ribbon("rbB'", "rbB'.outer", "rbB'.inner", holes=HOLES_B)
    right.ribbon_nerves["rbNrvE'"] = ["rbA'", "rbB'"]
    return document({"fig5a": left, "fig5b": right}, probes=["b2_holes"], threshold=1)


def squares():
    c = Complex()
    c.cycle("S1", [(0, 0), (4, 0), (4, 4), (0, 4)])
    c.cycle("S2", [(2, 0), (6, 0), (6, 4), (2, 4)])
    c.cycle("S3", [(1, 2), (5, 2), (5, 6), (1, 6)])
    return document({"squares": c})


def empty():
    return document({})


DOCUMENTS = {
    "fig1.rcx": fig1,
    "fig2.rcx": fig2,
    "fig3.rcx": fig3,
    "fig4.rcx": fig4,
    "fig5.rcx": fig5,
    "squares.rcx": squares,
    "empty.rcx": empty,
}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "data"
    out.mkdir(parents=True, exist_ok=True)
    for name, make in DOCUMENTS.items():
        (out / name).write_text(dump(make()), encoding="utf-8")
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
