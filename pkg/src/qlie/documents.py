"""JSON documents: structure tables, representations and verification reports.

Scalars are stored as their canonical text form (see :mod:`qlie.render`)
so documents are human readable and round-trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from . import __version__
from .core import BASIS_NAMES, QLieVector, StructureTable
from .errors import DimensionError, ParseError
from .parser import evaluate
from .qcoeff import ExtScalar, HSeries, h_series
from .render import render_scalar

__all__ = [
    "TableDocument",
    "table_document",
    "table_from_document",
    "representation_from_json",
    "representation_to_json",
    "to_json",
    "parse_scalar",
]


def parse_scalar(text):
    if not isinstance(text, str):
        raise ParseError(f"expected a scalar string, got {type(text).__name__}", 0)
    return evaluate(text, "scalar")


def _vec_strings(v):
    return [render_scalar(c) for c in v.coords]


@dataclass
class TableDocument:
    metadata: dict
    entries: list  # entries[i][j] = [x_plus, x_minus, x_zero] strings
    series: dict | None = None
    basis: list = field(default_factory=lambda: list(BASIS_NAMES))

    def to_dict(self):
        out = {"metadata": self.metadata, "basis": self.basis, "entries": self.entries}
        if self.series is not None:
            out["series"] = self.series
        return out

    def dumps(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def loads(cls, text):
        d = json.loads(text)
        return cls(d["metadata"], d["entries"], d.get("series"), d.get("basis", list(BASIS_NAMES)))


def table_document(t, seed=None, series_order=None):
    meta = {
        "tool": "qlie",
        "version": __version__,
        "twist": [render_scalar(c) for c in t.twist],
        "seed": seed,
    }
    entries = [[_vec_strings(t[i, j]) for j in range(3)] for i in range(3)]
    series = None
    if series_order is not None:
        series = {
            "order": series_order,
            "entries": [
                [
                    [[_frac(c) for c in h_series(x, series_order).coeffs] for x in t[i, j].coords]
                    for j in range(3)
                ]
                for i in range(3)
            ],
        }
    return TableDocument(meta, entries, series)


def _frac(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def table_from_document(doc):
    if isinstance(doc, str):
        doc = TableDocument.loads(doc)
    rows = tuple(
        tuple(QLieVector(*(parse_scalar(s) for s in doc.entries[i][j])) for j in range(3))
        for i in range(3)
    )
    twist = tuple(parse_scalar(s) for s in doc.metadata.get("twist", ["1"]))
    return StructureTable(rows, twist)


# --- representations --------------------------------------------------------

def _matrix_from_json(rows, n, what):
    from .rep import as_matrix

    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionError(f"{what} must be a {n}x{n} array")
    return as_matrix([[parse_scalar(x) for x in r] for r in rows])


def representation_from_json(text):
    """Build a Representation from the JSON contract.

    ``{"dimension": n, "pi": {"Xp_h"|"Xm_h"|"H_h": n x n strings},
    "conj": {"i,j": n x n strings}}`` with 1-based matrix-unit indices.
    """
    from .rep import MatConjugation, Representation

    d = json.loads(text) if isinstance(text, str) else text
    n = int(d["dimension"])
    if n < 1:
        raise DimensionError("dimension must be positive")
    pi = d["pi"]
    missing = [b for b in BASIS_NAMES if b not in pi]
    if missing:
        raise DimensionError(f"pi is missing images for {missing}")
    images = tuple(_matrix_from_json(pi[b], n, f"pi[{b}]") for b in BASIS_NAMES)
    conj = {}
    for key, rows in d["conj"].items():
        i, j = (int(x) - 1 for x in key.split(","))
        if not (0 <= i < n and 0 <= j < n):
            raise DimensionError(f"matrix unit {key} out of range for dimension {n}")
        conj[(i, j)] = _matrix_from_json(rows, n, f"conj[{key}]")
    return Representation(n, images, MatConjugation(n, conj))


def _matrix_to_json(m):
    return [[render_scalar(x) for x in row] for row in m]


def representation_to_json(r):
    d = {
        "dimension": r.n,
        "pi": {b: _matrix_to_json(m) for b, m in zip(BASIS_NAMES, r.images)},
        "conj": {
            f"{i + 1},{j + 1}": _matrix_to_json(r.conj.images[(i, j)])
            for i, j in product(range(r.n), repeat=2)
        },
    }
    return json.dumps(d, indent=2)


# --- generic ----------------------------------------------------------------

def to_json(x):
    from .pbw import AlgElement

    if isinstance(x, StructureTable):
        return table_document(x).dumps()
    if isinstance(x, ExtScalar):
        return json.dumps(render_scalar(x))
    if isinstance(x, QLieVector):
        return json.dumps(dict(zip(BASIS_NAMES, _vec_strings(x))))
    if isinstance(x, AlgElement):
        return json.dumps(
            [{"monomial": list(m), "coeff": render_scalar(c)} for m, c in x.items()]
        )
    if isinstance(x, HSeries):
        return json.dumps({"order": x.order, "coeffs": [_frac(c) for c in x.coeffs]})
    raise TypeError(f"cannot serialise {type(x).__name__}")
