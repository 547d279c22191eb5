"""Core domain model: mixed hypergraphs, partitions, and chromatic spectra.

A mixed hypergraph is a vertex set together with two edge families. Under a
coloring, every C-edge must contain two vertices sharing a color and every
D-edge must contain two vertices with distinct colors. A bi-hypergraph is the
special case where the two families coincide; its 3-element edges are exactly
the triples touching two color classes (neither monochromatic nor rainbow).

Vertices carry integer coordinate tuples (a bare index is a 1-tuple), but
edges always reference dense 0-based vertex indices, so the coloring machinery
never looks at coordinates.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import prod
from pathlib import Path
from typing import Iterable, Mapping

Vertex = tuple[int, ...]
Edge = tuple[int, ...]

__all__ = [
    "Vertex",
    "Edge",
    "CapExceeded",
    "UncolorableError",
    "DimsSpec",
    "MixedHypergraph",
    "Partition",
    "ChromaticSpectrum",
    "make_mixed_hypergraph",
    "is_proper_coloring",
    "is_strict_k_coloring",
    "derived_subhypergraph",
    "to_json_dict",
    "from_json_dict",
    "save_hypergraph",
    "load_hypergraph",
]


class CapExceeded(RuntimeError):
    """A size or time guard was hit; no partial answer is returned.

    `stats` carries partial-progress diagnostics (node counts etc.) so the
    caller can report how far the computation got before aborting.
    """

    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = dict(stats or {})


class UncolorableError(ValueError):
    """Raised when chromatic numbers are requested but no strict coloring exists."""


@dataclass(frozen=True)
class DimsSpec:
    """Ordered dimension vector (n_1, ..., n_s) for the product families.

    Invariants enforced on construction: s >= 2, entries non-increasing, every
    entry >= 3. The reduced family needs the stronger chain
    n_1 >= n_2 > ... > n_s > 3, checked via `require_reduced`.
    """

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        d = tuple(int(v) for v in self.dims)
        object.__setattr__(self, "dims", d)
        if len(d) < 2:
            raise ValueError(f"need at least 2 dimensions, got {d!r}")
        if any(v < 3 for v in d):
            raise ValueError(f"every dimension must be >= 3, got {d!r}")
        if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
            raise ValueError(f"dimensions must be non-increasing, got {d!r}")

    @classmethod
    def of(cls, *dims: int) -> "DimsSpec":
        return cls(tuple(dims))

    @property
    def s(self) -> int:
        return len(self.dims)

    @property
    def vertex_count(self) -> int:
        return prod(self.dims)

    @property
    def is_reduced_family(self) -> bool:
        """True when n_1 >= n_2 > ... > n_s > 3 (strict after the first pair)."""
        d = self.dims
        if d[-1] <= 3:
            return False
        return all(d[i] > d[i + 1] for i in range(1, len(d) - 1))

    def require_reduced(self) -> None:
        if not self.is_reduced_family:
            raise ValueError(
                f"dims {self.dims} invalid for the reduced family: "
                "need n_1 >= n_2 > ... > n_s > 3"
            )


@dataclass(frozen=True)
class MixedHypergraph:
    """Immutable mixed hypergraph over indexed vertices.

    Edges are stored deduplicated, each as an ascending index tuple, with the
    edge lists themselves sorted; equality is therefore structural. `dims` is
    optional metadata recording the coordinate box the vertices came from.
    Build instances through `make_mixed_hypergraph`, which validates input.
    """

    vertices: tuple[Vertex, ...]
    c_edges: tuple[Edge, ...]
    d_edges: tuple[Edge, ...]
    dims: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def is_bihypergraph(self) -> bool:
        return self.c_edges == self.d_edges

    @property
    def bi_edges(self) -> tuple[Edge, ...]:
        if not self.is_bihypergraph:
            raise ValueError("not a bi-hypergraph: C-edge and D-edge families differ")
        return self.c_edges

    def with_bi_edge(self, edge: Iterable[int]) -> "MixedHypergraph":
        """Return a copy with `edge` added to both families."""
        e = tuple(edge)
        return make_mixed_hypergraph(
            self.vertices,
            self.c_edges + (e,),
            self.d_edges + (e,),
            dims=self.dims,
        )


def _canonical_edges(edges: Iterable[Iterable[int]], n: int, family: str) -> tuple[Edge, ...]:
    canon: set[Edge] = set()
    for raw in edges:
        e = tuple(raw)
        if len(e) < 2:
            raise ValueError(f"{family}-edge {e!r} has fewer than 2 vertices")
        if len(set(e)) != len(e):
            raise ValueError(f"{family}-edge {e!r} has a repeated vertex")
        for v in e:
            if not 0 <= v < n:
                raise ValueError(f"{family}-edge {e!r} references invalid vertex index {v}")
        canon.add(tuple(sorted(e)))
    return tuple(sorted(canon))


def make_mixed_hypergraph(
    vertices: Iterable[Vertex],
    c_edges: Iterable[Iterable[int]],
    d_edges: Iterable[Iterable[int]],
    dims: Iterable[int] | None = None,
) -> MixedHypergraph:
    """Validate and canonicalize a mixed hypergraph.

    Raises ValueError for an empty vertex set, ragged or duplicated coordinate
    tuples, out-of-range edge indices, edges with repeated vertices, or edges
    of size < 2. Duplicate edges within a family are silently merged.
    """
    verts = tuple(tuple(int(c) for c in v) for v in vertices)
    if not verts:
        raise ValueError("vertex set must be non-empty")
    width = len(verts[0])
    if width < 1 or any(len(v) != width for v in verts):
        raise ValueError("all vertices must have coordinate tuples of equal length >= 1")
    if any(c < 1 for v in verts for c in v):
        raise ValueError("coordinates must be positive integers")
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertex coordinates")
    box = tuple(int(x) for x in dims) if dims is not None else None
    if box is not None:
        if len(box) != width:
            raise ValueError(f"dims {box} incompatible with coordinate width {width}")
        for v in verts:
            if any(not 1 <= c <= m for c, m in zip(v, box)):
                raise ValueError(f"vertex {v} outside the box {box}")
    return MixedHypergraph(
        vertices=verts,
        c_edges=_canonical_edges(c_edges, len(verts), "C"),
        d_edges=_canonical_edges(d_edges, len(verts), "D"),
        dims=box,
    )


@dataclass(frozen=True)
class Partition:
    """A set partition of vertex indices into nonempty classes, in canonical form.

    Canonical form: each class is an ascending index tuple and classes are
    ordered by their smallest member, so equality ignores color names.
    """

    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> "Partition":
        norm = []
        seen: set[int] = set()
        for c in classes:
            members = tuple(sorted(int(v) for v in c))
            if not members:
                raise ValueError("empty class in partition")
            if seen & set(members):
                raise ValueError("classes are not disjoint")
            seen.update(members)
            norm.append(members)
        norm.sort(key=lambda c: c[0])
        return cls(tuple(norm))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Partition":
        """Build from a color assignment indexed by vertex; labels are arbitrary."""
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls.from_classes(groups.values())

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def universe(self) -> frozenset[int]:
        return frozenset(v for c in self.classes for v in c)

    def label_map(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def as_labels(self) -> tuple[int, ...]:
        """Restricted-growth labels over the contiguous universe 0..n-1.

        Canonical: class ids appear in order of first occurrence, so this
        string is the partition's sort key.
        """
        lab = self.label_map()
        n = len(lab)
        if self.universe != frozenset(range(n)):
            raise ValueError("labels require a contiguous vertex universe 0..n-1")
        return tuple(lab[v] for v in range(n))


@dataclass(frozen=True)
class ChromaticSpectrum:
    """Vector (r_1, ..., r_max) counting feasible partitions by class count.

    Empty when no strict coloring exists. The trailing entry is positive by
    construction, so equal spectra compare equal componentwise.
    """

    counts: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.counts)
        object.__setattr__(self, "counts", c)
        if any(v < 0 for v in c):
            raise ValueError("spectrum entries must be non-negative")
        if c and c[-1] == 0:
            raise ValueError("spectrum must not end in a zero entry (use from_counts)")

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "ChromaticSpectrum":
        c = list(counts)
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @classmethod
    def from_class_counts(cls, by_k: Mapping[int, int]) -> "ChromaticSpectrum":
        """Build from a {class count: number of partitions} mapping."""
        top = max((k for k, v in by_k.items() if v), default=0)
        return cls(tuple(by_k.get(k, 0) for k in range(1, top + 1)))

    @property
    def is_empty(self) -> bool:
        return not self.counts

    def r(self, k: int) -> int:
        if k < 1:
            raise ValueError("class count must be >= 1")
        return self.counts[k - 1] if k <= len(self.counts) else 0

    @property
    def feasible_set(self) -> frozenset[int]:
        return frozenset(k for k, v in enumerate(self.counts, start=1) if v)

    @property
    def lower_chromatic(self) -> int:
        if self.is_empty:
            raise UncolorableError("no strict coloring exists")
        return min(self.feasible_set)

    @property
    def upper_chromatic(self) -> int:
        if self.is_empty:
            raise UncolorableError("no strict coloring exists")
        return len(self.counts)

    @property
    def total_partitions(self) -> int:
        return sum(self.counts)

    def as_report(self) -> dict:
        """Machine-readable report with feasible set and chromatic numbers."""
        return {
            "spectrum": {str(k): v for k, v in enumerate(self.counts, start=1) if v},
            "feasible_set": sorted(self.feasible_set),
            "chi": None if self.is_empty else self.lower_chromatic,
            "chi_bar": None if self.is_empty else self.upper_chromatic,
            "partition_count": self.total_partitions,
        }


def is_proper_coloring(h: MixedHypergraph, p: Partition) -> bool:
    """True iff every C-edge meets some class twice and no D-edge is monochromatic.

    For a 3-element bi-edge this is exactly "the three vertices touch exactly
    two classes". Raises ValueError if `p` does not cover h's vertex set.
    """
    if p.universe != frozenset(range(h.n)):
        raise ValueError("partition does not cover exactly the hypergraph's vertex set")
    lab = p.label_map()
    for e in h.c_edges:
        if len({lab[v] for v in e}) == len(e):
            return False
    for e in h.d_edges:
        if len({lab[v] for v in e}) == 1:
            return False
    return True


def is_strict_k_coloring(h: MixedHypergraph, p: Partition, k: int) -> bool:
    """True iff `p` is proper for `h` and uses exactly `k` nonempty classes."""
    if k < 1:
        raise ValueError(f"color count must be >= 1, got {k}")
    return p.num_classes == k and is_proper_coloring(h, p)


def derived_subhypergraph(h: MixedHypergraph, subset: Iterable[int]) -> MixedHypergraph:
    """Sub-hypergraph induced on `subset`: keeps exactly the edges inside it.

    Vertices are reindexed densely in ascending original-index order; their
    coordinate tuples (and any box metadata) are retained.
    """
    keep = sorted(set(int(v) for v in subset))
    for v in keep:
        if not 0 <= v < h.n:
            raise ValueError(f"vertex index {v} out of range")
    remap = {old: new for new, old in enumerate(keep)}
    member = set(keep)

    def filtered(edges: tuple[Edge, ...]) -> list[Edge]:
        return [tuple(remap[v] for v in e) for e in edges if member.issuperset(e)]

    return make_mixed_hypergraph(
        (h.vertices[v] for v in keep),
        filtered(h.c_edges),
        filtered(h.d_edges),
        dims=h.dims,
    )


# --- JSON interchange -------------------------------------------------------
#
# {"dims": [n1,...,ns] | null, "vertices": [[c1,...,cs],...],
#  "c_edges": [[i,j,k],...], "d_edges": [...]}
# with 0-based indices and edges sorted ascending.


def to_json_dict(h: MixedHypergraph) -> dict:
    return {
        "dims": list(h.dims) if h.dims is not None else None,
        "vertices": [list(v) for v in h.vertices],
        "c_edges": [list(e) for e in h.c_edges],
        "d_edges": [list(e) for e in h.d_edges],
    }


def from_json_dict(data: Mapping) -> MixedHypergraph:
    try:
        vertices = data["vertices"]
        c_edges = data["c_edges"]
        d_edges = data["d_edges"]
    except KeyError as missing:
        raise ValueError(f"hypergraph JSON is missing key {missing}") from None
    return make_mixed_hypergraph(
        (tuple(v) for v in vertices),
        c_edges,
        d_edges,
        dims=data.get("dims"),
    )


def save_hypergraph(h: MixedHypergraph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_json_dict(h), indent=1) + "\n")


def load_hypergraph(path: str | Path) -> MixedHypergraph:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as err:
        raise ValueError(f"invalid hypergraph JSON in {path}: {err}") from None
    return from_json_dict(data)


def all_triples(n: int) -> Iterable[tuple[int, int, int]]:
    """Ascending index triples over range(n), for edge-set complements."""
    return itertools.combinations(range(n), 3)
