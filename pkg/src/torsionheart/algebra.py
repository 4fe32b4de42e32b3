"""Bound quiver algebras over prime fields.

A path is stored as (source_vertex_index, tuple_of_arrow_indices) and paths
compose left to right: p * q means "traverse p, then q".  The quotient basis
of kQ/I is computed by truncating the path algebra at increasing lengths L
and echelonizing the ideal span {trunc_L(u * r * v)} until every path of the
top length dies, which certifies R^L <= I and hence admissibility within the
cap.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .config import DEFAULT_CAPS, ResourceCaps
from .exceptions import AdmissibilityError, QuiverParseError

Path = tuple[int, tuple[int, ...]]  # (source vertex index, arrow indices)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (2 <= self.p <= 251) or not _is_prime(self.p):
            raise ValueError(f"field order must be a prime in [2, 251], got {self.p}")

    def inv(self, x: int) -> int:
        return linalg.inv_mod(x, self.p)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverParseError("duplicate vertex labels")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverParseError("duplicate arrow names")
        n = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise QuiverParseError(f"arrow {a.name} has undeclared endpoint")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise QuiverParseError(f"unknown vertex {label!r}") from None

    def reversed(self) -> "Quiver":
        return Quiver(
            self.vertices,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
        )


def path_target(quiver: Quiver, path: Path) -> int:
    v, arrows = path
    for a in arrows:
        v = quiver.arrows[a].target
    return v


def path_concat(quiver: Quiver, p1: Path, p2: Path) -> Path | None:
    """p1 * p2 (traverse p1, then p2); None when endpoints do not match."""
    if path_target(quiver, p1) != p2[0]:
        return None
    return (p1[0], p1[1] + p2[1])


# a relation is a list of (coefficient, Path); all paths parallel, length >= 2
Relation = list[tuple[int, Path]]


class BoundQuiverAlgebra:
    """kQ/I with a computed finite path basis and multiplication table."""

    def __init__(self, quiver: Quiver, field: PrimeField, relations: list[Relation],
                 caps: ResourceCaps = DEFAULT_CAPS):
        self.quiver = quiver
        self.field = field
        self.relations = relations
        self.caps = caps
        self._validate_relations()
        self._build_basis()
        self._mult_cache: dict[tuple[int, int], dict[int, int]] = {}
        self._op: BoundQuiverAlgebra | None = None
        self.key = self._content_key()

    # -- construction --------------------------------------------------

    def _validate_relations(self):
        q = self.quiver
        for rel in self.relations:
            if not rel:
                raise QuiverParseError("empty relation")
            src = rel[0][1][0]
            tgt = path_target(q, rel[0][1])
            for coeff, path in rel:
                if len(path[1]) < 2:
                    raise AdmissibilityError(
                        "relation involves a path of length < 2; ideal not admissible"
                    )
                for a_prev, a_next in zip(path[1], path[1][1:]):
                    if q.arrows[a_prev].target != q.arrows[a_next].source:
                        raise QuiverParseError("relation path is not composable")
                if path[0] != src or path_target(q, path) != tgt:
                    raise QuiverParseError("relation terms are not parallel paths")

    def _paths_up_to(self, length: int) -> list[Path]:
        q = self.quiver
        out: list[Path] = [(v, ()) for v in range(q.n)]
        frontier = list(out)
        for _ in range(length):
            new: list[Path] = []
            for path in frontier:
                tgt = path_target(q, path)
                for ai, arrow in enumerate(q.arrows):
                    if arrow.source == tgt:
                        new.append((path[0], path[1] + (ai,)))
            out.extend(new)
            frontier = new
            if len(out) > self.caps.path_count_cap:
                raise AdmissibilityError(
                    f"more than {self.caps.path_count_cap} paths below the length cap; "
                    "ideal does not look admissible"
                )
            if not frontier:
                break
        return out

    def _ideal_rows(self, paths: list[Path], index: dict[Path, int], length: int) -> np.ndarray:
        """Span of trunc_L(u * r * v) over all relations r and paths u, v."""
        q = self.quiver
        p = self.field.p
        rows = []
        by_target: dict[int, list[Path]] = {}
        by_source: dict[int, list[Path]] = {}
        for path in paths:
            by_target.setdefault(path_target(q, path), []).append(path)
            by_source.setdefault(path[0], []).append(path)
        for rel in self.relations:
            rel_src = rel[0][1][0]
            rel_tgt = path_target(q, rel[0][1])
            min_len = min(len(path[1]) for _, path in rel)
            for u in by_target.get(rel_src, []):
                if len(u[1]) + min_len > length:
                    continue
                for v in by_source.get(rel_tgt, []):
                    if len(u[1]) + min_len + len(v[1]) > length:
                        continue
                    vec = np.zeros(len(paths), dtype=np.int64)
                    hit = False
                    for coeff, mid in rel:
                        total = (u[0], u[1] + mid[1] + v[1])
                        if len(total[1]) <= length:
                            vec[index[total]] = (vec[index[total]] + coeff) % p
                            hit = True
                    if hit and vec.any():
                        rows.append(vec)
        if not rows:
            return linalg.zeros(0, len(paths))
        return np.stack(rows, axis=0)

    def _build_basis(self):
        p = self.field.p
        min_rel = 2
        start = max([min_rel] + [max(len(path[1]) for _, path in rel) for rel in self.relations]) \
            if self.relations else min_rel
        for length in range(start, self.caps.length_cap + 1):
            paths = self._paths_up_to(length)
            # no paths of the top length at all: the quiver is acyclic at this depth
            top = [path for path in paths if len(path[1]) == length]
            index = {path: i for i, path in enumerate(paths)}
            ideal = self._ideal_rows(paths, index, length)
            r, pivots = linalg.rref(ideal, p)
            r = r[: len(pivots)]
            dead_top = all(
                linalg.in_row_space(self._unit(index, path, len(paths)), r, pivots, p)
                for path in top
            )
            if dead_top:
                self._finalize(paths, index, r, pivots, length)
                return
        raise AdmissibilityError(
            f"path basis did not stabilize below length {self.caps.length_cap}"
        )

    @staticmethod
    def _unit(index: dict[Path, int], path: Path, n: int) -> np.ndarray:
        v = np.zeros(n, dtype=np.int64)
        v[index[path]] = 1
        return v

    def _finalize(self, paths, index, rref_rows, pivots, length):
        p = self.field.p
        # order columns so that longer paths are preferred as pivots: re-echelonize
        # over the reversed-graded order, then the surviving (non pivot) paths are
        # the shortest representatives.
        order = sorted(range(len(paths)), key=lambda i: (-len(paths[i][1]), paths[i]))
        inv_order = {c: k for k, c in enumerate(order)}
        if rref_rows.shape[0]:
            permuted = rref_rows[:, order]
            r2, piv2 = linalg.rref(permuted, p)
            r2 = r2[: len(piv2)]
        else:
            r2, piv2 = linalg.zeros(0, len(paths)), []
        pivot_orig = {order[c] for c in piv2}
        basis_cols = [i for i in range(len(paths)) if i not in pivot_orig]
        basis_cols.sort(key=lambda i: (len(paths[i][1]), paths[i]))
        self.stabilized_length = length
        self.basis: tuple[Path, ...] = tuple(paths[i] for i in basis_cols)
        self.basis_index = {path: i for i, path in enumerate(self.basis)}
        self._reduction: dict[Path, dict[int, int]] = {}
        # precompute the reduction of every enumerated path to basis coordinates
        for i, path in enumerate(paths):
            vec = np.zeros(len(paths), dtype=np.int64)
            vec[i] = 1
            resid = linalg.reduce_against(vec[order], r2, piv2, p)
            expr: dict[int, int] = {}
            for k, c in enumerate(order):
                if resid[inv_order[c]] % p:
                    expr[self.basis_index[paths[c]]] = int(resid[inv_order[c]]) % p
            self._reduction[path] = expr

    def _content_key(self) -> str:
        h = hashlib.sha1()
        h.update(str(self.field.p).encode())
        h.update("|".join(self.quiver.vertices).encode())
        for a in self.quiver.arrows:
            h.update(f"{a.name}:{a.source}->{a.target};".encode())
        for rel in self.relations:
            for coeff, path in rel:
                h.update(f"{coeff}*{path};".encode())
        return h.hexdigest()

    # -- queries --------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_paths_between(self, src: int, tgt: int) -> list[int]:
        return [
            i for i, path in enumerate(self.basis)
            if path[0] == src and path_target(self.quiver, path) == tgt
        ]

    def reduce_path(self, path: Path) -> dict[int, int]:
        """Basis coordinates of an arbitrary path (zero dict if it dies)."""
        if len(path[1]) >= self.stabilized_length:
            return {}
        cached = self._reduction.get(path)
        if cached is not None:
            return cached
        raise ValueError(f"path {path} outside the enumerated range")

    def multiply_basis(self, i: int, j: int) -> dict[int, int]:
        key = (i, j)
        if key in self._mult_cache:
            return self._mult_cache[key]
        p1, p2 = self.basis[i], self.basis[j]
        joined = path_concat(self.quiver, p1, p2)
        if joined is None or len(joined[1]) >= self.stabilized_length:
            out: dict[int, int] = {}
        else:
            out = self.reduce_path(joined)
        self._mult_cache[key] = out
        return out

    def op(self) -> "BoundQuiverAlgebra":
        """Opposite algebra: reversed arrows and reversed relation paths."""
        if self._op is None:
            rev_relations = [
                [(coeff, self._reverse_path(path)) for coeff, path in rel]
                for rel in self.relations
            ]
            self._op = BoundQuiverAlgebra(
                self.quiver.reversed(), self.field, rev_relations, self.caps
            )
            self._op._op = self
        return self._op

    def _reverse_path(self, path: Path) -> Path:
        src = path_target(self.quiver, path)
        return (src, tuple(reversed(path[1])))

    def reverse_path(self, path: Path) -> Path:
        return self._reverse_path(path)

    def __repr__(self):
        return (
            f"BoundQuiverAlgebra(F_{self.field.p}, {len(self.quiver.vertices)} vertices, "
            f"{len(self.quiver.arrows)} arrows, dim {self.dim})"
        )


def parse_algebra(text: str, caps: ResourceCaps = DEFAULT_CAPS,
                  field_override: int | None = None) -> BoundQuiverAlgebra:
    """Parse the quiver file grammar.

    Lines: `field p`, `vertices v1 v2 ...`, `arrow name: src -> tgt`,
    `relation +p1*p2 - q1*q2 ...`; `#` starts a comment, whitespace is free.
    """
    p_val: int | None = None
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    raw_relations: list[tuple[int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        head = head.lower()
        rest = rest.strip()
        if head == "field":
            try:
                p_val = int(rest)
            except ValueError:
                raise QuiverParseError(f"line {lineno}: bad field order {rest!r}")
        elif head == "vertices":
            vertices.extend(rest.split())
        elif head == "arrow":
            if ":" not in rest or "->" not in rest:
                raise QuiverParseError(f"line {lineno}: arrow syntax is `arrow a: v -> w`")
            name, _, ends = rest.partition(":")
            src, _, tgt = ends.partition("->")
            arrows.append((name.strip(), src.strip(), tgt.strip()))  # resolved below
        elif head == "relation":
            raw_relations.append((lineno, rest))
        else:
            raise QuiverParseError(f"line {lineno}: unknown directive {head!r}")

    if field_override is not None:
        p_val = field_override
    if p_val is None:
        raise QuiverParseError("missing `field` directive")
    if not vertices:
        raise QuiverParseError("missing `vertices` directive")
    try:
        fp = PrimeField(p_val)
    except ValueError as exc:
        raise QuiverParseError(str(exc)) from None

    vtuple = tuple(vertices)
    vindex = {v: i for i, v in enumerate(vtuple)}
    resolved = []
    for name, src, tgt in arrows:
        if src not in vindex or tgt not in vindex:
            raise QuiverParseError(f"arrow {name}: endpoint not declared")
        if not name:
            raise QuiverParseError("arrow with empty name")
        resolved.append(Arrow(name, vindex[src], vindex[tgt]))
    quiver = Quiver(vtuple, tuple(resolved))
    arrow_index = {a.name: i for i, a in enumerate(quiver.arrows)}

    relations: list[Relation] = []
    for lineno, body in raw_relations:
        rel: Relation = []
        for term in _split_signed_terms(body, lineno):
            sign, path_text = term
            names = [t.strip() for t in path_text.split("*") if t.strip()]
            if not names:
                raise QuiverParseError(f"line {lineno}: empty path in relation")
            idxs = []
            for nm in names:
                if nm not in arrow_index:
                    raise QuiverParseError(f"line {lineno}: unknown arrow {nm!r}")
                idxs.append(arrow_index[nm])
            src = quiver.arrows[idxs[0]].source
            path: Path = (src, tuple(idxs))
            rel.append((sign % fp.p, path))
        relations.append(rel)

    return BoundQuiverAlgebra(quiver, fp, relations, caps)


def _split_signed_terms(body: str, lineno: int) -> list[tuple[int, str]]:
    out: list[tuple[int, str]] = []
    current = []
    sign = 1
    started = False
    for ch in body:
        if ch in "+-":
            if started and "".join(current).strip():
                out.append((sign, "".join(current).strip()))
                current = []
            sign = 1 if ch == "+" else -1
            started = True
        else:
            current.append(ch)
            started = True
    if "".join(current).strip():
        out.append((sign, "".join(current).strip()))
    if not out:
        raise QuiverParseError(f"line {lineno}: empty relation body")
    return out
