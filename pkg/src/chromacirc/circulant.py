"""Circulant graphs C_n(J) and digraphs on the vertex set Z_n.

Storage is implicit: a circulant is determined by n and its length set J.
Edges, neighbours and adjacency queries are derived on demand, so
instances with n in the thousands stay cheap to build and hash.
"""

from dataclasses import dataclass

from .errors import EmptyLengthSet, LengthOutOfRange


def _normalize_lengths(J) -> tuple:
    lengths = sorted(set(int(s) for s in J))
    if not lengths:
        raise EmptyLengthSet("length set must be nonempty")
    return tuple(lengths)


@dataclass(frozen=True)
class CirculantGraph:
    """Undirected circulant: {i,j} is an edge iff the circular distance
    min((j-i) mod n, (i-j) mod n) lies in the length set."""

    n: int
    lengths: tuple

    @property
    def edge_count(self) -> int:
        m = self.n * len(self.lengths)
        if self.n % 2 == 0 and self.n // 2 in self.lengths:
            m -= self.n // 2
        return m

    def degree(self) -> int:
        d = 2 * len(self.lengths)
        if self.n % 2 == 0 and self.n // 2 in self.lengths:
            d -= 1
        return d

    def circular_length(self, u: int, v: int) -> int:
        d = (v - u) % self.n
        return min(d, self.n - d)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and self.circular_length(u, v) in self._length_set

    def neighbors(self, u: int):
        """Neighbours of u in ascending vertex order."""
        out = set()
        for s in self.lengths:
            out.add((u + s) % self.n)
            out.add((u - s) % self.n)
        return sorted(out)

    def edges(self):
        """All edges as (u, v) with u < v, ordered by u then by length."""
        n = self.n
        for u in range(n):
            seen = set()
            for s in self.lengths:
                for v in ((u + s) % n, (u - s) % n):
                    if v > u and v not in seen:
                        seen.add(v)
                        yield (u, v)

    @property
    def _length_set(self):
        return frozenset(self.lengths)

    def to_dot(self) -> str:
        lines = ["graph circulant {"]
        for u, v in self.edges():
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CirculantDigraph:
    """Directed circulant: (i,j) is an arc iff (j-i) mod n lies in the
    length set.  In- and out-degree both equal |J| at every vertex."""

    n: int
    lengths: tuple

    @property
    def arc_count(self) -> int:
        return self.n * len(self.lengths)

    def has_arc(self, u: int, v: int) -> bool:
        return (v - u) % self.n in self._length_set

    def out_neighbors(self, u: int):
        return [(u + s) % self.n for s in self.lengths]

    def in_neighbors(self, u: int):
        return [(u - s) % self.n for s in self.lengths]

    def arcs(self):
        """All arcs as (u, v), ordered by tail then by length."""
        for u in range(self.n):
            for s in self.lengths:
                yield (u, (u + s) % self.n)

    @property
    def _length_set(self):
        return frozenset(self.lengths)

    def to_dot(self) -> str:
        lines = ["digraph circulant {"]
        for u, v in self.arcs():
            lines.append(f"  v{u} -> v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(n: int, J) -> CirculantGraph:
    """Circulant graph on n >= 3 vertices with lengths J <= floor(n/2)."""
    lengths = _normalize_lengths(J)
    if n < 3:
        raise LengthOutOfRange(f"need n >= 3, got {n}")
    if lengths[0] < 1 or lengths[-1] > n // 2:
        raise LengthOutOfRange(
            f"graph lengths must lie in 1..{n // 2}, got {list(lengths)}"
        )
    return CirculantGraph(n=n, lengths=lengths)


def build_digraph(n: int, J) -> CirculantDigraph:
    """Circulant digraph on n >= 2 vertices with lengths J <= n-1."""
    lengths = _normalize_lengths(J)
    if n < 2:
        raise LengthOutOfRange(f"need n >= 2, got {n}")
    if lengths[0] < 1 or lengths[-1] > n - 1:
        raise LengthOutOfRange(
            f"digraph lengths must lie in 1..{n - 1}, got {list(lengths)}"
        )
    return CirculantDigraph(n=n, lengths=lengths)
