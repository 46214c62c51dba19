"""Independent ground truth for the constructive pipeline.

Nothing in here trusts the lattice/poset machinery: automorphism groups
are found by backtracking over vertex images with color-refinement and
adjacency pruning, spectra by character sums cross-checked against a
floating-point DFT, and ``full_verify`` runs both sides over every
divisor subset and compares exact group orders.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .arith import moebius, totient
from .errors import BoundExceededError, InternalConsistencyError, NotRationalError
from .lattice import DivisorLattice, divisors, tau
from .perms import Perm, PermutationGroup
from .posets import lattice_to_poset
from .gwp import gwp_generators, gwp_order, transport
from . import sring

DEFAULT_MAX_ORACLE_N = 40


@dataclass(frozen=True)
class CirculantGraph:
    """Cayley graph over Z_n: arcs x -> x + s for every s in the connection set.

    Loops are rejected (0 may not be in the set); the graph is undirected
    exactly when the set is closed under negation.
    """

    n: int
    connection: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("modulus must be positive")
        if any(not 1 <= s < self.n for s in self.connection):
            raise ValueError("connection set must consist of nonzero residues")

    @classmethod
    def of(cls, n: int, connection) -> "CirculantGraph":
        reduced = frozenset(s % n for s in connection)
        if 0 in reduced:
            raise ValueError("loops are not supported: 0 in connection set")
        return cls(n, reduced)

    @property
    def is_undirected(self) -> bool:
        return self.connection == frozenset((-s) % self.n for s in self.connection)

    def out_masks(self) -> list[int]:
        """Out-neighborhoods as bitmasks, one per vertex."""
        masks = [0] * self.n
        for x in range(self.n):
            m = 0
            for s in self.connection:
                m |= 1 << ((x + s) % self.n)
            masks[x] = m
        return masks

    def in_masks(self) -> list[int]:
        masks = [0] * self.n
        for x in range(self.n):
            m = 0
            for s in self.connection:
                m |= 1 << ((x - s) % self.n)
            masks[x] = m
        return masks


def _stable_coloring(n: int, out_m: list[int], in_m: list[int]) -> list[int]:
    """Iterated neighborhood color refinement on the arc relation."""
    colors = [0] * n
    while True:
        sig = []
        for v in range(n):
            out_cols = sorted(colors[u] for u in range(n) if out_m[v] >> u & 1)
            in_cols = sorted(colors[u] for u in range(n) if in_m[v] >> u & 1)
            sig.append((colors[v], tuple(out_cols), tuple(in_cols)))
        table: dict[tuple, int] = {}
        fresh = []
        for s in sig:
            if s not in table:
                table[s] = len(table)
            fresh.append(table[s])
        if fresh == colors:
            return colors
        colors = fresh


def _search_automorphism(
    n: int,
    out_m: list[int],
    in_m: list[int],
    color_mask: list[int],
    colors: list[int],
    forced: list[tuple[int, int]],
):
    """One automorphism extending the forced partial map, or None.

    Backtracking over vertex images with per-vertex candidate bitmasks;
    mapping a vertex immediately prunes every unmapped candidate set
    through both arc directions.
    """
    full = (1 << n) - 1
    cand = [color_mask[colors[v]] for v in range(n)]
    img = [-1] * n
    used = 0

    def place(v: int, w: int, cand):
        new = cand[:]
        out_v, in_v = out_m[v], in_m[v]
        out_w, in_w = out_m[w], in_m[w]
        for u in range(n):
            if img[u] >= 0 or u == v:
                continue
            m = new[u]
            m &= out_w if out_v >> u & 1 else ~out_w & full
            m &= in_w if in_v >> u & 1 else ~in_w & full
            if not m:
                return None
            new[u] = m
        return new

    def dfs(cand, used) -> bool:
        best, best_count = -1, n + 1
        for v in range(n):
            if img[v] >= 0:
                continue
            c = (cand[v] & ~used).bit_count()
            if c < best_count:
                best, best_count = v, c
                if c <= 1:
                    break
        if best < 0:
            return True
        if best_count == 0:
            return False
        m = cand[best] & ~used
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            img[best] = w
            nxt = place(best, w, cand)
            if nxt is not None and dfs(nxt, used | (1 << w)):
                return True
            img[best] = -1
        return False

    for v, w in forced:
        if not cand[v] >> w & 1 or used >> w & 1:
            return None
        img[v] = w
        nxt = place(v, w, cand)
        if nxt is None:
            return None
        cand = nxt
        used |= 1 << w

    return list(img) if dfs(cand, used) else None


def brute_force_aut(
    graph: CirculantGraph, max_n: int = DEFAULT_MAX_ORACLE_N
) -> PermutationGroup:
    """Full automorphism group by stabilizer-chain backtracking.

    For each base vertex in turn, searches for one automorphism fixing all
    earlier vertices and moving the base to each candidate image; the
    collected permutations generate the whole group and the product of the
    discovered orbit sizes is its order (cross-checked internally).
    """
    n = graph.n
    if n > max_n:
        raise BoundExceededError(
            f"brute-force search refused for n={n} (bound {max_n})"
        )
    out_m, in_m = graph.out_masks(), graph.in_masks()
    colors = _stable_coloring(n, out_m, in_m)
    ncol = max(colors) + 1
    color_mask = [0] * ncol
    for v, c in enumerate(colors):
        color_mask[c] |= 1 << v

    gens: list[Perm] = []
    order = 1
    for i in range(n):
        forced = [(v, v) for v in range(i)]
        prefix = (1 << i) - 1
        orbit = {i}
        level_gens: list[Perm] = []
        for y in range(i + 1, n):
            if y in orbit or colors[y] != colors[i]:
                continue
            if (out_m[i] & prefix) != (out_m[y] & prefix):
                continue
            if (in_m[i] & prefix) != (in_m[y] & prefix):
                continue
            img = _search_automorphism(
                n, out_m, in_m, color_mask, colors, forced + [(i, y)]
            )
            if img is None:
                continue
            g = Perm(img)
            gens.append(g)
            level_gens.append(g)
            frontier = list(orbit)
            while frontier:
                p = frontier.pop()
                for h in level_gens:
                    q = h.image[p]
                    if q not in orbit:
                        orbit.add(q)
                        frontier.append(q)
        order *= len(orbit)

    group = PermutationGroup(n, gens)
    if group.order() != order:
        raise InternalConsistencyError(
            f"orbit product {order} != chain order {group.order()}"
        )
    return group


# -- spectrum --------------------------------------------------------------


def ramanujan_sum(q: int, j: int) -> int:
    """Exact character sum of the unit orbit of Z_q at frequency j."""
    if q == 1:
        return 1
    g = math.gcd(j % q, q)
    qg = q // g
    mu = moebius(qg)
    if mu == 0:
        return 0
    return mu * (totient(q) // totient(qg))


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalue multiset of a circulant graph with an integrality verdict.

    ``exact`` marks the integer character-sum path (trace-closed sets);
    otherwise values come from a floating-point DFT.
    """

    n: int
    integral: bool
    exact: bool
    values: tuple

    def to_json_dict(self) -> dict:
        if self.exact:
            vals = list(self.values)
        else:
            vals = [[round(v.real, 9), round(v.imag, 9)] for v in self.values]
        return {
            "n": self.n,
            "integral": self.integral,
            "exact": self.exact,
            "values": vals,
        }


def spectrum(graph: CirculantGraph, tol: float = 1e-6) -> SpectrumReport:
    """Eigenvalues of the arc adjacency matrix.

    Trace-closed connection sets go through the exact character-sum form,
    which is then validated against the DFT before being trusted.
    """
    n = graph.n
    indicator = np.zeros(n)
    for s in graph.connection:
        indicator[s] = 1.0
    dft = np.fft.fft(indicator)

    if sring.is_trace_closed(n, graph.connection):
        orbit_divisors = sorted(
            {math.gcd(s, n) for s in graph.connection}
        )
        exact_vals = tuple(
            sum(ramanujan_sum(n // d, j) for d in orbit_divisors) for j in range(n)
        )
        err = max(abs(dft[j] - exact_vals[j]) for j in range(n)) if n else 0.0
        if err > tol:
            raise InternalConsistencyError(
                f"character sums disagree with DFT by {err}"
            )
        values = tuple(sorted(exact_vals, reverse=True))
        return SpectrumReport(n, True, True, values)

    integral = all(
        abs(v.imag) <= tol and abs(v.real - round(v.real)) <= tol for v in dft
    )
    values = tuple(sorted(dft, key=lambda v: (round(v.real, 9), round(v.imag, 9))))
    return SpectrumReport(n, integral, False, values)


# -- schurity and isomorphism ------------------------------------------------


def schurity_check(lat: DivisorLattice, max_degree: int = 200) -> bool:
    """2-orbits of the constructed group vs. arc relations of the basic sets.

    Always true in theory; a False return means the pipeline broke.
    """
    n = lat.modulus
    p = lattice_to_poset(lat)
    gens = transport(gwp_generators(p, max_degree=max_degree), p, verify=False)
    group = PermutationGroup(n, gens)
    orbit_partition = set(group.two_orbits(max_degree=max_degree))

    basic = sring.basic_sets_from_lattice(lat).ring.basic_sets
    arc_partition = {
        frozenset((x, (x + s) % n) for x in range(n) for s in t) for t in basic
    }
    return orbit_partition == arc_partition


def rational_iso_test(n: int, s, r) -> bool:
    """Isomorphism of two rational circulants: equality on every orbit set."""
    s = frozenset(x % n for x in s)
    r = frozenset(x % n for x in r)
    if not sring.is_trace_closed(n, s) or not sring.is_trace_closed(n, r):
        raise NotRationalError(
            "isomorphism testing here covers trace-closed sets only"
        )
    return all(
        s & sring.orbit_set(n, d) == r & sring.orbit_set(n, d) for d in divisors(n)
    )


def count_rational_circulants(n: int) -> int:
    """Number of loopless rational circulants on Z_n: 2^(tau(n) - 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 ** (tau(n) - 1)


# -- end-to-end cross validation ---------------------------------------------


@dataclass(frozen=True)
class VerifyRecord:
    """Pipeline and oracle results for one divisor subset."""

    n: int
    subset: tuple[int, ...]
    lattice: tuple[int, ...]
    poset: dict
    order_factored: dict[int, int]
    oracle_order_factored: dict[int, int] | None
    match: bool | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "divisors": list(self.subset),
            "lattice": list(self.lattice),
            "poset": self.poset,
            "order_factored": {str(p): e for p, e in sorted(self.order_factored.items())},
            "oracle_order_factored": None
            if self.oracle_order_factored is None
            else {str(p): e for p, e in sorted(self.oracle_order_factored.items())},
            "match": self.match,
        }


@dataclass(frozen=True)
class VerifyReport:
    n: int
    records: tuple[VerifyRecord, ...]

    @property
    def all_match(self) -> bool:
        return all(r.match is not False for r in self.records)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "count": len(self.records),
            "all_match": self.all_match,
            "records": [r.to_json_dict() for r in self.records],
        }


def pipeline_order(n: int, connection) -> tuple[DivisorLattice, dict[int, int]]:
    """Lattice and factored group order for a rational connection set."""
    ring = sring.generate_sring(n, connection)
    if not sring.is_rational(ring):
        raise NotRationalError(f"connection set is not rational over Z_{n}")
    lat = sring.group_basis(ring).lattice
    return lat, gwp_order(lattice_to_poset(lat))


def full_verify(
    n: int,
    max_oracle_n: int = DEFAULT_MAX_ORACLE_N,
    use_oracle: bool | None = None,
) -> VerifyReport:
    """Run the pipeline over every divisor subset, comparing with brute force.

    Oracle comparison is skipped (match None) when n exceeds the brute
    force bound, unless explicitly forced.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if use_oracle is None:
        use_oracle = n <= max_oracle_n
    proper = [d for d in divisors(n) if d != n]
    records = []
    for k in range(len(proper) + 1):
        for subset in combinations(proper, k):
            connection = frozenset().union(
                *(sring.orbit_set(n, d) for d in subset)
            ) if subset else frozenset()
            lat, order = pipeline_order(n, connection)
            poset = lattice_to_poset(lat)
            oracle_order = None
            match = None
            if use_oracle:
                graph = CirculantGraph.of(n, connection)
                oracle_order = brute_force_aut(graph, max_n=max(n, max_oracle_n)).order_factored()
                match = oracle_order == order
            records.append(
                VerifyRecord(
                    n=n,
                    subset=subset,
                    lattice=lat.elements,
                    poset=poset.to_json_dict(),
                    order_factored=order,
                    oracle_order_factored=oracle_order,
                    match=match,
                )
            )
    return VerifyReport(n, tuple(records))
