"""Weighted posets, ancestral sets, block partitions and lattice products.

The dictionary implemented here: a sublattice of the divisor lattice of n
containing 1 and n corresponds to an increasing poset on [r] with integer
weights (each at least 2, pairwise coprime across incomparable nodes,
multiplying to n).  Ancestral (up-closed) subsets of the poset index the
partitions of the associated block structure on Z_n; complementary weight
products recover the lattice members.  ``weak_iso_map`` is the explicit
point bijection between weight tuples and Z_n that carries one picture to
the other.

Node labels are 0-based internally; JSON and DOT output use 1-based
labels to match the usual diagram conventions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .errors import InternalConsistencyError
from .lattice import DivisorLattice
from .arith import factorize


@dataclass(frozen=True)
class WeightedPoset:
    """An increasing partial order on r nodes with node weights.

    ``leq[i][j]`` holds iff i precedes-or-equals j.  Validity means: leq is
    reflexive, antisymmetric, transitive and increasing (i below j implies
    i <= j); every weight is at least 2; weights of incomparable nodes are
    coprime.
    """

    weights: tuple[int, ...]
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        r = len(self.weights)
        if len(self.leq) != r or any(len(row) != r for row in self.leq):
            raise ValueError("relation matrix shape does not match weight count")
        if any(w < 2 for w in self.weights):
            raise ValueError(f"weights must all be at least 2: {self.weights}")
        leq = self.leq
        for i in range(r):
            if not leq[i][i]:
                raise ValueError("relation must be reflexive")
            for j in range(r):
                if i != j and leq[i][j] and leq[j][i]:
                    raise ValueError("relation must be antisymmetric")
                if leq[i][j] and i > j:
                    raise ValueError("labeling must be increasing (i below j needs i <= j)")
                for k in range(r):
                    if leq[i][j] and leq[j][k] and not leq[i][k]:
                        raise ValueError("relation must be transitive")
        for i in range(r):
            for j in range(i + 1, r):
                if not leq[i][j] and not leq[j][i]:
                    if math.gcd(self.weights[i], self.weights[j]) != 1:
                        raise ValueError(
                            f"incomparable nodes {i},{j} have non-coprime weights"
                        )

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> int:
        n = 1
        for w in self.weights:
            n *= w
        return n

    def strict_pairs(self) -> list[tuple[int, int]]:
        """All pairs (i, j) with i strictly below j."""
        return [
            (i, j)
            for i in range(self.size)
            for j in range(self.size)
            if i != j and self.leq[i][j]
        ]

    def up_set(self, i: int) -> frozenset[int]:
        """Strict ancestors {j : i strictly below j}."""
        return frozenset(j for j in range(self.size) if j != i and self.leq[i][j])

    def down_set(self, i: int) -> frozenset[int]:
        """All j below-or-equal i, including i itself."""
        return frozenset(j for j in range(self.size) if self.leq[j][i])

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for i, j in self.strict_pairs():
            if not any(k != i and k != j and self.leq[i][k] and self.leq[k][j]
                       for k in range(self.size)):
                out.append((i, j))
        return sorted(out)

    def to_json_dict(self) -> dict:
        return {
            "r": self.size,
            "relations": [[i + 1, j + 1] for i, j in sorted(self.strict_pairs())],
            "weights": list(self.weights),
        }

    def to_dot(self, name: str = "poset") -> str:
        """Hasse diagram with weight labels, edges pointing upward."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, w in enumerate(self.weights):
            lines.append(f'  "{i + 1}" [label="{i + 1} [{w}]"];')
        for i, j in self.covers():
            lines.append(f'  "{i + 1}" -> "{j + 1}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def poset_from_pairs(weights, pairs) -> WeightedPoset:
    """Build a poset from strict-order pairs (0-based), closing transitively."""
    r = len(tuple(weights))
    leq = [[i == j for j in range(r)] for i in range(r)]
    for i, j in pairs:
        leq[i][j] = True
    for k in range(r):
        for i in range(r):
            if leq[i][k]:
                for j in range(r):
                    if leq[k][j]:
                        leq[i][j] = True
    return WeightedPoset(tuple(weights), tuple(tuple(row) for row in leq))


def antichain(weights) -> WeightedPoset:
    return poset_from_pairs(weights, [])


def chain(weights) -> WeightedPoset:
    ws = tuple(weights)
    return poset_from_pairs(ws, [(i, i + 1) for i in range(len(ws) - 1)])


def poset_isomorphic(p: WeightedPoset, q: WeightedPoset) -> bool:
    """Weighted-poset isomorphism by exhaustive relabeling; fine for small r."""
    if p.size != q.size or sorted(p.weights) != sorted(q.weights):
        return False
    r = p.size
    for perm in permutations(range(r)):
        if all(p.weights[i] == q.weights[perm[i]] for i in range(r)) and all(
            p.leq[i][j] == q.leq[perm[i]][perm[j]] for i in range(r) for j in range(r)
        ):
            return True
    return False


@dataclass(frozen=True)
class AncestralFamily:
    """All up-closed subsets of a poset, ordered by (size, members)."""

    poset: WeightedPoset
    sets: tuple[frozenset[int], ...]


def ancestral_sets(p: WeightedPoset) -> AncestralFamily:
    r = p.size
    found = []
    for bits in range(1 << r):
        members = frozenset(i for i in range(r) if bits >> i & 1)
        if all(p.up_set(i) <= members for i in members):
            found.append(members)
    found.sort(key=lambda s: (len(s), sorted(s)))
    return AncestralFamily(p, tuple(found))


def complement_weight_product(p: WeightedPoset, j: frozenset[int]) -> int:
    out = 1
    for i in range(p.size):
        if i not in j:
            out *= p.weights[i]
    return out


def poset_to_lattice(p: WeightedPoset) -> DivisorLattice:
    """Lattice of complementary weight products over all ancestral sets."""
    members = {complement_weight_product(p, j) for j in ancestral_sets(p).sets}
    return DivisorLattice.of(p.total, members)


def lattice_to_poset(lat: DivisorLattice) -> WeightedPoset:
    """Inverse construction: peel maximal elements to grow the poset node by node.

    The new node is attached below nothing and above exactly the nodes
    outside the ancestral set realizing gcd(m, s), where m is the chosen
    maximal element and s the smallest member outside the interval below
    m.  Ties among maximal elements break to the numerically largest.
    """
    n = lat.modulus
    if n < 2:
        raise ValueError("no poset for modulus 1")
    if not lat.is_unital:
        raise ValueError("lattice must contain 1")
    if lat.elements == (1, n):
        return WeightedPoset((n,), ((True,),))

    m = max(lat.maximal_elements())
    sub = lattice_to_poset(lat.below(m))
    s = min(x for x in lat.elements if m % x != 0)
    g = math.gcd(m, s)

    fam = ancestral_sets(sub)
    hits = [j for j in fam.sets if complement_weight_product(sub, j) == g]
    if len(hits) != 1:
        raise InternalConsistencyError(
            f"ancestral product {g} realized {len(hits)} times in {sub}"
        )
    j_star = hits[0]

    r = sub.size
    leq = [list(row) + [False] for row in sub.leq]
    leq.append([False] * r + [True])
    for x in range(r):
        if x not in j_star:
            leq[x][r] = True
    for x in range(r):  # transitive closure through the new top node
        for y in range(r):
            if leq[x][y] and leq[y][r]:
                leq[x][r] = True
    return WeightedPoset(
        sub.weights + (n // m,), tuple(tuple(row) for row in leq)
    )


class TransportMap:
    """Bijection between weight tuples and Z_n given by the coefficient form.

    Coordinate i carries the coefficient prod of weights of all nodes not
    below-or-equal i; a tuple maps to the coefficient-weighted sum mod n.
    Bijectivity is verified on construction.
    """

    def __init__(self, poset: WeightedPoset) -> None:
        self.poset = poset
        self.n = poset.total
        self.coefficients = tuple(
            complement_weight_product(poset, poset.down_set(i))
            for i in range(poset.size)
        )
        self._forward: dict[tuple[int, ...], int] = {}
        self._backward: dict[int, tuple[int, ...]] = {}
        for t in product(*(range(w) for w in poset.weights)):
            v = sum(c * x for c, x in zip(self.coefficients, t)) % self.n
            self._forward[t] = v
            self._backward[v] = t
        if len(self._backward) != self.n:
            raise InternalConsistencyError(
                f"coefficient map {self.coefficients} is not a bijection mod {self.n}"
            )

    def tuple_to_point(self, t: tuple[int, ...]) -> int:
        return self._forward[t]

    def point_to_tuple(self, v: int) -> tuple[int, ...]:
        return self._backward[v % self.n]


def weak_iso_map(p: WeightedPoset) -> TransportMap:
    """The verified tuple-to-residue bijection for a valid weighted poset."""
    return TransportMap(p)


@dataclass(frozen=True)
class PartitionOfZn:
    """Partition of Z_n into blocks, ordered by smallest member."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        elems = sorted(x for b in self.blocks for x in b)
        if elems != list(range(self.n)):
            raise ValueError("blocks do not partition Z_n")
        if list(self.blocks) != sorted(self.blocks, key=min):
            raise ValueError("blocks must be ordered by smallest member")

    @classmethod
    def of(cls, n: int, blocks) -> "PartitionOfZn":
        return cls(n, tuple(sorted((frozenset(b) for b in blocks), key=min)))

    @property
    def is_uniform(self) -> bool:
        sizes = {len(b) for b in self.blocks}
        return len(sizes) == 1

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for b in self.blocks:
            idx = sorted(b)
            for x in idx:
                a[x, idx] = 1
        return a


def equality_partition(n: int) -> PartitionOfZn:
    return PartitionOfZn.of(n, [{x} for x in range(n)])


def universal_partition(n: int) -> PartitionOfZn:
    return PartitionOfZn.of(n, [set(range(n))])


def coset_partition(n: int, order: int) -> PartitionOfZn:
    """Cosets of the subgroup of the given order in Z_n."""
    if n % order != 0:
        raise ValueError(f"no subgroup of order {order} in Z_{n}")
    step = n // order
    return PartitionOfZn.of(
        n, [set(range(c, n, step)) for c in range(step)]
    )


def poset_block_partition(p: WeightedPoset, j) -> PartitionOfZn:
    """Image on Z_n of the tuple partition 'agree on all coordinates in J'.

    Equals the coset partition of the subgroup whose order is the product
    of the weights outside J.
    """
    j = frozenset(j)
    if not all(p.up_set(i) <= j for i in j):
        raise ValueError(f"{sorted(j)} is not ancestral")
    tm = weak_iso_map(p)
    blocks: dict[tuple[int, ...], set[int]] = {}
    for t in product(*(range(w) for w in p.weights)):
        key = tuple(t[i] for i in sorted(j))
        blocks.setdefault(key, set()).add(tm.tuple_to_point(t))
    return PartitionOfZn.of(p.total, blocks.values())


def orthogonality_check(e: PartitionOfZn, f: PartitionOfZn) -> bool:
    """True iff the 0/1 relation matrices of the two partitions commute."""
    if e.n != f.n:
        raise ValueError("partitions live on different moduli")
    a, b = e.adjacency(), f.adjacency()
    return bool(np.array_equal(a @ b, b @ a))


def crested_product(l1: DivisorLattice, d: int, l2: DivisorLattice) -> DivisorLattice:
    """Mixed crossing/nesting product of lattices at the pivot d in l2.

    Members are products x*y with x = 1 and y in l2, or x in l1 and y in
    l2 divisible by d.  Requires gcd(n1, n2/d) = 1; crossing is d = 1 and
    nesting is d = n2.
    """
    n1, n2 = l1.modulus, l2.modulus
    if d not in l2:
        raise ValueError(f"pivot {d} is not a member of the second lattice")
    if math.gcd(n1, n2 // d) != 1:
        raise ValueError(f"gcd({n1}, {n2}/{d}) must be 1")
    members = set(l2.elements)
    members.update(x * y for x in l1.elements for y in l2.above(d).elements)
    return DivisorLattice.of(n1 * n2, members)


@dataclass(frozen=True)
class SimplicityReport:
    """Whether a lattice decomposes by crossing and nesting alone.

    ``certificate`` is a 4-tuple of poset nodes (0-based) inducing the
    obstructing N shape when the lattice is not simple.
    """

    is_simple: bool
    certificate: tuple[int, int, int, int] | None
    poset: WeightedPoset


_N_PATTERN = poset_from_pairs((3, 2, 3, 2), [(0, 2), (1, 2), (1, 3)]).leq
# weights above are placeholders; only the relation template matters


def find_n_subposet(p: WeightedPoset) -> tuple[int, int, int, int] | None:
    """First 4-tuple of nodes inducing the N relation pattern, if any."""
    r = p.size
    for quad in permutations(range(r), 4):
        if all(
            p.leq[quad[a]][quad[b]] == _N_PATTERN[a][b]
            for a in range(4)
            for b in range(4)
        ):
            return quad
    return None


def is_simple_lattice(lat: DivisorLattice) -> SimplicityReport:
    """A lattice is simple iff its poset has no induced N subposet."""
    p = lattice_to_poset(lat)
    quad = find_n_subposet(p)
    return SimplicityReport(quad is None, quad, p)


def simple_reduction_applies(n: int) -> bool:
    """True iff every sublattice for this modulus is simple.

    Holds exactly when n is a prime power, a prime power times one other
    prime, or a product of three distinct primes.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    exps = sorted(factorize(n).values(), reverse=True)
    if len(exps) == 1:
        return True
    if len(exps) == 2 and exps[1] == 1:
        return True
    if exps == [1, 1, 1]:
        return True
    return False
