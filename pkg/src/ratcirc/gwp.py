"""Generalized wreath products of symmetric groups over a weighted poset.

The group acts on tuples: coordinate i may be permuted by any element of
the symmetric group on its weight, chosen independently for every value
of the projection onto the strict ancestors of i.  Generators are one
adjacent transposition per coordinate per ancestor pattern, which is
enough to generate the whole product while keeping the generating set
linear in the degree.  ``transport`` conjugates the action onto Z_n via
the coefficient bijection and checks the result against every basic
Cayley graph of the corresponding lattice.

Wreath products are written active part first: in A wr C the group A
permutes the blocks and C acts inside each block, so |A wr C| equals
|A| * |C| ^ (number of blocks).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .arith import factored_mul, factored_pow, factorial_factored, factored_value
from .errors import BoundExceededError, InternalConsistencyError
from .lattice import DivisorLattice
from .perms import Perm
from .posets import (
    WeightedPoset,
    find_n_subposet,
    poset_to_lattice,
    weak_iso_map,
)
from . import sring

DEFAULT_MAX_DEGREE = 200


def gwp_exponents(p: WeightedPoset) -> tuple[int, ...]:
    """Exponent of each coordinate group: product of its strict ancestor weights."""
    out = []
    for i in range(p.size):
        m = 1
        for j in p.up_set(i):
            m *= p.weights[j]
        out.append(m)
    return tuple(out)


def gwp_order(p: WeightedPoset) -> dict[int, int]:
    """Factored order: product over i of (w_i!)^(ancestor weight product)."""
    order: dict[int, int] = {}
    for w, m in zip(p.weights, gwp_exponents(p)):
        order = factored_mul(order, factored_pow(factorial_factored(w), m))
    return order


def _strides(weights: tuple[int, ...]) -> tuple[int, ...]:
    out = [1] * len(weights)
    for i in range(len(weights) - 2, -1, -1):
        out[i] = out[i + 1] * weights[i + 1]
    return tuple(out)


def gwp_generators(
    p: WeightedPoset, max_degree: int = DEFAULT_MAX_DEGREE
) -> list[Perm]:
    """Coxeter-style generators on mixed-radix encoded weight tuples.

    One generator per (coordinate i, ancestor pattern u, adjacent swap k):
    it swaps the values k and k+1 in coordinate i exactly on the points
    whose ancestor projection equals u.
    """
    n = p.total
    if n > max_degree:
        raise BoundExceededError(f"degree {n} exceeds bound {max_degree}")
    weights = p.weights
    strides = _strides(weights)
    points = list(product(*(range(w) for w in weights)))
    encode = {t: sum(x * s for x, s in zip(t, strides)) for t in points}

    gens: list[Perm] = []
    for i in range(p.size):
        anc = sorted(p.up_set(i))
        patterns = list(product(*(range(weights[j]) for j in anc)))
        for u in patterns:
            for k in range(weights[i] - 1):
                image = list(range(n))
                for t in points:
                    if tuple(t[j] for j in anc) != u:
                        continue
                    if t[i] == k or t[i] == k + 1:
                        swapped = list(t)
                        swapped[i] = 2 * k + 1 - t[i]
                        image[encode[t]] = encode[tuple(swapped)]
                gens.append(Perm(image))
    return gens


def transport(
    tuple_gens, p: WeightedPoset, verify: bool = True
) -> list[Perm]:
    """Conjugate generators from tuple space onto Z_n via the coefficient map.

    With verification on, every transported generator must be an
    automorphism of every basic Cayley graph of the poset's lattice; a
    failure means the pipeline is inconsistent and raises.
    """
    tm = weak_iso_map(p)
    n = p.total
    strides = _strides(p.weights)
    to_zn = [0] * n
    for t in product(*(range(w) for w in p.weights)):
        to_zn[sum(x * s for x, s in zip(t, strides))] = tm.tuple_to_point(t)

    out = []
    for g in tuple_gens:
        image = [0] * n
        for idx in range(n):
            image[to_zn[idx]] = to_zn[g.image[idx]]
        out.append(Perm(image))

    if verify:
        lat = poset_to_lattice(p)
        basic = sring.basic_sets_from_lattice(lat).ring.basic_sets
        for g in out:
            for t in basic:
                for x in range(n):
                    gx = g.image[x]
                    for s in t:
                        if (g.image[(x + s) % n] - gx) % n not in t:
                            raise InternalConsistencyError(
                                f"transported generator {g} breaks the basic graph of {sorted(t)}"
                            )
    return out


@dataclass(frozen=True)
class GeneralizedWreathProduct:
    """Bundle of the poset, exponents, factored order and generators."""

    poset: WeightedPoset
    exponents: tuple[int, ...]
    order: tuple[tuple[int, int], ...]
    generators: tuple[Perm, ...]

    @property
    def order_factored(self) -> dict[int, int]:
        return dict(self.order)

    @property
    def order_value(self) -> int:
        return factored_value(self.order_factored)


def build_gwp(
    p: WeightedPoset, max_degree: int = DEFAULT_MAX_DEGREE
) -> GeneralizedWreathProduct:
    return GeneralizedWreathProduct(
        poset=p,
        exponents=gwp_exponents(p),
        order=tuple(sorted(gwp_order(p).items())),
        generators=tuple(gwp_generators(p, max_degree)),
    )


# -- symbolic expression of the group ------------------------------------


@dataclass(frozen=True)
class GroupExpression:
    """Expression tree over symmetric-group leaves.

    ``kind`` is one of sym, cross, wreath, gwp.  A wreath node's first
    child is the active block-permuting part, the second acts inside each
    block.  A gwp node stands for a product that direct and wreath
    products alone cannot express.
    """

    kind: str
    weight: int | None = None
    children: tuple["GroupExpression", ...] = ()
    poset: WeightedPoset | None = None

    @property
    def degree(self) -> int:
        if self.kind == "sym":
            return self.weight
        if self.kind == "gwp":
            return self.poset.total
        d = 1
        for c in self.children:
            d *= c.degree
        return d

    def order_factored(self) -> dict[int, int]:
        if self.kind == "sym":
            return factorial_factored(self.weight)
        if self.kind == "gwp":
            return gwp_order(self.poset)
        if self.kind == "cross":
            out: dict[int, int] = {}
            for c in self.children:
                out = factored_mul(out, c.order_factored())
            return out
        top, bottom = self.children
        return factored_mul(
            top.order_factored(), factored_pow(bottom.order_factored(), top.degree)
        )

    def text(self) -> str:
        if self.kind == "sym":
            return f"S_{self.weight}"
        if self.kind == "gwp":
            rel = ", ".join(f"{i + 1}<{j + 1}" for i, j in sorted(self.poset.strict_pairs()))
            ws = ", ".join(map(str, self.poset.weights))
            return f"gwp([{rel}], weights=[{ws}])"
        if self.kind == "cross":
            parts = []
            for c in self._flatten("cross"):
                t = c.text()
                parts.append(f"({t})" if c.kind == "wreath" else t)
            return " × ".join(parts)
        parts = []
        for c in self._flatten("wreath"):
            t = c.text()
            parts.append(f"({t})" if c.kind == "cross" else t)
        return " ≀ ".join(parts)

    def _flatten(self, kind: str) -> list["GroupExpression"]:
        if self.kind != kind:
            return [self]
        out: list[GroupExpression] = []
        for c in self.children:
            out.extend(c._flatten(kind))
        return out


def _sym(w: int) -> GroupExpression:
    return GroupExpression("sym", weight=w)


def _decompose_lattice(lat: DivisorLattice) -> GroupExpression | None:
    """Crossing/nesting decomposition; None when neither rule applies."""
    n = lat.modulus
    if lat.elements == (1, n) or n == 1:
        return _sym(n)

    # crossing: coprime complementary members whose interval product is L
    for a in lat.elements[1:-1]:
        b = n // a
        if b not in lat or math.gcd(a, b) != 1:
            continue
        la, lb = lat.below(a), lat.below(b)
        prods = {x * y for x in la.elements for y in lb.elements}
        if prods == set(lat.elements):
            left = _decompose_lattice(la)
            right = _decompose_lattice(lb)
            if left is None or right is None:
                return None
            return GroupExpression("cross", children=(left, right))

    # nesting: a pivot every member divides or is divided by
    pivots = [
        k
        for k in lat.elements[1:-1]
        if all(k % x == 0 or x % k == 0 for x in lat.elements)
    ]
    if pivots:
        k = max(pivots)
        quotient = DivisorLattice.of(n // k, (x // k for x in lat.above(k).elements))
        top = _decompose_lattice(quotient)
        bottom = _decompose_lattice(lat.below(k))
        if top is None or bottom is None:
            return None
        return GroupExpression("wreath", children=(top, bottom))

    return None


def render_group_expression(p: WeightedPoset) -> GroupExpression:
    """Crossing/nesting tree when the poset allows it, else a gwp descriptor."""
    if find_n_subposet(p) is not None:
        return GroupExpression("gwp", poset=p)
    expr = _decompose_lattice(poset_to_lattice(p))
    if expr is None:
        raise InternalConsistencyError(
            f"poset {p} has no induced N but its lattice did not decompose"
        )
    if expr.order_factored() != gwp_order(p):
        raise InternalConsistencyError(
            f"expression order mismatch for poset {p}"
        )
    return expr
