"""Permutations and permutation groups on {0, ..., n-1}.

Composition is left to right: ``(g * h)(x) == h(g(x))``, i.e. points are
acted on from the right.  Groups carry a deterministic Schreier-Sims
stabilizer chain, built lazily on first query.  Chain construction
mutates internal state once; afterwards the group value is immutable and
safe to share (build-then-freeze).
"""
from __future__ import annotations

from .arith import factored_mul, factorize
from .errors import BoundExceededError

DEFAULT_MAX_TWO_ORBIT_DEGREE = 200


class Perm:
    """A permutation of {0, ..., n-1} stored as its image tuple."""

    __slots__ = ("image",)

    def __init__(self, image) -> None:
        img = tuple(image)
        n = len(img)
        seen = bytearray(n)
        for x in img:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {img}")
            seen[x] = 1
        object.__setattr__(self, "image", img)

    @classmethod
    def _unchecked(cls, image: tuple[int, ...]) -> "Perm":
        p = object.__new__(cls)
        object.__setattr__(p, "image", image)
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._unchecked(tuple(range(n)))

    @classmethod
    def from_function(cls, n: int, fn) -> "Perm":
        return cls(fn(x) % n for x in range(n))

    @classmethod
    def shift(cls, n: int, k: int) -> "Perm":
        """The translation x -> x + k mod n."""
        return cls._unchecked(tuple((x + k) % n for x in range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Perm":
        img = list(range(n))
        img[a], img[b] = b, a
        return cls._unchecked(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: "Perm") -> "Perm":
        if len(self.image) != len(other.image):
            raise ValueError("degree mismatch")
        o = other.image
        return Perm._unchecked(tuple(o[x] for x in self.image))

    def inverse(self) -> "Perm":
        img = self.image
        inv = [0] * len(img)
        for x, y in enumerate(img):
            inv[y] = x
        return Perm._unchecked(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start] or self.image[start] == start:
                seen[start] = True
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.image[x]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Perm(id/{self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Perm({body})"


class PermutationGroup:
    """Group generated by permutations, with a lazy stabilizer chain."""

    def __init__(self, degree: int, generators=()) -> None:
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        self._base: list[int] | None = None
        self._strong: list[Perm] | None = None
        self._orbits: list[dict[int, Perm]] | None = None

    # -- stabilizer chain ------------------------------------------------

    def _gens_at(self, level: int) -> list[Perm]:
        base, strong = self._base, self._strong
        return [g for g in strong if all(g.image[base[k]] == base[k] for k in range(level))]

    def _orbit_transversal(self, level: int) -> dict[int, Perm]:
        b = self._base[level]
        gens = self._gens_at(level)
        orb = {b: Perm.identity(self.degree)}
        stack = [b]
        while stack:
            p = stack.pop()
            u = orb[p]
            for s in gens:
                q = s.image[p]
                if q not in orb:
                    orb[q] = u * s
                    stack.append(q)
        return orb

    def _strip(self, g: Perm, start: int) -> tuple[Perm, int]:
        h = g
        for i in range(start, len(self._base)):
            p = h.image[self._base[i]]
            u = self._orbits[i].get(p)
            if u is None:
                return h, i
            h = h * u.inverse()
        return h, len(self._base)

    def _ensure_chain(self) -> None:
        if self._orbits is not None:
            return
        self._base, self._strong = [], []

        def cover(g: Perm) -> None:
            if all(g.image[b] == b for b in self._base):
                self._base.append(min(x for x in range(self.degree) if g.image[x] != x))

        for g in self.generators:
            cover(g)
            self._strong.append(g)

        self._orbits = [self._orbit_transversal(i) for i in range(len(self._base))]

        i = len(self._base) - 1
        while i >= 0:
            clean = True
            orb = self._orbits[i]
            gens = self._gens_at(i)
            for p in sorted(orb):
                u_p = orb[p]
                for s in gens:
                    q = s.image[p]
                    schreier = u_p * s * orb[q].inverse()
                    if schreier.is_identity():
                        continue
                    h, j = self._strip(schreier, i + 1)
                    if h.is_identity():
                        continue
                    if j == len(self._base):
                        self._base.append(
                            min(x for x in range(self.degree) if h.image[x] != x)
                        )
                        self._orbits.append({})
                    self._strong.append(h)
                    for l in range(i + 1, j + 1):
                        self._orbits[l] = self._orbit_transversal(l)
                    i, clean = j, False
                    break
                if not clean:
                    break
            if clean:
                i -= 1

    # -- queries ---------------------------------------------------------

    def base(self) -> tuple[int, ...]:
        self._ensure_chain()
        return tuple(self._base)

    def basic_orbit_lengths(self) -> tuple[int, ...]:
        self._ensure_chain()
        return tuple(len(o) for o in self._orbits)

    def order(self) -> int:
        n = 1
        for l in self.basic_orbit_lengths():
            n *= l
        return n

    def order_factored(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for l in self.basic_orbit_lengths():
            out = factored_mul(out, factorize(l))
        return out

    def sift(self, g: Perm) -> Perm:
        """Residue of g after stripping through the chain; identity iff g is a member."""
        if g.degree != self.degree:
            raise ValueError("degree mismatch")
        self._ensure_chain()
        return self._strip(g, 0)[0]

    def __contains__(self, g: Perm) -> bool:
        return self.sift(g).is_identity()

    def orbits(self) -> list[tuple[int, ...]]:
        """Point orbits under the generators, sorted by smallest member."""
        seen = [False] * self.degree
        out = []
        for x in range(self.degree):
            if seen[x]:
                continue
            comp, stack = [], [x]
            seen[x] = True
            while stack:
                p = stack.pop()
                comp.append(p)
                for g in self.generators:
                    q = g.image[p]
                    if not seen[q]:
                        seen[q] = True
                        stack.append(q)
            out.append(tuple(sorted(comp)))
        return out

    def two_orbits(
        self, max_degree: int = DEFAULT_MAX_TWO_ORBIT_DEGREE
    ) -> tuple[frozenset[tuple[int, int]], ...]:
        """Orbits of the coordinatewise action on ordered pairs.

        Classes appear in order of their lexicographically smallest pair.
        """
        n = self.degree
        if n > max_degree:
            raise BoundExceededError(f"degree {n} exceeds two-orbit bound {max_degree}")
        images = [g.image for g in self.generators]
        seen = [False] * (n * n)
        classes = []
        for rep in range(n * n):
            if seen[rep]:
                continue
            comp, stack = [], [rep]
            seen[rep] = True
            while stack:
                code = stack.pop()
                a, b = divmod(code, n)
                comp.append((a, b))
                for im in images:
                    nxt = im[a] * n + im[b]
                    if not seen[nxt]:
                        seen[nxt] = True
                        stack.append(nxt)
            classes.append(frozenset(comp))
        return tuple(classes)


def is_subgroup_of(generators, group: PermutationGroup) -> bool:
    """True iff every given permutation is a member of ``group``."""
    return all(group.sift(g).is_identity() for g in generators)
