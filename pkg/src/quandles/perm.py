"""Permutations on {1..n} and permutation groups with a stabilizer chain.

Conventions used throughout the package:

* points are 1-based: a permutation of degree n acts on {1, ..., n};
* actions are written on the right: ``x^p = p(x)``;
* products compose left to right: ``x^(p*q) = (x^p)^q``;
* ``p.conj(g)`` is ``g^-1 * p * g``, so that ``x^(p.conj(g))`` matches the
  usual superscript convention for conjugation.

Internally a permutation is a tuple ``arr`` of length n+1 with ``arr[0] == 0``
and ``arr[x]`` the image of x; the sentinel slot lets compositions run as a
single comprehension without index shifting.  Groups carry a deterministic
Schreier-Sims stabilizer chain: base points come from the first moved point of
the element that created the level, and transversals are built breadth-first
in generator order, so a group built twice from the same generator list is
identical, transversals included.
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_ITERATION_BOUND = 10**6


class DegreeMismatchError(ValueError):
    """Raised when permutations of different degrees are combined."""


class BoundExceededError(RuntimeError):
    """Raised when an operation would iterate more elements than allowed."""


class NotAMemberError(ValueError):
    """Raised when an element is required to lie in a group but does not."""


def _check_same_degree(p: "Permutation", q: "Permutation") -> None:
    if p.degree != q.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {p.degree} vs {q.degree}")


class Permutation:
    """An immutable bijection of {1..n}, stored as its image list."""

    __slots__ = ("_arr",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        seen = [False] * (n + 1)
        for v in imgs:
            if not isinstance(v, int) or not 1 <= v <= n or seen[v]:
                raise ValueError(f"not a bijection of 1..{n}: {imgs}")
            seen[v] = True
        self._arr = (0,) + imgs

    @classmethod
    def _from_arr(cls, arr: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._arr = arr
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._from_arr(tuple(range(n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles given as point sequences."""
        arr = list(range(n + 1))
        used = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n:
                    raise ValueError(f"cycle point {a} out of range 1..{n}")
                if a in used:
                    raise ValueError(f"cycles are not disjoint at point {a}")
                used.add(a)
            for a, b in zip(cyc, cyc[1:]):
                arr[a] = b
            if cyc:
                arr[cyc[-1]] = cyc[0]
        return cls(arr[1:])

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "Permutation":
        """Parse either an image list ``"2 1 3"`` or cycles ``"(1,2)(3,4)"``.

        Cycle notation needs an explicit degree.  The image list is the
        canonical form; cycle input is a convenience for the CLI.
        """
        text = text.strip()
        if text.startswith("("):
            if degree is None:
                raise ValueError("cycle notation requires an explicit degree")
            body = text.replace(")(", ")|(")
            cycles = []
            for part in body.split("|"):
                part = part.strip()
                if not (part.startswith("(") and part.endswith(")")):
                    raise ValueError(f"malformed cycle notation: {text!r}")
                inner = part[1:-1].strip()
                if not inner:
                    continue
                pts = [int(tok) for tok in inner.replace(",", " ").split()]
                cycles.append(pts)
            return cls.from_cycles(degree, cycles)
        imgs = [int(tok) for tok in text.split()]
        if degree is not None and len(imgs) != degree:
            raise ValueError(f"expected degree {degree}, got {len(imgs)}")
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self._arr) - 1

    @property
    def images(self) -> tuple:
        return self._arr[1:]

    def __call__(self, x: int) -> int:
        return self._arr[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        _check_same_degree(self, other)
        q = other._arr
        return Permutation._from_arr(tuple(q[v] for v in self._arr))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._arr)
        for x, y in enumerate(self._arr):
            inv[y] = x
        return Permutation._from_arr(tuple(inv))

    def conj(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 * self * g`` (same cycle type as ``self``)."""
        _check_same_degree(self, g)
        garr = g._arr
        parr = self._arr
        out = [0] * len(parr)
        for x in range(1, len(parr)):
            out[garr[x]] = garr[parr[x]]
        return Permutation._from_arr(tuple(out))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its smallest point."""
        n = self.degree
        seen = [False] * (n + 1)
        out = []
        for x in range(1, n + 1):
            if seen[x] or self._arr[x] == x:
                continue
            cyc = [x]
            seen[x] = True
            y = self._arr[x]
            while y != x:
                cyc.append(y)
                seen[y] = True
                y = self._arr[y]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        """Cycle lengths including fixed points, sorted descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths.extend([1] * (self.degree - sum(lengths)))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        result = 1
        for c in self.cycles():
            result = result * len(c) // gcd(result, len(c))
        return result

    @property
    def is_identity(self) -> bool:
        return all(self._arr[x] == x for x in range(1, len(self._arr)))

    def first_moved(self) -> Optional[int]:
        for x in range(1, len(self._arr)):
            if self._arr[x] != x:
                return x
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._arr == other._arr

    def __hash__(self) -> int:
        return hash(self._arr)

    def __lt__(self, other: "Permutation") -> bool:
        return self._arr < other._arr

    def __str__(self) -> str:
        return " ".join(str(v) for v in self._arr[1:])

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return f"Permutation.identity({self.degree})"
        text = "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)
        return f"<perm deg={self.degree} {text}>"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: ``x^compose(p, q) == (x^p)^q``."""
    return p * q


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """Return ``g^-1 * p * g``."""
    return p.conj(g)


# ---------------------------------------------------------------------------
# Raw-array helpers shared with the catalog builder.  A "raw" permutation is
# the sentinel tuple Permutation._arr; keeping these as free functions avoids
# method-call overhead in the hot enumeration loops.
# ---------------------------------------------------------------------------

def raw_identity(n: int) -> tuple:
    return tuple(range(n + 1))


def raw_mul(p: tuple, q: tuple) -> tuple:
    return tuple(map(q.__getitem__, p))


def raw_inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def raw_conj(p: tuple, g: tuple) -> tuple:
    out = [0] * len(p)
    for x in range(1, len(p)):
        out[g[x]] = g[p[x]]
    return tuple(out)


def raw_cycle_type(p: tuple) -> tuple:
    n = len(p) - 1
    seen = [False] * (n + 1)
    lengths = []
    for x in range(1, n + 1):
        if seen[x]:
            continue
        m = 1
        seen[x] = True
        y = p[x]
        while y != x:
            seen[y] = True
            m += 1
            y = p[y]
        lengths.append(m)
    return tuple(sorted(lengths, reverse=True))


class _Level:
    """One stabilizer-chain level with an incrementally grown Schreier tree.

    ``gens`` is the list of strong generators acting at this level (those
    fixing all earlier base points); witnesses never change once recorded,
    which keeps transversals deterministic under later extensions.
    """

    __slots__ = ("base", "gens", "transversal", "inv_transversal",
                 "points", "unchecked")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list = []
        ident = raw_identity(degree)
        self.transversal: dict = {base: ident}      # pt -> t with base^t = pt
        self.inv_transversal: dict = {base: ident}  # pt -> t^-1
        self.points: list = [base]                  # discovery order
        self.unchecked: list = []                   # (point, gen index) pairs

    def add_gen(self, g: tuple) -> None:
        """Append a generator, extend the orbit, queue new Schreier pairs."""
        self.gens.append(g)
        k = len(self.gens) - 1
        self.unchecked.extend((pt, k) for pt in self.points)
        frontier = []
        for pt in self.points:
            img = g[pt]
            if img not in self.transversal:
                t = raw_mul(self.transversal[pt], g)
                self.transversal[img] = t
                self.inv_transversal[img] = raw_inv(t)
                self.points.append(img)
                frontier.append(img)
        i = 0
        while i < len(frontier):
            pt = frontier[i]
            i += 1
            self.unchecked.extend((pt, j) for j in range(len(self.gens)))
            t = self.transversal[pt]
            for j, h in enumerate(self.gens):
                img = h[pt]
                if img not in self.transversal:
                    u = raw_mul(t, h)
                    self.transversal[img] = u
                    self.inv_transversal[img] = raw_inv(u)
                    self.points.append(img)
                    frontier.append(img)


class _Chain:
    """Mutable deterministic Schreier-Sims chain (package internal)."""

    __slots__ = ("degree", "levels", "_identity")

    def __init__(self, degree: int):
        self.degree = degree
        self.levels: list = []
        self._identity = raw_identity(degree)

    def sift(self, p: tuple, start: int = 0):
        """Strip p through levels >= start; return (residue, level stalled)."""
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            img = p[level.base]
            if img != level.base:
                tinv = level.inv_transversal.get(img)
                if tinv is None:
                    return p, i
                p = raw_mul(p, tinv)
        return p, len(self.levels)

    def contains(self, p: tuple) -> bool:
        residue, _ = self.sift(p)
        return residue == self._identity

    def add_generator(self, p: tuple) -> bool:
        """Add p if not already a member; return True if the chain grew."""
        residue, stall = self.sift(p)
        if residue == self._identity:
            return False
        self._place(residue, stall)
        for i in range(stall, -1, -1):
            self._complete_level(i)
        return True

    def _place(self, p: tuple, stall: int) -> None:
        """Record p as a strong generator at every level it acts on."""
        if stall == len(self.levels):
            base = next(x for x in range(1, self.degree + 1) if p[x] != x)
            self.levels.append(_Level(base, self.degree))
        for i in range(stall + 1):
            self.levels[i].add_gen(p)

    def _complete_level(self, i: int) -> None:
        """Drain level i's Schreier pairs; levels below i must be complete."""
        level = self.levels[i]
        while level.unchecked:
            pt, k = level.unchecked.pop()
            g = level.gens[k]
            u_inv = level.inv_transversal[g[pt]]
            schreier = raw_mul(raw_mul(level.transversal[pt], g), u_inv)
            residue, stall = self.sift(schreier, i + 1)
            if residue != self._identity:
                self._place(residue, stall)
                for j in range(stall, i, -1):
                    self._complete_level(j)

    @property
    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= len(level.transversal)
        return result

    def iter_elements(self) -> Iterator[tuple]:
        """Yield all elements, deterministically, as raw arrays."""
        if not self.levels:
            yield raw_identity(self.degree)
            return
        transversals = [
            [lv.transversal[pt] for pt in sorted(lv.transversal)]
            for lv in self.levels
        ]
        for combo in itertools.product(*reversed(transversals)):
            g = combo[0]
            for t in combo[1:]:
                g = raw_mul(g, t)
            yield g


def _build_chain(degree: int, gens: Iterable[tuple]) -> _Chain:
    chain = _Chain(degree)
    for g in gens:
        chain.add_generator(g)
    return chain


class PermGroup:
    """A finitely generated permutation group on {1..n}.

    Construction builds a stabilizer chain once; the object is immutable
    afterwards and safe to share between threads.
    """

    __slots__ = ("_degree", "_generators", "_chain", "_order")

    def __init__(self, generators: Iterable[Permutation]):
        gens = tuple(generators)
        if not gens:
            raise ValueError("a permutation group needs at least one generator"
                             " (use the identity for the trivial group)")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator degrees differ: {g.degree} vs {degree}")
        self._degree = degree
        self._generators = gens
        self._chain = _build_chain(degree, (g._arr for g in gens))
        self._order = self._chain.order

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls([Permutation.identity(degree)])

    @classmethod
    def _from_raw(cls, degree: int, raw_gens: Sequence[tuple]) -> "PermGroup":
        gens = [Permutation._from_arr(a) for a in raw_gens]
        if not gens:
            gens = [Permutation.identity(degree)]
        return cls(gens)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple:
        return self._generators

    @property
    def order(self) -> int:
        return self._order

    def __contains__(self, p: Permutation) -> bool:
        if not isinstance(p, Permutation) or p.degree != self._degree:
            return False
        return self._chain.contains(p._arr)

    def elements(self, bound: int = DEFAULT_ITERATION_BOUND) -> Iterator[Permutation]:
        """Iterate all elements in a deterministic order."""
        if self._order > bound:
            raise BoundExceededError(
                f"group order {self._order} exceeds iteration bound {bound}")
        return (Permutation._from_arr(a) for a in self._chain.iter_elements())

    def orbit(self, x: int) -> dict:
        """Orbit of x with witnesses: maps each point y to g with x^g = y."""
        if not 1 <= x <= self._degree:
            raise ValueError(f"point {x} out of range 1..{self._degree}")
        witness = {x: Permutation.identity(self._degree)}
        queue = [x]
        for pt in queue:
            w = witness[pt]
            for g in self._generators:
                img = g(pt)
                if img not in witness:
                    witness[img] = w * g
                    queue.append(img)
        return witness

    def orbits(self) -> list:
        """Orbit partition of {1..n}, each orbit sorted, ordered by minimum."""
        seen = set()
        parts = []
        for x in range(1, self._degree + 1):
            if x in seen:
                continue
            orb = sorted(self.orbit(x))
            seen.update(orb)
            parts.append(orb)
        return parts

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self._degree

    def stabilizer(self, x: int) -> "PermGroup":
        """Point stabilizer G_x, via Schreier generators of the orbit of x."""
        witness = self.orbit(x)
        raw_wit = {pt: w._arr for pt, w in witness.items()}
        gens: list = []
        chain = _Chain(self._degree)
        for pt in sorted(raw_wit):
            w = raw_wit[pt]
            for g in self._generators:
                u = raw_wit[g(pt)]
                s = raw_mul(raw_mul(w, g._arr), raw_inv(u))
                if chain.add_generator(s):
                    gens.append(s)
        return PermGroup._from_raw(self._degree, gens)

    def center(self, bound: int = DEFAULT_ITERATION_BOUND) -> "PermGroup":
        """Center, by filtering all elements against the generators."""
        central = [
            z for z in self.elements(bound)
            if all(z * g == g * z for g in self._generators)
        ]
        return PermGroup(central)

    def derived_subgroup(self) -> "PermGroup":
        """Normal closure of the commutators of all generator pairs."""
        comms = []
        for a in self._generators:
            for b in self._generators:
                c = a.inverse() * b.inverse() * a * b
                if not c.is_identity:
                    comms.append(c)
        return self.normal_closure(comms)

    def normal_closure(self, elems: Iterable[Permutation]) -> "PermGroup":
        """Smallest normal subgroup of this group containing ``elems``."""
        seed = list(elems)
        for s in seed:
            if s not in self:
                raise NotAMemberError(f"{s!r} is not a member of the group")
        chain = _Chain(self._degree)
        closure_gens: list = []
        queue = [s._arr for s in seed]
        while queue:
            p = queue.pop()
            if chain.add_generator(p):
                closure_gens.append(p)
                for g in self._generators:
                    queue.append(raw_conj(p, g._arr))
        return PermGroup._from_raw(self._degree, closure_gens)

    def is_abelian(self) -> bool:
        gens = self._generators
        return all(a * b == b * a for a, b in itertools.combinations(gens, 2))

    def is_metabelian(self) -> bool:
        return self.derived_subgroup().is_abelian()

    def has_cyclic_derived_quotient(self, bound: int = DEFAULT_ITERATION_BOUND) -> bool:
        """True iff G/G' is cyclic, i.e. some single g with <G' u {g}> = G."""
        derived = self.derived_subgroup()
        index = self._order // derived.order
        if index == 1 or _is_prime(index):
            # any g outside G' generates the quotient when the index is prime
            return True
        for g in self.elements(bound):
            k = 1
            power = g
            while power not in derived:
                k += 1
                power = power * g
            if k == index:
                return True
        return False

    def equals(self, other: "PermGroup") -> bool:
        """Set equality of groups on the same points."""
        if self._degree != other._degree:
            raise DegreeMismatchError(
                f"degree mismatch: {self._degree} vs {other._degree}")
        if self._order != other._order:
            return False
        return (all(g in other for g in self._generators)
                and all(g in self for g in other._generators))

    def __repr__(self) -> str:
        return (f"<PermGroup deg={self._degree} order={self._order} "
                f"ngens={len(self._generators)}>")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def group_from_generators(gens: Iterable[Permutation]) -> PermGroup:
    return PermGroup(gens)
