"""Named families of quandles and envelopes.

Affine (Alexander) quandles over finite abelian groups together with their
enumeration up to isomorphism, Galkin quandles, and the combinatorial and
geometric envelope families: symmetric groups on 2-subsets, on n-cycles by
conjugation, on tuples of distinct points, SL2(q) on nonzero plane vectors,
PSL3(2) on pairs of projective points, and the rotation groups of the
Platonic solids acting on faces.

Indexing convention: every constructed quandle or envelope lists its points
in lexicographic order of the natural labels (tuples, subsets, vectors,
cycles), so tables are reproducible.  The single exception is SL2(q), where
the base vector (1,0) is placed first (the base point of an envelope is
always point 1) and the remaining vectors follow lexicographically.
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Optional, Sequence

from .perm import BoundExceededError, PermGroup, Permutation
from .quandle import Quandle
from .envelope import Envelope, validate_envelope

AFFINE_ORDER_BOUND = 64


# ---------------------------------------------------------------------------
# Finite abelian groups in invariant-factor form
# ---------------------------------------------------------------------------

class AbelianGroup:
    """Direct product Z_d1 x ... x Z_dk with d1 | d2 | ... | dk, di >= 2.

    Elements are k-tuples with componentwise modular addition, listed in
    lexicographic order; the empty factor list is the trivial group.
    """

    __slots__ = ("factors", "_elements", "_index")

    def __init__(self, factors: Sequence[int]):
        factors = tuple(factors)
        for d in factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise ValueError(
                    f"invariant factors must form a divisibility chain: "
                    f"{a} does not divide {b}")
        self.factors = factors
        self._elements = list(itertools.product(*[range(d) for d in factors]))
        self._index = {e: i for i, e in enumerate(self._elements)}

    @property
    def order(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out

    @property
    def elements(self) -> list:
        return self._elements

    def index(self, el: tuple) -> int:
        return self._index[el]

    @property
    def zero(self) -> tuple:
        return (0,) * len(self.factors)

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def neg(self, a: tuple) -> tuple:
        return tuple((-x) % d for x, d in zip(a, self.factors))

    def sub(self, a: tuple, b: tuple) -> tuple:
        return tuple((x - y) % d for x, y, d in zip(a, b, self.factors))

    def scale(self, k: int, a: tuple) -> tuple:
        return tuple((k * x) % d for x, d in zip(a, self.factors))

    def element_order(self, a: tuple) -> int:
        out = 1
        for x, d in zip(a, self.factors):
            o = d // gcd(x, d)
            out = out * o // gcd(out, o)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianGroup) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        if not self.factors:
            return "AbelianGroup(trivial)"
        return "AbelianGroup(%s)" % "x".join(map(str, self.factors))


def _partitions(n: int) -> list:
    """All partitions of n as descending tuples."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, most, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, most), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return out


def _factorize(n: int) -> dict:
    factors: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def abelian_groups_of_order(n: int) -> list:
    """All abelian groups of order n in invariant-factor form, sorted."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return [AbelianGroup(())]
    primes = sorted(_factorize(n).items())
    partition_choices = [_partitions(e) for _, e in primes]
    groups = []
    for combo in itertools.product(*partition_choices):
        width = max(len(part) for part in combo)
        invariants = []
        for i in range(width):
            d = 1
            for (p, _), part in zip(primes, combo):
                if i < len(part):
                    d *= p ** part[i]
            invariants.append(d)
        # descending alignment gives dk | ... | d1; store ascending
        invariants = [d for d in reversed(invariants) if d > 1]
        groups.append(AbelianGroup(invariants))
    groups.sort(key=lambda g: g.factors)
    return groups


# ---------------------------------------------------------------------------
# Automorphisms of abelian groups
# ---------------------------------------------------------------------------

class AutMap:
    """An automorphism of an AbelianGroup, stored as an index table.

    ``images[i]`` is the element index of the image of element i in the
    group's lexicographic element order.
    """

    __slots__ = ("host", "images")

    def __init__(self, host: AbelianGroup, images: Sequence[int],
                 check: bool = True):
        self.host = host
        self.images = tuple(images)
        if check:
            self._validate()

    def _validate(self) -> None:
        els = self.host.elements
        n = len(els)
        if sorted(self.images) != list(range(n)):
            raise ValueError("automorphism image table is not a bijection")
        if n <= 1000:
            for i in range(n):
                for j in range(n):
                    s = self.host.index(self.host.add(els[i], els[j]))
                    if self.images[s] != self.host.index(
                            self.host.add(els[self.images[i]],
                                          els[self.images[j]])):
                        raise ValueError(
                            f"map is not additive at {els[i]} + {els[j]}")

    @classmethod
    def from_callable(cls, host: AbelianGroup, fn) -> "AutMap":
        imgs = [host.index(fn(e)) for e in host.elements]
        return cls(host, imgs)

    @classmethod
    def identity(cls, host: AbelianGroup) -> "AutMap":
        return cls(host, range(len(host.elements)), check=False)

    @classmethod
    def scalar(cls, host: AbelianGroup, k: int) -> "AutMap":
        return cls.from_callable(host, lambda e: host.scale(k, e))

    def apply(self, el: tuple) -> tuple:
        return self.host.elements[self.images[self.host.index(el)]]

    def compose(self, other: "AutMap") -> "AutMap":
        """Apply self, then other."""
        return AutMap(self.host,
                      tuple(other.images[i] for i in self.images),
                      check=False)

    def inverse(self) -> "AutMap":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return AutMap(self.host, inv, check=False)

    def conj(self, h: "AutMap") -> "AutMap":
        return h.inverse().compose(self).compose(h)

    def one_minus(self) -> "AutMap":
        """The map x -> x - f(x); an AutMap only when bijective."""
        host = self.host
        els = host.elements
        imgs = [host.index(host.sub(e, els[self.images[i]]))
                for i, e in enumerate(els)]
        return AutMap(host, imgs, check=False)

    def is_bijective_map(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AutMap) and self.host == other.host
                and self.images == other.images)

    def __hash__(self) -> int:
        return hash((self.host.factors, self.images))

    def __repr__(self) -> str:
        return f"<AutMap of {self.host!r}>"


def enumerate_automorphisms(group: AbelianGroup) -> list:
    """All automorphisms, by brute force over generator images.

    A candidate assigns to each standard generator e_i an element whose
    order divides d_i (so the linear extension is a well-defined
    endomorphism) and is kept when the extension is bijective.
    """
    els = group.elements
    n = len(els)
    if n == 1:
        return [AutMap.identity(group)]
    k = len(group.factors)
    gens = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    candidate_images = [
        [e for e in els if group.scale(d, e) == group.zero]
        for d in group.factors
    ]
    out = []
    for choice in itertools.product(*candidate_images):
        images = [0] * n
        ok = True
        seen = [False] * n
        for idx, e in enumerate(els):
            img = group.zero
            for coeff, target in zip(e, choice):
                img = group.add(img, group.scale(coeff, target))
            j = group.index(img)
            if seen[j]:
                ok = False
                break
            seen[j] = True
            images[idx] = j
        if ok:
            out.append(AutMap(group, images, check=False))
    out.sort(key=lambda f: f.images)
    return out


def _aut_generating_subset(group: AbelianGroup, auts: list) -> list:
    """A small generating subset of Aut(A), found greedily.

    Automorphisms are viewed as permutations of the |A| elements so the
    stabilizer-chain engine can track the generated subgroup order.
    """
    n = len(group.elements)
    if n == 1 or len(auts) == 1:
        return list(auts)
    perms = [Permutation([i + 1 for i in f.images]) for f in auts]
    target = len(auts)
    chosen: list = []
    chosen_perms: list = []
    current = None
    for f, p in zip(auts, perms):
        if current is not None and p in current:
            continue
        chosen.append(f)
        chosen_perms.append(p)
        current = PermGroup(chosen_perms)
        if current.order == target:
            break
    return chosen


def automorphism_conjugacy_classes(group: AbelianGroup, maps: list,
                                   auts: Optional[list] = None) -> list:
    """Representatives of Aut(A)-conjugacy classes among ``maps``.

    The first map encountered in each class (in the given order) is the
    representative; orbits are closed under conjugation by a generating
    subset of Aut(A) and its inverses.
    """
    if auts is None:
        auts = enumerate_automorphisms(group)
    gens = _aut_generating_subset(group, auts)
    gens = gens + [g.inverse() for g in gens]
    reps = []
    seen = set()
    for f in maps:
        if f.images in seen:
            continue
        reps.append(f)
        orbit = {f.images}
        queue = [f]
        while queue:
            current = queue.pop()
            for h in gens:
                conj = current.conj(h)
                if conj.images not in orbit:
                    orbit.add(conj.images)
                    queue.append(conj)
        seen.update(orbit)
    return reps


# ---------------------------------------------------------------------------
# Affine quandles
# ---------------------------------------------------------------------------

def affine_quandle(group: AbelianGroup, f: AutMap) -> Quandle:
    """The Alexander quandle x*y = f(x) + y - f(y) on A, lexicographically
    indexed; always medial, connected iff 1-f is onto."""
    els = group.elements
    n = len(els)
    phi = f.one_minus()  # y -> y - f(y), not necessarily bijective
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        fx = els[f.images[i]]
        for j in range(n):
            rows[i][j] = group.index(group.add(fx, els[phi.images[j]])) + 1
    return Quandle(rows)


def is_connected_affine(group: AbelianGroup, f: AutMap) -> bool:
    """Connectivity criterion: 1-f onto (equivalently bijective)."""
    return f.one_minus().is_bijective_map()


def affine_isomorphic(group: AbelianGroup, f: AutMap, g: AutMap,
                      auts: Optional[list] = None) -> bool:
    """Isomorphism of connected affine quandles: f, g conjugate in Aut(A)."""
    if not (is_connected_affine(group, f) and is_connected_affine(group, g)):
        raise ValueError(
            "the conjugacy criterion applies to connected affine quandles")
    if auts is None:
        auts = enumerate_automorphisms(group)
    return any(f.conj(h).images == g.images for h in auts)


def enumerate_connected_affine(n: int,
                               bound: int = AFFINE_ORDER_BOUND) -> list:
    """Representatives (A, f) of connected affine quandles of order n.

    One pair per isomorphism class: groups A up to isomorphism, then
    automorphisms f with 1-f bijective up to conjugacy in Aut(A).
    """
    if n > bound:
        raise BoundExceededError(
            f"affine enumeration capped at order {bound}, got {n}")
    if n == 1:
        trivial = AbelianGroup(())
        return [(trivial, AutMap.identity(trivial))]
    out = []
    for group in abelian_groups_of_order(n):
        auts = enumerate_automorphisms(group)
        valid = [f for f in auts if f.one_minus().is_bijective_map()]
        reps = automorphism_conjugacy_classes(group, valid, auts)
        out.extend((group, f) for f in reps)
    return out


# ---------------------------------------------------------------------------
# Galkin quandles
# ---------------------------------------------------------------------------

def galkin(group: AbelianGroup, u: tuple) -> Quandle:
    """The Galkin quandle of the pointed group (A, u), on Z_3 x A.

    (x,a) o (y,b) = (-x-y, -a + mu(x-y) b + tau(x-y)) with mu(0)=2,
    mu(1)=mu(2)=-1 and tau(0)=tau(1)=0, tau(2)=u.  Points are indexed
    lexicographically, the Z_3 coordinate major.  Always connected; affine
    iff 3A = 0; latin iff |A| is odd.
    """
    if len(u) != len(group.factors):
        raise ValueError("the pointed element must belong to the group")
    u = tuple(x % d for x, d in zip(u, group.factors))
    els = group.elements
    m = len(els)
    n = 3 * m

    def mu(d: int, b: tuple) -> tuple:
        return group.scale(2 if d == 0 else -1, b)

    def tau(d: int) -> tuple:
        return u if d == 2 else group.zero

    rows = [[0] * n for _ in range(n)]
    for x in range(3):
        for ia, a in enumerate(els):
            i = x * m + ia
            for y in range(3):
                for ib, b in enumerate(els):
                    j = y * m + ib
                    d = (x - y) % 3
                    value = group.add(group.add(group.neg(a), mu(d, b)),
                                      tau(d))
                    rows[i][j] = ((-x - y) % 3) * m + group.index(value) + 1
    return Quandle(rows)


def pointed_groups_isomorphic(group: AbelianGroup, u: tuple,
                              other: AbelianGroup, v: tuple) -> bool:
    """(A, u) ~ (B, v): same invariant factors and an automorphism u -> v."""
    if group.factors != other.factors:
        return False
    u = tuple(x % d for x, d in zip(u, group.factors))
    v = tuple(x % d for x, d in zip(v, group.factors))
    return any(f.apply(u) == v for f in enumerate_automorphisms(group))


# ---------------------------------------------------------------------------
# Small finite fields
# ---------------------------------------------------------------------------

_IRREDUCIBLE = {4: (1, 1), 9: (1, 0), 25: (1, 1), 49: (3, 1)}
# GF(p^2) built as p-adic pairs a0 + a1*x modulo x^2 + c1*x + c0; the table
# maps q to (c0, c1): GF(4): x^2+x+1, GF(9): x^2+1, GF(25): x^2+x+1,
# GF(49): x^2+x+3.


class SmallField:
    """GF(q) for q = p or p^2, q <= 49, with table-driven arithmetic.

    Elements are 0..q-1; for q = p^2 the element a0 + a1*x has index
    a0 + a1*p.  Field axioms are verified exhaustively at construction.
    """

    def __init__(self, q: int):
        factors = _factorize(q)
        if len(factors) != 1 or q > 49:
            raise ValueError(f"unsupported field size {q}")
        (p, k), = factors.items()
        if k > 2:
            raise ValueError(f"unsupported field size {q} (only p and p^2)")
        self.q = q
        self.p = p
        if k == 1:
            self.add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self.mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            c0, c1 = _IRREDUCIBLE[q]
            add = [[0] * q for _ in range(q)]
            mul = [[0] * q for _ in range(q)]
            for a in range(q):
                a0, a1 = a % p, a // p
                for b in range(q):
                    b0, b1 = b % p, b // p
                    add[a][b] = (a0 + b0) % p + ((a1 + b1) % p) * p
                    # (a0 + a1 x)(b0 + b1 x) with x^2 = -c1 x - c0
                    t0 = a0 * b0
                    t1 = a0 * b1 + a1 * b0
                    t2 = a1 * b1
                    mul[a][b] = (t0 - t2 * c0) % p + ((t1 - t2 * c1) % p) * p
            self.add = add
            self.mul = mul
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0)
                    for a in range(q)]
        self.inv = [0] + [next(b for b in range(1, q)
                               if self.mul[a][b] == 1)
                          for a in range(1, q)]
        self._check_axioms()

    def _check_axioms(self) -> None:
        q, add, mul = self.q, self.add, self.mul
        for a in range(q):
            if add[a][0] != a or mul[a][1] != a or mul[a][0] != 0:
                raise AssertionError("field unit laws failed")
            for b in range(q):
                if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                    raise AssertionError("field commutativity failed")
                for c in range(q):
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise AssertionError("field addition not associative")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise AssertionError("field product not associative")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        raise AssertionError("field distributivity failed")


# ---------------------------------------------------------------------------
# Combinatorial envelope families over symmetric and alternating groups
# ---------------------------------------------------------------------------

def _action_envelope(labels: list, act, sym_gens: list, zeta_label) -> Envelope:
    """Build an envelope from an abstract action on hashable labels.

    ``labels`` must already be in the desired order (label 1 first); ``act``
    maps (label, generator_symbol) to a label.
    """
    index = {lab: i + 1 for i, lab in enumerate(labels)}
    n = len(labels)
    perms = []
    for g in sym_gens + [zeta_label]:
        images = [0] * n
        for lab in labels:
            images[index[lab] - 1] = index[act(lab, g)]
        perms.append(Permutation(images))
    zeta = perms.pop()
    return validate_envelope(PermGroup(perms), zeta)


def _sym_gens(n: int) -> list:
    if n == 1:
        return [Permutation.identity(1)]
    if n == 2:
        return [Permutation.from_cycles(2, [(1, 2)])]
    return [Permutation.from_cycles(n, [(1, 2)]),
            Permutation.from_cycles(n, [tuple(range(1, n + 1))])]


def _alt_gens(n: int) -> list:
    if n < 3:
        raise ValueError("alternating groups need n >= 3")
    if n == 3:
        return [Permutation.from_cycles(3, [(1, 2, 3)])]
    if n % 2 == 1:
        big = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    else:
        big = Permutation.from_cycles(n, [tuple(range(2, n + 1))])
    return [Permutation.from_cycles(n, [(1, 2, 3)]), big]


def two_subsets_envelope(n: int) -> Envelope:
    """S_n on 2-element subsets with zeta the image of the transposition
    (1,2); a connected quandle of order n(n-1)/2.  Degenerate for n < 4."""
    if n < 2:
        raise ValueError("two-subsets construction needs n >= 2")
    labels = [frozenset(s) for s in itertools.combinations(range(1, n + 1), 2)]
    labels.sort(key=sorted)

    def act(lab, g):
        return frozenset(g(x) for x in lab)

    return _action_envelope(labels, act, _sym_gens(n),
                            Permutation.from_cycles(n, [(1, 2)]))


def ncycles_envelope(n: int) -> Envelope:
    """S_n acting on its n-cycles by conjugation, zeta = the cycle (1..n);
    order (n-1)!.  Odd n is rejected: the closure is then only A_n."""
    if n < 4 or n % 2 != 0:
        raise ValueError(
            "the n-cycle construction needs even n >= 4; for odd n the "
            "closure of zeta is the alternating group only")
    cycles = [p for p in itertools.permutations(range(1, n + 1))
              if Permutation(list(p)).cycle_type() == (n,)]
    labels = [Permutation(list(p)) for p in sorted(cycles)]

    def act(lab, g):
        return lab.conj(g)

    c = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    assert labels[0] == c, "the cycle (1..n) must be the first label"
    return _action_envelope(labels, act, _sym_gens(n), c)


def tuple_envelope_sym(n: int, max_points: int = 2000) -> Envelope:
    """S_n on (n-2)-tuples of distinct points, zeta = (n-1, n); order n!/2."""
    if n < 3:
        raise ValueError("the symmetric tuple construction needs n >= 3")
    count = 1
    for i in range(n, 2, -1):
        count *= i
    if count > max_points:
        raise BoundExceededError(
            f"{count} tuples exceed the point bound {max_points}")
    labels = sorted(itertools.permutations(range(1, n + 1), n - 2))

    def act(lab, g):
        return tuple(g(x) for x in lab)

    return _action_envelope(labels, act, _sym_gens(n),
                            Permutation.from_cycles(n, [(n - 1, n)]))


def tuple_envelope_alt(n: int, max_points: int = 2000) -> Envelope:
    """A_n on (n-3)-tuples of distinct points, zeta = (n-2, n-1, n);
    order n!/6."""
    if n < 4:
        raise ValueError("the alternating tuple construction needs n >= 4")
    count = 1
    for i in range(n, 3, -1):
        count *= i
    if count > max_points:
        raise BoundExceededError(
            f"{count} tuples exceed the point bound {max_points}")
    labels = sorted(itertools.permutations(range(1, n + 1), n - 3))

    def act(lab, g):
        return tuple(g(x) for x in lab)

    return _action_envelope(labels, act, _alt_gens(n),
                            Permutation.from_cycles(n, [(n - 2, n - 1, n)]))


# ---------------------------------------------------------------------------
# Geometric envelope families
# ---------------------------------------------------------------------------

def sl2_envelope(q: int) -> Envelope:
    """SL2(q) on the nonzero vectors of F_q^2 (right action on row vectors),
    zeta = the transvection [[1,0],[1,1]]; a connected quandle of order
    q^2 - 1.  The base vector (1,0) is point 1, the rest follow in
    lexicographic order."""
    field = SmallField(q)
    labels = [(1, 0)] + sorted(
        v for v in itertools.product(range(q), repeat=2)
        if v != (0, 0) and v != (1, 0))

    def act_matrix(v, m):
        x, y = v
        a, b, c, d = m
        return (field.add[field.mul[x][a]][field.mul[y][c]],
                field.add[field.mul[x][b]][field.mul[y][d]])

    # transvections generate SL2 over any finite field
    mats = []
    for t in range(1, q):
        mats.append((1, t, 0, 1))
        mats.append((1, 0, t, 1))
    index = {lab: i + 1 for i, lab in enumerate(labels)}
    perms = []
    for m in mats + [(1, 0, 1, 1)]:
        images = [0] * len(labels)
        for lab in labels:
            images[index[lab] - 1] = index[act_matrix(lab, m)]
        perms.append(Permutation(images))
    zeta = perms.pop()
    return validate_envelope(PermGroup(perms), zeta)


def psl3_2_envelope() -> Envelope:
    """PSL3(2) = GL3(2) on 2-element subsets of the 7 points of the Fano
    plane, zeta fixing the first two points; a connected quandle of order 21.

    Projective points are the nonzero vectors of F_2^3 in lexicographic
    order, so the base subset pairs (0,0,1) with (0,1,0); zeta is the unit
    upper [[1,1,1],[0,1,0],[0,0,1]] fixing both (the matrix of the paper's
    stabilizer element in the basis adapted to the base subset).
    """
    vectors = sorted(v for v in itertools.product((0, 1), repeat=3)
                     if v != (0, 0, 0))
    vec_index = {v: i + 1 for i, v in enumerate(vectors)}

    def act(v, m):
        out = [0, 0, 0]
        for i in range(3):
            if v[i]:
                for j in range(3):
                    out[j] ^= m[i][j]
        return tuple(out)

    # elementary transvections I + E_ij generate GL3(2)
    mats = []
    for i in range(3):
        for j in range(3):
            if i != j:
                m = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
                m[i][j] = 1
                mats.append(tuple(map(tuple, m)))
    zeta_mat = ((1, 1, 1), (0, 1, 0), (0, 0, 1))
    labels = [frozenset(s) for s in itertools.combinations(range(1, 8), 2)]
    labels.sort(key=sorted)
    point_perms = {}
    for m in mats + [zeta_mat]:
        point_perms[m] = {v: act(v, m) for v in vectors}

    def subset_act(lab, m):
        table = point_perms[m]
        return frozenset(vec_index[table[vectors[x - 1]]] for x in lab)

    return _action_envelope(labels, subset_act, list(mats), zeta_mat)


PLATONIC_FACE_GENERATORS = {
    # Two rotations per solid, as permutations of faces labeled 1..F in
    # lexicographic order of the face-center coordinates (tetrahedron:
    # centers opposite the vertices (1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1);
    # cube: centers +-e_i; octahedron: centers (+-1,+-1,+-1)/3;
    # dodecahedron: centers along (0,+-1,+-phi) and cyclic shifts;
    # icosahedron: centroids of the faces of that dodecahedral dual).
    # The first rotation is about the axis through face 1, so it generates
    # the face-1 stabilizer; the second is about another face or vertex
    # axis, chosen so the pair generates the full rotation group.
    "tetrahedron": ((1, 4, 2, 3), (3, 2, 4, 1)),
    "cube": ((1, 4, 2, 5, 3, 6), (3, 2, 6, 1, 5, 4)),
    "octahedron": ((1, 3, 5, 7, 2, 4, 6, 8), (5, 6, 1, 2, 7, 8, 3, 4)),
    "dodecahedron": ((1, 4, 2, 7, 3, 8, 5, 10, 6, 11, 9, 12),
                     (3, 1, 2, 5, 6, 4, 9, 7, 8, 11, 12, 10)),
    "icosahedron": ((1, 3, 4, 2, 9, 7, 10, 5, 8, 6, 15, 13, 16, 11, 14, 12,
                     19, 17, 18, 20),
                    (2, 5, 1, 6, 7, 11, 3, 12, 4, 8, 13, 17, 9, 18, 10, 14,
                     15, 20, 16, 19)),
}

PLATONIC_GROUP_ORDERS = {
    "tetrahedron": 12, "cube": 24, "octahedron": 24,
    "dodecahedron": 60, "icosahedron": 60,
}


def platonic_envelope(solid: str) -> Envelope:
    """Rotation group of a Platonic solid on its faces, zeta a canonical
    generator of the face-1 stabilizer.

    Every solid but the octahedron yields an envelope; the octahedron comes
    back flagged as a folder (no central stabilizer element has full normal
    closure), which is the expected obstruction.
    """
    if solid not in PLATONIC_FACE_GENERATORS:
        raise ValueError(f"unknown solid {solid!r}; choose one of "
                         + ", ".join(sorted(PLATONIC_FACE_GENERATORS)))
    gens = [Permutation(img) for img in PLATONIC_FACE_GENERATORS[solid]]
    group = PermGroup(gens)
    if group.order != PLATONIC_GROUP_ORDERS[solid]:
        raise AssertionError(f"{solid} rotation group has wrong order")
    stab = group.stabilizer(1)
    target = stab.order
    zeta = min(z for z in stab.elements() if z.order() == target)
    return validate_envelope(group, zeta)
