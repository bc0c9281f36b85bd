"""The correspondence between connected quandles and quandle envelopes.

An envelope is a pair (G, zeta) with G transitive on {1..n}, zeta central in
the stabilizer of the base point e = 1, and the normal closure of zeta equal
to all of G.  Dropping the closure condition gives a *folder*; the Envelope
type carries both, distinguished by ``is_envelope``.

The two directions of the correspondence:

* ``quandle_from_envelope``: column y of the table is zeta conjugated by any
  group element taking e to y (the choice does not matter; a test pins this
  down by comparing two transversals);
* ``envelope_from_quandle``: the right multiplication group together with the
  translation R_e.

The module also hosts the coset construction of homogeneous quandles over a
small explicit group with a centralizing subgroup and automorphism, and the
minimal representation of a connected quandle over its displacement group.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, List

from .perm import (
    DEFAULT_ITERATION_BOUND,
    BoundExceededError,
    DegreeMismatchError,
    PermGroup,
    Permutation,
)
from .quandle import NotConnectedError, Quandle, are_isomorphic, _search_isomorphisms

SMALL_GROUP_BOUND = 1000


class EnvelopeError(ValueError):
    """A (group, permutation) pair violated a folder/envelope condition.

    ``reason`` is one of ``"not-transitive"``, ``"zeta-not-in-group"``,
    ``"zeta-moves-e"``, ``"zeta-not-central-in-stabilizer"``,
    ``"folder-not-envelope"``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class Envelope:
    """A quandle folder or envelope (G, zeta) with base point e = 1."""

    __slots__ = ("group", "zeta", "is_envelope")

    E_POINT = 1

    def __init__(self, group: PermGroup, zeta: Permutation, is_envelope: bool):
        self.group = group
        self.zeta = zeta
        self.is_envelope = is_envelope

    @property
    def degree(self) -> int:
        return self.group.degree

    def same_as(self, other: "Envelope") -> bool:
        """Equality as a pair: same permutation zeta, same group as a set."""
        return self.zeta == other.zeta and self.group.equals(other.group)

    def __repr__(self) -> str:
        kind = "envelope" if self.is_envelope else "folder"
        return (f"<{kind} deg={self.degree} |G|={self.group.order} "
                f"zeta={self.zeta!r}>")


def validate_envelope(group: PermGroup, zeta: Permutation) -> Envelope:
    """Check the folder conditions, then record whether <zeta^G> = G.

    Failing a folder condition raises; a folder that is not an envelope is
    returned with ``is_envelope`` False, not treated as an error.
    """
    if group.degree != zeta.degree:
        raise DegreeMismatchError(
            f"degree mismatch: group {group.degree}, zeta {zeta.degree}")
    if not group.is_transitive():
        raise EnvelopeError(
            "not-transitive", "the group does not act transitively")
    if zeta not in group:
        raise EnvelopeError(
            "zeta-not-in-group", "zeta is not an element of the group")
    e = Envelope.E_POINT
    if zeta(e) != e:
        raise EnvelopeError(
            "zeta-moves-e", f"zeta moves the base point {e}")
    stab = group.stabilizer(e)
    for g in stab.generators:
        if g * zeta != zeta * g:
            raise EnvelopeError(
                "zeta-not-central-in-stabilizer",
                f"zeta does not commute with {g!r} in the stabilizer of {e}")
    closure = group.normal_closure([zeta])
    return Envelope(group, zeta, closure.order == group.order)


def quandle_from_envelope(env: Envelope) -> Quandle:
    """The connected quandle of an envelope: x*y = x^(zeta^y_hat).

    y_hat is the breadth-first orbit witness taking e to y; any other witness
    gives the same column because zeta is central in the stabilizer of e.
    """
    if not env.is_envelope:
        raise EnvelopeError(
            "folder-not-envelope",
            "normal closure of zeta is a proper subgroup; "
            "the pair is a folder, not an envelope")
    n = env.degree
    witnesses = env.group.orbit(Envelope.E_POINT)
    cols = [env.zeta.conj(witnesses[y]) for y in range(1, n + 1)]
    rows = [[cols[y - 1](x) for y in range(1, n + 1)] for x in range(1, n + 1)]
    q = Quandle(rows)
    if not q.is_connected():
        raise AssertionError("envelope produced a disconnected quandle")
    return q


def envelope_from_quandle(q: Quandle) -> Envelope:
    """The envelope (RMlt Q, R_e) of a connected quandle."""
    if not q.is_connected():
        raise NotConnectedError(
            "only connected quandles correspond to envelopes")
    env = validate_envelope(q.rmlt(), q.right_translation(Envelope.E_POINT))
    if not env.is_envelope:
        raise AssertionError(
            "connected quandle yielded a folder; this should be impossible")
    return env


# ---------------------------------------------------------------------------
# Homogeneous representation over small explicit groups
# ---------------------------------------------------------------------------

class SmallGroup:
    """A group given by an explicit element list and multiplication oracle.

    Element order in ``elements`` is the canonical ordering used to index
    cosets reproducibly.  Capped at SMALL_GROUP_BOUND elements; the coset
    construction enumerates everything anyway.
    """

    def __init__(self, elements: Iterable, mul: Callable):
        self.elements = list(elements)
        if len(self.elements) > SMALL_GROUP_BOUND:
            raise BoundExceededError(
                f"small group support is capped at {SMALL_GROUP_BOUND} "
                f"elements, got {len(self.elements)}")
        self.mul = mul
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements in group list")
        ident = None
        for e in self.elements:
            if mul(e, self.elements[0]) != self.elements[0]:
                continue
            if all(mul(e, x) == x == mul(x, e) for x in self.elements):
                ident = e
                break
        if ident is None:
            raise ValueError("no identity element found")
        self.identity = ident
        self.inverse = {}
        for e in self.elements:
            for x in self.elements:
                if mul(e, x) == ident:
                    self.inverse[e] = x
                    break
            else:
                raise ValueError(f"element {e!r} has no inverse")

    @property
    def order(self) -> int:
        return len(self.elements)

    @classmethod
    def from_perm_group(cls, group: PermGroup,
                        bound: int = SMALL_GROUP_BOUND) -> "SmallGroup":
        elements = sorted(group.elements(bound))
        return cls(elements, lambda a, b: a * b)


class HomTriple:
    """(G, H, f) with H a subgroup of the centralizer of the automorphism f.

    Feeds the coset construction: the quandle lives on right cosets of H,
    with Hx * Hy = H (x y^-1)^f y.
    """

    def __init__(self, group: SmallGroup, subgroup: Iterable, f: Dict):
        self.group = group
        self.subgroup = list(subgroup)
        self.f = dict(f)
        self._validate()

    def _validate(self) -> None:
        g = self.group
        if set(self.f) != set(g.elements) or \
                set(self.f.values()) != set(g.elements):
            raise ValueError("f must be a bijection on the group elements")
        for a in g.elements:
            for b in g.elements:
                if self.f[g.mul(a, b)] != g.mul(self.f[a], self.f[b]):
                    raise ValueError(
                        f"f is not a homomorphism at ({a!r}, {b!r})")
        sub = set(self.subgroup)
        if g.identity not in sub:
            raise ValueError("subgroup must contain the identity")
        for h1 in self.subgroup:
            for h2 in self.subgroup:
                if g.mul(h1, g.inverse[h2]) not in sub:
                    raise ValueError("subgroup list is not closed")
        for h in self.subgroup:
            if self.f[h] != h:
                raise ValueError(
                    f"subgroup element {h!r} is not centralized by f")


def hom_quandle(triple: HomTriple) -> Quandle:
    """The homogeneous quandle on right cosets G/H with Hx*Hy = H(xy^-1)^f y.

    Cosets are indexed 1..[G:H] sorted by their smallest member under the
    group's canonical element ordering, so tables are reproducible.
    """
    g = triple.group
    sub = triple.subgroup
    coset_of: Dict = {}
    cosets: List = []
    for x in g.elements:
        if x in coset_of:
            continue
        members = sorted((g.mul(h, x) for h in sub), key=g.index.__getitem__)
        for m in members:
            coset_of[m] = len(cosets)
        cosets.append(members)
    order = sorted(range(len(cosets)), key=lambda i: g.index[cosets[i][0]])
    rank = {old: new for new, old in enumerate(order)}
    reps = [cosets[i][0] for i in order]
    k = len(reps)
    rows = [[0] * k for _ in range(k)]
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            z = g.mul(triple.f[g.mul(x, g.inverse[y])], y)
            rows[i][j] = rank[coset_of[z]] + 1
    return Quandle(rows)


def minimal_representation(q: Quandle) -> HomTriple:
    """(Dis Q, stabilizer of e in Dis Q, conjugation by R_e).

    The rebuilt coset quandle is isomorphic to q; this is the homogeneous
    representation over the smallest possible group.
    """
    if not q.is_connected():
        raise NotConnectedError(
            "the minimal representation needs a connected quandle")
    dis = q.dis()
    small = SmallGroup.from_perm_group(dis)
    e = Envelope.E_POINT
    subgroup = [g for g in small.elements if g(e) == e]
    r_e = q.right_translation(e)
    f = {}
    for g in small.elements:
        image = g.conj(r_e)
        if image not in small.index:
            raise AssertionError(
                "conjugation by R_e does not preserve the displacement group")
        f[g] = image
    return HomTriple(small, subgroup, f)


# ---------------------------------------------------------------------------
# Envelope-level predicates
# ---------------------------------------------------------------------------

def is_latin_envelope(env: Envelope,
                      bound: int = DEFAULT_ITERATION_BOUND) -> bool:
    """Latin test on the envelope: every alpha moving e must give a
    fixed-point-free commutator [zeta, alpha]."""
    e = Envelope.E_POINT
    zeta_inv = env.zeta.inverse()
    n = env.degree
    for alpha in env.group.elements(bound):
        if alpha(e) == e:
            continue
        comm = zeta_inv * env.zeta.conj(alpha)
        if any(comm(x) == x for x in range(1, n + 1)):
            return False
    return True


def is_affine_envelope(env: Envelope) -> bool:
    """Affine (equivalently medial) quandle test: G metabelian."""
    return env.group.is_metabelian()


def envelopes_give_isomorphic_quandles(e1: Envelope, e2: Envelope) -> bool:
    """Decide Q(G,zeta) ~ Q(K,xi) by a direct quandle isomorphism check.

    When isomorphic, the necessary conditions |G| = |K| and equal cycle
    structure of the two distinguished permutations are asserted; a
    violation would mean a bug, not a negative answer.
    """
    if e1.degree != e2.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {e1.degree} vs {e2.degree}")
    witness = are_isomorphic(quandle_from_envelope(e1),
                             quandle_from_envelope(e2))
    if witness is not None:
        if e1.group.order != e2.group.order:
            raise AssertionError(
                "isomorphic quandles from groups of different order")
        if e1.zeta.cycle_type() != e2.zeta.cycle_type():
            raise AssertionError(
                "isomorphic quandles with different zeta cycle structures")
    return witness is not None


def is_homogeneous(q: Quandle, bound: int = 10**7) -> bool:
    """True iff Aut(Q) is transitive: for each y some automorphism maps 1 to y."""
    if q.n ** 2 > bound:
        raise BoundExceededError(
            f"homogeneity backtracking capped; order {q.n} too large")
    for y in range(2, q.n + 1):
        if not _search_isomorphisms(q, q, {1: y}, find_all=False):
            return False
    return True


def latin_condition_on_triple(triple: HomTriple) -> bool:
    """Finite latin criterion for a coset quandle, evaluated on the group:

    for all a, u: (u^-1)^f u in H^a implies u in H.
    """
    g = triple.group
    sub = set(triple.subgroup)
    conj_subs = []
    seen = set()
    for a in g.elements:
        a_inv = g.inverse[a]
        conj = frozenset(g.mul(g.mul(a_inv, h), a) for h in triple.subgroup)
        if conj not in seen:
            seen.add(conj)
            conj_subs.append(conj)
    for u in g.elements:
        if u in sub:
            continue
        value = g.mul(triple.f[g.inverse[u]], u)
        if any(value in conj for conj in conj_subs):
            return False
    return True
