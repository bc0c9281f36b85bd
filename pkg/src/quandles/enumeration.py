"""Transitive-group catalogs, the envelope enumeration algorithm, and the
brute-force oracle.

The built-in catalog (degrees 2..8) enumerates *all* subgroup classes of S_n
by cyclic extension and keeps the transitive ones: starting from one cyclic
subgroup per cycle type plus the perfect subgroups (which no chain of
normal extensions of prime index can reach), every class is repeatedly
extended by normalizing elements of prime-power order.  Classes are
recognized exactly, by hashing the element sets of all S_n-conjugates of
each newly found class; groups too large to enumerate elementwise
(order > 2000) are identified by order and orbit sizes, which is unambiguous
for n <= 8.

The envelope enumeration is the connected-quandle search over a catalog:
keep the groups with transitive derived subgroup and cyclic abelianization,
run over the central elements of the point-1 stabilizer whose normal closure
is the whole group, build the quandle of each envelope, and filter the
results up to isomorphism.  The independent oracle searches Cayley tables
directly, column by column, propagating the conjugation closure constraint.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .envelope import Envelope, quandle_from_envelope, validate_envelope
from .perm import (
    BoundExceededError,
    PermGroup,
    Permutation,
    _Chain,
    raw_conj,
    raw_cycle_type,
    raw_identity,
    raw_inv,
    raw_mul,
)
from .quandle import FormatError, Quandle, are_isomorphic

BUILTIN_DEGREE_MAX = 8
ORACLE_HARD_MAX = 10
_BIG_ORDER = 2000  # above this, (order, orbit sizes) identifies a class


# ---------------------------------------------------------------------------
# Subgroup-class enumeration machinery (degree <= 8)
# ---------------------------------------------------------------------------

def _orbit_partition(degree: int, gens: Sequence[tuple]) -> tuple:
    """(orbit id per point, sorted orbit sizes); ids are orbit minima."""
    ids = [0] * (degree + 1)
    sizes = []
    for start in range(1, degree + 1):
        if ids[start]:
            continue
        queue = [start]
        ids[start] = start
        for pt in queue:
            for g in gens:
                img = g[pt]
                if not ids[img]:
                    ids[img] = start
                    queue.append(img)
        sizes.append(sum(1 for x in range(1, degree + 1) if ids[x] == start))
    return tuple(ids), tuple(sorted(sizes))


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            return n == 1
        d += 1
    return True


def _prime_power_elements(degree: int) -> list:
    """All non-identity elements of S_degree of prime-power order, sorted."""
    from math import lcm

    out = []
    for imgs in itertools.permutations(range(1, degree + 1)):
        arr = (0,) + imgs
        lengths = raw_cycle_type(arr)
        if lengths[0] == 1:
            continue
        if _is_prime_power(lcm(*lengths)):
            out.append(arr)
    return out


def _cycle_type_representatives(degree: int) -> list:
    """One permutation per cycle type (canonical consecutive cycles)."""
    reps = []

    def partitions(n, most):
        if n == 0:
            yield ()
            return
        for part in range(min(n, most), 0, -1):
            for rest in partitions(n - part, part):
                yield (part,) + rest

    for part in partitions(degree, degree):
        if all(p == 1 for p in part):
            continue
        arr = list(range(degree + 1))
        start = 1
        for length in part:
            for i in range(length - 1):
                arr[start + i] = start + i + 1
            arr[start + length - 1] = start
            start += length
        reps.append(tuple(arr))
    return reps


def _perfect_seed_groups(degree: int) -> list:
    """Generator lists of the perfect subgroups of S_degree, padded with
    fixed points.

    For degree <= 8 every perfect subgroup has a single nontrivial orbit
    and is one of: A_m (natural), A_5 on the 6 cosets of a subgroup of
    order 10, PSL(3,2) on the 7 nonzero vectors of F_2^3, PSL(2,7) on the
    projective line, or AGL(3,2) on the affine space F_2^3.  Each seed is
    verified (order and perfectness) by the catalog test suite.
    """

    def pad(perms: list, from_degree: int) -> list:
        out = []
        for p in perms:
            images = list(p.images) + list(range(from_degree + 1, degree + 1))
            out.append(Permutation(images)._arr)
        return out

    seeds = []
    for m in range(5, degree + 1):
        if m == 5:
            gens = [Permutation.from_cycles(5, [(1, 2, 3)]),
                    Permutation.from_cycles(5, [(1, 2, 3, 4, 5)])]
        elif m % 2 == 1:
            gens = [Permutation.from_cycles(m, [(1, 2, 3)]),
                    Permutation.from_cycles(m, [tuple(range(1, m + 1))])]
        else:
            gens = [Permutation.from_cycles(m, [(1, 2, 3)]),
                    Permutation.from_cycles(m, [tuple(range(2, m + 1))])]
        seeds.append(pad(gens, m))
    if degree >= 6:
        seeds.append(pad(_a5_on_cosets_of_order10(), 6))
    if degree >= 7:
        seeds.append(pad(_psl32_on_vectors(), 7))
    if degree >= 8:
        seeds.append(pad(_psl27_on_projective_line(), 8))
        seeds.append(pad(_agl32_on_vectors(), 8))
    return seeds


def _a5_on_cosets_of_order10() -> list:
    """A5 acting on the 6 right cosets of <(1,2,3,4,5), (2,5)(3,4)>."""
    a5 = PermGroup([Permutation.from_cycles(5, [(1, 2, 3)]),
                    Permutation.from_cycles(5, [(1, 2, 3, 4, 5)])])
    sub = PermGroup([Permutation.from_cycles(5, [(1, 2, 3, 4, 5)]),
                     Permutation.from_cycles(5, [(2, 5), (3, 4)])])
    assert sub.order == 10
    elements = sorted(a5.elements())
    cosets: list = []
    coset_of = {}
    for x in elements:
        if x in coset_of:
            continue
        members = sorted(h * x for h in sub.elements())
        for m in members:
            coset_of[m] = len(cosets)
        cosets.append(members)
    assert len(cosets) == 6
    out = []
    for g in a5.generators:
        images = [0] * 6
        for i, coset in enumerate(cosets):
            images[i] = coset_of[coset[0] * g] + 1
        out.append(Permutation(images))
    return out


def _gl3_2_vector_action(mats: list) -> list:
    vectors = sorted(v for v in itertools.product((0, 1), repeat=3)
                     if v != (0, 0, 0))
    index = {v: i + 1 for i, v in enumerate(vectors)}
    out = []
    for m in mats:
        images = [0] * 7
        for v in vectors:
            w = [0, 0, 0]
            for i in range(3):
                if v[i]:
                    for j in range(3):
                        w[j] ^= m[i][j]
            images[index[v] - 1] = index[tuple(w)]
        out.append(Permutation(images))
    return out


def _psl32_on_vectors() -> list:
    """GL(3,2) acting on the 7 nonzero vectors of F_2^3."""
    mats = []
    for i in range(3):
        for j in range(3):
            if i != j:
                m = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
                m[i][j] = 1
                mats.append(m)
    return _gl3_2_vector_action(mats)


def _psl27_on_projective_line() -> list:
    """PSL(2,7) on {0..6, inf} via x -> x+1 and x -> -1/x (inf is point 8)."""
    points = list(range(7)) + ["inf"]
    index = {p: i + 1 for i, p in enumerate(points)}

    def shift(x):
        return "inf" if x == "inf" else (x + 1) % 7

    def neg_inv(x):
        if x == "inf":
            return 0
        if x == 0:
            return "inf"
        return (-pow(x, 5, 7)) % 7  # x^5 = x^-1 mod 7

    out = []
    for fn in (shift, neg_inv):
        images = [0] * 8
        for p in points:
            images[index[p] - 1] = index[fn(p)]
        out.append(Permutation(images))
    return out


def _agl32_on_vectors() -> list:
    """AGL(3,2) = translations + GL(3,2) on the 8 vectors of F_2^3."""
    vectors = sorted(itertools.product((0, 1), repeat=3))
    index = {v: i + 1 for i, v in enumerate(vectors)}
    out = []
    for shift in ((0, 0, 1), (0, 1, 0), (1, 0, 0)):
        images = [0] * 8
        for v in vectors:
            images[index[v] - 1] = index[tuple(a ^ b for a, b in zip(v, shift))]
        out.append(Permutation(images))
    for i in range(3):
        for j in range(3):
            if i != j:
                m = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
                m[i][j] = 1
                images = [0] * 8
                for v in vectors:
                    w = [0, 0, 0]
                    for a in range(3):
                        if v[a]:
                            for b in range(3):
                                w[b] ^= m[a][b]
                    images[index[v] - 1] = index[tuple(w)]
                out.append(Permutation(images))
    return out


class _SubgroupClass:
    __slots__ = ("gens", "chain", "order", "orbit_ids", "orbit_sizes")

    def __init__(self, gens: list, chain: _Chain, degree: int):
        self.gens = gens
        self.chain = chain
        self.order = chain.order
        self.orbit_ids, self.orbit_sizes = _orbit_partition(degree, gens)


def _symmetric_raw_gens(degree: int) -> list:
    if degree == 1:
        return [raw_identity(1)]
    gens = [Permutation.from_cycles(degree, [(1, 2)])._arr]
    if degree > 2:
        gens.append(
            Permutation.from_cycles(degree, [tuple(range(1, degree + 1))])._arr)
    return gens


def _all_subgroup_classes(degree: int) -> list:
    """All subgroup classes of S_degree up to conjugacy (degree <= 8)."""
    # closure of a finite orbit needs no inverse generators: applying a
    # generator repeatedly walks its full cycle on the orbit
    conj_gens = _symmetric_raw_gens(degree)
    ppe = _prime_power_elements(degree)
    classes: List[_SubgroupClass] = []
    registry: dict = {}

    def classify(gens: list, chain: _Chain) -> bool:
        """Return True when the group is a newly discovered class."""
        order = chain.order
        orbit_ids, orbit_sizes = _orbit_partition(degree, gens)
        if order > _BIG_ORDER:
            key = ("big", order, orbit_sizes)
            if key in registry:
                return False
            registry[key] = len(classes)
        else:
            elements = frozenset(chain.iter_elements())
            key = ("set", order, hash(elements))
            if key in registry:
                return False
            class_id = len(classes)
            seen = {elements}
            registry[("set", order, hash(elements))] = class_id
            queue = [elements]
            while queue:
                current = queue.pop()
                for g in conj_gens:
                    conj = frozenset(raw_conj(p, g) for p in current)
                    if conj not in seen:
                        seen.add(conj)
                        registry[("set", order, hash(conj))] = class_id
                        queue.append(conj)
        record = _SubgroupClass(gens, chain, degree)
        classes.append(record)
        return True

    for rep in _cycle_type_representatives(degree):
        chain = _Chain(degree)
        chain.add_generator(rep)
        classify([rep], chain)
    for seed in _perfect_seed_groups(degree):
        chain = _Chain(degree)
        for g in seed:
            chain.add_generator(g)
        classify(seed, chain)

    cursor = 0
    while cursor < len(classes):
        cls = classes[cursor]
        cursor += 1
        orbit_ids = cls.orbit_ids
        chain = cls.chain
        gens = cls.gens
        built: list = []  # chains of extensions found from this class
        for g in ppe:
            # g must permute the orbit partition of the class
            mapping = {}
            ok = True
            for x in range(1, degree + 1):
                a = orbit_ids[x]
                b = orbit_ids[g[x]]
                prev = mapping.get(a)
                if prev is None:
                    mapping[a] = b
                elif prev != b:
                    ok = False
                    break
            if not ok or chain.contains(g):
                continue
            for s in gens:
                if not chain.contains(raw_conj(s, g)):
                    ok = False
                    break
            if not ok:
                continue
            # order of the extension: |U| * (order of g modulo U)
            coset_order = 1
            power = g
            while not chain.contains(power):
                coset_order += 1
                power = raw_mul(power, g)
            target_order = cls.order * coset_order
            known = False
            for ext in built:
                if ext.order == target_order and ext.contains(g):
                    known = True
                    break
            if known:
                continue
            new_chain = _Chain(degree)
            for s in gens:
                new_chain.add_generator(s)
            new_chain.add_generator(g)
            built.append(new_chain)
            classify(gens + [g], new_chain)
    return classes


def _canonical_generators(group: PermGroup) -> list:
    """Greedy minimal generating list over the sorted element list."""
    chain = _Chain(group.degree)
    gens: list = []
    for p in sorted(group.elements(bound=10**6)):
        if p.is_identity:
            continue
        if chain.add_generator(p._arr):
            gens.append(p)
        if chain.order == group.order:
            break
    if not gens:
        gens = [Permutation.identity(group.degree)]
    return gens


@dataclass(frozen=True)
class Catalog:
    """Transitive groups of one degree, pairwise non-conjugate, in canonical
    order (ascending order, then by sorted generator image lists)."""

    degree: int
    groups: tuple

    def __len__(self) -> int:
        return len(self.groups)


def _catalog_sort_key(group: PermGroup):
    return (group.order,
            tuple(sorted(g.images for g in group.generators)))


@lru_cache(maxsize=None)
def builtin_catalog(degree: int) -> Catalog:
    """Exhaustive catalog of transitive groups of the given degree (2..8)."""
    if not 2 <= degree <= BUILTIN_DEGREE_MAX:
        raise BoundExceededError(
            f"built-in catalogs cover degrees 2..{BUILTIN_DEGREE_MAX}; "
            f"got {degree} (supply an external catalog file)")
    classes = _all_subgroup_classes(degree)
    groups = []
    for cls in classes:
        if cls.orbit_sizes == (degree,):
            raw_group = PermGroup._from_raw(degree, cls.gens)
            groups.append(PermGroup(_canonical_generators(raw_group)))
    groups.sort(key=_catalog_sort_key)
    return Catalog(degree, tuple(groups))


def trivial_catalog() -> Catalog:
    """The degree-1 catalog: just the trivial group."""
    return Catalog(1, (PermGroup.trivial(1),))


# ---------------------------------------------------------------------------
# Catalog files
# ---------------------------------------------------------------------------

def catalog_to_text(catalog: Catalog) -> str:
    lines = [f"catalog {catalog.degree} {len(catalog.groups)}"]
    for i, group in enumerate(catalog.groups, start=1):
        lines.append(f"group {i} {len(group.generators)}")
        lines.extend(str(g) for g in group.generators)
    return "\n".join(lines) + "\n"


def save_catalog(catalog: Catalog, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(catalog_to_text(catalog))


def catalog_from_text(text: str, check_duplicates: bool = True) -> Catalog:
    lines = text.split("\n")
    lineno = 0

    def next_line():
        nonlocal lineno
        while lineno < len(lines):
            lineno += 1
            stripped = lines[lineno - 1].strip()
            if stripped:
                return stripped
        raise FormatError("unexpected end of file", lineno)

    header = next_line().split()
    if len(header) != 3 or header[0] != "catalog":
        raise FormatError("expected 'catalog <degree> <count>'", lineno)
    try:
        degree, count = int(header[1]), int(header[2])
    except ValueError:
        raise FormatError("degree and count must be integers", lineno) from None
    groups = []
    for expect_id in range(1, count + 1):
        head = next_line().split()
        if len(head) != 3 or head[0] != "group":
            raise FormatError("expected 'group <id> <ngens>'", lineno)
        try:
            gid, ngens = int(head[1]), int(head[2])
        except ValueError:
            raise FormatError("group id and ngens must be integers",
                              lineno) from None
        if gid != expect_id:
            raise FormatError(
                f"group ids must be consecutive; expected {expect_id}, "
                f"got {gid}", lineno)
        gens = []
        for _ in range(ngens):
            row = next_line()
            try:
                p = Permutation.parse(row, degree=degree)
            except ValueError as exc:
                raise FormatError(str(exc), lineno) from None
            gens.append(p)
        group = PermGroup(gens)
        if not group.is_transitive():
            raise FormatError(
                f"group {gid} is not transitive on 1..{degree}", lineno)
        groups.append(group)
    catalog = Catalog(degree, tuple(groups))
    if check_duplicates:
        if degree <= BUILTIN_DEGREE_MAX:
            dup = _find_conjugate_pair(catalog)
            if dup is not None:
                raise FormatError(
                    f"groups {dup[0]} and {dup[1]} are conjugate in the "
                    f"symmetric group", 1)
        else:
            import warnings
            warnings.warn(
                f"degree {degree} catalog accepted without a conjugacy "
                f"check (too costly above degree {BUILTIN_DEGREE_MAX})")
    return catalog


def _find_conjugate_pair(catalog: Catalog) -> Optional[tuple]:
    """Index pair (1-based) of S_n-conjugate groups, if any (degree <= 8)."""
    degree = catalog.degree
    conj_gens = _symmetric_raw_gens(degree)
    buckets: dict = {}
    for i, group in enumerate(catalog.groups, start=1):
        key = (group.order,)
        buckets.setdefault(key, []).append(i)
    for key, ids in buckets.items():
        if len(ids) < 2:
            continue
        hashes = {}
        for i in ids:
            group = catalog.groups[i - 1]
            if group.order > _BIG_ORDER:
                sizes = tuple(sorted(len(o) for o in group.orbits()))
                sig = ("big", sizes)
                if sig in hashes:
                    return hashes[sig], i
                hashes[sig] = i
                continue
            elements = frozenset(p._arr for p in group.elements())
            match = hashes.get(hash(elements))
            if match is not None:
                return match, i
            seen = {elements}
            queue = [elements]
            while queue:
                current = queue.pop()
                for g in conj_gens:
                    conj = frozenset(raw_conj(p, g) for p in current)
                    if conj not in seen:
                        seen.add(conj)
                        hashes[hash(conj)] = i
                        queue.append(conj)
            hashes[hash(elements)] = i
    return None


def load_catalog(path, check_duplicates: bool = True) -> Catalog:
    with open(path, "r", encoding="ascii") as fh:
        return catalog_from_text(fh.read(), check_duplicates=check_duplicates)


# ---------------------------------------------------------------------------
# Envelope serialization (catalog record + zeta image list)
# ---------------------------------------------------------------------------

def envelope_to_text(env: Envelope) -> str:
    lines = [f"envelope {env.degree} {len(env.group.generators)}"]
    lines.extend(str(g) for g in env.group.generators)
    lines.append(str(env.zeta))
    return "\n".join(lines) + "\n"


def envelope_from_text(text: str) -> Envelope:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    head = lines[0].split()
    if len(head) != 3 or head[0] != "envelope":
        raise FormatError("expected 'envelope <degree> <ngens>'", 1)
    degree, ngens = int(head[1]), int(head[2])
    if len(lines) != ngens + 2:
        raise FormatError(f"expected {ngens} generators and one zeta line",
                          len(lines))
    gens = [Permutation.parse(ln, degree=degree) for ln in lines[1:1 + ngens]]
    zeta = Permutation.parse(lines[1 + ngens], degree=degree)
    return validate_envelope(PermGroup(gens), zeta)


# ---------------------------------------------------------------------------
# Enumeration results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuandleRecord:
    """One connected quandle with its annotations."""

    quandle: Quandle
    rmlt_order: int
    dis_order: int
    latin: bool
    affine: bool
    source_group_id: int  # catalog id; 0 for oracle output
    zeta: Permutation


@dataclass(frozen=True)
class EnumerationResult:
    order: int
    records: tuple

    @property
    def quandles(self) -> tuple:
        return tuple(r.quandle for r in self.records)

    def counts(self) -> tuple:
        """(q, l, a) for this order."""
        q = len(self.records)
        latin = sum(1 for r in self.records if r.latin)
        affine = sum(1 for r in self.records if r.affine)
        return (q, latin, affine)


def _filter_up_to_isomorphism(quandles: list) -> list:
    """Keep the first representative of each isomorphism class, in order."""
    kept: list = []
    for item in quandles:
        q = item[0]
        if all(are_isomorphic(q, other[0]) is None for other in kept):
            kept.append(item)
    return kept


def _record_for(q: Quandle, source_id: int, zeta: Permutation,
                rmlt_order: int) -> QuandleRecord:
    dis_order = q.dis().order
    latin = q.is_latin()
    affine = q.is_medial()  # connected: medial iff affine
    return QuandleRecord(q, rmlt_order, dis_order, latin, affine,
                         source_id, zeta)


def _group_passes_filter(group: PermGroup) -> bool:
    derived = group.derived_subgroup()
    if not derived.is_transitive():
        return False
    index = group.order // derived.order
    if index == 1:
        return True
    return group.has_cyclic_derived_quotient()


def _quandles_from_group(args) -> list:
    gid, group = args
    if not _group_passes_filter(group):
        return []
    stab = group.stabilizer(1)
    center = stab.center()
    out = []
    for zeta in sorted(center.elements()):
        if zeta.is_identity and group.degree > 1:
            continue
        closure = group.normal_closure([zeta])
        if closure.order != group.order:
            continue
        env = Envelope(group, zeta, True)
        q = quandle_from_envelope(env)
        if q.rmlt().order != group.order:
            raise AssertionError(
                "right multiplication group of the constructed quandle "
                "does not match the source group")
        out.append((q, gid, zeta))
    return _filter_up_to_isomorphism(out)


def enumerate_connected_quandles(n: int, catalog: Optional[Catalog] = None,
                                 threads: int = 1) -> EnumerationResult:
    """All connected quandles of order n up to isomorphism, via envelopes.

    For each catalog group with transitive derived subgroup and cyclic
    abelianization, every central element of the point-1 stabilizer with
    full normal closure yields one quandle; duplicates are removed by a
    direct isomorphism filter, per group and then across groups.  Output
    order and content are independent of the thread count.
    """
    if catalog is None:
        catalog = trivial_catalog() if n == 1 else builtin_catalog(n)
    if catalog.degree != n:
        raise ValueError(
            f"catalog degree {catalog.degree} does not match order {n}")
    tasks = list(enumerate(catalog.groups, start=1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_group = list(pool.map(_quandles_from_group, tasks))
    else:
        per_group = [_quandles_from_group(t) for t in tasks]
    merged: list = []
    for group_list in per_group:
        merged.extend(group_list)
    final = _filter_up_to_isomorphism(merged)
    if len(final) != len(merged):
        raise RuntimeError(
            "isomorphic quandles arose from non-conjugate catalog groups; "
            "the catalog is inconsistent")
    records = tuple(
        _record_for(q, gid, zeta, catalog.groups[gid - 1].order)
        for q, gid, zeta in final)
    return EnumerationResult(n, records)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def _perms_by_cycle_type(degree: int) -> dict:
    """cycle type -> all raw permutations of that type, in lex order."""
    table: dict = {}
    for imgs in itertools.permutations(range(1, degree + 1)):
        arr = (0,) + imgs
        table.setdefault(raw_cycle_type(arr), []).append(arr)
    return table


def _first_column_representatives(n: int) -> list:
    """One representative per nontrivial cycle type fixing point 1.

    Cycles are laid out consecutively on points 2..n, longest first; point 1
    stays fixed, as idempotence requires of R_1.
    """
    reps = []

    def partitions(m, most):
        if m == 0:
            yield ()
            return
        for part in range(min(m, most), 0, -1):
            for rest in partitions(m - part, part):
                yield (part,) + rest

    for part in partitions(n - 1, n - 1):
        if part[0] == 1:
            continue  # identity column forces the trivial quandle
        arr = list(range(n + 1))
        start = 2
        for length in part:
            for i in range(length - 1):
                arr[start + i] = start + i + 1
            arr[start + length - 1] = start
            start += length
        reps.append(tuple(arr))
    return reps


def _oracle_search(n: int) -> list:
    """All connected quandle tables of order n up to isomorphism."""
    if n == 1:
        return [Quandle([[1]])]
    results: list = []
    perms_by_type = _perms_by_cycle_type(n)
    for r1 in _first_column_representatives(n):
        ctype = raw_cycle_type(r1)
        same_type = perms_by_type[ctype]
        candidates = {x: [p for p in same_type if p[x] == x]
                      for x in range(1, n + 1)}

        def try_assign(cols, col, value, pending) -> bool:
            """Set cols[col] = value and queue the closure constraints."""
            if value[col] != col:
                return False
            current = cols[col]
            if current is not None:
                return current == value
            cols[col] = value
            for other in range(1, n + 1):
                if cols[other] is not None:
                    pending.append((col, other))
                    if other != col:
                        pending.append((other, col))
            return True

        def propagate(cols, pending) -> bool:
            """Closure rule: R_(a*x) = R_x^-1 R_a R_x for assigned pairs."""
            while pending:
                a, x = pending.pop()
                ca, cx = cols[a], cols[x]
                if ca is None or cx is None:
                    continue
                target = cx[a]
                forced = raw_mul(raw_mul(raw_inv(cx), ca), cx)
                if not try_assign(cols, target, forced, pending):
                    return False
            return True

        def search(cols) -> None:
            free = next((y for y in range(1, n + 1) if cols[y] is None), None)
            if free is None:
                table = [[cols[y][x] for y in range(1, n + 1)]
                         for x in range(1, n + 1)]
                q = Quandle(table)
                if q.is_connected():
                    results.append(q)
                return
            for cand in candidates[free]:
                trial = list(cols)
                pending: list = []
                if not try_assign(trial, free, cand, pending):
                    continue
                if propagate(trial, pending):
                    search(trial)

        cols: list = [None] * (n + 1)
        pending: list = []
        if try_assign(cols, 1, r1, pending) and propagate(cols, pending):
            search(cols)
    unique = _filter_up_to_isomorphism([(q,) for q in results])
    return [item[0] for item in unique]


def brute_force_quandles(n: int, hard_max: int = ORACLE_HARD_MAX
                         ) -> EnumerationResult:
    """Independent oracle: backtracking over translation columns.

    Columns are assigned one at a time subject to idempotence and the
    conjugation closure constraint, propagated eagerly; only connected
    tables are kept, filtered up to isomorphism.  The n-th column of each
    result doubles as its envelope zeta.
    """
    if n > hard_max:
        raise BoundExceededError(
            f"oracle enumeration is capped at order {hard_max}")
    found = _oracle_search(n)
    records = tuple(
        _record_for(q, 0, q.right_translation(1), q.rmlt().order)
        for q in found)
    return EnumerationResult(n, records)


def match_up_to_isomorphism(left: EnumerationResult,
                            right: EnumerationResult) -> bool:
    """Perfect matching between two quandle lists under isomorphism."""
    if len(left.records) != len(right.records):
        return False
    remaining = list(right.quandles)
    for q in left.quandles:
        for i, other in enumerate(remaining):
            if are_isomorphic(q, other) is not None:
                remaining.pop(i)
                break
        else:
            return False
    return True


def classify(result: EnumerationResult) -> tuple:
    """(q, l, a) counts with the metabelian cross-check on the affine flag."""
    q, latin, affine = result.counts()
    for record in result.records:
        metabelian = record.quandle.rmlt().is_metabelian()
        if metabelian != record.affine:
            raise RuntimeError(
                "medial scan and metabelian criterion disagree; "
                "this indicates a bug")
    if not affine <= latin <= q:
        raise RuntimeError(f"count monotonicity violated: "
                           f"a={affine}, l={latin}, q={q}")
    return (q, latin, affine)


# ---------------------------------------------------------------------------
# The degree-2p obstruction check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ObstructionReport:
    degree: int
    surviving: tuple  # (catalog id, group order) pairs


def obstruction_check(catalog: Catalog) -> ObstructionReport:
    """Which catalog groups satisfy both: (A) transitive derived subgroup,
    (B) the normal closure of the center of the point-1 stabilizer is the
    whole group.  For degree 2p with p > 5 prime the answer is none."""
    if catalog.degree % 2 != 0:
        raise ValueError("the obstruction check applies to even degrees")
    surviving = []
    for gid, group in enumerate(catalog.groups, start=1):
        if not group.derived_subgroup().is_transitive():
            continue
        center = group.stabilizer(1).center()
        closure = group.normal_closure(list(center.generators))
        if closure.order == group.order:
            surviving.append((gid, group.order))
    return ObstructionReport(catalog.degree, tuple(surviving))


# ---------------------------------------------------------------------------
# Result export
# ---------------------------------------------------------------------------

def summary_tsv(result: EnumerationResult) -> str:
    lines = ["index\trmlt_order\tdis_order\tlatin\taffine\t"
             "source_group_id\tzeta"]
    for i, r in enumerate(result.records, start=1):
        lines.append(f"{i}\t{r.rmlt_order}\t{r.dis_order}\t"
                     f"{int(r.latin)}\t{int(r.affine)}\t"
                     f"{r.source_group_id}\t{r.zeta}")
    return "\n".join(lines) + "\n"


def export_results(result: EnumerationResult, directory) -> None:
    """Write q<order>_<index>.qnd files and summary.tsv into a directory."""
    import os

    from .quandle import write_quandle_file

    os.makedirs(directory, exist_ok=True)
    for i, r in enumerate(result.records, start=1):
        write_quandle_file(
            r.quandle, os.path.join(directory, f"q{result.order}_{i}.qnd"))
    with open(os.path.join(directory, "summary.tsv"), "w",
              encoding="ascii") as fh:
        fh.write(summary_tsv(result))
