"""Quandle Cayley tables: validation, structural groups, predicates, isomorphism.

A quandle of order n is stored as its n x n Cayley table with entry (x, y)
equal to x*y, both 1-based.  Columns are the right translations: column y,
read top to bottom, is the image list of the permutation R_y sending x to
x*y.  All predicates are pure and the table is immutable after validation.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

from .perm import PermGroup, Permutation, raw_inv, raw_mul


class InvalidQuandleError(ValueError):
    """A table failed a quandle axiom.

    ``axiom`` is one of ``"shape"``, ``"idempotence"``, ``"column-bijective"``,
    ``"right-distributivity"``; ``witness`` names the offending cell(s).
    """

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class NotConnectedError(ValueError):
    """An operation requiring a connected quandle was given a disconnected one."""


class FormatError(ValueError):
    """A text file does not match its expected format; carries a line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Quandle:
    """A validated quandle Cayley table."""

    __slots__ = ("_n", "_rows", "_cols")

    def __init__(self, table: Iterable[Sequence[int]]):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise InvalidQuandleError(
                "shape", (), "table must be a nonempty square matrix")
        for x, row in enumerate(rows, start=1):
            for v in row:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise InvalidQuandleError(
                        "shape", (x,), f"row {x} has an entry outside 1..{n}")
        for x in range(1, n + 1):
            if rows[x - 1][x - 1] != x:
                raise InvalidQuandleError(
                    "idempotence", (x,), f"{x}*{x} = {rows[x-1][x-1]} != {x}")
        cols = []
        for y in range(1, n + 1):
            col = (0,) + tuple(rows[x - 1][y - 1] for x in range(1, n + 1))
            if len(set(col)) != n + 1:
                raise InvalidQuandleError(
                    "column-bijective", (y,),
                    f"column {y} is not a permutation of 1..{n}")
            cols.append(col)
        # Closure form of right distributivity: R_(y*x) == R_x^-1 R_y R_x.
        for x in range(1, n + 1):
            cx = cols[x - 1]
            cx_inv = raw_inv(cx)
            for y in range(1, n + 1):
                expected = raw_mul(raw_mul(cx_inv, cols[y - 1]), cx)
                actual = cols[cx[y] - 1]
                if expected != actual:
                    z = next(cx_inv[w] for w in range(1, n + 1)
                             if actual[w] != expected[w])
                    raise InvalidQuandleError(
                        "right-distributivity", (x, y, z),
                        f"({z}*{x})*({y}*{x}) != ({z}*{y})*{x}")
        self._n = n
        self._rows = rows
        self._cols = tuple(cols)

    @property
    def n(self) -> int:
        return self._n

    @property
    def table(self) -> tuple:
        return self._rows

    def op(self, x: int, y: int) -> int:
        return self._rows[x - 1][y - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Quandle) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"<Quandle n={self._n}>"

    # -- translations and structural groups --------------------------------

    def right_translation(self, y: int) -> Permutation:
        """Column y as a permutation: the map x -> x*y."""
        if not 1 <= y <= self._n:
            raise ValueError(f"index {y} out of range 1..{self._n}")
        return Permutation(self._cols[y - 1][1:])

    def left_translation_map(self, x: int) -> tuple:
        """Row x as a plain (not necessarily bijective) map y -> x*y."""
        if not 1 <= x <= self._n:
            raise ValueError(f"index {x} out of range 1..{self._n}")
        return self._rows[x - 1]

    def rmlt(self) -> PermGroup:
        """Right multiplication group, generated by all columns."""
        return PermGroup([self.right_translation(y)
                          for y in range(1, self._n + 1)])

    def dis(self) -> PermGroup:
        """Displacement group, generated by the R_1^-1 R_b.

        This generating set suffices because every R_a^-1 R_b equals
        (R_1^-1 R_a)^-1 (R_1^-1 R_b).
        """
        r1_inv = self.right_translation(1).inverse()
        gens = [r1_inv * self.right_translation(b)
                for b in range(1, self._n + 1)]
        return PermGroup(gens)

    def orbits(self) -> list:
        return self.rmlt().orbits()

    def is_connected(self) -> bool:
        return self.rmlt().is_transitive()

    # -- predicates ---------------------------------------------------------

    def is_latin(self) -> bool:
        """True if every row is a permutation (left translations bijective)."""
        n = self._n
        return all(len(set(row)) == n for row in self._rows)

    def is_medial(self) -> bool:
        """Direct scan of the identity (x*y)*(u*v) == (x*u)*(y*v).

        Checked in the equivalent column form R_y R_(u*v) == R_u R_(y*v),
        one permutation comparison per triple (y, u, v).
        """
        cols = self._cols
        rows = self._rows
        for y in range(1, self._n + 1):
            cy = cols[y - 1]
            for u in range(1, self._n + 1):
                cu = cols[u - 1]
                for v in range(1, self._n + 1):
                    left = raw_mul(cy, cols[rows[u - 1][v - 1] - 1])
                    right = raw_mul(cu, cols[rows[y - 1][v - 1] - 1])
                    if left != right:
                        return False
        return True

    def translation_class_sizes(self) -> tuple:
        """Sizes of the classes of a ~ b iff R_a = R_b, sorted ascending."""
        groups: dict = {}
        for y in range(1, self._n + 1):
            groups.setdefault(self._cols[y - 1], []).append(y)
        return tuple(sorted(len(v) for v in groups.values()))

    # -- isomorphism --------------------------------------------------------

    def invariant_vector(self) -> tuple:
        """Per-point invariants used to prune isomorphism search.

        For each point x: (cycle type of R_x, size of the orbit containing x,
        number of y with x*y = x).  Any isomorphism must map a point to one
        with an identical triple.
        """
        orbit_size = {}
        for orb in self.orbits():
            for pt in orb:
                orbit_size[pt] = len(orb)
        out = []
        for x in range(1, self._n + 1):
            fixed = sum(1 for y in range(1, self._n + 1)
                        if self._rows[x - 1][y - 1] == x)
            out.append((self.right_translation(x).cycle_type(),
                        orbit_size[x], fixed))
        return tuple(out)


def validate(table: Iterable[Sequence[int]]) -> Quandle:
    """Validate a Cayley table, raising InvalidQuandleError on the first
    violated axiom with a witness."""
    return Quandle(table)


def _is_table_hom(t1: tuple, t2: tuple, image: list) -> bool:
    """Full check that the completed point map is a homomorphism."""
    n = len(t1)
    for x in range(1, n + 1):
        row1 = t1[x - 1]
        row2 = t2[image[x] - 1]
        for y in range(1, n + 1):
            if image[row1[y - 1]] != row2[image[y] - 1]:
                return False
    return True


def _search_isomorphisms(q1: Quandle, q2: Quandle, seed: dict,
                         find_all: bool) -> list:
    """Backtracking point-map search shared by the isomorphism operations.

    ``seed`` pre-assigns images.  Candidate images must carry the same
    invariant triple; partial assignments are pruned by product consistency
    on both argument orders, and every completed map is verified against the
    full tables before it counts.
    """
    n = q1.n
    inv1, inv2 = q1.invariant_vector(), q2.invariant_vector()
    if sorted(inv1) != sorted(inv2):
        return []
    candidates = {x: [y for y in range(1, n + 1) if inv2[y - 1] == inv1[x - 1]]
                  for x in range(1, n + 1)}
    image = [0] * (n + 1)
    used = [False] * (n + 1)
    for x, y in seed.items():
        if inv1[x - 1] != inv2[y - 1] or used[y]:
            return []
        image[x] = y
        used[y] = True
    free = [x for x in range(1, n + 1) if x not in seed]
    # assign rarest points first
    free.sort(key=lambda x: (len(candidates[x]), x))
    order = list(seed) + free
    t1, t2 = q1.table, q2.table
    found: list = []

    def extend(k: int) -> bool:
        if k == n:
            if _is_table_hom(t1, t2, image):
                found.append(Permutation(image[1:]))
                return not find_all
            return False
        x = order[k]
        for y in candidates[x]:
            if used[y]:
                continue
            ok = True
            for a in order[:k]:
                fa = image[a]
                for (u, v, fu, fv) in ((x, a, y, fa), (a, x, fa, y)):
                    fw = image[t1[u - 1][v - 1]]
                    if fw != 0 and fw != t2[fu - 1][fv - 1]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                image[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                used[y] = False
                image[x] = 0
        return False

    extend(len(seed))
    return found


def are_isomorphic(q1: Quandle, q2: Quandle) -> Optional[Permutation]:
    """Search for a bijection f with f(x*y) = f(x)*f(y); None if there is none.

    Backtracking over point images, pruned by the per-point invariant
    triples; a found witness is verified against both full tables.
    """
    if q1.n != q2.n:
        return None
    found = _search_isomorphisms(q1, q2, {}, find_all=False)
    return found[0] if found else None


def automorphism_count(q: Quandle) -> int:
    """|Aut Q| for connected Q: n times the number of automorphisms fixing 1.

    The factor n uses transitivity of Aut on connected quandles, so a
    disconnected input is rejected.
    """
    if not q.is_connected():
        raise NotConnectedError(
            "automorphism_count requires a connected quandle")
    fixing_one = _search_isomorphisms(q, q, {1: 1}, find_all=True)
    return q.n * len(fixing_one)


def relabel(q: Quandle, f: Permutation) -> Quandle:
    """The isomorphic copy of q under the point relabeling f."""
    n = q.n
    if f.degree != n:
        raise ValueError("relabeling degree must match the quandle order")
    finv = f.inverse()
    t = q.table
    new_rows = [[0] * n for _ in range(n)]
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            new_rows[f(x) - 1][f(y) - 1] = f(t[x - 1][y - 1])
    return Quandle(new_rows)


def trivial_quandle() -> Quandle:
    return Quandle([[1]])


def projection_quandle(n: int) -> Quandle:
    """x*y = x for all y; disconnected for n > 1."""
    return Quandle([[x] * n for x in range(1, n + 1)])


def quandle_to_text(q: Quandle) -> str:
    """Canonical text form: header line, then one row per line."""
    lines = [f"quandle {q.n}"]
    lines.extend(" ".join(map(str, row)) for row in q.table)
    return "\n".join(lines) + "\n"


def quandle_from_text(text: str) -> Quandle:
    """Parse and validate the text form, reporting the offending line."""
    lines = text.split("\n")
    if not lines or not lines[0].startswith("quandle "):
        raise FormatError("expected header 'quandle <n>'", 1)
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise FormatError("expected header 'quandle <n>'", 1) from None
    if n < 1:
        raise FormatError("order must be positive", 1)
    if len(lines) < n + 1:
        raise FormatError(f"expected {n} table rows", len(lines))
    rows = []
    for i in range(1, n + 1):
        try:
            row = [int(tok) for tok in lines[i].split()]
        except ValueError:
            raise FormatError("table rows must be integers", i + 1) from None
        if len(row) != n:
            raise FormatError(f"expected {n} entries, got {len(row)}", i + 1)
        rows.append(row)
    for extra in range(n + 1, len(lines)):
        if lines[extra].strip():
            raise FormatError("unexpected trailing content", extra + 1)
    return Quandle(rows)


def write_quandle_file(q: Quandle, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(quandle_to_text(q))


def read_quandle_file(path) -> Quandle:
    with open(path, "r", encoding="ascii") as fh:
        return quandle_from_text(fh.read())
