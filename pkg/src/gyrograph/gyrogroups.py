"""Finite gyrogroups presented by Cayley tables.

A gyrogroup is a magma with a left identity, left inverses, and a
gyroassociative law mediated by the gyrations gyr[a,b], which are
automorphisms satisfying the left loop property gyr[a+b, b] = gyr[a, b].
Groups are exactly the gyrogroups whose gyrations are all trivial.

Everything here works on tables with elements canonically indexed
0..N-1; loaders re-index externally labeled tables and keep the original
labels for display.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

# Names of the Cayley tables shipped with the package.
BUNDLED_TABLES = ("k1", "n1", "g8", "m1", "gn3")

_DATA_DIR_ENV = "GYROGRAPH_DATA_DIR"


@dataclass(frozen=True)
class Permutation:
    """A bijection on 0..size-1, stored as an image tuple."""

    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.map) != list(range(len(self.map))):
            raise ValueError("permutation image is not a bijection on 0..N-1")

    @property
    def size(self) -> int:
        return len(self.map)

    def __call__(self, i: int) -> int:
        return self.map[i]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.map))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self*other)(i) = self(other(i))."""
        return Permutation(tuple(self.map[other.map[i]] for i in range(self.size)))

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(size)))


@dataclass(frozen=True)
class GyroGroup:
    """A finite magma (table[i][j] = i + j) with a left identity row.

    Construction checks only cheap structural facts: the table is square,
    entries are in range, and a left identity exists.  The gyrogroup
    axioms proper are checked by :func:`verify_axioms`, which reports
    failures instead of raising so that defective tables can be diagnosed.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.order
        if n <= 0 or len(self.table) != n:
            raise ValueError("table size does not match order")
        for row in self.table:
            if len(row) != n:
                raise ValueError("table is not square")
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"table entry {v} out of range 0..{n - 1}")
        e = self.identity
        if not 0 <= e < n or any(self.table[e][a] != a for a in range(n)):
            raise ValueError(f"row {e} is not a left identity row")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        elif len(self.labels) != n:
            raise ValueError("label count does not match order")

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.order)

    def left_inverse(self, a: int) -> int:
        """The first y with y + a = e; raises if none exists."""
        col = [self.table[y][a] for y in range(self.order)]
        try:
            return col.index(self.identity)
        except ValueError:
            raise ValueError(f"element {a} has no left inverse") from None

    def table_array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the exhaustive axiom check for one Cayley table."""

    left_identity_ok: bool
    left_inverse_ok: bool
    gyroassociativity_ok: bool
    left_loop_ok: bool
    gyr_is_automorphism_ok: bool
    gyrocommutative: bool
    is_group: bool
    counterexamples: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def is_gyrogroup(self) -> bool:
        return (
            self.left_identity_ok
            and self.left_inverse_ok
            and self.gyroassociativity_ok
            and self.left_loop_ok
            and self.gyr_is_automorphism_ok
        )

    def to_dict(self) -> dict:
        return {
            "left_identity_ok": self.left_identity_ok,
            "left_inverse_ok": self.left_inverse_ok,
            "gyroassociativity_ok": self.gyroassociativity_ok,
            "left_loop_ok": self.left_loop_ok,
            "gyr_is_automorphism_ok": self.gyr_is_automorphism_ok,
            "gyrocommutative": self.gyrocommutative,
            "is_group": self.is_group,
            "is_gyrogroup": self.is_gyrogroup,
            "counterexamples": [[axiom, list(w)] for axiom, w in self.counterexamples],
        }


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def build_gn(n: int) -> GyroGroup:
    """The order-2^n gyrogroup family defined by a four-case modular formula.

    Elements split into P = {0..2^(n-1)-1}, a cyclic group under addition
    mod m = 2^(n-1), and H = {2^(n-1)..2^n-1}.  With t = i+j,
    s = i + (m/2-1)j and k = (m/2+1)i + (m/2-1)j, all mod m:

        i + j = t       for (i, j) in P x P
        i + j = t + m   for (i, j) in P x H
        i + j = s + m   for (i, j) in H x P
        i + j = k       for (i, j) in H x H

    Defined only for n >= 3 (m/2 must be a positive even split).
    """
    if n < 3:
        raise ValueError(f"the G(n) family is defined for n >= 3, got n={n}")
    m = 2 ** (n - 1)
    half = m // 2
    order = 2**n
    rows = []
    for i in range(order):
        row = []
        for j in range(order):
            if i < m and j < m:
                row.append((i + j) % m)
            elif i < m:
                row.append((i + j) % m + m)
            elif j < m:
                row.append((i + (half - 1) * j) % m + m)
            else:
                row.append(((half + 1) * i + (half - 1) * j) % m)
        rows.append(tuple(row))
    return GyroGroup(order=order, table=tuple(rows), identity=0)


def load_table(
    rows: list[list[int]],
    identity_hint: int | None = None,
    labels: tuple[str, ...] = (),
) -> GyroGroup:
    """Build a GyroGroup from a square grid with entries in 0..N-1.

    Without a hint the identity is located by scanning for a row equal to
    (0, 1, ..., N-1); the scan takes the lowest such row.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("grid is not square")
    table = tuple(tuple(int(v) for v in r) for r in rows)
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"table entry {v} out of range 0..{n - 1}")
    ident = tuple(range(n))
    if identity_hint is None:
        e = next((i for i in range(n) if table[i] == ident), -1)
        if e < 0:
            raise ValueError("no left identity row found")
    else:
        e = identity_hint
        if not 0 <= e < n or table[e] != ident:
            raise ValueError(f"row {e} is not a left identity row")
    return GyroGroup(order=n, table=table, identity=e, labels=labels)


def cyclic_group(n: int) -> GyroGroup:
    """Cayley table of the cyclic group Z_n (addition mod n)."""
    if n < 1:
        raise ValueError("order must be positive")
    rows = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return GyroGroup(order=n, table=rows, identity=0)


def relabel(g: GyroGroup, perm: Permutation) -> GyroGroup:
    """Transport the table along a bijection: new[p(a)][p(b)] = p(a+b)."""
    if perm.size != g.order:
        raise ValueError("permutation size must equal the group order")
    p = perm.map
    rows = [[0] * g.order for _ in range(g.order)]
    for a in range(g.order):
        for b in range(g.order):
            rows[p[a]][p[b]] = p[g.table[a][b]]
    labels = [""] * g.order
    for a in range(g.order):
        labels[p[a]] = g.labels[a]
    return GyroGroup(
        order=g.order,
        table=tuple(tuple(r) for r in rows),
        identity=p[g.identity],
        labels=tuple(labels),
    )


# ---------------------------------------------------------------------------
# Gyrations and axioms
# ---------------------------------------------------------------------------


def gyration(g: GyroGroup, a: int, b: int) -> Permutation:
    """The gyration gyr[a,b]: c -> -(a+b) + (a+(b+c)).

    Here -(x) is the left inverse of x.  When the table is a gyrogroup
    this is the unique map making the gyroassociative law hold.
    """
    _check_element(g, a)
    _check_element(g, b)
    t = g.table
    ab = t[a][b]
    inv_ab = g.left_inverse(ab)  # raises if the table lacks the inverse
    image = tuple(t[inv_ab][t[a][t[b][c]]] for c in range(g.order))
    if sorted(image) != list(range(g.order)):
        raise ValueError(f"gyration map for ({a},{b}) is not a bijection")
    return Permutation(image)


def gyration_table(g: GyroGroup) -> list[list[Permutation]]:
    """All gyrations gyr[a,b], indexed [a][b]."""
    return [[gyration(g, a, b) for b in g.elements()] for a in g.elements()]


def gyration_symbol_grid(g: GyroGroup) -> tuple[list[str], dict[str, Permutation]]:
    """Name the distinct gyrations and lay them out as an NxN symbol grid.

    The identity permutation is named "I"; further distinct permutations
    are named "X1", "X2", ... in first-appearance order (row major).
    Returns (rows of concatenated symbols, symbol -> permutation map).
    """
    names: dict[Permutation, str] = {}
    legend: dict[str, Permutation] = {}
    rows = []
    counter = 0
    for a in g.elements():
        syms = []
        for b in g.elements():
            p = gyration(g, a, b)
            if p not in names:
                if p.is_identity():
                    names[p] = "I"
                else:
                    counter += 1
                    names[p] = f"X{counter}"
                legend[names[p]] = p
            syms.append(names[p])
        rows.append("".join(syms))
    return rows, legend


def verify_axioms(g: GyroGroup, max_counterexamples: int = 3) -> AxiomReport:
    """Exhaustively check the gyrogroup axioms over all element triples.

    Checks, in order: the left identity row, existence of left inverses,
    gyroassociativity with the gyrations computed from the table, the left
    loop property, that every gyration is an automorphism of the table,
    gyro-commutativity, and plain associativity (is_group).  Failures are
    collected with witnesses, never raised.
    """
    n = g.order
    t = g.table
    counterexamples: list[tuple[str, tuple[int, ...]]] = []

    def note(axiom: str, witness: tuple[int, ...], flag: list[bool]) -> None:
        flag[0] = False
        if sum(1 for ax, _ in counterexamples if ax == axiom) < max_counterexamples:
            counterexamples.append((axiom, witness))

    # Left identity: guaranteed by construction, but re-checked so the
    # report stands on its own.
    li = [True]
    for a in range(n):
        if t[g.identity][a] != a:
            note("left_identity", (g.identity, a), li)

    # Left inverses.
    inv = [True]
    left_inv: list[int | None] = [None] * n
    for a in range(n):
        for y in range(n):
            if t[y][a] == g.identity:
                left_inv[a] = y
                break
        if left_inv[a] is None:
            note("left_inverse", (a,), inv)

    # Candidate gyrations from the left-cancellation formula (undefined
    # only when the needed left inverse is missing).
    gyr: list[list[tuple[int, ...] | None]] = [[None] * n for _ in range(n)]
    for a in range(n):
        ra = t[a]
        for b in range(n):
            iab = left_inv[ra[b]]
            if iab is not None:
                gyr[a][b] = tuple(t[iab][ra[t[b][c]]] for c in range(n))

    # Gyroassociative law, pointwise over all triples.
    gassoc = [True]
    for a in range(n):
        ra = t[a]
        for b in range(n):
            gab = gyr[a][b]
            if gab is None:
                note("gyroassociativity", (a, b), gassoc)
                continue
            rb = t[b]
            rab = t[ra[b]]
            for c in range(n):
                if ra[rb[c]] != rab[gab[c]]:
                    note("gyroassociativity", (a, b, c), gassoc)
                    break

    loop = [True]
    for a in range(n):
        for b in range(n):
            if gyr[a][b] is None or gyr[t[a][b]][b] is None:
                note("left_loop", (a, b), loop)
            elif gyr[t[a][b]][b] != gyr[a][b]:
                note("left_loop", (a, b), loop)

    # Each gyration must be a bijective automorphism of the table,
    # vectorized as perm[t[x][y]] == t[perm[x]][perm[y]].
    auto = [True]
    ta = g.table_array()
    for a in range(n):
        for b in range(n):
            gab = gyr[a][b]
            if gab is None or sorted(gab) != list(range(n)):
                note("gyr_is_automorphism", (a, b), auto)
                continue
            p = np.array(gab, dtype=np.int64)
            lhs = p[ta]
            rhs = ta[np.ix_(p, p)]
            if not np.array_equal(lhs, rhs):
                x, y = np.argwhere(lhs != rhs)[0]
                note("gyr_is_automorphism", (a, b, int(x), int(y)), auto)

    gcomm = [True]
    for a in range(n):
        for b in range(n):
            gab = gyr[a][b]
            if gab is None or t[a][b] != gab[t[b][a]]:
                note("gyrocommutative", (a, b), gcomm)
                break
        if not gcomm[0]:
            break

    # Associativity via numpy: t[t[a][b]][c] == t[a][t[b][c]].
    assoc_lhs = ta[ta]  # [a][b][c] = t[t[a][b]][c]
    assoc_rhs = ta[:, ta]  # [a][b][c] = t[a][t[b][c]]
    group = bool(np.array_equal(assoc_lhs, assoc_rhs))

    return AxiomReport(
        left_identity_ok=li[0],
        left_inverse_ok=inv[0],
        gyroassociativity_ok=gassoc[0],
        left_loop_ok=loop[0],
        gyr_is_automorphism_ok=auto[0],
        gyrocommutative=gcomm[0],
        is_group=group,
        counterexamples=tuple(counterexamples),
    )


# ---------------------------------------------------------------------------
# Powers
# ---------------------------------------------------------------------------


def power(g: GyroGroup, a: int, m: int, right: bool = False) -> int:
    """The m-th power of a, m >= 1.

    Left iteration a^(m+1) = a + a^m by default; right=True uses
    a^(m+1) = a^m + a instead.
    """
    _check_element(g, a)
    if m < 1:
        raise ValueError("power exponent must be >= 1")
    acc = a
    for _ in range(m - 1):
        acc = g.table[acc][a] if right else g.table[a][acc]
    return acc


def power_closure(g: GyroGroup, a: int, right: bool = False) -> frozenset[int]:
    """{a^m : m >= 1}, computed by iterating until the sequence cycles."""
    _check_element(g, a)
    seen = {a}
    acc = a
    for _ in range(g.order):
        acc = g.table[acc][a] if right else g.table[a][acc]
        if acc in seen:
            break
        seen.add(acc)
    return frozenset(seen)


def power_sequence(g: GyroGroup, a: int, length: int, right: bool = False) -> list[int]:
    """[a^1, a^2, ..., a^length]."""
    out = [a]
    acc = a
    for _ in range(length - 1):
        acc = g.table[acc][a] if right else g.table[a][acc]
        out.append(acc)
    return out


def _check_element(g: GyroGroup, a: int) -> None:
    if not 0 <= a < g.order:
        raise ValueError(f"element {a} out of range 0..{g.order - 1}")


# ---------------------------------------------------------------------------
# Cayley table I/O
# ---------------------------------------------------------------------------


def parse_cayley_csv(text: str) -> GyroGroup:
    """Parse N rows of N comma-separated integers."""
    rows = [
        [int(cell) for cell in record]
        for record in csv.reader(io.StringIO(text))
        if record
    ]
    return _from_grid(rows)


def parse_cayley_json(text: str) -> GyroGroup:
    """Parse {"order": N, "table": [[...], ...]}."""
    data = json.loads(text)
    rows = [[int(v) for v in row] for row in data["table"]]
    if "order" in data and int(data["order"]) != len(rows):
        raise ValueError("declared order does not match table size")
    return _from_grid(rows)


def _from_grid(rows: list[list[int]]) -> GyroGroup:
    """Re-index arbitrary integer labels to 0..N-1, keeping display labels."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("grid is not square")
    values = sorted({v for row in rows for v in row})
    if values == list(range(n)):
        return load_table(rows)
    if len(values) != n:
        raise ValueError(
            f"table uses {len(values)} distinct values but has order {n}"
        )
    index = {v: i for i, v in enumerate(values)}
    relabeled = [[index[v] for v in row] for row in rows]
    return load_table(relabeled, labels=tuple(str(v) for v in values))


def read_cayley_file(path: str | os.PathLike) -> GyroGroup:
    """Load a Cayley table from a .csv or .json file."""
    path = os.fspath(path)
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return parse_cayley_json(text)
    return parse_cayley_csv(text)


def to_cayley_csv(g: GyroGroup) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in g.table) + "\n"


def to_cayley_json(g: GyroGroup) -> str:
    return json.dumps(
        {"order": g.order, "table": [list(r) for r in g.table]}, sort_keys=True
    )


def bundled_table_text(name: str, fmt: str = "csv") -> str:
    """Raw text of a bundled Cayley table; honors GYROGRAPH_DATA_DIR."""
    if name not in BUNDLED_TABLES:
        raise ValueError(f"unknown bundled table {name!r}; have {BUNDLED_TABLES}")
    if fmt not in ("csv", "json"):
        raise ValueError("format must be 'csv' or 'json'")
    override = os.environ.get(_DATA_DIR_ENV)
    if override:
        with open(os.path.join(override, f"{name}.{fmt}"), encoding="utf-8") as fh:
            return fh.read()
    return (resources.files("gyrograph.data") / f"{name}.{fmt}").read_text("utf-8")


def bundled_gyrogroup(name: str, fmt: str = "csv") -> GyroGroup:
    """One of the bundled order-8 gyrogroups (k1, n1, g8, m1, gn3)."""
    text = bundled_table_text(name, fmt)
    return parse_cayley_json(text) if fmt == "json" else parse_cayley_csv(text)
