"""The Picard lattice of a ten-point blow-up of the plane.

Classes are integer vectors d*L + sum(m_i * E_i) with the pairing
<D, D'> = d*d' - sum(m_i * m_i'); the E_i coefficients are stored exactly as
the named classes are written (so the boundary sextic carries -2's and
E_i^2 = -1 is built into the pairing). ``verify_paper_table`` re-derives
every asserted intersection number and vector identity as exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SchemaError

N_POINTS = 10


@dataclass(frozen=True)
class DivClass:
    d: int
    m: tuple

    def __post_init__(self):
        if not isinstance(self.d, int):
            raise SchemaError("divclass", "the L-coefficient must be an integer")
        ms = tuple(self.m)
        if len(ms) != N_POINTS or not all(isinstance(x, int) for x in ms):
            raise SchemaError("divclass", f"need {N_POINTS} integer E-coefficients")
        object.__setattr__(self, "m", ms)

    def dot(self, other: "DivClass") -> int:
        return self.d * other.d - sum(a * b for a, b in zip(self.m, other.m))

    def __add__(self, other: "DivClass") -> "DivClass":
        return DivClass(self.d + other.d, tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        return DivClass(self.d - other.d, tuple(a - b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> "DivClass":
        return DivClass(-self.d, tuple(-a for a in self.m))

    def scale(self, k: int) -> "DivClass":
        return DivClass(k * self.d, tuple(k * a for a in self.m))

    def __repr__(self):
        return f"DivClass({self.d}; {', '.join(map(str, self.m))})"

    def to_json(self) -> dict:
        return {"d": self.d, "m": list(self.m)}

    @classmethod
    def from_json(cls, doc: dict) -> "DivClass":
        try:
            return cls(int(doc["d"]), tuple(int(x) for x in doc["m"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError("divclass", f"bad divisor-class document: {doc!r}") from exc


def intersect(a: DivClass, b: DivClass) -> int:
    return a.dot(b)


def _unit(i: int) -> tuple:
    return tuple(int(j == i) for j in range(N_POINTS))


def named_class(name: str, index: int | None = None) -> DivClass:
    """Named classes: L, K, C, H, E_i, Ecal_i, P_j (indices 1..10), and the
    effective (-2)-classes R_i (indices 1..3)."""
    if name == "L":
        return DivClass(1, (0,) * N_POINTS)
    if name == "K":
        return DivClass(-3, (1,) * N_POINTS)
    if name == "C":
        return DivClass(6, (-2,) * N_POINTS)
    if name == "H":
        # boundary sextic plus the first three exceptional curves
        return named_class("C") + named_class("E", 1) + named_class("E", 2) + named_class("E", 3)
    if name in ("E", "Ecal", "P", "R"):
        if index is None or not 1 <= index <= N_POINTS:
            raise SchemaError("class-index", f"{name} needs an index in 1..{N_POINTS}")
        i = index - 1
        if name == "E":
            return DivClass(0, _unit(i))
        if name == "Ecal":
            # cubic through the nine points other than index: E_i - K
            return DivClass(3, tuple(0 if j == i else -1 for j in range(N_POINTS)))
        if name == "P":
            # elliptic pencil of sextics nodal away from index: C + 2 E_i
            return DivClass(6, tuple(0 if j == i else -2 for j in range(N_POINTS)))
        if index > 3:
            raise SchemaError("class-index", "R is defined for indices 1..3")
        return DivClass(3, tuple(-2 if j == i else (0 if j < 3 else -1) for j in range(N_POINTS)))
    raise SchemaError("class-name", f"unknown divisor class {name!r}")


def arithmetic_genus(cls: DivClass) -> int:
    """Adjunction: p_a = 1 + (D^2 + D.K) / 2; the lattice parity makes the
    division exact for every integer class."""
    k = named_class("K")
    total = cls.dot(cls) + cls.dot(k)
    assert total % 2 == 0
    return 1 + total // 2


def is_minus_one(cls: DivClass) -> bool:
    return cls.dot(cls) == -1 and arithmetic_genus(cls) == 0


def is_minus_two(cls: DivClass) -> bool:
    return cls.dot(cls) == -2 and arithmetic_genus(cls) == 0


@dataclass(frozen=True)
class TableEntry:
    label: str
    lhs: str
    rhs: str
    ok: bool

    def to_json(self) -> dict:
        return {"label": self.label, "lhs": self.lhs, "rhs": self.rhs, "ok": self.ok}


@dataclass(frozen=True)
class TableReport:
    entries: tuple
    all_ok: bool

    def to_json(self) -> dict:
        return {"entries": [e.to_json() for e in self.entries], "all_ok": self.all_ok}

    def __str__(self):
        lines = [
            f"{'ok ' if e.ok else 'FAIL'}  {e.label}: {e.lhs} vs {e.rhs}" for e in self.entries
        ]
        lines.append(f"{'all identities hold' if self.all_ok else 'TABLE HAS FAILURES'}")
        return "\n".join(lines)


def verify_paper_table(override: dict | None = None) -> TableReport:
    """Check every asserted intersection number, genus, and vector identity.

    ``override`` may replace named classes (keys like "C", "E3", "Ecal1",
    "H", "P2", "R1") to exercise the checker itself.
    """
    override = override or {}

    def get(name: str, index: int | None = None) -> DivClass:
        key = name if index is None else f"{name}{index}"
        if key in override:
            return override[key]
        return named_class(name, index)

    entries = []

    def check_values(label, pairs):
        # pairs: iterable of (lhs_value, rhs_value)
        pairs = list(pairs)
        bad = [(l, r) for l, r in pairs if l != r]
        if bad:
            entries.append(TableEntry(label, str(bad[0][0]), str(bad[0][1]), False))
        else:
            shown = pairs[0]
            entries.append(TableEntry(label, str(shown[0]), str(shown[1]), True))

    def check_vectors(label, pairs):
        pairs = list(pairs)
        bad = [(l, r) for l, r in pairs if l != r]
        if bad:
            entries.append(TableEntry(label, repr(bad[0][0]), repr(bad[0][1]), False))
        else:
            entries.append(TableEntry(label, repr(pairs[0][0]), repr(pairs[0][1]), True))

    C, K, H = get("C"), get("K"), get("H")
    three = range(1, 4)
    ten = range(1, N_POINTS + 1)

    check_values("C.C == -4", [(C.dot(C), -4)])
    check_values("K.K == -1", [(K.dot(K), -1)])
    check_values("C == -2K (componentwise)", [(C == K.scale(-2), True)])
    check_values("H.H == 5", [(H.dot(H), 5)])
    check_values("H.C == 2", [(H.dot(C), 2)])
    check_values("H.E_i == 1 (i=1..3)", [(H.dot(get("E", i)), 1) for i in three])
    check_values("H.Ecal_i == 2 (i=1..3)", [(H.dot(get("Ecal", i)), 2) for i in three])
    check_values(
        "Ecal_i.Ecal_j == 1 - delta (i,j=1..10)",
        [
            (get("Ecal", i).dot(get("Ecal", j)), int(i != j))
            for i in ten
            for j in ten
        ],
    )
    check_values(
        "Ecal_i.E_j == 1 - delta (i,j=1..10)",
        [(get("Ecal", i).dot(get("E", j)), int(i != j)) for i in ten for j in ten],
    )
    check_values("p_a(sextic 6L) == 10", [(arithmetic_genus(DivClass(6, (0,) * N_POINTS)), 10)])
    check_values("P_j.P_j == 0 (j=1..3)", [(get("P", j).dot(get("P", j)), 0) for j in three])
    check_values("p_a(P_j) == 1 (j=1..3)", [(arithmetic_genus(get("P", j)), 1) for j in three])
    check_values(
        "P_j.E_i == 2 (i != j)",
        [(get("P", j).dot(get("E", i)), 2) for j in three for i in ten if i != j],
    )
    check_values("P_j.E_j == 0 (j=1..3)", [(get("P", j).dot(get("E", j)), 0) for j in three])
    check_values("R_i.R_i == -2 (i=1..3)", [(get("R", i).dot(get("R", i)), -2) for i in three])
    check_values("R_i.H == 2 (i=1..3)", [(get("R", i).dot(H), 2) for i in three])
    check_values("p_a(R_i) == 0 (i=1..3)", [(arithmetic_genus(get("R", i)), 0) for i in three])
    check_values("R_i is a (-2)-class", [(is_minus_two(get("R", i)), True) for i in three])
    check_values("E_i is a (-1)-class", [(is_minus_one(get("E", i)), True) for i in ten])

    check_vectors(
        "H == Ecal_i + Ecal_j + E_k (perms of 1,2,3)",
        [
            (H, get("Ecal", i) + get("Ecal", j) + get("E", k))
            for (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2), (1, 3, 2), (2, 1, 3), (3, 2, 1))
        ],
    )
    check_vectors("H == -2K + E1 + E2 + E3", [(H, K.scale(-2) + get("E", 1) + get("E", 2) + get("E", 3))])
    check_vectors("Ecal_j == E_j - K (j=1..10)", [(get("Ecal", j), get("E", j) - K) for j in ten])
    check_vectors("P_j == C + 2E_j (j=1..3)", [(get("P", j), C + get("E", j).scale(2)) for j in three])
    check_vectors("P_j == 2 Ecal_j (j=1..3)", [(get("P", j), get("Ecal", j).scale(2)) for j in three])
    check_vectors(
        "R_i == H - E_i - Ecal_i (i=1..3)",
        [(get("R", i), H - get("E", i) - get("Ecal", i)) for i in three],
    )
    check_vectors(
        "R_i == 3L - 2E_i - E4 - ... - E10",
        [
            (
                get("R", i),
                DivClass(3, tuple(-2 if j == i - 1 else (0 if j < 3 else -1) for j in range(N_POINTS))),
            )
            for i in three
        ],
    )

    return TableReport(tuple(entries), all(e.ok for e in entries))
