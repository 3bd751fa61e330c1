"""Finite shelves, racks, spindles and quandles, and their X-sets."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import AxiomFailure, InputError, UnsupportedOperation

LOGGER = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


def _as_table(table: Sequence[Sequence[int]], rows: int, cols: int, name: str) -> Table:
    """Freeze a nested sequence into a tuple table after range checks.

    Args:
        table: Row-major table.
        rows: Expected number of rows.
        cols: Expected number of columns.
        name: Used in error messages.

    Returns:
        Tuple of row tuples.

    Raises:
        InputError: If the shape is wrong or an entry is out of range.
    """
    if len(table) != rows:
        raise InputError(f"{name} must have {rows} rows, got {len(table)}")
    frozen = []
    for r, row in enumerate(table):
        if len(row) != cols:
            raise InputError(f"{name} row {r} must have {cols} entries, got {len(row)}")
        for c, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InputError(f"{name} cell ({r},{c}) is not an integer: {value!r}")
        frozen.append(tuple(int(v) for v in row))
    return tuple(frozen)


def _check_range(table: Table, bound: int, name: str) -> None:
    for r, row in enumerate(table):
        for c, value in enumerate(row):
            if not 0 <= value < bound:
                raise InputError(
                    f"{name} cell ({r},{c}) = {value} is outside 0..{bound - 1}"
                )


@dataclass(frozen=True)
class FiniteShelf:
    """A binary operation x◁y = table[x][y] on {0..n-1} with its classification.

    Build instances through :func:`classify` or the builtin families; the flags
    are then set by exhaustive checks.
    """

    size: int
    table: Table
    is_shelf: bool
    is_rack: bool
    is_spindle: bool
    is_quandle: bool
    witness: Optional[Tuple[int, int, int]] = None
    _array: np.ndarray = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._array is None:
            object.__setattr__(self, "_array", np.array(self.table, dtype=np.int64).reshape(self.size, self.size))

    @property
    def array(self) -> np.ndarray:
        """The table as an ``n x n`` integer array (read-only copy)."""
        return self._array.copy()

    def op(self, x: int, y: int) -> int:
        """Return x◁y."""
        return self.table[x][y]

    def act(self, x: int, word: Sequence[int]) -> int:
        """Return x^{y₁⋯y_k} = (⋯(x◁y₁)◁⋯)◁y_k."""
        for y in word:
            x = self.table[x][y]
        return x

    def right_translation(self, y: int) -> Tuple[int, ...]:
        """Return the column map x ↦ x◁y as a tuple."""
        return tuple(self.table[x][y] for x in range(self.size))

    def elements(self) -> range:
        return range(self.size)

    def require_shelf(self) -> None:
        if not self.is_shelf:
            raise AxiomFailure(
                f"table is not self-distributive; first witness {self.witness}",
                witness=self.witness,
            )

    def require_rack(self, operation: str) -> None:
        if not self.is_rack:
            raise UnsupportedOperation(f"{operation} requires a rack")

    def require_spindle(self, operation: str) -> None:
        if not self.is_spindle:
            raise UnsupportedOperation(f"{operation} requires a spindle (x◁x = x)")

    def to_json(self) -> Dict[str, object]:
        return {"size": self.size, "table": [list(row) for row in self.table]}


def _first_sd_witness(arr: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First (x,y,z) in lexicographic order with (x◁y)◁z ≠ (x◁z)◁(y◁z)."""
    n = arr.shape[0]
    x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    lhs = arr[arr[x, y], z]
    rhs = arr[arr[x, z], arr[y, z]]
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    return tuple(int(v) for v in bad[0])


def classify(table: Union[Sequence[Sequence[int]], FiniteShelf]) -> FiniteShelf:
    """Classify a square operation table by exhaustive axiom checks.

    Args:
        table: Row-major ``n x n`` table with entry (x, y) = x◁y, or a
            FiniteShelf whose table is classified again.

    Returns:
        FiniteShelf with all four flags set. When self-distributivity fails,
        ``is_shelf`` is False and ``witness`` holds the lexicographically first
        failing triple (x, y, z).

    Raises:
        InputError: On a malformed table or an out-of-range entry.
    """
    if isinstance(table, FiniteShelf):
        table = table.table
    n = len(table)
    if n == 0:
        raise InputError("a shelf needs at least one element")
    frozen = _as_table(table, n, n, "table")
    _check_range(frozen, n, "table")

    arr = np.array(frozen, dtype=np.int64)
    witness = _first_sd_witness(arr)
    is_shelf = witness is None
    columns_bijective = all(len(set(arr[:, y].tolist())) == n for y in range(n))
    idempotent = bool(np.all(arr[np.arange(n), np.arange(n)] == np.arange(n)))

    is_rack = is_shelf and columns_bijective
    is_spindle = is_shelf and idempotent
    LOGGER.debug(
        "classified table of size %d: shelf=%s rack=%s spindle=%s", n, is_shelf, is_rack, is_spindle
    )
    return FiniteShelf(
        size=n,
        table=frozen,
        is_shelf=is_shelf,
        is_rack=is_rack,
        is_spindle=is_spindle,
        is_quandle=is_rack and is_spindle,
        witness=witness,
        _array=arr,
    )


# ========== Builtin Families ==========


def dihedral(n: int) -> FiniteShelf:
    """Dihedral quandle x◁y = (2y − x) mod n."""
    if n < 1:
        raise InputError(f"dihedral size must be positive, got {n}")
    return classify([[(2 * y - x) % n for y in range(n)] for x in range(n)])


def trivial(n: int) -> FiniteShelf:
    """Trivial quandle x◁y = x."""
    if n < 1:
        raise InputError(f"trivial size must be positive, got {n}")
    return classify([[x for _ in range(n)] for x in range(n)])


def permutation(perm: Sequence[int]) -> FiniteShelf:
    """Permutation rack x◁y = perm(x)."""
    n = len(perm)
    if n == 0 or sorted(perm) != list(range(n)):
        raise InputError(f"not a permutation of 0..{n - 1}: {list(perm)}")
    return classify([[perm[x] for _ in range(n)] for x in range(n)])


def _validate_group(table: Table) -> Tuple[int, List[int]]:
    """Check the group axioms; return the identity and the inverse map."""
    n = len(table)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise InputError(f"group table violates associativity at ({a},{b},{c})")
    identity = next(
        (e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))),
        None,
    )
    if identity is None:
        raise InputError("group table violates the identity axiom: no two-sided identity")
    inverse = []
    for a in range(n):
        inv = next((b for b in range(n) if table[a][b] == identity and table[b][a] == identity), None)
        if inv is None:
            raise InputError(f"group table violates the inverse axiom: {a} has no inverse")
        inverse.append(inv)
    return identity, inverse


def conjugation(group_table: Sequence[Sequence[int]]) -> FiniteShelf:
    """Conjugation quandle x◁y = y⁻¹xy of a finite group given by its table."""
    n = len(group_table)
    if n == 0:
        raise InputError("group table is empty")
    frozen = _as_table(group_table, n, n, "group table")
    _check_range(frozen, n, "group table")
    _, inverse = _validate_group(frozen)
    return classify([[frozen[frozen[inverse[y]][x]][y] for y in range(n)] for x in range(n)])


Family = Literal["dihedral", "trivial", "permutation", "conjugation"]


def builtin(family: Family, argument: Union[int, Sequence[int], Sequence[Sequence[int]]]) -> FiniteShelf:
    """Build a shelf from a named family.

    Args:
        family: One of "dihedral", "trivial", "permutation", "conjugation".
        argument: Size for dihedral/trivial, a permutation list, or a group table.

    Returns:
        The classified shelf.
    """
    if family == "dihedral":
        return dihedral(int(argument))
    elif family == "trivial":
        return trivial(int(argument))
    elif family == "permutation":
        return permutation(list(argument))
    elif family == "conjugation":
        return conjugation(argument)
    else:
        raise InputError(f"Unknown shelf family: {family}")


# ========== Orbits and the Remarkable Map ==========


def orbits(shelf: FiniteShelf) -> List[List[int]]:
    """Orbits of the group generated by the right translations −◁y.

    Returns:
        Sorted list of sorted parts.

    Raises:
        UnsupportedOperation: If the shelf is not a rack.
    """
    shelf.require_rack("orbits")
    parent = list(range(shelf.size))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in shelf.elements():
        for y in shelf.elements():
            rx, ry = find(x), find(shelf.op(x, y))
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

    parts: Dict[int, List[int]] = {}
    for x in shelf.elements():
        parts.setdefault(find(x), []).append(x)
    return sorted(parts.values())


def remarkable_map(shelf: FiniteShelf, word: Sequence[int]) -> Tuple[int, ...]:
    """(x₁,…,xₙ) ↦ (x₁^{x₂⋯xₙ}, x₂^{x₃⋯xₙ}, …, xₙ)."""
    shelf.require_shelf()
    word = tuple(word)
    return tuple(shelf.act(x, word[i + 1:]) for i, x in enumerate(word))


# ========== X-sets and Coefficients ==========


@dataclass(frozen=True)
class XSetAction:
    """A set {0..m-1} with a right action s◀y compatible with the shelf."""

    base: FiniteShelf
    size: int
    action: Table

    def act(self, s: int, y: int) -> int:
        return self.action[s][y]

    def to_json(self) -> Dict[str, object]:
        return {"size": self.size, "action": [list(row) for row in self.action]}


def validate_xset(shelf: FiniteShelf, action: Sequence[Sequence[int]]) -> XSetAction:
    """Check (s◀y)◀z = (s◀z)◀(y◁z) exhaustively.

    Raises:
        InputError: On malformed input or out-of-range entries.
        AxiomFailure: With the first failing (s, y, z).
    """
    m = len(action)
    if m == 0:
        raise InputError("an X-set needs at least one element")
    frozen = _as_table(action, m, shelf.size, "action")
    _check_range(frozen, m, "action")

    act = np.array(frozen, dtype=np.int64)
    s, y, z = np.meshgrid(np.arange(m), np.arange(shelf.size), np.arange(shelf.size), indexing="ij")
    lhs = act[act[s, y], z]
    rhs = act[act[s, z], shelf._array[y, z]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        witness = tuple(int(v) for v in bad[0])
        raise AxiomFailure(f"X-set axiom fails at (s, y, z) = {witness}", witness=witness)
    return XSetAction(base=shelf, size=m, action=frozen)


CoefficientKind = Literal["trivial", "self", "xset"]


@dataclass(frozen=True)
class CoefficientSystem:
    """Coefficients for chains: every kind is carried by an X-set.

    The trivial kind is the one-point X-set, so that the basis of C_n is
    indexed by (0, tuple) and the action is the identity.
    """

    kind: CoefficientKind
    action: XSetAction
    modulus: Optional[int] = None

    @property
    def size(self) -> int:
        return self.action.size

    def act(self, s: int, y: int) -> int:
        return self.action.act(s, y)

    @classmethod
    def trivial(cls, shelf: FiniteShelf, modulus: Optional[int] = None) -> "CoefficientSystem":
        return cls("trivial", XSetAction(shelf, 1, ((0,) * shelf.size,)), modulus)

    @classmethod
    def self_action(cls, shelf: FiniteShelf, modulus: Optional[int] = None) -> "CoefficientSystem":
        return cls("self", XSetAction(shelf, shelf.size, shelf.table), modulus)

    @classmethod
    def from_xset(cls, action: XSetAction, modulus: Optional[int] = None) -> "CoefficientSystem":
        return cls("xset", action, modulus)

    def with_modulus(self, modulus: Optional[int]) -> "CoefficientSystem":
        return CoefficientSystem(self.kind, self.action, modulus)
