"""Sign-function quivers, string modules and their combinatorics.

Three families are supported, written in the text syntax accepted by
:func:`parse_quiver`:

* ``A:<signs>``    linear quiver with n vertices; the sign word has the
  n-1 interior signs, position 0 and n carry the neutral sign 0.
* ``At:<signs>``   cyclic quiver on n = a+b vertices; the sign word has
  length n and is extended n-periodically to all integers.  ``+`` at
  position t means the edge t <- t+1, ``-`` means t -> t+1.
* ``Dcyc:<n>``     the fully oriented n-cycle (all signs ``+``) with the
  nilpotency cut-off: modules have length at most n-1.

A string module ``M(i, j)`` (i < j) lives on the interval (i, j] of the
universal cover; its dimension vector adds one basis vector for every
residue class met by the interval.  For the cyclic families string
modules are canonicalized so that 0 <= i < n, and module equality is
equality of canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .errors import InvalidModule, InvalidQuiver

PLUS = 1
MINUS = -1

_SIGN_CHARS = {"+": PLUS, "-": MINUS}
_SIGN_NAMES = {PLUS: "+", MINUS: "-"}


class QuiverKind(Enum):
    FINITE_A = "A"
    AFFINE_A = "At"
    CYCLE = "Dcyc"


@dataclass(frozen=True)
class Quiver:
    """Immutable quiver description: a kind plus its sign word.

    ``signs`` stores +1/-1 per position: the n-1 interior positions for
    FINITE_A, the full n-periodic word for AFFINE_A, and n copies of +1
    for CYCLE (kept explicit so the accessor code is uniform).
    """

    kind: QuiverKind
    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (PLUS, MINUS) for s in self.signs):
            raise InvalidQuiver("signs must be +1 or -1")
        if self.kind is QuiverKind.AFFINE_A:
            if PLUS not in self.signs or MINUS not in self.signs:
                raise InvalidQuiver("affine quiver needs at least one + and one - sign")
        elif self.kind is QuiverKind.CYCLE:
            if len(self.signs) < 4:
                raise InvalidQuiver("oriented cycle needs n >= 4")
            if MINUS in self.signs:
                raise InvalidQuiver("oriented cycle has all signs +")

    @property
    def n(self) -> int:
        return len(self.signs) + 1 if self.kind is QuiverKind.FINITE_A else len(self.signs)

    @property
    def is_cyclic(self) -> bool:
        return self.kind is not QuiverKind.FINITE_A

    @property
    def a(self) -> int:
        """Number of + signs (clockwise arrows); cyclic kinds only."""
        if not self.is_cyclic:
            raise InvalidQuiver("a/b counts are defined for cyclic quivers")
        return sum(1 for s in self.signs if s == PLUS)

    @property
    def b(self) -> int:
        if not self.is_cyclic:
            raise InvalidQuiver("a/b counts are defined for cyclic quivers")
        return sum(1 for s in self.signs if s == MINUS)

    def sign(self, i: int) -> int:
        """Sign at position i: 0 at the ends of a linear quiver, periodic otherwise."""
        if self.kind is QuiverKind.FINITE_A:
            if i == 0 or i == self.n:
                return 0
            if not 0 < i < self.n:
                raise ValueError(f"position {i} outside [0, {self.n}]")
            return self.signs[i - 1]
        return self.signs[(i - 1) % self.n]

    def positives(self) -> tuple[int, ...]:
        return tuple(t for t in range(1, self.n + 1) if self.sign(t) == PLUS)

    def negatives(self) -> tuple[int, ...]:
        return tuple(t for t in range(1, self.n + 1) if self.sign(t) == MINUS)

    def sign_word(self) -> str:
        return "".join(_SIGN_NAMES[s] for s in self.signs)

    def label(self) -> str:
        if self.kind is QuiverKind.CYCLE:
            return f"Dcyc:{self.n}"
        return f"{self.kind.value}:{self.sign_word()}"

    def __repr__(self) -> str:
        return f"Quiver({self.label()!r})"

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "n": self.n}
        if self.kind is not QuiverKind.CYCLE:
            out["signs"] = self.sign_word()
        return out

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        kind = data.get("kind")
        if kind == "Dcyc":
            return cycle_quiver(int(data["n"]))
        if kind == "A":
            return finite_a(data.get("signs", ""))
        if kind == "At":
            return affine_a(data["signs"])
        raise InvalidQuiver(f"unknown quiver kind {kind!r}")


def _parse_word(word: str) -> tuple[int, ...]:
    try:
        return tuple(_SIGN_CHARS[c] for c in word)
    except KeyError as exc:
        raise InvalidQuiver(f"bad sign character in {word!r}") from exc


def finite_a(word: str) -> Quiver:
    """Linear quiver A_n from its interior sign word (may be empty: A_1)."""
    return Quiver(QuiverKind.FINITE_A, _parse_word(word))


def affine_a(word: str) -> Quiver:
    if len(word) < 2:
        raise InvalidQuiver("affine sign word needs length >= 2")
    return Quiver(QuiverKind.AFFINE_A, _parse_word(word))


def cycle_quiver(n: int) -> Quiver:
    if n < 4:
        raise InvalidQuiver("oriented cycle needs n >= 4")
    return Quiver(QuiverKind.CYCLE, (PLUS,) * n)


def parse_quiver(spec: str) -> Quiver:
    """Parse ``A:<signs>``, ``At:<signs>`` or ``Dcyc:<n>``."""
    head, sep, rest = spec.partition(":")
    if not sep:
        raise InvalidQuiver(f"missing ':' in quiver spec {spec!r}")
    if head == "A":
        return finite_a(rest)
    if head == "At":
        return affine_a(rest)
    if head == "Dcyc":
        try:
            n = int(rest)
        except ValueError as exc:
            raise InvalidQuiver(f"bad cycle size {rest!r}") from exc
        return cycle_quiver(n)
    raise InvalidQuiver(f"unknown quiver kind {head!r}")


@dataclass(frozen=True)
class StringModule:
    """String module M(i, j) on the interval (i, j], stored canonically."""

    quiver: Quiver
    i: int
    j: int

    @property
    def length(self) -> int:
        return self.j - self.i

    @property
    def is_simple(self) -> bool:
        return self.length == 1

    @property
    def is_exceptional(self) -> bool:
        """False exactly when both ends carry the same sign and j-i >= n."""
        q = self.quiver
        if not q.is_cyclic:
            return True
        return not (q.sign(self.i) == q.sign(self.j) and self.length >= q.n)

    def dim_vector(self) -> tuple[int, ...]:
        q = self.quiver
        n = q.n
        dim = [0] * n
        for t in range(self.i + 1, self.j + 1):
            dim[(t - 1) % n] += 1
        return tuple(dim)

    def __repr__(self) -> str:
        return f"M({self.i},{self.j})"

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j}


def canonicalize(q: Quiver, m: StringModule) -> StringModule:
    """Shift a cyclic-quiver module so 0 <= i < n; idempotent."""
    if not q.is_cyclic:
        return m
    shift = (m.i % q.n) - m.i
    if shift == 0:
        return m
    return StringModule(q, m.i + shift, m.j + shift)


def _module(q: Quiver, i: int, j: int) -> StringModule:
    """Construct without the exceptionality check (bounds still enforced).

    Submodule/quotient closures of exceptional strings contain
    non-exceptional strings, so the internal constructor must accept
    them; the public :func:`string_module` stays strict.
    """
    if i >= j:
        raise InvalidModule(f"need i < j, got ({i}, {j})")
    if q.kind is QuiverKind.FINITE_A:
        if not (0 <= i < j <= q.n):
            raise InvalidModule(f"({i}, {j}) outside [0, {q.n}]")
        return StringModule(q, i, j)
    if q.kind is QuiverKind.CYCLE and j - i > q.n - 1:
        raise InvalidModule(f"cycle module length {j - i} exceeds {q.n - 1}")
    return canonicalize(q, StringModule(q, i, j))


def string_module(q: Quiver, i: int, j: int) -> StringModule:
    """Validated, canonicalized string module M(i, j)."""
    m = _module(q, i, j)
    if q.kind is QuiverKind.AFFINE_A and not m.is_exceptional:
        raise InvalidModule(
            f"({i}, {j}) is not exceptional: equal end signs with length {j - i} >= n = {q.n}"
        )
    return m


def module_from_json(q: Quiver, data: dict) -> StringModule:
    return string_module(q, int(data["i"]), int(data["j"]))


def _check_owned(q: Quiver, m: StringModule) -> None:
    if m.quiver != q:
        raise ValueError("module belongs to a different quiver")


def sub_endpoints(q: Quiver, i: int, j: int) -> tuple[list[int], list[int]]:
    """Interval endpoints of the submodule substrings of M(i, j)."""
    lefts = [i] + [t for t in range(i + 1, j) if q.sign(t) == MINUS]
    rights = [j] + [t for t in range(i + 1, j) if q.sign(t) == PLUS]
    return lefts, rights


def quot_endpoints(q: Quiver, i: int, j: int) -> tuple[list[int], list[int]]:
    lefts = [i] + [t for t in range(i + 1, j) if q.sign(t) == PLUS]
    rights = [j] + [t for t in range(i + 1, j) if q.sign(t) == MINUS]
    return lefts, rights


def indecomposable_submodules(q: Quiver, m: StringModule) -> frozenset[StringModule]:
    """All indecomposable submodules of m, including m itself.

    A substring M(i', j') of M(i, j) is a submodule exactly when each cut
    is either an original end or points into the interval: i' = i or
    sign(i') = -, and j' = j or sign(j') = +.
    """
    _check_owned(q, m)
    lefts, rights = sub_endpoints(q, m.i, m.j)
    return frozenset(_module(q, p, r) for p, r in product(lefts, rights) if p < r)


def indecomposable_quotients(q: Quiver, m: StringModule) -> frozenset[StringModule]:
    """All indecomposable quotients of m (the sign-flipped enumeration)."""
    _check_owned(q, m)
    lefts, rights = quot_endpoints(q, m.i, m.j)
    return frozenset(_module(q, p, r) for p, r in product(lefts, rights) if p < r)


def hom_dim(q: Quiver, m: StringModule, n_mod: StringModule) -> int:
    """dim Hom(m, n) via graph maps.

    Counts interval coincidences between quotient substrings of m and
    submodule substrings of n, with n ranging over its cover lifts.  The
    lift window is the exact overlap range of the two supports, which
    contains the +-2 periods that exceptional modules can ever use.
    """
    _check_owned(q, m)
    _check_owned(q, n_mod)
    lefts, rights = quot_endpoints(q, m.i, m.j)
    quotients = {(p, r) for p, r in product(lefts, rights) if p < r}
    if not q.is_cyclic:
        shifts = [0]
    else:
        n = q.n
        lo = -((n_mod.j - m.i) // n)  # ceil((m.i - n.j)/n)
        hi = (m.j - n_mod.i) // n
        shifts = range(lo, hi + 1)
    count = 0
    for s in shifts:
        base_i = n_mod.i + s * q.n
        base_j = n_mod.j + s * q.n
        s_lefts, s_rights = sub_endpoints(q, base_i, base_j)
        subs = {(p, r) for p, r in product(s_lefts, s_rights) if p < r}
        count += len(quotients & subs)
    return count


def all_sign_words(n: int) -> list[str]:
    """Every +/- word of length n (test/CLI sweep helper)."""
    return ["".join(w) for w in product("+-", repeat=n)]
