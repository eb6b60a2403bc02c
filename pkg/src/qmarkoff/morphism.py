"""The Markoff matrix morphism, its q-deformation, and the twin binary trees.

The classical morphism sends a -> [[2,1],[1,1]] and b -> [[5,2],[2,1]];
its q-deformation replaces the generator images by matrices over Z[q]
that specialize back at q = 1.  The entry above the diagonal of the image
of a Christoffel word is a Markoff number, and its q-deformation is the
q-analog of that Markoff number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .qpoly import IntPolynomial, QMatrix, poly
from .words import count_letter, reversal

IntMatrix = tuple[tuple[int, int], tuple[int, int]]

MU_A: IntMatrix = ((2, 1), (1, 1))
MU_B: IntMatrix = ((5, 2), (2, 1))

MU_Q_A = QMatrix(poly(0, 1, 1), poly(1), poly(0, 1), poly(1))
MU_Q_B = QMatrix(poly(0, 1, 2, 1, 1), poly(1, 1), poly(0, 1, 1), poly(1))

# D = mu_q(ba) - mu_q(ab) = [[0, q + q^4], [-q^2 - q^5, 0]]; conjugation by a
# generator image multiplies it by the generator's determinant q^2 or q^4.
_FLIP_MATRIX = QMatrix(poly(), poly(0, 1, 0, 0, 1), poly(0, 0, -1, 0, 0, -1), poly())


def _int_mat_mul(x: IntMatrix, y: IntMatrix) -> IntMatrix:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def mu(w: str) -> IntMatrix:
    """Image of w under the integer morphism; mu("") is the identity."""
    m: IntMatrix = ((1, 0), (0, 1))
    for ch in w:
        m = _int_mat_mul(m, MU_A if ch == "a" else MU_B)
    return m


@lru_cache(maxsize=None)
def mu_q(w: str) -> QMatrix:
    """Image of w under the q-deformed morphism; mu_q("") is the identity.

    Evaluating every entry at q = 1 recovers mu(w).
    """
    if not w:
        return QMatrix.identity()
    return mu_q(w[:-1]) * (MU_Q_A if w[-1] == "a" else MU_Q_B)


def q_markoff(w: str) -> IntPolynomial:
    """The q-Markoff polynomial of w: entry (1,2) of mu_q(w).

    Zero for the empty word (identity matrix).
    """
    return mu_q(w).e12


def det_exponent(w: str) -> int:
    """Exponent n such that det(mu_q(w)) = q^n, namely 2|w|_a + 4|w|_b."""
    return 2 * count_letter(w, "a") + 4 * count_letter(w, "b")


def det_mu_q(w: str) -> IntPolynomial:
    """det(mu_q(w)) in closed form: the monomial q^(2|w|_a + 4|w|_b)."""
    return IntPolynomial.monomial(det_exponent(w))


def flip_matrix() -> QMatrix:
    """The constant flip matrix mu_q(ba) - mu_q(ab)."""
    return _FLIP_MATRIX


def flip_delta(u: str) -> QMatrix:
    """mu_q(reversal(u)·ba·u) - mu_q(reversal(u)·ab·u), checked against q^n * D.

    The difference always equals det(mu_q(u)) * D with det(mu_q(u)) = q^n,
    n = 2|u|_a + 4|u|_b; a mismatch would indicate broken arithmetic and
    raises ArithmeticError.
    """
    ru = reversal(u)
    delta = mu_q(ru + "ba" + u) - mu_q(ru + "ab" + u)
    expected = _FLIP_MATRIX.scale(det_mu_q(u))
    if delta != expected:
        raise ArithmeticError(f"flip identity violated for u={u!r}")
    return delta


@dataclass(frozen=True)
class PositivityReport:
    """Entries of mu_q(w) with the two positive combinations that drive monotonicity.

    combo1 = q*e11 - q^2*e12 + e21 and
    combo2 = (q+q^2)*e11 - (q^2+q^3+q^4)*e12 + e21 - q*e22;
    combo2 equals the rewrap gap q_markoff(awa) - q_markoff(bw).
    All six fields are nonzero with nonnegative coefficients, except that
    e12 = e21 = 0 when w is empty.
    """

    e11: IntPolynomial
    e12: IntPolynomial
    e21: IntPolynomial
    e22: IntPolynomial
    combo1: IntPolynomial
    combo2: IntPolynomial


def positivity_report(w: str) -> PositivityReport:
    """Compute the positivity certificate fields for mu_q(w)."""
    m = mu_q(w)
    q1 = poly(0, 1)
    combo1 = q1 * m.e11 - poly(0, 0, 1) * m.e12 + m.e21
    combo2 = poly(0, 1, 1) * m.e11 - poly(0, 0, 1, 1, 1) * m.e12 + m.e21 - q1 * m.e22
    return PositivityReport(m.e11, m.e12, m.e21, m.e22, combo1, combo2)


def delta_last_letter(w: str) -> IntPolynomial:
    """q_markoff(w·b) - q_markoff(w·a); equals q * mu_q(w).e11, so nonzero nonnegative."""
    return q_markoff(w + "b") - q_markoff(w + "a")


@dataclass(frozen=True)
class WrapDeltas:
    """The two gaps along a length-increasing step bw -> awa -> awb."""

    awa_minus_bw: IntPolynomial
    awb_minus_awa: IntPolynomial


def delta_wrap(w: str) -> WrapDeltas:
    """Gaps q_markoff(awa) - q_markoff(bw) and q_markoff(awb) - q_markoff(awa).

    The first equals combo2 of positivity_report(w); both are nonzero with
    nonnegative coefficients.
    """
    return WrapDeltas(
        q_markoff("a" + w + "a") - q_markoff("b" + w),
        q_markoff("a" + w + "b") - q_markoff("a" + w + "a"),
    )


def flip_prefix_delta(u: str, v: str) -> IntPolynomial:
    """q_markoff(ũ·ba·v) - q_markoff(ũ·ab·v) for u a prefix of v or vice versa.

    Nonzero with nonnegative coefficients; raises ValueError when neither
    word is a prefix of the other.
    """
    if not (v.startswith(u) or u.startswith(v)):
        raise ValueError("prefix precondition violated")
    ru = reversal(u)
    return q_markoff(ru + "ba" + v) - q_markoff(ru + "ab" + v)


@dataclass(frozen=True)
class MarkoffTriple:
    """Positive solution of x^2 + y^2 + z^2 = 3xyz."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        if self.x <= 0 or self.y <= 0 or self.z <= 0:
            raise ValueError("Markoff triples are positive")
        if self.x**2 + self.y**2 + self.z**2 != 3 * self.x * self.y * self.z:
            raise ValueError(f"({self.x},{self.y},{self.z}) does not solve the Markoff equation")

    @property
    def is_proper(self) -> bool:
        return len({self.x, self.y, self.z}) == 3

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})"


@dataclass(frozen=True)
class ChristoffelNode:
    """A node of the Christoffel tree: the standard factorization u.v of its word."""

    u: str
    v: str

    @property
    def word(self) -> str:
        return self.u + self.v

    def __str__(self) -> str:
        return f"{self.u}.{self.v}"


def parse_path(path: str | Iterable[str]) -> tuple[str, ...]:
    """Normalize a tree path to a tuple of "L"/"R" steps."""
    steps = tuple(path)
    bad = set(steps) - {"L", "R"}
    if bad:
        raise ValueError(f"tree path steps must be L or R, got {sorted(bad)}")
    return steps


def christoffel_node(path: str | Iterable[str]) -> ChristoffelNode:
    """Node of the Christoffel tree at `path` from the root (a, b).

    Left replaces (u, v) by (u, uv); Right replaces it by (uv, v).
    """
    u, v = "a", "b"
    for step in parse_path(path):
        if step == "L":
            v = u + v
        else:
            u = u + v
    return ChristoffelNode(u, v)


def markoff_triple(path: str | Iterable[str]) -> MarkoffTriple:
    """Markoff triple at `path` in the tree rooted at (1, 5, 2).

    Left maps (x, y, z) to (x, 3xy-z, y); Right maps it to (y, 3yz-x, z).
    The middle component equals mu(word) entry (1,2) for the Christoffel
    word at the same path.
    """
    x, y, z = 1, 5, 2
    for step in parse_path(path):
        if step == "L":
            x, y, z = x, 3 * x * y - z, y
        else:
            x, y, z = y, 3 * y * z - x, z
    return MarkoffTriple(x, y, z)


def tree_paths(depth: int) -> list[tuple[str, ...]]:
    """All tree paths of depth <= depth, in breadth-first left-to-right order."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    out: list[tuple[str, ...]] = [()]
    level: list[tuple[str, ...]] = [()]
    for _ in range(depth):
        level = [p + (s,) for p in level for s in ("L", "R")]
        out.extend(level)
    return out


def christoffel_words_upto(max_len: int) -> set[str]:
    """All lower Christoffel words of length <= max_len (including "a" and "b")."""
    found = {w for w in ("a", "b") if max_len >= 1}
    frontier = [("a", "b")] if max_len >= 2 else []
    while frontier:
        nxt = []
        for u, v in frontier:
            w = u + v
            if len(w) <= max_len:
                found.add(w)
                nxt.append((u, w))
                nxt.append((w, v))
        frontier = nxt
    return found


def is_christoffel(w: str) -> bool:
    """Whether w is a lower Christoffel word (tree membership at desk scale)."""
    return bool(w) and w in christoffel_words_upto(len(w))
