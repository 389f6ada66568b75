"""The symmetric group algebra and the fusion procedure inside it.

Composition convention, used everywhere and load-bearing for the
recursion and ordering conventions below: (s∘t)(i) = s(t(i)), i.e. the
right factor acts first.  Products of algebra elements append factors on
the right, so an ordered product f1·f2·…·fT is built left to right.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import kernels
from .exactnum import ONE, PoleAtLimit, RationalFunction, format_rational
from .shapes import SkewShape, StandardTableau, row_tableau


class DegreeMismatch(ValueError):
    """Operands live in symmetric groups of different degrees."""


class SkewShapeError(ValueError):
    """A non-skew tableau is required."""


class WrongTableau(ValueError):
    """The tableau is not the row (resp. column) tableau of its shape."""


class SampleAtPole(ValueError):
    """A sample point hits the pole locus of a rational identity."""


class Permutation(tuple):
    """One-line notation on {1..n}: self[i-1] is the image of i."""

    def __new__(cls, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> "Permutation":
        images = [0] * len(self)
        for i, v in enumerate(self, start=1):
            images[v - 1] = i
        return Permutation(images)

    def sign(self) -> int:
        seen = [False] * len(self)
        sign = 1
        for i in range(len(self)):
            if seen[i]:
                continue
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = self[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def cycles(self) -> str:
        """Cycle notation, e.g. "(1 2)(3 5 4)"; identity prints as "()"."""
        seen = [False] * len(self)
        parts = []
        for i in range(len(self)):
            if seen[i] or self[i] == i + 1:
                seen[i] = True
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self[j] - 1
            parts.append("(" + " ".join(str(v) for v in cyc) + ")")
        return "".join(parts) if parts else "()"


def compose(s: Permutation, t: Permutation) -> Permutation:
    if len(s) != len(t):
        raise DegreeMismatch(f"degrees {len(s)} and {len(t)} differ")
    return Permutation(kernels.compose(tuple(s), tuple(t)))


class GroupAlgebraElement:
    """Formal combination of permutations of a fixed degree.

    Coefficients are Fraction or RationalFunction; zero coefficients are
    never stored.  Term keys are raw image tuples for kernel speed.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for s, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    key = tuple(s)
                    self.terms[key] = self.terms.get(key, 0) + c
                    if not self.terms[key]:
                        del self.terms[key]

    @classmethod
    def one(cls, n: int, coeff=Fraction(1)) -> "GroupAlgebraElement":
        return cls(n, {tuple(range(1, n + 1)): coeff})

    @classmethod
    def from_permutation(cls, s: Permutation, coeff=Fraction(1)) -> "GroupAlgebraElement":
        return cls(len(s), {tuple(s): coeff})

    def _check(self, other: "GroupAlgebraElement"):
        if self.n != other.n:
            raise DegreeMismatch(f"degrees {self.n} and {other.n} differ")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement)
                and self.n == other.n and self.terms == other.terms)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            acc = out.get(s, 0) + c
            if acc:
                out[s] = acc
            else:
                out.pop(s, None)
        e = GroupAlgebraElement(self.n)
        e.terms = out
        return e

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scaled(-1)

    def scaled(self, c) -> "GroupAlgebraElement":
        e = GroupAlgebraElement(self.n)
        if c:
            e.terms = {s: v * c for s, v in self.terms.items()}
        return e

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        e = GroupAlgebraElement(self.n)
        e.terms = kernels.ga_mul(self.terms, other.terms)
        return e

    def map_coeffs(self, f) -> "GroupAlgebraElement":
        e = GroupAlgebraElement(self.n)
        for s, c in self.terms.items():
            v = f(c)
            if v:
                e.terms[s] = v
        return e

    def coeff(self, s) -> Fraction:
        return self.terms.get(tuple(s), Fraction(0))

    def identity_coeff(self):
        return self.coeff(range(1, self.n + 1))

    def support(self) -> list[Permutation]:
        return [Permutation(s) for s in sorted(self.terms)]

    def to_json(self) -> list[dict]:
        out = []
        for s in sorted(self.terms):
            out.append({"cycles": Permutation(s).cycles(),
                        "coeff": format_rational(self.terms[s])})
        return out

    def __repr__(self):
        parts = [f"{self.terms[s]!r}*{Permutation(s).cycles()}"
                 for s in sorted(self.terms)]
        return f"GA{self.n}[" + " + ".join(parts) + "]"


def _require_non_skew(T: StandardTableau) -> None:
    if T.shape.is_skew:
        raise SkewShapeError(f"non-skew tableau required, got shape {T.shape}")


def _stabilizer_sum(T: StandardTableau, by_rows: bool, signed: bool) -> GroupAlgebraElement:
    n = T.n
    groups: dict[int, list[int]] = {}
    for (i, j), k in zip(T.shape.cells, T.entries):
        groups.setdefault(i if by_rows else j, []).append(k)
    blocks = [sorted(v) for _, v in sorted(groups.items())]
    terms = {}
    for assignment in itertools.product(*[itertools.permutations(b) for b in blocks]):
        images = list(range(1, n + 1))
        for block, perm in zip(blocks, assignment):
            for src, dst in zip(block, perm):
                images[src - 1] = dst
        s = Permutation(images)
        terms[tuple(s)] = Fraction(s.sign() if signed else 1)
    return GroupAlgebraElement(n, terms)


def young_p(T: StandardTableau) -> GroupAlgebraElement:
    """Sum over the row stabilizer of T."""
    _require_non_skew(T)
    return _stabilizer_sum(T, by_rows=True, signed=False)


def young_q(T: StandardTableau) -> GroupAlgebraElement:
    """Signed sum over the column stabilizer of T."""
    _require_non_skew(T)
    return _stabilizer_sum(T, by_rows=False, signed=True)


def e_row(T: StandardTableau) -> GroupAlgebraElement:
    """Diagonal matrix element for the row tableau: p·q·p / (λ1!·λ2!·…)."""
    _require_non_skew(T)
    if not T.is_row_tableau():
        raise WrongTableau(f"{T} is not the row tableau of its shape")
    p = young_p(T)
    q = young_q(T)
    denom = 1
    for part in T.shape.lam.parts:
        denom *= factorial(part)
    e = (p * q * p).scaled(Fraction(1, denom))
    assert e.identity_coeff() == 1
    return e


def e_col(T: StandardTableau) -> GroupAlgebraElement:
    """Diagonal matrix element for the column tableau: q·p·q / (λ'1!·λ'2!·…)."""
    from .shapes import column_tableau, conjugate

    _require_non_skew(T)
    if T != column_tableau(T.shape):
        raise WrongTableau(f"{T} is not the column tableau of its shape")
    p = young_p(T)
    q = young_q(T)
    denom = 1
    for part in conjugate(T.shape.lam).parts:
        denom *= factorial(part)
    e = (q * p * q).scaled(Fraction(1, denom))
    assert e.identity_coeff() == 1
    return e


def chain_from_row(T: StandardTableau, greedy: str = "smallest") -> list[int]:
    """Adjacent transpositions turning the row tableau into T.

    Every intermediate tableau along the chain is standard.  Walks from T
    back to the row tableau by repeatedly exchanging a descent k (the box
    of k lies strictly below the box of k+1), then reverses the walk.
    ``greedy`` picks the smallest or the largest such k; any valid chain
    yields the same matrix element, which the tests exercise.
    """
    ks = []
    cur = T
    while not cur.is_row_tableau():
        rows = cur.rows()
        candidates = [k for k in range(1, cur.n) if rows[k - 1] > rows[k]]
        k = min(candidates) if greedy == "smallest" else max(candidates)
        ks.append(k)
        cur = cur.swap_adjacent(k)
    return ks[::-1]


@lru_cache(maxsize=None)
def e_tableau(T: StandardTableau, greedy: str = "smallest") -> GroupAlgebraElement:
    """Diagonal matrix element e for an arbitrary standard tableau.

    Built from the row tableau along a chain of admissible adjacent
    transpositions: with h = 1/(c_{k+1} - c_k) taken on the current
    tableau, the exchanged element is (s_k - h)·e·(s_k - h)/(1 - h²).
    """
    _require_non_skew(T)
    chain = chain_from_row(T, greedy)
    cur = row_tableau(T.shape)
    e = e_row(cur)
    n = T.n
    for k in chain:
        c = cur.contents
        h = Fraction(1, c[k] - c[k - 1])
        f = GroupAlgebraElement(n, {
            tuple(Permutation.transposition(n, k, k + 1)): Fraction(1),
            tuple(Permutation.identity(n)): -h,
        })
        e = (f * e * f).scaled(1 / (1 - h * h))
        cur = cur.swap_adjacent(k)
    assert cur == T and e.identity_coeff() == 1
    return e


def _fusion_product(n: int, contents, groups) -> GroupAlgebraElement:
    """Ordered product of 1 - (i j)/(c_i - c_j + (g_i - g_j)·ε) over
    lexicographic pairs, with rational-function coefficients."""
    eps = RationalFunction.x()
    elem = GroupAlgebraElement.one(n, RationalFunction.const(1))
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            den = (contents[i - 1] - contents[j - 1]) + (groups[i - 1] - groups[j - 1]) * eps
            factor = GroupAlgebraElement(n, {
                tuple(Permutation.identity(n)): RationalFunction.const(1),
                tuple(Permutation.transposition(n, i, j)): -(ONE / den),
            })
            elem = elem * factor
    return elem


def _evaluate_limit(elem: GroupAlgebraElement) -> GroupAlgebraElement:
    try:
        return elem.map_coeffs(lambda c: c.eval_at_zero())
    except PoleAtLimit as exc:
        raise PoleAtLimit(
            "fusion product has a genuine pole on the constraint line; "
            "this falsifies the regularity claim") from exc


def fusion_e(T: StandardTableau, mode: str = "row") -> GroupAlgebraElement:
    """Value of the fusion product at the diagonal limit for non-skew T.

    The constrained variables are substituted along the line t_k = g_k·ε
    where g_k is the row (mode "row") or column (mode "column") index of
    the box of k; regularity makes the value line-independent.
    """
    _require_non_skew(T)
    return fusion_e_skew(T, mode)


def fusion_e_skew(T: StandardTableau, mode: str = "row") -> GroupAlgebraElement:
    if mode not in ("row", "column"):
        raise ValueError(f"mode must be 'row' or 'column', got {mode!r}")
    groups = T.rows() if mode == "row" else T.columns()
    return _evaluate_limit(_fusion_product(T.n, T.contents, groups))


def iota(a: GroupAlgebraElement, m: int) -> GroupAlgebraElement:
    """Embed a degree-n element into degree m+n, acting on {m+1..m+n}."""
    out = GroupAlgebraElement(m + a.n)
    prefix = tuple(range(1, m + 1))
    for s, c in a.terms.items():
        out.terms[prefix + tuple(v + m for v in s)] = c
    return out


def theta(a: GroupAlgebraElement, m: int) -> GroupAlgebraElement:
    """Keep the terms whose permutation preserves {1..m} as a set."""
    if not 0 <= m < max(a.n, 1):
        raise ValueError(f"need 0 <= m < {a.n}, got {m}")
    out = GroupAlgebraElement(a.n)
    for s, c in a.terms.items():
        if all(s[i] <= m for i in range(m)):
            out.terms[s] = c
    return out


def e_skew_extract(L: StandardTableau, m: int) -> GroupAlgebraElement:
    """Element of the skew block recovered from θ_m of the full element.

    θ_m(e) factors as (element for the first m entries)·(embedded skew
    element); reading the terms whose action on {1..m} is the identity is
    valid because the first factor has identity coefficient 1.
    """
    _require_non_skew(L)
    if not 0 <= m < L.n:
        raise ValueError(f"need 0 <= m < {L.n}, got {m}")
    th = theta(e_tableau(L), m)
    n = L.n - m
    out = GroupAlgebraElement(n)
    ident = tuple(range(1, m + 1))
    for s, c in th.terms.items():
        if s[:m] == ident:
            out.terms[tuple(v - m for v in s[m:])] = c
    return out


def skew_tableau_of(L: StandardTableau, m: int) -> StandardTableau:
    """The skew tableau formed by the boxes of L holding m+1..n."""
    from .shapes import Partition, SkewShape

    mu_rows: dict[int, int] = {}
    for (i, j), k in zip(L.shape.cells, L.entries):
        if k <= m:
            mu_rows[i] = max(mu_rows.get(i, 0), j)
    mu = Partition(tuple(mu_rows.get(i, 0)
                         for i in range(1, len(L.shape.lam.parts) + 1)))
    shape = SkewShape(L.shape.lam, mu)
    entries = [L.entries[L.shape.cells.index(c)] - m for c in shape.cells]
    return StandardTableau(shape, entries)


def extend_tableau(O: StandardTableau, U: StandardTableau) -> StandardTableau:
    """Standard tableau on the full diagram: U fills mu with 1..m, the
    skew tableau O fills the rest shifted up by m."""
    from .shapes import SkewShape

    if U.shape.lam != O.shape.mu or U.shape.is_skew:
        raise ValueError("inner tableau must fill the inner shape of the skew one")
    m = U.n
    full = SkewShape(O.shape.lam, type(O.shape.mu)())
    entries = []
    for cell in full.cells:
        if cell in U.shape.cells:
            entries.append(U.entries[U.shape.cells.index(cell)])
        else:
            entries.append(O.entries[O.shape.cells.index(cell)] + m)
    return StandardTableau(full, entries)


def check_prop25(L: StandardTableau, x_samples) -> bool:
    """Exchange identity for the fusion string against one extra strand.

    Both sides live in the algebra of degree l+1; checking at enough
    generic samples (degree bound l+1 after clearing denominators, so
    l+2 samples suffice) proves the rational identity.
    """
    _require_non_skew(L)
    l = L.n
    c = L.contents
    e1 = iota(e_tableau(L), 1)
    poles = set(c) | {0} | {ci - cj for ci in c for cj in c}
    for x in x_samples:
        x = Fraction(x)
        if x in poles:
            raise SampleAtPole(f"sample {x} lies on the pole locus")
        lhs = e1
        for k in range(l, 0, -1):
            factor = GroupAlgebraElement(l + 1, {
                tuple(Permutation.identity(l + 1)): Fraction(1),
                tuple(Permutation.transposition(l + 1, 1, k + 1)): -1 / (x - c[k - 1]),
            })
            lhs = factor * lhs
        rhs_factor = GroupAlgebraElement(l + 1, {tuple(Permutation.identity(l + 1)): Fraction(1)})
        for k in range(1, l + 1):
            rhs_factor.terms[tuple(Permutation.transposition(l + 1, 1, k + 1))] = Fraction(-1) / x
        rhs = rhs_factor * e1
        if lhs != rhs:
            return False
    return True
