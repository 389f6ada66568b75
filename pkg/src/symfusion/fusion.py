"""Fusion symmetrizers on tensor space and their verified properties.

Two constructions live here.  The plain symmetrizer operator is the
image of the group-algebra fusion element.  Its two-parameter analogue
for a chosen symmetric or alternating form is the diagonal-limit value
of the ordered product of contraction factors times exchange factors,
evaluated at the base point -1/2 (symmetric) or +1/2 (alternating) along
the constraint line.

The limit machinery carries every entry of the operator product as an
integer-coefficient polynomial numerator over a shared denominator kept
as a list of integer linear factors a + b·ε.  Every factor denominator
in the product is such a linear polynomial, so this is exact; the value
and the pole test at ε = 0 are read off per entry at the very end, and
no individual factor is ever evaluated early.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .exactnum import PoleAtLimit
from .shapes import (Partition, SkewShape, StandardTableau, conjugate,
                     dim_sym_irrep, validate_label)
from .symalg import Permutation, e_tableau, fusion_e_skew, skew_tableau_of
from .tensorop import (BilinearForm, SparseOperator, act, alternating_form,
                       decode, encode, image_basis, intersect, perm_op, q_op,
                       rank, span_of_vectors, subspace_equal, symmetric_form,
                       traceless_basis)


class NotApplicable(ValueError):
    """A closed formula's applicability condition fails for the config."""


class SizeLimitExceeded(ValueError):
    """The requested computation exceeds the configured size cap."""


class ConfigError(ValueError):
    """Invalid fusion configuration."""


def max_dim() -> int:
    return int(os.environ.get("FUSION_MAX_DIM", "4096"))


def _check_dim(N: int, n: int):
    if N ** n > max_dim():
        raise SizeLimitExceeded(
            f"N^n = {N ** n} exceeds FUSION_MAX_DIM = {max_dim()}")


FORM_GROUP = {"symmetric": "O", "alternating": "Sp"}


@dataclass(frozen=True)
class FusionConfig:
    """A tableau together with the tensor-space and form parameters.

    The constraint mode and base point are derived: symmetric forms tie
    the variables of boxes in the same column and sit at -1/2,
    alternating forms tie boxes in the same row and sit at +1/2.
    """

    tableau: StandardTableau
    N: int
    M: int
    form_kind: str
    strict: bool = True  # False skips label validation (the exchange
    # relation is an identity in the centralizer algebra and is also
    # exercised on labels outside the polynomial-representation range)

    def __post_init__(self):
        if self.form_kind not in FORM_GROUP:
            raise ConfigError(f"unknown form kind {self.form_kind!r}")
        if self.N < 1 or self.M < 0:
            raise ConfigError("need N >= 1 and M >= 0")
        group = FORM_GROUP[self.form_kind]
        if self.form_kind == "alternating" and (self.N % 2 or self.M % 2):
            raise ConfigError("alternating forms need even N and M")
        if not self.strict:
            return
        lam = self.tableau.shape.lam
        mu = self.tableau.shape.mu
        if not validate_label(lam, group, self.N + self.M):
            raise ConfigError(f"{lam} is not a valid {group}_{self.N + self.M} label")
        if mu.parts:
            if self.M == 0 or not validate_label(mu, group, self.M):
                raise ConfigError(f"{mu} is not a valid {group}_{self.M} label")

    @property
    def constraint_mode(self) -> str:
        return "column" if self.form_kind == "symmetric" else "row"

    @property
    def base_point(self) -> Fraction:
        return Fraction(-1, 2) if self.form_kind == "symmetric" else Fraction(1, 2)

    @property
    def form(self) -> BilinearForm:
        return (symmetric_form(self.N) if self.form_kind == "symmetric"
                else alternating_form(self.N))

    @property
    def n(self) -> int:
        return self.tableau.n

    def describe(self) -> dict:
        return {
            "lambda": str(self.tableau.shape.lam),
            "mu": str(self.tableau.shape.mu),
            "tableau": list(self.tableau.entries),
            "N": self.N,
            "M": self.M,
            "form": FORM_GROUP[self.form_kind],
        }


# ---------------------------------------------------------------------------
# shared-denominator polynomial matrices over the integers


def _zmat_identity(dim: int) -> dict[int, dict[int, tuple[int, ...]]]:
    return {r: {r: (1,)} for r in range(dim)}


def _int_rows(op: SparseOperator) -> dict[int, dict[int, int]]:
    out = {}
    for r, cols in op.rows.items():
        row = {}
        for c, v in cols.items():
            if v.denominator != 1:
                raise ValueError("factor operator must have integer entries")
            row[c] = v.numerator
        out[r] = row
    return out


def _zmat_apply_factor(rows, xrows, a: int, b: int):
    """(a + b·ε)·U - X·U for a polynomial matrix U and integer matrix X."""
    zadd, zscale, zlin = kernels.zpoly_add, kernels.zpoly_scale, kernels.zpoly_scale_linear
    out: dict[int, dict[int, tuple[int, ...]]] = {}
    for r, cols in rows.items():
        out[r] = {c: zlin(p, a, b) for c, p in cols.items()}
    for r, xcols in xrows.items():
        acc = out.setdefault(r, {})
        for k, xv in xcols.items():
            urow = rows.get(k)
            if urow is None:
                continue
            for c, p in urow.items():
                term = zscale(p, -xv)
                prev = acc.get(c)
                v = term if prev is None else zadd(prev, term)
                if v:
                    acc[c] = v
                else:
                    acc.pop(c, None)
        if not acc:
            out.pop(r, None)
    return out


def _zmat_limit(rows, den: list[tuple[int, int]], N: int, n: int) -> SparseOperator:
    """Per-entry value at ε = 0 of num/Π(a_t + b_t·ε), with exact pole test."""
    v = sum(1 for a, _ in den if a == 0)
    scale = 1
    for a, b in den:
        scale *= a if a else b
    out: dict[int, dict[int, Fraction]] = {}
    for r, cols in rows.items():
        dst = {}
        for c, p in cols.items():
            if any(p[i] for i in range(min(v, len(p)))):
                raise PoleAtLimit(
                    "operator product has a genuine pole at the base point; "
                    "this falsifies the regularity claim")
            if len(p) > v and p[v]:
                dst[c] = Fraction(p[v], scale)
        if dst:
            out[r] = dst
    return SparseOperator(N, n, out)


# ---------------------------------------------------------------------------
# the operators


def e_operator(O: StandardTableau, N: int) -> SparseOperator:
    """Image on tensor space of the group-algebra fusion element."""
    _check_dim(N, O.n)
    return _e_operator_cached(O, N)


@lru_cache(maxsize=None)
def _e_operator_cached(O: StandardTableau, N: int) -> SparseOperator:
    return act(fusion_e_skew(O, "row"), N)


def _lex_pairs(n: int):
    return [(k, l) for k in range(1, n) for l in range(k + 1, n + 1)]


def f_operator_general(cfg: FusionConfig) -> SparseOperator:
    """Diagonal-limit value of the full ordered contraction-exchange product.

    The constrained variables are substituted along the line
    t_k = base + g_k·ε (g_k the column or row index of the box of k per
    the constraint mode); all 2·C(n,2) factors are carried symbolically
    and the limit is taken only on the complete product.
    """
    _check_dim(cfg.N, cfg.n)
    return _f_operator_cached(cfg)


@lru_cache(maxsize=None)
def _f_operator_cached(cfg: FusionConfig) -> SparseOperator:
    O = cfg.tableau
    n = O.n
    N = cfg.N
    c = O.contents
    g = O.columns() if cfg.constraint_mode == "column" else O.rows()
    base_shift = cfg.N + cfg.M + (2 * cfg.base_point)  # integer: N+M∓1
    assert base_shift.denominator == 1
    form = cfg.form
    factors: list[tuple[dict, int, int]] = []
    q_cache: dict[tuple[int, int], dict] = {}
    for k, l in _lex_pairs(n):
        a = c[k - 1] + c[l - 1] + int(base_shift)
        b = g[k - 1] + g[l - 1]
        if (k, l) not in q_cache:
            q_cache[(k, l)] = _int_rows(q_op(k, l, form, n))
        factors.append((q_cache[(k, l)], a, b))
    for k, l in _lex_pairs(n):
        a = c[k - 1] - c[l - 1]
        b = g[k - 1] - g[l - 1]
        if a == 0 and b == 0:
            raise ConfigError("vanishing exchange denominator; tableau not standard?")
        p = _int_rows(perm_op(Permutation.transposition(n, k, l), N))
        factors.append((p, a, b))
    rows = _zmat_identity(N ** n)
    den: list[tuple[int, int]] = []
    for xrows, a, b in reversed(factors):
        rows = _zmat_apply_factor(rows, xrows, a, b)
        den.append((a, b))
    return _zmat_limit(rows, den, N, n)


CLOSED_FORMULAS = ("col_O", "row_Sp", "any_Sp", "any_SO", "regular_case")


def f_operator_closed(cfg: FusionConfig, formula: str) -> SparseOperator:
    """Closed-form contraction product times the plain symmetrizer.

    Each formula has an applicability condition; NotApplicable is raised
    when it fails.  The result must agree exactly with the general route,
    which the acceptance suite checks across the sweep.
    """
    from .shapes import column_tableau, row_tableau

    O = cfg.tableau
    n = O.n
    c = O.contents
    lam_conj = conjugate(O.shape.lam)
    if formula == "col_O":
        if cfg.form_kind != "symmetric":
            raise NotApplicable("col_O needs a symmetric form")
        if O != column_tableau(O.shape):
            raise NotApplicable("col_O needs the column tableau")
        shift = cfg.N + cfg.M - 1
        cols = O.columns()
        pairs = [(k, l) for k, l in _lex_pairs(n) if cols[k - 1] != cols[l - 1]]
    elif formula == "row_Sp":
        if cfg.form_kind != "alternating":
            raise NotApplicable("row_Sp needs an alternating form")
        if O != row_tableau(O.shape):
            raise NotApplicable("row_Sp needs the row tableau")
        shift = cfg.N + cfg.M + 1
        rows_ = O.rows()
        pairs = [(k, l) for k, l in _lex_pairs(n) if rows_[k - 1] != rows_[l - 1]]
    elif formula == "any_Sp":
        if cfg.form_kind != "alternating":
            raise NotApplicable("any_Sp needs an alternating form")
        if O.shape.is_skew:
            raise NotApplicable("any_Sp needs a non-skew tableau")
        shift = cfg.N + cfg.M + 1
        pairs = _lex_pairs(n)
    elif formula == "any_SO":
        if cfg.form_kind != "symmetric":
            raise NotApplicable("any_SO needs a symmetric form")
        if O.shape.is_skew:
            raise NotApplicable("any_SO needs a non-skew tableau")
        if 2 * lam_conj[0] > cfg.N + cfg.M:
            raise NotApplicable("any_SO needs the first column at most half the rank")
        shift = cfg.N + cfg.M - 1
        pairs = _lex_pairs(n)
    elif formula == "regular_case":
        if 2 * lam_conj[0] > cfg.N + cfg.M:
            raise NotApplicable("regular_case needs the first column at most half the rank")
        shift = cfg.N + cfg.M + (1 if cfg.form_kind == "alternating" else -1)
        pairs = _lex_pairs(n)
    else:
        raise ValueError(f"unknown formula {formula!r}")

    form = cfg.form
    out = e_operator(O, cfg.N)
    for k, l in reversed(pairs):
        d = c[k - 1] + c[l - 1] + shift
        assert d != 0, "denominator safety violated"
        out = out - q_op(k, l, form, n).scaled(Fraction(1, d)) * out
    return out


# ---------------------------------------------------------------------------
# verifiers


def scaled_idempotency_constant(lam: Partition) -> Fraction:
    return Fraction(_factorial(lam.size), dim_sym_irrep(lam))


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def verify_scaled_idempotent(A: SparseOperator, scalar: Fraction) -> bool:
    return A * A == A.scaled(scalar)


def verify_divisibility(F: SparseOperator, E: SparseOperator, scalar: Fraction) -> bool:
    FE = F * E
    EF = E * F
    S = F.scaled(scalar)
    return FE == S and EF == S


def measured_eigenvalue(E: SparseOperator):
    """Scalar σ with E² = σ·E, if one exists (None otherwise)."""
    sq = E * E
    for r, cols in E.rows.items():
        for c, v in cols.items():
            sigma = sq.entry(r, c) / v
            return sigma if sq == E.scaled(sigma) else None
    return Fraction(0) if sq.is_zero() else None


def verify_prop33(cfg: FusionConfig) -> bool:
    """Image of F equals image of E intersected with the traceless
    subspace; F kills every contraction; F agrees with E on traceless
    vectors.  Only meaningful at M = 0 with a non-skew tableau."""
    if cfg.M != 0:
        raise ConfigError("the traceless-image equality is an M = 0 statement")
    if cfg.tableau.shape.is_skew:
        raise ConfigError("non-skew tableau required")
    n = cfg.n
    form = cfg.form
    F = f_operator_general(cfg)
    E = e_operator(cfg.tableau, cfg.N)
    for k, l in _lex_pairs(n):
        if not (q_op(k, l, form, n) * F).is_zero():
            return False
    T = traceless_basis(cfg.N, n, form)
    for vec in T.vectors:
        dvec = {i: v for i, v in enumerate(vec) if v}
        if F.apply(dvec) != E.apply(dvec):
            return False
    lhs = image_basis(F)
    rhs = intersect(image_basis(E), T)
    return subspace_equal(lhs, rhs)


def verify_corollary32(L: StandardTableau, k: int, cfg: FusionConfig) -> bool:
    """Exchange relation moving the operator between adjacent tableaux."""
    if cfg.tableau != L:
        cfg = FusionConfig(L, cfg.N, cfg.M, cfg.form_kind, cfg.strict)
    c = L.contents
    rows = L.rows()
    cols = L.columns()
    if rows[k - 1] == rows[k] or cols[k - 1] == cols[k]:
        raise NonStandardNeighbor(f"exchanging {k} and {k + 1} in {L} is not standard")
    Lk = L.swap_adjacent(k)
    n = L.n
    N = cfg.N
    F = f_operator_general(cfg)
    Fk = f_operator_general(FusionConfig(Lk, cfg.N, cfg.M, cfg.form_kind, cfg.strict))
    P = perm_op(Permutation.transposition(n, k, k + 1), N)
    I = SparseOperator.identity(N, n)
    R_back = I - P.scaled(Fraction(1, c[k] - c[k - 1]))
    R_fwd = I - P.scaled(Fraction(1, c[k - 1] - c[k]))
    return P * R_back * F == Fk * R_fwd * P


class NonStandardNeighbor(ValueError):
    """Exchanging k and k+1 does not give a standard tableau."""


# ---------------------------------------------------------------------------
# block factorization through the split of the ambient space


def _block_codes(L: int, M: int, m: int, n: int):
    """Codes of the component with the first m letters in the first-M part
    and the last n letters in the last-N part of the split space."""
    for mcode in range(max(M, 1) ** m if m else 1):
        midx = decode(mcode, M, m) if m else ()
        for ncode in range((L - M) ** n):
            nidx = decode(ncode, L - M, n)
            full = tuple(midx) + tuple(M + i for i in nidx)
            yield mcode, ncode, encode(full, L)


def invariant_traceless_projector(M: int, m: int, form: BilinearForm):
    """Matrix of the unique equivariant projector onto the traceless part.

    The complement of the traceless subspace is the span of the images of
    all contraction operators, itself invariant; the projector along it
    is computed by solving in the combined basis.
    """
    dim = M ** m
    if m < 2:
        return {i: {i: Fraction(1)} for i in range(dim)}
    T = traceless_basis(M, m, form)
    comp_vectors = []
    for k in range(1, m):
        for l in range(k + 1, m + 1):
            Q = q_op(k, l, form, m)
            cols: dict[int, dict[int, Fraction]] = {}
            for r, row in Q.rows.items():
                for c, v in row.items():
                    cols.setdefault(c, {})[r] = v
            comp_vectors.extend(cols.values())
    C = span_of_vectors(dim, comp_vectors)
    if T.dim + C.dim != dim:
        raise ArithmeticError("traceless part and contraction span do not fill the space")
    # Solve [T; C]ᵀ · coeffs = e_i for every i; projector column is T-part.
    basis_rows = [list(v) for v in T.vectors] + [list(v) for v in C.vectors]
    aug = [[basis_rows[j][i] for j in range(dim)]
           + [Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    pivots, reduced = kernels.frac_rref(aug, 2 * dim, Fraction(0), Fraction(1))
    assert pivots[:dim] == list(range(dim))
    proj: dict[int, dict[int, Fraction]] = {}
    for i in range(dim):
        # coefficient of basis vector j in e_i is reduced[j][dim + i]
        for r in range(dim):
            acc = Fraction(0)
            for j in range(T.dim):
                acc += reduced[j][dim + i] * T.vectors[j][r]
            if acc:
                proj.setdefault(r, {})[i] = acc
    return proj


def verify_theta_factorization(L_tab: StandardTableau, m: int, N: int, M: int,
                               form_kind: str) -> bool:
    """Compression of the big operator to the split subspace factors as
    (restricted plain symmetrizer) ⊗ (small two-parameter operator)."""
    l = L_tab.n
    Lrank = N + M
    if Lrank ** l > 1000:
        raise SizeLimitExceeded(f"(N+M)^l = {Lrank ** l} exceeds the 1000 cap")
    if L_tab.shape.is_skew:
        raise ConfigError("non-skew tableau required")
    group = FORM_GROUP[form_kind]
    if form_kind == "alternating" and (M % 2 or N % 2):
        raise NotApplicable("alternating split needs even N and M")
    upsilon = _restrict_tableau(L_tab, m)
    mu = upsilon.shape.lam
    if m and (M == 0 or not validate_label(mu, group, M)):
        raise NotApplicable(f"{mu} is not a valid {group}_{M} label")
    omega = skew_tableau_of(L_tab, m)
    n = l - m

    big = f_operator_general(FusionConfig(L_tab, Lrank, 0, form_kind))
    small = f_operator_general(FusionConfig(omega, N, M, form_kind))
    form_M = (symmetric_form(M) if form_kind == "symmetric"
              else alternating_form(M)) if M and m else None
    E_ups = act(e_tableau(upsilon), M) if m else None
    H = invariant_traceless_projector(M, m, form_M) if m else None

    # basis of the traceless part of the first factor
    if m:
        T = traceless_basis(M, m, form_M)
        t_vectors = [{i: v for i, v in enumerate(vec) if v} for vec in T.vectors]
    else:
        t_vectors = [{0: Fraction(1)}]

    block = list(_block_codes(Lrank, M, m, n))
    embed = {(mc, nc): full for mc, nc, full in block}
    split = {full: (mc, nc) for mc, nc, full in block}

    def project_J(vec: dict[int, Fraction]) -> dict[tuple[int, int], Fraction]:
        out: dict[tuple[int, int], Fraction] = {}
        for full, v in vec.items():
            pair = split.get(full)
            if pair is None:
                continue
            mc, nc = pair
            if H is None:
                acc = out.get((mc, nc), 0) + v
                if acc:
                    out[(mc, nc)] = acc
                else:
                    out.pop((mc, nc), None)
            else:
                for r, hv in ((r, cols[mc]) for r, cols in H.items() if mc in cols):
                    acc = out.get((r, nc), 0) + hv * v
                    if acc:
                        out[(r, nc)] = acc
                    else:
                        out.pop((r, nc), None)
        return out

    for u in t_vectors:
        for ncode in range(N ** n):
            emb = {embed[(mc, ncode)]: uv for mc, uv in u.items()}
            lhs = project_J(big.apply(emb))
            eu = E_ups.apply(u) if E_ups is not None else dict(u)
            fw = small.apply({ncode: Fraction(1)})
            rhs: dict[tuple[int, int], Fraction] = {}
            for mc, uv in eu.items():
                for nc, fv in fw.items():
                    val = uv * fv
                    if val:
                        rhs[(mc, nc)] = val
            if lhs != rhs:
                return False
    return True


def _restrict_tableau(L_tab: StandardTableau, m: int) -> StandardTableau:
    """Tableau formed by the boxes of L holding 1..m (non-skew)."""
    rows: dict[int, int] = {}
    for (i, j), k in zip(L_tab.shape.cells, L_tab.entries):
        if k <= m:
            rows[i] = max(rows.get(i, 0), j)
    mu = Partition(tuple(rows.get(i, 0) for i in range(1, len(rows) + 1)))
    shape = SkewShape(mu, Partition())
    entries = []
    for cell in shape.cells:
        entries.append(L_tab.entries[L_tab.shape.cells.index(cell)])
    return StandardTableau(shape, entries)


# ---------------------------------------------------------------------------
# certificates


@dataclass
class CheckResult:
    name: str
    statement: str
    passed: bool
    witness: dict | None = None
    runtime_ms: int | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "paper_ref": self.statement, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.runtime_ms is not None:
            out["runtime_ms"] = self.runtime_ms
        return out


@dataclass
class FusionCertificate:
    config: dict
    checks: list[CheckResult] = field(default_factory=list)
    operator_hash: str | None = None

    def add(self, result: CheckResult):
        self.checks.append(result)

    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "operator_hash": self.operator_hash,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)],
        }


def operator_hash(A: SparseOperator) -> str:
    payload = json.dumps(A.to_triplets(), separators=(",", ":")).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def certify(cfg: FusionConfig) -> FusionCertificate:
    """Build the operator for one configuration and run the checks that
    make sense for it; every check names the statement it instantiates."""
    cert = FusionCertificate(config=cfg.describe())
    try:
        F = f_operator_general(cfg)
    except PoleAtLimit as exc:
        cert.add(CheckResult("regular-limit", "fusion-product-regularity",
                             False, {"error": str(exc)}))
        return cert
    cert.operator_hash = operator_hash(F)
    cert.add(CheckResult("regular-limit", "fusion-product-regularity", True))
    E = e_operator(cfg.tableau, cfg.N)
    non_skew = not cfg.tableau.shape.is_skew
    if non_skew:
        scalar = scaled_idempotency_constant(cfg.tableau.shape.lam)
        cert.add(CheckResult("scaled-idempotency", "scaled-square",
                             verify_scaled_idempotent(F, scalar)))
        cert.add(CheckResult("two-sided-divisibility", "symmetrizer-divides",
                             verify_divisibility(F, E, scalar)))
        if cfg.M == 0:
            cert.add(CheckResult("traceless-image", "traceless-image-equality",
                                 verify_prop33(cfg)))
    cert.add(CheckResult("rank-monotone", "image-dimension-bound",
                         rank(F) <= rank(E)))
    for formula in CLOSED_FORMULAS:
        try:
            G = f_operator_closed(cfg, formula)
        except NotApplicable:
            continue
        cert.add(CheckResult(f"closed-form/{formula}", "closed-form-agreement",
                             G == F))
    return cert
