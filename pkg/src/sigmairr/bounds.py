"""Catalog of published inequality/identity claims, evaluated exactly.

Every catalog entry pairs formulas with a hypothesis predicate.  Evaluation
is exact rational arithmetic; the two entries involving square roots are
decided through directed rational intervals (64 fractional bits, escalated
once to 128) and only when the interval separates the sides.  A report is
always produced for well-formed input: hypothesis failures, including
division-by-zero guards, gate the verdict as non-probative instead of
crashing.

Several claims are false on ordinary trees.  That is expected; the contract
here is faithful evaluation and reporting, not the truth of the claims.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .errors import DomainError, InputError
from .graphs import Graph, complement
from .indices import albertson, sigma, sigma_closed_form, zagreb_m1
from .sequences import Convention, DegreeSequenceView, DerivedSequences, derive

_BITS_FIRST = 64
_BITS_ESCALATED = 128


# ---------------------------------------------------------------------------
# Directed rational intervals (for square/geometric roots)

@dataclass(frozen=True)
class RVal:
    """A real value boxed between two rationals; lo == hi means exact."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @staticmethod
    def of(x) -> "RVal":
        f = Fraction(x)
        return RVal(f, f)

    def __add__(self, other: "RVal") -> "RVal":
        return RVal(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RVal") -> "RVal":
        return RVal(self.lo - other.hi, self.hi - other.lo)

    def scale(self, c: Fraction) -> "RVal":
        """Multiply by an exact scalar."""
        if c >= 0:
            return RVal(self.lo * c, self.hi * c)
        return RVal(self.hi * c, self.lo * c)

    def square_nonneg(self) -> "RVal":
        if self.lo < 0:
            raise DomainError("square_nonneg requires a non-negative interval")
        return RVal(self.lo * self.lo, self.hi * self.hi)


def _integer_nth_root(value: int, degree: int) -> int:
    """floor(value ** (1/degree)) for value >= 0, degree >= 1, exactly."""
    if value < 0:
        raise DomainError("nth root of negative integer")
    if value == 0 or degree == 1:
        return value if degree == 1 else 0
    if degree == 2:
        return math.isqrt(value)
    guess = 1 << -(-value.bit_length() // degree)  # >= true root
    while True:
        nxt = ((degree - 1) * guess + value // guess ** (degree - 1)) // degree
        if nxt >= guess:
            break
        guess = nxt
    while guess**degree > value:
        guess -= 1
    while (guess + 1) ** degree <= value:
        guess += 1
    return guess


def sqrt_rval(x: Fraction, bits: int) -> RVal:
    """sqrt(x) boxed to 2^-bits, exact when x is a perfect rational square."""
    if x < 0:
        raise DomainError("sqrt of negative value")
    p, q = x.numerator, x.denominator
    n = p * q
    root = math.isqrt(n)
    if root * root == n:
        return RVal.of(Fraction(root, q))
    scale = 1 << bits
    s = math.isqrt(n * scale * scale)
    return RVal(Fraction(s, q * scale), Fraction(s + 1, q * scale))


def nth_root_rval(x: Fraction, degree: int, bits: int) -> RVal:
    """x ** (1/degree) boxed to 2^-bits, exact on perfect powers."""
    if x < 0:
        raise DomainError("root of negative value")
    p, q = x.numerator, x.denominator
    n = p * q ** (degree - 1)  # x^(1/deg) == n^(1/deg) / q
    root = _integer_nth_root(n, degree)
    if root**degree == n:
        return RVal.of(Fraction(root, q))
    scale = 1 << bits
    s = _integer_nth_root(n * scale**degree, degree)
    return RVal(Fraction(s, q * scale), Fraction(s + 1, q * scale))


def _compare(lhs: RVal, rhs: RVal, relation: str) -> Optional[bool]:
    """Decide relation(lhs, rhs); None when the intervals do not separate."""
    if lhs.exact and rhs.exact:
        a, b = lhs.lo, rhs.lo
        return {
            "<=": a <= b,
            "<": a < b,
            ">=": a >= b,
            ">": a > b,
            "==": a == b,
        }[relation]
    if relation in ("<=", "<"):
        if lhs.hi < rhs.lo or (relation == "<=" and lhs.hi <= rhs.lo):
            return True
        if lhs.lo > rhs.hi or (relation == "<" and lhs.lo >= rhs.hi):
            return False
        return None
    if relation in (">=", ">"):
        flipped = _compare(rhs, lhs, "<=" if relation == ">=" else "<")
        return flipped
    # Equality between an exact and a strictly-boxed value cannot be decided
    # by intervals alone; the catalog only uses '==' on exact entries.
    return None


# ---------------------------------------------------------------------------
# Parameters

def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x < 4:
        return True
    if x % 2 == 0:
        return False
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def ceil_log2(x: int) -> int:
    if x < 1:
        raise DomainError("ceil_log2 requires x >= 1")
    return (x - 1).bit_length()


@dataclass(frozen=True)
class BoundParams:
    """Free parameters of the catalog.

    ``alpha``/``beta`` have no published semantics; when unset they default
    to ceil(log2(max_degree + 1)) of the evaluated input.  ``eta`` defaults
    to ceil(2*n*max_degree/m).  ``eta1`` must lie in (2, 4]; when unset it
    is 2^n/(n-eta)! clamped into [2.01, 4] (clamping is recorded on the
    report).  ``t`` is exposed for exploration only; no catalog entry
    consumes it.  ``strict_max_degree_window`` switches the B10 gate from
    the statement form (max_degree >= 4) to the stricter proof window
    4 <= max_degree - 3 <= n/4.
    """

    alpha: Optional[int] = None
    beta: Optional[int] = None
    p: int = 2
    eta: Optional[int] = None
    eta1: Optional[Fraction] = None
    t: int = 3
    strict_max_degree_window: bool = False

    def __post_init__(self) -> None:
        if self.alpha is not None and self.alpha < 0:
            raise InputError("alpha must be >= 0")
        if self.beta is not None and self.beta < 0:
            raise InputError("beta must be >= 0")
        if not _is_prime(self.p):
            raise InputError(f"p must be prime, got {self.p}")
        if self.eta is not None and self.eta < 1:
            raise InputError("eta must be a positive integer")
        if self.eta1 is not None:
            e1 = Fraction(self.eta1)
            if not (2 < e1 <= 4):
                raise InputError("eta1 must lie in (2, 4]")
            object.__setattr__(self, "eta1", e1)
        if self.t <= 2:
            raise InputError("t must be an integer > 2")

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "p": self.p,
            "eta": self.eta,
            "eta1": None if self.eta1 is None else str(self.eta1),
            "t": self.t,
            "strict_max_degree_window": self.strict_max_degree_window,
        }


_ETA1_FLOOR = Fraction(201, 100)


def resolve_parameters(params: BoundParams, view: DegreeSequenceView) -> tuple[dict, dict[str, list[str]]]:
    """Fill parameter defaults from the input; returns (values, notes per param)."""
    notes: dict[str, list[str]] = {}
    n = view.n
    m = view.m
    delta = view.max_entry
    alpha = params.alpha if params.alpha is not None else ceil_log2(delta + 1)
    beta = params.beta if params.beta is not None else ceil_log2(delta + 1)
    if params.alpha is None:
        notes.setdefault("alpha", []).append(
            "alpha defaulted to ceil(log2(max_degree+1)); no published semantics"
        )
    if params.beta is None:
        notes.setdefault("beta", []).append(
            "beta defaulted to ceil(log2(max_degree+1)); no published semantics"
        )
    if params.eta is not None:
        eta = params.eta
    else:
        eta = math.ceil(Fraction(2 * n * delta) / m)
    if params.eta1 is not None:
        eta1 = params.eta1
    else:
        gap = n - eta
        if gap < 0:
            raw = None
        elif gap > 20 and n * math.log(2) - math.lgamma(gap + 1) < -8:
            # the exact value is astronomically below 2; skip the factorial
            raw = Fraction(0)
        else:
            raw = Fraction(2**n, math.factorial(gap))
        if raw is None:
            eta1 = Fraction(4)
            notes.setdefault("eta1", []).append(
                "eta1 source expression undefined (eta > n); clamped to 4"
            )
        elif raw < _ETA1_FLOOR:
            eta1 = _ETA1_FLOOR
            notes.setdefault("eta1", []).append(
                "eta1 clamped up to 2.01 (source expression below 2)"
            )
        elif raw > 4:
            eta1 = Fraction(4)
            notes.setdefault("eta1", []).append(
                "eta1 clamped down to 4 (source expression above 4)"
            )
        else:
            eta1 = raw
    values = {
        "alpha": alpha,
        "beta": beta,
        "p": params.p,
        "eta": eta,
        "eta1": eta1,
        "t": params.t,
        "strict_max_degree_window": params.strict_max_degree_window,
    }
    return values, notes


# ---------------------------------------------------------------------------
# Input bundle

@dataclass(frozen=True)
class BoundInput:
    """Everything a catalog entry may reference, with provenance recorded.

    ``irr_value`` and ``sigma_value`` are required by most entries; build
    via :meth:`from_graph` (direct computation) or :meth:`from_table_row`
    (printed columns + closed form) or supply them explicitly.
    """

    view: DegreeSequenceView
    derived: Optional[DerivedSequences]
    irr_value: Optional[int]
    sigma_value: Optional[int]
    cube_sum: int
    params: BoundParams = field(default_factory=BoundParams)
    graph: Optional[Graph] = None
    label: str = ""

    @classmethod
    def from_graph(cls, g: Graph, params: BoundParams = BoundParams(), label: str = "") -> "BoundInput":
        view = DegreeSequenceView.from_graph(g, Convention.STANDARD)
        return cls(
            view=view,
            derived=derive(view) if view.k >= 2 else None,
            irr_value=albertson(g),
            sigma_value=sigma(g),
            cube_sum=view.cube_sum,
            params=params,
            graph=g,
            label=label or f"graph n={g.vertex_count} m={g.edge_count}",
        )

    @classmethod
    def from_view(
        cls,
        view: DegreeSequenceView,
        irr_value: Optional[int] = None,
        sigma_value: Optional[int] = None,
        params: BoundParams = BoundParams(),
        graph: Optional[Graph] = None,
        label: str = "",
    ) -> "BoundInput":
        if sigma_value is None and view.convention is Convention.PAPER_TABLE and view.k >= 2:
            sigma_value = sigma_closed_form(view)
        return cls(
            view=view,
            derived=derive(view) if view.k >= 2 else None,
            irr_value=irr_value,
            sigma_value=sigma_value,
            cube_sum=view.cube_sum,
            params=params,
            graph=graph,
            label=label or f"sequence {view.entries} ({view.convention.value})",
        )

    @classmethod
    def from_table_row(cls, table_id: int, row_index: int, params: BoundParams = BoundParams()) -> "BoundInput":
        from .stats_tables import table_row_view  # local import: stats embeds the data

        view, irr_value = table_row_view(table_id, row_index)
        return cls.from_view(
            view,
            irr_value=irr_value,
            params=params,
            label=f"table {table_id} row {row_index + 1}",
        )


# ---------------------------------------------------------------------------
# Reports

@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    label: str
    hypotheses_met: bool
    failed_hypotheses: tuple[str, ...]
    relation: str
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    lhs_exact: bool
    rhs_exact: bool
    holds: Optional[bool]
    margin: Optional[Fraction]
    params_used: Mapping[str, object]
    notes: tuple[str, ...] = ()
    indeterminate: bool = False

    def fmt_value(self, value: Optional[Fraction], exact: bool) -> str:
        if value is None:
            return ""
        if exact:
            return str(value)
        return f"{float(value):.12g}"

    def to_csv_row(self) -> list[str]:
        params = ";".join(f"{k}={v}" for k, v in sorted(self.params_used.items()))
        return [
            self.bound_id,
            str(self.hypotheses_met).lower(),
            self.fmt_value(self.lhs, self.lhs_exact),
            self.fmt_value(self.rhs, self.rhs_exact),
            self.relation,
            "" if self.holds is None else str(self.holds).lower(),
            self.fmt_value(self.margin, self.lhs_exact and self.rhs_exact),
            params,
        ]

    def to_json_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "label": self.label,
            "hypotheses_met": self.hypotheses_met,
            "failed_hypotheses": list(self.failed_hypotheses),
            "relation": self.relation,
            "lhs": None if self.lhs is None else self.fmt_value(self.lhs, self.lhs_exact),
            "rhs": None if self.rhs is None else self.fmt_value(self.rhs, self.rhs_exact),
            "lhs_decimal": None if self.lhs is None else float(self.lhs),
            "rhs_decimal": None if self.rhs is None else float(self.rhs),
            "lhs_exact": self.lhs_exact,
            "rhs_exact": self.rhs_exact,
            "holds": self.holds,
            "margin": None if self.margin is None else self.fmt_value(self.margin, self.lhs_exact and self.rhs_exact),
            "params": {k: str(v) for k, v in sorted(self.params_used.items())},
            "notes": list(self.notes),
            "indeterminate": self.indeterminate,
        }


CSV_HEADER = ["bound_id", "hypotheses_met", "lhs", "rhs", "relation", "holds", "margin", "params"]


# ---------------------------------------------------------------------------
# Catalog

@dataclass(frozen=True)
class BoundSpec:
    bound_id: str
    title: str
    relation: str
    requires: frozenset[str]
    # hypothesis -> (failed descriptions, computable); lhs/rhs evaluated at a
    # bit precision, returning RVal.
    hypothesis: Callable[["_Ctx"], tuple[list[str], bool]]
    lhs: Callable[["_Ctx", int], RVal]
    rhs: Callable[["_Ctx", int], RVal]
    extra_notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class _Ctx:
    """Resolved symbols an entry's formulas may reference."""

    n: int
    m: Fraction
    max_degree: int
    min_degree: int
    mean_degree: Fraction
    entries: tuple[int, ...]
    cube_sum: int
    derived: Optional[DerivedSequences]
    irr: Optional[int]
    sig: Optional[int]
    graph: Optional[Graph]
    alpha: int
    beta: int
    p: int
    eta: int
    eta1: Fraction
    strict_window: bool


def _floor(x: Fraction) -> int:
    return math.floor(x)


def _ceil(x: Fraction) -> int:
    return math.ceil(x)


def _exact(value) -> RVal:
    return RVal.of(value)


def _sigma_lhs(ctx: _Ctx, bits: int) -> RVal:
    return _exact(ctx.sig)


def _irr_over_max_degree_cube(ctx: _Ctx) -> Fraction:
    return Fraction(2 * ctx.irr, ctx.max_degree * (ctx.max_degree - 1) ** 2)


def _hyp_none(ctx: _Ctx) -> tuple[list[str], bool]:
    return [], True


def _hyp_b1(ctx: _Ctx) -> tuple[list[str], bool]:
    if ctx.max_degree < 2:
        return ["max_degree*(max_degree-1)^2 is zero (max degree < 2)"], False
    return [], True


def _hyp_b2a(ctx: _Ctx) -> tuple[list[str], bool]:
    failed = [] if ctx.max_degree <= 20 else ["max degree exceeds 20"]
    return failed, True


def _hyp_b2b(ctx: _Ctx) -> tuple[list[str], bool]:
    failed = [] if ctx.max_degree > 3 else ["max degree not above 3"]
    return failed, True


def _hyp_b3(ctx: _Ctx) -> tuple[list[str], bool]:
    if ctx.derived.last_half_sum == ctx.derived.last_half_diff:
        return ["last half-sum equals last half-difference (division by zero)"], False
    return [], True


def _hyp_b5(ctx: _Ctx) -> tuple[list[str], bool]:
    der = ctx.derived
    if der.last_half_sum == der.first_half_sum:
        return ["first and last half-sums coincide (division by zero)"], False
    mid = der.max_half_sum * (der.last_half_sum - der.first_half_sum) + der.max_half_diff * (
        der.last_half_diff - der.first_half_diff
    )
    failed = []
    if not ctx.n <= mid:
        failed.append("order exceeds the half-sum/half-difference combination")
    if not mid < ctx.irr:
        failed.append("half-sum/half-difference combination not below the Albertson value")
    return failed, True


def _hyp_b6(ctx: _Ctx) -> tuple[list[str], bool]:
    if ctx.derived.mean_half_diff == 0:
        return ["mean half-difference is zero (regular sequence; division by zero)"], False
    return [], True


def _hyp_b10(ctx: _Ctx) -> tuple[list[str], bool]:
    delta = ctx.max_degree
    failed = []
    computable = delta != 3
    if ctx.strict_window:
        if not 4 <= delta - 3:
            failed.append("max_degree - 3 below 4 (strict window)")
        if not Fraction(delta - 3) <= Fraction(ctx.n, 4):
            failed.append("max_degree - 3 above n/4 (strict window)")
    else:
        if delta < 4:
            failed.append("max degree below 4")
    if not computable:
        failed.append("max degree equals 3 (division by zero)")
    return failed, computable


def _hyp_b11(ctx: _Ctx) -> tuple[list[str], bool]:
    if ctx.n == 1:
        return ["order 1 (division by zero)"], False
    return [], True


def _hyp_b12(ctx: _Ctx) -> tuple[list[str], bool]:
    failed = []
    computable = True
    if ctx.eta == ctx.n:
        failed.append("eta equals n (division by zero)")
        computable = False
    if ctx.mean_degree == ctx.n:
        failed.append("mean degree equals n (division by zero)")
        computable = False
    return failed, computable


def _hyp_b13(ctx: _Ctx) -> tuple[list[str], bool]:
    failed = []
    computable = True
    if ctx.eta == ctx.n:
        failed.append("eta equals n (division by zero)")
        computable = False
    if Fraction(ctx.eta) == ctx.mean_degree:
        failed.append("eta equals the mean degree (division by zero)")
        computable = False
    return failed, computable


def _hyp_sorted_desc(ctx: _Ctx) -> tuple[list[str], bool]:
    entries = ctx.entries
    if all(a >= b for a, b in zip(entries, entries[1:])):
        return [], True
    return ["entries not sorted non-increasing (stated hypothesis)"], True


def _b2a_rhs(ctx: _Ctx, bits: int) -> RVal:
    return _exact(_floor(2 * ctx.m / ctx.n) + _ceil(Fraction(2 * ctx.n) / ctx.m) + 2**ctx.alpha)


def _b2b_rhs(ctx: _Ctx, bits: int) -> RVal:
    return _exact(_ceil(Fraction(2 * ctx.n) / ctx.m) + 2**ctx.beta)


def _b3_tail(ctx: _Ctx) -> Fraction:
    der = ctx.derived
    gap = der.last_half_sum - der.last_half_diff
    spread = (der.max_half_sum - der.max_half_diff) ** 2
    return Fraction(_floor(Fraction(ctx.n - 2) / gap)) + ctx.max_degree * spread


def _b3_rhs(ctx: _Ctx, bits: int) -> RVal:
    return _exact(ctx.irr + _b3_tail(ctx))


def _b4_rhs(ctx: _Ctx, bits: int) -> RVal:
    return _exact(ctx.cube_sum + ctx.irr + _b3_tail(ctx))


def _b5_rhs(ctx: _Ctx, bits: int) -> RVal:
    der = ctx.derived
    span = der.last_half_sum - der.first_half_sum
    inner = Fraction(_floor(Fraction(2 * ctx.n) / span) + _ceil(2 * ctx.m / ctx.n))
    return _exact(ctx.irr + inner / ctx.n + 4 * ctx.n * ctx.max_degree)


def _b6_rhs(ctx: _Ctx, bits: int) -> RVal:
    der = ctx.derived
    root = sqrt_rval(ctx.mean_degree * ctx.cube_sum, bits)
    stair = _floor(Fraction(2 * ctx.n) / der.mean_half_sum) + _ceil(2 * ctx.m / der.mean_half_diff)
    shift = Fraction((ctx.n - ctx.max_degree) ** 2 - stair)
    return root + RVal.of(shift)


def t1_staircase(n: int, m: Fraction, delta: int) -> int:
    """floor((3n+1)/2) + ceil((3m+1)/2) + floor((3*delta+2n)/4)."""
    return (
        _floor(Fraction(3 * n + 1, 2))
        + _ceil((3 * m + 1) / 2)
        + _floor(Fraction(3 * delta + 2 * n, 4))
    )


def _b7_rhs(ctx: _Ctx, bits: int) -> RVal:
    t1 = t1_staircase(ctx.n, ctx.m, ctx.max_degree)
    return _exact(Fraction(1, 3) * ctx.mean_degree**2 * t1 - ctx.cube_sum + ctx.irr)


def _b8_rhs(ctx: _Ctx, bits: int) -> RVal:
    body = ctx.n**3 + ctx.n + ctx.max_degree * (ctx.max_degree - 1) ** 2
    return _exact(Fraction(body) / (2 * ctx.mean_degree))


def _b9_rhs(ctx: _Ctx, bits: int) -> RVal:
    return _exact(2**ctx.p * (ctx.irr + 2 * ctx.m) + ctx.max_degree * (ctx.max_degree - 1) ** 2)


def _b10_rhs(ctx: _Ctx, bits: int) -> RVal:
    product = _floor(Fraction(3 * ctx.n**2, 4)) * _ceil(Fraction(ctx.n**2, 4))
    return _exact(Fraction(product) / (2 * (ctx.max_degree - 3)))


def _b11_rhs(ctx: _Ctx, bits: int) -> RVal:
    head = _floor(Fraction(2 * ctx.n**2) / (3 * ctx.mean_degree))
    tail = 2**ctx.eta * (ctx.m - ctx.max_degree) ** 2 / (5 * Fraction(ctx.n - 1) ** 3)
    return _exact(head + tail)


def _b12_rhs(ctx: _Ctx, bits: int) -> RVal:
    n, eta, lam = ctx.n, ctx.eta, ctx.mean_degree
    gap = n - eta
    value = (
        4 * n
        - 2 * eta * lam
        - gap * Fraction(_floor(Fraction(n) / gap)) ** 2
        + gap * _floor(Fraction(n) / (n - lam))
    )
    return _exact(value)


def _b13_rhs(ctx: _Ctx, bits: int) -> RVal:
    n, eta, lam, eta1 = ctx.n, ctx.eta, ctx.mean_degree, ctx.eta1
    value = (
        eta1 * _floor(Fraction(n) / (n - eta))
        + eta1 * _ceil(Fraction(n) / (eta - lam))
        + ctx.cube_sum
    )
    return _exact(value)


def _b14_lhs(ctx: _Ctx, bits: int) -> RVal:
    g = ctx.graph
    return _exact(sigma(g) + sigma(complement(g)))


def _b14_rhs(ctx: _Ctx, bits: int) -> RVal:
    g = ctx.graph
    return _exact(g.vertex_count * zagreb_m1(g) - 4 * g.edge_count**2)


def _b15a_lhs(ctx: _Ctx, bits: int) -> RVal:
    s = sum(ctx.entries)
    return _exact(s * (ctx.entries[0] + ctx.entries[-1]))


def _b15a_rhs(ctx: _Ctx, bits: int) -> RVal:
    sq = sum(d * d for d in ctx.entries)
    return _exact(sq + len(ctx.entries) * ctx.entries[0] * ctx.entries[-1])


def _b15b_lhs(ctx: _Ctx, bits: int) -> RVal:
    # (sum sqrt(d_i))^2 = sum d_i + 2 * sum_{i<j} sqrt(d_i d_j); the pairwise
    # form keeps perfect-square products exact (all-equal entries in particular).
    k = len(ctx.entries)
    total = sum(ctx.entries)
    square = RVal.of(total)
    for i in range(k):
        for j in range(i + 1, k):
            square = square + sqrt_rval(Fraction(ctx.entries[i] * ctx.entries[j]), bits).scale(Fraction(2))
    return RVal.of(k * total) - square


def _b15b_rhs(ctx: _Ctx, bits: int) -> RVal:
    k = len(ctx.entries)
    product = math.prod(ctx.entries)
    geomean = nth_root_rval(Fraction(product), k, bits)
    mean = Fraction(sum(ctx.entries), k)
    return (RVal.of(mean) - geomean).scale(Fraction(k * (k - 1)))


_SEQ = frozenset({"view"})
_SEQ_D = frozenset({"view", "derived"})


def _spec(bound_id, title, relation, requires, hypothesis, lhs, rhs, notes=()):
    return BoundSpec(bound_id, title, relation, frozenset(requires), hypothesis, lhs, rhs, tuple(notes))


CATALOG: dict[str, BoundSpec] = {
    spec.bound_id: spec
    for spec in (
        _spec(
            "B1a", "irregularity ratio is positive: 2*irr/(D(D-1)^2) > 0", ">",
            {"view", "irr"}, _hyp_b1,
            lambda ctx, bits: _exact(_irr_over_max_degree_cube(ctx)),
            lambda ctx, bits: _exact(0),
            notes=("per-instance reading of the extremal Albertson value",),
        ),
        _spec(
            "B1b", "irregularity ratio below one: 2*irr/(D(D-1)^2) < 1", "<",
            {"view", "irr"}, _hyp_b1,
            lambda ctx, bits: _exact(_irr_over_max_degree_cube(ctx)),
            lambda ctx, bits: _exact(1),
            notes=("per-instance reading of the extremal Albertson value",),
        ),
        _spec(
            "B2a", "irr > floor(2m/n) + ceil(2n/m) + 2^alpha (max degree <= 20)", ">",
            {"view", "irr"}, _hyp_b2a,
            lambda ctx, bits: _exact(ctx.irr), _b2a_rhs,
            notes=("per-instance reading of the extremal Albertson value",),
        ),
        _spec(
            "B2b", "irr < ceil(2n/m) + 2^beta (max degree > 3)", "<",
            {"view", "irr"}, _hyp_b2b,
            lambda ctx, bits: _exact(ctx.irr), _b2b_rhs,
            notes=("per-instance reading of the extremal Albertson value",),
        ),
        _spec(
            "B3", "sigma >= irr + floor((n-2)/(a_last-t_last)) + D*(maxA-maxR)^2", ">=",
            {"view", "derived", "irr", "sigma"}, _hyp_b3, _sigma_lhs, _b3_rhs,
        ),
        _spec(
            "B4", "sigma <= cube_sum + irr + floor((n-2)/(a_last-t_last)) + D*(maxA-maxR)^2", "<=",
            {"view", "derived", "irr", "sigma"}, _hyp_b3, _sigma_lhs, _b4_rhs,
        ),
        _spec(
            "B5", "sigma >= irr + (floor(2n/(a_last-a_first)) + ceil(2m/n))/n + 4nD", ">=",
            {"view", "derived", "irr", "sigma"}, _hyp_b5, _sigma_lhs, _b5_rhs,
        ),
        _spec(
            "B6", "sigma >= sqrt(mean_degree*cube_sum) - (floor(2n/meanA) + ceil(2m/meanR)) + (n-D)^2", ">=",
            {"view", "derived", "sigma"}, _hyp_b6, _sigma_lhs, _b6_rhs,
        ),
        _spec(
            "B7", "sigma >= (1/3)*mean_degree^2*T1 - cube_sum + irr", ">=",
            {"view", "irr", "sigma"}, _hyp_none, _sigma_lhs, _b7_rhs,
        ),
        _spec(
            "B8", "sigma > (n^3 + n + D(D-1)^2) / (2*mean_degree)", ">",
            {"view", "sigma"}, _hyp_none, _sigma_lhs, _b8_rhs,
            notes=("bare published average read as the mean of the degree entries",),
        ),
        _spec(
            "B9", "sigma <= 2^p(irr + 2m) + D(D-1)^2", "<=",
            {"view", "irr", "sigma"}, _hyp_none, _sigma_lhs, _b9_rhs,
        ),
        _spec(
            "B10", "sigma <= floor(3n^2/4)*ceil(n^2/4) / (2(D-3))", "<=",
            {"view", "sigma"}, _hyp_b10, _sigma_lhs, _b10_rhs,
            notes=("per-instance reading of the class maximum",),
        ),
        _spec(
            "B11", "sigma <= floor(2n^2/(3*mean_degree)) + 2^eta(m-D)^2/(5(n-1)^3)", "<=",
            {"view", "sigma"}, _hyp_b11, _sigma_lhs, _b11_rhs,
        ),
        _spec(
            "B12", "sigma > 4n - 2*eta*mean - (n-eta)*floor(n/(n-eta))^2 + (n-eta)*floor(n/(n-mean))", ">",
            {"view", "sigma"}, _hyp_b12, _sigma_lhs, _b12_rhs,
        ),
        _spec(
            "B13", "sigma <= eta1*floor(n/(n-eta)) + eta1*ceil(n/(eta-mean)) + cube_sum", "<=",
            {"view", "sigma"}, _hyp_b13, _sigma_lhs, _b13_rhs,
        ),
        _spec(
            "B14", "sigma(G) + sigma(complement(G)) == n*M1 - 4m^2", "==",
            {"graph"}, _hyp_none, _b14_lhs, _b14_rhs,
        ),
        _spec(
            "B15a", "(sum d)(d_first + d_last) >= sum d^2 + k*d_first*d_last", ">=",
            {"view"}, _hyp_sorted_desc, _b15a_lhs, _b15a_rhs,
        ),
        _spec(
            "B15b", "k*sum(d) - (sum sqrt(d))^2 <= k(k-1)(mean - geometric mean)", "<=",
            {"view"}, _hyp_sorted_desc, _b15b_lhs, _b15b_rhs,
        ),
    )
}


def _catalog_sort_key(bound_id: str) -> tuple[int, str]:
    digits = "".join(ch for ch in bound_id if ch.isdigit())
    return (int(digits), bound_id)


BOUND_IDS: tuple[str, ...] = tuple(sorted(CATALOG, key=_catalog_sort_key))


def expand_bound_id(bound_id: str) -> tuple[str, ...]:
    """Resolve an id to catalog entries; base ids expand to their parts."""
    if bound_id in CATALOG:
        return (bound_id,)
    parts = tuple(b for b in BOUND_IDS if b.startswith(bound_id) and b[len(bound_id):].isalpha())
    if bound_id and parts:
        return parts
    known = ", ".join(BOUND_IDS)
    raise InputError(f"unknown bound id {bound_id!r} (known: {known})")


# ---------------------------------------------------------------------------
# Evaluation

_FIELD_MISSING = {
    "irr": lambda b: b.irr_value is None,
    "sigma": lambda b: b.sigma_value is None,
    "derived": lambda b: b.derived is None,
    "graph": lambda b: b.graph is None,
    "view": lambda b: False,
}


def missing_fields(spec: BoundSpec, binput: BoundInput) -> list[str]:
    return [f for f in sorted(spec.requires) if _FIELD_MISSING[f](binput)]


def evaluate_bound(bound_id: str, binput: BoundInput) -> BoundReport:
    """Evaluate one catalog entry; raises InputError on missing fields."""
    if bound_id not in CATALOG:
        raise InputError(f"unknown bound id {bound_id!r}")
    spec = CATALOG[bound_id]
    missing = missing_fields(spec, binput)
    if missing:
        raise InputError(f"{bound_id} needs input field(s): {', '.join(missing)}")

    resolved, param_notes = resolve_parameters(binput.params, binput.view)
    ctx = _Ctx(
        n=binput.view.n,
        m=binput.view.m,
        max_degree=binput.view.max_entry,
        min_degree=binput.view.min_entry,
        mean_degree=binput.view.mean_entry,
        entries=binput.view.entries,
        cube_sum=binput.cube_sum,
        derived=binput.derived,
        irr=binput.irr_value,
        sig=binput.sigma_value,
        graph=binput.graph,
        alpha=resolved["alpha"],
        beta=resolved["beta"],
        p=resolved["p"],
        eta=resolved["eta"],
        eta1=resolved["eta1"],
        strict_window=binput.params.strict_max_degree_window,
    )
    failed, computable = spec.hypothesis(ctx)
    relevant = {
        "B2a": ("alpha",),
        "B2b": ("beta",),
        "B9": ("p",),
        "B10": ("strict_max_degree_window",),
        "B11": ("eta",),
        "B12": ("eta",),
        "B13": ("eta", "eta1"),
    }.get(bound_id, ())
    notes = list(spec.extra_notes)
    for param in relevant:
        notes.extend(param_notes.get(param, []))

    lhs_val: Optional[Fraction] = None
    rhs_val: Optional[Fraction] = None
    lhs_exact = rhs_exact = True
    holds: Optional[bool] = None
    margin: Optional[Fraction] = None
    indeterminate = False

    if computable:
        lhs = spec.lhs(ctx, _BITS_FIRST)
        rhs = spec.rhs(ctx, _BITS_FIRST)
        holds = _compare(lhs, rhs, spec.relation)
        if holds is None and not (lhs.exact and rhs.exact):
            lhs = spec.lhs(ctx, _BITS_ESCALATED)
            rhs = spec.rhs(ctx, _BITS_ESCALATED)
            holds = _compare(lhs, rhs, spec.relation)
            if holds is None:
                indeterminate = True
                notes.append("indeterminate_at_precision: sides not separated at 128 bits")
                holds = _compare(RVal.of(lhs.mid), RVal.of(rhs.mid), spec.relation)
        lhs_val, rhs_val = lhs.mid, rhs.mid
        lhs_exact, rhs_exact = lhs.exact, rhs.exact
        if spec.relation in ("<=", "<"):
            margin = rhs_val - lhs_val
        elif spec.relation in (">=", ">"):
            margin = lhs_val - rhs_val
        else:
            margin = -abs(lhs_val - rhs_val)
    else:
        notes.append("not computable: " + "; ".join(failed))

    params_used = {k: resolved[k] for k in relevant}

    return BoundReport(
        bound_id=bound_id,
        label=binput.label,
        hypotheses_met=not failed,
        failed_hypotheses=tuple(failed),
        relation=spec.relation,
        lhs=lhs_val,
        rhs=rhs_val,
        lhs_exact=lhs_exact,
        rhs_exact=rhs_exact,
        holds=holds,
        margin=margin,
        params_used=params_used,
        notes=tuple(notes),
        indeterminate=indeterminate,
    )


def evaluate_all(binput: BoundInput) -> list[BoundReport]:
    """One report per catalog entry whose required inputs are present."""
    reports = []
    for bound_id in BOUND_IDS:
        if missing_fields(CATALOG[bound_id], binput):
            continue
        reports.append(evaluate_bound(bound_id, binput))
    return reports
