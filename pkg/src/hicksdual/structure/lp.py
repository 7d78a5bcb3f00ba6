# Description: Exact rational linear programming over price systems.
"""Linear systems over prices, an exact simplex, slack maximisation and Farkas certificates.

Notes:
- The solver is a dense dictionary-form simplex over ``Fraction`` with Bland's rule, so it
  terminates on degenerate systems and never rounds.
- Free variables are split as ``p = p+ - p-``; phase one uses a single auxiliary variable
  entering on the most infeasible row.
- Strict inequalities are handled by maximising a common slack ``eps <= cap``: a strict
  system is feasible iff the optimal slack is positive.
- Farkas multipliers are themselves found by a feasibility LP and rechecked exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from hicksdual.core.numbers import RationalLike, as_rational, format_rational

logger = logging.getLogger(__name__)

Sense = Literal["<=", "=", "<"]
ZERO = Fraction(0)


@dataclass(frozen=True)
class Constraint:
    """``coefficients . p  (sense)  bound``."""

    coefficients: tuple[Fraction, ...]
    sense: Sense
    bound: Fraction
    label: str = ""

    def lhs(self, point: Sequence[Fraction]) -> Fraction:
        return sum((a * x for a, x in zip(self.coefficients, point)), ZERO)

    def holds(self, point: Sequence[Fraction]) -> bool:
        value = self.lhs(point)
        if self.sense == "<=":
            return value <= self.bound
        if self.sense == "<":
            return value < self.bound
        return value == self.bound

    def describe(self, names: Sequence[str]) -> str:
        terms = []
        for a, name in zip(self.coefficients, names):
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            coef = "" if mag == 1 else f"{format_rational(mag)}*"
            terms.append(f"{sign} {coef}{name}")
        lhs = " ".join(terms).lstrip("+ ") if terms else "0"
        if lhs.startswith("- "):
            lhs = "-" + lhs[2:]
        return f"{lhs} {self.sense} {format_rational(self.bound)}"


def _row(coefficients: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(as_rational(a) for a in coefficients)


def le(coefficients: Sequence[RationalLike], bound: RationalLike, label: str = "") -> Constraint:
    return Constraint(_row(coefficients), "<=", as_rational(bound), label)


def ge(coefficients: Sequence[RationalLike], bound: RationalLike, label: str = "") -> Constraint:
    return Constraint(tuple(-a for a in _row(coefficients)), "<=", -as_rational(bound), label)


def lt(coefficients: Sequence[RationalLike], bound: RationalLike, label: str = "") -> Constraint:
    return Constraint(_row(coefficients), "<", as_rational(bound), label)


def gt(coefficients: Sequence[RationalLike], bound: RationalLike, label: str = "") -> Constraint:
    return Constraint(tuple(-a for a in _row(coefficients)), "<", -as_rational(bound), label)


def eq(coefficients: Sequence[RationalLike], bound: RationalLike, label: str = "") -> Constraint:
    return Constraint(_row(coefficients), "=", as_rational(bound), label)


@dataclass(frozen=True)
class LinearSystem:
    """A finite system of linear constraints over ``dimension`` free rational unknowns."""

    dimension: int
    constraints: tuple[Constraint, ...] = ()
    variables: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        constraints = tuple(self.constraints)
        object.__setattr__(self, "constraints", constraints)
        if not self.variables:
            object.__setattr__(
                self, "variables", tuple(f"p{i + 1}" for i in range(self.dimension))
            )
        if len(self.variables) != self.dimension:
            raise ValueError("one variable name per dimension is required")
        for c in constraints:
            if len(c.coefficients) != self.dimension:
                raise ValueError(
                    f"constraint {c.label or c} has {len(c.coefficients)} coefficients, "
                    f"expected {self.dimension}"
                )

    def extended(self, *more: Constraint) -> LinearSystem:
        return LinearSystem(self.dimension, self.constraints + tuple(more), self.variables)

    @property
    def has_strict(self) -> bool:
        return any(c.sense == "<" for c in self.constraints)

    def weak(self) -> LinearSystem:
        """The closure: strict rows relaxed to weak ones."""
        return LinearSystem(
            self.dimension,
            tuple(
                Constraint(c.coefficients, "<=", c.bound, c.label) if c.sense == "<" else c
                for c in self.constraints
            ),
            self.variables,
        )

    def is_satisfied(self, point: Sequence[Fraction]) -> bool:
        return all(c.holds(point) for c in self.constraints)

    def describe(self) -> list[str]:
        return [c.describe(self.variables) for c in self.constraints]


@dataclass(frozen=True)
class LPResult:
    status: Literal["optimal", "infeasible", "unbounded"]
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


class SimplexTableau:
    """Dictionary ``x_B = b - A x_N``, objective ``z + c . x_N``, all variables >= 0."""

    def __init__(
        self,
        A: list[list[Fraction]],
        b: list[Fraction],
        c: list[Fraction],
    ) -> None:
        self.m = len(A)
        self.n = len(c)
        self.A = [list(row) for row in A]
        self.b = list(b)
        self.c = list(c)
        self.z = ZERO
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        for col in range(self.n):
            self.c[col] -= delta * self.A[i][col]
        self.c[j] = -delta
        self.z += delta * self.b[i]
        row = self.A[i]
        for col in range(self.n):
            row[col] = 1 / piv if col == j else row[col] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f == 0:
                continue
            other = self.A[k]
            for col in range(self.n):
                other[col] = -f / piv if col == j else other[col] - f * row[col]
            self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self) -> str:
        entering = [(self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0]
        if not entering:
            return "optimal"
        _, j = min(entering)
        ratios = [
            (self.b[i] / self.A[i][j], self.b_vars[i], i)
            for i in range(self.m)
            if self.A[i][j] > 0
        ]
        if not ratios:
            return "unbounded"
        _, _, i = min(ratios)
        self.pivot(i, j)
        return "go_on"

    def bland_primal(self) -> str:
        while True:
            status = self.bland_primal_step()
            if status != "go_on":
                return status

    def value_of(self, var: int) -> Fraction:
        if var in self.b_vars:
            return self.b[self.b_vars.index(var)]
        return ZERO

    def drop_column(self, j: int) -> None:
        for row in self.A:
            del row[j]
        del self.c[j]
        del self.nb_vars[j]
        self.n -= 1

    def drop_row(self, i: int) -> None:
        del self.A[i]
        del self.b[i]
        del self.b_vars[i]
        self.m -= 1

    def set_objective(self, costs: dict[int, Fraction]) -> None:
        """Install ``max sum costs[v] * v`` expressed in the current nonbasic variables."""
        self.c = [costs.get(v, ZERO) for v in self.nb_vars]
        self.z = ZERO
        for i, v in enumerate(self.b_vars):
            cv = costs.get(v, ZERO)
            if cv == 0:
                continue
            self.z += cv * self.b[i]
            for col in range(self.n):
                self.c[col] -= cv * self.A[i][col]

    def make_feasible(self) -> bool:
        """Phase one with one auxiliary variable; False iff the dictionary is infeasible."""
        if all(bi >= 0 for bi in self.b):
            return True
        aux = self.n + self.m
        for row in self.A:
            row.append(Fraction(-1))
        self.nb_vars.append(aux)
        self.n += 1
        self.c = [ZERO] * (self.n - 1) + [Fraction(-1)]
        self.z = ZERO
        _, _, worst = min((bi, v, i) for i, (bi, v) in enumerate(zip(self.b, self.b_vars)))
        self.pivot(worst, self.n - 1)
        self.bland_primal()
        if self.z < 0:
            return False
        if aux in self.b_vars:
            r = self.b_vars.index(aux)
            nonzero = [j for j in range(self.n) if self.A[r][j] != 0]
            if nonzero:
                self.pivot(r, nonzero[0])
            else:
                self.drop_row(r)
        if aux in self.nb_vars:
            self.drop_column(self.nb_vars.index(aux))
        return True


def _standard_form(
    system: LinearSystem,
) -> tuple[list[list[Fraction]], list[Fraction]]:
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for con in system.constraints:
        if con.sense == "<":
            raise ValueError("strict constraints need maximize_slack")
        split = [x for a in con.coefficients for x in (a, -a)]
        A.append(split)
        b.append(con.bound)
        if con.sense == "=":
            A.append([-x for x in split])
            b.append(-con.bound)
    return A, b


def solve_lp(
    system: LinearSystem,
    objective: Sequence[RationalLike] | None = None,
    maximize: bool = True,
) -> LPResult:
    """Optimise ``objective . p`` over a weak system (zero objective = feasibility)."""
    n = system.dimension
    obj = [ZERO] * n if objective is None else [as_rational(v) for v in objective]
    if len(obj) != n:
        raise ValueError(f"objective has {len(obj)} entries, expected {n}")
    sign = 1 if maximize else -1
    A, b = _standard_form(system)
    costs = {v: sign * x for v, x in enumerate(x for a in obj for x in (a, -a)) if x != 0}
    tab = SimplexTableau(A, b, [ZERO] * (2 * n))
    if not tab.make_feasible():
        logger.debug("infeasible system (%d rows, %d pivots)", tab.m, tab.pivots)
        return LPResult("infeasible")
    tab.set_objective(costs)
    status = tab.bland_primal()
    point = tuple(tab.value_of(2 * k) - tab.value_of(2 * k + 1) for k in range(n))
    if status == "unbounded":
        return LPResult("unbounded", None, point)
    logger.debug("optimal after %d pivots", tab.pivots)
    return LPResult("optimal", sign * tab.z, point)


def find_point(system: LinearSystem) -> tuple[Fraction, ...] | None:
    """Any point satisfying the system, strict rows included; None if there is none."""
    if system.has_strict:
        result = maximize_slack(system)
        if result.slack is None or result.slack <= 0:
            return None
        return result.point
    result = solve_lp(system)
    return result.point if result.is_optimal else None


@dataclass(frozen=True)
class SlackResult:
    """Optimal common slack of the strict rows; ``slack`` is None if the weak rows fail."""

    slack: Fraction | None
    point: tuple[Fraction, ...] | None

    @property
    def strictly_feasible(self) -> bool:
        return self.slack is not None and self.slack > 0


def maximize_slack(system: LinearSystem, cap: RationalLike = 1) -> SlackResult:
    """Maximise ``eps`` subject to strict rows ``a.p + eps <= b``, weak rows and ``eps <= cap``."""
    n = system.dimension
    rows = []
    for con in system.constraints:
        coefficients = con.coefficients + (Fraction(1) if con.sense == "<" else ZERO,)
        sense: Sense = "<=" if con.sense == "<" else con.sense
        rows.append(Constraint(coefficients, sense, con.bound, con.label))
    rows.append(le([0] * n + [1], cap, "slack cap"))
    lifted = LinearSystem(n + 1, tuple(rows), system.variables + ("eps",))
    result = solve_lp(lifted, [0] * n + [1])
    if not result.is_optimal or result.point is None:
        return SlackResult(None, None)
    return SlackResult(result.value, result.point[:n])


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving a weak system infeasible.

    ``sum lambda_r a_r = 0`` and ``sum lambda_r b_r < 0`` with ``lambda_r >= 0`` on ``<=``
    rows; adding the rows with these weights yields ``0 <= negative``.
    """

    system: LinearSystem
    multipliers: tuple[Fraction, ...]

    def combined_bound(self) -> Fraction:
        return sum(
            (lam * c.bound for lam, c in zip(self.multipliers, self.system.constraints)),
            ZERO,
        )

    def combined_coefficients(self) -> tuple[Fraction, ...]:
        out = [ZERO] * self.system.dimension
        for lam, c in zip(self.multipliers, self.system.constraints):
            if lam:
                for i, a in enumerate(c.coefficients):
                    out[i] += lam * a
        return tuple(out)

    def verify(self) -> bool:
        if len(self.multipliers) != len(self.system.constraints):
            return False
        for lam, c in zip(self.multipliers, self.system.constraints):
            if c.sense == "<" or (c.sense == "<=" and lam < 0):
                return False
        return all(a == 0 for a in self.combined_coefficients()) and self.combined_bound() < 0

    def support(self) -> list[tuple[Fraction, Constraint]]:
        return [(lam, c) for lam, c in zip(self.multipliers, self.system.constraints) if lam]


def farkas_certificate(system: LinearSystem) -> FarkasCertificate | None:
    """Exact infeasibility certificate of a weak system, or None if it is feasible."""
    if system.has_strict:
        raise ValueError("certificates are defined for weak systems only")
    r = len(system.constraints)
    if r == 0:
        return None
    rows: list[Constraint] = []
    for i in range(system.dimension):
        rows.append(eq([c.coefficients[i] for c in system.constraints], 0))
    rows.append(eq([c.bound for c in system.constraints], -1))
    for k, c in enumerate(system.constraints):
        if c.sense == "<=":
            rows.append(le([-1 if q == k else 0 for q in range(r)], 0))
    dual = LinearSystem(r, tuple(rows), tuple(f"lambda{k + 1}" for k in range(r)))
    result = solve_lp(dual)
    if not result.is_optimal or result.point is None:
        return None
    cert = FarkasCertificate(system, result.point)
    if not cert.verify():
        raise AssertionError("Farkas multipliers failed their exact recheck")
    return cert
