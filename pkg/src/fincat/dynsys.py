"""Discrete dynamical systems as actions of the natural numbers, plus a
sampled law checker for user-supplied continuous flows.

A discrete system is a finite carrier with a single where-to-go-next step.
Iterating the step gives one endofunction per exponent; the iterate law
``f^i after f^j = f^(i+j)`` is a theorem, so the checker exists to catch
implementation bugs, not mathematical surprises.  Continuous flows are
checked only at sampled states and times, within an explicit tolerance in
the max norm.
"""

import math
import sys
from dataclasses import dataclass

from .actions import FinMonoid, SetAction
from .errors import EvaluatorError, StructuralError
from .report import Violation, report


class DiscreteDynSys:
    """A finite carrier with a total step endofunction."""

    def __init__(self, carrier, step):
        carrier = tuple(carrier)
        points = set()
        for p in carrier:
            if p in points:
                raise StructuralError(f"duplicate point {p!r}")
            points.add(p)
        step = dict(step)
        for p in carrier:
            q = step.get(p)
            if q is None:
                raise StructuralError(f"no step defined at {p!r}")
            if q not in points:
                raise StructuralError(f"step at {p!r} leaves the carrier ({q!r})")
        if set(step) != points:
            extra = next(p for p in step if p not in points)
            raise StructuralError(f"step defined at undeclared point {extra!r}")
        self.carrier = carrier
        self.step = step

    def iterate(self, n, s):
        """Apply the step ``n`` times to ``s``; zero steps returns ``s``."""
        if s not in self.step:
            raise StructuralError(f"unknown point {s!r}")
        if n < 0:
            raise ValueError("exponent must be a natural number")
        cur = s
        for _ in range(n):
            cur = self.step[cur]
        return cur

    def __eq__(self, other):
        if not isinstance(other, DiscreteDynSys):
            return NotImplemented
        return self.carrier == other.carrier and self.step == other.step

    def __repr__(self):
        return f"DiscreteDynSys({len(self.carrier)} points)"


@dataclass(frozen=True)
class OrbitInfo:
    """Per-point trajectory shape: minimal tail length before the cycle,
    minimal cycle length, and the cycle starting at the landing point."""

    point: str
    preperiod: int
    period: int
    cycle: tuple


def iterate(d, n, s):
    return d.iterate(n, s)


def _step_power_tables(d, max_exp):
    """Function tables of f^0 .. f^max_exp, each built from the previous."""
    tables = [{p: p for p in d.carrier}]
    for _ in range(max_exp):
        prev = tables[-1]
        tables.append({p: d.step[prev[p]] for p in d.carrier})
    return tables


def check_iterate_law(d, max_exp):
    """Verify ``f^i(f^j(s)) = f^(i+j)(s)`` for all points and all exponents up
    to ``max_exp``, using memoised power tables.  A violation means the table
    construction is buggy; the law itself cannot fail."""
    tables = _step_power_tables(d, 2 * max_exp)
    violations = []
    for i in range(max_exp + 1):
        for j in range(max_exp + 1):
            combined = tables[i + j]
            ti, tj = tables[i], tables[j]
            for s in d.carrier:
                if ti[tj[s]] != combined[s]:
                    violations.append(Violation("iterate-law", (i, j, s)))
    return report(violations)


def orbit_analysis(d):
    """Tail length, cycle length, and cycle for every point, by path
    following with visited marking."""
    result = {}
    for p in d.carrier:
        seen = {}
        path = []
        cur = p
        while cur not in seen:
            seen[cur] = len(path)
            path.append(cur)
            cur = d.step[cur]
        start = seen[cur]
        result[p] = OrbitInfo(
            point=p,
            preperiod=start,
            period=len(path) - start,
            cycle=tuple(path[start:]),
        )
    return result


def as_naction(d, max_exp):
    """The system as an action of the exponent monoid ``{0 .. max_exp}`` with
    addition capped at ``max_exp``.

    Element ``k`` acts as ``f^k``.  For pairs with ``i + j <= max_exp`` the
    action laws are exactly the iterate law; pairs that exceed the cap get
    the capped exponent and are excluded from law checking rather than
    asserted, since ``f^max_exp`` need not equal any later iterate.
    """
    if max_exp < 1:
        raise ValueError("max_exp must be at least 1")
    elements = tuple(str(k) for k in range(max_exp + 1))
    table = {
        (str(i), str(j)): str(min(i + j, max_exp))
        for i in range(max_exp + 1)
        for j in range(max_exp + 1)
    }
    monoid = FinMonoid(elements, "0", table)
    tables = _step_power_tables(d, max_exp)
    act = {str(k): dict(tables[k]) for k in range(max_exp + 1)}
    return SetAction(monoid, d.carrier, act)


@dataclass(frozen=True)
class SampledFlow:
    """A continuous-time system sampled for law checking: a state dimension,
    an evaluator ``(state, t) -> state``, the time samples to combine, and a
    max-norm tolerance."""

    dim: int
    evaluator: object
    times: tuple
    tolerance: float = 1e-9

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        if any(t < 0 or not math.isfinite(t) for t in times):
            raise ValueError("sample times must be finite and nonnegative")
        object.__setattr__(self, "times", times)
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


def check_flow(flow, states):
    """Verify ``f(s, 0) = s`` and ``f(f(s, t1), t2) = f(s, t1 + t2)`` at every
    sampled state and time pair, within the flow's tolerance in max norm.

    The report's ``info`` carries the worst deviation seen and a
    machine-epsilon-scaled bound (``eps_bound``) below which deviations are
    attributable to float rounding alone.  Evaluator exceptions are wrapped
    in EvaluatorError carrying the offending input.
    """
    checked_states = []
    for s in states:
        s = tuple(float(x) for x in s)
        if len(s) != flow.dim:
            raise ValueError(f"state {s} has dimension {len(s)}, expected {flow.dim}")
        checked_states.append(s)

    max_mag = 1.0

    def evaluate(s, t):
        nonlocal max_mag
        try:
            out = tuple(float(x) for x in flow.evaluator(s, t))
        except Exception as exc:
            raise EvaluatorError(
                f"evaluator failed at state {s}, t={t}: {exc}", state=s, time=t
            ) from exc
        if len(out) != flow.dim:
            raise EvaluatorError(
                f"evaluator returned dimension {len(out)} at state {s}, t={t}",
                state=s,
                time=t,
            )
        for x in (*s, *out):
            mag = abs(x)
            if mag > max_mag:
                max_mag = mag
        return out

    def deviation(a, b):
        return max(abs(x - y) for x, y in zip(a, b)) if a else 0.0

    violations = []
    worst = 0.0
    for i, s in enumerate(checked_states):
        dev = deviation(evaluate(s, 0.0), s)
        worst = max(worst, dev)
        if dev > flow.tolerance:
            violations.append(Violation("flow-identity", (i, dev)))
    for i, s in enumerate(checked_states):
        for t1 in flow.times:
            mid = evaluate(s, t1)
            for t2 in flow.times:
                dev = deviation(evaluate(mid, t2), evaluate(s, t1 + t2))
                worst = max(worst, dev)
                if dev > flow.tolerance:
                    violations.append(Violation("flow-composition", (i, t1, t2, dev)))

    eps_bound = 16.0 * sys.float_info.epsilon * max_mag
    return report(violations, info={"max_deviation": worst, "eps_bound": eps_bound})
