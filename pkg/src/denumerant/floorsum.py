"""Floor sums S(b, c, a) = sum_{i=1}^{b} floor(i*c/a), three ways.

* floor_sum_naive   -- direct iteration, the reference oracle.
* floor_sum_fast    -- reciprocity recursion: S(b,c,a) = b*K - S(K,a,c) with
                       K = floor(b*c/a), alternated with division steps
                       S(K,c,a) = q*K(K+1)/2 + S(K, c mod a, a).  Runs in
                       O(log max(a,c)) steps.
* floor_sum_generic -- an independent Euclid-like evaluator with no
                       coprimality requirement, used as a cross-check.

floor_sum_trace records the reduction chain so it can be replayed and
rendered (one line per step, see FloorSumTrace.render).
"""

from dataclasses import dataclass
from math import gcd

from denumerant.errors import CrossCheckError, InvalidInputError
from denumerant.report import make_report

RECIP = "RECIP"
DIV = "DIV"


def _check_query(b, c, a):
    if a < 1:
        raise InvalidInputError("denominator a must be >= 1")
    if b < 0 or c < 0:
        raise InvalidInputError("b and c must be >= 0")


def floor_sum_naive(b, c, a):
    """sum_{i=1}^{b} floor(i*c/a) by direct iteration."""
    _check_query(b, c, a)
    return sum(i * c // a for i in range(1, b + 1))


@dataclass(frozen=True)
class TraceStep:
    """One reduction step.

    kind RECIP: emitted constant b*K, value relation  S = const - S(next).
    kind DIV:   emitted constant q*b*(b+1)/2, relation S = const + S(next).
    param holds K (RECIP) or the quotient q (DIV); query is the (b, c, a)
    triple the chain continues with.
    """

    kind: str
    param: int
    const: int
    query: tuple


@dataclass
class FloorSumTrace:
    query: tuple
    pre_const: int
    steps: list
    terminal_query: tuple
    terminal_value: int
    value: int

    @property
    def step_count(self):
        return len(self.steps)

    def replay(self):
        """Fold the recorded constants against the terminal naive value."""
        v = floor_sum_naive(*self.terminal_query)
        if v != self.terminal_value:
            raise CrossCheckError("terminal value does not match naive oracle")
        for step in reversed(self.steps):
            v = step.const - v if step.kind == RECIP else step.const + v
        return self.pre_const + v

    def render(self):
        """Trace text: RECIP/DIV lines terminated by a BASE line with the total."""
        lines = []
        if self.pre_const:
            lines.append(f"PRE const={self.pre_const}")
        for step in self.steps:
            key = "K" if step.kind == RECIP else "q"
            lines.append(f"{step.kind} {key}={step.param} const={step.const}")
        lines.append(f"BASE value={self.value}")
        return "\n".join(lines)


def _machine(b, c, a, steps):
    """Run the reciprocity/division loop on a query with gcd(a, c) = 1, b < a.

    Returns (terminal_query, terminal_value, value).  If steps is a list the
    reduction chain is appended to it.
    """
    sign = 1
    acc = 0
    while True:
        if b == 0 or c == 0:
            terminal, tval = (b, c, a), 0
            break
        if b == 1:
            terminal, tval = (b, c, a), c // a
            break
        if c >= a:
            q, r = divmod(c, a)
            const = q * b * (b + 1) // 2
            acc += sign * const
            c = r
            if steps is not None:
                steps.append(TraceStep(DIV, q, const, (b, c, a)))
            continue
        K = b * c // a
        if K == 0:
            terminal, tval = (b, c, a), 0
            break
        if gcd(a, c) != 1:
            raise CrossCheckError(
                "reciprocity step reached with gcd(a, c) != 1; wrapper bug")
        const = b * K
        acc += sign * const
        if steps is not None:
            steps.append(TraceStep(RECIP, K, const, (K, a, c)))
        sign = -sign
        b, c, a = K, a, c
    return terminal, tval, acc + sign * tval


def _wrapper(b, c, a):
    """Reduce a general query to machine form; return (pre_const, core query).

    Extracts the arithmetic-progression part of c >= a, cancels gcd(a, c),
    and splits off complete periods when b >= a, so the remaining query
    satisfies b < a, c < a, gcd(a, c) = 1.
    """
    _check_query(b, c, a)
    pre = 0
    qc, c0 = divmod(c, a)
    pre += qc * b * (b + 1) // 2
    if c0 == 0 or b == 0:
        return pre, (0, 0, 1)
    g = gcd(a, c0)
    a1, c1 = a // g, c0 // g
    m, b0 = divmod(b, a1)
    if m:
        period = (a1 - 1) * (c1 - 1) // 2 + c1
        pre += c1 * a1 * m * (m - 1) // 2 + m * period + m * c1 * b0
    return pre, (b0, c1, a1)


def floor_sum_fast(b, c, a):
    """sum_{i=1}^{b} floor(i*c/a) via the logarithmic reciprocity recursion."""
    pre, core = _wrapper(b, c, a)
    _, _, value = _machine(*core, steps=None)
    return pre + value


def floor_sum_steps(b, c, a):
    """Like floor_sum_fast but also return the number of reduction steps."""
    pre, core = _wrapper(b, c, a)
    steps = []
    _, _, value = _machine(*core, steps=steps)
    return pre + value, len(steps)


def floor_sum_trace(b, c, a):
    """Evaluate the sum while recording the full reduction chain."""
    pre, core = _wrapper(b, c, a)
    steps = []
    terminal, tval, value = _machine(*core, steps=steps)
    return FloorSumTrace(query=(b, c, a), pre_const=pre, steps=steps,
                         terminal_query=terminal, terminal_value=tval,
                         value=pre + value)


def floor_sum_generic(b, c, a):
    """Independent evaluator of sum_{i=1}^{b} floor(i*c/a).

    Iterative lattice-point count of sum_{i=0}^{n-1} floor((s*i + t)/m); no
    coprimality assumption.  Kept deliberately separate from the reciprocity
    recursion so the two can cross-check each other.
    """
    _check_query(b, c, a)
    n, m, s, t = b + 1, a, c, 0
    ans = 0
    while True:
        if s >= m:
            ans += (n - 1) * n * (s // m) // 2
            s %= m
        if t >= m:
            ans += n * (t // m)
            t %= m
        y_max = s * n + t
        if y_max < m:
            return ans
        n, t, m, s = y_max // m, y_max % m, s, m


def lemma4_check(a, b, c):
    """Check the reciprocity identity S(b,c,a) + S(K,a,c) = b*K, K = floor(bc/a).

    Both sides are computed naively.  Requires b < a, c < a, gcd(a, c) = 1.
    """
    if not (0 <= b < a and 0 <= c < a):
        raise InvalidInputError("requires b < a and c < a")
    if gcd(a, c) != 1:
        raise InvalidInputError("requires gcd(a, c) = 1")
    K = b * c // a
    lhs = floor_sum_naive(b, c, a) + floor_sum_naive(K, a, c)
    return make_report("lemma4", lhs, b * K, a=a, b=b, c=c, K=K)
