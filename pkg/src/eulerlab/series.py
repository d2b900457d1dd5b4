"""Exact truncated power series over the integers, and the class generating
functions built from q-Pochhammer products.

Everything is computed modulo q^(order+1) with arbitrary-precision integer
coefficients; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Iterator, Sequence

from .partitions import PartitionClass

C_FORMS = ("sum_over_largest", "even_poch_ratio", "odd_poch_ratio")
CHAIN_STAGES = ("factored", "double_sum", "split_sum", "bracket_reciprocals", "final")
IDENTITY_NAMES = ("euler_AB", "shift_BC", "chain_C", "half_D", "thm_all")


class InvertibilityError(ValueError):
    """Constant term is not a unit over the integers."""


class TruncatedSeries:
    """Integer power series known exactly for exponents 0..order.

    Instances are immutable; arithmetic returns new series truncated to the
    smaller operand order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        if order is None:
            if not coeffs:
                raise ValueError("need at least the constant coefficient")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        padded = list(coeffs[: order + 1])
        padded.extend([0] * (order + 1 - len(padded)))
        self.order = order
        self.coeffs = tuple(padded)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, order: int, exponent: int, coefficient: int = 1) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        coeffs = [0] * (order + 1)
        if exponent <= order:
            coeffs[exponent] = coefficient
        return cls(coeffs, order)

    def coeff(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient of q^{n} is outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs, order)

    def shifted(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k, truncating at the same order."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return TruncatedSeries([0] * k + list(self.coeffs), self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(order + 1)], order
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([other * c for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (order + 1)
        for i in range(order + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(order + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(out, order)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse modulo q^(order+1) by coefficient recursion.

        Requires constant term +1 or -1, the units of the integer
        coefficient ring.
        """
        a = self.coeffs
        c0 = a[0]
        if c0 not in (1, -1):
            raise InvertibilityError(f"constant term {c0} is not +1 or -1")
        n = self.order
        b = [0] * (n + 1)
        b[0] = c0
        for m in range(1, n + 1):
            acc = 0
            for k in range(1, m + 1):
                ak = a[k]
                if ak:
                    acc += ak * b[m - k]
            b[m] = -c0 * acc
        return TruncatedSeries(b, n)

    def tsv_lines(self) -> Iterator[str]:
        """Export as one 'exponent<TAB>coefficient' line per exponent."""
        for n, c in enumerate(self.coeffs):
            yield f"{n}\t{c}"

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries(order={self.order}, coeffs=[{head}{tail}])"


@dataclass(frozen=True)
class PochSpec:
    """Product of factors (1 - sign*q^(offset + step*i)) for i = 0, 1, ...

    terms=None means the infinite product, which truncates itself once the
    exponent passes the series order; sign=-1 gives (1 + q^e) factors.
    """

    sign: int
    offset: int
    step: int = 1
    terms: int | None = None

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.offset < 1:
            raise ValueError("offset must be >= 1")
        if self.step < 1:
            raise ValueError("step must be >= 1")
        if self.terms is not None and self.terms < 0:
            raise ValueError("terms must be non-negative or None")


def pochhammer(spec: PochSpec, order: int) -> TruncatedSeries:
    """Evaluate the (possibly infinite) product of a PochSpec modulo q^(order+1)."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    sign = spec.sign
    i = 0
    while spec.terms is None or i < spec.terms:
        e = spec.offset + spec.step * i
        if e > order:
            break
        for j in range(order, e - 1, -1):
            c = coeffs[j - e]
            if c:
                coeffs[j] -= sign * c
        i += 1
    return TruncatedSeries(coeffs, order)


def _poch(sign: int, offset: int, step: int, terms: int | None, order: int) -> TruncatedSeries:
    return pochhammer(PochSpec(sign, offset, step, terms), order)


def _add_shifted(target: list[int], coeffs: Sequence[int], shift: int) -> None:
    limit = len(target)
    for j, c in enumerate(coeffs):
        k = j + shift
        if k >= limit:
            break
        if c:
            target[k] += c


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one coefficientwise identity check over exponents 0..order."""

    name: str
    order: int
    passed: bool
    elapsed: float
    exponent: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    context: str = ""

    def summary(self, with_timing: bool = True) -> str:
        timing = f" ({self.elapsed:.3f}s)" if with_timing else ""
        if self.passed:
            return f"{self.name} order={self.order} PASS{timing}"
        where = f" [{self.context}]" if self.context else ""
        return (
            f"{self.name} order={self.order} FAIL at q^{self.exponent}: "
            f"{self.lhs} != {self.rhs}{where}{timing}"
        )


def _first_mismatch(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int] | None:
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return n, x, y
    return None


def gf_class(cls: PartitionClass, order: int) -> TruncatedSeries:
    """Generating function of a class: coefficient of q^n counts weight n.

    A is the product of (1+q^j); B is the reciprocal of the odd-exponent
    product; C is the sum over its largest part 2n of
    (-q;q)_n q^(2n) / (q^(n+1);q)_n, plus 1 for the empty-weight convention;
    D is the sum over the doubled smallest part m of q^(2m) (-q^(m+1);q)_inf.
    """
    if cls is PartitionClass.A:
        return _poch(-1, 1, 1, None, order)
    if cls is PartitionClass.B:
        return _poch(+1, 1, 2, None, order).reciprocal()
    if cls is PartitionClass.C:
        return gf_c_variant("sum_over_largest", order)
    if cls is PartitionClass.D:
        out = [0] * (order + 1)
        m = 0
        while 2 * m <= order:
            tail = _poch(-1, m + 1, 1, None, order - 2 * m)
            _add_shifted(out, tail.coeffs, 2 * m)
            m += 1
        return TruncatedSeries(out, order)
    raise TypeError(f"not a partition class: {cls!r}")


def gf_c_variant(form: str, order: int, include_constant: bool = True) -> TruncatedSeries:
    """One of the three equivalent sum forms of the class-C generating function.

    Each summand is indexed by half the largest part; the three forms differ
    only in how the finite products are arranged.  All include the constant
    1 (the summand at index 0) unless include_constant=False, which gives
    the sum starting at index 1.
    """
    if form not in C_FORMS:
        raise ValueError(f"unknown C form: {form!r}")
    out = [0] * (order + 1)
    if include_constant:
        out[0] = 1
    n = 1
    while 2 * n <= order:
        m = order - 2 * n
        if form == "sum_over_largest":
            num = _poch(-1, 1, 1, n, m)
            term = num * _poch(+1, n + 1, 1, n, m).reciprocal()
        elif form == "even_poch_ratio":
            num = _poch(+1, 2, 2, n, m)
            term = num * _poch(+1, 1, 1, 2 * n, m).reciprocal()
        else:  # odd_poch_ratio
            term = _poch(+1, 1, 2, n, m).reciprocal()
        _add_shifted(out, term.coeffs, 2 * n)
        n += 1
    return TruncatedSeries(out, order)


def gf_c_chain_stage(stage: str, order: int) -> TruncatedSeries:
    """One stage of the derivation chain connecting class C to class D.

    Every stage is returned DOUBLED (twice the value it displays), which
    keeps all coefficients integral; each stage equals 2*gf_class(C, order),
    and the last equals gf_class(D, order) + 1 - q.
    """
    if stage not in CHAIN_STAGES:
        raise ValueError(f"unknown chain stage: {stage!r}")

    if stage == "factored":
        # 2 * (q^2;q^2)_inf * sum_n q^(2n) / ( (q;q)_{2n} (q^(2n+2);q^2)_inf )
        acc = [0] * (order + 1)
        n = 0
        while 2 * n <= order:
            m = order - 2 * n
            term = _poch(+1, 1, 1, 2 * n, m).reciprocal() * _poch(
                +1, 2 * n + 2, 2, None, m
            ).reciprocal()
            _add_shifted(acc, term.coeffs, 2 * n)
            n += 1
        return 2 * (TruncatedSeries(acc, order) * _poch(+1, 2, 2, None, order))

    if stage == "double_sum":
        # 2 * (q^2;q^2)_inf * sum_{n,m} q^(2n+2nm+2m) / ( (q;q)_{2n} (q^2;q^2)_m ),
        # grouped by n; summands vanish once 2n + m(2n+2) passes the order.
        acc = [0] * (order + 1)
        n = 0
        while 2 * n <= order:
            mo = order - 2 * n
            inner = [0] * (mo + 1)
            m = 0
            while m * (2 * n + 2) <= mo:
                term = _poch(+1, 2, 2, m, mo - m * (2 * n + 2)).reciprocal()
                _add_shifted(inner, term.coeffs, m * (2 * n + 2))
                m += 1
            grouped = TruncatedSeries(inner, mo) * _poch(+1, 1, 1, 2 * n, mo).reciprocal()
            _add_shifted(acc, grouped.coeffs, 2 * n)
            n += 1
        return 2 * (TruncatedSeries(acc, order) * _poch(+1, 2, 2, None, order))

    if stage == "split_sum":
        # (q^2;q^2)_inf * sum_{n,m} (1 + (-1)^n) q^(n+nm+2m) / ( (q;q)_n (q^2;q^2)_m ):
        # the doubled halving trick; odd n carry weight 0 and contribute nothing.
        acc = [0] * (order + 1)
        n = 0
        while n <= order:
            weight = 1 + (-1) ** n
            if weight:
                mo = order - n
                inner = [0] * (mo + 1)
                m = 0
                while m * (n + 2) <= mo:
                    term = _poch(+1, 2, 2, m, mo - m * (n + 2)).reciprocal()
                    _add_shifted(inner, term.coeffs, m * (n + 2))
                    m += 1
                grouped = TruncatedSeries(inner, mo) * _poch(+1, 1, 1, n, mo).reciprocal()
                _add_shifted(acc, [weight * c for c in grouped.coeffs], n)
            n += 1
        return TruncatedSeries(acc, order) * _poch(+1, 2, 2, None, order)

    if stage == "bracket_reciprocals":
        # (q^2;q^2)_inf * sum_m q^(2m)/(q^2;q^2)_m *
        #   [ 1/(q^(m+1);q)_inf + 1/(-q^(m+1);q)_inf ]
        acc = [0] * (order + 1)
        m = 0
        while 2 * m <= order:
            mo = order - 2 * m
            bracket = (
                _poch(+1, m + 1, 1, None, mo).reciprocal()
                + _poch(-1, m + 1, 1, None, mo).reciprocal()
            )
            term = bracket * _poch(+1, 2, 2, m, mo).reciprocal()
            _add_shifted(acc, term.coeffs, 2 * m)
            m += 1
        return TruncatedSeries(acc, order) * _poch(+1, 2, 2, None, order)

    # final: sum_m q^(2m) (-q^(m+1);q)_inf + (1 - q), i.e. gf_D + 1 - q
    d = gf_class(PartitionClass.D, order)
    out = list(d.coeffs)
    out[0] += 1
    if order >= 1:
        out[1] -= 1
    return TruncatedSeries(out, order)


def euler_expansion_check(c: int, order: int) -> VerificationReport:
    """Check 1/(t;q)_inf = sum_m t^m/(q;q)_m at t = q^c and t = -q^c.

    The left side is a reciprocal of a product, the right side a term-by-term
    sum; the two routes are computed independently and compared exactly.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    t0 = perf_counter()
    name = f"euler_expansion_c{c}"
    for label, sign in (("t=q^c", +1), ("t=-q^c", -1)):
        lhs = _poch(+1 if sign == 1 else -1, c, 1, None, order).reciprocal()
        rhs = [0] * (order + 1)
        m = 0
        while c * m <= order:
            inv = _poch(+1, 1, 1, m, order - c * m).reciprocal()
            if sign == -1 and m % 2 == 1:
                _add_shifted(rhs, [-x for x in inv.coeffs], c * m)
            else:
                _add_shifted(rhs, inv.coeffs, c * m)
            m += 1
        bad = _first_mismatch(lhs.coeffs, rhs)
        if bad:
            n, x, y = bad
            return VerificationReport(
                name, order, False, perf_counter() - t0, n, x, y, context=label
            )
    return VerificationReport(name, order, True, perf_counter() - t0)


def verify_identity(name: str, order: int) -> VerificationReport:
    """Run one named identity check coefficientwise to the given order."""
    if name not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity: {name!r}")
    t0 = perf_counter()

    def report(bad: tuple[int, int, int] | None, context: str) -> VerificationReport | None:
        if bad is None:
            return None
        n, x, y = bad
        return VerificationReport(name, order, False, perf_counter() - t0, n, x, y, context)

    if name == "euler_AB":
        a = gf_class(PartitionClass.A, order)
        b = gf_class(PartitionClass.B, order)
        failed = report(_first_mismatch(a.coeffs, b.coeffs), "gf(A) vs gf(B)")
        if failed:
            return failed

    elif name == "shift_BC":
        b = gf_class(PartitionClass.B, order)
        c = gf_class(PartitionClass.C, order)
        for n in range(1, order):
            if c.coeffs[n + 1] != b.coeffs[n]:
                return VerificationReport(
                    name,
                    order,
                    False,
                    perf_counter() - t0,
                    n + 1,
                    c.coeffs[n + 1],
                    b.coeffs[n],
                    context="coeff(gf(C), n+1) vs coeff(gf(B), n)",
                )

    elif name == "chain_C":
        base = gf_class(PartitionClass.C, order)
        doubled = 2 * base
        for form in C_FORMS:
            variant = gf_c_variant(form, order)
            failed = report(_first_mismatch(variant.coeffs, base.coeffs), f"form={form}")
            if failed:
                return failed
        for stage in CHAIN_STAGES:
            staged = gf_c_chain_stage(stage, order)
            failed = report(_first_mismatch(staged.coeffs, doubled.coeffs), f"stage={stage}")
            if failed:
                return failed

    elif name == "half_D":
        lhs = 2 * gf_class(PartitionClass.C, order)
        rhs = list(gf_class(PartitionClass.D, order).coeffs)
        rhs[0] += 1
        if order >= 1:
            rhs[1] -= 1
        failed = report(_first_mismatch(lhs.coeffs, rhs), "2*gf(C) vs gf(D) + 1 - q")
        if failed:
            return failed

    else:  # thm_all
        a = gf_class(PartitionClass.A, order).coeffs
        b = gf_class(PartitionClass.B, order).coeffs
        c = gf_class(PartitionClass.C, order).coeffs
        d = gf_class(PartitionClass.D, order).coeffs
        for n in range(2, order):
            checks = (
                (a[n], b[n], "A(n) vs B(n)"),
                (b[n], c[n + 1], "B(n) vs C(n+1)"),
                (2 * a[n], d[n + 1], "2*A(n) vs D(n+1)"),
            )
            for lhs, rhs, context in checks:
                if lhs != rhs:
                    return VerificationReport(
                        name, order, False, perf_counter() - t0, n, lhs, rhs, context
                    )

    return VerificationReport(name, order, True, perf_counter() - t0)
