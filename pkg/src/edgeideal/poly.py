"""Dense integer polynomials in one variable ``t``."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class IntPolynomial:
    """Exact polynomial ``sum(coeffs[i] * t**i)`` with trailing zeros trimmed.

    The zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def one_minus_t_power(cls, k: int) -> IntPolynomial:
        """(1 - t)**k."""
        return cls(tuple((-1) ** i * comb(k, i) for i in range(k + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(tuple(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divide_one_minus_t(self) -> IntPolynomial:
        """Exact division by (1 - t); requires ``self(1) == 0``."""
        if self(1) != 0:
            raise ArithmeticError("polynomial is not divisible by (1 - t)")
        # p(t) = (1 - t) q(t)  =>  q_i = sum_{j <= i} p_j
        out = []
        acc = 0
        for c in self.coeffs[:-1]:
            acc += c
            out.append(acc)
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text
