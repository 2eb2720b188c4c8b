"""Decimal constants and the 17-significant-digit rendering used in reports."""
from __future__ import annotations

from decimal import ROUND_DOWN, Decimal, localcontext
from fractions import Fraction

PI_SQUARED = Decimal("9.8696044010893586188344909998761511353136994072408")

#: Regular ideal tetrahedron volume, 3 * Lobachevsky(pi/3), to 50 digits.
V_TET_DECIMAL = Decimal("1.0149416064096536250212025542745202859416893075303")

DIGITS = 17


def render(x, digits: int = DIGITS) -> str:
    """``x`` truncated (not rounded) to ``digits`` significant digits."""
    if isinstance(x, Fraction):
        with localcontext() as ctx:
            ctx.prec = 60
            x = Decimal(x.numerator) / Decimal(x.denominator)
    elif not isinstance(x, Decimal):
        x = Decimal(repr(float(x)))
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_DOWN
        return format(+x, "f")


def pi_squared_multiple(q: Fraction) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 60
        return Decimal(q.numerator) * PI_SQUARED / Decimal(q.denominator)
