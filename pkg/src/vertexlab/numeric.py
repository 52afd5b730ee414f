"""Small numeric helpers shared across modules."""

import json
import math
from fractions import Fraction
from numbers import Rational


def is_exact(x):
    return isinstance(x, Rational)


def total(values):
    """Order-independent sum: exact for rationals, correctly rounded for floats."""
    values = list(values)
    if all(is_exact(v) for v in values):
        return sum(values, Fraction(0)) if values else Fraction(0)
    if any(isinstance(v, complex) for v in values):
        re = math.fsum(complex(v).real for v in values)
        im = math.fsum(complex(v).imag for v in values)
        return complex(re, im)
    return math.fsum(values)


def normalize(x):
    """Collapse integral Fractions to int for tidy output."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def to_number(text):
    """Parse a decimal or rational string into Fraction, else float/complex."""
    if isinstance(text, (int, float, complex, Fraction)):
        return text
    s = str(text).strip()
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(s)
    except ValueError:
        return complex(s.replace("i", "j"))


def fmt_number(x):
    """Stable text form: rationals as p/q, floats with 17 significant digits."""
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, complex):
        if x.imag == 0:
            return fmt_number(x.real)
        return {"re": fmt_number(x.real), "im": fmt_number(x.imag)}
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return str(x)
        return x
    return x


def dumps(obj, indent=2):
    """Byte-stable JSON: sorted keys, floats with 17 significant digits."""

    def enc(o, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(str(k))}: {enc(o[k], level + 1)}" for k in sorted(o, key=str)]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            if all(not isinstance(v, (dict, list, tuple)) for v in o):
                return "[" + ", ".join(enc(v, level + 1) for v in o) + "]"
            return "[\n" + ",\n".join(pad + enc(v, level + 1) for v in o) + "\n" + end + "]"
        o = fmt_number(o)
        if isinstance(o, dict):
            return enc(o, level)
        if isinstance(o, float):
            if math.isnan(o) or math.isinf(o):
                return json.dumps(str(o))
            return format(o, ".17g")
        return json.dumps(o)

    return enc(obj, 0) + "\n"


def relerr(x, y):
    """Relative difference |x - y| / max(|x|, |y|), 0 when both vanish."""
    d = abs(x - y)
    s = max(abs(x), abs(y))
    if s == 0:
        return float(d)
    return float(d / s)
