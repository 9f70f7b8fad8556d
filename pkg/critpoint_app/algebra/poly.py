from __future__ import annotations

from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import BadInput, DivisionByZeroPoly
from .affine import AffineMap
from .field import ONE, ZERO, FieldElem, Point, as_field, as_point

Monomial = Tuple[int, int]


class Variable(str, Enum):
    X = "x"
    Y = "y"


class _MinusInfinity:
    __slots__ = ()

    def __repr__(self) -> str:
        return "MINUS_INFINITY"

    def __lt__(self, other: Any) -> bool:
        return other is not self

    def __le__(self, other: Any) -> bool:
        return True

    def __gt__(self, other: Any) -> bool:
        return False

    def __ge__(self, other: Any) -> bool:
        return other is self

    def __add__(self, other: Any) -> "_MinusInfinity":
        return self

    __radd__ = __add__


MINUS_INFINITY = _MinusInfinity()
Degree = Union[int, _MinusInfinity]


def monomial_key(monomial: Monomial) -> Tuple[int, int]:
    """Sort key of the column order: total degree, then x-exponent (use with reverse=True)."""
    return (monomial[0] + monomial[1], monomial[0])


def column_monomials(d: int) -> List[Monomial]:
    """Monomials of K[x,y] with 1 <= degree <= d in matrix column order."""
    return [(i, total - i) for total in range(d, 0, -1) for i in range(total, -1, -1)]


class BivarPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Any]] = None) -> None:
        cleaned: Dict[Monomial, FieldElem] = {}
        if terms:
            for (i, j), coeff in terms.items():
                if i < 0 or j < 0:
                    raise BadInput(f"negative exponent in monomial {(i, j)}")
                value = as_field(coeff)
                if not value.is_zero:
                    cleaned[(int(i), int(j))] = value
        self._terms = cleaned

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, FieldElem]) -> "BivarPoly":
        obj = object.__new__(cls)
        obj._terms = {m: c for m, c in terms.items() if not c.is_zero}
        return obj

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls._wrap({})

    @classmethod
    def constant(cls, value: Any) -> "BivarPoly":
        return cls._wrap({(0, 0): as_field(value)})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: Any = 1) -> "BivarPoly":
        return cls({(i, j): coeff})

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls._wrap({(1, 0): ONE})

    @classmethod
    def y(cls) -> "BivarPoly":
        return cls._wrap({(0, 1): ONE})

    @classmethod
    def linear(cls, a: Any, b: Any, c: Any = 0) -> "BivarPoly":
        """a*x + b*y + c."""
        return cls({(1, 0): a, (0, 1): b, (0, 0): c})

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[Any]]) -> "BivarPoly":
        terms: Dict[Monomial, FieldElem] = {}
        for triple in triples:
            if len(triple) != 3:
                raise BadInput(f"polynomial term must be [i, j, coeff], got {triple!r}")
            i, j, coeff = triple
            if not isinstance(i, int) or not isinstance(j, int):
                raise BadInput(f"exponents must be integers, got {triple!r}")
            key = (i, j)
            terms[key] = terms.get(key, ZERO) + as_field(coeff)
        return cls(terms)

    @property
    def terms(self) -> Mapping[Monomial, FieldElem]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self._terms.values())

    @property
    def degree(self) -> Degree:
        if not self._terms:
            return MINUS_INFINITY
        return max(i + j for i, j in self._terms)

    def degree_in(self, var: Variable) -> Degree:
        if not self._terms:
            return MINUS_INFINITY
        index = 0 if var == Variable.X else 1
        return max(m[index] for m in self._terms)

    def coefficient(self, i: int, j: int) -> FieldElem:
        return self._terms.get((i, j), ZERO)

    @property
    def constant_term(self) -> FieldElem:
        return self.coefficient(0, 0)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=monomial_key)

    def leading_coefficient(self) -> FieldElem:
        return self._terms[self.leading_monomial()]

    def monic(self) -> "BivarPoly":
        if not self._terms:
            return self
        return self.scale(self.leading_coefficient().inverse())

    def scale(self, factor: Any) -> "BivarPoly":
        value = as_field(factor)
        if value.is_zero:
            return BivarPoly.zero()
        return BivarPoly._wrap({m: c * value for m, c in self._terms.items()})

    def sorted_terms(self) -> List[Tuple[Monomial, FieldElem]]:
        return sorted(self._terms.items(), key=lambda item: monomial_key(item[0]), reverse=True)

    def __add__(self, other: Any) -> "BivarPoly":
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        result = dict(self._terms)
        for m, c in o._terms.items():
            result[m] = result[m] + c if m in result else c
        return BivarPoly._wrap(result)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "BivarPoly":
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "BivarPoly":
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "BivarPoly":
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        result: Dict[Monomial, FieldElem] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in o._terms.items():
                key = (i1 + i2, j1 + j2)
                product = c1 * c2
                result[key] = result[key] + product if key in result else product
        return BivarPoly._wrap(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivarPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = BivarPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def restrict(self, var: Variable, value: Any) -> "BivarPoly":
        """Substitute ``var = value``; the result no longer depends on var."""
        point_value = as_field(value)
        result: Dict[Monomial, FieldElem] = {}
        for (i, j), c in self._terms.items():
            if var == Variable.X:
                key, factor = (0, j), point_value ** i
            else:
                key, factor = (i, 0), point_value ** j
            term = c * factor
            result[key] = result[key] + term if key in result else term
        return BivarPoly._wrap(result)

    def translate(self, pt: Sequence[Any]) -> "BivarPoly":
        """p(x + x0, y + y0): moves ``pt`` to the origin."""
        x0, y0 = as_point(pt)
        return affine_pullback(self, AffineMap.from_matrix(1, 0, 0, 1, x0, y0))

    def __call__(self, x: Any, y: Any) -> FieldElem:
        return evaluate(self, (x, y))

    def to_triples(self) -> List[list]:
        return [[i, j, c.to_json()] for (i, j), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Any) -> "BivarPoly":
        if isinstance(data, BivarPoly):
            return data
        if not isinstance(data, list):
            raise BadInput("polynomial must be a list of [i, j, coeff] triples")
        return cls.from_triples(data)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in (("x", i), ("y", j))
                if power
            )
            coeff = str(c)
            if c.is_real and c.re < 0:
                sign, coeff = "-", str(-c)
            else:
                sign = "+"
            if not c.is_real:
                coeff = f"({coeff})"
            if mono and coeff == "1":
                body = mono
            elif mono:
                body = f"{coeff}*{mono}"
            else:
                body = coeff
            parts.append(f" {sign} {body}")
        text = "".join(parts).strip()
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"BivarPoly({self})"


def _as_poly(value: Any) -> Optional[BivarPoly]:
    if isinstance(value, BivarPoly):
        return value
    if isinstance(value, (int, Fraction, FieldElem)) and not isinstance(value, bool):
        return BivarPoly.constant(value)
    return None


X = BivarPoly.x()
Y = BivarPoly.y()


def partial_derivative(p: BivarPoly, var: Variable) -> BivarPoly:
    result: Dict[Monomial, FieldElem] = {}
    for (i, j), c in p.terms.items():
        if var == Variable.X and i:
            result[(i - 1, j)] = c * i
        elif var == Variable.Y and j:
            result[(i, j - 1)] = c * j
    return BivarPoly._wrap(result)


def gradient(p: BivarPoly) -> Tuple[BivarPoly, BivarPoly]:
    return partial_derivative(p, Variable.X), partial_derivative(p, Variable.Y)


def integrate(p: BivarPoly, var: Variable) -> BivarPoly:
    """Antiderivative in ``var`` with zero integration constant."""
    result: Dict[Monomial, FieldElem] = {}
    for (i, j), c in p.terms.items():
        if var == Variable.X:
            result[(i + 1, j)] = c / (i + 1)
        else:
            result[(i, j + 1)] = c / (j + 1)
    return BivarPoly._wrap(result)


def evaluate(p: BivarPoly, pt: Sequence[Any]) -> FieldElem:
    """Horner evaluation: outer scheme in x, inner schemes in y."""
    x, y = as_point(pt)
    if p.is_zero:
        return ZERO
    rows: Dict[int, Dict[int, FieldElem]] = {}
    for (i, j), c in p.terms.items():
        rows.setdefault(i, {})[j] = c
    total = ZERO
    for i in range(max(rows), -1, -1):
        inner = ZERO
        row = rows.get(i)
        if row:
            for j in range(max(row), -1, -1):
                inner = inner * y + row.get(j, ZERO)
        total = total * x + inner
    return total


def affine_pullback(p: BivarPoly, t: AffineMap) -> BivarPoly:
    """f o T."""
    (a, b), (c, d) = t.linear
    e, f = t.translation
    x_image = BivarPoly._wrap({(1, 0): a, (0, 1): b, (0, 0): e})
    y_image = BivarPoly._wrap({(1, 0): c, (0, 1): d, (0, 0): f})
    max_i = p.degree_in(Variable.X)
    max_j = p.degree_in(Variable.Y)
    if max_i is MINUS_INFINITY:
        return p
    x_powers = [BivarPoly.constant(1)]
    for _ in range(max_i):
        x_powers.append(x_powers[-1] * x_image)
    y_powers = [BivarPoly.constant(1)]
    for _ in range(max_j):
        y_powers.append(y_powers[-1] * y_image)
    result = BivarPoly.zero()
    for (i, j), coeff in p.terms.items():
        result = result + (x_powers[i] * y_powers[j]).scale(coeff)
    return result


def exact_divide(num: BivarPoly, den: BivarPoly) -> Optional[BivarPoly]:
    """Quotient q with num == q * den, or None when den does not divide num."""
    if den.is_zero:
        raise DivisionByZeroPoly("division by the zero polynomial")
    lead_i, lead_j = den.leading_monomial()
    lead_c = den.leading_coefficient()
    remainder = num
    quotient: Dict[Monomial, FieldElem] = {}
    while not remainder.is_zero:
        ri, rj = remainder.leading_monomial()
        if ri < lead_i or rj < lead_j:
            return None
        step = BivarPoly._wrap({(ri - lead_i, rj - lead_j): remainder.coefficient(ri, rj) / lead_c})
        quotient.update(step.terms)
        remainder = remainder - step * den
    return BivarPoly._wrap(quotient)


def to_sympy_poly(p: BivarPoly, domain: Any = None) -> Any:
    import sympy as sp

    if domain is None:
        domain = sp.QQ if p.is_real else sp.QQ_I
    x, y = sp.symbols("x y")
    data = {m: _field_to_sympy(c) for m, c in p.terms.items()}
    return sp.Poly.from_dict(data, x, y, domain=domain)


def from_sympy_poly(poly: Any) -> BivarPoly:
    return BivarPoly._wrap({tuple(m): _field_from_sympy(c) for m, c in poly.as_dict().items()})


def _field_to_sympy(c: FieldElem) -> Any:
    import sympy as sp

    value = sp.Rational(c.re.numerator, c.re.denominator)
    if c.im:
        value += sp.I * sp.Rational(c.im.numerator, c.im.denominator)
    return value


def _field_from_sympy(value: Any) -> FieldElem:
    import sympy as sp

    re_part, im_part = sp.re(value), sp.im(value)
    return FieldElem._raw(
        Fraction(int(re_part.p), int(re_part.q)),
        Fraction(int(im_part.p), int(im_part.q)),
    )


def bivariate_gcd(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    """Monic gcd under the column order; 1 when a and b share no component."""
    if a.is_zero and b.is_zero:
        raise BadInput("gcd of two zero polynomials is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.is_constant or b.is_constant:
        return BivarPoly.constant(1)
    import sympy as sp

    domain = sp.QQ if a.is_real and b.is_real else sp.QQ_I
    g = sp.gcd(to_sympy_poly(a, domain), to_sympy_poly(b, domain))
    return from_sympy_poly(g).monic()


def vanishing_order(p: BivarPoly, var: Variable) -> Degree:
    """Largest k with var^k dividing p."""
    if p.is_zero:
        return MINUS_INFINITY
    index = 0 if var == Variable.X else 1
    return min(m[index] for m in p.terms)


def coefficient_vector(p: BivarPoly, d: int) -> List[FieldElem]:
    return [p.coefficient(i, j) for i, j in column_monomials(d)]


def poly_from_vector(vector: Sequence[Any], d: int) -> BivarPoly:
    monomials = column_monomials(d)
    if len(vector) != len(monomials):
        raise BadInput(f"expected {len(monomials)} coefficients for degree {d}, got {len(vector)}")
    return BivarPoly(dict(zip(monomials, vector)))


def product(factors: Iterable[BivarPoly]) -> BivarPoly:
    result = BivarPoly.constant(1)
    for factor in factors:
        result = result * factor
    return result


def as_poly(value: Any) -> BivarPoly:
    coerced = _as_poly(value)
    if coerced is not None:
        return coerced
    return BivarPoly.from_json(value)


ONE_POLY = BivarPoly._wrap({(0, 0): ONE})
