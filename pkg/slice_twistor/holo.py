"""
Holomorphic Maps
Expression trees for maps C -> C with parsing, printing, JSON and exact derivatives

Grammar:
    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' '-'? INTEGER)?
    atom   := NUMBER | NUMBER 'i' | 'i' | 'v' | ('sqrt' | 'exp') '(' expr ')' | '(' expr ')'

sqrt is the principal branch with its cut on the negative real axis. A signed
zero imaginary part is normalised to +0 first, so points on the cut take the
value from the upper side.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from config import config
from exceptions import BranchCut, HoloSyntaxError, OutOfDomain, Pole

Number = Union[int, float, complex]


# ---------------------------------------------------------------------------
# Domain descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Region:
    """Subset of C; kinds: plane, upper_half_plane, punctured_plane, box"""

    kind: str = "plane"
    params: Tuple[float, ...] = ()

    KINDS = ("plane", "upper_half_plane", "punctured_plane", "box")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown region kind {self.kind!r}")
        if self.kind == "box" and len(self.params) != 4:
            raise ValueError("box regions need (x0, x1, y0, y1)")

    @classmethod
    def plane(cls) -> "Region":
        return cls("plane")

    @classmethod
    def upper(cls) -> "Region":
        return cls("upper_half_plane")

    @classmethod
    def punctured(cls, re: float = 0.0, im: float = 0.0) -> "Region":
        return cls("punctured_plane", (float(re), float(im)))

    @classmethod
    def box(cls, x0: float, x1: float, y0: float, y1: float) -> "Region":
        return cls("box", (float(x0), float(x1), float(y0), float(y1)))

    def contains(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=complex)
        if self.kind == "plane":
            return np.ones(v.shape, dtype=bool)
        if self.kind == "upper_half_plane":
            return v.imag > 0
        if self.kind == "punctured_plane":
            center = complex(*self.params) if self.params else 0j
            return v != center
        x0, x1, y0, y1 = self.params
        return (v.real >= x0) & (v.real <= x1) & (v.imag >= y0) & (v.imag <= y1)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind}
        if self.params:
            out["params"] = list(self.params)
        return out

    @classmethod
    def from_json(cls, data: Optional[Dict[str, Any]]) -> "Region":
        if not data:
            return cls.upper()
        return cls(data["kind"], tuple(float(p) for p in data.get("params", ())))


# ---------------------------------------------------------------------------
# Expression nodes
# ---------------------------------------------------------------------------


def _normalize_zero(z: np.ndarray) -> np.ndarray:
    # -0.0 + 0.0 == +0.0 in both parts
    return z + 0j


class HoloMap:
    """Base class of expression nodes"""

    precedence = 5

    # -- evaluation ---------------------------------------------------------

    def eval(self, v, strict: bool = True):
        """
        Evaluate at a point or an array of points

        Args:
            v: complex scalar or array
            strict: raise Pole / BranchCut / OutOfDomain instead of returning nan

        Returns:
            complex for scalar input, ndarray otherwise
        """
        scalar = np.ndim(v) == 0
        arr = _normalize_zero(np.asarray(v, dtype=complex))
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = self._ev(arr, strict)
        out = np.broadcast_to(out, arr.shape)
        return complex(out) if scalar else np.array(out, dtype=complex)

    def __call__(self, v):
        return self.eval(v, strict=False)

    def _ev(self, v: np.ndarray, strict: bool) -> np.ndarray:
        raise NotImplementedError

    # -- structure ----------------------------------------------------------

    def derivative(self) -> "HoloMap":
        raise NotImplementedError

    def conj_constants(self) -> "HoloMap":
        """The map v -> conj(m(conj v)) rebuilt as a grammar tree"""
        raise NotImplementedError

    def children(self) -> Tuple["HoloMap", ...]:
        return ()

    def is_expression(self) -> bool:
        """True when the tree contains no sampled closures"""
        return all(child.is_expression() for child in self.children())

    @property
    def domain(self) -> Region:
        return Region.plane()

    def restrict(self, region: Region) -> "HoloMap":
        return Restricted(_strip(self), region)

    # -- printing -----------------------------------------------------------

    def to_source(self) -> str:
        raise NotImplementedError

    def _wrapped(self, min_prec: int) -> str:
        text = self.to_source()
        return f"({text})" if self.precedence < min_prec else text

    def __str__(self) -> str:
        return self.to_source()

    def to_json(self) -> Any:
        raise NotImplementedError

    # -- operators ----------------------------------------------------------

    def __add__(self, other):
        return add(self, lift_const(other))

    def __radd__(self, other):
        return add(lift_const(other), self)

    def __sub__(self, other):
        return sub(self, lift_const(other))

    def __rsub__(self, other):
        return sub(lift_const(other), self)

    def __mul__(self, other):
        return mul(self, lift_const(other))

    def __rmul__(self, other):
        return mul(lift_const(other), self)

    def __truediv__(self, other):
        return div(self, lift_const(other))

    def __rtruediv__(self, other):
        return div(lift_const(other), self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, n: int):
        return power(self, n)


def _fmt_real(x: float) -> str:
    if float(x).is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x))


@dataclass(frozen=True, eq=True)
class Const(HoloMap):
    value: complex

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))

    def _ev(self, v, strict):
        return np.full(v.shape, self.value, dtype=complex)

    def derivative(self):
        return ZERO

    def conj_constants(self):
        return Const(self.value.conjugate())

    def to_source(self) -> str:
        re, im = self.value.real, self.value.imag
        if im == 0:
            text = _fmt_real(re)
            return f"({text})" if re < 0 else text
        if re == 0:
            text = f"{_fmt_real(abs(im))}i"
            return f"(-{text})" if im < 0 else text
        sign = "-" if im < 0 else "+"
        return f"({_fmt_real(re)}{sign}{_fmt_real(abs(im))}i)"

    def to_json(self):
        return ["const", self.value.real, self.value.imag]


@dataclass(frozen=True)
class Var(HoloMap):
    def _ev(self, v, strict):
        return v

    def derivative(self):
        return ONE

    def conj_constants(self):
        return self

    def to_source(self) -> str:
        return "v"

    def to_json(self):
        return ["v"]


@dataclass(frozen=True)
class _Binary(HoloMap):
    a: HoloMap
    b: HoloMap

    symbol = "?"
    tag = "?"

    def children(self):
        return (self.a, self.b)

    def to_source(self) -> str:
        p = self.precedence
        return f"{self.a._wrapped(p)} {self.symbol} {self.b._wrapped(p + 1)}"

    def to_json(self):
        return [self.tag, self.a.to_json(), self.b.to_json()]


class Add(_Binary):
    symbol, tag, precedence = "+", "add", 1

    def _ev(self, v, strict):
        return self.a._ev(v, strict) + self.b._ev(v, strict)

    def derivative(self):
        return add(self.a.derivative(), self.b.derivative())

    def conj_constants(self):
        return add(self.a.conj_constants(), self.b.conj_constants())


class Sub(_Binary):
    symbol, tag, precedence = "-", "sub", 1

    def _ev(self, v, strict):
        return self.a._ev(v, strict) - self.b._ev(v, strict)

    def derivative(self):
        return sub(self.a.derivative(), self.b.derivative())

    def conj_constants(self):
        return sub(self.a.conj_constants(), self.b.conj_constants())


class Mul(_Binary):
    symbol, tag, precedence = "*", "mul", 2

    def _ev(self, v, strict):
        return self.a._ev(v, strict) * self.b._ev(v, strict)

    def derivative(self):
        return add(mul(self.a.derivative(), self.b), mul(self.a, self.b.derivative()))

    def conj_constants(self):
        return mul(self.a.conj_constants(), self.b.conj_constants())


class Div(_Binary):
    symbol, tag, precedence = "/", "div", 2

    def _ev(self, v, strict):
        num = self.a._ev(v, strict)
        den = self.b._ev(v, strict)
        if np.any(den == 0):
            if strict:
                raise Pole(f"division by zero in {self.to_source()}")
            den = np.where(den == 0, np.nan, den)
        return num / den

    def derivative(self):
        top = sub(mul(self.a.derivative(), self.b), mul(self.a, self.b.derivative()))
        return div(top, power(self.b, 2))

    def conj_constants(self):
        return div(self.a.conj_constants(), self.b.conj_constants())


@dataclass(frozen=True)
class Neg(HoloMap):
    a: HoloMap
    precedence = 3

    def children(self):
        return (self.a,)

    def _ev(self, v, strict):
        return -self.a._ev(v, strict)

    def derivative(self):
        return neg(self.a.derivative())

    def conj_constants(self):
        return neg(self.a.conj_constants())

    def to_source(self) -> str:
        return f"-{self.a._wrapped(3)}"

    def to_json(self):
        return ["neg", self.a.to_json()]


@dataclass(frozen=True)
class Pow(HoloMap):
    a: HoloMap
    n: int
    precedence = 4

    def children(self):
        return (self.a,)

    def _ev(self, v, strict):
        base = self.a._ev(v, strict)
        if self.n < 0:
            if np.any(base == 0):
                if strict:
                    raise Pole(f"negative power of zero in {self.to_source()}")
                base = np.where(base == 0, np.nan, base)
            return 1.0 / base ** (-self.n)
        return base**self.n

    def derivative(self):
        return mul(mul(Const(self.n), power(self.a, self.n - 1)), self.a.derivative())

    def conj_constants(self):
        return power(self.a.conj_constants(), self.n)

    def to_source(self) -> str:
        return f"{self.a._wrapped(5)}^{self.n}"

    def to_json(self):
        return ["pow", self.a.to_json(), self.n]


@dataclass(frozen=True)
class Sqrt(HoloMap):
    a: HoloMap

    def children(self):
        return (self.a,)

    def _ev(self, v, strict):
        arg = _normalize_zero(self.a._ev(v, strict))
        if strict and np.any((arg.imag == 0) & (arg.real < 0)):
            raise BranchCut(f"argument of {self.to_source()} lies on the negative real axis")
        return np.sqrt(arg)

    def derivative(self):
        return div(self.a.derivative(), mul(Const(2), self))

    def conj_constants(self):
        return Sqrt(self.a.conj_constants())

    def to_source(self) -> str:
        return f"sqrt({self.a.to_source()})"

    def to_json(self):
        return ["sqrt", self.a.to_json()]


@dataclass(frozen=True)
class Exp(HoloMap):
    a: HoloMap

    def children(self):
        return (self.a,)

    def _ev(self, v, strict):
        return np.exp(self.a._ev(v, strict))

    def derivative(self):
        return mul(self, self.a.derivative())

    def conj_constants(self):
        return Exp(self.a.conj_constants())

    def to_source(self) -> str:
        return f"exp({self.a.to_source()})"

    def to_json(self):
        return ["exp", self.a.to_json()]


@dataclass(frozen=True)
class ReflectedMap(HoloMap):
    """v -> conj(base(conj v))"""

    base: HoloMap

    def children(self):
        return (self.base,)

    def _ev(self, v, strict):
        return np.conj(self.base._ev(_normalize_zero(np.conj(v)), strict))

    def derivative(self):
        return reflect(self.base.derivative())

    def conj_constants(self):
        return self.base

    def materialize(self) -> HoloMap:
        return self.base.conj_constants()

    @property
    def precedence(self) -> int:  # type: ignore[override]
        return self.materialize().precedence

    def to_source(self) -> str:
        return self.materialize().to_source()

    def to_json(self):
        return ["reflect", self.base.to_json()]


@dataclass(frozen=True)
class SampledMap(HoloMap):
    """Closure-backed map; derivatives by central differences"""

    fn: Callable[[np.ndarray], np.ndarray] = field(compare=False)
    label: str = "sampled"
    step: float = field(default_factory=lambda: config.FD_STEP)

    def _ev(self, v, strict):
        return np.asarray(self.fn(v), dtype=complex)

    def is_expression(self) -> bool:
        return False

    def derivative(self):
        fn, h = self.fn, self.step
        return SampledMap(
            lambda v: (np.asarray(fn(v + h)) - np.asarray(fn(v - h))) / (2 * h),
            label=f"d({self.label})",
            step=self.step,
        )

    def conj_constants(self):
        fn = self.fn
        return SampledMap(lambda v: np.conj(fn(np.conj(v))), label=f"reflect({self.label})")

    def to_source(self) -> str:
        return f"<{self.label}>"

    def to_json(self):
        raise ValueError(f"sampled map {self.label!r} has no JSON form")


@dataclass(frozen=True)
class Restricted(HoloMap):
    """A map carrying a domain descriptor"""

    base: HoloMap
    region: Region

    def children(self):
        return (self.base,)

    @property
    def domain(self) -> Region:
        return self.region

    @property
    def precedence(self) -> int:  # type: ignore[override]
        return self.base.precedence

    def _ev(self, v, strict):
        if strict and not np.all(self.region.contains(v)):
            raise OutOfDomain(f"point outside {self.region.kind}")
        return self.base._ev(v, strict)

    def derivative(self):
        return Restricted(_strip(self.base.derivative()), self.region)

    def conj_constants(self):
        return Restricted(_strip(self.base.conj_constants()), self.region)

    def to_source(self) -> str:
        return self.base.to_source()

    def to_json(self):
        return self.base.to_json()


def _strip(m: HoloMap) -> HoloMap:
    while isinstance(m, Restricted):
        m = m.base
    return m


ZERO = Const(0)
ONE = Const(1)
V = Var()


# ---------------------------------------------------------------------------
# Smart constructors
# ---------------------------------------------------------------------------


def lift_const(value) -> HoloMap:
    if isinstance(value, HoloMap):
        return value
    if isinstance(value, (int, float, complex, np.number)):
        return Const(complex(value))
    raise TypeError(f"cannot use {type(value).__name__} in a holomorphic expression")


def _is_const(m: HoloMap, value: Optional[complex] = None) -> bool:
    if not isinstance(m, Const):
        return False
    return value is None or m.value == value


def add(a: HoloMap, b: HoloMap) -> HoloMap:
    if _is_const(a) and _is_const(b):
        return Const(a.value + b.value)  # type: ignore[attr-defined]
    if _is_const(a, 0):
        return b
    if _is_const(b, 0):
        return a
    return Add(a, b)


def sub(a: HoloMap, b: HoloMap) -> HoloMap:
    if _is_const(a) and _is_const(b):
        return Const(a.value - b.value)  # type: ignore[attr-defined]
    if _is_const(b, 0):
        return a
    if _is_const(a, 0):
        return neg(b)
    return Sub(a, b)


def mul(a: HoloMap, b: HoloMap) -> HoloMap:
    if _is_const(a) and _is_const(b):
        return Const(a.value * b.value)  # type: ignore[attr-defined]
    if _is_const(a, 0) or _is_const(b, 0):
        return ZERO
    if _is_const(a, 1):
        return b
    if _is_const(b, 1):
        return a
    return Mul(a, b)


def div(a: HoloMap, b: HoloMap) -> HoloMap:
    if _is_const(b, 0):
        raise Pole("division by the zero constant")
    if _is_const(a) and _is_const(b):
        return Const(a.value / b.value)  # type: ignore[attr-defined]
    if _is_const(a, 0):
        return ZERO
    if _is_const(b, 1):
        return a
    return Div(a, b)


def neg(a: HoloMap) -> HoloMap:
    if _is_const(a):
        return Const(-a.value)  # type: ignore[attr-defined]
    if isinstance(a, Neg):
        return a.a
    return Neg(a)


def power(a: HoloMap, n: int) -> HoloMap:
    n = int(n)
    if n == 0:
        return ONE
    if n == 1:
        return a
    if _is_const(a):
        if a.value == 0 and n < 0:  # type: ignore[attr-defined]
            raise Pole("negative power of the zero constant")
        return Const(a.value**n)  # type: ignore[attr-defined]
    return Pow(a, n)


def sqrt(a) -> HoloMap:
    return Sqrt(lift_const(a))


def exp(a) -> HoloMap:
    return Exp(lift_const(a))


def reflect(m: HoloMap) -> HoloMap:
    """v -> conj(m(conj v)); reflect(reflect(m)) is m"""
    if isinstance(m, ReflectedMap):
        return m.base
    if isinstance(m, Const):
        return Const(m.value.conjugate())
    if isinstance(m, Var):
        return m
    return ReflectedMap(m)


def has_real_coefficients(m: HoloMap) -> bool:
    """True if every constant in the tree is real"""
    if isinstance(m, Const):
        return m.value.imag == 0
    if isinstance(m, ReflectedMap):
        return has_real_coefficients(m.base)
    if isinstance(m, SampledMap):
        return False
    return all(has_real_coefficients(c) for c in m.children())


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------


def derivative(m: HoloMap) -> HoloMap:
    return m.derivative()


def to_source(m: HoloMap) -> str:
    return m.to_source()


def to_json(m: HoloMap) -> Any:
    return m.to_json()


_JSON_BINARY = {"add": add, "sub": sub, "mul": mul, "div": div}


def from_json(data: Any) -> HoloMap:
    """Rebuild a tree from its nested-array form"""
    if not isinstance(data, list) or not data:
        raise ValueError(f"malformed expression JSON: {data!r}")
    tag = data[0]
    if tag == "const":
        return Const(complex(float(data[1]), float(data[2]) if len(data) > 2 else 0.0))
    if tag == "v":
        return V
    if tag in _JSON_BINARY:
        return _JSON_BINARY[tag](from_json(data[1]), from_json(data[2]))
    if tag == "neg":
        return neg(from_json(data[1]))
    if tag == "pow":
        return power(from_json(data[1]), int(data[2]))
    if tag == "sqrt":
        return Sqrt(from_json(data[1]))
    if tag == "exp":
        return Exp(from_json(data[1]))
    if tag == "reflect":
        return reflect(from_json(data[1]))
    raise ValueError(f"unknown expression tag {tag!r}")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def offset(self, pos: Optional[int] = None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.src[:pos].encode("utf-8"))

    def error(self, message: str, pos: Optional[int] = None):
        raise HoloSyntaxError(message, self.offset(pos))

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> HoloMap:
        if not self.src.strip():
            self.error("empty expression")
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> HoloMap:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.src[self.pos]
            self.pos += 1
            rhs = self.term()
            node = add(node, rhs) if op == "+" else sub(node, rhs)
        return node

    def term(self) -> HoloMap:
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.src[self.pos]
            at = self.pos
            self.pos += 1
            rhs = self.unary()
            if op == "*":
                node = mul(node, rhs)
            else:
                try:
                    node = div(node, rhs)
                except Pole:
                    self.error("division by the zero constant", at)
        return node

    def unary(self) -> HoloMap:
        if self.peek() == "-":
            self.pos += 1
            return neg(self.unary())
        return self.power()

    def power(self) -> HoloMap:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                sign = -1
                self.pos += 1
            self.skip()
            start = self.pos
            while self.pos < len(self.src) and self.src[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected an integer exponent")
            try:
                return power(base, sign * int(self.src[start : self.pos]))
            except Pole:
                self.error("negative power of the zero constant", start)
        return base

    def number(self) -> HoloMap:
        start = self.pos
        src = self.src
        while self.pos < len(src) and (src[self.pos].isdigit() or src[self.pos] == "."):
            self.pos += 1
        if self.pos < len(src) and src[self.pos] in "eE":
            look = self.pos + 1
            if look < len(src) and src[look] in "+-":
                look += 1
            if look < len(src) and src[look].isdigit():
                self.pos = look
                while self.pos < len(src) and src[self.pos].isdigit():
                    self.pos += 1
        text = src[start : self.pos]
        try:
            value = float(text)
        except ValueError:
            self.error(f"malformed number {text!r}", start)
        if self.pos < len(src) and src[self.pos] == "i" and not self._ident_continues(self.pos + 1):
            self.pos += 1
            return Const(complex(0.0, value))
        return Const(value)

    def _ident_continues(self, pos: int) -> bool:
        return pos < len(self.src) and (self.src[pos].isalnum() or self.src[pos] == "_")

    def atom(self) -> HoloMap:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of expression")
        if ch.isdigit() or ch == ".":
            return self.number()
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch.isalpha():
            start = self.pos
            while self._ident_continues(self.pos):
                self.pos += 1
            name = self.src[start : self.pos]
            if name == "v":
                return V
            if name == "i":
                return Const(1j)
            if name in ("sqrt", "exp"):
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Sqrt(arg) if name == "sqrt" else Exp(arg)
            self.error(f"unknown name {name!r}", start)
        self.error(f"unexpected {ch!r}")
        raise AssertionError("unreachable")


def parse(src: str) -> HoloMap:
    """
    Parse an expression string

    Args:
        src: expression in the module grammar

    Returns:
        HoloMap

    Raises:
        HoloSyntaxError: with the byte offset of the problem
    """
    return _Parser(src).parse()


# ---------------------------------------------------------------------------
# sympy bridge
# ---------------------------------------------------------------------------


def to_sympy(m: HoloMap, symbol=None):
    """Exact sympy expression; decimal constants become rationals"""
    import sympy

    v = symbol if symbol is not None else sympy.Symbol("v")

    def rational(x: float):
        return sympy.Rational(repr(float(x)))

    def walk(node: HoloMap):
        if isinstance(node, Const):
            return rational(node.value.real) + sympy.I * rational(node.value.imag)
        if isinstance(node, Var):
            return v
        if isinstance(node, Add):
            return walk(node.a) + walk(node.b)
        if isinstance(node, Sub):
            return walk(node.a) - walk(node.b)
        if isinstance(node, Mul):
            return walk(node.a) * walk(node.b)
        if isinstance(node, Div):
            return walk(node.a) / walk(node.b)
        if isinstance(node, Neg):
            return -walk(node.a)
        if isinstance(node, Pow):
            return walk(node.a) ** node.n
        if isinstance(node, Sqrt):
            return sympy.sqrt(walk(node.a))
        if isinstance(node, Exp):
            return sympy.exp(walk(node.a))
        if isinstance(node, ReflectedMap):
            return walk(node.materialize())
        if isinstance(node, Restricted):
            return walk(node.base)
        raise ValueError(f"{node.to_source()} has no symbolic form")

    return walk(m)


def cut_distance(m: HoloMap, v) -> np.ndarray:
    """Distance of every sqrt argument in the tree to the negative real axis, minimised"""
    v = np.asarray(v, dtype=complex)
    out = np.full(v.shape, np.inf)
    if isinstance(m, ReflectedMap):
        return cut_distance(m.base, np.conj(v))
    if isinstance(m, Sqrt):
        with np.errstate(all="ignore"):
            w = m.a.eval(v, strict=False)
        out = np.where(w.real < 0, np.abs(w.imag), np.abs(w))
        out = np.where(np.isfinite(out), out, 0.0)
    for child in m.children():
        out = np.minimum(out, cut_distance(child, v))
    return out


def central_difference(m: HoloMap, v, step: Optional[float] = None):
    """(m(v + h) - m(v - h)) / 2h"""
    h = config.FD_STEP if step is None else step
    v = np.asarray(v, dtype=complex)
    return (m(v + h) - m(v - h)) / (2 * h)


__all__: List[str] = [
    "Region", "HoloMap", "Const", "Var", "Add", "Sub", "Mul", "Div", "Neg", "Pow", "Sqrt",
    "Exp", "ReflectedMap", "SampledMap", "Restricted", "ZERO", "ONE", "V", "add", "sub",
    "mul", "div", "neg", "power", "sqrt", "exp", "reflect", "lift_const",
    "derivative", "parse", "to_source", "to_json", "from_json", "to_sympy",
    "central_difference", "has_real_coefficients", "cut_distance",
]
