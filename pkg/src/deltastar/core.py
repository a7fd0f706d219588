"""Piecewise trigonometric functions on the cut two-particle configuration space.

A function is stored chart by chart.  The charts are the off-diagonal
quadrants ``Off(i, j)`` (particle x on edge i, particle y on edge j, i != j)
and the two triangles of every diagonal quadrant, ``Lower(i)`` (x > y) and
``Upper(i)`` (x < y).  On each chart the function is a rational combination
of eight monomials

    tx(kx * x) * ty(ky * y),   tx, ty in {cos, sin},  (kx, ky) in {(k1, k2), (k2, k1)}

so the whole object is a finite map ``Region -> 8 Fractions``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

Rational = Union[int, Fraction, str]

COS, SIN = "C", "S"
A12, A21 = "12", "21"

ZERO = Fraction(0)


class ParameterError(ValueError):
    """Raised when parameters violate the genericity requirements."""


def as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact parameters")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """Serialize as ``p/q`` in lowest terms, or ``p`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"not a rational number: {text!r}") from exc


@dataclass(frozen=True)
class Params:
    n: int
    k1: Fraction
    k2: Fraction
    c: Fraction

    def __init__(self, n: int, k1: Rational, k2: Rational, c: Rational):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "k1", as_fraction(k1))
        object.__setattr__(self, "k2", as_fraction(k2))
        object.__setattr__(self, "c", as_fraction(c))
        self.validate()

    def validate(self) -> None:
        if self.n < 2:
            raise ParameterError("graph size n must be at least 2")
        if self.k1 == 0 or self.k2 == 0:
            raise ParameterError("momenta must be nonzero")
        if abs(self.k1) == abs(self.k2):
            raise ParameterError("momenta must differ in absolute value")
        if self.c == 0:
            raise ParameterError("coupling c must be nonzero")

    def momenta(self, assign: str) -> Tuple[Fraction, Fraction]:
        """(momentum on x, momentum on y) for a momentum assignment."""
        return (self.k1, self.k2) if assign == A12 else (self.k2, self.k1)

    def with_c(self, c: Rational) -> "Params":
        return Params(self.n, self.k1, self.k2, c)

    def as_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "k1": format_rational(self.k1),
            "k2": format_rational(self.k2),
            "c": format_rational(self.c),
        }


@dataclass(frozen=True, order=True)
class Region:
    """One chart of the cut configuration space.

    ``kind`` is ``"off"``, ``"lower"`` or ``"upper"``.  For the two diagonal
    kinds ``j == i``.  Edge indices are 1-based.
    """

    kind: str
    i: int
    j: int

    @staticmethod
    def off(i: int, j: int) -> "Region":
        if i == j:
            raise ValueError("off-diagonal region needs distinct edges")
        return Region("off", i, j)

    @staticmethod
    def lower(i: int) -> "Region":
        return Region("lower", i, i)

    @staticmethod
    def upper(i: int) -> "Region":
        return Region("upper", i, i)

    @property
    def diagonal(self) -> bool:
        return self.kind != "off"

    @property
    def label(self) -> str:
        if self.kind == "off":
            return f"Off({self.i},{self.j})"
        return f"{self.kind.capitalize()}({self.i})"

    def valid_for(self, n: int) -> bool:
        return 1 <= self.i <= n and 1 <= self.j <= n and (self.kind == "off") == (self.i != self.j)

    def __repr__(self) -> str:
        return self.label


def parse_region(label: str) -> Region:
    name, _, rest = label.strip().partition("(")
    idx = [int(s) for s in rest.rstrip(")").split(",")]
    name = name.lower()
    if name == "off" and len(idx) == 2:
        return Region.off(*idx)
    if name in ("lower", "upper") and len(idx) == 1:
        return Region(name, idx[0], idx[0])
    raise ValueError(f"bad region label: {label!r}")


def regions(n: int) -> List[Region]:
    """All n^2 + n regions in canonical order: off-diagonal row-major, then Lower/Upper pairs."""
    out = [Region.off(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for i in range(1, n + 1):
        out += [Region.lower(i), Region.upper(i)]
    return out


@dataclass(frozen=True)
class TrigMonomial:
    tx: str
    ty: str
    assign: str

    @property
    def label(self) -> str:
        return f"{self.tx}{self.ty}{self.assign}"


# canonical order (assign, tx, ty) with A12 < A21 and cos < sin
MONOMIALS: Tuple[TrigMonomial, ...] = tuple(
    TrigMonomial(tx, ty, a) for a in (A12, A21) for tx in (COS, SIN) for ty in (COS, SIN)
)
MONO_INDEX = {m: k for k, m in enumerate(MONOMIALS)}
MONO_BY_LABEL = {m.label: m for m in MONOMIALS}


def mono_index(tx: str, ty: str, assign: str) -> int:
    return MONO_INDEX[TrigMonomial(tx, ty, assign)]


Coeffs = Tuple[Fraction, ...]
ZERO8: Coeffs = (ZERO,) * 8


class Wave:
    """A piecewise trigonometric polynomial; immutable.

    Regions that are absent carry the zero function.  Zero coefficient
    vectors are pruned on construction, so equality of Waves is equality of
    functions.
    """

    __slots__ = ("params", "_coeffs")

    def __init__(self, params: Params, coeffs: Mapping[Region, Sequence[Rational]] | None = None):
        self.params = params
        store: Dict[Region, Coeffs] = {}
        for region, vec in (coeffs or {}).items():
            if not region.valid_for(params.n):
                raise ValueError(f"region {region} invalid for n={params.n}")
            if len(vec) != 8:
                raise ValueError("coefficient vectors have length 8")
            vec = tuple(as_fraction(v) for v in vec)
            if any(vec):
                store[region] = vec
        self._coeffs = store

    @classmethod
    def zero(cls, params: Params) -> "Wave":
        return cls(params)

    def coeffs(self, region: Region) -> Coeffs:
        return self._coeffs.get(region, ZERO8)

    def support(self) -> List[Region]:
        return sorted(self._coeffs, key=_REGION_SORT)

    def items(self) -> Iterator[Tuple[Region, Coeffs]]:
        for r in self.support():
            yield r, self._coeffs[r]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Wave):
            return NotImplemented
        return self.params == other.params and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.params, frozenset(self._coeffs.items())))

    def __add__(self, other: "Wave") -> "Wave":
        return wave_add(self, other)

    def __sub__(self, other: "Wave") -> "Wave":
        return wave_add(self, wave_scale(-1, other))

    def __neg__(self) -> "Wave":
        return wave_scale(-1, self)

    def __rmul__(self, q: Rational) -> "Wave":
        return wave_scale(q, self)

    def __repr__(self) -> str:
        parts = []
        for region, vec in self.items():
            terms = [f"{format_rational(v)}*{m.label}" for m, v in zip(MONOMIALS, vec) if v]
            parts.append(f"{region.label}: " + " + ".join(terms))
        return "Wave(" + "; ".join(parts) + ")"


def _REGION_SORT(r: Region) -> Tuple[int, int, int]:
    return (0, r.i, r.j) if r.kind == "off" else (1, r.i, 0 if r.kind == "lower" else 1)


def wave_add(a: Wave, b: Wave) -> Wave:
    if a.params != b.params:
        raise ValueError("cannot add Waves with different parameters")
    out: Dict[Region, List[Fraction]] = {r: list(v) for r, v in a._coeffs.items()}
    for r, v in b._coeffs.items():
        acc = out.setdefault(r, [ZERO] * 8)
        for k in range(8):
            acc[k] += v[k]
    return Wave(a.params, out)


def wave_scale(q: Rational, a: Wave) -> Wave:
    q = as_fraction(q)
    if q == 0:
        return Wave(a.params)
    return Wave(a.params, {r: [q * x for x in v] for r, v in a._coeffs.items()})


def linear_combination(params: Params, terms: Iterable[Tuple[Rational, Wave]]) -> Wave:
    out: Dict[Region, List[Fraction]] = {}
    for q, w in terms:
        q = as_fraction(q)
        if q == 0:
            continue
        if w.params != params:
            raise ValueError("cannot combine Waves with different parameters")
        for r, v in w._coeffs.items():
            acc = out.setdefault(r, [ZERO] * 8)
            for k in range(8):
                acc[k] += q * v[k]
    return Wave(params, out)


# -- coordinates ---------------------------------------------------------


def coord_layout(n: int) -> List[Tuple[Region, TrigMonomial]]:
    return [(r, m) for r in regions(n) for m in MONOMIALS]


def coord_length(n: int) -> int:
    return 8 * (n * n + n)


def _region_offsets(n: int) -> Dict[Region, int]:
    return {r: 8 * k for k, r in enumerate(regions(n))}


def to_coords(w: Wave) -> List[Fraction]:
    """Flatten to a vector of length 8(n^2+n) in canonical (region, monomial) order."""
    n = w.params.n
    vec = [ZERO] * coord_length(n)
    offsets = _region_offsets(n)
    for r, v in w._coeffs.items():
        base = offsets[r]
        vec[base:base + 8] = v
    return vec


def from_coords(vec: Sequence[Rational], params: Params) -> Wave:
    n = params.n
    if len(vec) != coord_length(n):
        raise ValueError(f"expected {coord_length(n)} coordinates, got {len(vec)}")
    return Wave(params, {r: vec[8 * k:8 * k + 8] for k, r in enumerate(regions(n))})


def to_tsv(w: Wave) -> str:
    """Nonzero coordinates as ``region<TAB>monomial<TAB>p/q`` rows."""
    lines = []
    for region, vec in w.items():
        for m, v in zip(MONOMIALS, vec):
            if v:
                lines.append(f"{region.label}\t{m.label}\t{format_rational(v)}")
    return "\n".join(lines) + ("\n" if lines else "")


def from_tsv(text: str, params: Params) -> Wave:
    acc: Dict[Region, List[Fraction]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected 3 tab-separated fields")
        region = parse_region(fields[0])
        mono = MONO_BY_LABEL.get(fields[1])
        if mono is None:
            raise ValueError(f"line {lineno}: unknown monomial {fields[1]!r}")
        acc.setdefault(region, [ZERO] * 8)[MONO_INDEX[mono]] += parse_rational(fields[2])
    return Wave(params, acc)
