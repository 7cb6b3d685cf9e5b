"""Sparse polynomial algebra over the commuting formal pair (z, zbar).

A polynomial is stored as a map from exponent pairs ``(a, b)`` to complex
coefficients, representing ``sum c[a,b] * z**a * zbar**b``.  The two symbols
are treated as independent formal variables; evaluation substitutes
``z = w, zbar = conj(w)``, so every polynomial defines a smooth function of
one complex argument (equivalently of (x, y) with w = x + i*y).

Conventions baked into the representation:

- canonical form: no stored coefficient is exactly 0, so ``p == q`` is a plain
  dict comparison; arithmetic never epsilon-prunes (use :meth:`PolyZZbar.prune`
  for display),
- ``degree`` is max(a + b) over stored terms, and -1 for the zero polynomial,
- the Wirtinger derivatives act formally: d/dz lowers ``a`` (zbar held fixed),
  d/dzbar lowers ``b``,
- ``conjugate`` represents the pointwise complex conjugate of the function:
  it swaps (a, b) -> (b, a) and conjugates coefficients, so
  ``conjugate(p).eval(w) == conj(p.eval(w))``.

:class:`PolyWWbar` generalizes to n complex slots (w_1, wbar_1, ..., w_n,
wbar_n); it exists to express outer functions F for composition
F(phi_1, ..., phi_n), and :func:`compose` maps such an F together with a
vector of (z, zbar)-polynomials back into a single (z, zbar)-polynomial.

All values are immutable after construction and safe to share across threads;
every operation returns a new object.
"""

from __future__ import annotations

import json
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence, Union

import numpy as np

Scalar = Union[int, float, complex]


def _canonical(terms: Mapping[tuple[int, int], complex]) -> dict[tuple[int, int], complex]:
    out: dict[tuple[int, int], complex] = {}
    for (a, b), c in terms.items():
        if a < 0 or b < 0:
            raise ValueError(f"exponents must be nonnegative, got {(a, b)}")
        c = complex(c)
        if c != 0:
            out[(int(a), int(b))] = c
    return out


class PolyZZbar:
    """Polynomial in (z, zbar) with complex double coefficients."""

    __slots__ = ("_terms", "_dense")

    def __init__(self, terms: Mapping[tuple[int, int], complex] | None = None):
        self._terms = MappingProxyType(_canonical(terms or {}))
        self._dense: np.ndarray | None = None  # lazy eval table, not part of identity

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "PolyZZbar":
        return cls({})

    @classmethod
    def constant(cls, c: Scalar) -> "PolyZZbar":
        return cls({(0, 0): complex(c)})

    @classmethod
    def z(cls) -> "PolyZZbar":
        return cls({(1, 0): 1.0})

    @classmethod
    def zbar(cls) -> "PolyZZbar":
        return cls({(0, 1): 1.0})

    @classmethod
    def monomial(cls, a: int, b: int, c: Scalar = 1.0) -> "PolyZZbar":
        return cls({(a, b): complex(c)})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple[int, int], complex]:
        return self._terms

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(a + b for a, b in self._terms)

    def coeff(self, a: int, b: int) -> complex:
        return self._terms.get((a, b), 0j)

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def items_sorted(self) -> list[tuple[tuple[int, int], complex]]:
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyZZbar):
            return dict(self._terms) == dict(other._terms)
        if isinstance(other, (int, float, complex)):
            return self == PolyZZbar.constant(other)
        return NotImplemented

    __hash__ = None  # mutable-dict semantics; not hashable

    def __repr__(self) -> str:
        if not self._terms:
            return "PolyZZbar(0)"
        parts = []
        for (a, b), c in self.items_sorted():
            mono = "*".join(
                s for s in (f"z^{a}" if a else "", f"zbar^{b}" if b else "") if s
            )
            parts.append(f"({c:g})" + (f"*{mono}" if mono else ""))
        return "PolyZZbar(" + " + ".join(parts) + ")"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "PolyZZbar" | Scalar) -> "PolyZZbar":
        if isinstance(other, (int, float, complex)):
            other = PolyZZbar.constant(other)
        if not isinstance(other, PolyZZbar):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0j) + c
        return PolyZZbar(out)

    def __radd__(self, other: Scalar) -> "PolyZZbar":
        return self + other

    def __neg__(self) -> "PolyZZbar":
        return PolyZZbar({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "PolyZZbar" | Scalar) -> "PolyZZbar":
        return self + (-other if isinstance(other, PolyZZbar) else -complex(other))

    def __rsub__(self, other: Scalar) -> "PolyZZbar":
        return (-self) + other

    def __mul__(self, other: "PolyZZbar" | Scalar) -> "PolyZZbar":
        if isinstance(other, (int, float, complex)):
            c = complex(other)
            return PolyZZbar({k: v * c for k, v in self._terms.items()})
        if not isinstance(other, PolyZZbar):
            return NotImplemented
        out: dict[tuple[int, int], complex] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0j) + c1 * c2
        return PolyZZbar(out)

    def __rmul__(self, other: Scalar) -> "PolyZZbar":
        return self * other

    def __truediv__(self, other: Scalar) -> "PolyZZbar":
        return self * (1.0 / complex(other))

    def __pow__(self, n: int) -> "PolyZZbar":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = PolyZZbar.constant(1.0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus -----------------------------------------------------------

    def wirtinger_dz(self) -> "PolyZZbar":
        """Formal d/dz: (a, b) -> (a-1, b) with factor a; zbar held constant."""
        return PolyZZbar(
            {(a - 1, b): a * c for (a, b), c in self._terms.items() if a >= 1}
        )

    def wirtinger_dzbar(self) -> "PolyZZbar":
        """Formal d/dzbar: (a, b) -> (a, b-1) with factor b; z held constant."""
        return PolyZZbar(
            {(a, b - 1): b * c for (a, b), c in self._terms.items() if b >= 1}
        )

    def conjugate(self) -> "PolyZZbar":
        """Pointwise complex conjugate: swap exponents, conjugate coefficients."""
        return PolyZZbar({(b, a): c.conjugate() for (a, b), c in self._terms.items()})

    # -- evaluation ---------------------------------------------------------

    def _dense_table(self) -> np.ndarray:
        if self._dense is None:
            amax = max((a for a, _ in self._terms), default=0)
            bmax = max((b for _, b in self._terms), default=0)
            table = np.zeros((amax + 1, bmax + 1), dtype=complex)
            for (a, b), c in self._terms.items():
                table[a, b] = c
            self._dense = table
        return self._dense

    def eval(self, w):
        """Evaluate at z = w, zbar = conj(w); w may be a scalar or ndarray.

        Nested Horner accumulation over a dense coefficient table: the inner
        loop runs Horner in conj(w) per z-power, the outer loop in w.
        """
        scalar = np.isscalar(w) or isinstance(w, complex)
        if not self._terms:
            return 0j if scalar else np.zeros(np.shape(w), dtype=complex)
        table = self._dense_table()
        wv = np.asarray(w, dtype=complex)
        wbar = np.conjugate(wv)
        acc = np.zeros_like(wv)
        for row in table[::-1]:
            inner = np.zeros_like(wv)
            for c in row[::-1]:
                inner = inner * wbar + c
            acc = acc * wv + inner
        return complex(acc) if scalar else acc

    # -- utilities ----------------------------------------------------------

    def prune(self, eps: float) -> "PolyZZbar":
        """Drop terms with |coeff| <= eps (display helper, not used in algebra)."""
        return PolyZZbar({k: c for k, c in self._terms.items() if abs(c) > eps})

    def map_coeffs(self, fn: Callable[[complex], complex]) -> "PolyZZbar":
        return PolyZZbar({k: fn(c) for k, c in self._terms.items()})

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        """JSON form: array of {a, b, re, im} sorted by (a, b) ascending."""
        return [
            {"a": a, "b": b, "re": c.real, "im": c.imag}
            for (a, b), c in self.items_sorted()
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> "PolyZZbar":
        return cls(
            {
                (int(t["a"]), int(t["b"])): complex(float(t["re"]), float(t["im"]))
                for t in obj
            }
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "PolyZZbar":
        return cls.from_json_obj(json.loads(text))


class PolyWWbar:
    """Polynomial in n complex slots and their conjugates.

    Exponent keys are tuples of length 2n: entry 2i is the power of w_i,
    entry 2i+1 the power of wbar_i.  Used as the outer function F in
    compositions F(phi_1, ..., phi_n); for n = 1 this mirrors PolyZZbar.
    """

    __slots__ = ("_n_slots", "_terms")

    def __init__(self, n_slots: int, terms: Mapping[tuple[int, ...], complex] | None = None):
        if n_slots < 1:
            raise ValueError("n_slots must be >= 1")
        self._n_slots = int(n_slots)
        out: dict[tuple[int, ...], complex] = {}
        for key, c in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != 2 * self._n_slots or any(e < 0 for e in key):
                raise ValueError(f"bad exponent tuple {key} for n_slots={n_slots}")
            c = complex(c)
            if c != 0:
                out[key] = c
        self._terms = MappingProxyType(out)

    @classmethod
    def constant(cls, c: Scalar, n_slots: int = 1) -> "PolyWWbar":
        return cls(n_slots, {(0,) * (2 * n_slots): complex(c)})

    @classmethod
    def slot(cls, i: int, n_slots: int = 1) -> "PolyWWbar":
        """The coordinate polynomial w_i."""
        key = [0] * (2 * n_slots)
        key[2 * i] = 1
        return cls(n_slots, {tuple(key): 1.0})

    @classmethod
    def slotbar(cls, i: int, n_slots: int = 1) -> "PolyWWbar":
        """The conjugate coordinate polynomial wbar_i."""
        key = [0] * (2 * n_slots)
        key[2 * i + 1] = 1
        return cls(n_slots, {tuple(key): 1.0})

    @property
    def n_slots(self) -> int:
        return self._n_slots

    @property
    def terms(self) -> Mapping[tuple[int, ...], complex]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyWWbar):
            return self._n_slots == other._n_slots and dict(self._terms) == dict(other._terms)
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"PolyWWbar(n_slots={self._n_slots}, terms={dict(self._terms)!r})"

    def _check_compatible(self, other: "PolyWWbar") -> None:
        if self._n_slots != other._n_slots:
            raise ValueError("slot count mismatch")

    def __add__(self, other: "PolyWWbar" | Scalar) -> "PolyWWbar":
        if isinstance(other, (int, float, complex)):
            other = PolyWWbar.constant(other, self._n_slots)
        self._check_compatible(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0j) + c
        return PolyWWbar(self._n_slots, out)

    __radd__ = __add__

    def __neg__(self) -> "PolyWWbar":
        return PolyWWbar(self._n_slots, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "PolyWWbar" | Scalar) -> "PolyWWbar":
        if isinstance(other, (int, float, complex)):
            other = PolyWWbar.constant(other, self._n_slots)
        return self + (-other)

    def __mul__(self, other: "PolyWWbar" | Scalar) -> "PolyWWbar":
        if isinstance(other, (int, float, complex)):
            c = complex(other)
            return PolyWWbar(self._n_slots, {k: v * c for k, v in self._terms.items()})
        self._check_compatible(other)
        out: dict[tuple[int, ...], complex] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = tuple(e1 + e2 for e1, e2 in zip(k1, k2))
                out[key] = out.get(key, 0j) + c1 * c2
        return PolyWWbar(self._n_slots, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyWWbar":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = PolyWWbar.constant(1.0, self._n_slots)
        for _ in range(n):
            result = result * self
        return result

    def dslot(self, i: int) -> "PolyWWbar":
        """Formal d/dw_i."""
        pos = 2 * i
        out = {}
        for key, c in self._terms.items():
            e = key[pos]
            if e >= 1:
                nk = list(key)
                nk[pos] = e - 1
                out[tuple(nk)] = out.get(tuple(nk), 0j) + e * c
        return PolyWWbar(self._n_slots, out)

    def dslotbar(self, i: int) -> "PolyWWbar":
        """Formal d/dwbar_i."""
        pos = 2 * i + 1
        out = {}
        for key, c in self._terms.items():
            e = key[pos]
            if e >= 1:
                nk = list(key)
                nk[pos] = e - 1
                out[tuple(nk)] = out.get(tuple(nk), 0j) + e * c
        return PolyWWbar(self._n_slots, out)

    def eval(self, ws: Sequence) -> complex | np.ndarray:
        """Evaluate at slot values ws (scalars or broadcastable arrays)."""
        if len(ws) != self._n_slots:
            raise ValueError("wrong number of slot values")
        ws = [np.asarray(w, dtype=complex) for w in ws]
        wbars = [np.conjugate(w) for w in ws]
        acc: np.ndarray | complex = 0j
        for key, c in self._terms.items():
            term = np.asarray(c, dtype=complex)
            for i in range(self._n_slots):
                if key[2 * i]:
                    term = term * ws[i] ** key[2 * i]
                if key[2 * i + 1]:
                    term = term * wbars[i] ** key[2 * i + 1]
            acc = acc + term
        if all(w.ndim == 0 for w in ws):
            return complex(acc)
        return acc


def compose(outer: PolyWWbar | PolyZZbar, inner) -> PolyZZbar:
    """Exact polynomial composition outer(phi_1, ..., phi_n).

    ``inner`` is a PolyZZbar (single slot) or a sequence of them, one per slot
    of ``outer``; each wbar_i is substituted by the conjugate polynomial of
    phi_i, so eval(compose(F, phi), w) == F.eval([phi.eval(w), ...]) for all w.
    A PolyZZbar outer is accepted as the single-slot case with w = z.
    """
    if isinstance(outer, PolyZZbar):
        outer = PolyWWbar(1, {(a, b): c for (a, b), c in outer.terms.items()})
    if isinstance(inner, PolyZZbar):
        phis = [inner]
    else:
        phis = list(inner)
    if len(phis) != outer.n_slots:
        raise ValueError(
            f"outer has {outer.n_slots} slots but {len(phis)} inner polynomials given"
        )
    conj_phis = [p.conjugate() for p in phis]

    # Power tables keyed by slot, built to the largest exponent actually used.
    max_pow = [0] * (2 * outer.n_slots)
    for key in outer.terms:
        for pos, e in enumerate(key):
            max_pow[pos] = max(max_pow[pos], e)

    def powers(p: PolyZZbar, top: int) -> list[PolyZZbar]:
        out = [PolyZZbar.constant(1.0)]
        for _ in range(top):
            out.append(out[-1] * p)
        return out

    pow_tables = []
    for i in range(outer.n_slots):
        pow_tables.append(powers(phis[i], max_pow[2 * i]))
        pow_tables.append(powers(conj_phis[i], max_pow[2 * i + 1]))

    result = PolyZZbar.zero()
    for key, c in outer.terms.items():
        term = PolyZZbar.constant(c)
        for pos, e in enumerate(key):
            if e:
                term = term * pow_tables[pos][e]
        result = result + term
    return result
