"""Exact elements of a Hahn group over rational index points.

An :class:`Exponent` is a finitely described element of the Hahn group
``G`` over an ordered index set.  It is a rational combination of two kinds
of basis elements:

* ``e(i)``, the atom ``1_i`` carrying coefficient 1 at index ``i``;
* ``tau(i)``, the tail ``1_{s(i)} + 1_{s(s(i))} + ...`` for the right shift
  ``s(i) = i + offset``.

Tails have infinite (but well-ordered) support.  Exponents are compared
lexicographically: the sign of ``g`` is the sign of its coefficient at the
least index of its support, so ``e(0) > e(1) > 0``.

Representations are canonical, which makes ``==`` and ``hash`` semantic:
``tau(0)`` and ``e(1) + tau(1)`` construct the same object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterator, Mapping

from .errors import ConfigurationError, DomainError, ModeMismatchError

__all__ = [
    "ShiftMap",
    "Exponent",
    "exp_add",
    "exp_sign",
    "exp_cmp",
    "tail_unfold",
    "format_rational",
]


def _q(x) -> Fraction:
    if type(x) is int or isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, str or Fraction")
    return Fraction(x)


def _norm(x):
    """Integral rationals as ints: identical hashing and ordering, much cheaper."""
    if type(x) is int:
        return x
    return x.numerator if x.denominator == 1 else x


def format_rational(q: Fraction) -> str:
    """Render ``q`` as ``p`` or ``p/q`` in lowest terms."""
    q = _q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class ShiftMap:
    """The right shift ``i -> i + offset`` on integer index points."""

    offset: int = 1

    def __post_init__(self):
        if not isinstance(self.offset, int) or isinstance(self.offset, bool):
            raise ConfigurationError(f"shift offset must be an int, got {self.offset!r}")
        if self.offset < 1:
            raise ConfigurationError(f"shift offset must be >= 1, got {self.offset}")

    def __call__(self, phi):
        return _q(phi) + self.offset


def _offset(shift) -> int | None:
    if shift is None or isinstance(shift, int):
        if isinstance(shift, int):
            ShiftMap(shift)
        return shift
    if isinstance(shift, ShiftMap):
        return shift.offset
    raise TypeError(f"expected ShiftMap or int, got {shift!r}")


def _is_integer(q: Fraction) -> bool:
    return q.denominator == 1


def _in_class(p: Fraction, s: int, r: int) -> bool:
    return p.denominator == 1 and p.numerator % s == r


def _class_runs(atoms, tails, s, r):
    """Maximal constant runs of the coefficient function on the class ``r mod s``.

    Returns ``[(start, count, value), ...]``.  The first entry is the zero run
    extending to minus infinity (``start`` is None); ``count`` None means the
    run is unbounded.
    """
    pts = sorted({p for p in atoms if _in_class(p, s, r)} | {p for p in tails if p.numerator % s == r})
    pieces = []
    mass = Fraction(0)
    prev = None
    for p in pts:
        if prev is not None:
            gap = (p - prev) // s - 1
            if gap:
                pieces.append((prev + s, gap, mass))
        pieces.append((p, 1, atoms.get(p, 0) + mass))
        mass += tails.get(p, 0)
        prev = p
    pieces.append((prev + s, None, mass))

    runs = [(None, None, Fraction(0))]
    for start, count, value in pieces:
        last_start, last_count, last_value = runs[-1]
        if value == last_value:
            if last_count is not None:
                runs[-1] = (last_start, None if count is None else last_count + count, value)
        else:
            runs.append((start, count, value))
    return runs


def _tail_classes(tails, s):
    return sorted({int(p) % s for p in tails})


def _canonicalize(atoms, tails, s):
    """Rewrite (atoms, tails) into the unique compact form of their sum.

    The coefficient function on each residue class is eventually constant.
    That final value, if non-zero, becomes a single tail just before the
    final run; every earlier point keeps its coefficient as an atom.  A
    finitely supported exponent therefore never carries tails.
    """
    classes = _tail_classes(tails, s)
    new_atoms = {p: c for p, c in atoms.items() if not any(_in_class(p, s, r) for r in classes)}
    new_tails = {}
    for r in classes:
        runs = _class_runs(atoms, tails, s, r)[1:]
        if not runs:
            continue
        for start, count, value in runs[:-1]:
            if value:
                for k in range(count):
                    new_atoms[start + k * s] = value
        start, _, value = runs[-1]
        if value:
            new_tails[start - s] = value
    return new_atoms, new_tails


class Exponent:
    """An element of the Hahn group, stored in canonical form.

    ``atoms`` maps index points to coefficients of ``e(i)``; ``tails`` maps
    integer index points to coefficients of ``tau(i)``.  ``shift`` is the
    offset of the right shift the tails refer to; it is None exactly when
    there are no tails, so tail-free exponents combine with any mode.
    """

    __slots__ = ("_atoms", "_tails", "_shift", "_hash", "_lead")

    def __init__(self, atoms: Mapping | None = None, tails: Mapping | None = None, shift=None):
        a = {}
        for k, v in (atoms or {}).items():
            k, v = _q(k), _q(v)
            if v:
                a[k] = a.get(k, 0) + v
        t = {}
        for k, v in (tails or {}).items():
            k, v = _q(k), _q(v)
            if v:
                t[k] = t.get(k, 0) + v
        s = _offset(shift)
        if t:
            if s is None:
                raise ConfigurationError("tail elements need a shift map")
            bad = [k for k in t if not _is_integer(k)]
            if bad:
                raise DomainError(f"tail index points must be integers in shift mode, got {format_rational(bad[0])}")
            a, t = _canonicalize(a, t, s)
        a = {_norm(k): _norm(v) for k, v in a.items() if v}
        t = {_norm(k): _norm(v) for k, v in t.items() if v}
        self._atoms = tuple(sorted(a.items()))
        self._tails = tuple(sorted(t.items()))
        self._shift = s if self._tails else None
        self._hash = None
        self._lead = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> Exponent:
        return cls()

    @classmethod
    def atom(cls, index, coeff=1) -> Exponent:
        return cls({index: coeff})

    @classmethod
    def tail(cls, index, shift, coeff=1) -> Exponent:
        return cls(tails={index: coeff}, shift=shift)

    @classmethod
    def _raw(cls, atoms: tuple, tails: tuple, shift) -> Exponent:
        obj = cls.__new__(cls)
        obj._atoms = atoms
        obj._tails = tails
        obj._shift = shift if tails else None
        obj._hash = None
        obj._lead = None
        return obj

    # -- accessors ----------------------------------------------------------

    @property
    def atoms(self) -> dict:
        return dict(self._atoms)

    @property
    def tails(self) -> dict:
        return dict(self._tails)

    @property
    def shift(self) -> int | None:
        return self._shift

    def has_tails(self) -> bool:
        return bool(self._tails)

    def is_zero(self) -> bool:
        return not self._atoms and not self._tails

    def __bool__(self):
        return not self.is_zero()

    def coeff_at(self, index) -> Fraction:
        """Coefficient of ``1_index`` in the (possibly infinite) expansion."""
        index = _q(index)
        c = dict(self._atoms).get(index, Fraction(0))
        s = self._shift
        for p, v in self._tails:
            if p < index and _is_integer(index) and (index - p).numerator % s == 0:
                c += v
        return c

    def leading(self) -> tuple[Fraction, Fraction] | None:
        """``(index, coefficient)`` at the least point of the support."""
        if self._lead is None:
            self._lead = (self._compute_leading(),)
        return self._lead[0]

    def _compute_leading(self):
        if not self._tails:
            return self._atoms[0] if self._atoms else None
        s = self._shift
        tails = dict(self._tails)
        atoms = dict(self._atoms)
        classes = _tail_classes(tails, s)
        best = None
        for p, c in self._atoms:
            if not any(_in_class(p, s, r) for r in classes):
                best = (p, c)
                break
        for r in classes:
            runs = _class_runs(atoms, tails, s, r)
            if len(runs) > 1:
                start, _, value = runs[1]
                if best is None or start < best[0]:
                    best = (start, value)
        return best

    def leading_index(self) -> Fraction | None:
        lead = self.leading()
        return None if lead is None else lead[0]

    def sign(self) -> int:
        lead = self.leading()
        if lead is None:
            return 0
        return 1 if lead[1] > 0 else -1

    def expand(self, depth: int) -> dict:
        """Finite approximation: every tail replaced by its first ``depth`` atoms."""
        out = dict(self._atoms)
        for p, v in self._tails:
            for n in range(1, depth + 1):
                k = p + n * self._shift
                out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}

    # -- group structure ----------------------------------------------------

    def _join_shift(self, other: Exponent):
        if self._shift is not None and other._shift is not None and self._shift != other._shift:
            raise ModeMismatchError(f"exponents use different shifts (+{self._shift} vs +{other._shift})")
        return self._shift if self._shift is not None else other._shift

    def __add__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        shift = self._join_shift(other)
        if not other._atoms and not other._tails:
            return self
        if not self._atoms and not self._tails:
            return other
        atoms = dict(self._atoms)
        for k, v in other._atoms:
            atoms[k] = atoms.get(k, 0) + v
        if not self._tails and not other._tails:
            return Exponent._raw(tuple(sorted((k, _norm(v)) for k, v in atoms.items() if v)), (), None)
        tails = dict(self._tails)
        for k, v in other._tails:
            tails[k] = tails.get(k, 0) + v
        return Exponent(atoms, tails, shift)

    def __neg__(self):
        return Exponent._raw(tuple((k, -v) for k, v in self._atoms), tuple((k, -v) for k, v in self._tails), self._shift)

    def __sub__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, q):
        if isinstance(q, Exponent):
            return NotImplemented
        q = _q(q)
        if not q:
            return Exponent()
        # scaling preserves the canonical run structure
        return Exponent._raw(
            tuple((k, _norm(v * q)) for k, v in self._atoms), tuple((k, _norm(v * q)) for k, v in self._tails), self._shift
        )

    __rmul__ = __mul__

    # -- order --------------------------------------------------------------

    def cmp(self, other: Exponent) -> int:
        if not self._tails and not other._tails:
            # merge the sorted atom lists; the first differing index decides
            a, b = self._atoms, other._atoms
            i = j = 0
            while i < len(a) or j < len(b):
                if j == len(b) or (i < len(a) and a[i][0] < b[j][0]):
                    return 1 if a[i][1] > 0 else -1
                if i == len(a) or b[j][0] < a[i][0]:
                    return -1 if b[j][1] > 0 else 1
                if a[i][1] != b[j][1]:
                    return 1 if a[i][1] > b[j][1] else -1
                i += 1
                j += 1
            return 0
        return (self - other).sign()

    def __lt__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        return self.cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        return self.cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        return self.cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        return self.cmp(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        return self._atoms == other._atoms and self._tails == other._tails and self._shift == other._shift

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._atoms, self._tails, self._shift))
        return self._hash

    # -- text ---------------------------------------------------------------

    def _basis_terms(self) -> Iterator[tuple[str, Fraction, Fraction]]:
        items = [(k, 0, "e", v) for k, v in self._atoms] + [(k, 1, "tau", v) for k, v in self._tails]
        for k, _, kind, v in sorted(items):
            yield kind, v, k

    def render(self) -> str:
        """Canonical text, e.g. ``2*e(0) - 1*tau(1)``; the zero element is ``0``."""
        parts = []
        for kind, v, k in self._basis_terms():
            body = f"{format_rational(abs(v))}*{kind}({format_rational(k)})"
            if not parts:
                parts.append(body if v > 0 else "-" + body)
            else:
                parts.append((" + " if v > 0 else " - ") + body)
        return "".join(parts) or "0"

    __str__ = render

    def __repr__(self):
        if self._shift is None:
            return f"Exponent({self.render()!r})"
        return f"Exponent({self.render()!r}, shift={self._shift})"


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return a + b


def exp_sign(a: Exponent) -> int:
    """-1, 0 or +1 according to the coefficient at the least support point."""
    return a.sign()


def exp_cmp(a: Exponent, b: Exponent) -> int:
    return a.cmp(b)


def tail_unfold(phi, sigma: ShiftMap) -> tuple[Exponent, Exponent]:
    """Split ``tau(phi)`` as ``e(sigma(phi)) + tau(sigma(phi))``."""
    phi = _q(phi)
    if not _is_integer(phi):
        raise DomainError(f"index point {format_rational(phi)} is not an integer")
    nxt = sigma(phi)
    return Exponent.atom(nxt), Exponent.tail(nxt, sigma)


def ceil_index(q: Fraction) -> int:
    return ceil(q)
