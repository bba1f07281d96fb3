"""Exact scalar fields: the rationals and prime fields of odd characteristic."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import CharacteristicError, PresentationError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """``characteristic == 0`` is the rationals, otherwise ``F_p`` for an odd prime ``p``.

    Elements are :class:`fractions.Fraction` over the rationals and reduced
    ``int`` residues over ``F_p``. Characteristic 2 is rejected here, so every
    entry point that builds a field inherits the guard.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 2:
            raise CharacteristicError()
        if p != 0 and not _is_prime(p):
            raise ValueError(f"{p} is not a prime")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        text = text.strip()
        if text in ("Q", "QQ"):
            return cls(0)
        m = re.fullmatch(r"(?:F|GF)_?(\d+)", text)
        if not m:
            raise PresentationError(f"unknown field '{text}' (expected Q or F<p>)")
        return cls(int(m.group(1)))

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime field"

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def order(self) -> int | None:
        return self.characteristic or None

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    # scalars

    def __call__(self, x) -> Fraction | int:
        p = self.characteristic
        if p == 0:
            return x if type(x) is Fraction else Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, str):
            return self(Fraction(x))
        return int(x) % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return 1 / x if p == 0 else pow(int(x), -1, p)

    def elements(self):
        if not self.is_finite:
            raise ValueError("the rationals cannot be enumerated")
        return range(self.characteristic)

    def format(self, x) -> str:
        if self.characteristic:
            return str(int(x))
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    # matrices (numpy object arrays holding exact scalars)

    def matrix(self, rows, shape: tuple[int, int] | None = None) -> np.ndarray:
        arr = np.array(rows, dtype=object)
        if shape is not None:
            arr = arr.reshape(shape)
        if arr.ndim != 2:
            if arr.size == 0 and shape is None:
                raise ValueError("empty matrices need an explicit shape")
            raise ValueError(f"expected a 2-d matrix, got shape {arr.shape}")
        return self.reduce(arr)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        out = np.empty(arr.shape, dtype=object)
        flat_in, flat_out = arr.reshape(-1), out.reshape(-1)
        for i in range(flat_in.size):
            flat_out[i] = self(flat_in[i])
        return out

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        out = np.empty((rows, cols), dtype=object)
        out.fill(self.zero)
        return out

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.one
        return out

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] != b.shape[0]:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        if a.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        prod = a @ b
        return prod % self.characteristic if self.characteristic else prod

    def is_zero(self, a: np.ndarray) -> bool:
        return all(x == 0 for x in a.reshape(-1))
