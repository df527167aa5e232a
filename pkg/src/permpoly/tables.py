"""Precomputed lookup tables backing the exhaustive sweeps.

The checkers sweep whole fields (up to 2^16 base elements, 2^20 extension
elements), so per-element work has to be table lookups on numpy arrays.
Everything here is derived from the reference arithmetic in `field` and
the reference evaluators in `maps`: linear maps are tabulated from their
images on the polynomial basis, multiplication goes through discrete
log/antilog tables built from a primitive element.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .field import ExtField, FieldSpec, extension_of, make_field
from .maps import eval_f_alpha, eval_g_beta
from .params import ParamSet

#: packed-integer stand-in for the point at infinity
PINF = -1


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _subset_xor_table(images: list[int]) -> np.ndarray:
    """Tabulate an F_2-linear map from its images on the basis bits."""
    table = np.zeros(1 << len(images), dtype=np.int64)
    for j, img in enumerate(images):
        size = 1 << j
        table[size:2 * size] = table[:size] ^ img
    return table


class FieldTables:
    """log/exp/trace tables for one GF(2^m), m >= 2."""

    def __init__(self, spec: FieldSpec):
        if spec.m < 2:
            raise ValueError("tables need m >= 2")
        self.spec = spec
        self.q = spec.q
        self.n = spec.q - 1
        primes = _prime_factors(self.n)
        gen = next(c for c in range(2, self.q)
                   if all(spec.pow(c, self.n // p) != 1 for p in primes))
        times_gen = _subset_xor_table([spec.mul(gen, 1 << i) for i in range(spec.m)]).tolist()
        exp = [0] * self.n
        z = 1
        for i in range(self.n):
            exp[i] = z
            z = times_gen[z]
        assert z == 1
        self.exp = np.array(exp, dtype=np.int64)
        self.log = np.zeros(self.q, dtype=np.int64)  # log[0] is a sentinel
        self.log[self.exp] = np.arange(self.n, dtype=np.int64)
        self.tr = _subset_xor_table([spec.trace(1 << i) for i in range(spec.m)])
        self.sq = _subset_xor_table([spec.square(1 << i) for i in range(spec.m)])

    def linear_table(self, fn) -> np.ndarray:
        """Tabulate an F_2-linear map given as a callable on elements."""
        return _subset_xor_table([fn(1 << i) for i in range(self.spec.m)])

    def frobenius_table(self, k: int) -> np.ndarray:
        """x -> x^(2^k) as a full table."""
        table = np.arange(self.q, dtype=np.int64)
        for _ in range(k):
            table = self.sq[table]
        return table

    def mul_vec(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = self.exp[(self.log[u] + self.log[v]) % self.n]
        return np.where((u == 0) | (v == 0), 0, out)

    def pow_vec(self, u: np.ndarray, e: int) -> np.ndarray:
        """u^e elementwise; e may be negative (then u must be nonzero)."""
        out = self.exp[(e * self.log[u]) % self.n]
        if e > 0:
            out = np.where(u == 0, 0, out)
        return out


@lru_cache(maxsize=None)
def field_tables(m: int) -> FieldTables:
    return FieldTables(make_field(m))


def f_alpha_table(ft: FieldTables, p: ParamSet) -> np.ndarray:
    return ft.linear_table(lambda b: eval_f_alpha(p, b))


def g_beta_table(ft: FieldTables, p: ParamSet) -> np.ndarray:
    return ft.linear_table(lambda b: eval_g_beta(p, b))


def h_value_table(ft: FieldTables, p: ParamSet) -> np.ndarray:
    """H values over the whole field, index = element bit pattern."""
    fa = f_alpha_table(ft, p)
    x = np.arange(ft.q, dtype=np.int64)
    quot = ft.exp[((p.sigma + 1) * ft.log[fa] - 2 * ft.log[x]) % ft.n]
    h = np.where(fa == 0, 0, quot)
    if p.gamma:
        h = h ^ ft.tr
    h[0] = 0
    return h


class ExtTables:
    """Packed log/exp tables for GF(q^2), elements encoded as a | (b << m)."""

    def __init__(self, m: int):
        self.m = m
        self.q = 1 << m
        self.Q = self.q * self.q
        self.n = self.Q - 1
        self.spec = make_field(m)
        self.ext = extension_of(self.spec)
        self.base = field_tables(m)
        nbits = 2 * m

        def unpack(z: int):
            return (z & (self.q - 1), z >> m)

        def pack(t) -> int:
            return t[0] | (t[1] << m)

        self.pack, self.unpack = pack, unpack
        primes = _prime_factors(self.n)
        ext = self.ext
        gen = next(c for c in range(2, self.Q)
                   if all(ext.pow(unpack(c), self.n // p) != ExtField.ONE for p in primes))
        times_gen = _subset_xor_table(
            [pack(ext.mul(unpack(gen), unpack(1 << j))) for j in range(nbits)]).tolist()
        exp = [0] * self.n
        z = 1
        for i in range(self.n):
            exp[i] = z
            z = times_gen[z]
        assert z == 1
        self.exp = np.array(exp, dtype=np.int64)
        self.log = np.zeros(self.Q, dtype=np.int64)
        self.log[self.exp] = np.arange(self.n, dtype=np.int64)
        self.sq = _subset_xor_table(
            [pack(ext.square(unpack(1 << j))) for j in range(nbits)])
        self._exp_list = self.exp.tolist()
        self._log_list = self.log.tolist()
        self._g0_tables: dict[int, np.ndarray] = {}
        self._zmap = None

    # -- scalar helpers on packed elements (PINF = infinity) ---------------

    def mul_p(self, z1: int, z2: int) -> int:
        if z1 == 0 or z2 == 0:
            return 0
        return self._exp_list[(self._log_list[z1] + self._log_list[z2]) % self.n]

    def inv_p(self, z: int) -> int:
        if z == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._exp_list[(-self._log_list[z]) % self.n]

    def pow_p(self, z: int, e: int) -> int:
        if z == 0:
            if e <= 0:
                raise ZeroDivisionError("0 to a nonpositive power")
            return 0
        return self._exp_list[(e * self._log_list[z]) % self.n]

    def phi_p(self, z: int) -> int:
        """1/(z + 1/z) on packed values; PINF and 0 map to 0, 1 to PINF."""
        if z == PINF or z == 0:
            return 0
        if z == 1:
            return PINF
        y = z ^ self.inv_p(z)
        return self.inv_p(y)

    def w_p(self, sigma: int, e: int, z: int) -> int:
        if z == PINF:
            return PINF
        if z == 0:
            return 0
        return self.pow_p(z, sigma - 1 if e == 0 else sigma + 1)

    # -- derived tables ------------------------------------------------------

    def g0_table(self, k: int) -> np.ndarray:
        """The k-term linearized map z + z^2 + ... + z^(2^(k-1)), tabulated."""
        if k not in self._g0_tables:
            def g0(z):
                acc = z
                t = z
                for _ in range(k - 1):
                    t = self.ext.square(t)
                    acc = self.ext.add(acc, t)
                return acc
            self._g0_tables[k] = _subset_xor_table(
                [self.pack(g0(self.unpack(1 << j))) for j in range(2 * self.m)])
        return self._g0_tables[k]

    def b0_packed(self) -> list[int]:
        return [x for x in range(self.q) if x != 1] + [PINF]

    def b1_packed(self) -> list[int]:
        """B_1 as powers theta^((q-1)i); asserted against the norm-1 form."""
        members = [self._exp_list[((self.q - 1) * i) % self.n] for i in range(1, self.q + 1)]
        assert len(set(members)) == self.q and 1 not in members
        assert all(self.pow_p(z, self.q + 1) == 1 for z in members)
        return members

    def zmap(self) -> np.ndarray:
        """For each base-field x, one packed z with z + 1/z = x."""
        if self._zmap is None:
            z = np.arange(1, self.Q, dtype=np.int64)
            zinv = self.exp[(-self.log[z]) % self.n]
            y = z ^ zinv
            mask = y < self.q
            zm = np.zeros(self.q, dtype=np.int64)
            zm[y[mask]] = z[mask]
            assert np.all(zm > 0)
            self._zmap = zm
        return self._zmap


@lru_cache(maxsize=None)
def ext_tables(m: int) -> ExtTables:
    return ExtTables(m)
