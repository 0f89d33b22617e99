"""Building [48,24] codes from an order-3 fixed-point-free automorphism.

The automorphism sigma is laid out with its cycles first and contiguous:
cycle j occupies coordinates p*j .. p*j + p - 1 (0-based), fixed points
follow.  A code invariant under sigma splits into the fixed subcode
(words constant on every cycle) and the even subcode (words of even
weight on every cycle); the first projects to a binary code of length
c + f, the second maps cycle-wise to vectors over the even-weight
polynomial ring P.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cyclicring, dataset, gf2, perm
from .cyclicring import PolyP


@dataclass(frozen=True)
class AutType:
    """An automorphism type: prime order p, c p-cycles, f fixed points."""

    p: int
    c: int
    f: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise ValueError("p must be an odd prime")
        if self.c < 1 or self.f < 0:
            raise ValueError("need c >= 1 and f >= 0")

    @property
    def n(self):
        return self.p * self.c + self.f

    def __str__(self):
        return "%d-(%d,%d)" % (self.p, self.c, self.f)


@dataclass(frozen=True)
class SigmaLayout:
    """Coordinate layout for sigma: cycles first, then fixed points."""

    type: AutType

    @property
    def n(self):
        return self.type.n

    @property
    def p(self):
        return self.type.p

    @property
    def c(self):
        return self.type.c

    @property
    def f(self):
        return self.type.f

    def sigma(self):
        """The standard automorphism (1,2,..,p)(p+1,..,2p)... as a permutation."""
        p, c, n = self.p, self.c, self.n
        img = list(range(n))
        for j in range(c):
            base = p * j
            for i in range(p):
                img[base + i] = base + (i + 1) % p
        return perm.Permutation(tuple(img))

    def cycle_mask(self, j):
        return ((1 << self.p) - 1) << (self.p * j)


STANDARD_3_16_0 = SigmaLayout(AutType(3, 16, 0))


# ---------------------------------------------------------------------------
# The maps pi and phi

def pi_inverse(word, layout):
    """Lift a length-(c+f) word: bit j is replicated over cycle j."""
    if not 0 <= word < (1 << (layout.c + layout.f)):
        raise ValueError("length mismatch")
    p, c = layout.p, layout.c
    cyc = (1 << p) - 1
    out = 0
    for j in range(c):
        if word >> j & 1:
            out |= cyc << (p * j)
    fixed = word >> c
    return out | (fixed << (p * c))


def pi_project(word, layout):
    """One bit per cycle / fixed point; inverse of :func:`pi_inverse` on
    sigma-fixed words."""
    p, c, f = layout.p, layout.c, layout.f
    out = 0
    for j in range(c):
        if word >> (p * j) & 1:
            out |= 1 << j
    out |= (word >> (p * c)) << c
    return out


def phi_vector(word, layout):
    """Cycle restrictions of an even-subcode word, as PolyP entries."""
    p, c = layout.p, layout.c
    mask = (1 << p) - 1
    return tuple(PolyP(p, (word >> (p * j)) & mask) for j in range(c))


def phi_inverse(vec, layout):
    """Lay a P-vector onto the cycle coordinates (zeros on fixed points)."""
    p = layout.p
    if len(vec) != layout.c:
        raise ValueError("length mismatch")
    out = 0
    for j, a in enumerate(vec):
        if a.p != p:
            raise ValueError("mismatched p")
        out |= a.mask << (p * j)
    return out


def phi_inverse_rows(vec, layout):
    """The p-1 binary rows spanning the cycle-shift orbit of a P-vector.

    The shifts x^t * vec, t = 0..p-2, span the same GF(2) space as the
    full orbit; zero rows are dropped.
    """
    rows = []
    for t in range(layout.p - 1):
        shifted = tuple(cyclicring.poly_shift(a, t) for a in vec)
        row = phi_inverse(shifted, layout)
        if row:
            rows.append(row)
    return rows


def gf4_row_to_pvector(row, embed=cyclicring.gf4_embed):
    """Embed a GF(4) row as a vector over P (p = 3)."""
    return tuple(embed(v) for v in row)


# ---------------------------------------------------------------------------
# The code builder for type 3-(16,0)

def permuted_base_rows(tau, gb=None):
    """RREF rows of the base code with coordinates permuted by tau."""
    if gb is None:
        gb = dataset.gb_matrix()
    if tau.degree != gb.n_cols:
        raise ValueError("tau degree mismatch")
    rows = [tau.apply_to_word(r) for r in gb.rows]
    return gf2.rref(rows, gb.n_cols)[0]


def build_code(tau, xi_index, embed=cyclicring.gf4_embed):
    """The [48,24] code generated by the lifted tau-permuted base code and
    the embedded GF(4) code (I | X_i).

    Raises RuntimeError on rank deficiency or failed self-duality, which
    would indicate an implementation bug rather than bad input.
    """
    layout = STANDARD_3_16_0
    rows = [pi_inverse(r, layout) for r in permuted_base_rows(tau)]
    for grow in dataset.x_generator(xi_index):
        rows.extend(phi_inverse_rows(gf4_row_to_pvector(grow, embed), layout))
    code = gf2.BinaryCode.from_rows(rows, layout.n)
    if code.k != 24:
        raise RuntimeError("construction produced rank %d != 24" % code.k)
    if not code.is_self_dual():
        raise RuntimeError("construction failed self-duality")
    return code


def build_table_code(entry):
    return build_code(entry.tau(), entry.table_id)


# ---------------------------------------------------------------------------
# Decomposed weight engine (p=3, c=16, f=0)

_PC16 = None


def _pc16():
    global _PC16
    if _PC16 is None:
        _PC16 = np.bitwise_count(np.arange(65536, dtype=np.uint32)).astype(
            np.uint8
        )
    return _PC16


class DecomposedEngine:
    """Fast weight computations for codes C_i^tau with fixed X_i.

    All 4^8 words of the embedded GF(4) code are tabulated once per X_i:
    their 48-bit expansion, their cycle-support mask, and their GF(4)
    weight.  A mixed codeword then has weight 2a + 3b - 4s, where a is
    the GF(4) weight of the even part, b the weight of the projected
    fixed part, and s the size of their common cycle support.  Only the
    256-word fixed side depends on tau.
    """

    def __init__(self, xi_index, embed=cyclicring.gf4_embed):
        self.xi_index = xi_index
        self.embed = embed
        layout = STANDARD_3_16_0
        rows = []
        for grow in dataset.x_generator(xi_index):
            rows.extend(
                phi_inverse_rows(gf4_row_to_pvector(grow, embed), layout)
            )
        if len(rows) != 16:
            raise RuntimeError("expected 16 binary rows for the even part")
        words = np.zeros(1 << 16, dtype=np.uint64)
        size = 1
        for row in rows:
            words[size : 2 * size] = words[:size] ^ np.uint64(row)
            size *= 2
        support = np.zeros(1 << 16, dtype=np.uint16)
        for j in range(16):
            cyc = (words >> np.uint64(3 * j)) & np.uint64(7)
            support |= (cyc != 0).astype(np.uint16) << np.uint16(j)
        self.even_words = words
        self.support = support
        self.gf4_weight = _pc16()[support].astype(np.int16)
        self._m_table = None

    # -- per-tau fixed side ------------------------------------------------

    @staticmethod
    def _pi_words(tau):
        """All 256 words of the tau-permuted base code (16-bit masks)."""
        rows = permuted_base_rows(tau)
        arr = np.zeros(256, dtype=np.uint16)
        size = 1
        for row in rows:
            arr[size : 2 * size] = arr[:size] ^ np.uint16(row)
            size *= 2
        return arr

    def weight_enumerator(self, tau):
        """Exact weight distribution of C_i^tau (49 coefficients)."""
        pc16 = _pc16()
        a2 = 2 * self.gf4_weight
        counts = np.zeros(49, dtype=np.int64)
        for u in self._pi_words(tau):
            b = int(pc16[u])
            s = pc16[self.support & u].astype(np.int16)
            w = a2 + (3 * b) - 4 * s
            counts += np.bincount(w, minlength=49)
        return counts

    def words_of_weights(self, tau, wanted):
        """48-bit codewords of the given weights, as uint64 arrays."""
        pc16 = _pc16()
        layout = STANDARD_3_16_0
        a2 = 2 * self.gf4_weight
        out = {w: [] for w in wanted}
        for u in self._pi_words(tau):
            b = int(pc16[u])
            s = pc16[self.support & u].astype(np.int16)
            w = a2 + (3 * b) - 4 * s
            lifted = np.uint64(pi_inverse(int(u), layout))
            for target in wanted:
                idx = np.nonzero(w == target)[0]
                if idx.size:
                    out[target].append(self.even_words[idx] ^ lifted)
        return {
            w: (
                np.concatenate(chunks)
                if chunks
                else np.empty(0, dtype=np.uint64)
            )
            for w, chunks in out.items()
        }

    def min_weight_at_least(self, tau, threshold=10):
        """True iff the constructed code has minimum distance >= threshold."""
        if self._m_table is not None:
            return self._filter_with_table(tau, threshold)
        pc16 = _pc16()
        a2 = 2 * self.gf4_weight
        us = self._pi_words(tau)
        order = np.argsort(pc16[us], kind="stable")
        if int(a2[a2 > 0].min()) < threshold:
            return False
        for u in us[order]:
            b = int(pc16[u])
            if u == 0:
                continue
            s = pc16[self.support & u].astype(np.int16)
            w = a2 + (3 * b) - 4 * s
            if int(w.min()) < threshold:
                return False
        return True

    # -- the precomputed search table --------------------------------------

    def m_table(self):
        """For every 16-bit mask u: min over even words v of 2a - 4s.

        Adding 3*wt(u) gives the minimum weight over all codewords with
        fixed part u, so the distance filter becomes 256 table lookups.
        """
        if self._m_table is None:
            self._m_table = _build_m_table(self.support)
        return self._m_table

    def _filter_with_table(self, tau, threshold):
        pc16 = _pc16()
        us = self._pi_words(tau)
        if int((2 * self.gf4_weight[1:]).min()) < threshold:
            return False
        vals = self._m_table[us[1:]] + 3 * pc16[us[1:]].astype(np.int16)
        return int(vals.min()) >= threshold

    def min_distance(self, tau):
        """Exact minimum distance via the weight distribution."""
        counts = self.weight_enumerator(tau)
        nz = np.nonzero(counts[1:])[0]
        return int(nz[0]) + 1


def _build_m_table_numpy(support):
    pc16 = _pc16()
    # a = pc(support), so only distinct support masks matter.
    uniq = np.unique(support)
    a2 = 2 * pc16[uniq].astype(np.int16)
    out = np.empty(1 << 16, dtype=np.int16)
    chunk = 2048
    for lo in range(0, 1 << 16, chunk):
        us = np.arange(lo, lo + chunk, dtype=np.uint16)
        s = pc16[uniq[None, :] & us[:, None]].astype(np.int16)
        out[lo : lo + chunk] = (a2[None, :] - 4 * s).min(axis=1)
    return out


try:
    import numba

    @numba.njit(parallel=True, cache=True)
    def _m_table_kernel(uniq, a2, out):  # pragma: no cover - jit
        for u in numba.prange(1 << 16):
            best = np.int16(127)
            for i in range(uniq.shape[0]):
                x = uniq[i] & u
                x = x - ((x >> 1) & 0x5555)
                x = (x & 0x3333) + ((x >> 2) & 0x3333)
                x = (x + (x >> 4)) & 0x0F0F
                s = (x + (x >> 8)) & 0x1F
                w = a2[i] - 4 * np.int16(s)
                if w < best:
                    best = w
            out[u] = best

    def _build_m_table(support):
        uniq = np.unique(support).astype(np.int64)
        a2 = (2 * _pc16()[uniq]).astype(np.int16)
        out = np.empty(1 << 16, dtype=np.int16)
        _m_table_kernel(uniq, a2, out)
        return out

except ImportError:  # pragma: no cover
    _build_m_table = _build_m_table_numpy


# ---------------------------------------------------------------------------
# Self-duality condition checker

def _subspace_intersection(rows_a, rows_b, n):
    """Basis of the intersection of two GF(2) row spaces (Zassenhaus)."""
    # Stack [a | a] and [b | 0] with the first block in the low bits
    # (pivoted first); rows whose first block reduces to zero carry an
    # intersection vector in the second block.
    aug = [r | (r << n) for r in rows_a] + [r for r in rows_b]
    reduced, _ = gf2.rref(aug, 2 * n)
    mask = (1 << n) - 1
    inter = [r >> n for r in reduced if (r & mask) == 0 and (r >> n)]
    return gf2.rref(inter, n)[0]


@dataclass
class ConditionReport:
    """Structured pass/fail result of the decomposition checks."""

    checks: list

    def add(self, name, passed, detail=""):
        self.checks.append((name, bool(passed), detail))

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    def as_dict(self):
        return {
            "passed": self.passed,
            "checks": [
                {"name": n, "passed": ok, "detail": d}
                for n, ok, d in self.checks
            ],
        }


def verify_selfdual_conditions(code, layout=STANDARD_3_16_0):
    """Extract the fixed/even subcodes of a sigma-invariant code and check
    the decomposition dimensions and both self-duality conditions."""
    p, c, f, n = layout.p, layout.c, layout.f, layout.n
    if code.n != n:
        raise ValueError("code length does not match layout")
    sigma = layout.sigma()
    if code.permuted(sigma.img) != code:
        raise ValueError("sigma is not an automorphism of the code")

    report = ConditionReport([])

    # Fixed subcode: intersection with the pi-lifted full space.
    fixed_space = [pi_inverse(1 << j, layout) for j in range(c + f)]
    f_rows = _subspace_intersection(code.rows, fixed_space, n)
    # Even subcode: per-cycle even-weight space, zero on fixed points.
    even_space = []
    for j in range(c):
        base = p * j
        for i in range(1, p):
            even_space.append((1 << base) | (1 << (base + i)))
    e_rows = _subspace_intersection(code.rows, even_space, n)

    dim_f, dim_e = len(f_rows), len(e_rows)
    report.add(
        "dim_fixed", dim_f == (c + f) // 2, "dim F = %d, want %d" % (dim_f, (c + f) // 2)
    )
    report.add(
        "dim_even",
        dim_e == c * (p - 1) // 2,
        "dim E = %d, want %d" % (dim_e, c * (p - 1) // 2),
    )
    # Direct sum: dimensions add up and the two subspaces meet trivially.
    inter = _subspace_intersection(f_rows, e_rows, n)
    report.add(
        "direct_sum",
        not inter and dim_f + dim_e == code.k,
        "F + E must be all of C",
    )

    # Condition (i): the projected fixed subcode is self-dual.
    c_pi = gf2.BinaryCode.from_rows(
        [pi_project(r, layout) for r in f_rows], c + f
    )
    report.add("projected_self_dual", c_pi.is_self_dual(), "C_pi of length %d" % (c + f))

    # Condition (ii): every pair of even-subcode rows is isotropic.
    vecs = [phi_vector(r, layout) for r in e_rows]
    iso = all(
        cyclicring.hermitian_form(u, v).is_zero for u in vecs for v in vecs
    )
    report.add("isotropic_pairs", iso, "sum u_i(x) v_i(x^-1) = 0 for all pairs")
    return report
