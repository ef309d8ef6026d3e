"""Finite-dimensional representation theory: dimensions, characters, tensor products.

Weyl-group machinery works over any even (Lie) root datum, standalone or
embedded, via :class:`LieDatum`.  Superalgebra tensor squares are fixture
data (see data/super_tensor_fixtures.json), not computed: the source
analysis states every decomposition that is needed.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .linalg import Rat, add, inverse, smul, zero_vec
from .rootdata import AlgebraData, UnsupportedAlgebra, Weight, inner


class CapExceeded(RuntimeError):
    """Character support exceeds the configured cap (a scale limit, not an error)."""


@dataclass(frozen=True)
class LieDatum:
    """An even root system with a chosen positive system, possibly embedded."""

    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight

    @staticmethod
    def from_algebra(alg: AlgebraData) -> "LieDatum":
        if alg.positive_odd:
            raise UnsupportedAlgebra(
                f"{alg.name} is a superalgebra; use the fixture catalog instead"
            )
        return LieDatum(alg.simple_roots, alg.positive_even, alg.rho)

    def pairing(self, lam: Weight, i: int) -> Rat:
        a = self.simple_roots[i]
        return 2 * inner(lam, a) / inner(a, a)

    def is_dominant(self, lam: Weight) -> bool:
        return all(self.pairing(lam, i) >= 0 for i in range(len(self.simple_roots)))

    def is_dominant_integral(self, lam: Weight) -> bool:
        return all(
            (p := self.pairing(lam, i)) >= 0 and p.denominator == 1
            for i in range(len(self.simple_roots))
        )

    def reflect(self, lam: Weight, i: int) -> Weight:
        return lam - self.pairing(lam, i) * self.simple_roots[i]

    def dominantize(self, lam: Weight) -> Weight:
        while True:
            for i in range(len(self.simple_roots)):
                if self.pairing(lam, i) < 0:
                    lam = self.reflect(lam, i)
                    break
            else:
                return lam

    def dominantize_signed(self, lam: Weight) -> tuple[Weight, int]:
        """Strict dominantization; sign 0 when lam sits on a wall."""
        sign = 1
        while True:
            for i in range(len(self.simple_roots)):
                p = self.pairing(lam, i)
                if p == 0:
                    return lam, 0
                if p < 0:
                    lam = self.reflect(lam, i)
                    sign = -sign
                    break
            else:
                return lam, sign

    def orbit(self, lam: Weight) -> frozenset[Weight]:
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(len(self.simple_roots)):
                    r = self.reflect(w, i)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return frozenset(seen)

    def root_coords(self, v: Weight) -> tuple[Rat, ...] | None:
        """Coefficients of v over the simple roots, or None if outside the span."""
        mat = self._root_solver()
        rhs = tuple(inner(v, a) for a in self.simple_roots)
        coeffs = tuple(
            sum(mat[i][j] * rhs[j] for j in range(len(rhs))) for i in range(len(rhs))
        )
        acc = zero_vec(len(v.coords))
        for c, a in zip(coeffs, self.simple_roots):
            acc = add(acc, smul(c, a.coords))
        if Weight(v.basis, acc) != v:
            return None
        return coeffs

    @lru_cache(maxsize=None)
    def _root_solver(self):
        g = tuple(
            tuple(inner(a, b) for b in self.simple_roots) for a in self.simple_roots
        )
        return inverse(g)


@dataclass(frozen=True)
class DominantCharacter:
    """Dominant-weight multiplicities of an irreducible highest-weight module."""

    datum: LieDatum
    highest: Weight
    mults: dict[Weight, int] = field(compare=False)
    dimension: int = 0


def _datum(alg) -> LieDatum:
    return alg if isinstance(alg, LieDatum) else LieDatum.from_algebra(alg)


def weyl_dim(alg, lam: Weight) -> int:
    """Weyl dimension formula, exact."""
    d = _datum(alg)
    if not d.is_dominant_integral(lam):
        raise ValueError(f"{lam.describe()} is not dominant integral")
    num, den = Fraction(1), Fraction(1)
    lr = lam + d.rho
    for a in d.positive_roots:
        num *= inner(lr, a)
        den *= inner(d.rho, a)
    val = num / den
    assert val.denominator == 1 and val > 0
    return int(val)


def dominant_character(alg, lam: Weight, cap: int = 200_000) -> DominantCharacter:
    """Freudenthal multiplicities of all dominant weights of V(lam)."""
    d = _datum(alg)
    if not d.is_dominant_integral(lam):
        raise ValueError(f"{lam.describe()} is not dominant integral")

    # dominant weights below lam, reached through positive-root steps
    heights: dict[Weight, Rat] = {lam: Fraction(0)}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in d.positive_roots:
                nu = mu - a
                if nu in heights or not d.is_dominant(nu):
                    continue
                coeffs = d.root_coords(lam - nu)
                if coeffs is None or any(c < 0 or c.denominator != 1 for c in coeffs):
                    continue
                heights[nu] = sum(coeffs)
                nxt.append(nu)
                if len(heights) > cap:
                    raise CapExceeded(f"character support of V({lam.describe()}) exceeds {cap}")
        frontier = nxt

    mults: dict[Weight, int] = {lam: 1}
    lr2 = inner(lam + d.rho, lam + d.rho)
    for mu in sorted(heights, key=lambda w: (heights[w], w.key())):
        if mu == lam:
            continue
        total = Fraction(0)
        for a in d.positive_roots:
            j = 1
            while True:
                nu = mu + j * a
                coeffs = d.root_coords(lam - nu)
                if coeffs is None or any(c < 0 for c in coeffs):
                    break
                m = mults.get(d.dominantize(nu), 0)
                if m:
                    total += 2 * m * inner(nu, a)
                j += 1
        denom = lr2 - inner(mu + d.rho, mu + d.rho)
        val = total / denom
        assert val.denominator == 1
        if val:
            mults[mu] = int(val)

    dim = sum(m * len(d.orbit(w)) for w, m in mults.items())
    assert dim == weyl_dim(d, lam), "Freudenthal dimension mismatch"
    return DominantCharacter(d, lam, mults, dim)


def full_character(alg, lam: Weight, cap: int = 200_000) -> Counter:
    d = _datum(alg)
    ch = dominant_character(d, lam, cap)
    out: Counter = Counter()
    for w, m in ch.mults.items():
        for v in d.orbit(w):
            out[v] += m
    return out


def tensor_decompose(alg, lam: Weight, mu: Weight, cap: int = 200_000) -> Counter:
    """V(lam) (x) V(mu) as a multiset of dominant highest weights (Klimyk)."""
    d = _datum(alg)
    if weyl_dim(d, lam) < weyl_dim(d, mu):
        lam, mu = mu, lam
    if weyl_dim(d, lam) * weyl_dim(d, mu) > cap:
        raise CapExceeded("tensor product dimension exceeds the cap")
    out: Counter = Counter()
    for nu, m in full_character(d, mu, cap).items():
        t, sign = d.dominantize_signed(lam + d.rho + nu)
        if sign:
            out[t - d.rho] += sign * m
    out = Counter({w: m for w, m in out.items() if m})
    assert all(m > 0 for m in out.values())
    return out


def tensor_decompose_bruteforce(alg, lam: Weight, mu: Weight) -> Counter:
    """Oracle: multiply full characters and greedily peel highest weights.

    Only sensible for small modules (rank <= 2, dims <= 20 in the tests).
    """
    d = _datum(alg)
    prod: Counter = Counter()
    chl = full_character(d, lam)
    chm = full_character(d, mu)
    for w1, m1 in chl.items():
        for w2, m2 in chm.items():
            prod[w1 + w2] += m1 * m2
    out: Counter = Counter()
    while prod:
        top = max(prod, key=lambda w: (inner(w, d.rho), w.key()))
        assert d.is_dominant_integral(top)
        mult = prod[top]
        assert mult > 0
        out[top] += mult
        for w, m in full_character(d, top).items():
            prod[w] -= mult * m
            if prod[w] == 0:
                del prod[w]
    return out


def sorted_summands(decomp: Counter) -> list[tuple[Weight, int]]:
    return sorted(decomp.items(), key=lambda t: t[0].key())


# ---------------------------------------------------------------------------
# superalgebra fixtures


@dataclass(frozen=True)
class FixtureDecomposition:
    """A paper-stated tensor-square decomposition for a superalgebra case."""

    case_id: str
    product: str
    summands: tuple[tuple[str, dict[str, Weight]], ...]  # (label, component -> weight)
    source: str
    sdim_square: int
    summand_sdims: tuple[int, ...]

    def check_superdimensions(self) -> bool:
        return self.sdim_square == sum(self.summand_sdims)


@lru_cache(maxsize=1)
def _fixture_data() -> dict:
    text = resources.files("wconf.data").joinpath("super_tensor_fixtures.json").read_text()
    return json.loads(text)


_WTERM = re.compile(r"([+-]?)(\d*)([ed])(\d+)")


def parse_weight_pattern(basis, pattern: str, **indices) -> Weight:
    """Parse weights like "2d2", "d2+d3", "d1-e{m1}" over an e/d basis."""
    rendered = pattern.format(**indices)
    coords = list(zero_vec(len(basis.labels)))
    pos = 0
    for m in _WTERM.finditer(rendered):
        if m.start() != pos:
            raise ValueError(f"cannot parse weight pattern {rendered!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        label = f"{m.group(3)}{m.group(4)}"
        try:
            idx = basis.labels.index(label)
        except ValueError as exc:
            raise ValueError(f"{label} is not a basis symbol") from exc
        coords[idx] += sign * coef
    if pos != len(rendered):
        raise ValueError(f"cannot parse weight pattern {rendered!r}")
    return Weight(basis, tuple(coords))


_CASE_RE = re.compile(r"^(sl|spo|osp)\((\d+)\|(\d+)\)$")


def super_tensor_fixture(case_id: str) -> FixtureDecomposition:
    """The stated decomposition for case ids like "sl(6|1)", "spo(6|3)", "osp(7|4)"."""
    from .rootdata import build_algebra

    m = _CASE_RE.match(case_id.strip())
    if not m:
        raise KeyError(f"unknown fixture case id {case_id!r}")
    fam, a, b = m.group(1), int(m.group(2)), int(m.group(3))
    data = _fixture_data().get(fam)
    if data is None:
        raise KeyError(f"unknown fixture family {fam!r}")
    alg = build_algebra(case_id)
    basis = alg.basis

    if fam == "sl":
        if not (a > 2 and b >= 1 and a != b and a != b + 2):
            raise KeyError(f"{case_id} is outside the fixture catalog")
        s = a - 2 - b
        sdim_square = s * s
        sdims = (1, s * s - 1)
        indices = {"m1": a - 1}
    elif fam == "spo":
        if not (a >= 4 and b >= 1):
            raise KeyError(f"{case_id} is outside the fixture catalog")
        s = a - 2 - b
        sdim_square = s * s
        sdims = (s * (s + 1) // 2, s * (s - 1) // 2 - 1, 1)
        indices = {}
    else:
        if not (a >= 5 and b >= 2):
            raise KeyError(f"{case_id} is outside the fixture catalog")
        t = a - 4 - b
        sdim_square = 4 * t * t
        sdims = (
            3 * (t * (t + 1) // 2 - 1),
            3 * (t * (t - 1) // 2),
            t * (t + 1) // 2 - 1,
            t * (t - 1) // 2,
            3,
            1,
        )
        indices = {}

    summands = tuple(
        (
            entry["label"],
            {
                comp: parse_weight_pattern(basis, pat, **indices)
                for comp, pat in entry["weights"].items()
            },
        )
        for entry in data["summands"]
    )
    fx = FixtureDecomposition(
        case_id=case_id,
        product=data["product"],
        summands=summands,
        source=data["source"],
        sdim_square=sdim_square,
        summand_sdims=sdims,
    )
    assert fx.check_superdimensions(), f"superdimension mismatch for {case_id}"
    return fx
