"""Root systems, bilinear forms and Weyl vectors for the algebras in play.

Covers the simple Lie algebras A-G (classical types in epsilon
coordinates, exceptional types generated from Cartan matrices) and the
basic classical Lie superalgebras sl(m|n), psl(m|m), spo(n|m), osp(m|n),
D(2,1;a), F(4) and G(3).  All arithmetic is exact; the invariant form is
normalized so that the distinguished highest root theta has (theta|theta)=2.

Positive systems for the superalgebras follow the conventions recorded in
data/super_positive_systems.json.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .linalg import (
    Mat,
    Rat,
    Vec,
    add,
    bilinear,
    identity,
    inverse,
    mat_add,
    mat_scale,
    outer,
    parse_rat,
    rank,
    smul,
    sub,
    zero_vec,
)

EVEN = 0
ODD = 1


class UnsupportedAlgebra(ValueError):
    """Raised for algebra specs outside the supported families."""


@dataclass(frozen=True)
class BasisConvention:
    """An ordered weight-space basis with its (symmetric, exact) Gram matrix.

    ``radical`` lists directions that are quotiented away (only used for
    psl(m|m), where the supertrace form degenerates on Sum(e)-Sum(d)).
    """

    labels: tuple[str, ...]
    gram: Mat
    radical: tuple[Vec, ...] = ()

    def __post_init__(self):
        n = len(self.labels)
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise ValueError("gram size does not match basis")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram is not symmetric")

    def pair(self, u: Vec, v: Vec) -> Rat:
        return bilinear(self.gram, u, v)

    def reduce(self, coords: Vec) -> Vec:
        """Canonical representative modulo the radical directions."""
        for v in self.radical:
            pivot = max(i for i, x in enumerate(v) if x != 0)
            if coords[pivot] != 0:
                coords = sub(coords, smul(coords[pivot] / v[pivot], v))
        return coords


@dataclass(frozen=True)
class Weight:
    """Exact rational coordinate vector over a BasisConvention."""

    basis: BasisConvention
    coords: Vec

    def __post_init__(self):
        if len(self.coords) != len(self.basis.labels):
            raise ValueError("coordinate length does not match basis")
        object.__setattr__(self, "coords", tuple(Rat(c) for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.basis, add(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.basis, sub(self.coords, other.coords))

    def __mul__(self, c) -> "Weight":
        return Weight(self.basis, smul(c, self.coords))

    __rmul__ = __mul__

    def __neg__(self) -> "Weight":
        return self * -1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.basis.reduce(self.coords))

    def key(self) -> Vec:
        return self.basis.reduce(self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Weight)
            and self.basis is other.basis
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash((id(self.basis), self.key()))

    def _check(self, other: "Weight"):
        if self.basis is not other.basis:
            raise ValueError("mismatched bases")

    def describe(self) -> str:
        parts = []
        for c, lab in zip(self.coords, self.basis.labels):
            if c == 0:
                continue
            if c == 1:
                parts.append(f"+{lab}")
            elif c == -1:
                parts.append(f"-{lab}")
            else:
                parts.append(f"{'+' if c > 0 else '-'}{abs(c)}{lab}")
        return "".join(parts) or "0"


def inner(mu: Weight, nu: Weight) -> Rat:
    """The normalized invariant bilinear form (with (theta|theta)=2)."""
    mu._check(nu)
    return mu.basis.pair(mu.coords, nu.coords)


@dataclass(frozen=True)
class AlgebraData:
    """A finite root datum with parities, Weyl vector and dual Coxeter number."""

    name: str
    basis: BasisConvention
    simple_roots: tuple[Weight, ...]
    simple_parities: tuple[int, ...]
    positive_even: tuple[Weight, ...]
    positive_odd: tuple[Weight, ...]
    rho: Weight
    theta: Weight
    dual_coxeter: Rat

    @property
    def is_lie(self) -> bool:
        return not self.positive_odd

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def positive_roots(self) -> tuple[Weight, ...]:
        return self.positive_even + self.positive_odd

    def _cartan_dim(self) -> int:
        return rank([r.coords for r in self.positive_roots()]) - len(self.basis.radical)

    def dim(self) -> int:
        return 2 * len(self.positive_even) + 2 * len(self.positive_odd) + self._cartan_dim()

    def sdim(self) -> int:
        return 2 * len(self.positive_even) - 2 * len(self.positive_odd) + self._cartan_dim()


def weyl_vector(alg: AlgebraData) -> Weight:
    """Half sum of positive even roots minus half sum of positive odd roots."""
    acc = zero_vec(len(alg.basis.labels))
    for r in alg.positive_even:
        acc = add(acc, r.coords)
    for r in alg.positive_odd:
        acc = sub(acc, r.coords)
    return Weight(alg.basis, smul(Rat(1, 2), acc))


def casimir_shifted(alg: AlgebraData, mu: Weight) -> Rat:
    """(mu, mu + 2 rho), the shifted Casimir pairing."""
    return inner(mu, mu + 2 * alg.rho)


def _simple_from_positive(positives: list[tuple[Vec, int]]) -> list[tuple[Vec, int]]:
    """Indecomposable positive roots (p = q + r with q, r positive is dropped)."""
    pos = {p for p, _ in positives}
    out = []
    for p, parity in positives:
        decomposable = False
        for q in pos:
            r = tuple(x - y for x, y in zip(p, q))
            if r in pos:
                decomposable = True
                break
        if not decomposable:
            out.append((p, parity))
    return out


def _mk_algebra(
    name: str,
    basis: BasisConvention,
    positives: list[tuple[Vec, int]],
    theta: Vec,
    ordered_simples: list[Vec] | None = None,
) -> AlgebraData:
    """Assemble an AlgebraData and verify its structural invariants.

    ``ordered_simples`` fixes the numbering of the simple roots (Bourbaki
    order for the Lie types, so fundamental-weight labels match the usual
    conventions); it must coincide with the derived indecomposables.
    """
    positives = sorted(positives, key=lambda t: (t[1], t[0]))
    simples = _simple_from_positive(positives)
    simples.sort(key=lambda t: t[0])
    if ordered_simples is not None:
        if {p for p, _ in simples} != set(ordered_simples):
            raise AssertionError(f"{name}: declared simple roots are not the indecomposables")
        par = {p: par for p, par in simples}
        simples = [(p, par[p]) for p in ordered_simples]
    pos_even = tuple(Weight(basis, p) for p, par in positives if par == EVEN)
    pos_odd = tuple(Weight(basis, p) for p, par in positives if par == ODD)
    th = Weight(basis, theta)
    alg = AlgebraData(
        name=name,
        basis=basis,
        simple_roots=tuple(Weight(basis, p) for p, _ in simples),
        simple_parities=tuple(par for _, par in simples),
        positive_even=pos_even,
        positive_odd=pos_odd,
        rho=Weight(basis, zero_vec(len(basis.labels))),
        theta=th,
        dual_coxeter=Rat(0),
    )
    rho = weyl_vector(alg)
    hd = inner(th, th + 2 * rho) / 2
    alg = AlgebraData(
        name,
        basis,
        alg.simple_roots,
        alg.simple_parities,
        pos_even,
        pos_odd,
        rho,
        th,
        hd,
    )
    if inner(th, th) != 2:
        raise AssertionError(f"{name}: theta is not normalized, (theta|theta)={inner(th, th)}")
    for a, par in zip(alg.simple_roots, alg.simple_parities):
        aa = inner(a, a)
        if par == EVEN and aa != 0 and 2 * inner(rho, a) / aa != 1:
            raise AssertionError(f"{name}: Weyl vector fails on simple root {a.describe()}")
    # theta must be the highest root of the declared positive system
    allpos = {w.key() for w in alg.positive_roots()}
    for w in alg.positive_roots():
        s = th + w
        if s.key() in allpos:
            raise AssertionError(f"{name}: theta+{w.describe()} is a root; theta not highest")
    return alg


# ---------------------------------------------------------------------------
# classical Lie algebras in epsilon coordinates


def _diag_basis(labels: list[str], diag: list[Rat]) -> BasisConvention:
    n = len(labels)
    gram = tuple(
        tuple(diag[i] if i == j else Rat(0) for j in range(n)) for i in range(n)
    )
    return BasisConvention(tuple(labels), gram)


def _unit(n: int, i: int, c=1) -> Vec:
    return tuple(Rat(c) if j == i else Rat(0) for j in range(n))


def _sl(n: int) -> AlgebraData:
    if n < 2:
        raise UnsupportedAlgebra("sl(n) needs n >= 2")
    basis = _diag_basis([f"e{i + 1}" for i in range(n)], [Rat(1)] * n)
    pos = []
    for i in range(n):
        for j in range(i + 1, n):
            pos.append((sub(_unit(n, i), _unit(n, j)), EVEN))
    theta = sub(_unit(n, 0), _unit(n, n - 1))
    simples = [sub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
    return _mk_algebra(f"sl({n})", basis, pos, theta, simples)


def _so(n: int) -> AlgebraData:
    if n < 5:
        raise UnsupportedAlgebra("so(n) needs n >= 5 (use sl for the small cases)")
    r = n // 2
    basis = _diag_basis([f"e{i + 1}" for i in range(r)], [Rat(1)] * r)
    pos = []
    for i in range(r):
        for j in range(i + 1, r):
            pos.append((sub(_unit(r, i), _unit(r, j)), EVEN))
            pos.append((add(_unit(r, i), _unit(r, j)), EVEN))
    if n % 2 == 1:
        for i in range(r):
            pos.append((_unit(r, i), EVEN))
    theta = add(_unit(r, 0), _unit(r, 1))
    simples = [sub(_unit(r, i), _unit(r, i + 1)) for i in range(r - 1)]
    if n % 2 == 1:
        simples.append(_unit(r, r - 1))
    else:
        simples.append(add(_unit(r, r - 2), _unit(r, r - 1)))
    return _mk_algebra(f"so({n})", basis, pos, theta, simples)


def _sp(n: int) -> AlgebraData:
    if n < 2 or n % 2:
        raise UnsupportedAlgebra("sp(n) needs even n >= 2")
    r = n // 2
    basis = _diag_basis([f"e{i + 1}" for i in range(r)], [Rat(1, 2)] * r)
    pos = []
    for i in range(r):
        for j in range(i + 1, r):
            pos.append((sub(_unit(r, i), _unit(r, j)), EVEN))
            pos.append((add(_unit(r, i), _unit(r, j)), EVEN))
        pos.append((_unit(r, i, 2), EVEN))
    theta = _unit(r, 0, 2)
    simples = [sub(_unit(r, i), _unit(r, i + 1)) for i in range(r - 1)]
    simples.append(_unit(r, r - 1, 2))
    return _mk_algebra(f"sp({n})", basis, pos, theta, simples)


# ---------------------------------------------------------------------------
# exceptional Lie algebras from Cartan matrices

_CARTAN: dict[str, tuple[list[list[int]], list[Rat]]] = {
    # (Cartan matrix a_ij, symmetrizers d_i with (a_i|a_j) = d_i a_ij)
    "G2": ([[2, -3], [-1, 2]], [Rat(1, 3), Rat(1)]),
    "F4": (
        [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]],
        [Rat(1), Rat(1), Rat(1, 2), Rat(1, 2)],
    ),
    "E6": (
        [
            [2, 0, -1, 0, 0, 0],
            [0, 2, 0, -1, 0, 0],
            [-1, 0, 2, -1, 0, 0],
            [0, -1, -1, 2, -1, 0],
            [0, 0, 0, -1, 2, -1],
            [0, 0, 0, 0, -1, 2],
        ],
        [Rat(1)] * 6,
    ),
    "E7": (
        [
            [2, 0, -1, 0, 0, 0, 0],
            [0, 2, 0, -1, 0, 0, 0],
            [-1, 0, 2, -1, 0, 0, 0],
            [0, -1, -1, 2, -1, 0, 0],
            [0, 0, 0, -1, 2, -1, 0],
            [0, 0, 0, 0, -1, 2, -1],
            [0, 0, 0, 0, 0, -1, 2],
        ],
        [Rat(1)] * 7,
    ),
    "E8": (
        [
            [2, 0, -1, 0, 0, 0, 0, 0],
            [0, 2, 0, -1, 0, 0, 0, 0],
            [-1, 0, 2, -1, 0, 0, 0, 0],
            [0, -1, -1, 2, -1, 0, 0, 0],
            [0, 0, 0, -1, 2, -1, 0, 0],
            [0, 0, 0, 0, -1, 2, -1, 0],
            [0, 0, 0, 0, 0, -1, 2, -1],
            [0, 0, 0, 0, 0, 0, -1, 2],
        ],
        [Rat(1)] * 8,
    ),
}


def _exceptional(name: str) -> AlgebraData:
    a, d = _CARTAN[name]
    r = len(a)
    gram = tuple(tuple(d[i] * a[i][j] for j in range(r)) for i in range(r))
    basis = BasisConvention(tuple(f"a{i + 1}" for i in range(r)), gram)

    def reflect(v: Vec, i: int) -> Vec:
        coef = 2 * bilinear(gram, v, _unit(r, i)) / gram[i][i]
        return sub(v, smul(coef, _unit(r, i)))

    roots: set[Vec] = set()
    frontier = [_unit(r, i) for i in range(r)]
    while frontier:
        nxt = []
        for v in frontier:
            if v in roots:
                continue
            roots.add(v)
            for i in range(r):
                w = reflect(v, i)
                if w not in roots:
                    nxt.append(w)
        frontier = nxt
    pos = [(v, EVEN) for v in roots if sum(v) > 0]
    # theta: the unique positive root that cannot be raised
    posset = {v for v, _ in pos}
    tops = [
        v
        for v in posset
        if all(add(v, _unit(r, i)) not in posset for i in range(r))
        and bilinear(gram, v, v) == 2
    ]
    theta = max(tops, key=lambda v: sum(v))
    return _mk_algebra(name, basis, pos, theta, [_unit(r, i) for i in range(r)])


# ---------------------------------------------------------------------------
# superalgebras, per the conventions in data/super_positive_systems.json


@lru_cache(maxsize=1)
def _conventions() -> dict:
    text = resources.files("wconf.data").joinpath("super_positive_systems.json").read_text()
    return json.loads(text)


def _sl_super(m: int, n: int, projective: bool = False) -> AlgebraData:
    if m == n and not projective:
        raise UnsupportedAlgebra(f"g=sl({n}|{n}) is not simple; use psl({n}|{n})")
    if m != n and projective:
        raise UnsupportedAlgebra("psl(m|n) requires m = n")
    if m < 2 or n < 1:
        raise UnsupportedAlgebra("sl(m|n) needs m >= 2, n >= 1")
    total = m + n
    labels = [f"e{i + 1}" for i in range(m)] + [f"d{j + 1}" for j in range(n)]
    diag = [Rat(1)] * m + [Rat(-1)] * n
    radical: tuple[Vec, ...] = ()
    if projective:
        radical = (tuple([Rat(1)] * m + [Rat(-1)] * n),)
    gram = tuple(
        tuple(diag[i] if i == j else Rat(0) for j in range(total)) for i in range(total)
    )
    basis = BasisConvention(tuple(labels), gram, radical)
    # symbol order e1, d1..dn, e2..em (highest root e1-em is even)
    order = [0] + [m + j for j in range(n)] + [1 + i for i in range(m - 1)]
    parity = [0] * m + [1] * n
    pos = []
    for x in range(total):
        for y in range(x + 1, total):
            i, j = order[x], order[y]
            pos.append((sub(_unit(total, i), _unit(total, j)), (parity[i] + parity[j]) % 2))
    theta = sub(_unit(total, 0), _unit(total, m - 1))
    name = f"psl({m}|{n})" if projective else f"sl({m}|{n})"
    return _mk_algebra(name, basis, pos, theta)


def _spo(n: int, m: int) -> AlgebraData:
    if n < 2 or n % 2 or m < 1:
        raise UnsupportedAlgebra("spo(n|m) needs even n >= 2 and m >= 1")
    p, q = n // 2, m // 2
    total = p + q
    labels = [f"d{i + 1}" for i in range(p)] + [f"e{j + 1}" for j in range(q)]
    basis = _diag_basis(labels, [Rat(1, 2)] * p + [Rat(-1, 2)] * q)
    pos: list[tuple[Vec, int]] = []
    for i in range(p):
        for j in range(i + 1, p):
            pos.append((sub(_unit(total, i), _unit(total, j)), EVEN))
            pos.append((add(_unit(total, i), _unit(total, j)), EVEN))
        pos.append((_unit(total, i, 2), EVEN))
    for i in range(q):
        for j in range(i + 1, q):
            pos.append((sub(_unit(total, p + i), _unit(total, p + j)), EVEN))
            pos.append((add(_unit(total, p + i), _unit(total, p + j)), EVEN))
        if m % 2:
            pos.append((_unit(total, p + i), EVEN))
    for i in range(p):
        for j in range(q):
            pos.append((sub(_unit(total, i), _unit(total, p + j)), ODD))
            pos.append((add(_unit(total, i), _unit(total, p + j)), ODD))
        if m % 2:
            pos.append((_unit(total, i), ODD))
    theta = _unit(total, 0, 2)
    return _mk_algebra(f"spo({n}|{m})", basis, pos, theta)


def _osp(m: int, n: int) -> AlgebraData:
    if m < 3 or n < 2 or n % 2:
        raise UnsupportedAlgebra("osp(m|n) needs m >= 3 and even n >= 2")
    p, q = m // 2, n // 2
    total = p + q
    labels = [f"e{i + 1}" for i in range(p)] + [f"d{j + 1}" for j in range(q)]
    basis = _diag_basis(labels, [Rat(1)] * p + [Rat(-1)] * q)
    pos: list[tuple[Vec, int]] = []
    for i in range(p):
        for j in range(i + 1, p):
            pos.append((sub(_unit(total, i), _unit(total, j)), EVEN))
            pos.append((add(_unit(total, i), _unit(total, j)), EVEN))
        if m % 2:
            pos.append((_unit(total, i), EVEN))
    for i in range(q):
        for j in range(i + 1, q):
            pos.append((sub(_unit(total, p + i), _unit(total, p + j)), EVEN))
            pos.append((add(_unit(total, p + i), _unit(total, p + j)), EVEN))
        pos.append((_unit(total, p + i, 2), EVEN))
    for i in range(p):
        for j in range(q):
            pos.append((sub(_unit(total, i), _unit(total, p + j)), ODD))
            pos.append((add(_unit(total, i), _unit(total, p + j)), ODD))
    if m % 2:
        for j in range(q):
            pos.append((_unit(total, p + j), ODD))
    if m < 5:  # osp(3|n), osp(4|n): theta = e1+e2 needs p >= 2
        if p < 2:
            raise UnsupportedAlgebra(f"osp({m}|{n}) has no even highest root e1+e2")
    theta = add(_unit(total, 0), _unit(total, 1))
    return _mk_algebra(f"osp({m}|{n})", basis, pos, theta)


def _parse_vecs(entries, nb: int) -> list[Vec]:
    return [tuple(parse_rat(c) for c in e) for e in entries]


def _d21(a: Rat) -> AlgebraData:
    if a in (0, -1):
        raise UnsupportedAlgebra("D(2,1;a) is degenerate for a in {0, -1}")
    conv = _conventions()["D(2,1;a)"]
    diag = [Rat(1, 2), a / 2, -(1 + a) / 2]
    basis = _diag_basis(list(conv["basis"]), diag)
    even = _parse_vecs(conv["roots_even"], 3)
    odd = _parse_vecs(conv["roots_odd"], 3)
    xi = tuple(parse_rat(c) for c in conv["theta_choices"]["default"]["xi"])
    pos = _positives_by_height(even, odd, xi)
    theta = tuple(parse_rat(c) for c in conv["theta_choices"]["default"]["theta"])
    return _mk_algebra(f"D(2,1;{a})", basis, pos, theta)


def _positives_by_height(even: list[Vec], odd: list[Vec], xi: Vec) -> list[tuple[Vec, int]]:
    pos = []
    for v, par in [(v, EVEN) for v in even] + [(v, ODD) for v in odd]:
        h = sum(c * x for c, x in zip(v, xi))
        if h == 0:
            raise AssertionError("height functional vanishes on a root")
        pos.append((v if h > 0 else smul(-1, v), par))
    return pos


def _killing_gram(even: list[Vec], odd: list[Vec], theta: Vec) -> Mat:
    """Invariant form from the root data, scaled so (theta|theta)=2.

    The Killing form on the weight space is proportional to the inverse of
    M = sum_even a a^T - sum_odd a a^T; fails when the dual Coxeter number
    vanishes (M singular), which does not occur for F(4), G(3).
    """
    dim = len(theta)
    m = tuple(tuple(Rat(0) for _ in range(dim)) for _ in range(dim))
    for v in even:
        m = mat_add(m, outer(v, v))
        m = mat_add(m, outer(smul(-1, v), smul(-1, v)))
    for v in odd:
        m = mat_add(m, mat_scale(-1, outer(v, v)))
        m = mat_add(m, mat_scale(-1, outer(smul(-1, v), smul(-1, v))))
    minv = inverse(m)
    t = bilinear(minv, theta, theta)
    return mat_scale(Rat(2) / t, minv)


def _exceptional_super(family: str, choice: str) -> AlgebraData:
    conv = _conventions()[family]
    labels = list(conv["basis"])
    nb = len(labels)
    even = _parse_vecs(conv["roots_even"], nb)
    odd = _parse_vecs(conv["roots_odd"], nb)
    ch = conv["theta_choices"][choice]
    theta = tuple(parse_rat(c) for c in ch["theta"])
    xi = tuple(parse_rat(c) for c in ch["xi"])
    gram = _killing_gram(even, odd, theta)
    basis = BasisConvention(tuple(labels), gram)
    pos = _positives_by_height(even, odd, xi)
    name = family if choice == "sl2" else f"{family}#{choice}"
    return _mk_algebra(name, basis, pos, theta)


# ---------------------------------------------------------------------------
# the public constructor

_SL_RE = re.compile(r"^sl\((\d+)\)$")
_SO_RE = re.compile(r"^so\((\d+)\)$")
_SP_RE = re.compile(r"^sp\((\d+)\)$")
_ABCD_RE = re.compile(r"^([ABCD])(\d+)$")
_SUPER_RE = re.compile(r"^(sl|psl|spo|osp)\((\d+)\|(\d+)\)$")
_D21_RE = re.compile(r"^D\(2,1;(-?\d+(?:/\d+)?)\)$")


@lru_cache(maxsize=None)
def build_algebra(spec: str) -> AlgebraData:
    """Build the root datum named by ``spec``.

    Accepted forms: "A3".."E8" Cartan labels, "sl(4)", "so(7)", "sp(6)",
    "sl(3|1)", "psl(3|3)", "spo(4|3)", "osp(5|2)", "D(2,1;1/4)", "F(4)",
    "G(3)", and the alternate-theta rows "F(4)#so7", "G(3)#g2long".
    """
    spec = spec.strip()
    if m := _ABCD_RE.match(spec):
        letter, r = m.group(1), int(m.group(2))
        if r > 8:
            raise UnsupportedAlgebra(f"rank {r} exceeds the supported range for {letter}-types")
        if letter == "A":
            return _sl(r + 1)
        if letter == "B":
            if r < 2:
                raise UnsupportedAlgebra("B-type needs rank >= 2")
            return _so(2 * r + 1)
        if letter == "C":
            if r < 2:
                raise UnsupportedAlgebra("C-type needs rank >= 2")
            return _sp(2 * r)
        if r < 3:
            raise UnsupportedAlgebra("D-type needs rank >= 3")
        return _so(2 * r)
    if spec in _CARTAN:
        return _exceptional(spec)
    if m := _SL_RE.match(spec):
        return _sl(int(m.group(1)))
    if m := _SO_RE.match(spec):
        return _so(int(m.group(1)))
    if m := _SP_RE.match(spec):
        return _sp(int(m.group(1)))
    if m := _SUPER_RE.match(spec):
        fam, a, b = m.group(1), int(m.group(2)), int(m.group(3))
        if fam == "sl":
            return _sl_super(a, b)
        if fam == "psl":
            return _sl_super(a, b, projective=True)
        if fam == "spo":
            return _spo(a, b)
        return _osp(a, b)
    if m := _D21_RE.match(spec):
        return _d21(parse_rat(m.group(1)))
    if spec == "F(4)":
        return _exceptional_super("F(4)", "sl2")
    if spec == "F(4)#so7":
        return _exceptional_super("F(4)", "so7")
    if spec == "G(3)":
        return _exceptional_super("G(3)", "sl2")
    if spec == "G(3)#g2long":
        return _exceptional_super("G(3)", "g2long")
    raise UnsupportedAlgebra(f"unsupported algebra spec {spec!r}")


def fundamental_weights(alg: AlgebraData) -> tuple[Weight, ...]:
    """Fundamental weights inside the span of the simple roots."""
    if not alg.is_lie:
        raise UnsupportedAlgebra("fundamental weights are only built for Lie algebras")
    return _fundamental_for(alg.simple_roots)


def _fundamental_for(simples: tuple[Weight, ...]) -> tuple[Weight, ...]:
    r = len(simples)
    basis = simples[0].basis
    # omega_i = sum_k c_k alpha_k with <omega_i, alpha_j^vee> = delta_ij
    a = tuple(
        tuple(2 * inner(simples[k], simples[j]) / inner(simples[j], simples[j]) for k in range(r))
        for j in range(r)
    )
    inv = inverse(a)
    out = []
    for i in range(r):
        acc = zero_vec(len(basis.labels))
        for k in range(r):
            acc = add(acc, smul(inv[k][i], simples[k].coords))
        out.append(Weight(basis, acc))
    return tuple(out)
