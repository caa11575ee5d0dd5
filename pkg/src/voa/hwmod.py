"""Highest-weight modules: PBW bases, mode action, singular vectors, top spaces.

A :class:`HighestWeightSpec` records which modes act on the cyclic vector by
a scalar and, per generator, the first mode index that kills it. Everything
below that index (and not a Cartan mode) is a creation operator; creation
operators may have zero weight shift (``G-_(2)`` on a W-algebra module).
Weights of module states are measured relative to the cyclic vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra import AlgebraPresentation, PresentationError
from .linalg import kernel
from .modes import CREATE, ModeEngine, add_into
from .scalar import ONE, Scalar, as_scalar

__all__ = [
    "HighestWeightSpec",
    "HighestWeightModule",
    "ModuleState",
    "CutoffError",
    "wsl4sub_hw",
    "n2_twisted_hw",
    "vacuum_spec",
    "WSL4_PATTERN",
    "N2_TWISTED_PATTERN",
    "gplus_power_singular",
    "gplus_power_kernel",
    "top_space_dim",
    "top_chain",
]


class CutoffError(PresentationError):
    """A state left the weight window of the module."""


# first annihilating mode index per generator (n-th product labels)
WSL4_PATTERN = {"J": 1, "L": 2, "G+": 0, "G-": 3, "W": 3}
N2_TWISTED_PATTERN = {"H": 1, "T": 2, "E": 0, "F": 2}


@dataclass
class HighestWeightSpec:
    algebra: AlgebraPresentation
    eigenvalues: Mapping = field(default_factory=dict)   # (name, mode) -> scalar
    annihilate_from: Mapping = field(default_factory=dict)  # name -> first killing mode
    name: str = "M"

    def engine(self) -> ModeEngine:
        P = self.algebra
        eig = {(P.index[g], m): as_scalar(v) for (g, m), v in self.eigenvalues.items()}
        ann = {P.index[g]: n for g, n in self.annihilate_from.items()}
        return ModeEngine(P, eig, ann, order="module")


def wsl4sub_hw(P: AlgebraPresentation, x, y, z) -> HighestWeightSpec:
    """``v_{x,y,z}``: ``J(0) = x``, ``L(0) = y``, ``W(0) = z``."""
    return HighestWeightSpec(P, {("J", 0): x, ("L", 1): y, ("W", 2): z},
                             dict(WSL4_PATTERN), f"M({x},{y},{z})")


def n2_twisted_hw(P: AlgebraPresentation, h, q) -> HighestWeightSpec:
    """``v_{h,q}``: ``H(0) = h``, ``T(0) = q``, ``E(n-1/2) v = F(n+3/2) v = 0``."""
    return HighestWeightSpec(P, {("H", 0): h, ("T", 1): q},
                             dict(N2_TWISTED_PATTERN), f"M({h},{q})")


def vacuum_spec(P: AlgebraPresentation) -> HighestWeightSpec:
    return HighestWeightSpec(P, {}, {g.name: 0 for g in P.generators}, "V")


class ModuleState:
    """A vector of a highest-weight module: ``{creation monomial: Scalar}``."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms):
        self.module = module
        self.terms = terms

    def __add__(self, other):
        t = dict(self.terms)
        add_into(t, other.terms)
        return ModuleState(self.module, t)

    def __sub__(self, other):
        t = dict(self.terms)
        add_into(t, other.terms, -ONE)
        return ModuleState(self.module, t)

    def __mul__(self, c):
        c = as_scalar(c)
        return ModuleState(self.module, {m: v * c for m, v in self.terms.items()} if c else {})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, ModuleState):
            return not (self - other).terms
        return NotImplemented

    def scalar_multiple_of(self, other: "ModuleState"):
        """``c`` with ``self == c * other``, or None."""
        if not other.terms:
            return None if self.terms else ONE
        m = next(iter(other.terms))
        c = self.terms.get(m, Scalar(0)) / other.terms[m]
        return c if self == other * c else None

    def __str__(self):
        return self.module.format(self.terms)

    __repr__ = __str__


class HighestWeightModule:
    """The universal highest-weight module of a :class:`HighestWeightSpec`."""

    def __init__(self, spec: HighestWeightSpec, cutoff=4):
        self.spec = spec
        self.algebra = spec.algebra
        self.engine = spec.engine()
        self.cutoff = Fraction(cutoff)
        gradings = sorted({g for gen in self.algebra.generators for g, _ in gen.charges})
        self.gradings = gradings

    @property
    def hw(self) -> ModuleState:
        return ModuleState(self, {(): ONE})

    def state(self, terms) -> ModuleState:
        return ModuleState(self, dict(terms))

    def weight(self, mono) -> Fraction:
        return self.engine.mono_weight(mono)

    def charge(self, mono) -> tuple:
        P = self.algebra
        return tuple(sum((P.generators[g].charge(gr) for g, _ in mono), Fraction(0))
                     for gr in self.gradings)

    def mode_action(self, g: str, m: int, v: ModuleState) -> ModuleState:
        gi = self.algebra.index[g]
        shift = self.algebra.generators[gi].weight - m - 1
        for mono in v.terms:
            if self.weight(mono) + shift > self.cutoff:
                raise CutoffError(f"{g}_({m}) leaves the weight window {self.cutoff}")
        return ModuleState(self, self.engine.act_terms(gi, m, v.terms))

    def apply(self, modes, v: ModuleState | None = None) -> ModuleState:
        """Apply ``[(name, m), ...]`` (leftmost outermost)."""
        v = self.hw if v is None else v
        for g, m in reversed(list(modes)):
            v = self.mode_action(g, m, v)
        return v

    def state_mode(self, u: dict, r: int, v: ModuleState) -> ModuleState:
        """``u_(r) v`` for a vacuum state ``u`` of the algebra."""
        return ModuleState(self, self.engine.state_mode(u, r, v.terms))

    def creation_modes(self, max_shift):
        eng = self.engine
        out = []
        for gi, g in enumerate(self.algebra.generators):
            m = eng._ann.get(gi, 0) - 1
            while g.weight - m - 1 <= max_shift:
                if eng.kind(gi, m) == CREATE and g.weight - m - 1 >= 0:
                    out.append((gi, m))
                m -= 1
        out.sort(key=lambda gm: eng.key(*gm))
        return out

    def basis(self, weight, charge=None) -> list:
        """PBW monomials of relative weight ``weight`` (and charge, if given)."""
        weight = Fraction(weight)
        eng = self.engine
        modes = self.creation_modes(weight)
        P = self.algebra
        zero_shift = [gm for gm in modes if P.generators[gm[0]].weight - gm[1] - 1 == 0]
        out = []
        # zero-shift modes can repeat; their number is bounded by the charge window
        bound = int(weight) + 1 + sum(abs(c) for c in (charge or ())) + 2 * len(self.gradings) * (int(weight) + 1)
        if not zero_shift:
            bound = int(weight) + 1

        def rec(i, acc, w, nzero):
            if w == weight:
                mono = tuple(acc)
                if charge is None or self.charge(mono) == tuple(Fraction(c) for c in charge):
                    out.append(mono)
            for j in range(i, len(modes)):
                gi, m = modes[j]
                s = P.generators[gi].weight - m - 1
                if w + s > weight:
                    continue
                if s == 0 and nzero >= bound:
                    continue
                if acc and acc[-1] == (gi, m) and eng.parity[gi]:
                    continue
                rec(j, acc + [(gi, m)], w + s, nzero + (s == 0))
        rec(0, [], Fraction(0), 0)
        return out

    def lowering_images(self, mono, pattern=None) -> dict:
        """Stacked images of ``mono`` under all killing modes of ``pattern``."""
        pattern = self.spec.annihilate_from if pattern is None else pattern
        P = self.algebra
        w = self.weight(mono)
        out = {}
        for name, first in pattern.items():
            gi = P.index[name]
            g = P.generators[gi]
            m = first
            while g.weight - m - 1 >= -w:
                for X, c in self.engine.act(gi, m, mono).items():
                    out[(gi, m, X)] = c
                m += 1
        return out

    def singular_vectors(self, weight, charge=None, pattern=None) -> list:
        """Basis of vectors killed by every mode in ``pattern`` (default: the hw pattern)."""
        B = self.basis(weight, charge)
        cols = [self.lowering_images(b, pattern) for b in B]
        return [ModuleState(self, {B[i]: c for i, c in comb.items()}) for comb in kernel(cols)]

    def format(self, terms) -> str:
        if not terms:
            return "0"
        P = self.algebra
        parts = []
        for mono in sorted(terms, key=lambda m: (len(m), m)):
            txt = " ".join(f"{P.generators[g].name}_({m})" for g, m in mono) or "v"
            if mono:
                txt += " v"
            c = terms[mono]
            parts.append(txt if c == 1 else f"({c})*{txt}")
        return " + ".join(parts)


def gplus_power_singular(n: int, s: int, k) -> bool:
    """Whether ``i (k + n - 1) = s`` for some ``i`` in ``1..n-1``."""
    k = as_scalar(k)
    return any((i * (k + n - 1) - s).is_zero() for i in range(1, n))


def gplus_power_kernel(P: AlgebraPresentation, s: int) -> bool:
    """Whether ``(G+)^s`` is singular in the vacuum module of ``P`` (kernel test)."""
    M = HighestWeightModule(vacuum_spec(P), cutoff=s)
    sv = M.singular_vectors(s, (s,), pattern=WSL4_PATTERN)
    gp = P.index["G+"]
    target = ((gp, -1),) * s
    return any(set(v.terms) == {target} for v in sv)


def top_chain(P: AlgebraPresentation, x, y, z, length=2) -> list:
    """``a_i`` with ``G+(0) G-(0)^i v = a_i G-(0)^{i-1} v`` on ``v_{x,y,z}``."""
    M = HighestWeightModule(wsl4sub_hw(P, x, y, z), cutoff=0)
    out = []
    v = M.hw
    for _ in range(length):
        w = M.mode_action("G-", 2, v)
        back = M.mode_action("G+", 0, w)
        c = back.scalar_multiple_of(v)
        if c is None:
            raise PresentationError("top space is not spanned by G-(0)^i v")
        out.append(c)
        v = w
    return out


def top_space_dim(P: AlgebraPresentation, x, y, z) -> int:
    """Top-space dimension of ``L(x,y,z)`` over the simple quotient at ``k = -1``.

    ``G-(0)^2`` vanishes on the top space of any module of the quotient, so
    the dimension is 1 when ``a_1 = 0``, 2 when ``a_1 != 0 = a_2``, and no
    module exists otherwise.
    """
    a1, a2 = top_chain(P, x, y, z, 2)
    if a1.is_zero():
        return 1
    if a2.is_zero():
        return 2
    raise PresentationError(f"({x}, {y}, {z}) is not the highest weight of a module "
                            "over the simple quotient")
