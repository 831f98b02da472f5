"""A-infinity structures on finite graded hom spaces, and deformations.

An :class:`AInfinityStructure` stores graded based hom spaces and sparse
higher-product tensors ``m_s``; ``m_s`` has degree ``2 - s`` and consumes
arguments in diagram order (``x_1: a_0 -> a_1`` first).  The defining
identities, for every ``k``,

    sum_{r+s+t=k} (-1)^{r+st} m_{r+1+t} (id^r (x) m_s (x) id^t) = 0

are evaluated with the Koszul rule: applying ``id^r (x) m_s (x) id^t`` to
elements picks up ``(-1)^{|m_s| * (|x_1| + .. + |x_r|)}``.

Deforming a linear category along a closed degree-``n`` cochain with
bimodule coefficients yields the structure with hom spaces
``hom(a,b) (+) M(a,b)`` (the bimodule part shifted into degree ``2 - n``),
``m_2`` the square-zero-extension product, ``m_n`` the cochain, and no
other products.  Its defining identities reduce to: associativity (k = 3),
closedness of the cochain (k = n + 1, where the identity evaluates to
minus the differential), and the vanishing of the cochain on bimodule
arguments (k = 2n - 1); everything else is empty.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..errors import NotACocycle, PreconditionViolation
from .budget import Budget
from .category import (
    Algebra,
    CentralBimodule,
    FiniteLinearCategory,
    Vec,
    basis_vec,
    pair_index,
    tensor_category,
    tensor_vec,
    vadd,
    vclean,
)
from .cochain import Cochain, hochschild_differential

OpsTable = Dict[int, Dict[Tuple[Tuple, Tuple[int, ...]], Vec]]


class AInfinityStructure:
    """Objects, graded based hom spaces, sparse product tensors, units."""

    def __init__(self, field, objects, basis, ops: OpsTable, units, projection_blocks=None):
        self.field = field
        self.objects = tuple(objects)
        self.basis: Dict[Tuple, Tuple[int, ...]] = {k: tuple(v) for k, v in basis.items() if v}
        self.ops: OpsTable = {s: {k: vclean(v) for k, v in tab.items() if vclean(v)}
                              for s, tab in ops.items()}
        self.ops = {s: tab for s, tab in self.ops.items() if tab}
        self.units: Dict[object, Vec] = units  # strict units as vectors
        # (a, b) -> (linear dim, bimodule dim) when built by deform(); the
        # canonical projection functor is "keep the first block".
        self.projection_blocks = projection_blocks

    def dim(self, a, b) -> int:
        return len(self.basis.get((a, b), ()))

    def deg(self, a, b, idx: int) -> int:
        return self.basis[(a, b)][idx]

    def support(self) -> List[int]:
        return sorted(self.ops)

    def apply(self, s: int, chain: Tuple, args: Tuple[int, ...]) -> Vec:
        return self.ops.get(s, {}).get((chain, args), {})

    def apply_vecs(self, s: int, chain: Tuple, arg_vecs: List[Vec]) -> Vec:
        out: Vec = {}
        def rec(prefix, scale, k):
            if not scale:
                return
            if k == len(arg_vecs):
                vadd(out, self.apply(s, chain, prefix), scale)
                return
            for idx, c in arg_vecs[k].items():
                rec(prefix + (idx,), scale * c, k + 1)
        rec((), self.field.one, 0)
        return out

    def project(self, a, b, vec: Vec) -> Vec:
        """Apply the canonical projection onto the linear part, if present."""
        if self.projection_blocks is None:
            raise PreconditionViolation("structure carries no projection datum")
        dx, _ = self.projection_blocks.get((a, b), (self.dim(a, b), 0))
        return {i: c for i, c in vec.items() if i < dx}


def from_linear_category(cat: FiniteLinearCategory) -> AInfinityStructure:
    """A linear category seen as a structure concentrated in ``m_2``."""
    basis = {k: (0,) * d for k, d in cat.dims.items()}
    m2: Dict = {}
    for (a, b, c), pairs in cat.compose.items():
        for (g, f), vec in pairs.items():
            if vec:
                m2[((a, b, c), (f, g))] = dict(vec)  # diagram order
    units = {a: cat.identity_vector(a) for a in cat.objects if cat.dim(a, a)}
    return AInfinityStructure(cat.field, cat.objects, basis, {2: m2}, units)


def deform(
    cat: FiniteLinearCategory,
    mod: CentralBimodule,
    eta: Cochain,
    check: bool = True,
    budget: Optional[Budget] = None,
) -> AInfinityStructure:
    """The category deformed along a closed cochain of degree ``n >= 3``.

    Raises :class:`NotACocycle` when ``d eta != 0`` (the identity at
    ``k = n + 1`` would fail).  ``check=False`` skips the test; it exists so
    that the verifier's failure localization can be demonstrated.
    """
    n = eta.degree
    if n < 3:
        raise PreconditionViolation(f"deformation degree must be >= 3, got {n}")
    if check:
        if not hochschild_differential(eta, budget).is_zero():
            raise NotACocycle(f"the degree-{n} cochain is not closed")
    field = cat.field
    objects = cat.objects
    basis: Dict = {}
    blocks: Dict = {}
    for a in objects:
        for b in objects:
            dx, dm = cat.dim(a, b), mod.dim(a, b)
            if dx or dm:
                basis[(a, b)] = (0,) * dx + (2 - n,) * dm
                blocks[(a, b)] = (dx, dm)

    def xpart(a, b, i):
        return i

    def mpart(a, b, j):
        return cat.dim(a, b) + j

    m2: Dict = {}
    for a, b, c in itertools.product(objects, repeat=3):
        key = (a, b, c)
        dx1, dm1 = cat.dim(a, b), mod.dim(a, b)
        dx2, dm2 = cat.dim(b, c), mod.dim(b, c)
        for x1 in range(dx1):
            for x2 in range(dx2):
                v = cat.diag(a, b, c, x1, x2)
                if v:
                    m2[(key, (xpart(a, b, x1), xpart(b, c, x2)))] = {
                        xpart(a, c, k): cc for k, cc in v.items()
                    }
        for x1 in range(dx1):
            for mm in range(dm2):
                v = mod.lact(a, b, c, x1, mm)
                if v:
                    m2[(key, (xpart(a, b, x1), mpart(b, c, mm)))] = {
                        mpart(a, c, k): cc for k, cc in v.items()
                    }
        for mm in range(dm1):
            for x2 in range(dx2):
                v = mod.ract(a, b, c, mm, x2)
                if v:
                    m2[(key, (mpart(a, b, mm), xpart(b, c, x2)))] = {
                        mpart(a, c, k): cc for k, cc in v.items()
                    }
    mn: Dict = {}
    for (chain, args), vec in eta.data.items():
        a0, an = chain[0], chain[-1]
        new_args = tuple(xpart(chain[k], chain[k + 1], args[k]) for k in range(n))
        mn[(chain, new_args)] = {mpart(a0, an, m): c for m, c in vec.items() if c}
    ops: OpsTable = {2: m2}
    if mn:
        ops[n] = mn
    units = {a: dict(cat.identity_vector(a)) for a in objects if cat.dim(a, a)}
    return AInfinityStructure(field, objects, basis, ops, units, projection_blocks=blocks)


@dataclass(frozen=True)
class StasheffReport:
    """Outcome of checking the defining identities and strict unitality.

    ``ks_evaluated`` lists the arities whose identity has any term at all
    for the structure's product support; for support ``{2, n}`` these are
    ``{3, n+1, 2n-1}``, and every other identity holds vacuously.
    """

    passed: bool
    k_max: int
    evaluations: int
    ks_evaluated: Tuple[int, ...] = ()
    first_failure: Optional[Tuple[int, Tuple, Tuple[int, ...]]] = None
    residual: Optional[Dict] = None
    unital: bool = True
    unital_failure: Optional[str] = None

    def summary(self) -> str:
        ks = ", ".join(map(str, self.ks_evaluated)) or "none"
        if self.passed and self.unital:
            return (
                f"PASS through k={self.k_max} ({self.evaluations} tuple evaluations; "
                f"identities with terms at k in {{{ks}}}, the rest vacuous)"
            )
        if not self.passed:
            k, chain, args = self.first_failure
            return (
                f"FAIL at k={k} on chain {chain} args {args} "
                f"(residual {self.residual}; {self.evaluations} tuple evaluations)"
            )
        return f"UNITALITY FAIL: {self.unital_failure}"


def verify_stasheff(A: AInfinityStructure, k_max: int, budget: Optional[Budget] = None) -> StasheffReport:
    """Exhaustively evaluate the identities for ``k <= k_max`` on all basis tuples.

    Also checks strict unitality: ``m_1(Id) = 0``, ``m_2`` unit laws, and
    ``m_s`` vanishing on any identity argument for ``s != 2``.  Reports the
    first failing identity (smallest ``k``).
    """
    budget = budget or Budget()
    support = A.support()
    evaluations = 0
    ks_evaluated = []
    for k in range(1, k_max + 1):
        relevant = [
            (r, s) for s in support for r in range(0, k - s + 1) if (r + 1 + (k - r - s)) in support
        ]
        if not relevant:
            continue
        ks_evaluated.append(k)
        for chain in _chains(A, k):
            dims = [A.dim(chain[l], chain[l + 1]) for l in range(k)]
            for args in itertools.product(*[range(dd) for dd in dims]):
                budget.charge()
                evaluations += 1
                total: Vec = {}
                for s in support:
                    for r in range(0, k - s + 1):
                        t = k - r - s
                        u = r + 1 + t
                        if u not in support:
                            continue
                        inner = A.apply(s, chain[r : r + s + 1], args[r : r + s])
                        if not inner:
                            continue
                        koszul = (2 - s) * sum(
                            A.deg(chain[l], chain[l + 1], args[l]) for l in range(r)
                        )
                        sign_pos = (r + s * t + koszul) % 2 == 0
                        scale = A.field.one if sign_pos else -A.field.one
                        outer_chain = chain[: r + 1] + chain[r + s :]
                        for y, cy in inner.items():
                            outer_args = args[:r] + (y,) + args[r + s :]
                            out = A.apply(u, outer_chain, outer_args)
                            if out:
                                vadd(total, out, scale * cy)
                if vclean(total):
                    return StasheffReport(
                        False, k_max, evaluations, tuple(ks_evaluated),
                        first_failure=(k, chain, args), residual=vclean(total),
                    )
    ok, msg = _check_unitality(A, budget)
    return StasheffReport(True, k_max, evaluations, tuple(ks_evaluated), unital=ok, unital_failure=msg)


def _check_unitality(A: AInfinityStructure, budget: Budget) -> Tuple[bool, Optional[str]]:
    for a, unit in A.units.items():
        if vclean(A.apply_vecs(1, (a, a), [unit])):
            return False, f"m_1(Id_{a!r}) != 0"
    for (a, b), degrees in A.basis.items():
        unit_a = A.units.get(a)
        unit_b = A.units.get(b)
        for y in range(len(degrees)):
            budget.charge(2)
            ev = basis_vec(y, A.field)
            if unit_a is not None:
                left = A.apply_vecs(2, (a, a, b), [unit_a, ev])
                if vclean(left) != {y: A.field.one}:
                    return False, f"m_2(Id_{a!r}, e_{y}) != e_{y} on hom({a!r},{b!r})"
            if unit_b is not None:
                right = A.apply_vecs(2, (a, b, b), [ev, unit_b])
                if vclean(right) != {y: A.field.one}:
                    return False, f"m_2(e_{y}, Id_{b!r}) != e_{y} on hom({a!r},{b!r})"
    for s in A.support():
        if s == 2:
            continue
        for (chain, args), vec in A.ops[s].items():
            for slot in range(s):
                if chain[slot] != chain[slot + 1]:
                    continue
                unit = A.units.get(chain[slot])
                if unit is None:
                    continue
                budget.charge()
                vecs = [basis_vec(i, A.field) for i in args]
                vecs[slot] = unit
                if vclean(A.apply_vecs(s, chain, vecs)):
                    return False, f"m_{s} does not vanish on an identity argument at {chain}"
    return True, None


def _chains(A: AInfinityStructure, length: int):
    def rec(chain):
        if len(chain) == length + 1:
            yield tuple(chain)
            return
        for b in A.objects:
            if A.dim(chain[-1], b):
                chain.append(b)
                yield from rec(chain)
                chain.pop()
    for a in A.objects:
        if length == 0:
            yield (a,)
        else:
            yield from rec([a])


def tensor_with_algebra(obj, gamma: Algebra):
    """Tensor a linear category or an A-infinity structure with an algebra.

    Hom spaces become ``hom (x) gamma``; every product multiplies the
    algebra coefficients in argument order, with no extra signs (the
    algebra sits in degree 0).
    """
    if isinstance(obj, FiniteLinearCategory):
        return tensor_category(obj, gamma)
    if not isinstance(obj, AInfinityStructure):
        raise PreconditionViolation(f"cannot tensor object of type {type(obj).__name__}")
    A = obj
    gd = gamma.dim
    basis = {}
    for key, degrees in A.basis.items():
        basis[key] = tuple(degrees[h] for h in range(len(degrees)) for _ in range(gd))
    ops: OpsTable = {}
    for s, table in A.ops.items():
        new_table: Dict = {}
        for (chain, args), vec in table.items():
            for gtuple in itertools.product(range(gd), repeat=s):
                gprod: Vec = gamma.unit
                for g in gtuple:
                    gprod = gamma.product_vec(gprod, basis_vec(g, gamma.field))
                    if not gprod:
                        break
                if not gprod:
                    continue
                new_args = tuple(pair_index(args[k], gtuple[k], gd) for k in range(s))
                out = tensor_vec(vec, gprod, gd)
                if out:
                    new_table[(chain, new_args)] = out
        ops[s] = new_table
    units = {}
    for a, unit in A.units.items():
        units[a] = tensor_vec(unit, gamma.unit, gd)
    blocks = None
    if A.projection_blocks is not None:
        blocks = {k: (dx * gd, dm * gd) for k, (dx, dm) in A.projection_blocks.items()}
    return AInfinityStructure(A.field, A.objects, basis, ops, units, projection_blocks=blocks)
