"""Hochschild cochains of a finite linear category and their differential.

A degree-``n`` cochain assigns to every composable chain of ``n`` basis
arrows ``x_1: X_0 -> X_1, ..., x_n: X_{n-1} -> X_n`` a value in
``M(X_0, X_n)``; data is stored sparsely as ``(chain, args) -> value``.

The differential is

    df(x_1 .. x_{n+1}) = x_1 . f(x_2 .. x_{n+1})
                         + sum_i (-1)^i f(.. x_i x_{i+1} ..)
                         + (-1)^{n+1} f(x_1 .. x_n) . x_{n+1}

with coefficients in degree 0, so no extra signs appear.  It is assembled
sparsely: for each stored component we enumerate its one-arrow extensions
and the pairs of arrows whose product hits a stored argument.

Cochains vanishing on identity arguments form a subcomplex; cochain spaces
are enumerated in that normalized model whenever every identity is a basis
vector, and in the full bar model otherwise (both compute the same
cohomology).
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from ..errors import PreconditionViolation
from .budget import Budget
from .category import (
    Algebra,
    CentralBimodule,
    FiniteLinearCategory,
    LinearFunctor,
    Vec,
    basis_vec,
    pair_index,
    restricted_bimodule,
    tensor_bimodule,
    tensor_category,
    tensor_vec,
    vadd,
    vclean,
)
from .linalg import exact_rank, nullspace


class Cochain:
    """A sparse Hochschild cochain with coefficients in a central bimodule."""

    def __init__(self, cat: FiniteLinearCategory, mod: CentralBimodule, degree: int, data=None):
        if degree < 0:
            raise PreconditionViolation("cochain degree must be >= 0")
        self.cat = cat
        self.mod = mod
        self.degree = degree
        self.data: Dict[Tuple[Tuple, Tuple[int, ...]], Vec] = {}
        for key, vec in (data or {}).items():
            vec = vclean(vec)
            if vec:
                self._check_key(*key)
                self.data[key] = vec

    def _check_key(self, chain: Tuple, args: Tuple[int, ...]) -> None:
        if len(chain) != self.degree + 1 or len(args) != self.degree:
            raise PreconditionViolation(
                f"component on chain {chain} with {len(args)} arguments does not "
                f"fit degree {self.degree}"
            )
        for k in range(self.degree):
            if not 0 <= args[k] < self.cat.dim(chain[k], chain[k + 1]):
                raise PreconditionViolation(
                    f"argument {args[k]} out of range for hom({chain[k]!r},{chain[k+1]!r})"
                )

    def component(self, chain: Tuple, args: Tuple[int, ...]) -> Vec:
        return self.data.get((chain, args), {})

    def evaluate(self, chain: Tuple, arg_vecs: List[Vec]) -> Vec:
        """Multilinear evaluation on arrow vectors (not just basis arrows)."""
        out: Vec = {}
        def rec(prefix: Tuple[int, ...], scale, k: int):
            if not scale:
                return
            if k == len(arg_vecs):
                vadd(out, self.component(chain, prefix), scale)
                return
            for idx, c in arg_vecs[k].items():
                rec(prefix + (idx,), scale * c, k + 1)
        rec((), self.cat.field.one, 0)
        return out

    def is_zero(self) -> bool:
        return not any(self.data.values())

    def is_normalized(self) -> bool:
        """True when every evaluation with an identity inserted vanishes."""
        cat = self.cat
        f = cat.field
        for (chain, args) in list(self.data):
            for slot in range(self.degree):
                # inserting Id at a slot only type-checks on a repeated object
                if chain[slot] != chain[slot + 1]:
                    continue
                vecs = [basis_vec(i, f) for i in args]
                vecs[slot] = cat.identity_vector(chain[slot])
                if vclean(self.evaluate(chain, vecs)):
                    return False
        return True

    def scaled(self, c) -> "Cochain":
        return Cochain(
            self.cat, self.mod, self.degree,
            {k: {i: c * v for i, v in vec.items()} for k, vec in self.data.items()},
        )

    def __add__(self, other: "Cochain") -> "Cochain":
        if other.degree != self.degree:
            raise PreconditionViolation("cannot add cochains of different degrees")
        data = {k: dict(v) for k, v in self.data.items()}
        for k, vec in other.data.items():
            target = data.setdefault(k, {})
            vadd(target, vec, self.cat.field.one)
        return Cochain(self.cat, self.mod, self.degree, data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and {k: vclean(v) for k, v in self.data.items() if vclean(v)}
            == {k: vclean(v) for k, v in other.data.items() if vclean(v)}
        )


def hochschild_differential(f: Cochain, budget: Optional[Budget] = None) -> Cochain:
    """The bar differential ``df`` of a sparse cochain."""
    cat, mod, n = f.cat, f.mod, f.degree
    budget = budget or Budget()
    out: Dict[Tuple[Tuple, Tuple[int, ...]], Vec] = {}

    def add(chain, args, vec: Vec, scale) -> None:
        if not vec:
            return
        budget.charge()
        target = out.setdefault((chain, args), {})
        vadd(target, vec, scale)

    one = cat.field.one
    minus = -one
    if n == 0:
        for (chain0, _), vec in f.data.items():
            (b,) = chain0
            for a in cat.objects:
                for x in range(cat.dim(a, b)):
                    add((a, b), (x,), mod.lact_vec(a, b, b, basis_vec(x, cat.field), vec), one)
            for c in cat.objects:
                for x in range(cat.dim(b, c)):
                    add((b, c), (x,), mod.ract_vec(b, b, c, vec, basis_vec(x, cat.field)), minus)
        return Cochain(cat, mod, 1, out)

    splits = cat.splits()
    for (chain, args), vec in f.data.items():
        x0, xn = chain[0], chain[-1]
        # prefix extension: x . f(...)
        for a in cat.objects:
            for x in range(cat.dim(a, x0)):
                add((a,) + chain, (x,) + args,
                    mod.lact_vec(a, x0, xn, basis_vec(x, cat.field), vec), one)
        # merges: f(.., x_i x_{i+1}, ..) expanded over products hitting args[i]
        for i in range(n):
            a, c = chain[i], chain[i + 1]
            for (b, u, v, coeff) in splits.get((a, c), {}).get(args[i], ()):
                new_chain = chain[: i + 1] + (b,) + chain[i + 1 :]
                new_args = args[:i] + (u, v) + args[i + 1 :]
                sign = one if (i + 1) % 2 == 0 else minus
                add(new_chain, new_args, vec, sign * coeff)
        # suffix extension: f(...) . x
        s_sign = one if (n + 1) % 2 == 0 else minus
        for c in cat.objects:
            for x in range(cat.dim(xn, c)):
                add(chain + (c,), args + (x,),
                    mod.ract_vec(x0, xn, c, vec, basis_vec(x, cat.field)), s_sign)
    return Cochain(cat, mod, n + 1, out)


def _composable_chains(cat: FiniteLinearCategory, length: int):
    """Object chains of the given arrow count with all hom spaces nonzero."""
    if length == 0:
        for a in cat.objects:
            yield (a,)
        return
    def rec(chain):
        if len(chain) == length + 1:
            yield tuple(chain)
            return
        for b in cat.objects:
            if cat.dim(chain[-1], b):
                chain.append(b)
                yield from rec(chain)
                chain.pop()
    for a in cat.objects:
        yield from rec([a])


def cochain_basis(
    cat: FiniteLinearCategory,
    mod: CentralBimodule,
    degree: int,
    normalized: bool,
    budget: Optional[Budget] = None,
) -> List[Tuple[Tuple, Tuple[int, ...], int]]:
    """Basis keys ``(chain, args, target)`` of the degree-``degree`` cochain space."""
    budget = budget or Budget()
    keys: List[Tuple[Tuple, Tuple[int, ...], int]] = []
    if degree == 0:
        for a in cat.objects:
            for m in range(mod.dim(a, a)):
                budget.charge()
                keys.append(((a,), (), m))
        return keys
    excluded = {}
    if normalized:
        for a in cat.objects:
            if cat.dim(a, a):
                idx = cat.id_basis_index(a)
                if idx is None:
                    raise PreconditionViolation(
                        f"identity of {a!r} is not a basis vector; "
                        "normalized cochain enumeration is unavailable"
                    )
                excluded[a] = idx
    for chain in _composable_chains(cat, degree):
        if not mod.dim(chain[0], chain[-1]):
            continue
        def rec(args: Tuple[int, ...], k: int):
            if k == degree:
                for m in range(mod.dim(chain[0], chain[-1])):
                    budget.charge()
                    keys.append((chain, args, m))
                return
            a, b = chain[k], chain[k + 1]
            for idx in range(cat.dim(a, b)):
                if normalized and a == b and excluded.get(a) == idx:
                    continue
                rec(args + (idx,), k + 1)
        rec((), 0)
    return keys


def hh_dimensions(
    cat: FiniteLinearCategory,
    mod: CentralBimodule,
    up_to: int,
    budget: Optional[Budget] = None,
    normalized: Optional[bool] = None,
) -> List[int]:
    """``dim HH^k`` for ``k = 0 .. up_to`` by exact rank-nullity.

    ``normalized=None`` picks the normalized model when available.  Both
    models compute the same cohomology; the normalized one is smaller.
    """
    budget = budget or Budget()
    if normalized is None:
        normalized = cat.identities_basis_aligned()
    bases = [cochain_basis(cat, mod, k, normalized, budget) for k in range(up_to + 2)]
    index = [{key: pos for pos, key in enumerate(b)} for b in bases]
    ranks: List[int] = []
    for k in range(up_to + 1):
        row_index = index[k + 1]
        nrows = len(bases[k + 1])
        columns: List[Dict[int, object]] = []
        for (chain, args, m) in bases[k]:
            f = Cochain(cat, mod, k, {(chain, args): {m: cat.field.one}})
            df = hochschild_differential(f, budget)
            col: Dict[int, object] = {}
            for (dchain, dargs), vec in df.data.items():
                for mm, c in vec.items():
                    if not c:
                        continue
                    pos = row_index.get((dchain, dargs, mm))
                    if pos is None:
                        if normalized:
                            # the normalized subcomplex is closed under d;
                            # a leak means corrupted structure tensors
                            raise PreconditionViolation(
                                "differential left the normalized subcomplex"
                            )
                        continue
                    col[pos] = c
            columns.append(col)
        matrix = [[cat.field.zero] * len(columns) for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, c in col.items():
                matrix[i][j] = c
        ranks.append(exact_rank(matrix))
    dims = []
    for k in range(up_to + 1):
        nullity = len(bases[k]) - ranks[k]
        dims.append(nullity - (ranks[k - 1] if k > 0 else 0))
    return dims


def hh_dimension(
    cat: FiniteLinearCategory,
    mod: CentralBimodule,
    degree: int,
    budget: Optional[Budget] = None,
    normalized: Optional[bool] = None,
) -> int:
    return hh_dimensions(cat, mod, degree, budget, normalized)[degree]


def cocycle_space(
    cat: FiniteLinearCategory,
    mod: CentralBimodule,
    degree: int,
    budget: Optional[Budget] = None,
    normalized: Optional[bool] = None,
) -> List[Cochain]:
    """A basis of closed degree-``degree`` cochains."""
    budget = budget or Budget()
    if normalized is None:
        normalized = cat.identities_basis_aligned()
    basis = cochain_basis(cat, mod, degree, normalized, budget)
    target = cochain_basis(cat, mod, degree + 1, normalized, budget)
    tindex = {key: pos for pos, key in enumerate(target)}
    rows = [[cat.field.zero] * len(basis) for _ in range(len(target))]
    for j, (chain, args, m) in enumerate(basis):
        df = hochschild_differential(
            Cochain(cat, mod, degree, {(chain, args): {m: cat.field.one}}), budget
        )
        for (dchain, dargs), vec in df.data.items():
            for mm, c in vec.items():
                pos = tindex.get((dchain, dargs, mm))
                if pos is not None:
                    rows[pos][j] = c
    out = []
    for coeffs in nullspace(rows, len(basis), cat.field):
        data: Dict = {}
        for j, c in enumerate(coeffs):
            if c:
                chain, args, m = basis[j]
                data.setdefault((chain, args), {})[m] = c
        out.append(Cochain(cat, mod, degree, data))
    return out


def random_cochain(cat, mod, degree, rng, normalized: bool = True) -> Cochain:
    """A dense-ish random cochain with small rational-style coefficients."""
    data: Dict = {}
    for (chain, args, m) in cochain_basis(cat, mod, degree, normalized):
        c = rng.randint(-3, 3)
        if c:
            data.setdefault((chain, args), {})[m] = cat.field.of(c)
    return Cochain(cat, mod, degree, data)


def cup_with_identity(eta: Cochain, gamma: Algebra,
                      tcat: Optional[FiniteLinearCategory] = None,
                      tmod: Optional[CentralBimodule] = None) -> Cochain:
    """Extend a cochain along ``- tensor gamma``.

    ``(eta u 1)((x_1, g_1), .., (x_n, g_n)) = eta(x_1 .. x_n) (x) g_1 .. g_n``
    on the tensored category, with coefficients in the tensored bimodule.
    Cocycles map to cocycles.
    """
    cat, n = eta.cat, eta.degree
    gd = gamma.dim
    tcat = tcat or tensor_category(cat, gamma)
    tmod = tmod or tensor_bimodule(eta.mod, gamma, tcat)
    data: Dict = {}
    def gamma_products(k: int):
        # all (g_1..g_k) with their product vector
        stack = [((), gamma.unit)]
        for _ in range(k):
            nxt = []
            for tup, prod in stack:
                for g in range(gd):
                    p = gamma.product_vec(prod, basis_vec(g, gamma.field))
                    if p:
                        nxt.append((tup + (g,), p))
            stack = nxt
        return stack
    gtuples = gamma_products(n)
    for (chain, args), vec in eta.data.items():
        for gtuple, gprod in gtuples:
            new_args = tuple(pair_index(args[k], gtuple[k], gd) for k in range(n))
            out = tensor_vec(vec, gprod, gd)
            if out:
                target = data.setdefault((chain, new_args), {})
                vadd(target, out, cat.field.one)
    return Cochain(tcat, tmod, n, data)


def restrict_along_functor(F: LinearFunctor, eta: Cochain) -> Cochain:
    """Pull a cochain back along a functor: ``(F_* eta)(y_1..y_n) = eta(F y_1, .., F y_n)``.

    Coefficients live in the restriction of the original bimodule; the
    operation commutes with the differentials on both sides.
    """
    src = F.source
    n = eta.degree
    mod = restricted_bimodule(F, eta.mod)
    data: Dict = {}
    if n == 0:
        for a in src.objects:
            fa = F.obj_map[a]
            vec = eta.component((fa,), ())
            if vec:
                data[((a,), ())] = dict(vec)
        return Cochain(src, mod, 0, data)
    for chain in _composable_chains(src, n):
        fchain = tuple(F.obj_map[a] for a in chain)
        if not mod.dim(chain[0], chain[-1]):
            continue
        def rec(args, vecs, k):
            if k == n:
                val = eta.evaluate(fchain, list(vecs))
                if vclean(val):
                    data[(chain, args)] = vclean(val)
                return
            a, b = chain[k], chain[k + 1]
            for idx in range(src.dim(a, b)):
                rec(args + (idx,), vecs + [F.apply(a, b, idx)], k + 1)
        rec((), [], 0)
    return Cochain(src, mod, n, data)
