"""Artinian local algebras ``GF(p)[x_1..x_n] / (monomials)`` and their modules.

Modules are finite-dimensional representations: a vector space together with
one commuting action matrix per variable, acting on column vectors. Elements
of the algebra are coefficient vectors over the standard monomial basis, which
is ordered by degree and then lexicographically (``x`` before ``y``).

Matrices over the algebra are arrays of shape ``(rows, cols, length)``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

import numpy as np

from . import gfp
from .errors import GuardError

MAX_LENGTH = 200
MAX_STEPS = 12
MAX_WORKING_DIM = 10**5

Monomial = tuple[int, ...]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


class ArtinianAlgebra:
    """Monomial quotient of a polynomial ring over GF(p).

    ``basis[i]`` is an exponent vector; ``table[i, j]`` is the index of the
    product ``basis[i] * basis[j]`` or ``-1`` when that product vanishes.
    """

    def __init__(self, p: int, variables, relations):
        if not gfp.MAX_PRIME > p >= 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"characteristic must be a prime below {gfp.MAX_PRIME}, got {p}")
        self.p = int(p)
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables) or not self.variables:
            raise ValueError("variable names must be distinct and non-empty")
        n = len(self.variables)
        rels = [tuple(int(e) for e in r) for r in relations]
        if any(len(r) != n for r in rels):
            raise ValueError("relation length does not match the variables")
        if any(sum(r) == 0 for r in rels):
            raise ValueError("the unit monomial cannot be a relation")
        for j in range(n):
            if not any(r[j] > 0 and sum(r) == r[j] for r in rels):
                raise ValueError(f"not Artinian: no pure power of {self.variables[j]} among the relations")
        # keep only minimal relations
        rels = sorted(set(rels), key=_mono_key)
        self.relations = tuple(r for r in rels if not any(s != r and _divides(s, r) for s in rels))

        basis = []
        frontier = [tuple([0] * n)]
        seen = set(frontier)
        while frontier:
            nxt = []
            for m in frontier:
                basis.append(m)
                if len(basis) > MAX_LENGTH:
                    raise GuardError("size guard")
                for j in range(n):
                    c = list(m)
                    c[j] += 1
                    c = tuple(c)
                    if c not in seen and not any(_divides(r, c) for r in self.relations):
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        self.basis = tuple(sorted(basis, key=_mono_key))
        self.index = {m: i for i, m in enumerate(self.basis)}
        ell = len(self.basis)
        table = np.full((ell, ell), -1, dtype=np.int64)
        for i, a in enumerate(self.basis):
            for j, b in enumerate(self.basis):
                table[i, j] = self.index.get(tuple(x + y for x, y in zip(a, b)), -1)
        self.table = table

    # -- basics -----------------------------------------------------------
    @property
    def length(self) -> int:
        return len(self.basis)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ArtinianAlgebra)
            and (self.p, self.variables, self.relations) == (other.p, other.variables, other.relations)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.variables, self.relations))

    def __repr__(self) -> str:
        rels = ", ".join(self.format_monomial(r) for r in self.relations)
        return f"GF({self.p})[{','.join(self.variables)}]/({rels})"

    def zero(self) -> np.ndarray:
        return np.zeros(self.length, dtype=np.int64)

    def one(self) -> np.ndarray:
        return self.monomial(tuple([0] * self.nvars))

    def monomial(self, exps: Monomial, coeff: int = 1) -> np.ndarray:
        v = self.zero()
        i = self.index.get(tuple(exps))
        if i is not None:
            v[i] = coeff % self.p
        return v

    def var(self, j: int) -> np.ndarray:
        e = [0] * self.nvars
        e[j] = 1
        return self.monomial(tuple(e))

    def left_matrix(self, u) -> np.ndarray:
        """Matrix of multiplication by ``u`` on the regular representation."""
        ell = self.length
        out = np.zeros((ell, ell), dtype=np.int64)
        cols = np.arange(ell)
        for i in np.flatnonzero(u):
            rows = self.table[i]
            ok = rows >= 0
            out[rows[ok], cols[ok]] += int(u[i])
        return out % self.p

    @cached_property
    def basis_matrices(self) -> np.ndarray:
        """``basis_matrices[a]`` is multiplication by the a-th basis monomial."""
        ell = self.length
        out = np.zeros((ell, ell, ell), dtype=np.int64)
        for a in range(ell):
            rows = self.table[a]
            ok = rows >= 0
            out[a, rows[ok], np.arange(ell)[ok]] = 1
        return out

    @cached_property
    def var_matrices(self) -> list[np.ndarray]:
        return [self.left_matrix(self.var(j)) for j in range(self.nvars)]

    def mul(self, u, v) -> np.ndarray:
        return self.left_matrix(u) @ np.asarray(v, dtype=np.int64) % self.p

    def power(self, u, k: int) -> np.ndarray:
        out = self.one()
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def is_unit(self, u) -> bool:
        return bool(np.asarray(u)[0] % self.p)

    def check_table(self) -> None:
        """Assert commutativity and associativity of the multiplication table."""
        t = self.table
        assert (t == t.T).all(), "multiplication not commutative"
        if self.length <= 60:
            for a, b, c in product(range(self.length), repeat=3):
                ab, bc = t[a, b], t[b, c]
                left = t[ab, c] if ab >= 0 else -1
                right = t[a, bc] if bc >= 0 else -1
                assert left == right, "multiplication not associative"

    # -- formatting -------------------------------------------------------
    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.variables, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def format_element(self, u) -> str:
        terms = []
        for i in np.flatnonzero(np.asarray(u) % self.p):
            c = int(u[i]) % self.p
            mono = self.format_monomial(self.basis[i])
            if mono == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) or "0"

    # -- distinguished ideals ---------------------------------------------
    def ideal(self, generators) -> "IdealSubspace":
        return IdealSubspace.generated_by(self, generators)

    @cached_property
    def maximal_ideal(self) -> "IdealSubspace":
        return IdealSubspace.from_span(self, np.eye(self.length, dtype=np.int64)[1:])

    @cached_property
    def unit_ideal(self) -> "IdealSubspace":
        return IdealSubspace.from_span(self, np.eye(self.length, dtype=np.int64))

    @cached_property
    def zero_ideal(self) -> "IdealSubspace":
        return IdealSubspace.from_span(self, np.zeros((0, self.length), dtype=np.int64))

    def m_power(self, n: int) -> "IdealSubspace":
        rows = [np.eye(self.length, dtype=np.int64)[i] for i, m in enumerate(self.basis) if sum(m) >= n]
        return IdealSubspace.from_span(self, np.array(rows).reshape(-1, self.length))

    @cached_property
    def socle(self) -> "IdealSubspace":
        stacked = np.vstack(self.var_matrices)
        return IdealSubspace.from_span(self, gfp.nullspace(stacked, self.p).T)

    # -- predicates -------------------------------------------------------
    def is_regular(self) -> bool:
        return self.length == 1

    def embedding_dimension(self) -> int:
        return self.maximal_ideal.dim - self.m_power(2).dim

    def is_pir(self) -> bool:
        return self.embedding_dimension() <= 1

    def has_minimal_multiplicity(self) -> bool:
        return self.m_power(2).dim == 0

    def is_gorenstein(self) -> bool:
        return self.socle.dim == 1


def monomial_quotient(p: int, variables, relations) -> ArtinianAlgebra:
    """Build ``GF(p)[variables] / (relations)``; relations are exponent vectors or strings."""
    variables = list(variables)
    rels = [parse_monomial(r, variables) if isinstance(r, str) else tuple(r) for r in relations]
    return ArtinianAlgebra(p, variables, rels)


def parse_monomial(text: str, variables) -> Monomial:
    exps = [0] * len(variables)
    for factor in text.replace(" ", "").split("*"):
        name, _, power = factor.partition("^")
        if name not in variables:
            raise ValueError(f"unknown variable {name!r} in monomial {text!r}")
        if power and not power.isdigit():
            raise ValueError(f"bad exponent in monomial {text!r}")
        exps[variables.index(name)] += int(power) if power else 1
    return tuple(exps)


class IdealSubspace:
    """An ideal stored as a canonical (reduced row echelon) basis of row vectors."""

    def __init__(self, algebra: ArtinianAlgebra, basis: np.ndarray, pivots: list[int]):
        self.algebra = algebra
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_span(cls, algebra: ArtinianAlgebra, vectors, check: bool = True) -> "IdealSubspace":
        vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, algebra.length)
        basis, pivots = gfp.row_basis(vectors, algebra.p, width=algebra.length)
        out = cls(algebra, basis, pivots)
        if check:
            assert out.is_closed(), "subspace is not an ideal"
        return out

    @classmethod
    def generated_by(cls, algebra: ArtinianAlgebra, generators) -> "IdealSubspace":
        gens = np.asarray(generators, dtype=np.int64).reshape(-1, algebra.length)
        if gens.shape[0] == 0:
            return algebra.zero_ideal
        # rows b_a * g for every basis monomial b_a and generator g
        prods = np.einsum("aij,gj->gai", algebra.basis_matrices, gens).reshape(-1, algebra.length)
        return cls.from_span(algebra, prods % algebra.p, check=False)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def is_closed(self) -> bool:
        if self.dim == 0:
            return True
        p = self.algebra.p
        images = np.vstack([(L @ self.basis.T % p).T for L in self.algebra.var_matrices])
        return gfp.in_span(images, self.basis, self.pivots, p)

    def contains(self, u) -> bool:
        return gfp.in_span(np.atleast_2d(u), self.basis, self.pivots, self.algebra.p)

    def issubset(self, other: "IdealSubspace") -> bool:
        return self.dim == 0 or gfp.in_span(self.basis, other.basis, other.pivots, self.algebra.p)

    __le__ = issubset

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IdealSubspace)
            and self.algebra == other.algebra
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((tuple(self.pivots), self.basis.tobytes()))

    def __add__(self, other: "IdealSubspace") -> "IdealSubspace":
        return IdealSubspace.from_span(self.algebra, np.vstack([self.basis, other.basis]), check=False)

    def __mul__(self, other: "IdealSubspace") -> "IdealSubspace":
        alg = self.algebra
        prods = [alg.mul(a, b) for a in self.basis for b in other.basis]
        return IdealSubspace.from_span(alg, np.array(prods).reshape(-1, alg.length), check=False)

    def elements(self) -> list[str]:
        return [self.algebra.format_element(row) for row in self.basis]

    def describe(self) -> str:
        alg = self.algebra
        if self == alg.unit_ideal:
            return "R"
        if self.dim == 0:
            return "0"
        for n in range(1, max(sum(m) for m in alg.basis) + 1):
            if self == alg.m_power(n):
                return "m" if n == 1 else f"m^{n}"
        return "(" + ", ".join(self.elements()) + ")"

    def __repr__(self) -> str:
        return f"IdealSubspace({self.describe()}, dim={self.dim})"


class PresentedModule:
    """A module as a vector space with one action matrix per variable."""

    def __init__(self, algebra: ArtinianAlgebra, actions, check: bool = True):
        self.algebra = algebra
        self.actions = tuple(np.asarray(a, dtype=np.int64) % algebra.p for a in actions)
        if len(self.actions) != algebra.nvars:
            raise ValueError("need one action matrix per variable")
        dims = {a.shape for a in self.actions}
        if len(dims) != 1 or len(next(iter(dims))) != 2 or next(iter(dims))[0] != next(iter(dims))[1]:
            raise ValueError("action matrices must be square and of equal size")
        self.dim = self.actions[0].shape[0]
        if check:
            self.check()

    # -- constructors -----------------------------------------------------
    @classmethod
    def regular(cls, algebra: ArtinianAlgebra) -> "PresentedModule":
        return cls(algebra, algebra.var_matrices, check=False)

    @classmethod
    def free(cls, algebra: ArtinianAlgebra, rank: int) -> "PresentedModule":
        eye = np.eye(rank, dtype=np.int64)
        return cls(algebra, [np.kron(eye, L) for L in algebra.var_matrices], check=False)

    @classmethod
    def residue_field(cls, algebra: ArtinianAlgebra) -> "PresentedModule":
        return cls(algebra, [np.zeros((1, 1), dtype=np.int64)] * algebra.nvars, check=False)

    @classmethod
    def zero(cls, algebra: ArtinianAlgebra) -> "PresentedModule":
        return cls(algebra, [np.zeros((0, 0), dtype=np.int64)] * algebra.nvars, check=False)

    @classmethod
    def from_ideal(cls, ideal: IdealSubspace) -> "PresentedModule":
        reg = cls.regular(ideal.algebra)
        return reg.submodule(ideal.basis.T)[0]

    @classmethod
    def cokernel(cls, algebra: ArtinianAlgebra, matrix) -> "PresentedModule":
        """``R^rows / image(matrix)`` for a matrix over the algebra."""
        matrix = np.asarray(matrix, dtype=np.int64)
        rows = matrix.shape[0]
        free = cls.free(algebra, rows)
        return free.quotient(_columns_as_vectors(matrix))

    @classmethod
    def direct_sum(cls, *modules: "PresentedModule") -> "PresentedModule":
        alg = modules[0].algebra
        acts = []
        for j in range(alg.nvars):
            blocks = [m.actions[j] for m in modules]
            acts.append(_block_diag(blocks))
        return cls(alg, acts, check=False)

    # -- structure --------------------------------------------------------
    def check(self) -> None:
        p = self.algebra.p
        for a in self.actions:
            for b in self.actions:
                assert not ((a @ b - b @ a) % p).any(), "action matrices do not commute"
        for rel in self.algebra.relations:
            assert not self.monomial_action(rel).any(), "a defining relation acts nontrivially"

    def monomial_action(self, exps: Monomial) -> np.ndarray:
        p = self.algebra.p
        out = np.eye(self.dim, dtype=np.int64)
        for a, e in zip(self.actions, exps):
            for _ in range(e):
                out = a @ out % p
        return out

    @cached_property
    def basis_actions(self) -> np.ndarray:
        """``basis_actions[a]`` is the action of the a-th basis monomial."""
        alg = self.algebra
        out = np.zeros((alg.length, self.dim, self.dim), dtype=np.int64)
        for i, m in enumerate(alg.basis):
            out[i] = self.monomial_action(m)
        return out

    def action_of(self, u) -> np.ndarray:
        return np.tensordot(np.asarray(u, dtype=np.int64), self.basis_actions, axes=1) % self.algebra.p

    def submodule(self, vectors) -> tuple["PresentedModule", np.ndarray]:
        """Submodule generated by the columns of ``vectors``.

        Returns the module and its basis (columns, in canonical reduced form).
        """
        alg = self.algebra
        vectors = np.asarray(vectors, dtype=np.int64).reshape(self.dim, -1)
        if vectors.shape[1] == 0 or self.dim == 0:
            return PresentedModule.zero(alg), np.zeros((self.dim, 0), dtype=np.int64)
        span = np.einsum("aij,jg->agi", self.basis_actions, vectors).reshape(-1, self.dim)
        basis, pivots = gfp.row_basis(span % alg.p, alg.p, width=self.dim)
        return self._restrict(basis, pivots), basis.T.copy()

    def _restrict(self, basis: np.ndarray, pivots: list[int]) -> "PresentedModule":
        # basis rows are reduced, so coordinates of a vector in the span are its pivot entries
        acts = [(a @ basis.T % self.algebra.p)[pivots, :] for a in self.actions]
        if not pivots:
            return PresentedModule.zero(self.algebra)
        return PresentedModule(self.algebra, acts, check=False)

    def quotient(self, vectors) -> "PresentedModule":
        """Quotient by the submodule generated by the columns of ``vectors``."""
        alg = self.algebra
        p = alg.p
        _, sub = self.submodule(vectors)
        basis, pivots = gfp.row_basis(sub.T, p, width=self.dim)
        keep = [c for c in range(self.dim) if c not in set(pivots)]
        acts = []
        for a in self.actions:
            img = a[:, keep]
            if pivots:
                img = (img - basis.T @ img[pivots, :]) % p
            acts.append(img[keep, :])
        if not keep:
            return PresentedModule.zero(alg)
        return PresentedModule(alg, acts, check=False)

    def radical_basis(self) -> tuple[np.ndarray, list[int]]:
        """Canonical basis of ``m M`` (rows)."""
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64), []
        imgs = np.hstack(self.actions).T
        return gfp.row_basis(imgs, self.algebra.p, width=self.dim)

    def mu(self) -> int:
        return self.dim - len(self.radical_basis()[1])

    def annihilator(self) -> IdealSubspace:
        alg = self.algebra
        if self.dim == 0:
            return alg.unit_ideal
        flat = self.basis_actions.reshape(alg.length, -1).T
        return IdealSubspace.from_span(alg, gfp.nullspace(flat, alg.p).T)

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self) -> str:
        return f"PresentedModule(dim={self.dim}, over {self.algebra!r})"


def _block_diag(blocks) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.int64)
    k = 0
    for b in blocks:
        d = b.shape[0]
        out[k : k + d, k : k + d] = b
        k += d
    return out


def _columns_as_vectors(matrix: np.ndarray) -> np.ndarray:
    """Columns of an algebra matrix ``(rows, cols, ell)`` as vectors of ``R^rows``."""
    rows, cols, ell = matrix.shape
    return matrix.transpose(0, 2, 1).reshape(rows * ell, cols)


def _vectors_as_columns(vectors: np.ndarray, rows: int, ell: int) -> np.ndarray:
    cols = vectors.shape[1]
    return vectors.reshape(rows, ell, cols).transpose(0, 2, 1)


# -- Hom and trace ---------------------------------------------------------
def hom_to_ring(module: PresentedModule) -> np.ndarray:
    """Basis of ``Hom(M, R)`` as an array of shape ``(h, length, dim M)``.

    Solves the intertwiner system ``F X_j = L_j F`` for every variable, where
    ``X_j`` acts on ``M`` and ``L_j`` on the regular representation.
    """
    alg = module.algebra
    ell, d = alg.length, module.dim
    if d == 0:
        return np.zeros((0, ell, 0), dtype=np.int64)
    eye_l = np.eye(ell, dtype=np.int64)
    eye_d = np.eye(d, dtype=np.int64)
    # row-major vec(F X) = (I kron X^T) vec(F);  vec(L F) = (L kron I) vec(F)
    blocks = [np.kron(eye_l, x.T) - np.kron(L, eye_d) for x, L in zip(module.actions, alg.var_matrices)]
    sol = gfp.nullspace(np.vstack(blocks) % alg.p, alg.p)
    return sol.T.reshape(-1, ell, d)


def trace(module: PresentedModule) -> IdealSubspace:
    """Sum of the images of all homomorphisms ``M -> R``."""
    alg = module.algebra
    homs = hom_to_ring(module)
    if homs.shape[0] == 0:
        return alg.zero_ideal
    images = homs.transpose(0, 2, 1).reshape(-1, alg.length)
    out = IdealSubspace.from_span(alg, images, check=False)
    assert out.is_closed(), "trace is not closed under the variable action"
    return out


def trace_surjection(module: PresentedModule) -> tuple[np.ndarray, IdealSubspace]:
    """The map ``M^h -> R`` summing a hom basis, and its image.

    The image of this single map is the whole trace, so the trace is realised
    by finitely many homomorphisms.
    """
    homs = hom_to_ring(module)
    alg = module.algebra
    if homs.shape[0] == 0:
        return np.zeros((alg.length, 0), dtype=np.int64), alg.zero_ideal
    big = np.hstack(list(homs))
    return big, IdealSubspace.from_span(alg, big.T, check=False)


def trace_by_presentation(module: PresentedModule) -> IdealSubspace:
    """Trace through a presentation ``R^b1 -A-> R^b0 -> M``.

    ``Hom(M, R)`` is the set of rows ``u`` in ``R^b0`` with ``u A = 0``; the
    trace is the ideal generated by all entries of such rows.
    """
    alg = module.algebra
    if module.dim == 0:
        return alg.zero_ideal
    p, ell = alg.p, alg.length
    gens, cover = minimal_cover(module)
    b0 = gens.shape[1]
    kernel = gfp.nullspace(cover, p)
    syz, emb = module_from_kernel(alg, b0, kernel)
    if syz.dim == 0:
        a = np.zeros((b0, 0, ell), dtype=np.int64)
    else:
        g1, _ = minimal_cover(syz)
        a = _vectors_as_columns(emb @ g1 % p, b0, ell)
    b1 = a.shape[1]
    # (u A)_c = sum_r u_r A[r, c]; as a linear map on u in R^b0 (index r*ell + i)
    lin = np.zeros((b1 * ell, b0 * ell), dtype=np.int64)
    for r in range(b0):
        for c in range(b1):
            lin[c * ell : (c + 1) * ell, r * ell : (r + 1) * ell] = alg.left_matrix(a[r, c])
    sol = gfp.nullspace(lin, p)
    entries = sol.T.reshape(-1, b0, ell).reshape(-1, ell)
    return IdealSubspace.generated_by(alg, entries)


# -- covers, syzygies, resolutions ------------------------------------------
def minimal_cover(module: PresentedModule) -> tuple[np.ndarray, np.ndarray]:
    """Minimal generators of ``M`` and the cover map ``R^b -> M``.

    Generators extend a basis of ``m M`` by standard basis vectors, taken in
    order. The cover matrix has column ``i * length + a`` equal to the a-th
    basis monomial times generator ``i``.
    """
    p = module.algebra.p
    d = module.dim
    rad, pivots = module.radical_basis()
    cur = rad.copy() if len(pivots) else np.zeros((0, d), dtype=np.int64)
    cur_piv = list(pivots)
    gens = []
    for i in range(d):
        e = np.zeros(d, dtype=np.int64)
        e[i] = 1
        if not gfp.in_span(e, cur, cur_piv, p):
            gens.append(i)
            cur, cur_piv = gfp.row_basis(np.vstack([cur, e]), p, width=d)
        if len(cur_piv) == d:
            break
    g = np.eye(d, dtype=np.int64)[:, gens]
    cover = np.einsum("aij,jg->iga", module.basis_actions, g).reshape(d, -1) % p
    return g, cover


def module_from_kernel(alg: ArtinianAlgebra, rank: int, kernel: np.ndarray) -> tuple[PresentedModule, np.ndarray]:
    """The submodule of ``R^rank`` spanned by the kernel columns, with its basis."""
    p = alg.p
    basis, pivots = gfp.row_basis(kernel.T, p, width=rank * alg.length)
    if not pivots:
        return PresentedModule.zero(alg), np.zeros((rank * alg.length, 0), dtype=np.int64)
    free = PresentedModule.free(alg, rank)
    return free._restrict(basis, pivots), basis.T.copy()


def syzygy(module: PresentedModule) -> tuple[PresentedModule, np.ndarray, np.ndarray]:
    """First syzygy of ``M``: the module, its embedding into ``R^b`` and the generators of ``M``."""
    alg = module.algebra
    gens, cover = minimal_cover(module)
    b = gens.shape[1]
    if b * alg.length > MAX_WORKING_DIM:
        raise GuardError("size guard")
    kernel = gfp.nullspace(cover, alg.p)
    syz, emb = module_from_kernel(alg, b, kernel)
    return syz, emb, gens


class FreeResolution:
    """Minimal free resolution ``... -> R^b1 -phi1-> R^b0 -> M`` truncated at a step.

    ``matrices[i]`` represents ``phi_{i+1}: R^{b_{i+1}} -> R^{b_i}`` as an
    algebra matrix; ``syzygies[i]`` is ``Omega^i(M)``.
    """

    def __init__(self, algebra, betti, matrices, syzygies):
        self.algebra = algebra
        self.betti = betti
        self.matrices = matrices
        self.syzygies = syzygies

    @cached_property
    def matrix_ideals(self) -> list[IdealSubspace]:
        return [matrix_ideal(self.algebra, a) for a in self.matrices]

    def is_minimal(self) -> bool:
        return all(not (a[..., 0] % self.algebra.p).any() for a in self.matrices)

    def is_complex(self) -> bool:
        alg = self.algebra
        for a, b in zip(self.matrices, self.matrices[1:]):
            if matmul(alg, a, b).any():
                return False
        return True

    def __repr__(self) -> str:
        return f"FreeResolution(betti={self.betti})"


def minimal_resolution(module: PresentedModule, steps: int) -> FreeResolution:
    if not 0 <= steps <= MAX_STEPS:
        raise GuardError(f"steps must lie in [0, {MAX_STEPS}]")
    alg = module.algebra
    p, ell = alg.p, alg.length
    betti: list[int] = []
    matrices: list[np.ndarray] = []
    syzygies = [module]
    current = module
    emb_prev = None
    for i in range(steps + 1):
        if current.dim == 0:
            syzygies.pop()
            break
        gens, cover = minimal_cover(current)
        b = gens.shape[1]
        betti.append(b)
        if emb_prev is not None:
            matrices.append(_vectors_as_columns(emb_prev @ gens % p, betti[-2], ell))
        if i == steps:
            break
        if b * ell > MAX_WORKING_DIM:
            raise GuardError("size guard")
        kernel = gfp.nullspace(cover, p)
        current, emb_prev = module_from_kernel(alg, b, kernel)
        syzygies.append(current)
    return FreeResolution(alg, betti, matrices, syzygies)


def matmul(alg: ArtinianAlgebra, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two algebra matrices."""
    rows, inner, ell = a.shape
    cols = b.shape[1]
    out = np.zeros((rows, cols, ell), dtype=np.int64)
    for r in range(rows):
        for k in range(inner):
            if not a[r, k].any():
                continue
            L = alg.left_matrix(a[r, k])
            out[r] += (L @ b[k].T).T
    return out % alg.p


def matrix_ideal(alg: ArtinianAlgebra, matrix) -> IdealSubspace:
    """Ideal generated by the entries of an algebra matrix."""
    matrix = np.asarray(matrix, dtype=np.int64)
    return IdealSubspace.generated_by(alg, matrix.reshape(-1, alg.length))


def image_module(alg: ArtinianAlgebra, matrix) -> PresentedModule:
    """The image of ``R^cols -> R^rows`` as a submodule of ``R^rows``."""
    matrix = np.asarray(matrix, dtype=np.int64)
    free = PresentedModule.free(alg, matrix.shape[0])
    return free.submodule(_columns_as_vectors(matrix))[0]


def check_lemma_matrix_trace(alg: ArtinianAlgebra, matrix) -> bool:
    """Whether the entry ideal of ``matrix`` lies in the trace of its image."""
    return matrix_ideal(alg, matrix).issubset(trace(image_module(alg, matrix)))


# -- predicates ------------------------------------------------------------
def is_pir(alg: ArtinianAlgebra) -> bool:
    return alg.is_pir()


def has_minimal_multiplicity(alg: ArtinianAlgebra) -> bool:
    return alg.has_minimal_multiplicity()


def socle(alg: ArtinianAlgebra) -> IdealSubspace:
    return alg.socle


def is_ulrich(module: PresentedModule) -> bool:
    """Nonzero and killed by the maximal ideal."""
    return module.dim > 0 and all(not a.any() for a in module.actions)


def is_full_trace(module: PresentedModule, tr: IdealSubspace | None = None) -> bool:
    tr = trace(module) if tr is None else tr
    return tr == module.algebra.maximal_ideal


def has_free_summand(module: PresentedModule, tr: IdealSubspace | None = None) -> bool:
    tr = trace(module) if tr is None else tr
    return tr == module.algebra.unit_ideal


def isomorphic_restricted(a: PresentedModule, b: PresentedModule) -> bool:
    """Isomorphism test that is exact for cyclic modules and for k-vector spaces.

    Compares dimension, number of generators and annihilator.
    """
    if a.dim != b.dim or a.mu() != b.mu():
        return False
    return a.annihilator() == b.annihilator()


# -- random instances ------------------------------------------------------
def random_element(alg: ArtinianAlgebra, rng: np.random.Generator) -> np.ndarray:
    """Random element: zero, a unit, a maximal-ideal element, or a monomial."""
    kind = rng.integers(4)
    if kind == 0:
        return alg.zero()
    if kind == 3:
        i = int(rng.integers(alg.length))
        return alg.monomial(alg.basis[i], int(rng.integers(1, alg.p)))
    v = rng.integers(0, alg.p, size=alg.length)
    if kind == 2:
        v[0] = 0
    return v.astype(np.int64)


def random_matrix(alg: ArtinianAlgebra, rng: np.random.Generator, max_rows: int = 3, max_cols: int = 3) -> np.ndarray:
    rows = int(rng.integers(1, max_rows + 1))
    cols = int(rng.integers(1, max_cols + 1))
    out = np.zeros((rows, cols, alg.length), dtype=np.int64)
    for r in range(rows):
        for c in range(cols):
            out[r, c] = random_element(alg, rng)
    return out


def random_module(alg: ArtinianAlgebra, rng: np.random.Generator) -> PresentedModule:
    """Cokernel or image of a random matrix, occasionally a direct sum of two."""
    def one():
        a = random_matrix(alg, rng)
        if rng.integers(2):
            return PresentedModule.cokernel(alg, a)
        return image_module(alg, a)

    m = one()
    if rng.integers(4) == 0:
        m = PresentedModule.direct_sum(m, one())
    return m
