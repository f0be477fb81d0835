"""Ground-truth brute force over F_p: modules of p-groups as matrices.

A module is a list of commuting unipotent generator matrices over F_p, for a
group that is either cyclic of order p^k (one generator) or elementary
abelian of rank r (r commuting generators of order p).  Everything downstream
-- tensor powers, duals, norm ranks, core splitting, syzygies, socles, Jordan
types -- is computed by exact dense linear algebra, which is what makes this
module usable as an independent oracle for the symbolic engine.

Projective = free here (p-groups), so the free multiplicity is the rank of
the norm element and core extraction is genuinely just "strip the free
part".  For cyclic groups the invariant iteration tracks Jordan block
multiplicities, with every individual block tensor J_a (x) J_b still
decomposed by explicit Kronecker matrices and rank profiles; tensoring
distributes over direct sums, so this is the same computation with the
bookkeeping factored out, and it is what keeps 14 tensor powers cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gfp
from .errors import BudgetError, IntegrityError, SizeMismatchError

DIM_CAP = 30000


@dataclass
class FpModule:
    """Commuting unipotent generator matrices over F_p."""

    p: int
    generators: list
    shape: tuple  # ("cyclic", q) with q = p^k, or ("elab", p, r)

    def __post_init__(self):
        self.generators = [gfp.normalize(g, self.p) for g in self.generators]
        d = self.dim
        for g in self.generators:
            if g.shape != (d, d):
                raise SizeMismatchError("generators must be square of equal size")
        kind = self.shape[0]
        if kind == "cyclic":
            q = self.shape[1]
            if len(self.generators) != 1:
                raise ValueError("cyclic shape takes exactly one generator")
            if not _is_prime_power(q, self.p):
                raise ValueError(f"{q} is not a power of {self.p}")
            orders = [q]
        elif kind == "elab":
            _, p, r = self.shape
            if p != self.p or len(self.generators) != r:
                raise ValueError("elab shape mismatch")
            orders = [p] * r
        else:
            raise ValueError(f"unknown group shape {kind!r}")
        ident = gfp.identity(d)
        for g, o in zip(self.generators, orders):
            if not np.array_equal(gfp.matpow(g, o, self.p), ident):
                raise IntegrityError("generator order violated")
        for g, h in itertools.combinations(self.generators, 2):
            if not np.array_equal(gfp.matmul(g, h, self.p), gfp.matmul(h, g, self.p)):
                raise IntegrityError("generators must commute")

    @property
    def dim(self) -> int:
        return int(self.generators[0].shape[0]) if self.generators else 0

    @property
    def group_order(self) -> int:
        if self.shape[0] == "cyclic":
            return self.shape[1]
        return self.shape[1] ** self.shape[2]


def _is_prime_power(q: int, p: int) -> bool:
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def trivial_module(p: int, shape) -> FpModule:
    n = 1 if shape[0] == "cyclic" else shape[2]
    return FpModule(p, [np.ones((1, 1), dtype=np.int64)] * n, tuple(shape))


def jordan_module(p: int, m: int, q: int | None = None) -> FpModule:
    """The m-dimensional Jordan block module J_m for a cyclic group."""
    q = p if q is None else q
    if not 1 <= m <= q:
        raise ValueError(f"Jordan block size must lie in 1..{q}")
    g = np.eye(m, dtype=np.int64) + np.eye(m, k=1, dtype=np.int64)
    return FpModule(p, [g % p], ("cyclic", q))


def module_from_jordan_type(p: int, mults, q: int | None = None) -> FpModule:
    """Direct sum of Jordan blocks, sizes 1..len(mults) with multiplicities."""
    q = p if q is None else q
    blocks = []
    for size, m in enumerate(mults, start=1):
        for _ in range(m):
            blocks.append(jordan_module(p, size, q).generators[0])
    if not blocks:
        g = np.zeros((0, 0), dtype=np.int64)
        return FpModule(p, [g], ("cyclic", q))
    d = sum(b.shape[0] for b in blocks)
    g = np.zeros((d, d), dtype=np.int64)
    at = 0
    for b in blocks:
        k = b.shape[0]
        g[at:at + k, at:at + k] = b
        at += k
    return FpModule(p, [g], ("cyclic", q))


def group_elements(mod: FpModule):
    """All group element matrices in a fixed exponent order, with indices."""
    if mod.shape[0] == "cyclic":
        q = mod.shape[1]
        exps = [(e,) for e in range(q)]
        orders = [q]
    else:
        _, p, r = mod.shape
        exps = list(itertools.product(range(p), repeat=r))
        orders = [p] * r
    mats = []
    for e in exps:
        m = gfp.identity(mod.dim)
        for gi, ei in zip(mod.generators, e):
            if ei:
                m = gfp.matmul(m, gfp.matpow(gi, ei, mod.p), mod.p)
        mats.append(m)
    index = {e: i for i, e in enumerate(exps)}
    return exps, mats, index, orders


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

def tensor(m1: FpModule, m2: FpModule) -> FpModule:
    if m1.p != m2.p or m1.shape != m2.shape:
        raise SizeMismatchError("tensor factors must share prime and group shape")
    gens = [gfp.normalize(np.kron(a, b), m1.p) for a, b in zip(m1.generators, m2.generators)]
    return FpModule(m1.p, gens, m1.shape)


def dual(mod: FpModule) -> FpModule:
    gens = [gfp.inv(g, mod.p).T % mod.p for g in mod.generators]
    return FpModule(mod.p, gens, mod.shape)


def norm_matrix(mod: FpModule):
    """Action of the sum of all group elements (product of partial sums)."""
    if mod.shape[0] == "cyclic":
        orders = [mod.shape[1]]
    else:
        orders = [mod.shape[1]] * mod.shape[2]
    nu = gfp.identity(mod.dim)
    for g, o in zip(mod.generators, orders):
        acc = np.zeros_like(g)
        powg = gfp.identity(mod.dim)
        for _ in range(o):
            acc = (acc + powg) % mod.p
            powg = gfp.matmul(powg, g, mod.p)
        nu = gfp.matmul(nu, acc, mod.p)
    return nu


def free_rank(mod: FpModule) -> int:
    """Multiplicity of the free module kG as a direct summand."""
    return gfp.rank(norm_matrix(mod), mod.p)


def core_dim(mod: FpModule) -> int:
    return mod.dim - mod.group_order * free_rank(mod)


def socle_dim(mod: FpModule) -> int:
    stacked = np.vstack([(g - gfp.identity(mod.dim)) % mod.p for g in mod.generators])
    return mod.dim - gfp.rank(stacked, mod.p)


def radical_dim(mod: FpModule) -> int:
    cols = np.hstack([(g - gfp.identity(mod.dim)) % mod.p for g in mod.generators])
    return gfp.rank(cols, mod.p)


def top_dim(mod: FpModule) -> int:
    return mod.dim - radical_dim(mod)


def core_split(mod: FpModule) -> FpModule:
    """A module isomorphic to the complement of the maximal free summand.

    Picks basis vectors v_i whose norm images are independent (they span a
    free submodule F), solves for functionals lambda_j that dual-pair the
    free basis x v_i, and takes the kernel of the equivariant projection
    m -> sum_x,j lambda_j(x m) x^-1 v_j.  That kernel is cut out directly
    by the stacked functional rows lambda_j . x, so the projection matrix
    itself is never materialized.  Self-injectivity of kG guarantees the
    solve succeeds; any failure is an integrity error, not a condition.
    """
    p, d = mod.p, mod.dim
    nu = norm_matrix(mod)
    _, pivots = gfp.rref(nu, p)
    f = len(pivots)
    if f == 0:
        return mod
    exps, mats, index, _ = group_elements(mod)
    og = len(exps)
    V = np.zeros((d, f), dtype=np.int64)
    for j, c in enumerate(pivots):
        V[c, j] = 1
    cols = []
    for j in range(f):
        for x in mats:
            cols.append((x @ V[:, j]) % p)
    B = np.array(cols, dtype=np.int64).T  # d x (|G| f), columns x.v_j
    targets = np.zeros((og * f, f), dtype=np.int64)
    ident_pos = index[tuple([0] * len(exps[0]))]
    for j in range(f):
        targets[j * og + ident_pos, j] = 1
    lam = gfp.solve_right(B.T % p, targets, p)  # d x f, columns are functionals
    if lam is None:
        raise IntegrityError("projection functionals do not exist")
    # rows of C are lambda_j . x; the projection's kernel is exactly ker C
    C = np.zeros((og * f, d), dtype=np.int64)
    inv_index = _inverse_index(exps, index, mod)
    for xi, x in enumerate(mats):
        lx = gfp.matmul(lam.T, x, p)  # f x d
        for j in range(f):
            C[j * og + xi] = lx[j]
    # C @ B must be the dual-pairing pattern: lambda_j(x y v_i) = [i=j][y=x^-1];
    # that both certifies the functionals and shows the x v_i are independent.
    pattern = np.zeros((og * f, og * f), dtype=np.int64)
    for j in range(f):
        for xi in range(og):
            pattern[j * og + xi, j * og + inv_index[xi]] = 1
    if not np.array_equal(gfp.matmul(C, B, p), pattern):
        raise IntegrityError("free generators failed to span a free submodule")
    K, free = gfp.nullspace(C, p, with_free=True)
    if K.shape[1] != d - og * f:
        raise IntegrityError("kernel dimension disagrees with core dimension")
    gens = [_restrict(K, free, g, p) for g in mod.generators]
    return FpModule(p, gens, mod.shape)


def _restrict(K, free, g, p):
    """Coordinates of g K in the basis K (identity block at the free rows)."""
    gk = gfp.matmul(g, K, p)
    A = gk[free, :] % p
    if not np.array_equal(gfp.matmul(K, A, p), gk):
        raise IntegrityError("subspace is not generator-stable")
    return A


def _inverse_index(exps, index, mod: FpModule):
    if mod.shape[0] == "cyclic":
        q = mod.shape[1]
        return [index[((-e[0]) % q,)] for e in exps]
    p = mod.shape[1]
    return [index[tuple((-ei) % p for ei in e)] for e in exps]


def syzygy(mod: FpModule) -> FpModule:
    """Kernel of a projective cover (kG)^t -> M, t = dim of the top."""
    if mod.dim == 0:
        return mod
    p, d = mod.p, mod.dim
    gens_minus_one = np.hstack([(g - gfp.identity(d)) % p for g in mod.generators])
    R, pivots = gfp.rref(gens_minus_one.T, p)
    # rows of R span rad M; standard basis vectors off the pivot set lift the top
    pivot_set = set(pivots)
    lifts = [j for j in range(d) if j not in pivot_set]
    t = len(lifts)
    exps, mats, index, _ = group_elements(mod)
    og = len(exps)
    cols = []
    for j in lifts:
        for x in mats:
            cols.append(x[:, j] % p)
    phi = np.array(cols, dtype=np.int64).T  # d x (|G| t)
    if gfp.rank(phi, p) != d:
        raise IntegrityError("top lifts do not generate the module")
    K, free = gfp.nullspace(phi, p, with_free=True)  # (|G| t) x (t|G| - d)
    reg = _regular_representation(mod, exps, index)
    gens = []
    for gi in range(len(mod.generators)):
        rho = _block_diag([reg[gi]] * t)
        gens.append(_restrict(K, free, rho, p))
    return FpModule(p, gens, mod.shape)


def cosyzygy(mod: FpModule) -> FpModule:
    """Cokernel of an injective hull, computed as dual . syzygy . dual."""
    return dual(syzygy(dual(mod)))


def _regular_representation(mod: FpModule, exps, index):
    og = len(exps)
    mats = []
    if mod.shape[0] == "cyclic":
        q = mod.shape[1]
        gen_exps = [(1,)]
    else:
        _, p, r = mod.shape
        gen_exps = [tuple(1 if i == k else 0 for i in range(r)) for k in range(r)]
    for ge in gen_exps:
        R = np.zeros((og, og), dtype=np.int64)
        for e in exps:
            if mod.shape[0] == "cyclic":
                prod = ((e[0] + 1) % mod.shape[1],)
            else:
                prod = tuple((a + b) % mod.shape[1] for a, b in zip(e, ge))
            R[index[prod], index[e]] = 1
        mats.append(R)
    return mats


def _block_diag(blocks):
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.int64)
    at = 0
    for b in blocks:
        k = b.shape[0]
        out[at:at + k, at:at + k] = b
        at += k
    return out


# ---------------------------------------------------------------------------
# Jordan decomposition (cyclic groups)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JordanDecomposition:
    """Multiplicities of Jordan blocks J_1..J_q; sum of i * m_i = dim."""

    q: int
    mults: tuple

    @property
    def dim(self) -> int:
        return sum(i * m for i, m in enumerate(self.mults, start=1))

    @property
    def summands(self) -> int:
        return sum(self.mults)

    def stripped_free(self) -> "JordanDecomposition":
        m = list(self.mults)
        m[-1] = 0
        return JordanDecomposition(self.q, tuple(m))


def jordan_decompose(mod: FpModule) -> JordanDecomposition:
    """Block multiplicities from the rank profile of (g - 1)^k."""
    if mod.shape[0] != "cyclic":
        raise ValueError("Jordan decomposition requires a cyclic group")
    q = mod.shape[1]
    g = mod.generators[0]
    d = mod.dim
    nil = (g - gfp.identity(d)) % mod.p
    ranks = [d]
    power = gfp.identity(d)
    for _ in range(q + 1):
        power = gfp.matmul(power, nil, mod.p)
        ranks.append(gfp.rank(power, mod.p))
    mults = []
    for j in range(1, q + 1):
        mults.append(ranks[j - 1] - 2 * ranks[j] + ranks[j + 1])
    jd = JordanDecomposition(q, tuple(mults))
    if jd.dim != d or any(m < 0 for m in jd.mults):
        raise IntegrityError("inconsistent rank profile")
    return jd


@lru_cache(maxsize=None)
def _jordan_tensor_table(p: int, q: int, a: int, b: int):
    """Jordan type of J_a (x) J_b, decomposed by explicit matrices."""
    prod = tensor(jordan_module(p, a, q), jordan_module(p, b, q))
    return jordan_decompose(prod).mults


# ---------------------------------------------------------------------------
# invariant sequences and channels
# ---------------------------------------------------------------------------

def oracle_invariants(mod: FpModule, count: int, kinds=("c",),
                      dim_cap: int = DIM_CAP):
    """Direct values of the requested invariants for n = 1..count.

    c: dimension of core(M^n); s: number of indecomposable summands (cyclic
    shape only); d: socle length of the core; l: length of the core, which
    for a p-group equals its dimension (the only simple is the trivial
    one-dimensional module).  Iteration always re-tensors the stripped core,
    which keeps sizes at c_n rather than dim(M)^n.
    """
    kinds = tuple(kinds)
    for k in kinds:
        if k not in ("c", "s", "d", "l"):
            raise ValueError(f"unknown invariant kind {k!r}")
    if "s" in kinds and mod.shape[0] != "cyclic":
        raise ValueError("summand counts need a cyclic group (known decomposition)")
    out = {k: [] for k in kinds}
    if mod.shape[0] == "cyclic":
        q = mod.shape[1]
        base = jordan_decompose(mod)
        cur = base.stripped_free()
        for n in range(count):
            vals = {
                "c": cur.dim,
                "s": cur.summands,
                "d": cur.summands,  # each Jordan block has a 1-dim socle
                "l": cur.dim,
            }
            for k in kinds:
                out[k].append(vals[k])
            if n == count - 1:
                break
            if cur.dim * mod.dim > dim_cap:
                raise BudgetError("tensor step exceeds the dimension cap")
            nxt = [0] * q
            for a, ma in enumerate(cur.mults, start=1):
                if not ma:
                    continue
                for b, mb in enumerate(base.mults, start=1):
                    if not mb:
                        continue
                    for j, mj in enumerate(_jordan_tensor_table(mod.p, q, a, b)):
                        nxt[j] += ma * mb * mj
            nxt[-1] = 0  # strip free blocks
            cur = JordanDecomposition(q, tuple(nxt))
        return out
    # elementary abelian: fully dense iteration
    cur = core_split(mod)
    for n in range(count):
        vals = {"c": cur.dim, "d": socle_dim(cur), "l": cur.dim}
        for k in kinds:
            out[k].append(vals[k])
        if n == count - 1:
            break
        if cur.dim * mod.dim > dim_cap:
            raise BudgetError("tensor step exceeds the dimension cap")
        cur = core_split(tensor(cur, mod))
    return out


def channel_harvest(mod: FpModule, depth: int, fit_tails: bool = True,
                    t_max: int = 4, d_max: int = 3, dim_cap: int = DIM_CAP):
    """dim/soc/len values of the syzygy tower of M, both directions.

    Returns {"dim": channel, "soc": channel, "len": channel} where each
    channel carries forward values at n = 0..depth, backward values at
    n = 1..depth, and (when requested and found) fitted quasipolynomial
    tails.
    """
    from .omega import DimensionChannel  # local import avoids a cycle
    from .quasipoly import qp_fit

    start = core_split(mod)
    fwd = []
    cur = start
    for n in range(depth + 1):
        if cur.dim > dim_cap:
            raise BudgetError("syzygy tower exceeds the dimension cap")
        fwd.append((cur.dim, socle_dim(cur)))
        if n < depth:
            cur = core_split(syzygy(cur))
    bwd = []
    cur = start
    for _ in range(depth):
        cur = core_split(cosyzygy(cur))
        if cur.dim > dim_cap:
            raise BudgetError("cosyzygy tower exceeds the dimension cap")
        bwd.append((cur.dim, socle_dim(cur)))

    def build(pick):
        fvals = tuple(pick(v) for v in fwd)
        bvals = tuple(pick(v) for v in bwd)
        ftail = btail = None
        if fit_tails:
            ftail = qp_fit(list(enumerate(fvals)), t_max, d_max, depth)
            btail = qp_fit([(n + 1, v) for n, v in enumerate(bvals)],
                           t_max, d_max, depth)
        return DimensionChannel(forward_prefix=fvals, backward_prefix=bvals,
                                forward_tail=ftail, backward_tail=btail)

    return {
        "dim": build(lambda v: v[0]),
        "soc": build(lambda v: v[1]),
        "len": build(lambda v: v[0]),  # p-group: length equals dimension
    }


# ---------------------------------------------------------------------------
# generator-file format
# ---------------------------------------------------------------------------

def parse_generators(text: str) -> FpModule:
    """Load a module from the plain text format.

    ``p=<prime>`` and ``order=<p^k | p,p,...>`` headers, then one matrix per
    generator given as rows of space-separated digits, matrices separated by
    blank lines.
    """
    from .errors import ParseError

    p = None
    order_spec = None
    matrices = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if current:
                matrices.append(current)
                current = []
            continue
        if "=" in line and not line[0].isdigit() and not line.startswith("-"):
            key, _, val = line.partition("=")
            key = key.strip().lower()
            if key == "p":
                p = int(val)
            elif key == "order":
                order_spec = val.strip()
            else:
                raise ParseError(f"unknown header {key!r}", line=lineno)
            continue
        try:
            current.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ParseError(f"bad matrix row {line!r}", line=lineno)
    if current:
        matrices.append(current)
    if p is None or order_spec is None:
        raise ParseError("missing p= or order= header")
    parts = [s.strip() for s in order_spec.split(",")]
    if len(parts) == 1:
        shape = ("cyclic", int(parts[0]))
    else:
        vals = [int(s) for s in parts]
        if any(v != p for v in vals):
            raise ParseError("elementary abelian shape requires order=p,p,...")
        shape = ("elab", p, len(vals))
    gens = [np.array(m, dtype=np.int64) % p for m in matrices]
    return FpModule(p, gens, shape)
