"""Finite-dimensional Hopf algebras by structure constants.

Structure constants are stored sparsely:

* ``mul[(i, j)]`` is the vector e_i e_j,
* ``comul[i]`` maps ``(j, k)`` to the coefficient of e_j (x) e_k in Delta(e_i),
* ``antipode[i]`` is the vector S(e_i),
* ``unit`` is the vector 1 and ``counit[i]`` is eps(e_i).

Two-fold tensors ``H (x) H'`` are dicts keyed by index pairs; when a tensor
has to enter linear algebra it is flattened with index ``j * dim' + k``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, Mapping, Sequence

from .errors import DimensionError, InvariantViolation, PreconditionError
from .groups import GroupTable
from .linear_core import (
    ONE,
    ZERO,
    Matrix,
    Scalar,
    Subspace,
    Vec,
    VecLike,
    add_into,
    as_vec,
    dense,
    kernel_from_columns,
    lincomb,
    scale,
    to_scalar,
    unit_vec,
)

Tensor = dict[tuple[int, ...], Scalar]


# -- tensor helpers ----------------------------------------------------------

def _acc(out: dict, key, c: Scalar) -> None:
    y = out.get(key, ZERO) + c
    if y:
        out[key] = y
    else:
        out.pop(key, None)


def tensor_map(t: Mapping[tuple[int, int], Scalar],
               left: Sequence[Mapping[int, Scalar]] | None = None,
               right: Sequence[Mapping[int, Scalar]] | None = None) -> Tensor:
    """Apply linear maps (given by column lists) to the legs of a 2-tensor."""
    out: Tensor = {}
    for (j, k), c in t.items():
        lj = left[j] if left is not None else {j: ONE}
        rk = right[k] if right is not None else {k: ONE}
        for a, x in lj.items():
            for b, y in rk.items():
                _acc(out, (a, b), c * x * y)
    return out


def flatten(t: Mapping[tuple[int, int], Scalar], second_dim: int) -> Vec:
    return {j * second_dim + k: c for (j, k), c in t.items() if c}


def unflatten(v: Mapping[int, Scalar], second_dim: int) -> Tensor:
    return {divmod(i, second_dim): c for i, c in v.items() if c}


def _pair_name(x: str, y: str) -> str:
    wrap = lambda s: f"({s})" if ("*" in s or "#" in s) else s  # noqa: E731
    return f"{wrap(x)}*{wrap(y)}"


# -- the data type -----------------------------------------------------------

class HopfAlgebra:
    """Structure constants of a finite-dimensional Hopf algebra over Q.

    The constructor only checks shapes; use :func:`verify_hopf` for the
    axioms.
    """

    def __init__(self, basis: Sequence[str],
                 mul: Mapping[tuple[int, int], VecLike],
                 comul: Sequence[Mapping[tuple[int, int], object]],
                 unit: VecLike,
                 counit: VecLike,
                 antipode: Sequence[VecLike],
                 name: str = ""):
        n = len(basis)
        self.basis: tuple[str, ...] = tuple(str(b) for b in basis)
        self.name = name
        if len(set(self.basis)) != n:
            raise DimensionError("basis names must be distinct")

        def idx(i, what):
            if not isinstance(i, int) or not 0 <= i < n:
                raise DimensionError(f"{what}: index {i!r} out of range for dimension {n}")
            return i

        self.mul: dict[tuple[int, int], Vec] = {}
        for (i, j), v in mul.items():
            v = as_vec(v)
            for k in v:
                idx(k, "mul")
            if v:
                self.mul[(idx(i, "mul"), idx(j, "mul"))] = v
        if len(comul) != n:
            raise DimensionError(f"comul has {len(comul)} entries, expected {n}")
        self.comul: tuple[Tensor, ...] = tuple(
            {(idx(j, "comul"), idx(k, "comul")): to_scalar(c)
             for (j, k), c in d.items() if to_scalar(c)}
            for d in comul)
        self.unit: Vec = as_vec(unit)
        for k in self.unit:
            idx(k, "unit")
        cu = as_vec(counit)
        for k in cu:
            idx(k, "counit")
        self.counit: tuple[Scalar, ...] = dense(cu, n)
        if len(antipode) != n:
            raise DimensionError(f"antipode has {len(antipode)} columns, expected {n}")
        self.antipode: tuple[Vec, ...] = tuple(as_vec(c) for c in antipode)
        for c in self.antipode:
            for k in c:
                idx(k, "antipode")

    @classmethod
    def _trusted(cls, basis, mul, comul, unit, counit, antipode, name="") -> HopfAlgebra:
        """Skip normalization for data built here from already-valid algebras."""
        self = cls.__new__(cls)
        self.basis = tuple(basis)
        self.name = name
        self.mul = mul
        self.comul = tuple(comul)
        self.unit = unit
        self.counit = tuple(counit)
        self.antipode = tuple(antipode)
        return self

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def one(self) -> Vec:
        return dict(self.unit)

    def mult(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        mul = self.mul
        for i, a in u.items():
            for j, b in v.items():
                e = mul.get((i, j))
                if e:
                    add_into(out, e, a * b)
        return out

    def delta(self, u: Mapping[int, Scalar]) -> Tensor:
        out: Tensor = {}
        for i, a in u.items():
            for key, c in self.comul[i].items():
                _acc(out, key, a * c)
        return out

    def eps(self, u: Mapping[int, Scalar]) -> Scalar:
        cu = self.counit
        return sum((a * cu[i] for i, a in u.items()), ZERO)

    def anti(self, u: Mapping[int, Scalar]) -> Vec:
        return lincomb((a, self.antipode[i]) for i, a in u.items())

    def tensor_mult(self, s: Mapping, t: Mapping) -> Tensor:
        """Product in H (x) H: (a (x) b)(c (x) d) = ac (x) bd."""
        out: Tensor = {}
        mul = self.mul
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                l = mul.get((a, c))
                r = mul.get((b, d))
                if l and r:
                    for p, u in l.items():
                        for q, v in r.items():
                            _acc(out, (p, q), x * y * u * v)
        return out

    def structure_key(self) -> tuple:
        return (self.dim,
                tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.mul.items())),
                tuple(tuple(sorted(t.items())) for t in self.comul),
                tuple(sorted(self.unit.items())), self.counit,
                tuple(tuple(sorted(c.items())) for c in self.antipode))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return self is other or self.structure_key() == other.structure_key()

    def __hash__(self) -> int:
        return hash((self.dim, self.counit))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<HopfAlgebra{label} dim={self.dim}>"


def ground_field() -> HopfAlgebra:
    """The zero object: Q with its trivial Hopf structure."""
    return HopfAlgebra(["1"], {(0, 0): {0: ONE}}, [{(0, 0): ONE}], {0: ONE}, [ONE], [{0: ONE}],
                       name="k")


def group_algebra(g: GroupTable) -> HopfAlgebra:
    n = g.order
    mul = {(i, j): {g.table[i][j]: ONE} for i in range(n) for j in range(n)}
    comul = [{(i, i): ONE} for i in range(n)]
    antipode = [{g.inverse(i): ONE} for i in range(n)]
    return HopfAlgebra([f"g{i}" for i in range(n)], mul, comul, {g.identity: ONE},
                       [ONE] * n, antipode, name=f"k[{g.name}]" if g.name else "")


def tensor_product(a: HopfAlgebra, b: HopfAlgebra) -> HopfAlgebra:
    """A (x) B with componentwise structure (basis index i * dim B + j)."""
    m = b.dim
    basis = [_pair_name(x, y) for x in a.basis for y in b.basis]
    mul = {}
    for (i, k), u in a.mul.items():
        for (j, l), v in b.mul.items():
            mul[(i * m + j, k * m + l)] = {p * m + q: x * y for p, x in u.items() for q, y in v.items()}
    comul = []
    for i in range(a.dim):
        for j in range(m):
            t: Tensor = {}
            for (i1, i2), x in a.comul[i].items():
                for (j1, j2), y in b.comul[j].items():
                    _acc(t, (i1 * m + j1, i2 * m + j2), x * y)
            comul.append(t)
    unit = {p * m + q: x * y for p, x in a.unit.items() for q, y in b.unit.items()}
    counit = [x * y for x in a.counit for y in b.counit]
    antipode = [{p * m + q: x * y for p, x in a.antipode[i].items() for q, y in b.antipode[j].items()}
                for i in range(a.dim) for j in range(m)]
    name = f"{a.name}(x){b.name}" if a.name and b.name else ""
    return HopfAlgebra._trusted(basis, mul, comul, unit, counit, antipode, name=name)


# -- axioms ------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    associative: bool
    coassociative: bool
    unit: bool
    counit: bool
    bialgebra: bool
    antipode_left: bool
    antipode_right: bool
    cocommutative: bool
    involutive: bool

    @property
    def ok(self) -> bool:
        return all(asdict(self).values())

    def failures(self) -> list[str]:
        return [k for k, v in asdict(self).items() if not v]

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


def _apply(v: Mapping[int, Scalar], table: Callable[[int], Vec]) -> Vec:
    """sum_m v[m] * table(m), skipping the copy when v is a single basis vector."""
    if len(v) == 1:
        ((m, c),) = v.items()
        w = table(m)
        return w if c == ONE else scale(w, c)
    return lincomb((c, table(m)) for m, c in v.items())


def _check_assoc(h: HopfAlgebra) -> bool:
    n, mul = h.dim, h.mul
    empty: Vec = {}
    for i in range(n):
        for j in range(n):
            ij = mul.get((i, j), empty)
            for k in range(n):
                left = _apply(ij, lambda m: mul.get((m, k), empty))
                right = _apply(mul.get((j, k), empty), lambda m: mul.get((i, m), empty))
                if left != right:
                    return False
    return True


def _check_unit(h: HopfAlgebra) -> bool:
    one = h.unit
    return all(h.mult(one, unit_vec(i)) == unit_vec(i) == h.mult(unit_vec(i), one)
               for i in range(h.dim))


def _check_coassoc(h: HopfAlgebra) -> bool:
    for i in range(h.dim):
        left: Tensor = {}
        right: Tensor = {}
        for (j, k), c in h.comul[i].items():
            for (a, b), x in h.comul[j].items():
                _acc(left, (a, b, k), c * x)
            for (a, b), x in h.comul[k].items():
                _acc(right, (j, a, b), c * x)
        if left != right:
            return False
    return True


def _check_counit(h: HopfAlgebra) -> bool:
    cu = h.counit
    for i in range(h.dim):
        left: Vec = {}
        right: Vec = {}
        for (j, k), c in h.comul[i].items():
            _acc(left, k, c * cu[j])
            _acc(right, j, c * cu[k])
        if not left == right == unit_vec(i):
            return False
    return True


def _check_bialgebra(h: HopfAlgebra) -> bool:
    n = h.dim
    if h.delta(h.unit) != {(a, b): x * y for a, x in h.unit.items() for b, y in h.unit.items()}:
        return False
    if h.eps(h.unit) != ONE:
        return False
    for i in range(n):
        for j in range(n):
            prod = h.mul.get((i, j), {})
            if h.delta(prod) != h.tensor_mult(h.comul[i], h.comul[j]):
                return False
            if h.eps(prod) != h.counit[i] * h.counit[j]:
                return False
    return True


def _check_antipode(h: HopfAlgebra, side: str) -> bool:
    for i in range(h.dim):
        acc: Vec = {}
        for (j, k), c in h.comul[i].items():
            if side == "left":
                add_into(acc, h.mult(h.antipode[j], unit_vec(k)), c)
            else:
                add_into(acc, h.mult(unit_vec(j), h.antipode[k]), c)
        expected = {k: h.counit[i] * x for k, x in h.unit.items() if h.counit[i]}
        if acc != expected:
            return False
    return True


def verify_hopf(h: HopfAlgebra) -> VerificationReport:
    """Check every cocommutative Hopf algebra axiom exactly on the basis."""
    return VerificationReport(
        associative=_check_assoc(h),
        coassociative=_check_coassoc(h),
        unit=_check_unit(h),
        counit=_check_counit(h),
        bialgebra=_check_bialgebra(h),
        antipode_left=_check_antipode(h, "left"),
        antipode_right=_check_antipode(h, "right"),
        cocommutative=is_cocommutative(h),
        involutive=all(h.anti(h.antipode[i]) == unit_vec(i) for i in range(h.dim)),
    )


def is_commutative(h: HopfAlgebra) -> bool:
    return all(h.mul.get((i, j), {}) == h.mul.get((j, i), {})
               for i in range(h.dim) for j in range(i))


def is_cocommutative(h: HopfAlgebra) -> bool:
    return all(t.get((k, j), ZERO) == c for t in h.comul for (j, k), c in t.items())


# -- morphisms ---------------------------------------------------------------

class Morphism:
    """A Hopf algebra map, stored by the images of the domain basis.

    Construction verifies compatibility with all structure maps unless
    ``check=False`` (reserved for maps already known to be valid).
    """

    def __init__(self, dom: HopfAlgebra, cod: HopfAlgebra,
                 matrix: Matrix | Sequence[Sequence[object]], *, check: bool = True):
        if not isinstance(matrix, Matrix):
            matrix = Matrix.from_rows(matrix, dom.dim) if len(matrix) else Matrix.zeros(0, dom.dim)
        if (matrix.rows, matrix.cols) != (cod.dim, dom.dim):
            raise DimensionError(
                f"matrix is {matrix.rows}x{matrix.cols}, expected {cod.dim}x{dom.dim}")
        self._init(dom, cod, matrix.sparse_columns(), check)

    @classmethod
    def from_columns(cls, dom: HopfAlgebra, cod: HopfAlgebra,
                     columns: Sequence[Mapping[int, Scalar]], *, check: bool = True) -> Morphism:
        if len(columns) != dom.dim:
            raise DimensionError(f"{len(columns)} columns for a domain of dimension {dom.dim}")
        self = cls.__new__(cls)
        self._init(dom, cod, [as_vec(c) for c in columns], check)
        return self

    def _init(self, dom, cod, cols, check):
        for c in cols:
            if c and (max(c) >= cod.dim or min(c) < 0):
                raise DimensionError("column entry outside the codomain")
        self.dom = dom
        self.cod = cod
        self.cols: tuple[Vec, ...] = tuple(cols)
        if check:
            report = check_morphism(dom, cod, self.cols)
            bad = [k for k, v in report.items() if not v]
            if bad:
                raise PreconditionError(f"not a Hopf algebra morphism: fails {', '.join(bad)}")

    @property
    def matrix(self) -> Matrix:
        return Matrix.from_columns(self.cols, self.cod.dim)

    def __call__(self, v: Mapping[int, Scalar]) -> Vec:
        return lincomb((a, self.cols[i]) for i, a in v.items())

    def compose(self, other: Morphism) -> Morphism:
        """self o other."""
        if other.cod is not self.dom and other.cod != self.dom:
            raise DimensionError("morphisms are not composable")
        return Morphism.from_columns(other.dom, self.cod, [self(c) for c in other.cols], check=False)

    __matmul__ = compose

    def same_map(self, other: Morphism) -> bool:
        return self.cols == other.cols and self.dom.dim == other.dom.dim and self.cod.dim == other.cod.dim

    def __repr__(self) -> str:
        return f"<Morphism {self.dom!r} -> {self.cod!r}>"


def check_morphism(dom: HopfAlgebra, cod: HopfAlgebra,
                   cols: Sequence[Mapping[int, Scalar]]) -> dict[str, bool]:
    f = lambda v: lincomb((a, cols[i]) for i, a in v.items())  # noqa: E731
    n = dom.dim
    multiplicative = all(f(dom.mul.get((i, j), {})) == cod.mult(cols[i], cols[j])
                         for i in range(n) for j in range(n))
    unital = f(dom.unit) == cod.unit
    comultiplicative = all(tensor_map(dom.comul[i], cols, cols) == cod.delta(cols[i])
                           for i in range(n))
    counital = all(cod.eps(cols[i]) == dom.counit[i] for i in range(n))
    antipode = all(f(dom.antipode[i]) == cod.anti(cols[i]) for i in range(n))
    return {"multiplicative": multiplicative, "unital": unital,
            "comultiplicative": comultiplicative, "counital": counital, "antipode": antipode}


def identity_morphism(h: HopfAlgebra) -> Morphism:
    return Morphism.from_columns(h, h, [unit_vec(i) for i in range(h.dim)], check=False)


def initial_morphism(h: HopfAlgebra, k: HopfAlgebra | None = None) -> Morphism:
    """eta: k -> H."""
    return Morphism.from_columns(k or ground_field(), h, [h.one], check=False)


def terminal_morphism(h: HopfAlgebra, k: HopfAlgebra | None = None) -> Morphism:
    """eps: H -> k."""
    return Morphism.from_columns(h, k or ground_field(),
                                 [{0: c} if c else {} for c in h.counit], check=False)


def zero_morphism(a: HopfAlgebra, b: HopfAlgebra) -> Morphism:
    """eta_B o eps_A."""
    return Morphism.from_columns(a, b, [scale_one(b, c) for c in a.counit], check=False)


def scale_one(h: HopfAlgebra, c: Scalar) -> Vec:
    return {k: c * x for k, x in h.unit.items()} if c else {}


def group_morphism(g: GroupTable, h: GroupTable, phi: Sequence[int],
                   dom: HopfAlgebra | None = None, cod: HopfAlgebra | None = None) -> Morphism:
    """k[phi]: k[G] -> k[H] for a group homomorphism given as an image list."""
    dom = dom or group_algebra(g)
    cod = cod or group_algebra(h)
    return Morphism.from_columns(dom, cod, [unit_vec(phi[i]) for i in range(g.order)])


def linear_kernel(f: Morphism) -> Subspace:
    return kernel_from_columns(f.cols, f.dom.dim)


def linear_image(f: Morphism) -> Subspace:
    return Subspace(f.cod.dim, f.cols)


def is_injective(f: Morphism) -> bool:
    return linear_kernel(f).dim == 0


def is_surjective(f: Morphism) -> bool:
    return linear_image(f).dim == f.cod.dim


def is_isomorphism(f: Morphism) -> bool:
    return f.dom.dim == f.cod.dim and is_injective(f)


# -- subspace predicates -----------------------------------------------------

def augmentation_ideal(h: HopfAlgebra) -> Subspace:
    """H+ = ker(eps)."""
    return kernel_from_columns([{0: c} if c else {} for c in h.counit], h.dim)


def projection_columns(s: Subspace) -> list[Vec]:
    """Columns of the linear projection ambient -> ambient/s."""
    return [s.quotient_coords(unit_vec(j)) for j in range(s.ambient_dim)]


def _check_ambient(h: HopfAlgebra, s: Subspace) -> None:
    if s.ambient_dim != h.dim:
        raise DimensionError(f"subspace lives in dimension {s.ambient_dim}, algebra has {h.dim}")


def _delta_in_square(h: HopfAlgebra, s: Subspace, q: Sequence[Vec], b: Vec) -> bool:
    t = h.delta(b)
    return not tensor_map(t, left=q) and not tensor_map(t, right=q)


def is_sub_hopf(h: HopfAlgebra, s: Subspace) -> bool:
    """Contains 1, closed under product and antipode, Delta(s) inside s (x) s."""
    _check_ambient(h, s)
    if not s.contains(h.unit):
        return False
    rows = s.rows
    if not all(s.contains(h.anti(b)) for b in rows):
        return False
    if not all(s.contains(h.mult(a, b)) for a in rows for b in rows):
        return False
    q = projection_columns(s)
    return all(_delta_in_square(h, s, q, b) for b in rows)


def adjoint_action(h: HopfAlgebra, y: Mapping[int, Scalar], a: Mapping[int, Scalar]) -> Vec:
    """y_1 a S(y_2)."""
    out: Vec = {}
    for (j, k), c in h.delta(y).items():
        add_into(out, h.mult(h.mult(unit_vec(j), a), h.antipode[k]), c)
    return out


def is_normal_sub_hopf(h: HopfAlgebra, s: Subspace) -> bool:
    if not is_sub_hopf(h, s):
        raise PreconditionError("subspace is not a sub-Hopf algebra")
    return all(s.contains(adjoint_action(h, unit_vec(i), a))
               for i in range(h.dim) for a in s.rows)


def is_left_ideal(h: HopfAlgebra, s: Subspace) -> bool:
    _check_ambient(h, s)
    return all(s.contains(h.mult(unit_vec(i), b)) for i in range(h.dim) for b in s.rows)


def is_two_sided_coideal(h: HopfAlgebra, s: Subspace) -> bool:
    """Delta(s) inside s (x) H + H (x) s and eps(s) = 0."""
    _check_ambient(h, s)
    if any(h.eps(b) for b in s.rows):
        return False
    q = projection_columns(s)
    return all(not tensor_map(h.delta(b), q, q) for b in s.rows)


def is_hopf_ideal(h: HopfAlgebra, s: Subspace) -> bool:
    _check_ambient(h, s)
    for b in s.rows:
        for i in range(h.dim):
            e = unit_vec(i)
            if not (s.contains(h.mult(e, b)) and s.contains(h.mult(b, e))):
                return False
        if not s.contains(h.anti(b)):
            return False
    return is_two_sided_coideal(h, s)


def sub_hopf_algebra(h: HopfAlgebra, s: Subspace,
                     error: type[Exception] = PreconditionError) -> tuple[HopfAlgebra, Morphism]:
    """Induced Hopf structure on a sub-Hopf algebra, with its inclusion.

    The basis is the canonical basis of ``s``; a basis vector inherits the
    name of the ambient basis element when it is one, else ``s<t>``.
    """
    _check_ambient(h, s)
    rows = s.rows
    r = len(rows)

    def fail(msg, payload):
        if issubclass(error, InvariantViolation):
            raise error(msg, payload)
        raise error(msg)

    def coords(v, what):
        red = s.reduce(v)
        if red:
            fail(f"subspace not closed under {what}", {"remainder": _jsonable(red)})
        return {t: v[p] for t, p in enumerate(s.pivot_cols) if p in v}

    mul = {}
    for a in range(r):
        for b in range(r):
            c = coords(h.mult(rows[a], rows[b]), "multiplication")
            if c:
                mul[(a, b)] = c
    q = projection_columns(s)
    comul = []
    pos = {p: t for t, p in enumerate(s.pivot_cols)}
    for b in rows:
        t = h.delta(b)
        if tensor_map(t, left=q) or tensor_map(t, right=q):
            fail("subspace not closed under comultiplication", {"tensor": _jsonable(t)})
        comul.append({(pos[j], pos[k]): c for (j, k), c in t.items() if j in pos and k in pos})
    unit = coords(h.unit, "unit")
    counit = [h.eps(b) for b in rows]
    antipode = [coords(h.anti(b), "antipode") for b in rows]
    names = []
    for t, b in enumerate(rows):
        p = s.pivot_cols[t]
        names.append(h.basis[p] if len(b) == 1 and b[p] == ONE else f"s{t}")
    sub = HopfAlgebra(names, mul, comul, unit, counit, antipode)
    incl = Morphism.from_columns(sub, h, [dict(b) for b in rows], check=False)
    return sub, incl


def _jsonable(v: Mapping) -> dict:
    return {str(k): str(x) for k, x in v.items()}


# -- group-likes -------------------------------------------------------------

def _is_grouplike(h: HopfAlgebra, x: Mapping[int, Scalar]) -> bool:
    return h.eps(x) == ONE and h.delta(x) == {(a, b): u * v for a, u in x.items() for b, v in x.items()}


def group_likes(h: HopfAlgebra) -> list[Vec]:
    """All x with Delta(x) = x (x) x and eps(x) = 1.

    When every basis element is group-like the basis is the answer.
    Otherwise the group-likes are found as the rational joint eigenvectors
    of the commuting operators x -> (e_j^* (x) id) Delta(x); by
    cocommutativity each joint eigenline is spanned by one group-like.
    """
    basis_gl = [unit_vec(i) for i in range(h.dim) if _is_grouplike(h, unit_vec(i))]
    if len(basis_gl) == h.dim:
        return basis_gl
    ops = []
    for j in range(h.dim):
        cols = []
        for i in range(h.dim):
            v: Vec = {}
            for (a, b), c in h.comul[i].items():
                if a == j:
                    _acc(v, b, c)
            cols.append(v)
        ops.append(cols)
    pieces = [Subspace.full(h.dim)]
    for cols in ops:
        nxt = []
        for w in pieces:
            nxt.extend(_split_eigen(w, cols))
        pieces = nxt
    found = []
    for w in pieces:
        for x in w.rows:
            e = h.eps(x)
            if e:
                g = {k: c / e for k, c in x.items()}
                if _is_grouplike(h, g):
                    found.append(g)
    found.sort(key=lambda v: dense(v, h.dim), reverse=True)
    return found


def _split_eigen(w: Subspace, cols: Sequence[Vec]) -> list[Subspace]:
    """Rational eigenspaces of an operator restricted to an invariant subspace."""
    import sympy

    rows = w.rows
    r = len(rows)
    images = [lincomb((c, cols[i]) for i, c in b.items()) for b in rows]
    mat = [[ZERO] * r for _ in range(r)]
    for t, im in enumerate(images):
        for u, c in w.coords(im).items():
            mat[u][t] = c
    lam = sympy.Symbol("lam")
    poly = sympy.Matrix(r, r, lambda i, j: sympy.Rational(mat[i][j].numerator, mat[i][j].denominator)
                        ).charpoly(lam)
    roots = []
    for factor, _ in sympy.factor_list(poly.as_expr(), lam, domain="QQ")[1]:
        p = sympy.Poly(factor, lam)
        if p.degree() == 1:
            a, b = p.all_coeffs()
            val = -sympy.Rational(b) / sympy.Rational(a)
            roots.append(Scalar(int(val.p), int(val.q)))
    out = []
    for lamv in sorted(set(roots)):
        shifted = [add_into(dict(images[t]), rows[t], -lamv) for t in range(r)]
        alphas = kernel_from_columns(shifted, r) if r else Subspace(0)
        out.append(Subspace(w.ambient_dim,
                            [lincomb((c, rows[t]) for t, c in a.items()) for a in alphas.rows]))
    return out
