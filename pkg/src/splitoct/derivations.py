"""Derivations of the split octonions as exact 8x8 matrices.

Matrices act on coordinate columns in the order (a, v1, v2, v3, w1, w2, w3, d).
Root vectors E_phi are built from the infinitesimal form of the root
generators: for gamma labels B -> X B, for delta labels A -> [X, A] and
B -> -B X, with X the nilpotent e+ or e- direction.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .apartment import Root, coroot_of, is_root, pairing
from .automorphisms import ALL_LABELS, LABEL_OF_ROOT, RootLabel
from .octonion import Mat2, Octonion, basis_by_position, decompose, mult, recompose

Matrix = list  # list of 8 rows of 8 entries

N = 8


def zeros(n: int = N, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int = N) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][l] * b[l][j] for l in range(k)), Fraction(0)) for j in range(m)] for i in range(n)]


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def matscale(c, a: Matrix) -> Matrix:
    return [[c * x for x in r] for r in a]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for r in a for x in r)


def bracket(a: Matrix, b: Matrix) -> Matrix:
    return matsub(matmul(a, b), matmul(b, a))


def apply_matrix(m: Matrix, x: Octonion) -> Octonion:
    return Octonion(tuple(sum((m[i][j] * x.coords[j] for j in range(N)), Fraction(0)) for i in range(N)))


def matrix_of(fn) -> Matrix:
    """Column-action matrix of a linear map on octonions."""
    cols = [fn(basis_by_position(j)).coords for j in range(N)]
    return [[cols[j][i] for j in range(N)] for i in range(N)]


_X_PLUS = Mat2(Fraction(0), Fraction(1), Fraction(0), Fraction(0))
_X_MINUS = Mat2(Fraction(0), Fraction(0), Fraction(1), Fraction(0))
_ZERO2 = Mat2(Fraction(0), Fraction(0), Fraction(0), Fraction(0))


def E_root(label: RootLabel) -> Matrix:
    x = _X_PLUS if label.sign == "+" else _X_MINUS
    u = label.axis

    def act(o: Octonion) -> Octonion:
        a, b = decompose(o, u)
        if label.family == "gamma":
            return recompose(_ZERO2, x * b, u)
        return recompose(x * a - a * x, _ZERO2 - b * x, u)

    return matrix_of(act)


def is_derivation(m: Matrix) -> bool:
    """D(xy) = x D(y) + D(x) y on all 64 ordered basis pairs."""
    basis = [basis_by_position(j) for j in range(N)]
    images = [apply_matrix(m, b) for b in basis]
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            lhs = apply_matrix(m, mult(x, y))
            rhs = mult(x, images[j]) + mult(images[i], y)
            if lhs != rhs:
                return False
    return True


# exact linear algebra over the rationals

def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        a[r] = [x / lead for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            vec[pc] = -row[f]
        basis.append(vec)
    return basis


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve_in_span(basis: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum c_k basis_k = target, or None if target is outside the span."""
    k, n = len(basis), len(target)
    aug = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[k]
    return coeffs


def flatten(m: Matrix) -> list:
    return [x for r in m for x in r]


def unflatten(v: Sequence) -> Matrix:
    return [list(v[i * N:(i + 1) * N]) for i in range(N)]


class DerivationBasis:
    def __init__(self, members: list[Matrix]):
        self.members = members
        self.dimension = len(members)
        self._flat = [flatten(m) for m in members]

    def coordinates(self, m: Matrix) -> list[Fraction] | None:
        return solve_in_span(self._flat, flatten(m))

    def contains(self, m: Matrix) -> bool:
        return self.coordinates(m) is not None


class DimensionError(ArithmeticError):
    pass


def derivation_system() -> list[list[Fraction]]:
    """Linear equations in the 64 matrix entries expressing the derivation law."""
    basis = [basis_by_position(j) for j in range(N)]
    prods = [[mult(x, y) for y in basis] for x in basis]
    columns = []
    for r in range(N):
        for c in range(N):
            # unknown D[r][c]: the map sending coordinate c to coordinate r
            unit = zeros()
            unit[r][c] = Fraction(1)
            col = []
            imgs = [apply_matrix(unit, b) for b in basis]
            for i in range(N):
                for j in range(N):
                    res = apply_matrix(unit, prods[i][j]) - mult(basis[i], imgs[j]) - mult(imgs[i], basis[j])
                    col.extend(res.coords)
            columns.append(col)
    return [[columns[u][e] for u in range(N * N)] for e in range(len(columns[0]))]


def derivation_nullspace() -> DerivationBasis:
    vecs = nullspace(derivation_system(), N * N)
    if len(vecs) != 14:
        raise DimensionError(f"derivation algebra has dimension {len(vecs)}, expected 14")
    return DerivationBasis([unflatten(v) for v in vecs])


class NotNilpotent(ValueError):
    pass


def nilpotency_index(m: Matrix, limit: int = N + 1) -> int | None:
    """Smallest k with m^k = 0, or None if none up to the limit."""
    p = m
    for k in range(1, limit + 1):
        if is_zero_matrix(p):
            return k
        p = matmul(p, m)
    return None


def exp_nilpotent(m: Matrix, t=Fraction(1)) -> Matrix:
    """Exact exp(t m) for nilpotent m."""
    k = nilpotency_index(m)
    if k is None:
        raise NotNilpotent("matrix is not nilpotent")
    out = identity(len(m))
    power = identity(len(m))
    for n in range(1, k):
        power = matmul(power, m)
        out = matadd(out, matscale(t ** n * Fraction(1, factorial(n)), power))
    return out


def ad_matrix(x: Matrix, basis: DerivationBasis) -> list[list[Fraction]]:
    """Matrix of ad(x) in the coordinates of the derivation basis."""
    cols = []
    for d in basis.members:
        c = basis.coordinates(bracket(x, d))
        if c is None:
            raise ArithmeticError("bracket left the derivation algebra")
        cols.append(c)
    k = basis.dimension
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def H_gamma() -> Matrix:
    return bracket(E_root(RootLabel("gamma", "k", "-")), E_root(RootLabel("gamma", "k", "+")))


def H_delta() -> Matrix:
    return bracket(E_root(RootLabel("delta", "i", "+")), E_root(RootLabel("delta", "i", "-")))


def scalar_multiple(a: Matrix, b: Matrix) -> Fraction | None:
    """c with a = c b, or None; b must be nonzero."""
    c = None
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if y != 0:
                q = Fraction(x) / y
                if c is None:
                    c = q
                elif c != q:
                    return None
            elif x != 0:
                return None
    return c


def _string_length_below(phi: Root, psi: Root) -> int:
    r = 0
    while is_root(psi + phi.scaled(-(r + 1))):
        r += 1
    return r


def chevalley_basis_check() -> dict:
    """Check the Chevalley basis axioms for H_gamma, H_delta and the 12 E_phi.

    Axiom (b) is checked as [H_a, E_phi] = <phi, a_v> E_phi.  Axiom (c) writes
    [E_phi, E_-phi] in terms of H_gamma, H_delta using the coroot coordinates
    of phi.  Axiom (e) checks |c| = r + 1 and records the sign.
    """
    e = {lab: E_root(lab) for lab in ALL_LABELS}
    hg, hd = H_gamma(), H_delta()
    failures = []
    report: dict = {"failures": failures}

    report["a"] = is_zero_matrix(bracket(hg, hd))
    if not report["a"]:
        failures.append("(a) [H_gamma, H_delta] != 0")

    b_ok = True
    for lab in ALL_LABELS:
        phi = lab.root
        for name, h, simple in (("gamma", hg, Root(0, 1)), ("delta", hd, Root(1, 0))):
            want = pairing(phi, coroot_of(simple))
            got = scalar_multiple(bracket(h, e[lab]), e[lab])
            if got != want:
                b_ok = False
                failures.append(f"(b) [H_{name}, E_{lab}] = {got} E, expected {want}")
    report["b"] = b_ok

    c_ok = True
    c_rows = []
    for lab in ALL_LABELS:
        cv = coroot_of(lab.root)
        lhs = bracket(e[lab], e[lab.mirror()])
        rhs = matadd(matscale(cv.c_gamma, hg), matscale(cv.c_delta, hd))
        ok = lhs == rhs
        c_rows.append({"phi": str(lab), "H_gamma": cv.c_gamma, "H_delta": cv.c_delta, "ok": ok})
        if not ok:
            c_ok = False
            failures.append(f"(c) [E_{lab}, E_{lab.mirror()}] != {cv.c_gamma} H_gamma + {cv.c_delta} H_delta")
    report["c"] = c_ok
    report["c_detail"] = c_rows

    d_ok = True
    e_ok = True
    signs = []
    for l1 in ALL_LABELS:
        for l2 in ALL_LABELS:
            s = l1.root + l2.root
            if s == Root(0, 0) or l1 == l2:
                continue
            br = bracket(e[l1], e[l2])
            if not is_root(s):
                if not is_zero_matrix(br):
                    d_ok = False
                    failures.append(f"(d) [E_{l1}, E_{l2}] != 0")
                continue
            r = _string_length_below(l1.root, l2.root)
            c = scalar_multiple(br, e[LABEL_OF_ROOT[s]])
            if c is None or abs(c) != r + 1:
                e_ok = False
                failures.append(f"(e) [E_{l1}, E_{l2}] = {c} E_{LABEL_OF_ROOT[s]}, expected +-{r + 1}")
            else:
                signs.append({"phi": str(l1), "psi": str(l2), "constant": int(c)})
    report["d"] = d_ok
    report["e"] = e_ok
    report["e_signs"] = signs
    report["literal_readings"] = _literal_readings(e, hg, hd)
    return report


def _literal_readings(e, hg, hd) -> dict:
    """Alternative readings of (b) and (c), reported for comparison only.

    b_literal pairs the simple root against the coroot of phi.
    c_root_coefficients uses the root coordinates of phi instead of its coroot,
    and c_swapped exchanges the two.  Each list holds the labels that fail.
    """
    b_fail = []
    for lab in ALL_LABELS:
        for name, h, simple in (("gamma", hg, Root(0, 1)), ("delta", hd, Root(1, 0))):
            want = pairing(simple, coroot_of(lab.root))
            if scalar_multiple(bracket(h, e[lab]), e[lab]) != want:
                b_fail.append(f"{name}/{lab}")
    c_root, c_swap = [], []
    for lab in ALL_LABELS:
        lhs = bracket(e[lab], e[lab.mirror()])
        m, n = lab.root.m, lab.root.n
        if lhs != matadd(matscale(n, hg), matscale(m, hd)):
            c_root.append(str(lab))
        if lhs != matadd(matscale(m, hg), matscale(n, hd)):
            c_swap.append(str(lab))
    return {"b_literal": b_fail, "c_root_coefficients": c_root, "c_swapped": c_swap}


def nilpotency_report(basis: DerivationBasis | None = None) -> list[dict]:
    """Per label: is a derivation, E^2 = 0, ad(E)^3 = 0, smallest vanishing powers."""
    basis = basis or derivation_nullspace()
    rows = []
    for lab in ALL_LABELS:
        m = E_root(lab)
        ad = ad_matrix(m, basis)
        ad3 = matmul(matmul(ad, ad), ad)
        rows.append({
            "label": str(lab),
            "derivation": is_derivation(m),
            "square_zero": is_zero_matrix(matmul(m, m)),
            "ad_cube_zero": is_zero_matrix(ad3),
            "nilpotency_index": nilpotency_index(m),
            "ad_nilpotency_index": nilpotency_index(ad, limit=15),
        })
    return rows
