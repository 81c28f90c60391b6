"""Example algebras.

Weight coordinates are chosen so that 2-D diagrams come out on a small
integer grid; any linear change of coordinates leaves every predicate of the
toolkit unchanged.
"""
from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .algebra import NON_ARCHIMEDEAN, FieldComponent, GradedLieAlgebra
from .errors import InvalidInput

R = FieldComponent("R")


def _qp(p):
    return FieldComponent(f"Q{p}", NON_ARCHIMEDEAN, p)


def elementary(n, i, j):
    """E_ij as an n x n matrix, 1-indexed."""
    m = la.Matrix(n, n)
    m.rows[i - 1][j - 1] = Fraction(1)
    return m


def commutator(a, b):
    return a @ b - b @ a


def from_matrices(name, weight_dim, a_rank, basis, field=R, ignore=()):
    """Structure constants of a matrix Lie algebra.

    basis: list of (name, matrix, weight).  Entries listed in ``ignore``
    (1-indexed positions) are set to zero before decoding, which realizes a
    quotient by the span of those elementary matrices.
    """
    mats = [m for _, m, _ in basis]
    n = mats[0].nrows
    flat = la.Matrix.from_columns([tuple(m.entries) for m in mats], n * n)
    brackets = {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            c = commutator(mats[a], mats[b])
            for (i, j) in ignore:
                c.rows[i - 1][j - 1] = Fraction(0)
            if c.is_zero():
                continue
            coords = la.solve(flat, c.entries)
            if coords is None:
                raise InvalidInput(f"{name}: bracket leaves the span of the basis")
            brackets[(a, b)] = {k: x for k, x in enumerate(coords) if x != 0}
    return GradedLieAlgebra.from_names(
        name, weight_dim, a_rank, [field],
        [(nm, field.id, w) for nm, _, w in basis],
        {(basis[a][0], basis[b][0]): {basis[k][0]: x for k, x in t.items()}
         for (a, b), t in brackets.items()})


def abelian(name, weights, fields, a_rank, names=None):
    """Abelian algebra, one basis element per (field id, weight)."""
    names = names or [f"x{i + 1}" for i in range(len(weights))]
    wd = len(weights[0][1])
    return GradedLieAlgebra.from_names(
        name, wd, a_rank, fields, [(nm, f, w) for nm, (f, w) in zip(names, weights)], {})


def sol(lam=1, name=None):
    lam = la.frac(lam)
    if lam <= 0:
        raise InvalidInput("the SOL parameter must be positive")
    return abelian(name or f"sol-lambda:{lam}", [("R", (1,)), ("R", (-lam,))], [R], 1,
                   names=["x", "y"])


def sol_real_padic(p=2):
    return abelian(f"sol-real-padic:{p}", [("R", (1,)), (f"Q{p}", (-1,))], [R, _qp(p)], 1,
                   names=["x", "y"])


def sol_padic(p=2, q=3):
    fields = [_qp(p)] if p == q else [_qp(p), _qp(q)]
    return abelian(f"sol-padic:{p},{q}", [(f"Q{p}", (1,)), (f"Q{q}", (-1,))], fields, 1,
                   names=["x", "y"])


def higher_sol():
    return abelian("higher-sol", [("R", (-1, -1)), ("R", (0, 1)), ("R", (1, 0))], [R], 2,
                   names=["1", "2", "3"])


def heisenberg():
    return GradedLieAlgebra.from_names(
        "heisenberg", 1, 1, [R],
        [("X", "R", (1,)), ("Y", "R", (1,)), ("Z", "R", (2,))],
        {("X", "Y"): {"Z": 1}})


def filiform4():
    return GradedLieAlgebra.from_names(
        "filiform-4", 2, 2, [R],
        [("e1", "R", (1, 0)), ("e2", "R", (0, 1)), ("e3", "R", (1, 1)), ("e4", "R", (2, 1))],
        {("e1", "e2"): {"e3": 1}, ("e1", "e3"): {"e4": 1}})


# e_i - e_j in coordinates where w(12), w(23), w(34) sit at the diagram positions
_A4_E = {1: (Fraction(0), Fraction(0)), 2: (Fraction(2), Fraction(1)),
         3: (Fraction(2), Fraction(-1)), 4: (Fraction(0), Fraction(0))}


def _a4_weight(i, j):
    return tuple(a - b for a, b in zip(_A4_E[i], _A4_E[j]))


A4_ENTRIES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def abels_a4():
    return from_matrices("abels-a4", 2, 2,
                         [(f"{i}{j}", elementary(4, i, j), _a4_weight(i, j))
                          for i, j in A4_ENTRIES])


def abels_a4_bar():
    """The quotient of the A4 algebra by its center (spanned by 14)."""
    return from_matrices("abels-a4-bar", 2, 2,
                         [(f"{i}{j}", elementary(4, i, j), _a4_weight(i, j))
                          for i, j in A4_ENTRIES if (i, j) != (1, 4)],
                         ignore=[(1, 4)])


def abels_2():
    a = {1: (-2, -1), 2: (0, 2), 3: (2, -1)}
    s = lambda i, j: tuple(x + y for x, y in zip(a[i], a[j]))
    z = (0, 0)
    return GradedLieAlgebra.from_names(
        "abels-2", 2, 2, [R],
        [("X1", "R", a[1]), ("X2", "R", a[2]), ("X3", "R", a[3]),
         ("Y12", "R", s(1, 2)), ("Y23", "R", s(2, 3)), ("Y31", "R", s(3, 1)),
         ("Z1", "R", z), ("Z2", "R", z)],
        {("X1", "X2"): {"Y12": 1}, ("X2", "X3"): {"Y23": 1}, ("X3", "X1"): {"Y31": 1},
         ("X1", "Y23"): {"Z1": 1}, ("X2", "Y31"): {"Z2": 1},
         ("X3", "Y12"): {"Z1": -1, "Z2": -1}})


# sl3 acting on a module V, restricted to the lower unipotent part

_L = {1: (1, 1), 2: (-1, 1), 3: (0, -2)}


def _lsum(*terms):
    out = (0, 0)
    for c, i in terms:
        out = (out[0] + c * _L[i][0], out[1] + c * _L[i][1])
    return out


_NMINUS = [("n21", (2, 1)), ("n31", (3, 1)), ("n32", (3, 2))]


def _semidirect(name, vbasis, action):
    """V x| n^-, V abelian.  vbasis: list of (name, weight); action(E) -> matrix on V."""
    basis = [(nm, "R", _lsum((1, i), (-1, j))) for nm, (i, j) in _NMINUS]
    basis += [(nm, "R", w) for nm, w in vbasis]
    brackets = {}
    mats = {nm: elementary(3, i, j) for nm, (i, j) in _NMINUS}
    names = [nm for nm, _ in _NMINUS]
    for a in range(3):
        for b in range(a + 1, 3):
            c = commutator(mats[names[a]], mats[names[b]])
            terms = {}
            for nm, (i, j) in _NMINUS:
                x = c.rows[i - 1][j - 1]
                if x:
                    terms[nm] = x
            if terms:
                brackets[(names[a], names[b])] = terms
    vnames = [nm for nm, _ in vbasis]
    for nm in names:
        rho = action(mats[nm])
        for col, v in enumerate(vnames):
            terms = {vnames[r]: rho.rows[r][col] for r in range(len(vnames)) if rho.rows[r][col]}
            if terms:
                brackets[(nm, v)] = terms
    return GradedLieAlgebra.from_names(name, 2, 2, [R], basis, brackets)


def sl3_v10():
    return _semidirect("sl3-v10", [(f"v{i}", _L[i]) for i in (1, 2, 3)], lambda e: e)


_SYM_PAIRS = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]


def _sym2_action(e):
    pos = {p: r for r, p in enumerate(_SYM_PAIRS)}
    m = la.Matrix(6, 6)
    for col, (i, j) in enumerate(_SYM_PAIRS):
        # E(v_i v_j) = (E v_i) v_j + v_i (E v_j)
        for a in range(1, 4):
            x = e.rows[a - 1][i - 1]
            if x:
                m.rows[pos[tuple(sorted((a, j)))]][col] += x
            y = e.rows[a - 1][j - 1]
            if y:
                m.rows[pos[tuple(sorted((i, a)))]][col] += y
    return m


def sl3_v20():
    return _semidirect("sl3-v20",
                       [(f"s{i}{j}", _lsum((1, i), (1, j))) for i, j in _SYM_PAIRS],
                       _sym2_action)


def _adjoint_basis():
    basis = []
    for i in range(1, 4):
        for j in range(1, 4):
            if i != j:
                basis.append((f"a{i}{j}", elementary(3, i, j), _lsum((1, i), (-1, j))))
    h1 = elementary(3, 1, 1) - elementary(3, 2, 2)
    h2 = elementary(3, 2, 2) - elementary(3, 3, 3)
    basis += [("h1", h1, (0, 0)), ("h2", h2, (0, 0))]
    return basis


def _adjoint_action(e):
    basis = _adjoint_basis()
    flat = la.Matrix.from_columns([tuple(m.entries) for _, m, _ in basis], 9)
    cols = [la.solve(flat, commutator(e, m).entries) for _, m, _ in basis]
    return la.Matrix.from_columns(cols, len(basis))


def sl3_v11():
    return _semidirect("sl3-v11", [(nm, w) for nm, _, w in _adjoint_basis()], _adjoint_action)


# 13-dimensional triangulable example: upper triangular 6x6 pattern modulo 16, 26

_E13 = {1: (0, 0), 2: (0, 0), 3: (1, 0), 4: (0, 1), 5: (0, 0), 6: (0, 0)}
_13_ENTRIES = [(1, 2), (2, 5), (5, 6), (1, 3), (1, 4), (1, 5), (3, 4), (3, 5), (3, 6),
               (4, 5), (4, 6)]
_E_ENTRIES = [(1, 3), (1, 4), (1, 5), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)]


def _w13(i, j):
    return tuple(a - b for a, b in zip(_E13[i], _E13[j]))


def example_13dim():
    basis = [("33", elementary(6, 3, 3), (0, 0)), ("44", elementary(6, 4, 4), (0, 0))]
    basis += [(f"{i}{j}", elementary(6, i, j), _w13(i, j)) for i, j in _13_ENTRIES]
    return from_matrices("example-13dim", 2, 2, basis, ignore=[(1, 6), (2, 6)])


def e_13dim():
    """Exponential radical of the 13-dimensional example."""
    basis = [(f"{i}{j}", elementary(6, i, j), _w13(i, j)) for i, j in _E_ENTRIES]
    return from_matrices("e-13dim", 2, 2, basis, ignore=[(1, 6), (2, 6)])


CORPUS = {
    "sol-1-1": lambda: sol(1, name="sol-1-1"),
    "sol-lambda": sol,
    "sol-real-padic": sol_real_padic,
    "sol-padic": sol_padic,
    "higher-sol": higher_sol,
    "heisenberg": heisenberg,
    "filiform-4": filiform4,
    "abels-a4": abels_a4,
    "abels-a4-bar": abels_a4_bar,
    "abels-2": abels_2,
    "sl3-v10": sl3_v10,
    "sl3-v20": sl3_v20,
    "sl3-v11": sl3_v11,
    "example-13dim": example_13dim,
    "e-13dim": e_13dim,
}

DESCRIPTIONS = {
    "sol-1-1": "abelian plane with weights 1 and -1 over one real field",
    "sol-lambda": "abelian plane with weights 1 and -lambda (parametric, sol-lambda:P/Q)",
    "sol-real-padic": "SOL type over R x Q_p (parametric, sol-real-padic:P)",
    "sol-padic": "SOL type over Q_p x Q_q (parametric, sol-padic:P,Q)",
    "higher-sol": "abelian 3-space with weights summing to zero",
    "heisenberg": "3-dim Heisenberg algebra graded by 1, 1, 2",
    "filiform-4": "4-dim filiform algebra, 3-step nilpotent",
    "abels-a4": "unipotent part of Abels' group A4",
    "abels-a4-bar": "A4 unipotent part modulo its center",
    "abels-2": "Abels' second group, 8-dim, 2-dim degree zero",
    "sl3-v10": "standard sl3-module extended by the lower unipotent part",
    "sl3-v20": "symmetric square of the standard module, same construction",
    "sl3-v11": "adjoint sl3-module, same construction",
    "example-13dim": "13-dim triangulable algebra with non-split radical",
    "e-13dim": "exponential radical of example-13dim",
}


def load(spec: str) -> GradedLieAlgebra:
    """Corpus algebra from a name, optionally with parameters after a colon."""
    name, _, params = spec.partition(":")
    if name not in CORPUS:
        raise KeyError(f"unknown example {name!r}")
    if not params:
        return CORPUS[name]()
    if name == "sol-lambda":
        return sol(Fraction(params))
    if name == "sol-real-padic":
        return sol_real_padic(int(params))
    if name == "sol-padic":
        p, q = (int(x) for x in params.split(","))
        return sol_padic(p, q)
    raise KeyError(f"example {name!r} takes no parameters")


def names():
    return list(CORPUS)


# matrix realizations, used to cross-check the group law

def matrix_realization(name):
    """List of basis matrices (strictly upper triangular) for a nilpotent corpus algebra."""
    if name == "heisenberg":
        return [elementary(3, 1, 2), elementary(3, 2, 3), elementary(3, 1, 3)]
    if name == "filiform-4":
        e1 = elementary(4, 1, 2) + elementary(4, 2, 3) + elementary(4, 3, 4)
        return [e1, elementary(4, 3, 4), elementary(4, 2, 4), elementary(4, 1, 4)]
    if name == "abels-a4":
        return [elementary(4, i, j) for i, j in A4_ENTRIES]
    raise KeyError(name)
