"""Standard lattices: ADE root lattices, the hyperbolic plane U, and <n>.

Labels such as ``"A2(-1)^2 + D4(-1)"`` or ``"A1 + <16>"`` are parsed by
:func:`from_label`.
"""

from __future__ import annotations

import re

from . import linalg
from .quadratic import QuadraticLattice, direct_sum, lattice, rescale


def cartan_a(n: int) -> list[list[int]]:
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]


def cartan_d(n: int) -> list[list[int]]:
    if n < 3:
        raise ValueError("D_n needs n >= 3")
    g = cartan_a(n - 1) + [[0] * (n - 1)]
    g = [row + [0] for row in g]
    # extra node attached to node n-3
    g[n - 1][n - 1] = 2
    g[n - 1][n - 3] = g[n - 3][n - 1] = -1
    return g


def cartan_e(n: int) -> list[list[int]]:
    if n not in (6, 7, 8):
        raise ValueError("E_n needs n in {6, 7, 8}")
    g = cartan_a(n - 1) + [[0] * (n - 1)]
    g = [row + [0] for row in g]
    # branch node attached to the third node of the chain
    g[n - 1][n - 1] = 2
    g[n - 1][2] = g[2][n - 1] = -1
    return g


def A(n: int) -> QuadraticLattice:
    return lattice(cartan_a(n), f"A{n}")


def D(n: int) -> QuadraticLattice:
    return lattice(cartan_d(n), f"D{n}")


def E(n: int) -> QuadraticLattice:
    return lattice(cartan_e(n), f"E{n}")


def U() -> QuadraticLattice:
    return lattice([[0, 1], [1, 0]], "U")


def diagonal(*entries: int) -> QuadraticLattice:
    n = len(entries)
    return lattice([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)],
                   " + ".join(f"<{e}>" for e in entries))


_TERM = re.compile(r"^(?:(?P<kind>[ADE])(?P<n>\d+)|(?P<u>U)|<(?P<diag>-?\d+)>)"
                   r"(?:\((?P<scale>-?\d+)\))?(?:\^(?P<power>\d+))?$")


def from_label(label: str) -> QuadraticLattice:
    """Build a lattice from a ``+``-separated label.

    Each summand is ``A<n>``, ``D<n>``, ``E<n>``, ``U`` or ``<m>``, optionally
    followed by a rescaling ``(k)`` and a power ``^p``.
    """
    parts = []
    for raw in label.replace(" ", "").split("+"):
        m = _TERM.match(raw)
        if not m:
            raise ValueError(f"cannot parse lattice term {raw!r}")
        if m["kind"]:
            base = {"A": A, "D": D, "E": E}[m["kind"]](int(m["n"]))
        elif m["u"]:
            base = U()
        else:
            base = diagonal(int(m["diag"]))
        if m["scale"]:
            base = rescale(base, int(m["scale"]))
        for _ in range(int(m["power"] or 1)):
            parts.append(base)
    if not parts:
        raise ValueError("empty lattice label")
    out = direct_sum(*parts) if len(parts) > 1 else parts[0]
    return lattice(out.gram, label)


def negate(Q: QuadraticLattice) -> QuadraticLattice:
    return lattice(linalg.scale(Q.gram, -1), Q.name)
