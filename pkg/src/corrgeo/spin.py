"""Spin matrices, Wigner rotation elements and singlet-state joint probabilities.

Everything here works for arbitrary half-integer spin s.  Outcomes are the
dimensionless magnetic quantum numbers m = s, s-1, ..., -s (hbar = 1), listed
in descending order throughout, so index 0 of any matrix axis is m = +s.
"""

import math
from fractions import Fraction

import numpy as np

__all__ = [
    "check_spin",
    "outcomes",
    "spin_matrices",
    "wigner_small_d",
    "wigner_d_matrix",
    "singlet_state",
    "singlet_cell",
    "quantum_correlation_array",
]


def check_spin(s):
    """Validate a spin quantum number and return it as an exact Fraction.

    2s must be a non-negative integer (s = 1/2, 1, 3/2, ...).  Accepts
    ints, floats and Fractions; strings like "3/2" also work.
    """
    s = Fraction(s)
    if s <= 0 or (2 * s).denominator != 1:
        raise ValueError(f"invalid spin {s}: 2s must be a positive integer")
    return s


def outcomes(s):
    """Outcome values m = s, s-1, ..., -s in descending order, as Fractions."""
    s = check_spin(s)
    return [s - k for k in range(int(2 * s) + 1)]


def spin_matrices(s):
    """Return the angular-momentum matrices (S_x, S_y, S_z) for spin s.

    Basis ordered by descending m.  S_z is diagonal with entries m,
    [S_x, S_y] = i S_z, and S_x^2 + S_y^2 + S_z^2 = s(s+1) I.
    """
    s = check_spin(s)
    ms = np.array([float(m) for m in outcomes(s)])
    d = len(ms)
    sf = float(s)
    # raising operator in descending-m order: S_+ |m> = sqrt(s(s+1)-m(m+1)) |m+1>
    sp = np.zeros((d, d), dtype=complex)
    for j in range(1, d):
        m = ms[j]
        sp[j - 1, j] = math.sqrt(sf * (sf + 1) - m * (m + 1))
    sm = sp.conj().T
    sx = (sp + sm) / 2
    sy = (sp - sm) / (2j)
    sz = np.diag(ms).astype(complex)
    return sx, sy, sz


def _fact(n):
    n = int(n)
    if n < 0:
        raise ValueError("negative factorial argument")
    return math.factorial(n)


def wigner_small_d(s, m_row, m_col, beta):
    """Wigner small-d element d^s_{m_row, m_col}(beta).

    Equals the (m_row, m_col) entry of exp(-i beta S_y) in the S_z
    eigenbasis, computed by the standard factorial sum.  The sum formula is
    valid for any real beta; no wrapping is applied (the matrix is
    2pi-periodic for integer s and 4pi-periodic up to sign for half-integer
    s).  The physically meaningful range for an angle between measurement
    directions is [0, pi].
    """
    s = check_spin(s)
    mr = Fraction(m_row)
    mc = Fraction(m_col)
    outs = outcomes(s)
    if mr not in outs or mc not in outs:
        raise ValueError(f"outcomes ({m_row}, {m_col}) not in the spin-{s} list")

    pref = math.sqrt(
        _fact(s + mr) * _fact(s - mr) * _fact(s + mc) * _fact(s - mc)
    )
    c = math.cos(beta / 2.0)
    sn = math.sin(beta / 2.0)
    k_min = int(max(0, mc - mr))
    k_max = int(min(s + mc, s - mr))
    total = 0.0
    for k in range(k_min, k_max + 1):
        denom = (
            _fact(s + mc - k) * _fact(k) * _fact(s - mr - k) * _fact(mr - mc + k)
        )
        total += (-1) ** k * c ** int(2 * s + mc - mr - 2 * k) * sn ** int(
            mr - mc + 2 * k
        ) / denom
    return pref * total


def wigner_d_matrix(s, beta):
    """Full (2s+1) x (2s+1) rotation matrix d^s(beta), rows/cols by descending m."""
    outs = outcomes(s)
    d = len(outs)
    mat = np.empty((d, d))
    for i, mr in enumerate(outs):
        for j, mc in enumerate(outs):
            mat[i, j] = wigner_small_d(s, mr, mc, beta)
    return mat


def singlet_state(s):
    """Total-spin-zero state of two spin-s particles as a (2s+1)^2 vector.

    Component on |m>|{-m}> is (-1)^(s-m) / sqrt(2s+1); all other components
    vanish.  The overall phase is a convention; probabilities do not depend
    on it.  Basis order is |m1>|m2> with both m1 and m2 descending, index
    i1*(2s+1) + i2.
    """
    s = check_spin(s)
    outs = outcomes(s)
    d = len(outs)
    psi = np.zeros(d * d, dtype=complex)
    for i, m in enumerate(outs):
        j = outs.index(-m)
        psi[i * d + j] = (-1) ** int(s - m) / math.sqrt(d)
    return psi


def singlet_cell(s, phi):
    """Joint-outcome probability matrix for measurements at relative angle phi.

    Entry (i, j) is Pr(m1, m2 | phi) for Alice's outcome m1 and Bob's
    outcome m2 (descending order), for two spin-s particles in the singlet
    state measured along directions separated by phi in [0, pi]:

        Pr(m1, m2 | phi) = d^s_{m2, -m1}(phi)^2 / (2s+1).

    Rows and columns each sum to 1/(2s+1), so the cell has uniform marginals.
    """
    s = check_spin(s)
    if not 0.0 <= phi <= math.pi + 1e-12:
        raise ValueError(f"phi={phi} outside [0, pi]")
    outs = outcomes(s)
    d = len(outs)
    dmat = wigner_d_matrix(s, phi)
    cell = np.empty((d, d))
    for i, m1 in enumerate(outs):
        k = outs.index(-m1)
        for j in range(d):
            cell[i, j] = dmat[j, k] ** 2 / d
    return cell


def quantum_correlation_array(s, angles, settings=("a", "b", "c")):
    """Correlation array of singlet cells for a set of measurement settings.

    `angles` maps unordered setting pairs to the angle (radians) between the
    corresponding measurement directions; e.g. {("a","b"): 2*pi/3, ...}.
    Same-setting cells use angle 0.  Returns a CorrelationArray whose cell
    (x, y) is singlet_cell(s, phi_xy).
    """
    from .arrays import CorrelationArray

    s = check_spin(s)
    lookup = {}
    for (x, y), phi in angles.items():
        lookup[(x, y)] = phi
        lookup[(y, x)] = phi
    cells = {}
    for x in settings:
        for y in settings:
            if x == y:
                phi = 0.0
            else:
                try:
                    phi = lookup[(x, y)]
                except KeyError:
                    raise ValueError(f"missing angle for setting pair ({x}, {y})")
            cells[(x, y)] = singlet_cell(s, phi)
    return CorrelationArray(settings=tuple(settings), spin=s, cells=cells)
