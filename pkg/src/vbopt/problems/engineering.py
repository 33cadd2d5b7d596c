"""Four classic engineering design benchmarks (continuous formulations).

welded-beam: minimize fabrication cost of a welded steel beam subject to
shear stress, bending stress, buckling load, and deflection limits.

pressure-vessel: minimize material/forming/welding cost of a cylindrical
vessel. The shell and head thickness variables are treated as continuous.
The length bound is wide enough (240) to contain the best-known solution,
which lies above the 200 cap used by some variants.

spring: minimize the weight of a tension/compression coil spring under
surge-frequency, deflection, and shear-stress constraints.

cantilever: minimize the volume of a five-segment stepped cantilever beam
under per-segment bending stress limits, aspect-ratio limits, and a tip
deflection limit, all variables continuous. The deflection constraint uses
the exact integral of the bending moment over each segment. No reference
point is bundled for this problem: published "best" vectors for it come from
mixed-discrete or approximate-deflection variants and do not satisfy the
exact continuous constraints.
"""

from __future__ import annotations

import numpy as np

from .core import ProblemSpec, register


def _welded_obj(x):
    return float(1.10471 * x[0] ** 2 * x[1] + 0.04811 * x[2] * x[3] * (14 + x[1]))


def _welded_con(x):
    p, length, e_mod, g_mod = 6000.0, 14.0, 30e6, 12e6
    tau1 = p / (np.sqrt(2) * x[0] * x[1])
    moment = p * (length + x[1] / 2)
    r = np.sqrt(x[1] ** 2 / 4 + ((x[0] + x[2]) / 2) ** 2)
    j = 2 * (np.sqrt(2) * x[0] * x[1] * (x[1] ** 2 / 12 + ((x[0] + x[2]) / 2) ** 2))
    tau2 = moment * r / j
    tau = np.sqrt(tau1 ** 2 + 2 * tau1 * tau2 * x[1] / (2 * r) + tau2 ** 2)
    sigma = 6 * p * length / (x[3] * x[2] ** 2)
    delta = 4 * p * length ** 3 / (e_mod * x[2] ** 3 * x[3])
    p_crit = (4.013 * e_mod * np.sqrt(x[2] ** 2 * x[3] ** 6 / 36) / length ** 2) \
        * (1 - (x[2] / (2 * length)) * np.sqrt(e_mod / (4 * g_mod)))
    return np.array([
        tau - 13600.0,
        sigma - 30000.0,
        x[0] - x[3],
        0.10471 * x[0] ** 2 + 0.04811 * x[2] * x[3] * (14 + x[1]) - 5,
        0.125 - x[0],
        delta - 0.25,
        p - p_crit,
    ])


register(ProblemSpec(
    name="welded-beam", n=4,
    lower=np.array([0.1, 0.1, 0.1, 0.1]),
    upper=np.array([2.0, 10.0, 10.0, 2.0]),
    m=7, objective=_welded_obj, constraints=_welded_con,
    f_star=1.7248523452630389,
    x_star=np.array([0.205729627974134, 3.470488964774360,
                     9.036623829898325, 0.205729643534243]),
))


def _vessel_obj(x):
    return float(0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] ** 2
                 + 3.1661 * x[0] ** 2 * x[3] + 19.84 * x[0] ** 2 * x[2])


def _vessel_con(x):
    return np.array([
        -x[0] + 0.0193 * x[2],
        -x[1] + 0.00954 * x[2],
        -np.pi * x[2] ** 2 * x[3] - (4.0 / 3.0) * np.pi * x[2] ** 3 + 1296000.0,
        x[3] - 240.0,
    ])


register(ProblemSpec(
    name="pressure-vessel", n=4,
    lower=np.array([0.0625, 0.0625, 10.0, 10.0]),
    upper=np.array([6.1875, 6.1875, 240.0, 240.0]),
    m=4, objective=_vessel_obj, constraints=_vessel_con,
    f_star=5850.383060329163,
    x_star=np.array([0.75, 0.375, 38.8601036269430, 221.3654713560083]),
))


def _spring_obj(x):
    return float((x[2] + 2) * x[1] * x[0] ** 2)


def _spring_con(x):
    d, coil_d, n_coils = x
    return np.array([
        1 - coil_d ** 3 * n_coils / (71785 * d ** 4),
        (4 * coil_d ** 2 - d * coil_d) / (12566 * (coil_d * d ** 3 - d ** 4))
        + 1 / (5108 * d ** 2) - 1,
        1 - 140.45 * d / (coil_d ** 2 * n_coils),
        (d + coil_d) / 1.5 - 1,
    ])


register(ProblemSpec(
    name="spring", n=3,
    lower=np.array([0.05, 0.25, 2.0]),
    upper=np.array([2.0, 1.3, 15.0]),
    m=4, objective=_spring_obj, constraints=_spring_con,
    f_star=0.012665234987294185,
    x_star=np.array([0.051699916331388, 0.356978944672547, 11.273668588601133]),
))


_CANT_ARMS = np.array([500.0, 400.0, 300.0, 200.0, 100.0])
_CANT_ZHI = np.array([500.0, 400.0, 300.0, 200.0, 100.0])
_CANT_ZLO = _CANT_ZHI - 100.0


def _cantilever_obj(x):
    w = x[0::2]
    h = x[1::2]
    return float(100.0 * np.sum(w * h))


def _cantilever_con(x):
    w = x[0::2]
    h = x[1::2]
    load, e_mod = 50000.0, 2e7
    stress = 6 * load * _CANT_ARMS / (w * h ** 2)
    inertia = w * h ** 3 / 12.0
    deflection = (load / (3 * e_mod)) * np.sum((_CANT_ZHI ** 3 - _CANT_ZLO ** 3) / inertia)
    return np.concatenate([
        stress - 14000.0,
        h / w - 20.0,
        [deflection - 2.7],
    ])


register(ProblemSpec(
    name="cantilever", n=10,
    lower=np.array([1.0, 30.0, 1.0, 30.0, 1.0, 30.0, 1.0, 30.0, 1.0, 30.0]),
    upper=np.array([5.0, 65.0, 5.0, 65.0, 5.0, 65.0, 5.0, 65.0, 5.0, 65.0]),
    m=11, objective=_cantilever_obj, constraints=_cantilever_con,
    f_star=63893.490839,
))
