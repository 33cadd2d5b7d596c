"""The 13 inequality-constrained CEC 2006 test functions used by the harness.

All constraints follow the g_j(x) <= 0 convention. Best-known objective
values are embedded at the published 10-decimal precision together with the
published best-known points, which the registry self-check verifies at load.
A few objectives are undefined on parts of the closed box (g02 at the origin,
g08 on the x1 = 0 face); those return a large penalty value instead of NaN so
the functions stay pure and total on the box.
"""

from __future__ import annotations

import numpy as np

from .core import ProblemSpec, register

_BAD = 1e10


def _g01_obj(x):
    return float(5 * np.sum(x[:4]) - 5 * np.sum(x[:4] ** 2) - np.sum(x[4:13]))


def _g01_con(x):
    return np.array([
        2 * x[0] + 2 * x[1] + x[9] + x[10] - 10,
        2 * x[0] + 2 * x[2] + x[9] + x[11] - 10,
        2 * x[1] + 2 * x[2] + x[10] + x[11] - 10,
        -8 * x[0] + x[9],
        -8 * x[1] + x[10],
        -8 * x[2] + x[11],
        -2 * x[3] - x[4] + x[9],
        -2 * x[5] - x[6] + x[10],
        -2 * x[7] - x[8] + x[11],
    ])


register(ProblemSpec(
    name="g01", n=13,
    lower=np.array([0.0] * 9 + [0.0, 0.0, 0.0] + [0.0]),
    upper=np.array([1.0] * 9 + [100.0, 100.0, 100.0] + [1.0]),
    m=9, objective=_g01_obj, constraints=_g01_con,
    f_star=-15.0,
    x_star=np.array([1.0, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1]),
    active_at_optimum=6,
))


def _g02_obj(x):
    n = len(x)
    sum_ix2 = float(np.sum(np.arange(1, n + 1) * x ** 2))
    if sum_ix2 <= 0:
        return _BAD
    sum_cos4 = np.sum(np.cos(x) ** 4)
    prod_cos2 = np.prod(np.cos(x) ** 2)
    return float(-abs(sum_cos4 - 2 * prod_cos2) / np.sqrt(sum_ix2))


def _g02_con(x):
    return np.array([0.75 - np.prod(x), np.sum(x) - 7.5 * len(x)])


register(ProblemSpec(
    name="g02", n=20,
    lower=np.zeros(20), upper=np.full(20, 10.0),
    m=2, objective=_g02_obj, constraints=_g02_con,
    f_star=-0.8036191042,
    x_star=np.array([
        3.16246061572185, 3.12833142812967, 3.09479212988791, 3.06145059523469,
        3.02792915885555, 2.99382606701730, 2.95866871765285, 2.92184227312450,
        0.49482511456933, 0.48835711005490, 0.48231642711865, 0.47664475092742,
        0.47129550835493, 0.46623099264167, 0.46142004984199, 0.45683664767217,
        0.45245876903267, 0.44826762241853, 0.44424700958760, 0.44038285956317]),
    active_at_optimum=1,
))


def _g04_obj(x):
    return float(5.3578547 * x[2] ** 2 + 0.8356891 * x[0] * x[4]
                 + 37.293239 * x[0] - 40792.141)


def _g04_con(x):
    u = 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4]
    v = 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] ** 2
    w = 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3]
    return np.array([u - 92, -u, v - 110, 90 - v, w - 25, 20 - w])


register(ProblemSpec(
    name="g04", n=5,
    lower=np.array([78.0, 33.0, 27.0, 27.0, 27.0]),
    upper=np.array([102.0, 45.0, 45.0, 45.0, 45.0]),
    m=6, objective=_g04_obj, constraints=_g04_con,
    f_star=-30665.5386717834,
    x_star=np.array([78.0, 33.0, 29.9952560256815985, 45.0, 36.7758129057882073]),
    active_at_optimum=2,
))


def _g06_obj(x):
    return float((x[0] - 10) ** 3 + (x[1] - 20) ** 3)


def _g06_con(x):
    return np.array([
        -(x[0] - 5) ** 2 - (x[1] - 5) ** 2 + 100,
        (x[0] - 6) ** 2 + (x[1] - 5) ** 2 - 82.81,
    ])


register(ProblemSpec(
    name="g06", n=2,
    lower=np.array([13.0, 0.0]), upper=np.array([100.0, 100.0]),
    m=2, objective=_g06_obj, constraints=_g06_con,
    f_star=-6961.8138755802,
    x_star=np.array([14.09500000000000064, 0.8429607892154795668]),
    active_at_optimum=2,
))


def _g07_obj(x):
    return float(
        x[0] ** 2 + x[1] ** 2 + x[0] * x[1] - 14 * x[0] - 16 * x[1]
        + (x[2] - 10) ** 2 + 4 * (x[3] - 5) ** 2 + (x[4] - 3) ** 2
        + 2 * (x[5] - 1) ** 2 + 5 * x[6] ** 2 + 7 * (x[7] - 11) ** 2
        + 2 * (x[8] - 10) ** 2 + (x[9] - 7) ** 2 + 45)


def _g07_con(x):
    return np.array([
        -105 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7],
        10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7],
        -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12,
        3 * (x[0] - 2) ** 2 + 4 * (x[1] - 3) ** 2 + 2 * x[2] ** 2 - 7 * x[3] - 120,
        5 * x[0] ** 2 + 8 * x[1] + (x[2] - 6) ** 2 - 2 * x[3] - 40,
        x[0] ** 2 + 2 * (x[1] - 2) ** 2 - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5],
        0.5 * (x[0] - 8) ** 2 + 2 * (x[1] - 4) ** 2 + 3 * x[4] ** 2 - x[5] - 30,
        -3 * x[0] + 6 * x[1] + 12 * (x[8] - 8) ** 2 - 7 * x[9],
    ])


register(ProblemSpec(
    name="g07", n=10,
    lower=np.full(10, -10.0), upper=np.full(10, 10.0),
    m=8, objective=_g07_obj, constraints=_g07_con,
    f_star=24.3062090681,
    x_star=np.array([
        2.17199634142692, 2.3636830416034, 8.77392573913157, 5.09598443745173,
        0.990654756560493, 1.43057392853463, 1.32164415364306, 9.82872576524495,
        8.2800915887356, 8.3759266477347]),
    active_at_optimum=6,
))


def _g08_obj(x):
    denom = x[0] ** 3 * (x[0] + x[1])
    if denom <= 0:
        return _BAD
    return float(-(np.sin(2 * np.pi * x[0]) ** 3 * np.sin(2 * np.pi * x[1])) / denom)


def _g08_con(x):
    return np.array([x[0] ** 2 - x[1] + 1, 1 - x[0] + (x[1] - 4) ** 2])


register(ProblemSpec(
    name="g08", n=2,
    lower=np.zeros(2), upper=np.full(2, 10.0),
    m=2, objective=_g08_obj, constraints=_g08_con,
    f_star=-0.0958250415,
    x_star=np.array([1.22797135260752599, 4.24537336612274885]),
    active_at_optimum=0,
))


def _g09_obj(x):
    return float(
        (x[0] - 10) ** 2 + 5 * (x[1] - 12) ** 2 + x[2] ** 4 + 3 * (x[3] - 11) ** 2
        + 10 * x[4] ** 6 + 7 * x[5] ** 2 + x[6] ** 4 - 4 * x[5] * x[6]
        - 10 * x[5] - 8 * x[6])


def _g09_con(x):
    return np.array([
        2 * x[0] ** 2 + 3 * x[1] ** 4 + x[2] + 4 * x[3] ** 2 + 5 * x[4] - 127,
        7 * x[0] + 3 * x[1] + 10 * x[2] ** 2 + x[3] - x[4] - 282,
        23 * x[0] + x[1] ** 2 + 6 * x[5] ** 2 - 8 * x[6] - 196,
        4 * x[0] ** 2 + x[1] ** 2 - 3 * x[0] * x[1] + 2 * x[2] ** 2 + 5 * x[5] - 11 * x[6],
    ])


register(ProblemSpec(
    name="g09", n=7,
    lower=np.full(7, -10.0), upper=np.full(7, 10.0),
    m=4, objective=_g09_obj, constraints=_g09_con,
    f_star=680.6300573745,
    x_star=np.array([
        2.33049935147405174, 1.95137236847114592, -0.477541399510615805,
        4.36572624923625874, -0.624486959100388983, 1.03813099410962173,
        1.5942266780671519]),
    active_at_optimum=2,
))


def _g10_obj(x):
    return float(x[0] + x[1] + x[2])


def _g10_con(x):
    return np.array([
        -1 + 0.0025 * (x[3] + x[5]),
        -1 + 0.0025 * (x[4] + x[6] - x[3]),
        -1 + 0.01 * (x[7] - x[4]),
        -x[0] * x[5] + 833.33252 * x[3] + 100 * x[0] - 83333.333,
        -x[1] * x[6] + 1250 * x[4] + x[1] * x[3] - 1250 * x[3],
        -x[2] * x[7] + 1250000 + x[2] * x[4] - 2500 * x[4],
    ])


register(ProblemSpec(
    name="g10", n=8,
    lower=np.array([100.0, 1000, 1000, 10, 10, 10, 10, 10]),
    upper=np.array([10000.0, 10000, 10000, 1000, 1000, 1000, 1000, 1000]),
    m=6, objective=_g10_obj, constraints=_g10_con,
    f_star=7049.2480205286,
    x_star=np.array([
        579.306685017979589, 1359.97067807935605, 5109.97065743133317,
        182.01769963061534, 295.601173702746792, 217.982300369384632,
        286.41652592786852, 395.60117370274673]),
    active_at_optimum=6,
))


def _g12_obj(x):
    return float(-(100 - (x[0] - 5) ** 2 - (x[1] - 5) ** 2 - (x[2] - 5) ** 2) / 100)


_G12_GRID = np.array(
    [(p, q, r) for p in range(1, 10) for q in range(1, 10) for r in range(1, 10)],
    dtype=float)


def _g12_con(x):
    # feasible iff x lands inside at least one of the 9^3 disjoint spheres of
    # radius 0.25 centered on the integer grid
    d = np.sum((x[None, :] - _G12_GRID) ** 2, axis=1) - 0.0625
    return np.array([float(d.min())])


register(ProblemSpec(
    name="g12", n=3,
    lower=np.zeros(3), upper=np.full(3, 10.0),
    m=1, objective=_g12_obj, constraints=_g12_con,
    f_star=-1.0,
    x_star=np.array([5.0, 5.0, 5.0]),
    active_at_optimum=0,
))


def _g16_intermediate(x):
    y = np.zeros(18)
    c = np.zeros(18)
    y[1] = x[1] + x[2] + 41.6
    c[1] = 0.024 * x[3] - 4.62
    y[2] = 12.5 / c[1] + 12.0 if c[1] != 0 else _BAD
    c[2] = 0.0003535 * x[0] ** 2 + 0.5311 * x[0] + 0.08705 * y[2] * x[0]
    c[3] = 0.052 * x[0] + 78.0 + 0.002377 * y[2] * x[0]
    y[3] = c[2] / c[3]
    y[4] = 19.0 * y[3]
    c[4] = (0.04782 * (x[0] - y[3]) + 0.1956 * (x[0] - y[3]) ** 2 / x[1]
            + 0.6376 * y[4] + 1.594 * y[3])
    c[5] = 100.0 * x[1]
    c[6] = x[0] - y[3] - y[4]
    c[7] = 0.950 - c[4] / c[5]
    y[5] = c[6] * c[7]
    y[6] = x[0] - y[5] - y[4] - y[3]
    c[8] = (y[5] + y[4]) * 0.995
    y[7] = c[8] / y[1]
    y[8] = c[8] / 3798.0
    c[9] = y[7] - 0.0663 * y[7] / y[8] - 0.3153
    y[9] = 96.82 / c[9] + 0.321 * y[1] if c[9] != 0 else _BAD
    y[10] = 1.29 * y[5] + 1.258 * y[4] + 2.29 * y[3] + 1.71 * y[6]
    y[11] = 1.71 * x[0] - 0.452 * y[4] + 0.580 * y[3]
    c[10] = 12.3 / 752.3
    c[11] = 1.75 * y[2] * 0.995 * x[0]
    c[12] = 0.995 * y[10] + 1998.0
    y[12] = c[10] * x[0] + c[11] / c[12]
    y[13] = c[12] - 1.75 * y[2]
    y[14] = 3623.0 + 64.4 * x[1] + 58.4 * x[2] + 146312.0 / (y[9] + x[4])
    c[13] = 0.995 * y[10] + 60.8 * x[1] + 48.0 * x[3] - 0.1121 * y[14] - 5095.0
    y[15] = y[13] / c[13] if c[13] != 0 else _BAD
    y[16] = 148000.0 - 331000.0 * y[15] + 40.0 * y[13] - 61.0 * y[15] * y[13]
    c[14] = 2324.0 * y[10] - 28740000.0 * y[2]
    y[17] = 14130000.0 - 1328.0 * y[10] - 531.0 * y[11] + c[14] / c[12]
    c[15] = y[13] / y[15] - y[13] / 0.52 if y[15] != 0 else _BAD
    c[16] = 1.104 - 0.72 * y[15]
    c[17] = y[9] + x[4]
    return y, c


def _g16_obj(x):
    with np.errstate(all="ignore"):
        y, c = _g16_intermediate(x)
        f = (0.000117 * y[14] + 0.1365 + 0.00002358 * y[13] + 0.000001502 * y[16]
             + 0.0321 * y[12] + 0.004324 * y[5] + 0.0001 * c[15] / c[16]
             + 37.48 * y[2] / c[12] - 0.0000005843 * y[17])
    return float(f) if np.isfinite(f) else _BAD


def _g16_con(x):
    with np.errstate(all="ignore"):
        y, c = _g16_intermediate(x)
        g = np.array([
            0.28 / 0.72 * y[5] - y[4],
            x[2] - 1.5 * x[1],
            3496.0 * y[2] / c[12] - 21.0,
            110.6 + y[1] - 62212.0 / c[17] if c[17] != 0 else _BAD,
            213.1 - y[1], y[1] - 405.23,
            17.505 - y[2], y[2] - 1053.6667,
            11.275 - y[3], y[3] - 35.03,
            214.228 - y[4], y[4] - 665.585,
            7.458 - y[5], y[5] - 584.463,
            0.961 - y[6], y[6] - 265.916,
            1.612 - y[7], y[7] - 7.046,
            0.146 - y[8], y[8] - 0.222,
            107.99 - y[9], y[9] - 273.366,
            922.693 - y[10], y[10] - 1286.105,
            926.832 - y[11], y[11] - 1444.046,
            18.766 - y[12], y[12] - 537.141,
            1072.163 - y[13], y[13] - 3247.039,
            8961.448 - y[14], y[14] - 26844.086,
            0.063 - y[15], y[15] - 0.386,
            71084.33 - y[16], -140000.0 + y[16],
            2802713.0 - y[17], y[17] - 12146108.0,
        ])
    return np.where(np.isfinite(g), g, _BAD)


register(ProblemSpec(
    name="g16", n=5,
    lower=np.array([704.4148, 68.6, 0.0, 193.0, 25.0]),
    upper=np.array([906.3855, 288.88, 134.75, 287.0966, 84.1988]),
    m=38, objective=_g16_obj, constraints=_g16_con,
    f_star=-1.9051552586,
    x_star=np.array([
        705.174537070090537, 68.5999999999999943, 102.899999999999991,
        282.324931593660324, 37.5841164258054832]),
    active_at_optimum=4,
))


def _g18_obj(x):
    return float(-0.5 * (x[0] * x[3] - x[1] * x[2] + x[2] * x[8]
                         - x[4] * x[8] + x[4] * x[7] - x[5] * x[6]))


def _g18_con(x):
    return np.array([
        x[2] ** 2 + x[3] ** 2 - 1,
        x[8] ** 2 - 1,
        x[4] ** 2 + x[5] ** 2 - 1,
        x[0] ** 2 + (x[1] - x[8]) ** 2 - 1,
        (x[0] - x[4]) ** 2 + (x[1] - x[5]) ** 2 - 1,
        (x[0] - x[6]) ** 2 + (x[1] - x[7]) ** 2 - 1,
        (x[2] - x[4]) ** 2 + (x[3] - x[5]) ** 2 - 1,
        (x[2] - x[6]) ** 2 + (x[3] - x[7]) ** 2 - 1,
        x[6] ** 2 + (x[7] - x[8]) ** 2 - 1,
        x[1] * x[2] - x[0] * x[3],
        -x[2] * x[8],
        x[4] * x[8],
        x[5] * x[6] - x[4] * x[7],
    ])


register(ProblemSpec(
    name="g18", n=9,
    lower=np.array([-10.0] * 8 + [0.0]),
    upper=np.array([10.0] * 8 + [20.0]),
    m=13, objective=_g18_obj, constraints=_g18_con,
    f_star=-0.8660254038,
    x_star=np.array([
        -0.657776192427943163, -0.153418773482438542, 0.323413871675240938,
        -0.946257611651304398, -0.657776194376798906, -0.753213434632691414,
        0.323413874123576972, -0.346462947962331735, 0.59979466285217542]),
    active_at_optimum=6,
))


_G19_E = np.array([-15.0, -27, -36, -18, -12])
_G19_C = np.array([
    [30.0, -20, -10, 32, -10],
    [-20, 39, -6, -31, 32],
    [-10, -6, 10, -6, -10],
    [32, -31, -6, 39, -20],
    [-10, 32, -10, -20, 30]])
_G19_D = np.array([4.0, 8, 10, 6, 2])
_G19_A = np.array([
    [-16.0, 2, 0, 1, 0],
    [0, -2, 0, 0.4, 2],
    [-3.5, 0, 2, 0, 0],
    [0, -2, 0, -4, -1],
    [0, -9, -2, 1, -2.8],
    [2, 0, -4, 0, 0],
    [-1, -1, -1, -1, -1],
    [-1, -2, -3, -2, -1],
    [1, 2, 3, 4, 5],
    [1, 1, 1, 1, 1]])
_G19_B = np.array([-40.0, -2, -0.25, -4, -4, -1, -40, -60, 5, 1])


def _g19_obj(x):
    u = x[10:15]
    return float(u @ _G19_C @ u + 2 * np.sum(_G19_D * u ** 3) - np.sum(_G19_B * x[:10]))


def _g19_con(x):
    u = x[10:15]
    return (-2 * (_G19_C.T @ u) - 3 * _G19_D * u ** 2 - _G19_E + _G19_A.T @ x[:10])


register(ProblemSpec(
    name="g19", n=15,
    lower=np.zeros(15), upper=np.full(15, 10.0),
    m=5, objective=_g19_obj, constraints=_g19_con,
    f_star=32.6555929502,
    x_star=np.array([
        1.66991341326291344e-17, 3.95378229282456509e-16, 3.94599045143233784,
        1.06036597479721211e-16, 3.2831773458454161, 9.99999999999999822,
        1.12829414671605333e-17, 1.2026194599794709e-17, 2.50706276000769697e-15,
        2.24624122987970677e-15, 0.370764847417013987, 0.278456024942955571,
        0.523838487672241171, 0.388620152510322781, 0.298156764974678579]),
    active_at_optimum=0,
))


def _g24_obj(x):
    return float(-x[0] - x[1])


def _g24_con(x):
    return np.array([
        -2 * x[0] ** 4 + 8 * x[0] ** 3 - 8 * x[0] ** 2 + x[1] - 2,
        -4 * x[0] ** 4 + 32 * x[0] ** 3 - 88 * x[0] ** 2 + 96 * x[0] + x[1] - 36,
    ])


register(ProblemSpec(
    name="g24", n=2,
    lower=np.zeros(2), upper=np.array([3.0, 4.0]),
    m=2, objective=_g24_obj, constraints=_g24_con,
    f_star=-5.5080132716,
    x_star=np.array([2.32952019747762, 3.17849307411774]),
    active_at_optimum=2,
))
