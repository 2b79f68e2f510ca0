"""Published reference values for the bundled experiments.

These are the result tables the experiment pipelines reproduce; the CLI
diffs freshly computed reports against them so regressions and platform
drift are visible.  Keys follow the method labels used everywhere else.

Known irreproducible entries, kept verbatim for honest diffing: the
one-step NTDS column of the forced-asymptote experiment for mle, lse and
wnls-2 sits 1.2-1.6% away from the deep-asymptote limit that every other
cell (and every other dataset) agrees with, and the exp2 wnls-opt/ntds
cell is inconsistent with the optimal-weight pipeline that reproduces its
own single-fit row.  See the per-cell deviations the CLI prints.
"""

DATASET_ORDER = ("ntds", "musa1", "musa2", "musa3")

# Single fit on the first 26 NTDS intervals, scored on all 31.
# Columns: n0, phi, re, re_training, re_testing (percентages).
EXP1_REFERENCE = {
    "mle": (31.2159, 0.006849, 282.4772, 297.7377, 203.1224),
    "lse": (32.0564, 0.006209, 282.6287, 303.9038, 171.9984),
    "wnls-1": (33.2502, 0.005618, 278.4294, 304.3387, 143.7010),
    "wnls-2": (31.0558, 0.006858, 288.6679, 302.7011, 215.6952),
    "wnls-3": (32.7955, 0.005825, 279.8486, 304.3056, 152.6719),
    "wnls-4": (32.3541, 0.006046, 281.4133, 304.1184, 163.3466),
    "wnls-5": (33.0854, 0.005691, 278.9254, 304.3433, 146.7524),
    "wnls-6": (37.7379, 0.004258, 268.7858, 300.9540, 101.5112),
    "wnls-7": (34.9912, 0.004973, 274.0887, 303.5875, 120.6953),
    "wnls-8": (40.1833, 0.003800, 265.0097, 298.3371, 91.7073),
    "wnls-opt": (31.2159, 0.006742, 287.3568, 302.9925, 206.0516),
    "wnls-h1": (31.1081, 0.006819, 288.1279, 302.8012, 211.8266),
    "wnls-h2": (38.5667, 0.004089, 267.4298, 300.0726, 97.6872),
}

# One-step prediction RE, root-preferring solutions.  Columns follow DATASET_ORDER.
EXP2_REFERENCE = {
    "mle": (391.5204, 190.4551, 20.8767, 2659.7575),
    "lse": (314.4524, 190.5711, 22.4527, 1390.0797),
    "wnls-1": (744.8887, 190.4631, 22.7599, 1549.4476),
    "wnls-2": (344.3282, 190.9215, 22.1694, 2213.2277),
    "wnls-3": (378.3873, 192.6048, 21.2045, 1511.5081),
    "wnls-4": (309.5991, 190.5483, 23.9237, 2420.5040),
    "wnls-5": (301.0724, 190.5335, 25.5899, 1872.7917),
    "wnls-6": (275.4452, 199.1884, 20.1731, 1793.8811),
    "wnls-7": (275.3428, 190.4598, 25.9599, 1416.6654),
    "wnls-8": (289.8090, 202.5314, 20.1140, 6217.7935),
    "wnls-opt": (325.3276, 190.8644, 20.8074, 2175.0450),
    "wnls-h1": (215.4516, 190.8644, 20.7737, 1804.7796),
    "wnls-h2": (254.7178, 223.5711, 23.2718, 1438.4398),
}

# Count of prefixes whose one-step fit had a genuine root.
EXP2_COUNT_REFERENCE = {
    "mle": (10, 0, 12, 124),
    "lse": (7, 0, 12, 122),
    "wnls-1": (9, 0, 12, 110),
    "wnls-2": (8, 1, 12, 153),
    "wnls-3": (7, 0, 12, 121),
    "wnls-4": (7, 0, 12, 123),
    "wnls-5": (8, 0, 12, 111),
    "wnls-6": (7, 1, 12, 151),
    "wnls-7": (7, 1, 12, 153),
    "wnls-8": (7, 1, 12, 111),
    "wnls-opt": (11, 0, 12, 124),
    "wnls-h1": (6, 0, 12, 122),
    "wnls-h2": (11, 0, 12, 124),
}

# One-step prediction RE with every fit forced to the asymptotic solution.
EXP3_REFERENCE = {
    "mle": (159.2472, 190.4539, 26.6761, 524.9629),
    "lse": (159.3476, 190.5455, 26.5468, 525.4689),
    "wnls-1": (157.3702, 190.4617, 26.6081, 524.9789),
    "wnls-2": (159.7133, 190.7159, 26.5347, 527.0927),
    "wnls-3": (157.5956, 190.5668, 26.5362, 526.4024),
    "wnls-4": (157.4423, 190.5311, 26.5654, 525.2783),
    "wnls-5": (158.4906, 190.5197, 26.5830, 525.1660),
    "wnls-6": (157.8555, 190.5850, 26.5358, 526.9570),
    "wnls-7": (157.3338, 190.4590, 26.6330, 524.9690),
    "wnls-8": (158.1769, 190.7159, 26.5347, 527.0926),
    "wnls-opt": (158.0225, 190.7159, 26.5347, 527.0927),
    "wnls-h1": (158.0219, 190.7159, 26.5347, 527.0927),
    "wnls-h2": (157.3193, 190.7159, 26.6135, 527.0927),
}

# Squared-weight spot checks quoted alongside the main tables.
SQUARED_REFERENCE = {
    ("wnls2-1", "musa1", "reasonable"): 190.4539,
    ("wnls2-1", "musa3", "reasonable"): 1292.3006,
    ("wnls2-7", "musa1", "asymptotic"): 190.4534,
    ("wnls2-7", "musa3", "asymptotic"): 524.9623,
}
