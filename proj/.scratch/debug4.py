import numpy as np
import proto
from proto import *

def detect_valleys_v3(det, fs, prom_thresh=0.05, min_dist_s=20.0, cpi_s=20.0, guard_s=1.0):
    """boundary/fill CPs skipped when within guard_s of an existing CP;
    fill emptiness test = window contains no CP of any kind"""
    neg = -det
    cand = local_minima(det)
    if len(cand):
        proms = prominences(neg, cand)
        keep = proms >= prom_thresh
        cand, proms = cand[keep], proms[keep]
    detected = []
    if len(cand):
        order = sorted(range(len(cand)), key=lambda i: (-proms[i], cand[i]))
        min_dist = min_dist_s * fs
        for i in order:
            if all(abs(cand[i] - d) >= min_dist for d in detected):
                detected.append(cand[i])
    detected = sorted(int(d) for d in detected)
    n = len(det)
    G = int(round(guard_s * fs))
    cps = set(detected)
    for b in (0, n - 1):
        if all(abs(b - c) >= G for c in cps):
            cps.add(b)
    W = int(round(cpi_s * fs))
    for a in range(0, n, W):
        bnd = min(a + W, n)
        if not any(a <= c < bnd for c in cps):
            loc = a + int(np.argmin(det[a:bnd]))
            if all(abs(loc - c) >= G for c in cps):
                cps.add(loc)
    return np.array(sorted(cps)), detected

proto.detect_valleys = detect_valleys_v3

import time, sys
nseg = int(sys.argv[1]) if len(sys.argv) > 1 else 20
rows = {lab: [] for lab in ("clean", "snr30", "snr20", "snr10")}
t0 = time.time()
for i in range(nseg):
    sim = simulate(splitmix64(42 + i))
    for lab in rows:
        dec = decompose(sim["noisy"][lab])
        rows[lab].append(evaluate(sim, dec))
names = ["rmse_T", "rmse_P", "corr", "R2", "F1", "prec", "rec"]
print(f"v3 (1s guard), n={nseg}, {time.time()-t0:.0f}s")
for lab in rows:
    arr = np.array(rows[lab])
    m, s = arr.mean(0), arr.std(0, ddof=1)
    print(lab, " ".join(f"{n}={m[i]:.3f}±{s[i]:.3f}" for i, n in enumerate(names)))
