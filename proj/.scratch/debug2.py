import numpy as np
import proto
from proto import *

def detect_valleys_v2(det, fs, prom_thresh=0.05, min_dist_s=20.0, cpi_s=20.0):
    """emptiness test = window contains no control point of ANY kind"""
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
    detected = sorted(detected)
    n = len(det)
    cps = {0, n - 1} | set(detected)
    W = int(round(cpi_s * fs))
    for a in range(0, n, W):
        b = min(a + W, n)
        if not any(a <= c < b for c in cps):
            cps.add(a + int(np.argmin(det[a:b])))
    return np.array(sorted(cps)), detected

proto.detect_valleys = detect_valleys_v2

import time
rows = {lab: [] for lab in ("clean", "snr30", "snr20", "snr10")}
t0 = time.time()
for i in range(20):
    sim = simulate(splitmix64(42 + i))
    for lab in rows:
        dec = decompose(sim["noisy"][lab])
        rows[lab].append(evaluate(sim, dec))
names = ["rmse_T", "rmse_P", "corr", "R2", "F1", "prec", "rec"]
print(f"v2 (no-CP emptiness), n=20, {time.time()-t0:.0f}s")
for lab in rows:
    arr = np.array(rows[lab])
    m, s = arr.mean(0), arr.std(0, ddof=1)
    print(lab, " ".join(f"{n}={m[i]:.3f}±{s[i]:.3f}" for i, n in enumerate(names)))
