import numpy as np
import proto
from proto import *
from debug4 import detect_valleys_v3
proto.detect_valleys = detect_valleys_v3

def evaluate2(sim, dec):
    """RMSE_P / corr on phasic = y - tonic; R2 on tonic + driver recon"""
    rt = float(np.sqrt(np.mean((dec["tonic"] - sim["tonic"]) ** 2)))
    rp = float(np.sqrt(np.mean((dec["phasic"] - sim["phasic"]) ** 2)))
    a, b = dec["phasic"], sim["phasic"]
    corr = float(np.corrcoef(a, b)[0, 1]) if a.var() > 0 and b.var() > 0 else 0.0
    rec = dec["tonic"] + dec["recon"]
    sstot = float(((sim["clean"] - sim["clean"].mean()) ** 2).sum())
    ssres = float(((sim["clean"] - rec) ** 2).sum())
    r2 = 1 - ssres / sstot
    est_t = np.array(dec["ev_idx"]) / FS
    tru_t = sim["ev_idx"] / FS
    f1, prec, recl = match_f1(list(est_t), list(tru_t))
    return rt, rp, corr, r2, f1, prec, recl

import time, sys
nseg = int(sys.argv[1]) if len(sys.argv) > 1 else 20
rows = {lab: [] for lab in ("clean", "snr30", "snr20", "snr10")}
t0 = time.time()
for i in range(nseg):
    sim = simulate(splitmix64(42 + i))
    for lab in rows:
        dec = decompose(sim["noisy"][lab])
        rows[lab].append(evaluate2(sim, dec))
names = ["rmse_T", "rmse_P", "corr", "R2", "F1", "prec", "rec"]
paper = {"clean": (0.102, 0.105, 0.935, 0.993, 0.717),
         "snr30": (0.100, 0.103, 0.934, 0.993, 0.638),
         "snr20": (0.131, 0.132, 0.912, 0.992, 0.617),
         "snr10": (0.292, 0.293, 0.782, 0.979, 0.573)}
print(f"metrics v2 (P=y-tonic; R2 on recon), n={nseg}, {time.time()-t0:.0f}s")
for lab in rows:
    arr = np.array(rows[lab])
    m, s = arr.mean(0), arr.std(0, ddof=1)
    p = paper[lab]
    print(lab, " ".join(f"{n}={m[i]:.3f}" for i, n in enumerate(names)),
          f"| paper T={p[0]} P={p[1]} corr={p[2]} R2={p[3]} F1={p[4]}")
