import numpy as np, sys, time
import proto
from proto import *
from debug4 import detect_valleys_v3
proto.detect_valleys = detect_valleys_v3
from debug6 import evaluate2

nseg = int(sys.argv[1]) if len(sys.argv) > 1 else 30
norm = sys.argv[2] if len(sys.argv) > 2 else "peak"
rows = {lab: [] for lab in ("clean", "snr30", "snr20", "snr10")}
stats = []
t0 = time.time()
for i in range(nseg):
    sim = simulate(splitmix64(42 + i), irf_norm=norm)
    stats.append((sim["phasic"].var(), sim["phasic"].mean(), sim["clean"].var()))
    for lab in rows:
        dec = decompose(sim["noisy"][lab])
        rows[lab].append(evaluate2(sim, dec))
st = np.array(stats).mean(0)
print(f"irf_norm={norm} n={nseg} ({time.time()-t0:.0f}s): var_P={st[0]:.4f} "
      f"mean_P={st[1]:.4f} var_clean={st[2]:.4f}")
names = ["rmse_T", "rmse_P", "corr", "R2", "F1", "prec", "rec"]
win = {"clean": ("T?", "P?", "c?", "R?", "F>=0.65"),
       "snr30": ("", "", "", "", "F[0.538,0.738]"),
       "snr20": ("T[0.073,0.189]", "P[0.076,0.188]", "", "", "F[0.517,0.717]"),
       "snr10": ("", "P[0.189,0.397]", "c>=0.665", "R>=0.974", "F[0.473,0.673]")}
for lab in rows:
    arr = np.array(rows[lab])
    m, s = arr.mean(0), arr.std(0, ddof=1)
    print(lab, " ".join(f"{n}={m[i]:.3f}±{s[i]:.3f}" for i, n in enumerate(names[:5])),
          "|", " ".join(w for w in win[lab] if w))
