import numpy as np
from proto import *

# find worst clean segments and localize the error
rows = []
for i in range(20):
    sim = simulate(splitmix64(42 + i))
    dec = decompose(sim["noisy"]["clean"])
    rt, rp, corr, r2, f1, prec, rec = evaluate(sim, dec)
    err = dec["tonic"] - sim["tonic"]
    k = int(np.argmax(np.abs(err)))
    rows.append((r2, rt, i, k, err[k], dec["m_star"]))
rows.sort()
for r2, rt, i, k, e, m in rows[:6]:
    print(f"seg {i}: R2={r2:.3f} rmse_T={rt:.3f} worst_err={e:+.3f} at sample {k} (t={k/4:.1f}s of 300s) m*={m}")

# inspect worst segment in detail
r2, rt, i, k, e, m = rows[0]
sim = simulate(splitmix64(42 + i))
y = sim["noisy"]["clean"]
det = detrend_quad(y)
cp_idx, detected = detect_valleys(det, 4.0)
xhat = spline_tonic(y, cp_idx)
print(f"\nworst seg {i}: {len(cp_idx)} CPs ({len(detected)} detected)")
print("cp idx:", cp_idx.tolist())
print("spline err quantiles:", np.percentile(xhat - sim["tonic"], [0, 5, 50, 95, 100]).round(3))
tonic, phasic, m_star, reg, curve = osp(y, xhat)
print("osp err quantiles:", np.percentile(tonic - sim["tonic"], [0, 5, 50, 95, 100]).round(3))
err = tonic - sim["tonic"]
segs = [(int(np.abs(err[a:a+200]).max()*1000), a) for a in range(0, 1200, 200)]
print("max|err| per 50s block:", [(f"t={a/4:.0f}s", v/1000) for v, a in segs])
# where do est and true differ most — boundary?
print("err[:10]:", err[:10].round(3), " err[-10:]:", err[-10:].round(3))
