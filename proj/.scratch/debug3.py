import numpy as np
import proto
from proto import *
from debug2 import detect_valleys_v2
proto.detect_valleys = detect_valleys_v2

sim = simulate(splitmix64(42 + 4))
y = sim["noisy"]["clean"]
det = detrend_quad(y)
cp_idx, detected = detect_valleys_v2(det, 4.0)
print("detected:", detected)
print("cps:", cp_idx.tolist())
xhat = spline_tonic(y, cp_idx)
serr = xhat - sim["tonic"]
k = int(np.argmax(np.abs(serr)))
print(f"worst spline err {serr[k]:+.3f} at idx {k} (t={k/4:.1f})")
# value of y at CPs vs tonic at CPs
for c in cp_idx:
    print(f"  cp {c:5d} t={c/4:7.1f} y={y[c]:.3f} tonic={sim['tonic'][c]:.3f} diff={y[c]-sim['tonic'][c]:+.3f}")
# where are true events?
print("events t:", (sim["ev_idx"]/4).astype(int).tolist())
print("tau2:", sim["tau2"])
