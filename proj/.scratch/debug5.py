import numpy as np
import proto
from proto import *
from debug4 import detect_valleys_v3
proto.detect_valleys = detect_valleys_v3

def run(nseg, mode):
    out = []
    for i in range(nseg):
        sim = simulate(splitmix64(42 + i))
        y = sim["noisy"]["clean"]
        det = detrend_quad(y)
        cp_idx, _ = detect_valleys_v3(det, 4.0)
        xhat = spline_tonic(y, cp_idx)
        if mode == "spline_only":
            tonic = xhat
        else:
            tonic, phasic, m_star, reg, curve = osp(y, xhat)
        phasic = y - tonic
        taps = biexp_kernel(4.0)
        p = nnls_fista(phasic, taps)
        recon = np.convolve(p, taps)[:len(y)]
        rt = np.sqrt(np.mean((tonic - sim["tonic"]) ** 2))
        bias = np.mean(tonic - sim["tonic"])
        rp = np.sqrt(np.mean((recon - sim["phasic"]) ** 2))
        corr = np.corrcoef(recon, sim["phasic"])[0, 1]
        rec_full = tonic + recon
        r2 = 1 - ((sim["clean"] - rec_full) ** 2).sum() / ((sim["clean"] - sim["clean"].mean()) ** 2).sum()
        # also raw-phasic metrics
        rp_raw = np.sqrt(np.mean((phasic - sim["phasic"]) ** 2))
        corr_raw = np.corrcoef(phasic, sim["phasic"])[0, 1]
        # how negative does est phasic go?
        neg_frac = float((phasic < -0.02).mean())
        out.append((rt, bias, rp, corr, r2, rp_raw, corr_raw, neg_frac))
    arr = np.array(out)
    m = arr.mean(0)
    print(f"{mode:12s} rmse_T={m[0]:.3f} biasT={m[1]:+.3f} rmse_Prec={m[2]:.3f} corr_rec={m[3]:.3f} R2={m[4]:.3f} "
          f"rmse_Praw={m[5]:.3f} corr_raw={m[6]:.3f} negfrac={m[7]:.2f}")

run(20, "spline_only")
run(20, "osp")
