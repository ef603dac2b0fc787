"""OSP direction test: printed (project y onto delayed-spline span) vs swapped
(regress spline onto delayed-signal span). Grid over fs_sim x irf_norm."""
import numpy as np, sys, time
import proto
from proto import *
from debug4 import detect_valleys_v3
proto.detect_valleys = detect_valleys_v3
from debug8 import simulate_hr, preprocess

def osp_swap(y, xhat, fs=4.0, lam=0.01, rcond_min=1e-8):
    """V from delayed y; fit xhat_trunc = V b; tonic = V b padded with xhat."""
    N = len(y)
    best = None
    max_m = max(1, int(round(fs)))  # delays up to 1 s
    for m in range(1, max_m + 1):
        rows = N - m
        V = np.empty((rows, m + 1))
        for j in range(m + 1):
            V[:, j] = y[j:j + rows]
        t = xhat[m:]
        G = V.T @ V
        c = V.T @ t
        try:
            Ginv = np.linalg.inv(G)
            rcond = 1.0 / (np.abs(G).sum(0).max() * np.abs(Ginv).sum(0).max())
        except np.linalg.LinAlgError:
            rcond = 0.0
        if rcond >= rcond_min:
            b = np.linalg.solve(G, c)
        else:
            b = np.linalg.solve(G + lam * np.eye(m + 1), c)
        fit = V @ b
        ss = float(((t - fit) ** 2).sum())
        if ss <= 1e-24 * float((t ** 2).sum()):
            mdl = -np.inf
        else:
            mdl = N * np.log(ss / N) + (m + 1) * np.log(N - m)
        if best is None or mdl < best[0]:
            best = (mdl, m, fit)
    _, m_star, fit = best
    tonic = np.concatenate([xhat[:m_star], fit])
    return tonic, m_star

def osp_centered(y, xhat, fs=4.0, lam=0.01, rcond_min=1e-8):
    """Project mean-removed y onto mean-removed delayed-xhat columns; restore
    the spline mean. Kills the baseline lift while keeping MDL selection."""
    N = len(y)
    best = None
    max_m = max(1, int(round(fs)))
    for m in range(1, max_m + 1):
        rows = N - m
        V = np.empty((rows, m + 1))
        for j in range(m + 1):
            V[:, j] = xhat[j:j + rows]
        U = V - V.mean(0)
        t = y[m:] - y[m:].mean()
        G = U.T @ U
        c = U.T @ t
        try:
            Ginv = np.linalg.inv(G)
            rcond = 1.0 / (np.abs(G).sum(0).max() * np.abs(Ginv).sum(0).max())
        except np.linalg.LinAlgError:
            rcond = 0.0
        if rcond >= rcond_min:
            b = np.linalg.solve(G, c)
        else:
            b = np.linalg.solve(G + lam * np.eye(m + 1), c)
        fit = U @ b
        ss = float(((t - fit) ** 2).sum())
        if ss <= 1e-24 * float((t ** 2).sum()):
            mdl = -np.inf
        else:
            mdl = N * np.log(ss / N) + (m + 1) * np.log(N - m)
        if best is None or mdl < best[0]:
            best = (mdl, m, fit, float(xhat[m:].mean()))
    _, m_star, fit, xbar = best
    tonic = np.concatenate([xhat[:m_star], fit + xbar])
    return tonic, m_star

def decompose_v(y, fs=4.0, osp_dir="printed"):
    det = detrend_quad(y)
    cps, _ = proto.detect_valleys(det, fs)
    xhat = spline_tonic(y, cps)
    if osp_dir == "printed":
        tonic, m_star = osp(y, xhat, fs)
    elif osp_dir == "centered":
        tonic, m_star = osp_centered(y, xhat, fs)
    else:
        tonic, m_star = osp_swap(y, xhat, fs)
    phasic = y - tonic
    taps = biexp_kernel(fs)
    p = nnls_fista(phasic, taps)
    ev = sparsify(p, fs)
    recon = np.convolve(p, taps)[:len(y)]
    return dict(tonic=tonic, phasic=phasic, p=p, ev_idx=ev, recon=recon, m_star=m_star)

def run(fs_sim, irf_norm, osp_dir, nseg):
    rows = {lab: [] for lab in ("clean", "snr30", "snr20", "snr10")}
    vc = []
    ms = []
    for i in range(nseg):
        sim = simulate_hr(splitmix64(42 + i), fs_sim, irf_norm)
        vc.append(sim["clean"].var())
        tT = preprocess(sim["tonic"], fs_sim)
        tP = preprocess(sim["phasic"], fs_sim)
        tC = tT + tP
        tru_t = sim["ev_idx"] / fs_sim
        for lab in rows:
            y4 = preprocess(sim["noisy"][lab], fs_sim)
            dec = decompose_v(y4, osp_dir=osp_dir)
            ms.append(dec["m_star"])
            rt = float(np.sqrt(np.mean((dec["tonic"] - tT) ** 2)))
            bias = float(np.mean(dec["tonic"] - tT))
            rp = float(np.sqrt(np.mean((dec["recon"] - tP) ** 2)))
            corr = float(np.corrcoef(dec["recon"], tP)[0, 1])
            rec = dec["tonic"] + dec["recon"]
            r2 = 1 - float(((tC - rec) ** 2).sum()) / float(((tC - tC.mean()) ** 2).sum())
            est_t = np.array(dec["ev_idx"]) / FS
            f1, prec, recl = match_f1(list(est_t), list(tru_t))
            rows[lab].append((rt, rp, corr, r2, f1, prec, recl, bias))
    print(f"== fs={fs_sim} irf={irf_norm} osp={osp_dir} var_clean={np.mean(vc):.3f} "
          f"m*dist={np.bincount(ms, minlength=5)[1:]}")
    out = {}
    for lab in rows:
        arr = np.array(rows[lab])
        m, s = arr.mean(0), arr.std(0, ddof=1)
        out[lab] = m
        print(f"{lab:6s} T={m[0]:.3f}(b{m[7]:+.3f}) P={m[1]:.3f} corr={m[2]:.3f} "
              f"R2={m[3]:.3f} F1={m[4]:.3f} (p={m[5]:.2f} r={m[6]:.2f})")
    m20, m10, m30, mcl = out["snr20"], out["snr10"], out["snr30"], out["clean"]
    checks = [
        ("C1 T20", 0.073 <= m20[0] <= 0.189), ("C1 P20", 0.076 <= m20[1] <= 0.188),
        ("C2 P10", 0.189 <= m10[1] <= 0.397), ("C2 corr10", m10[2] >= 0.665),
        ("C2 R2_10", m10[3] >= 0.974), ("C3 F1_30", 0.538 <= m30[4] <= 0.738),
        ("C3 F1_20", 0.517 <= m20[4] <= 0.717), ("C3 F1_10", 0.473 <= m10[4] <= 0.673),
        ("C3 F1_cl", mcl[4] >= 0.65),
    ]
    print("  " + " ".join(("PASS:" if ok else "FAIL:") + n for n, ok in checks),
          f"=> {sum(ok for _, ok in checks)}/9")

if __name__ == "__main__":
    nseg = int(sys.argv[1]) if len(sys.argv) > 1 else 30
    for spec_str in sys.argv[2].split(";"):
        fs_s, irf, od = spec_str.split(",")
        run(int(fs_s), irf, od, nseg)
