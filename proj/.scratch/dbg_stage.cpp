#include <cstdio>
#include <fstream>
#include <vector>
#include "ospeda/preprocess.hpp"
#include "ospeda/tonic_init.hpp"
#include "ospeda/osp.hpp"
#include "ospeda/deconv.hpp"
using namespace ospeda;
int main() {
  std::vector<double> y;
  std::ifstream in("/tmp/y4.txt");
  double v; while (in >> v) y.push_back(v);
  std::printf("n=%zu\n", y.size());
  Signal sig{y, 4.0, 0.0};
  PipelineConfig cfg;
  Signal det = detrend_quadratic(sig);
  ValleySet vs = detect_valleys(det, cfg);
  std::printf("C++ nCP: %zu\nC++ CPs:", vs.indices.size());
  for (int i : vs.indices) std::printf(" %d", i);
  std::printf("\n");
  auto xhat = spline_tonic(sig, vs);
  OspResult osp = osp_decompose(y, xhat, cfg);
  std::printf("C++ m*: %d tonic[:3]: %.8f %.8f %.8f tonic[600:603]: %.8f %.8f %.8f\n",
              osp.m_star, osp.tonic[0], osp.tonic[1], osp.tonic[2],
              osp.tonic[600], osp.tonic[601], osp.tonic[602]);
  Kernel k = biexp_kernel(cfg);
  auto p = nnls_ridge(osp.phasic, k, cfg.ridge_lambda, cfg.nnls_tolerance);
  int nz = 0; for (double d : p) if (d > 1e-12) ++nz;
  auto ev = sparsify_driver(p, 4.0, 0.0, cfg);
  std::printf("C++ n driver>0: %d n events: %zu ev idx[:8]:", nz, ev.size());
  for (size_t i = 0; i < ev.size() && i < 8; ++i) std::printf(" %d", (int)(ev[i].time_s*4.0+0.5));
  std::printf("\n");
  FILE* f = fopen("/tmp/cpp_xhat.txt","w"); for(double d:xhat) fprintf(f,"%.17g\n",d); fclose(f);
  f = fopen("/tmp/cpp_tonic.txt","w"); for(double d:osp.tonic) fprintf(f,"%.17g\n",d); fclose(f);
  f = fopen("/tmp/cpp_driver.txt","w"); for(double d:p) fprintf(f,"%.17g\n",d); fclose(f);
  return 0;
}
