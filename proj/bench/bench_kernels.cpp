// SPDX-License-Identifier: Apache-2.0
//
// Compares the serial reference kernels against the OpenMP ones: dense
// matrix products and the end-to-end interior-point solves whose Schur
// assembly is the parallel hot spot. Results must match bit-for-bit; only
// the wall time differs.

#include <chrono>
#include <cstdio>
#include <random>

#include "codebounds/linalg.hpp"
#include "codebounds/schrijver.hpp"
#include "codebounds/sdp.hpp"
#include "codebounds/theta.hpp"

using namespace codebounds;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

Matrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

template <typename F>
double time_best_of(int reps, F f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = now_ms();
    f();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

}  // namespace

int main() {
  std::printf("%-34s %12s %12s %8s\n", "kernel", "serial ms", "openmp ms", "speedup");

  for (int n : {128, 256, 384, 512}) {
    Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    Matrix r_serial, r_omp;
    double ts = time_best_of(3, [&] { r_serial = linalg::matmul_serial(a, b); });
    double tp = time_best_of(3, [&] { r_omp = linalg::matmul_omp(a, b); });
    std::printf("%-34s %12.2f %12.2f %7.2fx %s\n",
                ("matmul " + std::to_string(n) + "x" + std::to_string(n)).c_str(), ts, tp,
                ts / tp, r_serial == r_omp ? "" : "MISMATCH");
  }

  {
    SdpProblem p = build_schrijver(14, 3).to_sdp();
    SdpSolution s_serial, s_omp;
    linalg::set_parallel(false);
    double ts = time_best_of(1, [&] { s_serial = ipm_solve(p, 1e-7, 60); });
    linalg::set_parallel(true);
    double tp = time_best_of(1, [&] { s_omp = ipm_solve(p, 1e-7, 60); });
    bool same = s_serial.iterations == s_omp.iterations &&
                s_serial.primal_obj == s_omp.primal_obj && s_serial.dual_obj == s_omp.dual_obj;
    std::printf("%-34s %12.2f %12.2f %7.2fx %s\n", "ipm schrijver(14,3)", ts, tp, ts / tp,
                same ? "" : "MISMATCH");
  }

  {
    SdpProblem p = build_schrijver(10, 3).to_sdp();
    SdpSolution s_serial, s_omp;
    linalg::set_parallel(false);
    double ts = time_best_of(1, [&] { s_serial = ipm_solve(p, 1e-7, 60); });
    linalg::set_parallel(true);
    double tp = time_best_of(1, [&] { s_omp = ipm_solve(p, 1e-7, 60); });
    bool same = s_serial.iterations == s_omp.iterations &&
                s_serial.primal_obj == s_omp.primal_obj && s_serial.dual_obj == s_omp.dual_obj;
    std::printf("%-34s %12.2f %12.2f %7.2fx %s\n", "ipm schrijver(10,3)", ts, tp, ts / tp,
                same ? "" : "MISMATCH");
  }

  {
    Graph g = code_graph(SpaceSpec::hamming(4, 2, 1), 3);
    SdpProblem p = theta_sdp(g, ThetaVariant::Theta);
    SdpSolution s_serial, s_omp;
    linalg::set_parallel(false);
    double ts = time_best_of(1, [&] { s_serial = ipm_solve(p, 1e-8, 100); });
    linalg::set_parallel(true);
    double tp = time_best_of(1, [&] { s_omp = ipm_solve(p, 1e-8, 100); });
    bool same = s_serial.iterations == s_omp.iterations &&
                s_serial.primal_obj == s_omp.primal_obj && s_serial.dual_obj == s_omp.dual_obj;
    std::printf("%-34s %12.2f %12.2f %7.2fx %s\n", "ipm theta H(4,delta=3)", ts, tp, ts / tp,
                same ? "" : "MISMATCH");
  }

  linalg::set_parallel(true);
  return 0;
}
