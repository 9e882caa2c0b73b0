// Wall-clock comparison of the serial and OpenMP paths of the two kernels
// that parallelize: quadrature node polishing and the coupling sweep of the
// summation pipeline. The serial path (jobs=1) is the reference; outputs are
// checked for byte identity, not just closeness.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oddres/borel.hpp"
#include "oddres/pade.hpp"
#include "oddres/parallel.hpp"
#include "oddres/precision.hpp"
#include "oddres/quadrature.hpp"
#include "oddres/rs_series.hpp"
#include "oddres/summation.hpp"

using namespace oddres;

namespace {

double time_once(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  precision::set_bits(256);
#ifdef _OPENMP
  std::printf("openmp: enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: compiled out, serial only\n");
#endif

  {
    double serial = time_once([] { GaussLaguerre::build(256, 1); });
    double par = time_once([] { GaussLaguerre::build(256, 0); });
    std::printf("gauss-laguerre nodes n=256 @256bit   serial %.3f s   parallel %.3f s   speedup %.2fx\n",
                serial, par, serial / par);
  }

  {
    RSExpansion series = rs_expand(OscillatorSpec(1, 0), 40);
    std::vector<Rational> cz = leroy_transform(series).even_coefficients();
    PadeApproximant p7 = pade_construct(cz, 7, 2);
    PadeApproximant p6 = pade_construct(cz, 6, 2);
    std::vector<Real> mags(16);
    for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = Real(1 + i) / 100;

    auto sweep = [&](int jobs) {
      std::vector<Real> out(mags.size());
      QuadratureSpec quad{64, 1};
      parallel_for(mags.size(), jobs, [&](std::size_t i) {
        out[i] = distributional_sum(p7, mags[i], Rational(1, 2), quad, &p6).f;
      });
      return out;
    };
    std::vector<Real> a, b;
    double serial = time_once([&] { a = sweep(1); });
    double par = time_once([&] { b = sweep(0); });
    bool same = true;
    for (std::size_t i = 0; i < a.size(); ++i) same = same && a[i] == b[i];
    std::printf(
        "summation sweep, 16 couplings        serial %.3f s   parallel %.3f s   speedup %.2fx   "
        "identical %s\n",
        serial, par, serial / par, same ? "yes" : "NO");
  }
  return 0;
}
