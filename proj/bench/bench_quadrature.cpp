// Timing comparison of the serial and OpenMP quadrature kernels. The two
// paths share the blocked summation, so the values must agree bit for bit;
// this reports the speedup actually delivered on this machine.
#include "lieper/parallel.hpp"
#include "lieper/periods.hpp"
#include "lieper/sphere.hpp"

#include <chrono>
#include <cstdio>

using namespace lieper;

namespace {

double time_ms(int reps, double& value, bool parallel, const SampledMap3& m) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  for (int i = 0; i < reps; ++i) value = integrate_form(m, det_form(4.0), parallel);
  auto t1 = clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main() {
  apply_thread_env();
  std::printf("openmp enabled: %s\n", openmp_enabled() ? "yes" : "no");
  std::printf("%8s %6s %12s %12s %9s %8s\n", "grid", "reps", "serial ms", "parallel ms",
              "speedup", "match");
  for (std::size_t n : {24, 48, 72}) {
    GridSpec spec = s3_grid(n);
    SampledMap3 m(spec, s3_identity(), 2, true);
    int reps = n <= 24 ? 10 : (n <= 48 ? 4 : 2);
    double vs = 0, vp = 0;
    double ser = time_ms(reps, vs, false, m);
    double par = time_ms(reps, vp, true, m);
    std::printf("%5zu^3 %6d %12.2f %12.2f %8.2fx %8s\n", n, reps, ser, par, ser / par,
                vs == vp ? "exact" : "DIFFER");
  }
  // sampling itself is also parallel; report it once at the largest size
  using clock = std::chrono::steady_clock;
  GridSpec spec = s3_grid(72);
  auto t0 = clock::now();
  SampledMap3 ms(spec, s3_identity(), 2, false);
  auto t1 = clock::now();
  SampledMap3 mp(spec, s3_identity(), 2, true);
  auto t2 = clock::now();
  std::printf("sampling 72^3: serial %.2f ms, parallel %.2f ms\n",
              std::chrono::duration<double, std::milli>(t1 - t0).count(),
              std::chrono::duration<double, std::milli>(t2 - t1).count());
  return 0;
}
