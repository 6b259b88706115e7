#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <thread>
#include <vector>

#include "common/scalar.hpp"

namespace flagcone::report {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (seed, suite, sample) so that adding a suite or
// changing the thread count never perturbs the points of another.
inline std::uint64_t stream_seed(std::uint64_t seed, std::string_view suite, int sample) {
  std::uint64_t h = splitmix64(seed);
  for (char ch : suite) h = splitmix64(h ^ static_cast<unsigned char>(ch));
  return splitmix64(h ^ static_cast<std::uint64_t>(sample));
}

// Chart point with every |z_j| <= 2.
inline std::vector<std::complex<double>> float_point(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<std::complex<double>> z;
  while (static_cast<int>(z.size()) < m) {
    std::complex<double> w(d(rng), d(rng));
    if (std::abs(w) <= 2.0) z.push_back(w);
  }
  return z;
}

// Point of the half-integer lattice with every |z_j| <= 2.
inline std::vector<GaussianRational> exact_point(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<GaussianRational> z;
  while (static_cast<int>(z.size()) < m) {
    int a = d(rng), b = d(rng);
    if (a * a + b * b > 16) continue;
    mpq_class re(a, 2), im(b, 2);
    re.canonicalize();
    im.canonicalize();
    z.emplace_back(re, im);
  }
  return z;
}

template <class C>
std::vector<C> chart_point(std::mt19937_64& rng, int m) {
  if constexpr (ScalarTraits<C>::kExact)
    return exact_point(rng, m);
  else
    return float_point(rng, m);
}

template <class R>
R cone_radius(std::mt19937_64& rng) {
  if constexpr (std::is_same_v<R, double>) {
    return std::uniform_real_distribution<double>(0.5, 2.0)(rng);
  } else {
    mpq_class r(std::uniform_int_distribution<int>(1, 4)(rng), 2);
    r.canonicalize();
    return r;
  }
}

inline std::complex<double> fibre_point(std::mt19937_64& rng) {
  double mag = std::uniform_real_distribution<double>(0.5, 1.5)(rng);
  double arg = std::uniform_real_distribution<double>(-3.14159, 3.14159)(rng);
  return std::polar(mag, arg);
}

// Runs body(k) for k in [0, n) on up to `threads` workers (0 = hardware).
// Results must be written to slot k, which keeps reductions ordered.
inline void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (int k = 0; k < n; ++k) body(k);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int k = w; k < n; k += workers) {
        try {
          body(k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    });
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace flagcone::report
