#include "sporadic/kernels.hpp"

#include <atomic>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "sporadic/errors.hpp"

namespace sporadic::kernels {

namespace {

using detail::Key;
using TermMap = LaurentPoly::TermMap;

struct TermRef {
  Key key;
  const Integer* coeff;
};

std::vector<TermRef> flatten(const LaurentPoly& p) {
  std::vector<TermRef> out;
  out.reserve(p.size());
  for (const auto& [k, c] : p.raw()) out.push_back({k, &c});
  return out;
}

inline void accumulate(TermMap& acc, Key k, const Integer& x, const Integer& y) {
  auto [it, inserted] = acc.try_emplace(k);
  mpz_addmul(it->second.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

[[noreturn]] void throw_cap(std::size_t cap) {
  throw ResourceError("product exceeds the term cap of " + std::to_string(cap) + " terms");
}

inline std::size_t partition_of(Key k, std::size_t parts) {
  return static_cast<std::size_t>((k * 0x9E3779B97F4A7C15ULL) >> 32) % parts;
}

}  // namespace

void check_product_bounds(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("cannot multiply polynomials in " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()) + " variables");
  if (a.is_zero() || b.is_zero()) return;
  const ExponentBox ba = a.bounds();
  const ExponentBox bb = b.bounds();
  for (int i = 0; i < a.dim(); ++i) {
    auto idx = static_cast<std::size_t>(i);
    const long lo = static_cast<long>(ba.lo[idx]) + bb.lo[idx];
    const long hi = static_cast<long>(ba.hi[idx]) + bb.hi[idx];
    if (lo < -kExponentLimit || hi > kExponentLimit)
      throw ResourceError("product exponent in coordinate " + std::to_string(i) + " leaves [-32767, 32767]");
  }
}

LaurentPoly multiply_serial(const LaurentPoly& a, const LaurentPoly& b, const MultiplyOptions& options) {
  check_product_bounds(a, b);
  TermMap acc;
  acc.reserve(a.size() + b.size());
  const ExponentBox* window = options.window;
  for (const auto& [ka, ca] : a.raw()) {
    for (const auto& [kb, cb] : b.raw()) {
      const Key k = ka + kb - detail::kBias;
      if (window && !window->contains(k)) continue;
      accumulate(acc, k, ca, cb);
    }
    if (acc.size() > options.term_cap) throw_cap(options.term_cap);
  }
  return LaurentPoly::from_terms(a.dim(), std::move(acc));
}

LaurentPoly multiply_parallel(const LaurentPoly& a, const LaurentPoly& b, const MultiplyOptions& options) {
  check_product_bounds(a, b);
  const std::vector<TermRef> left = flatten(a);
  const std::vector<TermRef> right = flatten(b);
  const std::size_t threads = static_cast<std::size_t>(omp_get_max_threads());
  const std::size_t parts = threads;
  const ExponentBox* window = options.window;
  const std::size_t cap = options.term_cap;

  // Phase 1: each thread owns a slice of `left` and scatters into its own partitioned maps.
  std::vector<std::vector<TermMap>> local(threads, std::vector<TermMap>(parts));
  std::atomic<bool> over_cap{false};
  const auto n_left = static_cast<long>(left.size());

#pragma omp parallel num_threads(static_cast<int>(threads))
  {
    auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < n_left; ++i) {
      if (over_cap.load(std::memory_order_relaxed)) continue;
      const TermRef& l = left[static_cast<std::size_t>(i)];
      for (const TermRef& r : right) {
        const Key k = l.key + r.key - detail::kBias;
        if (window && !window->contains(k)) continue;
        accumulate(mine[partition_of(k, parts)], k, *l.coeff, *r.coeff);
      }
      std::size_t held = 0;
      for (const auto& m : mine) held += m.size();
      if (held > cap) over_cap.store(true, std::memory_order_relaxed);
    }
  }
  if (over_cap.load()) throw_cap(cap);

  // Phase 2: partition q is merged by one thread; partitions have disjoint keys.
  std::vector<TermMap> merged(parts);
  const auto n_parts = static_cast<long>(parts);
#pragma omp parallel for schedule(static) num_threads(static_cast<int>(threads))
  for (long q = 0; q < n_parts; ++q) {
    auto& out = merged[static_cast<std::size_t>(q)];
    for (std::size_t t = 0; t < threads; ++t) {
      for (auto& [k, c] : local[t][static_cast<std::size_t>(q)]) {
        auto [it, inserted] = out.try_emplace(k);
        if (inserted) it->second.swap(c);
        else it->second += c;
      }
      TermMap().swap(local[t][static_cast<std::size_t>(q)]);
    }
    absl::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  }

  std::size_t total = 0;
  for (const auto& m : merged) total += m.size();
  if (total > cap) throw_cap(cap);
  TermMap result;
  result.reserve(total);
  for (auto& m : merged)
    for (auto& [k, c] : m) result.emplace(k, std::move(c));
  return LaurentPoly::from_terms(a.dim(), std::move(result));
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b, const MultiplyOptions& options) {
  const std::size_t pairs = a.size() * b.size();
  if (pairs >= kParallelPairThreshold && omp_get_max_threads() > 1) return multiply_parallel(a, b, options);
  return multiply_serial(a, b, options);
}

}  // namespace sporadic::kernels
