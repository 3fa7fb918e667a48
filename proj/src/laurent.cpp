#include "sporadic/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "sporadic/errors.hpp"
#include "sporadic/kernels.hpp"

namespace sporadic {

std::size_t default_term_cap() {
  if (const char* env = std::getenv("SPORADIC_TERM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw DomainError("dimension must be in [1, " + std::to_string(kMaxDim) + "], got " + std::to_string(dim));
}

}  // namespace

// ---------------------------------------------------------------- ExponentVector

ExponentVector::ExponentVector(int dim) : dim_(dim) { check_dim(dim); }

ExponentVector::ExponentVector(std::initializer_list<int> entries)
    : ExponentVector(std::span<const int>(entries.begin(), entries.size())) {}

ExponentVector::ExponentVector(std::span<const int> entries) : dim_(static_cast<int>(entries.size())) {
  check_dim(dim_);
  std::copy(entries.begin(), entries.end(), e_.begin());
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.begin() + dim_, [](int v) { return v == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector r = *this;
  for (int i = 0; i < dim_; ++i) r[i] += o[i];
  return r;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector r = *this;
  for (int i = 0; i < dim_; ++i) r[i] = -r[i];
  return r;
}

namespace detail {

Key pack(const ExponentVector& e) {
  Key k = kBias;
  for (int i = 0; i < e.dim(); ++i) {
    const int v = e[i];
    if (v > kExponentLimit || v < -kExponentLimit)
      throw ResourceError("exponent " + std::to_string(v) + " exceeds the 16-bit lane bound");
    const Key lane_bits = static_cast<Key>(v + 0x8000) << (48 - 16 * i);
    k = (k & ~(Key{0xFFFF} << (48 - 16 * i))) | lane_bits;
  }
  return k;
}

ExponentVector unpack(Key k, int dim) {
  ExponentVector e(dim);
  for (int i = 0; i < dim; ++i) e[i] = lane(k, i);
  return e;
}

}  // namespace detail

bool ExponentBox::empty() const {
  for (int i = 0; i < dim; ++i)
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return true;
  return false;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int dim) : dim_(dim) { check_dim(dim); }

LaurentPoly LaurentPoly::constant(int dim, const Integer& c) {
  LaurentPoly p(dim);
  p.add_term(ExponentVector(dim), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& e, const Integer& c) {
  LaurentPoly p(e.dim());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int dim, int index) {
  if (index < 0 || index >= dim) throw DomainError("variable index out of range");
  ExponentVector e(dim);
  e[index] = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::from_terms(int dim, TermMap terms) {
  LaurentPoly p(dim);
  absl::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  p.terms_ = std::move(terms);
  return p;
}

Integer LaurentPoly::coefficient(const ExponentVector& e) const {
  if (e.dim() != dim_) throw DimensionMismatch("coefficient: exponent dimension mismatch");
  auto it = terms_.find(detail::pack(e));
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::constant_term() const {
  auto it = terms_.find(detail::kBias);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& e, const Integer& c) {
  if (e.dim() != dim_) throw DimensionMismatch("add_term: exponent dimension mismatch");
  if (c == 0) return;
  const Key k = detail::pack(e);
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<ExponentVector, Integer>> LaurentPoly::terms() const {
  std::vector<Key> keys;
  keys.reserve(terms_.size());
  for (const auto& kv : terms_) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());
  std::vector<std::pair<ExponentVector, Integer>> out;
  out.reserve(keys.size());
  for (Key k : keys) out.emplace_back(detail::unpack(k, dim_), terms_.at(k));
  return out;
}

std::vector<ExponentVector> LaurentPoly::support() const {
  std::vector<Key> keys;
  keys.reserve(terms_.size());
  for (const auto& kv : terms_) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());
  std::vector<ExponentVector> out;
  out.reserve(keys.size());
  for (Key k : keys) out.push_back(detail::unpack(k, dim_));
  return out;
}

ExponentBox LaurentPoly::bounds() const {
  ExponentBox box;
  if (terms_.empty()) return box;
  box.dim = dim_;
  box.lo.fill(kExponentLimit);
  box.hi.fill(-kExponentLimit);
  for (const auto& kv : terms_) {
    for (int i = 0; i < dim_; ++i) {
      const int v = detail::lane(kv.first, i);
      auto idx = static_cast<std::size_t>(i);
      box.lo[idx] = std::min(box.lo[idx], v);
      box.hi[idx] = std::max(box.hi[idx], v);
    }
  }
  return box;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("addition of polynomials in different dimensions");
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return poly_mul(a, b); }

// ---------------------------------------------------------------- products and powers

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b, std::size_t term_cap) {
  kernels::MultiplyOptions opts;
  opts.term_cap = term_cap;
  return kernels::multiply(a, b, opts);
}

LaurentPoly poly_pow(const LaurentPoly& a, unsigned n, std::size_t term_cap) {
  LaurentPoly result = LaurentPoly::constant(a.dim(), 1);
  LaurentPoly base = a;
  while (n > 0) {
    if (n & 1u) result = poly_mul(result, base, term_cap);
    n >>= 1;
    if (n > 0) base = poly_mul(base, base, term_cap);
  }
  return result;
}

LaurentPoly poly_pow_iterative(const LaurentPoly& a, unsigned n, std::size_t term_cap) {
  LaurentPoly result = LaurentPoly::constant(a.dim(), 1);
  for (unsigned i = 0; i < n; ++i) result = poly_mul(result, a, term_cap);
  return result;
}

LaurentPoly times_monomial(const LaurentPoly& a, const ExponentVector& e) {
  if (e.dim() != a.dim()) throw DimensionMismatch("times_monomial: dimension mismatch");
  LaurentPoly::TermMap out;
  out.reserve(a.size());
  for (const auto& [k, c] : a.raw()) out.emplace(detail::pack(detail::unpack(k, a.dim()) + e), c);
  return LaurentPoly::from_terms(a.dim(), std::move(out));
}

LaurentPoly embed(const LaurentPoly& a, int new_dim) {
  if (new_dim < a.dim()) throw DomainError("embed: cannot drop variables");
  // Unused lanes already hold the bias, so keys carry over unchanged.
  return LaurentPoly::from_terms(new_dim, a.raw());
}

// ---------------------------------------------------------------- constant-term sequences

CtStream::CtStream(LaurentPoly base, unsigned horizon, CtOptions options)
    : base_(std::move(base)),
      power_(LaurentPoly::constant(base_.dim(), 1)),
      base_bounds_(base_.bounds()),
      horizon_(horizon),
      options_(options) {}

Integer CtStream::next() {
  if (done()) throw DomainError("CtStream advanced past its horizon");
  if (next_index_ > 0) {
    if (base_.is_zero()) {
      power_ = LaurentPoly(base_.dim());
    } else {
      kernels::MultiplyOptions opts;
      opts.term_cap = options_.term_cap;
      ExponentBox window;
      if (options_.prune) {
        // After r more factors each coordinate moves by something in [r*lo, r*hi];
        // only terms that can land back on 0 matter.
        const long r = static_cast<long>(horizon_ - next_index_);
        window.dim = base_.dim();
        for (int i = 0; i < base_.dim(); ++i) {
          auto idx = static_cast<std::size_t>(i);
          const long lo = -r * base_bounds_.hi[idx];
          const long hi = -r * base_bounds_.lo[idx];
          window.lo[idx] = static_cast<int>(std::max<long>(lo, -kExponentLimit));
          window.hi[idx] = static_cast<int>(std::min<long>(hi, kExponentLimit));
        }
        opts.window = &window;
      }
      power_ = kernels::multiply(power_, base_, opts);
    }
  }
  ++next_index_;
  return power_.constant_term();
}

std::vector<Integer> ct_sequence(const LaurentPoly& a, unsigned N, CtOptions options) {
  CtStream stream(a, N, options);
  std::vector<Integer> out;
  out.reserve(N + 1);
  while (!stream.done()) out.push_back(stream.next());
  return out;
}

Integer ct_shifted(const LaurentPoly& a, unsigned n, const ExponentVector& shifts, std::size_t term_cap) {
  if (shifts.dim() != a.dim()) throw DimensionMismatch("ct_shifted: shift vector length must equal dim");
  // CT(a^n x^s) is the coefficient of x^{-s} in a^n.
  return poly_pow(a, n, term_cap).coefficient(-shifts);
}

// ---------------------------------------------------------------- monomial maps

long integer_determinant(int dim, std::span<const long> m) {
  if (dim == 1) return m[0];
  long det = 0;
  for (int col = 0; col < dim; ++col) {
    std::vector<long> minor;
    minor.reserve(static_cast<std::size_t>((dim - 1) * (dim - 1)));
    for (int r = 1; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        if (c != col) minor.push_back(m[static_cast<std::size_t>(r * dim + c)]);
    const long sign = (col % 2 == 0) ? 1 : -1;
    det += sign * m[static_cast<std::size_t>(col)] * integer_determinant(dim - 1, minor);
  }
  return det;
}

MonomialMap::MonomialMap(int dim, std::vector<long> entries) : dim_(dim), m_(std::move(entries)) {
  check_dim(dim);
  if (m_.size() != static_cast<std::size_t>(dim * dim))
    throw DomainError("monomial map needs dim*dim entries");
  det_ = integer_determinant(dim, m_);
  if (det_ == 0) throw DomainError("monomial map is singular");
}

MonomialMap MonomialMap::unimodular(int dim, std::vector<long> entries) {
  MonomialMap m(dim, std::move(entries));
  if (!m.is_unimodular())
    throw DomainError("map has determinant " + std::to_string(m.determinant()) + ", not +-1");
  return m;
}

MonomialMap MonomialMap::identity(int dim) { return scaling(dim, 1); }

MonomialMap MonomialMap::scaling(int dim, long factor) {
  std::vector<long> m(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i * dim + i)] = factor;
  return MonomialMap(dim, std::move(m));
}

MonomialMap MonomialMap::inversion(int dim, int variable) {
  std::vector<long> m(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i * dim + i)] = (i == variable) ? -1 : 1;
  return MonomialMap(dim, std::move(m));
}

MonomialMap MonomialMap::permutation(std::span<const int> perm) {
  const int dim = static_cast<int>(perm.size());
  std::vector<long> m(static_cast<std::size_t>(dim * dim), 0);
  // Exponent of variable i moves to slot perm[i].
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * dim + i)] = 1;
  return MonomialMap(dim, std::move(m));
}

ExponentVector MonomialMap::apply(const ExponentVector& e) const {
  if (e.dim() != dim_) throw DimensionMismatch("monomial map applied to wrong dimension");
  ExponentVector r(dim_);
  for (int i = 0; i < dim_; ++i) {
    long s = 0;
    for (int j = 0; j < dim_; ++j) s += at(i, j) * e[j];
    if (s > kExponentLimit || s < -kExponentLimit) throw ResourceError("substituted exponent out of range");
    r[i] = static_cast<int>(s);
  }
  return r;
}

MonomialMap MonomialMap::compose(const MonomialMap& inner) const {
  if (inner.dim_ != dim_) throw DimensionMismatch("composing maps of different dimension");
  std::vector<long> m(static_cast<std::size_t>(dim_ * dim_), 0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m[static_cast<std::size_t>(i * dim_ + j)] += at(i, k) * inner.at(k, j);
  return MonomialMap(dim_, std::move(m));
}

LaurentPoly monomial_substitute(const LaurentPoly& a, const MonomialMap& map) {
  if (map.dim() != a.dim()) throw DimensionMismatch("monomial_substitute: dimension mismatch");
  LaurentPoly::TermMap out;
  out.reserve(a.size());
  // Nonsingular maps are injective on Z^d, so no two terms collide.
  for (const auto& [k, c] : a.raw()) out.emplace(detail::pack(map.apply(detail::unpack(k, a.dim()))), c);
  return LaurentPoly::from_terms(a.dim(), std::move(out));
}

}  // namespace sporadic
