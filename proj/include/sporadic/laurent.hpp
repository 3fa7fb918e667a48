#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "sporadic/integer.hpp"

namespace sporadic {

inline constexpr int kMaxDim = 4;
// Exponent entries live in 16-bit lanes of a packed key.
inline constexpr int kExponentLimit = (1 << 15) - 1;

// Term cap from SPORADIC_TERM_CAP, defaulting to 10^7.
std::size_t default_term_cap();

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int dim);
  ExponentVector(std::initializer_list<int> entries);
  explicit ExponentVector(std::span<const int> entries);

  int dim() const { return dim_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  std::span<const int> entries() const { return {e_.data(), static_cast<std::size_t>(dim_)}; }

  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-() const;

  // Lexicographic, first coordinate most significant.
  auto operator<=>(const ExponentVector&) const = default;

 private:
  std::array<int, kMaxDim> e_{};
  int dim_ = 0;
};

namespace detail {

// Lane i holds e_i + 2^15 at bits [48-16i, 64-16i); unused lanes hold the bias.
// Sorting packed keys is the canonical (lexicographic) exponent order, and
// ka + kb - kBias adds exponents lane-wise as long as no lane leaves [-2^15, 2^15).
using Key = std::uint64_t;
inline constexpr Key kBias = 0x8000800080008000ULL;

inline int lane(Key k, int i) {
  return static_cast<int>((k >> (48 - 16 * i)) & 0xFFFFu) - 0x8000;
}
Key pack(const ExponentVector& e);
ExponentVector unpack(Key k, int dim);

}  // namespace detail

// Closed per-coordinate interval box.
struct ExponentBox {
  int dim = 0;
  std::array<int, kMaxDim> lo{};
  std::array<int, kMaxDim> hi{};

  bool contains(detail::Key k) const {
    for (int i = 0; i < dim; ++i) {
      const int v = detail::lane(k, i);
      if (v < lo[static_cast<std::size_t>(i)] || v > hi[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }
  bool empty() const;
};

// Sparse Laurent polynomial in dim variables with arbitrary-precision coefficients.
// Never stores a zero coefficient.
class LaurentPoly {
 public:
  using Key = detail::Key;
  using TermMap = absl::flat_hash_map<Key, Integer>;

  explicit LaurentPoly(int dim = 1);
  static LaurentPoly constant(int dim, const Integer& c);
  static LaurentPoly monomial(const ExponentVector& e, const Integer& c = 1);
  static LaurentPoly variable(int dim, int index);
  // Takes ownership of an accumulated map; zero entries are dropped.
  static LaurentPoly from_terms(int dim, TermMap terms);

  int dim() const { return dim_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const ExponentVector& e) const;
  Integer constant_term() const;
  void add_term(const ExponentVector& e, const Integer& c);

  // Terms in canonical exponent order.
  std::vector<std::pair<ExponentVector, Integer>> terms() const;
  std::vector<ExponentVector> support() const;
  // Per-coordinate min/max exponent; dim 0 box when empty.
  ExponentBox bounds() const;

  const TermMap& raw() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_;
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// Exact product. Throws DimensionMismatch, or ResourceError past the term cap.
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b, std::size_t term_cap = default_term_cap());

// Binary powering.
LaurentPoly poly_pow(const LaurentPoly& a, unsigned n, std::size_t term_cap = default_term_cap());
// Repeated multiplication by a; reference for poly_pow.
LaurentPoly poly_pow_iterative(const LaurentPoly& a, unsigned n,
                               std::size_t term_cap = default_term_cap());

inline Integer constant_term(const LaurentPoly& a) { return a.constant_term(); }

LaurentPoly times_monomial(const LaurentPoly& a, const ExponentVector& e);
// Same polynomial viewed in new_dim >= dim variables.
LaurentPoly embed(const LaurentPoly& a, int new_dim);

struct CtOptions {
  // Drop terms of the running power that can no longer reach the origin.
  bool prune = false;
  std::size_t term_cap = default_term_cap();
};

// Emits CT(base^0), CT(base^1), ... up to the horizon, one multiplication per step.
class CtStream {
 public:
  CtStream(LaurentPoly base, unsigned horizon, CtOptions options = {});

  bool done() const { return next_index_ > horizon_; }
  unsigned index() const { return next_index_; }
  Integer next();
  const LaurentPoly& power() const { return power_; }

 private:
  LaurentPoly base_;
  LaurentPoly power_;
  ExponentBox base_bounds_;
  unsigned horizon_;
  unsigned next_index_ = 0;
  CtOptions options_;
};

// [CT(a^0), ..., CT(a^N)].
std::vector<Integer> ct_sequence(const LaurentPoly& a, unsigned N, CtOptions options = {});

// CT(a^n * x^shifts).
Integer ct_shifted(const LaurentPoly& a, unsigned n, const ExponentVector& shifts,
                   std::size_t term_cap = default_term_cap());

enum class MapKind { Unimodular, Injective };

// Invertible integer exponent map e -> U e, i.e. x_i -> prod_j x_j^{U_ji}.
class MonomialMap {
 public:
  // Row-major d x d entries. Throws DomainError when singular.
  MonomialMap(int dim, std::vector<long> entries);
  // Same, and additionally requires |det| == 1.
  static MonomialMap unimodular(int dim, std::vector<long> entries);
  static MonomialMap identity(int dim);
  static MonomialMap inversion(int dim, int variable);
  // Variable i goes to variable perm[i].
  static MonomialMap permutation(std::span<const int> perm);
  static MonomialMap scaling(int dim, long factor);

  int dim() const { return dim_; }
  long determinant() const { return det_; }
  MapKind kind() const { return (det_ == 1 || det_ == -1) ? MapKind::Unimodular : MapKind::Injective; }
  bool is_unimodular() const { return kind() == MapKind::Unimodular; }
  long at(int row, int col) const { return m_[static_cast<std::size_t>(row * dim_ + col)]; }

  ExponentVector apply(const ExponentVector& e) const;
  MonomialMap compose(const MonomialMap& inner) const;  // this * inner

 private:
  int dim_;
  std::vector<long> m_;
  long det_;
};

long integer_determinant(int dim, std::span<const long> row_major);

LaurentPoly monomial_substitute(const LaurentPoly& a, const MonomialMap& map);

}  // namespace sporadic
