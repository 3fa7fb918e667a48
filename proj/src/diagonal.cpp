#include "sporadic/diagonal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <omp.h>

#include "sporadic/errors.hpp"

namespace sporadic {

namespace {

struct DenseTerm {
  std::size_t offset;  // flat index shift of the monomial
  std::array<int, kMaxDim> e;
  Integer c;
};

// Dense box [0, N]^d in row-major order, last coordinate fastest.
struct Box {
  int dim;
  unsigned side;
  std::size_t cells;
  std::array<std::size_t, kMaxDim> stride{};

  Box(int d, unsigned N) : dim(d), side(N + 1) {
    cells = 1;
    for (int i = d - 1; i >= 0; --i) {
      stride[static_cast<std::size_t>(i)] = cells;
      cells *= side;
    }
  }

  std::array<int, kMaxDim> coords(std::size_t idx) const {
    std::array<int, kMaxDim> c{};
    for (int i = 0; i < dim; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(idx / stride[static_cast<std::size_t>(i)]);
      idx %= stride[static_cast<std::size_t>(i)];
    }
    return c;
  }

  std::size_t diagonal(unsigned i) const {
    std::size_t idx = 0;
    for (int k = 0; k < dim; ++k) idx += i * stride[static_cast<std::size_t>(k)];
    return idx;
  }
};

std::vector<DenseTerm> prepare(const LaurentPoly& q, unsigned N, const Box& box) {
  if (q.constant_term() != 0)
    throw DomainError("diagonal_prefix: Q must have zero constant term (rewrite 1/(c - R) as 1/(1 - Q) first)");
  std::vector<DenseTerm> terms;
  for (const auto& [e, c] : q.terms()) {
    DenseTerm t{0, {}, c};
    bool inside = true;
    for (int i = 0; i < q.dim(); ++i) {
      if (e[i] < 0) throw DomainError("diagonal_prefix: Q has a negative exponent");
      if (static_cast<unsigned>(e[i]) > N) inside = false;
      t.e[static_cast<std::size_t>(i)] = e[i];
      t.offset += static_cast<std::size_t>(e[i]) * box.stride[static_cast<std::size_t>(i)];
    }
    if (inside) terms.push_back(std::move(t));
  }
  return terms;
}

// next[idx] = sum_t c_t * cur[idx - e_t] over cells where idx - e_t stays in the box.
void step(const Box& box, const std::vector<DenseTerm>& terms, const std::vector<Integer>& cur,
          std::vector<Integer>& next, bool parallel) {
  const auto cells = static_cast<long>(box.cells);
#pragma omp parallel for schedule(static) if (parallel)
  for (long idx = 0; idx < cells; ++idx) {
    const auto pos = box.coords(static_cast<std::size_t>(idx));
    Integer& out = next[static_cast<std::size_t>(idx)];
    out = 0;
    for (const DenseTerm& t : terms) {
      bool ok = true;
      for (int i = 0; i < box.dim; ++i)
        if (pos[static_cast<std::size_t>(i)] < t.e[static_cast<std::size_t>(i)]) ok = false;
      if (!ok) continue;
      const Integer& src = cur[static_cast<std::size_t>(idx) - t.offset];
      if (src != 0) mpz_addmul(out.get_mpz_t(), t.c.get_mpz_t(), src.get_mpz_t());
    }
  }
}

std::vector<Integer> run(const LaurentPoly& q, unsigned N, bool parallel) {
  const Box box(q.dim(), N);
  if (box.cells > default_term_cap()) throw ResourceError("diagonal box exceeds the term cap");
  const std::vector<DenseTerm> terms = prepare(q, N, box);

  std::vector<Integer> cur(box.cells), next(box.cells);
  cur[0] = 1;
  std::vector<Integer> diag(N + 1);
  // Every monomial of Q has total degree >= 1, so Q^k vanishes in the box once k > d*N.
  const unsigned max_k = static_cast<unsigned>(q.dim()) * N;
  for (unsigned k = 0;; ++k) {
    for (unsigned i = 0; i <= N; ++i) diag[i] += cur[box.diagonal(i)];
    if (k == max_k) break;
    step(box, terms, cur, next, parallel);
    cur.swap(next);
    if (std::all_of(cur.begin(), cur.end(), [](const Integer& v) { return v == 0; })) break;
  }
  return diag;
}

}  // namespace

std::vector<Integer> diagonal_prefix(const LaurentPoly& q, unsigned N) {
  return run(q, N, omp_get_max_threads() > 1);
}

std::vector<Integer> diagonal_prefix_serial(const LaurentPoly& q, unsigned N) { return run(q, N, false); }

LaurentPoly matrix_to_ct_poly(int dim, std::span<const long> matrix) {
  if (matrix.size() != static_cast<std::size_t>(dim * dim)) throw DomainError("matrix must be dim x dim");
  LaurentPoly prod = LaurentPoly::constant(dim, 1);
  for (int i = 0; i < dim; ++i) {
    LaurentPoly row(dim);
    for (int j = 0; j < dim; ++j) {
      ExponentVector e(dim);
      e[j] = 1;
      row.add_term(e, matrix[static_cast<std::size_t>(i * dim + j)]);
    }
    prod = poly_mul(prod, row);
  }
  ExponentVector denom(dim);
  for (int i = 0; i < dim; ++i) denom[i] = -1;
  return times_monomial(prod, denom);
}

LaurentPoly macmahon_determinant(int dim, std::span<const long> matrix) {
  if (matrix.size() != static_cast<std::size_t>(dim * dim)) throw DomainError("matrix must be dim x dim");
  // Entry (i, j) of I - M Diag(x) is delta_ij - M_ij x_j; Leibniz expansion.
  auto entry = [&](int i, int j) {
    LaurentPoly p(dim);
    if (i == j) p.add_term(ExponentVector(dim), 1);
    ExponentVector e(dim);
    e[j] = 1;
    p.add_term(e, -matrix[static_cast<std::size_t>(i * dim + j)]);
    return p;
  };
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(dim);
  do {
    int inversions = 0;
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    LaurentPoly term = LaurentPoly::constant(dim, inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < dim; ++i) term = poly_mul(term, entry(i, perm[static_cast<std::size_t>(i)]));
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

LaurentPoly cts_diagonal_series(const LaurentPoly& a) {
  const int d = a.dim();
  if (d + 1 > kMaxDim) throw DomainError("cts_diagonal_series needs d + 1 <= 4 variables");
  ExponentVector all_ones(d + 1);
  for (int i = 0; i <= d; ++i) all_ones[i] = 1;
  LaurentPoly q = times_monomial(embed(a, d + 1), all_ones);
  for (const auto& e : q.support())
    for (int v : e.entries())
      if (v < 0) throw DomainError("x_1...x_d A is not a polynomial; no diagonal form");
  return q;
}

}  // namespace sporadic
