#include <functional>
#include <map>
#include <string>

#include "sporadic/catalog.hpp"
#include "sporadic/errors.hpp"

namespace sporadic::catalog {

namespace {

using Formula = std::function<Integer(long)>;

Integer C(long a, long b) { return binomial(a, b); }

Integer sign(long k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

// sum_j C(k, j)^3
Integer franel(long k) {
  Integer s = 0;
  for (long j = 0; j <= k; ++j) {
    Integer c = C(k, j);
    s += c * c * c;
  }
  return s;
}

const std::map<std::string, Formula, std::less<>>& formulas() {
  static const std::map<std::string, Formula, std::less<>> table = {
      {"A:franel",
       [](long n) { return franel(n); }},
      {"B:zagier",
       [](long n) {
         Integer s = 0;
         for (long k = 0; 3 * k <= n; ++k)
           s += sign(k) * ipow(3, static_cast<unsigned long>(n - 3 * k)) * C(n, 3 * k) * C(3 * k, 2 * k) * C(2 * k, k);
         return s;
       }},
      {"C:zagier",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) s += C(n, k) * C(n, k) * C(2 * k, k);
         return s;
       }},
      {"D:apery",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) s += C(n, k) * C(n, k) * C(n + k, n);
         return s;
       }},
      {"E:zagier",
       [](long n) {
         Integer s = 0;
         for (long k = 0; 2 * k <= n; ++k) {
           Integer c = C(2 * k, k);
           s += ipow(4, static_cast<unsigned long>(n - 2 * k)) * C(n, 2 * k) * c * c;
         }
         return s;
       }},
      {"E:power_free",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) s += C(n, k) * C(2 * k, k) * C(2 * n - 2 * k, n - k);
         return s;
       }},
      {"F:zagier",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k)
           s += sign(k) * ipow(8, static_cast<unsigned long>(n - k)) * C(n, k) * franel(k);
         return s;
       }},
      {"delta:az",
       [](long n) {
         Integer s = 0;
         for (long k = 0; 3 * k <= n; ++k)
           s += sign(k) * ipow(3, static_cast<unsigned long>(n - 3 * k)) * C(n, 3 * k) * C(n + k, n) *
                C(3 * k, 2 * k) * C(2 * k, k);
         return s;
       }},
      // C(-1, 3n) and any C(a, b) with a < b count as 0.
      {"eta:az",
       [](long n) {
         Integer s = 0;
         for (long k = 0; 5 * k <= n; ++k) {
           Integer c = C(n, k);
           s += sign(k) * c * c * c * (C(4 * n - 5 * k - 1, 3 * n) + C(4 * n - 5 * k, 3 * n));
         }
         return s;
       }},
      {"alpha:domb",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) s += C(n, k) * C(n, k) * C(2 * k, k) * C(2 * n - 2 * k, n - k);
         return s;
       }},
      {"epsilon:az",
       [](long n) {
         Integer s = 0;
         for (long k = (n + 1) / 2; k <= n; ++k) {
           Integer c = C(n, k) * C(2 * k, n);
           s += c * c;
         }
         return s;
       }},
      {"zeta:az",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) {
           Integer ck = C(n, k);
           for (long l = 0; l <= k; ++l) s += ck * ck * C(n, l) * C(k, l) * C(k + l, n);
         }
         return s;
       }},
      {"gamma:apery",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) {
           Integer c = C(n, k) * C(n + k, k);
           s += c * c;
         }
         return s;
       }},
      {"s7:zudilin",
       [](long n) {
         Integer s = 0;
         for (long k = (n + 1) / 2; k <= n; ++k) s += C(n, k) * C(n, k) * C(n + k, k) * C(2 * k, n);
         return s;
       }},
      {"s10:yang_zudilin",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) {
           Integer c = C(n, k);
           s += c * c * c * c;
         }
         return s;
       }},
      {"s18:zudilin",
       [](long n) {
         Integer s = 0;
         for (long k = 0; 3 * k <= n; ++k)
           s += sign(k) * C(n, k) * C(2 * k, k) * C(2 * n - 2 * k, n - k) *
                (C(2 * n - 3 * k - 1, n) + C(2 * n - 3 * k, n));
         return s;
       }},
      {"apery_a:apery",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) {
           Integer c = C(n, k) * C(n + k, k);
           s += c * c;
         }
         return s;
       }},
      {"apery_b:apery",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) s += C(n, k) * C(n, k) * C(n + k, k);
         return s;
       }},
      {"L3:legendre",
       [](long n) {
         Integer s = 0;
         for (long k = 0; k <= n; ++k) {
           Integer c = C(2 * n - 2 * k, n - k) * C(2 * k, k);
           s += c * c;
         }
         return s;
       }},
  };
  return table;
}

}  // namespace

std::vector<Integer> binomial_formula_terms(std::string_view formula_id, unsigned N) {
  const auto& table = formulas();
  auto it = table.find(formula_id);
  if (it == table.end()) throw UnknownName(std::string(formula_id));
  std::vector<Integer> out;
  out.reserve(N + 1);
  for (unsigned n = 0; n <= N; ++n) out.push_back(it->second(static_cast<long>(n)));
  return out;
}

std::vector<std::string> formula_ids() {
  std::vector<std::string> ids;
  for (const auto& kv : formulas()) ids.push_back(kv.first);
  return ids;
}

std::vector<Integer> binomial_terms(std::string_view name, unsigned N) {
  return binomial_formula_terms(get(name).binomial_formulas.front(), N);
}

}  // namespace sporadic::catalog
