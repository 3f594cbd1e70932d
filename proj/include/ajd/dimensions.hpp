#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ajd/coefficient.hpp"
#include "ajd/error.hpp"
#include "ajd/lie_quotient.hpp"
#include "ajd/word.hpp"

namespace ajd {

inline int mobius(long long d) {
  if (d < 1) throw InputError("mobius needs d >= 1");
  int r = 1;
  for (long long q = 2; q * q <= d; ++q) {
    if (d % q != 0) continue;
    d /= q;
    if (d % q == 0) return 0;
    r = -r;
  }
  if (d > 1) r = -r;
  return r;
}

namespace detail {

inline Integer factorial(long long n) {
  Integer r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (a % b != 0) throw std::logic_error("inexact division in dimension formula");
  return a / b;
}

}  // namespace detail

/// (1/n) sum_{d|n} mu(d) p^{n/d}.
inline Integer witt_total(long long n, long long p) {
  if (n < 1 || p < 1) throw InputError("witt formula needs n >= 1 and p >= 1");
  Integer s = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Integer t = power(static_cast<std::uint64_t>(p), static_cast<std::size_t>(n / d));
    s += mu > 0 ? t : Integer(-t);
  }
  return detail::exact_div(s, n);
}

/// Necklace number (1/n) sum_{d | n_i} mu(d) (n/d)! / prod (n_i/d)!.
inline Integer witt_multidegree(const Multidegree& m) {
  long long n = m.total();
  if (n < 1) throw InputError("multidegree must have positive total");
  long long g = 0;
  for (int c : m.counts()) g = std::gcd(g, static_cast<long long>(c));
  Integer s = 0;
  for (long long d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Integer t = detail::factorial(n / d);
    for (int c : m.counts()) t /= detail::factorial(c / d);
    s += mu > 0 ? t : Integer(-t);
  }
  return detail::exact_div(s, n);
}

/// p·W(n-1) - W(n) for n >= 2; 0 for n = 1.
inline Integer h_dim_total(long long n, long long p) {
  if (n < 1 || p < 1) throw InputError("h dimension needs n >= 1 and p >= 1");
  if (n == 1) return 0;
  return Integer(p) * witt_total(n - 1, p) - witt_total(n, p);
}

/// sum_{n_i >= 1} W(m - e_i) - W(m); 0 when the total is below 2.
inline Integer h_dim_multidegree(const Multidegree& m) {
  if (m.total() < 2) return 0;
  Integer s = 0;
  for (int a = 1; a <= m.alphabet(); ++a) {
    if (m.count(Letter(a)) >= 1) s += witt_multidegree(m.without(Letter(a)));
  }
  return s - witt_multidegree(m);
}

/// dim ASS_n(p) minus the rank of the fold relations.
inline Integer rank_oracle(std::size_t n, int p, Family family,
                           Field field = Field::rationals()) {
  return Integer(relation_span(n, p, family, field)->quotient_dimension());
}

inline Integer rank_oracle(const Multidegree& m, Family family,
                           Field field = Field::rationals()) {
  return Integer(relation_span(static_cast<std::size_t>(m.total()), m.alphabet(), family, field)
                     ->quotient_dimension(m));
}

enum class Method { formula, rank_oracle, both };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::rank_oracle: return "rank-oracle";
    case Method::both: return "both";
  }
  return "";
}

/// Result of a dimension query with its provenance.
struct DimensionReport {
  std::string query;
  Integer value;
  Method method = Method::formula;
  std::string anchor;
  std::optional<Integer> oracle_value;
  std::string note;

  /// When both methods ran, whether they agree.
  bool consistent() const { return method != Method::both || oracle_value == value; }
};

enum class DimensionKind { witt, necklace, h };

/// Closed-form value of a dimension query, optionally checked against the
/// relation-span rank. necklace needs a multidegree; witt and h accept
/// either a multidegree or (n, p).
inline DimensionReport dimension(DimensionKind kind, const std::optional<Multidegree>& m,
                                 long long n, long long p, Method method = Method::formula) {
  if (kind == DimensionKind::necklace && !m) throw InputError("necklace needs a multidegree");
  DimensionReport r;
  r.method = method;
  Family family = kind == DimensionKind::h ? Family::prime : Family::lie;
  if (m) {
    r.query = (kind == DimensionKind::h ? "h" : kind == DimensionKind::witt ? "witt" : "necklace") +
              std::string("(") + m->str() + ")";
    r.anchor = kind == DimensionKind::h ? "h-dimension-multidegree" : "necklace-formula";
  } else {
    r.query = (kind == DimensionKind::h ? "h" : "witt") + std::string("(n=") + std::to_string(n) +
              ", p=" + std::to_string(p) + ")";
    r.anchor = kind == DimensionKind::h ? "h-dimension-total" : "witt-formula";
  }
  auto formula = [&]() -> Integer {
    if (m) return kind == DimensionKind::h ? h_dim_multidegree(*m) : witt_multidegree(*m);
    return kind == DimensionKind::h ? h_dim_total(n, p) : witt_total(n, p);
  };
  auto oracle = [&]() -> Integer {
    if (m) return rank_oracle(*m, family);
    if (n < 1 || p < 1) throw InputError("rank oracle needs n >= 1 and p >= 1");
    return rank_oracle(static_cast<std::size_t>(n), static_cast<int>(p), family);
  };
  switch (method) {
    case Method::formula: r.value = formula(); break;
    case Method::rank_oracle:
      r.value = oracle();
      r.anchor = "rank-oracle";
      break;
    case Method::both:
      r.value = formula();
      r.oracle_value = oracle();
      break;
  }
  return r;
}

}  // namespace ajd
