#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qpoly.hpp"

namespace pk {

struct no_fit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// polynomial in t with QPoly coefficients, index = t-degree
using BiPoly = std::vector<QPoly>;

inline void bi_trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline BiPoly bi_mul(const BiPoly& a, const BiPoly& b, std::size_t limit = SIZE_MAX) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = std::min(limit, a.size() + b.size() - 1);
  BiPoly out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  bi_trim(out);
  return out;
}

// prod_{j in J} (1 - q^j t)
inline BiPoly denominator(const std::vector<int>& J) {
  BiPoly d{QPoly(1)};
  for (int j : J) d = bi_mul(d, BiPoly{QPoly(1), -q_pow(j)});
  return d;
}

inline std::string bi_str(const BiPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "[" + p[k].str() + "]";
    if (k == 1) s += "*t";
    if (k > 1) s += "*t^" + std::to_string(k);
  }
  return s;
}

// P1/Q(J1) == P2/Q(J2)
inline bool same_rational(const BiPoly& p1, const std::vector<int>& J1, const BiPoly& p2, const std::vector<int>& J2) {
  return bi_mul(p1, denominator(J2)) == bi_mul(p2, denominator(J1));
}

struct RationalFit {
  std::vector<int> J;  // sorted multiset
  BiPoly P;
  int t_power = 0;          // multiplicity of (1-t) in P(1,t)
  std::vector<Int> P_t;     // P(1,t) / (1-t)^t_power
  int verified_terms = 0;   // vanishing coefficients of Q*F beyond deg P
};

namespace detail {

using RPoly = std::vector<Rat>;

// connection polynomial C with C(t) * sum a_n t^n = polynomial, C(0)=1
inline RPoly berlekamp_massey(const std::vector<Rat>& a) {
  RPoly C{1}, B{1};
  int L = 0, m = 1;
  Rat b = 1;
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rat d = a[n];
    for (int i = 1; i <= L && i < static_cast<int>(C.size()); ++i) d += C[i] * a[n - i];
    if (d == 0) {
      ++m;
      continue;
    }
    RPoly T = C;
    Rat coef = d / b;
    if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
    if (2 * L <= static_cast<int>(n)) {
      L = static_cast<int>(n) + 1 - L;
      B = T;
      b = d;
      m = 1;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, 0);
  return C;
}

// divide c by (1 - r t) if exact
inline bool divide_linear(RPoly& c, const Rat& r) {
  // c(t) = (1 - r t) e(t): e_0 = c_0, e_k = c_k + r e_{k-1}
  if (c.size() < 2) return false;
  RPoly e(c.size() - 1);
  e[0] = c[0];
  for (std::size_t k = 1; k < e.size(); ++k) e[k] = c[k] + r * e[k - 1];
  if (c.back() + r * e.back() != 0) return false;
  c = std::move(e);
  return true;
}

inline std::optional<std::vector<int>> roots_as_powers(RPoly c, int q0, int jmax) {
  std::vector<int> J;
  Rat r = 1;
  for (int j = 0; j <= jmax && c.size() > 1; ++j) {
    while (c.size() > 1 && divide_linear(c, r)) J.push_back(j);
    r *= q0;
  }
  if (c.size() > 1) return std::nullopt;
  return J;
}

inline std::optional<int> high_degree(const BiPoly& P) {
  for (std::size_t k = P.size(); k-- > 0;)
    if (!P[k].is_zero()) return static_cast<int>(k);
  return std::nullopt;
}

inline std::vector<int> multiset_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<int, int> ma, mb;
  for (int x : a) ++ma[x];
  for (int x : b) ++mb[x];
  for (auto [k, v] : mb) ma[k] = std::max(ma[k], v);
  std::vector<int> out;
  for (auto [k, v] : ma) out.insert(out.end(), v, k);
  return out;
}

}  // namespace detail

// numerator for a given J, if Q*F truncates with at least `checks` vanishing coefficients
inline std::optional<std::pair<BiPoly, int>> numerator_for(const std::vector<QPoly>& series, const std::vector<int>& J,
                                                           int checks = 1) {
  BiPoly F(series.begin(), series.end());
  std::size_t M = series.size();
  BiPoly P = bi_mul(denominator(J), F, M);
  auto h = detail::high_degree(P);
  int deg = h ? *h : -1;
  int verified = static_cast<int>(M) - 1 - deg;
  if (verified < checks) return std::nullopt;
  P.resize(deg + 1);
  return std::make_pair(P, verified);
}

inline void fill_t_data(RationalFit& f) {
  std::vector<Rat> p1;
  for (auto& c : f.P) p1.push_back(Rat(c.at_one()));
  int tp = 0;
  while (!p1.empty()) {
    Rat s = 0;
    for (auto& x : p1) s += x;
    if (s != 0) break;
    // divide by (1 - t)
    std::vector<Rat> e(p1.size() - 1);
    Rat acc = 0;
    for (std::size_t k = 0; k + 1 < p1.size(); ++k) {
      acc += p1[k];
      e[k] = acc;
    }
    p1 = std::move(e);
    ++tp;
  }
  f.t_power = tp;
  f.P_t.clear();
  for (auto& x : p1) f.P_t.push_back(x.get_num());
}

// fit sum_n series[n] t^n = P(q,t) / prod_{j in J}(1 - q^j t)
inline RationalFit fit_rational(const std::vector<QPoly>& series, int max_t_degree = 64, int jmax = 400) {
  if (series.empty() || series[0] != QPoly(1)) throw invalid_input("fit_rational: series must start with 1");
  std::vector<int> J;
  for (int q0 : {2, 3}) {
    std::vector<Rat> a;
    for (auto& s : series) a.push_back(s.eval(Rat(q0)));
    auto C = detail::berlekamp_massey(a);
    auto r = detail::roots_as_powers(C, q0, jmax);
    if (!r) throw no_fit("no-fit-within-budget: denominator roots are not powers of q");
    J = detail::multiset_union(J, *r);
  }
  auto base = numerator_for(series, J);
  if (!base) throw no_fit("no-fit-within-budget: more terms needed");
  // drop factors that are not needed
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < J.size(); ++i) {
      if (i > 0 && J[i] == J[i - 1]) continue;
      auto J2 = J;
      J2.erase(J2.begin() + static_cast<long>(i));
      if (auto r = numerator_for(series, J2)) {
        J = std::move(J2);
        base = r;
        changed = true;
        break;
      }
    }
  }
  RationalFit f;
  f.J = J;
  f.P = base->first;
  f.verified_terms = base->second;
  if (static_cast<int>(f.P.size()) - 1 > max_t_degree) throw no_fit("no-fit-within-budget: numerator degree");
  fill_t_data(f);
  return f;
}

// ---------------------------------------------------------------- numeric series

struct NumericFit {
  std::vector<Int> P;  // numerator in t
  int a = 0;           // power of (1 - t)
  int b = 0;           // power of (1 + t)
  int verified_terms = 0;
};

// sum_n v_n t^n = P(t) / ((1-t)^a (1+t)^b) with the smallest a+b
inline NumericFit fit_numeric(const std::vector<Int>& v, bool allow_minus_one, int min_checks = 3) {
  int M = static_cast<int>(v.size());
  for (int d = 0; d < M; ++d) {
    for (int a = d; a >= (allow_minus_one ? 0 : d); --a) {
      int b = d - a;
      std::vector<Int> den{1};
      auto mul = [&](int s) {
        std::vector<Int> e(den.size() + 1, 0);
        for (std::size_t i = 0; i < den.size(); ++i) {
          e[i] += den[i];
          e[i + 1] += s * den[i];
        }
        den = std::move(e);
      };
      for (int i = 0; i < a; ++i) mul(-1);
      for (int i = 0; i < b; ++i) mul(1);
      std::vector<Int> P(M, 0);
      for (int i = 0; i < M; ++i)
        for (int j = 0; j <= i && j < static_cast<int>(den.size()); ++j) P[i] += den[j] * v[i - j];
      int deg = M - 1;
      while (deg >= 0 && P[deg] == 0) --deg;
      if (M - 1 - deg >= min_checks) {
        P.resize(deg + 1);
        return {P, a, b, M - 1 - deg};
      }
    }
  }
  throw no_fit("no-fit-within-budget: more terms needed");
}

// ---------------------------------------------------------------- polynomial fits

struct PolyFit {
  std::vector<Rat> coeffs;  // ascending powers of N
  int valid_from = 0;       // first N at which the polynomial applies
  Rat operator()(long N) const {
    Rat s = 0, x = 1;
    for (auto& c : coeffs) {
      s += c * x;
      x *= N;
    }
    return s;
  }
};

// values[i] is the value at N = start_index + i
inline PolyFit fit_polynomial(const std::vector<Int>& values, int start_index = 0) {
  int M = static_cast<int>(values.size());
  for (int v = 0; v < M; ++v) {
    int m = M - v;
    std::vector<std::vector<Int>> diff{std::vector<Int>(values.begin() + v, values.end())};
    std::optional<int> D;
    while (!diff.back().empty()) {
      auto& last = diff.back();
      if (std::all_of(last.begin(), last.end(), [](const Int& x) { return x == 0; })) {
        D = static_cast<int>(diff.size()) - 2;
        break;
      }
      std::vector<Int> nx;
      for (std::size_t i = 0; i + 1 < last.size(); ++i) nx.push_back(last[i + 1] - last[i]);
      diff.push_back(std::move(nx));
    }
    if (!D || m < *D + 2 + (*D < 0 ? 1 : 0)) continue;
    // Newton forward form in k = N - N0, converted to powers of N
    long N0 = start_index + v;
    std::vector<Rat> poly{0};
    std::vector<Rat> basis{1};  // prod_{i<d} (N - N0 - i) / d!
    for (int d = 0; d <= *D; ++d) {
      Rat c = diff[d][0];
      if (poly.size() < basis.size()) poly.resize(basis.size(), 0);
      for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += c * basis[i];
      std::vector<Rat> nb(basis.size() + 1, 0);
      Rat shift = -Rat(N0 + d);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        nb[i + 1] += basis[i] / (d + 1);
        nb[i] += basis[i] * shift / (d + 1);
      }
      basis = std::move(nb);
    }
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    return {poly, static_cast<int>(N0)};
  }
  throw no_fit("not-eventually-polynomial within the supplied range");
}

}  // namespace pk
