#pragma once

#include "qpoly.hpp"
#include "shapes.hpp"

namespace pk {

// 1 - q^k
inline QPoly one_minus_q(int k) { return QPoly(1) - q_pow(k); }

// [m]_q = 1 + q + ... + q^{m-1}
inline QPoly q_int(int m) {
  if (m <= 0) return {};
  return QPoly(0, std::vector<Int>(m, 1));
}

// Gaussian binomial [n, k]_q
inline QPoly qbinom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  k = std::min(k, n - k);
  // coefficients are the partition counts in a k x (n-k) box
  int w = n - k, deg = k * w;
  std::vector<std::vector<Int>> dp(k + 1, std::vector<Int>(deg + 1, 0));
  dp[0][0] = 1;
  // add parts of size 1..w, at most k parts
  for (int part = 1; part <= w; ++part)
    for (int cnt = 1; cnt <= k; ++cnt)
      for (int s = deg; s >= part; --s) dp[cnt][s] += dp[cnt - 1][s - part];
  // dp[c][s] counts partitions with c parts each of size <= current max, processed
  // in increasing part size, so each multiset appears once; sum over part counts
  std::vector<Int> c(deg + 1, 0);
  for (int cnt = 0; cnt <= k; ++cnt)
    for (int s = 0; s <= deg; ++s) c[s] += dp[cnt][s];
  return QPoly(0, std::move(c));
}

// q-multinomial [n; parts]_q with n = sum of parts (missing remainder is appended)
inline QPoly qmultinomial(int n, const std::vector<int>& parts) {
  QPoly r = 1;
  int left = n;
  for (int p : parts) {
    if (p < 0 || p > left) return {};
    r *= qbinom(left, p);
    left -= p;
  }
  return r;
}

inline QPoly exact_quotient(const QPoly& num, const QPoly& den) {
  QPoly out;
  if (!num.divide_exact(den, out)) throw std::logic_error("exact_quotient: division not exact");
  return out;
}

// q^{-n(lam)} s_lam(1, q, ..., q^{N-1}) via the hook-content formula
inline QPoly gen_gaussian(int N, const Partition& lam_in) {
  auto lam = trim(lam_in);
  if (static_cast<int>(lam.size()) > N) return {};
  if (lam.empty()) return 1;
  auto conj = conjugate(lam);
  QPoly num = 1, den = 1;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int content = j - static_cast<int>(i);
      int hook = lam[i] - j + conj[j] - static_cast<int>(i) - 1;
      num *= one_minus_q(N + content);
      den *= one_minus_q(hook);
    }
  return exact_quotient(num, den);
}

// B_q(n;k) = sum_{j=0}^{n-k} C(j+k-1, j) q^j
inline QPoly b_poly(int n, int k) {
  if (k < 1 || n < k) throw invalid_input("b_poly requires n >= k >= 1");
  std::vector<Int> c;
  for (int j = 0; j <= n - k; ++j) c.push_back(binomial(j + k - 1, j));
  return QPoly(0, std::move(c));
}

}  // namespace pk
