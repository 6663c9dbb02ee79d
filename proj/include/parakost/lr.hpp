#pragma once

#include <functional>
#include <map>

#include "qpoly.hpp"
#include "shapes.hpp"

namespace pk {

// Littlewood-Richardson coefficient c^nu_{lam,mu}, counted by LR tableaux of shape nu/lam
inline Int lr_coeff(const Partition& lam_in, const Partition& mu_in, const Partition& nu_in) {
  auto lam = trim(lam_in), mu = trim(mu_in), nu = trim(nu_in);
  if (size(lam) + size(mu) != size(nu) || !contains(nu, lam)) return 0;
  if (!is_partition(lam) || !is_partition(mu) || !is_partition(nu)) return 0;
  lam = pad(lam, nu.size());
  int rows = static_cast<int>(nu.size());
  int k = static_cast<int>(mu.size());
  std::vector<std::vector<int>> T(rows);
  for (int i = 0; i < rows; ++i) T[i].assign(nu[i], 0);
  std::vector<int> cnt(k + 1, 0);
  Int total = 0;
  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i == rows) {
      for (int v = 1; v <= k; ++v)
        if (cnt[v] != mu[v - 1]) return;
      ++total;
      return;
    }
    if (j < lam[i]) {
      fill(i + 1, i + 1 < rows ? nu[i + 1] - 1 : 0);
      return;
    }
    int hi = (j + 1 < nu[i]) ? T[i][j + 1] : k;
    int lo = 1;
    if (i > 0 && j < nu[i - 1] && j >= lam[i - 1]) lo = T[i - 1][j] + 1;
    hi = std::min(hi, std::min(k, i + 1));
    for (int v = lo; v <= hi; ++v) {
      if (cnt[v] >= mu[v - 1]) continue;
      if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;
      ++cnt[v];
      T[i][j] = v;
      fill(i, j - 1);
      --cnt[v];
    }
  };
  if (rows == 0) return size(mu) == 0 ? 1 : 0;
  fill(0, nu[0] - 1);
  return total;
}

// all partitions nu with nu/lam a horizontal strip of size s
inline std::vector<Partition> add_horizontal_strip(const Partition& lam_in, int s) {
  auto lam = trim(lam_in);
  std::vector<Partition> out;
  Partition cur = pad(lam, lam.size() + 1);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == cur.size()) {
      if (left == 0) out.push_back(trim(cur));
      return;
    }
    int base = cur[i];
    int cap = i == 0 ? left : std::min(left, lam[i - 1] - base);
    for (int a = 0; a <= cap; ++a) {
      cur[i] = base + a;
      rec(i + 1, left - a);
    }
    cur[i] = base;
  };
  rec(0, s);
  return out;
}

// number of semistandard tableaux of shape lam and content mu (mu any composition)
inline Int kostka_number(const Partition& lam_in, const Composition& mu) {
  auto lam = trim(lam_in);
  if (size(lam) != size(mu) || !is_composition(mu)) return 0;
  std::map<std::pair<std::size_t, Partition>, Int> memo;
  std::function<Int(std::size_t, const Partition&)> rec = [&](std::size_t t, const Partition& sh) -> Int {
    if (!contains(lam, sh)) return 0;
    if (t == mu.size()) return trim(sh) == lam ? 1 : 0;
    auto key = std::make_pair(t, sh);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int s = 0;
    for (auto& nx : add_horizontal_strip(sh, mu[t])) s += rec(t + 1, nx);
    memo[key] = s;
    return s;
  };
  return rec(0, {});
}

// s_lam * s_mu expanded in Schur functions, restricted to at most maxlen rows
inline std::map<Partition, Int> lr_product(const Partition& lam, const Partition& mu, int maxlen = 1 << 30) {
  std::map<Partition, Int> out;
  int n = size(lam) + size(mu);
  for (auto& nu : partitions_of(n, maxlen)) {
    if (!contains(nu, trim(lam)) || !contains(nu, trim(mu))) continue;
    Int c = lr_coeff(lam, mu, nu);
    if (c != 0) out[nu] = c;
  }
  return out;
}

}  // namespace pk
