#pragma once

#include <bit>
#include <functional>
#include <map>
#include <optional>

#include "kostant.hpp"
#include "lr.hpp"
#include "qalg.hpp"
#include "shapes.hpp"

namespace pk {

// ---------------------------------------------------------------- keys

struct KostkaKey {
  Partition lambda;  // padded to n
  Composition mu;    // padded to n
  Composition eta;
  int n = 0;
};

inline KostkaKey make_key(const Partition& lam, const Composition& mu, const Composition& eta) {
  BlockStructure bs(eta);
  KostkaKey k;
  k.n = bs.n();
  k.eta = eta;
  if (!is_partition(lam)) throw invalid_input("lambda must be a partition");
  if (!is_composition(mu)) throw invalid_input("mu must be a composition");
  if (size(lam) != size(mu)) throw invalid_input("|lambda| must equal |mu|");
  if (static_cast<int>(mu.size()) > k.n && std::any_of(mu.begin() + k.n, mu.end(), [](int x) { return x != 0; }))
    throw invalid_input("ll(mu) exceeds |eta|");
  k.mu = mu;
  k.mu.resize(k.n, 0);
  k.lambda = lam;
  if (static_cast<int>(trim(lam).size()) > k.n) k.lambda.clear();  // K vanishes
  else k.lambda = pad(trim(lam), k.n);
  return k;
}

// a sequence of partitions (possibly with padding zeros) as (mu, eta)
inline KostkaKey make_key(const Partition& lam, const std::vector<std::vector<int>>& seq) {
  Composition mu, eta;
  for (auto& p : seq) {
    if (p.empty()) throw invalid_input("empty block in partition sequence");
    mu.insert(mu.end(), p.begin(), p.end());
    eta.push_back(static_cast<int>(p.size()));
  }
  return make_key(lam, mu, eta);
}

// ---------------------------------------------------------------- alternating sum

struct AltsumTerm {
  std::vector<int> perm;  // sigma: position i receives (lambda+delta)_{sigma(i)}
  int sign;
  Weight gamma;
  QPoly value;
};

// the nonvanishing terms of the permutation sum, found with prefix pruning on Y_eta
inline std::vector<AltsumTerm> altsum_terms(const KostkaKey& k) {
  std::vector<AltsumTerm> out;
  if (k.lambda.empty()) return out;
  int n = k.n;
  BlockStructure bs(k.eta);
  std::vector<int> A(n), B(n);
  for (int i = 0; i < n; ++i) {
    A[i] = k.lambda[i] + n - 1 - i;
    B[i] = k.mu[i] + n - 1 - i;
  }
  std::vector<int> perm(n), g(n);
  std::vector<char> used(n, 0);
  std::function<void(int, long, long, int)> rec = [&](int pos, long prefix_before_block, long neg_in_block, int inv) {
    if (pos == n) {
      QPoly v = kostant_rec(k.eta, g);
      if (!v.is_zero()) out.push_back({perm, (inv % 2) ? -1 : 1, g, v});
      return;
    }
    int b = bs.block_of(pos);
    long pb = prefix_before_block, nb = neg_in_block;
    if (pos == bs.r[b]) {
      // entering block b: prefix through r_{b} is the sum so far
      long s = 0;
      for (int i = 0; i < pos; ++i) s += g[i];
      pb = s;
      nb = 0;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int gv = A[v] - B[pos];
      long nb2 = nb + std::min(0, gv);
      if (pb + nb2 < 0) continue;
      int extra = 0;
      for (int u = v + 1; u < n; ++u) extra += used[u];
      used[v] = 1;
      perm[pos] = v;
      g[pos] = gv;
      rec(pos + 1, pb, nb2, inv + extra);
      used[v] = 0;
    }
  };
  rec(0, 0, 0, 0);
  return out;
}

inline QPoly kostka_altsum(const KostkaKey& k) {
  QPoly acc;
  for (auto& t : altsum_terms(k)) acc += t.sign > 0 ? t.value : -t.value;
  return acc;
}

// ---------------------------------------------------------------- fused peeling DP

namespace detail {

class FusedKostka {
 public:
  explicit FusedKostka(const KostkaKey& k) : k_(k), bs_(k.eta) {
    n_ = k.n;
    A_.resize(n_);
    B_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      A_[i] = k.lambda[i] + n_ - 1 - i;
      B_[i] = k.mu[i] + n_ - 1 - i;
    }
    amax_ = *std::max_element(A_.begin(), A_.end());
  }

  QPoly run() {
    std::vector<int> c(n_, 0);
    return F(n_ - 1, 0, c);
  }

 private:
  // positions m, m-1, ..., 0 remain; c[i] = outflow already committed by position i
  QPoly F(int m, unsigned mask, std::vector<int>& c) {
    if (m < 0) return 1;
    std::vector<int> key;
    key.reserve(m + 3);
    key.push_back(m);
    key.push_back(static_cast<int>(mask));
    key.insert(key.end(), c.begin(), c.begin() + m + 1);
    auto it = memoF_.find(key);
    if (it != memoF_.end()) return it->second;
    int b = bs_.block_of(m);
    int s = bs_.r[b];
    QPoly acc;
    for (int v = 0; v < n_; ++v) {
      if (mask >> v & 1u) continue;
      int r = c[m] - (A_[v] - B_[m]);
      if (r < 0 || (s == 0 && r != 0)) continue;
      int sign = std::popcount(mask & ((1u << v) - 1u)) & 1;
      unsigned nm = mask | (1u << v);
      QPoly sub = r == 0 ? F(m - 1, nm, c) : G(m, nm, 0, r, c);
      if (sub.is_zero()) continue;
      sub = sub.shifted(r);
      if (sign) acc -= sub;
      else acc += sub;
    }
    memoF_.emplace(std::move(key), acc);
    return acc;
  }

  // spread `rem` units of inflow of position m over sources k..r_b-1
  QPoly G(int m, unsigned mask, int k, int rem, std::vector<int>& c) {
    int s = bs_.r[bs_.block_of(m)];
    if (k == s - 1) {
      c[k] += rem;
      QPoly res = feasible(k, c) ? F(m - 1, mask, c) : QPoly();
      c[k] -= rem;
      return res;
    }
    std::vector<int> key;
    key.reserve(m + 4);
    key.push_back(m);
    key.push_back(static_cast<int>(mask));
    key.push_back(k);
    key.push_back(rem);
    key.insert(key.end(), c.begin(), c.begin() + m);
    auto it = memoG_.find(key);
    if (it != memoG_.end()) return it->second;
    QPoly acc;
    for (int a = 0; a <= rem; ++a) {
      c[k] += a;
      if (feasible(k, c)) acc += G(m, mask, k + 1, rem - a, c);
      c[k] -= a;
    }
    memoG_.emplace(std::move(key), acc);
    return acc;
  }

  // a block-1 position receives nothing, so its outflow equals its weight
  bool feasible(int k, const std::vector<int>& c) const {
    if (k < bs_.r[1]) return c[k] <= amax_ - B_[k];
    return true;
  }

  const KostkaKey& k_;
  BlockStructure bs_;
  int n_, amax_;
  std::vector<int> A_, B_;
  std::unordered_map<std::vector<int>, QPoly, VecHash> memoF_, memoG_;
};

}  // namespace detail

inline QPoly kostka_dp(const KostkaKey& k) {
  if (k.lambda.empty()) return {};
  if (k.n > 31) throw invalid_input("|eta| too large");
  return detail::FusedKostka(k).run();
}

enum class KostkaMethod { dp, altsum };

inline QPoly parabolic_kostka(const KostkaKey& k, KostkaMethod m = KostkaMethod::dp) {
  return m == KostkaMethod::dp ? kostka_dp(k) : kostka_altsum(k);
}

inline QPoly parabolic_kostka(const Partition& lam, const Composition& mu, const Composition& eta,
                              KostkaMethod m = KostkaMethod::dp) {
  return parabolic_kostka(make_key(lam, mu, eta), m);
}

// ---------------------------------------------------------------- (a,b,c,d)

struct ABCD {
  long a = 0, c = 0;
  Int b = 0, d = 0;
  bool operator==(const ABCD&) const = default;
};

inline ABCD abcd(const QPoly& K) {
  if (K.is_zero()) return {};
  return {K.low(), K.high(), K.coeff(K.low()), K.coeff(K.high())};
}

// ---------------------------------------------------------------- Kostka-Foulkes by charge

using Tableau = std::vector<std::vector<int>>;

// semistandard tableaux of shape lam and content mu, as horizontal-strip chains
inline std::vector<Tableau> ssyt(const Partition& lam_in, const Composition& mu) {
  auto lam = trim(lam_in);
  std::vector<Tableau> out;
  if (size(lam) != size(mu)) return out;
  Tableau T(lam.size());
  std::function<void(std::size_t, const Partition&)> rec = [&](std::size_t t, const Partition& sh) {
    if (t == mu.size()) {
      if (trim(sh) == lam) out.push_back(T);
      return;
    }
    for (auto& nx : add_horizontal_strip(sh, mu[t])) {
      if (!contains(lam, nx)) continue;
      auto shp = pad(sh, nx.size());
      for (std::size_t i = 0; i < nx.size(); ++i)
        for (int j = shp[i]; j < nx[i]; ++j) T[i].push_back(static_cast<int>(t) + 1);
      rec(t + 1, nx);
      for (std::size_t i = 0; i < nx.size(); ++i) T[i].resize(shp[i]);
    }
  };
  rec(0, {});
  return out;
}

inline std::vector<int> reading_word(const Tableau& T) {
  std::vector<int> w;
  for (auto it = T.rbegin(); it != T.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

// Lascoux-Schutzenberger charge of a word with partition content
inline long charge(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<char> used(n, 0);
  int left = n;
  long total = 0;
  while (left > 0) {
    int pos = n;  // start scanning just right of the end
    int letter = 1, index = 0;
    while (true) {
      int found = -1;
      for (int p = pos - 1; p >= 0; --p)
        if (!used[p] && w[p] == letter) {
          found = p;
          break;
        }
      if (found < 0) {
        for (int p = n - 1; p >= pos; --p)
          if (!used[p] && w[p] == letter) {
            found = p;
            break;
          }
        if (found < 0) break;
        if (letter > 1) ++index;
      }
      used[found] = 1;
      --left;
      total += index;
      pos = found;
      ++letter;
    }
  }
  return total;
}

inline QPoly kf_charge(const Partition& lam, const Partition& mu_in) {
  if (!is_partition(mu_in)) throw invalid_input("kf_charge needs a partition mu");
  auto mu = trim(mu_in);
  QPoly acc;
  std::map<long, long> cnt;
  for (auto& T : ssyt(lam, mu)) cnt[charge(reading_word(T))]++;
  for (auto& [e, c] : cnt) acc += QPoly::monomial(static_cast<int>(e), Int(c));
  return acc;
}

// K-bar(q) = q^{n(mu)} K(1/q)
inline QPoly kf_cocharge(const Partition& lam, const Partition& mu) {
  return kf_charge(lam, mu).inverted().shifted(static_cast<int>(n_stat(trim(mu))));
}

// K_{lam,(1^n)}(q) = q^{n(lam')} prod_i (1-q^i) / prod_x (1-q^{h(x)})
inline QPoly kf_standard(const Partition& lam_in) {
  auto lam = trim(lam_in);
  auto conj = conjugate(lam);
  QPoly num = 1, den = 1;
  for (int i = 1; i <= size(lam); ++i) num *= one_minus_q(i);
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) den *= one_minus_q(lam[i] - j + conj[j] - static_cast<int>(i) - 1);
  return exact_quotient(num, den).shifted(static_cast<int>(n_stat(conj)));
}

// ---------------------------------------------------------------- rectangles and fermionic formulas

struct Rect {
  int width, height;
  bool operator==(const Rect&) const = default;
};
using RectSequence = std::vector<Rect>;

inline bool is_dominant(const RectSequence& R) {
  for (std::size_t i = 1; i < R.size(); ++i)
    if (R[i].width > R[i - 1].width) return false;
  return true;
}

inline KostkaKey rect_key(const Partition& lam, const RectSequence& R) {
  Composition mu, eta;
  for (auto& r : R) {
    if (r.width < 0 || r.height <= 0) throw invalid_input("bad rectangle");
    for (int i = 0; i < r.height; ++i) mu.push_back(r.width);
    eta.push_back(r.height);
  }
  return make_key(lam, mu, eta);
}

inline long n_of(const RectSequence& R) {
  long s = 0;
  for (std::size_t a = 0; a < R.size(); ++a)
    for (std::size_t b = a + 1; b < R.size(); ++b)
      s += static_cast<long>(std::min(R[a].width, R[b].width)) * std::min(R[a].height, R[b].height);
  return s;
}

inline RectSequence transpose(const RectSequence& R) {
  RectSequence out;
  for (auto& r : R) out.push_back({r.height, r.width});
  std::stable_sort(out.begin(), out.end(), [](const Rect& a, const Rect& b) { return a.width > b.width; });
  return out;
}

namespace detail {

inline int Qn(const Partition& p, int n) {
  int s = 0;
  for (int x : p) s += std::min(x, n);
  return s;
}

inline int col(const Partition& p, int n) {  // n-th column length, 1-based
  int s = 0;
  for (int x : p) s += x >= n;
  return s;
}

inline int mult(const Partition& p, int n) {
  return static_cast<int>(std::count(p.begin(), p.end(), n));
}

inline long c2(long x) { return x * (x - 1) / 2; }

// shared engine: levels 1..L, nu[0] fixed, extra_vac(k,n) and extra_charge(k,n) supply
// the rectangle terms
inline QPoly fermionic_sum(const std::vector<int>& sizes, const Partition& nu0,
                           const std::function<int(int, int)>& extra_vac,
                           const std::function<int(int, int)>& extra_charge, int nmax_extra) {
  int L = static_cast<int>(sizes.size());  // levels 1..L; level L+1 is empty
  for (int s : sizes)
    if (s < 0) return {};
  std::vector<Partition> nu(L + 2);
  nu[0] = nu0;
  QPoly acc;
  auto vac = [&](int k, int n) {
    return Qn(nu[k - 1], n) - 2 * Qn(nu[k], n) + Qn(nu[k + 1], n) + extra_vac(k, n);
  };
  auto nbound = [&](int k) {
    int m = nmax_extra;
    for (int d = -1; d <= 1; ++d)
      if (!nu[k + d].empty()) m = std::max(m, nu[k + d][0]);
    return m + 1;
  };
  auto admissible_at = [&](int k) {
    for (int n = 1; n <= nbound(k); ++n)
      if (vac(k, n) < 0) return false;
    return true;
  };
  std::function<void(int)> rec = [&](int k) {
    // choose nu[k]; then check level k-1
    if (k == L + 1) {
      nu[k].clear();
      if (L >= 1 && !admissible_at(L)) return;
      long ch = 0;
      QPoly w = 1;
      int cmax = nmax_extra;
      for (int kk = 0; kk <= L; ++kk)
        if (!nu[kk].empty()) cmax = std::max(cmax, nu[kk][0]);
      for (int kk = 1; kk <= L + 1; ++kk)
        for (int n = 1; n <= cmax; ++n) {
          long x = col(nu[kk - 1], n) - col(nu[kk], n) + extra_charge(kk, n);
          ch += c2(x);
        }
      for (int kk = 1; kk <= L; ++kk) {
        if (nu[kk].empty()) continue;
        for (int n = 1; n <= nu[kk][0]; ++n) {
          int m = mult(nu[kk], n);
          if (m == 0) continue;
          w *= qbinom(vac(kk, n) + m, m);
        }
      }
      acc += w.shifted(static_cast<int>(ch));
      return;
    }
    for (auto& p : partitions_of(sizes[k - 1])) {
      nu[k] = p;
      if (k >= 2 && !admissible_at(k - 1)) continue;
      rec(k + 1);
    }
    nu[k].clear();
  };
  rec(1);
  return acc;
}

}  // namespace detail

// fermionic sum over admissible configurations of type (lambda; R)
inline QPoly kostka_fermionic(const Partition& lam_in, const RectSequence& R) {
  auto lam = trim(lam_in);
  long tot = 0;
  for (auto& r : R) tot += static_cast<long>(r.width) * r.height;
  if (size(lam) != tot) throw invalid_input("|lambda| must equal the total rectangle size");
  int hmax = 0, wmax = 0;
  for (auto& r : R) {
    hmax = std::max(hmax, r.height);
    wmax = std::max(wmax, r.width);
  }
  int L = std::max(static_cast<int>(lam.size()), hmax);
  std::vector<int> sizes;
  for (int k = 1; k <= L; ++k) {
    long s = 0;
    for (std::size_t j = k; j < lam.size(); ++j) s += lam[j];
    for (auto& r : R) s -= static_cast<long>(r.width) * std::max(r.height - k, 0);
    sizes.push_back(static_cast<int>(s));
  }
  while (!sizes.empty() && sizes.back() == 0) sizes.pop_back();
  auto ev = [&](int k, int n) {
    int s = 0;
    for (auto& r : R)
      if (r.height == k) s += std::min(r.width, n);
    return s;
  };
  auto ec = [&](int k, int n) {
    int s = 0;
    for (auto& r : R)
      if (r.height >= k && r.width >= n) ++s;
    return s;
  };
  // rectangle terms reach level hmax, so keep enough (possibly empty) levels
  while (static_cast<int>(sizes.size()) < hmax) sizes.push_back(0);
  return detail::fermionic_sum(sizes, {}, ev, ec, wmax);
}

// Kostka-Foulkes fermionic formula: nu^(0) = mu, no rectangle terms
inline QPoly kf_fermionic(const Partition& lam_in, const Partition& mu_in) {
  auto lam = trim(lam_in), mu = trim(mu_in);
  if (size(lam) != size(mu)) throw invalid_input("|lambda| must equal |mu|");
  std::vector<int> sizes;
  for (std::size_t k = 1; k < lam.size(); ++k) {
    int s = 0;
    for (std::size_t j = k; j < lam.size(); ++j) s += lam[j];
    sizes.push_back(s);
  }
  auto zero = [](int, int) { return 0; };
  return detail::fermionic_sum(sizes, mu, zero, zero, 0);
}

struct DualityResult {
  long nR;
  RectSequence Rt;
  QPoly lhs, rhs;
  bool holds;
};

// K_{lam' R'}(q) = q^{n(R)} K_{lam R}(1/q)
inline DualityResult duality_check(const Partition& lam, const RectSequence& R) {
  if (!is_dominant(R)) throw invalid_input("rectangle sequence must be dominant");
  DualityResult res;
  res.nR = n_of(R);
  res.Rt = transpose(R);
  QPoly K = parabolic_kostka(rect_key(lam, R));
  res.lhs = parabolic_kostka(rect_key(conjugate(trim(lam)), res.Rt));
  res.rhs = K.is_zero() ? QPoly() : K.inverted().shifted(static_cast<int>(res.nR));
  res.holds = res.lhs == res.rhs;
  return res;
}

// ---------------------------------------------------------------- restricted (level l) variants

inline int mod_l(long a, int l) { return static_cast<int>(((a % l) + l) % l); }

struct AffineImage {
  Partition image;  // w . mu, a partition
  int sign;
};

// dominant images w(x+delta)-delta of x under S_n x l*Q, with signs; n = x.size()
inline std::vector<AffineImage> affine_dominant_images(const Composition& x_in, int n, int l) {
  if (l < 1) throw invalid_input("level must be positive");
  Composition xc = pad(x_in, n);
  std::vector<long> x(n);
  for (int i = 0; i < n; ++i) x[i] = xc[i] + n - 1 - i;
  std::vector<int> owner(l, -1);
  for (int i = 0; i < n; ++i) {
    int r = mod_l(x[i], l);
    if (owner[r] >= 0) return {};  // fixed by an odd element, the sum cancels
    owner[r] = i;
  }
  std::vector<AffineImage> out;
  for (auto& p : partitions_of(size(xc), n)) {
    auto nu = pad(p, n);
    std::vector<int> sigma(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int r = mod_l(nu[i] + n - 1 - i, l);
      sigma[i] = owner[r];
      if (sigma[i] < 0) ok = false;
    }
    if (!ok) continue;
    std::vector<int> s2 = sigma;
    std::sort(s2.begin(), s2.end());
    if (std::unique(s2.begin(), s2.end()) != s2.end()) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += sigma[i] > sigma[j];
    out.push_back({nu, inv % 2 ? -1 : 1});
  }
  return out;
}

inline QPoly restricted_kostka(const Partition& lam, const Partition& mu, const Composition& eta, int l) {
  if (!is_partition(mu)) throw invalid_input("restricted_kostka needs a partition mu");
  auto key = make_key(lam, mu, eta);
  QPoly acc;
  for (auto& im : affine_dominant_images(key.mu, key.n, l)) {
    QPoly k = parabolic_kostka(lam, im.image, eta);
    acc += im.sign > 0 ? k : -k;
  }
  return acc;
}

// ---------------------------------------------------------------- skew Kostka-Foulkes

inline QPoly skew_kf(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (!contains(lam, mu)) throw invalid_input("mu must be contained in lambda");
  if (size(lam) != size(mu) + size(nu)) throw invalid_input("|lambda| must equal |mu|+|nu|");
  QPoly acc;
  for (auto& pi : partitions_of(size(nu))) {
    Int c = lr_coeff(mu, pi, lam);
    if (c == 0) continue;
    acc += kf_charge(pi, nu) * c;
  }
  return acc;
}

// cocharge variant: sum_pi c^lam_{mu pi} Kbar_{pi nu}(q)
inline QPoly skew_kf_cocharge(const Partition& lam, const Partition& mu, const Partition& nu) {
  QPoly acc;
  for (auto& pi : partitions_of(size(nu))) {
    Int c = lr_coeff(mu, pi, lam);
    if (c == 0) continue;
    acc += kf_cocharge(pi, nu) * c;
  }
  return acc;
}

// ---------------------------------------------------------------- one-dimensional sums

// sum_eta K_{eta mu}(1) K_{eta lam}(q)
inline QPoly one_dim_sum_def(const Partition& lam, const Composition& mu) {
  QPoly acc;
  auto lt = trim(lam);
  for (auto& eta : partitions_of(size(lt))) {
    if (!dominance_ge(eta, lt)) continue;
    Int a = kostka_number(eta, mu);
    if (a == 0) continue;
    acc += kf_charge(eta, lt) * a;
  }
  return acc;
}

// sum over flags 0 = nu0 < nu1 < ... < nun = lam with |nu_k| = mu_1+...+mu_k
inline QPoly one_dim_sum_flags(const Partition& lam_in, const Composition& mu) {
  auto lam = trim(lam_in);
  if (size(lam) != size(mu)) throw invalid_input("|lambda| must equal |mu|");
  int n = static_cast<int>(mu.size());
  std::vector<Partition> conj(n + 1);
  conj[0] = {};
  conj[n] = conjugate(lam);
  QPoly acc;
  auto cc = [](const Partition& c, int i) { return i < static_cast<int>(c.size()) ? c[i] : 0; };
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      long ch = 0;
      QPoly w = 1;
      for (int j = 0; j < n; ++j) {
        int width = std::max(conj[j + 1].size(), conj[j].size());
        for (int i = 0; i < width; ++i) ch += detail::c2(cc(conj[j + 1], i) - cc(conj[j], i));
      }
      for (int j = 1; j < n && !w.is_zero(); ++j) {
        int width = static_cast<int>(conj[j].size());
        for (int i = 0; i < width; ++i)
          w *= qbinom(cc(conj[j + 1], i) - cc(conj[j], i + 1), cc(conj[j], i) - cc(conj[j], i + 1));
      }
      acc += w.shifted(static_cast<int>(ch));
      return;
    }
    // nu_k: a partition of mu_1+..+mu_k between nu_{k-1} and lam
    Partition prev = conjugate(conj[k - 1]);
    int target = 0;
    for (int j = 0; j < k; ++j) target += mu[j];
    for (auto& p : partitions_of(target, static_cast<int>(lam.size()))) {
      if (!contains(lam, p) || !contains(p, prev)) continue;
      conj[k] = conjugate(p);
      rec(k + 1);
    }
  };
  if (n == 0) return size(lam) == 0 ? QPoly(1) : QPoly();
  rec(1);
  return acc;
}

inline QPoly one_dim_sum(const Partition& lam, const Composition& mu) { return one_dim_sum_def(lam, mu); }

// ---------------------------------------------------------------- Hall-Littlewood expansion

inline std::map<Partition, QPoly> hl_expansion(const Composition& mu, const Composition& eta) {
  std::map<Partition, QPoly> out;
  BlockStructure bs(eta);
  for (auto& lam : partitions_of(size(mu), bs.n())) {
    QPoly k = parabolic_kostka(lam, mu, eta);
    if (!k.is_zero()) out[lam] = k;
  }
  return out;
}

// ---------------------------------------------------------------- RSK-type identities

// equality up to a power of q; returns the shift s with a = q^s b
inline std::optional<int> q_shift_equal(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() ? std::optional<int>(0) : std::nullopt;
  int s = a.low() - b.low();
  if (a == b.shifted(s)) return s;
  return std::nullopt;
}

// sum_eta K_{eta lam}(q_or_1) K_{eta mu}(q_or_1)
inline QPoly kf_pair_sum(const Partition& lam, const Partition& mu, bool q_on_lam, bool q_on_mu) {
  QPoly acc;
  auto l = trim(lam), m = trim(mu);
  for (auto& eta : partitions_of(size(l))) {
    QPoly a = kf_charge(eta, l), b = kf_charge(eta, m);
    if (a.is_zero() || b.is_zero()) continue;
    if (!q_on_lam) a = a.at_one();
    if (!q_on_mu) b = b.at_one();
    acc += a * b;
  }
  return acc;
}

struct RskIdentity {
  std::string name;
  QPoly lhs, rhs;
  std::optional<int> shift;
};

// the three parabolic 1D-sum identities for partitions lam, mu of the same size and N >= |lam|
inline std::vector<RskIdentity> rsk_identities(const Partition& lam_in, const Partition& mu_in, int N) {
  auto lam = trim(lam_in), mu = trim(mu_in);
  if (size(lam) != size(mu)) throw invalid_input("|lambda| must equal |mu|");
  if (N < size(lam)) throw invalid_input("N must be at least |lambda|");
  int r = static_cast<int>(lam.size());
  Partition alpha(r, N);
  std::vector<RskIdentity> out;
  {
    std::vector<std::vector<int>> seq;
    for (int i = r - 1; i >= 0; --i) seq.push_back({N - lam[i]});
    for (int x : mu) seq.push_back({x});
    auto k = make_key(alpha, seq);
    RskIdentity id{"K(alpha,beta) = sum K(q)K(q)", parabolic_kostka(k), kf_pair_sum(lam, mu, true, true), {}};
    id.shift = q_shift_equal(id.lhs, id.rhs);
    out.push_back(id);
  }
  {
    std::vector<std::vector<int>> seq;
    for (int i = r - 1; i >= 0; --i) {
      std::vector<int> b(r, 0);
      b[0] = N - lam[i];
      seq.push_back(b);
    }
    for (int x : mu) seq.push_back({x});
    auto k = make_key(alpha, seq);
    RskIdentity id{"K(alpha,mu~) = sum K(1)K(q)", parabolic_kostka(k), kf_pair_sum(lam, mu, false, true), {}};
    id.shift = q_shift_equal(id.lhs, id.rhs);
    out.push_back(id);
  }
  {
    std::vector<std::vector<int>> seq;
    for (int i = r - 1; i >= 0; --i) seq.push_back({N - lam[i]});
    for (int x : mu) {
      std::vector<int> b(r, 0);
      b[0] = x;
      seq.push_back(b);
    }
    auto k = make_key(alpha, seq);
    RskIdentity id{"K(alpha,mu~0) = sum K(q)K(1)", parabolic_kostka(k), kf_pair_sum(lam, mu, true, false), {}};
    id.shift = q_shift_equal(id.lhs, id.rhs);
    out.push_back(id);
  }
  return out;
}

// K_{(n^N), ((n-1)^N, 1^N)}(1) and sum_{lam |- N, l(lam) <= n} f_lam^2
inline std::pair<Int, Int> dual_rsk_count(int n, int N) {
  Partition shape(N, n);
  Composition mu;
  for (int i = 0; i < N; ++i) mu.push_back(n - 1);
  for (int i = 0; i < N; ++i) mu.push_back(1);
  Int lhs = kostka_number(shape, mu);
  Int rhs = 0;
  Composition ones(N, 1);
  for (auto& lam : partitions_of(N, n)) {
    Int f = kostka_number(lam, ones);
    rhs += f * f;
  }
  return {lhs, rhs};
}

// dim GT(lam, (1^s)): (r-1)(s-1) - C(r,2) - sum_i C(m_i(lam),2), r = l(lam)
inline long gt_dimension(const Partition& lam_in, int s) {
  Partition lam = trim(lam_in);
  long r = static_cast<long>(lam.size());
  if (size(lam) != s) throw invalid_input("gt_dimension: |lambda| must equal s");
  if (r == 0 || r == s) return 0;  // lam = (1^s): a single pattern
  auto c2 = [](long x) { return x * (x - 1) / 2; };
  long d = (r - 1) * (s - 1) - c2(r);
  Partition lc = conjugate(lam);
  for (std::size_t i = 0; i < lc.size(); ++i) d -= c2(lc[i] - (i + 1 < lc.size() ? lc[i + 1] : 0));
  return d;
}

}  // namespace pk
