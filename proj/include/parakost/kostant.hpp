#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "qalg.hpp"
#include "shapes.hpp"

namespace pk {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x7f)) * 0x100000001b3ULL;
    return h;
  }
};

// entry cap from PARAKOST_CACHE_CAP (0 or unset = unbounded)
inline std::size_t cache_cap_from_env() {
  const char* s = std::getenv("PARAKOST_CACHE_CAP");
  if (!s) return 0;
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (...) {
    return 0;
  }
}

template <class V>
class MemoCache {
 public:
  MemoCache() : cap_(cache_cap_from_env()) {}
  std::optional<V> find(const std::vector<int>& k) const {
    std::shared_lock lk(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::vector<int>& k, const V& v) {
    std::unique_lock lk(mu_);
    if (cap_ && map_.size() >= cap_) map_.clear();
    map_.emplace(k, v);
  }
  void clear() {
    std::unique_lock lk(mu_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lk(mu_);
    return map_.size();
  }
  void set_cap(std::size_t c) { cap_ = c; }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::vector<int>, V, VecHash> map_;
  std::size_t cap_;
};

// q-Kostant function for an arbitrary set of pairs (i<j, 1-based): brute-force
// enumeration of skew-symmetric matrices supported on the set
inline QPoly kostant_enum(const RootSet& sigma, const Weight& gamma) {
  int n = static_cast<int>(gamma.size());
  if (size(gamma) != 0) return {};
  struct {
    std::vector<std::vector<int>> in;  // in[j] = sources i of pairs (i,j)
    std::vector<int> last_out;         // largest target of i, -1 if none
    std::vector<long> R;               // outflow still owed by each coordinate
    std::map<long, unsigned long long> counts;
  } st;
  st.in.assign(n, {});
  st.last_out.assign(n, -1);
  for (auto [i, j] : sigma) {
    if (i < 1 || j > n || i >= j) throw invalid_input("root pair out of range");
    st.in[j - 1].push_back(i - 1);
    st.last_out[i - 1] = std::max(st.last_out[i - 1], j - 1);
  }
  for (auto& v : st.in) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  if (n == 0) return 1;
  st.R.assign(gamma.begin(), gamma.end());
  std::function<void(int, std::size_t, long)> col;
  std::function<void(int, long)> finish;
  col = [&](int j, std::size_t t, long mag) {
    const auto& src = st.in[j];
    if (t == src.size()) {
      finish(j, mag);
      return;
    }
    long cap = 0;
    for (std::size_t u = t; u < src.size(); ++u) cap += std::max(0L, st.R[src[u]]);
    if (st.R[j] + cap < 0) return;
    int i = src[t];
    long maxm = st.R[i];
    if (maxm < 0) return;
    bool closing_j = (t + 1 == src.size()) && st.last_out[j] < 0;
    bool closing_i = st.last_out[i] == j;
    if (closing_j || closing_i) {
      long m = closing_i ? maxm : -st.R[j];
      if (m < 0 || m > maxm) return;
      if (closing_j && st.R[j] + m != 0) return;
      st.R[i] -= m;
      st.R[j] += m;
      col(j, t + 1, mag + m);
      st.R[i] += m;
      st.R[j] -= m;
      return;
    }
    for (long m = 0; m <= maxm; ++m) {
      st.R[i] -= m;
      st.R[j] += m;
      col(j, t + 1, mag + m);
      st.R[i] += m;
      st.R[j] -= m;
    }
  };
  finish = [&](int j, long mag) {
    if (st.R[j] < 0) return;
    for (int i = 0; i <= j; ++i)
      if (st.last_out[i] <= j && st.R[i] != 0) return;
    if (j + 1 == n) {
      st.counts[mag] += 1;
      return;
    }
    col(j + 1, 0, mag);
  };
  col(0, 0, 0);
  QPoly out;
  for (auto& [e, c] : st.counts) out += QPoly::monomial(static_cast<int>(e), Int(std::to_string(c)));
  return out;
}

inline QPoly kostant_enum(const Composition& eta, const Weight& gamma) {
  BlockStructure bs(eta);
  if (static_cast<int>(gamma.size()) != bs.n()) throw invalid_input("gamma length must equal |eta|");
  return kostant_enum(phi_set(eta), gamma);
}

inline MemoCache<QPoly>& kostant_cache() {
  static MemoCache<QPoly> c;
  return c;
}

namespace detail {

inline std::vector<int> kostant_key(const Composition& eta, const Weight& g) {
  std::vector<int> k;
  k.reserve(eta.size() + g.size() + 1);
  k.insert(k.end(), eta.begin(), eta.end());
  k.push_back(-1000000);
  k.insert(k.end(), g.begin(), g.end());
  return k;
}

inline QPoly kostant_rec_impl(const Composition& eta_in, const Weight& g_in) {
  // canonical orientation: K(eta, g) = K(rev eta, -rev g)
  Composition eta = eta_in;
  Weight g = g_in;
  {
    Composition re(eta.rbegin(), eta.rend());
    Weight rg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) rg[i] = -g[g.size() - 1 - i];
    if (std::make_pair(re, rg) < std::make_pair(eta, g)) {
      eta.swap(re);
      g.swap(rg);
    }
  }
  BlockStructure bs(eta);
  if (!in_Y(g, bs)) return {};
  if (bs.p() == 1) return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; }) ? QPoly(1) : QPoly();
  auto key = kostant_key(eta, g);
  if (auto hit = kostant_cache().find(key)) return *hit;

  int n = bs.n();
  int last = g[n - 1];
  int m = bs.r[bs.p() - 1];  // sources are coordinates 0..m-1
  Composition eta2 = eta;
  if (--eta2.back() == 0) eta2.pop_back();
  Weight g2(g.begin(), g.end() - 1);
  QPoly acc;
  int need = -last;
  BlockStructure bs2(eta2);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      g2[i] -= left;
      if (in_Y(g2, bs2)) acc += kostant_rec_impl(eta2, g2);
      g2[i] += left;
      return;
    }
    for (int b = 0; b <= left; ++b) {
      g2[i] -= b;
      rec(i + 1, left - b);
      g2[i] += b;
    }
  };
  if (m > 0) rec(0, need);
  QPoly res = acc.shifted(need);
  kostant_cache().insert(key, res);
  return res;
}

}  // namespace detail

// memoized recurrence peeling the last coordinate
inline QPoly kostant_rec(const Composition& eta, const Weight& gamma) {
  BlockStructure bs(eta);
  if (static_cast<int>(gamma.size()) != bs.n()) throw invalid_input("gamma length must equal |eta|");
  if (size(gamma) != 0) return {};
  return detail::kostant_rec_impl(eta, gamma);
}

inline long kostant_top_degree(const Composition& eta, const Weight& gamma) {
  BlockStructure bs(eta);
  long s = 0;
  for (int k = 0; k < bs.p(); ++k)
    for (int i = bs.r[k]; i < bs.r[k + 1]; ++i) s += static_cast<long>(bs.p() - 1 - k) * gamma[i];
  return s;
}

struct KostantDegree {
  bool nonzero;
  long degree;
};

inline KostantDegree kostant_degree(const Composition& eta, const Weight& gamma) {
  BlockStructure bs(eta);
  if (static_cast<int>(gamma.size()) != bs.n()) throw invalid_input("gamma length must equal |eta|");
  if (size(gamma) != 0) throw invalid_input("gamma must sum to zero");
  bool nz = in_Y(gamma, bs);
  return {nz, nz ? kostant_top_degree(eta, gamma) : 0};
}

// number of non-negative integer matrices with given row and column sums
inline Int transportation_count(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (size(rows) != size(cols)) return 0;
  std::map<std::vector<int>, Int> memo;
  std::function<Int(std::size_t, std::vector<int>&)> rec = [&](std::size_t r, std::vector<int>& left) -> Int {
    if (r == rows.size()) return 1;
    if (r + 1 == rows.size()) return 1;  // the last row is forced and sums match
    std::vector<int> key = left;
    key.push_back(static_cast<int>(r));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t c, int rem) {
      if (c + 1 == left.size()) {
        if (rem > left[c]) return;
        left[c] -= rem;
        total += rec(r + 1, left);
        left[c] += rem;
        return;
      }
      for (int v = 0; v <= std::min(rem, left[c]); ++v) {
        left[c] -= v;
        fill(c + 1, rem - v);
        left[c] += v;
      }
    };
    if (left.empty()) total = rows[r] == 0 ? rec(r + 1, left) : Int(0);
    else fill(0, rows[r]);
    memo[key] = total;
    return total;
  };
  std::vector<int> left = cols;
  return rec(0, left);
}

inline bool in_Y_plus(const Weight& g, const BlockStructure& bs) {
  if (!in_Y(g, bs)) return false;
  int n = bs.n();
  for (int i = 0; i + 1 < n; ++i)
    if (g[i] < 0 || (i + 2 < n && g[i] < g[i + 1])) return false;
  return true;
}

// explicit formulas for at most four blocks; nullopt outside their domain
inline std::optional<QPoly> kostant_closed(const Composition& eta, const Weight& g) {
  BlockStructure bs(eta);
  if (static_cast<int>(g.size()) != bs.n() || size(g) != 0) throw invalid_input("bad gamma");
  int p = bs.p(), n = bs.n();
  if (p == 1) return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; }) ? QPoly(1) : QPoly();
  if (!in_Y(g, bs)) return QPoly();
  if (p == 2) {
    std::vector<int> rows(g.begin(), g.begin() + eta[0]), cols;
    for (int i = eta[0]; i < n; ++i) cols.push_back(-g[i]);
    return QPoly::monomial(size(rows), transportation_count(rows, cols));
  }
  if (p == 3 && n == 3) {
    int a = std::max(g[0], g[0] + g[1]), b = std::min(g[0], g[0] + g[1]);
    return q_int(b + 1).shifted(a);
  }
  if (!in_Y_plus(g, bs)) return std::nullopt;
  if (p == 3) {
    QPoly r = 1;
    for (int j = 0; j < eta[0]; ++j) r *= b_poly(g[j] + eta[1], eta[1]);
    return r.shifted(-g[n - 1]);
  }
  if (p == 4 && eta[0] == 1) {
    int e2 = eta[1], e3 = eta[2];
    QPoly acc;
    for (auto& beta : compositions_of(g[0], e2 + 1, true)) {
      QPoly t = b_poly(beta[0] + e3, e3);
      int sh = 0;
      for (int j = 1; j <= e2; ++j) {
        t *= b_poly(beta[j] + g[j] + e3, e3);
        sh += beta[j];
      }
      acc += t.shifted(sh);
    }
    return acc.shifted(-g[n - 1]);
  }
  return std::nullopt;
}

// q = 1 evaluation on the dominant chamber by the binomial beta-sum
inline Int dominant_value(const Composition& eta, const Weight& g) {
  BlockStructure bs(eta);
  int p = bs.p();
  if (p < 3) throw invalid_input("dominant_value needs at least three blocks");
  if (static_cast<int>(g.size()) != bs.n() || size(g) != 0 || !in_Y_plus(g, bs))
    throw invalid_input("gamma must lie in the dominant chamber");
  int m = bs.r[p - 2];
  std::vector<int> l(m);
  for (int k = 0; k < p - 2; ++k) {
    int s = 0;
    for (int j = k + 1; j <= p - 2; ++j) s += eta[j];
    for (int i = bs.r[k]; i < bs.r[k + 1]; ++i) l[i] = s;
  }
  Composition ehat(eta.begin(), eta.begin() + (p - 2));
  int L = size(l);
  Int total = 0;
  for (auto& beta : compositions_of(L, m, true)) {
    Weight arg(m);
    for (int i = 0; i < m; ++i) arg[i] = beta[i] - l[i];
    QPoly k = kostant_rec(ehat, arg);
    if (k.is_zero()) continue;
    Int prod = k.at_one();
    for (int j = 0; j < m && prod != 0; ++j) prod *= binomial(g[j] + l[j], beta[j]);
    total += prod;
  }
  return total;
}

// q-analog of the dominant chamber beta-sum, built from B_q factors
inline QPoly qrec_dominant(const Composition& eta, const Weight& g) {
  BlockStructure bs(eta);
  int p = bs.p(), n = bs.n();
  if (p < 3) throw invalid_input("qrec_dominant needs at least three blocks");
  if (static_cast<int>(g.size()) != n || size(g) != 0 || !in_Y_plus(g, bs))
    throw invalid_input("gamma must lie in the dominant chamber");
  int m = bs.r[p - 2], m3 = bs.r[p - 3], e = eta[p - 2];
  Composition ehat(eta.begin(), eta.begin() + (p - 2));
  Weight ghat(m, 0);
  for (int i = 0; i < m3; ++i) ghat[i] = g[i];
  int total = 0;
  for (int i = 0; i < m3; ++i) total += g[i];
  QPoly acc;
  for (auto& beta : compositions_of(total, m, true)) {
    Weight arg(m);
    for (int i = 0; i < m; ++i) arg[i] = ghat[i] - beta[i];
    QPoly k = kostant_rec(ehat, arg);
    if (k.is_zero()) continue;
    for (int j = 0; j < m3; ++j) k *= b_poly(beta[j] + e, e);
    for (int j = m3; j < m; ++j) k *= b_poly(g[j] + beta[j] + e, e);
    acc += k;
  }
  return acc.shifted(-g[n - 1]);
}

}  // namespace pk
