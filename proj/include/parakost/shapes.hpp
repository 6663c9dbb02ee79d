#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pk {

// Partitions keep their trailing zeros; trim() when the plain shape is wanted.
using Partition = std::vector<int>;
using Composition = std::vector<int>;
using Weight = std::vector<int>;

struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int size(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline bool is_partition(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i && v[i] > v[i - 1]) return false;
  }
  return true;
}

inline bool is_composition(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

inline std::vector<int> trim(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline std::vector<int> pad(std::vector<int> v, std::size_t n) {
  if (v.size() < n) v.resize(n, 0);
  return v;
}

inline int length(const std::vector<int>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

inline bool same_partition(const Partition& a, const Partition& b) { return trim(a) == trim(b); }

inline Partition sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

inline Partition conjugate(const Partition& lam) {
  Partition out;
  int m = lam.empty() ? 0 : *std::max_element(lam.begin(), lam.end());
  for (int i = 1; i <= m; ++i)
    out.push_back(static_cast<int>(std::count_if(lam.begin(), lam.end(), [i](int x) { return x >= i; })));
  return out;
}

inline bool dominance_ge(const Composition& lam, const Composition& mu) {
  if (size(lam) != size(mu)) throw invalid_input("dominance_ge: sizes differ");
  long a = 0, b = 0;
  std::size_t n = std::max(lam.size(), mu.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += i < lam.size() ? lam[i] : 0;
    b += i < mu.size() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

inline long n_stat(const Partition& lam) {
  long s = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) s += static_cast<long>(i) * lam[i];
  return s;
}

inline std::vector<int> concat(const std::vector<std::vector<int>>& parts) {
  std::vector<int> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline std::vector<int> scale(std::vector<int> v, int N) {
  for (auto& x : v) x *= N;
  return v;
}

inline bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    int o = i < outer.size() ? outer[i] : 0;
    if (inner[i] > o) return false;
  }
  return true;
}

struct SkewDiagram {
  Partition outer, inner;
  bool operator==(const SkewDiagram&) const = default;
};

inline SkewDiagram make_skew(Partition outer, Partition inner = {}) {
  if (!is_partition(outer) || !is_partition(inner) || !contains(outer, inner))
    throw invalid_input("invalid skew diagram");
  return {std::move(outer), std::move(inner)};
}

inline int size(const SkewDiagram& a) { return size(a.outer) - size(a.inner); }

struct BlockStructure {
  Composition eta;
  std::vector<int> r;  // r[0]=0 < r[1] < ... < r[p]=n

  explicit BlockStructure(Composition e) : eta(std::move(e)) {
    if (eta.empty()) throw invalid_input("empty block composition");
    r.push_back(0);
    for (int x : eta) {
      if (x <= 0) throw invalid_input("block composition needs positive parts");
      r.push_back(r.back() + x);
    }
  }
  int p() const { return static_cast<int>(eta.size()); }
  int n() const { return r.back(); }
  // 0-based block index of 0-based coordinate i
  int block_of(int i) const {
    return static_cast<int>(std::upper_bound(r.begin(), r.end(), i) - r.begin()) - 1;
  }
};

// pairs (i,j) are 1-based, i<j
using RootSet = std::vector<std::pair<int, int>>;

inline RootSet phi_set(const Composition& eta) {
  BlockStructure bs(eta);
  RootSet out;
  for (int i = 0; i < bs.n(); ++i)
    for (int j = i + 1; j < bs.n(); ++j)
      if (bs.block_of(i) != bs.block_of(j)) out.emplace_back(i + 1, j + 1);
  return out;
}

enum class YClass { outside, in_Y, in_Y_plus };

inline const char* to_string(YClass c) {
  switch (c) {
    case YClass::outside: return "outside";
    case YClass::in_Y: return "in_Y";
    default: return "in_Y_plus";
  }
}

inline bool in_Y(const Weight& g, const BlockStructure& bs) {
  long prefix = 0;
  for (int k = 0; k < bs.p(); ++k) {
    long neg = 0;
    for (int i = bs.r[k]; i < bs.r[k + 1]; ++i)
      if (g[i] < 0) neg += g[i];
    if (prefix + neg < 0) return false;
    for (int i = bs.r[k]; i < bs.r[k + 1]; ++i) prefix += g[i];
  }
  return true;
}

inline YClass y_membership(const Weight& g, const Composition& eta) {
  BlockStructure bs(eta);
  if (static_cast<int>(g.size()) != bs.n()) throw invalid_input("y_membership: length of gamma differs from |eta|");
  if (size(g) != 0) throw invalid_input("y_membership: gamma must sum to zero");
  if (!in_Y(g, bs)) return YClass::outside;
  for (int i = 0; i + 1 < bs.n(); ++i) {
    if (g[i] < 0) return YClass::in_Y;
    if (i + 2 < bs.n() && g[i] < g[i + 1]) return YClass::in_Y;
  }
  return YClass::in_Y_plus;
}

// eta2 is the concatenation of partitions whose sizes are the parts of eta1
inline bool is_subdivision(const Composition& eta2, const Composition& eta1) {
  std::size_t pos = 0;
  for (int target : eta1) {
    int acc = 0, prev = INT32_MAX;
    while (acc < target) {
      if (pos >= eta2.size() || eta2[pos] <= 0 || eta2[pos] > prev) return false;
      prev = eta2[pos];
      acc += eta2[pos++];
    }
    if (acc != target) return false;
  }
  return pos == eta2.size();
}

// all subdivisions of eta1 (each block split into a partition)
inline std::vector<Composition> subdivisions(const Composition& eta1);

// ---- partition enumeration ----

inline void partitions_rec(int n, int maxpart, int maxlen, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (maxlen == 0) return;
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, maxlen - 1, cur, out);
    cur.pop_back();
  }
}

// partitions of n in reverse lexicographic order, at most maxlen parts
inline std::vector<Partition> partitions_of(int n, int maxlen = 1 << 30, int maxpart = 1 << 30) {
  std::vector<Partition> out;
  Partition cur;
  if (n < 0) return out;
  partitions_rec(n, std::min(n, maxpart), maxlen, cur, out);
  return out;
}

inline std::vector<Composition> compositions_of(int n, int parts, bool allow_zero) {
  std::vector<Composition> out;
  Composition cur(parts, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == parts - 1) {
      if (left == 0 && !allow_zero) return;
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = allow_zero ? 0 : 1; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (parts == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, n);
  return out;
}

inline std::vector<Composition> subdivisions(const Composition& eta1) {
  std::vector<Composition> out{{}};
  for (int part : eta1) {
    std::vector<Composition> next;
    for (auto& head : out)
      for (auto& p : partitions_of(part)) {
        auto c = head;
        c.insert(c.end(), p.begin(), p.end());
        next.push_back(c);
      }
    out.swap(next);
  }
  return out;
}

// ---- diagram transforms used by the monotonicity conjectures ----

inline std::size_t common_length(const std::vector<Partition>& tuple) {
  std::size_t p = 0;
  for (auto& x : tuple) p = std::max(p, x.size());
  return p;
}

inline std::vector<Partition> transform_tilde(const std::vector<Partition>& tuple) {
  std::size_t k = tuple.size(), p = common_length(tuple);
  std::vector<int> all;
  for (auto& x : tuple) {
    auto y = pad(x, p);
    all.insert(all.end(), y.begin(), y.end());
  }
  std::sort(all.begin(), all.end(), std::greater<int>());
  std::vector<Partition> out(k, Partition(p));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < p; ++i) out[j][i] = all[j + i * k];
  return out;
}

inline std::pair<Partition, Partition> transform_star(const Partition& lam_in, const Partition& mu_in) {
  std::size_t p = std::max(lam_in.size(), mu_in.size());
  auto lam = pad(lam_in, p), mu = pad(mu_in, p);
  Partition ls(p), ms(p);
  for (std::size_t k = 0; k < p; ++k) {
    int key = lam[k] - static_cast<int>(k + 1), cnt = 0;
    for (std::size_t j = 0; j < p; ++j)
      if (mu[j] - static_cast<int>(j + 1) >= key) ++cnt;
    ls[k] = key + cnt;
  }
  for (std::size_t j = 0; j < p; ++j) {
    int key = mu[j] - static_cast<int>(j + 1), cnt = 0;
    for (std::size_t k = 0; k < p; ++k)
      if (lam[k] - static_cast<int>(k + 1) > key) ++cnt;
    ms[j] = key + 1 + cnt;
  }
  return {ls, ms};
}

inline int floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<int>(q);
}

inline std::vector<Partition> transform_ceil(const std::vector<Partition>& tuple) {
  int k = static_cast<int>(tuple.size());
  std::size_t p = common_length(tuple);
  std::vector<Partition> out(k, Partition(p));
  for (std::size_t i = 0; i < p; ++i) {
    long s = 0;
    for (auto& x : tuple) s += i < x.size() ? x[i] : 0;
    for (int j = 1; j <= k; ++j) out[j - 1][i] = floor_div(s + k - j, k);
  }
  return out;
}

inline std::vector<Partition> conjugate_all(const std::vector<Partition>& tuple) {
  std::vector<Partition> out;
  for (auto& x : tuple) out.push_back(conjugate(x));
  return out;
}

// conjugate ∘ tilde ∘ conjugate
inline std::vector<Partition> transform_dagger(const std::vector<Partition>& tuple) {
  return conjugate_all(transform_tilde(conjugate_all(tuple)));
}

// conjugate ∘ ceil ∘ conjugate
inline std::vector<Partition> transform_sharp(const std::vector<Partition>& tuple) {
  return conjugate_all(transform_ceil(conjugate_all(tuple)));
}

// conjugate ∘ star ∘ conjugate
inline std::pair<Partition, Partition> transform_ddagger(const Partition& lam, const Partition& mu) {
  auto [a, b] = transform_star(conjugate(lam), conjugate(mu));
  return {conjugate(a), conjugate(b)};
}

namespace detail {
template <class F>
std::vector<SkewDiagram> apply_skew(const std::vector<SkewDiagram>& ds, F f) {
  std::vector<Partition> outs, ins;
  for (auto& d : ds) {
    outs.push_back(d.outer);
    ins.push_back(d.inner);
  }
  auto o = f(outs), i = f(ins);
  std::vector<SkewDiagram> res;
  for (std::size_t j = 0; j < ds.size(); ++j) res.push_back({o[j], i[j]});
  return res;
}
}  // namespace detail

inline std::vector<SkewDiagram> transform_tilde(const std::vector<SkewDiagram>& ds) {
  return detail::apply_skew(ds, [](auto& t) { return transform_tilde(t); });
}
inline std::vector<SkewDiagram> transform_ceil(const std::vector<SkewDiagram>& ds) {
  return detail::apply_skew(ds, [](auto& t) { return transform_ceil(t); });
}
inline std::vector<SkewDiagram> transform_dagger(const std::vector<SkewDiagram>& ds) {
  return detail::apply_skew(ds, [](auto& t) { return transform_dagger(t); });
}
inline std::vector<SkewDiagram> transform_sharp(const std::vector<SkewDiagram>& ds) {
  return detail::apply_skew(ds, [](auto& t) { return transform_sharp(t); });
}
inline std::pair<SkewDiagram, SkewDiagram> transform_star(const SkewDiagram& a, const SkewDiagram& b) {
  auto [o1, o2] = transform_star(a.outer, b.outer);
  auto [i1, i2] = transform_star(a.inner, b.inner);
  return {{o1, i1}, {o2, i2}};
}
inline std::pair<SkewDiagram, SkewDiagram> transform_ddagger(const SkewDiagram& a, const SkewDiagram& b) {
  auto [o1, o2] = transform_ddagger(a.outer, b.outer);
  auto [i1, i2] = transform_ddagger(a.inner, b.inner);
  return {{o1, i1}, {o2, i2}};
}

}  // namespace pk
