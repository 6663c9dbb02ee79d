#pragma once

#include <map>
#include <optional>

#include "kostant.hpp"
#include "kostka.hpp"
#include "lr.hpp"

namespace pk {

using SchurVector = std::map<Partition, Int>;
using PowerVector = std::map<Partition, Rat>;

struct CycleType {
  Partition rho;
  Int z;  // centralizer order prod i^{m_i} m_i!
};

inline Int z_of(const Partition& rho) {
  Int z = 1;
  std::map<int, int> m;
  for (int r : rho)
    if (r > 0) ++m[r];
  for (auto [i, k] : m) {
    Int ik;
    mpz_ui_pow_ui(ik.get_mpz_t(), i, k);
    z *= ik * factorial(k);
  }
  return z;
}

inline std::vector<CycleType> cycle_types(int n) {
  std::vector<CycleType> out;
  for (auto& rho : partitions_of(n)) out.push_back({rho, z_of(rho)});
  return out;
}

// ---------------------------------------------------------------- characters

namespace detail {

inline MemoCache<Int>& character_cache() {
  static MemoCache<Int> c;
  return c;
}

// Murnaghan-Nakayama on beta numbers; rho is consumed from the front
inline Int character_rec(const Partition& lam, const Partition& rho, std::size_t from) {
  if (from == rho.size()) return lam.empty() ? 1 : 0;
  std::vector<int> key = lam;
  key.push_back(-1);
  key.insert(key.end(), rho.begin() + static_cast<long>(from), rho.end());
  if (auto v = character_cache().find(key)) return *v;
  int L = static_cast<int>(lam.size());
  int r = rho[from];
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lam[i] + L - 1 - i;
  Int total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[i] - r;
    if (b < 0) continue;
    int between = 0;
    bool hit = false;
    for (int j = 0; j < L; ++j) {
      if (beta[j] == b) hit = true;
      if (beta[j] > b && beta[j] < beta[i]) ++between;
    }
    if (hit) continue;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.rbegin(), nb.rend());
    Partition mu(L);
    for (int j = 0; j < L; ++j) mu[j] = nb[j] - (L - 1 - j);
    Int v = character_rec(trim(mu), rho, from + 1);
    if (between % 2) total -= v;
    else total += v;
  }
  character_cache().insert(key, total);
  return total;
}

}  // namespace detail

inline Int character(const Partition& lam_in, const Partition& rho_in) {
  auto lam = trim(lam_in);
  auto rho = sorted_desc(trim(rho_in));
  if (!is_partition(lam) || !is_partition(rho)) throw invalid_input("character: arguments must be partitions");
  if (size(lam) != size(rho)) throw invalid_input("character: size mismatch");
  return detail::character_rec(lam, rho, 0);
}

inline Int character(const Partition& lam, const CycleType& c) { return character(lam, c.rho); }

// ---------------------------------------------------------------- skew shapes

inline SchurVector skew_schur_expand(const SkewDiagram& A) {
  Partition outer = trim(A.outer), inner = trim(A.inner);
  if (!is_partition(outer) || !is_partition(inner) || !contains(outer, inner))
    throw invalid_input("invalid skew diagram");
  SchurVector out;
  for (auto& nu : partitions_of(size(outer) - size(inner))) {
    if (!contains(outer, nu)) continue;
    Int c = lr_coeff(inner, nu, outer);
    if (c != 0) out[nu] = c;
  }
  return out;
}

inline Int character(const SkewDiagram& A, const Partition& rho) {
  Int s = 0;
  for (auto& [nu, c] : skew_schur_expand(A)) s += c * character(nu, rho);
  return s;
}

// number of standard tableaux of shape lam
inline Int standard_count(const Partition& lam) { return character(lam, Partition(size(lam), 1)); }

inline Int standard_count(const SkewDiagram& A) { return character(A, Partition(size(A), 1)); }

// ---------------------------------------------------------------- internal product

namespace detail {

inline Rat ratio(const Int& a, const Int& b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

inline std::vector<Int> class_values(const SkewDiagram& A, const std::vector<CycleType>& cls) {
  auto ex = skew_schur_expand(A);
  std::vector<Int> v;
  v.reserve(cls.size());
  for (auto& c : cls) {
    Int s = 0;
    for (auto& [nu, m] : ex) s += m * character(nu, c.rho);
    v.push_back(s);
  }
  return v;
}

inline Int exact_int(const Rat& r, const char* what) {
  if (r.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral result");
  return r.get_num();
}

}  // namespace detail

// g_{A,B,C} = <s_A * s_B, s_C>
inline Int internal_g(const SkewDiagram& A, const SkewDiagram& B, const SkewDiagram& C) {
  int n = size(A);
  if (size(B) != n || size(C) != n) throw invalid_input("internal_g: size mismatch");
  auto cls = cycle_types(n);
  auto a = detail::class_values(A, cls), b = detail::class_values(B, cls), c = detail::class_values(C, cls);
  Rat s = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) s += detail::ratio(a[i] * b[i] * c[i], cls[i].z);
  return detail::exact_int(s, "internal_g");
}

inline Int internal_g(const Partition& a, const Partition& b, const Partition& c) {
  return internal_g(make_skew(a), make_skew(b), make_skew(c));
}

// s_A * s_B in the Schur basis
inline SchurVector internal_product(const SkewDiagram& A, const SkewDiagram& B) {
  int n = size(A);
  if (size(B) != n) throw invalid_input("internal_product: size mismatch");
  auto cls = cycle_types(n);
  auto a = detail::class_values(A, cls), b = detail::class_values(B, cls);
  SchurVector out;
  for (auto& gam : partitions_of(n)) {
    Rat s = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) s += detail::ratio(a[i] * b[i] * character(gam, cls[i].rho), cls[i].z);
    Int g = detail::exact_int(s, "internal_product");
    if (g != 0) out[gam] = g;
  }
  return out;
}

// ---------------------------------------------------------------- L-polynomials

inline QPoly l_poly(const SkewDiagram& A, const SkewDiagram& B, const Partition& mu) {
  if (!is_partition(trim(mu))) throw invalid_input("l_poly: mu must be a partition");
  if (size(mu) != size(A)) throw invalid_input("l_poly: size mismatch");
  QPoly acc;
  for (auto& [gam, g] : internal_product(A, B)) {
    if (!dominance_ge(gam, mu)) continue;
    acc += kf_charge(gam, mu) * g;
  }
  return acc;
}

inline QPoly l_poly(const Partition& a, const Partition& b, const Partition& mu) {
  return l_poly(make_skew(a), make_skew(b), mu);
}

// L_{A,B}^mu(1) = <s_A * s_B, h_mu>, defined for any composition mu
inline Int l_at_one(const SkewDiagram& A, const SkewDiagram& B, const Composition& mu) {
  if (size(mu) != size(A)) throw invalid_input("l_at_one: size mismatch");
  Int acc = 0;
  for (auto& [gam, g] : internal_product(A, B)) acc += g * kostka_number(gam, mu);
  return acc;
}

// multiple LR coefficient c^lam_{parts[0],...,parts[k-1]}
inline Int multi_lr(const Partition& lam, const std::vector<Partition>& parts) {
  SchurVector cur{{Partition{}, 1}};
  int maxlen = length(lam);
  for (auto& p : parts) {
    SchurVector nx;
    for (auto& [nu, c] : cur)
      for (auto& [rho, d] : lr_product(nu, p, maxlen))
        if (contains(lam, rho)) nx[rho] += c * d;
    cur = std::move(nx);
  }
  auto it = cur.find(trim(lam));
  return it == cur.end() ? Int(0) : it->second;
}

// ---------------------------------------------------------------- extended LR

struct ExtendedLRKey {
  Partition lambda, mu, nu;
  int N0;      // max(|lam|+lam_1, |mu|+mu_1, |nu|+nu_1)
  int stable;  // max(N0, |lam|+|mu|+nu_1), where the value is known to be constant
};

inline ExtendedLRKey make_extended_key(const Partition& lam_in, const Partition& mu_in, const Partition& nu_in) {
  auto lam = trim(lam_in), mu = trim(mu_in), nu = trim(nu_in);
  if (!is_partition(lam) || !is_partition(mu) || !is_partition(nu)) throw invalid_input("partitions expected");
  if (size(lam) + size(mu) < size(nu)) throw invalid_input("extended LR needs |lambda|+|mu| >= |nu|");
  auto w = [](const Partition& p) { return size(p) + (p.empty() ? 0 : p[0]); };
  int n0 = std::max({w(lam), w(mu), w(nu)});
  int st = std::max(n0, size(lam) + size(mu) + (nu.empty() ? 0 : nu[0]));
  return {lam, mu, nu, n0, st};
}

// (N - |p|, p)
inline Partition pad_first_row(const Partition& p, int N) {
  Partition out{N - size(p)};
  out.insert(out.end(), p.begin(), p.end());
  return trim(out);
}

inline Int extended_lr(const Partition& lam, const Partition& mu, const Partition& nu) {
  auto k = make_extended_key(lam, mu, nu);
  auto at = [&](int N) {
    return internal_g(pad_first_row(k.lambda, N), pad_first_row(k.mu, N), pad_first_row(k.nu, N));
  };
  Int v = at(k.stable);
  if (at(k.stable + 1) != v) throw std::logic_error("extended_lr: value changed past the stability bound");
  return v;
}

struct StableL {
  QPoly value;
  int N;  // first N at which two consecutive values agree
};

inline StableL stable_l(const Partition& lam, const Partition& mu, const Partition& nu, int max_steps = 8) {
  auto k = make_extended_key(lam, mu, nu);
  auto at = [&](int N) {
    return l_poly(pad_first_row(k.lambda, N), pad_first_row(k.mu, N), pad_first_row(k.nu, N));
  };
  QPoly prev = at(k.N0);
  for (int N = k.N0 + 1; N <= k.stable + max_steps; ++N) {
    QPoly cur = at(N);
    if (cur == prev) return {cur, N - 1};
    prev = std::move(cur);
  }
  throw std::runtime_error("stable_l: no stabilization within the step limit");
}

// ---------------------------------------------------------------- restricted LR

inline Int restricted_lr(const Partition& lam, const Partition& mu, const Partition& nu, int l, int n) {
  if (size(lam) + size(mu) != size(nu)) throw invalid_input("restricted_lr needs |lambda|+|mu| = |nu|");
  if (length(nu) > n) throw invalid_input("restricted_lr needs l(nu) <= n");
  Int acc = 0;
  for (auto& im : affine_dominant_images(nu, n, l)) acc += im.sign * lr_coeff(lam, mu, im.image);
  return acc;
}

// ---------------------------------------------------------------- plethysm

inline int& plethysm_bound() {
  static int b = 24;
  return b;
}

namespace detail {

inline PowerVector p_multiply(const PowerVector& a, const PowerVector& b) {
  PowerVector out;
  for (auto& [pa, ca] : a)
    for (auto& [pb, cb] : b) {
      Partition u = pa;
      u.insert(u.end(), pb.begin(), pb.end());
      std::sort(u.rbegin(), u.rend());
      out[u] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

// s_mu in the power-sum basis
inline PowerVector schur_to_power(const Partition& mu) {
  PowerVector out;
  for (auto& c : cycle_types(size(mu))) {
    Int x = character(mu, c.rho);
    if (x != 0) out[c.rho] = detail::ratio(x, c.z);
  }
  return out;
}

inline SchurVector power_to_schur(const PowerVector& f, int n) {
  SchurVector out;
  for (auto& pi : partitions_of(n)) {
    Rat s = 0;
    for (auto& [tau, c] : f) s += c * character(pi, tau);
    Int v = detail::exact_int(s, "power_to_schur");
    if (v != 0) out[pi] = v;
  }
  return out;
}

// s_lam o s_mu (lam outer, mu inner) in the power-sum basis
inline PowerVector plethysm_power(const Partition& lam_in, const Partition& mu_in) {
  auto lam = trim(lam_in), mu = trim(mu_in);
  if (!is_partition(lam) || !is_partition(mu)) throw invalid_input("plethysm: partitions expected");
  int n = size(lam) * size(mu);
  if (n > plethysm_bound()) throw invalid_input("plethysm: |lambda||mu| exceeds the configured bound");
  auto inner = schur_to_power(mu);
  // p_k[s_mu] for each k that occurs
  std::map<int, PowerVector> pk_inner;
  auto inner_k = [&](int k) -> const PowerVector& {
    auto it = pk_inner.find(k);
    if (it != pk_inner.end()) return it->second;
    PowerVector v;
    for (auto& [s, c] : inner) v[scale(s, k)] = c;
    return pk_inner.emplace(k, std::move(v)).first->second;
  };
  PowerVector total;
  for (auto& c : cycle_types(size(lam))) {
    Int x = character(lam, c.rho);
    if (x == 0) continue;
    PowerVector term{{Partition{}, detail::ratio(x, c.z)}};
    for (int k : c.rho) term = detail::p_multiply(term, inner_k(k));
    for (auto& [t, v] : term) total[t] += v;
  }
  return total;
}

inline SchurVector plethysm(const Partition& lam, const Partition& mu) {
  return power_to_schur(plethysm_power(lam, mu), size(lam) * size(mu));
}

inline Int plethysm_coeff(const Partition& lam, const Partition& mu, const Partition& pi) {
  if (size(pi) != size(lam) * size(mu)) return 0;
  Rat s = 0;
  for (auto& [tau, c] : plethysm_power(lam, mu)) s += c * character(pi, tau);
  return detail::exact_int(s, "plethysm_coeff");
}

}  // namespace pk
