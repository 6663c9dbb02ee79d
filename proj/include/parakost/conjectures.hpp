#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "kostka.hpp"
#include "symfun.hpp"

namespace pk {

using json = nlohmann::json;

struct Bounds {
  int max_size = 6;     // |lambda|
  int max_eta_len = 4;  // |eta|, the number of coordinates
  int max_scale = 3;    // N
  bool partitions_only = false;
  bool operator==(const Bounds&) const = default;
};

inline json to_json(const Bounds& b) {
  return {{"max_size", b.max_size}, {"max_eta_len", b.max_eta_len}, {"max_scale", b.max_scale},
          {"partitions_only", b.partitions_only}};
}

inline Bounds bounds_from_json(const json& j) {
  Bounds b;
  b.max_size = j.at("max_size").get<int>();
  b.max_eta_len = j.at("max_eta_len").get<int>();
  b.max_scale = j.at("max_scale").get<int>();
  b.partitions_only = j.value("partitions_only", false);
  return b;
}

inline void validate(const Bounds& b) {
  if (b.max_size <= 0 || b.max_eta_len <= 0 || b.max_scale <= 0) throw invalid_input("bounds must be positive");
}

enum class Verdict { verified_up_to_bound, counterexample_found, known_failure_reproduced };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified_up_to_bound: return "verified-up-to-bound";
    case Verdict::counterexample_found: return "counterexample-found";
    default: return "known-failure-reproduced";
  }
}

struct Counterexample {
  json key;
  std::string witness;
};

struct CheckReport {
  std::string conjecture;
  Bounds bounds;
  long tested = 0;
  long skipped = 0;  // instances outside the hypothesis of the statement
  std::vector<Counterexample> counterexamples;
  std::vector<json> known_failures;  // reproduced failures of a statement known to be false
  std::vector<json> notes;
  std::map<std::string, long> failures_by_part;  // tag before ':' in the witness
  Verdict verdict = Verdict::verified_up_to_bound;
  long next_index = 0;  // for resuming
};

inline json to_json(const CheckReport& r) {
  json ce = json::array();
  for (auto& c : r.counterexamples) ce.push_back({{"key", c.key}, {"witness", c.witness}});
  return {{"schema", 1},
          {"conjecture", r.conjecture},
          {"bounds", to_json(r.bounds)},
          {"tested", r.tested},
          {"skipped", r.skipped},
          {"counterexamples", ce},
          {"known_failures", r.known_failures},
          {"notes", r.notes},
          {"failures_by_part", r.failures_by_part},
          {"verdict", to_string(r.verdict)},
          {"next_index", r.next_index}};
}

inline CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.conjecture = j.at("conjecture").get<std::string>();
  r.bounds = bounds_from_json(j.at("bounds"));
  r.tested = j.at("tested").get<long>();
  r.skipped = j.value("skipped", 0L);
  for (auto& c : j.at("counterexamples")) r.counterexamples.push_back({c.at("key"), c.at("witness").get<std::string>()});
  for (auto& k : j.value("known_failures", json::array())) r.known_failures.push_back(k);
  for (auto& n : j.value("notes", json::array())) r.notes.push_back(n);
  r.next_index = j.value("next_index", 0L);
  return r;
}

// one instance outcome
struct Outcome {
  bool tested = true;
  std::optional<std::string> witness;  // set when the statement fails
  std::optional<json> note;
  static Outcome skip() { return {false, std::nullopt, std::nullopt}; }
  static Outcome pass() { return {}; }
  static Outcome fail(std::string w) { return {true, std::move(w), std::nullopt}; }
};

using InstanceTest = std::function<Outcome(const json&)>;

struct RunOptions {
  int threads = 0;  // 0 = hardware concurrency
  std::optional<std::string> resume_file;
  long checkpoint_every = 2000;
};

inline int resolve_threads(int t) {
  if (t > 0) return t;
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

namespace detail {

inline void write_checkpoint(const std::string& path, const CheckReport& r) {
  auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << to_json(r).dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

// instances are processed in order; results of a chunk are merged by index
inline void run_instances(CheckReport& r, const std::vector<json>& inst, const InstanceTest& test,
                          const RunOptions& opt) {
  if (opt.resume_file && std::filesystem::exists(*opt.resume_file)) {
    std::ifstream in(*opt.resume_file);
    auto prev = report_from_json(json::parse(in));
    if (prev.conjecture != r.conjecture || !(prev.bounds == r.bounds))
      throw invalid_input("resume file belongs to a different run");
    prev.known_failures = r.known_failures;
    prev.notes.insert(prev.notes.begin(), r.notes.begin(), r.notes.end());
    r = prev;
  }
  int T = resolve_threads(opt.threads);
  long total = static_cast<long>(inst.size());
  long chunk = std::max<long>(1, opt.checkpoint_every);
  while (r.next_index < total) {
    long lo = r.next_index, hi = std::min(total, lo + chunk);
    std::vector<Outcome> res(hi - lo);
    std::atomic<long> next{lo};
    auto work = [&] {
      for (long i; (i = next++) < hi;) res[i - lo] = test(inst[i]);
    };
    if (T == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < T; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (long i = lo; i < hi; ++i) {
      auto& o = res[i - lo];
      if (!o.tested) {
        ++r.skipped;
        continue;
      }
      ++r.tested;
      if (o.witness) r.counterexamples.push_back({inst[i], *o.witness});
      if (o.note) r.notes.push_back(*o.note);
    }
    r.next_index = hi;
    if (opt.resume_file) write_checkpoint(*opt.resume_file, r);
  }
}

inline void finish(CheckReport& r) {
  r.failures_by_part.clear();
  for (auto& c : r.counterexamples) ++r.failures_by_part[c.witness.substr(0, c.witness.find(':'))];
  if (!r.counterexamples.empty()) r.verdict = Verdict::counterexample_found;
  else if (!r.known_failures.empty()) r.verdict = Verdict::known_failure_reproduced;
  else r.verdict = Verdict::verified_up_to_bound;
}

inline Partition P(const json& j) { return j.get<Partition>(); }

inline std::string pstr(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// p <= q coefficientwise
inline bool poly_le(const QPoly& p, const QPoly& q) { return (q - p).nonnegative(); }

}  // namespace detail

// floor((sum_j p_j x^(j) + N - i) / N), i = 1..N
inline std::vector<Composition> weighted_rounding(const std::vector<Composition>& xs, const std::vector<int>& p, int N) {
  std::size_t len = 0;
  for (auto& x : xs) len = std::max(len, x.size());
  std::vector<Composition> out(N, Composition(len, 0));
  for (std::size_t c = 0; c < len; ++c) {
    long s = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) s += static_cast<long>(p[j]) * (c < xs[j].size() ? xs[j][c] : 0);
    for (int i = 1; i <= N; ++i) out[i - 1][c] = floor_div(s + N - i, N);
  }
  return out;
}

// ---------------------------------------------------------------- instance families

// each block of mu is weakly decreasing, i.e. mu is a sequence of partitions cut by eta
inline bool compatible(const Composition& mu, const Composition& eta) {
  std::size_t pos = 0;
  for (int e : eta)
    for (int i = 0; i < e; ++i, ++pos)
      if (i > 0 && pos < mu.size() && mu[pos] > mu[pos - 1]) return false;
  return true;
}

// (lambda, mu, eta) with mu compatible with eta, sorted by |lambda|, then eta, lambda, mu
inline std::vector<json> kostka_instances(const Bounds& b) {
  std::vector<json> out;
  for (int s = 1; s <= b.max_size; ++s) {
    std::vector<Composition> etas;
    for (int n = 1; n <= b.max_eta_len; ++n)
      for (int parts = 1; parts <= n; ++parts)
        for (auto& e : compositions_of(n, parts, false)) etas.push_back(e);
    std::sort(etas.begin(), etas.end());
    for (auto& eta : etas) {
      int n = size(eta);
      auto lams = partitions_of(s, n);
      std::sort(lams.begin(), lams.end());
      std::vector<Composition> mus;
      if (b.partitions_only) {
        for (auto& m : partitions_of(s, n)) mus.push_back(pad(m, n));
      } else {
        for (auto& m : compositions_of(s, n, true))
          if (compatible(m, eta)) mus.push_back(m);
      }
      std::sort(mus.begin(), mus.end());
      for (auto& lam : lams)
        for (auto& mu : mus) out.push_back({{"lambda", lam}, {"mu", mu}, {"eta", eta}});
    }
  }
  return out;
}

inline QPoly kostka_of(const json& k) {
  return parabolic_kostka(detail::P(k.at("lambda")), detail::P(k.at("mu")), detail::P(k.at("eta")));
}

inline QPoly kostka_scaled(const json& k, int N) {
  return parabolic_kostka(scale(detail::P(k.at("lambda")), N), scale(detail::P(k.at("mu")), N), detail::P(k.at("eta")));
}

// ---------------------------------------------------------------- generalized saturation

inline Outcome gsc_scaling(const json& k, int max_scale) {
  QPoly K = kostka_of(k);
  if (K.is_zero()) return Outcome::skip();
  bool mu_part = is_partition(detail::P(k.at("mu")));
  for (int N = 2; N <= max_scale; ++N) {
    QPoly KN = kostka_scaled(k, N);
    if (KN.is_zero()) return Outcome::fail("vanishing: K = 0 at N=" + std::to_string(N));
    if (KN.high() != static_cast<long>(N) * K.high())
      return Outcome::fail("c-linear: c(N)=" + std::to_string(KN.high()) + " at N=" + std::to_string(N) + ", c(1)=" +
                           std::to_string(K.high()));
    if (mu_part && KN.low() != static_cast<long>(N) * K.low())
      return Outcome::fail("a-linear: a(N)=" + std::to_string(KN.low()) + " at N=" + std::to_string(N) + ", a(1)=" +
                           std::to_string(K.low()));
  }
  return Outcome::pass();
}

// key: {"eta", "pairs":[[lambda,mu],...], "p":[...], "N"}
inline Outcome gsc_mixed(const json& k) {
  auto eta = detail::P(k.at("eta"));
  auto p = k.at("p").get<std::vector<int>>();
  int N = k.at("N").get<int>();
  std::vector<Composition> lams, mus;
  long lhs = 0;
  for (std::size_t j = 0; j < k.at("pairs").size(); ++j) {
    auto& pr = k.at("pairs")[j];
    lams.push_back(detail::P(pr[0]));
    mus.push_back(detail::P(pr[1]));
    QPoly K = parabolic_kostka(lams.back(), mus.back(), eta);
    if (K.is_zero()) return Outcome::skip();
    lhs += static_cast<long>(p[j]) * K.high();
  }
  auto lh = weighted_rounding(lams, p, N), mh = weighted_rounding(mus, p, N);
  for (int i = 0; i < N; ++i)
    if (size(lh[i]) != size(mh[i])) return Outcome::skip();
  long rhs = 0;
  for (int i = 0; i < N; ++i) {
    QPoly K = parabolic_kostka(lh[i], mh[i], eta);
    if (K.is_zero())
      return Outcome::fail("mixed: K = 0 at the rounded pair " + detail::pstr(lh[i]) + "," + detail::pstr(mh[i]));
    rhs += K.high();
  }
  if (lhs != rhs) return Outcome::fail("mixed: sum p_j c = " + std::to_string(lhs) + ", rounded sum = " + std::to_string(rhs));
  return Outcome::pass();
}

inline Outcome gsc_instance(const json& k, int max_scale) {
  if (k.contains("pairs")) return gsc_mixed(k);
  return gsc_scaling(k, max_scale);
}

// deterministic sample of pairs sharing eta: neighbours at distance 1 and 5
inline std::vector<json> gsc_mixed_instances(const std::vector<json>& base) {
  std::map<Composition, std::vector<std::size_t>> by_eta;
  for (std::size_t i = 0; i < base.size(); ++i) by_eta[detail::P(base[i].at("eta"))].push_back(i);
  struct Mix {
    std::vector<int> p;
    int N;
  };
  const std::vector<Mix> mixes{{{1, 1}, 2}, {{1, 2}, 3}, {{1, 1}, 3}};
  std::vector<json> out;
  for (auto& [eta, idx] : by_eta)
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t d : {1u, 5u}) {
        if (a + d >= idx.size()) continue;
        auto& x = base[idx[a]];
        auto& y = base[idx[a + d]];
        for (auto& m : mixes)
          out.push_back({{"eta", eta},
                         {"pairs", {{x.at("lambda"), x.at("mu")}, {y.at("lambda"), y.at("mu")}}},
                         {"p", m.p},
                         {"N", m.N}});
      }
  return out;
}

inline CheckReport check_gsc(const Bounds& b, const RunOptions& opt = {}) {
  validate(b);
  CheckReport r{"gsc", b};
  auto inst = kostka_instances(b);
  auto mixed = gsc_mixed_instances(inst);
  inst.insert(inst.end(), mixed.begin(), mixed.end());
  int S = b.max_scale;
  detail::run_instances(r, inst, [S](const json& k) { return gsc_instance(k, S); }, opt);
  detail::finish(r);
  return r;
}

// ---------------------------------------------------------------- positivity and non-vanishing

inline Outcome positivity_instance(const json& k) {
  auto lam = detail::P(k.at("lambda")), mu = detail::P(k.at("mu")), eta = detail::P(k.at("eta"));
  int n = size(eta);
  QPoly K = parabolic_kostka(lam, mu, eta);
  Weight g(n);
  auto lp = pad(lam, n), mp = pad(mu, n);
  for (int i = 0; i < n; ++i) g[i] = lp[i] - mp[i];
  bool inY = y_membership(g, eta) != YClass::outside;
  if (K.is_zero() != !inY)
    return Outcome::fail(std::string("nonvanishing: K ") + (K.is_zero() ? "vanishes" : "nonzero") + " while lambda-mu is " +
                         (inY ? "in" : "outside") + " Y_eta");
  if (K.is_zero()) return Outcome::pass();
  if (K.coeff(K.high()) <= 0) return Outcome::fail("leading-coefficient: d = " + K.coeff(K.high()).get_str());
  QPoly KP = kostant_rec(eta, g);
  if (!detail::poly_le(K, KP)) return Outcome::fail("kostant-bound: K=" + K.str() + " exceeds K_Phi=" + KP.str());
  return Outcome::pass();
}

inline CheckReport check_positivity_nonvanishing(const Bounds& b, const RunOptions& opt = {}) {
  validate(b);
  CheckReport r{"positivity", b};
  detail::run_instances(r, kostka_instances(b), positivity_instance, opt);
  detail::finish(r);
  return r;
}

// ---------------------------------------------------------------- Fulton-type leading coefficients

inline Outcome fulton_instance(const json& k, int max_scale) {
  QPoly K = kostka_of(k);
  if (K.is_zero()) return Outcome::skip();
  Int d = K.coeff(K.high());
  if (d > 3) return Outcome::skip();
  std::vector<Int> ds{d};
  for (int N = 2; N <= max_scale; ++N) {
    QPoly KN = kostka_scaled(k, N);
    ds.push_back(KN.is_zero() ? Int(0) : KN.coeff(KN.high()));
  }
  auto pattern = [&](auto f) {
    for (int N = 1; N <= max_scale; ++N)
      if (ds[N - 1] != f(N)) return false;
    return true;
  };
  bool ok = false;
  if (d == 1) ok = pattern([](int) { return Int(1); });
  if (d == 2) ok = pattern([](int N) { return Int(N + 1); });
  if (d == 3) ok = pattern([](int N) { return Int(2 * N + 1); }) || pattern([](int N) { return binomial(N + 2, 2); });
  if (ok) return Outcome::pass();
  std::string w = "d=" + d.get_str() + ": d(N) =";
  for (auto& x : ds) w += " " + x.get_str();
  return Outcome::fail(w);
}

inline CheckReport check_fulton_d(const Bounds& b, const RunOptions& opt = {}) {
  validate(b);
  CheckReport r{"fulton", b};
  int S = b.max_scale;
  detail::run_instances(r, kostka_instances(b), [S](const json& k) { return fulton_instance(k, S); }, opt);
  detail::finish(r);
  return r;
}

// ---------------------------------------------------------------- log-concavity

// partitions with at most `rows` parts and largest part at most `maxpart`, including the empty one
inline std::vector<Partition> partitions_of_at_most(int rows, int maxpart) {
  std::vector<Partition> out;
  for (int n = 0; n <= rows * maxpart; ++n)
    for (auto& p : partitions_of(n, rows, maxpart)) out.push_back(trim(p));
  return out;
}

inline std::vector<Partition> sub_partitions(const Partition& alpha) {
  std::vector<Partition> out;
  for (auto& p : partitions_of_at_most(static_cast<int>(alpha.size()), alpha.empty() ? 0 : alpha[0]))
    if (contains(alpha, p)) out.push_back(p);
  return out;
}

// det of a square matrix of polynomials by cofactor expansion (small sizes only)
inline QPoly poly_det(const std::vector<std::vector<QPoly>>& m) {
  std::size_t n = m.size();
  if (n == 0) return QPoly(1);
  if (n == 1) return m[0][0];
  QPoly s;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<QPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<QPoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    QPoly t = m[0][c] * poly_det(minor);
    if (c % 2) s -= t;
    else s += t;
  }
  return s;
}

// det(g_{alpha_i - beta_j - i + j}), g_m = 0 for m < 0
inline QPoly toeplitz_det(const std::vector<QPoly>& g, const Partition& alpha, const Partition& beta_in) {
  std::size_t r = alpha.size();
  auto beta = pad(beta_in, r);
  std::vector<std::vector<QPoly>> m(r, std::vector<QPoly>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      long idx = alpha[i] - beta[j] - static_cast<long>(i) + static_cast<long>(j);
      if (idx < 0) continue;
      if (idx >= static_cast<long>(g.size())) throw invalid_input("toeplitz_det: sequence too short");
      m[i][j] = g[idx];
    }
  return poly_det(m);
}

inline std::vector<QPoly> scaled_sequence(const Partition& lam, const Composition& mu, const Composition& eta, int S) {
  std::vector<QPoly> g{QPoly(1)};
  for (int N = 1; N <= S; ++N) g.push_back(parabolic_kostka(scale(lam, N), scale(mu, N), eta));
  return g;
}

inline Outcome logconcave_instance(const json& k, int S) {
  auto lam = detail::P(k.at("lambda")), mu = detail::P(k.at("mu")), eta = detail::P(k.at("eta"));
  if (!is_partition(mu)) return Outcome::skip();
  if (parabolic_kostka(lam, mu, eta).is_zero()) return Outcome::skip();
  auto g = scaled_sequence(lam, mu, eta, S);
  for (int l = 1; l <= S; ++l)
    for (int kk = 1; kk <= l; ++kk)
      for (int r = 1; r <= kk && l + r <= S; ++r)
        if (!detail::poly_le(g[kk - r] * g[l + r], g[kk] * g[l]))
          return Outcome::fail("log-concave: g_" + std::to_string(kk) + " g_" + std::to_string(l) + " < g_" + std::to_string(kk - r) +
                               " g_" + std::to_string(l + r));
  // Polya frequency minors at q = 1
  for (int rows = 2; rows <= 3; ++rows)
    for (auto& alpha : partitions_of_at_most(rows, S)) {
      if (static_cast<int>(alpha.size()) != rows) continue;
      for (auto& beta : sub_partitions(alpha)) {
        bool fits = true;
        auto bp = pad(beta, rows);
        for (int i = 0; i < rows && fits; ++i)
          for (int j = 0; j < rows; ++j)
            if (alpha[i] - bp[j] - i + j > S) fits = false;
        if (!fits) continue;
        QPoly d = toeplitz_det(g, alpha, beta);
        if (d.at_one() < 0)
          return Outcome::fail("polya: minor " + detail::pstr(alpha) + "/" + detail::pstr(beta) + " is " + d.at_one().get_str() +
                               " at q=1");
      }
    }
  return Outcome::pass();
}

inline CheckReport check_qlogconcavity(const Bounds& b, const RunOptions& opt = {}) {
  validate(b);
  CheckReport r{"qlogconcavity", b};
  // the coefficientwise version of the minors is not expected for three rows
  {
    auto key = rect_key({4, 3, 2, 1}, {{2, 2}, {2, 1}, {2, 1}, {1, 2}});
    std::vector<QPoly> g{QPoly(1)};
    for (int N = 1; N <= 4; ++N) g.push_back(parabolic_kostka(scale(key.lambda, N), scale(key.mu, N), key.eta));
    QPoly d = toeplitz_det(g, {2, 2, 2}, {});
    r.notes.push_back({{"minor", "lambda=(4,3,2,1), R=((2,2),(2),(2),(1,1)), alpha=(2,2,2)"},
                       {"value", d.str()},
                       {"negative_coefficient", !d.nonnegative()},
                       {"value_at_one", d.at_one().get_str()}});
  }
  int S = b.max_scale;
  detail::run_instances(r, kostka_instances(b), [S](const json& k) { return logconcave_instance(k, S); }, opt);
  detail::finish(r);
  return r;
}

// ---------------------------------------------------------------- q-Merris inequality

inline Outcome merris_instance(const json& k) {
  auto lam = detail::P(k.at("lambda")), mu = detail::P(k.at("mu"));
  auto lc = conjugate(lam);
  QPoly K = kf_charge(lam, mu), Kc = kf_charge(lc, mu);
  if (Kc.is_zero()) return Outcome::pass();
  if (K.low() < Kc.low()) return Outcome::fail("lowest-degree: a(lambda)=" + std::to_string(K.low()) + " < a(lambda')");
  QPoly rhs = Kc.shifted(static_cast<int>(n_stat(lc) - n_stat(lam)));
  if (!detail::poly_le(rhs, K)) return Outcome::fail("q-inequality: K=" + K.str() + ", shifted K'=" + rhs.str());
  Outcome o;
  if (K == rhs && lam != lc) o.note = json{{"equality", {{"lambda", lam}, {"mu", mu}}}};
  return o;
}

inline std::vector<json> merris_instances(const Bounds& b) {
  std::vector<json> out;
  for (int s = 1; s <= b.max_size; ++s) {
    auto ps = partitions_of(s);
    std::sort(ps.begin(), ps.end());
    for (auto& lam : ps) {
      if (!dominance_ge(lam, conjugate(lam))) continue;
      for (auto& mu : ps) out.push_back({{"lambda", lam}, {"mu", mu}});
    }
  }
  return out;
}

inline CheckReport check_merris(const Bounds& b, const RunOptions& opt = {}) {
  validate(b);
  CheckReport r{"merris", b};
  detail::run_instances(r, merris_instances(b), merris_instance, opt);
  detail::finish(r);
  return r;
}

// ---------------------------------------------------------------- subdivision monotonicity

inline Outcome subdivision_instance(const json& k) {
  auto lam = detail::P(k.at("lambda")), mu = detail::P(k.at("mu"));
  auto e1 = detail::P(k.at("eta1")), e2 = detail::P(k.at("eta2"));
  QPoly K1 = parabolic_kostka(lam, mu, e1), K2 = parabolic_kostka(lam, mu, e2);
  if (!detail::poly_le(K1, K2)) return Outcome::fail("monotone: K(eta1)=" + K1.str() + ", K(eta2)=" + K2.str());
  return Outcome::pass();
}

inline std::vector<json> subdivision_instances(const Bounds& b) {
  std::vector<json> out;
  for (int s = 1; s <= b.max_size; ++s)
    for (int n = 1; n <= b.max_eta_len; ++n) {
      std::vector<Composition> etas;
      for (int parts = 1; parts <= n; ++parts)
        for (auto& e : compositions_of(n, parts, false)) etas.push_back(e);
      std::sort(etas.begin(), etas.end());
      auto ps = partitions_of(s, n);
      std::sort(ps.begin(), ps.end());
      for (auto& e1 : etas)
        for (auto& e2 : subdivisions(e1)) {
          if (e2 == e1) continue;
          for (auto& lam : ps)
            for (auto& mu : ps)
              if (dominance_ge(lam, mu)) out.push_back({{"lambda", lam}, {"mu", pad(mu, n)}, {"eta1", e1}, {"eta2", e2}});
        }
    }
  return out;
}

inline CheckReport check_subdivision(const Bounds& b, const RunOptions& opt = {}) {
  validate(b);
  CheckReport r{"subdivision", b};
  {
    // dominance alone does not give monotonicity
    Weight g{3, 0, -1, -1, 0, -1};
    QPoly a = kostant_rec({2, 3, 1}, g), c = kostant_rec({2, 2, 2}, g), s = kostant_rec({2, 1, 1, 2}, g);
    r.notes.push_back({{"control", "gamma=(3,0,-1,-1,0,-1)"},
                       {"K(2,3,1)", a.str()},
                       {"K(2,2,2)", c.str()},
                       {"K(2,1,1,2)", s.str()},
                       {"dominance_order_monotone", detail::poly_le(a, c)},
                       {"subdivision_monotone", detail::poly_le(c, s)}});
  }
  detail::run_instances(r, subdivision_instances(b), subdivision_instance, opt);
  detail::finish(r);
  return r;
}

// ---------------------------------------------------------------- saturation failures

struct KroneckerInstance {
  Partition a, b, c;
  int scale;  // the scaled triple is expected nonzero
};

// triples printed as failures of saturation for the Kronecker coefficients
inline std::vector<KroneckerInstance> printed_kronecker_failures() {
  return {{{6, 1}, {4, 1, 1, 1}, {3, 3, 1}, 2},
          {{5, 2}, {4, 3}, {4, 1, 1, 1}, 2},
          {{6, 1, 1}, {6, 1, 1}, {4, 3, 1}, 2},
          {{6, 2}, {6, 1, 1}, {4, 2, 2}, 2}};
}

struct PlethysmInstance {
  Partition lam, mu, pi;  // value at (lam, mu, pi) is 0, at (lam, 2mu, 2pi) nonzero
};

inline std::vector<PlethysmInstance> printed_plethysm_failures() {
  return {{{2, 2}, {2, 1}, {3, 2, 2, 1, 1, 1, 1, 1}},
          {{2, 2}, {2, 1}, {2, 2, 2, 2, 2, 1, 1}},
          {{2, 1, 1}, {1, 1, 1}, {4, 3, 3, 1, 1}}};
}

inline Outcome kronecker_search_instance(const json& k) {
  auto a = detail::P(k.at("a")), b = detail::P(k.at("b")), c = detail::P(k.at("c"));
  if (internal_g(a, b, c) != 0) return Outcome::skip();
  Int g2 = internal_g(scale(a, 2), scale(b, 2), scale(c, 2));
  Outcome o;
  if (g2 != 0) o.note = json{{"failure", {{"a", a}, {"b", b}, {"c", c}, {"g_doubled", g2.get_str()}}}};
  return o;
}

inline CheckReport check_saturation_failures(const Bounds& b, const RunOptions& opt = {}) {
  validate(b);
  CheckReport r{"saturation", b};
  json not_reproduced = json::array();
  for (auto& t : printed_kronecker_failures()) {
    Int g = internal_g(t.a, t.b, t.c);
    Int gN = internal_g(scale(t.a, t.scale), scale(t.b, t.scale), scale(t.c, t.scale));
    json j{{"family", "kronecker"}, {"a", t.a}, {"b", t.b}, {"c", t.c}, {"g", g.get_str()}, {"g_scaled", gN.get_str()}};
    if (g == 0 && gN != 0) r.known_failures.push_back(j);
    else not_reproduced.push_back(j);
  }
  for (auto& t : printed_plethysm_failures()) {
    Int a = plethysm_coeff(t.lam, t.mu, t.pi);
    Int a2 = plethysm_coeff(t.lam, scale(t.mu, 2), scale(t.pi, 2));
    json j{{"family", "plethysm"}, {"lambda", t.lam}, {"mu", t.mu}, {"pi", t.pi}, {"a", a.get_str()},
           {"a_doubled", a2.get_str()}};
    if (a == 0 && a2 != 0) r.known_failures.push_back(j);
    else not_reproduced.push_back(j);
  }
  {
    Partition w{3, 1, 1, 1, 1, 1};
    Int g = internal_g(w, w, w), g2 = internal_g(scale(w, 2), scale(w, 2), scale(w, 2));
    if (g == 0 && g2 != 0)
      r.known_failures.push_back({{"family", "kronecker"}, {"a", w}, {"b", w}, {"c", w}, {"g", g.get_str()},
                                  {"g_scaled", g2.get_str()}});
  }
  if (!not_reproduced.empty()) r.notes.push_back({{"printed_instances_not_reproduced", not_reproduced}});
  // exhaustive search for Kronecker triples with g = 0 but g at doubled arguments nonzero,
  // among partitions which, like their conjugates, have at least two distinct parts
  auto two_parts = [](const Partition& x) {
    auto c = conjugate(x);
    return x.front() != x.back() && c.front() != c.back();
  };
  std::vector<json> inst;
  for (int n = 1; n <= b.max_size; ++n) {
    std::vector<Partition> ps;
    for (auto& x : partitions_of(n))
      if (two_parts(x)) ps.push_back(x);
    std::sort(ps.begin(), ps.end());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i; j < ps.size(); ++j)
        for (std::size_t l = j; l < ps.size(); ++l) inst.push_back({{"a", ps[i]}, {"b", ps[j]}, {"c", ps[l]}});
  }
  detail::run_instances(r, inst, kronecker_search_instance, opt);
  for (auto& n : r.notes)
    if (n.contains("failure")) r.known_failures.push_back(n.at("failure"));
  detail::finish(r);
  return r;
}

// ---------------------------------------------------------------- FFLP polynomials

struct FflpKey {
  Partition alpha;
  Composition beta, eta;
};

// the (alpha, beta, eta) triple whose parabolic Kostka polynomial carries K_{A...,theta}^nu
inline FflpKey fflp_key(const std::vector<SkewDiagram>& ds, const Composition& theta, const Partition& nu_in) {
  if (ds.empty()) throw invalid_input("fflp: no diagrams");
  auto nu = trim(nu_in);
  int th = size(theta);
  if (!is_composition(theta) || std::count(theta.begin(), theta.end(), 0) > 0) throw invalid_input("fflp: bad theta");
  if (static_cast<int>(nu.size()) > th) throw invalid_input("fflp: l(nu) exceeds |theta|");
  long cells = 0;
  for (auto& d : ds) {
    if (!is_partition(d.outer) || !is_partition(d.inner) || !contains(d.outer, d.inner))
      throw invalid_input("fflp: invalid skew diagram");
    cells += size(d);
  }
  if (cells != size(nu)) throw invalid_input("fflp: |nu| differs from the number of cells");
  FflpKey k;
  std::size_t K = ds.size();
  for (std::size_t r = 0; r < K; ++r) {
    int shift = 0;
    for (std::size_t i = r + 1; i < K; ++i) shift += ds[i].outer.empty() ? 0 : trim(ds[i].outer).front();
    auto O = trim(ds[r].outer);
    auto I = pad(trim(ds[r].inner), O.size());
    for (std::size_t j = 0; j < O.size(); ++j) {
      k.alpha.push_back(shift + O[j]);
      k.beta.push_back(shift + I[j]);
    }
  }
  int rows = static_cast<int>(k.alpha.size());
  if (rows == 0) throw invalid_input("fflp: empty diagrams");
  k.eta.push_back(rows);
  k.eta.insert(k.eta.end(), theta.begin(), theta.end());
  for (int x : pad(nu, th)) k.beta.push_back(x);
  return k;
}

inline QPoly fflp_poly(const std::vector<SkewDiagram>& ds, const Composition& theta, const Partition& nu) {
  auto k = fflp_key(ds, theta, nu);
  QPoly K = parabolic_kostka(k.alpha, k.beta, k.eta);
  if (K.is_zero()) return K;
  int shift = size(nu);
  if (K.low() < shift) throw std::logic_error("fflp: polynomial has degree below |nu|");
  QPoly out = K.shifted(-shift);
  if (!out.nonnegative()) throw std::logic_error("fflp: negative coefficient in " + out.str());
  return out;
}

inline QPoly fflp_poly(const std::vector<Partition>& shapes, const Composition& theta, const Partition& nu) {
  std::vector<SkewDiagram> ds;
  for (auto& s : shapes) ds.push_back({s, {}});
  return fflp_poly(ds, theta, nu);
}

// key {"A":[outer,inner], "B":[outer,inner], "nu"}; every theta with |theta| = l(nu) is examined
inline Outcome fflp_instance(const json& k) {
  SkewDiagram A{detail::P(k.at("A")[0]), detail::P(k.at("A")[1])};
  SkewDiagram B{detail::P(k.at("B")[0]), detail::P(k.at("B")[1])};
  auto nu = detail::P(k.at("nu"));
  std::vector<SkewDiagram> base{A, B};
  auto tl = transform_tilde(base), cl = transform_ceil(base);
  auto [sa, sb] = transform_star(A, B);
  std::map<std::string, std::vector<SkewDiagram>> images{{"tilde", tl}, {"ceil", cl}, {"star", {sa, sb}}};
  auto valid = [](const std::vector<SkewDiagram>& v) {
    for (auto& d : v)
      if (!is_partition(d.outer) || !is_partition(d.inner) || !contains(d.outer, d.inner)) return false;
    return true;
  };
  // midpoint inequality for LR numbers of straight shapes
  if (A.inner.empty() && B.inner.empty()) {
    Int c0 = lr_coeff(A.outer, B.outer, nu), c1 = lr_coeff(cl[0].outer, cl[1].outer, nu);
    if (c1 < c0) return Outcome::fail("midpoint: LR number " + c1.get_str() + " < " + c0.get_str());
  }
  int l = length(nu);
  std::vector<Composition> thetas;
  for (int parts = 1; parts <= l; ++parts)
    for (auto& t : compositions_of(l, parts, false)) thetas.push_back(t);
  std::map<Composition, QPoly> base_val;
  std::map<std::string, std::map<Composition, QPoly>> diff;
  for (auto& th : thetas) base_val[th] = fflp_poly(base, th, nu);
  for (auto& [name, img] : images) {
    if (!valid(img)) return Outcome::fail(name + ": image is not a pair of skew diagrams");
    for (auto& th : thetas) {
      QPoly v = fflp_poly(img, th, nu);
      QPoly d = v - base_val[th];
      if (!d.nonnegative())
        return Outcome::fail(name + ": theta=" + detail::pstr(th) + ": " + v.str() + " vs " + base_val[th].str());
      diff[name][th] = d;
    }
  }
  // refining theta does not shrink the differences
  for (auto& [name, dm] : diff)
    for (auto& t1 : thetas)
      for (auto& t2 : subdivisions(t1))
        if (t2 != t1 && !detail::poly_le(dm[t1], dm[t2]))
          return Outcome::fail("refinement: " + name + " difference shrinks from theta=" + detail::pstr(t1) + " to " + detail::pstr(t2));
  return Outcome::pass();
}

inline std::vector<json> fflp_instances(const Bounds& b) {
  std::vector<json> out;
  for (int s = 2; s <= b.max_size; ++s)
    for (int s1 = 1; s1 < s; ++s1) {
      auto p1 = partitions_of(s1), p2 = partitions_of(s - s1);
      std::sort(p1.begin(), p1.end());
      std::sort(p2.begin(), p2.end());
      auto nus = partitions_of(s, b.max_eta_len);
      std::sort(nus.begin(), nus.end());
      for (auto& a : p1)
        for (auto& c : p2)
          for (auto& nu : nus)
            out.push_back({{"A", {a, Partition{}}}, {"B", {c, Partition{}}}, {"nu", nu}});
    }
  return out;
}

inline CheckReport check_fflp(const Bounds& b, const RunOptions& opt = {}) {
  validate(b);
  CheckReport r{"fflp", b};
  detail::run_instances(r, fflp_instances(b), fflp_instance, opt);
  detail::finish(r);
  return r;
}

// ---------------------------------------------------------------- registry and replay

inline InstanceTest instance_test(const std::string& id, const Bounds& b) {
  int S = b.max_scale;
  if (id == "gsc") return [S](const json& k) { return gsc_instance(k, S); };
  if (id == "positivity") return positivity_instance;
  if (id == "fulton") return [S](const json& k) { return fulton_instance(k, S); };
  if (id == "qlogconcavity") return [S](const json& k) { return logconcave_instance(k, S); };
  if (id == "merris") return merris_instance;
  if (id == "subdivision") return subdivision_instance;
  if (id == "saturation") return kronecker_search_instance;
  if (id == "fflp") return fflp_instance;
  throw invalid_input("unknown conjecture: " + id);
}

inline const std::vector<std::string>& conjecture_ids() {
  static const std::vector<std::string> ids{"gsc",    "positivity",  "fulton",     "qlogconcavity",
                                            "merris", "subdivision", "saturation", "fflp"};
  return ids;
}

inline CheckReport run_check(const std::string& id, const Bounds& b, const RunOptions& opt = {}) {
  if (id == "gsc") return check_gsc(b, opt);
  if (id == "positivity") return check_positivity_nonvanishing(b, opt);
  if (id == "fulton") return check_fulton_d(b, opt);
  if (id == "qlogconcavity") return check_qlogconcavity(b, opt);
  if (id == "merris") return check_merris(b, opt);
  if (id == "subdivision") return check_subdivision(b, opt);
  if (id == "saturation") return check_saturation_failures(b, opt);
  if (id == "fflp") return check_fflp(b, opt);
  throw invalid_input("unknown conjecture: " + id);
}

// true when every stored counterexample still fails with the same witness
inline bool replay(const CheckReport& r) {
  auto test = instance_test(r.conjecture, r.bounds);
  for (auto& c : r.counterexamples) {
    auto o = test(c.key);
    if (!o.witness || *o.witness != c.witness) return false;
  }
  return true;
}

}  // namespace pk
