// Acceptance run: one PASS/FAIL line per criterion.
//
//   pk_acceptance                      run everything, exit 0 iff all pass
//   pk_acceptance --only 3,7           run a subset
//   pk_acceptance --expect-fail 2,4    exit 0 iff exactly the listed criteria fail

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"

using namespace pk;

namespace {

QPoly Q(const std::string& s) { return QPoly::parse(s); }
QPoly coeffs(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(0, v);
}

std::ostream& operator<<(std::ostream& os, const std::vector<int>& v) { return os << format_list(v); }

std::ostream& operator<<(std::ostream& os, const std::vector<Int>& v) {
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ")";
}

std::ostream& operator<<(std::ostream& os, const ABCD& x) {
  return os << "(" << x.a << "," << x.b << "," << x.c << "," << x.d << ")";
}

// collects failed items; a criterion passes when nothing was recorded
struct Tally {
  std::vector<std::string> failed;
  std::vector<std::string> info;
  long checked = 0;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failed.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    ++checked;
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failed.push_back(os.str());
    }
  }
  void fail_if(bool bad, const std::string& what) { expect(!bad, what); }
  void note(std::string s) { info.push_back(std::move(s)); }
};

QPoly kostka(const Partition& l, const Composition& m, const Composition& e) { return parabolic_kostka(l, m, e); }

std::vector<QPoly> scaled_series(const KostkaKey& k, int nmax) {
  std::vector<QPoly> s{QPoly(1)};
  for (int n = 1; n <= nmax; ++n) s.push_back(parabolic_kostka(make_key(scale(k.lambda, n), scale(k.mu, n), k.eta)));
  return s;
}

BiPoly bi(std::initializer_list<QPoly> c) { return BiPoly(c); }

// ---------------------------------------------------------------- 1

void kostant_golden(Tally& t) {
  Weight g{3, 0, -1, -1, 0, -1};
  std::vector<std::pair<Composition, QPoly>> cases{{{2, 2, 2}, Q("q^3*(1,2)")},
                                                   {{2, 3, 1}, Q("q^3*(1,3)")},
                                                   {{2, 1, 1, 2}, Q("q^3*(1,3,2,1)")}};
  Composition e16{1, 2, 2, 1, 1};
  Weight g16{2, 1, 0, -1, 0, -1, -1};
  cases.push_back({e16, Q("q^3*(3,21,52,65,42,13)")});
  for (auto& [eta, want] : cases) {
    std::string tag = "eta=" + format_list(eta);
    Weight gg = eta == e16 ? g16 : g;
    t.equal(kostant_enum(eta, gg), want, tag + " enum");
    t.equal(kostant_rec(eta, gg), want, tag + " recurrence");
    t.equal(oracle::kostant_series(eta, gg), want, tag + " series expansion");
  }
  auto d = kostant_degree(e16, g16);
  t.expect(d.nonzero, "degree formula: gamma should lie in Y_eta");
  t.equal(d.degree, 8L, "degree formula");
  t.equal(static_cast<long>(kostant_enum(e16, g16).high()), 8L, "top degree of the enumeration");
}

// ---------------------------------------------------------------- 2

void kostka_golden(Tally& t) {
  auto k42 = make_key({6, 2, 2, 2}, {2, 2, 2, 2, 2, 2}, {2, 2, 2});
  t.equal(kostka_dp(k42), Q("q^6*(1)"), "cancelling sum dp");
  t.equal(kostka_altsum(k42), Q("q^6*(1)"), "cancelling sum altsum");
  std::vector<QPoly> printed{Q("q^4*(1,4,10,12,9)"), Q("q^4*(1,4,7,10,8)"), Q("q^5*(2,7,10,7)"), Q("q^5*(2,5,8,6)")};
  std::multiset<std::string> got, want;
  for (auto& term : altsum_terms(k42)) got.insert(term.value.str());
  for (auto& p : printed) want.insert(p.str());
  std::string gs;
  for (auto& s : got) gs += s + " ";
  t.note("cancelling sum terms " + gs);
  for (auto& p : printed)
    t.expect(got.count(p.str()) > 0, "cancelling sum printed intermediate Kostant term " + p.str() + " not produced");

  struct Case {
    Partition lam;
    Composition mu, eta;
    QPoly K, K2;
  };
  std::vector<Case> cases{
      {{3, 2, 1}, {2, 2, 2}, {1, 1, 1}, Q("q^1*(1,1)"), QPoly()},
      {{3, 2, 1}, {0, 2, 2, 2}, {1, 1, 1, 1}, Q("q^3*(-1,-1,0,1,2,1)"), Q("q^5*(1,0,-2,-4,-4,-1,0,3,3,4,2,1)")},
      {{3, 2, 1}, {0, 2, 0, 2, 2}, {1, 2, 1, 1}, Q("q^3*(1,0,-4,-3,2,4,2)"), Q("q^7*(3,5,6,-3,-13,-17,-11,3,9,12,6,3)")},
      {{3, 2, 1}, {0, 2, 0, 2, 0, 2}, {1, 2, 2, 1}, Q("q^4*(1,2,-8,-6,8,5)"), QPoly()},
  };
  for (auto& c : cases) {
    std::string tag = "family mu=" + format_list(c.mu);
    auto key = make_key(c.lam, c.mu, c.eta);
    t.equal(kostka_dp(key), c.K, tag + " dp");
    t.equal(kostka_altsum(key), c.K, tag + " altsum");
    if (!c.K2.is_zero()) t.equal(kostka(scale(c.lam, 2), scale(c.mu, 2), c.eta), c.K2, tag + " doubled");
  }
  // (iv): only the ends of the doubled polynomial are printed
  auto K2 = kostka({6, 4, 2}, {0, 4, 0, 4, 0, 4}, {1, 2, 2, 1});
  t.equal(K2.low(), 7, "family (iv) doubled low degree");
  t.equal(K2.coeff(7), Int(-1), "family (iv) doubled q^7");
  t.equal(K2.coeff(8), Int(-2), "family (iv) doubled q^8");
  t.equal(K2.coeff(17), Int(22), "family (iv) doubled q^17");
  t.equal(K2.coeff(18), Int(12), "family (iv) doubled q^18");
  t.equal(K2.high(), 18, "family (iv) doubled high degree");
  t.equal(kostka({6, 3, 2, 1}, {2, 1, 2, 1, 2, 1, 2, 1}, {2, 2, 2, 2}), Q("q^11*(4,18,24,14,4)"), "block pairs");
  t.equal(kostka_altsum(make_key({6, 3, 2, 1}, {2, 1, 2, 1, 2, 1, 2, 1}, {2, 2, 2, 2})), Q("q^11*(4,18,24,14,4)"),
          "block pairs altsum");
}

// ---------------------------------------------------------------- 3

void kf_triple(Tally& t) {
  long pairs = 0;
  for (int n = 1; n <= 8; ++n)
    for (auto& lam : partitions_of(n))
      for (auto& mu : partitions_of(n)) {
        QPoly a = kf_charge(lam, mu);
        QPoly b = kf_fermionic(lam, mu);
        QPoly c = parabolic_kostka(make_key(lam, mu, Composition(mu.size(), 1)), KostkaMethod::altsum);
        ++pairs;
        t.expect(a == b && b == c, format_list(lam) + "," + format_list(mu) + ": charge " + a.str() + " fermionic " + b.str() +
                              " altsum " + c.str());
        t.fail_if(a.at_one() != oracle::kostka_bruteforce(lam, mu), format_list(lam) + "," + format_list(mu) + ": K(1) differs from the tableau count");
      }
  t.note(std::to_string(pairs) + " pairs");
}

// ---------------------------------------------------------------- 4

void rational_fits(Tally& t) {
  {
    auto f = fit_rational(scaled_series(make_key({3, 2, 1}, {2, 2, 2}, {1, 1, 1}), 6));
    t.equal(f.J, std::vector<int>{1, 2}, "family (i) J");
    t.expect(f.P == bi({QPoly(1)}), "family (i) P = 1, got " + bi_str(f.P));
  }
  {
    auto f = fit_rational(scaled_series(make_key({2, 2, 2}, Composition(6, 1), Composition(6, 1)), 10));
    t.equal(f.J, std::vector<int>{3, 5, 6, 7, 9}, "two-parameter series J");
    t.expect(f.P == bi({QPoly(1), QPoly(), q_pow(15)}), "two-parameter series P, got " + bi_str(f.P));
  }
  {
    auto f = fit_rational(scaled_series(make_key({3, 2}, Composition(5, 1), Composition(5, 1)), 12));
    t.equal(f.J, std::vector<int>{4, 5, 6, 7, 8}, "(3,2),(1^5) J");
    t.expect(f.P == bi({QPoly(1), QPoly(), QPoly(), -q_pow(20)}), "(3,2),(1^5) P, got " + bi_str(f.P));
  }
  {
    auto f = fit_rational(scaled_series(make_key({3, 3}, Composition(6, 1), Composition(6, 1)), 8));
    t.equal(f.J, std::vector<int>{6, 8, 9, 12}, "(3,3),(1^6) J");
    t.expect(f.P == bi({QPoly(1), q_pow(10), q_pow(20)}), "(3,3),(1^6) P, got " + bi_str(f.P));
  }
  {
    // shape (3,2,1), weight (1^6): values at q = 1 and q = -1
    auto s = scaled_series(make_key({3, 2, 1}, Composition(6, 1), Composition(6, 1)), 9);
    std::vector<Int> v1, vm;
    for (auto& x : s) {
      v1.push_back(x.at_one());
      vm.push_back(x.at_minus_one());
    }
    auto f1 = fit_numeric(v1, false);
    t.equal(f1.a, 8, "series (ii) q=1 power of (1-t)");
    t.equal(f1.P, std::vector<Int>{1, 8, 35, 32, 9}, "series (ii) q=1 numerator");
    auto fm = fit_numeric(vm, true);
    t.expect(fm.a == 4 && fm.b == 4, "series (ii) q=-1 denominator (1-t^2)^4");
    t.equal(fm.P, std::vector<Int>{1, 0, 5, 0, 3}, "series (ii) q=-1 numerator");
  }
  {
    // shape (5,3,3,2), weight (3,3,3,2,1,1) at q = 1, counted as tableaux
    Partition l{5, 3, 3, 2};
    Composition m{3, 3, 3, 2, 1, 1};
    std::vector<Int> v{1};
    for (int n = 1; n <= 16; ++n) v.push_back(kostka_number(scale(l, n), scale(m, n)));
    t.equal(v[1], Int(30), "series (i) K(1)");
    auto f = fit_numeric(v, false);
    t.equal(f.P, std::vector<Int>{1, 21, 78, 64, 9}, "series (i) q=1 numerator");
    t.equal(f.a, 10, "series (i) q=1 power of (1-t)");
    t.note("series (i) fitted denominator (1-t)^" + std::to_string(f.a));
  }
}

// ---------------------------------------------------------------- 5

RectSequence embedding_rects(const Partition& lam, const Partition& mu, const Partition& nu) {
  RectSequence R;
  bool placed = false;
  for (int x : nu) {
    if (!placed && lam[0] >= x) {
      R.push_back({lam[0], static_cast<int>(mu.size())});
      placed = true;
    }
    R.push_back({x, 1});
  }
  if (!placed) R.push_back({lam[0], static_cast<int>(mu.size())});
  return R;
}

Partition embedding_shape(const Partition& lam, const Partition& mu) {
  Partition out;
  for (int x : mu) out.push_back(lam[0] + x);
  for (int x : lam) out.push_back(x);
  return out;
}

void embedding(Tally& t) {
  Partition lam{2, 1}, mu{2, 1}, nu{3, 2, 1};
  auto R = embedding_rects(lam, mu, nu);
  auto lt = embedding_shape(lam, mu);
  t.equal(lt, Partition{4, 3, 2, 1}, "embedded shape");
  auto key = rect_key(lt, R);
  QPoly K = parabolic_kostka(key);
  t.equal(K, Q("q^2*(2,3,1)"), "K");
  auto s = abcd(K);
  t.equal(s.a, 2L, "a");
  t.equal(s.b, Int(2), "b");
  t.equal(lr_coeff(lam, mu, nu), Int(2), "c");
  t.equal(oracle::lr_alternant(lam, mu, nu), Int(2), "c by alternant");

  std::vector<QPoly> ser{QPoly(1)};
  for (int n = 1; n <= 10; ++n) {
    RectSequence Rn = R;
    for (auto& r : Rn) r.width *= n;
    ser.push_back(parabolic_kostka(rect_key(scale(lt, n), Rn)));
  }
  auto f = fit_rational(ser);
  BiPoly printedP{QPoly(1), QPoly(), -q_pow(8)};
  std::vector<int> printedJ{3, 3, 4, 4, 4, 5};
  t.note("fit " + bi_str(f.P) + " over J=" + format_list(f.J));
  bool same = same_rational(f.P, f.J, printedP, printedJ);
  // the printed function, after t -> t/q
  std::vector<QPoly> shifted;
  for (std::size_t n = 0; n < ser.size(); ++n) shifted.push_back(ser[n].shifted(static_cast<int>(n)));
  auto fs = fit_rational(shifted);
  bool same_shifted = same_rational(fs.P, fs.J, printedP, printedJ);
  if (!same && same_shifted) t.note("the printed series is sum q^n K_n t^n, one power of q per step above K_n");
  t.expect(same, "printed generating function");

  long cases = 0;
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (auto& l : partitions_of(a))
        for (auto& m : partitions_of(b))
          for (auto& n : partitions_of(a + b)) {
            auto Kx = parabolic_kostka(rect_key(embedding_shape(l, m), embedding_rects(l, m, n)));
            Int c = lr_coeff(l, m, n);
            auto nc = conjugate(n);
            long bound = -size(l);
            for (int j = 0; j < l[0] && j < static_cast<int>(nc.size()); ++j) bound += nc[j];
            auto x = abcd(Kx);
            bool ok = c != 0 ? (x.b == c && x.a == bound) : (Kx.is_zero() || x.a > bound);
            ++cases;
            t.expect(ok, "exhaustive: " + format_list(l) + format_list(m) + format_list(n) + " K=" + Kx.str());
          }
  t.note(std::to_string(cases) + " triples");
}

// ---------------------------------------------------------------- 6

void duality(Tally& t) {
  long cases = 0;
  for (auto& R : oracle::dominant_rect_sequences(8, 8)) {
    int total = 0;
    for (auto& r : R) total += r.width * r.height;
    auto Rt = transpose(R);
    for (auto& lam : partitions_of(total)) {
      auto d = duality_check(lam, R);
      ++cases;
      std::string tag = format_list(lam) + " R=" + std::to_string(R.size()) + " rects";
      t.fail_if(!d.holds, "duality " + tag + ": " + d.lhs.str() + " vs " + d.rhs.str());
      QPoly K = parabolic_kostka(rect_key(lam, R));
      if (K.is_zero()) continue;
      auto x = abcd(K), y = abcd(d.lhs);
      t.fail_if(x.a != d.nR - y.c, "a = n(R) - c(dual) " + tag);
      t.fail_if(x.b != y.d, "b = d(dual) " + tag);
      t.fail_if(kostka_fermionic(lam, R) != K, "fermionic sum " + tag);
    }
  }
  t.note(std::to_string(cases) + " pairs");
}

// ---------------------------------------------------------------- 7

void remark_family(Tally& t) {
  std::vector<QPoly> ser{QPoly(1)};
  for (int n = 1; n <= 12; ++n) {
    QPoly K = kostka(scale({2, 2}, n), scale({0, 1, 0, 1, 0, 1, 1}, n), {1, 2, 2, 1, 1});
    ser.push_back(K);
    if (n > 4) continue;
    std::string tag = "n=" + std::to_string(n);
    QPoly closed = QPoly(n);
    for (int k = 1; k <= n; ++k) closed += QPoly(2 * n - 2 * k + 1) * q_pow(k);
    closed = -closed.shifted(7 * n - 1) + QPoly((n + 1) * (n + 1)) * q_pow(8 * n);
    t.equal(K, closed, tag + " closed form");
    t.equal(K.at_one(), Int(n + 1), tag + " K(1)");
    t.equal(K.at_minus_one(), Int((n + 1) * (n + 1)), tag + " K(-1)");
    t.equal(abcd(K), ABCD{7 * n - 1, 8 * n, Int(-n), Int((n + 1) * (n + 1))}, tag + " (a,b,c,d)");
  }
  auto f = fit_rational(ser);
  BiPoly P{QPoly(1), -(q_pow(6) + QPoly(3) * q_pow(7) - q_pow(8)), QPoly(3) * q_pow(14), -q_pow(23)};
  t.equal(f.J, std::vector<int>{7, 7, 8, 8, 8}, "J");
  t.expect(f.P == P, "numerator, got " + bi_str(f.P));
  // companion identity K_{(2n,2n),(n^4)} = q^{2n} [n+1; 1]_{q^2}
  for (int n = 1; n <= 4; ++n) {
    QPoly want = q_int(n + 1).dilated(2).shifted(2 * n);
    t.equal(kf_charge({2 * n, 2 * n}, {n, n, n, n}), want, "K_{(2n,2n),(n^4)} n=" + std::to_string(n));
  }
}

// ---------------------------------------------------------------- 8

void symfun_golden(Tally& t) {
  struct G {
    Partition a, b, c;
    long g;
  };
  std::vector<G> gs{{{6, 1}, {4, 1, 1, 1}, {3, 3, 1}, 0},       {{5, 2}, {4, 3}, {4, 1, 1, 1}, 0},
                    {{6, 1, 1}, {6, 1, 1}, {4, 3, 1}, 0},       {{6, 2}, {6, 1, 1}, {4, 2, 2}, 0},
                    {{3, 1, 1}, {3, 2}, {2, 1, 1, 1}, 1},       {{6, 2, 2}, {6, 4}, {4, 2, 2, 2}, 2},
                    {{2, 1}, {2, 1}, {1, 1, 1}, 1},             {{4, 2}, {4, 2}, {2, 2, 2}, 1},
                    {{2, 2}, {2, 2}, {2, 2}, 1},                {{4, 4}, {4, 4}, {4, 4}, 1},
                    {{2, 2}, {2, 2}, {1, 1, 1, 1}, 1},          {{4, 4}, {4, 4}, {2, 2, 2, 2}, 1}};
  for (auto& x : gs) {
    std::string tag = "g" + format_list(x.a) + format_list(x.b) + format_list(x.c);
    t.equal(internal_g(x.a, x.b, x.c), Int(x.g), tag);
    if (size(x.a) <= 8) t.equal(oracle::kronecker_jt(x.a, x.b, x.c), Int(x.g), tag + " Jacobi-Trudi");
  }

  struct L {
    Partition a, b, mu;
    QPoly want;
  };
  QPoly one_q = coeffs({1, 1}), tri = coeffs({1, 1, 1});
  auto Kt = [](const Partition& a, const Partition& mu) {
    return kf_charge(a, mu).inverted().shifted(static_cast<int>(n_stat(mu) - n_stat(a)));
  };
  std::vector<L> ls{
      {{3, 1}, {2, 2}, {3, 1}, coeffs({1})},
      {{3, 1}, {2, 2}, {2, 2}, q_pow(1)},
      {{3, 1}, {2, 2}, {2, 1, 1}, tri},
      {{3, 1}, {2, 2}, {1, 1, 1, 1}, Q("q^1*(1,1,2,1,1)")},
      {{3, 2, 1}, {3, 2, 1}, {6}, coeffs({1})},
      {{3, 2, 1}, {3, 2, 1}, {5, 1}, coeffs({2, 1})},
      {{3, 2, 1}, {3, 2, 1}, {4, 2}, coeffs({3, 2, 1})},
      {{3, 2, 1}, {3, 2, 1}, {4, 1, 1}, coeffs({4, 5, 2, 1})},
      {{3, 2, 1}, {3, 2, 1}, {3, 1, 1, 1}, coeffs({4, 9, 12, 11, 5, 2, 1})},
      {{3, 2, 1}, {3, 2, 1}, {2, 1, 1, 1, 1}, one_q * one_q * coeffs({1, 0, 1}) * coeffs({1, 0, 1}) * coeffs({2, 3, 0, 1})},
      {{4, 2}, {3, 2, 1}, {5, 1}, coeffs({1})},
      {{4, 2}, {3, 2, 1}, {4, 2}, coeffs({2, 1})},
      {{4, 2}, {3, 2, 1}, {4, 1, 1}, coeffs({2, 3, 1})},
      {{4, 2}, {3, 2, 1}, {3, 3}, coeffs({1, 2, 1})},
      {{4, 2}, {3, 2, 1}, {3, 1, 1, 1}, one_q * tri * coeffs({2, 1, 1})},
      {{4, 2}, {3, 2, 1}, {2, 2, 1, 1}, one_q * one_q * tri * coeffs({2, 0, 1})},
      {{4, 2}, {3, 2, 1}, {2, 1, 1, 1, 1}, one_q * one_q * tri * tri * coeffs({1, 1, 0, 1})},
      {{4, 2}, {2, 2, 2}, {4, 1, 1}, q_pow(1)},
      {{4, 2}, {2, 2, 2}, {3, 3}, q_pow(1)},
      {{4, 2}, {2, 2, 2}, {3, 2, 1}, tri},
      {{4, 2}, {2, 2, 2}, {2, 2, 1, 1}, Q("q^1*(3,2,3,1,1)")},
      {{4, 2}, {2, 2, 2}, {2, 1, 1, 1, 1}, tri * coeffs({1, 0, 2, 1, 2, 0, 1})},
      {{4, 2}, {2, 2, 2}, {1, 1, 1, 1, 1, 1}, coeffs({1, 0, 1, 1, 0, 1}) * Kt({4, 2}, {1, 1, 1, 1, 1, 1})},
      {{6, 2, 1}, {6, 2, 1}, {3, 3, 2, 1}, coeffs({2, 17, 44, 63, 64, 48, 29, 15, 6, 2, 1})},
      {{2, 1}, {2, 1}, {1, 1, 1}, coeffs({1, 1, 1, 1})},
  };
  for (auto& x : ls) {
    std::string tag = "L" + format_list(x.a) + format_list(x.b) + "^" + format_list(x.mu);
    QPoly L = l_poly(x.a, x.b, x.mu);
    t.equal(L, x.want, tag);
    t.equal(L.at_one(), oracle::kron_h(x.a, x.b, x.mu), tag + " at q=1 against <s*s, h_mu>");
  }
  // (i): no other nonzero polynomials
  for (auto& mu : partitions_of(4)) {
    bool listed = false;
    for (auto& x : ls) listed |= x.a == Partition{3, 1} && x.b == Partition{2, 2} && x.mu == mu;
    if (!listed) t.expect(l_poly({3, 1}, {2, 2}, mu).is_zero(), "L(3,1),(2,2)^" + format_list(mu) + " should vanish");
  }
  QPoly L18 = l_poly({6, 2, 1}, {6, 2, 1}, {3, 3, 2, 1});
  t.equal(L18.at_one(), Int(291), "L(1)");
  t.equal(L18.at_minus_one(), Int(1), "L(-1)");
  t.equal(Kt({6, 2, 1}, {3, 3, 2, 1}), coeffs({1, 2, 2, 1}), "modified Kostka-Foulkes (6,2,1),(3,3,2,1)");

  struct C {
    Partition l, m, n;
    long v;
  };
  std::vector<C> cs{{{2, 1}, {2, 1}, {3, 2, 1}, 2}, {{2, 1}, {2, 1}, {3, 1, 1}, 6}, {{2, 1}, {2, 1}, {2, 2, 1}, 5},
                    {{2, 1}, {2, 1}, {2, 1, 1, 1}, 4}, {{2, 1}, {2, 1}, {3, 2}, 5},  {{2, 1}, {2, 1}, {2, 2}, 6},
                    {{2, 1}, {2, 1}, {3, 1}, 9},       {{2, 1}, {2, 1}, {2, 1, 1}, 9}, {{2, 1}, {2, 1}, {2, 1}, 9},
                    {{2, 1}, {3, 1}, {3, 1}, 13},      {{2, 1}, {3, 1}, {2, 1}, 9}};
  for (auto& x : cs) {
    std::string tag = "C" + format_list(x.l) + format_list(x.m) + "^" + format_list(x.n);
    t.equal(extended_lr(x.l, x.m, x.n), Int(x.v), tag);
    t.equal(stable_l(x.l, x.m, x.n).value.coeff(0), Int(x.v), tag + " via stable L at q=0");
  }
  t.equal(lr_coeff({3, 2, 1}, {2, 2}, {4, 3, 2, 1}), Int(2), "Catalan C_2");
  t.equal(oracle::lr_alternant({3, 2, 1}, {2, 2}, {4, 3, 2, 1}), Int(2), "Catalan C_2 by alternant");
  t.equal(lr_coeff({5, 4, 3, 2, 1}, {2, 2, 2}, {6, 5, 4, 3, 2, 1}), Int(5), "Catalan C_3");
  t.equal(oracle::lr_alternant({5, 4, 3, 2, 1}, {2, 2, 2}, {6, 5, 4, 3, 2, 1}), Int(5), "Catalan C_3 by alternant");

  struct Pl {
    Partition outer, inner, pi;
    long v;
  };
  std::vector<Pl> ps{{{2, 2}, {4, 2}, {6, 4, 4, 2, 2, 2, 2, 2}, 1}, {{2, 2}, {2, 1}, {3, 2, 2, 1, 1, 1, 1, 1}, 0},
                     {{2, 2}, {4, 2}, {4, 4, 4, 4, 4, 2, 2}, 1},       {{2, 2}, {2, 1}, {2, 2, 2, 2, 2, 1, 1}, 0},
                     {{2, 1, 1}, {1, 1, 1}, {4, 4, 2, 1, 1}, 1},      {{2, 1, 1}, {2, 2, 2}, {8, 8, 4, 2, 2}, 0},
                     {{2, 1, 1}, {1, 1, 1}, {4, 3, 3, 1, 1}, 0},      {{2, 1, 1}, {2, 2, 2}, {8, 6, 6, 2, 2}, 1}};
  if (plethysm_bound() < 24, "plethysm budget below 24");
  for (auto& x : ps)
    t.equal(plethysm_coeff(x.outer, x.inner, x.pi), Int(x.v),
            "s" + format_list(x.outer) + "[s" + format_list(x.inner) + "] at " + format_list(x.pi));
}

// ---------------------------------------------------------------- 9

void macmahon(Tally& t) {
  bool printed_typed = true;
  long checked = 0;
  for (int k = 1; k <= 3; ++k)
    for (int n = std::max(k, 2); n <= 5; ++n) {
      Partition hook{k};
      for (int i = 0; i < n - k + 1; ++i) hook.push_back(1);
      if (size(hook) != n) printed_typed = false;
      for (int N = 1; N <= 3; ++N) {
        std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " N=" + std::to_string(N);
        // weight (1^{n+1}) is the one of the right size
        QPoly K = kf_charge(scale(hook, N), Partition(n + 1, N));
        QPoly num = QPoly(1), den = QPoly(1);
        for (int i = 1; i <= k - 1; ++i)
          for (int j = 1; j <= n - k + 1; ++j) {
            num *= one_minus_q(N + i + j - 1);
            den *= one_minus_q(i + j - 1);
          }
        QPoly prod = exact_quotient(num, den);
        Partition rect(k - 1, n - k + 1);
        t.equal(gen_gaussian(N + k - 1, rect), prod, tag + " product = generalized Gaussian");
        t.equal(K, prod.shifted(N * k * (k - 1) / 2), tag + " corrected closed form");
        ++checked;
        // MacMahon shape and its conjugate
        Partition lam{n + k};
        for (int i = n; i >= 2; --i) lam.push_back(i);
        Partition mu = conjugate(lam);
        auto x = abcd(kostka(scale(lam, N), scale(mu, N), Composition(mu.size(), 1)));
        t.equal(x.a, static_cast<long>((2 * k - 1) * N), tag + " a");
        t.equal(x.b, prod.at_one(), tag + " b = plane partition count");
        if (N == 2) t.equal(x.b, binomial(n, k - 1) * binomial(n + 1, k - 1) / k, tag + " Narayana");
      }
    }
  t.note(std::to_string(checked) + " cases; the closed form holds with weight N(1^{n+1}) and prefactor q^{N k(k-1)/2}");
  t.expect(printed_typed, "printed identity compares |N(k,1^{n-k+1})| = N(n+1) with |N(1^n)| = Nn");
}

// ---------------------------------------------------------------- 10

void one_dim_sums(Tally& t) {
  std::vector<QPoly> printed{Q("q^7*(1,1,3,3,5,4,6,3,3,2,1,0,1)"), Q("q^31*(3,6,9,7,5,2,1)"), Q("q^13*(1,4,8,9,7,3,1)")};
  auto ids = rsk_identities({2, 2, 2}, {2, 2, 1, 1}, 6);
  t.equal(ids.size(), printed.size(), "RSK identity count");
  for (std::size_t i = 0; i < ids.size() && i < printed.size(); ++i) {
    t.equal(ids[i].lhs, printed[i], "RSK " + ids[i].name);
    t.expect(ids[i].shift.has_value(), "RSK " + ids[i].name + " right side equals left side up to q-shift");
  }
  long pairs = 0;
  for (int n = 1; n <= 6; ++n)
    for (auto& lam : partitions_of(n))
      for (auto& mu : partitions_of(n)) {
        ++pairs;
        QPoly a = one_dim_sum_def(lam, mu), b = one_dim_sum_flags(lam, mu);
        t.fail_if(a != b, "1D sum " + format_list(lam) + format_list(mu) + ": " + a.str() + " vs " + b.str());
      }
  for (int N = 1; N <= 6; ++N)
    for (auto& mu : partitions_of(N)) {
      QPoly want = qmultinomial(N, mu).shifted(static_cast<int>(n_stat(conjugate(mu))));
      t.equal(one_dim_sum_def(Partition(N, 1), mu), want, "q-multinomial " + format_list(mu));
    }
  auto d = dual_rsk_count(2, 4);
  t.equal(d.first, d.second, "dual RSK count");
  t.note(std::to_string(pairs) + " pairs");
}

// ---------------------------------------------------------------- 11

void fflp(Tally& t) {
  using V = std::vector<SkewDiagram>;
  auto sk = [](Partition o, Partition i = {}) { return make_skew(std::move(o), std::move(i)); };
  auto eqv = [](const V& a, const V& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (trim(a[i].outer) != trim(b[i].outer) || trim(a[i].inner) != trim(b[i].inner)) return false;
    return true;
  };
  auto show = [](const V& v) {
    std::string s;
    for (auto& d : v) s += format_skew(d) + " ";
    return s;
  };
  auto img = [&](const V& got, const V& want, const std::string& what) {
    t.expect(eqv(got, want), what + ": got " + show(got) + "want " + show(want));
  };

  // (i)
  V AB{sk({5, 1}), sk({4, 3, 1})};
  Partition nu{6, 5, 2, 1};
  auto st = transform_star(AB[0], AB[1]);
  auto dd = transform_ddagger(AB[0], AB[1]);
  V tl = transform_tilde(AB), stv{st.first, st.second}, cl = transform_ceil(AB), ddv{dd.first, dd.second};
  img(tl, {sk({5, 3, 1}), sk({4, 1})}, "(i) tilde");
  img(transform_sharp(AB), tl, "(i) sharp");
  img(stv, {sk({4, 1}), sk({5, 3, 1})}, "(i) star");
  img(cl, {sk({5, 2, 1}), sk({4, 2})}, "(i) ceil");
  img(transform_dagger(AB), cl, "(i) dagger");
  img(ddv, {sk({4, 2}), sk({5, 2, 1})}, "(i) double dagger");
  auto poly = [&](const V& v, const Composition& th, const QPoly& want, const std::string& what) {
    QPoly got = fflp_poly(v, th, nu);
    // the printed lists start at the lowest power
    t.expect(got.coeffs() == want.coeffs(), what + ": got " + got.str());
  };
  Composition t4{1, 1, 1, 1}, t112{1, 1, 2}, t121{1, 2, 1};
  poly(stv, t4, coeffs({3, 11, 18, 17, 11, 4, 1}), "(i) star");
  poly(tl, t4, coeffs({3, 11, 18, 17, 11, 4, 1}), "(i) tilde");
  poly(cl, t4, coeffs({3, 12, 19, 18, 11, 4, 1}), "(i) ceil");
  poly(AB, t4, coeffs({1, 6, 12, 14, 10, 4, 1}), "(i) base");
  poly(stv, t112, coeffs({3, 9, 13, 10, 5, 1}), "(i) star theta1");
  poly(tl, t112, coeffs({3, 9, 13, 10, 5, 1}), "(i) tilde theta1");
  poly(AB, t112, coeffs({1, 5, 9, 9, 5, 1}), "(i) base theta1");
  poly(cl, t112, coeffs({3, 10, 14, 11, 5, 1}), "(i) ceil theta1");
  t.equal(fflp_key(AB, t4, nu).eta, Composition{5, 1, 1, 1, 1}, "(i) eta");

  // (ii)
  V ab{sk({5, 5, 2, 2}, {3, 1}), sk({1, 1}, {1})};
  nu = {5, 3, 2, 1};
  st = transform_star(ab[0], ab[1]);
  dd = transform_ddagger(ab[0], ab[1]);
  tl = transform_tilde(ab);
  stv = {st.first, st.second};
  cl = transform_ceil(ab);
  ddv = {dd.first, dd.second};
  img(tl, {sk({5, 2, 1}, {3, 1}), sk({5, 2, 1}, {1})}, "(ii) tilde");
  img(transform_sharp(ab), tl, "(ii) sharp");
  img(stv, {sk({4, 3, 1}, {2}), sk({3, 2, 2, 1}, {2, 1})}, "(ii) star");
  img(ddv, {sk({2, 2, 1}, {1}), sk({5, 4, 1, 1}, {3, 1})}, "(ii) double dagger");
  img(cl, {sk({3, 3, 1, 1}, {2, 1}), sk({3, 3, 1, 1}, {2})}, "(ii) ceil");
  img(transform_dagger(ab), cl, "(ii) dagger");
  poly(stv, t4, coeffs({33, 82, 86, 53, 21, 6, 1}), "(ii) star");
  poly(cl, t4, coeffs({12, 20, 14, 5, 1}), "(ii) ceil");
  poly(tl, t4, coeffs({20, 86, 139, 131, 86, 43, 17, 5, 1}), "(ii) tilde");
  poly(ddv, t4, coeffs({22, 56, 61, 40, 17, 5, 1}), "(ii) double dagger");
  poly(ab, t4, coeffs({4, 9, 9, 4, 1}), "(ii) base");
  poly(stv, t121, coeffs({33, 64, 41, 9}), "(ii) star theta1");
  poly(ab, t121, coeffs({4, 7, 3}), "(ii) base theta1");
  poly(cl, t121, coeffs({12, 15, 5}), "(ii) ceil theta1");
  poly(tl, t121, coeffs({20, 73, 87, 49, 13, 1}), "(ii) tilde theta1");
  poly(ddv, t121, coeffs({22, 45, 32, 9}), "(ii) double dagger theta1");

  // transform identities on all pairs of partitions of total size <= 6
  auto same_tuple = [](const std::vector<Partition>& x, const std::vector<Partition>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (trim(x[i]) != trim(y[i])) return false;
    return true;
  };
  long pairs = 0, untwisted_fail = 0;
  for (int s = 2; s <= 6; ++s)
    for (int s1 = 1; s1 < s; ++s1)
      for (auto& a : partitions_of(s1))
        for (auto& b : partitions_of(s - s1)) {
          ++pairs;
          std::vector<Partition> p{a, b};
          std::string tag = format_list(a) + format_list(b);
          auto T = transform_tilde(p);
          t.fail_if(!same_tuple(transform_ceil(p), transform_dagger(p)), "ceil = dagger at " + tag);
          t.fail_if(!same_tuple(T, transform_sharp(p)), "tilde = sharp at " + tag);
          // the twisted tilde pair is fixed by star, and every fixed pair is of that form
          auto fx = transform_star(T[1], T[0]);
          t.fail_if(!same_tuple({fx.first, fx.second}, {T[1], T[0]}), "star fixes (B~, A~) at " + tag);
          auto z = transform_star(a, b);
          t.fail_if(same_tuple({z.first, z.second}, p) && !same_tuple(p, {T[1], T[0]}), "star-fixed pair not a twisted tilde pair at " + tag);
          auto lit = transform_star(T[0], T[1]);
          if (!same_tuple({lit.first, lit.second}, {T[1], T[0]})) ++untwisted_fail;
        }
  t.note(std::to_string(pairs) + " pairs; star(A~, B~) = (B~, A~) fails on " + std::to_string(untwisted_fail) +
         " of them, including the pair of (i)");
}

// ---------------------------------------------------------------- 12

void conjecture_suites(Tally& t) {
  Bounds b;  // |lambda| <= 6, |eta| <= 4, N <= 3
  for (std::string id : {"gsc", "positivity", "subdivision", "qlogconcavity", "merris"}) {
    auto r = run_check(id, b);
    std::string v = to_string(r.verdict);
    if (r.verdict != Verdict::verified_up_to_bound) {
      std::string w = r.counterexamples.empty() ? "" : " first " + r.counterexamples[0].key.dump() + " " +
                                                            r.counterexamples[0].witness;
      t.expect(false, id + ": " + v + " (" + std::to_string(r.counterexamples.size()) + " counterexamples)" + w);
      t.expect(replay(r), id + ": counterexamples do not replay");
      Bounds pb = b;
      pb.partitions_only = true;
      t.note(id + " with partition weights only: " + to_string(run_check(id, pb).verdict));
    } else {
      t.expect(true, id);
    }
  }
  auto r = run_check("saturation", b);
  t.equal(std::string(to_string(r.verdict)), std::string("known-failure-reproduced"), "saturation verdict");
  for (auto& n : r.notes)
    if (n.contains("printed_instances_not_reproduced"))
      for (auto& x : n.at("printed_instances_not_reproduced")) t.expect(false, "printed failure not reproduced: " + x.dump());
}

// ---------------------------------------------------------------- 13

void gt_polytope(Tally& t) {
  struct D {
    Partition lam;
    long dim;
  };
  for (auto& d : std::vector<D>{{{2, 2, 2, 2}, 9}, {{2, 2, 2, 1, 1}, 14}, {{4, 4}, 5}}) {
    t.equal(gt_dimension(d.lam, 8), d.dim, "dim GT " + format_list(d.lam));
    if (d.dim > 9) continue;
    // Ehrhart series of the polytope: pole order = dimension + 1
    std::vector<Int> v{1};
    for (int N = 1; N <= 2 * static_cast<int>(d.dim) + 6; ++N)
      v.push_back(kostka_number(scale(d.lam, N), Partition(8, N)));
    auto f = fit_numeric(v, false);
    t.equal(static_cast<long>(f.a) - 1, d.dim, "dim GT " + format_list(d.lam) + " from the Ehrhart series");
  }
  QPoly want = Q("q^3*(1,1,2,2,3,3,4,3,3,2,2,1,1)");
  t.equal(kf_charge({2, 2, 2, 1, 1}, Partition(8, 1)), want, "K_{(2^3,1^2),(1^8)} charge");
  t.equal(parabolic_kostka(make_key({2, 2, 2, 1, 1}, Partition(8, 1), Composition(8, 1))), want,
          "K_{(2^3,1^2),(1^8)} parabolic");
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Tally&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string only, expect_fail;
  app.add_option("--only", only, "comma separated criterion numbers");
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> all{
      {1, "Kostant golden values", kostant_golden},
      {2, "parabolic Kostka golden values", kostka_golden},
      {3, "Kostka-Foulkes by charge, fermionic sum and alternating sum", kf_triple},
      {4, "rational generating functions", rational_fits},
      {5, "LR numbers inside parabolic Kostka polynomials", embedding},
      {6, "duality for rectangle sequences", duality},
      {7, "negative-coefficient family", remark_family},
      {8, "symmetric function golden values", symfun_golden},
      {9, "MacMahon shapes and Narayana numbers", macmahon},
      {10, "one-dimensional sums", one_dim_sums},
      {11, "diagram transforms and FFLP polynomials", fflp},
      {12, "conjecture suites", conjecture_suites},
      {13, "Gelfand-Tsetlin dimensions", gt_polytope},
  };
  std::set<int> want, expected;
  for (int x : parse_ints(only)) want.insert(x);
  for (int x : parse_ints(expect_fail)) expected.insert(x);

  std::set<int> failed;
  auto total0 = std::chrono::steady_clock::now();
  for (auto& c : all) {
    if (!want.empty() && !want.count(c.id)) continue;
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failed.push_back(std::string("exception: ") + e.what());
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = t.failed.empty();
    if (!ok) failed.insert(c.id);
    std::cout << "criterion " << std::setw(2) << c.id << (ok ? " PASS " : " FAIL ") << c.title << " (" << t.checked
              << " checks, " << std::fixed << std::setprecision(1) << sec << "s)\n";
    for (auto& f : t.failed) std::cout << "      fail: " << f << "\n";
    for (auto& n : t.info) std::cout << "      note: " << n << "\n";
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - total0).count();
  std::cout << "total " << std::fixed << std::setprecision(1) << total << "s\n";
  if (expect_fail.empty()) return failed.empty() ? 0 : 1;
  for (int x : expected)
    if (!want.empty() && !want.count(x)) failed.insert(x);  // not run, treat as expected
  if (failed != expected) {
    std::cout << "failing set differs from the expected list\n";
    return 1;
  }
  return 0;
}
