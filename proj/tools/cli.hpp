#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <parakost/parakost.hpp>

namespace pk::cli {

using nlohmann::json;

struct Output {
  bool as_json = false;
  json data = json::object();
  std::vector<std::string> lines;
  int code = 0;
};

namespace detail {

inline json schur_json(const SchurVector& v) {
  json j = json::array();
  for (auto& [p, c] : v) j.push_back({{"partition", p}, {"coeff", c.get_str()}});
  return j;
}

inline std::string schur_text(const SchurVector& v) {
  std::string s;
  for (auto& [p, c] : v) {
    if (!s.empty()) s += " + ";
    s += (c == 1 ? std::string() : c.get_str() + "*") + "s" + format_list(p);
  }
  return s.empty() ? "0" : s;
}

inline std::string int_poly_text(const std::vector<Int>& c, const std::string& var) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Int a = abs(c[k]);
    s += s.empty() ? (c[k] < 0 ? "-" : "") : (c[k] < 0 ? "-" : "+");
    if (a != 1 || k == 0) s += a.get_str();
    if (k >= 1) s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

struct Config {
  std::optional<Bounds> bounds;
};

inline Config load_config(const std::string& path) {
  Config c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot read config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("config file is not JSON: ") + e.what());
  }
  if (j.contains("bounds")) c.bounds = bounds_from_json(j.at("bounds"));
  if (j.contains("cache_cap")) {
    auto cap = j.at("cache_cap").get<std::size_t>();
    kostant_cache().set_cap(cap);
  }
  return c;
}

}  // namespace detail

// run one command line; returns the exit code and the printed text
inline std::pair<int, std::string> run(const std::vector<std::string>& argv) {
  CLI::App app{"Parabolic Kostka polynomials and related constants", "pk"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  int threads = 0;
  std::string config_path;
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--threads", threads, "worker threads (0 = all cores)");
  app.add_option("--config", config_path, "JSON file with default bounds and cache cap");

  Output out;
  std::function<void()> action;

  // kostant
  auto* c_kostant = app.add_subcommand("kostant", "parabolic q-Kostant partition function");
  std::string eta_s, gamma_s, sigma_s, method_s = "rec";
  c_kostant->add_option("--eta", eta_s, "block composition");
  c_kostant->add_option("--gamma", gamma_s, "integer vector of sum zero")->required();
  c_kostant->add_option("--sigma", sigma_s, "explicit root pairs i:j");
  c_kostant->add_option("--method", method_s, "rec|enum")->check(CLI::IsMember({"rec", "enum"}));
  c_kostant->callback([&] {
    action = [&] {
      auto g = parse_ints(gamma_s);
      QPoly K;
      json in{{"gamma", g}};
      if (!sigma_s.empty()) {
        auto roots = parse_roots(sigma_s);
        K = kostant_enum(roots, g);
        in["sigma"] = sigma_s;
      } else {
        if (eta_s.empty()) throw invalid_input("kostant needs --eta or --sigma");
        auto eta = parse_composition(eta_s);
        K = method_s == "enum" ? kostant_enum(eta, g) : kostant_rec(eta, g);
        in["eta"] = eta;
      }
      out.data = {{"input", in}, {"value", qpoly_json(K)}};
      out.lines = {K.str()};
    };
  });

  // kostka
  auto* c_kostka = app.add_subcommand("kostka", "parabolic Kostka polynomial");
  std::string lam_s, mu_s, nu_s, rects_s;
  int level = 0;
  std::string kmethod = "dp";
  c_kostka->add_option("--lambda", lam_s)->required();
  c_kostka->add_option("--mu", mu_s);
  c_kostka->add_option("--eta", eta_s);
  c_kostka->add_option("--rects", rects_s, "rectangles WxH;WxH;...");
  c_kostka->add_option("--level", level, "level-l restriction");
  c_kostka->add_option("--method", kmethod, "dp|altsum")->check(CLI::IsMember({"dp", "altsum"}));
  c_kostka->callback([&] {
    action = [&] {
      auto lam = parse_partition(lam_s);
      KostkaKey key;
      if (!rects_s.empty()) key = rect_key(lam, parse_rects(rects_s));
      else {
        if (mu_s.empty() || eta_s.empty()) throw invalid_input("kostka needs --mu and --eta, or --rects");
        key = make_key(lam, parse_composition(mu_s), parse_composition(eta_s));
      }
      QPoly K;
      if (level > 0) K = restricted_kostka(lam, key.mu, key.eta, level);
      else K = parabolic_kostka(key, kmethod == "altsum" ? KostkaMethod::altsum : KostkaMethod::dp);
      auto s = abcd(K);
      out.data = {{"input", {{"lambda", lam}, {"mu", key.mu}, {"eta", key.eta}, {"level", level}}},
                  {"value", qpoly_json(K)},
                  {"a", s.a},
                  {"b", s.b.get_str()},
                  {"c", s.c},
                  {"d", s.d.get_str()},
                  {"at_one", K.at_one().get_str()}};
      out.lines = {K.str()};
    };
  });

  // kf
  auto* c_kf = app.add_subcommand("kf", "Kostka-Foulkes polynomial");
  std::string kf_method = "charge";
  c_kf->add_option("--lambda", lam_s)->required();
  c_kf->add_option("--mu", mu_s)->required();
  c_kf->add_option("--method", kf_method, "charge|fermionic|altsum|all")
      ->check(CLI::IsMember({"charge", "fermionic", "altsum", "all"}));
  c_kf->callback([&] {
    action = [&] {
      auto lam = parse_partition(lam_s), mu = parse_partition(mu_s);
      if (size(lam) != size(mu)) throw invalid_input("|lambda| must equal |mu|");
      auto alt = [&] {
        int n = std::max<int>(std::max(lam.size(), mu.size()), 1);
        return parabolic_kostka(lam, pad(mu, n), Composition(n, 1), KostkaMethod::altsum);
      };
      json vals;
      if (kf_method == "charge" || kf_method == "all") vals["charge"] = kf_charge(lam, mu).str();
      if (kf_method == "fermionic" || kf_method == "all") vals["fermionic"] = kf_fermionic(lam, mu).str();
      if (kf_method == "altsum" || kf_method == "all") vals["altsum"] = alt().str();
      std::string first = vals.begin().value().get<std::string>();
      bool agree = true;
      for (auto& [k, v] : vals.items()) agree = agree && v.get<std::string>() == first;
      out.data = {{"input", {{"lambda", lam}, {"mu", mu}}}, {"values", vals}, {"agree", agree}};
      if (kf_method == "all") {
        for (auto& [k, v] : vals.items()) out.lines.push_back(k + ": " + v.get<std::string>());
        out.lines.push_back(std::string("agree: ") + (agree ? "yes" : "no"));
        if (!agree) out.code = 1;
      } else {
        out.lines = {first};
      }
    };
  });

  // lr
  auto* c_lr = app.add_subcommand("lr", "Littlewood-Richardson numbers and their variants");
  int rank = 0;
  bool extended = false;
  c_lr->add_option("--lambda", lam_s)->required();
  c_lr->add_option("--mu", mu_s)->required();
  c_lr->add_option("--nu", nu_s)->required();
  c_lr->add_option("--level", level, "level l (with --rank)");
  c_lr->add_option("--rank", rank, "rank n for the level-l number");
  c_lr->add_flag("--extended", extended, "stable extended LR number");
  c_lr->callback([&] {
    action = [&] {
      auto lam = parse_partition(lam_s), mu = parse_partition(mu_s), nu = parse_partition(nu_s);
      Int v;
      std::string kind = "lr";
      if (extended) {
        v = extended_lr(lam, mu, nu);
        kind = "extended";
      } else if (level > 0) {
        if (rank <= 0) throw invalid_input("--level needs --rank");
        v = restricted_lr(lam, mu, nu, level, rank);
        kind = "restricted";
      } else {
        v = lr_coeff(lam, mu, nu);
      }
      out.data = {{"input", {{"lambda", lam}, {"mu", mu}, {"nu", nu}, {"level", level}, {"rank", rank}}},
                  {"kind", kind},
                  {"value", v.get_str()}};
      out.lines = {v.get_str()};
    };
  });

  // gprod
  auto* c_g = app.add_subcommand("gprod", "internal product coefficient g");
  std::string a_s, b_s, c_s;
  c_g->add_option("--alpha", a_s, "partition or skew outer/inner")->required();
  c_g->add_option("--beta", b_s)->required();
  c_g->add_option("--gamma", c_s);
  c_g->callback([&] {
    action = [&] {
      auto A = parse_skew(a_s), B = parse_skew(b_s);
      if (c_s.empty()) {
        auto prod = internal_product(A, B);
        out.data = {{"input", {{"alpha", format_skew(A)}, {"beta", format_skew(B)}}}, {"expansion", detail::schur_json(prod)}};
        out.lines = {detail::schur_text(prod)};
      } else {
        auto C = parse_skew(c_s);
        Int g = internal_g(A, B, C);
        out.data = {{"input", {{"alpha", format_skew(A)}, {"beta", format_skew(B)}, {"gamma", format_skew(C)}}},
                    {"value", g.get_str()}};
        out.lines = {g.get_str()};
      }
    };
  });

  // lpoly
  auto* c_l = app.add_subcommand("lpoly", "Hall-Littlewood coefficient of an internal product");
  c_l->add_option("--alpha", a_s)->required();
  c_l->add_option("--beta", b_s)->required();
  c_l->add_option("--mu", mu_s)->required();
  c_l->callback([&] {
    action = [&] {
      auto A = parse_skew(a_s), B = parse_skew(b_s);
      auto mu = parse_partition(mu_s);
      QPoly L = l_poly(A, B, mu);
      out.data = {{"input", {{"alpha", format_skew(A)}, {"beta", format_skew(B)}, {"mu", mu}}}, {"value", qpoly_json(L)}};
      out.lines = {L.str()};
    };
  });

  // plethysm
  auto* c_p = app.add_subcommand("plethysm", "plethysm s_outer[s_inner]");
  std::string outer_s, inner_s, pi_s;
  int bound = 0;
  c_p->add_option("--outer", outer_s)->required();
  c_p->add_option("--inner", inner_s)->required();
  c_p->add_option("--pi", pi_s, "single coefficient");
  c_p->add_option("--max-degree", bound, "size budget for the full expansion");
  c_p->callback([&] {
    action = [&] {
      auto o = parse_partition(outer_s), i = parse_partition(inner_s);
      if (bound > 0) plethysm_bound() = bound;
      if (!pi_s.empty()) {
        auto pi = parse_partition(pi_s);
        Int a = plethysm_coeff(o, i, pi);
        out.data = {{"input", {{"outer", o}, {"inner", i}, {"pi", pi}}}, {"value", a.get_str()}};
        out.lines = {a.get_str()};
      } else {
        auto e = plethysm(o, i);
        out.data = {{"input", {{"outer", o}, {"inner", i}}}, {"expansion", detail::schur_json(e)}};
        out.lines = {detail::schur_text(e)};
      }
    };
  });

  // skewkf
  auto* c_skf = app.add_subcommand("skewkf", "skew Kostka-Foulkes polynomial");
  bool cocharge = false;
  c_skf->add_option("--lambda", lam_s)->required();
  c_skf->add_option("--mu", mu_s)->required();
  c_skf->add_option("--nu", nu_s)->required();
  c_skf->add_flag("--cocharge", cocharge);
  c_skf->callback([&] {
    action = [&] {
      auto lam = parse_partition(lam_s), mu = parse_partition(mu_s), nu = parse_partition(nu_s);
      QPoly K = cocharge ? skew_kf_cocharge(lam, mu, nu) : skew_kf(lam, mu, nu);
      out.data = {{"input", {{"lambda", lam}, {"mu", mu}, {"nu", nu}, {"cocharge", cocharge}}}, {"value", qpoly_json(K)}};
      out.lines = {K.str()};
    };
  });

  // onedsum
  auto* c_o = app.add_subcommand("onedsum", "one-dimensional sum");
  std::string od_method = "def";
  c_o->add_option("--lambda", lam_s)->required();
  c_o->add_option("--mu", mu_s)->required();
  c_o->add_option("--method", od_method, "def|flags")->check(CLI::IsMember({"def", "flags"}));
  c_o->callback([&] {
    action = [&] {
      auto lam = parse_partition(lam_s);
      auto mu = parse_composition(mu_s);
      QPoly X = od_method == "flags" ? one_dim_sum_flags(lam, mu) : one_dim_sum_def(lam, mu);
      out.data = {{"input", {{"lambda", lam}, {"mu", mu}}}, {"value", qpoly_json(X)}};
      out.lines = {X.str()};
    };
  });

  // series
  auto* c_ser = app.add_subcommand("series", "rational generating function of K_{n lambda, n mu, eta}");
  int n_max = 0;
  std::optional<int> q_eval;
  c_ser->add_option("--lambda", lam_s)->required();
  c_ser->add_option("--mu", mu_s);
  c_ser->add_option("--eta", eta_s);
  c_ser->add_option("--rects", rects_s);
  c_ser->add_option("--n-max", n_max)->required();
  c_ser->add_option("--q", q_eval, "evaluate at q = 1 or q = -1")->check(CLI::IsMember({1, -1}));
  c_ser->callback([&] {
    action = [&] {
      if (n_max < 2) throw invalid_input("--n-max must be at least 2");
      auto lam = parse_partition(lam_s);
      KostkaKey key;
      if (!rects_s.empty()) key = rect_key(lam, parse_rects(rects_s));
      else {
        if (mu_s.empty() || eta_s.empty()) throw invalid_input("series needs --mu and --eta, or --rects");
        key = make_key(lam, parse_composition(mu_s), parse_composition(eta_s));
      }
      std::vector<QPoly> s{QPoly(1)};
      for (int n = 1; n <= n_max; ++n) s.push_back(parabolic_kostka(scale(key.lambda, n), scale(key.mu, n), key.eta));
      json in{{"lambda", lam}, {"mu", key.mu}, {"eta", key.eta}, {"n_max", n_max}};
      try {
        if (q_eval) {
          std::vector<Int> v;
          for (auto& x : s) v.push_back(*q_eval == 1 ? x.at_one() : x.at_minus_one());
          auto f = fit_numeric(v, *q_eval == -1);
          std::vector<std::string> P;
          for (auto& c : f.P) P.push_back(c.get_str());
          in["q"] = *q_eval;
          out.data = {{"input", in}, {"P", P}, {"a", f.a}, {"b", f.b}, {"verified_terms", f.verified_terms}};
          std::string den = "(1-t)^" + std::to_string(f.a);
          if (f.b) den += "(1+t)^" + std::to_string(f.b);
          out.lines = {"P = " + detail::int_poly_text(f.P, "t"), "Q = " + den};
        } else {
          auto f = fit_rational(s);
          json P = json::array();
          for (auto& c : f.P) P.push_back(c.str());
          std::vector<std::string> Pt;
          for (auto& c : f.P_t) Pt.push_back(c.get_str());
          out.data = {{"input", in},           {"P", P},      {"J", f.J}, {"t_power", f.t_power},
                      {"P_at_q1", Pt},         {"verified_terms", f.verified_terms}};
          std::string J;
          for (int j : f.J) J += (J.empty() ? "" : ",") + std::to_string(j);
          std::string Q;
          for (int j : f.J) Q += "(1-q^" + std::to_string(j) + "t)";
          out.lines = {"P = " + bi_str(f.P), "Q = " + (Q.empty() ? std::string("1") : Q), "J = {" + J + "}"};
        }
      } catch (const no_fit& e) {
        throw invalid_input(std::string(e.what()) + "; raise --n-max");
      }
    };
  });

  // dualcheck
  auto* c_d = app.add_subcommand("dualcheck", "K_{lambda' R'}(q) = q^{n(R)} K_{lambda R}(1/q)");
  c_d->add_option("--lambda", lam_s)->required();
  c_d->add_option("--rects", rects_s)->required();
  c_d->callback([&] {
    action = [&] {
      auto lam = parse_partition(lam_s);
      auto R = parse_rects(rects_s);
      auto r = duality_check(lam, R);
      out.data = {{"input", {{"lambda", lam}, {"rects", rects_s}}},
                  {"n_R", r.nR},
                  {"lhs", qpoly_json(r.lhs)},
                  {"rhs", qpoly_json(r.rhs)},
                  {"holds", r.holds}};
      out.lines = {"lhs = " + r.lhs.str(), "rhs = " + r.rhs.str(), std::string("holds: ") + (r.holds ? "yes" : "no")};
      if (!r.holds) out.code = 1;
    };
  });

  // fflp
  auto* c_f = app.add_subcommand("fflp", "K_{A^(1),...,A^(k),theta}^nu");
  std::vector<std::string> shapes;
  std::string theta_s;
  c_f->add_option("--shape", shapes, "skew diagram outer/inner (repeatable)")->required();
  c_f->add_option("--theta", theta_s)->required();
  c_f->add_option("--nu", nu_s)->required();
  c_f->callback([&] {
    action = [&] {
      std::vector<SkewDiagram> ds;
      json names = json::array();
      for (auto& s : shapes) {
        ds.push_back(parse_skew(s));
        names.push_back(format_skew(ds.back()));
      }
      auto theta = parse_composition(theta_s);
      auto nu = parse_partition(nu_s);
      QPoly K = fflp_poly(ds, theta, nu);
      out.data = {{"input", {{"shapes", names}, {"theta", theta}, {"nu", nu}}}, {"value", qpoly_json(K)}};
      out.lines = {K.str()};
    };
  });

  // check
  auto* c_c = app.add_subcommand("check", "bounded conjecture checks");
  std::string check_name, resume;
  Bounds b;
  bool parts_only = false;
  c_c->add_option("name", check_name, "conjecture id")->required()->check(CLI::IsMember(conjecture_ids()));
  auto* o_size = c_c->add_option("--max-size", b.max_size);
  auto* o_eta = c_c->add_option("--max-eta", b.max_eta_len);
  auto* o_scale = c_c->add_option("--max-scale", b.max_scale);
  c_c->add_flag("--partitions-only", parts_only, "restrict mu to partitions");
  c_c->add_option("--resume", resume, "checkpoint file");
  c_c->callback([&] {
    action = [&] {
      auto cfg = detail::load_config(config_path);
      Bounds eff = cfg.bounds.value_or(Bounds{});
      if (o_size->count()) eff.max_size = b.max_size;
      if (o_eta->count()) eff.max_eta_len = b.max_eta_len;
      if (o_scale->count()) eff.max_scale = b.max_scale;
      if (parts_only) eff.partitions_only = true;
      RunOptions opt;
      opt.threads = threads;
      if (!resume.empty()) opt.resume_file = resume;
      auto r = run_check(check_name, eff, opt);
      out.data = to_json(r);
      out.lines.push_back(check_name + ": " + to_string(r.verdict));
      out.lines.push_back("tested: " + std::to_string(r.tested) + ", skipped: " + std::to_string(r.skipped));
      for (auto& [part, n] : r.failures_by_part) out.lines.push_back("failing " + part + ": " + std::to_string(n));
      for (std::size_t i = 0; i < r.counterexamples.size() && i < 5; ++i)
        out.lines.push_back("counterexample " + r.counterexamples[i].key.dump() + " " + r.counterexamples[i].witness);
      out.code = r.verdict == Verdict::counterexample_found ? 1 : 0;
    };
  });

  std::ostringstream os;
  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
    if (!config_path.empty() && check_name.empty()) detail::load_config(config_path);
    out.as_json = as_json;
    action();
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {2, std::string(e.what()) + "\n" + app.help()};
  } catch (const invalid_input& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const std::logic_error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  if (out.as_json) {
    json j = out.data;
    j["schema"] = 1;
    j["command"] = app.get_subcommands().front()->get_name();
    os << j.dump() << "\n";
  } else {
    for (auto& l : out.lines) os << l << "\n";
  }
  return {out.code, os.str()};
}

}  // namespace pk::cli
