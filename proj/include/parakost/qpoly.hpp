#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "shapes.hpp"

namespace pk {

using Int = mpz_class;
using Rat = mpq_class;

// Laurent polynomial in q with big-integer coefficients: q^offset * (c0 + c1 q + ...)
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) {  // NOLINT: implicit integer constants are convenient
    if (c) coeffs_.push_back(Int(c));
  }
  QPoly(const Int& c) {  // NOLINT
    if (c != 0) coeffs_.push_back(c);
  }
  QPoly(int offset, std::vector<Int> c) : offset_(offset), coeffs_(std::move(c)) { normalize(); }

  static QPoly monomial(int e, const Int& c = 1) { return QPoly(e, {c}); }

  bool is_zero() const { return coeffs_.empty(); }
  int offset() const { return offset_; }
  // lowest / highest exponent with nonzero coefficient; undefined for zero
  int low() const { return offset_; }
  int high() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int coeff(int e) const {
    int i = e - offset_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
  }

  Int at_one() const {
    Int s = 0;
    for (auto& c : coeffs_) s += c;
    return s;
  }

  Int at_minus_one() const {
    Int s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if ((offset_ + static_cast<long>(i)) % 2 == 0) s += coeffs_[i];
      else s -= coeffs_[i];
    }
    return s;
  }

  Rat eval(const Rat& q) const {
    if (is_zero()) return 0;
    Rat s = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * q + Rat(*it);
    Rat qp = 1;
    int e = offset_;
    Rat base = e >= 0 ? q : Rat(1) / q;
    for (int k = 0; k < std::abs(e); ++k) qp *= base;
    return s * qp;
  }

  bool nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
  }

  QPoly shifted(int k) const {
    QPoly r = *this;
    if (!r.is_zero()) r.offset_ += k;
    return r;
  }

  // q -> 1/q
  QPoly inverted() const {
    if (is_zero()) return {};
    std::vector<Int> c(coeffs_.rbegin(), coeffs_.rend());
    return QPoly(-high(), std::move(c));
  }

  // p(q) -> p(q^k), k >= 1
  QPoly dilated(int k) const {
    if (is_zero()) return {};
    std::vector<Int> c((coeffs_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * k] = coeffs_[i];
    return QPoly(offset_ * k, std::move(c));
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(offset_, o.offset_);
    int hi = std::max(high(), o.high());
    std::vector<Int> c(hi - lo + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[offset_ - lo + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[o.offset_ - lo + i] += o.coeffs_[i];
    offset_ = lo;
    coeffs_ = std::move(c);
    normalize();
    return *this;
  }
  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  QPoly& operator-=(const QPoly& o) { return *this += -o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly& operator*=(const Int& k) {
    if (k == 0) return *this = QPoly();
    for (auto& c : coeffs_) c *= k;
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(a.offset_ + b.offset_, std::move(c));
  }
  friend QPoly operator*(QPoly a, const Int& k) { return a *= k; }
  friend QPoly operator*(const Int& k, QPoly a) { return a *= k; }
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.offset_ == b.offset_);
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // exact division by a polynomial whose lowest coefficient is +-1 or divides evenly;
  // returns false if the division is not exact
  bool divide_exact(const QPoly& d, QPoly& out) const {
    if (d.is_zero()) return false;
    if (is_zero()) {
      out = {};
      return true;
    }
    std::vector<Int> rem = coeffs_;
    const auto& dc = d.coeffs_;
    if (rem.size() < dc.size()) return false;
    std::vector<Int> qc(rem.size() - dc.size() + 1, 0);
    for (std::size_t i = 0; i < qc.size(); ++i) {
      if (rem[i] == 0) continue;
      if (rem[i] % dc[0] != 0) return false;
      Int f = rem[i] / dc[0];
      qc[i] = f;
      for (std::size_t j = 0; j < dc.size(); ++j) rem[i + j] -= f * dc[j];
    }
    for (auto& r : rem)
      if (r != 0) return false;
    out = QPoly(offset_ - d.offset_, std::move(qc));
    return true;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s = "q^" + std::to_string(offset_) + "*(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += coeffs_[i].get_str();
    }
    return s + ")";
  }

  // conventional sum-of-monomials rendering, e.g. "q^3+3q^4"
  std::string pretty() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Int& c = coeffs_[i];
      if (c == 0) continue;
      int e = offset_ + static_cast<int>(i);
      Int a = abs(c);
      if (!s.empty()) s += c < 0 ? "-" : "+";
      else if (c < 0) s += "-";
      if (a != 1 || e == 0) s += a.get_str();
      if (e == 1) s += "q";
      else if (e != 0) s += "q^" + std::to_string(e);
    }
    return s;
  }

  static QPoly parse(const std::string& text) {
    std::string t;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t == "0") return {};
    if (t.rfind("q^", 0) != 0) throw invalid_input("bad polynomial: " + text);
    auto star = t.find("*(");
    if (star == std::string::npos || t.back() != ')') throw invalid_input("bad polynomial: " + text);
    int off;
    try {
      off = std::stoi(t.substr(2, star - 2));
    } catch (...) {
      throw invalid_input("bad polynomial: " + text);
    }
    std::vector<Int> c;
    std::stringstream ss(t.substr(star + 2, t.size() - star - 3));
    std::string item;
    while (std::getline(ss, item, ',')) {
      Int v;
      if (v.set_str(item, 10) != 0) throw invalid_input("bad coefficient: " + item);
      c.push_back(v);
    }
    return QPoly(off, std::move(c));
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      offset_ = 0;
      return;
    }
    if (lead) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      offset_ += static_cast<int>(lead);
    }
    while (coeffs_.back() == 0) coeffs_.pop_back();
  }

  int offset_ = 0;
  std::vector<Int> coeffs_;
};

inline QPoly q_pow(int e) { return QPoly::monomial(e); }

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

inline QPoly pow(const QPoly& p, int k) {
  QPoly r = 1, b = p;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace pk
