#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kostka.hpp"
#include "shapes.hpp"

namespace pk {

// "6,2,2,2", "2^3,1" (exponent = multiplicity), "" for the empty list
inline std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') t += c;
  if (t.empty() || t == "0" || t == "-") return t == "0" ? std::vector<int>{0} : out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw invalid_input("empty entry in list: " + text);
    auto caret = item.find('^');
    try {
      std::size_t used = 0;
      int v = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw invalid_input("bad entry: " + item);
      int rep = 1;
      if (caret != std::string::npos) {
        std::size_t u2 = 0;
        rep = std::stoi(item.substr(caret + 1), &u2);
        if (u2 != item.size() - caret - 1 || rep < 0) throw invalid_input("bad multiplicity: " + item);
      }
      out.insert(out.end(), rep, v);
    } catch (const std::logic_error&) {
      throw invalid_input("bad integer in list: " + item);
    }
  }
  return out;
}

inline Partition parse_partition(const std::string& text) {
  auto p = parse_ints(text);
  if (!is_partition(p)) throw invalid_input("not a partition: " + text);
  return trim(p);
}

inline Composition parse_composition(const std::string& text) {
  auto c = parse_ints(text);
  if (!is_composition(c)) throw invalid_input("not a composition: " + text);
  return c;
}

// "5,5,2,2/3,1"
inline SkewDiagram parse_skew(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return make_skew(parse_partition(text));
  return make_skew(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

// "3x1;2x2": width x height, i.e. the rectangle (width^height)
inline RectSequence parse_rects(const std::string& text) {
  RectSequence R;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto x = item.find('x');
    if (x == std::string::npos) throw invalid_input("rectangle must be WxH: " + item);
    try {
      R.push_back({std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1))});
    } catch (const std::logic_error&) {
      throw invalid_input("bad rectangle: " + item);
    }
    if (R.back().width < 0 || R.back().height <= 0) throw invalid_input("bad rectangle: " + item);
  }
  if (R.empty()) throw invalid_input("empty rectangle sequence");
  return R;
}

// "1:3,2:3" as 1-based root pairs
inline RootSet parse_roots(const std::string& text) {
  RootSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto c = item.find(':');
    if (c == std::string::npos) throw invalid_input("root must be i:j: " + item);
    try {
      int i = std::stoi(item.substr(0, c)), j = std::stoi(item.substr(c + 1));
      if (i < 1 || j <= i) throw invalid_input("root needs 1 <= i < j: " + item);
      out.emplace_back(i, j);
    } catch (const std::logic_error&) {
      throw invalid_input("bad root: " + item);
    }
  }
  return out;
}

inline std::string format_list(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string format_skew(const SkewDiagram& d) {
  return d.inner.empty() ? format_list(d.outer) : format_list(d.outer) + "/" + format_list(d.inner);
}

inline std::string format_qpoly(const QPoly& p) { return p.str(); }

inline nlohmann::json qpoly_json(const QPoly& p) {
  std::vector<std::string> c;
  for (auto& x : p.coeffs()) c.push_back(x.get_str());
  return {{"text", p.str()}, {"offset", p.is_zero() ? 0 : p.low()}, {"coeffs", c}};
}

inline QPoly qpoly_from_json(const nlohmann::json& j) { return QPoly::parse(j.at("text").get<std::string>()); }

}  // namespace pk
