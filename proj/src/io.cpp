#include "holecap/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "holecap/errors.hpp"

namespace holecap::io {
namespace {

Vec2 read_center(const json& j) {
  if (!j.contains("center")) return Vec2::Zero();
  const auto& c = j.at("center");
  if (!c.is_array() || c.size() != 2) throw DomainError("curve center must be [x, y]");
  return {c[0].get<double>(), c[1].get<double>()};
}

double read_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw DomainError(std::string("curve field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

std::vector<double> read_array(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<double>>();
}

}  // namespace

ClosedCurve curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape")) throw DomainError("curve JSON needs a 'shape'");
  const std::string shape = j.at("shape").get<std::string>();
  const Vec2 c = read_center(j);
  if (shape == "circle") return ClosedCurve::circle(read_number(j, "radius"), c);
  if (shape == "ellipse") return ClosedCurve::ellipse(read_number(j, "a"), read_number(j, "b"), c);
  if (shape == "trig")
    return ClosedCurve::trig(c, read_array(j, "xc"), read_array(j, "xs"), read_array(j, "yc"),
                             read_array(j, "ys"));
  throw DomainError("unknown curve shape '" + shape + "'");
}

json curve_to_json(const ClosedCurve& c) {
  const Vec2 ctr = c.center();
  switch (c.shape()) {
    case ClosedCurve::Shape::Circle:
      return {{"shape", "circle"}, {"radius", c.radius()}, {"center", {ctr.x(), ctr.y()}}};
    case ClosedCurve::Shape::Ellipse:
      return {{"shape", "ellipse"},
              {"a", c.semi_a()},
              {"b", c.semi_b()},
              {"center", {ctr.x(), ctr.y()}}};
    default:
      return {{"shape", "trig"}, {"center", {ctr.x(), ctr.y()}}, {"xc", c.xc()},
              {"xs", c.xs()},    {"yc", c.yc()},                 {"ys", c.ys()}};
  }
}

AnalyticGerm germ_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw DomainError("germ JSON needs 'coeffs'");
  std::vector<std::tuple<int, int, double>> terms;
  for (const auto& t : j.at("coeffs")) {
    if (!t.is_array() || t.size() != 3) throw DomainError("germ coefficient must be [h, j, value]");
    terms.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<double>());
  }
  const int degree = j.value("degree", -1);
  AnalyticGerm g = AnalyticGerm::from_terms(terms, degree);
  g.label = j.value("label", "");
  return g;
}

json germ_to_json(const AnalyticGerm& g) {
  json coeffs = json::array();
  for (int k = 0; k <= g.degree(); ++k)
    for (int j = 0; j <= k; ++j)
      if (g.coeff(k - j, j) != 0.0) coeffs.push_back({k - j, j, g.coeff(k - j, j)});
  json out = {{"degree", g.degree()}, {"coeffs", coeffs}};
  if (!g.label.empty()) out["label"] = g.label;
  return out;
}

json load_json_arg(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '['))
    return json::parse(text_or_path);
  std::ifstream in(text_or_path);
  if (!in) throw DomainError("cannot open '" + text_or_path + "'");
  return json::parse(in);
}

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> out;
  if (text.rfind("dyadic:", 0) == 0) {
    std::istringstream in(text.substr(7));
    std::string start, count;
    if (!std::getline(in, start, ':') || !std::getline(in, count))
      throw DomainError("dyadic sweep must be 'dyadic:start:count'");
    const double s = std::stod(start);
    const int n = std::stoi(count);
    for (int i = 0; i < n; ++i) out.push_back(s * std::pow(0.5, i));
  } else {
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) out.push_back(std::stod(tok));
  }
  if (out.empty()) throw DomainError("empty eps list");
  for (double e : out)
    if (!(e > 0.0)) throw DomainError("eps values must be positive");
  return out;
}

json expansion_to_json(const CapacityExpansion& e) {
  json table = json::array();
  for (const auto& [key, v] : e.c) table.push_back({{"n", key.first}, {"l", key.second}, {"c", v}});
  return {{"order", e.order},         {"r0", e.r0},
          {"coefficients", table},    {"xi", e.xi},
          {"eps_valid", e.eps_valid}, {"cancellation", e.cancellation}};
}

json report_to_json(const SplittingReport& r, const std::vector<double>& eps_grid) {
  json groups = json::array();
  for (size_t g = 0; g < r.groups.size(); ++g) {
    const auto& b = r.groups[g];
    json samples = json::array();
    for (double e : eps_grid) {
      json vals = json::array();
      for (int l = 0; l < b.dim(); ++l) vals.push_back(r.branch(static_cast<int>(g), l, e));
      samples.push_back({{"eps", e}, {"lambda", vals}});
    }
    groups.push_back({{"k", b.k},
                      {"m", b.dim()},
                      {"mu", b.mu},
                      {"rate", b.k == 0 ? "1/|log eps|" : "eps^" + std::to_string(2 * b.k)},
                      {"split", b.split},
                      {"branches", samples}});
  }
  return {{"lambda", r.lambda}, {"groups", groups}};
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

}  // namespace holecap::io
