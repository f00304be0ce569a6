#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "holecap/capacity.hpp"
#include "holecap/eigenbasis.hpp"
#include "holecap/errors.hpp"
#include "holecap/io.hpp"
#include "holecap/reference.hpp"
#include "holecap/splitting.hpp"
#include "holecap/validate.hpp"

namespace {

using namespace holecap;
using io::json;

enum Exit { kOk = 0, kConfig = 2, kSolver = 3, kValidation = 4 };

struct RunConfig {
  std::string omega = R"({"shape": "circle", "radius": 1})";
  std::string hole = R"({"shape": "circle", "radius": 1})";
  std::string germ_a = R"({"coeffs": [[0, 0, 1]]})";
  std::string germ_b;  // defaults to germ_a
  std::string eps = "1e-1,1e-2,1e-3";
  int nodes = 256;
  int order = 3;
  std::string out;
  std::string format;
  std::uint64_t seed = 0;
  bool include_l2 = false;
  // predict / reference
  int index = 1;
  std::vector<double> x0{0.0, 0.0};
  int count = 10;
  int multipoles = 12;
  // validate
  std::string level = "quick";
  std::vector<int> only;
  double corrupt_ck = 0.0;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string resolve_format(const RunConfig& c, const std::string& fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "csv" && f != "json") throw DomainError("format must be csv or json");
  return f;
}

Vec2 read_x0(const RunConfig& c) {
  if (c.x0.size() != 2) throw DomainError("--x0 needs two values");
  return {c.x0[0], c.x0[1]};
}

HoleSetting make_setting(const RunConfig& c) {
  if (c.nodes < 16) throw DomainError("--nodes must be at least 16");
  return HoleSetting(io::curve_from_json(io::load_json_arg(c.omega)),
                     io::curve_from_json(io::load_json_arg(c.hole)), c.nodes);
}

// Polynomial germs are exact, so padding with zero coefficients up to the
// series order loses nothing.
AnalyticGerm read_germ(const std::string& text, int order) {
  AnalyticGerm g = io::germ_from_json(io::load_json_arg(text));
  if (g.degree() < order) g += AnalyticGerm(order);
  return g;
}

void check_eps(const HoleSetting& s, const std::vector<double>& eps) {
  for (double e : eps)
    if (e >= s.eps0()) {
      std::ostringstream msg;
      msg << "eps = " << e << " is not below the containment limit " << s.eps0();
      throw DomainError(msg.str());
    }
}

int cmd_capacity(const RunConfig& c) {
  const std::vector<double> eps = io::parse_eps_list(c.eps);
  const std::string fmt = resolve_format(c, "csv");
  const HoleSetting s = make_setting(c);
  check_eps(s, eps);
  if (c.order < 0 || c.order > 12) throw DomainError("--order must be in 0..12");
  const AnalyticGerm a = read_germ(c.germ_a, c.order);
  const AnalyticGerm b = c.germ_b.empty() ? a : read_germ(c.germ_b, c.order);
  const CapacityExpansion ex = series_coefficients(s, series_densities(s, a, c.order), b);

  // One task per eps; the setting is read-only and results keep sweep order.
  std::vector<std::future<std::vector<double>>> jobs;
  for (double e : eps)
    jobs.push_back(std::async(std::launch::async, [&, e] {
      const double direct = direct_capacity(s, a, b, e);
      const double series = eval_series(ex, e, c.order, c.order + 1);
      std::vector<double> row{e, direct, series, std::abs(series - direct) / std::abs(direct)};
      if (c.include_l2) row.push_back(r_eps_matrix(s, {a}, 0.0, e, true).l2(0, 0));
      return row;
    }));
  std::vector<std::vector<double>> rows;
  for (auto& j : jobs) rows.push_back(j.get());

  Output out(c.out);
  std::vector<std::string> header{"eps", "direct", "series", "relative_gap"};
  if (c.include_l2) header.push_back("l2_a");
  if (fmt == "csv") {
    io::write_csv(out.stream(), header, rows);
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      json item;
      for (size_t i = 0; i < header.size(); ++i) item[header[i]] = r[i];
      arr.push_back(item);
    }
    out.stream() << json{{"rows", arr}, {"eps_valid", ex.eps_valid}, {"cancellation", ex.cancellation}}.dump(2)
                 << '\n';
  }
  return kOk;
}

int cmd_series(const RunConfig& c) {
  resolve_format(c, "json");
  const HoleSetting s = make_setting(c);
  if (c.order < 0 || c.order > 12) throw DomainError("--order must be in 0..12");
  const AnalyticGerm a = read_germ(c.germ_a, c.order);
  const AnalyticGerm b = c.germ_b.empty() ? a : read_germ(c.germ_b, c.order);
  const CapacityExpansion ex = series_coefficients(s, series_densities(s, a, c.order), b);
  Output out(c.out);
  if (resolve_format(c, "json") == "csv") {
    std::vector<std::vector<double>> rows;
    for (const auto& [key, v] : ex.c) rows.push_back({double(key.first), double(key.second), v});
    io::write_csv(out.stream(), {"n", "l", "c"}, rows);
  } else {
    json j = io::expansion_to_json(ex);
    j["eps0"] = s.eps0();
    out.stream() << j.dump(2) << '\n';
  }
  return kOk;
}

int cmd_predict(const RunConfig& c) {
  const std::vector<double> eps = io::parse_eps_list(c.eps);
  resolve_format(c, "json");
  if (c.index < 1 || c.index > 60) throw DomainError("--index must be in 1..60");
  const Vec2 x0 = read_x0(c);
  if (!(x0.norm() < 1.0)) throw DomainError("--x0 must lie inside the unit disk");

  // Every mode sharing the eigenvalue of the requested index.
  const std::vector<DiskEigenMode> modes = disk_spectrum(c.index + 2);
  const double lam = modes[c.index - 1].lambda;
  std::vector<AnalyticGerm> germs;
  for (const auto& m : modes)
    if (std::abs(m.lambda - lam) <= 1e-12 * lam) germs.push_back(germ_at(m, x0, 10));

  const OrderDecomposition dec = order_decomposition(germs);
  const ClosedCurve hole = io::curve_from_json(io::load_json_arg(c.hole));
  const HoleSetting s(ClosedCurve::circle(1.0, -x0), hole, c.nodes);
  check_eps(s, eps);
  const SplittingReport rep = predict_branches(dec, s, lam);
  json j = io::report_to_json(rep, eps);
  j["index"] = c.index;
  j["x0"] = {x0.x(), x0.y()};
  j["multiplicity"] = static_cast<int>(germs.size());
  Output out(c.out);
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_reference(const RunConfig& c) {
  const std::vector<double> eps = io::parse_eps_list(c.eps);
  const std::string fmt = resolve_format(c, "csv");
  const Vec2 x0 = read_x0(c);
  std::vector<std::vector<double>> rows;
  json warnings = json::array();
  for (double e : eps) {
    if (x0.norm() == 0.0) {
      for (const auto& v : concentric_spectrum(e, c.count))
        rows.push_back({e, v.lambda, double(v.k), v.even ? 1.0 : 0.0});
    } else {
      const EccentricResult res = eccentric_spectrum(e, x0, c.count, c.multipoles, true);
      for (const auto& v : res.eigenvalues) rows.push_back({e, v.lambda, -1.0, v.even ? 1.0 : 0.0});
      for (const auto& w : res.warnings) warnings.push_back(w);
    }
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w.get<std::string>() << '\n';
  Output out(c.out);
  if (fmt == "csv") {
    io::write_csv(out.stream(), {"eps", "lambda", "k", "even"}, rows);
  } else {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"eps", r[0]}, {"lambda", r[1]}, {"k", int(r[2])}, {"even", r[3] > 0}});
    out.stream() << json{{"eigenvalues", arr}, {"warnings", warnings}}.dump(2) << '\n';
  }
  return kOk;
}

int cmd_validate(const RunConfig& c) {
  if (c.level != "quick" && c.level != "full") throw DomainError("level must be quick or full");
  ValidateOptions opts;
  opts.full = c.level == "full";
  opts.seed = c.seed;
  opts.elliptic.ck_corruption = c.corrupt_ck;
  std::vector<CriterionResult> results;
  if (c.only.empty()) {
    results = run_acceptance(opts);
  } else {
    for (int id : c.only) {
      if (id < 1 || id > kCriterionCount) throw DomainError("no criterion " + std::to_string(id));
      results.push_back(run_criterion(id, opts));
    }
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << r.summary_line() << '\n';
    all = all && r.pass();
  }
  if (!c.out.empty()) {
    Output out(c.out);
    out.stream() << results_to_json(results).dump(2) << '\n';
  }
  return all ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacities of small holes and eigenvalue splitting"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--omega", c.omega, "outer curve JSON (inline or file)");
    sub->add_option("--hole", c.hole, "unit-scale hole curve JSON (inline or file)");
    sub->add_option("--nodes", c.nodes, "quadrature nodes per curve");
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "csv or json");
    sub->add_option("--seed", c.seed, "random seed");
  };
  auto germs = [&](CLI::App* sub) {
    sub->add_option("--germ-a", c.germ_a, "germ JSON of u (inline or file)");
    sub->add_option("--germ-b", c.germ_b, "germ JSON of v (defaults to u)");
    sub->add_option("--order", c.order, "series truncation order");
  };

  auto* cap = app.add_subcommand("capacity", "direct and series capacities over an eps sweep");
  common(cap);
  germs(cap);
  cap->add_option("--eps", c.eps, "comma list or dyadic:start:count");
  cap->add_flag("--include-l2", c.include_l2, "also report the L2 norm of the potential");

  auto* ser = app.add_subcommand("series", "coefficients of the small-eps expansion");
  common(ser);
  germs(ser);

  auto* pred = app.add_subcommand("predict", "splitting of a disk eigenvalue under a small hole");
  common(pred);
  pred->add_option("--index", c.index, "1-based index in the disk spectrum");
  pred->add_option("--x0", c.x0, "hole centre")->expected(2);
  pred->add_option("--eps", c.eps, "comma list or dyadic:start:count");

  auto* ref = app.add_subcommand("reference", "Bessel reference spectra of disk-with-hole");
  common(ref);
  ref->add_option("--eps", c.eps, "hole radii");
  ref->add_option("--x0", c.x0, "hole centre")->expected(2);
  ref->add_option("--count", c.count, "number of eigenvalues");
  ref->add_option("--multipoles", c.multipoles, "multipole truncation (off-centre holes)");

  auto* val = app.add_subcommand("validate", "acceptance suite");
  val->add_option("level", c.level, "quick or full");
  val->add_option("--seed", c.seed, "random seed");
  val->add_option("--out", c.out, "JSON summary file");
  val->add_option("--only", c.only, "run only these criteria");
  val->add_option("--corrupt-ck", c.corrupt_ck)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*cap) return cmd_capacity(c);
    if (*ser) return cmd_series(c);
    if (*pred) return cmd_predict(c);
    if (*ref) return cmd_reference(c);
    if (*val) return cmd_validate(c);
  } catch (const std::invalid_argument& e) {
    // DomainError and malformed numbers alike.
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSolver;
  }
  return kOk;
}
