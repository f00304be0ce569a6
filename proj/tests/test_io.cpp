#include <doctest.h>

#include <cmath>
#include <sstream>

#include "holecap/errors.hpp"
#include "holecap/io.hpp"

using namespace holecap;

TEST_CASE("eps lists") {
  const auto a = io::parse_eps_list("1e-1,1e-2,1e-3");
  REQUIRE(a.size() == 3);
  CHECK(a[1] == 1e-2);
  const auto d = io::parse_eps_list("dyadic:0.1:4");
  REQUIRE(d.size() == 4);
  CHECK(d[3] == 0.1 / 8);
  CHECK_THROWS_AS(io::parse_eps_list(""), DomainError);
  CHECK_THROWS_AS(io::parse_eps_list(","), DomainError);
  CHECK_THROWS_AS(io::parse_eps_list("1e-2,-1"), DomainError);
  CHECK_THROWS_AS(io::parse_eps_list("dyadic:0.1"), DomainError);
}

TEST_CASE("curve JSON round trip") {
  for (const char* text :
       {R"({"shape": "circle", "radius": 0.5, "center": [0.1, 0.2]})", R"({"shape": "ellipse", "a": 1.5, "b": 0.7})",
        R"({"shape": "trig", "center": [0.05, 0], "xc": [1, 0.1], "ys": [0.8, 0, 0.05]})"}) {
    const ClosedCurve c = io::curve_from_json(io::json::parse(text));
    const ClosedCurve r = io::curve_from_json(io::curve_to_json(c));
    for (double t : {0.0, 1.1, 4.0}) CHECK((c.point(t) - r.point(t)).norm() < 1e-15);
  }
  CHECK_THROWS_AS(io::curve_from_json(io::json::parse(R"({"shape": "blob"})")), DomainError);
  CHECK_THROWS_AS(io::curve_from_json(io::json::parse(R"({"shape": "circle"})")), DomainError);
}

TEST_CASE("germ JSON round trip") {
  const AnalyticGerm g = io::germ_from_json(io::json::parse(R"({"coeffs": [[0, 0, 1], [2, 1, -0.5]], "label": "u"})"));
  CHECK(g.degree() == 3);
  CHECK(g.coeff(2, 1) == -0.5);
  const AnalyticGerm r = io::germ_from_json(io::germ_to_json(g));
  CHECK(r.coeff(0, 0) == 1.0);
  CHECK(r.coeff(2, 1) == -0.5);
  CHECK(r.label == "u");
  CHECK_THROWS_AS(io::germ_from_json(io::json::parse(R"({"coeffs": [[0, 1]]})")), DomainError);
}

TEST_CASE("CSV cells keep full precision") {
  std::ostringstream a, b;
  const std::vector<std::vector<double>> rows = {{0.1, 1.0 / 3.0}, {M_PI, 1e-300}};
  io::write_csv(a, {"x", "y"}, rows);
  io::write_csv(b, {"x", "y"}, rows);
  CHECK(a.str() == b.str());
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(io::format_double(M_PI) == "3.1415926535897931");
}
