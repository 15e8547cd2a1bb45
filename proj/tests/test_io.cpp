#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "dicke/records_io.hpp"

using namespace dicke;
using namespace dicke::sweep;

namespace {

std::vector<GridRecord> sample() {
  GridRecord a;
  a.lambda = 0.1;
  a.eta = 1.0 / 3.0;
  a.energy = -2.4999999999999996;
  a.phase_index = 1;
  a.cw = 0.39998;
  a.entropy_bits = 1e-17;
  a.flags = kAtTransition;
  GridRecord b;
  b.lambda = 2.0;
  b.eta = 4.0;
  b.energy = b.cw = b.entropy_bits = std::numeric_limits<double>::quiet_NaN();
  b.phase_index = -1;
  b.flags = kNoConvergence;
  return {a, b};
}

void check_equal(const std::vector<GridRecord>& x, const std::vector<GridRecord>& y) {
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].lambda == y[i].lambda);
    CHECK(x[i].eta == y[i].eta);
    CHECK((x[i].energy == y[i].energy || (std::isnan(x[i].energy) && std::isnan(y[i].energy))));
    CHECK(x[i].phase_index == y[i].phase_index);
    CHECK((x[i].cw == y[i].cw || (std::isnan(x[i].cw) && std::isnan(y[i].cw))));
    CHECK(x[i].flags == y[i].flags);
  }
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5, 1e-300, 6.02214076e23}) {
    CHECK(io::parse_double(io::format_double(x)) == x);
  }
  CHECK(io::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(std::isinf(io::parse_double(io::format_double(-std::numeric_limits<double>::infinity()))));
  CHECK_THROWS(io::parse_double("1.0x"));
}

TEST_CASE("CSV layout and round trip") {
  std::ostringstream os;
  io::write_csv(os, sample());
  const std::string text = os.str();
  CHECK(text.rfind(std::string(io::kCsvHeader) + "\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find("noconv") != std::string::npos);
  std::istringstream is(text);
  check_equal(io::read_csv(is), sample());
}

TEST_CASE("JSON round trip") {
  const auto j = io::to_json(sample());
  CHECK(j.is_array());
  CHECK(j[1]["energy"].is_null());
  check_equal(io::from_json(nlohmann::json::parse(io::dump_json(j))), sample());
}

TEST_CASE("spec serialization") {
  SweepSpec s;
  s.solver = Solver::full;
  const auto j = io::spec_to_json(s);
  CHECK(j["solver"] == "full");
  CHECK(j["n_atoms"] == 5);
}
