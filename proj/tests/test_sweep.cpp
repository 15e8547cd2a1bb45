#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "dicke/sweep.hpp"

using namespace dicke;
using namespace dicke::sweep;

namespace {

SweepSpec rwa_spec(Axis lambda, Axis eta) {
  SweepSpec s;
  s.lambda = lambda;
  s.eta = eta;
  s.threads = 1;
  return s;
}

bool same(const std::vector<GridRecord>& a, const std::vector<GridRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].lambda != b[i].lambda || a[i].eta != b[i].eta || a[i].energy != b[i].energy ||
        a[i].phase_index != b[i].phase_index || a[i].cw != b[i].cw ||
        a[i].entropy_bits != b[i].entropy_bits || a[i].flags != b[i].flags)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("axis end points are exact") {
  const Axis a{0.02, 2.0, 100};
  CHECK(a.at(0) == 0.02);
  CHECK(a.at(99) == 2.0);
  CHECK(a.spacing() == doctest::Approx(0.02));
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW(rwa_spec({0.1, 0.5, 2}, {0.0, 0.2, 2}).validate());
  CHECK_THROWS_AS(rwa_spec({0.1, 0.5, 1}, {0.0, 0.2, 2}).validate(), DomainError);
  CHECK_THROWS_AS(rwa_spec({0.5, 0.1, 3}, {0.0, 0.2, 2}).validate(), DomainError);
  CHECK_THROWS_AS(rwa_spec({-0.1, 0.5, 3}, {0.0, 0.2, 2}).validate(), DomainError);
}

TEST_CASE("solver names and flags round-trip") {
  CHECK(parse_solver("full") == Solver::full);
  CHECK(to_string(Solver::rwa) == "rwa");
  CHECK_THROWS_AS(parse_solver("exact"), DomainError);
  const unsigned f = kDoublet | kNoConvergence;
  CHECK(flags_to_string(f) == "doublet|noconv");
  CHECK(flags_from_string("doublet|noconv") == f);
  CHECK(flags_from_string("") == 0u);
  CHECK(flags_to_string(0) == "");
}

TEST_CASE("vacuum-phase grid") {
  const auto r = run_sweep(rwa_spec({0.1, 0.5, 2}, {0.0, 0.2, 2}));
  REQUIRE(r.size() == 4);
  for (const auto& g : r) {
    CHECK(g.phase_index == 0);
    CHECK(g.cw == 0.0);
    CHECK(g.entropy_bits == 0.0);
  }
  // Row-major, eta slow.
  CHECK(r[1].lambda == 0.5);
  CHECK(r[1].eta == 0.0);
  CHECK(r[2].eta == 0.2);
  CHECK(boundary_trace(r, rwa_spec({0.1, 0.5, 2}, {0.0, 0.2, 2})).empty());
}

TEST_CASE("RWA first boundary follows the analytic critical coupling") {
  const SweepSpec s = rwa_spec({0.02, 1.2, 60}, {0.0, 1.2, 13});
  const auto r = run_sweep(s);
  const auto first = first_boundary_per_row(boundary_trace(r, s), s);
  for (int i = 0; i < s.eta.count; ++i) {
    const double lc = std::sqrt(1.0 - 0.8 * s.eta.at(i));
    if (lc <= s.lambda.min || lc >= s.lambda.max) continue;
    CHECK(std::abs(first[i] - lc) <= s.lambda.spacing());
  }
}

TEST_CASE("W-state plateau between the first two RWA boundaries") {
  const SweepSpec s = rwa_spec({0.01, 0.6, 30}, {1.3, 2.4, 12});
  double best = 0.0;
  for (const auto& g : run_sweep(s))
    if (g.phase_index == 1) best = std::max(best, g.cw);
  CHECK(best >= 0.399);
}

TEST_CASE("boundaries along eta at fixed lambda") {
  const SweepSpec s = rwa_spec({0.05, 0.1, 2}, {0.0, 6.0, 121});
  const auto segs = boundary_trace(run_sweep(s), s);
  // Ladder at lambda = 0.05 counted the same way.
  int crossings = 0;
  int prev = -1;
  for (int i = 0; i < s.eta.count; ++i) {
    const int n = rwa::ground_state(ModelParams::from_omega(1.0, 1.0, s.eta.at(i), 0.05, 5)).subspace_index;
    if (prev >= 0 && n != prev) ++crossings;
    prev = n;
  }
  CHECK(boundary_count_along_eta(segs, 0) == crossings);
  CHECK(crossings >= 2);
}

TEST_CASE("refinement moves the boundary by at most one coarse cell") {
  const SweepSpec coarse = rwa_spec({0.05, 1.2, 24}, {0.5, 0.5 + 1e-9, 2});
  const SweepSpec fine = rwa_spec({0.05, 1.2, 47}, {0.5, 0.5 + 1e-9, 2});
  const double a = first_boundary_per_row(boundary_trace(run_sweep(coarse), coarse), coarse)[0];
  const double b = first_boundary_per_row(boundary_trace(run_sweep(fine), fine), fine)[0];
  CHECK(std::abs(a - b) <= coarse.lambda.spacing());
}

TEST_CASE("parallel output equals serial output") {
  SweepSpec s = rwa_spec({0.1, 1.5, 9}, {0.0, 2.0, 7});
  const auto serial = run_sweep(s);
  s.threads = 4;
  CHECK(same(serial, run_sweep(s)));
  s.solver = Solver::full;
  s.full = sweep_full_options();
  s.lambda = {0.1, 1.0, 4};
  s.eta = {0.0, 1.0, 3};
  const auto fpar = run_sweep(s);
  s.threads = 1;
  CHECK(same(fpar, run_sweep(s)));
}

TEST_CASE("per-point failures are contained") {
  SweepSpec s = rwa_spec({0.1, 2.0, 2}, {0.0, 0.1, 2});
  s.solver = Solver::full;
  s.full.max_cutoff = 40;
  const auto r = run_sweep(s);
  REQUIRE(r.size() == 4);
  CHECK_FALSE(r[0].failed());
  CHECK(r[1].failed());
  CHECK((r[1].flags & kNoConvergence) != 0);
  CHECK(std::isnan(r[1].energy));
  CHECK(r[1].phase_index == -1);
  s.solver = Solver::rwa;
  s.search.n_max = 1;
  CHECK((run_sweep(s)[1].flags & kUnboundedSearch) != 0);
}

TEST_CASE("full-model boundaries need kept states") {
  SweepSpec s = rwa_spec({0.1, 1.0, 3}, {0.0, 0.1, 2});
  s.solver = Solver::full;
  s.full = sweep_full_options();
  const auto r = run_sweep(s);
  CHECK_THROWS_AS(boundary_trace(r, s), DomainError);
  s.keep_states = true;
  const auto kept = run_sweep(s);
  CHECK(kept[0].state.has_value());
  CHECK_NOTHROW(boundary_trace(kept, s));
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_threads(3) == 3);
  setenv("DICKE_LMG_THREADS", "2", 1);
  CHECK(resolve_threads(0) == 2);
  unsetenv("DICKE_LMG_THREADS");
  CHECK(resolve_threads(0) >= 1);
}
