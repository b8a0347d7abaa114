#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bgev/sim.hpp"

using namespace bgev;

namespace {
// Tiny grids keep the unit tests fast; full grids run in the acceptance
// suite and through the command-line tool.
Study1Spec tiny_study1() {
  Study1Spec s;
  s.block_sizes = {30};
  s.n_maxima = {50};
  s.return_periods = {30, 50};
  s.replicates = 40;
  return s;
}
Study2Spec tiny_study2() {
  Study2Spec s;
  s.p_a = {0.05};
  s.p_b = {0.2};
  s.c = {5};
  s.replicates = 30;
  return s;
}
}  // namespace

TEST_CASE("study reports are deterministic per seed") {
  const auto a = study1(tiny_study1(), 99);
  const auto b = study1(tiny_study1(), 99);
  CHECK(a.to_csv() == b.to_csv());
  const auto c = study1(tiny_study1(), 100);
  CHECK(a.to_csv() != c.to_csv());
}

TEST_CASE("study1 cell structure and metric") {
  const auto rep = study1(tiny_study1(), 7);
  CHECK(rep.cells.size() == 2);  // one (n,N) pair, two return periods
  for (const auto& cell : rep.cells) {
    CHECK(cell.metric == "rmse_diff");
    CHECK(cell.replicates == 40);
    // Reported value is the raw value rounded to 2 decimals.
    CHECK(cell.value ==
          doctest::Approx(std::round(cell.raw * 100.0) / 100.0).epsilon(1e-12));
    // Both arms are near-equivalent models; the gap stays small.
    CHECK(std::abs(cell.raw) < 0.5);
  }
}

TEST_CASE("study2 includes a baseline cell and ordering holds") {
  const auto rep = study2(tiny_study2(), 11);
  REQUIRE(rep.cells.size() == 2);
  CHECK(rep.cells.front().key == "p_a=0.05,p_b=0.2,c=5");
  CHECK(rep.cells.back().key == "gev_baseline");
  CHECK(rep.cells.front().metric == "rmse");
  CHECK(rep.cells.front().raw > 0.0);
  CHECK(rep.cells.back().raw > 0.0);
}

TEST_CASE("study3 skips cells violating the mixing constraint") {
  Study3Spec s;
  s.alpha = {0.1, 0.5};  // alpha=0.1 < p_b=0.2 must be skipped
  s.beta = {0.5};
  s.replicates = 20;
  const auto rep = study3(s, 13);
  REQUIRE(rep.cells.size() == 3);  // 2 grid cells + baseline
  CHECK(rep.cells[0].skipped);
  CHECK(rep.cells[0].skip_reason == "p_b exceeds min(alpha, beta/2)");
  CHECK_FALSE(rep.cells[1].skipped);
  CHECK(rep.cells[1].raw > 0.0);
}

TEST_CASE("csv output shape") {
  const auto rep = study2(tiny_study2(), 11);
  const std::string csv = rep.to_csv();
  CHECK(csv.rfind("study,cell_key,metric,value,replicates,seed\n", 0) == 0);
  // One line per cell plus header.
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == rep.cells.size() + 1);
}

TEST_CASE("cauchy maxima demo") {
  DemoSpec s;
  s.block_sizes = {10, 1000};
  s.replicates = 20000;
  const auto rep = demo_cauchy(s, 17);
  REQUIRE(rep.rows.size() == 2);
  // Standardised maxima keep mass below zero for finite n...
  CHECK(rep.rows[0].exact_mass == doctest::Approx(std::pow(2.0, -10.0)));
  CHECK(rep.rows[0].mass_below_zero > 0.0);
  // ...and the law approaches the unit Frechet limit as n grows.
  CHECK(rep.rows[1].sup_distance < rep.rows[0].sup_distance);
  // Determinism.
  CHECK(demo_cauchy(s, 17).to_csv() == rep.to_csv());
}
