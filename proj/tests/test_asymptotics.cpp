#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "paucity/asymptotics.hpp"
#include "paucity/cache.hpp"
#include "paucity/error.hpp"
#include "paucity/report.hpp"

using namespace paucity;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  auto dir = fs::temp_directory_path() / ("paucity-test-" + tag + "-" + std::to_string(rd()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("power law fit on synthetic data") {
  std::vector<std::pair<double, double>> quad;
  std::vector<std::pair<double, double>> cbrt;
  for (double B : {10.0, 20.0, 40.0, 80.0, 160.0}) {
    quad.emplace_back(B, 3.0 * B * B);
    cbrt.emplace_back(B, 5.0 * std::pow(B, 4.0 / 3.0));
  }
  const auto a = fit_power_law(quad);
  CHECK(a.sufficient);
  CHECK(std::abs(a.slope - 2.0) < 1e-9);
  CHECK(a.slope_stderr < 1e-9);
  CHECK(a.points == 5);
  const auto b = fit_power_law(cbrt);
  CHECK(std::abs(b.slope - 4.0 / 3.0) < 1e-9);
}

TEST_CASE("fit needs three positive points") {
  std::vector<std::pair<double, double>> few{{10, 0}, {20, 5}, {40, 0}, {80, 9}};
  const auto f = fit_power_law(few);
  CHECK(!f.sufficient);
  CHECK(f.points == 2);
  CHECK(!compare_bounds(f, bound_profile(7, 2)).applicable);
}

TEST_CASE("bound profiles") {
  const auto p3 = bound_profile(3, 2);
  CHECK(p3.surface_exponent == doctest::Approx(2 / std::sqrt(3.0) + 0.5));
  CHECK(p3.theorem_exponent == doctest::Approx(1 + 2 / std::sqrt(3.0) + 0.5));
  CHECK(!p3.hua_exponent);
  CHECK(p3.paucity_threshold == 2);
  const auto p7 = bound_profile(7, 3);
  CHECK(p7.theorem_exponent == doctest::Approx(3 + 2 / std::sqrt(7.0) + 1.0 / 6));
  REQUIRE(p7.hua_exponent);
  CHECK(*p7.hua_exponent == 3.5);
  // For large d the surface exponent drops below 1/3.
  CHECK(bound_profile(100, 2).theorem_exponent == doctest::Approx(1 + 1.0 / 3));
  CHECK_THROWS_AS(bound_profile(3, 4), Error);
}

TEST_CASE("compare_bounds") {
  FitResult fit;
  fit.sufficient = true;
  fit.slope = 1.05;
  BoundProfile profile;
  profile.theorem_exponent = 4.0 / 3.0;
  const auto v = compare_bounds(fit, profile);
  CHECK(v.applicable);
  CHECK(v.consistent_with_theorem);
  CHECK(v.margin == doctest::Approx(4.0 / 3.0 - 1.05));
  CHECK(!v.consistent_with_hua);
  fit.slope = 1.5;
  CHECK(!compare_bounds(fit, profile).consistent_with_theorem);
  CHECK(compare_bounds(fit, profile, 0.2).consistent_with_theorem);
}

TEST_CASE("run keys are canonical") {
  const IntPolynomial cube{0, 0, 0, 1};
  const auto k = RunKey::make(cube, 2, 12);
  CHECK(k.canonical == "paucity-lab/1|poly=0,0,0,1|s=2|B=12|mode=box");
  CHECK(k.digest.size() == 64);
  CHECK(k == RunKey::make(IntPolynomial(std::vector<BigInt>{0, 0, 0, 1, 0}), 2, 12));
  CHECK(k.digest != RunKey::make(cube, 3, 12).digest);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache round trip and corrupt entries") {
  const auto dir = fresh_dir("cache");
  std::vector<std::string> warnings;
  const ResultCache cache(dir, [&](const std::string& w) { warnings.push_back(w); });
  const IntPolynomial cube{0, 0, 0, 1};
  const auto key = RunKey::make(cube, 2, 12);
  CHECK(!cache.load(key));
  const auto summary = enumerate(cube, 2, 12);
  cache.store(key, summary);
  CHECK(fs::exists(cache.path_for(key)));
  CHECK(cache.path_for(key).parent_path().filename() == key.digest.substr(0, 2));
  const auto back = cache.load(key);
  REQUIRE(back);
  CHECK(back->same_counts(summary));
  CHECK(back->B == 12);
  CHECK(back->s == 2);
  CHECK(back->polynomial == cube);

  { std::ofstream(cache.path_for(key)) << "{ not json"; }
  CHECK(!cache.load(key));
  CHECK(warnings.size() == 1);

  // An entry written for another key is ignored too.
  const auto other = RunKey::make(cube, 2, 13);
  cache.store(other, enumerate(cube, 2, 13));
  fs::copy_file(cache.path_for(other), cache.path_for(key), fs::copy_options::overwrite_existing);
  CHECK(!cache.load(key));
  CHECK(warnings.size() == 2);
  fs::remove_all(dir);
}

TEST_CASE("counts JSON round trip") {
  const auto summary = enumerate(IntPolynomial{0, 0, 0, 1}, 3, 6);
  const auto j = counts_json(summary);
  CHECK(j["schema"] == kSchema);
  CHECK(j["counts"]["disjoint"] == 36);
  CHECK(!j.contains("elapsed_ms"));
  CHECK(counts_from_json(j).same_counts(summary));
  CHECK(dump(j) == dump(counts_json(enumerate(IntPolynomial{0, 0, 0, 1}, 3, 6))));
  CHECK(counts_json(summary, 1.5).contains("elapsed_ms"));
}

TEST_CASE("ladder") {
  const IntPolynomial cube{0, 0, 0, 1};
  const auto report = run_ladder(cube, 2, {12, 30, 60, 100}, nullptr);
  REQUIRE(report.rungs.size() == 4);
  CHECK(report.rungs[0].summary.disjoint == 8);
  for (const auto& r : report.rungs) {
    CHECK(r.status == RungStatus::Ok);
    CHECK(!r.from_cache);
    CHECK(r.summary.trivial == trivial_count(2, r.B));
  }
  CHECK(report.fit.sufficient);
  CHECK(report.fit.slope < 2.0);
  std::ostringstream tsv;
  write_ladder_tsv(tsv, report);
  CHECK(tsv.str().rfind("B\ttotal\ttrivial\tshared\tdisjoint\n12\t284\t276\t0\t8\n", 0) == 0);
  CHECK_THROWS_AS(run_ladder(cube, 2, {12}, nullptr), Error);
  CHECK_THROWS_AS(run_ladder(cube, 2, {12, 12}, nullptr), Error);
  CHECK_THROWS_AS(run_ladder(cube, 2, {30, 12}, nullptr), Error);
}

TEST_CASE("ladder resumes from the cache") {
  const auto dir = fresh_dir("ladder");
  const ResultCache cache(dir);
  const IntPolynomial f{0, 0, 3, 1};
  const auto first = run_ladder(f, 2, {10, 20}, &cache);
  const auto second = run_ladder(f, 2, {10, 20, 40}, &cache);
  CHECK(second.rungs[0].from_cache);
  CHECK(second.rungs[1].from_cache);
  CHECK(!second.rungs[2].from_cache);
  CHECK(second.rungs[0].summary.same_counts(first.rungs[0].summary));
  LadderOptions parallel;
  parallel.parallel_rungs = true;
  const auto third = run_ladder(f, 2, {10, 20, 40}, &cache, parallel);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(third.rungs[i].from_cache);
    CHECK(third.rungs[i].summary.same_counts(second.rungs[i].summary));
  }
  CHECK(dump(ladder_json(second)) == dump(ladder_json(third)));
  fs::remove_all(dir);
}

TEST_CASE("failing rungs are marked, not fatal") {
  LadderOptions tight;
  tight.enumerate.memory_budget = 4096;
  tight.enumerate.max_partitions = 2;
  const auto report = run_ladder(IntPolynomial{0, 0, 0, 1}, 2, {5, 10, 400}, nullptr, tight);
  CHECK(report.rungs[0].status == RungStatus::Ok);
  CHECK(report.rungs[2].status == RungStatus::Failed);
  CHECK(report.rungs[2].error.find("MemoryBudgetExceeded") == 0);
  const auto j = ladder_json(report);
  CHECK(j["rungs"][2]["status"] == "FAILED");
}
