#include <doctest.h>

#include <cmath>

#include "porthos/families.hpp"
#include "porthos/harness.hpp"

using namespace porthos;
using nlohmann::json;

TEST_CASE("sublemma root margins") {
  const SublemmaMargin m2 = sublemma23_margin(2);
  // 2t + 2t^2 = 1 at t = (sqrt(3) - 1) / 2
  CHECK(m2.t_star == doctest::Approx((std::sqrt(3.0) - 1.0) / 2.0).epsilon(1e-10));
  CHECK(m2.pass);
  for (int p : {4, 10, 40}) {
    const SublemmaMargin m = sublemma23_margin(p);
    CHECK(m.inv_t_star <= 2.0 * p + 1e-6);
    CHECK(m.pass);
  }
  CHECK_THROWS_AS(sublemma23_margin(3), std::invalid_argument);
  CHECK_THROWS_AS(sublemma23_margin(42), std::invalid_argument);
}

TEST_CASE("projection-count bound") {
  const TracialFamily fam = spin_system(4);
  const std::vector<TracialElement> projections{TracialElement::identity(fam.dim)};
  const VerificationRecord rec = theorem41_check(fam, projections, 4);
  CHECK(rec.pass);
  CHECK(rec.quantities.at("N_d").get<std::uint64_t>() >= 1);
  CHECK(rec.quantities.at("ratio").get<double>() <= 1.0 + 1e-9);
  // projections must resolve the identity
  const std::vector<TracialElement> half{cplx{0.5, 0.0} * TracialElement::identity(fam.dim)};
  CHECK_THROWS_AS(theorem41_check(fam, half, 4), std::invalid_argument);
}

TEST_CASE("circulant bound with the arithmetic count") {
  std::map<int, cplx> coeffs;
  for (int t : {1, 2, 4, 8, 16}) coeffs[t] = {1.0, static_cast<double>(t) * 0.1};
  const VerificationRecord rec = corollary42_check(256, {1, 2, 4, 8, 16}, coeffs, 4);
  CHECK(rec.pass);
  CHECK(rec.quantities.at("N_q").get<std::uint64_t>() == 1);
  CHECK(rec.quantities.at("projection_count_le_arithmetic").get<bool>());
}

TEST_CASE("tensor identity record") {
  const VerificationRecord rec = tensor_identity_check({2, 3}, 2, 2, 99);
  CHECK(rec.pass);
  CHECK(rec.quantities.at("identity_exact").get<bool>());
  CHECK_THROWS_AS(tensor_identity_check({2, 3, 2}, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(tensor_identity_check({2, 9}, 2, 2, 1), size_error);
}

TEST_CASE("suite reports are deterministic modulo runtime") {
  SuiteConfig cfg;
  cfg.suite = "sublemma";
  cfg.seed = 42;
  const VerificationReport a = run_suite(cfg);
  const VerificationReport b = run_suite(cfg);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK(a.aggregate_pass);
  const json j = a.to_json(true);
  CHECK(j.at("schema_version").get<int>() == kReportSchemaVersion);
  CHECK(j.at("seed").get<std::uint64_t>() == 42);
  CHECK(j.at("records").is_array());
  CHECK(j.at("records").at(0).contains("runtime_ms"));
  CHECK_FALSE(a.to_json(false).at("records").at(0).contains("runtime_ms"));
}

TEST_CASE("suite selection") {
  SuiteConfig cfg;
  cfg.suite = "nope";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.suite = "dissociate";
  const VerificationReport r = run_suite(cfg);
  CHECK(r.records.size() == 4);
  for (const auto& rec : r.records) CHECK(rec.name.rfind("dissociate/", 0) == 0);
  CHECK(r.aggregate_pass);
}
