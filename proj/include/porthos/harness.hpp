#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "porthos/tracial.hpp"

namespace porthos {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct VerificationRecord {
  std::string name;
  nlohmann::json inputs;       // family spec, p, seed, ...
  nlohmann::json quantities;   // lhs, rhs, ratio, constants used
  bool pass = false;
  bool expected_fail = false;  // negative-control semantics
  nlohmann::json witness;      // optional structured data
  double runtime_ms = 0.0;

  nlohmann::json to_json(bool with_runtime = true) const;
};

struct VerificationReport {
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::string suite;
  std::vector<VerificationRecord> records;
  bool aggregate_pass = false;

  nlohmann::json to_json(bool with_runtime = true) const;
};

struct SublemmaMargin {
  double t_star = 0.0;
  double inv_t_star = 0.0;
  double bound = 0.0;  // 2p
  double ratio = 0.0;  // inv_t_star / 2p
  bool pass = false;
};

// Bisection for the root of sum_{0<=r<p} C(p,r) (p-r)! t^{p-r} = 1 on
// [1/(4p), 1]; asserts 1/t* <= 2p. Guard: even p in [2,40].
SublemmaMargin sublemma23_margin(int p);

// Projection-counting bound: computes the star words x_g over injective
// g: [q] -> I, counts nonzero P_j x_g per projection, and checks
// ||sum d||_p <= ((4 N(d))^{1/p} + 9 pi p / 8) S(d,p).
VerificationRecord theorem41_check(const TracialFamily& d,
                                   const std::vector<TracialElement>& projections, int p);

// Same bound for a circulant family on a subset of Z_modulus with the
// arithmetic count N_q in place of the projection count.
VerificationRecord corollary42_check(int modulus, const std::vector<int>& lambda,
                                     const std::map<int, cplx>& coeffs, int p);

// Exact coordinate expansion of f_1 (x) ... (x) f_p with seeded rational
// vectors, plus the sign-average bound with S_k computed by exact expectation.
VerificationRecord tensor_identity_check(const std::vector<int>& dims, int family_size, int p,
                                         std::uint64_t seed);

struct SuiteConfig {
  std::string suite = "all";
  int p = 4;
  std::uint64_t seed = 42;
  int trials = 10;
};

VerificationReport run_suite(const SuiteConfig& config);

}  // namespace porthos
