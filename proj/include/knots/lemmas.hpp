#pragma once

#include "knots/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knots {

struct LemmaResult {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::string detail;  // witness on failure, notes otherwise
};

/// Runs every lemma check on concrete data for one parameter triple.
/// Parity-conditional checks are reported as not applicable when p/d, q/d are
/// not both odd (or, for the sign-table checks, when p and q differ in parity).
/// psi_samples random phases are drawn for the phase-sum checks.
std::vector<LemmaResult> run_lemma_suite(const KnotParams& params, int psi_samples = 20,
                                         std::uint32_t seed = 0x5eed);

/// True iff every applicable check passed.
bool all_pass(const std::vector<LemmaResult>& results);

}  // namespace knots
