#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace homcx {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Names accepted by run_suites besides "all".
const std::vector<std::string>& suite_names();

/// Randomized invariant checks driven by `seed`: "core" (walks, ΠH
/// adjacency, square detection), "poset" (components, homology), "ef"
/// (membership, certificates, enumeration agreement) and "covers" (tree
/// covers, lift/proj). "all" runs every suite. Throws Parse for an unknown
/// name. Deterministic for a fixed seed.
std::vector<SuiteResult> run_suites(const std::string& suite, std::uint64_t seed);

}  // namespace homcx
