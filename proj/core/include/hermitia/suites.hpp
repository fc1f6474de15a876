#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hermitia/graph.hpp"
#include "hermitia/switching.hpp"

namespace hermitia {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// HERMITIA_SEED if set to an integer, otherwise kDefaultSeed.
std::uint64_t default_seed();

// -- random sampling used by the randomized suites --------------------------

/// Each pair is an edge with probability `edge_prob`; gains are uniform over
/// the four units, or over {1, i, -i} when `mixed` is set.
QuartGainGraph random_gain_graph(std::mt19937_64& rng, std::size_t n, double edge_prob, bool mixed);
SwitchAssignment random_switch(std::mt19937_64& rng, std::size_t n);

// -- suites ------------------------------------------------------------------

struct SuiteFailure {
  std::string graph;  // .qgg text of the offending instance
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::vector<SuiteFailure> failures;  // sorted by graph text
  double millis = 0.0;

  bool passed() const { return failures.empty(); }
  /// {"suite", "checked", "failures": [{"graph", "expected", "got"}], "millis"}
  std::string to_json() const;
};

struct SuiteOptions {
  /// Largest order for suites that walk the enumeration corpus; nullopt
  /// uses the suite default (6 for thm12, 5 otherwise).
  std::optional<std::size_t> n;
  std::uint64_t seed = default_seed();
  /// Worker threads for corpus suites; 0 means hardware concurrency.
  unsigned threads = 0;
};

const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite name.
SuiteReport verify_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace hermitia
