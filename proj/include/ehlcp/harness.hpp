#pragma once

#include <cstdint>
#include <map>

#include "ehlcp/solver.hpp"
#include "ehlcp/wprops.hpp"

namespace ehlcp {

enum class TupleKind { General, ColumnW, ZNormalized, MZero, SSMWCandidate };

const char* to_string(TupleKind k);

// Deterministic tuple generator request: identical spec -> identical output.
struct GeneratorSpec {
  int n = 2;
  int k = 1;
  TupleKind kind = TupleKind::General;
  long long entry_min = -3;
  long long entry_max = 3;
  int max_den = 2;
  std::uint64_t seed = 0;
  int resample_budget = 256;
};

/// Draws a tuple of the requested kind; kinds that promise a property are
/// certified by the corresponding checker and resampled on failure. Throws
/// std::runtime_error when the resample budget runs out.
MatrixTuple gen_tuple(const GeneratorSpec& spec);

enum class QMode { Any, NonNeg, Positive };
enum class DMode { Ones, RandomPositive };

Instance gen_instance(const MatrixTuple& tuple, QMode q_mode, DMode d_mode, std::uint64_t seed);

// Fixture tuples used throughout the suites: (I, P-matrix pair) with no
// SSM-W property, and (I, ones, ones) with it.
MatrixTuple fixture_p_members();
MatrixTuple fixture_ones_members();

struct FailureRecord {
  std::uint64_t trial_seed = 0;
  std::string instance;  // JSON of the offending tuple/instance
  std::string expected;
  std::string observed;
};

struct SuiteReport {
  std::string suite;
  std::string statement;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  int skips = 0;  // trials whose hypothesis did not hold
  bool sampled_universal = false;
  std::vector<FailureRecord> failure_list;
  std::map<std::string, int> notes;

  bool ok() const { return failures == 0; }
};

struct SuiteSizes {
  int max_n = 3;
  int max_k = 2;
};

/// Runs one property suite; unknown ids throw.
SuiteReport run_suite(const std::string& suite_id, int trials, SuiteSizes sizes, std::uint64_t seed);

std::vector<std::string> suite_ids();

}  // namespace ehlcp
