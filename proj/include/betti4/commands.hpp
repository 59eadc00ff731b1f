#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "betti4/monomial.hpp"
#include "betti4/multidegrees.hpp"
#include "betti4/parse.hpp"

namespace betti4::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

enum class OutputFormat { Table, Json };

struct Limits {
  std::size_t max_generators = kDefaultGeneratorCap;
  Exponent max_exponent = kDefaultExponentCap;
};

/// Worker count: BETTI4_JOBS if set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned default_jobs();

/// One ideal per non-blank line, keeping the 1-based line number.
struct IdealLine {
  std::size_t line = 0;
  std::string text;
};

std::vector<IdealLine> read_ideal_lines(std::istream& in);

struct BettiOptions {
  OutputFormat format = OutputFormat::Table;
  bool multigraded = false;
  Limits limits;
  unsigned jobs = 1;
};

/// Betti tables for every ideal in `in`, in input order. JSON mode writes one
/// object per line. Lines that fail to parse produce an error object and make
/// the exit code kExitUsage.
int run_betti(std::istream& in, std::ostream& out, std::ostream& err, const BettiOptions& opts);

struct VerifyOptions {
  OutputFormat format = OutputFormat::Table;
  Limits limits;
  unsigned jobs = 1;
  bool include_atlas = false;
  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  std::size_t random_max_generators = 8;
  Exponent random_max_exponent = 4;
};

/// Compares the formula tables (totals and multigraded) against the homology
/// oracle over characteristics 0, 2, 3 and 5. Ideals come from `in` (may be
/// null), the atlas and/or a seeded random stream. Returns kExitMismatch with
/// a shrunk counterexample on any disagreement.
int run_verify(std::istream* in, std::ostream& out, std::ostream& err, const VerifyOptions& opts);

struct ExperimentConfig {
  std::size_t sample_count = 1000;
  std::size_t max_generators = 8;
  Exponent max_exponent = 4;
  std::uint64_t seed = 1;
};

struct ExperimentOptions {
  ExperimentConfig config;
  /// Ideal texts evaluated before the random samples (indices 0..k-1).
  std::vector<std::string> injected;
  Limits limits;
  unsigned jobs = 1;
};

/// CSV rows `seed_index,num_gens,beta2,beta3,beta4,pd,beta3_gt_beta2` and a
/// '#'-prefixed summary footer.
int run_experiment(std::ostream& out, std::ostream& err, const ExperimentOptions& opts);

struct AtlasOptions {
  OutputFormat format = OutputFormat::Table;
  bool check = false;
};

int run_atlas(std::ostream& out, std::ostream& err, const AtlasOptions& opts);

}  // namespace betti4::cli
