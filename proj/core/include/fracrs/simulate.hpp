#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracrs/radii.hpp"
#include "fracrs/recovery.hpp"
#include "fracrs/rng.hpp"
#include "fracrs/rs.hpp"
#include "fracrs/serialize.hpp"

namespace fracrs {

struct SimConfig {
  SetupParams params;          // fully resolved at load time
  std::vector<std::size_t> ts; // error weights to sweep
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  bool self_check = true;
  std::size_t workers = 1;
  std::string out;             // path base for report files ("" = none)
};

/// Parse and validate a config file; every constructor precondition is
/// checked here so a bad config fails fast, before any trial runs.
SimConfig load_sim_config(const std::string& path);

constexpr std::size_t kFailureReasonCount = 7;

struct SimRow {
  std::size_t t = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t miscorrections = 0;
  std::array<std::uint64_t, kFailureReasonCount> fail_by_reason{};
  std::vector<std::uint64_t> weight_hist;  // projected-error column weight, 0..t

  double rate = 0.0;   // (failures + miscorrections) / trials
  double ci_lo = 0.0;  // Clopper-Pearson 95%
  double ci_hi = 0.0;
  double bound = 0.0;  // failure_bound at the scheme's exact radius
  std::optional<Rat> bound_exact;
  bool bound_ok = true;          // ci_lo <= bound
  bool exceeds_radius = false;   // t > floor of the projection radius

  std::uint64_t failures() const {
    std::uint64_t s = 0;
    for (auto c : fail_by_reason) s += c;
    return s;
  }
};

struct SimReport {
  SetupParams params;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  bool self_check = true;
  RadiusReport radii;
  std::vector<SimRow> rows;
};

/// A weight-t error vector: t distinct positions drawn uniformly without
/// replacement, each value uniform over the nonzero elements of F_{q^l}.
std::vector<Xelt> plant_error(const CodeSpec& spec, std::size_t t, Xoshiro256& rng);

/// Seeded Monte-Carlo: per trial, a random message is encoded, corrupted,
/// projected and decoded; outcomes are classified as success (exact message
/// equality), detected failure (by reason) or miscorrection. The per-trial
/// RNG stream depends only on (seed, t, trial index), so reports are
/// identical for any worker count.
SimReport run_trials(const SimConfig& cfg);

/// Alias of run_trials for configs carrying a range of t values.
SimReport sweep(const SimConfig& cfg);

std::string report_csv(const SimReport& rep);
void write_report_csv(const std::string& path, const SimReport& rep);
void write_report_json(const std::string& path, const SimReport& rep);

}  // namespace fracrs
