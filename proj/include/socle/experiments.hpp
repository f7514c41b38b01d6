#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "socle/field.hpp"
#include "socle/report.hpp"

namespace socle {

struct RunOptions {
  Field field = Field::prime(32003);
  std::uint64_t seed = 1;
  /// Sampled parameter ideals per sampled family.
  unsigned samples = 20;
  /// Instances of the colon identity property suites.
  unsigned split_instances = 200;
  unsigned dseq_instances = 50;
  /// Oracle cross-checks are run up to this truncation dimension.
  std::size_t oracle_cap = 2000;
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
};

std::vector<ExperimentInfo> experiment_catalog();

/// Throws InputError for an unknown name.
ExperimentResult run_experiment(const std::string& name, const RunOptions& opts);

/// Every experiment in catalog order, or only the named ones.
Report run_repro(const RunOptions& opts, const std::vector<std::string>& only = {});

}  // namespace socle
