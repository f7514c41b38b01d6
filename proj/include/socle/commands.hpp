#pragma once

// Single-shot operations packaged as reports, one experiment per command.

#include <cstdint>
#include <optional>
#include <string>

#include "socle/experiments.hpp"
#include "socle/local.hpp"

namespace socle {

/// A ring to run commands on, with the label used in reports.
struct NamedRing {
  std::string label;
  RingFile file;
  LocalRing local;
};

/// Parses a ring file; `field` replaces the file's field when given.
NamedRing load_ring(const std::string& text, const std::string& label, const std::optional<Field>& field = {});
NamedRing zoo_ring(const std::string& id, const Field& field);

/// Comma-separated polynomials, or the name of an ideal bound in the file.
std::vector<Polynomial> resolve_ideal(const NamedRing& ring, const std::string& text);

struct CommandOptions {
  std::uint64_t seed = 1;
  std::size_t oracle_cap = 2000;
  unsigned samples = 20;
};

/// I^2 = QI for I = Q : m, cross-checked by the oracle; `expect` makes a
/// differing verdict a failure.
Report check_i2qi_command(const NamedRing& ring, const std::string& q, std::optional<bool> expect,
                          const CommandOptions& opts);
Report rednum_command(const NamedRing& ring, const std::string& q, std::optional<unsigned> cap,
                      const CommandOptions& opts);
/// dim, multiplicity, H0, depth probe, type estimate.
Report invariants_command(const NamedRing& ring, const CommandOptions& opts);
/// Recomputes the recorded invariants of a zoo entry.
Report zoo_verify_command(const std::string& id, const Field& field, const CommandOptions& opts);
Report colon_split_command(unsigned instances, const RunOptions& opts);

}  // namespace socle
