#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stonelat/semilattice.hpp"

namespace stonelat {

struct CatalogSpec {
  enum class Mode { kExhaustive, kRandom };

  std::size_t max_size = 4;
  Mode mode = Mode::kExhaustive;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
};

/// Throws TooSmall (max_size < 2) or TooLarge (exhaustive above 7, random
/// above 12 elements).
void validate(const CatalogSpec& spec);

/// Exhaustive: one bounded meet semilattice per isomorphism class with
/// 2..max_size elements, ordered by size and then canonical code. Random:
/// `sample_count` seeded samples with exactly max_size elements.
std::vector<Semilattice> enumerate_catalog(const CatalogSpec& spec);

/// Isomorphism invariant: the lexicographically least order matrix over all
/// relabelings that keep zero first and one last. Throws TooLarge above 10
/// elements.
std::string canonical_code(const Semilattice& s);

struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct Counterexample {
  std::string property;
  std::string detail;
  /// Replayable input in the semilattice text format.
  std::string instance;
};

struct VerificationReport {
  std::map<std::size_t, std::size_t> instances_by_size;
  std::vector<PropertyTally> properties;
  std::vector<Counterexample> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
  std::size_t instance_count() const;
};

/// Runs the full property battery on one semilattice, adding to `report`.
void verify_instance(const Semilattice& s, VerificationReport& report);

/// Enumerates the catalog and verifies every instance. Deterministic for a
/// given spec.
VerificationReport run_suite(const CatalogSpec& spec);

std::string format_text(const VerificationReport& r);
/// `key=value` lines.
std::string format_kv(const VerificationReport& r);

}  // namespace stonelat
