#pragma once

#include "linfinf/decomposable.hpp"
#include "linfinf/duality.hpp"
#include "linfinf/represent.hpp"
#include "linfinf/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linfinf {

/// Documented default for every seeded driver (CLI and acceptance suite).
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// One worked pairing of the coordinate germ against a named f under the
/// grid measure. All numbers are computed, never quoted.
struct PairingCase {
  std::string label;
  SimpleFunc f;
  ExtRat l1;
  Rat value;      // Tf
  bool bound_ok;  // |Tf| <= norm * l1
};

struct DualPairingReport {
  Rat norm;  // germ_norm of the coordinate germ
  std::vector<PairingCase> cases;

  bool ok() const;
};

DualPairingReport demo_dual_pairing();

struct NormAttainmentReport {
  Rat eps;
  Rat norm;
  SimpleFunc witness;
  ExtRat l1;  // must be exactly 1
  Rat value;  // pairing against the witness

  bool ok() const;
};

NormAttainmentReport demo_norm_attainment(const Rat& eps);

/// The exhaustive coefficient battery plus `extra` seeded randomized
/// candidates with at most two line overrides each.
std::vector<CandidateGlobal> full_battery(std::uint64_t seed, size_t extra);

struct NonRepresentableReport {
  std::uint64_t seed;
  size_t battery_size;
  NonReprReport report;
  std::vector<CandidateGlobal> battery;

  bool ok() const { return report.all_witnessed; }
};

NonRepresentableReport demo_non_representable(std::uint64_t seed = kDefaultSeed,
                                              size_t extra = 100);

struct DsPartItem {
  Rat y;
  bool in_field;
  ExtRat mu;  // expected 1 under the lines measure
};

/// End-to-end walk of the lines-measure counterexample: parts, the two
/// decomposition conditions, patching, and the measurability failure.
struct DsRemarkReport {
  Germ germ;  // horizontal weight t -> t, vertical zero
  std::vector<DsPartItem> parts;
  std::vector<Figure2D> battery;
  size_t strip_index;  // position of the vertical strip in the battery
  StarReport star;
  std::optional<size_t> double_star_witness;
  PatchedFunction patched;
  bool patch_coherent;  // patched traces match part restrictions a.e.
  std::optional<MeasurabilityWitness> measurability;

  bool ok() const;
};

DsRemarkReport demo_ds_remark();

struct AxiomItem {
  std::string law;
  size_t failures;
};

/// Norm axioms, vector-space laws, and invariance under a.e. equivalence on
/// seeded random germ pairs/triples; exact comparisons throughout.
struct AxiomSuiteReport {
  std::uint64_t seed;
  size_t cases;
  std::vector<AxiomItem> items;

  size_t failures() const;
  bool ok() const { return failures() == 0; }
};

AxiomSuiteReport run_axiom_suite(std::uint64_t seed, size_t cases);

std::string render_text(const DualPairingReport& r);
std::string render_text(const NormAttainmentReport& r);
std::string render_text(const NonRepresentableReport& r);
std::string render_text(const DsRemarkReport& r);
std::string render_text(const AxiomSuiteReport& r);

Json render_json(const DualPairingReport& r);
Json render_json(const NormAttainmentReport& r);
Json render_json(const NonRepresentableReport& r);
Json render_json(const DsRemarkReport& r);
Json render_json(const AxiomSuiteReport& r);

}  // namespace linfinf
