#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffzeta/rings.hpp"
#include "ffzeta/zeros.hpp"

namespace ffzeta {

struct ScanEntry {
  TrivialZeroReport report;
  NewtonPolygon np; // at the scan's place
  // c_d(j) verified equal to c_d(j/p)^p; false only when j is not a multiple
  // of p (nothing below it to check against)
  bool frobenius_checked = false;

  friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

struct ScanReport {
  std::string ring_id;
  std::string place = "infty";
  uint64_t j_max = 0;
  std::vector<ScanEntry> entries; // ascending j
  std::vector<uint64_t> nonclassical_set;
  std::optional<int> max_lp_nonclassical;
  // (j, pj) with j non-classical but pj classical: proved impossible, so any
  // entry here is an arithmetic bug
  std::vector<std::pair<uint64_t, uint64_t>> closure_violations;

  std::string ring_modulus;
  std::string version;
  std::string timestamp; // empty unless SOURCE_DATE_EPOCH is set
  std::string d_max_policy;
  bool experimental_ring = false;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct ScanOptions {
  int workers = 1;
  // when set, the partial report is rewritten (write-new-then-rename) after
  // every completed exponent
  std::string checkpoint_path;
  std::optional<ScanReport> resume; // completed entries to reuse
};

// the exponents a scan visits: multiples of r-1 at infinity, every j >= 1 at
// a finite place
std::vector<uint64_t> scanned_exponents(uint32_t r, const Place& place, uint64_t j_max);

ScanReport scan_nonclassical_set(const RingSelector& ring, const Place& place,
                                 uint64_t j_max, const ScanOptions& opts = {});

struct DigitClosureAnalysis {
  std::optional<int> bounded_evidence; // max l_p over the non-classical set
  std::map<int, uint64_t> lp_histogram_nonclassical;
  std::map<int, uint64_t> lp_histogram_all;
  bool closure_ok = true;
};

DigitClosureAnalysis digit_closure_analysis(const ScanReport& report);

// Raising j_max must not change already-scanned entries nor increase the
// non-classical digit-sum maximum; any change is flagged, not asserted.
struct PrefixCheck {
  bool anomaly = false;
  std::string note;
};

PrefixCheck compare_scan_prefix(const ScanReport& shorter, const ScanReport& longer);

// The shift view reads a genus-ring scan as evidence about the shifted series
// L(s-1): j is non-classical for the shifted series exactly when j+1 is in
// the scan's non-classical set.
struct HayesShiftRow {
  uint64_t j = 0;
  int lp_j = 0;
  int lp_next = 0;
  bool nonclassical_shifted = false;
};

std::vector<HayesShiftRow> hayes_shift_view(const ScanReport& report);

} // namespace ffzeta
