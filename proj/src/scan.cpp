#include "ffzeta/scan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "ffzeta/errors.hpp"
#include "ffzeta/serialize.hpp"
#include "ffzeta/special.hpp"
#include "ffzeta/vadic.hpp"
#include "ffzeta/version.hpp"

namespace ffzeta {

std::vector<uint64_t> scanned_exponents(uint32_t r, const Place& place, uint64_t j_max) {
  std::vector<uint64_t> out;
  uint64_t step = place.at_infty ? uint64_t(r) - 1 : 1;
  for (uint64_t j = step; j <= j_max; j += step) out.push_back(j);
  return out;
}

namespace {

[[noreturn]] void frobenius_mismatch(uint64_t j, size_t d) {
  raise(errc::spec_mismatch, "coefficient " + std::to_string(d) + " of j=" +
                                 std::to_string(j) + " is not the p-th power of its j/p twin");
}

void check_frobenius_pair(const std::vector<BasePolynomial>& high,
                          const std::vector<BasePolynomial>& low, uint64_t j, int p) {
  if (high.size() != low.size()) frobenius_mismatch(j, std::min(high.size(), low.size()));
  for (size_t d = 0; d < high.size(); ++d)
    if (!(high[d] == frobenius_pow(low[d], uint64_t(p)))) frobenius_mismatch(j, d);
}

void check_frobenius_pair(const std::vector<CurveElement>& high,
                          const std::vector<CurveElement>& low, uint64_t j) {
  if (high.size() != low.size()) frobenius_mismatch(j, std::min(high.size(), low.size()));
  for (size_t d = 0; d < high.size(); ++d)
    if (!(high[d] == low[d].square())) frobenius_mismatch(j, d);
}

ScanEntry compute_entry(const RingSelector& ring, const Place& place, uint64_t j) {
  ScanEntry e;
  uint64_t p = uint64_t(ring.characteristic());
  // the scanned exponents are closed under division by p, so every p-multiple
  // has a twin to verify against
  bool check = j % p == 0 && j / p >= 1;
  if (place.at_infty) {
    if (ring.kind == RingSelector::Kind::fqt) {
      auto z = special_zeta_fqt(ring.field, j);
      e.report = trivial_zero_report(z);
      e.np = newton_polygon_infty(z.coeffs);
      if (check) {
        auto z0 = special_zeta_fqt(ring.field, j / p);
        check_frobenius_pair(z.coeffs, z0.coeffs, j, int(p));
        e.frobenius_checked = true;
      }
    } else {
      auto z = special_zeta_curve(ring.curve, j);
      e.report = trivial_zero_report(z);
      e.np = newton_polygon_infty(z.coeffs);
      if (check) {
        auto z0 = special_zeta_curve(ring.curve, j / p);
        check_frobenius_pair(z.coeffs, z0.coeffs, j);
        e.frobenius_checked = true;
      }
    }
  } else {
    auto vs = vadic_special_polynomial(ring.field, std::nullopt, *place.v, j);
    e.report = vadic_trivial_zero_order(vs);
    e.np = newton_polygon_at(vs.Q, *place.v);
    if (check) {
      auto vs0 = vadic_special_polynomial(ring.field, std::nullopt, *place.v, j / p);
      check_frobenius_pair(vs.Q, vs0.Q, j, int(p));
      e.frobenius_checked = true;
    }
  }
  return e;
}

// rebuild the aggregate view from sorted entries; closure pairs are only
// judged when the p-fold entry is present, so partial checkpoints stay valid
void finalize_aggregates(ScanReport& rep, int p) {
  rep.nonclassical_set.clear();
  rep.closure_violations.clear();
  int max_lp = -1;
  for (const auto& e : rep.entries)
    if (e.report.nonclassical) {
      rep.nonclassical_set.push_back(e.report.j);
      max_lp = std::max(max_lp, e.report.l_p);
    }
  rep.max_lp_nonclassical = max_lp >= 0 ? std::optional<int>(max_lp) : std::nullopt;

  auto entry_at = [&](uint64_t j) -> const ScanEntry* {
    auto it = std::lower_bound(rep.entries.begin(), rep.entries.end(), j,
                               [](const ScanEntry& e, uint64_t v) { return e.report.j < v; });
    return it != rep.entries.end() && it->report.j == j ? &*it : nullptr;
  };
  for (uint64_t j : rep.nonclassical_set) {
    if (j > rep.j_max / uint64_t(p)) continue;
    const ScanEntry* up = entry_at(j * uint64_t(p));
    if (up && !up->report.nonclassical) rep.closure_violations.emplace_back(j, j * uint64_t(p));
  }
}

} // namespace

ScanReport scan_nonclassical_set(const RingSelector& ring, const Place& place,
                                 uint64_t j_max, const ScanOptions& opts) {
  if (j_max < 1) raise(errc::invalid_input, "j_max must be at least 1");
  if (opts.workers < 1) raise(errc::config_error, "worker count must be at least 1");
  if (!place.at_infty && ring.kind != RingSelector::Kind::fqt)
    raise(errc::config_error, "finite-place scans support fqt rings only");

  ScanReport rep;
  rep.ring_id = ring.id;
  rep.place = place.to_string();
  rep.j_max = j_max;
  rep.ring_modulus = ring.modulus_text();
  rep.version = version_string;
  rep.timestamp = iso_timestamp_from_env();
  rep.d_max_policy = "ceil(l_r(j)/(r-1))+2g+3";
  rep.experimental_ring = ring.experimental();
  int p = ring.characteristic();

  std::map<uint64_t, ScanEntry> done;
  if (opts.resume) {
    const ScanReport& prev = *opts.resume;
    if (prev.ring_id != rep.ring_id || prev.place != rep.place)
      raise(errc::config_error, "resume report covers " + prev.ring_id + " at " + prev.place +
                                    ", not " + rep.ring_id + " at " + rep.place);
    for (const auto& e : prev.entries)
      if (e.report.j <= j_max) done.emplace(e.report.j, e);
  }

  std::vector<uint64_t> todo;
  for (uint64_t j : scanned_exponents(ring.r(), place, j_max))
    if (!done.count(j)) todo.push_back(j);

  struct Failure {
    uint64_t j;
    errc code;
    std::string message;
  };
  std::optional<Failure> failure;
  std::atomic<size_t> cursor{0};
  std::atomic<bool> stop{false};
  std::mutex sink; // guards done, failure, and checkpoint writes

  auto write_checkpoint = [&]() { // caller holds the sink mutex
    if (opts.checkpoint_path.empty()) return;
    ScanReport part = rep;
    part.entries.reserve(done.size());
    for (const auto& [j, e] : done) part.entries.push_back(e);
    finalize_aggregates(part, p);
    atomic_write_file(opts.checkpoint_path, scan_to_json(part).dump(2) + "\n");
  };

  auto worker = [&]() {
    while (!stop.load()) {
      size_t i = cursor.fetch_add(1);
      if (i >= todo.size()) return;
      uint64_t j = todo[i];
      try {
        ScanEntry e = compute_entry(ring, place, j);
        std::lock_guard<std::mutex> lock(sink);
        done.emplace(j, std::move(e));
        write_checkpoint();
      } catch (const error& err) {
        std::lock_guard<std::mutex> lock(sink);
        if (!failure || j < failure->j) failure = Failure{j, err.code(), err.what()};
        stop.store(true);
      }
    }
  };

  size_t nworkers = std::min(size_t(opts.workers), std::max<size_t>(todo.size(), 1));
  if (nworkers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (size_t w = 0; w < nworkers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (failure) raise(failure->code, "scan stopped at j=" + std::to_string(failure->j) +
                                        ": " + failure->message);

  rep.entries.reserve(done.size());
  for (auto& [j, e] : done) rep.entries.push_back(std::move(e));
  finalize_aggregates(rep, p);
  return rep;
}

DigitClosureAnalysis digit_closure_analysis(const ScanReport& report) {
  DigitClosureAnalysis a;
  int max_lp = -1;
  for (const auto& e : report.entries) {
    a.lp_histogram_all[e.report.l_p] += 1;
    if (e.report.nonclassical) {
      a.lp_histogram_nonclassical[e.report.l_p] += 1;
      max_lp = std::max(max_lp, e.report.l_p);
    }
  }
  if (max_lp >= 0) a.bounded_evidence = max_lp;
  a.closure_ok = report.closure_violations.empty();
  return a;
}

PrefixCheck compare_scan_prefix(const ScanReport& shorter, const ScanReport& longer) {
  if (shorter.ring_id != longer.ring_id || shorter.place != longer.place)
    raise(errc::invalid_input, "prefix comparison needs the same ring and place");
  if (shorter.j_max > longer.j_max)
    raise(errc::invalid_input, "prefix comparison needs nested exponent ranges");

  PrefixCheck c;
  auto entry_at = [&](uint64_t j) -> const ScanEntry* {
    auto it =
        std::lower_bound(longer.entries.begin(), longer.entries.end(), j,
                         [](const ScanEntry& e, uint64_t v) { return e.report.j < v; });
    return it != longer.entries.end() && it->report.j == j ? &*it : nullptr;
  };
  for (const auto& e : shorter.entries) {
    const ScanEntry* other = entry_at(e.report.j);
    if (!other || !(other->report == e.report)) {
      c.anomaly = true;
      c.note = "entry at j=" + std::to_string(e.report.j) +
               " changed between j_max=" + std::to_string(shorter.j_max) + " and " +
               std::to_string(longer.j_max);
      return c;
    }
  }

  int before = digit_closure_analysis(shorter).bounded_evidence.value_or(-1);
  int after = digit_closure_analysis(longer).bounded_evidence.value_or(-1);
  if (after > before) {
    c.anomaly = true;
    c.note = "max l_p over the non-classical set rose from " +
             (before < 0 ? std::string("none") : std::to_string(before)) + " to " +
             std::to_string(after) + " when j_max rose from " +
             std::to_string(shorter.j_max) + " to " + std::to_string(longer.j_max);
  } else {
    c.note = "max l_p over the non-classical set did not increase from j_max=" +
             std::to_string(shorter.j_max) + " to " + std::to_string(longer.j_max);
  }
  return c;
}

std::vector<HayesShiftRow> hayes_shift_view(const ScanReport& report) {
  bool genus_ring = report.ring_id == "genus1" || report.ring_id == "genus2" ||
                    report.ring_id.rfind("curve:", 0) == 0;
  if (!genus_ring || report.place != "infty")
    raise(errc::invalid_input, "shift view needs a curve-ring scan at infinity");
  std::vector<HayesShiftRow> rows;
  rows.reserve(size_t(report.j_max));
  for (uint64_t j = 0; j < report.j_max; ++j) {
    HayesShiftRow row;
    row.j = j;
    row.lp_j = digit_sum(j, 2);
    row.lp_next = digit_sum(j + 1, 2);
    row.nonclassical_shifted = std::binary_search(report.nonclassical_set.begin(),
                                                  report.nonclassical_set.end(), j + 1);
    rows.push_back(row);
  }
  return rows;
}

} // namespace ffzeta
