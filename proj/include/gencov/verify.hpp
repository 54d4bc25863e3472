#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "gencov/core.hpp"

namespace gencov {

// Fixed-width bit mask over the points 1..n of one part.
class PointMask {
 public:
  PointMask() = default;
  PointMask(const PointSet& points, int n) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {
    for (int x : points) words_[static_cast<std::size_t>(x - 1) / 64] |= std::uint64_t{1} << ((x - 1) % 64);
  }

  bool contains(const PointMask& sub) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (sub.words_[w] & ~words_[w]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct VerificationReport {
  bool valid = true;
  std::uint64_t checked_patterns = 0;
  std::uint64_t checked_tuples = 0;
  std::optional<SetTuple> first_uncovered;
  std::uint64_t deficient_count = 0;
};

struct VerifyOptions {
  // Scanning stops after this many deficient tuples.
  std::uint64_t deficit_cap = 1000;
  // Patterns are split across this many threads; the report does not depend on it.
  int jobs = 1;
};

namespace detail {

// Blocks indexed part by part as masks, so containment is a mask-subset test.
class MaskedBlocks {
 public:
  explicit MaskedBlocks(const Design& d) : sizes_(d.structure().sizes()) {
    masks_.reserve(d.blocks().size());
    for (const Block& b : d.blocks()) {
      std::vector<PointMask> row;
      for (int i = 0; i < b.parts_count(); ++i) row.emplace_back(b.part(i), sizes_[static_cast<std::size_t>(i)]);
      masks_.push_back(std::move(row));
    }
  }

  // Multiplicity of t, counting no further than limit.
  int multiplicity(const SetTuple& t, const std::vector<int>& active, int limit) const {
    std::vector<PointMask> tm;
    tm.reserve(active.size());
    for (int i : active) tm.emplace_back(t.parts[static_cast<std::size_t>(i)], sizes_[static_cast<std::size_t>(i)]);
    int count = 0;
    for (const auto& row : masks_) {
      bool inside = true;
      for (std::size_t a = 0; a < active.size() && inside; ++a)
        inside = row[static_cast<std::size_t>(active[a])].contains(tm[a]);
      if (inside && ++count >= limit) break;
    }
    return count;
  }

 private:
  std::vector<int> sizes_;
  std::vector<std::vector<PointMask>> masks_;
};

struct Deficit {
  std::uint64_t position;  // index of the tuple within its pattern stream
  SetTuple tuple;
  int multiplicity;
};

struct PatternScan {
  std::uint64_t tuples = 0;
  std::vector<Deficit> deficits;  // at most cap entries
};

inline PatternScan scan_pattern(const Design& d, const MaskedBlocks& masks, const Pattern& p, std::uint64_t cap) {
  PatternScan scan;
  std::vector<int> active;
  for (int i = 0; i < d.structure().parts(); ++i)
    if (p.weights[static_cast<std::size_t>(i)] > 0) active.push_back(i);
  TupleEnumerator it(d.structure(), p);
  SetTuple t;
  while (it.next(t)) {
    const int mult = masks.multiplicity(t, active, d.lambda());
    if (mult < d.lambda()) {
      scan.deficits.push_back({scan.tuples, t, mult});
      if (scan.deficits.size() >= cap) {
        ++scan.tuples;
        break;
      }
    }
    ++scan.tuples;
  }
  return scan;
}

// Scans every pattern (in parallel when jobs > 1) and returns per-pattern results
// in pattern order, so merged output never depends on thread scheduling.
inline std::vector<PatternScan> scan_all(const Design& d, const std::vector<Pattern>& patterns, std::uint64_t cap,
                                         int jobs) {
  MaskedBlocks masks(d);
  std::vector<PatternScan> scans(patterns.size());
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, patterns.size() ? patterns.size() : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < patterns.size(); ++i) scans[i] = scan_pattern(d, masks, patterns[i], cap);
    return scans;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < patterns.size(); i += workers) scans[i] = scan_pattern(d, masks, patterns[i], cap);
    });
  for (auto& th : pool) th.join();
  return scans;
}

inline std::vector<Pattern> patterns_to_check(const Design& d) {
  // Strength 0 is vacuous: C(v,k,0) = 0 by convention.
  if (d.strength() == 0) return {};
  return admissible_patterns(d.structure(), d.strength());
}

}  // namespace detail

// Decides whether every admissible set tuple lies in at least lambda blocks.
inline VerificationReport verify(const Design& d, const VerifyOptions& options = {}) {
  const std::uint64_t cap = std::max<std::uint64_t>(options.deficit_cap, 1);
  const auto patterns = detail::patterns_to_check(d);
  const auto scans = detail::scan_all(d, patterns, cap, options.jobs);

  VerificationReport report;
  for (const auto& scan : scans) {
    ++report.checked_patterns;
    const std::uint64_t room = cap - report.deficient_count;
    if (scan.deficits.size() >= room) {
      // The global cap is hit inside this pattern: stop exactly where a
      // sequential scan would.
      const auto& last = scan.deficits[static_cast<std::size_t>(room) - 1];
      report.checked_tuples += last.position + 1;
      if (!report.first_uncovered) report.first_uncovered = scan.deficits.front().tuple;
      report.deficient_count = cap;
      break;
    }
    report.checked_tuples += scan.tuples;
    if (!scan.deficits.empty() && !report.first_uncovered) report.first_uncovered = scan.deficits.front().tuple;
    report.deficient_count += scan.deficits.size();
  }
  report.valid = !report.first_uncovered.has_value();
  return report;
}

// Up to cap admissible tuples covered fewer than lambda times, with their multiplicities.
inline std::vector<std::pair<SetTuple, int>> coverage_deficit(const Design& d, std::uint64_t cap) {
  if (cap < 1) throw Error(ErrorKind::InvalidInput, "cap must be at least 1");
  std::vector<std::pair<SetTuple, int>> out;
  const auto patterns = detail::patterns_to_check(d);
  detail::MaskedBlocks masks(d);
  for (const auto& p : patterns) {
    auto scan = detail::scan_pattern(d, masks, p, cap - out.size());
    for (auto& def : scan.deficits) out.emplace_back(std::move(def.tuple), def.multiplicity);
    if (out.size() >= cap) break;
  }
  return out;
}

inline bool is_valid(const Design& d) { return verify(d, {.deficit_cap = 1}).valid; }

}  // namespace gencov
