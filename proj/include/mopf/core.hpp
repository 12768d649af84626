#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mopf {

/// Objective-space coordinates, length = number of objectives.
using ObjectiveVector = std::vector<double>;

struct DecisionPoint {
  std::vector<long long> integer_part;
  std::vector<double> continuous_part;

  friend bool operator==(const DecisionPoint&, const DecisionPoint&) = default;
};

/// Lexicographic order: integer part first, then continuous part.
bool lex_less(const DecisionPoint& a, const DecisionPoint& b);

struct FrontEntry {
  DecisionPoint x;
  ObjectiveVector f;
};

/// A set of mutually non-strictly-dominated points in deterministic order
/// (sorted lexicographically by objective vector, duplicates suppressed).
struct FrontArchive {
  std::vector<FrontEntry> entries;
  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

/// Duplicate-image suppression tolerance used when finalizing archives.
inline constexpr double kDuplicateEps = 1e-9;

/// a strictly dominates b iff a_i < b_i - eps for every coordinate.
/// Pass eps = 0 for exact integer images, 1e-7 for continuous ones.
bool strictly_dominates(std::span<const double> a, std::span<const double> b,
                        double eps = 0.0);

/// Keeps exactly the entries not strictly dominated by any input entry,
/// sorted lexicographically by image with near-duplicates removed.
/// Throws std::invalid_argument on empty input.
FrontArchive filter_weak_front(std::vector<FrontEntry> entries, double eps_dom = 0.0);

/// Union of two archives followed by the weak-front filter.
FrontArchive archive_merge(const FrontArchive& a, const FrontArchive& b,
                           double eps_dom = 0.0);

}  // namespace mopf
