#include "mopf/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mopf {

bool lex_less(const DecisionPoint& a, const DecisionPoint& b) {
  if (a.integer_part != b.integer_part)
    return std::lexicographical_compare(a.integer_part.begin(), a.integer_part.end(),
                                        b.integer_part.begin(), b.integer_part.end());
  return std::lexicographical_compare(a.continuous_part.begin(), a.continuous_part.end(),
                                      b.continuous_part.begin(), b.continuous_part.end());
}

bool strictly_dominates(std::span<const double> a, std::span<const double> b, double eps) {
  if (a.size() != b.size())
    throw std::invalid_argument("strictly_dominates: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] < b[i] - eps)) return false;
  return true;
}

namespace {

bool image_lex_less(const ObjectiveVector& a, const ObjectiveVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool near_duplicate(const ObjectiveVector& a, const ObjectiveVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > kDuplicateEps) return false;
  return true;
}

}  // namespace

FrontArchive filter_weak_front(std::vector<FrontEntry> entries, double eps_dom) {
  if (entries.empty()) throw std::invalid_argument("filter_weak_front: empty input");
  const std::size_t dim = entries.front().f.size();
  for (const auto& e : entries)
    if (e.f.size() != dim)
      throw std::invalid_argument("filter_weak_front: dimension mismatch");

  std::vector<FrontEntry> kept;
  kept.reserve(entries.size());
  for (const auto& cand : entries) {
    bool dominated = false;
    for (const auto& other : entries) {
      if (strictly_dominates(other.f, cand.f, eps_dom)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(cand);
  }

  std::sort(kept.begin(), kept.end(), [](const FrontEntry& a, const FrontEntry& b) {
    if (a.f != b.f) return image_lex_less(a.f, b.f);
    return lex_less(a.x, b.x);
  });

  FrontArchive out;
  out.entries.reserve(kept.size());
  for (const auto& e : kept) {
    bool dup = false;
    // duplicates sort adjacently; scan back while the leading coordinate is close
    for (auto it = out.entries.rbegin(); it != out.entries.rend(); ++it) {
      if (!e.f.empty() && it->f[0] < e.f[0] - kDuplicateEps) break;
      if (near_duplicate(it->f, e.f)) {
        dup = true;
        break;
      }
    }
    if (!dup) out.entries.push_back(e);
  }
  return out;
}

FrontArchive archive_merge(const FrontArchive& a, const FrontArchive& b, double eps_dom) {
  if (a.empty() && b.empty()) throw std::invalid_argument("archive_merge: both empty");
  if (!a.empty() && !b.empty() &&
      a.entries.front().f.size() != b.entries.front().f.size())
    throw std::invalid_argument("archive_merge: dimension mismatch");
  std::vector<FrontEntry> all = a.entries;
  all.insert(all.end(), b.entries.begin(), b.entries.end());
  return filter_weak_front(std::move(all), eps_dom);
}

}  // namespace mopf
