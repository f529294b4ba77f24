#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "extschur/symgroup.hpp"

namespace extschur {

/// A vertex of a Brauer diagram: a source (positive) or target (negative)
/// point, indexed from 0.
struct BrauerVertex {
  bool positive;
  int index;
  friend auto operator<=>(const BrauerVertex& a, const BrauerVertex& b) {
    // Positive vertices sort first.
    if (a.positive != b.positive) return b.positive <=> a.positive;
    return a.index <=> b.index;
  }
  friend bool operator==(const BrauerVertex&, const BrauerVertex&) = default;
};

/// Perfect matching of m positive and n negative vertices with no pair of
/// two positives. Pairs are stored as (smaller, larger) and sorted.
class UpwardBrauerDiagram {
 public:
  explicit UpwardBrauerDiagram(std::vector<std::pair<BrauerVertex, BrauerVertex>> pairs);

  const std::vector<std::pair<BrauerVertex, BrauerVertex>>& pairs() const {
    return pairs_;
  }
  /// Relabels positives by tau and negatives by sigma.
  UpwardBrauerDiagram relabel(const Permutation& sigma, const Permutation& tau) const;
  std::string str() const;

  friend bool operator==(const UpwardBrauerDiagram&, const UpwardBrauerDiagram&) = default;
  friend auto operator<=>(const UpwardBrauerDiagram&, const UpwardBrauerDiagram&) = default;

 private:
  std::vector<std::pair<BrauerVertex, BrauerVertex>> pairs_;
};

/// All diagrams in ub(m, n): m positives, n negatives. Deterministic order.
std::vector<UpwardBrauerDiagram> enumerate_ub(int m, int n);
std::uint64_t ub_dim(int m, int n);

/// id_n (x) c in ub(n, n+2): i+ paired with i-, plus the pair of the last
/// two negatives.
UpwardBrauerDiagram casimir_insertion_diagram(int n);

/// Number of diagrams of ub(n, m) fixed by sigma on the m negatives and
/// tau on the n positives.
std::int64_t ub_bimodule_trace(int n, int m, const Permutation& sigma,
                               const Permutation& tau);

}  // namespace extschur
