#include "extschur/brauer.hpp"

#include <algorithm>

namespace extschur {

UpwardBrauerDiagram::UpwardBrauerDiagram(
    std::vector<std::pair<BrauerVertex, BrauerVertex>> pairs)
    : pairs_(std::move(pairs)) {
  for (auto& [a, b] : pairs_) {
    if (a.positive && b.positive)
      throw ContractViolation("upward Brauer diagrams never pair two positives");
    if (b < a) std::swap(a, b);
  }
  std::sort(pairs_.begin(), pairs_.end());
}

UpwardBrauerDiagram UpwardBrauerDiagram::relabel(const Permutation& sigma,
                                                 const Permutation& tau) const {
  auto move = [&](BrauerVertex v) {
    return BrauerVertex{v.positive, v.positive ? tau(v.index) : sigma(v.index)};
  };
  std::vector<std::pair<BrauerVertex, BrauerVertex>> moved;
  moved.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) moved.emplace_back(move(a), move(b));
  return UpwardBrauerDiagram{std::move(moved)};
}

std::string UpwardBrauerDiagram::str() const {
  auto name = [](BrauerVertex v) {
    return std::to_string(v.index + 1) + (v.positive ? "+" : "-");
  };
  std::string s = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += ' ';
    s += name(pairs_[i].first) + name(pairs_[i].second);
  }
  return s + "}";
}

namespace {

void match_rec(std::vector<BrauerVertex>& open,
               std::vector<std::pair<BrauerVertex, BrauerVertex>>& chosen,
               std::vector<UpwardBrauerDiagram>& out) {
  if (open.empty()) {
    out.emplace_back(chosen);
    return;
  }
  const BrauerVertex first = open.front();
  for (std::size_t i = 1; i < open.size(); ++i) {
    const BrauerVertex partner = open[i];
    if (first.positive && partner.positive) continue;
    std::vector<BrauerVertex> rest;
    for (std::size_t j = 1; j < open.size(); ++j)
      if (j != i) rest.push_back(open[j]);
    chosen.emplace_back(first, partner);
    match_rec(rest, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<UpwardBrauerDiagram> enumerate_ub(int m, int n) {
  std::vector<UpwardBrauerDiagram> out;
  if (m < 0 || n < m || (n - m) % 2 != 0) return out;
  std::vector<BrauerVertex> open;
  for (int i = 0; i < m; ++i) open.push_back({true, i});
  for (int i = 0; i < n; ++i) open.push_back({false, i});
  std::vector<std::pair<BrauerVertex, BrauerVertex>> chosen;
  match_rec(open, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ub_dim(int m, int n) { return enumerate_ub(m, n).size(); }

UpwardBrauerDiagram casimir_insertion_diagram(int n) {
  std::vector<std::pair<BrauerVertex, BrauerVertex>> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({{true, i}, {false, i}});
  pairs.push_back({{false, n}, {false, n + 1}});
  return UpwardBrauerDiagram{std::move(pairs)};
}

std::int64_t ub_bimodule_trace(int n, int m, const Permutation& sigma,
                               const Permutation& tau) {
  if (sigma.degree() != m || tau.degree() != n)
    throw ContractViolation("ub_bimodule_trace: permutation degrees do not match (n, m)");
  if (m != n && m != n + 2)
    throw ContractViolation("ub_bimodule_trace: only m = n and m = n + 2 are supported");
  std::int64_t fixed = 0;
  for (const auto& d : enumerate_ub(n, m))
    if (d.relabel(sigma, tau) == d) ++fixed;
  return fixed;
}

}  // namespace extschur
