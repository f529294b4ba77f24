#include "extschur/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace extschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw ContractViolation("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ContractViolation("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::row(int n) {
  if (n < 0) throw ContractViolation("negative size");
  return n == 0 ? Partition{} : Partition{{n}};
}

Partition Partition::column(int n) {
  if (n < 0) throw ContractViolation("negative size");
  return Partition{std::vector<int>(static_cast<std::size_t>(n), 1)};
}

bool Partition::is_column() const {
  return parts_.empty() || parts_.front() == 1;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 0; c < (empty() ? 0 : parts_.front()); ++c) {
    int height = 0;
    while (height < length() && parts_[height] > c) ++height;
    out.push_back(height);
  }
  return Partition{std::move(out)};
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Larger parts sort first: compare b against a lexicographically.
  return std::lexicographical_compare_three_way(
      b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

Partition parse_partition(std::string_view text) {
  if (text.empty() || text == "0") return Partition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() ||
        value <= 0)
      throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
    parts.push_back(value);
    pos = comma + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw std::invalid_argument("partition \"" + std::string(text) +
                                  "\" is not weakly decreasing");
  return Partition{std::move(parts)};
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw ContractViolation("negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = enumerate_partitions(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw ContractViolation("factorial out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / i;
  return b;
}

std::uint64_t hook_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::uint64_t num = factorial(lambda.size());
  std::uint64_t den = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      den *= static_cast<std::uint64_t>((lambda[i] - j - 1) + (conj[j] - i - 1) + 1);
  return num / den;
}

namespace {

// Fills the skew shape row by row from the top, each row right to left, so
// the cells are visited in reverse reading order and the lattice condition
// can be checked incrementally.
class LrCounter {
 public:
  LrCounter(const Partition& outer, const Partition& inner, const Partition& content)
      : outer_(outer), inner_(inner), content_(content),
        filling_(static_cast<std::size_t>(outer.length())),
        used_(static_cast<std::size_t>(content.length()), 0) {
    for (int r = 0; r < outer.length(); ++r)
      filling_[r].assign(static_cast<std::size_t>(outer[r]), 0);
  }

  std::uint64_t count() { return fill(0, outer_.length() > 0 ? outer_[0] - 1 : -1); }

 private:
  std::uint64_t fill(int row, int col) {
    while (row < outer_.length() && col < inner_[row]) {
      ++row;
      if (row < outer_.length()) col = outer_[row] - 1;
    }
    if (row >= outer_.length()) return 1;

    std::uint64_t total = 0;
    // Row weakly increasing left to right: value <= right neighbour.
    int hi = content_.length();
    if (col + 1 < outer_[row]) hi = std::min(hi, filling_[row][col + 1]);
    // Column strictly increasing downward: value > entry above.
    int lo = 1;
    if (row > 0 && col < outer_[row - 1] && col >= inner_[row - 1])
      lo = filling_[row - 1][col] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto k = static_cast<std::size_t>(v - 1);
      if (used_[k] >= content_[v - 1]) continue;
      if (v > 1 && used_[k] + 1 > used_[k - 1]) continue;  // lattice word
      ++used_[k];
      filling_[row][col] = v;
      total += fill(row, col - 1);
      filling_[row][col] = 0;
      --used_[k];
    }
    return total;
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition& content_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> used_;
};

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& rho,
                             const Partition& nu) {
  if (rho.size() + nu.size() != lambda.size() || !lambda.contains(rho) ||
      !lambda.contains(nu))
    return 0;
  LrCounter counter(lambda, rho, nu);
  return counter.count();
}

std::vector<Partition> pieri_add_horizontal(const Partition& rho, int k) {
  if (k < 0) throw ContractViolation("negative strip size");
  std::vector<Partition> out;
  const int rows = rho.length() + 1;
  std::vector<int> parts(static_cast<std::size_t>(rows));
  // Row i may grow up to rho[i-1] (row 0 without bound), which keeps the
  // added boxes in distinct columns.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == rows) {
      if (remaining == 0) {
        std::vector<int> trimmed;
        for (int p : parts)
          if (p > 0) trimmed.push_back(p);
        out.emplace_back(std::move(trimmed));
      }
      return;
    }
    const int cap = i == 0 ? rho[0] + remaining : rho[i - 1];
    for (int v = std::min(cap, rho[i] + remaining); v >= rho[i]; --v) {
      parts[i] = v;
      self(self, i + 1, remaining - (v - rho[i]));
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> pieri_remove_vertical(const Partition& lambda, int k) {
  if (k < 0) throw ContractViolation("negative strip size");
  std::vector<Partition> out;
  const int rows = lambda.length();
  std::vector<int> parts(static_cast<std::size_t>(rows));
  // Remove at most one box per row, bottom-up so the result stays a partition.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i < 0) {
      if (remaining == 0) {
        std::vector<int> trimmed;
        for (int p : parts)
          if (p > 0) trimmed.push_back(p);
        out.emplace_back(std::move(trimmed));
      }
      return;
    }
    const int below = i + 1 < rows ? parts[i + 1] : 0;
    for (int drop = 0; drop <= std::min(1, remaining); ++drop) {
      const int v = lambda[i] - drop;
      if (v < below) continue;
      parts[i] = v;
      self(self, i - 1, remaining - drop);
    }
  };
  rec(rec, rows - 1, k);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Shapes are encoded as beta-sets: bead positions lambda_i + (L - 1 - i) for
// a fixed number of beads L. Removing a rim hook of length r moves one bead
// down by r onto an empty position; the sign is (-1)^(beads jumped over).
using BetaSet = std::vector<int>;
using MnKey = std::pair<BetaSet, std::vector<int>>;

std::int64_t mn_rec(const BetaSet& beta, const std::vector<int>& cycles,
                    std::size_t next, std::map<MnKey, std::int64_t>& memo) {
  if (next == cycles.size()) return 1;
  MnKey key{beta, std::vector<int>(cycles.begin() + static_cast<std::ptrdiff_t>(next),
                                   cycles.end())};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = cycles[next];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
      continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    BetaSet moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const std::int64_t sub = mn_rec(moved, cycles, next + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t character_value(const Partition& lambda, const CycleType& cls) {
  if (lambda.size() != cls.size())
    throw ContractViolation("character_value: |lambda| != |class|");
  const int beads = lambda.length();
  BetaSet beta(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i) beta[i] = lambda[i] + (beads - 1 - i);
  std::map<MnKey, std::int64_t> memo;
  return mn_rec(beta, cls.parts(), 0, memo);
}

std::uint64_t class_size(const CycleType& cls) {
  std::uint64_t z = 1;
  std::map<int, int> mult;
  for (int p : cls.parts()) {
    z *= static_cast<std::uint64_t>(p);
    z *= static_cast<std::uint64_t>(++mult[p]);
  }
  return factorial(cls.size()) / z;
}

const std::vector<std::vector<std::int64_t>>& character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<std::vector<std::int64_t>>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    const auto parts = enumerate_partitions(n);
    auto table = std::make_unique<std::vector<std::vector<std::int64_t>>>();
    for (const auto& lambda : parts) {
      std::vector<std::int64_t> row;
      for (const auto& cls : parts) row.push_back(character_value(lambda, cls));
      table->push_back(std::move(row));
    }
    slot = std::move(table);
  }
  return *slot;
}

std::uint64_t schur_dim(const Partition& lambda, int k) {
  if (k < 0) throw ContractViolation("negative dimension");
  if (k < lambda.length()) return 0;
  const Partition conj = lambda.conjugate();
  Rational value = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const int hook = (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
      value *= Rational(k + j - i, hook);
    }
  value.canonicalize();
  return value.get_num().get_ui();
}

}  // namespace extschur
