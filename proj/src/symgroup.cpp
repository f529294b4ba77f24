#include "extschur/symgroup.hpp"

#include <algorithm>
#include <numeric>

namespace extschur {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw ContractViolation("images do not form a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation{std::move(images)};
}

Permutation Permutation::from_images(std::initializer_list<int> one_based) {
  std::vector<int> images;
  for (int v : one_based) images.push_back(v - 1);
  return Permutation{std::move(images)};
}

Permutation Permutation::from_cycles(int n,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  Permutation result{images};
  for (const auto& cycle : cycles) {
    std::vector<int> step(images);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= n) throw ContractViolation("cycle letter out of range");
      step[static_cast<std::size_t>(from)] = to;
    }
    result = Permutation{step} * result;
  }
  return result;
}

Permutation Permutation::class_representative(const CycleType& type) {
  std::vector<int> images(static_cast<std::size_t>(type.size()));
  int start = 0;
  for (int len : type.parts()) {
    for (int i = 0; i < len; ++i)
      images[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  return Permutation{std::move(images)};
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation{std::move(inv)};
}

CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return CycleType{std::move(lengths)};
}

int Permutation::sign() const {
  int even_cycles = 0;
  const CycleType type = cycle_type();
  for (int len : type.parts())
    if (len % 2 == 0) ++even_cycles;
  return even_cycles % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::direct_sum(const Permutation& other) const {
  std::vector<int> images = images_;
  for (int v : other.images_) images.push_back(v + degree());
  return Permutation{std::move(images)};
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw ContractViolation("degree mismatch");
  std::vector<int> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t permutation_rank(const Permutation& p) {
  const int n = p.degree();
  std::size_t rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 0; v < p(i); ++v)
      if (!used[static_cast<std::size_t>(v)]) ++smaller;
    used[static_cast<std::size_t>(p(i))] = true;
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p) {
  GroupAlgebraElement x(p.degree());
  x.terms_.emplace(p, 1);
  return x;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (p.degree() != degree_) throw ContractViolation("degree mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.degree_ != degree_) throw ContractViolation("degree mismatch");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  if (other.degree_ != degree_) throw ContractViolation("degree mismatch");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) {
  if (sgn(s) == 0) return GroupAlgebraElement(a.degree_);
  for (auto& [p, c] : a.terms_) c *= s;
  return a;
}

SparseVector GroupAlgebraElement::coordinates() const {
  SparseVector v;
  for (const auto& [p, c] : terms_) v.emplace(permutation_rank(p), c);
  return v;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw ContractViolation("degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) out.add_term(p * q, cp * cq);
  return out;
}

GroupAlgebraElement multiply(const Permutation& p, const GroupAlgebraElement& a) {
  if (p.degree() != a.degree()) throw ContractViolation("degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [q, c] : a.terms()) out.add_term(p * q, c);
  return out;
}

GroupAlgebraElement tensor(const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b) {
  GroupAlgebraElement out(a.degree() + b.degree());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) out.add_term(p.direct_sum(q), cp * cq);
  return out;
}

namespace {

// Sum (optionally signed) over the direct product of the symmetric groups on
// each block of letters.
GroupAlgebraElement block_stabilizer_sum(int n,
                                         const std::vector<std::vector<int>>& blocks,
                                         bool signed_sum) {
  GroupAlgebraElement sum = GroupAlgebraElement::basis(Permutation::identity(n));
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    GroupAlgebraElement factor(n);
    std::vector<int> arrangement = block;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 0);
      for (std::size_t i = 0; i < block.size(); ++i)
        images[static_cast<std::size_t>(block[i])] = arrangement[i];
      const Permutation p{std::move(images)};
      factor.add_term(p, signed_sum ? p.sign() : 1);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    sum = multiply(sum, factor);
  }
  return sum;
}

}  // namespace

YoungSymmetrizer young_symmetrizer(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<std::vector<int>> rows, cols;
  int next = 0;
  for (int r = 0; r < lambda.length(); ++r) {
    rows.emplace_back();
    for (int c = 0; c < lambda[r]; ++c) {
      if (static_cast<std::size_t>(c) >= cols.size()) cols.emplace_back();
      rows.back().push_back(next);
      cols[static_cast<std::size_t>(c)].push_back(next);
      ++next;
    }
  }
  GroupAlgebraElement element = multiply(block_stabilizer_sum(n, rows, false),
                                         block_stabilizer_sum(n, cols, true));
  return {lambda, std::move(element)};
}

std::size_t left_ideal_dim(const GroupAlgebraElement& x) {
  SparseEchelonBasis basis;
  for (const auto& sigma : all_permutations(x.degree()))
    basis.insert(multiply(sigma, x).coordinates());
  return basis.rank();
}

std::vector<GroupAlgebraElement> right_ideal_with_embedded_symmetrizer(
    const Partition& lambda, int n_total) {
  if (n_total != lambda.size() + 2)
    throw ContractViolation("n_total must equal |lambda| + 2");
  const GroupAlgebraElement generator =
      tensor(young_symmetrizer(lambda).element,
             young_symmetrizer(Partition::row(2)).element);
  std::vector<GroupAlgebraElement> out;
  for (const auto& sigma : all_permutations(n_total))
    out.push_back(multiply(sigma, generator));
  return out;
}

std::size_t symmetrizer_multiplicity(const Partition& mu,
                                     const std::vector<GroupAlgebraElement>& subspace) {
  // Reduce the spanning set to a basis first; c_mu is then applied to at
  // most dim(span) elements instead of every spanning vector.
  SparseEchelonBasis span;
  std::vector<const GroupAlgebraElement*> independent;
  for (const auto& s : subspace) {
    if (s.degree() != mu.size())
      throw ContractViolation("subspace degree differs from |mu|");
    if (span.insert(s.coordinates())) independent.push_back(&s);
  }
  const GroupAlgebraElement c_mu = young_symmetrizer(mu).element;
  SparseEchelonBasis image;
  for (const auto* s : independent) image.insert(multiply(c_mu, *s).coordinates());
  return image.rank();
}

}  // namespace extschur
