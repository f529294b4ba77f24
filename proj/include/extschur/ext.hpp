#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extschur/partition.hpp"

namespace extschur {

struct ExtQuery {
  Partition lambda;
  Partition mu;
  friend bool operator==(const ExtQuery&, const ExtQuery&) = default;
  friend auto operator<=>(const ExtQuery&, const ExtQuery&) = default;
};

/// Raised when a method cannot run at the requested size or for the
/// requested shapes. Not a contract violation: callers report the method
/// as unavailable.
class MethodUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oracle names as they appear in reports.
inline constexpr const char* kOracleCatLie = "catlie";
inline constexpr const char* kOracleUbCharacter = "ub_char";
inline constexpr const char* kOracleUbSymmetrizer = "ub_symmetrizer";
inline constexpr const char* kOracleSolver = "solver";

/// All known oracle names in report order.
const std::vector<std::string>& oracle_names();
bool is_oracle_name(const std::string& name);

struct ExtReport {
  ExtQuery query;
  std::uint64_t closed = 0;
  /// Absent value = method not applicable or unavailable at this size.
  std::map<std::string, std::optional<std::uint64_t>> oracles;
  bool agree = true;
  std::chrono::nanoseconds timing{0};
};

/// True iff all present values (closed and oracles) coincide.
bool values_agree(const ExtReport& r);

std::uint64_t ext0_closed(const ExtQuery& q);
std::uint64_t ext1_closed(const ExtQuery& q);
/// The |mu| = |lambda| - 1 branch only.
std::uint64_t ext1_grop_closed(const ExtQuery& q);

/// Multiplicity of S_mu (x) S_lambda in catLie(|lambda|, |mu|) by characters.
/// Requires |mu| = |lambda| - 1.
std::uint64_t ext1_oracle_catlie(const ExtQuery& q);
/// Multiplicity of S_mu (x) S_lambda in ub(|lambda|, |mu|) by characters.
/// Requires |mu| = |lambda| + 2.
std::uint64_t ext1_oracle_ub_character(const ExtQuery& q);
/// dim c_mu K S_(n+2) (c_lambda (x) c_(2)). Requires |mu| = |lambda| + 2;
/// throws MethodUnavailable when |mu| exceeds kSymmetrizerCap.
std::uint64_t ext1_oracle_ub_symmetrizer(const ExtQuery& q);
inline constexpr int kSymmetrizerCap = 6;
/// Casimir constraint kernel for one-row pairs (symmetric powers) and
/// one-column pairs outside the |mu| = |lambda| - 1 branch (exterior
/// powers). Throws MethodUnavailable for any other shape.
std::uint64_t ext1_oracle_solver(const ExtQuery& q);

/// Which bimodule a character table describes.
enum class Bimodule { catlie, upward_brauer };

/// Traces of the (S_m, S_n) action on catLie(n, m) or ub(n, m) for every
/// pair of conjugacy classes. Rows follow enumerate_partitions(m), columns
/// enumerate_partitions(n).
struct BimoduleCharacter {
  Bimodule kind;
  int n;
  int m;
  std::vector<std::vector<Rational>> trace;
};

/// Class-pair traces computed under OpenMP. Cached per (kind, n, m).
const BimoduleCharacter& bimodule_character(Bimodule kind, int n, int m);
/// Single-threaded reference, uncached.
BimoduleCharacter bimodule_character_serial(Bimodule kind, int n, int m);

/// (1 / (m! n!)) sum over class pairs of |C_s||C_t| chi_mu(s) chi_lambda(t) tr(s, t).
/// Throws std::logic_error if the result is not a non-negative integer.
std::uint64_t bimodule_multiplicity(const BimoduleCharacter& chi, const Partition& mu,
                                    const Partition& lambda);

/// Closed value plus every applicable table oracle (catlie, ub_char,
/// ub_symmetrizer) for one query.
ExtReport evaluate_query(const ExtQuery& q);
/// Closed value plus the named oracles only; inapplicable ones are absent.
ExtReport evaluate_query(const ExtQuery& q, const std::vector<std::string>& oracles);

/// Reports for all pairs with |lambda|, |mu| <= max_size, sorted by
/// (lambda, mu). Queries run on `jobs` OpenMP threads (0 = runtime default).
std::vector<ExtReport> verify_range(int max_size, int jobs = 0);
/// Single-threaded reference for verify_range.
std::vector<ExtReport> verify_range_serial(int max_size);

}  // namespace extschur
