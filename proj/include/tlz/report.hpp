#pragma once

#include <map>
#include <string>
#include <vector>

#include "tlz/tensor.hpp"

namespace tlz {

/// One failed instance of an identity: the basis tuple it was evaluated on
/// and the exact two sides, rendered component-wise as canonical strings.
struct Violation {
  std::string identity;
  std::vector<int> tuple;
  std::vector<std::string> left;
  std::vector<std::string> right;
};

/// Outcome of a checker run. Identities are registered in evaluation order;
/// an identity passes when it has no recorded violations. Witnesses are
/// capped per identity but the total violation count is exact. `flags` and
/// `notes` carry structured side results (injectivity, commutation, case
/// analysis) for checkers that report more than a yes/no verdict.
class CheckReport {
 public:
  static constexpr int kMaxWitnessesPerIdentity = 4;

  void declare(const std::string& identity);

  /// Compare two sides at a tuple; record a violation on mismatch.
  /// Returns true when the sides agree.
  template <class K>
  bool require(const std::string& identity, const std::vector<int>& tuple, const Vec<K>& left,
               const Vec<K>& right) {
    declare(identity);
    if (left == right) return true;
    record(identity, tuple, to_strings(left), to_strings(right));
    return false;
  }

  /// Convenience for identities stated as `expression = 0`.
  template <class K>
  bool require_zero(const std::string& identity, const std::vector<int>& tuple,
                    const Vec<K>& value) {
    return require(identity, tuple, value, zero_vec<K>(static_cast<int>(value.size())));
  }

  bool pass() const { return total_violations_ == 0; }
  bool identity_passed(const std::string& identity) const;
  long long violation_count(const std::string& identity) const;

  const std::vector<std::string>& identities() const { return identities_; }
  const std::vector<Violation>& violations() const { return violations_; }
  long long total_violations() const { return total_violations_; }

  std::map<std::string, bool>& flags() { return flags_; }
  const std::map<std::string, bool>& flags() const { return flags_; }
  std::map<std::string, std::string>& notes() { return notes_; }
  const std::map<std::string, std::string>& notes() const { return notes_; }

  /// Fold a sub-report in, prefixing its identity names.
  void absorb(const std::string& prefix, const CheckReport& sub);

 private:
  void record(const std::string& identity, const std::vector<int>& tuple,
              std::vector<std::string> left, std::vector<std::string> right);

  template <class K>
  static std::vector<std::string> to_strings(const Vec<K>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.str());
    return out;
  }

  std::vector<std::string> identities_;
  std::map<std::string, long long> per_identity_;
  std::vector<Violation> violations_;
  long long total_violations_ = 0;
  std::map<std::string, bool> flags_;
  std::map<std::string, std::string> notes_;
};

}  // namespace tlz
