#include "tlz/report.hpp"

#include <algorithm>

namespace tlz {

void CheckReport::declare(const std::string& identity) {
  auto [it, inserted] = per_identity_.try_emplace(identity, 0);
  (void)it;
  if (inserted) identities_.push_back(identity);
}

bool CheckReport::identity_passed(const std::string& identity) const {
  auto it = per_identity_.find(identity);
  return it == per_identity_.end() || it->second == 0;
}

long long CheckReport::violation_count(const std::string& identity) const {
  auto it = per_identity_.find(identity);
  return it == per_identity_.end() ? 0 : it->second;
}

void CheckReport::record(const std::string& identity, const std::vector<int>& tuple,
                         std::vector<std::string> left, std::vector<std::string> right) {
  long long& count = per_identity_[identity];
  ++count;
  ++total_violations_;
  if (count <= kMaxWitnessesPerIdentity) {
    violations_.push_back({identity, tuple, std::move(left), std::move(right)});
  }
}

void CheckReport::absorb(const std::string& prefix, const CheckReport& sub) {
  for (const auto& name : sub.identities_) {
    declare(prefix + name);
    auto it = sub.per_identity_.find(name);
    if (it != sub.per_identity_.end() && it->second > 0) {
      per_identity_[prefix + name] += it->second;
      total_violations_ += it->second;
    }
  }
  for (const auto& v : sub.violations_) {
    violations_.push_back({prefix + v.identity, v.tuple, v.left, v.right});
  }
  for (const auto& [k, b] : sub.flags_) flags_[prefix + k] = b;
  for (const auto& [k, s] : sub.notes_) notes_[prefix + k] = s;
}

}  // namespace tlz
