#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chains {

enum class TargetKind {
  Squares,
  Cubes,
  Triangular,
  Pentagonal,  // generalized: k(3k+-1)/2, both sign branches
  Fibonacci,
  Lucas,
  Primes,
  Recurrence,  // x_{k+1} = x_k + x_{k-1} from two seeds
  Explicit,
};

std::string_view to_string(TargetKind k);
std::optional<TargetKind> parse_target_kind(std::string_view name);

/// Membership oracle for allowed adjacent-pair sums. Cheap to copy
/// (copies share the member cache); all queries are thread safe.
class TargetSet {
public:
  static TargetSet make(TargetKind kind);
  static TargetSet recurrence(std::int64_t x0, std::int64_t x1);
  static TargetSet explicit_set(std::vector<std::int64_t> members);

  TargetKind kind() const;
  std::pair<std::int64_t, std::int64_t> recurrence_seeds() const;
  const std::vector<std::int64_t>& explicit_members() const;

  /// True iff m is a member. Pure; never touches the cache.
  bool contains(std::int64_t m) const;

  /// All members <= bound, strictly increasing.
  std::vector<std::int64_t> values_upto(std::int64_t bound) const;

  /// All y in [1..n], y != x, with x+y a member, increasing.
  std::vector<int> partners(int x, int n) const;

private:
  struct State;
  explicit TargetSet(std::shared_ptr<State> s) : state_(std::move(s)) {}
  std::shared_ptr<State> state_;
};

}  // namespace chains
