#include "chains/targets.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "chains/common.hpp"

namespace chains {

namespace {

// Largest value accepted for explicit members and recurrence seeds:
// doubling must stay well inside 32-bit range.
constexpr std::int64_t kMaxInput = std::int64_t{1} << 30;
constexpr std::int64_t kValueCeiling = std::int64_t{1} << 62;

void sieve_primes(std::int64_t bound, std::vector<std::int64_t>& out) {
  if (bound < 2) return;
  if (bound > (std::int64_t{1} << 32))
    throw std::invalid_argument("prime enumeration bound too large");
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t p = 2; p * p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t q = p * p; q <= bound; q += p)
      composite[static_cast<std::size_t>(q)] = true;
  }
  for (std::int64_t v = 2; v <= bound; ++v)
    if (!composite[static_cast<std::size_t>(v)]) out.push_back(v);
}

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

}  // namespace

std::string_view to_string(TargetKind k) {
  switch (k) {
    case TargetKind::Squares: return "squares";
    case TargetKind::Cubes: return "cubes";
    case TargetKind::Triangular: return "triangular";
    case TargetKind::Pentagonal: return "pentagonal";
    case TargetKind::Fibonacci: return "fibonacci";
    case TargetKind::Lucas: return "lucas";
    case TargetKind::Primes: return "primes";
    case TargetKind::Recurrence: return "recurrence";
    case TargetKind::Explicit: return "explicit";
  }
  return "?";
}

std::optional<TargetKind> parse_target_kind(std::string_view name) {
  for (TargetKind k :
       {TargetKind::Squares, TargetKind::Cubes, TargetKind::Triangular,
        TargetKind::Pentagonal, TargetKind::Fibonacci, TargetKind::Lucas,
        TargetKind::Primes, TargetKind::Recurrence, TargetKind::Explicit})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

std::int64_t icbrt(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("icbrt of negative value");
  auto c = static_cast<std::int64_t>(std::cbrt(static_cast<double>(v)));
  while (c > 0 && c * c * c > v) --c;
  while ((c + 1) * (c + 1) * (c + 1) <= v) ++c;
  return c;
}

struct TargetSet::State {
  TargetKind kind;
  std::int64_t seed0 = 0, seed1 = 0;       // Recurrence
  std::vector<std::int64_t> explicit_members;  // Explicit

  // Grow-only member cache, guarded by mu. cached_upto is the bound
  // through which `cache` is complete.
  mutable std::mutex mu;
  mutable std::vector<std::int64_t> cache;
  mutable std::int64_t cached_upto = 0;

  void generate(std::int64_t bound, std::vector<std::int64_t>& out) const {
    switch (kind) {
      case TargetKind::Squares:
        for (std::int64_t k = 1; k * k <= bound; ++k) out.push_back(k * k);
        break;
      case TargetKind::Cubes:
        for (std::int64_t k = 1; k * k * k <= bound; ++k)
          out.push_back(k * k * k);
        break;
      case TargetKind::Triangular:
        for (std::int64_t k = 1; k * (k + 1) / 2 <= bound; ++k)
          out.push_back(k * (k + 1) / 2);
        break;
      case TargetKind::Pentagonal:
        for (std::int64_t k = 1; k * (3 * k - 1) / 2 <= bound; ++k) {
          out.push_back(k * (3 * k - 1) / 2);
          if (k * (3 * k + 1) / 2 <= bound) out.push_back(k * (3 * k + 1) / 2);
        }
        break;
      case TargetKind::Fibonacci: {
        std::int64_t a = 1, b = 2;  // skip the duplicate F_1 = F_2 = 1
        while (a <= bound) {
          out.push_back(a);
          std::int64_t next = checked_add(a, b);
          a = b;
          b = next;
        }
        break;
      }
      case TargetKind::Lucas: {
        std::int64_t a = 1, b = 3;  // L_1, L_2
        while (a <= bound) {
          out.push_back(a);
          std::int64_t next = checked_add(a, b);
          a = b;
          b = next;
        }
        break;
      }
      case TargetKind::Primes:
        sieve_primes(bound, out);
        break;
      case TargetKind::Recurrence: {
        std::int64_t a = seed0, b = seed1;
        std::vector<std::int64_t> vals;
        // The first couple of terms need not be ordered; later ones are.
        while (a <= bound) {
          vals.push_back(a);
          std::int64_t next = checked_add(a, b);
          a = b;
          b = next;
        }
        if (b <= bound) vals.push_back(b);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (std::int64_t v : vals)
          if (v <= bound) out.push_back(v);
        break;
      }
      case TargetKind::Explicit:
        for (std::int64_t v : explicit_members)
          if (v <= bound) out.push_back(v);
        break;
    }
  }

  // Extends the cache to cover `bound`. Caller holds mu.
  void ensure(std::int64_t bound) const {
    if (bound <= cached_upto) return;
    std::vector<std::int64_t> fresh;
    generate(bound, fresh);
    cache = std::move(fresh);
    cached_upto = bound;
  }
};

TargetSet TargetSet::make(TargetKind kind) {
  if (kind == TargetKind::Recurrence)
    throw std::invalid_argument("recurrence targets need seeds");
  if (kind == TargetKind::Explicit)
    throw std::invalid_argument("explicit targets need a member list");
  auto s = std::make_shared<State>();
  s->kind = kind;
  return TargetSet(std::move(s));
}

TargetSet TargetSet::recurrence(std::int64_t x0, std::int64_t x1) {
  if (x0 < 1 || x1 < 1)
    throw std::invalid_argument("recurrence seeds must be positive");
  if (x0 == x1)
    throw std::invalid_argument("recurrence seeds must not both be equal");
  if (x0 > kMaxInput || x1 > kMaxInput)
    throw std::invalid_argument("recurrence seed too large");
  auto s = std::make_shared<State>();
  s->kind = TargetKind::Recurrence;
  s->seed0 = x0;
  s->seed1 = x1;
  return TargetSet(std::move(s));
}

TargetSet TargetSet::explicit_set(std::vector<std::int64_t> members) {
  if (members.empty())
    throw std::invalid_argument("explicit target list must be nonempty");
  std::int64_t prev = 0;
  for (std::int64_t v : members) {
    if (v < 1) throw std::invalid_argument("explicit members must be positive");
    if (v <= prev)
      throw std::invalid_argument(
          "explicit members must be strictly increasing");
    if (v > kMaxInput) throw std::invalid_argument("explicit member too large");
    prev = v;
  }
  auto s = std::make_shared<State>();
  s->kind = TargetKind::Explicit;
  s->explicit_members = std::move(members);
  return TargetSet(std::move(s));
}

TargetKind TargetSet::kind() const { return state_->kind; }

std::pair<std::int64_t, std::int64_t> TargetSet::recurrence_seeds() const {
  if (state_->kind != TargetKind::Recurrence)
    throw std::logic_error("not a recurrence target set");
  return {state_->seed0, state_->seed1};
}

const std::vector<std::int64_t>& TargetSet::explicit_members() const {
  if (state_->kind != TargetKind::Explicit)
    throw std::logic_error("not an explicit target set");
  return state_->explicit_members;
}

bool TargetSet::contains(std::int64_t m) const {
  if (m < 1) throw std::invalid_argument("membership query needs m >= 1");
  if (m >= kValueCeiling) throw std::invalid_argument("value out of range");
  switch (state_->kind) {
    case TargetKind::Squares: return is_square(m);
    case TargetKind::Cubes: return is_cube(m);
    case TargetKind::Triangular: return is_triangular(m);
    case TargetKind::Pentagonal: return is_gen_pentagonal(m);
    case TargetKind::Fibonacci: {
      std::int64_t a = 1, b = 2;
      while (a < m) {
        std::int64_t next = checked_add(a, b);
        a = b;
        b = next;
      }
      return a == m;
    }
    case TargetKind::Lucas: {
      std::int64_t a = 1, b = 3;
      while (a < m) {
        std::int64_t next = checked_add(a, b);
        a = b;
        b = next;
      }
      return a == m;
    }
    case TargetKind::Primes: return is_prime(m);
    case TargetKind::Recurrence: {
      std::int64_t a = state_->seed0, b = state_->seed1;
      while (a < m && b != m) {
        std::int64_t next = checked_add(a, b);
        a = b;
        b = next;
      }
      return a == m || b == m;
    }
    case TargetKind::Explicit:
      return std::binary_search(state_->explicit_members.begin(),
                                state_->explicit_members.end(), m);
  }
  return false;
}

std::vector<std::int64_t> TargetSet::values_upto(std::int64_t bound) const {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::lock_guard lock(state_->mu);
  state_->ensure(bound);
  auto end = std::upper_bound(state_->cache.begin(), state_->cache.end(), bound);
  return {state_->cache.begin(), end};
}

std::vector<int> TargetSet::partners(int x, int n) const {
  if (x < 1 || x > n) throw std::invalid_argument("bead out of range");
  std::vector<int> out;
  // sums s in (x+1, x+n] give y = s-x in [1..n]; skip y == x.
  auto members = values_upto(static_cast<std::int64_t>(x) + n);
  for (std::int64_t s : members) {
    std::int64_t y = s - x;
    if (y < 1 || y > n || y == x) continue;
    out.push_back(static_cast<int>(y));
  }
  return out;
}

}  // namespace chains
