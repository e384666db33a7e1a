// Shared utilities: deterministic RNG, SHA-256 content hashing, string helpers,
// error types with explicit budget-exhaustion signalling.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace slicekit {

// ---------------------------------------------------------------- errors

enum class ErrKind { Parse, Budget, NotApplicable, Internal };

struct Error : std::runtime_error {
  ErrKind kind;
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error parse_error(const std::string& m) { return Error(ErrKind::Parse, m); }
inline Error budget_error(const std::string& m) { return Error(ErrKind::Budget, m); }
inline Error internal_error(const std::string& m) { return Error(ErrKind::Internal, m); }

#define SK_CHECK(cond, msg) \
  do { if (!(cond)) throw ::slicekit::internal_error(std::string("check failed: ") + (msg)); } while (0)

// ---------------------------------------------------------------- rng
//
// Deterministic across runs of the same build; all bounded draws go through
// below() so no standard-library distribution variability leaks in.

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() { return eng_(); }
  // uniform in [0, n)
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do { x = eng_(); } while (x >= lim);
    return x % n;
  }
  int64_t range(int64_t lo, int64_t hi) {  // inclusive
    return lo + (int64_t)below((uint64_t)(hi - lo + 1));
  }
  bool coin() { return next() & 1; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  Rng fork(uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ull) ^ 0xbf58476d1ce4e5b9ull); }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------- hashing

// Standard SHA-256; used for content-addressed witness references.
// Cooperative work counter for algorithms with configurable effort limits.
// take() returns false once the budget is exhausted; callers then abort the
// computation and report an indeterminate result instead of an answer.
struct OpBudget {
  uint64_t left = UINT64_MAX;
  OpBudget() = default;
  explicit OpBudget(uint64_t ops) : left(ops) {}
  bool take(uint64_t n = 1) {
    if (n > left) { left = 0; return false; }
    left -= n;
    return true;
  }
  bool exhausted() const { return left == 0; }
};

std::string sha256_hex(const std::string& data);
inline std::string short_hash(const std::string& data, size_t n = 16) {
  return sha256_hex(data).substr(0, n);
}

// ---------------------------------------------------------------- strings

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);
bool starts_with(const std::string& s, const std::string& pre);
std::string iso_timestamp();

}  // namespace slicekit
