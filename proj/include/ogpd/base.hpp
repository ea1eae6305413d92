// Basic identifiers, error classes and the search budget shared by all
// ogpd modules.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogpd {

using ObjectId = std::uint32_t;
using ArrowId = std::uint32_t;

inline constexpr ArrowId kNoArrow = static_cast<ArrowId>(-1);
inline constexpr ObjectId kNoObject = static_cast<ObjectId>(-1);

inline std::uint64_t key64(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition.
struct domain_error : error {
  using error::error;
};

// A structure that should have been validated turned out inconsistent,
// or a theorem-backed construction failed its self-check.
struct invariant_error : error {
  using error::error;
};

// A bounded search ran out of budget before finishing.
struct budget_error : error {
  using error::error;
};

// Counts visited states of a backtracking search.  Exhausting the limit
// raises budget_error so callers can distinguish "no solution" from
// "gave up".
struct SearchBudget {
  std::uint64_t limit = 1'000'000;
  std::uint64_t used = 0;

  void charge(const char* what) {
    if (++used > limit)
      throw budget_error(std::string("search budget exceeded in ") + what);
  }
};

// Packed n-by-n boolean relation.
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(std::size_t n)
      : n_(n), words_((n * n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    std::size_t k = i * n_ + j;
    return (words_[k >> 6] >> (k & 63)) & 1u;
  }

  void set(std::size_t i, std::size_t j) {
    std::size_t k = i * n_ + j;
    words_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ogpd
