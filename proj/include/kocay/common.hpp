#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kocay {

/// Hard cap on vertex counts. Everything in this library is exact and
/// brute-force over permutations, which is the point: all results are
/// independently checkable at desk scale.
inline constexpr int kMaxVertices = 10;
inline constexpr int kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;

/// Exact integer count. Products of subgraph counts overflow 64 bits already
/// at modest sequence lengths, so the public surface is arbitrary precision.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Invalid arguments, malformed inputs, violated preconditions.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact arithmetic that must work out did not, e.g. a deck that is not the
/// deck of any graph makes a Kelly division non-integral.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed serialized input; carries the byte offset of the problem.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : input_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

// Unordered pairs {u,v} with u < v, indexed column-major:
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...  This matches the bit order of the
// graph6 format, so one table serves both the canonical codes and the codec.
struct PairTables {
  std::array<std::uint8_t, kMaxPairs> u{};
  std::array<std::uint8_t, kMaxPairs> v{};
  std::array<std::uint16_t, kMaxPairs> ends{};  // (1<<u) | (1<<v)
  std::array<std::array<std::int8_t, kMaxVertices>, kMaxVertices> index{};

  constexpr PairTables() {
    for (auto& row : index) row.fill(-1);
    int k = 0;
    for (int j = 1; j < kMaxVertices; ++j) {
      for (int i = 0; i < j; ++i) {
        u[k] = static_cast<std::uint8_t>(i);
        v[k] = static_cast<std::uint8_t>(j);
        ends[k] = static_cast<std::uint16_t>((1u << i) | (1u << j));
        index[i][j] = index[j][i] = static_cast<std::int8_t>(k);
        ++k;
      }
    }
  }
};

inline constexpr PairTables kPairs{};

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

constexpr int pair_index(int a, int b) { return kPairs.index[a][b]; }

constexpr std::uint64_t pair_bit(int a, int b) {
  return std::uint64_t{1} << pair_index(a, b);
}

constexpr std::uint64_t all_pairs_mask(int n) {
  return (std::uint64_t{1} << pair_count(n)) - 1;
}

template <class F>
inline void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

// Pairs of `bits` whose endpoints both lie inside the vertex mask.
inline std::uint64_t pairs_within(std::uint16_t vmask, std::uint64_t bits) {
  std::uint64_t out = 0;
  for_each_bit(bits, [&](int k) {
    if ((vmask & kPairs.ends[k]) == kPairs.ends[k]) out |= std::uint64_t{1} << k;
  });
  return out;
}

}  // namespace detail

inline std::string to_string(const Count& c) { return c.str(); }
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace kocay
