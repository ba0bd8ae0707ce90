#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "mvcr/errors.hpp"

namespace mvcr {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Integer vector in the fundamental-coweight basis: coords[j] = <v, alpha_j>.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::size_t rank) : coords_(rank, 0) {}
  Coweight(std::initializer_list<Int> init) : coords_(init) {}
  explicit Coweight(std::vector<Int> coords) : coords_(std::move(coords)) {}

  static Coweight zero(std::size_t rank) { return Coweight(rank); }

  std::size_t rank() const { return coords_.size(); }
  Int operator[](std::size_t j) const { return coords_[j]; }
  Int& operator[](std::size_t j) { return coords_[j]; }

  /// Pairing with the simple root alpha_j.
  Int pair(std::size_t j) const { return coords_[j]; }

  std::span<const Int> coords() const { return coords_; }
  const std::vector<Int>& vec() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
  }
  bool is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c >= 0; });
  }

  Coweight& operator+=(const Coweight& o) {
    check_rank(o);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
    return *this;
  }
  Coweight& operator-=(const Coweight& o) {
    check_rank(o);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= o.coords_[j];
    return *this;
  }
  Coweight& operator*=(Int s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator*(Int s, Coweight a) { return a *= s; }
  friend Coweight operator*(Coweight a, Int s) { return a *= s; }
  friend Coweight operator-(Coweight a) { return a *= -1; }

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t j = 0; j < coords_.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(coords_[j]);
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Coweight& v) { return os << v.str(); }

 private:
  void check_rank(const Coweight& o) const {
    if (o.coords_.size() != coords_.size())
      throw RankMismatch("coweight rank mismatch: " + std::to_string(coords_.size()) + " vs " +
                         std::to_string(o.coords_.size()));
  }

  std::vector<Int> coords_;
};

struct CoweightHash {
  std::size_t operator()(const Coweight& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int c : v.coords()) {
      h ^= std::hash<Int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace mvcr
