#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvcr/coweight.hpp"
#include "mvcr/errors.hpp"

namespace mvcr {

using IntMatrix = std::vector<std::vector<Int>>;

namespace detail {

// Exact inverse and determinant by rational Gauss-Jordan elimination.
inline std::pair<std::vector<std::vector<Rational>>, Rational> rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == Rational(0)) ++piv;
    if (piv == n) return {{}, Rational(0)};
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    const Rational p = m[col][col];
    det *= p;
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rational(0)) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return {inv, det};
}

inline Rational rational_det(const IntMatrix& a) { return rational_inverse(a).second; }

inline IntMatrix type_block(char letter, int n) {
  IntMatrix a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (letter) {
    case 'A':
      if (n < 1) throw ParseError("A_n needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'D':
      if (n < 3) throw ParseError("D_n needs n >= 3");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw NotFiniteType("E_n is of finite type only for n = 6, 7, 8");
      // Bourbaki labelling: 1-3-4-5-6-..., with 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
    case 'F':
    case 'G':
      throw NonSimplyLaced(std::string("type ") + letter + std::to_string(n) +
                           " is not simply-laced (only A, D, E are supported)");
    default:
      throw ParseError(std::string("unknown Cartan type letter '") + letter + "'");
  }
  return a;
}

}  // namespace detail

/// A simply-laced Cartan matrix of finite type, possibly decomposable.
/// Index set I = {0, ..., rank-1} internally; the external interfaces use 1-based labels.
class CartanDatum {
 public:
  explicit CartanDatum(IntMatrix a, std::string name = {}) : a_(std::move(a)), name_(std::move(name)) {
    validate();
    auto [inv, det] = detail::rational_inverse(a_);
    det_ = boost::rational_cast<Int>(det);
    const std::size_t n = a_.size();
    adj_.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) adj_[i][j] = boost::rational_cast<Int>(inv[i][j] * det);
    if (name_.empty()) name_ = "matrix";
  }

  std::size_t rank() const { return a_.size(); }
  Int entry(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const IntMatrix& matrix() const { return a_; }
  const std::string& name() const { return name_; }

  /// Simple coroot h_i in fundamental-coweight coordinates: row i of A.
  Coweight simple_coroot(std::size_t i) const { return Coweight(a_[i]); }

  /// Fundamental coweight.
  Coweight fundamental(std::size_t i) const {
    Coweight v(rank());
    v[i] = 1;
    return v;
  }

  Int determinant() const { return det_; }

  /// det(A) * A^{-1}; an integer matrix since A is integral.
  const IntMatrix& adjugate() const { return adj_; }

  /// det(A) times the coroot-basis coordinates of v. Since det(A) > 0 for finite type, signs
  /// agree with the exact coordinates.
  std::vector<Int> scaled_coroot_coords(const Coweight& v) const {
    const std::size_t n = rank();
    std::vector<Int> c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i] += adj_[i][j] * v[j];
    return c;
  }

  /// Exact coordinates c with v = sum_i c_i h_i.
  std::vector<Rational> to_coroot_basis(const Coweight& v) const {
    auto scaled = scaled_coroot_coords(v);
    std::vector<Rational> c;
    c.reserve(scaled.size());
    for (Int s : scaled) c.emplace_back(s, det_);
    return c;
  }

  /// Inverse of to_coroot_basis; throws if the result is not integral.
  Coweight from_coroot_basis(const std::vector<Rational>& c) const {
    if (c.size() != rank()) throw RankMismatch("coroot coordinate vector has wrong length");
    Coweight v(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < rank(); ++i) s += c[i] * a_[i][j];
      if (s.denominator() != 1) throw ParseError("coroot combination is not an integral coweight");
      v[j] = s.numerator();
    }
    return v;
  }

  /// True iff v lies in the cone sum_j R_{>=0} h_j.
  bool in_positive_coroot_cone(const Coweight& v) const {
    for (Int c : scaled_coroot_coords(v))
      if (c < 0) return false;
    return true;
  }

  friend bool operator==(const CartanDatum& x, const CartanDatum& y) { return x.a_ == y.a_; }

 private:
  void validate() const {
    const std::size_t n = a_.size();
    if (n == 0) throw ParseError("Cartan matrix must have positive rank");
    for (const auto& row : a_)
      if (row.size() != n) throw ParseError("Cartan matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
      if (a_[i][i] != 2) throw NotFiniteType("diagonal entries of a Cartan matrix must be 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a_[i][j] > 0) throw NotFiniteType("off-diagonal Cartan entries must be <= 0");
        if (a_[i][j] != a_[j][i] || a_[i][j] < -1)
          throw NonSimplyLaced("Cartan matrix is not simply-laced (need symmetric entries in {0,-1})");
      }
    }
    // A symmetric simply-laced Cartan matrix is of finite type iff it is positive definite.
    for (std::size_t k = 1; k <= n; ++k) {
      IntMatrix minor(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = a_[i][j];
      if (detail::rational_det(minor) <= Rational(0))
        throw NotFiniteType("Cartan matrix is not positive definite (not of finite type)");
    }
  }

  IntMatrix a_;
  IntMatrix adj_;
  Int det_ = 1;
  std::string name_;
};

/// Parses a type string such as "A2", "D4", "E6" or a product "A1xA1" (also "A1*A2").
/// Blocks are placed diagonally in the order written.
inline CartanDatum build_cartan(std::string_view spec) {
  std::vector<IntMatrix> blocks;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw ParseError("empty component in Cartan spec");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    const std::string digits = token.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad Cartan component '" + token + "'");
    blocks.push_back(detail::type_block(letter, std::stoi(digits)));
    token.clear();
  };
  for (char c : spec) {
    if (c == 'x' || c == 'X' || c == '*') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token.push_back(c);
    }
  }
  flush();
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  IntMatrix a(n, std::vector<Int>(n, 0));
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return CartanDatum(std::move(a), std::string(spec));
}

}  // namespace mvcr
