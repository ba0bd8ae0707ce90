#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mvcr/cartan.hpp"
#include "mvcr/coweight.hpp"
#include "mvcr/errors.hpp"

namespace mvcr {

/// A word in the simple reflections, letters are 0-based indices into I.
using Word = std::vector<int>;

/// Handle to an element of a WeylGroup: its position in the (length, ShortLex) enumeration.
struct WeylElt {
  std::uint32_t id = 0;
  friend bool operator==(WeylElt, WeylElt) = default;
  friend auto operator<=>(WeylElt, WeylElt) = default;
};

/// Root in simple-root coordinates. Under the simply-laced identification its coroot is
/// sum_k b_k h_k.
using Root = std::vector<Int>;

/// A finite Weyl group, fully enumerated. Elements are kept in (length, ShortLex) order of their
/// lexicographically least reduced words, so element ids double as the canonical order.
///
/// Each element stores its action on coweight coordinates and on simple-root coordinates. The
/// Bruhat order is memoized as a |W| x |W| table when |W| <= kBruhatTableLimit and otherwise
/// evaluated recursively.
class WeylGroup {
 public:
  static constexpr std::size_t kMaxOrder = 51840;
  static constexpr std::size_t kBruhatTableLimit = 5040;

  explicit WeylGroup(CartanDatum cartan) : cartan_(std::move(cartan)) { enumerate(); }

  const CartanDatum& cartan() const { return cartan_; }
  std::size_t rank() const { return cartan_.rank(); }
  std::size_t size() const { return words_.size(); }

  WeylElt identity() const { return WeylElt{0}; }
  WeylElt longest() const { return WeylElt{static_cast<std::uint32_t>(size() - 1)}; }
  WeylElt generator(int i) const { return right_mul(identity(), i); }

  std::vector<WeylElt> elements() const {
    std::vector<WeylElt> out(size());
    for (std::size_t k = 0; k < size(); ++k) out[k] = WeylElt{static_cast<std::uint32_t>(k)};
    return out;
  }

  std::size_t length(WeylElt w) const { return words_[w.id].size(); }
  /// Lexicographically least reduced word.
  const Word& word(WeylElt w) const { return words_[w.id]; }

  WeylElt right_mul(WeylElt w, int i) const { return WeylElt{right_[w.id * rank() + i]}; }
  WeylElt left_mul(int i, WeylElt w) const { return WeylElt{left_[w.id * rank() + i]}; }

  bool is_right_descent(WeylElt w, int i) const { return length(right_mul(w, i)) < length(w); }
  bool is_left_descent(int i, WeylElt w) const { return length(left_mul(i, w)) < length(w); }

  WeylElt from_word(std::span<const int> word) const {
    WeylElt w = identity();
    for (int i : word) {
      check_letter(i);
      w = right_mul(w, i);
    }
    return w;
  }

  /// True iff the word is a reduced expression.
  bool is_reduced(std::span<const int> word) const {
    WeylElt w = identity();
    for (int i : word) {
      check_letter(i);
      WeylElt next = right_mul(w, i);
      if (length(next) <= length(w)) return false;
      w = next;
    }
    return true;
  }

  WeylElt mul(WeylElt x, WeylElt y) const {
    for (int i : word(y)) x = right_mul(x, i);
    return x;
  }
  WeylElt inverse(WeylElt w) const { return WeylElt{inverse_[w.id]}; }

  /// w . v on fundamental-coweight coordinates.
  Coweight act(WeylElt w, const Coweight& v) const {
    if (v.rank() != rank()) throw RankMismatch("coweight rank does not match the Weyl group");
    const std::size_t n = rank();
    const Int* m = &coweight_action_[w.id * n * n];
    Coweight out(n);
    for (std::size_t r = 0; r < n; ++r) {
      Int s = 0;
      for (std::size_t c = 0; c < n; ++c) s += m[r * n + c] * v[c];
      out[r] = s;
    }
    return out;
  }

  /// w . beta on simple-root coordinates.
  Root act_root(WeylElt w, const Root& b) const {
    const std::size_t n = rank();
    const Int* m = &root_action_[w.id * n * n];
    Root out(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out[r] += m[r * n + c] * b[c];
    return out;
  }

  Root simple_root(int j) const {
    Root b(rank(), 0);
    b[j] = 1;
    return b;
  }

  /// Coroot of a root, in fundamental-coweight coordinates.
  Coweight coroot(const Root& b) const {
    Coweight v(rank());
    for (std::size_t k = 0; k < rank(); ++k)
      for (std::size_t j = 0; j < rank(); ++j) v[j] += b[k] * cartan_.entry(k, j);
    return v;
  }

  /// <v, beta> for a coweight v and a root beta.
  static Int pair(const Coweight& v, const Root& b) {
    Int s = 0;
    for (std::size_t k = 0; k < b.size(); ++k) s += v[k] * b[k];
    return s;
  }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  /// Reflection s_beta: v -> v - <v, beta> beta^vee.
  WeylElt reflection(const Root& beta) const {
    Coweight rho(rank());
    for (std::size_t k = 0; k < rank(); ++k) rho[k] = 1;
    const Coweight image = rho - pair(rho, beta) * coroot(beta);
    auto it = by_rho_image_.find(image.vec());
    if (it == by_rho_image_.end()) throw Error("reflection: argument is not a root");
    return WeylElt{it->second};
  }

  /// The element whose action sends rho to the given image; rho has trivial stabilizer.
  WeylElt find_by_rho_image(const Coweight& image) const {
    auto it = by_rho_image_.find(image.vec());
    if (it == by_rho_image_.end()) throw Error("no Weyl element maps rho to " + image.str());
    return WeylElt{it->second};
  }

  /// Strong Bruhat order x <= y.
  bool bruhat_leq(WeylElt x, WeylElt y) const {
    if (!bruhat_.empty()) return bruhat_[static_cast<std::size_t>(x.id) * size() + y.id] != 0;
    return bruhat_recursive(x, y);
  }

  /// All reduced words of w, lexicographically sorted.
  std::vector<Word> reduced_words(WeylElt w) const {
    std::vector<Word> out;
    Word suffix;
    collect_reduced_words(w, suffix, out);
    for (auto& wd : out) std::reverse(wd.begin(), wd.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Minimal-length representatives of W / Stab(lambda), one per orbit point, in element order.
  std::vector<WeylElt> min_coset_reps(const Coweight& lambda) const {
    if (!lambda.is_dominant()) throw NotDominant("min_coset_reps: " + lambda.str() + " is not dominant");
    std::map<Coweight, WeylElt> first;
    for (WeylElt w : elements()) first.try_emplace(act(w, lambda), w);
    std::vector<WeylElt> out;
    out.reserve(first.size());
    for (const auto& [pt, w] : first) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Minimal-length element of the coset x Stab(lambda).
  WeylElt min_coset_rep(WeylElt x, const Coweight& lambda) const {
    const Coweight target = act(x, lambda);
    for (WeylElt w : elements())
      if (act(w, lambda) == target) return w;
    return x;
  }

  std::string word_string(WeylElt w) const {
    if (length(w) == 0) return "e";
    std::string s;
    for (int i : word(w)) {
      if (!s.empty()) s += ",";
      s += std::to_string(i + 1);
    }
    return s;
  }

 private:
  void check_letter(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= rank())
      throw ParseError("generator index " + std::to_string(i + 1) + " out of range");
  }

  void enumerate() {
    const std::size_t n = rank();
    // Start with the identity.
    std::vector<Int> id_cw(n * n, 0), id_rt(n * n, 0);
    for (std::size_t k = 0; k < n; ++k) id_cw[k * n + k] = id_rt[k * n + k] = 1;
    Coweight rho(n);
    for (std::size_t k = 0; k < n; ++k) rho[k] = 1;

    words_.push_back({});
    coweight_action_ = id_cw;
    root_action_ = id_rt;
    by_rho_image_.emplace(rho.vec(), 0);

    // Right multiplication by s_i: M_{w s_i} = M_w M_{s_i}. On coweights s_i v = v - v_i h_i,
    // on roots s_i b = b - (sum_k a_ik b_k) alpha_i.
    std::size_t level_begin = 0;
    while (level_begin < words_.size()) {
      const std::size_t level_end = words_.size();
      for (std::size_t x = level_begin; x < level_end; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Int> cw(n * n), rt(n * n);
          const Int* mx = &coweight_action_[x * n * n];
          const Int* rx = &root_action_[x * n * n];
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
              // column c of M_{s_i}: e_c - delta_{ci} h_i
              Int s = mx[r * n + c];
              if (c == i)
                for (std::size_t k = 0; k < n; ++k) s -= mx[r * n + k] * cartan_.entry(i, k);
              cw[r * n + c] = s;
              // column c of R_{s_i}: e_c - a_ic alpha_i
              rt[r * n + c] = rx[r * n + c] - rx[r * n + i] * cartan_.entry(i, c);
            }
          }
          Coweight image(n);
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) image[r] += cw[r * n + c];
          if (by_rho_image_.count(image.vec())) continue;
          if (words_.size() >= kMaxOrder) throw TooLarge("Weyl group exceeds supported order");
          Word wd = words_[x];
          wd.push_back(static_cast<int>(i));
          by_rho_image_.emplace(image.vec(), static_cast<std::uint32_t>(words_.size()));
          words_.push_back(std::move(wd));
          coweight_action_.insert(coweight_action_.end(), cw.begin(), cw.end());
          root_action_.insert(root_action_.end(), rt.begin(), rt.end());
        }
      }
      level_begin = level_end;
    }

    const std::size_t order = words_.size();
    right_.assign(order * n, 0);
    left_.assign(order * n, 0);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t i = 0; i < n; ++i) {
        right_[x * n + i] = lookup_after(x, static_cast<int>(i), /*on_right=*/true);
        left_[x * n + i] = lookup_after(x, static_cast<int>(i), /*on_right=*/false);
      }
    }
    inverse_.assign(order, 0);
    for (std::size_t x = 0; x < order; ++x) {
      WeylElt w = identity();
      const Word& wd = words_[x];
      for (auto it = wd.rbegin(); it != wd.rend(); ++it) w = right_mul(w, *it);
      inverse_[x] = w.id;
    }

    for (std::size_t j = 0; j < n; ++j) {
      for (WeylElt w : elements()) {
        Root b = act_root(w, simple_root(static_cast<int>(j)));
        if (std::all_of(b.begin(), b.end(), [](Int c) { return c >= 0; }) &&
            std::find(positive_roots_.begin(), positive_roots_.end(), b) == positive_roots_.end())
          positive_roots_.push_back(std::move(b));
      }
    }
    std::sort(positive_roots_.begin(), positive_roots_.end());

    if (order <= kBruhatTableLimit) build_bruhat_table();
  }

  // Image of rho under w s_i (on_right) or s_i w, looked up by its action on rho.
  std::uint32_t lookup_after(std::size_t x, int i, bool on_right) const {
    const std::size_t n = rank();
    Coweight rho(n);
    for (std::size_t k = 0; k < n; ++k) rho[k] = 1;
    Coweight v = rho;
    const Coweight h = cartan_.simple_coroot(static_cast<std::size_t>(i));
    const Int* m = &coweight_action_[x * n * n];
    auto apply_x = [&](const Coweight& u) {
      Coweight out(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r] += m[r * n + c] * u[c];
      return out;
    };
    if (on_right) {
      v = v - v[i] * h;
      v = apply_x(v);
    } else {
      v = apply_x(v);
      v = v - v[i] * h;
    }
    return by_rho_image_.at(v.vec());
  }

  // Deodhar's lifting property: if s y < y then x <= y iff min(x, s x) <= s y.
  void build_bruhat_table() {
    const std::size_t order = size();
    bruhat_.assign(order * order, 0);
    for (std::size_t y = 0; y < order; ++y) {
      const WeylElt wy{static_cast<std::uint32_t>(y)};
      if (y == 0) {
        bruhat_[0] = 1;
        continue;
      }
      const int s = words_[y].front();
      const WeylElt sy = left_mul(s, wy);
      for (std::size_t x = 0; x < order; ++x) {
        const WeylElt wx{static_cast<std::uint32_t>(x)};
        const WeylElt sx = left_mul(s, wx);
        const WeylElt lower = length(sx) < length(wx) ? sx : wx;
        bruhat_[x * order + y] = bruhat_[static_cast<std::size_t>(lower.id) * order + sy.id];
      }
    }
  }

  bool bruhat_recursive(WeylElt x, WeylElt y) const {
    if (length(x) > length(y)) return false;
    if (length(y) == 0) return length(x) == 0;
    const int s = word(y).front();
    const WeylElt sy = left_mul(s, y);
    const WeylElt sx = left_mul(s, x);
    return bruhat_recursive(length(sx) < length(x) ? sx : x, sy);
  }

  void collect_reduced_words(WeylElt w, Word& suffix, std::vector<Word>& out) const {
    if (length(w) == 0) {
      out.push_back(suffix);
      return;
    }
    for (std::size_t i = 0; i < rank(); ++i) {
      if (!is_right_descent(w, static_cast<int>(i))) continue;
      suffix.push_back(static_cast<int>(i));
      collect_reduced_words(right_mul(w, static_cast<int>(i)), suffix, out);
      suffix.pop_back();
    }
  }

  CartanDatum cartan_;
  std::vector<Word> words_;
  std::vector<Int> coweight_action_;  // |W| blocks of rank x rank, row-major
  std::vector<Int> root_action_;
  std::map<std::vector<Int>, std::uint32_t> by_rho_image_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> inverse_;
  std::vector<Root> positive_roots_;
  std::vector<std::uint8_t> bruhat_;
};

}  // namespace mvcr
