#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "mvcr/cartan.hpp"
#include "mvcr/coweight.hpp"
#include "mvcr/errors.hpp"
#include "mvcr/weyl.hpp"

namespace mvcr {

enum class MoveKind { Two, Three };

/// Edge of the move graph on R(w0). `k` is the 0-based offset of the first changed letter, so a
/// 3-move rewrites letters k, k+1, k+2 (positions k+1..k+3 in 1-based numbering).
struct MoveEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  MoveKind kind = MoveKind::Two;
  std::size_t k = 0;
  friend bool operator==(const MoveEdge&, const MoveEdge&) = default;
};

/// Applies a braid move to a word; returns an empty optional if the pattern does not match.
inline std::optional<Word> apply_braid(const CartanDatum& cd, const Word& w, MoveKind kind, std::size_t k) {
  if (kind == MoveKind::Two) {
    if (k + 2 > w.size()) return std::nullopt;
    const int a = w[k], b = w[k + 1];
    if (a == b || cd.entry(a, b) != 0) return std::nullopt;
    Word out = w;
    std::swap(out[k], out[k + 1]);
    return out;
  }
  if (k + 3 > w.size()) return std::nullopt;
  const int a = w[k], b = w[k + 1];
  if (a == b || w[k + 2] != a || cd.entry(a, b) != -1) return std::nullopt;
  Word out = w;
  out[k] = b;
  out[k + 1] = a;
  out[k + 2] = b;
  return out;
}

/// Weyl group plus the reduced words of w0 and the 2-/3-move graph on them. Immutable after
/// construction and shared read-only by the rest of the library.
class RootSystem {
 public:
  static constexpr std::size_t kMaxReducedWords = 200000;

  explicit RootSystem(CartanDatum cd) : weyl_(std::move(cd)) { build(); }

  static std::shared_ptr<const RootSystem> make(std::string_view spec) {
    return std::make_shared<const RootSystem>(build_cartan(spec));
  }
  static std::shared_ptr<const RootSystem> make(const CartanDatum& cd) {
    return std::make_shared<const RootSystem>(cd);
  }

  const CartanDatum& cartan() const { return weyl_.cartan(); }
  const WeylGroup& weyl() const { return weyl_; }
  std::size_t rank() const { return weyl_.rank(); }
  /// m = l(w0).
  std::size_t num_positive_roots() const { return weyl_.length(weyl_.longest()); }

  /// R(w0), lexicographically sorted.
  const std::vector<Word>& words() const { return words_; }
  std::size_t word_index(const Word& w) const {
    auto it = word_index_.find(w);
    if (it == word_index_.end()) throw InvalidMove("not a reduced word of w0");
    return it->second;
  }

  const std::vector<MoveEdge>& edges() const { return edges_; }
  /// Edge ids incident to a word (as `from`).
  const std::vector<std::size_t>& out_edges(std::size_t word) const { return adjacency_[word]; }

  /// w^i_l = s_{i_1} ... s_{i_l}, for l = 0..m.
  const std::vector<WeylElt>& prefixes(std::size_t word) const { return prefixes_[word]; }
  /// w^i_{l-1} . h_{i_l}, for l = 1..m (stored at index l-1).
  const std::vector<Coweight>& edge_directions(std::size_t word) const { return directions_[word]; }

  /// Lexicographically least word of w0 starting with j.
  std::size_t first_word_starting_with(int j) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k].front() == j) return k;
    throw NoWordStartingWith("no reduced word of w0 starts with " + std::to_string(j + 1));
  }

  /// Some word index and position l with w = w^i_l. Prefers the lexicographically least word.
  std::pair<std::size_t, std::size_t> chamber_location(WeylElt w) const { return location_[w.id]; }

  /// BFS spanning order of the move graph from a root word: list of (word, edge id used to reach it).
  /// The root appears first with edge id == npos.
  std::vector<std::pair<std::size_t, std::size_t>> bfs_from(std::size_t root) const {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, std::size_t>> order;
    std::vector<char> seen(words_.size(), 0);
    std::queue<std::size_t> q;
    q.push(root);
    seen[root] = 1;
    order.emplace_back(root, npos);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t e : adjacency_[u]) {
        const std::size_t v = edges_[e].to;
        if (seen[v]) continue;
        seen[v] = 1;
        order.emplace_back(v, e);
        q.push(v);
      }
    }
    return order;
  }

 private:
  void build() {
    const auto& W = weyl_;
    const CartanDatum& cd = W.cartan();
    words_ = W.reduced_words(W.longest());
    if (words_.size() > kMaxReducedWords) throw TooLarge("too many reduced words of w0");
    for (std::size_t k = 0; k < words_.size(); ++k) word_index_.emplace(words_[k], k);

    adjacency_.assign(words_.size(), {});
    for (std::size_t u = 0; u < words_.size(); ++u) {
      const Word& w = words_[u];
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        for (MoveKind kind : {MoveKind::Two, MoveKind::Three}) {
          auto moved = apply_braid(cd, w, kind, k);
          if (!moved) continue;
          adjacency_[u].push_back(edges_.size());
          edges_.push_back(MoveEdge{u, word_index_.at(*moved), kind, k});
        }
      }
    }

    prefixes_.resize(words_.size());
    directions_.resize(words_.size());
    location_.assign(W.size(), {static_cast<std::size_t>(-1), 0});
    for (std::size_t u = 0; u < words_.size(); ++u) {
      const Word& w = words_[u];
      WeylElt cur = W.identity();
      prefixes_[u].push_back(cur);
      for (std::size_t l = 0; l < w.size(); ++l) {
        directions_[u].push_back(W.act(cur, cd.simple_coroot(w[l])));
        cur = W.right_mul(cur, w[l]);
        prefixes_[u].push_back(cur);
      }
      for (std::size_t l = 0; l < prefixes_[u].size(); ++l) {
        auto& loc = location_[prefixes_[u][l].id];
        if (loc.first == static_cast<std::size_t>(-1)) loc = {u, l};
      }
    }
  }

  WeylGroup weyl_;
  std::vector<Word> words_;
  std::map<Word, std::size_t> word_index_;
  std::vector<MoveEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::vector<WeylElt>> prefixes_;
  std::vector<std::vector<Coweight>> directions_;
  std::vector<std::pair<std::size_t, std::size_t>> location_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace mvcr
