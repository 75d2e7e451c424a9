#pragma once

#include <string>
#include <vector>

#include "bpm/bigraph.hpp"

namespace bpm {

// Run-length description (d_i, k_i), i = 1..t, of a sorted ordered graph:
// rows k_{i-1}+1..k_i are adjacent to exactly columns 1..d_i.
class RepresentingSequence {
 public:
  struct Pair {
    int d = 0;
    int k = 0;
    friend auto operator<=>(const Pair&, const Pair&) = default;
  };

  // Validates 0 <= d_1 < ... < d_t <= n and 0 < k_1 < ... < k_t = n.
  RepresentingSequence(int n, std::vector<Pair> pairs);

  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(pairs_.size()); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  // 1-based accessors with the implicit k_0 = 0 and d_{t+1} = n.
  int d(int i) const;
  int k(int i) const;

  BipartiteGraph decode() const;

  friend bool operator==(const RepresentingSequence&, const RepresentingSequence&) = default;
  friend auto operator<=>(const RepresentingSequence&, const RepresentingSequence&) = default;

 private:
  int n_;
  std::vector<Pair> pairs_;
};

// ⟨n,d,k⟩-block: the sorted ordered graph with sequence {(d,k),(n,n)}.
struct Block {
  int n = 0;
  int d = 0;
  int k = 0;

  Block() = default;
  Block(int n, int d, int k);
  RepresentingSequence sequence() const;
  friend bool operator==(const Block&, const Block&) = default;
};

struct CanonicalSort {
  BipartiteGraph sorted;
  std::vector<int> left;   // sorted row i is original row left[i]
  std::vector<int> right;  // sorted column j is original column right[j]
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  // Final biclique factor C(top, bottom) = C(n - k_{t-1} - 1, n - d_t).
  int final_top = 0;
  int final_bottom = 0;
};

bool is_totally_ordered(const BipartiteGraph& g);
bool is_sorted_ordered(const BipartiteGraph& g);

CanonicalSort canonical_sort(const BipartiteGraph& g);
RepresentingSequence representing_sequence(const BipartiteGraph& sorted);

// Non-edges (row, col), 0-based, that the sequence allows an elementary
// completion to use.
std::vector<Edge> permitted_edges(const RepresentingSequence& s);
bool is_degenerate(const RepresentingSequence& s);
BlockDecomposition block_decompose(const RepresentingSequence& s);

// Text form `n; (d1,k1)(d2,k2)...`.
std::string format_sequence(const RepresentingSequence& s);
RepresentingSequence parse_sequence(const std::string& text);

}  // namespace bpm
