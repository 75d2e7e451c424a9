#include "bpm/ordered.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace bpm {

RepresentingSequence::RepresentingSequence(int n, std::vector<Pair> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  if (n < 1) throw Error(ErrorCode::DomainError, "sequence side size must be positive");
  if (pairs_.empty()) throw Error(ErrorCode::DomainError, "sequence must have t >= 1");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const Pair& p = pairs_[i];
    if (p.d < 0 || p.d > n || p.k <= 0 || p.k > n)
      throw Error(ErrorCode::DomainError, "sequence entry out of range");
    if (i > 0 && (p.d <= pairs_[i - 1].d || p.k <= pairs_[i - 1].k))
      throw Error(ErrorCode::DomainError, "sequence entries must strictly increase");
  }
  if (pairs_.back().k != n) throw Error(ErrorCode::DomainError, "sequence must end with k_t = n");
}

int RepresentingSequence::d(int i) const {
  if (i == length() + 1) return n_;
  return pairs_.at(static_cast<std::size_t>(i - 1)).d;
}

int RepresentingSequence::k(int i) const {
  if (i == 0) return 0;
  return pairs_.at(static_cast<std::size_t>(i - 1)).k;
}

BipartiteGraph RepresentingSequence::decode() const {
  std::vector<BipartiteGraph::Row> rows(static_cast<std::size_t>(n_), 0);
  int row = 0;
  for (const Pair& p : pairs_) {
    const BipartiteGraph::Row prefix =
        p.d == 32 ? ~BipartiteGraph::Row{0} : ((BipartiteGraph::Row{1} << p.d) - 1);
    for (; row < p.k; ++row) rows[static_cast<std::size_t>(row)] = prefix;
  }
  return BipartiteGraph(n_, std::move(rows));
}

Block::Block(int n_, int d_, int k_) : n(n_), d(d_), k(k_) {
  if (n < 2 || d < 0 || d > n || k <= 0 || k >= n)
    throw Error(ErrorCode::DomainError, "block parameters need 0 <= d <= n and 0 < k < n");
}

RepresentingSequence Block::sequence() const {
  if (d == n) return RepresentingSequence(n, {{n, n}});
  return RepresentingSequence(n, {{d, k}, {n, n}});
}

bool is_totally_ordered(const BipartiteGraph& g) {
  std::vector<BipartiteGraph::Row> rows(g.rows());
  std::stable_sort(rows.begin(), rows.end(), [](auto a, auto b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if ((rows[i - 1] & ~rows[i]) != 0) return false;
  return true;
}

bool is_sorted_ordered(const BipartiteGraph& g) {
  int previous = 0;
  for (int i = 0; i < g.n(); ++i) {
    const int deg = g.left_degree(i);
    if (deg < previous) return false;
    const auto prefix = deg == 32 ? ~BipartiteGraph::Row{0} : ((BipartiteGraph::Row{1} << deg) - 1);
    if (g.row(i) != prefix) return false;
    previous = deg;
  }
  return true;
}

CanonicalSort canonical_sort(const BipartiteGraph& g) {
  if (!is_totally_ordered(g))
    throw Error(ErrorCode::NotTotallyOrdered, "canonical_sort needs a totally ordered graph");
  const int n = g.n();
  std::vector<int> left(static_cast<std::size_t>(n));
  std::vector<int> right(static_cast<std::size_t>(n));
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), 0);
  std::stable_sort(left.begin(), left.end(),
                   [&](int a, int b) { return g.left_degree(a) < g.left_degree(b); });
  std::stable_sort(right.begin(), right.end(),
                   [&](int a, int b) { return g.right_degree(a) > g.right_degree(b); });
  BipartiteGraph sorted = g.permuted(left, right);
  return {std::move(sorted), std::move(left), std::move(right)};
}

RepresentingSequence representing_sequence(const BipartiteGraph& sorted) {
  if (!is_sorted_ordered(sorted))
    throw Error(ErrorCode::NotSortedOrdered, "representing_sequence needs a sorted ordered graph");
  std::vector<RepresentingSequence::Pair> pairs;
  for (int i = 0; i < sorted.n(); ++i) {
    const int deg = sorted.left_degree(i);
    if (!pairs.empty() && pairs.back().d == deg)
      pairs.back().k = i + 1;
    else
      pairs.push_back({deg, i + 1});
  }
  return RepresentingSequence(sorted.n(), std::move(pairs));
}

std::vector<Edge> permitted_edges(const RepresentingSequence& s) {
  std::vector<Edge> out;
  for (int j = 1; j <= s.length(); ++j)
    for (int row = s.k(j - 1); row < s.k(j); ++row)
      for (int col = s.d(j); col < s.d(j + 1); ++col) out.push_back({row, col});
  return out;
}

bool is_degenerate(const RepresentingSequence& s) {
  for (int i = 1; i < s.length(); ++i)
    if (s.d(i + 1) <= s.k(i)) return true;
  return false;
}

BlockDecomposition block_decompose(const RepresentingSequence& s) {
  if (is_degenerate(s))
    throw Error(ErrorCode::DegenerateSequence, "block_decompose needs d_{i+1} > k_i for all i");
  BlockDecomposition out;
  const int t = s.length();
  for (int i = 1; i < t; ++i) {
    const int base = s.k(i - 1);
    out.blocks.emplace_back(s.d(i + 1) - base, s.d(i) - base, s.k(i) - base);
  }
  out.final_top = s.n() - s.k(t - 1) - 1;
  out.final_bottom = s.n() - s.d(t);
  return out;
}

std::string format_sequence(const RepresentingSequence& s) {
  std::string out = std::to_string(s.n()) + "; ";
  for (const auto& p : s.pairs())
    out += '(' + std::to_string(p.d) + ',' + std::to_string(p.k) + ')';
  return out;
}

RepresentingSequence parse_sequence(const std::string& text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&] {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && text[start] == '-'))
      throw Error(ErrorCode::ParseError, "expected integer in sequence '" + text + "'");
    return std::stoi(text.substr(start, pos - start));
  };
  auto expect = [&](char ch) {
    skip_space();
    if (pos >= text.size() || text[pos] != ch)
      throw Error(ErrorCode::ParseError, std::string("expected '") + ch + "' in sequence '" + text + "'");
    ++pos;
  };
  const int n = read_int();
  expect(';');
  std::vector<RepresentingSequence::Pair> pairs;
  skip_space();
  while (pos < text.size()) {
    expect('(');
    const int d = read_int();
    expect(',');
    const int k = read_int();
    expect(')');
    pairs.push_back({d, k});
    skip_space();
  }
  try {
    return RepresentingSequence(n, std::move(pairs));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace bpm
