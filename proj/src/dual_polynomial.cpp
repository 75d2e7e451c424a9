#include "bpm/dual_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace bpm {

namespace {

std::vector<Edge> mask_edges(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    edges.push_back({bit / n, bit % n});
    mask &= mask - 1;
  }
  return edges;
}

std::vector<std::uint64_t> canonical_order(const std::map<std::uint64_t, Coefficient>& terms) {
  std::vector<std::uint64_t> keys;
  keys.reserve(terms.size());
  for (const auto& [mask, _] : terms) keys.push_back(mask);
  std::sort(keys.begin(), keys.end(), [](std::uint64_t a, std::uint64_t b) {
    const int da = std::popcount(a);
    const int db = std::popcount(b);
    return da != db ? da < db : a < b;
  });
  return keys;
}

std::uint64_t edge_bit(int n, int row1, int col1) {
  if (row1 < 1 || row1 > n || col1 < 1 || col1 > n)
    throw Error(ErrorCode::ParseError, "edge index out of range for n=" + std::to_string(n));
  return std::uint64_t{1} << ((row1 - 1) * n + (col1 - 1));
}

Coefficient parse_coefficient(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty coefficient");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::ParseError, "invalid coefficient '" + text + "'");
  return Coefficient(text);
}

}  // namespace

DualPolynomial::DualPolynomial(int n) : n_(n) {
  if (n < 1 || n > 8) throw Error(ErrorCode::SizeLimit, "polynomial keys need 1 <= n <= 8");
}

void DualPolynomial::add(std::uint64_t mask, const Coefficient& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient DualPolynomial::coefficient(std::uint64_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

Coefficient DualPolynomial::evaluate(const BipartiteGraph& x) const {
  if (x.n() != n_)
    throw Error(ErrorCode::DimensionMismatch,
                "polynomial has n=" + std::to_string(n_) + ", input has n=" + std::to_string(x.n()));
  const std::uint64_t present = x.mask();
  Coefficient total = 0;
  for (const auto& [mask, value] : terms_)
    if ((mask & ~present) == 0) total += value;
  return total;
}

std::string DualPolynomial::to_tsv() const {
  std::string out;
  for (std::uint64_t mask : canonical_order(terms_)) {
    const auto edges = mask_edges(n_, mask);
    out += terms_.at(mask).str();
    out += '\t';
    out += format_edge_list(edges);
    out += '\n';
  }
  return out;
}

std::string DualPolynomial::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n_;
  doc["terms"] = nlohmann::ordered_json::array();
  for (std::uint64_t mask : canonical_order(terms_)) {
    nlohmann::ordered_json term;
    term["coeff"] = terms_.at(mask).str();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : mask_edges(n_, mask)) edges.push_back({e.row + 1, e.col + 1});
    term["edges"] = std::move(edges);
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump() + "\n";
}

DualPolynomial DualPolynomial::from_tsv(const std::string& text, int n) {
  DualPolynomial poly(n);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error(ErrorCode::ParseError, "TSV line without tab: " + line);
    const Coefficient value = parse_coefficient(line.substr(0, tab));
    const std::string edge_text = line.substr(tab + 1);
    std::uint64_t mask = 0;
    if (edge_text != "-") {
      std::size_t pos = 0;
      while (pos < edge_text.size()) {
        int row = 0;
        int col = 0;
        char close = 0;
        std::istringstream item(edge_text.substr(pos));
        char open = 0;
        char comma = 0;
        if (!(item >> open >> row >> comma >> col >> close) || open != '(' || comma != ',' ||
            close != ')')
          throw Error(ErrorCode::ParseError, "invalid edge list: " + edge_text);
        const std::uint64_t bit = edge_bit(n, row, col);
        if (mask & bit) throw Error(ErrorCode::ParseError, "repeated edge in: " + edge_text);
        mask |= bit;
        pos = edge_text.find(')', pos) + 1;
        if (pos < edge_text.size()) {
          if (edge_text[pos] != ',') throw Error(ErrorCode::ParseError, "invalid edge list: " + edge_text);
          ++pos;
        }
      }
    }
    poly.add(mask, value);
  }
  return poly;
}

DualPolynomial DualPolynomial::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const int n = doc.at("n").get<int>();
    DualPolynomial poly(n);
    for (const auto& term : doc.at("terms")) {
      std::uint64_t mask = 0;
      for (const auto& edge : term.at("edges")) {
        const std::uint64_t bit = edge_bit(n, edge.at(0).get<int>(), edge.at(1).get<int>());
        if (mask & bit) throw Error(ErrorCode::ParseError, "repeated edge in JSON term");
        mask |= bit;
      }
      poly.add(mask, parse_coefficient(term.at("coeff").get<std::string>()));
    }
    return poly;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid polynomial JSON: ") + e.what());
  }
}

}  // namespace bpm
