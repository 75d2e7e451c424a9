#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bpm/bigraph.hpp"
#include "bpm/coeff.hpp"

namespace bpm {

// Multilinear polynomial over the n*n edge variables of K_{n,n}, keyed by
// row-major edge masks (bit i*n + j is x_{i+1,j+1}). Zero terms are never
// stored; the constant term lives under mask 0.
class DualPolynomial {
 public:
  explicit DualPolynomial(int n);

  int n() const noexcept { return n_; }
  const std::map<std::uint64_t, Coefficient>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  // Adds to the coefficient of `mask`, erasing the term if it cancels.
  void add(std::uint64_t mask, const Coefficient& value);
  Coefficient coefficient(std::uint64_t mask) const;

  Coefficient evaluate(const BipartiteGraph& x) const;

  // Canonical dumps: terms sorted by (degree, mask).
  std::string to_tsv() const;
  std::string to_json() const;
  // TSV lines carry no side size, so the caller supplies it.
  static DualPolynomial from_tsv(const std::string& text, int n);
  static DualPolynomial from_json(const std::string& text);

  friend bool operator==(const DualPolynomial&, const DualPolynomial&) = default;

 private:
  int n_;
  std::map<std::uint64_t, Coefficient> terms_;
};

}  // namespace bpm
