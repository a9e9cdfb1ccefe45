#include "gammalab/semiring.hpp"

#include <algorithm>
#include <set>

#include "gammalab/errors.hpp"

namespace gammalab {

Semiring::Semiring(AdditiveTable add, std::vector<std::string> mode_labels,
                   std::vector<std::vector<Element>> tern)
    : add_(std::move(add)), labels_(std::move(mode_labels)), tern_(std::move(tern)) {
  if (labels_.empty()) throw InputError("structure needs at least one mode");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw InputError("mode labels must be unique");
  if (tern_.size() != labels_.size())
    throw InputError("expected one ternary table per mode");
  const std::size_t n = size();
  for (std::size_t g = 0; g < tern_.size(); ++g) {
    if (tern_[g].size() != n * n * n) {
      throw InputError("tern[" + labels_[g] + "]: expected " + std::to_string(n * n * n) +
                       " entries, got " + std::to_string(tern_[g].size()));
    }
    for (std::size_t i = 0; i < tern_[g].size(); ++i) {
      if (tern_[g][i] >= n) {
        throw InputError("tern[" + labels_[g] + "][" + std::to_string(i) + "] = " +
                         std::to_string(tern_[g][i]) + " out of range");
      }
    }
  }
}

Mode Semiring::mode_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown mode label '" + label + "'");
  return static_cast<Mode>(it - labels_.begin());
}

Element Semiring::evaluate_tern(Element a, Element b, Element c, Mode g) const {
  if (a >= size() || b >= size() || c >= size())
    throw InputError("element index out of range for carrier of size " + std::to_string(size()));
  if (g >= mode_count())
    throw InputError("mode index " + std::to_string(g) + " out of range");
  return tern(a, b, c, g);
}

Semiring standard_family(std::uint64_t modulus, std::span<const std::uint64_t> gammas) {
  if (modulus == 0) throw InputError("modulus must be at least 1");
  if (gammas.empty()) throw InputError("mode set must be nonempty");
  const std::size_t n = modulus;
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> tables;
  for (const auto gamma : gammas) {
    labels.push_back(std::to_string(gamma));
    std::vector<Element> t(n * n * n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t c = 0; c < n; ++c)
          t[(a * n + b) * n + c] = static_cast<Element>((a * b % n) * c % n * (gamma % n) % n);
    tables.push_back(std::move(t));
  }
  return {AdditiveTable::cyclic(n), std::move(labels), std::move(tables)};
}

Semiring singleton_structure(std::size_t modes) {
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < modes; ++g) labels.push_back(std::to_string(g));
  return {AdditiveTable{}, std::move(labels), std::vector<std::vector<Element>>(modes, {0})};
}

}  // namespace gammalab
