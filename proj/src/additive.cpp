#include "gammalab/additive.hpp"

#include <algorithm>

#include "gammalab/errors.hpp"

namespace gammalab {

AdditiveTable::AdditiveTable() : size_(1), table_{0} {}

AdditiveTable::AdditiveTable(std::size_t size, std::vector<Element> table)
    : size_(size), table_(std::move(table)) {
  if (size_ == 0) throw InputError("additive table: carrier must be nonempty");
  if (table_.size() != size_ * size_) {
    throw InputError("additive table: expected " + std::to_string(size_ * size_) +
                     " entries, got " + std::to_string(table_.size()));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= size_) {
      throw InputError("additive table: entry add[" + std::to_string(i / size_) + "][" +
                       std::to_string(i % size_) + "] = " + std::to_string(table_[i]) +
                       " out of range");
    }
  }
}

AdditiveTable AdditiveTable::cyclic(std::size_t order) {
  if (order == 0) throw InputError("cyclic group of order 0");
  std::vector<Element> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a * order + b] = static_cast<Element>((a + b) % order);
  return {order, std::move(t)};
}

AdditiveTable AdditiveTable::direct_sum(const AdditiveTable& lhs, const AdditiveTable& rhs) {
  const std::size_t n = lhs.size() * rhs.size();
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = lhs.add(static_cast<Element>(x / rhs.size()), static_cast<Element>(y / rhs.size()));
      const auto b = rhs.add(static_cast<Element>(x % rhs.size()), static_cast<Element>(y % rhs.size()));
      t[x * n + y] = static_cast<Element>(a * rhs.size() + b);
    }
  }
  return {n, std::move(t)};
}

std::optional<AdditiveTable::Violation> AdditiveTable::first_monoid_violation() const {
  const auto n = static_cast<Element>(size_);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (add(a, b) != add(b, a)) return Violation{"commutativity", {a, b}, add(a, b), add(b, a)};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const auto l = add(add(a, b), c);
        const auto r = add(a, add(b, c));
        if (l != r) return Violation{"associativity", {a, b, c}, l, r};
      }
  for (Element a = 0; a < n; ++a)
    if (add(0, a) != a) return Violation{"zero", {a}, add(0, a), a};
  return std::nullopt;
}

bool AdditiveTable::is_group() const {
  for (Element a = 0; a < size_; ++a) {
    bool found = false;
    for (Element b = 0; b < size_ && !found; ++b) found = add(a, b) == 0;
    if (!found) return false;
  }
  return true;
}

std::vector<Element> AdditiveTable::negation_table() const {
  std::vector<Element> neg(size_);
  for (Element a = 0; a < size_; ++a) {
    Element b = 0;
    while (b < size_ && add(a, b) != 0) ++b;
    if (b == size_) throw PreconditionError("additive monoid is not a group: element " +
                                            std::to_string(a) + " has no inverse");
    neg[a] = b;
  }
  return neg;
}

Element AdditiveTable::multiple(std::int64_t k, Element x) const {
  Element base = x;
  if (k < 0) {
    base = negation_table()[x];
    k = -k;
  }
  // Multiples of base are eventually periodic; walk until k or a repeat.
  std::vector<std::int64_t> seen_at(size_, -1);
  std::vector<Element> sequence;
  Element acc = 0;
  for (std::int64_t i = 0; i < k; ++i) {
    if (seen_at[acc] >= 0) {
      const std::int64_t start = seen_at[acc];
      const std::int64_t period = i - start;
      return sequence[static_cast<std::size_t>(start + (k - start) % period)];
    }
    seen_at[acc] = i;
    sequence.push_back(acc);
    acc = add(acc, base);
  }
  return acc;
}

bool is_additive_map(const AdditiveTable& src, const AdditiveTable& dst, std::span<const Element> map) {
  if (map.size() != src.size() || map[0] != 0) return false;
  for (Element x = 0; x < src.size(); ++x) {
    if (map[x] >= dst.size()) return false;
    for (Element y = 0; y < src.size(); ++y)
      if (map[src.add(x, y)] != dst.add(map[x], map[y])) return false;
  }
  return true;
}

namespace {

constexpr std::int64_t kUnset = -1;

class MapSearch {
 public:
  MapSearch(const AdditiveTable& src, const AdditiveTable& dst,
            std::span<const IntertwinedOperator> ops, std::uint64_t budget,
            const std::function<bool(std::span<const Element>)>& visit)
      : src_(src), dst_(dst), ops_(ops), budget_(budget), visit_(visit),
        image_(src.size(), kUnset) {
    choose_generators();
  }

  std::uint64_t run() {
    image_[0] = 0;
    trail_.push_back(0);
    if (propagate(0)) descend(0);
    return visited_;
  }

 private:
  void choose_generators() {
    std::vector<bool> span(src_.size(), false);
    span[0] = true;
    for (Element x = 0; x < src_.size(); ++x) {
      if (span[x]) continue;
      generators_.push_back(x);
      // close span under + with all generators and under the operators
      std::vector<Element> work;
      for (Element y = 0; y < src_.size(); ++y)
        if (span[y]) work.push_back(y);
      span[x] = true;
      work.push_back(x);
      while (!work.empty()) {
        const Element y = work.back();
        work.pop_back();
        auto mark = [&](Element z) {
          if (!span[z]) {
            span[z] = true;
            work.push_back(z);
          }
        };
        for (Element g : generators_) mark(src_.add(y, g));
        for (const auto& op : ops_) mark(op.source[y]);
      }
    }
  }

  // Extends the image through additions by assigned generators and through
  // the operators. Returns false on a conflict.
  bool propagate(std::size_t assigned_generators) {
    std::vector<Element> work;
    for (Element y = 0; y < src_.size(); ++y)
      if (image_[y] != kUnset) work.push_back(y);
    while (!work.empty()) {
      const Element y = work.back();
      work.pop_back();
      auto require = [&](Element z, Element value) {
        if (image_[z] == kUnset) {
          image_[z] = value;
          trail_.push_back(z);
          work.push_back(z);
          return true;
        }
        return image_[z] == static_cast<std::int64_t>(value);
      };
      const auto fy = static_cast<Element>(image_[y]);
      for (std::size_t j = 0; j < assigned_generators; ++j) {
        const Element g = generators_[j];
        if (!require(src_.add(y, g), dst_.add(fy, static_cast<Element>(image_[g])))) return false;
      }
      for (const auto& op : ops_)
        if (!require(op.source[y], op.target[fy])) return false;
    }
    return true;
  }

  bool complete_and_valid() const {
    std::vector<Element> map(src_.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (image_[i] == kUnset) return false;
      map[i] = static_cast<Element>(image_[i]);
    }
    if (!is_additive_map(src_, dst_, map)) return false;
    for (const auto& op : ops_)
      for (Element x = 0; x < src_.size(); ++x)
        if (map[op.source[x]] != op.target[map[x]]) return false;
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool descend(std::size_t depth) {
    if (++nodes_ > budget_) {
      throw ResourceError("additive map enumeration exceeded budget of " + std::to_string(budget_) +
                          " search nodes");
    }
    if (depth == generators_.size()) {
      if (!complete_and_valid()) return true;
      std::vector<Element> map(src_.size());
      for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Element>(image_[i]);
      ++visited_;
      return visit_(map);
    }
    const Element g = generators_[depth];
    for (Element value = 0; value < dst_.size(); ++value) {
      const std::size_t mark = trail_.size();
      bool ok = true;
      if (image_[g] == kUnset) {
        image_[g] = value;
        trail_.push_back(g);
      } else {
        ok = image_[g] == static_cast<std::int64_t>(value);
      }
      if (ok && propagate(depth + 1)) {
        if (!descend(depth + 1)) return false;
      }
      while (trail_.size() > mark) {
        image_[trail_.back()] = kUnset;
        trail_.pop_back();
      }
    }
    return true;
  }

  const AdditiveTable& src_;
  const AdditiveTable& dst_;
  std::span<const IntertwinedOperator> ops_;
  std::uint64_t budget_;
  const std::function<bool(std::span<const Element>)>& visit_;
  std::vector<std::int64_t> image_;
  std::vector<Element> trail_;
  std::vector<Element> generators_;
  std::uint64_t nodes_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_additive_map(const AdditiveTable& src, const AdditiveTable& dst,
                                    std::span<const IntertwinedOperator> ops, std::uint64_t budget,
                                    const std::function<bool(std::span<const Element>)>& visit) {
  for (const auto& op : ops) {
    if (op.source.size() != src.size() || op.target.size() != dst.size())
      throw InputError("intertwined operator has wrong table size");
  }
  MapSearch search(src, dst, ops, budget, visit);
  return search.run();
}

std::vector<std::vector<Element>> additive_maps(const AdditiveTable& src, const AdditiveTable& dst,
                                                std::span<const IntertwinedOperator> ops,
                                                std::uint64_t budget) {
  std::vector<std::vector<Element>> out;
  for_each_additive_map(src, dst, ops, budget, [&](std::span<const Element> m) {
    out.emplace_back(m.begin(), m.end());
    return true;
  });
  return out;
}

std::vector<std::uint64_t> invariant_factors(const AdditiveTable& g) {
  if (!g.is_group()) throw PreconditionError("invariant factors need a group");
  std::uint64_t rest = g.size();
  std::vector<std::uint64_t> factors;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::uint64_t part = 1;
    while (rest % p == 0) {
      rest /= p;
      part *= p;
    }
    // killed[k] = #{x : p^k x = 0} = prod_i p^min(k, e_i)
    std::vector<std::uint64_t> log_killed{0};
    for (std::uint64_t pk = p; log_killed.back() < 64; pk *= p) {
      std::uint64_t count = 0;
      for (Element x = 0; x < g.size(); ++x) count += g.multiple(static_cast<std::int64_t>(pk), x) == 0;
      std::uint64_t e = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++e;
      log_killed.push_back(e);
      if (count == part) break;
    }
    // at_least[k] = #{i : e_i >= k}
    std::vector<std::uint64_t> exps;
    for (std::size_t k = 1; k < log_killed.size(); ++k) {
      const auto at_least = log_killed[k] - log_killed[k - 1];
      if (exps.size() < at_least) exps.resize(at_least, 0);
      for (std::uint64_t i = 0; i < at_least; ++i) ++exps[i];
    }
    if (factors.size() < exps.size()) factors.insert(factors.begin(), exps.size() - factors.size(), 1);
    // exps is descending; align with the largest factors at the back
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::uint64_t q = 1;
      for (std::uint64_t e = 0; e < exps[i]; ++e) q *= p;
      factors[factors.size() - 1 - i] *= q;
    }
  }
  return factors;
}

}  // namespace gammalab
