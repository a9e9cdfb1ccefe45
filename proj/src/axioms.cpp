#include "gammalab/axioms.hpp"

#include <limits>
#include <random>

#include "gammalab/errors.hpp"

namespace gammalab {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::AdditiveMonoid: return "additive_monoid";
    case Axiom::TernaryOperation: return "ternary_operation";
    case Axiom::Distributivity: return "distributivity";
    case Axiom::Associativity: return "associativity";
    case Axiom::Absorption: return "absorption";
    case Axiom::Symmetry: return "symmetry";
  }
  return "unknown";
}

std::string_view law_name(Law law) {
  switch (law) {
    case Law::AddCommutative: return "add_commutative";
    case Law::AddAssociative: return "add_associative";
    case Law::AddIdentity: return "add_identity";
    case Law::TernaryInRange: return "ternary_in_range";
    case Law::DistributeFirst: return "distribute_first";
    case Law::DistributeSecond: return "distribute_second";
    case Law::DistributeThird: return "distribute_third";
    case Law::Associative: return "associative";
    case Law::AbsorbZero: return "absorb_zero";
    case Law::SwapFirstSecond: return "swap_first_second";
    case Law::SwapSecondThird: return "swap_second_third";
  }
  return "unknown";
}

bool AxiomReport::all_hold() const {
  for (const auto& v : verdicts)
    if (!v.holds) return false;
  return true;
}

namespace {

using Value = std::uint64_t;
using Sides = std::optional<std::pair<Value, Value>>;

inline Sides differ(Value lhs, Value rhs) {
  if (lhs == rhs) return std::nullopt;
  return std::make_pair(lhs, rhs);
}

struct TableAlgebra {
  const Semiring& s;
  Value add(Value a, Value b) const {
    return s.add(static_cast<Element>(a), static_cast<Element>(b));
  }
  Value tern(Value a, Value b, Value c, Value g) const {
    return s.tern(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c),
                  static_cast<Mode>(g));
  }
  bool is_element(Value v) const { return v < s.size(); }
};

struct FormulaAlgebra {
  const FormulaFamily& f;
  Value add(Value a, Value b) const {
    Value r;
    if (__builtin_add_overflow(a, b, &r)) throw InputError("window too large: 64-bit overflow in addition");
    return r;
  }
  Value tern(Value a, Value b, Value c, Value g) const { return f.tern(a, b, c, g); }
  bool is_element(Value) const { return true; }
};

template <class Algebra>
class Scanner {
 public:
  Scanner(const Algebra& alg, std::vector<Value> elements, std::vector<Value> modes,
          std::uint64_t budget, std::uint64_t seed)
      : alg_(alg), elements_(std::move(elements)), modes_(std::move(modes)), budget_(budget),
        seed_(seed) {}

  // Scans all tuples of `ne` elements followed by `nm` modes in lexicographic
  // order; `eval` returns the two sides when they differ.
  template <class Eval>
  void scan(AxiomVerdict& verdict, Law law, int ne, int nm, Eval&& eval) {
    if (!verdict.holds) return;
    const int width = ne + nm;
    std::vector<std::size_t> radix(width);
    for (int i = 0; i < width; ++i) radix[i] = i < ne ? elements_.size() : modes_.size();
    long double total = 1;
    for (auto r : radix) total *= static_cast<long double>(r);
    if (total == 0) return;

    std::vector<Value> es(ne), ms(nm);
    std::vector<std::size_t> digit(width, 0);
    auto load = [&] {
      for (int i = 0; i < ne; ++i) es[i] = elements_[digit[i]];
      for (int i = 0; i < nm; ++i) ms[i] = modes_[digit[ne + i]];
    };
    auto record = [&](const std::pair<Value, Value>& sides) {
      verdict.holds = false;
      verdict.witness = Witness{law, es, ms, sides.first, sides.second};
    };

    if (total <= static_cast<long double>(budget_)) {
      while (true) {
        load();
        ++verdict.instances_checked;
        if (auto sides = eval(es, ms)) {
          record(*sides);
          return;
        }
        int i = width - 1;
        while (i >= 0 && ++digit[i] == radix[i]) digit[i--] = 0;
        if (i < 0) break;
      }
      return;
    }

    verdict.exhaustive = false;
    std::mt19937_64 rng(seed_ ^ (static_cast<std::uint64_t>(law) * 0x9E3779B97F4A7C15ULL));
    for (std::uint64_t k = 0; k < budget_; ++k) {
      for (int i = 0; i < width; ++i)
        digit[i] = std::uniform_int_distribution<std::size_t>(0, radix[i] - 1)(rng);
      load();
      ++verdict.instances_checked;
      if (auto sides = eval(es, ms)) {
        record(*sides);
        return;
      }
    }
  }

  AxiomReport run() {
    AxiomReport report;
    for (std::size_t i = 0; i < kAxiomCount; ++i) report.verdicts[i].axiom = static_cast<Axiom>(i);
    const auto& A = alg_;
    auto& monoid = report.verdicts[0];
    scan(monoid, Law::AddCommutative, 2, 0, [&](auto& e, auto&) {
      return differ(A.add(e[0], e[1]), A.add(e[1], e[0]));
    });
    scan(monoid, Law::AddAssociative, 3, 0, [&](auto& e, auto&) {
      return differ(A.add(A.add(e[0], e[1]), e[2]), A.add(e[0], A.add(e[1], e[2])));
    });
    scan(monoid, Law::AddIdentity, 1, 0, [&](auto& e, auto&) {
      return differ(A.add(0, e[0]), e[0]);
    });

    auto& total = report.verdicts[1];
    scan(total, Law::TernaryInRange, 3, 1, [&](auto& e, auto& m) -> Sides {
      const Value v = A.tern(e[0], e[1], e[2], m[0]);
      if (A.is_element(v)) return std::nullopt;
      return std::make_pair(v, v);
    });

    auto& dist = report.verdicts[2];
    scan(dist, Law::DistributeFirst, 4, 1, [&](auto& e, auto& m) {
      return differ(A.tern(A.add(e[0], e[1]), e[2], e[3], m[0]),
                    A.add(A.tern(e[0], e[2], e[3], m[0]), A.tern(e[1], e[2], e[3], m[0])));
    });
    scan(dist, Law::DistributeSecond, 4, 1, [&](auto& e, auto& m) {
      return differ(A.tern(e[0], A.add(e[1], e[2]), e[3], m[0]),
                    A.add(A.tern(e[0], e[1], e[3], m[0]), A.tern(e[0], e[2], e[3], m[0])));
    });
    scan(dist, Law::DistributeThird, 4, 1, [&](auto& e, auto& m) {
      return differ(A.tern(e[0], e[1], A.add(e[2], e[3]), m[0]),
                    A.add(A.tern(e[0], e[1], e[2], m[0]), A.tern(e[0], e[1], e[3], m[0])));
    });

    auto& assoc = report.verdicts[3];
    scan(assoc, Law::Associative, 5, 2, [&](auto& e, auto& m) {
      return differ(A.tern(e[0], e[1], A.tern(e[2], e[3], e[4], m[0]), m[1]),
                    A.tern(A.tern(e[0], e[1], e[2], m[0]), e[3], e[4], m[1]));
    });

    auto& absorb = report.verdicts[4];
    scan(absorb, Law::AbsorbZero, 2, 1, [&](auto& e, auto& m) {
      return differ(A.tern(e[0], 0, e[1], m[0]), Value{0});
    });

    auto& sym = report.verdicts[5];
    // Both transpositions are tested per tuple so the witness tuple is minimal.
    std::optional<Law> failing;
    scan(sym, Law::SwapFirstSecond, 3, 1, [&](auto& e, auto& m) -> Sides {
      const Value v = A.tern(e[0], e[1], e[2], m[0]);
      if (auto d = differ(v, A.tern(e[1], e[0], e[2], m[0]))) {
        failing = Law::SwapFirstSecond;
        return d;
      }
      if (auto d = differ(v, A.tern(e[0], e[2], e[1], m[0]))) {
        failing = Law::SwapSecondThird;
        return d;
      }
      return std::nullopt;
    });
    if (sym.witness && failing) sym.witness->law = *failing;
    return report;
  }

 private:
  const Algebra& alg_;
  std::vector<Value> elements_;
  std::vector<Value> modes_;
  std::uint64_t budget_;
  std::uint64_t seed_;
};

Value checked_mul(Value a, Value b) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r)) throw InputError("window too large: 64-bit overflow in product");
  return r;
}
Value checked_add(Value a, Value b) {
  Value r;
  if (__builtin_add_overflow(a, b, &r)) throw InputError("window too large: 64-bit overflow in sum");
  return r;
}

}  // namespace

AxiomReport check_axioms(const Semiring& structure) {
  std::vector<Value> elements(structure.size()), modes(structure.mode_count());
  for (std::size_t i = 0; i < elements.size(); ++i) elements[i] = i;
  for (std::size_t i = 0; i < modes.size(); ++i) modes[i] = i;
  TableAlgebra alg{structure};
  Scanner<TableAlgebra> scanner(alg, std::move(elements), std::move(modes),
                                std::numeric_limits<std::uint64_t>::max(), 0);
  return scanner.run();
}

FormulaFamily formula_family(std::string_view name) {
  if (name == "pairwise_plus_mode") {
    return {"pairwise_plus_mode", "ab+bc+ca+g", [](Value a, Value b, Value c, Value g) {
              return checked_add(checked_add(checked_add(checked_mul(a, b), checked_mul(b, c)),
                                             checked_mul(c, a)),
                                 g);
            }};
  }
  if (name == "product_times_mode") {
    return {"product_times_mode", "abcg", [](Value a, Value b, Value c, Value g) {
              return checked_mul(checked_mul(checked_mul(a, b), c), g);
            }};
  }
  if (name == "product_plus_last_times_mode") {
    return {"product_plus_last_times_mode", "abc+cg", [](Value a, Value b, Value c, Value g) {
              return checked_add(checked_mul(checked_mul(a, b), c), checked_mul(c, g));
            }};
  }
  throw InputError("unknown formula family '" + std::string(name) + "'");
}

std::vector<std::string> formula_family_names() {
  return {"pairwise_plus_mode", "product_times_mode", "product_plus_last_times_mode"};
}

AxiomReport check_axioms_sampled(const FormulaFamily& family, const SampleWindow& window) {
  // Nested terms need at least one nonzero element in the window.
  if (window.range_bound < 1)
    throw InputError("window [0," + std::to_string(window.range_bound) +
                     "] too small to instantiate nested terms; need range_bound >= 1");
  if (window.gammas.empty()) throw InputError("mode window must be nonempty");
  if (window.sample_budget == 0) throw InputError("sample budget must be positive");
  std::vector<Value> elements(window.range_bound + 1);
  for (std::size_t i = 0; i < elements.size(); ++i) elements[i] = i;
  FormulaAlgebra alg{family};
  Scanner<FormulaAlgebra> scanner(alg, std::move(elements), window.gammas, window.sample_budget,
                                  window.seed);
  return scanner.run();
}

Semiring compile_modular(const FormulaFamily& family, std::uint64_t modulus,
                         std::span<const std::uint64_t> gammas) {
  if (modulus == 0) throw InputError("modulus must be at least 1");
  if (gammas.empty()) throw InputError("mode set must be nonempty");
  const std::size_t n = modulus;
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> tables;
  for (const auto gamma : gammas) {
    labels.push_back(std::to_string(gamma));
    std::vector<Element> t(n * n * n);
    for (Value a = 0; a < n; ++a)
      for (Value b = 0; b < n; ++b)
        for (Value c = 0; c < n; ++c)
          t[(a * n + b) * n + c] = static_cast<Element>(family.tern(a, b, c, gamma) % n);
    tables.push_back(std::move(t));
  }
  return {AdditiveTable::cyclic(n), std::move(labels), std::move(tables)};
}

}  // namespace gammalab
