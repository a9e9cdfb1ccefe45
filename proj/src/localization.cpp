#include "gammalab/localization.hpp"

#include <algorithm>
#include <numeric>

#include "gammalab/errors.hpp"

namespace gammalab {

std::size_t MultiplicativeSystem::size() const { return members(member_set).size(); }

MultiplicativeSystem close_multiplicative(const Semiring& T, std::span<const Element> seed) {
  if (seed.empty()) throw PreconditionError("multiplicative system needs a nonempty seed");
  if (T.size() > kMaxSubsetCarrier) throw ResourceError("carrier too large for subset masks");
  for (Element a : seed)
    if (a >= T.size()) throw InputError("seed element " + std::to_string(a) + " out of range");
  MultiplicativeSystem S;
  S.generators.assign(seed.begin(), seed.end());
  S.member_set = subset_of(seed);
  while (true) {
    if (contains(S.member_set, 0))
      throw ConstructionError("degenerate system: the closure of the seed contains 0");
    Subset next = S.member_set;
    const auto cur = members(S.member_set);
    for (Mode g = 0; g < T.mode_count(); ++g)
      for (Element a : cur)
        for (Element b : cur)
          for (Element c : cur) next |= Subset{1} << T.tern(a, b, c, g);
    if (next == S.member_set) return S;
    S.member_set = next;
  }
}

std::optional<CubicWitness> cubic_related(const Semiring& T, const MultiplicativeSystem& S,
                                          Element a, Element s, Element b, Element t) {
  if (a >= T.size() || b >= T.size()) throw InputError("numerator out of range");
  if (!S.contains(s) || !S.contains(t))
    throw PreconditionError("denominators must lie in the multiplicative system");
  const auto G = static_cast<Mode>(T.mode_count());
  for (Element u : S.elements())
    for (Mode gamma = 0; gamma < G; ++gamma) {
      const Element tc = T.tern(t, t, t, gamma);
      for (Mode delta = 0; delta < G; ++delta) {
        const Element lhs = T.tern(u, a, tc, delta);
        for (Mode eta = 0; eta < G; ++eta)
          if (lhs == T.tern(u, b, T.tern(s, s, s, eta), delta)) return CubicWitness{u, gamma, delta, eta};
      }
    }
  return std::nullopt;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller index as root so roots are class minima.
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

constexpr std::uint32_t kNone = ~std::uint32_t{0};

}  // namespace

Element LocalizedSemiring::class_of(Element a, Element s) const {
  if (s >= den_index_.size() || den_index_[s] == kNone) throw InputError("denominator not in S");
  if (a >= den_index_.size()) throw InputError("numerator out of range");
  return class_of_pair_[a * system_.size() + den_index_[s]];
}

LocalizedSemiring localize(const Semiring& T, const MultiplicativeSystem& S) {
  const auto dens = S.elements();
  if (dens.empty()) throw PreconditionError("empty multiplicative system");
  for (Element s : dens)
    if (s >= T.size()) throw InputError("system element out of range");
  const std::size_t n = T.size(), k = dens.size(), P = n * k;
  const auto G = static_cast<Mode>(T.mode_count());
  auto frac = [&](std::uint32_t p) { return Fraction{static_cast<Element>(p / k), dens[p % k]}; };

  LocalizedSemiring L;
  L.system_ = S;
  L.den_index_.assign(n, kNone);
  for (std::size_t j = 0; j < k; ++j) L.den_index_[dens[j]] = static_cast<Element>(j);
  auto pair_of = [&](Element a, Element s) { return static_cast<std::uint32_t>(a * k + L.den_index_[s]); };

  std::vector<bool> raw(P * P, false);
  UnionFind uf(P);
  for (std::uint32_t p = 0; p < P; ++p) {
    raw[p * P + p] = true;
    for (std::uint32_t q = p + 1; q < P; ++q) {
      const auto fp = frac(p), fq = frac(q);
      const auto w = cubic_related(T, S, fp.num, fp.den, fq.num, fq.den);
      if (!w) continue;
      raw[p * P + q] = raw[q * P + p] = true;
      ++L.raw_pairs_;
      if (uf.unite(p, q)) L.log_.push_back({"raw", fp, fq, w, {}, 0});
    }
  }

  // Congruence closure: pairs with equal operand classes must have equal results.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint32_t> cls(P);
    std::uint32_t C = 0;
    {
      std::vector<std::uint32_t> id(P, kNone);
      for (std::uint32_t p = 0; p < P; ++p) {
        const auto r = uf.find(p);
        if (id[r] == kNone) id[r] = C++;
        cls[p] = id[r];
      }
    }
    auto force = [&](std::vector<std::uint32_t>& slot, std::size_t key, std::uint32_t result,
                     const char* rule, std::vector<Fraction> operands, Mode mode) {
      if (slot[key] == kNone) {
        slot[key] = result;
        return;
      }
      if (uf.find(slot[key]) == uf.find(result)) return;
      L.log_.push_back({rule, frac(slot[key]), frac(result), std::nullopt, std::move(operands), mode});
      uf.unite(slot[key], result);
      changed = true;
    };

    std::vector<std::uint32_t> add_sig(static_cast<std::size_t>(C) * C, kNone);
    for (std::size_t j = 0; j < k; ++j)
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
          const auto p = static_cast<std::uint32_t>(a * k + j), q = static_cast<std::uint32_t>(b * k + j);
          force(add_sig, static_cast<std::size_t>(cls[p]) * C + cls[q], pair_of(T.add(a, b), dens[j]), "add",
                {frac(p), frac(q)}, 0);
        }

    std::vector<std::uint32_t> tern_sig(static_cast<std::size_t>(C) * C * C * G, kNone);
    for (std::uint32_t p = 0; p < P; ++p)
      for (std::uint32_t q = 0; q < P; ++q)
        for (std::uint32_t r = 0; r < P; ++r)
          for (Mode g = 0; g < G; ++g) {
            const auto fp = frac(p), fq = frac(q), fr = frac(r);
            const Element num = T.tern(fp.num, fq.num, fr.num, g);
            const Element den = T.tern(fp.den, fq.den, fr.den, g);
            if (L.den_index_[den] == kNone)
              throw PreconditionError("system is not closed under the ternary products");
            const std::size_t key = ((static_cast<std::size_t>(cls[p]) * C + cls[q]) * C + cls[r]) * G + g;
            force(tern_sig, key, pair_of(num, den), "tern", {fp, fq, fr}, g);
          }
  }

  // Roots are class minima, so ordering classes by root orders them by representative.
  std::vector<std::uint32_t> class_id(P, kNone);
  L.class_of_pair_.assign(P, 0);
  for (std::uint32_t p = 0; p < P; ++p) {
    const auto r = uf.find(p);
    if (class_id[r] == kNone) {
      class_id[r] = static_cast<std::uint32_t>(L.reps_.size());
      L.reps_.push_back(frac(r));
    }
    L.class_of_pair_[p] = class_id[r];
  }
  for (std::uint32_t p = 0; p < P && L.raw_equals_closure_; ++p)
    for (std::uint32_t q = p + 1; q < P; ++q)
      if (L.class_of_pair_[p] == L.class_of_pair_[q] && !raw[p * P + q]) {
        L.raw_equals_closure_ = false;
        break;
      }

  const std::size_t C = L.reps_.size();
  // first_num[c * k + j]: smallest numerator of a pair in class c with denominator j.
  std::vector<std::uint32_t> first_num(C * k, kNone);
  for (std::uint32_t p = P; p-- > 0;) first_num[L.class_of_pair_[p] * k + p % k] = p / k;
  std::vector<Element> add(C * C);
  for (std::size_t x = 0; x < C; ++x)
    for (std::size_t y = 0; y < C; ++y) {
      std::size_t j = 0;
      while (j < k && (first_num[x * k + j] == kNone || first_num[y * k + j] == kNone)) ++j;
      if (j == k) {
        throw ConstructionError("no common-denominator representatives for " +
                                std::to_string(L.reps_[x].num) + "/" + std::to_string(L.reps_[x].den) +
                                " + " + std::to_string(L.reps_[y].num) + "/" +
                                std::to_string(L.reps_[y].den));
      }
      const Element sum = T.add(first_num[x * k + j], first_num[y * k + j]);
      add[x * C + y] = L.class_of_pair_[sum * k + j];
    }
  std::vector<std::vector<Element>> tern(G, std::vector<Element>(C * C * C));
  for (Mode g = 0; g < G; ++g)
    for (std::size_t x = 0; x < C; ++x)
      for (std::size_t y = 0; y < C; ++y)
        for (std::size_t z = 0; z < C; ++z) {
          const auto &fx = L.reps_[x], &fy = L.reps_[y], &fz = L.reps_[z];
          tern[g][(x * C + y) * C + z] = L.class_of(T.tern(fx.num, fy.num, fz.num, g),
                                                    T.tern(fx.den, fy.den, fz.den, g));
        }
  L.quotient_ = std::make_shared<const Semiring>(AdditiveTable(C, std::move(add)), T.labels(), std::move(tern));
  return L;
}

bool is_homomorphism(const Semiring& src, const Semiring& dst, std::span<const Element> map) {
  if (map.size() != src.size() || src.mode_count() != dst.mode_count()) return false;
  if (!is_additive_map(src.additive(), dst.additive(), map)) return false;
  const auto n = static_cast<Element>(src.size());
  for (Mode g = 0; g < src.mode_count(); ++g)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (map[src.tern(a, b, c, g)] != dst.tern(map[a], map[b], map[c], g)) return false;
  return true;
}

CanonicalMap canonical_map(const Semiring& T, const LocalizedSemiring& L) {
  for (Element s0 : L.system().elements()) {
    CanonicalMap m{s0, std::vector<Element>(T.size())};
    for (Element a = 0; a < T.size(); ++a) m.image[a] = L.class_of(a, s0);
    if (is_homomorphism(T, L.structure(), m.image)) return m;
  }
  throw StructuralError("no denominator s0 in S makes a -> a/s0 a homomorphism");
}

std::optional<Inverse> is_invertible(const Semiring& R, Element s) {
  if (s >= R.size()) throw InputError("element out of range");
  const auto n = static_cast<Element>(R.size());
  for (Element partner = 0; partner < n; ++partner)
    for (Mode g = 0; g < R.mode_count(); ++g) {
      bool identity = true;
      for (Element x = 0; x < n && identity; ++x) identity = R.tern(s, partner, x, g) == x;
      if (identity) return Inverse{partner, g};
    }
  return std::nullopt;
}

namespace {

class HomSearch {
 public:
  HomSearch(const Semiring& src, const Semiring& dst, std::span<const std::optional<Element>> pins,
            std::uint64_t budget, const std::function<bool(std::span<const Element>)>& visit)
      : src_(src), dst_(dst), pins_(pins), budget_(budget), visit_(visit), map_(src.size()) {}

  std::uint64_t run() {
    descend(0);
    return found_;
  }

 private:
  // Checks every constraint whose arguments are all among 0..x and involve x.
  bool consistent(Element x) const {
    for (Element y = 0; y <= x; ++y)
      for (Element z = 0; z <= x; ++z) {
        const Element w = src_.add(y, z);
        if (w <= x && (y == x || z == x || w == x) && map_[w] != dst_.add(map_[y], map_[z])) return false;
      }
    for (Mode g = 0; g < src_.mode_count(); ++g)
      for (Element a = 0; a <= x; ++a)
        for (Element b = 0; b <= x; ++b)
          for (Element c = 0; c <= x; ++c) {
            const Element w = src_.tern(a, b, c, g);
            if (w > x || (a != x && b != x && c != x && w != x)) continue;
            if (map_[w] != dst_.tern(map_[a], map_[b], map_[c], g)) return false;
          }
    return true;
  }

  bool descend(Element x) {
    if (++nodes_ > budget_)
      throw ResourceError("homomorphism search exceeded budget of " + std::to_string(budget_) + " nodes");
    if (x == src_.size()) {
      ++found_;
      return visit_(map_);
    }
    Element lo = 0, hi = static_cast<Element>(dst_.size());
    if (x == 0) hi = 1;  // additive maps fix 0
    if (pins_[x]) {
      lo = *pins_[x];
      hi = std::min<Element>(hi, lo + 1);
    }
    for (Element v = lo; v < hi; ++v) {
      map_[x] = v;
      if (consistent(x) && !descend(x + 1)) return false;
    }
    return true;
  }

  const Semiring& src_;
  const Semiring& dst_;
  std::span<const std::optional<Element>> pins_;
  std::uint64_t budget_;
  const std::function<bool(std::span<const Element>)>& visit_;
  std::vector<Element> map_;
  std::uint64_t nodes_ = 0;
  std::uint64_t found_ = 0;
};

}  // namespace

std::uint64_t for_each_homomorphism(const Semiring& src, const Semiring& dst,
                                    std::span<const std::optional<Element>> pins,
                                    std::uint64_t budget,
                                    const std::function<bool(std::span<const Element>)>& visit) {
  if (pins.size() != src.size()) throw InputError("pin table has wrong size");
  if (src.mode_count() != dst.mode_count()) return 0;
  HomSearch search(src, dst, pins, budget, visit);
  return search.run();
}

FactorizationVerdict check_universal_property(const Semiring& T, const LocalizedSemiring& L,
                                              const Semiring& R, std::span<const Element> f,
                                              std::uint64_t budget) {
  if (!is_homomorphism(T, R, f)) throw PreconditionError("f is not a homomorphism T -> R");
  for (Element s : L.system().elements())
    if (!is_invertible(R, f[s])) {
      throw PreconditionError("f(" + std::to_string(s) + ") = " + std::to_string(f[s]) +
                              " is not invertible in the target");
    }
  const auto ell = canonical_map(T, L);
  FactorizationVerdict verdict;
  std::vector<std::optional<Element>> pins(L.class_count());
  for (Element a = 0; a < T.size(); ++a) {
    auto& pin = pins[ell.image[a]];
    if (pin && *pin != f[a]) return verdict;  // f does not factor through ℓ
    pin = f[a];
  }
  verdict.factorizations = for_each_homomorphism(L.structure(), R, pins, budget, [&](std::span<const Element> g) {
    if (!verdict.first) verdict.first.emplace(g.begin(), g.end());
    return true;
  });
  return verdict;
}

}  // namespace gammalab
