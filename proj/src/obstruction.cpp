#include "gammalab/obstruction.hpp"

#include <algorithm>
#include <set>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

std::string tuple_text(std::initializer_list<Element> xs) {
  std::string s = "(";
  for (auto x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

}  // namespace

BinaryRing::BinaryRing(std::string name, AdditiveTable sum, std::vector<Element> product, Element one)
    : name_(std::move(name)), add_(std::move(sum)), mul_(std::move(product)), one_(one) {
  const std::size_t n = add_.size();
  if (n > kMaxSubsetCarrier) throw InputError("ring " + name_ + " exceeds " + std::to_string(kMaxSubsetCarrier) + " elements");
  if (mul_.size() != n * n) throw InputError("ring " + name_ + ": multiplication table has wrong size");
  if (one_ >= n) throw InputError("ring " + name_ + ": one out of range");
  for (auto v : mul_)
    if (v >= n) throw InputError("ring " + name_ + ": multiplication value out of range");
  if (auto v = add_.first_monoid_violation())
    throw StructuralError("ring " + name_ + ": addition fails " + v->law);
  auto fail = [&](const char* law, std::initializer_list<Element> xs) {
    throw StructuralError("ring " + name_ + ": " + law + " fails at " + tuple_text(xs));
  };
  for (Element a = 0; a < n; ++a) {
    if (mul(a, one_) != a) fail("unit law", {a});
    if (mul(a, 0) != 0) fail("zero law", {a});
    for (Element b = 0; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) fail("commutativity", {a, b});
      for (Element c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associativity", {a, b, c});
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity", {a, b, c});
      }
    }
  }
  ring_ = add_.is_group();
}

BinaryRing cyclic_ring(std::size_t n) {
  if (n == 0) throw InputError("Z_0 is not finite");
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>(a * b % n);
  return {"Z" + std::to_string(n), AdditiveTable::cyclic(n), std::move(mul), static_cast<Element>(1 % n)};
}

BinaryRing product_ring(const BinaryRing& lhs, const BinaryRing& rhs) {
  const std::size_t m = rhs.size(), n = lhs.size() * m;
  std::vector<Element> mul(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      mul[x * n + y] = static_cast<Element>(lhs.mul(x / m, y / m) * m + rhs.mul(x % m, y % m));
  return {lhs.name() + "x" + rhs.name(), AdditiveTable::direct_sum(lhs.additive(), rhs.additive()), std::move(mul),
          static_cast<Element>(lhs.one() * m + rhs.one())};
}

BinaryRing capped_semiring(std::size_t k) {
  const std::size_t n = k + 1;
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Element>(std::min(a + b, k));
      mul[a * n + b] = static_cast<Element>(std::min(a * b, k));
    }
  return {"N<=" + std::to_string(k), AdditiveTable(n, std::move(add)), std::move(mul), static_cast<Element>(std::min<std::size_t>(1, k))};
}

BinaryRing chain_semiring(std::size_t k) {
  const std::size_t n = k + 1;
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Element>(std::max(a, b));
      mul[a * n + b] = static_cast<Element>(std::min(a, b));
    }
  return {"Chain" + std::to_string(k), AdditiveTable(n, std::move(add)), std::move(mul), static_cast<Element>(k)};
}

std::vector<BinaryRing> ring_family(std::size_t max_size, bool semirings) {
  std::vector<BinaryRing> out;
  for (std::size_t n = 1; n <= max_size; ++n) out.push_back(cyclic_ring(n));
  for (std::size_t n = 2; n * n <= max_size; ++n)
    for (std::size_t m = n; n * m <= max_size; ++m) out.push_back(product_ring(cyclic_ring(n), cyclic_ring(m)));
  if (semirings) {
    for (std::size_t k = 1; k + 1 <= max_size; ++k) out.push_back(capped_semiring(k));
    for (std::size_t k = 2; k + 1 <= max_size; ++k) out.push_back(chain_semiring(k));
  }
  return out;
}

Subset multiplicative_closure(const BinaryRing& R, Subset seed) {
  Subset s = seed;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto x : members(s))
      for (auto y : members(s)) {
        const auto p = R.mul(x, y);
        if (!contains(s, p)) {
          s |= Subset{1} << p;
          grew = true;
        }
      }
  }
  return s;
}

std::optional<BinaryWitness> binary_fraction_equal(const BinaryRing& R, Subset simg, Element a, Element s,
                                                   Element b, Element t) {
  const std::size_t n = R.size();
  for (auto x : {a, s, b, t})
    if (x >= n) throw InputError("element " + std::to_string(x) + " outside " + R.name());
  if (!contains(simg, s) || !contains(simg, t)) throw PreconditionError("denominator outside the multiplicative set");
  if (multiplicative_closure(R, simg) != simg) throw PreconditionError("denominator set is not multiplicatively closed");
  for (auto w : members(simg)) {
    const auto p = R.mul(R.mul(w, a), t);
    const auto q = R.mul(R.mul(w, b), s);
    if (p == q) return BinaryWitness{w, 0};
    if (R.is_ring()) continue;
    for (Element x = 0; x < n; ++x)
      if (R.add(p, x) == R.add(q, x)) return BinaryWitness{w, x};
  }
  return std::nullopt;
}

ReflectionReport reflection_check(const Semiring& T, const LocalizedSemiring& L, const ShadowCandidate& cand,
                                  bool stop_at_first) {
  ReflectionReport r;
  r.raw_equals_closure = L.raw_equals_closure();
  const auto& R = cand.ring;
  if (cand.iota.size() != T.size() || !is_additive_map(T.additive(), R.additive(), cand.iota)) {
    r.rejected = kRejectNotAdditive;
    return r;
  }
  const auto den = L.system().elements();
  Subset seed = 0;
  for (auto s : den) seed |= Subset{1} << cand.iota[s];
  r.simg = multiplicative_closure(R, seed);
  if (contains(r.simg, 0)) {
    r.rejected = kRejectZeroDenominator;
    return r;
  }
  std::vector<Fraction> fr;
  for (Element a = 0; a < T.size(); ++a)
    for (auto s : den) fr.push_back({a, s});
  std::vector<Element> cls(fr.size());
  for (std::size_t i = 0; i < fr.size(); ++i) cls[i] = L.class_of(fr[i]);
  const auto& io = cand.iota;
  for (std::size_t i = 0; i < fr.size(); ++i)
    for (std::size_t j = i; j < fr.size(); ++j) {
      ++r.pairs_checked;
      PairVerdict v;
      v.lhs = fr[i];
      v.rhs = fr[j];
      v.cubic = cls[i] == cls[j];
      v.binary_witness = binary_fraction_equal(R, r.simg, io[fr[i].num], io[fr[i].den], io[fr[j].num], io[fr[j].den]);
      v.binary = v.binary_witness.has_value();
      if (v.agree()) continue;
      v.cubic_witness = cubic_related(T, L.system(), fr[i].num, fr[i].den, fr[j].num, fr[j].den);
      r.disagreements.push_back(v);
      if (stop_at_first) return r;
    }
  return r;
}

SearchReport shadow_search(const Semiring& T, const LocalizedSemiring& L, const SearchBounds& bounds) {
  SearchReport rep;
  rep.raw_equals_closure = L.raw_equals_closure();
  rep.scope =
      "reflection of fraction equality on the regular module, over every additive iota into the listed rings; "
      "the conservative exact functor and natural localization isomorphisms are not searched";
  for (auto& R : ring_family(bounds.max_ring, bounds.semirings)) {
    rep.rings.push_back(R.name());
    std::vector<std::vector<Element>> maps;
    try {
      maps = additive_maps(T.additive(), R.additive(), {}, bounds.candidate_budget);
    } catch (const ResourceError&) {
      rep.complete = false;
      return rep;
    }
    for (auto& iota : maps) {
      if (rep.candidates >= bounds.candidate_budget) {
        rep.complete = false;
        return rep;
      }
      ++rep.candidates;
      ShadowCandidate cand{R, std::move(iota)};
      const auto r = reflection_check(T, L, cand, true);
      if (r.rejected) {
        ++rep.rejections[*r.rejected];
      } else if (!r.disagreements.empty()) {
        ++rep.rejections[r.disagreements.front().cubic ? kRejectCubicOnly : kRejectBinaryOnly];
      } else {
        rep.satisfying.push_back(std::move(cand));
      }
    }
  }
  return rep;
}

std::vector<CubeEntry> cube_profile(const Semiring& T, Element t) {
  if (t >= T.size()) throw InputError("element " + std::to_string(t) + " out of range");
  std::vector<CubeEntry> out;
  for (Mode g = 0; g < T.mode_count(); ++g) out.push_back({T.label(g), T.tern(t, t, t, g)});
  return out;
}

WitnessGap witness_gap_demo(const Semiring& T, const MultiplicativeSystem& S, Element a, Element s, Element b,
                            Element t) {
  const auto w = cubic_related(T, S, a, s, b, t);
  if (!w) throw PreconditionError("(" + std::to_string(a) + "," + std::to_string(s) + ") and (" + std::to_string(b) +
                                  "," + std::to_string(t) + ") are not cubically related");
  WitnessGap g;
  g.lhs = {a, s};
  g.rhs = {b, t};
  g.witness = *w;
  g.gamma = T.label(w->gamma);
  g.delta = T.label(w->delta);
  g.eta = T.label(w->eta);
  g.lhs_value = T.tern(w->u, a, T.tern(t, t, t, w->gamma), w->delta);
  g.rhs_value = T.tern(w->u, b, T.tern(s, s, s, w->eta), w->delta);
  g.cubes_of_s = cube_profile(T, s);
  g.cubes_of_t = cube_profile(T, t);
  auto varies = [](const std::vector<CubeEntry>& c) {
    return std::any_of(c.begin(), c.end(), [&](const CubeEntry& e) { return e.value != c.front().value; });
  };
  g.mode_dependent = varies(g.cubes_of_s) || varies(g.cubes_of_t);
  g.degenerate = a == b && s == t;
  g.statement = "the witness scales by the cubes {t,t,t}_" + g.gamma + " and {s,s,s}_" + g.eta +
                "; T has only ternary operations, so a product such as a*t or b*s cannot be formed and no "
                "equation a*t = b*s exists to check";
  return g;
}

}  // namespace gammalab
