#include "gammalab/spectrum.hpp"

#include <bit>

#include "gammalab/errors.hpp"

namespace gammalab {

Subset subset_of(std::span<const Element> elements) {
  Subset s = 0;
  for (Element a : elements) {
    if (a >= kMaxSubsetCarrier) throw InputError("element " + std::to_string(a) + " exceeds subset capacity");
    s |= Subset{1} << a;
  }
  return s;
}

std::vector<Element> members(Subset s) {
  std::vector<Element> out;
  while (s) {
    out.push_back(static_cast<Element>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

Subset full_subset(std::size_t carrier) {
  if (carrier > kMaxSubsetCarrier) throw InputError("carrier too large for subset masks");
  return carrier == kMaxSubsetCarrier ? ~Subset{0} : (Subset{1} << carrier) - 1;
}

namespace {

void require_capacity(const Semiring& T) {
  if (T.size() > kMaxSubsetCarrier) {
    throw ResourceError("carrier of size " + std::to_string(T.size()) +
                        " exceeds subset capacity " + std::to_string(kMaxSubsetCarrier));
  }
}

// images[slot][a]: every value of a ternary product with `a` in that slot.
struct SlotImages {
  std::vector<Subset> images[3];

  explicit SlotImages(const Semiring& T) {
    const auto n = static_cast<Element>(T.size());
    for (auto& v : images) v.assign(n, 0);
    for (Mode g = 0; g < T.mode_count(); ++g)
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c) {
            const Subset bit = Subset{1} << T.tern(a, b, c, g);
            images[0][a] |= bit;
            images[1][b] |= bit;
            images[2][c] |= bit;
          }
  }
};

bool fast_absorbing(const Semiring& T, const SlotImages& img, Subset s) {
  if (!contains(s, 0)) return false;
  for (Element a : members(s)) {
    for (Element b : members(s))
      if (!contains(s, T.add(a, b))) return false;
    for (const auto& slot : img.images)
      if (slot[a] & ~s) return false;
  }
  return true;
}

std::optional<SubsetWitness> absorbing_witness(const Semiring& T, Subset s) {
  const auto n = static_cast<Element>(T.size());
  if (!contains(s, 0)) return SubsetWitness{"contains_zero", {0}, {}, 0};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (contains(s, a) && contains(s, b) && !contains(s, T.add(a, b)))
        return SubsetWitness{"add_closed", {a, b}, {}, T.add(a, b)};
  static const char* const names[3] = {"absorb_first", "absorb_second", "absorb_third"};
  for (int slot = 0; slot < 3; ++slot)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          const Element pinned = slot == 0 ? a : slot == 1 ? b : c;
          if (!contains(s, pinned)) continue;
          for (Mode g = 0; g < T.mode_count(); ++g) {
            const Element v = T.tern(a, b, c, g);
            if (!contains(s, v)) return SubsetWitness{names[slot], {a, b, c}, {g}, v};
          }
        }
  return std::nullopt;
}

bool fast_prime(const Semiring& T, Subset s) {
  const auto outside = members(full_subset(T.size()) & ~s);
  for (Mode g = 0; g < T.mode_count(); ++g)
    for (Element a : outside)
      for (Element b : outside)
        for (Element c : outside)
          if (contains(s, T.tern(a, b, c, g))) return false;
  return true;
}

}  // namespace

IdealVerdict is_ideal(const Semiring& T, Subset s) {
  require_capacity(T);
  const Subset all = full_subset(T.size());
  if (s & ~all) throw InputError("subset contains elements outside the carrier");
  IdealVerdict v;
  v.witness = absorbing_witness(T, s);
  v.absorbing_subset = !v.witness.has_value();
  v.proper = s != all;
  return v;
}

PrimeVerdict is_prime(const Semiring& T, Subset s) {
  const auto ideal = is_ideal(T, s);
  if (!ideal.is_ideal()) {
    throw PreconditionError(ideal.absorbing_subset ? "primality requires a proper ideal"
                                                   : "primality requires an ideal; failed " +
                                                         ideal.witness->law);
  }
  const auto n = static_cast<Element>(T.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (contains(s, a) || contains(s, b) || contains(s, c)) continue;
        for (Mode g = 0; g < T.mode_count(); ++g) {
          const Element v = T.tern(a, b, c, g);
          if (contains(s, v)) return {false, SubsetWitness{"prime_implication", {a, b, c}, {g}, v}};
        }
      }
  return {true, std::nullopt};
}

std::vector<Subset> ideals(const Semiring& T, std::size_t bound) {
  if (T.size() > bound || T.size() >= kMaxSubsetCarrier) {
    throw ResourceError("carrier of size " + std::to_string(T.size()) +
                        " exceeds the subset enumeration bound " + std::to_string(bound) +
                        "; required bound is " + std::to_string(T.size()));
  }
  const SlotImages img(T);
  const Subset all = full_subset(T.size());
  std::vector<Subset> out;
  // Every ideal contains 0, so only odd masks are candidates.
  for (Subset s = 1; s < all; s += 2)
    if (fast_absorbing(T, img, s)) out.push_back(s);
  return out;
}

Spectrum spec(const Semiring& T, std::size_t bound) {
  Spectrum sp;
  sp.carrier = T.size();
  for (Subset s : ideals(T, bound))
    if (fast_prime(T, s)) sp.primes.push_back(s);
  sp.basic_opens.assign(T.size(), PointSet(sp.primes.size(), false));
  for (Element a = 0; a < T.size(); ++a)
    for (std::size_t i = 0; i < sp.primes.size(); ++i) sp.basic_opens[a][i] = !contains(sp.primes[i], a);
  return sp;
}

PointSet intersect(const PointSet& x, const PointSet& y) {
  PointSet r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] && y[i];
  return r;
}

PointSet unite(const PointSet& x, const PointSet& y) {
  PointSet r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] || y[i];
  return r;
}

bool is_empty(const PointSet& x) {
  for (bool b : x)
    if (b) return false;
  return true;
}

bool is_subset(const PointSet& x, const PointSet& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] && !y[i]) return false;
  return true;
}

BasisLawReport check_basis_laws(const Semiring& T, const Spectrum& sp) {
  BasisLawReport r;
  const auto n = static_cast<Element>(T.size());
  if (!is_empty(sp.basic_open(0))) {
    r.zero_empty = false;
    r.witness = SubsetWitness{"zero_empty", {0}, {}, 0};
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const PointSet both = intersect(sp.basic_open(a), sp.basic_open(b));
      for (Mode g = 0; g < T.mode_count(); ++g) {
        ++r.instances_checked;
        const Element c = T.tern(a, b, b, g);
        if (r.intersection_law && sp.basic_open(c) != both) {
          r.intersection_law = false;
          if (!r.witness) r.witness = SubsetWitness{"intersection_law", {a, b}, {g}, c};
        }
      }
      PointSet cover(sp.primes.size(), false);
      for (Element c = 0; c < n; ++c)
        if (is_subset(sp.basic_open(c), both)) cover = unite(cover, sp.basic_open(c));
      if (r.intersections_are_unions && cover != both) {
        r.intersections_are_unions = false;
        if (!r.witness) r.witness = SubsetWitness{"intersection_union", {a, b}, {}, 0};
      }
    }
  return r;
}

ClosedSet vanishing(const Semiring& T, const Spectrum& sp, Subset ideal) {
  const auto verdict = is_ideal(T, ideal);
  if (!verdict.absorbing_subset)
    throw PreconditionError("vanishing locus requires an absorbing subset; failed " + verdict.witness->law);
  ClosedSet cs;
  cs.ideal = ideal;
  cs.points.assign(sp.primes.size(), false);
  for (std::size_t i = 0; i < sp.primes.size(); ++i) cs.points[i] = (ideal & ~sp.primes[i]) == 0;
  PointSet cover(sp.primes.size(), false);
  for (Element a : members(ideal)) {
    if (is_empty(sp.basic_open(a))) continue;
    cs.complement_generators.push_back(a);
    cover = unite(cover, sp.basic_open(a));
  }
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (cover[i] == cs.points[i]) cs.complement_is_union = false;
  return cs;
}

}  // namespace gammalab
