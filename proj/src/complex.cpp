#include "gammalab/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gammalab/errors.hpp"
#include "gammalab/localization.hpp"
#include "gammalab/module_localization.hpp"
#include "gammalab/tensor.hpp"

namespace gammalab {

namespace {

std::vector<Element> identity(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::optional<std::pair<int, int>> support(const ChainComplex& k) {
  if (k.empty()) return std::nullopt;
  return std::make_pair(k.lo(), k.hi());
}

std::pair<int, int> joint_range(std::initializer_list<const ChainComplex*> ks, int extend_hi = 0) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto* k : ks)
    if (const auto s = support(*k)) {
      lo = any ? std::min(lo, s->first) : s->first;
      hi = any ? std::max(hi, s->second) : s->second;
      any = true;
    }
  return {lo, hi + extend_hi};
}

// Class map between subquotients induced by an element map of the ambients.
std::vector<Element> on_classes(const Subquotient& src, const Subquotient& dst, const std::vector<Element>& phi,
                                const char* what) {
  std::vector<Element> out(src.representative.size());
  for (Element x = 0; x < src.class_of.size(); ++x) {
    if (src.class_of[x] == kOutside) continue;
    const auto c = dst.class_of[phi[x]];
    if (c == kOutside) throw StructuralError(std::string(what) + ": a cycle is sent outside the cycles");
    const auto k = src.class_of[x];
    if (x == src.representative[k]) {
      out[k] = static_cast<Element>(c);
    } else if (out[k] != c) {
      throw StructuralError(std::string(what) + " is not well defined on homology");
    }
  }
  return out;
}

bool bijective(const std::vector<Element>& map, std::size_t target) {
  if (map.size() != target) return false;
  std::vector<bool> seen(target, false);
  for (const auto y : map) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

std::vector<bool> image_mask(const std::vector<Element>& map, std::size_t target) {
  std::vector<bool> mask(target, false);
  for (const auto y : map) mask[y] = true;
  return mask;
}

std::vector<bool> kernel_mask(const std::vector<Element>& map) {
  std::vector<bool> mask(map.size());
  for (std::size_t x = 0; x < map.size(); ++x) mask[x] = map[x] == 0;
  return mask;
}

}  // namespace

ChainComplex::ChainComplex(std::shared_ptr<const Semiring> over, int lo, std::vector<GammaModule> modules,
                           std::vector<std::vector<Element>> differentials)
    : over_(std::move(over)), lo_(lo), modules_(std::move(modules)), d_(std::move(differentials)),
      zero_(zero_module(over_)) {
  if (d_.size() != modules_.size()) throw InputError("one differential per degree is required");
  for (std::size_t i = 0; i < modules_.size(); ++i) {
    const int n = lo_ + static_cast<int>(i);
    const auto& m = modules_[i];
    if (!(m.base() == *over_)) throw InputError("degree " + std::to_string(n) + ": module over a different structure");
    if (!m.is_group()) throw PreconditionError("degree " + std::to_string(n) + ": module is not an additive group");
    const auto& below = module(n - 1);
    if (d_[i].size() != m.size()) throw InputError("d_" + std::to_string(n) + ": wrong table length");
    for (const auto y : d_[i])
      if (y >= below.size()) throw InputError("d_" + std::to_string(n) + ": value out of range");
    if (!is_module_morphism(m, below, d_[i]))
      throw StructuralError("d_" + std::to_string(n) + " is not a Γ-linear map");
    if (i > 0)
      for (Element x = 0; x < m.size(); ++x)
        if (const Element y = d_[i - 1][d_[i][x]]; y != 0)
          throw StructuralError("d_" + std::to_string(n - 1) + " ∘ d_" + std::to_string(n) + " sends " +
                                std::to_string(x) + " to " + std::to_string(y));
  }
}

const GammaModule& ChainComplex::module(int n) const {
  if (n < lo_ || n > hi()) return zero_;
  return modules_[static_cast<std::size_t>(n - lo_)];
}

std::vector<Element> ChainComplex::differential(int n) const {
  if (n < lo_ || n > hi()) return std::vector<Element>(module(n).size(), 0);
  return d_[static_cast<std::size_t>(n - lo_)];
}

ChainComplex concentrated(const GammaModule& m, int n) {
  return {m.base_ptr(), n, {m}, {std::vector<Element>(m.size(), 0)}};
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<std::vector<Element>> components)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(components)) {
  std::tie(lo_, hi_) = joint_range({&source_, &target_});
  if (f_.size() != static_cast<std::size_t>(std::max(0, hi_ - lo_ + 1)))
    throw InputError("one chain-map component per degree is required");
  for (int n = lo_; n <= hi_; ++n) {
    const auto& f = f_[static_cast<std::size_t>(n - lo_)];
    if (f.size() != source_.module(n).size()) throw InputError("f_" + std::to_string(n) + ": wrong table length");
    for (const auto y : f)
      if (y >= target_.module(n).size()) throw InputError("f_" + std::to_string(n) + ": value out of range");
    if (!is_module_morphism(source_.module(n), target_.module(n), f))
      throw StructuralError("f_" + std::to_string(n) + " is not a Γ-linear map");
  }
  for (int n = lo_; n <= hi_ + 1; ++n) {
    const auto fn = at(n), fb = at(n - 1), dk = source_.differential(n), dl = target_.differential(n);
    for (Element x = 0; x < fn.size(); ++x)
      if (dl[fn[x]] != fb[dk[x]])
        throw StructuralError("chain map does not commute with d_" + std::to_string(n) + " at " + std::to_string(x));
  }
}

std::vector<Element> ChainMap::at(int n) const {
  if (n < lo_ || n > hi_) return std::vector<Element>(source_.module(n).size(), 0);
  return f_[static_cast<std::size_t>(n - lo_)];
}

ChainMap identity_map(const ChainComplex& k) {
  std::vector<std::vector<Element>> f;
  if (!k.empty())
    for (int n = k.lo(); n <= k.hi(); ++n) f.push_back(identity(k.module(n).size()));
  return {k, k, std::move(f)};
}

ChainMap zero_map(const ChainComplex& k, const ChainComplex& l) {
  const auto [lo, hi] = joint_range({&k, &l});
  std::vector<std::vector<Element>> f;
  for (int n = lo; n <= hi; ++n) f.emplace_back(k.module(n).size(), 0);
  return {k, l, std::move(f)};
}

Subquotient subquotient(const GammaModule& m, const std::vector<bool>& z, const std::vector<bool>& b) {
  const std::size_t n = m.size();
  std::vector<std::size_t> cls(n, kOutside);
  std::vector<Element> reps;
  std::vector<Element> bs;
  for (Element y = 0; y < n; ++y)
    if (b[y]) bs.push_back(y);
  for (Element x = 0; x < n; ++x) {
    if (!z[x] || cls[x] != kOutside) continue;
    const auto id = reps.size();
    reps.push_back(x);
    for (const auto y : bs) cls[m.add(x, y)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> sum(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) sum[i * q + j] = static_cast<Element>(cls[m.add(reps[i], reps[j])]);

  const auto& T = m.base();
  const std::size_t s = T.size(), G = T.mode_count();
  std::vector<Element> action(s * s * q * G);
  for (Element t = 0; t < s; ++t)
    for (Element u = 0; u < s; ++u)
      for (Mode g = 0; g < G; ++g)
        for (Element x = 0; x < n; ++x) {
          if (cls[x] == kOutside) continue;
          const auto c = cls[m.act(t, u, x, g)];
          if (c == kOutside) throw StructuralError("the action leaves the cycles");
          auto& slot = action[((t * s + u) * q + cls[x]) * G + g];
          if (x == reps[cls[x]]) {
            slot = static_cast<Element>(c);
          } else if (slot != c) {
            throw StructuralError("the induced action is not well defined on the subquotient");
          }
        }
  return {GammaModule(m.base_ptr(), AdditiveTable(q, std::move(sum)), std::move(action)), std::move(cls),
          std::move(reps)};
}

Subquotient homology(const ChainComplex& k, int n) {
  const auto& m = k.module(n);
  const auto d = k.differential(n);
  const auto up = k.differential(n + 1);
  return subquotient(m, kernel_mask(d), image_mask(up, m.size()));
}

std::vector<Element> induced_on_homology(const ChainMap& f, int n) {
  return on_classes(homology(f.source(), n), homology(f.target(), n), f.at(n), "chain map");
}

ChainComplex shift(const ChainComplex& k, int by) {
  if (k.empty()) return k;
  std::vector<GammaModule> mods;
  std::vector<std::vector<Element>> ds;
  const bool odd = by % 2 != 0;
  for (int n = k.lo(); n <= k.hi(); ++n) {
    mods.push_back(k.module(n));
    auto d = k.differential(n);
    if (odd) {
      const auto neg = k.module(n - 1).additive().negation_table();
      for (auto& y : d) y = neg[y];
    }
    ds.push_back(std::move(d));
  }
  return {k.base_ptr(), k.lo() + by, std::move(mods), std::move(ds)};
}

ChainComplex cone(const ChainMap& f) {
  const auto& K = f.source();
  const auto& L = f.target();
  if (K.empty() && L.empty()) return K;
  int lo = 0, hi = 0;
  bool any = false;
  auto widen = [&](int a, int b) {
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  };
  if (!L.empty()) widen(L.lo(), L.hi());
  if (!K.empty()) widen(K.lo() + 1, K.hi() + 1);

  std::vector<GammaModule> mods;
  std::vector<std::vector<Element>> ds;
  for (int n = lo; n <= hi; ++n) {
    const auto& Ln = L.module(n);
    const auto& Kp = K.module(n - 1);
    const std::size_t below = K.module(n - 2).size();
    const auto dl = L.differential(n), dk = K.differential(n - 1), fp = f.at(n - 1);
    const auto negk = K.module(n - 2).additive().negation_table();
    const auto& addl = L.module(n - 1).additive();
    mods.push_back(direct_sum(Ln, Kp));
    std::vector<Element> d(Ln.size() * Kp.size());
    for (Element l = 0; l < Ln.size(); ++l)
      for (Element x = 0; x < Kp.size(); ++x)
        d[l * Kp.size() + x] = static_cast<Element>(addl.add(dl[l], fp[x]) * below + negk[dk[x]]);
    ds.push_back(std::move(d));
  }
  return {L.empty() ? K.base_ptr() : L.base_ptr(), lo, std::move(mods), std::move(ds)};
}

bool is_quasi_iso(const ChainMap& f) {
  for (int n = f.lo(); n <= f.hi(); ++n)
    if (!bijective(induced_on_homology(f, n), homology(f.target(), n).representative.size())) return false;
  return true;
}

ExactnessReport check_long_exact(const ChainMap& f) {
  const auto C = cone(f);
  const auto& K = f.source();
  const auto& L = f.target();
  const auto [lo, hi] = joint_range({&K, &L, &C}, 1);
  ExactnessReport r;
  std::map<std::pair<int, int>, Subquotient> memo;  // (which, degree)
  auto H = [&](int which, int n) -> const Subquotient& {
    const auto key = std::make_pair(which, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto& cx = which == 0 ? K : which == 1 ? L : C;
    return memo.emplace(key, homology(cx, n)).first->second;
  };
  auto exact_at = [&](const std::vector<Element>& in, const std::vector<Element>& out, std::size_t size,
                      const std::string& where) {
    ++r.joints_checked;
    if (image_mask(in, size) != kernel_mask(out)) {
      r.exact = false;
      if (!r.witness) r.witness = "image and kernel differ at " + where;
    }
  };
  for (int n = lo; n <= hi; ++n) {
    const std::size_t kp = K.module(n - 1).size();
    std::vector<Element> beta_el(L.module(n).size()), delta_el(C.module(n).size());
    for (Element l = 0; l < beta_el.size(); ++l) beta_el[l] = static_cast<Element>(l * kp);
    for (Element c = 0; c < delta_el.size(); ++c) delta_el[c] = static_cast<Element>(c % kp);
    const auto alpha = on_classes(H(0, n), H(1, n), f.at(n), "H(f)");
    const auto beta = on_classes(H(1, n), H(2, n), beta_el, "inclusion into the cone");
    const auto delta = on_classes(H(2, n), H(0, n - 1), delta_el, "connecting map");
    const auto alpha_below = on_classes(H(0, n - 1), H(1, n - 1), f.at(n - 1), "H(f)");
    exact_at(alpha, beta, H(1, n).representative.size(), "H_" + std::to_string(n) + "(L)");
    exact_at(beta, delta, H(2, n).representative.size(), "H_" + std::to_string(n) + "(cone)");
    exact_at(delta, alpha_below, H(0, n - 1).representative.size(), "H_" + std::to_string(n - 1) + "(K)");
  }
  return r;
}

Truncation truncate(const ChainComplex& k, TruncationSide side) {
  const auto T = k.base_ptr();
  const ChainComplex none(T, 0, {}, {});
  if (side == TruncationSide::Le0) {
    if (k.empty() || k.hi() < 0) return {none, zero_map(none, k)};
    if (k.lo() > 0) return {k, identity_map(k)};
    const auto ker = subquotient(k.module(0), kernel_mask(k.differential(0)), image_mask({0}, k.module(0).size()));
    std::vector<GammaModule> mods{ker.module};
    std::vector<std::vector<Element>> ds{std::vector<Element>(ker.module.size(), 0)};
    std::vector<std::vector<Element>> incl{ker.representative};
    for (int n = 1; n <= k.hi(); ++n) {
      mods.push_back(k.module(n));
      auto d = k.differential(n);
      if (n == 1)
        for (auto& y : d) y = static_cast<Element>(ker.class_of[y]);
      ds.push_back(std::move(d));
      incl.push_back(identity(k.module(n).size()));
    }
    ChainComplex tau(T, 0, std::move(mods), std::move(ds));
    std::vector<std::vector<Element>> f;
    for (int n = k.lo(); n < 0; ++n) f.emplace_back(1, 0);
    for (auto& c : incl) f.push_back(std::move(c));
    return {tau, ChainMap(tau, k, std::move(f))};
  }
  if (k.empty() || k.lo() > 0) return {none, zero_map(k, none)};
  if (k.hi() < 0) return {k, identity_map(k)};
  const auto& m0 = k.module(0);
  const auto coker = subquotient(m0, std::vector<bool>(m0.size(), true), image_mask(k.differential(1), m0.size()));
  std::vector<GammaModule> mods;
  std::vector<std::vector<Element>> ds, proj;
  for (int n = k.lo(); n < 0; ++n) {
    mods.push_back(k.module(n));
    ds.push_back(k.differential(n));
    proj.push_back(identity(k.module(n).size()));
  }
  mods.push_back(coker.module);
  const auto d0 = k.differential(0);
  std::vector<Element> d(coker.module.size());
  for (std::size_t c = 0; c < d.size(); ++c) d[c] = d0[coker.representative[c]];
  ds.push_back(std::move(d));
  std::vector<Element> p0(m0.size());
  for (Element x = 0; x < m0.size(); ++x) p0[x] = static_cast<Element>(coker.class_of[x]);
  proj.push_back(std::move(p0));
  for (int n = 1; n <= k.hi(); ++n) proj.emplace_back(k.module(n).size(), 0);
  ChainComplex tau(T, k.lo(), std::move(mods), std::move(ds));
  return {tau, ChainMap(k, tau, std::move(proj))};
}

HeartVerdict heart_check(const ChainComplex& k) {
  HeartVerdict v;
  v.concentrated = true;
  if (!k.empty())
    for (int n = k.lo(); n <= k.hi(); ++n)
      if (n != 0 && homology(k, n).representative.size() != 1) {
        v.concentrated = false;
        if (!v.witness) v.witness = "H_" + std::to_string(n) + " is nonzero";
      }
  v.h0_size = homology(k, 0).representative.size();
  const auto ge = truncate(k, TruncationSide::Ge0);
  const auto le = truncate(ge.complex, TruncationSide::Le0);
  const bool first = is_quasi_iso(ge.map), second = is_quasi_iso(le.map);
  const bool h0 = (le.complex.empty() ? 1 : le.complex.module(0).size()) == v.h0_size &&
                  (le.complex.empty() || (le.complex.lo() == 0 && le.complex.hi() == 0));
  v.zigzag_quasi_iso = first && second && h0;
  if (!v.zigzag_quasi_iso && !v.witness)
    v.witness = !first ? "K → τ≥0 K is not a quasi-isomorphism" : "τ≤0 τ≥0 K → τ≥0 K is not a quasi-isomorphism";
  return v;
}

bool TildeComplexVerdict::agrees() const {
  if (!defects.empty()) return false;
  const bool all = std::all_of(local.begin(), local.end(), [](const auto& e) { return e.second; });
  return global_quasi_iso == all;
}

TildeComplexVerdict tilde_complex_check(const ChainMap& f, std::size_t spec_bound) {
  TildeComplexVerdict v;
  v.global_quasi_iso = is_quasi_iso(f);
  const auto T = f.source().base_ptr();
  const auto sp = spec(*T, spec_bound);
  std::map<Subset, bool> seen;
  const auto [lo, hi] = std::make_pair(f.lo(), f.hi());

  for (Element a = 0; a < T->size(); ++a) {
    if (is_empty(sp.basic_open(a))) continue;
    try {
      const std::vector<Element> seed{a};
      const auto S = close_multiplicative(*T, seed);
      if (seen.count(S.member_set)) continue;
      seen[S.member_set] = true;
      const auto L = localize(*T, S);
      auto local_complex = [&](const ChainComplex& k, std::map<int, LocalizedModule>& out) {
        std::vector<GammaModule> mods;
        std::vector<std::vector<Element>> ds;
        for (int n = lo - 1; n <= hi; ++n) out.emplace(n, localize_module(T, L, k.module(n)));
        for (int n = lo; n <= hi; ++n) {
          const auto& here = out.at(n);
          mods.push_back(here.module);
          ds.push_back(tensor_map(here.tensor, out.at(n - 1).tensor, identity(here.scalars.module.size()),
                                  k.differential(n)));
        }
        return ChainComplex(L.structure_ptr(), lo, std::move(mods), std::move(ds));
      };
      std::map<int, LocalizedModule> lk, ll;
      const auto K = local_complex(f.source(), lk);
      const auto Lc = local_complex(f.target(), ll);
      std::vector<std::vector<Element>> comps;
      for (int n = lo; n <= hi; ++n)
        comps.push_back(tensor_map(lk.at(n).tensor, ll.at(n).tensor, identity(lk.at(n).scalars.module.size()), f.at(n)));
      v.local.emplace_back(a, is_quasi_iso(ChainMap(K, Lc, std::move(comps))));
    } catch (const ConstructionError& e) {
      v.defects.push_back("D(" + std::to_string(a) + "): " + e.what());
    } catch (const StructuralError& e) {
      v.defects.push_back("D(" + std::to_string(a) + "): " + e.what());
    }
  }
  return v;
}

}  // namespace gammalab
