#include "gammalab/sheaf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string show(const std::vector<Element>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// x/s ↦ x/s from one localization into another with a larger system;
// nullopt when the assignment depends on the representative.
std::optional<std::vector<Element>> fraction_map(const LocalizedSemiring& from, const LocalizedSemiring& to,
                                                 std::size_t carrier) {
  std::vector<Element> image(from.class_count());
  for (Element k = 0; k < image.size(); ++k) image[k] = to.class_of(from.representatives()[k]);
  for (Element a = 0; a < carrier; ++a)
    for (const Element s : from.system().elements())
      if (to.class_of(a, s) != image[from.class_of(a, s)]) return std::nullopt;
  return image;
}

std::vector<Element> compose(const std::vector<Element>& second, const std::vector<Element>& first) {
  std::vector<Element> out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = second[first[x]];
  return out;
}

std::vector<Element> identity(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

struct Overlap {
  std::size_t i = 0, j = 0;
  std::size_t node = 0;
};

// Nodes of the pairwise overlaps D(c_i) ∩ D(c_j) = D({c_i,c_j,c_j}_γ).
std::vector<Overlap> overlaps(const BasisPresheaf& p, const std::vector<Element>& cover) {
  const auto& T = p.base();
  const auto& sp = p.spectrum();
  std::vector<Overlap> out;
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (std::size_t j = i + 1; j < cover.size(); ++j) {
      const auto meet = intersect(sp.basic_open(cover[i]), sp.basic_open(cover[j]));
      std::optional<Element> d;
      for (Mode g = 0; g < T.mode_count() && !d; ++g) {
        const Element x = T.tern(cover[i], cover[j], cover[j], g);
        if (sp.basic_open(x) == meet) d = x;
      }
      if (!d)
        throw PreconditionError("overlap of D(" + std::to_string(cover[i]) + ") and D(" + std::to_string(cover[j]) +
                                ") is not a basic open");
      out.push_back({i, j, p.node_of(*d)});
    }
  return out;
}

// All tuples of sections over the cover that agree on every overlap.
std::vector<std::vector<Element>> compatible_families(const BasisPresheaf& p, const std::vector<Element>& cover,
                                                      std::uint64_t budget, std::vector<std::string>& defects) {
  std::vector<std::size_t> nodes, sizes;
  double total = 1;
  for (const Element c : cover) {
    nodes.push_back(p.node_of(c));
    sizes.push_back(p.section_size(nodes.back()));
    total *= static_cast<double>(sizes.back());
  }
  if (total > static_cast<double>(budget))
    throw ResourceError("compatible-family enumeration needs " + std::to_string(static_cast<std::uint64_t>(total)) +
                        " candidates, budget " + std::to_string(budget));
  struct Check {
    std::size_t i, j;
    const std::vector<Element>* ri;
    const std::vector<Element>* rj;
  };
  std::vector<Check> checks;
  for (const auto& o : overlaps(p, cover)) {
    const auto& a = p.restriction(nodes[o.i], o.node);
    const auto& b = p.restriction(nodes[o.j], o.node);
    if (!a.ok() || !b.ok()) {
      defects.push_back("overlap of D(" + std::to_string(cover[o.i]) + ") and D(" + std::to_string(cover[o.j]) +
                        "): " + (a.ok() ? *b.defect : *a.defect));
      continue;
    }
    checks.push_back({o.i, o.j, &a.map, &b.map});
  }
  std::vector<std::vector<Element>> out;
  std::vector<Element> tuple(cover.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cover.size()) {
      for (const auto& c : checks)
        if ((*c.ri)[tuple[c.i]] != (*c.rj)[tuple[c.j]]) return;
      out.push_back(tuple);
      return;
    }
    for (Element x = 0; x < sizes[k]; ++x) {
      tuple[k] = x;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

BasisPresheaf::BasisPresheaf(std::shared_ptr<const Semiring> T, GammaModule m, std::size_t spec_bound)
    : T_(std::move(T)), m_(std::move(m)), spec_(spec(*T_, spec_bound)), zero_(zero_module(T_)) {
  if (!(m_.base() == *T_)) throw PreconditionError("module is over a different structure");
  if (!m_.is_group()) throw PreconditionError("tilde needs an additive group; complete the module first");
  const std::size_t n = T_->size();

  std::map<Subset, std::shared_ptr<const LocalizedSemiring>> cache;
  auto localized = [&](Subset system) -> std::shared_ptr<const LocalizedSemiring> {
    if (auto it = cache.find(system); it != cache.end()) return it->second;
    const auto elems = members(system);
    auto L = std::make_shared<const LocalizedSemiring>(localize(*T_, close_multiplicative(*T_, elems)));
    cache.emplace(system, L);
    return L;
  };

  nodes_.push_back(SheafNode{0, PointSet(spec_.primes.size(), false), {}, nullptr, std::nullopt, std::nullopt});
  std::map<Subset, std::size_t> by_system;
  node_of_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    const auto& open = spec_.basic_open(a);
    if (is_empty(open)) {
      nodes_[0].generators.push_back(a);
      continue;
    }
    SheafNode node;
    node.open = open;
    node.generators = {a};
    try {
      const std::vector<Element> seed{a};
      node.system = close_multiplicative(*T_, seed).member_set;
    } catch (const ConstructionError& e) {
      node.defect = std::string("S(") + std::to_string(a) + ") is degenerate although D(a) is nonempty: " + e.what();
      node_of_[a] = nodes_.size();
      nodes_.push_back(std::move(node));
      continue;
    }
    if (auto it = by_system.find(node.system); it != by_system.end()) {
      nodes_[it->second].generators.push_back(a);
      node_of_[a] = it->second;
      continue;
    }
    try {
      node.scalars = localized(node.system);
      node.local = localize_module(T_, *node.scalars, m_);
    } catch (const ConstructionError& e) {
      node.defect = std::string("section on D(") + std::to_string(a) + "): " + e.what();
    } catch (const StructuralError& e) {
      node.defect = std::string("section on D(") + std::to_string(a) + "): " + e.what();
    }
    by_system.emplace(node.system, nodes_.size());
    node_of_[a] = nodes_.size();
    nodes_.push_back(std::move(node));
  }

  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      const auto& from = nodes_[i];
      const auto& to = nodes_[j];
      if (!is_subset(to.open, from.open)) continue;
      Restriction r{i, j, {}, {}, std::nullopt};
      if (j == 0) {
        r.map.assign(section_size(i), 0);
      } else if (from.defect || to.defect || !from.local || !to.local) {
        r.defect = "section defect on an endpoint";
      } else {
        try {
          const auto joint = localized(close_multiplicative(*T_, members(from.system | to.system)).member_set);
          const auto ki = fraction_map(*from.scalars, *joint, n);
          const auto kj = fraction_map(*to.scalars, *joint, n);
          if (!ki || !kj) {
            r.defect = "fractions do not map into the joint localization";
          } else {
            std::vector<Element> inv(joint->class_count(), ~Element{0});
            for (Element x = 0; x < kj->size(); ++x) inv[(*kj)[x]] = x;
            const bool bijective = kj->size() == joint->class_count() &&
                                   std::none_of(inv.begin(), inv.end(), [](Element v) { return v == ~Element{0}; });
            if (!bijective) {
              r.defect = "image of S(" + std::to_string(from.generators.front()) + ") is not invertible on D(" +
                         std::to_string(to.generators.front()) + ")";
            } else {
              r.scalar_map = compose(inv, *ki);
              if (!is_homomorphism(from.scalars->structure(), to.scalars->structure(), r.scalar_map)) {
                r.defect = "induced map of localizations is not a homomorphism";
              } else {
                // ρ on the completions, then ρ ⊗ id on the sections.
                const auto& ci = from.local->scalars;
                const auto& cj = to.local->scalars;
                const std::size_t ni = from.scalars->class_count(), nj = to.scalars->class_count();
                std::vector<Element> gp(ci.module.size());
                for (Element x = 0; x < ni; ++x)
                  for (Element y = 0; y < ni; ++y)
                    gp[ci.class_of_pair[x * ni + y]] =
                        cj.class_of_pair[r.scalar_map[x] * nj + r.scalar_map[y]];
                r.map = tensor_map(from.local->tensor, to.local->tensor, gp, identity(m_.size()));
              }
            }
          }
        } catch (const ConstructionError& e) {
          r.defect = e.what();
        } catch (const StructuralError& e) {
          r.defect = e.what();
        }
      }
      res_.emplace(std::make_pair(i, j), std::move(r));
    }
}

std::size_t BasisPresheaf::section_size(std::size_t node) const { return section_additive(node).size(); }

const AdditiveTable& BasisPresheaf::section_additive(std::size_t node) const {
  const auto& n = nodes_.at(node);
  return n.local ? n.local->module.additive() : zero_.additive();
}

const Restriction& BasisPresheaf::restriction(std::size_t from, std::size_t to) const {
  const auto it = res_.find({from, to});
  if (it == res_.end()) throw PreconditionError("no inclusion between the requested basic opens");
  return it->second;
}

std::vector<Element> BasisPresheaf::unit(std::size_t node) const {
  const auto& n = nodes_.at(node);
  if (n.local) return n.local->unit;
  return std::vector<Element>(m_.size(), 0);
}

std::vector<std::string> BasisPresheaf::defects() const {
  std::vector<std::string> out;
  for (const auto& n : nodes_)
    if (n.defect) out.push_back(*n.defect);
  for (const auto& [key, r] : res_)
    if (r.defect)
      out.push_back("restriction " + std::to_string(key.first) + "→" + std::to_string(key.second) + ": " + *r.defect);
  return out;
}

PresheafLawReport check_presheaf_laws(const BasisPresheaf& p) {
  PresheafLawReport r;
  const auto& nodes = p.nodes();
  auto usable = [&](std::size_t i, std::size_t j) {
    const auto it = p.restrictions().find({i, j});
    return it != p.restrictions().end() && it->second.ok();
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!usable(i, i)) continue;
    if (p.restriction(i, i).map != identity(p.section_size(i))) {
      r.identities = false;
      if (!r.witness) r.witness = "res(a,a) is not the identity on node " + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (!usable(i, j) || !usable(j, k) || !usable(i, k)) continue;
        ++r.triangles_checked;
        if (compose(p.restriction(j, k).map, p.restriction(i, j).map) != p.restriction(i, k).map) {
          r.triangles = false;
          if (!r.witness)
            r.witness = "triangle " + std::to_string(i) + "→" + std::to_string(j) + "→" + std::to_string(k);
        }
      }
  for (std::size_t i = 1; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].open != nodes[j].open) continue;
      const bool ok = usable(i, j) && usable(j, i) &&
                      compose(p.restriction(j, i).map, p.restriction(i, j).map) == identity(p.section_size(i)) &&
                      compose(p.restriction(i, j).map, p.restriction(j, i).map) == identity(p.section_size(j));
      if (!ok) {
        r.generator_independent = false;
        if (!r.witness)
          r.witness = "D(" + std::to_string(nodes[i].generators.front()) + ") = D(" +
                      std::to_string(nodes[j].generators.front()) + ") but the sections are not comparable";
      }
    }
  return r;
}

std::vector<std::vector<Element>> minimal_covers(const Spectrum& s) {
  const auto all = s.everything();
  if (all.empty()) return {{}};
  std::vector<Element> candidates;
  for (Element a = 0; a < s.carrier; ++a)
    if (!is_empty(s.basic_open(a))) candidates.push_back(a);
  for (std::size_t k = 1; k <= candidates.size(); ++k) {
    std::vector<std::vector<Element>> found;
    std::vector<Element> pick;
    std::function<void(std::size_t, PointSet)> rec = [&](std::size_t start, PointSet acc) {
      if (pick.size() == k) {
        if (acc == all) found.push_back(pick);
        return;
      }
      for (std::size_t i = start; i < candidates.size(); ++i) {
        pick.push_back(candidates[i]);
        rec(i + 1, unite(acc, s.basic_open(candidates[i])));
        pick.pop_back();
      }
    };
    rec(0, PointSet(all.size(), false));
    if (!found.empty()) return found;
  }
  throw StructuralError("no cover of Spec by basic opens");
}

std::vector<Element> minimal_cover(const Spectrum& s) { return minimal_covers(s).front(); }

std::map<std::size_t, std::size_t> order_profile(const AdditiveTable& g) {
  std::map<std::size_t, std::size_t> profile;
  for (Element x = 0; x < g.size(); ++x) {
    std::size_t k = 1;
    for (Element y = x; y != 0; y = g.add(y, x)) ++k;
    ++profile[k];
  }
  return profile;
}

GlobalSections global_sections(const BasisPresheaf& p, std::vector<Element> cover, std::uint64_t budget) {
  GlobalSections out;
  if (cover.empty()) cover = minimal_cover(p.spectrum());
  PointSet acc(p.spectrum().primes.size(), false);
  for (const Element c : cover) acc = unite(acc, p.spectrum().basic_open(c));
  if (acc != p.spectrum().everything()) throw PreconditionError("the given opens do not cover Spec");
  out.cover = cover;
  for (const Element c : cover)
    if (const auto& d = p.nodes()[p.node_of(c)].defect) out.defects.push_back(*d);
  out.families = compatible_families(p, cover, budget, out.defects);

  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < out.families.size(); ++i) index.emplace(out.families[i], i);
  const std::size_t f = out.families.size();
  std::vector<Element> sum(f * f);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) {
      std::vector<Element> t(cover.size());
      for (std::size_t k = 0; k < cover.size(); ++k)
        t[k] = p.section_additive(p.node_of(cover[k])).add(out.families[i][k], out.families[j][k]);
      const auto it = index.find(t);
      if (it == index.end()) throw ConstructionError("compatible families are not closed under addition");
      sum[i * f + j] = static_cast<Element>(it->second);
    }
  out.additive = AdditiveTable(f, std::move(sum));

  std::vector<std::vector<Element>> units;
  for (const Element c : cover) units.push_back(p.unit(p.node_of(c)));
  std::vector<bool> hit(f, false);
  bool injective = true, compatible = true;
  for (Element m = 0; m < p.module().size(); ++m) {
    std::vector<Element> t(cover.size());
    for (std::size_t k = 0; k < cover.size(); ++k) t[k] = units[k][m];
    const auto it = index.find(t);
    if (it == index.end()) {
      out.comparison.push_back(npos);
      compatible = false;
      if (!out.witness) out.witness = "η(" + std::to_string(m) + ") = " + show(t) + " is not a compatible family";
      continue;
    }
    out.comparison.push_back(it->second);
    if (hit[it->second]) {
      injective = false;
      if (!out.witness) out.witness = "η is not injective: " + std::to_string(m) + " ↦ " + show(t);
    }
    hit[it->second] = true;
  }
  const auto missing = std::find(hit.begin(), hit.end(), false);
  if (missing != hit.end() && !out.witness)
    out.witness = "family " + show(out.families[missing - hit.begin()]) + " is not the image of any element of M";
  out.isomorphic = compatible && injective && missing == hit.end() && out.defects.empty();
  return out;
}

GlueReport check_gluing(const BasisPresheaf& p, const std::vector<Element>& cover, std::uint64_t budget) {
  if (cover.empty()) throw PreconditionError("empty cover");
  const auto& sp = p.spectrum();
  GlueReport r;
  r.cover = cover;
  PointSet uni(sp.primes.size(), false);
  for (const Element c : cover) uni = unite(uni, sp.basic_open(c));

  // Restriction from the target to each cover element.
  std::vector<std::vector<Element>> down;
  std::size_t target_size = 0;
  std::optional<Element> target;
  for (Element c = 0; c < sp.carrier && !target; ++c)
    if (sp.basic_open(c) == uni) target = c;
  if (target) {
    r.target = std::to_string(*target);
    const std::size_t t = p.node_of(*target);
    target_size = p.section_size(t);
    for (const Element c : cover) {
      const auto& res = p.restriction(t, p.node_of(c));
      if (!res.ok()) {
        r.witness = "restriction from the target to D(" + std::to_string(c) + "): " + *res.defect;
        return r;
      }
      down.push_back(res.map);
    }
  } else if (uni == sp.everything()) {
    r.target = "M";
    target_size = p.module().size();
    for (const Element c : cover) down.push_back(p.unit(p.node_of(c)));
  } else {
    throw PreconditionError("the union of the cover is not a basic open");
  }

  std::vector<std::string> defects;
  const auto families = compatible_families(p, cover, budget, defects);
  if (!defects.empty()) {
    r.witness = defects.front();
    return r;
  }
  r.holds = true;
  for (const auto& fam : families) {
    ++r.families_checked;
    std::size_t glues = 0;
    for (Element x = 0; x < target_size; ++x) {
      bool ok = true;
      for (std::size_t k = 0; k < cover.size() && ok; ++k) ok = down[k][x] == fam[k];
      glues += ok;
    }
    if (glues != 1) {
      r.holds = false;
      r.witness = "family " + show(fam) + " has " + std::to_string(glues) + " glued sections";
      break;
    }
  }
  return r;
}

FaithfulnessVerdict check_full_faithfulness(std::shared_ptr<const Semiring> T, const GammaModule& m,
                                            const GammaModule& n, std::uint64_t budget) {
  FaithfulnessVerdict v;
  const BasisPresheaf pm(T, m), pn(T, n);
  v.hom_count = count_module_morphisms(m, n, HomKind::GammaLinear, budget);

  std::vector<std::size_t> live;
  std::vector<std::vector<std::vector<Element>>> homs;
  for (std::size_t i = 1; i < pm.nodes().size(); ++i) {
    const auto& a = pm.nodes()[i];
    const auto& b = pn.nodes()[i];
    if (a.defect || b.defect || !a.local || !b.local) {
      v.defects.push_back("node " + std::to_string(i) + " has a section defect");
      continue;
    }
    live.push_back(i);
    homs.push_back(module_morphisms(a.local->module, b.local->module, HomKind::GammaLinear, budget));
  }
  struct Link {
    std::size_t from, to;  // positions in `live`
    const std::vector<Element>* rm;
    const std::vector<Element>* rn;
  };
  std::vector<Link> links;
  for (std::size_t x = 0; x < live.size(); ++x)
    for (std::size_t y = 0; y < live.size(); ++y) {
      if (x == y) continue;
      const auto it = pm.restrictions().find({live[x], live[y]});
      if (it == pm.restrictions().end()) continue;
      const auto& rn = pn.restriction(live[x], live[y]);
      if (!it->second.ok() || !rn.ok()) {
        v.defects.push_back("restriction " + std::to_string(live[x]) + "→" + std::to_string(live[y]) + " is missing");
        continue;
      }
      links.push_back({x, y, &it->second.map, &rn.map});
    }
  auto natural = [&](const std::vector<const std::vector<Element>*>& phi, const Link& l) {
    const auto& f = *phi[l.from];
    const auto& g = *phi[l.to];
    for (Element s = 0; s < l.rm->size(); ++s)
      if ((*l.rn)[f[s]] != g[(*l.rm)[s]]) return false;
    return true;
  };

  std::vector<const std::vector<Element>*> chosen(live.size(), nullptr);
  std::uint64_t nodes_visited = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (++nodes_visited > budget) throw ResourceError("compatible-family search exceeded its budget");
    if (k == live.size()) {
      ++v.family_count;
      return;
    }
    for (const auto& h : homs[k]) {
      chosen[k] = &h;
      bool ok = true;
      for (const auto& l : links)
        if (std::max(l.from, l.to) == k && !natural(chosen, l)) {
          ok = false;
          break;
        }
      if (ok) rec(k + 1);
    }
    chosen[k] = nullptr;
  };
  rec(0);

  // f ↦ (id ⊗ f) on every section.
  std::set<std::vector<std::vector<Element>>> images;
  bool compatible = true;
  for (const auto& f : module_morphisms(m, n, HomKind::GammaLinear, budget)) {
    std::vector<std::vector<Element>> fam;
    for (const auto i : live) {
      const auto& a = *pm.nodes()[i].local;
      const auto& b = *pn.nodes()[i].local;
      fam.push_back(tensor_map(a.tensor, b.tensor, identity(a.scalars.module.size()), f));
    }
    std::vector<const std::vector<Element>*> ptrs;
    for (const auto& x : fam) ptrs.push_back(&x);
    for (const auto& l : links) compatible = compatible && natural(ptrs, l);
    for (std::size_t k = 0; k < live.size(); ++k)
      compatible = compatible && is_module_morphism(pm.nodes()[live[k]].local->module,
                                                    pn.nodes()[live[k]].local->module, fam[k]);
    images.insert(std::move(fam));
  }
  v.restriction_injective = compatible && images.size() == v.hom_count;
  return v;
}

}  // namespace gammalab
