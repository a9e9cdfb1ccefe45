#include "gammalab/module.hpp"

#include "gammalab/errors.hpp"

namespace gammalab {

GammaModule::GammaModule(std::shared_ptr<const Semiring> over, AdditiveTable add, std::vector<Element> action)
    : over_(std::move(over)), add_(std::move(add)), action_(std::move(action)) {
  if (!over_) throw InputError("module needs a base structure");
  const std::size_t n = over_->size();
  const std::size_t expected = n * n * size() * over_->mode_count();
  if (action_.size() != expected) {
    throw InputError("action table: expected " + std::to_string(expected) + " entries, got " +
                     std::to_string(action_.size()));
  }
  for (std::size_t i = 0; i < action_.size(); ++i)
    if (action_[i] >= size())
      throw InputError("action[" + std::to_string(i) + "] = " + std::to_string(action_[i]) + " out of range");
}

GammaModule regular_module(std::shared_ptr<const Semiring> over) {
  const auto& T = *over;
  const std::size_t n = T.size(), G = T.mode_count();
  std::vector<Element> action(n * n * n * G);
  for (Element t = 0; t < n; ++t)
    for (Element u = 0; u < n; ++u)
      for (Element m = 0; m < n; ++m)
        for (Mode g = 0; g < G; ++g) action[((t * n + u) * n + m) * G + g] = T.tern(t, u, m, g);
  AdditiveTable add = T.additive();
  return {std::move(over), std::move(add), std::move(action)};
}

GammaModule zero_action_module(std::shared_ptr<const Semiring> over, AdditiveTable add) {
  const std::size_t n = over->size();
  std::vector<Element> action(n * n * add.size() * over->mode_count(), 0);
  return {std::move(over), std::move(add), std::move(action)};
}

GammaModule zero_module(std::shared_ptr<const Semiring> over) {
  return zero_action_module(std::move(over), AdditiveTable{});
}

bool same_base(const GammaModule& m, const GammaModule& n) {
  return m.base_ptr() == n.base_ptr() || m.base() == n.base();
}

GammaModule direct_sum(const GammaModule& m, const GammaModule& n) {
  if (!same_base(m, n)) throw PreconditionError("direct sum of modules over different bases");
  const std::size_t s = m.base().size(), G = m.base().mode_count();
  const std::size_t size = m.size() * n.size();
  std::vector<Element> action(s * s * size * G);
  for (Element t = 0; t < s; ++t)
    for (Element u = 0; u < s; ++u)
      for (Element x = 0; x < size; ++x)
        for (Mode g = 0; g < G; ++g) {
          const Element a = m.act(t, u, static_cast<Element>(x / n.size()), g);
          const Element b = n.act(t, u, static_cast<Element>(x % n.size()), g);
          action[((t * s + u) * size + x) * G + g] = static_cast<Element>(a * n.size() + b);
        }
  return {m.base_ptr(), AdditiveTable::direct_sum(m.additive(), n.additive()), std::move(action)};
}

std::string_view module_clause_name(ModuleClause c) {
  switch (c) {
    case ModuleClause::AdditiveMonoid: return "additive_monoid";
    case ModuleClause::Distributivity: return "distributivity";
    case ModuleClause::Associativity: return "associativity_compatibility";
    case ModuleClause::ScalarZero: return "scalar_zero";
  }
  return "unknown";
}

ModuleAxiomReport check_module_axioms(const GammaModule& M) {
  ModuleAxiomReport r;
  const auto& T = M.base();
  const auto n = static_cast<Element>(T.size()), m = static_cast<Element>(M.size());
  const auto G = static_cast<Mode>(T.mode_count());
  auto fail = [&](ModuleClause c, ModuleWitness w) {
    const auto i = static_cast<std::size_t>(c);
    r.holds[i] = false;
    r.witness[i] = std::move(w);
  };

  if (const auto v = M.additive().first_monoid_violation()) {
    const std::string_view law = v->law == "commutativity" ? "add_commutative"
                                 : v->law == "associativity" ? "add_associative"
                                                             : "add_identity";
    fail(ModuleClause::AdditiveMonoid, {law, {}, v->elements, {}, v->lhs, v->rhs});
  }

  [&] {
    for (Element t = 0; t < n; ++t)
      for (Element t2 = 0; t2 < n; ++t2)
        for (Element u = 0; u < n; ++u)
          for (Element x = 0; x < m; ++x)
            for (Mode g = 0; g < G; ++g) {
              const Element l = M.act(T.add(t, t2), u, x, g), rr = M.add(M.act(t, u, x, g), M.act(t2, u, x, g));
              if (l != rr) return fail(ModuleClause::Distributivity, {"distribute_first", {t, t2, u}, {x}, {g}, l, rr});
            }
    for (Element t = 0; t < n; ++t)
      for (Element u = 0; u < n; ++u)
        for (Element u2 = 0; u2 < n; ++u2)
          for (Element x = 0; x < m; ++x)
            for (Mode g = 0; g < G; ++g) {
              const Element l = M.act(t, T.add(u, u2), x, g), rr = M.add(M.act(t, u, x, g), M.act(t, u2, x, g));
              if (l != rr) return fail(ModuleClause::Distributivity, {"distribute_second", {t, u, u2}, {x}, {g}, l, rr});
            }
    for (Element t = 0; t < n; ++t)
      for (Element u = 0; u < n; ++u)
        for (Element x = 0; x < m; ++x)
          for (Element y = 0; y < m; ++y)
            for (Mode g = 0; g < G; ++g) {
              const Element l = M.act(t, u, M.add(x, y), g), rr = M.add(M.act(t, u, x, g), M.act(t, u, y, g));
              if (l != rr) return fail(ModuleClause::Distributivity, {"distribute_module", {t, u}, {x, y}, {g}, l, rr});
            }
  }();

  [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          for (Element d = 0; d < n; ++d)
            for (Element x = 0; x < m; ++x)
              for (Mode g = 0; g < G; ++g)
                for (Mode h = 0; h < G; ++h) {
                  const Element l = M.act(a, b, M.act(c, d, x, g), h);
                  const Element rr = M.act(T.tern(a, b, c, g), d, x, h);
                  if (l != rr) return fail(ModuleClause::Associativity, {"associative", {a, b, c, d}, {x}, {g, h}, l, rr});
                }
  }();

  [&] {
    for (Element u = 0; u < n; ++u)
      for (Element x = 0; x < m; ++x)
        for (Mode g = 0; g < G; ++g)
          if (const Element v = M.act(0, u, x, g); v != 0)
            return fail(ModuleClause::ScalarZero, {"zero_first", {0, u}, {x}, {g}, v, 0});
    for (Element t = 0; t < n; ++t)
      for (Element x = 0; x < m; ++x)
        for (Mode g = 0; g < G; ++g)
          if (const Element v = M.act(t, 0, x, g); v != 0)
            return fail(ModuleClause::ScalarZero, {"zero_second", {t, 0}, {x}, {g}, v, 0});
  }();
  return r;
}

std::vector<IntertwinedOperator> action_operators(const GammaModule& src, const GammaModule& dst) {
  if (!same_base(src, dst)) throw PreconditionError("modules over different bases");
  const auto& T = src.base();
  std::vector<IntertwinedOperator> ops;
  for (Element t = 0; t < T.size(); ++t)
    for (Element u = 0; u < T.size(); ++u)
      for (Mode g = 0; g < T.mode_count(); ++g) {
        IntertwinedOperator op;
        op.source.resize(src.size());
        op.target.resize(dst.size());
        for (Element x = 0; x < src.size(); ++x) op.source[x] = src.act(t, u, x, g);
        for (Element y = 0; y < dst.size(); ++y) op.target[y] = dst.act(t, u, y, g);
        ops.push_back(std::move(op));
      }
  return ops;
}

bool is_module_morphism(const GammaModule& src, const GammaModule& dst, std::span<const Element> map,
                        HomKind kind) {
  if (!is_additive_map(src.additive(), dst.additive(), map)) return false;
  if (kind == HomKind::Additive) return true;
  for (const auto& op : action_operators(src, dst))
    for (Element x = 0; x < src.size(); ++x)
      if (map[op.source[x]] != op.target[map[x]]) return false;
  return true;
}

std::vector<std::vector<Element>> module_morphisms(const GammaModule& src, const GammaModule& dst, HomKind kind,
                                                   std::uint64_t budget) {
  const auto ops = kind == HomKind::GammaLinear ? action_operators(src, dst) : std::vector<IntertwinedOperator>{};
  return additive_maps(src.additive(), dst.additive(), ops, budget);
}

std::uint64_t count_module_morphisms(const GammaModule& src, const GammaModule& dst, HomKind kind,
                                     std::uint64_t budget) {
  const auto ops = kind == HomKind::GammaLinear ? action_operators(src, dst) : std::vector<IntertwinedOperator>{};
  return for_each_additive_map(src.additive(), dst.additive(), ops, budget,
                               [](std::span<const Element>) { return true; });
}

}  // namespace gammalab
