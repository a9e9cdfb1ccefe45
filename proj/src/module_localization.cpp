#include "gammalab/module_localization.hpp"

#include <string>

#include "gammalab/errors.hpp"

namespace gammalab {

GammaModule numerator_module(std::shared_ptr<const Semiring> T, const LocalizedSemiring& L) {
  const auto& Q = L.structure();
  if (Q.mode_count() != T->mode_count()) throw PreconditionError("localization has a different mode set");
  const std::size_t n = T->size(), G = T->mode_count(), c = L.class_count();
  const auto dens = L.system().elements();
  std::vector<Element> action(n * n * c * G);
  for (Element t = 0; t < n; ++t)
    for (Element u = 0; u < n; ++u)
      for (Mode g = 0; g < G; ++g) {
        for (Element k = 0; k < c; ++k) {
          const auto& r = L.representatives()[k];
          action[((t * n + u) * c + k) * G + g] = L.class_of(T->tern(t, u, r.num, g), r.den);
        }
        for (Element a = 0; a < n; ++a)
          for (const Element s : dens) {
            const Element k = L.class_of(a, s);
            if (L.class_of(T->tern(t, u, a, g), s) != action[((t * n + u) * c + k) * G + g])
              throw ConstructionError("numerator action depends on the representative of " + std::to_string(a) +
                                      "/" + std::to_string(s));
          }
      }
  return {std::move(T), Q.additive(), std::move(action)};
}

std::optional<Element> identity_like_element(const Semiring& T, const MultiplicativeSystem& S) {
  for (const Element s : S.elements())
    for (Mode g = 0; g < T.mode_count(); ++g) {
      bool ok = true;
      for (Element x = 0; x < T.size() && ok; ++x) ok = T.tern(s, s, x, g) == x;
      if (ok) return s;
    }
  return std::nullopt;
}

LocalizedModule localize_module(std::shared_ptr<const Semiring> T, const LocalizedSemiring& L, const GammaModule& M) {
  if (!M.is_group()) throw PreconditionError("module localization needs an additive group; complete it first");
  if (!(M.base() == *T)) throw PreconditionError("module is over a different structure");

  auto scalars = group_completion(numerator_module(T, L));
  const auto over_l = group_completion(regular_module(L.structure_ptr()));
  if (over_l.module.additive() != scalars.module.additive())
    throw ConstructionError("completions of S⁻¹T over T and over itself disagree");

  auto t = tensor(scalars.module, M);
  auto module = transport(t, over_l.module);

  const auto s0 = identity_like_element(*T, L.system());
  LocalizedModule out{std::move(module), std::move(t), std::move(scalars), 0, s0.has_value(), {}};
  out.s0 = s0 ? *s0 : L.system().elements().front();
  const Element one = out.scalars.unit[L.class_of(out.s0, out.s0)];
  out.unit.resize(M.size());
  for (Element m = 0; m < M.size(); ++m) out.unit[m] = out.tensor.pure(one, m);
  return out;
}

}  // namespace gammalab
