#include "gammalab/completion.hpp"

#include <string>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

// x ≈ y iff x + k = y + k for some k.
std::vector<bool> cancellation_relation(const AdditiveTable& add) {
  const std::size_t n = add.size();
  std::vector<bool> rel(n * n, false);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element k = 0; k < n && !rel[x * n + y]; ++k)
        if (add.add(x, k) == add.add(y, k)) rel[x * n + y] = true;
  return rel;
}

}  // namespace

GroupCompletion group_completion(const GammaModule& M, std::uint64_t budget) {
  const auto& add = M.additive();
  const std::size_t n = M.size();
  const auto approx = cancellation_relation(add);

  // Classes are numbered by their first pair with the second coordinate
  // varying slowest, so (0,0) is class 0 and unit(m) follows M's order.
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> cls(n * n, kUnset);
  std::vector<std::pair<Element, Element>> reps;
  for (Element k = 0; k < n; ++k)
    for (Element m = 0; m < n; ++m) {
      if (cls[m * n + k] != kUnset) continue;
      const auto id = static_cast<Element>(reps.size());
      reps.emplace_back(m, k);
      for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q)
          if (cls[p * n + q] == kUnset && approx[add.add(m, q) * n + add.add(p, k)]) cls[p * n + q] = id;
    }

  const std::size_t c = reps.size();
  std::vector<Element> sum(c * c);
  for (Element i = 0; i < c; ++i)
    for (Element j = 0; j < c; ++j) {
      const auto [a, b] = reps[i];
      const auto [p, q] = reps[j];
      sum[i * c + j] = cls[add.add(a, p) * n + add.add(b, q)];
    }
  AdditiveTable group(c, std::move(sum));

  const auto& T = M.base();
  const std::size_t s = T.size(), G = T.mode_count();
  std::vector<Element> action(s * s * c * G);
  for (Element t = 0; t < s; ++t)
    for (Element u = 0; u < s; ++u)
      for (Mode g = 0; g < G; ++g) {
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y) {
            const Element image = cls[M.act(t, u, x, g) * n + M.act(t, u, y, g)];
            const Element id = cls[x * n + y];
            const auto [rx, ry] = reps[id];
            const Element expected = cls[M.act(t, u, rx, g) * n + M.act(t, u, ry, g)];
            if (image != expected) {
              throw ConstructionError("action does not descend to the completion: pairs (" + std::to_string(x) +
                                      "," + std::to_string(y) + ") and (" + std::to_string(rx) + "," +
                                      std::to_string(ry) + ") at t=" + std::to_string(t) +
                                      ", u=" + std::to_string(u) + ", mode " + std::to_string(g));
            }
            action[((t * s + u) * c + id) * G + g] = image;
          }
      }

  GroupCompletion out{GammaModule(M.base_ptr(), std::move(group), std::move(action)), {}, std::move(cls),
                      std::move(reps), true, std::nullopt};
  out.unit.resize(n);
  for (Element m = 0; m < n; ++m) out.unit[m] = out.class_of_pair[m * n];

  const auto& C = out.module;
  for (Element t = 0; t < s && out.action_restricts; ++t)
    for (Element u = 0; u < s && out.action_restricts; ++u)
      for (Mode g = 0; g < G && out.action_restricts; ++g)
        for (Element m = 0; m < n; ++m)
          if (C.act(t, u, out.unit[m], g) != out.unit[M.act(t, u, m, g)]) {
            out.action_restricts = false;
            break;
          }

  // Every additive endomorphism of the completion that agrees with the
  // action on the unit image is a candidate extension.
  try {
    const auto endos = additive_maps(C.additive(), C.additive(), {}, budget);
    std::uint64_t worst = 0;
    for (Element t = 0; t < s; ++t)
      for (Element u = 0; u < s; ++u)
        for (Mode g = 0; g < G; ++g) {
          std::uint64_t count = 0;
          for (const auto& e : endos) {
            bool ok = true;
            for (Element m = 0; m < n && ok; ++m) ok = e[out.unit[m]] == out.unit[M.act(t, u, m, g)];
            if (ok) ++count;
          }
          worst = std::max(worst, count);
        }
    out.max_compatible_extensions = worst;
  } catch (const ResourceError&) {
  }
  return out;
}

std::vector<std::uint64_t> factorization_counts(const GammaModule& M, const GroupCompletion& c,
                                                const AdditiveTable& group, std::uint64_t budget) {
  if (!group.is_group()) throw PreconditionError("target of a factorization check must be a group");
  const auto from_m = additive_maps(M.additive(), group, {}, budget);
  const auto from_gp = additive_maps(c.module.additive(), group, {}, budget);
  std::vector<std::uint64_t> counts;
  counts.reserve(from_m.size());
  for (const auto& f : from_m) {
    std::uint64_t k = 0;
    for (const auto& g : from_gp) {
      bool ok = true;
      for (Element m = 0; m < M.size() && ok; ++m) ok = g[c.unit[m]] == f[m];
      if (ok) ++k;
    }
    counts.push_back(k);
  }
  return counts;
}

}  // namespace gammalab
