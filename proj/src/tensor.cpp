#include "gammalab/tensor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

using Residues = std::vector<std::uint64_t>;

Residues radices(const PresentedGroup& g) {
  Residues r;
  for (const auto& d : g.factors) r.push_back(static_cast<std::uint64_t>(d));
  return r;
}

Element encode(const Residues& radix, const Residues& y) {
  std::uint64_t x = 0;
  for (std::size_t i = radix.size(); i-- > 0;) x = x * radix[i] + y[i];
  return static_cast<Element>(x);
}

Residues decode(const Residues& radix, Element x) {
  Residues y(radix.size());
  std::uint64_t v = x;
  for (std::size_t i = 0; i < radix.size(); ++i) {
    y[i] = v % radix[i];
    v /= radix[i];
  }
  return y;
}

std::uint64_t reduce(const BigInt& v, std::uint64_t d) {
  BigInt r = v % d;
  if (r < 0) r += d;
  return static_cast<std::uint64_t>(r);
}

// Z-linear arithmetic on elements of a presented group.
class Arith {
 public:
  explicit Arith(const PresentedGroup& g) : radix_(radices(g)) {}

  Element add(Element a, Element b) const {
    auto x = decode(radix_, a);
    const auto y = decode(radix_, b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % radix_[i];
    return encode(radix_, x);
  }
  Element scale(const BigInt& k, Element a) const {
    auto x = decode(radix_, a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = reduce(k * x[i], radix_[i]);
    return encode(radix_, x);
  }
  // Σ coeff_j · images[j]
  Element combine(std::span<const BigInt> coeff, std::span<const Element> images) const {
    Residues acc(radix_.size(), 0);
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      if (coeff[j] == 0 || images[j] == 0) continue;
      const auto y = decode(radix_, images[j]);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + reduce(coeff[j] * y[i], radix_[i])) % radix_[i];
    }
    return encode(radix_, acc);
  }
  const Residues& radix() const { return radix_; }

 private:
  Residues radix_;
};

// Extends generator images linearly to every element, after checking that
// each relation maps to zero.
std::vector<Element> linear_extension(const PresentedGroup& src, const IntMatrix& relations,
                                      const Arith& dst, std::span<const Element> images, const char* what) {
  for (std::size_t r = 0; r < relations.size(); ++r)
    if (dst.combine(relations[r], images) != 0)
      throw ConstructionError(std::string(what) + " is not well defined: relation row " + std::to_string(r) +
                              " does not vanish");
  const Arith arith(src);
  std::vector<Element> basis;
  for (const auto& lift : src.basis_lift) basis.push_back(dst.combine(lift, images));
  std::vector<Element> out(src.additive.size());
  for (Element x = 0; x < out.size(); ++x) {
    const auto y = decode(arith.radix(), x);
    Element acc = 0;
    for (std::size_t k = 0; k < y.size(); ++k)
      if (y[k] != 0) acc = dst.add(acc, dst.scale(y[k], basis[k]));
    out[x] = acc;
  }
  return out;
}

GammaModule tensor_action(const PresentedGroup& g, const AbelianPresentation& p, const GammaModule& first,
                          std::size_t right_size) {
  const auto& B = first.base();
  const std::size_t s = B.size(), G = B.mode_count(), size = g.additive.size();
  const Arith arith(g);
  std::vector<Element> action(s * s * size * G);
  std::vector<Element> images(first.size() * right_size);
  for (Element t = 0; t < s; ++t)
    for (Element u = 0; u < s; ++u)
      for (Mode k = 0; k < G; ++k) {
        for (Element m = 0; m < first.size(); ++m)
          for (Element n = 0; n < right_size; ++n)
            images[m * right_size + n] = g.generator_class[first.act(t, u, m, k) * right_size + n];
        const auto ext = linear_extension(g, p.relations, arith, images, "induced action");
        for (Element x = 0; x < size; ++x) action[((t * s + u) * size + x) * G + k] = ext[x];
      }
  return {first.base_ptr(), g.additive, std::move(action)};
}

}  // namespace

PresentedGroup present(const AbelianPresentation& p) {
  const std::size_t cols = p.generators.size();
  const auto f = smith_normal_form(p.relations, cols);
  PresentedGroup g;
  g.relation_count = p.relations.size();
  std::vector<std::size_t> idx;
  BigInt order = 1;
  for (std::size_t i = 0; i < cols; ++i) {
    if (i >= f.diagonal.size() || f.diagonal[i] == 0)
      throw ResourceError("presented group has a free summand and is infinite");
    if (f.diagonal[i] == 1) continue;
    idx.push_back(i);
    g.factors.push_back(f.diagonal[i]);
    order *= f.diagonal[i];
    if (order > kMaxPresentedOrder)
      throw ResourceError("presented group order exceeds " + std::to_string(kMaxPresentedOrder));
  }
  const auto radix = radices(g);
  const auto n = static_cast<std::size_t>(order);
  std::vector<Element> sum(n * n);
  for (Element a = 0; a < n; ++a) {
    const auto x = decode(radix, a);
    for (Element b = 0; b < n; ++b) {
      auto y = decode(radix, b);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + x[i]) % radix[i];
      sum[a * n + b] = encode(radix, y);
    }
  }
  g.additive = AdditiveTable(n, std::move(sum));
  g.generator_class.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Residues y(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) y[k] = reduce(f.right[j][idx[k]], radix[k]);
    g.generator_class[j] = encode(radix, y);
  }
  for (const auto i : idx) g.basis_lift.push_back(f.right_inverse[i]);
  return g;
}

std::vector<BigInt> coordinates(const PresentedGroup& g, Element x) {
  std::vector<BigInt> out;
  for (const auto y : decode(radices(g), x)) out.emplace_back(y);
  return out;
}

AbelianPresentation tensor_presentation(const GammaModule& M, const GammaModule& N) {
  if (!same_base(M, N)) throw PreconditionError("tensor of modules over different bases");
  const std::size_t a = M.size(), b = N.size(), cols = a * b;
  std::set<std::vector<std::int64_t>> rows;
  auto e = [b](Element m, Element n) { return m * b + n; };
  auto push = [&](std::vector<std::int64_t> row) {
    const auto first = std::find_if(row.begin(), row.end(), [](std::int64_t v) { return v != 0; });
    if (first == row.end()) return;
    if (*first < 0)
      for (auto& v : row) v = -v;
    rows.insert(std::move(row));
  };
  for (Element m1 = 0; m1 < a; ++m1)
    for (Element m2 = m1; m2 < a; ++m2)
      for (Element n = 0; n < b; ++n) {
        std::vector<std::int64_t> row(cols, 0);
        row[e(M.add(m1, m2), n)] += 1;
        row[e(m1, n)] -= 1;
        row[e(m2, n)] -= 1;
        push(std::move(row));
      }
  for (Element m = 0; m < a; ++m)
    for (Element n1 = 0; n1 < b; ++n1)
      for (Element n2 = n1; n2 < b; ++n2) {
        std::vector<std::int64_t> row(cols, 0);
        row[e(m, N.add(n1, n2))] += 1;
        row[e(m, n1)] -= 1;
        row[e(m, n2)] -= 1;
        push(std::move(row));
      }
  const auto& T = M.base();
  for (Element t = 0; t < T.size(); ++t)
    for (Element u = 0; u < T.size(); ++u)
      for (Mode g = 0; g < T.mode_count(); ++g)
        for (Element m = 0; m < a; ++m)
          for (Element n = 0; n < b; ++n) {
            std::vector<std::int64_t> row(cols, 0);
            row[e(M.act(t, u, m, g), n)] += 1;
            row[e(m, N.act(t, u, n, g))] -= 1;
            push(std::move(row));
          }
  for (Element n = 0; n < b; ++n) {
    std::vector<std::int64_t> row(cols, 0);
    row[e(0, n)] = 1;
    push(std::move(row));
  }
  for (Element m = 0; m < a; ++m) {
    std::vector<std::int64_t> row(cols, 0);
    row[e(m, 0)] = 1;
    push(std::move(row));
  }

  AbelianPresentation p;
  for (Element m = 0; m < a; ++m)
    for (Element n = 0; n < b; ++n) p.generators.push_back(std::to_string(m) + "⊗" + std::to_string(n));
  for (const auto& row : rows) p.relations.emplace_back(row.begin(), row.end());
  return p;
}

TensorProduct tensor(const GammaModule& M, const GammaModule& N) {
  if (!M.is_group() || !N.is_group()) throw PreconditionError("tensor requires modules whose additive monoids are groups");
  auto p = tensor_presentation(M, N);
  auto g = present(p);
  auto module = tensor_action(g, p, M, N.size());
  return {std::move(module), M.size(), N.size(), M.additive(), std::move(g), std::move(p)};
}

GammaModule transport(const TensorProduct& t, const GammaModule& first) {
  if (first.additive() != t.left_additive) throw PreconditionError("transported action must live on the first factor");
  return tensor_action(t.group, t.presentation, first, t.right_size);
}

std::vector<Element> tensor_map(const TensorProduct& from, const TensorProduct& to, std::span<const Element> f,
                                std::span<const Element> g) {
  if (f.size() != from.left_size || g.size() != from.right_size)
    throw PreconditionError("tensor_map: component maps do not match the source factors");
  std::vector<Element> images(from.left_size * from.right_size);
  for (Element m = 0; m < from.left_size; ++m)
    for (Element n = 0; n < from.right_size; ++n) {
      if (f[m] >= to.left_size || g[n] >= to.right_size)
        throw PreconditionError("tensor_map: component image out of range");
      images[m * from.right_size + n] = to.pure(f[m], g[n]);
    }
  return linear_extension(from.group, from.presentation.relations, Arith(to.group), images, "tensor map");
}

bool is_balanced_map(const GammaModule& M, const GammaModule& N, const GammaModule& P, std::span<const Element> beta,
                     HomKind kind) {
  const std::size_t b = N.size();
  if (beta.size() != M.size() * b) return false;
  auto at = [&](Element m, Element n) { return beta[m * b + n]; };
  for (Element m1 = 0; m1 < M.size(); ++m1)
    for (Element m2 = 0; m2 < M.size(); ++m2)
      for (Element n = 0; n < b; ++n)
        if (at(M.add(m1, m2), n) != P.add(at(m1, n), at(m2, n))) return false;
  for (Element m = 0; m < M.size(); ++m)
    for (Element n1 = 0; n1 < b; ++n1)
      for (Element n2 = 0; n2 < b; ++n2)
        if (at(m, N.add(n1, n2)) != P.add(at(m, n1), at(m, n2))) return false;
  const auto& T = M.base();
  for (Element t = 0; t < T.size(); ++t)
    for (Element u = 0; u < T.size(); ++u)
      for (Mode g = 0; g < T.mode_count(); ++g)
        for (Element m = 0; m < M.size(); ++m)
          for (Element n = 0; n < b; ++n) {
            if (at(M.act(t, u, m, g), n) != at(m, N.act(t, u, n, g))) return false;
            if (kind == HomKind::GammaLinear && at(M.act(t, u, m, g), n) != P.act(t, u, at(m, n), g)) return false;
          }
  for (Element m = 0; m < M.size(); ++m)
    if (at(m, 0) != 0) return false;
  for (Element n = 0; n < b; ++n)
    if (at(0, n) != 0) return false;
  return true;
}

std::vector<std::vector<Element>> enumerate_balanced_maps(const GammaModule& M, const GammaModule& N,
                                                          const GammaModule& P, HomKind kind, std::size_t max_pairs,
                                                          std::uint64_t budget) {
  if (!same_base(M, N) || !same_base(M, P)) throw PreconditionError("balanced maps need a common base");
  if (M.size() * N.size() > max_pairs)
    throw ResourceError("balanced-map search over " + std::to_string(M.size() * N.size()) + " pairs exceeds " +
                        std::to_string(max_pairs));

  // Additive maps N → P form a group H under pointwise addition; a balanced
  // map is an additive M → H intertwining the action operators.
  auto hs = additive_maps(N.additive(), P.additive(), {}, budget);
  const std::vector<Element> zero(N.size(), 0);
  std::stable_partition(hs.begin(), hs.end(), [&](const auto& h) { return h == zero; });
  std::map<std::vector<Element>, Element> index;
  for (Element i = 0; i < hs.size(); ++i) index.emplace(hs[i], i);
  auto lookup = [&](const std::vector<Element>& h) {
    const auto it = index.find(h);
    if (it == index.end()) throw ConstructionError("pointwise operation left the additive maps N → P");
    return it->second;
  };
  const std::size_t k = hs.size();
  std::vector<Element> sum(k * k);
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j) {
      std::vector<Element> h(N.size());
      for (Element n = 0; n < N.size(); ++n) h[n] = P.add(hs[i][n], hs[j][n]);
      sum[i * k + j] = lookup(h);
    }
  const AdditiveTable H(k, std::move(sum));

  std::vector<IntertwinedOperator> ops;
  const auto& T = M.base();
  for (Element t = 0; t < T.size(); ++t)
    for (Element u = 0; u < T.size(); ++u)
      for (Mode g = 0; g < T.mode_count(); ++g) {
        IntertwinedOperator balance, linear;
        for (Element m = 0; m < M.size(); ++m) balance.source.push_back(M.act(t, u, m, g));
        linear.source = balance.source;
        for (const auto& h : hs) {
          std::vector<Element> pre(N.size()), post(N.size());
          for (Element n = 0; n < N.size(); ++n) {
            pre[n] = h[N.act(t, u, n, g)];
            post[n] = P.act(t, u, h[n], g);
          }
          balance.target.push_back(lookup(pre));
          if (kind == HomKind::GammaLinear) linear.target.push_back(lookup(post));
        }
        ops.push_back(std::move(balance));
        if (kind == HomKind::GammaLinear) ops.push_back(std::move(linear));
      }

  std::vector<std::vector<Element>> out;
  for_each_additive_map(M.additive(), H, ops, budget, [&](std::span<const Element> phi) {
    std::vector<Element> beta(M.size() * N.size());
    for (Element m = 0; m < M.size(); ++m)
      for (Element n = 0; n < N.size(); ++n) beta[m * N.size() + n] = hs[phi[m]][n];
    out.push_back(std::move(beta));
    return true;
  });
  return out;
}

TensorUniversalVerdict check_tensor_universal(const GammaModule& M, const GammaModule& N, const GammaModule& P,
                                              HomKind kind, std::size_t max_pairs, std::uint64_t budget) {
  const auto t = tensor(M, N);
  const auto balanced = enumerate_balanced_maps(M, N, P, kind, max_pairs, budget);
  const auto homs = module_morphisms(t.module, P, kind, budget);

  TensorUniversalVerdict v;
  v.hom_count = homs.size();
  v.balanced_count = balanced.size();
  std::set<std::vector<Element>> composites;
  for (const auto& phi : homs) {
    std::vector<Element> beta(M.size() * N.size());
    for (Element m = 0; m < M.size(); ++m)
      for (Element n = 0; n < N.size(); ++n) beta[m * N.size() + n] = phi[t.pure(m, n)];
    if (!is_balanced_map(M, N, P, beta, kind))
      throw StructuralError("composite of a tensor morphism with ⊗ is not balanced");
    composites.insert(std::move(beta));
  }
  v.injective = composites.size() == homs.size();
  v.surjective = std::all_of(balanced.begin(), balanced.end(), [&](const auto& b) { return composites.count(b) > 0; });
  if (!v.holds()) {
    std::string witness = "none";
    for (const auto& b : balanced)
      if (!composites.count(b)) {
        witness.clear();
        for (const auto x : b) witness += std::to_string(x) + " ";
        break;
      }
    throw StructuralError("Hom(M⊗N,P) and balanced maps differ: " + std::to_string(v.hom_count) + " vs " +
                          std::to_string(v.balanced_count) + "; unmatched balanced map: " + witness);
  }
  return v;
}

}  // namespace gammalab
