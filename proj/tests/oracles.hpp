#pragma once

// Independent reference computations. These use closed-form arithmetic and
// naive matrices instead of the library's tables, so a bug in the library
// cannot silently agree with itself.

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

// {a,b,c}_γ = abcγ mod n
inline u64 product_family(u64 n, u64 a, u64 b, u64 c, u64 g) { return a * b % n * c % n * (g % n) % n; }

// {a,b,c}_γ = abc + cγ mod n
inline u64 shifted_family(u64 n, u64 a, u64 b, u64 c, u64 g) { return (a * b * c + c * g) % n; }

// ab + bc + ca + γ over the naturals
inline u64 pairwise_family(u64 a, u64 b, u64 c, u64 g) { return a * b + b * c + c * a + g; }

using Tern = std::function<u64(u64, u64, u64, u64)>;

inline std::vector<u64> closure(u64 n, const std::vector<u64>& gammas, const Tern& t,
                                std::vector<u64> seed) {
  std::set<u64> s(seed.begin(), seed.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<u64> cur(s.begin(), s.end());
    for (u64 g : gammas)
      for (u64 a : cur)
        for (u64 b : cur)
          for (u64 c : cur) grew |= s.insert(t(a, b, c, g) % n).second;
  }
  return {s.begin(), s.end()};
}

struct LocalizationCount {
  std::size_t classes = 0;
  bool raw_is_closed = true;  // raw relation already equals the congruence
};

// Brute-force congruence on T×S for Z_n with the given ternary formula:
// boolean equivalence matrix, transitive closure by Warshall, then one-slot
// compatibility for (a+b)/s and ternary products, repeated until stable.
inline LocalizationCount localize_count(u64 n, const std::vector<u64>& gammas, const Tern& t,
                                        const std::vector<u64>& S) {
  const std::size_t k = S.size(), P = n * k;
  auto num = [&](std::size_t p) { return p / k; };
  auto den = [&](std::size_t p) { return S[p % k]; };
  auto idx = [&](u64 a, u64 s) {
    for (std::size_t j = 0; j < k; ++j)
      if (S[j] == s) return static_cast<std::size_t>(a * k + j);
    return P;  // not closed
  };
  std::vector<std::vector<bool>> raw(P, std::vector<bool>(P, false));
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t q = 0; q < P; ++q) {
      bool rel = false;
      for (u64 u : S)
        for (u64 g : gammas)
          for (u64 d : gammas)
            for (u64 e : gammas) {
              const u64 tc = t(den(q), den(q), den(q), g) % n;
              const u64 sc = t(den(p), den(p), den(p), e) % n;
              rel |= t(u, num(p), tc, d) % n == t(u, num(q), sc, d) % n;
            }
      raw[p][q] = rel;
    }
  auto E = raw;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t m = 0; m < P; ++m)
      for (std::size_t p = 0; p < P; ++p)
        if (E[p][m])
          for (std::size_t q = 0; q < P; ++q)
            if (E[m][q] && !E[p][q]) E[p][q] = changed = true;
    for (std::size_t p = 0; p < P; ++p)
      for (std::size_t p2 = 0; p2 < P; ++p2) {
        if (!E[p][p2]) continue;
        for (std::size_t q = 0; q < P; ++q) {
          if (den(p) == den(q) && den(p2) == den(q)) {
            const auto x = idx((num(p) + num(q)) % n, den(p)), y = idx((num(p2) + num(q)) % n, den(q));
            if (!E[x][y]) E[x][y] = E[y][x] = changed = true;
          }
          for (std::size_t r = 0; r < P; ++r)
            for (u64 g : gammas) {
              const auto x = idx(t(num(p), num(q), num(r), g) % n, t(den(p), den(q), den(r), g) % n);
              const auto y = idx(t(num(p2), num(q), num(r), g) % n, t(den(p2), den(q), den(r), g) % n);
              if (!E[x][y]) E[x][y] = E[y][x] = changed = true;
            }
        }
      }
  }
  LocalizationCount out;
  std::vector<bool> seen(P, false);
  for (std::size_t p = 0; p < P; ++p) {
    if (seen[p]) continue;
    ++out.classes;
    for (std::size_t q = 0; q < P; ++q)
      if (E[p][q]) {
        seen[q] = true;
        if (!raw[p][q]) out.raw_is_closed = false;
      }
  }
  return out;
}

// Invariant factors of a small integer matrix by the determinantal-divisor
// formula d_k = gcd of k×k minors; returns d_k / d_{k-1}.
inline std::vector<long long> invariant_factors(const std::vector<std::vector<long long>>& A) {
  const std::size_t r = A.size(), c = r ? A[0].size() : 0;
  auto det = [](std::vector<std::vector<long long>> m) {
    // Bareiss fraction-free elimination
    const std::size_t n = m.size();
    long long sign = 1, prev = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t piv = i;
      while (piv < n && m[piv][i] == 0) ++piv;
      if (piv == n) return 0LL;
      if (piv != i) {
        std::swap(m[piv], m[i]);
        sign = -sign;
      }
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = i + 1; k < n; ++k) m[j][k] = (m[j][k] * m[i][i] - m[j][i] * m[i][k]) / prev;
      prev = m[i][i];
    }
    return sign * m[n - 1][n - 1];
  };
  std::vector<long long> d{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    long long g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> pick_rows, pick_cols;
    pick_cols = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = A[rows[i]][cols[j]];
        g = std::gcd(g, det(m));
        return;
      }
      for (std::size_t j = start; j < c; ++j) {
        cols[depth] = j;
        pick_cols(j + 1, depth + 1);
      }
    };
    pick_rows = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t i = start; i < r; ++i) {
        rows[depth] = i;
        pick_rows(i + 1, depth + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<long long> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

// Homology order |ker d_n| / |im d_{n+1}| for maps between cyclic groups Z_m
// given by multiplication constants; brute force.
inline std::size_t cyclic_homology_order(u64 m_prev, u64 m, u64 m_next, u64 d_out, u64 d_in) {
  std::size_t ker = 0;
  for (u64 x = 0; x < m; ++x)
    if (m_prev == 0 || x * d_out % m_prev == 0) ++ker;
  std::set<u64> im;
  for (u64 y = 0; y < m_next; ++y) im.insert(y * d_in % m);
  if (m_next == 0) im = {0};
  return ker / im.size();
}

}  // namespace oracle
