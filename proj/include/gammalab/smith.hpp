#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace gammalab {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// d_1 | d_2 | ... ; length min(rows, cols), zeros after the rank.
  std::vector<BigInt> diagonal;
  IntMatrix left;           // rows × rows, only when requested
  IntMatrix right;          // cols × cols
  IntMatrix right_inverse;  // cols × cols
};

/// L·A·R = D with L, R unimodular. Row operations are tracked only when
/// `track_left` is set; the column transforms are always kept.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols, bool track_left = false);
inline SmithForm smith_normal_form(const IntMatrix& a) {
  return smith_normal_form(a, a.empty() ? 0 : a[0].size());
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
IntMatrix identity_matrix(std::size_t n);

/// Checks L·A·R = D, divisibility along the diagonal, and R·R⁻¹ = I.
bool verify_smith(const IntMatrix& a, const SmithForm& f);

/// Diagonal entries other than 1, as the presented group Z^cols / rows(A) is
/// ⊕ Z/d. Zeros (free summands) are included, one per missing rank.
std::vector<BigInt> presented_group_factors(const IntMatrix& a, std::size_t cols);

}  // namespace gammalab
