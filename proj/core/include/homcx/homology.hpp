#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homcx/hom_poset.hpp"

namespace homcx {

using Simplex = std::vector<std::uint32_t>;

/// Chains of a finite poset. simplices[d] holds the d-simplices, each an
/// ascending index sequence, in lexicographic order.
struct OrderComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<Simplex>> simplices;

  std::size_t dimension() const noexcept { return simplices.empty() ? 0 : simplices.size() - 1; }
  std::int64_t euler_characteristic() const;
};

/// Order complex from strict up-sets over a linear extension (every j in
/// above[i] satisfies j > i). Throws ExplosionGuard past `cap` simplices.
OrderComplex order_complex(const std::vector<std::vector<std::uint32_t>>& above,
                           std::size_t cap = default_cap() * 50);
OrderComplex order_complex(const HomPoset& p, std::size_t cap = default_cap() * 50);

/// Sparse integer matrix stored by rows as (column, value) pairs sorted by
/// column.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> data;
};

/// Boundary ∂_d: C_d -> C_{d-1}, stored transposed (one row per d-simplex) so
/// that each row has d+1 entries. Requires 1 <= d <= dimension.
SparseMatrix boundary_transposed(const OrderComplex& k, std::size_t d);

/// Exact rank over the integers (equivalently the rationals) by
/// fraction-free elimination with gcd normalisation. 64-bit arithmetic with
/// overflow detection, falling back to arbitrary precision.
std::size_t exact_rank(const SparseMatrix& m);

/// b_0..b_max_dim. Dimensions beyond the complex give zero.
std::vector<std::int64_t> betti_numbers(const OrderComplex& k, std::size_t max_dim);

/// Whether ∂_{d-1} ∘ ∂_d vanishes, for 2 <= d <= dimension.
bool boundary_squared_is_zero(const OrderComplex& k, std::size_t d);

/// Nonzero invariant factors of a dense integer matrix (Smith normal form),
/// as decimal strings since they may exceed 64 bits.
std::vector<std::string> elementary_divisors(const std::vector<std::vector<std::int64_t>>& m);

}  // namespace homcx
