#include "homcx/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "homcx/error.hpp"

namespace homcx {

using boost::multiprecision::cpp_int;

std::int64_t OrderComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < simplices.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * std::int64_t(simplices[d].size());
  }
  return chi;
}

OrderComplex order_complex(const std::vector<std::vector<std::uint32_t>>& above, std::size_t cap) {
  OrderComplex k;
  k.vertex_count = above.size();
  std::size_t total = 0;
  Simplex chain;
  // DFS extending chains upward; recursion depth is bounded by the height.
  auto extend = [&](auto&& self) -> void {
    const std::size_t d = chain.size() - 1;
    if (k.simplices.size() <= d) k.simplices.resize(d + 1);
    k.simplices[d].push_back(chain);
    if (++total > cap) {
      fail(ErrorCode::ExplosionGuard, "order complex exceeds " + std::to_string(cap) + " simplices");
    }
    for (auto j : above[chain.back()]) {
      chain.push_back(j);
      self(self);
      chain.pop_back();
    }
  };
  for (std::uint32_t i = 0; i < above.size(); ++i) {
    chain.assign(1, i);
    extend(extend);
  }
  for (auto& s : k.simplices) std::sort(s.begin(), s.end());
  return k;
}

OrderComplex order_complex(const HomPoset& p, std::size_t cap) { return order_complex(p.above, cap); }

SparseMatrix boundary_transposed(const OrderComplex& k, std::size_t d) {
  if (d == 0 || d > k.dimension()) fail(ErrorCode::InvariantViolation, "boundary dimension out of range");
  const auto& faces = k.simplices[d - 1];
  std::unordered_map<Simplex, std::uint32_t, boost::hash<Simplex>> face_index;
  face_index.reserve(faces.size());
  for (std::uint32_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i], i);

  SparseMatrix m;
  m.rows = k.simplices[d].size();
  m.cols = faces.size();
  m.data.reserve(m.rows);
  Simplex face;
  for (const auto& s : k.simplices[d]) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> row;
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.clear();
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != i) face.push_back(s[j]);
      }
      row.emplace_back(face_index.at(face), i % 2 == 0 ? 1 : -1);
    }
    std::sort(row.begin(), row.end());
    m.data.push_back(std::move(row));
  }
  return m;
}

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
cpp_int gcd_of(const cpp_int& a, const cpp_int& b) { return boost::multiprecision::gcd(a, b); }
std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
cpp_int mul(const cpp_int& a, const cpp_int& b) { return a * b; }
std::int64_t sub(std::int64_t a, std::int64_t b) { return checked_sub(a, b); }
cpp_int sub(const cpp_int& a, const cpp_int& b) { return a - b; }

template <class Int>
using Row = std::vector<std::pair<std::uint32_t, Int>>;

template <class Int>
void normalise(Row<Int>& row) {
  Int g = 0;
  for (const auto& e : row) g = gcd_of(g, e.second);
  if (g > 1) {
    for (auto& e : row) e.second /= g;
  }
}

// row := row * p_lead - pivot * row_lead, which clears the leading column.
template <class Int>
Row<Int> eliminate(const Row<Int>& row, const Row<Int>& pivot) {
  const Int a = pivot.front().second;
  const Int b = row.front().second;
  const Int g = gcd_of(a, b);
  const Int ra = a / g;
  const Int rb = b / g;
  Row<Int> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, mul(row[i].second, ra));
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, sub(Int(0), mul(pivot[j].second, rb)));
      ++j;
    } else {
      Int v = sub(mul(row[i].second, ra), mul(pivot[j].second, rb));
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  normalise(out);
  return out;
}

template <class Int>
std::size_t rank_impl(const SparseMatrix& m) {
  std::vector<Row<Int>> pivots(m.cols);
  std::vector<char> has(m.cols, 0);
  std::size_t rank = 0;
  for (const auto& src : m.data) {
    Row<Int> row;
    row.reserve(src.size());
    for (const auto& [c, v] : src) {
      if (v != 0) row.emplace_back(c, Int(v));
    }
    normalise(row);
    while (!row.empty() && has[row.front().first]) {
      row = eliminate(row, pivots[row.front().first]);
    }
    if (!row.empty()) {
      const auto c = row.front().first;
      pivots[c] = std::move(row);
      has[c] = 1;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const SparseMatrix& m) {
  try {
    return rank_impl<std::int64_t>(m);
  } catch (const Overflow&) {
    return rank_impl<cpp_int>(m);
  }
}

std::vector<std::int64_t> betti_numbers(const OrderComplex& k, std::size_t max_dim) {
  const std::size_t top = k.simplices.empty() ? 0 : k.dimension();
  std::vector<std::size_t> rank(top + 2, 0);  // rank[d] = rank of ∂_d
  for (std::size_t d = 1; d <= std::min(top, max_dim + 1); ++d) {
    rank[d] = exact_rank(boundary_transposed(k, d));
  }
  std::vector<std::int64_t> b(max_dim + 1, 0);
  for (std::size_t d = 0; d <= std::min(top, max_dim); ++d) {
    if (k.simplices.empty()) break;
    b[d] = std::int64_t(k.simplices[d].size()) - std::int64_t(rank[d]) - std::int64_t(rank[d + 1]);
  }
  return b;
}

bool boundary_squared_is_zero(const OrderComplex& k, std::size_t d) {
  if (d < 2 || d > k.dimension()) fail(ErrorCode::InvariantViolation, "dimension out of range");
  const auto top = boundary_transposed(k, d);       // rows: d-simplices over (d-1)-faces
  const auto low = boundary_transposed(k, d - 1);   // rows: (d-1)-simplices over (d-2)-faces
  for (const auto& row : top.data) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& [face, coeff] : row) {
      for (const auto& [sub_face, c2] : low.data[face]) acc[sub_face] += coeff * c2;
    }
    for (const auto& [_, v] : acc) {
      if (v != 0) return false;
    }
  }
  return true;
}

std::vector<std::string> elementary_divisors(const std::vector<std::vector<std::int64_t>>& m) {
  std::vector<std::vector<cpp_int>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<cpp_int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      cpp_int q = a[i][t] / a[t][t];
      if (q != 0) {
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      }
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      cpp_int q = a[t][j] / a[t][t];
      if (q != 0) {
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      }
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pivot again
    // Divisibility: fold any entry not divisible by the pivot into row t.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
          divisible = false;
          break;
        }
      }
    }
    if (!divisible) continue;
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  std::vector<std::string> out;
  for (const auto& d : diag) out.push_back(d.str());
  return out;
}

}  // namespace homcx
