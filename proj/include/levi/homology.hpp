#pragma once

// Reduced simplicial homology over GF(p) by dense Gaussian elimination.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "levi/complex.hpp"
#include "levi/errors.hpp"

namespace levi {

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 2) : p_(p) {
    if (p < 2) throw InputError("field characteristic must be prime, got " + std::to_string(p));
    for (std::uint32_t f = 2; f * f <= p; ++f) {
      if (p % f == 0) throw InputError("field characteristic must be prime, got " + std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, p_ - b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t result = 1, base = a % p_;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
      if (e & 1U) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<std::uint32_t>(result);
  }
  /// Reduction of a signed integer.
  std::uint32_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

struct GFMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> entries;  // row-major, values in [0, p)

  GFMatrix() = default;
  GFMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

namespace detail {

inline std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  std::vector<const std::vector<std::uint64_t>*> pivot(words * 64, nullptr);
  std::size_t rank = 0;
  for (auto& row : rows) {
    for (std::size_t w = 0; w < words;) {
      if (row[w] == 0) {
        ++w;
        continue;
      }
      std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      if (pivot[lead] == nullptr) {
        pivot[lead] = &row;
        ++rank;
        break;
      }
      const auto& p = *pivot[lead];
      for (std::size_t t = w; t < words; ++t) row[t] ^= p[t];
    }
  }
  return rank;
}

inline std::size_t rank_dense(GFMatrix m, const PrimeField& field) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank) {
      for (std::size_t t = c; t < m.cols; ++t) std::swap(m.at(piv, t), m.at(rank, t));
    }
    const std::uint32_t scale = field.inv(m.at(rank, c));
    for (std::size_t t = c; t < m.cols; ++t) m.at(rank, t) = field.mul(m.at(rank, t), scale);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const std::uint32_t f = m.at(r, c);
      if (f == 0) continue;
      for (std::size_t t = c; t < m.cols; ++t) {
        m.at(r, t) = field.sub(m.at(r, t), field.mul(f, m.at(rank, t)));
      }
    }
    ++rank;
  }
  return rank;
}

/// Faces grouped by size; each group sorted by value.
inline std::vector<std::vector<Face>> group_by_size(std::span<const Face> faces) {
  std::vector<std::vector<Face>> groups;
  for (Face f : faces) {
    std::size_t k = static_cast<std::size_t>(std::popcount(f));
    if (groups.size() <= k) groups.resize(k + 1);
    groups[k].push_back(f);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

inline std::size_t index_of(const std::vector<Face>& group, Face f) {
  return static_cast<std::size_t>(std::lower_bound(group.begin(), group.end(), f) - group.begin());
}

/// Rank of the boundary map from faces of size `size` to faces of size - 1.
inline std::size_t boundary_rank(const std::vector<std::vector<Face>>& groups, std::size_t size,
                                 const PrimeField& field) {
  if (size == 0 || size >= groups.size() || groups[size].empty() || groups[size - 1].empty()) return 0;
  const auto& upper = groups[size];
  const auto& lower = groups[size - 1];
  if (field.characteristic() == 2) {
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(upper.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < upper.size(); ++r) {
      for (Face t = upper[r]; t; t &= t - 1) {
        std::size_t c = index_of(lower, upper[r] & ~(t & -t));
        rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
    return rank_gf2(rows);
  }
  GFMatrix m(upper.size(), lower.size());
  const std::uint32_t minus_one = field.neg(1);
  for (std::size_t r = 0; r < upper.size(); ++r) {
    int position = 0;
    for (Face t = upper[r]; t; t &= t - 1, ++position) {
      std::size_t c = index_of(lower, upper[r] & ~(t & -t));
      m.at(r, c) = position % 2 == 0 ? 1 : minus_one;
    }
  }
  return rank_dense(std::move(m), field);
}

}  // namespace detail

inline std::size_t rank(const GFMatrix& m, const PrimeField& field) {
  if (field.characteristic() == 2) {
    const std::size_t words = (m.cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows; ++r) {
      for (std::size_t c = 0; c < m.cols; ++c) {
        if (m.at(r, c) & 1U) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
    return detail::rank_gf2(rows);
  }
  return detail::rank_dense(m, field);
}

/// Boundary map from i-faces (columns) to (i-1)-faces (rows) with sign
/// (-1)^position of the removed vertex. The (-1)-face ∅ is included, so the
/// chain complex is augmented. Out-of-range i gives an empty matrix.
inline GFMatrix boundary_matrix(const SimplicialComplex& delta, int i, const PrimeField& field,
                                std::size_t cap = kDefaultFaceCap) {
  std::vector<Face> faces = delta.faces(cap);
  auto groups = detail::group_by_size(faces);
  const std::size_t up = static_cast<std::size_t>(i + 1);
  if (i < 0 || up >= groups.size()) {
    std::size_t r = (i >= 0 && static_cast<std::size_t>(i) < groups.size()) ? groups[i].size() : 0;
    return GFMatrix(r, 0);
  }
  const auto& upper = groups[up];
  const auto& lower = groups[up - 1];
  GFMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int position = 0;
    for (Face t = upper[c]; t; t &= t - 1, ++position) {
      std::size_t r = detail::index_of(lower, upper[c] & ~(t & -t));
      m.at(r, c) = field.from_int(position % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

/// dims[i + 1] = dim H̃_i for i = -1 .. dim Δ. Empty for the void complex.
struct ReducedHomology {
  std::vector<long long> dims;

  long long at(int i) const {
    std::size_t slot = static_cast<std::size_t>(i + 1);
    return i >= -1 && slot < dims.size() ? dims[slot] : 0;
  }
  bool is_zero() const {
    return std::all_of(dims.begin(), dims.end(), [](long long d) { return d == 0; });
  }
};

/// Reduced homology of the complex whose faces are exactly `faces` (closed
/// under subsets, ∅ included unless the list is empty).
inline ReducedHomology reduced_homology(std::span<const Face> faces, const PrimeField& field) {
  ReducedHomology h;
  if (faces.empty()) return h;
  auto groups = detail::group_by_size(faces);
  const std::size_t top = groups.size();  // sizes 0..top-1
  std::vector<std::size_t> ranks(top + 1, 0);  // ranks[s]: boundary out of size-s faces
  for (std::size_t s = 1; s < top; ++s) ranks[s] = detail::boundary_rank(groups, s, field);
  h.dims.resize(top);
  for (std::size_t s = 0; s < top; ++s) {
    long long f = static_cast<long long>(groups[s].size());
    h.dims[s] = f - static_cast<long long>(ranks[s]) - static_cast<long long>(ranks[s + 1]);
  }
  return h;
}

inline ReducedHomology reduced_betti(const SimplicialComplex& delta, const PrimeField& field,
                                     std::size_t cap = kDefaultFaceCap) {
  std::vector<Face> faces = delta.faces(cap);
  return reduced_homology(faces, field);
}

}  // namespace levi
