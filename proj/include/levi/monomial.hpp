#pragma once

// Monomials as dense exponent vectors, monomial ideals kept minimally
// generated, ideal powers and the lcm lattice.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "levi/errors.hpp"

namespace levi {

using Monomial = std::vector<int>;

inline int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline bool is_squarefree(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int e) { return e <= 1; });
}

/// Bitmask of the variables dividing m.
inline std::uint64_t support(const Monomial& m) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) s |= std::uint64_t{1} << i;
  }
  return s;
}

inline Monomial monomial_of_support(std::uint64_t mask, int n) {
  Monomial m(n, 0);
  for (int i = 0; i < n; ++i) m[i] = static_cast<int>((mask >> i) & 1U);
  return m;
}

/// Graded order: lower degree first, then lexicographically larger exponent
/// vector first (x1 before x2).
inline bool graded_less(const Monomial& a, const Monomial& b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a > b;
}

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

/// Renders `x1*y1`, `x1^2*y2`, or `1`.
inline std::string to_string(const Monomial& m, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += labels[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Monomial ideal with a minimal, duplicate-free generating set in graded order.
class MonomialIdeal {
 public:
  static constexpr int kMaxVariables = 63;

  MonomialIdeal(std::vector<std::string> labels, std::vector<Monomial> gens)
      : labels_(std::move(labels)) {
    const int n = variable_count();
    if (n > kMaxVariables) throw CapExceeded("monomial ideals are limited to 63 variables");
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) != n) throw InputError("generator length does not match variable count");
      if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; })) {
        throw InputError("negative exponent");
      }
    }
    std::sort(gens.begin(), gens.end(), graded_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto& g : gens) {
      bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                   [&](const Monomial& kept) { return divides(kept, g); });
      if (!redundant) gens_.push_back(std::move(g));
    }
  }

  int variable_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && degree(gens_.front()) == 0; }
  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return levi::is_squarefree(g); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
  }

  /// Generator supports; meaningful for squarefree ideals.
  std::vector<std::uint64_t> supports() const {
    std::vector<std::uint64_t> out;
    for (const auto& g : gens_) out.push_back(support(g));
    return out;
  }

  /// Common generator degree, or -1 when generators have mixed degrees.
  int generator_degree() const {
    if (gens_.empty()) return -1;
    int d = degree(gens_.front());
    for (const auto& g : gens_) {
      if (degree(g) != d) return -1;
    }
    return d;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& g : gens_) out += to_string(g, labels_) + '\n';
    return out;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> prods;
  prods.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) prods.push_back(multiply(g, h));
  }
  return MonomialIdeal(a.labels(), std::move(prods));
}

/// Minimal generators of I^q.
inline MonomialIdeal power(const MonomialIdeal& ideal, int q) {
  if (q < 1) throw InputError("power exponent must be at least 1");
  MonomialIdeal out = ideal;
  for (int i = 1; i < q; ++i) out = multiply(out, ideal);
  return out;
}

/// All distinct lcms of nonempty generator subsets; the bottom element is
/// implicit. Elements are in graded order, so divisors precede multiples.
struct LcmLattice {
  std::vector<Monomial> elements;

  std::size_t size() const { return elements.size() + 1; }
  const Monomial& top() const { return elements.back(); }
};

inline LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = std::size_t{1} << 14) {
  if (ideal.is_zero()) throw ZeroIdeal();
  std::set<Monomial> seen(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier(ideal.gens().begin(), ideal.gens().end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& e : frontier) {
      for (const auto& g : ideal.gens()) {
        Monomial l = lcm(e, g);
        if (seen.insert(l).second) {
          if (seen.size() + 1 > cap) {
            throw CapExceeded("lcm lattice exceeds " + std::to_string(cap) + " elements");
          }
          next.push_back(std::move(l));
        }
      }
    }
    frontier = std::move(next);
  }
  LcmLattice lattice{{seen.begin(), seen.end()}};
  std::sort(lattice.elements.begin(), lattice.elements.end(), graded_less);
  return lattice;
}

}  // namespace levi
