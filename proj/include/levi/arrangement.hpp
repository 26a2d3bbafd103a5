#pragma once

// Incidence combinatorics of d-arrangements and point-curve configurations.
//
// An arrangement is k curves of a common degree d together with a list of
// marked points, each recording the curves passing through it. No
// coordinates are kept; everything downstream depends only on incidences.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "levi/errors.hpp"

namespace levi {

enum class Mode {
  strict_d_arrangement,  // counts must balance, every point at least double
  configuration,         // arbitrary incidences, simple points allowed
};

struct Point {
  std::string id;
  std::vector<int> curves;  // sorted, duplicate-free

  int multiplicity() const { return static_cast<int>(curves.size()); }

  friend bool operator==(const Point&, const Point&) = default;
};

struct CountCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;

  bool pass() const { return lhs == rhs; }
};

struct ValidationReport {
  std::vector<CountCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CountCheck& c) { return c.pass(); });
  }
};

struct TVector {
  std::map<int, long long> counts;  // multiplicity r -> t_r
  long long s = 0;

  long long at(int r) const {
    auto it = counts.find(r);
    return it == counts.end() ? 0 : it->second;
  }
};

namespace detail {

inline long long choose2(long long m) { return m * (m - 1) / 2; }

inline void check_structure(int d, int k, const std::vector<Point>& points) {
  if (d < 1) throw InputError("degree d must be positive");
  if (k < 1) throw InputError("curve count k must be positive");
  for (const auto& p : points) {
    if (p.curves.empty()) throw InputError("point '" + p.id + "' lies on no curve");
    for (std::size_t i = 0; i < p.curves.size(); ++i) {
      int c = p.curves[i];
      if (c < 0 || c >= k) {
        throw InputError("point '" + p.id + "' references curve " + std::to_string(c) +
                         " outside 0.." + std::to_string(k - 1));
      }
      if (i > 0 && p.curves[i - 1] >= c) {
        throw InputError("point '" + p.id + "' has unsorted or duplicate curve ids");
      }
    }
  }
}

}  // namespace detail

/// Per-invariant report for raw arrangement data. Structural problems (bad
/// curve ids) are not reported here; they throw.
inline ValidationReport validate(int d, int k, const std::vector<Point>& points,
                                 Mode mode) {
  detail::check_structure(d, k, points);
  ValidationReport report;
  if (mode == Mode::configuration) return report;

  report.checks.push_back({"k >= 3", k >= 3 ? 1 : 0, 1});
  long long below_two = std::count_if(points.begin(), points.end(),
                                      [](const Point& p) { return p.multiplicity() < 2; });
  report.checks.push_back({"points with multiplicity < 2", below_two, 0});

  const long long d2 = static_cast<long long>(d) * d;
  long long pair_sum = 0;
  for (const auto& p : points) pair_sum += detail::choose2(p.multiplicity());
  report.checks.push_back({"d^2 * C(k,2) = sum_p C(m_p,2)", d2 * detail::choose2(k), pair_sum});

  std::vector<long long> per_curve(k, 0);
  for (const auto& p : points) {
    for (int c : p.curves) per_curve[c] += p.multiplicity() - 1;
  }
  for (int c = 0; c < k; ++c) {
    report.checks.push_back({"curve " + std::to_string(c) + ": d^2 (k-1) = sum_{p on C} (m_p - 1)",
                             d2 * (k - 1), per_curve[c]});
  }
  return report;
}

/// Immutable arrangement in canonical point order: multiplicity descending,
/// then incidence list ascending. Curves keep their given numbering.
class Arrangement {
 public:
  Arrangement(int d, int k, std::vector<Point> points, Mode mode)
      : d_(d), k_(k), points_(std::move(points)), mode_(mode) {
    for (auto& p : points_) std::sort(p.curves.begin(), p.curves.end());
    ValidationReport report = levi::validate(d_, k_, points_, mode_);
    if (!report.ok()) {
      std::string msg = "arrangement violates strict counts:";
      for (const auto& c : report.checks) {
        if (!c.pass()) {
          msg += " [" + c.name + ": " + std::to_string(c.lhs) + " vs " + std::to_string(c.rhs) + "]";
        }
      }
      throw InputError(msg);
    }
    std::stable_sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) {
      if (a.multiplicity() != b.multiplicity()) return a.multiplicity() > b.multiplicity();
      return a.curves < b.curves;
    });
  }

  int degree() const { return d_; }
  int curve_count() const { return k_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  Mode mode() const { return mode_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int d_;
  int k_;
  std::vector<Point> points_;
  Mode mode_;
};

inline ValidationReport validate(const Arrangement& a) {
  return validate(a.degree(), a.curve_count(), a.points(), a.mode());
}

inline TVector t_vector(const Arrangement& a) {
  TVector t;
  for (const auto& p : a.points()) ++t.counts[p.multiplicity()];
  t.s = a.point_count();
  return t;
}

/// A pencil: lines (d = 1) all passing through one point.
inline bool is_pencil(const Arrangement& a) {
  return a.degree() == 1 && a.point_count() == 1 &&
         a.points().front().multiplicity() == a.curve_count();
}

// --- generators -------------------------------------------------------------

namespace detail {

inline std::string point_label(std::size_t index, std::size_t total) {
  std::string digits = std::to_string(index + 1);
  std::size_t width = std::max<std::size_t>(2, std::to_string(total).size());
  return "p" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

/// Builds a strict arrangement and relabels points p01.. in canonical order.
inline Arrangement labelled(int d, int k, std::vector<std::vector<int>> incidences,
                            Mode mode = Mode::strict_d_arrangement) {
  std::vector<Point> pts;
  pts.reserve(incidences.size());
  for (auto& inc : incidences) pts.push_back({"", std::move(inc)});
  Arrangement sorted(d, k, std::move(pts), mode);
  std::vector<Point> relabelled = sorted.points();
  for (std::size_t i = 0; i < relabelled.size(); ++i) {
    relabelled[i].id = point_label(i, relabelled.size());
  }
  return Arrangement(d, k, std::move(relabelled), mode);
}

inline void require_line_count(int k) {
  if (k < 3) throw InputError("line families need k >= 3, got " + std::to_string(k));
}

inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

}  // namespace detail

inline Arrangement gen_pencil(int k) {
  detail::require_line_count(k);
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  return detail::labelled(1, k, {all});
}

/// One (k-1)-fold point on lines 0..k-2 and k-1 double points on line k-1.
inline Arrangement gen_quasi_pencil(int k) {
  detail::require_line_count(k);
  std::vector<std::vector<int>> inc;
  std::vector<int> big(k - 1);
  std::iota(big.begin(), big.end(), 0);
  inc.push_back(big);
  for (int i = 0; i < k - 1; ++i) inc.push_back({i, k - 1});
  return detail::labelled(1, k, std::move(inc));
}

/// k lines in general position: one double point per pair of lines.
inline Arrangement gen_generic_lines(int k) {
  detail::require_line_count(k);
  std::vector<std::vector<int>> inc;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) inc.push_back({i, j});
  }
  return detail::labelled(1, k, std::move(inc));
}

/// Point-line incidences of PG(2, q) for prime q.
inline Arrangement gen_projective_plane(int q) {
  if (!detail::is_prime(q)) {
    throw InputError("projective plane order must be prime, got " + std::to_string(q));
  }
  // Normalized homogeneous coordinates: first nonzero entry equals 1.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        std::array<int, 3> v{a, b, c};
        auto lead = std::find_if(v.begin(), v.end(), [](int t) { return t != 0; });
        if (lead != v.end() && *lead == 1) reps.push_back(v);
      }
    }
  }
  const int n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> inc(n);
  for (int p = 0; p < n; ++p) {
    for (int l = 0; l < n; ++l) {
      int dot = 0;
      for (int t = 0; t < 3; ++t) dot += reps[p][t] * reps[l][t];
      if (dot % q == 0) inc[p].push_back(l);
    }
  }
  return detail::labelled(1, n, std::move(inc));
}

/// Six conics through five of six general points: point i misses conic 5 - i.
inline Arrangement gen_conic_6_5() {
  std::vector<std::vector<int>> inc;
  for (int i = 0; i < 6; ++i) {
    std::vector<int> curves;
    for (int j = 0; j < 6; ++j) {
      if (j != 5 - i) curves.push_back(j);
    }
    inc.push_back(curves);
  }
  return detail::labelled(2, 6, std::move(inc));
}

}  // namespace levi
