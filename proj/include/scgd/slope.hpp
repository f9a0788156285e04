#pragma once

// Slopes are directions modulo sign.  Canonical form: dx > 0, or (0, 1) for
// vertical.  Exact mode stores a coprime integer pair, float mode a unit
// vector.  The total order is by value dy/dx with vertical greatest, which is
// the cyclic order of directions cut at the vertical.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scgd/geometry.hpp"
#include "scgd/numeric.hpp"

namespace scgd {

namespace detail {
template <class S>
struct DirectionRep {
  using type = BigInt;
};
template <>
struct DirectionRep<double> {
  using type = double;
};
}  // namespace detail

template <class S>
struct Slope {
  using D = typename detail::DirectionRep<S>::type;
  D dx{}, dy{};

  bool vertical() const { return dx == 0; }

  // Finite value dy/dx.
  S value() const {
    if (vertical()) throw std::domain_error("vertical slope has no value");
    if constexpr (float_mode<S>)
      return dy / dx;
    else
      return Rational(dy) / Rational(dx);
  }

  // Direction angle in (-pi/2, pi/2], float view.
  double angle() const {
    if constexpr (float_mode<S>) {
      return vertical() ? std::numbers::pi / 2 : std::atan2(dy, dx);
    } else {
      if (vertical()) return std::numbers::pi / 2;
      return std::atan2(static_cast<double>(Rational(dy)),
                        static_cast<double>(Rational(dx)));
    }
  }

  static Slope from_delta(const S& ddx, const S& ddy) {
    if (ddx == 0 && ddy == 0)
      throw std::invalid_argument("zero direction has no slope");
    Slope s;
    if constexpr (float_mode<S>) {
      double x = ddx, y = ddy;
      if (x == 0) {
        s.dx = 0;
        s.dy = 1;
        return s;
      }
      if (x < 0) {
        x = -x;
        y = -y;
      }
      const double n = std::hypot(x, y);
      s.dx = x / n;
      s.dy = y / n;
    } else {
      if (ddx == 0) {
        s.dx = 0;
        s.dy = 1;
        return s;
      }
      BigInt a = numerator(ddx) * denominator(ddy);
      BigInt b = numerator(ddy) * denominator(ddx);
      BigInt g = gcd(a, b);
      if (g != 0) {
        a /= g;
        b /= g;
      }
      if (a < 0) {
        a = -a;
        b = -b;
      }
      s.dx = a;
      s.dy = b;
    }
    return s;
  }

  static Slope vertical_slope() {
    Slope s;
    s.dx = 0;
    s.dy = 1;
    return s;
  }

  static Slope from_value(const S& v) { return from_delta(S(1), v); }
};

using SlopeQ = Slope<Rational>;
using SlopeD = Slope<double>;

// Value order with vertical greatest collapses to one cross-product test
// because the canonical vertical is (0, 1).
template <class S>
bool operator<(const Slope<S>& a, const Slope<S>& b) {
  return a.dy * b.dx < b.dy * a.dx;
}

template <class S>
bool operator==(const Slope<S>& a, const Slope<S>& b) {
  return a.dy * b.dx == b.dy * a.dx;
}

template <class S>
bool operator!=(const Slope<S>& a, const Slope<S>& b) {
  return !(a == b);
}

// Distance between directions modulo pi.
inline double angular_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, std::numbers::pi - d);
}

template <class S>
double angular_distance(const Slope<S>& a, const Slope<S>& b) {
  return angular_distance(a.angle(), b.angle());
}

template <class S>
bool approx_equal(const Slope<S>& a, const Slope<S>& b,
                  double eps = kSlopeEps) {
  if constexpr (float_mode<S>)
    return angular_distance(a, b) < eps;
  else
    return a == b;
}

template <class S>
Slope<S> slope_of(const Point<S>& p, const Point<S>& q) {
  if (p.x() == q.x() && p.y() == q.y())
    throw std::invalid_argument("slope of a degenerate segment");
  return Slope<S>::from_delta(S(q.x() - p.x()), S(q.y() - p.y()));
}

template <class S>
using SlopeList = std::vector<Slope<S>>;

// Sorted, deduplicated.  Float mode merges entries closer than eps, including
// across the vertical wrap of the cyclic order.
template <class S>
SlopeList<S> make_slope_set(SlopeList<S> slopes, double eps = kSlopeEps) {
  std::sort(slopes.begin(), slopes.end(), [](const auto& a, const auto& b) {
    return a < b;
  });
  SlopeList<S> out;
  for (const auto& s : slopes) {
    if (!out.empty() && approx_equal<S>(out.back(), s, eps)) continue;
    out.push_back(s);
  }
  if constexpr (float_mode<S>) {
    while (out.size() > 1 && approx_equal<S>(out.front(), out.back(), eps))
      out.pop_back();
  }
  return out;
}

// All segment slopes of a pairwise-distinct point list.
template <class S>
SlopeList<S> slope_set(const PointList<S>& pts, double eps = kSlopeEps) {
  SlopeList<S> all;
  all.reserve(pts.size() * (pts.size() - 1) / 2);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      all.push_back(slope_of<S>(pts[i], pts[j]));
  return make_slope_set<S>(std::move(all), eps);
}

template <class S>
bool slope_set_contains(const SlopeList<S>& set, const Slope<S>& s,
                        double eps = kSlopeEps) {
  auto it = std::lower_bound(set.begin(), set.end(), s,
                             [](const auto& a, const auto& b) { return a < b; });
  if constexpr (float_mode<S>) {
    if (it != set.end() && approx_equal<S>(*it, s, eps)) return true;
    if (it != set.begin() && approx_equal<S>(*std::prev(it), s, eps))
      return true;
    // Wrap of the cyclic order: near-vertical can land at either end.
    return !set.empty() && (approx_equal<S>(set.front(), s, eps) ||
                            approx_equal<S>(set.back(), s, eps));
  } else {
    return it != set.end() && *it == s;
  }
}

// Simple and all pairwise slopes distinct.
template <class S>
bool has_distinct_slopes(const PointList<S>& pts, double eps = kSlopeEps) {
  if (!is_simple<S>(pts, eps)) return false;
  return slope_set<S>(pts, eps).size() == pts.size() * (pts.size() - 1) / 2;
}

// Cyclic window of length `len` starting at `start` (0-based).
template <class S>
SlopeList<S> consecutive_window(const SlopeList<S>& set, std::size_t start,
                                std::size_t len) {
  if (set.empty()) throw std::invalid_argument("empty slope set");
  if (len > set.size()) throw std::invalid_argument("window longer than set");
  SlopeList<S> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(set[(start + i) % set.size()]);
  return out;
}

}  // namespace scgd
