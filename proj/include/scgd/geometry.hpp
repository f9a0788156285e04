#pragma once

// Planar kernel shared by the exact (Rational) and float (double) modes.
// Points are Eigen column vectors so the usual expression arithmetic works;
// predicates switch on the scalar at compile time.  Float predicates use
// relative thresholds so the kernel is invariant under scaling.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "scgd/numeric.hpp"

namespace scgd {

// Angular tolerance for slope equality in float mode.
inline constexpr double kSlopeEps = 1e-9;

template <class S>
using Vec2 = Eigen::Matrix<S, 2, 1>;
template <class S>
using Point = Vec2<S>;
template <class S>
using Mat2 = Eigen::Matrix<S, 2, 2>;
template <class S>
using PointList = std::vector<Point<S>>;

using PointQ = Point<Rational>;
using PointD = Point<double>;

template <class S>
inline constexpr bool float_mode = std::is_same_v<S, double>;

template <class S>
S cross(const Vec2<S>& u, const Vec2<S>& v) {
  return S(u.x() * v.y() - u.y() * v.x());
}

template <class S>
bool lex_less(const Point<S>& p, const Point<S>& q) {
  return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
}

template <class S>
bool same_point(const Point<S>& p, const Point<S>& q, double eps = kSlopeEps) {
  if constexpr (float_mode<S>) {
    const double scale = std::max(
        {1.0, std::abs(p.x()), std::abs(p.y()), std::abs(q.x()), std::abs(q.y())});
    return (p - q).cwiseAbs().maxCoeff() <= eps * scale;
  } else {
    return p.x() == q.x() && p.y() == q.y();
  }
}

template <class S>
bool collinear(const Point<S>& a, const Point<S>& b, const Point<S>& c,
               double eps = kSlopeEps) {
  const Vec2<S> u = b - a, v = c - a;
  if constexpr (float_mode<S>) {
    const double t1 = u.x() * v.y(), t2 = u.y() * v.x();
    double m = 0;
    for (const auto* p : {&a, &b, &c})
      m = std::max({m, std::abs(p->x()), std::abs(p->y())});
    const double thr = eps * std::max(std::abs(t1) + std::abs(t2), m * m);
    return std::abs(t1 - t2) <= thr;
  } else {
    return cross<S>(u, v) == 0;
  }
}

template <class S>
bool pairwise_distinct(const PointList<S>& pts, double eps = kSlopeEps) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (same_point<S>(pts[i], pts[j], eps)) return false;
  return true;
}

// Pairwise distinct and no three collinear.
template <class S>
bool is_simple(const PointList<S>& pts, double eps = kSlopeEps) {
  if (!pairwise_distinct<S>(pts, eps)) return false;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear<S>(pts[i], pts[j], pts[k], eps)) return false;
  return true;
}

template <class S>
PointList<S> sorted_lex(PointList<S> pts) {
  std::sort(pts.begin(), pts.end(), lex_less<S>);
  return pts;
}

// Intersection of the lines p + t*dp and q + t*dq; none when parallel.
template <class S>
std::optional<Point<S>> line_intersect(const Point<S>& p, const Vec2<S>& dp,
                                       const Point<S>& q, const Vec2<S>& dq,
                                       double eps = kSlopeEps) {
  const S den = cross<S>(dp, dq);
  if constexpr (float_mode<S>) {
    const double mag = std::abs(dp.x() * dq.y()) + std::abs(dp.y() * dq.x());
    if (std::abs(den) <= eps * std::max(mag, 1e-300)) return std::nullopt;
  } else {
    if (den == 0) return std::nullopt;
  }
  const S t = cross<S>(Vec2<S>(q - p), dq) / den;
  return Point<S>(p + t * dp);
}

template <class S>
struct AffineMap {
  Mat2<S> linear;
  Vec2<S> translation;

  static AffineMap identity() {
    AffineMap m;
    m.linear = Mat2<S>::Identity();
    m.translation = Vec2<S>::Zero();
    return m;
  }

  Point<S> operator()(const Point<S>& p) const {
    return Point<S>(linear * p + translation);
  }

  // this ∘ inner
  AffineMap after(const AffineMap& inner) const {
    AffineMap m;
    m.linear = linear * inner.linear;
    m.translation = linear * inner.translation + translation;
    return m;
  }

  std::optional<AffineMap> inverse(double eps = kSlopeEps) const {
    const S det = linear.determinant();
    if constexpr (float_mode<S>) {
      const double mag = std::abs(linear(0, 0) * linear(1, 1)) +
                         std::abs(linear(0, 1) * linear(1, 0));
      if (std::abs(det) <= eps * std::max(mag, 1e-300)) return std::nullopt;
    } else {
      if (det == 0) return std::nullopt;
    }
    AffineMap m;
    m.linear(0, 0) = linear(1, 1) / det;
    m.linear(0, 1) = -linear(0, 1) / det;
    m.linear(1, 0) = -linear(1, 0) / det;
    m.linear(1, 1) = linear(0, 0) / det;
    m.translation = -(m.linear * translation);
    return m;
  }
};

using AffineMapQ = AffineMap<Rational>;
using AffineMapD = AffineMap<double>;

// Scaling by a nonzero ratio followed by a translation.  These are exactly
// the affine maps that fix every slope.
template <class S>
struct Homothety {
  S ratio;
  Vec2<S> translation;

  Point<S> operator()(const Point<S>& p) const {
    return Point<S>(ratio * p + translation);
  }

  AffineMap<S> to_affine() const {
    AffineMap<S> m;
    m.linear = Mat2<S>::Identity() * ratio;
    m.translation = translation;
    return m;
  }
};

using HomothetyQ = Homothety<Rational>;
using HomothetyD = Homothety<double>;

namespace detail {

// Homothety sending p0->q0, p1->q1, if one exists.
template <class S>
std::optional<Homothety<S>> homothety_from_pair(const Point<S>& p0,
                                                const Point<S>& p1,
                                                const Point<S>& q0,
                                                const Point<S>& q1,
                                                double eps = kSlopeEps) {
  const Vec2<S> u = p1 - p0, v = q1 - q0;
  if constexpr (float_mode<S>) {
    const double mag = std::abs(u.x() * v.y()) + std::abs(u.y() * v.x());
    if (std::abs(cross<S>(u, v)) > eps * std::max(mag, 1e-300))
      return std::nullopt;
  } else {
    if (cross<S>(u, v) != 0) return std::nullopt;
  }
  S lam;
  if constexpr (float_mode<S>) {
    lam = u.dot(v) / u.dot(u);
  } else {
    lam = (u.x() != 0) ? v.x() / u.x() : v.y() / u.y();
  }
  if (lam == 0) return std::nullopt;
  Homothety<S> h;
  h.ratio = lam;
  h.translation = q0 - lam * p0;
  return h;
}

}  // namespace detail

// Unique homothety with phi(e[i]) = f[i] for all i, or none.  Both lists must
// be pairwise distinct and of equal length >= 2.
template <class S>
std::optional<Homothety<S>> find_homothety(const PointList<S>& e,
                                           const PointList<S>& f,
                                           double eps = kSlopeEps) {
  if (e.size() != f.size()) throw std::invalid_argument("length mismatch");
  if (e.size() < 2) throw std::invalid_argument("need at least two points");
  if (!pairwise_distinct<S>(e, eps) || !pairwise_distinct<S>(f, eps))
    throw std::invalid_argument("lists must be pairwise distinct");
  auto h = detail::homothety_from_pair<S>(e[0], e[1], f[0], f[1], eps);
  if (!h) return std::nullopt;
  for (std::size_t i = 2; i < e.size(); ++i)
    if (!same_point<S>((*h)(e[i]), f[i], eps)) return std::nullopt;
  return h;
}

// First homothety (in lexicographic image-pair order) mapping the set a into
// the set b.  The two lexicographically smallest points of a are anchored and
// every ordered pair of b is tried as their image.
template <class S>
std::optional<Homothety<S>> embeds(const PointList<S>& a, const PointList<S>& b,
                                   double eps = kSlopeEps) {
  if (a.size() < 2) throw std::invalid_argument("need at least two points");
  if (!pairwise_distinct<S>(a, eps) || !pairwise_distinct<S>(b, eps))
    throw std::invalid_argument("arguments must be point sets");
  if (a.size() > b.size()) return std::nullopt;
  const PointList<S> as = sorted_lex<S>(a);
  const PointList<S> bs = sorted_lex<S>(b);
  auto member = [&](const Point<S>& p) {
    if constexpr (float_mode<S>) {
      for (const auto& q : bs)
        if (same_point<S>(p, q, eps)) return true;
      return false;
    } else {
      return std::binary_search(bs.begin(), bs.end(), p, lex_less<S>);
    }
  };
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (i == j) continue;
      auto h = detail::homothety_from_pair<S>(as[0], as[1], bs[i], bs[j], eps);
      if (!h) continue;
      bool ok = true;
      for (const auto& p : as)
        if (!member((*h)(p))) {
          ok = false;
          break;
        }
      if (ok) return h;
    }
  }
  return std::nullopt;
}

}  // namespace scgd
