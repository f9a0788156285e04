#include "scgd/affreg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scgd {

namespace {

Vec2<double> direction(const SlopeD& s) { return Vec2<double>(s.dx, s.dy); }

// Orbit slopes rotated/reflected into ascending order for the merge scan.
SlopeList<double> ascending_cycle(SlopeList<double> cyc) {
  const auto less = [](const SlopeD& a, const SlopeD& b) { return a < b; };
  const auto min_it = std::min_element(cyc.begin(), cyc.end(), less);
  std::rotate(cyc.begin(), min_it, cyc.end());
  if (!std::is_sorted(cyc.begin(), cyc.end(), less)) {
    // Descending orientation: reverse the tail after the minimum.
    std::reverse(cyc.begin() + 1, cyc.end());
    if (!std::is_sorted(cyc.begin(), cyc.end(), less))
      std::sort(cyc.begin(), cyc.end(), less);
  }
  return cyc;
}

}  // namespace

AffRegPolygon regular_ngon(int n) {
  if (n < 3) throw std::invalid_argument("regular_ngon: n must be at least 3");
  AffRegPolygon p;
  p.order = n;
  const double step = 2 * std::numbers::pi / n;
  p.vertices.reserve(n);
  for (int i = 0; i < n; ++i)
    p.vertices.emplace_back(std::cos(i * step), std::sin(i * step));
  p.generator.linear << std::cos(step), -std::sin(step), std::sin(step),
      std::cos(step);
  p.generator.translation.setZero();
  return p;
}

AffRegPolygon affine_image(const AffRegPolygon& p, const AffineMapD& phi) {
  const auto inv = phi.inverse();
  if (!inv) throw std::invalid_argument("affine_image: map must be invertible");
  AffRegPolygon out;
  out.order = p.order;
  out.vertices.reserve(p.vertices.size());
  for (const auto& v : p.vertices) out.vertices.push_back(phi(v));
  out.generator = phi.after(p.generator).after(*inv);
  return out;
}

AffRegPolygon random_affreg_polygon(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  AffineMapD phi;
  do {
    phi.linear << coeff(rng), coeff(rng), coeff(rng), coeff(rng);
  } while (std::abs(phi.linear.determinant()) < 0.3);
  phi.translation << coeff(rng), coeff(rng);
  return affine_image(regular_ngon(n), phi);
}

double identity_distance(const AffineMapD& m) {
  const Mat2<double> dl = m.linear - Mat2<double>::Identity();
  return std::max(dl.cwiseAbs().maxCoeff(), m.translation.cwiseAbs().maxCoeff());
}

std::optional<int> affine_order(const AffineMapD& m, int max_order, double tol) {
  AffineMapD power = m;
  for (int d = 1; d <= max_order; ++d) {
    if (identity_distance(power) < tol) return d;
    power = m.after(power);
  }
  return std::nullopt;
}

PolygonSlopeProfile slope_profile(const AffRegPolygon& p) {
  const auto& v = p.vertices;
  const int d = static_cast<int>(v.size());
  if (d < 3) throw std::invalid_argument("slope_profile: need at least 3 vertices");
  PolygonSlopeProfile prof;
  prof.s.reserve(d);
  prof.s.push_back(slope_of<double>(v[d - 1], v[1]));
  for (int i = 1; i < d; ++i) prof.s.push_back(slope_of<double>(v[0], v[i]));
  prof.boundary.reserve(d);
  for (int i = 0; i < d; ++i)
    prof.boundary.push_back(slope_of<double>(v[i], v[(i + 1) % d]));
  return prof;
}

bool profile_cyclic_order_ok(const PolygonSlopeProfile& prof) {
  const int d = static_cast<int>(prof.s.size());
  int descents = 0;
  for (int i = 0; i < d; ++i) {
    const SlopeD& a = prof.s[i];
    const SlopeD& b = prof.s[(i + 1) % d];
    if (!(a < b) && !(b < a)) return false;  // repeated slope
    if (b < a) ++descents;
  }
  return descents == 1 || descents == d - 1;
}

bool profile_boundary_ok(const PolygonSlopeProfile& prof, double eps) {
  const int d = static_cast<int>(prof.s.size());
  if (prof.boundary.size() != prof.s.size()) return false;
  for (int i = 0; i < d; ++i)
    if (angular_distance(prof.boundary[i], prof.s[(2 * i + 1) % d]) >= eps)
      return false;
  return true;
}

std::optional<AffRegPolygon> four_points_query(const SlopeList<double>& s,
                                               int k, const QuadD& p,
                                               double eps, double order_tol) {
  if (!is_simple<double>(to_list(p), eps))
    throw std::invalid_argument("four_points_query: quadruple must be simple");
  const int n = static_cast<int>(s.size());
  if (k < 3 || k > n) return std::nullopt;

  // Affine map with phi(P0)=P1, phi(P1)=P2, phi(P2)=P3.
  Mat2<double> from, to;
  from.col(0) = p[1] - p[0];
  from.col(1) = p[2] - p[1];
  to.col(0) = p[2] - p[1];
  to.col(1) = p[3] - p[2];
  AffineMapD phi;
  phi.linear = to * from.inverse();
  phi.translation = p[1] - phi.linear * p[0];

  const auto d_opt = affine_order(phi, n, order_tol);
  if (!d_opt || *d_opt < k) return std::nullopt;
  const int d = *d_opt;

  AffRegPolygon poly;
  poly.generator = phi;
  poly.order = d;
  poly.vertices.reserve(d);
  poly.vertices.push_back(p[0]);
  for (int i = 1; i < d; ++i) poly.vertices.push_back(phi(poly.vertices.back()));
  for (int i = 1; i < d; ++i)
    if (same_point<double>(poly.vertices[i], poly.vertices[0], eps))
      return std::nullopt;  // orbit degenerates onto a shorter cycle

  const PolygonSlopeProfile prof = slope_profile(poly);
  const SlopeList<double> orbit = ascending_cycle(prof.s);

  // Merge scan: both lists ascend, so one pass suffices; stragglers near the
  // vertical wrap get a direct membership retry.
  std::size_t j = 0;
  for (const auto& sl : orbit) {
    while (j < s.size() && s[j] < sl && angular_distance(s[j], sl) >= eps) ++j;
    if (j < s.size() && angular_distance(s[j], sl) < eps) continue;
    if (!slope_set_contains<double>(s, sl, eps)) return std::nullopt;
  }
  return poly;
}

std::optional<QuadD> quad_from_slopes(const std::array<SlopeD, 4>& t,
                                      int variant, double eps) {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (approx_equal<double>(t[a], t[b], eps))
        throw std::invalid_argument("quad_from_slopes: slopes must be distinct");
  if (variant != 1 && variant != 2)
    throw std::invalid_argument("quad_from_slopes: variant is 1 or 2");

  const PointD p0(0, 0);
  if (variant == 1) {
    const PointD p1 = t[0].vertical() ? PointD(0, 1) : PointD(1, t[0].value());
    const auto p2 =
        line_intersect<double>(p0, direction(t[1]), p1, direction(t[2]), eps);
    const auto p3 =
        line_intersect<double>(p0, direction(t[2]), p1, direction(t[3]), eps);
    if (!p2 || !p3) return std::nullopt;
    return QuadD{p0, p1, *p2, *p3};
  }
  const PointD p2(direction(t[0]));
  const auto p3 =
      line_intersect<double>(p0, direction(t[1]), p2, direction(t[3]), eps);
  if (!p3) return std::nullopt;
  const auto p1 =
      line_intersect<double>(p2, direction(t[1]), *p3, direction(t[2]), eps);
  if (!p1) return std::nullopt;
  return QuadD{p0, *p1, p2, *p3};
}

std::optional<FourSlopesResult> four_slopes_query(const SlopeList<double>& s,
                                                  int k,
                                                  const std::array<SlopeD, 4>& t,
                                                  double eps, double order_tol) {
  for (int variant : {1, 2}) {
    const auto quad = quad_from_slopes(t, variant, eps);
    if (!quad || !is_simple<double>(to_list(*quad), eps)) continue;
    auto poly = four_points_query(s, k, *quad, eps, order_tol);
    if (poly) return FourSlopesResult{std::move(*poly), variant};
  }
  return std::nullopt;
}

}  // namespace scgd
