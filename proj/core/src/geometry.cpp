#include "matchstick/geometry.hpp"

#include <algorithm>
#include <numbers>

#include "matchstick/error.hpp"

namespace matchstick {

int orientation(Point a, Point b, Point c, double band) {
  const double det = std::fma(b.x - a.x, c.y - a.y, -(b.y - a.y) * (c.x - a.x));
  if (det > band) return 1;
  if (det < -band) return -1;
  return 0;
}

namespace {

bool within_box(Point p, Point a, Point b, double band) {
  return p.x >= std::min(a.x, b.x) - band && p.x <= std::max(a.x, b.x) + band &&
         p.y >= std::min(a.y, b.y) - band && p.y <= std::max(a.y, b.y) + band;
}

}  // namespace

SegmentContact segment_contact(Point a, Point b, Point c, Point d, double band) {
  const int o1 = orientation(a, b, c, band);
  const int o2 = orientation(a, b, d, band);
  const int o3 = orientation(c, d, a, band);
  const int o4 = orientation(c, d, b, band);
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentContact::proper_crossing;
  if ((o1 == 0 && within_box(c, a, b, band)) || (o2 == 0 && within_box(d, a, b, band)) ||
      (o3 == 0 && within_box(a, c, d, band)) || (o4 == 0 && within_box(b, c, d, band)))
    return SegmentContact::touching;
  return SegmentContact::none;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double segment_distance(Point a, Point b, Point c, Point d) {
  if (segment_contact(a, b, c, d, 0.0) == SegmentContact::proper_crossing) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

double a_max(int r) {
  if (r < 3) throw Error("a_max needs r >= 3");
  return r / 4.0 / std::tan(std::numbers::pi / r);
}

double a_max_ratio(int k) { return a_max(k) / a_max(3); }

double a_min(int r) {
  if (r >= 3 && r % 2 == 1) return std::numbers::sqrt3 / 4.0;
  if (r >= 4 && r % 2 == 0) return 0.0;
  return -1.0;
}

double signed_area(std::span<const Point> polygon) {
  double twice = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(polygon[i], polygon[(i + 1) % n]);
  return twice / 2.0;
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<Point> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

double hull_perimeter(std::span<const Point> points) {
  if (points.size() < 3) throw Error("hull_perimeter needs at least three points");
  const auto hull = convex_hull(points);
  double total = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) total += distance(hull[i], hull[(i + 1) % hull.size()]);
  return total;
}

bool is_convex(std::span<const Point> polygon, double band) {
  const std::size_t n = polygon.size();
  if (n < 3) throw Error("is_convex needs at least three vertices");
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int o = orientation(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n], band);
    if (o == 0) continue;
    if (sign == 0) sign = o;
    else if (o != sign) return false;
  }
  return true;
}

std::vector<Point> unit_circle_intersections(Point a, Point b) {
  const double d = distance(a, b);
  if (d > 2.0 || d == 0.0) return {};
  const Point mid = 0.5 * (a + b);
  const Point u = (1.0 / d) * (b - a);
  const Point left{-u.y, u.x};
  const double h = std::sqrt(std::max(0.0, 1.0 - d * d / 4.0));
  return {mid + h * left, mid - h * left};
}

}  // namespace matchstick
