#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace matchstick {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Band inside which an orientation determinant is treated as zero.
inline constexpr double kCollinearBand = 1e-12;

/// Sign of the orientation determinant of (a, b, c): +1 left turn,
/// -1 right turn, 0 inside the collinearity band.
int orientation(Point a, Point b, Point c, double band = kCollinearBand);

enum class SegmentContact { none, proper_crossing, touching };

/// Contact between closed segments ab and cd.
SegmentContact segment_contact(Point a, Point b, Point c, Point d, double band = kCollinearBand);

double point_segment_distance(Point p, Point a, Point b);
double segment_distance(Point a, Point b, Point c, Point d);

/// Largest area of an equilateral unit-side r-gon: (r/4) cot(pi/r).
/// Throws `Error` for r < 3.
double a_max(int r);

/// a_max(k) / a_max(3): how many unit triangles fit into a unit k-gon.
double a_max_ratio(int k);

/// Least area of an equilateral unit-side r-gon: sqrt(3)/4 for odd r >= 3,
/// 0 for even r >= 4, and -1 when no such polygon exists.
double a_min(int r);

/// Shoelace area, positive for counter-clockwise polygons.
double signed_area(std::span<const Point> polygon);

/// Andrew's monotone chain; counter-clockwise, collinear points dropped.
std::vector<Point> convex_hull(std::span<const Point> points);

/// Throws `Error` for fewer than three points.
double hull_perimeter(std::span<const Point> points);

/// Uniform turning direction, ignoring turns inside `band`. Throws `Error`
/// for fewer than three vertices.
bool is_convex(std::span<const Point> polygon, double band = 1e-12);

/// The up-to-two points at unit distance from both a and b, the one to the
/// left of a->b first. Empty when |ab| > 2.
std::vector<Point> unit_circle_intersections(Point a, Point b);

}  // namespace matchstick
