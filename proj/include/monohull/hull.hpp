#ifndef MONOHULL_HULL_HPP
#define MONOHULL_HULL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monohull/core.hpp"

namespace monohull {

enum class XnChoice { Lower, Upper };

// Extreme point of the hull. For i < n, x_i is 0 or b_i; bit i-1 of t_mask
// marks x_i = b_i. x_n is a_n (Lower) or b_n (Upper), and y is the product
// of all coordinates, so y != 0 exactly when t_mask is full and x_n > 0.
struct Vertex {
  std::vector<Rational> x;
  Rational y;
  std::uint64_t t_mask = 0;
  XnChoice xn = XnChoice::Lower;
};

// All 2^n extreme points, ordered by (t_mask ascending, Lower before Upper).
std::vector<Vertex> vertices(const Instance& inst);

// Row family tags. The full-hull description emits, in order:
//   under_a, under_b    the two y-lower rows (one each)
//   over_a[i]           y-upper rows coupling x_i and x_n, i in {1..n-1}
//   over_b[i]           y-upper rows on x_i alone, i in {1..n-1}
//   y_lb                y >= 0
//   x_ub[i]             x_i <= b_i, i in {1..n}
//   xn_lb               x_n >= a_n
// The zero-lower-bound system and the lifted prism-pyramid system reuse
// x_ub / xn_lb / y_lb and add corner_cut, x_lb_lifted[i], xn_ub_lifted.
namespace family {
inline constexpr const char* under_a = "under_a";
inline constexpr const char* under_b = "under_b";
inline constexpr const char* over_a = "over_a";
inline constexpr const char* over_b = "over_b";
inline constexpr const char* y_lb = "y_lb";
inline constexpr const char* x_ub = "x_ub";
inline constexpr const char* xn_lb = "xn_lb";
inline constexpr const char* corner_cut = "corner_cut";
inline constexpr const char* x_lb_lifted = "x_lb_lifted";
inline constexpr const char* xn_ub_lifted = "xn_ub_lifted";
// McCormick rows, tagged by the bounds forming the slopes on (x_1, x_2).
inline constexpr const char* under_aa = "under_aa";
inline constexpr const char* over_ba = "over_ba";
inline constexpr const char* over_ab = "over_ab";
inline constexpr const char* under_bb = "under_bb";
}  // namespace family

// One halfspace  coef_y * y + sum_i coef_x[i] * x_i >= rhs.
// Rows keep the exact scaling they are constructed with; nothing is
// normalized away.
struct LinearInequality {
  Rational coef_y;
  std::vector<Rational> coef_x;
  Rational rhs;
  std::string family;
  int index = 0;  // 1-based member index within a per-variable family, else 0
};

enum class SystemKind { Cn1, Cn0, McCormick22, LiftedQ };

// Ordered H-representation together with the box it was generated from.
struct InequalitySystem {
  int n = 0;
  SystemKind kind = SystemKind::Cn1;
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  std::vector<LinearInequality> rows;
};

struct Point {
  std::vector<Rational> x;
  Rational y;
};

Point to_point(const Vertex& v);

// Full hull description for the one-positive-lower-bound box; 3n+2 rows.
// a_n = 0 is allowed: the system stays valid, though no minimality claim
// is made there.
InequalitySystem facet_system_cn1(const Instance& inst);

// Pyramid description for the all-zero-lower-bound box (a_n is ignored);
// 2n+2 rows.
InequalitySystem facet_system_cn0(const Instance& inst);

// The four bilinear-envelope rows over [a1,b1] x [a2,b2], general lower
// bounds allowed (0 <= a_i < b_i).
InequalitySystem facet_system_mccormick(const std::array<Rational, 2>& a,
                                        const std::array<Rational, 2>& b);

// Exact slack of every row at p: coef_y*y + sum coef_x*x - rhs.
std::vector<Rational> evaluate(const InequalitySystem& sys, const Point& p);

enum class Verdict { Inside, Boundary, Outside };

struct MembershipResult {
  Verdict verdict = Verdict::Inside;
  std::vector<int> violated;  // 0-based positions into sys.rows
};

// Inside iff all slacks > 0; boundary iff all >= 0 with at least one zero;
// otherwise outside, with the violated rows as a separation certificate.
// Zero means exactly zero; there is no epsilon.
MembershipResult membership(const InequalitySystem& sys, const Point& p);

// Number of affinely independent vertices with zero slack on the given row
// (0-based). Purely diagnostic: n+1 of them mean the row supports a facet.
int tight_vertex_rank(const InequalitySystem& sys, int row,
                      const std::vector<Vertex>& verts);

std::string to_string(SystemKind kind);
std::string to_string(XnChoice choice);
std::string to_string(Verdict verdict);

}  // namespace monohull

#endif  // MONOHULL_HULL_HPP
