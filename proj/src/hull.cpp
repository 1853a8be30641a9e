#include "monohull/hull.hpp"

#include <algorithm>

namespace monohull {

namespace {

Vertex make_vertex(const Instance& inst, std::uint64_t mask, XnChoice xn) {
  const int n = inst.n();
  Vertex v;
  v.t_mask = mask;
  v.xn = xn;
  v.x.resize(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i)
    v.x[static_cast<std::size_t>(i) - 1] =
        (mask >> (i - 1)) & 1 ? inst.b_at(i) : Rational(0);
  v.x.back() = (xn == XnChoice::Upper) ? inst.b_at(n) : inst.a_n();
  v.y = 1;
  for (const Rational& xi : v.x) v.y *= xi;
  return v;
}

LinearInequality make_row(int n, const char* tag, int index) {
  LinearInequality r;
  r.family = tag;
  r.index = index;
  r.coef_y = 0;
  r.coef_x.assign(static_cast<std::size_t>(n), Rational(0));
  r.rhs = 0;
  return r;
}

}  // namespace

Point to_point(const Vertex& v) { return Point{v.x, v.y}; }

std::vector<Vertex> vertices(const Instance& inst) {
  const int n = inst.n();
  if (n > 30)
    throw std::invalid_argument("vertex enumeration supports n <= 30");
  std::vector<Vertex> out;
  out.reserve(std::size_t(1) << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
    out.push_back(make_vertex(inst, mask, XnChoice::Lower));
    out.push_back(make_vertex(inst, mask, XnChoice::Upper));
  }
  return out;
}

InequalitySystem facet_system_cn1(const Instance& inst) {
  const int n = inst.n();
  InequalitySystem sys;
  sys.n = n;
  sys.kind = SystemKind::Cn1;
  sys.lower.assign(static_cast<std::size_t>(n), Rational(0));
  sys.lower.back() = inst.a_n();
  sys.upper = inst.b();

  // under_a:  y - sum_{i<n} (a_n prod_{j!=i,j<n} b_j) x_i >= -(n-2) a_n Pi
  {
    LinearInequality r = make_row(n, family::under_a, 0);
    r.coef_y = 1;
    for (int i = 1; i < n; ++i)
      r.coef_x[static_cast<std::size_t>(i) - 1] =
          -(inst.a_n() * pi_product(inst, {i, n}));
    r.rhs = -(Rational(n - 2) * inst.a_n() * inst.pi());
    sys.rows.push_back(std::move(r));
  }
  // under_b:  y - sum_{i<=n} (prod_{j!=i} b_j) x_i >= -(n-1) prod_j b_j
  {
    LinearInequality r = make_row(n, family::under_b, 0);
    r.coef_y = 1;
    for (int i = 1; i <= n; ++i)
      r.coef_x[static_cast<std::size_t>(i) - 1] = -pi_product(inst, {i});
    r.rhs = -(Rational(n - 1) * pi_product(inst, {}));
    sys.rows.push_back(std::move(r));
  }
  // over_a[i]:  -y + (a_n prod_{j!=i,j<n} b_j) x_i + Pi x_n >= a_n Pi
  for (int i = 1; i < n; ++i) {
    LinearInequality r = make_row(n, family::over_a, i);
    r.coef_y = -1;
    r.coef_x[static_cast<std::size_t>(i) - 1] =
        inst.a_n() * pi_product(inst, {i, n});
    r.coef_x.back() = inst.pi();
    r.rhs = inst.a_n() * inst.pi();
    sys.rows.push_back(std::move(r));
  }
  // over_b[i]:  -y + (prod_{j!=i} b_j) x_i >= 0
  for (int i = 1; i < n; ++i) {
    LinearInequality r = make_row(n, family::over_b, i);
    r.coef_y = -1;
    r.coef_x[static_cast<std::size_t>(i) - 1] = pi_product(inst, {i});
    sys.rows.push_back(std::move(r));
  }
  // y_lb:  y >= 0
  {
    LinearInequality r = make_row(n, family::y_lb, 0);
    r.coef_y = 1;
    sys.rows.push_back(std::move(r));
  }
  // x_ub[i]:  -x_i >= -b_i
  for (int i = 1; i <= n; ++i) {
    LinearInequality r = make_row(n, family::x_ub, i);
    r.coef_x[static_cast<std::size_t>(i) - 1] = -1;
    r.rhs = -inst.b_at(i);
    sys.rows.push_back(std::move(r));
  }
  // xn_lb:  x_n >= a_n
  {
    LinearInequality r = make_row(n, family::xn_lb, 0);
    r.coef_x.back() = 1;
    r.rhs = inst.a_n();
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

InequalitySystem facet_system_cn0(const Instance& inst) {
  const int n = inst.n();
  InequalitySystem sys;
  sys.n = n;
  sys.kind = SystemKind::Cn0;
  sys.lower.assign(static_cast<std::size_t>(n), Rational(0));
  sys.upper = inst.b();

  {
    LinearInequality r = make_row(n, family::y_lb, 0);
    r.coef_y = 1;
    sys.rows.push_back(std::move(r));
  }
  for (int i = 1; i <= n; ++i) {
    LinearInequality r = make_row(n, family::x_ub, i);
    r.coef_x[static_cast<std::size_t>(i) - 1] = -1;
    r.rhs = -inst.b_at(i);
    sys.rows.push_back(std::move(r));
  }
  // corner_cut:  y - sum_i (prod_{j!=i} b_j) x_i >= -(n-1) prod_j b_j,
  // the cut on the all-upper corner lifted through the apex.
  {
    LinearInequality r = make_row(n, family::corner_cut, 0);
    r.coef_y = 1;
    for (int i = 1; i <= n; ++i)
      r.coef_x[static_cast<std::size_t>(i) - 1] = -pi_product(inst, {i});
    r.rhs = -(Rational(n - 1) * pi_product(inst, {}));
    sys.rows.push_back(std::move(r));
  }
  // x_lb_lifted[i]:  x_i - y / prod_{j!=i} b_j >= 0
  for (int i = 1; i <= n; ++i) {
    LinearInequality r = make_row(n, family::x_lb_lifted, i);
    r.coef_y = -(Rational(1) / pi_product(inst, {i}));
    r.coef_x[static_cast<std::size_t>(i) - 1] = 1;
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

InequalitySystem facet_system_mccormick(const std::array<Rational, 2>& a,
                                        const std::array<Rational, 2>& b) {
  for (int i = 0; i < 2; ++i) {
    if (a[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("lower bounds must be nonnegative");
    if (a[static_cast<std::size_t>(i)] >= b[static_cast<std::size_t>(i)])
      throw std::invalid_argument("lower bound must be strictly below upper");
  }
  InequalitySystem sys;
  sys.n = 2;
  sys.kind = SystemKind::McCormick22;
  sys.lower = {a[0], a[1]};
  sys.upper = {b[0], b[1]};

  LinearInequality r = make_row(2, family::under_aa, 0);
  r.coef_y = 1;
  r.coef_x = {-a[1], -a[0]};
  r.rhs = -(a[0] * a[1]);
  sys.rows.push_back(r);

  r = make_row(2, family::over_ba, 0);
  r.coef_y = -1;
  r.coef_x = {b[1], a[0]};
  r.rhs = a[0] * b[1];
  sys.rows.push_back(r);

  r = make_row(2, family::over_ab, 0);
  r.coef_y = -1;
  r.coef_x = {a[1], b[0]};
  r.rhs = b[0] * a[1];
  sys.rows.push_back(r);

  r = make_row(2, family::under_bb, 0);
  r.coef_y = 1;
  r.coef_x = {-b[1], -b[0]};
  r.rhs = -(b[0] * b[1]);
  sys.rows.push_back(r);
  return sys;
}

std::vector<Rational> evaluate(const InequalitySystem& sys, const Point& p) {
  if (static_cast<int>(p.x.size()) != sys.n)
    throw std::invalid_argument("point dimension does not match the system");
  std::vector<Rational> slacks;
  slacks.reserve(sys.rows.size());
  for (const LinearInequality& row : sys.rows) {
    Rational s = row.coef_y * p.y - row.rhs;
    for (std::size_t j = 0; j < row.coef_x.size(); ++j)
      if (row.coef_x[j] != 0) s += row.coef_x[j] * p.x[j];
    slacks.push_back(std::move(s));
  }
  return slacks;
}

MembershipResult membership(const InequalitySystem& sys, const Point& p) {
  MembershipResult result;
  bool tight = false;
  const std::vector<Rational> slacks = evaluate(sys, p);
  for (std::size_t r = 0; r < slacks.size(); ++r) {
    if (slacks[r] < 0)
      result.violated.push_back(static_cast<int>(r));
    else if (slacks[r] == 0)
      tight = true;
  }
  if (!result.violated.empty())
    result.verdict = Verdict::Outside;
  else
    result.verdict = tight ? Verdict::Boundary : Verdict::Inside;
  return result;
}

int tight_vertex_rank(const InequalitySystem& sys, int row,
                      const std::vector<Vertex>& verts) {
  if (row < 0 || row >= static_cast<int>(sys.rows.size()))
    throw std::invalid_argument("row index out of range");
  std::vector<std::vector<Rational>> tight;
  for (const Vertex& v : verts) {
    const std::vector<Rational> slacks = evaluate(sys, to_point(v));
    if (slacks[static_cast<std::size_t>(row)] == 0) {
      std::vector<Rational> pt = v.x;
      pt.push_back(v.y);
      tight.push_back(std::move(pt));
    }
  }
  if (tight.empty()) return 0;

  // Affine rank: row-reduce the differences against the first tight point.
  const std::size_t dim = tight.front().size();
  std::vector<std::vector<Rational>> mat;
  for (std::size_t i = 1; i < tight.size(); ++i) {
    std::vector<Rational> d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = tight[i][j] - tight[0][j];
    mat.push_back(std::move(d));
  }
  int rank = 0;
  std::size_t col = 0;
  for (std::size_t r = 0; r < mat.size() && col < dim; ++col) {
    std::size_t pivot = r;
    while (pivot < mat.size() && mat[pivot][col] == 0) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[r], mat[pivot]);
    for (std::size_t rr = r + 1; rr < mat.size(); ++rr) {
      if (mat[rr][col] == 0) continue;
      const Rational f = mat[rr][col] / mat[r][col];
      for (std::size_t j = col; j < dim; ++j) mat[rr][j] -= f * mat[r][j];
    }
    ++r;
    ++rank;
  }
  return rank + 1;
}

}  // namespace monohull
