#ifndef MONOHULL_CORE_HPP
#define MONOHULL_CORE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace monohull {

// Everything downstream of the Monte Carlo sampler is exact: hull systems,
// optimality certificates, and volumes are rational whenever the inputs are,
// so equality checks are real equalities, not tolerance tests.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Requested operation needs data outside its supported domain (e.g. a dual
// certificate for a_n = 0, where the constructions divide by a_n).
struct UnsupportedError : std::domain_error {
  using std::domain_error::domain_error;
};

// A selected construction's precondition failed. This is an implementation
// bug, never a legitimate runtime state.
struct InternalContradictionError : std::logic_error {
  using std::logic_error::logic_error;
};

Integer factorial(unsigned m);

// Accepts "p/q", "p", and decimal strings ("2.5" -> 5/2), all converted
// exactly. Throws std::invalid_argument on anything else, including a zero
// denominator.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline Rational positive_part(const Rational& r) {
  return r > 0 ? r : Rational(0);
}
inline Rational negative_part(const Rational& r) {
  return r < 0 ? Rational(-r) : Rational(0);
}

// Problem data: x_i in [0, b_i] for i in {1..n-1}, x_n in [a_n, b_n], and
// y = x_1 * ... * x_n. Only the last variable may have a positive lower
// bound; a_n = 0 is accepted and flagged degenerate (the all-zero regime).
//
// Indices are 1-based across the whole public API, matching the usual
// mathematical convention; a 1-based index i lives at vector slot i-1.
class Instance {
 public:
  Instance(int n, Rational a_n, std::vector<Rational> b);

  int n() const { return n_; }
  const Rational& a_n() const { return a_n_; }
  const std::vector<Rational>& b() const { return b_; }
  const Rational& b_at(int i) const;  // 1-based, i in {1..n}

  // prod of b_i over i in {1..n-1}; always > 0.
  const Rational& pi() const { return pi_; }

  bool degenerate() const { return a_n_ == 0; }

 private:
  int n_;
  Rational a_n_;
  std::vector<Rational> b_;
  Rational pi_;
};

// prod of b_j over j in {1..n} \ excluded; the empty product is 1.
// Every excluded index must lie in {1..n}.
Rational pi_product(const Instance& inst, const std::vector<int>& excluded);

// Sign split of objective coefficients over the first n-1 variables,
// with the paired sums S+ and S-.
struct IndexSets {
  std::vector<int> plus;   // indices i < n with c_i >= 0, ascending
  std::vector<int> minus;  // indices i < n with c_i < 0, ascending
  Rational s_plus;         // sum of c_i b_i over plus (>= 0)
  Rational s_minus;        // sum of c_i b_i over minus (<= 0)
  Rational pi;             // prod of b_i over i < n
  bool case_a = false;     // true iff minus is empty
  int k = 0;  // case A only: smallest index minimizing c_i b_i over plus
};

}  // namespace monohull

#endif  // MONOHULL_CORE_HPP
