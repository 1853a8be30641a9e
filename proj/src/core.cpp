#include "monohull/core.hpp"

#include <algorithm>
#include <cctype>

namespace monohull {

namespace {

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
}

[[noreturn]] void bad_literal(const std::string& text) {
  throw std::invalid_argument("not a rational literal: \"" + text + "\"");
}

}  // namespace

Integer factorial(unsigned m) {
  Integer result = 1;
  for (unsigned i = 2; i <= m; ++i) result *= i;
  return result;
}

Rational parse_rational(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    pos = 1;
  }
  const std::string body = s.substr(pos);
  if (body.empty()) bad_literal(text);

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    const Integer q(den);
    if (q == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    value = Rational(Integer(num), q);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_literal(text);
    if (!whole.empty() && !all_digits(whole)) bad_literal(text);
    if (!frac.empty() && !all_digits(frac)) bad_literal(text);
    Integer scaled(whole.empty() ? "0" : whole);
    Integer den = 1;
    for (char ch : frac) {
      scaled = scaled * 10 + (ch - '0');
      den *= 10;
    }
    value = Rational(scaled, den);
  } else {
    if (!all_digits(body)) bad_literal(text);
    value = Rational(Integer(body));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Instance::Instance(int n, Rational a_n, std::vector<Rational> b)
    : n_(n), a_n_(std::move(a_n)), b_(std::move(b)) {
  if (n_ < 2) throw std::invalid_argument("instance requires n >= 2");
  if (static_cast<int>(b_.size()) != n_)
    throw std::invalid_argument("expected exactly n upper bounds");
  for (int i = 0; i < n_; ++i) {
    if (b_[i] <= 0)
      throw std::invalid_argument("upper bound b" + std::to_string(i + 1) +
                                  " must be positive");
  }
  if (a_n_ < 0) throw std::invalid_argument("a_n must be nonnegative");
  if (a_n_ >= b_.back())
    throw std::invalid_argument("a_n must be strictly below b_n");
  pi_ = 1;
  for (int i = 0; i + 1 < n_; ++i) pi_ *= b_[i];
}

const Rational& Instance::b_at(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("index out of range");
  return b_[static_cast<std::size_t>(i) - 1];
}

Rational pi_product(const Instance& inst, const std::vector<int>& excluded) {
  std::vector<char> skip(static_cast<std::size_t>(inst.n()) + 1, 0);
  for (int i : excluded) {
    if (i < 1 || i > inst.n())
      throw std::invalid_argument("excluded index out of range");
    skip[static_cast<std::size_t>(i)] = 1;
  }
  Rational prod = 1;
  for (int i = 1; i <= inst.n(); ++i)
    if (!skip[static_cast<std::size_t>(i)]) prod *= inst.b_at(i);
  return prod;
}

}  // namespace monohull
