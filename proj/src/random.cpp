#include "monohull/random.hpp"

namespace monohull {

Rational random_rational(Rng& rng, long lo, long hi, int max_den) {
  if (lo > hi || max_den < 1) throw std::invalid_argument("bad range");
  std::uniform_int_distribution<int> den_dist(1, max_den);
  const int q = den_dist(rng);
  std::uniform_int_distribution<long long> num_dist(
      static_cast<long long>(lo) * q, static_cast<long long>(hi) * q);
  return Rational(Integer(num_dist(rng)), Integer(q));
}

Instance random_instance(Rng& rng, int n, bool zero_an) {
  std::uniform_int_distribution<int> num_dist(1, 12);
  std::uniform_int_distribution<int> den_dist(1, 4);
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    b.emplace_back(Integer(num_dist(rng)), Integer(den_dist(rng)));

  Rational a_n = 0;
  if (!zero_an) {
    std::uniform_int_distribution<int> split_den(2, 9);
    const int s = split_den(rng);
    std::uniform_int_distribution<int> split_num(1, s - 1);
    a_n = b.back() * Rational(Integer(split_num(rng)), Integer(s));
  }
  return Instance(n, std::move(a_n), std::move(b));
}

Objective random_objective(Rng& rng, const Instance& inst, long max_abs) {
  Objective obj;
  obj.c0 = random_rational(rng, -max_abs, max_abs, 6);
  obj.c.reserve(static_cast<std::size_t>(inst.n()));
  for (int i = 0; i < inst.n(); ++i)
    obj.c.push_back(random_rational(rng, -max_abs, max_abs, 6));
  return obj;
}

}  // namespace monohull
