#include "gsc/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace gsc {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Rational>& numbers() {
  static std::vector<Rational> b;
  return b;
}

std::vector<Rational>& scaled_even() {
  static std::vector<Rational> s;
  return s;
}

}  // namespace

BernoulliCache& BernoulliCache::instance() {
  static BernoulliCache cache;
  return cache;
}

BernoulliCache::BernoulliCache() {
  std::lock_guard lock(cache_mutex());
  numbers() = {Rational(1), Rational(-1, 2)};
}

void BernoulliCache::extend_to(std::size_t n) {
  auto& b = numbers();
  while (b.size() <= n) {
    std::size_t m = b.size();
    if (m % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, odd j >= 3 vanish.
    Integer binom(1);
    Rational acc(0);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == 1 || j % 2 == 0) acc += Rational(binom) * b[j];
      binom = binom * Integer(m + 1 - j) / Integer(j + 1);
    }
    b.push_back(-acc / Rational(Integer(m + 1)));
  }
}

Rational BernoulliCache::get(std::size_t n) {
  std::lock_guard lock(cache_mutex());
  extend_to(n);
  return numbers()[n];
}

Rational BernoulliCache::even_over_factorial(std::size_t j) {
  std::lock_guard lock(cache_mutex());
  auto& s = scaled_even();
  if (s.size() <= j) {
    extend_to(2 * j);
    Integer fact(1);
    for (std::size_t i = 2; i <= 2 * s.size(); ++i) fact *= i;
    for (std::size_t idx = s.size(); idx <= j; ++idx) {
      s.push_back(numbers()[2 * idx] / Rational(fact));
      fact *= Integer(2 * idx + 1) * Integer(2 * idx + 2);
    }
  }
  return s[j];
}

std::size_t BernoulliCache::size() const {
  std::lock_guard lock(cache_mutex());
  return numbers().size();
}

}  // namespace gsc
