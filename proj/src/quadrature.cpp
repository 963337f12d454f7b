#include "kinetic/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <map>
#include <mutex>

#include "kinetic/error.hpp"

namespace kinetic {

namespace {

// Nodes and weights on [-1, 1], ascending.
const QuadratureRule& reference_rule(int n) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // legendre_p_zeros returns the non-negative zeros in ascending order.
  const auto zeros = boost::math::legendre_p_zeros<double>(n);
  QuadratureRule r;
  auto weight = [n](double x) {
    const double d = boost::math::legendre_p_prime(n, x);
    return 2.0 / ((1.0 - x * x) * d * d);
  };
  for (auto it2 = zeros.rbegin(); it2 != zeros.rend(); ++it2) {
    if (*it2 == 0.0) continue;
    r.nodes.push_back(-*it2);
    r.weights.push_back(weight(*it2));
  }
  for (double x : zeros) {
    r.nodes.push_back(x);
    r.weights.push_back(weight(x));
  }
  return cache.emplace(n, std::move(r)).first->second;
}

}  // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw ValidationError("Gauss-Legendre rule needs at least one node");
  const QuadratureRule& ref = reference_rule(n);
  QuadratureRule r;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    r.nodes.push_back(mid + half * ref.nodes[i]);
    r.weights.push_back(half * ref.weights[i]);
  }
  return r;
}

QuadratureRule composite_gauss_legendre(int panels, int n, double a, double b) {
  if (panels < 1) throw ValidationError("composite rule needs at least one panel");
  QuadratureRule r;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const QuadratureRule piece = gauss_legendre(n, a + p * width, a + (p + 1) * width);
    r.nodes.insert(r.nodes.end(), piece.nodes.begin(), piece.nodes.end());
    r.weights.insert(r.weights.end(), piece.weights.begin(), piece.weights.end());
  }
  return r;
}

}  // namespace kinetic
