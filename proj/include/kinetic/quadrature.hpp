#pragma once

#include <vector>

namespace kinetic {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// `panels` equal panels on [a, b], each carrying an n-point Gauss-Legendre rule.
QuadratureRule composite_gauss_legendre(int panels, int n, double a, double b);

}  // namespace kinetic
