#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "quermass/errors.hpp"
#include "quermass/sphere.hpp"

namespace quermass {

constexpr int kMaxPolyDegree = 8;

/// Multivariate polynomial in d ambient coordinates, stored as a monomial
/// list. Restricted to the unit sphere it plays the role of a smooth
/// sphere function with exact first and second tangential derivatives.
class Polynomial {
  public:
    struct Monomial {
        std::vector<int> exponents;  // length d, entries >= 0
        double coeff;
    };

    Polynomial(int dim, std::vector<Monomial> terms);

    /// The zero polynomial in `dim` variables.
    static Polynomial zero(int dim);
    /// The constant polynomial c.
    static Polynomial constant(int dim, double c);
    /// The linear form <x, a>.
    static Polynomial linear(const Vec& a);

    int dim() const { return dim_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    int total_degree() const;

    double eval(const Vec& x) const;
    Vec gradient(const Vec& x) const;
    Eigen::MatrixXd hessian(const Vec& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(double s) const;

    /// Parity split by monomial total degree; even + odd == *this exactly.
    std::pair<Polynomial, Polynomial> even_odd_split() const;

  private:
    int dim_;
    std::vector<Monomial> terms_;
};

/// d/dpsi f(xi sin psi + eta cos psi) at psi = 0, i.e. <grad f(eta), xi>.
/// Requires eta _|_ pole.
double latitude_derivative(const Polynomial& f, const Direction& pole, const Direction& eta);

}  // namespace quermass
