#include "quermass/polynomial.hpp"

#include <cmath>
#include <numeric>

namespace quermass {

namespace {

double power(double x, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= x;
    return p;
}

int monomial_degree(const Polynomial::Monomial& m) {
    return std::accumulate(m.exponents.begin(), m.exponents.end(), 0);
}

}  // namespace

Polynomial::Polynomial(int dim, std::vector<Monomial> terms) : dim_(dim), terms_(std::move(terms)) {
    if (dim < 1) throw InputError("Polynomial: dimension must be positive");
    for (const Monomial& m : terms_) {
        if (static_cast<int>(m.exponents.size()) != dim)
            throw InputError("Polynomial: monomial exponent vector has wrong length");
        int deg = 0;
        for (int e : m.exponents) {
            if (e < 0) throw InputError("Polynomial: negative exponent");
            deg += e;
        }
        if (deg > kMaxPolyDegree)
            throw InputError("Polynomial: total degree exceeds " + std::to_string(kMaxPolyDegree));
    }
}

Polynomial Polynomial::zero(int dim) { return Polynomial(dim, {}); }

Polynomial Polynomial::constant(int dim, double c) {
    return Polynomial(dim, {Monomial{std::vector<int>(dim, 0), c}});
}

Polynomial Polynomial::linear(const Vec& a) {
    std::vector<Monomial> terms;
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        std::vector<int> e(a.size(), 0);
        e[i] = 1;
        terms.push_back(Monomial{std::move(e), a[i]});
    }
    return Polynomial(static_cast<int>(a.size()), std::move(terms));
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const Monomial& m : terms_) deg = std::max(deg, monomial_degree(m));
    return deg;
}

double Polynomial::eval(const Vec& x) const {
    double acc = 0.0;
    for (const Monomial& m : terms_) {
        double v = m.coeff;
        for (int i = 0; i < dim_; ++i) v *= power(x[i], m.exponents[i]);
        acc += v;
    }
    return acc;
}

Vec Polynomial::gradient(const Vec& x) const {
    Vec g = Vec::Zero(dim_);
    for (const Monomial& m : terms_) {
        for (int i = 0; i < dim_; ++i) {
            if (m.exponents[i] == 0) continue;
            double v = m.coeff * m.exponents[i] * power(x[i], m.exponents[i] - 1);
            for (int j = 0; j < dim_; ++j)
                if (j != i) v *= power(x[j], m.exponents[j]);
            g[i] += v;
        }
    }
    return g;
}

Eigen::MatrixXd Polynomial::hessian(const Vec& x) const {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim_, dim_);
    for (const Monomial& m : terms_) {
        for (int i = 0; i < dim_; ++i) {
            if (m.exponents[i] == 0) continue;
            // diagonal
            if (m.exponents[i] >= 2) {
                double v = m.coeff * m.exponents[i] * (m.exponents[i] - 1) *
                           power(x[i], m.exponents[i] - 2);
                for (int j = 0; j < dim_; ++j)
                    if (j != i) v *= power(x[j], m.exponents[j]);
                h(i, i) += v;
            }
            // off-diagonal
            for (int j = i + 1; j < dim_; ++j) {
                if (m.exponents[j] == 0) continue;
                double v = m.coeff * m.exponents[i] * m.exponents[j] *
                           power(x[i], m.exponents[i] - 1) * power(x[j], m.exponents[j] - 1);
                for (int k = 0; k < dim_; ++k)
                    if (k != i && k != j) v *= power(x[k], m.exponents[k]);
                h(i, j) += v;
                h(j, i) += v;
            }
        }
    }
    return h;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (other.dim_ != dim_) throw InputError("Polynomial: dimension mismatch in +");
    std::vector<Monomial> terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return Polynomial(dim_, std::move(terms));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<Monomial> terms = terms_;
    for (Monomial& m : terms) m.coeff *= s;
    return Polynomial(dim_, std::move(terms));
}

std::pair<Polynomial, Polynomial> Polynomial::even_odd_split() const {
    std::vector<Monomial> even, odd;
    for (const Monomial& m : terms_)
        (monomial_degree(m) % 2 == 0 ? even : odd).push_back(m);
    return {Polynomial(dim_, std::move(even)), Polynomial(dim_, std::move(odd))};
}

double latitude_derivative(const Polynomial& f, const Direction& pole, const Direction& eta) {
    if (f.dim() != pole.dim() || pole.dim() != eta.dim())
        throw InputError("latitude_derivative: dimension mismatch");
    if (std::abs(pole.vec().dot(eta.vec())) > 1e-9)
        throw InputError("latitude_derivative: eta not orthogonal to pole");
    // The psi-curve passes through eta with velocity xi, so the derivative
    // is the ambient gradient contracted with the pole.
    return f.gradient(eta.vec()).dot(pole.vec());
}

}  // namespace quermass
