#pragma once

#include <vector>

namespace equifacet {

// Real polynomial, coefficients in ascending degree. Trailing zero
// coefficients are trimmed, so the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> ascending);

    double operator()(double x) const;
    Polynomial derivative() const;
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coefficients() const { return c_; }

private:
    std::vector<double> c_;
};

// Bracketed root by bisection with Newton refinement. Throws NoSignChange
// unless p(lo) and p(hi) differ in sign (an endpoint root is returned as is).
double find_root(const Polynomial& p, double lo, double hi, double tol = 1e-12);

// All roots in [lo, hi] located by sign changes on a uniform grid.
std::vector<double> bracket_roots(const Polynomial& p, double lo, double hi, int samples = 1000, double tol = 1e-12);

}  // namespace equifacet
