#include "equifacet/polynomial.hpp"

#include "equifacet/errors.hpp"

#include <cmath>
#include <sstream>

namespace equifacet {

Polynomial::Polynomial(std::vector<double> ascending) : c_(std::move(ascending)) {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator()(double x) const {
    double v = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Polynomial Polynomial::derivative() const {
    std::vector<double> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<double>(i));
    return Polynomial(std::move(d));
}

double find_root(const Polynomial& p, double lo, double hi, double tol) {
    if (lo > hi) std::swap(lo, hi);
    double flo = p(lo);
    double fhi = p(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0) == (fhi < 0)) {
        std::ostringstream msg;
        msg << "no sign change on [" << lo << ", " << hi << "]: p(lo)=" << flo << ", p(hi)=" << fhi;
        throw NoSignChange(msg.str());
    }
    const Polynomial dp = p.derivative();
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 300; ++it) {
        double fx = p(x);
        if (fx == 0.0) return x;
        if ((fx < 0) == (flo < 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        double d = dp(x);
        double next = d != 0.0 ? x - fx / d : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 4e-16 * std::max(1.0, std::abs(x))) {
            x = next;
            break;
        }
        x = next;
    }
    if (std::abs(p(x)) > tol) {
        std::ostringstream msg;
        msg << "root refinement stalled at x=" << x << " with |p(x)|=" << std::abs(p(x)) << " > " << tol;
        throw Error(msg.str());
    }
    return x;
}

std::vector<double> bracket_roots(const Polynomial& p, double lo, double hi, int samples, double tol) {
    std::vector<double> roots;
    double step = (hi - lo) / samples;
    double x0 = lo;
    double f0 = p(x0);
    if (f0 == 0.0) roots.push_back(x0);
    for (int i = 1; i <= samples; ++i) {
        double x1 = i == samples ? hi : lo + step * i;
        double f1 = p(x1);
        if (f1 == 0.0) {
            roots.push_back(x1);
        } else if (f0 != 0.0 && (f0 < 0) != (f1 < 0)) {
            roots.push_back(find_root(p, x0, x1, tol));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

}  // namespace equifacet
