#include "fpquad/integrand.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "fpquad/errors.hpp"

namespace fpquad {

void check_problem(const FpProblem& p) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw PreconditionError("alpha must lie strictly in (0,1)");
    if (p.n < 1)
        throw PreconditionError("n must be a positive integer");
    if (!p.f.eval)
        throw PreconditionError("integrand has no evaluation function");
}

Integrand integrand_one() {
    Integrand f;
    f.eval = [](Cplx) { return Cplx(1.0, 0.0); };
    f.taylor = [](int k) { return k == 0 ? 1.0 : 0.0; };
    f.real_on_real = true;
    return f;
}

Integrand integrand_exp() {
    Integrand f;
    f.eval = [](Cplx z) { return std::exp(z); };
    f.taylor = [](int k) {
        double c = 1.0;
        for (int i = 1; i <= k; ++i)
            c /= i;
        return c; // 1/k!
    };
    f.real_on_real = true;
    return f;
}

Integrand integrand_rational1px2() {
    Integrand f;
    f.eval = [](Cplx z) { return 1.0 / (1.0 + z * z); };
    // 1/(1+x^2) = 1 - x^2 + x^4 - ...
    f.taylor = [](int k) {
        if (k % 2 != 0)
            return 0.0;
        return (k / 2) % 2 == 0 ? 1.0 : -1.0;
    };
    f.singularities = {Cplx(0.0, 1.0), Cplx(0.0, -1.0)};
    f.real_on_real = true;
    return f;
}

Integrand integrand_monomial(int m) {
    if (m < 0)
        throw PreconditionError("integrand_monomial: degree must be >= 0");
    Integrand f;
    f.eval = [m](Cplx z) {
        Cplx r(1.0, 0.0);
        for (int i = 0; i < m; ++i)
            r *= z;
        return r;
    };
    f.taylor = [m](int k) { return k == m ? 1.0 : 0.0; };
    f.real_on_real = true;
    return f;
}

Integrand integrand_poly(std::vector<double> coeffs) {
    if (coeffs.empty())
        throw PreconditionError("integrand_poly: need at least one coefficient");
    Integrand f;
    auto c = std::make_shared<std::vector<double>>(std::move(coeffs));
    f.eval = [c](Cplx z) {
        Cplx r(0.0, 0.0);
        for (std::size_t j = c->size(); j-- > 0;)
            r = r * z + (*c)[j];
        return r;
    };
    f.taylor = [c](int k) {
        return (k >= 0 && static_cast<std::size_t>(k) < c->size()) ? (*c)[k] : 0.0;
    };
    f.real_on_real = true;
    return f;
}

} // namespace fpquad
