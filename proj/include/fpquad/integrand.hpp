#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace fpquad {

using Cplx = std::complex<double>;

// Analytic integrand f.
//
//  eval          evaluation at complex points
//  derivs0       user-supplied values [f(0), f'(0), ...]; non-empty takes
//                precedence over every automatic route
//  taylor        exact Taylor coefficient a_k = f^(k)(0)/k! when available
//                (all built-ins provide it); empty otherwise
//  singularities declared poles/branch points of f, used to validate
//                contours and analyticity strips
//  real_on_real  f(conj z) = conj(f(z)); enables the symmetry-reduced rule
struct Integrand {
    std::function<Cplx(Cplx)> eval;
    std::vector<Cplx> derivs0;
    std::function<double(int)> taylor;
    std::vector<Cplx> singularities;
    bool real_on_real = true;
};

// One finite-part integral fp int_0^1 x^(alpha-1-n) f(x) dx.
struct FpProblem {
    double alpha = 0.5; // strictly inside (0,1)
    int n = 1;          // >= 1
    Integrand f;
};

// Throws PreconditionError unless 0 < alpha < 1 and n >= 1.
void check_problem(const FpProblem& p);

// Built-in integrands (exact Taylor data attached).
Integrand integrand_one();
Integrand integrand_exp();
Integrand integrand_rational1px2(); // 1/(1+x^2), poles at +-i
Integrand integrand_monomial(int m);
Integrand integrand_poly(std::vector<double> coeffs); // sum_j coeffs[j] x^j

} // namespace fpquad
