#include "fpquad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "fpquad/errors.hpp"
#include "fpquad/summation.hpp"

namespace fpquad {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 abscissae and
// weights). Gauss points are the even-index Kronrod abscissae here.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Piece {
    double a, b;
    double value;
    double err;
};

Piece gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);

    double fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - hl * kXgk[j]);
        fv[14 - j] = f(c + hl * kXgk[j]);
    }
    fv[7] = f(c);

    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int j = 0; j < 7; ++j) {
        resk += kWgk[j] * (fv[j] + fv[14 - j]);
        if (j % 2 == 1)
            resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
    }

    Piece p;
    p.a = a;
    p.b = b;
    p.value = resk * hl;
    p.err = std::abs((resk - resg) * hl);
    if (!std::isfinite(p.value))
        throw DomainError("integrate_adaptive: non-finite integrand sample");
    return p;
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadOptions& opt) {
    if (!(b > a))
        throw PreconditionError("integrate_adaptive: need b > a");
    if (!(opt.abs_tol > 0.0))
        throw PreconditionError("integrate_adaptive: tolerance must be positive");

    // Worst-interval-first refinement; ties broken by left endpoint so the
    // subdivision sequence is reproducible.
    auto worse = [](const Piece& x, const Piece& y) {
        if (x.err != y.err)
            return x.err > y.err;
        return x.a < y.a;
    };
    std::multiset<Piece, decltype(worse)> pieces(worse);
    pieces.insert(gk15(f, a, b));

    double total_err = pieces.begin()->err;
    while (total_err > opt.abs_tol) {
        if (static_cast<int>(pieces.size()) >= opt.max_intervals)
            throw ConvergenceError("integrate_adaptive: interval budget exhausted (estimate " +
                                   std::to_string(total_err) + ")");
        const Piece worst = *pieces.begin();
        pieces.erase(pieces.begin());
        if (!(worst.b - worst.a > 1e-300))
            throw ConvergenceError("integrate_adaptive: interval underflow");
        const double mid = 0.5 * (worst.a + worst.b);
        const Piece left = gk15(f, worst.a, mid);
        const Piece right = gk15(f, mid, worst.b);
        total_err += left.err + right.err - worst.err;
        pieces.insert(left);
        pieces.insert(right);
    }

    // Sum in a fixed order (by position) for reproducibility.
    std::vector<Piece> ordered(pieces.begin(), pieces.end());
    std::sort(ordered.begin(), ordered.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    CompensatedSum sum;
    for (const Piece& p : ordered)
        sum.add(p.value);
    return sum.value();
}

} // namespace fpquad
