#include "spectral_tetris/construct.hpp"

#include "spectral_tetris/errors.hpp"

#include <stdexcept>
#include <string>

namespace stetris {

SynthesisMatrix stc(const Spectrum& lam, StcOptions options) {
    const int n = lam.dimension();
    const int m = lam.vector_count();
    if (!options.allow_small_eigenvalues) {
        for (int j = 0; j < n; ++j)
            if (lam[static_cast<std::size_t>(j)] < Real(2))
                throw ValidationError("STC needs eigenvalues >= 2; lambda_" + std::to_string(j + 1) + " = " +
                                      lam[static_cast<std::size_t>(j)].to_string());
    }
    if (m < n) throw ValidationError("STC needs M >= N");
    const double slack = kZeroSlack * m;

    std::vector<Real> residual(lam.values().begin(), lam.values().end());
    SynthesisMatrix f(n, m);
    f.set_method(ConstructionMethod::stc);
    int k = 0;

    for (int j = 0; j < n; ++j) {
        Real& here = residual[static_cast<std::size_t>(j)];
        while (here.sign() > 0 && !negligible(here, slack)) {
            if (k >= m) throw ValidationError("STC ran out of columns at row " + std::to_string(j + 1));
            const bool below_one = here < Real(1) && !negligible(here - Real(1), slack);
            if (!below_one) {
                BlockMatrix unit(1, 1);
                unit(0, 0) = Entry::make(Real(1));
                f.place(unit, j, k, {BlockKind::unit, 1, Real(1), Real(1), 0, 0});
                ++k;
                here -= Real(1);
                continue;
            }
            if (j + 1 == n || k + 2 > m)
                throw ValidationError("STC failed at row " + std::to_string(j + 1) + ": residual " + here.to_string() +
                                      " < 1 with no room for a 2x2 block");
            const Real x = here / Real(2);
            const Real y = Real(1) - x;
            BlockMatrix pair(2, 2);
            pair(0, 0) = Entry::make(x);
            pair(0, 1) = Entry::make(x);
            pair(1, 0) = Entry::make(y);
            pair(1, 1) = Entry::make(y, 2, 1);
            f.place(pair, j, k, {BlockKind::pair, 2, here, Real(2) - here, 0, 0});
            k += 2;

            Real& next = residual[static_cast<std::size_t>(j + 1)];
            next -= Real(2) - here;
            if (next.sign() < 0 && !negligible(next, slack))
                throw ValidationError("STC failed at row " + std::to_string(j + 2) + ": residual eigenvalue becomes " +
                                      next.to_string());
            if (negligible(next, slack)) next = next.is_exact() ? Real(0) : Real::inexact(0.0);
            here = Real(0);
        }
    }
    if (k != m) throw std::logic_error("STC produced " + std::to_string(k) + " columns, expected " + std::to_string(m));
    return f;
}

}  // namespace stetris
