#include "spectral_tetris/blocks.hpp"
#include "spectral_tetris/construct.hpp"
#include "spectral_tetris/errors.hpp"

#include <stdexcept>
#include <string>

namespace stetris {

namespace {

Real zero_like(const Real& x) { return x.is_exact() ? Real(0) : Real::inexact(0.0); }

bool nonincreasing(std::span<const Real> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

}  // namespace

SynthesisMatrix dftst(const Spectrum& lam) {
    const int n = lam.dimension();
    const int m = lam.vector_count();
    if (m < n) throw ValidationError("DFTST needs M >= N, got N=" + std::to_string(n) + " M=" + std::to_string(m));
    const double slack = kZeroSlack * m;

    SynthesisMatrix f(n, m);
    f.set_method(ConstructionMethod::dftst);
    if (!nonincreasing(lam.values()))
        f.add_warning("eigenvalues are not in decreasing order; the frame is valid but may be less sparse");

    std::vector<Real> residual(lam.values().begin(), lam.values().end());
    auto res = [&](int i) -> Real& { return residual[static_cast<std::size_t>(i)]; };
    int k = 0;  // next free column

    for (int j = 0; j < n; ++j) {
        while (res(j).sign() > 0 && !negligible(res(j), slack)) {
            // smallest L whose window of residuals carries at least L units of mass
            Real window;
            int min_size = 0;
            for (int size = 1; size <= n - j; ++size) {
                window += res(j + size - 1);
                if (less_equal(Real(size), window, slack)) {
                    min_size = size;
                    break;
                }
            }
            const int cols_left = m - k;
            const int rows_left = n - j;

            // With as many columns as rows left, a block may only be placed if
            // it finishes its last row; otherwise a row would be stranded.
            bool terminal = min_size == 0;
            if (!terminal && cols_left == rows_left) terminal = !negligible(window - Real(min_size), slack);

            if (terminal) {
                if (cols_left != rows_left)
                    throw std::logic_error("DFTST: " + std::to_string(rows_left) + " rows left but " +
                                           std::to_string(cols_left) + " columns");
                GeneralBlockSpec spec{{residual.begin() + j, residual.end()}, res(j)};
                GeneralBlock block = make_general_block(spec, slack);
                f.place(block.matrix, j, k, {BlockKind::terminal, cols_left, res(j), block.last_correction, 0, 0});
                k += cols_left;
                for (int i = j; i < n; ++i) res(i) = zero_like(res(i));
                break;
            }

            if (min_size == 1) {
                BlockMatrix unit(1, 1);
                unit(0, 0) = Entry::make(Real(1));
                f.place(unit, j, k, {BlockKind::unit, 1, Real(1), Real(1), 0, 0});
                ++k;
                res(j) -= Real(1);
                if (negligible(res(j), slack)) res(j) = zero_like(res(j));
                continue;
            }

            GeneralBlockSpec spec{{residual.begin() + j, residual.begin() + j + min_size}, res(j)};
            GeneralBlock block = make_general_block(spec, slack);
            f.place(block.matrix, j, k, {BlockKind::general, min_size, res(j), block.last_correction, 0, 0});
            k += min_size;
            Real leftover = window - Real(min_size);
            for (int i = j; i < j + min_size - 1; ++i) res(i) = zero_like(res(i));
            res(j + min_size - 1) = negligible(leftover, slack) ? zero_like(leftover) : leftover;
        }
    }
    if (k != m) throw std::logic_error("DFTST produced " + std::to_string(k) + " columns, expected " + std::to_string(m));
    return f;
}

}  // namespace stetris
