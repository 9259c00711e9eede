#include "spectral_tetris/blocks.hpp"
#include "spectral_tetris/construct.hpp"
#include "spectral_tetris/errors.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace stetris {

namespace {

SynthesisMatrix tdftst_coprime(int n, int m) {
    const int blocks = m - n + 1;
    const int base = m / blocks;
    if (base == 1) {
        // M = 2N - 1: plain spectral tetris already reaches the optimal sparsity
        SynthesisMatrix f = stc(Spectrum::tight(n, m), {.allow_small_eigenvalues = true});
        f.set_method(ConstructionMethod::tdftst);
        return f;
    }

    const long long shift = static_cast<long long>(base) * (n - m);
    const bool greedy = shift + n <= 0;
    const int small_count = blocks * (base + 1) - m;

    SynthesisMatrix f(n, m);
    f.set_method(ConstructionMethod::tdftst);
    long long x = m;  // first correction factor of the next block
    int row = 0;
    int col = 0;
    for (int placed = 0; placed < blocks; ++placed) {
        int size = base + 1;
        if (greedy ? x >= shift + m : placed < small_count) size = base;
        const TightBlockSpec spec{n, m, size, x};
        f.place(make_tight_block(spec), row, col,
                {BlockKind::tight, size, Real(x), Real(tight_last_correction(spec)), 0, 0});
        row += size - 1;
        col += size;
        x -= step_size(n, m, size);
    }
    if (x != 0 || row != n - 1 || col != m)
        throw std::logic_error("TDFTST did not close: x=" + std::to_string(x) + " row=" + std::to_string(row) +
                               " col=" + std::to_string(col));
    return f;
}

}  // namespace

SynthesisMatrix tdftst(int n, int m) {
    if (n < 1 || !(n < m && m < 2 * n))
        throw ValidationError("TDFTST needs N < M < 2N, got N=" + std::to_string(n) + " M=" + std::to_string(m));
    const int g = std::gcd(n, m);
    if (g == 1) return tdftst_coprime(n, m);
    return SynthesisMatrix::block_diagonal(tdftst_coprime(n / g, m / g), g);
}

}  // namespace stetris
