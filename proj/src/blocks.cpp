#include "spectral_tetris/blocks.hpp"

#include "spectral_tetris/errors.hpp"

#include <string>

namespace stetris {

namespace {

void require_low_redundancy(int n, int m) {
    if (!(n < m && m < 2 * n))
        throw ValidationError("tight blocks need N < M < 2N, got N=" + std::to_string(n) + " M=" + std::to_string(m));
}

void require_block_size(int n, int m, int size) {
    require_low_redundancy(n, m);
    const int base = tight_base_size(n, m);
    if (size != base && size != base + 1)
        throw ValidationError("block size " + std::to_string(size) + " is neither L=" + std::to_string(base) +
                              " nor L+1");
}

}  // namespace

BlockMatrix dft_matrix(int size) {
    if (size < 1) throw ValidationError("DFT size must be positive");
    BlockMatrix f(size, size);
    for (int j = 0; j < size; ++j)
        for (int k = 0; k < size; ++k) f(j, k) = Entry::make(Real(1), size, static_cast<long long>(j) * k);
    return f;
}

BlockSizes optimal_block_sizes(int m, int k) {
    if (k < 1 || m < 1) throw ValidationError("block count and total must be positive");
    if (k > m) throw ValidationError("cannot split M=" + std::to_string(m) + " into K=" + std::to_string(k) + " positive parts");
    BlockSizes out;
    out.base = m / k;
    out.small_count = k * (out.base + 1) - m;
    out.sizes.assign(static_cast<std::size_t>(out.small_count), out.base);
    out.sizes.resize(static_cast<std::size_t>(k), out.base + 1);
    return out;
}

int tight_base_size(int n, int m) {
    require_low_redundancy(n, m);
    return m / (m - n + 1);
}

CorrectionRange raw_correction_bounds(int n, int m, int size) {
    require_block_size(n, m, size);
    const long long base = tight_base_size(n, m);
    const long long shift = base * (n - m);
    if (size == base) return {shift + m, m};
    if (shift + n > 0) return {shift + n, m};
    return {shift + n, shift + m};
}

CorrectionRange correction_range(int n, int m, int size) {
    if (size < 2) throw ValidationError("tight blocks of size 1 have no separate first and last row");
    CorrectionRange r = raw_correction_bounds(n, m, size);
    if (r.lo < 1) r.lo = 1;
    if (r.hi > m) r.hi = m;
    return r;
}

long long step_size(int n, int m, int size) {
    require_block_size(n, m, size);
    const long long base = tight_base_size(n, m);
    return base * (n - m) + (size == base ? m : n);
}

long long tight_last_correction(const TightBlockSpec& spec) {
    return static_cast<long long>(spec.n) * spec.size - static_cast<long long>(spec.size - 2) * spec.m -
           spec.first_correction;
}

BlockMatrix make_tight_block(const TightBlockSpec& spec) {
    const CorrectionRange range = correction_range(spec.n, spec.m, spec.size);
    if (!range.contains(spec.first_correction))
        throw ValidationError("first correction " + std::to_string(spec.first_correction) + " outside [" +
                              std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]");
    const long long last = tight_last_correction(spec);
    if (last < 1 || last > spec.m)
        throw ValidationError("last correction " + std::to_string(last) + " outside [1, " + std::to_string(spec.m) + "]");

    const long long scale = static_cast<long long>(spec.n) * spec.size;
    BlockMatrix block = dft_matrix(spec.size);
    for (int r = 0; r < spec.size; ++r) {
        long long c = spec.m;
        if (r == 0) c = spec.first_correction;
        if (r == spec.size - 1) c = last;
        const Real radicand(make_rational(c, scale));
        for (int col = 0; col < spec.size; ++col) block(r, col).radicand = radicand;
    }
    return block;
}

GeneralBlock make_general_block(const GeneralBlockSpec& spec, double slack) {
    const int size = static_cast<int>(spec.lams.size());
    if (size < 1) throw ValidationError("general block needs at least one eigenvalue");
    const Real& first = spec.first_correction;
    if (first.sign() <= 0) throw ValidationError("first correction must be positive");
    if (!less_equal(first, spec.lams.front(), slack))
        throw ValidationError("first correction " + first.to_string() + " exceeds lambda_1 = " + spec.lams.front().to_string());

    if (size == 1) {
        // first and last row coincide: the single entry must be 1
        if (!negligible(first - Real(1), slack)) throw ValidationError("a 1x1 block needs correction 1");
        BlockMatrix unit(1, 1);
        unit(0, 0) = Entry::make(Real(1));
        return {std::move(unit), first};
    }

    Real last = Real(size) - first;
    for (int i = 1; i + 1 < size; ++i) last -= spec.lams[static_cast<std::size_t>(i)];
    if (last.sign() <= 0 || negligible(last, slack))
        throw ValidationError("last correction " + last.to_string() + " is not positive");
    if (!less_equal(last, spec.lams.back(), slack))
        throw ValidationError("last correction " + last.to_string() + " exceeds lambda_L = " + spec.lams.back().to_string());

    BlockMatrix block = dft_matrix(size);
    const Real l(size);
    for (int r = 0; r < size; ++r) {
        const Real& c = r == 0 ? first : (r == size - 1 ? last : spec.lams[static_cast<std::size_t>(r)]);
        const Real radicand = c / l;
        for (int col = 0; col < size; ++col) block(r, col).radicand = radicand;
    }
    return {std::move(block), std::move(last)};
}

}  // namespace stetris
