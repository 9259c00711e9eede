#pragma once

#include "spectral_tetris/synthesis_matrix.hpp"

#include <vector>

namespace stetris {

/// Unnormalized L x L DFT matrix: entry (j, k) = omega_L^(j*k), radicand 1.
BlockMatrix dft_matrix(int size);

/// Sizes m_1 <= ... <= m_K summing to M with the smallest sum of squares:
/// `small_count` = r copies of `base` = floor(M/K), then K - r copies of base + 1.
struct BlockSizes {
    int base = 0;
    int small_count = 0;
    std::vector<int> sizes;
};

BlockSizes optimal_block_sizes(int m, int k);

/// floor(M / (M - N + 1)), the smaller of the two tight block sizes.
int tight_base_size(int n, int m);

struct CorrectionRange {
    long long lo = 0;
    long long hi = 0;

    bool contains(long long c) const noexcept { return lo <= c && c <= hi; }
    friend bool operator==(const CorrectionRange&, const CorrectionRange&) = default;
};

/// Closed-form interval of first correction factors, before clipping to [1, M].
/// For a D_{L+1} block with L(N-M)+N <= 0 its lower end is not positive.
CorrectionRange raw_correction_bounds(int n, int m, int size);

/// raw_correction_bounds intersected with [1, M], the integer range every correction
/// factor must lie in. Both endpoints are always achievable first corrections.
CorrectionRange correction_range(int n, int m, int size);

/// Decrement between the first correction factor of a block and that of the
/// block placed after it: L(N-M)+M for D_L, L(N-M)+N for D_{L+1}.
long long step_size(int n, int m, int size);

struct TightBlockSpec {
    int n = 0;
    int m = 0;
    int size = 0;
    long long first_correction = 0;
};

/// N*size - (size-2)*M - c_1, forced by unit-norm columns.
long long tight_last_correction(const TightBlockSpec& spec);

/// Altered DFT block: row 0 scaled by sqrt(c_1/(N*size)), interior rows by
/// sqrt(M/(N*size)), the last row by sqrt(c_last/(N*size)).
///
/// Throws ValidationError when N < M < 2N fails, the size is not L or L+1
/// (or is 1), c_1 lies outside correction_range, or c_last falls outside [1, M].
BlockMatrix make_tight_block(const TightBlockSpec& spec);

struct GeneralBlockSpec {
    std::vector<Real> lams;
    Real first_correction;
};

struct GeneralBlock {
    BlockMatrix matrix;
    Real last_correction;
};

/// General D_L block for lams = (lambda_1..lambda_L): row 0 scaled by
/// sqrt(c_1/L), interior row j by sqrt(lambda_j/L), the last row by
/// sqrt(c_L/L) with c_L = L - c_1 - sum of the interior lambdas.
///
/// Throws ValidationError unless 0 < c_1 <= lambda_1 and 0 < c_L <= lambda_L.
/// `slack` loosens the comparisons for float inputs.
GeneralBlock make_general_block(const GeneralBlockSpec& spec, double slack = 0.0);

}  // namespace stetris
