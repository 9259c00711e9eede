#pragma once

#include "spectral_tetris/synthesis_matrix.hpp"

#include <optional>
#include <vector>

namespace stetris {

/// Float spectra: a residual eigenvalue is treated as exhausted once it is
/// within kZeroSlack * M of zero, and "L <= partial sum" tests allow the same
/// slack.
inline constexpr double kZeroSlack = 1e-12;

struct StcOptions {
    /// Run on eigenvalues below 2. Success is not checked in advance; a
    /// negative residual raises ValidationError naming the row.
    bool allow_small_eigenvalues = false;
};

/// Spectral tetris with singletons and 2x2 blocks. Output is real
/// (root order <= 2) and FF* = diag(lam) exactly in radicand arithmetic.
SynthesisMatrix stc(const Spectrum& lam, StcOptions options = {});

/// Unit norm tight frame of M vectors in C^N for N < M < 2N built from
/// altered DFT blocks D_L and D_{L+1}; non-coprime (N, M) are assembled
/// from gcd(N, M) diagonal copies of the coprime solution.
SynthesisMatrix tdftst(int n, int m);

/// Spectral tetris with general DFT blocks for any positive spectrum.
/// Non-decreasing input is accepted; the block structure is then usually
/// less sparse and a warning is attached to the result.
SynthesisMatrix dftst(const Spectrum& lam);

enum class Method { automatic, stc, tdftst, dftst };

struct ConstructRequest {
    int n = 0;
    int m = 0;
    std::optional<Spectrum> spectrum;
    bool tight = false;
    Method method = Method::automatic;
    bool allow_small_eigenvalues = false;
};

/// The spectrum a request describes (M/N repeated N times for tight requests).
/// Throws ValidationError for inconsistent requests.
Spectrum request_spectrum(const ConstructRequest& req);

/// Dispatches to one constructor. Automatic routing: every eigenvalue >= 2
/// goes to stc, a tight request with N < M < 2N to tdftst, the rest to dftst.
SynthesisMatrix construct(const ConstructRequest& req);

/// Request the fusion algorithms use for a bare spectrum: constant spectra
/// are treated as tight requests so the redundancy-below-two case goes
/// through tdftst.
ConstructRequest spectral_tetris_request(const Spectrum& lam);

struct BlockwiseOrder {
    std::vector<int> permutation;
    /// Number of integral partial sums of the permuted spectrum.
    int integral_prefixes = 0;
    /// True when the count was proven maximal by exhaustive search (N <= 20).
    bool certified = false;
};

inline constexpr int kBlockwiseExactLimit = 20;

/// Ordering that maximizes the number of integral partial sums.
BlockwiseOrder blockwise_order(const Spectrum& lam);

/// Number of s in 1..N with lambda_1 + ... + lambda_s integral.
int integral_prefix_count(const Spectrum& lam);

}  // namespace stetris
