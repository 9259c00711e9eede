#pragma once

#include "spectral_tetris/construct.hpp"
#include "spectral_tetris/synthesis_matrix.hpp"

#include <functional>
#include <span>
#include <vector>

namespace stetris {

/// Requested subspace dimensions d_1..d_D, kept both as given and sorted
/// nonincreasing. sorted()[i] == given()[order()[i]].
class DimensionProfile {
public:
    /// Throws ValidationError on an empty list or a non-positive dimension.
    explicit DimensionProfile(std::vector<int> dims);

    std::span<const int> given() const noexcept { return given_; }
    std::span<const int> sorted() const noexcept { return sorted_; }
    std::span<const int> order() const noexcept { return order_; }
    int total() const noexcept { return total_; }

private:
    std::vector<int> given_;
    std::vector<int> sorted_;
    std::vector<int> order_;
    int total_ = 0;
};

/// Prefix-sum dominance of the decreasing rearrangements with equal totals;
/// the shorter list is padded with zeros.
bool majorizes(std::span<const int> a, std::span<const int> b);

/// a_n = #{r : lambda_r >= n} for n = 1..max lambda. Throws ValidationError
/// for a non-integer eigenvalue.
std::vector<int> integer_reference_dims(const Spectrum& lam);

struct ReferenceFusionFrame {
    SynthesisMatrix frame;
    FusionPartition partition;
    std::vector<int> dims;
    /// Largest number of structural nonzeros in a row of the frame.
    int max_row_support = 0;
};

/// First-fit packing of the columns, in index order, into `max_row_support`
/// groups with pairwise disjoint supports.
ReferenceFusionFrame reference_fusion_frame(SynthesisMatrix frame);
/// Builds the frame with spectral_tetris_request(lam) first.
ReferenceFusionFrame reference_fusion_frame(const Spectrum& lam);

struct ChainSet {
    std::vector<int> members;
    int from_a = 0;
    int from_b = 0;
    int first_row = 0;
    int last_row = 0;
};

/// Connected components of the support-overlap graph on a U b, ordered by
/// first row. Throws ValidationError if either group overlaps itself.
std::vector<ChainSet> maximal_chains(std::span<const int> a, std::span<const int> b, const SynthesisMatrix& f);

enum class RebalanceCase { move, chain_swap };

/// State after one rebalancing step; groups are indexed in sorted-dimension order.
struct RebalanceStep {
    int iteration = 0;
    RebalanceCase kind = RebalanceCase::move;
    int donor = 0;      ///< k: group that shrinks
    int receiver = 0;   ///< m: group that grows
    std::vector<int> to_receiver;
    std::vector<int> to_donor;
    int discrepancy_before = 0;
    int discrepancy_after = 0;
    const std::vector<std::vector<int>>* groups = nullptr;
};

using RebalanceObserver = std::function<void(const RebalanceStep&)>;

struct FusionFrame {
    SynthesisMatrix frame;
    /// groups[i] spans a subspace of dimension dims.given()[i].
    FusionPartition partition;
    std::vector<int> reference_dims;
    int iterations = 0;
    int initial_discrepancy = 0;
};

/// Regroups the reference fusion frame of `frame` into orthonormal groups of
/// the requested sizes.
///
/// Throws MajorizationFailed when the reference dimensions do not majorize
/// `dims`; `tight_redundancy_two` marks the failure as certified
/// nonexistence. Every step is checked at runtime (strictly decreasing
/// discrepancy, support-disjoint groups, majorization) and a violation throws
/// std::logic_error.
FusionFrame build_fusion_frame(SynthesisMatrix frame, const DimensionProfile& dims, bool tight_redundancy_two = false,
                               const RebalanceObserver& observer = {});
FusionFrame build_fusion_frame(const Spectrum& lam, const DimensionProfile& dims, const RebalanceObserver& observer = {});

}  // namespace stetris
