#include "spectral_tetris/fusion.hpp"

#include "spectral_tetris/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stetris {

DimensionProfile::DimensionProfile(std::vector<int> dims) : given_(std::move(dims)) {
    if (given_.empty()) throw ValidationError("dimension profile must not be empty");
    for (int d : given_)
        if (d < 1) throw ValidationError("subspace dimensions must be positive, got " + std::to_string(d));
    order_.resize(given_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
        return given_[static_cast<std::size_t>(a)] > given_[static_cast<std::size_t>(b)];
    });
    for (int i : order_) sorted_.push_back(given_[static_cast<std::size_t>(i)]);
    total_ = std::accumulate(given_.begin(), given_.end(), 0);
}

bool majorizes(std::span<const int> a, std::span<const int> b) {
    std::vector<int> x(a.begin(), a.end());
    std::vector<int> y(b.begin(), b.end());
    const std::size_t len = std::max(x.size(), y.size());
    x.resize(len, 0);
    y.resize(len, 0);
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
    long long px = 0;
    long long py = 0;
    for (std::size_t i = 0; i < len; ++i) {
        px += x[i];
        py += y[i];
        if (px < py) return false;
    }
    return px == py;
}

std::vector<int> integer_reference_dims(const Spectrum& lam) {
    std::vector<int> ints;
    for (const Real& v : lam.values()) {
        if (!near_integer(v, 0.0)) throw ValidationError("eigenvalue " + v.to_string() + " is not an integer");
        ints.push_back(static_cast<int>(std::llround(v.to_double())));
    }
    const int top = *std::max_element(ints.begin(), ints.end());
    std::vector<int> dims;
    for (int level = 1; level <= top; ++level)
        dims.push_back(static_cast<int>(std::count_if(ints.begin(), ints.end(), [&](int v) { return v >= level; })));
    return dims;
}

namespace {

std::vector<std::vector<int>> all_supports(const SynthesisMatrix& f) {
    std::vector<std::vector<int>> supports(static_cast<std::size_t>(f.cols()));
    for (const auto& kv : f.entries()) supports[static_cast<std::size_t>(kv.first.first)].push_back(kv.first.second);
    return supports;
}

/// Rows claimed by each group; a group may hold a column only if none of its
/// rows is claimed already, which is exactly pairwise support-disjointness.
class RowOccupancy {
public:
    RowOccupancy(int rows, int groups) : rows_(rows), used_(static_cast<std::size_t>(rows * groups), false) {}

    bool fits(int group, const std::vector<int>& support) const {
        return std::none_of(support.begin(), support.end(), [&](int r) { return used_[index(group, r)]; });
    }
    void claim(int group, const std::vector<int>& support) {
        for (int r : support) {
            if (used_[index(group, r)])
                throw std::logic_error("group " + std::to_string(group) + " would hold two vectors on row " +
                                       std::to_string(r));
            used_[index(group, r)] = true;
        }
    }
    void release(int group, const std::vector<int>& support) {
        for (int r : support) used_[index(group, r)] = false;
    }

private:
    std::size_t index(int group, int row) const { return static_cast<std::size_t>(group * rows_ + row); }
    int rows_;
    std::vector<bool> used_;
};

int discrepancy(const std::vector<std::vector<int>>& groups, const std::vector<int>& target) {
    int d = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) d += std::abs(static_cast<int>(groups[i].size()) - target[i]);
    return d;
}

std::string join(std::span<const int> v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace

ReferenceFusionFrame reference_fusion_frame(SynthesisMatrix frame) {
    const auto row_sizes = frame.row_support_sizes();
    const int t = *std::max_element(row_sizes.begin(), row_sizes.end());
    const auto supports = all_supports(frame);

    RowOccupancy occupancy(frame.rows(), t);
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(t));
    for (int k = 0; k < frame.cols(); ++k) {
        const auto& support = supports[static_cast<std::size_t>(k)];
        int g = 0;
        while (g < t && !occupancy.fits(g, support)) ++g;
        if (g == t) throw std::logic_error("first-fit needed more than " + std::to_string(t) + " groups");
        occupancy.claim(g, support);
        groups[static_cast<std::size_t>(g)].push_back(k);
    }
    std::erase_if(groups, [](const auto& g) { return g.empty(); });

    ReferenceFusionFrame out{std::move(frame), {std::move(groups)}, {}, t};
    out.dims = out.partition.sizes();
    return out;
}

ReferenceFusionFrame reference_fusion_frame(const Spectrum& lam) {
    return reference_fusion_frame(construct(spectral_tetris_request(lam)));
}

std::vector<ChainSet> maximal_chains(std::span<const int> a, std::span<const int> b, const SynthesisMatrix& f) {
    std::vector<int> members(a.begin(), a.end());
    members.insert(members.end(), b.begin(), b.end());
    const std::size_t count = members.size();
    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };

    std::vector<std::vector<int>> supports(count);
    std::vector<int> first_in_row(static_cast<std::size_t>(f.rows()), -1);
    std::vector<int> owner_a(static_cast<std::size_t>(f.rows()), -1);
    std::vector<int> owner_b(static_cast<std::size_t>(f.rows()), -1);
    for (std::size_t i = 0; i < count; ++i) {
        supports[i] = f.column_support(members[i]);
        auto& owner = i < a.size() ? owner_a : owner_b;
        for (int r : supports[i]) {
            if (owner[static_cast<std::size_t>(r)] != -1)
                throw ValidationError("columns " + std::to_string(members[static_cast<std::size_t>(owner[static_cast<std::size_t>(r)])]) +
                                      " and " + std::to_string(members[i]) + " of one group share row " + std::to_string(r));
            owner[static_cast<std::size_t>(r)] = static_cast<int>(i);
            int& first = first_in_row[static_cast<std::size_t>(r)];
            if (first == -1)
                first = static_cast<int>(i);
            else
                parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(first);
        }
    }

    std::vector<ChainSet> chains;
    std::vector<int> chain_of(count, -1);
    for (std::size_t i = 0; i < count; ++i) {
        const int root = find(static_cast<int>(i));
        if (chain_of[static_cast<std::size_t>(root)] == -1) {
            chain_of[static_cast<std::size_t>(root)] = static_cast<int>(chains.size());
            chains.push_back({{}, 0, 0, f.rows(), -1});
        }
        ChainSet& c = chains[static_cast<std::size_t>(chain_of[static_cast<std::size_t>(root)])];
        c.members.push_back(members[i]);
        (i < a.size() ? c.from_a : c.from_b) += 1;
        if (!supports[i].empty()) {
            c.first_row = std::min(c.first_row, supports[i].front());
            c.last_row = std::max(c.last_row, supports[i].back());
        }
    }
    for (auto& c : chains) std::sort(c.members.begin(), c.members.end());
    std::stable_sort(chains.begin(), chains.end(), [](const ChainSet& x, const ChainSet& y) { return x.first_row < y.first_row; });
    return chains;
}

FusionFrame build_fusion_frame(SynthesisMatrix frame, const DimensionProfile& dims, bool tight_redundancy_two,
                               const RebalanceObserver& observer) {
    if (dims.total() != frame.cols())
        throw ValidationError("dimensions sum to " + std::to_string(dims.total()) + " but the frame has " +
                              std::to_string(frame.cols()) + " vectors");
    ReferenceFusionFrame ref = reference_fusion_frame(std::move(frame));
    if (!majorizes(ref.dims, dims.sorted())) {
        const std::string detail = "reference dimensions (" + join(ref.dims) + ") do not majorize (" + join(dims.sorted()) + ")";
        if (tight_redundancy_two)
            throw MajorizationFailed("no spectral tetris fusion frame with these dimensions exists: " + detail, true);
        throw MajorizationFailed("not constructible by spectral tetris rebalancing: " + detail, false);
    }

    const std::size_t slots = std::max(ref.partition.groups.size(), dims.sorted().size());
    std::vector<int> target(dims.sorted().begin(), dims.sorted().end());
    target.resize(slots, 0);
    std::vector<std::vector<int>> groups = ref.partition.groups;
    groups.resize(slots);

    const auto supports = all_supports(ref.frame);
    auto support = [&](int col) -> const std::vector<int>& { return supports[static_cast<std::size_t>(col)]; };
    RowOccupancy occupancy(ref.frame.rows(), static_cast<int>(slots));
    for (std::size_t g = 0; g < slots; ++g)
        for (int col : groups[g]) occupancy.claim(static_cast<int>(g), support(col));

    FusionFrame out{SynthesisMatrix(1, 1), {}, ref.dims, 0, discrepancy(groups, target)};
    int current = out.initial_discrepancy;
    while (current > 0) {
        int m = static_cast<int>(slots) - 1;
        while (static_cast<int>(groups[static_cast<std::size_t>(m)].size()) == target[static_cast<std::size_t>(m)]) --m;
        int k = m - 1;
        while (k >= 0 && static_cast<int>(groups[static_cast<std::size_t>(k)].size()) <= target[static_cast<std::size_t>(k)]) --k;
        if (k < 0) throw std::logic_error("rebalance: no oversized group precedes group " + std::to_string(m));

        auto& donor = groups[static_cast<std::size_t>(k)];
        auto& receiver = groups[static_cast<std::size_t>(m)];
        RebalanceStep step;
        step.iteration = out.iterations + 1;
        step.donor = k;
        step.receiver = m;
        step.discrepancy_before = current;

        std::vector<int> movable;
        for (int w : donor)
            if (occupancy.fits(m, support(w))) movable.push_back(w);
        if (!movable.empty()) {
            step.kind = RebalanceCase::move;
            step.to_receiver = {*std::min_element(movable.begin(), movable.end())};
        } else {
            step.kind = RebalanceCase::chain_swap;
            const auto chains = maximal_chains(donor, receiver, ref.frame);
            const auto it = std::find_if(chains.begin(), chains.end(), [](const ChainSet& c) { return c.from_a == c.from_b + 1; });
            if (it == chains.end())
                throw std::logic_error("rebalance: no chain with one more vector from group " + std::to_string(k));
            for (int col : it->members) {
                if (std::find(donor.begin(), donor.end(), col) != donor.end())
                    step.to_receiver.push_back(col);
                else
                    step.to_donor.push_back(col);
            }
        }

        for (int col : step.to_receiver) occupancy.release(k, support(col));
        for (int col : step.to_donor) occupancy.release(m, support(col));
        std::erase_if(donor, [&](int c) { return std::find(step.to_receiver.begin(), step.to_receiver.end(), c) != step.to_receiver.end(); });
        std::erase_if(receiver, [&](int c) { return std::find(step.to_donor.begin(), step.to_donor.end(), c) != step.to_donor.end(); });
        for (int col : step.to_receiver) {
            occupancy.claim(m, support(col));
            receiver.push_back(col);
        }
        for (int col : step.to_donor) {
            occupancy.claim(k, support(col));
            donor.push_back(col);
        }
        std::sort(donor.begin(), donor.end());
        std::sort(receiver.begin(), receiver.end());

        const int next = discrepancy(groups, target);
        if (next >= current) throw std::logic_error("rebalance step did not reduce the discrepancy");
        std::vector<int> sizes;
        for (const auto& g : groups) sizes.push_back(static_cast<int>(g.size()));
        if (!majorizes(sizes, target)) throw std::logic_error("rebalance step broke majorization");

        ++out.iterations;
        step.discrepancy_after = next;
        step.groups = &groups;
        if (observer) observer(step);
        current = next;
    }

    out.partition.groups.resize(dims.given().size());
    for (std::size_t i = 0; i < dims.sorted().size(); ++i)
        out.partition.groups[static_cast<std::size_t>(dims.order()[i])] = std::move(groups[i]);
    for (std::size_t i = dims.sorted().size(); i < slots; ++i)
        if (!groups[i].empty()) throw std::logic_error("padding group left non-empty");
    out.frame = std::move(ref.frame);
    return out;
}

FusionFrame build_fusion_frame(const Spectrum& lam, const DimensionProfile& dims, const RebalanceObserver& observer) {
    const bool tight_two = lam.is_constant() && lam.vector_count() >= 2 * lam.dimension();
    return build_fusion_frame(construct(spectral_tetris_request(lam)), dims, tight_two, observer);
}

}  // namespace stetris
