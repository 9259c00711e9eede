#include "spectral_tetris/construct.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

namespace stetris {

int integral_prefix_count(const Spectrum& lam) {
    Real sum;
    int count = 0;
    for (const Real& v : lam.values()) {
        sum += v;
        if (near_integer(sum, Spectrum::kTraceSlack)) ++count;
    }
    return count;
}

namespace {

// best[mask] = most integral prefixes over all orderings of the items in mask.
// Recurrence: best[mask] = max over the last item i of best[mask \ i], plus one
// when the sum over mask is integral.
std::vector<int> exact_order(const Spectrum& lam) {
    const int n = lam.dimension();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint8_t> integral(std::size_t{full} + 1, 0);

    // Gray-code walk: one addition or subtraction per subset.
    Real sum;
    integral[0] = 1;
    std::uint32_t prev = 0;
    for (std::uint32_t step = 1; step <= full; ++step) {
        const std::uint32_t gray = step ^ (step >> 1);
        const std::uint32_t flipped = gray ^ prev;
        const int bit = std::countr_zero(flipped);
        if (gray & flipped)
            sum += lam[static_cast<std::size_t>(bit)];
        else
            sum -= lam[static_cast<std::size_t>(bit)];
        integral[gray] = near_integer(sum, Spectrum::kTraceSlack) ? 1 : 0;
        prev = gray;
    }

    std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int b = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const std::uint32_t low = rest & (~rest + 1);
            b = std::max(b, static_cast<int>(best[mask ^ low]));
        }
        best[mask] = static_cast<std::uint8_t>(b + integral[mask]);
    }

    // Peel off the last element, preferring the highest index so that an
    // already optimal order is returned unchanged.
    std::vector<int> order;
    std::uint32_t mask = full;
    while (mask) {
        const int target = best[mask] - integral[mask];
        for (int i = n - 1; i >= 0; --i) {
            const std::uint32_t bit = 1u << i;
            if ((mask & bit) && best[mask ^ bit] == target) {
                order.push_back(i);
                mask ^= bit;
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Integral values first, then pairs with complementary fractional parts,
// then everything else as one final group.
std::vector<int> greedy_order(const Spectrum& lam) {
    const int n = lam.dimension();
    std::vector<int> order;
    std::vector<int> fractional;
    for (int i = 0; i < n; ++i) {
        if (near_integer(lam[static_cast<std::size_t>(i)], Spectrum::kTraceSlack))
            order.push_back(i);
        else
            fractional.push_back(i);
    }
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    if (lam.is_exact()) {
        std::map<Rational, std::vector<int>> by_frac;
        auto frac = [&](int i) {
            const Rational& q = lam[static_cast<std::size_t>(i)].exact();
            return Rational(q - Rational(numerator(q) / denominator(q)));
        };
        for (int i : fractional) {
            auto& partners = by_frac[Rational(1) - frac(i)];
            if (!partners.empty()) {
                const int p = partners.back();
                partners.pop_back();
                order.push_back(p);
                order.push_back(i);
                used[static_cast<std::size_t>(p)] = used[static_cast<std::size_t>(i)] = true;
            } else {
                by_frac[frac(i)].push_back(i);
            }
        }
    }
    for (int i : fractional)
        if (!used[static_cast<std::size_t>(i)]) order.push_back(i);
    return order;
}

}  // namespace

BlockwiseOrder blockwise_order(const Spectrum& lam) {
    BlockwiseOrder out;
    out.certified = lam.dimension() <= kBlockwiseExactLimit;
    out.permutation = out.certified ? exact_order(lam) : greedy_order(lam);
    out.integral_prefixes = integral_prefix_count(lam.permuted(out.permutation, SpectrumOrder::blockwise_heuristic));
    return out;
}

}  // namespace stetris
