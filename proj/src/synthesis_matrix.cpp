#include "spectral_tetris/synthesis_matrix.hpp"

#include "spectral_tetris/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stetris {

const char* to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::unit: return "unit";
        case BlockKind::pair: return "pair";
        case BlockKind::tight: return "tight";
        case BlockKind::general: return "general";
        case BlockKind::terminal: return "terminal";
    }
    return "unknown";
}

const char* to_string(ConstructionMethod method) {
    switch (method) {
        case ConstructionMethod::unspecified: return "unspecified";
        case ConstructionMethod::stc: return "stc";
        case ConstructionMethod::tdftst: return "tdftst";
        case ConstructionMethod::dftst: return "dftst";
    }
    return "unknown";
}

SynthesisMatrix::SynthesisMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw ValidationError("synthesis matrix needs at least one row and one column");
}

void SynthesisMatrix::set(int row, int col, Entry e) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw ValidationError("entry (" + std::to_string(row) + ", " + std::to_string(col) + ") outside " +
                              std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    if (e.radicand.is_zero()) throw ValidationError("structural zero cannot be stored");
    if (!entries_.emplace(Key{col, row}, std::move(e)).second)
        throw ValidationError("entry (" + std::to_string(row) + ", " + std::to_string(col) + ") written twice");
}

void SynthesisMatrix::place(const BlockMatrix& block, int row_offset, int col_offset, BlockRecord record) {
    for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) set(row_offset + r, col_offset + c, block(r, c));
    record.row_offset = row_offset;
    record.col_offset = col_offset;
    block_log_.push_back(std::move(record));
}

const Entry* SynthesisMatrix::find(int row, int col) const {
    const auto it = entries_.find(Key{col, row});
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::pair<int, const Entry*>> SynthesisMatrix::column(int col) const {
    std::vector<std::pair<int, const Entry*>> out;
    for (auto it = entries_.lower_bound(Key{col, 0}); it != entries_.end() && it->first.first == col; ++it)
        out.emplace_back(it->first.second, &it->second);
    return out;
}

std::vector<int> SynthesisMatrix::column_support(int col) const {
    std::vector<int> rows;
    for (auto it = entries_.lower_bound(Key{col, 0}); it != entries_.end() && it->first.first == col; ++it)
        rows.push_back(it->first.second);
    return rows;
}

int SynthesisMatrix::row_support_size(int row) const {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                          [row](const auto& kv) { return kv.first.second == row; }));
}

std::vector<int> SynthesisMatrix::row_support_sizes() const {
    std::vector<int> counts(static_cast<std::size_t>(rows_), 0);
    for (const auto& kv : entries_) ++counts[static_cast<std::size_t>(kv.first.second)];
    return counts;
}

bool SynthesisMatrix::all_exact() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.is_exact(); });
}

SynthesisMatrix SynthesisMatrix::block_diagonal(const SynthesisMatrix& base, int copies) {
    if (copies < 1) throw ValidationError("block_diagonal needs at least one copy");
    SynthesisMatrix out(base.rows_ * copies, base.cols_ * copies);
    for (int c = 0; c < copies; ++c) {
        const int dr = c * base.rows_;
        const int dc = c * base.cols_;
        for (const auto& [key, e] : base.entries_) out.set(key.second + dr, key.first + dc, e);
        for (BlockRecord rec : base.block_log_) {
            rec.row_offset += dr;
            rec.col_offset += dc;
            out.block_log_.push_back(std::move(rec));
        }
    }
    out.method_ = base.method_;
    out.warnings_ = base.warnings_;
    return out;
}

std::vector<int> FusionPartition::sizes() const {
    std::vector<int> s;
    s.reserve(groups.size());
    for (const auto& g : groups) s.push_back(static_cast<int>(g.size()));
    return s;
}

FrameOperator frame_operator(const SynthesisMatrix& f) {
    FrameOperator s;
    // Entries are column-major, so each column's nonzeros are contiguous in the map.
    auto it = f.entries().begin();
    const auto end = f.entries().end();
    std::vector<std::pair<int, std::complex<double>>> col;
    while (it != end) {
        const int c = it->first.first;
        col.clear();
        for (; it != end && it->first.first == c; ++it) col.emplace_back(it->first.second, entry_value(it->second));
        for (std::size_t a = 0; a < col.size(); ++a)
            for (std::size_t b = a; b < col.size(); ++b)
                s[{col[a].first, col[b].first}] += col[a].second * std::conj(col[b].second);
    }
    return s;
}

double gram_diag_residual(const SynthesisMatrix& f, const Spectrum& lam) {
    if (lam.dimension() != f.rows())
        throw ValidationError("spectrum has " + std::to_string(lam.dimension()) + " values but matrix has " +
                              std::to_string(f.rows()) + " rows");
    const FrameOperator s = frame_operator(f);
    double worst = 0.0;
    std::vector<bool> diag_seen(static_cast<std::size_t>(f.rows()), false);
    for (const auto& [rc, v] : s) {
        const auto [r1, r2] = rc;
        double target = 0.0;
        if (r1 == r2) {
            target = lam[static_cast<std::size_t>(r1)].to_double();
            diag_seen[static_cast<std::size_t>(r1)] = true;
        }
        worst = std::max(worst, std::abs(v - target));
    }
    for (int r = 0; r < f.rows(); ++r)
        if (!diag_seen[static_cast<std::size_t>(r)]) worst = std::max(worst, lam[static_cast<std::size_t>(r)].to_double());
    return worst;
}

}  // namespace stetris
