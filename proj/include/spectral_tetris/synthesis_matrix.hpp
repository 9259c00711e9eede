#pragma once

#include "spectral_tetris/entry.hpp"
#include "spectral_tetris/spectrum.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stetris {

enum class BlockKind {
    unit,      ///< standard basis vector e_j
    pair,      ///< 2x2 block sqrt(x), sqrt(x) / sqrt(1-x), -sqrt(1-x)
    tight,     ///< altered DFT block D_L or D_{L+1} with integer corrections
    general,   ///< general D_L block for residual eigenvalues
    terminal,  ///< final square DFT block covering every remaining row
};

const char* to_string(BlockKind kind);

/// One placed building block. Rows and columns are 0-based offsets of the
/// block's top-left corner inside the synthesis matrix.
struct BlockRecord {
    BlockKind kind = BlockKind::unit;
    int size = 1;
    Real first_correction;
    Real last_correction;
    int row_offset = 0;
    int col_offset = 0;

    friend bool operator==(const BlockRecord&, const BlockRecord&) = default;
};

enum class ConstructionMethod { unspecified, stc, tdftst, dftst };

const char* to_string(ConstructionMethod method);

/// Dense rectangular block of entries, row-major.
class BlockMatrix {
public:
    BlockMatrix(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols)) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Entry& operator()(int r, int c) { return cells_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Entry& operator()(int r, int c) const { return cells_[static_cast<std::size_t>(r * cols_ + c)]; }

private:
    int rows_;
    int cols_;
    std::vector<Entry> cells_;
};

/// N x M synthesis matrix holding only structural nonzeros.
///
/// Entries are keyed by (column, row), so iteration is column-major. A stored
/// entry always has a positive radicand. Constructors fill the matrix through
/// set()/place(); once returned to a caller it is only read.
class SynthesisMatrix {
public:
    using Key = std::pair<int, int>;  // (column, row)

    SynthesisMatrix(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    /// Throws ValidationError for an out-of-range index, a zero radicand or an
    /// already occupied position.
    void set(int row, int col, Entry e);

    /// Writes every cell of `block` at the given offset and appends `record`
    /// to the block log.
    void place(const BlockMatrix& block, int row_offset, int col_offset, BlockRecord record);

    const Entry* find(int row, int col) const;
    const std::map<Key, Entry>& entries() const noexcept { return entries_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }

    /// (row, entry) pairs of one column in increasing row order.
    std::vector<std::pair<int, const Entry*>> column(int col) const;
    /// Sorted row indices with a stored entry in column `col`.
    std::vector<int> column_support(int col) const;
    /// Number of stored entries in row `row`.
    int row_support_size(int row) const;
    /// Stored-entry count of every row, in one pass.
    std::vector<int> row_support_sizes() const;
    bool all_exact() const;

    const std::vector<BlockRecord>& block_log() const noexcept { return block_log_; }
    void append_block(BlockRecord record) { block_log_.push_back(std::move(record)); }

    ConstructionMethod method() const noexcept { return method_; }
    void set_method(ConstructionMethod m) noexcept { method_ = m; }

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

    /// `copies` copies of `base` along the diagonal.
    static SynthesisMatrix block_diagonal(const SynthesisMatrix& base, int copies);

private:
    int rows_;
    int cols_;
    std::map<Key, Entry> entries_;
    std::vector<BlockRecord> block_log_;
    ConstructionMethod method_ = ConstructionMethod::unspecified;
    std::vector<std::string> warnings_;
};

/// Partition of column indices into orthonormal groups.
struct FusionPartition {
    std::vector<std::vector<int>> groups;

    std::vector<int> sizes() const;
    friend bool operator==(const FusionPartition&, const FusionPartition&) = default;
};

/// Upper triangle (r1 <= r2) of FF*, accumulated over shared column supports.
using FrameOperator = std::map<std::pair<int, int>, std::complex<double>>;

FrameOperator frame_operator(const SynthesisMatrix& f);

/// max |FF* - diag(lam)| over all entries. Throws ValidationError when
/// lam.dimension() != f.rows().
double gram_diag_residual(const SynthesisMatrix& f, const Spectrum& lam);

}  // namespace stetris
