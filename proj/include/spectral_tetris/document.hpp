#pragma once

#include "spectral_tetris/synthesis_matrix.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stetris {

inline constexpr const char* kFrameFormat = "spectral-tetris-frame/1";

/// "a/b" or an integer gives an exact value. A decimal ("0.25", "1e-3") is
/// exact only when the nearest double equals it; otherwise the double is kept.
/// Throws ValidationError on a malformed token.
Real parse_real(std::string_view token);

/// Comma-separated eigenvalues. Throws ValidationError on a malformed token, a
/// non-positive value or a non-integer trace.
Spectrum parse_spectrum(std::string_view text);

/// Comma-separated positive integers.
std::vector<int> parse_dims(std::string_view text);

/// Serializable frame with its spectrum and optional fusion partition.
///
/// JSON layout (indices 0-based):
///   format, n, m, eigenvalues      exact values as "p/q" strings, floats as numbers
///   entries      [row, col, re, im] float values
///   exactEntries [row, col, radicand, rootOrder, rootPower]
///   partition    column-index lists, present for fusion frames
///   metadata     constructor, sparsity, blockLog, warnings, floatEigenvalues
struct FrameDocument {
    SynthesisMatrix frame;
    Spectrum eigenvalues;
    std::optional<FusionPartition> partition;
};

/// Pretty-printed JSON followed by a newline. write(read(write(d))) == write(d).
std::string write_document(const FrameDocument& doc);
/// Prefers exactEntries; a document with only float entries is accepted when
/// every entry is real. Throws ValidationError on malformed content.
FrameDocument read_document(std::string_view json_text);

/// Coordinate complex general format, 1-based, entries sorted by (col, row).
std::string write_matrix_market(const SynthesisMatrix& f);

/// Dense N x M grid of "re+imi" cells with 17 significant digits.
std::string write_csv(const SynthesisMatrix& f);
std::vector<std::vector<std::complex<double>>> parse_csv(std::string_view text);

}  // namespace stetris
