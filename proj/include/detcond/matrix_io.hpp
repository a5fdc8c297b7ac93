#pragma once

// Matrix files come in two shapes:
//
//   plain      one row per line, entries separated by whitespace and/or
//              commas; '#' starts a comment; blank lines are skipped.
//   structured a JSON object {"rows": r, "cols": c, "entries": [...]} with
//              r*c entries in row-major order, each a string or a number.
//
// Entries are kept as text until the scalar kind is known, so a parse error
// can still name the line and column of the offending token.

#include "detcond/error.hpp"
#include "detcond/matrix.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace detcond {

struct TextCell {
    std::string text;
    std::size_t line = 0;  // 0 for structured documents
    std::size_t column = 0;
};

struct TextMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<TextCell> cells;  // row-major
};

/// Throws ParseError on a ragged row, an empty document or malformed JSON.
TextMatrix parse_matrix_text(std::string_view document);

TextMatrix read_matrix_file(const std::filesystem::path& path);

template <Scalar S>
Matrix<S> to_matrix(const TextMatrix& text) {
    std::vector<S> entries;
    entries.reserve(text.cells.size());
    for (std::size_t index = 0; index < text.cells.size(); ++index) {
        const auto& cell = text.cells[index];
        try {
            entries.push_back(S::parse(cell.text));
        } catch (const ParseError& e) {
            if (cell.line != 0) throw ParseError(e.what(), cell.line, cell.column);
            throw ParseError(std::string(e.what()) + " at entry (" + std::to_string(index / text.cols + 1) + "," +
                             std::to_string(index % text.cols + 1) + ")");
        }
    }
    return Matrix<S>(text.rows, text.cols, std::move(entries));
}

/// Plain format, one row per line, entries in canonical text form.
template <Scalar S>
std::string format_matrix(const Matrix<S>& m) {
    std::string out;
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            if (j > 1) out += ' ';
            out += to_text(m(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace detcond
