#include "detcond/matrix_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace detcond {

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

std::pair<std::size_t, std::size_t> line_column(std::string_view document, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < document.size(); ++i) {
        if (document[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

TextMatrix parse_plain(std::string_view document) {
    TextMatrix out;
    std::size_t line_no = 0;
    std::size_t first_row_line = 0;
    std::size_t start = 0;
    while (start <= document.size()) {
        auto end = document.find('\n', start);
        if (end == std::string_view::npos) end = document.size();
        std::string_view line = document.substr(start, end - start);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<TextCell> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && is_separator(line[pos])) ++pos;
            if (pos >= line.size()) break;
            const std::size_t token_start = pos;
            while (pos < line.size() && !is_separator(line[pos])) ++pos;
            row.push_back({std::string(line.substr(token_start, pos - token_start)), line_no, token_start + 1});
        }
        if (!row.empty()) {
            if (out.rows == 0) {
                out.cols = row.size();
                first_row_line = line_no;
            } else if (row.size() != out.cols) {
                throw ParseError("row " + std::to_string(out.rows + 1) + " has " + std::to_string(row.size()) +
                                     " entries, expected " + std::to_string(out.cols) + " (row 1, line " +
                                     std::to_string(first_row_line) + ")",
                                 line_no, 1);
            }
            ++out.rows;
            for (auto& cell : row) out.cells.push_back(std::move(cell));
        }
        if (end == document.size()) break;
        start = end + 1;
    }
    if (out.rows == 0) throw ParseError("no matrix rows found");
    return out;
}

TextMatrix parse_structured(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(document, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON matrix document", line, column);
    }
    auto require_count = [&](const char* key) -> std::size_t {
        if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
            throw ParseError(std::string("structured matrix needs a non-negative integer '") + key + "'");
        }
        return doc[key].get<std::size_t>();
    };
    TextMatrix out;
    out.rows = require_count("rows");
    out.cols = require_count("cols");
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw ParseError("structured matrix needs an 'entries' array");
    }
    const auto& entries = doc["entries"];
    if (entries.size() != out.rows * out.cols) {
        throw ParseError("structured matrix has " + std::to_string(entries.size()) + " entries, expected " +
                         std::to_string(out.rows * out.cols));
    }
    std::size_t index = 0;
    for (const auto& e : entries) {
        std::string text;
        if (e.is_string()) {
            text = e.get<std::string>();
        } else if (e.is_number()) {
            text = e.dump();
        } else {
            throw ParseError("entry " + std::to_string(index) + " is neither a string nor a number");
        }
        out.cells.push_back({std::move(text), 0, 0});
        ++index;
    }
    return out;
}

}  // namespace

TextMatrix parse_matrix_text(std::string_view document) {
    const auto first = document.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && document[first] == '{') return parse_structured(document);
    return parse_plain(document);
}

TextMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_text(buffer.str());
}

}  // namespace detcond
