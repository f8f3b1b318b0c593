#pragma once

// Line-oriented tokenization shared by the matrix, complex, and filtration
// text formats: `#` starts a comment, blank lines are skipped, tokens are
// whitespace-separated, and original line numbers are kept for diagnostics.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pershom {

struct TextLine {
    std::size_t number = 0;  // 1-based line number in the source text
    std::vector<std::string> tokens;
};

inline std::vector<TextLine> tokenize_lines(std::string_view text) {
    std::vector<TextLine> out;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        TextLine tl{lineno, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tl.tokens.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (!tl.tokens.empty()) out.push_back(std::move(tl));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

inline std::string at_line(std::size_t lineno) { return "line " + std::to_string(lineno) + ": "; }

inline std::optional<unsigned> parse_natural(std::string_view s) {
    unsigned v = 0;
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace pershom
