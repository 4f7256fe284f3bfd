#pragma once

// Input formats:
//   vectors  - JSON array of strings or numbers, each read as an exact
//              rational: ["3/7", "1.9", 4]
//   matrices - JSON array of arrays of integers, or CSV with integer cells
//
// Numbers keep their source text (via the SAX interface), so 1.9 is 19/10.
// Malformed input raises InputError carrying a line and column.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rational.hpp"
#include "spectral.hpp"
#include "vecnorm.hpp"

namespace symineq::io {

class InputError : public std::runtime_error {
public:
    InputError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

/// Byte offset of element `path` (indices at successive nesting levels) in a
/// JSON text already known to be well formed.
inline std::size_t locate(std::string_view text, const std::vector<std::size_t>& path) {
    std::vector<std::size_t> position;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
        if (c == ',') {
            if (!position.empty()) ++position.back();
            continue;
        }
        if (c == ']') {
            if (!position.empty()) position.pop_back();
            continue;
        }
        // c starts a value
        if (position == path) return i;
        if (c == '[') {
            position.push_back(0);
        } else if (c == '"') {
            for (++i; i < text.size() && text[i] != '"'; ++i)
                if (text[i] == '\\') ++i;
        } else {
            while (i + 1 < text.size() && std::string_view(",] \n\r\t").find(text[i + 1]) == std::string_view::npos) ++i;
        }
    }
    return 0;
}

// Nested arrays of scalar tokens, numbers kept as their source text.
struct Token {
    bool is_array = false;
    bool is_string = false;
    std::string text;
    std::vector<Token> items;
};

class TokenSax : public nlohmann::json_sax<nlohmann::json> {
public:
    using json = nlohmann::json;

    Token root;
    std::string error;
    std::size_t error_offset = 0;

    bool null() override { return scalar("null", false); }
    bool boolean(bool v) override { return scalar(v ? "true" : "false", false); }
    bool number_integer(json::number_integer_t v) override { return scalar(std::to_string(v), false); }
    bool number_unsigned(json::number_unsigned_t v) override { return scalar(std::to_string(v), false); }
    bool number_float(json::number_float_t, const std::string& s) override { return scalar(s, false); }
    bool string(std::string& s) override { return scalar(s, true); }
    bool binary(json::binary_t&) override { return fail("binary values are not supported"); }
    bool start_object(std::size_t) override { return fail("objects are not allowed here; expected an array"); }
    bool key(std::string&) override { return false; }
    bool end_object() override { return false; }
    bool start_array(std::size_t) override {
        Token t;
        t.is_array = true;
        if (stack_.empty()) {
            root = std::move(t);
            stack_.push_back(&root);
        } else {
            stack_.back()->items.push_back(std::move(t));
            stack_.push_back(&stack_.back()->items.back());
        }
        return true;
    }
    bool end_array() override {
        stack_.pop_back();
        return true;
    }
    bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
        error = ex.what();
        error_offset = position == 0 ? 0 : position - 1;
        return false;
    }

private:
    std::vector<Token*> stack_;

    bool scalar(std::string text, bool is_string) {
        if (stack_.empty()) return fail("expected a JSON array at top level");
        Token t;
        t.is_string = is_string;
        t.text = std::move(text);
        stack_.back()->items.push_back(std::move(t));
        return true;
    }
    bool fail(const std::string& what) {
        if (error.empty()) error = what;
        return false;
    }
};

inline Token tokenize(std::string_view text, const std::string& source) {
    TokenSax sax;
    const bool ok = nlohmann::json::sax_parse(text.begin(), text.end(), &sax);
    if (!ok || !sax.root.is_array) {
        const auto [line, column] = line_column(text, sax.error_offset);
        throw InputError(source, line, column, sax.error.empty() ? "expected a JSON array" : sax.error);
    }
    return std::move(sax.root);
}

inline std::int64_t parse_int_cell(std::string_view cell) {
    const Rational q = parse_rational(cell);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw std::invalid_argument("not an integer: '" + std::string(cell) + "'");
    return q.get_num().get_si();
}

}  // namespace detail

inline RationalVector parse_vector_json(std::string_view text, const std::string& source = "<input>") {
    const auto root = detail::tokenize(text, source);
    auto error_at = [&](std::size_t i, const std::string& what) {
        const auto [line, column] = detail::line_column(text, detail::locate(text, {i}));
        return InputError(source, line, column, "entry " + std::to_string(i) + ": " + what);
    };
    if (root.items.empty()) throw InputError(source, 1, 1, "vector must have at least one entry");
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < root.items.size(); ++i) {
        const auto& item = root.items[i];
        if (item.is_array) throw error_at(i, "expected a number or rational string, found an array");
        Rational q;
        try {
            q = parse_rational(item.text);
        } catch (const std::exception& e) {
            throw error_at(i, e.what());
        }
        if (q < 0) throw error_at(i, "entries must be nonnegative");
        entries.push_back(std::move(q));
    }
    return RationalVector(std::move(entries));
}

inline IntMatrix parse_matrix_json(std::string_view text, const std::string& source = "<input>") {
    const auto root = detail::tokenize(text, source);
    auto error_at = [&](std::vector<std::size_t> path, const std::string& what) {
        const auto [line, column] = detail::line_column(text, detail::locate(text, path));
        return InputError(source, line, column, what);
    };
    if (root.items.empty()) throw InputError(source, 1, 1, "matrix must have at least one row");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < root.items.size(); ++i) {
        const auto& row = root.items[i];
        if (!row.is_array) throw error_at({i}, "row " + std::to_string(i) + " is not an array");
        if (!rows.empty() && row.items.size() != rows.front().size())
            throw error_at({i}, "row " + std::to_string(i) + " has " + std::to_string(row.items.size()) +
                                    " entries, expected " + std::to_string(rows.front().size()));
        std::vector<std::int64_t> cells;
        for (std::size_t j = 0; j < row.items.size(); ++j) {
            if (row.items[j].is_array) throw error_at({i, j}, "nested arrays are not allowed in a matrix row");
            try {
                cells.push_back(detail::parse_int_cell(row.items[j].text));
            } catch (const std::exception& e) {
                throw error_at({i, j}, "cell (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
            }
        }
        rows.push_back(std::move(cells));
    }
    return IntMatrix::from_rows(rows);
}

inline IntMatrix parse_matrix_csv(std::string_view text, const std::string& source = "<input>") {
    std::vector<std::vector<std::int64_t>> rows;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") != std::string_view::npos) {
            std::vector<std::int64_t> cells;
            std::size_t col_start = 0;
            while (true) {
                std::size_t comma = line.find(',', col_start);
                std::string_view cell = line.substr(col_start, comma == std::string_view::npos ? line.npos : comma - col_start);
                try {
                    cells.push_back(detail::parse_int_cell(cell));
                } catch (const std::exception& e) {
                    throw InputError(source, line_no, col_start + 1, e.what());
                }
                if (comma == std::string_view::npos) break;
                col_start = comma + 1;
            }
            if (!rows.empty() && cells.size() != rows.front().size())
                throw InputError(source, line_no, 1,
                                 "row has " + std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(rows.front().size()));
            rows.push_back(std::move(cells));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    if (rows.empty()) throw InputError(source, 1, 1, "matrix must have at least one row");
    return IntMatrix::from_rows(rows);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// An argument starting with '[' is an inline literal; anything else is a path.
inline RationalVector load_vector(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '[') return parse_vector_json(arg, "<literal>");
    return parse_vector_json(read_file(arg), arg);
}

inline IntMatrix load_matrix(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '[') return parse_matrix_json(arg, "<literal>");
    const std::string text = read_file(arg);
    if (arg.size() >= 4 && arg.compare(arg.size() - 4, 4, ".csv") == 0) return parse_matrix_csv(text, arg);
    return parse_matrix_json(text, arg);
}

/// True when the JSON text's top-level array holds arrays (a matrix).
inline bool looks_like_matrix(const std::string& arg) {
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || arg[first] != '[') {
        if (arg.size() >= 4 && arg.compare(arg.size() - 4, 4, ".csv") == 0) return true;
        text = read_file(arg);
    }
    const auto open = text.find('[');
    if (open == std::string::npos) return false;
    const auto next = text.find_first_not_of(" \t\r\n", open + 1);
    return next != std::string::npos && text[next] == '[';
}

}  // namespace symineq::io
