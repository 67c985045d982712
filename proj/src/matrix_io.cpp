#include "k3lattice/matrix_io.hpp"

#include <sstream>
#include <vector>

namespace k3lattice {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

struct Header {
    std::size_t rows = 0;
    std::size_t cols = 0;
};

// Reads "<rows> <cols>" plus exactly `rows` data lines; trailing blank
// lines are tolerated, anything else is an error with a line number.
template <typename Entry, typename Parse>
Matrix<Entry> parse_matrix(std::string_view text, Parse parse_entry) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw matrix_parse_error("empty input, expected '<rows> <cols>'");
    const auto header = split_ws(line);
    if (header.size() != 2)
        throw matrix_parse_error("line 1: expected '<rows> <cols>'");
    Header h;
    try {
        const Integer r = parse_integer(header[0]);
        const Integer c = parse_integer(header[1]);
        if (r < 0 || c < 0 || r > 100000 || c > 100000)
            throw std::invalid_argument("dimension out of range");
        h.rows = static_cast<std::size_t>(r);
        h.cols = static_cast<std::size_t>(c);
    } catch (const std::invalid_argument& e) {
        throw matrix_parse_error(std::string("line 1: bad dimensions: ") + e.what());
    }

    Matrix<Entry> m(h.rows, h.cols);
    for (std::size_t i = 0; i < h.rows; ++i) {
        if (!std::getline(in, line))
            throw matrix_parse_error("unexpected end of input at row " + std::to_string(i + 1));
        const auto tokens = split_ws(line);
        if (tokens.size() != h.cols)
            throw matrix_parse_error("line " + std::to_string(i + 2) + ": expected " +
                                     std::to_string(h.cols) + " entries, got " +
                                     std::to_string(tokens.size()));
        for (std::size_t j = 0; j < h.cols; ++j) {
            try {
                m(i, j) = parse_entry(tokens[j]);
            } catch (const std::invalid_argument& e) {
                throw matrix_parse_error("line " + std::to_string(i + 2) + ": " + e.what());
            }
        }
    }
    while (std::getline(in, line))
        if (!split_ws(line).empty())
            throw matrix_parse_error("trailing data after row " + std::to_string(h.rows));
    return m;
}

} // namespace

IntegerMatrix parse_integer_matrix(std::string_view text) {
    return parse_matrix<Integer>(text, [](const std::string& tok) { return parse_integer(tok); });
}

RationalMatrix parse_rational_matrix(std::string_view text) {
    return parse_matrix<Rational>(text, [](const std::string& tok) { return parse_rational(tok); });
}

namespace {

template <typename M, typename Format>
std::string format_matrix(const M& m, Format format_entry) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += format_entry(m(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string to_text(const IntegerMatrix& m) {
    return format_matrix(m, [](const Integer& x) { return format_integer(x); });
}

std::string to_text(const RationalMatrix& m) {
    return format_matrix(m, [](const Rational& x) { return format_rational(x); });
}

} // namespace k3lattice
