#include "ugb/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ugb/errors.hpp"

namespace ugb {

namespace {

struct Line {
    int number;  // 1-based position in the raw text
    std::string text;
};

// Content lines only: comments ('#') and blank lines dropped.
std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        lines.push_back({number, raw});
    }
    return lines;
}

std::vector<long> parse_ints(const Line& line, int expected_count) {
    std::istringstream in(line.text);
    std::vector<long> values;
    long v;
    while (in >> v) values.push_back(v);
    std::string trailing;
    if (in.clear(), in >> trailing)
        throw ParseError(line.number, "unexpected token '" + trailing + "'");
    if (static_cast<int>(values.size()) != expected_count)
        throw ParseError(line.number, "expected " + std::to_string(expected_count) +
                                          " integers, found " + std::to_string(values.size()));
    return values;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "empty graph file");
    auto header = parse_ints(lines[0], 2);
    long n = header[0], m = header[1];
    if (n <= 0) throw ParseError(lines[0].number, "vertex count must be positive");
    if (m < 0) throw ParseError(lines[0].number, "negative edge count");
    if (static_cast<long>(lines.size()) - 1 != m)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));

    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i) {
        const Line& line = lines[i + 1];
        auto uv = parse_ints(line, 2);
        if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
            throw ParseError(line.number, "vertex out of range [1, " + std::to_string(n) + "]");
        edges.emplace_back(static_cast<int>(uv[0]) - 1, static_cast<int>(uv[1]) - 1);
        // incremental construction attributes graph errors to this line
        try {
            build_graph(static_cast<int>(n), edges);
        } catch (const Error& err) {
            throw ParseError(line.number, err.what());
        }
    }
    return build_graph(static_cast<int>(n), edges);
}

std::string format_binomial(const Binomial& b, FormatStyle style) {
    std::ostringstream out;
    if (style == FormatStyle::vector_row) {
        for (size_t e = 0; e < b.plus.size(); ++e) {
            if (e > 0) out << ' ';
            out << b.plus[e] - b.minus[e];
        }
        return out.str();
    }
    auto side = [&](const std::vector<int>& expo) {
        bool first = true;
        for (size_t e = 0; e < expo.size(); ++e) {
            if (expo[e] == 0) continue;
            if (!first) out << '*';
            first = false;
            out << 'e' << e + 1;
            if (expo[e] == 2) out << "^2";
        }
    };
    side(b.plus);
    out << " - ";
    side(b.minus);
    return out.str();
}

namespace {

Binomial binomial_from_row(const std::vector<long>& row, const Graph& g, int file_row) {
    Binomial b;
    b.plus.assign(g.edge_count(), 0);
    b.minus.assign(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        long v = row[e];
        if (v < -2 || v > 2)
            throw InvalidBinomialError(file_row,
                                       "entry " + std::to_string(v) + " outside {-2..2}");
        if (v > 0)
            b.plus[e] = static_cast<int>(v);
        else
            b.minus[e] = static_cast<int>(-v);
        b.degree += b.plus[e];
    }
    validate_binomial(b, g, file_row);
    return b;
}

Binomial parse_monomial_style(const std::string& text, const Graph& g) {
    size_t sep = text.find('-');
    if (sep == std::string::npos) throw ParseError(1, "missing '-' between monomials");
    Binomial b;
    b.plus.assign(g.edge_count(), 0);
    b.minus.assign(g.edge_count(), 0);
    auto parse_side = [&](std::string part, std::vector<int>& expo) {
        std::erase_if(part, [](unsigned char c) { return std::isspace(c); });
        std::istringstream in(part);
        std::string factor;
        while (std::getline(in, factor, '*')) {
            int power = 1;
            if (size_t caret = factor.find('^'); caret != std::string::npos) {
                try {
                    power = std::stoi(factor.substr(caret + 1));
                } catch (...) {
                    throw ParseError(1, "bad exponent in '" + factor + "'");
                }
                factor.resize(caret);
            }
            if (factor.size() < 2 || factor[0] != 'e')
                throw ParseError(1, "bad factor '" + factor + "'");
            int index;
            try {
                index = std::stoi(factor.substr(1));
            } catch (...) {
                throw ParseError(1, "bad factor '" + factor + "'");
            }
            if (index < 1 || index > g.edge_count())
                throw ParseError(1, "edge e" + std::to_string(index) + " does not exist");
            expo[index - 1] += power;
        }
    };
    parse_side(text.substr(0, sep), b.plus);
    parse_side(text.substr(sep + 1), b.minus);
    for (int v : b.plus) b.degree += v;
    validate_binomial(b, g);
    return b;
}

}  // namespace

Binomial parse_binomial(const std::string& text, const Graph& g) {
    if (text.find('e') != std::string::npos) return parse_monomial_style(text, g);
    auto lines = content_lines(text);
    if (lines.size() != 1) throw ParseError(1, "expected a single row of integers");
    return binomial_from_row(parse_ints(lines[0], g.edge_count()), g, -1);
}

BasisSet parse_basis(const std::string& text, const Graph& g) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "empty basis file");
    auto header = parse_ints(lines[0], 2);
    long k = header[0], m = header[1];
    if (k < 0) throw ParseError(lines[0].number, "negative element count");
    if (m != g.edge_count())
        throw DimensionMismatchError("basis file has " + std::to_string(m) +
                                     " columns, graph has " + std::to_string(g.edge_count()) +
                                     " edges");
    if (static_cast<long>(lines.size()) - 1 != k)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(k) + " rows, found " +
                             std::to_string(lines.size() - 1));

    std::set<Binomial> seen;
    for (long r = 0; r < k; ++r) {
        auto row = parse_ints(lines[r + 1], g.edge_count());
        seen.insert(canonicalize(binomial_from_row(row, g, static_cast<int>(r) + 1)));
    }
    BasisSet basis;
    basis.source = BasisSet::Source::imported;
    basis.elements.assign(seen.begin(), seen.end());
    return basis;
}

std::string format_basis(const BasisSet& basis, const Graph& g) {
    std::ostringstream out;
    out << basis.size() << ' ' << g.edge_count() << '\n';
    for (const auto& b : basis.elements)
        out << format_binomial(b, FormatStyle::vector_row) << '\n';
    return out.str();
}

}  // namespace ugb
