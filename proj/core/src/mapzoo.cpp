#include "polyaut/mapzoo.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "polyaut/errors.hpp"
#include "polyaut/polynomial_io.hpp"

namespace polyaut {

namespace {

struct RawAssignment {
    int component;  // 1-based
    std::string polynomial_text;
    int line;        // 1-based line of the assignment
    int column_base; // 0-based offset of the polynomial text within the line
};

std::vector<RawAssignment> split_assignments(const std::string& text) {
    std::vector<RawAssignment> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = 0;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size() || line[pos] == '#') continue;
        if (line[pos] != 'F' && line[pos] != 'f') {
            throw ParseError("expected a component line 'F<k> = ...'", line_no, static_cast<int>(pos) + 1);
        }
        ++pos;
        if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos]))) {
            throw ParseError("expected a component index after 'F'", line_no, static_cast<int>(pos) + 1);
        }
        long index = 0;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
            index = index * 10 + (line[pos] - '0');
            if (index > 10'000) throw ParseError("component index too large", line_no, static_cast<int>(pos) + 1);
            ++pos;
        }
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size() || line[pos] != '=') {
            throw ParseError("expected '=' after the component index", line_no, static_cast<int>(pos) + 1);
        }
        ++pos;
        std::string body = line.substr(pos);
        if (body.find_first_not_of(" \t\r") == std::string::npos) {
            throw ParseError("empty polynomial", line_no, static_cast<int>(pos) + 1);
        }
        out.push_back({static_cast<int>(index), std::move(body), line_no, static_cast<int>(pos)});
    }
    return out;
}

}  // namespace

PolynomialMap parse_map(const std::string& text, const std::string& label) {
    const std::vector<RawAssignment> raw = split_assignments(text);
    if (raw.empty()) throw ParseError("map file contains no components", 1, 1);
    const int n = static_cast<int>(raw.size());

    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& a : raw) {
        if (a.component < 1 || a.component > n) {
            throw ParseError("component index F" + std::to_string(a.component) +
                                 " outside 1.." + std::to_string(n),
                             a.line, 1);
        }
        if (seen[static_cast<std::size_t>(a.component - 1)]) {
            throw ParseError("duplicate component F" + std::to_string(a.component), a.line, 1);
        }
        seen[static_cast<std::size_t>(a.component - 1)] = true;
    }

    std::vector<Polynomial> components(static_cast<std::size_t>(n), Polynomial(n));
    for (const auto& a : raw) {
        components[static_cast<std::size_t>(a.component - 1)] =
            parse_polynomial(a.polynomial_text, n, a.line, a.column_base);
    }
    return PolynomialMap(std::move(components), label);
}

std::string print_map(const PolynomialMap& map) {
    std::ostringstream os;
    for (int i = 0; i < map.n; ++i) {
        os << 'F' << (i + 1) << " = " << to_string(map.components[static_cast<std::size_t>(i)]) << '\n';
    }
    return os.str();
}

DruzkowskiSpec::DruzkowskiSpec(int size, std::vector<Rational> coefficients)
    : n(size), entries(std::move(coefficients)) {
    if (n < 1) throw std::invalid_argument("DruzkowskiSpec: dimension must be positive");
    if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw std::invalid_argument("DruzkowskiSpec: matrix must be n*n");
    }
}

const Rational& DruzkowskiSpec::at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
}

DruzkowskiSpec parse_druzkowski_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line()) throw ParseError("expected the dimension on the first line", 1, 1);
    int n = 0;
    try {
        n = std::stoi(line);
    } catch (const std::exception&) {
        throw ParseError("expected the dimension on the first line", line_no, 1);
    }
    if (n < 1 || n > 512) throw ParseError("dimension out of range", line_no, 1);

    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        if (!next_content_line()) {
            throw ParseError("expected " + std::to_string(n) + " matrix rows", line_no + 1, 1);
        }
        std::istringstream row(line);
        std::string token;
        int c = 0;
        while (row >> token) {
            if (c >= n) throw ParseError("row has more than n entries", line_no, 1);
            try {
                entries.push_back(Rational::from_string(token));
            } catch (const std::exception&) {
                throw ParseError("bad rational '" + token + "'", line_no, 1);
            }
            ++c;
        }
        if (c != n) throw ParseError("row has fewer than n entries", line_no, 1);
    }
    return DruzkowskiSpec(n, std::move(entries));
}

DruzkowskiMap druzkowski_from_matrix(const DruzkowskiSpec& spec, const std::string& label) {
    const int n = spec.n;
    std::vector<Polynomial> components;
    components.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Polynomial linear_form(n);
        for (int j = 0; j < n; ++j) {
            const Rational& a = spec.at(i, j);
            if (!a.is_zero()) linear_form += Polynomial::variable(n, j).scaled(a);
        }
        components.push_back(Polynomial::variable(n, i) + linear_form.pow(3));
    }

    bool a2_zero = true;
    for (int r = 0; r < n && a2_zero; ++r) {
        for (int c = 0; c < n && a2_zero; ++c) {
            Rational acc(0);
            for (int k = 0; k < n; ++k) acc += spec.at(r, k) * spec.at(k, c);
            a2_zero = acc.is_zero();
        }
    }

    return DruzkowskiMap{PolynomialMap(std::move(components), label),
                         rational_matrix_rank(n, spec.entries), a2_zero};
}

bool has_constant_jacobian_det(const PolynomialMap& map) {
    return jacobian_matrix(map).determinant().is_constant();
}

PolynomialMap linear_map(int n, const std::vector<Rational>& row_major, const std::string& label) {
    if (row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw std::invalid_argument("linear_map: matrix must be n*n");
    }
    std::vector<Polynomial> components;
    components.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Polynomial row(n);
        for (int j = 0; j < n; ++j) {
            const Rational& a = row_major[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                          static_cast<std::size_t>(j)];
            if (!a.is_zero()) row += Polynomial::variable(n, j).scaled(a);
        }
        components.push_back(std::move(row));
    }
    return PolynomialMap(std::move(components), label);
}

int rational_matrix_rank(int n, const std::vector<Rational>& row_major) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                row_major[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(c)];
        }
    }
    int rank = 0;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int r = row; r < n; ++r) {
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(pivot)]);
        const Rational inv = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].reciprocal();
        for (int c = col; c < n; ++c) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            const Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = col; c < n; ++c) {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

PolynomialMap build_nagata() {
    const int n = 3;
    std::vector<Polynomial> comps;
    comps.push_back(parse_polynomial("x1 - 2*x2*(x3*x1 + x2^2) - x3*(x3*x1 + x2^2)^2", n));
    comps.push_back(parse_polynomial("x2 + x3*(x3*x1 + x2^2)", n));
    comps.push_back(parse_polynomial("x3", n));
    return PolynomialMap(std::move(comps), "nagata");
}

PolynomialMap build_toy2() {
    std::vector<Polynomial> comps;
    comps.push_back(parse_polynomial("x1", 2));
    comps.push_back(parse_polynomial("x2 + x1^2", 2));
    return PolynomialMap(std::move(comps), "toy2");
}

}  // namespace

DruzkowskiSpec druzkowski13_matrix() {
    // Row patterns: u acts on X4,X5,X6,X7,X8,X9; v on X1,X2,X3; w on X3,X10,X11,
    // with +-1 couplings into X12/X13.
    const char* rows[13] = {
        "0 0 0 1/6 1/6 -1/3 -1/6 -1/6 1/3 0 0 0 1",
        "0 0 0 1/6 1/6 -1/3 -1/6 -1/6 1/3 0 0 0 -1",
        "0 0 0 1/6 1/6 -1/3 -1/6 -1/6 1/3 0 0 0 0",
        "1/6 1/6 -1/3 0 0 0 0 0 0 0 0 1 0",
        "1/6 1/6 -1/3 0 0 0 0 0 0 0 0 -1 0",
        "1/6 1/6 -1/3 0 0 0 0 0 0 0 0 0 0",
        "0 0 -1/3 0 0 0 0 0 0 1/6 1/6 0 1",
        "0 0 -1/3 0 0 0 0 0 0 1/6 1/6 0 -1",
        "0 0 -1/3 0 0 0 0 0 0 1/6 1/6 0 0",
        "0 0 0 1/6 1/6 -1/3 -1/6 -1/6 1/3 0 0 1 0",
        "0 0 0 1/6 1/6 -1/3 -1/6 -1/6 1/3 0 0 -1 0",
        "0 0 0 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 0 0 0 0 0 0 0 0 0",
    };
    std::vector<Rational> entries;
    entries.reserve(13 * 13);
    for (const char* row : rows) {
        std::istringstream in(row);
        std::string token;
        while (in >> token) entries.push_back(Rational::from_string(token));
    }
    return DruzkowskiSpec(13, std::move(entries));
}

const std::map<std::string, PolynomialMap>& fixtures() {
    static const std::map<std::string, PolynomialMap> zoo = [] {
        std::map<std::string, PolynomialMap> maps;
        for (int n = 1; n <= 4; ++n) maps.emplace("identity" + std::to_string(n), identity_map(n));
        maps.emplace("toy2", build_toy2());
        maps.emplace("nagata", build_nagata());
        maps.emplace("druzkowski13", druzkowski_from_matrix(druzkowski13_matrix(), "druzkowski13").map);
        return maps;
    }();
    return zoo;
}

}  // namespace polyaut
