#include "agcodes/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

namespace agcodes {

void write_matrix_file(std::ostream& os, const Matrix& generator, std::int64_t r, const std::string& family) {
    if (family.empty() || family.find_first_of(" \t\n") != std::string::npos)
        throw FormatError("family tag must be a single token");
    os << "FIELD " << generator.field()->describe() << '\n';
    os << "CODE n=" << generator.cols() << " k=" << generator.rows() << " r=" << r << " family=" << family << '\n';
    for (std::size_t i = 0; i < generator.rows(); ++i) {
        const auto row = generator.row(i);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) os << ' ';
            os << row[c];
        }
        os << '\n';
    }
}

MatrixFile read_matrix_file(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("FIELD ", 0) != 0) throw FormatError("missing FIELD line");
    FieldPtr field;
    try {
        field = parse_field_description(line.substr(6));
    } catch (const FieldError& e) {
        throw FormatError(e.what());
    }

    static const std::regex code_re(R"(^CODE n=(\d+) k=(\d+) r=(-?\d+) family=(\S+)$)");
    std::smatch m;
    if (!std::getline(is, line) || !std::regex_match(line, m, code_re)) throw FormatError("malformed CODE line");
    const std::size_t n = std::stoul(m[1]);
    const std::size_t k = std::stoul(m[2]);
    const std::int64_t r = std::stoll(m[3]);
    const std::string family = m[4];

    std::vector<Rep> entries;
    entries.reserve(n * k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::getline(is, line)) throw FormatError("expected " + std::to_string(k) + " matrix rows");
        std::istringstream row(line);
        std::size_t count = 0;
        for (std::uint64_t v; row >> v; ++count) {
            if (v >= field->size()) throw FormatError("entry outside the field in row " + std::to_string(i));
            entries.push_back(static_cast<Rep>(v));
        }
        if (!row.eof() || count != n) throw FormatError("row " + std::to_string(i) + " does not hold n entries");
    }
    return {n, k, r, family, Matrix(field, k, n, std::move(entries))};
}

}  // namespace agcodes
