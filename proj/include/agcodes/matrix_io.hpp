#pragma once

#include <iosfwd>
#include <string>

#include "agcodes/fmatrix.hpp"

namespace agcodes {

/// Line-oriented generator-matrix file:
///
///     FIELD GF(p^k) mod=c_k,...,c_0
///     CODE n=<n> k=<k> r=<r> family=<tag>
///     <k lines of n space-separated element encodings>
struct MatrixFile {
    std::size_t n = 0;
    std::size_t k = 0;
    std::int64_t r = 0;
    std::string family;
    Matrix generator;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_matrix_file(std::ostream& os, const Matrix& generator, std::int64_t r, const std::string& family);
MatrixFile read_matrix_file(std::istream& is);

}  // namespace agcodes
