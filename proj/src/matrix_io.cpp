#include "tracecert/matrix_io.hpp"

#include "tracecert/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace tracecert {

namespace {

std::string strip_comments(std::string_view text) {
    std::string out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto line  = text.substr(pos, end - pos);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] != '#') {
            out.append(line);
            out.push_back('\n');
        }
        pos = end + 1;
    }
    return out;
}

std::string scalar(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

} // namespace

DenseMatrix parse_matrix(std::string_view text) {
    std::istringstream in(strip_comments(text));
    long long rows = 0;
    long long cols = 0;
    std::string field;
    if (!(in >> rows >> cols >> field)) throw Error(Errc::ParseError, "missing '<rows> <cols> <field>' header");
    if (rows <= 0 || cols <= 0) throw Error(Errc::ParseError, "matrix dimensions must be positive");
    if (field != "real" && field != "complex") {
        throw Error(Errc::ParseError, "field must be 'real' or 'complex', got '" + field + "'");
    }
    const bool cplx = field == "complex";
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(rows * cols));
    for (long long i = 0; i < rows * cols; ++i) {
        double re = 0.0;
        double im = 0.0;
        if (!(in >> re) || (cplx && !(in >> im))) {
            throw Error(Errc::ParseError, "expected " + std::to_string(rows * cols) + " scalars, read " +
                                              std::to_string(i));
        }
        entries.emplace_back(re, im);
    }
    std::string extra;
    if (in >> extra) throw Error(Errc::ParseError, "trailing data after matrix: '" + extra + "'");
    return DenseMatrix::from_row_major(rows, cols, entries);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DenseMatrix read_matrix_file(const std::filesystem::path& path) {
    try {
        return parse_matrix(read_text_file(path));
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string format_matrix(const DenseMatrix& m, std::string_view comment) {
    bool cplx = false;
    for (Index i = 0; i < m.rows() && !cplx; ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j).imag() != 0.0) {
                cplx = true;
                break;
            }
    std::string out;
    if (!comment.empty()) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + (cplx ? " complex\n" : " real\n");
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += "  ";
            out += scalar(m(i, j).real());
            if (cplx) out += " " + scalar(m(i, j).imag());
        }
        out += '\n';
    }
    return out;
}

void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& m, std::string_view comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
    out << format_matrix(m, comment);
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace tracecert
