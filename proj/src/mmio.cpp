#include "mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace psdsplit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] void parse_fail(long line, const std::string& what) {
    throw Error(errc::parse_error, "line " + std::to_string(line) + ": " + what, line);
}

struct MmFile {
    bool coordinate = true;
    bool symmetric = false;
    int rows = 0;
    int cols = 0;
    // full dense grid, row-major; symmetric files have both halves filled
    std::vector<double> grid;
};

double parse_value(const std::string& tok, long line) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') parse_fail(line, "bad numeric value '" + tok + "'");
    if (!std::isfinite(v)) parse_fail(line, "non-finite value '" + tok + "'");
    return v;
}

long parse_index(const std::string& tok, long line) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(tok, &pos);
        if (pos != tok.size()) parse_fail(line, "bad index '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        parse_fail(line, "bad index '" + tok + "'");
    }
}

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

MmFile read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open '" + path + "' for reading");

    std::string line;
    long lineno = 0;
    if (!std::getline(in, line)) parse_fail(1, "empty file");
    ++lineno;

    auto header = tokenize(lower(line));
    if (header.size() < 4 || header[0] != "%%matrixmarket" || header[1] != "matrix")
        parse_fail(lineno, "missing %%MatrixMarket matrix header");
    const std::string& layout = header[2];
    const std::string& field = header[3];
    const std::string symmetry = header.size() > 4 ? header[4] : "general";

    MmFile mm;
    if (layout == "coordinate") {
        mm.coordinate = true;
    } else if (layout == "array") {
        mm.coordinate = false;
    } else {
        parse_fail(lineno, "unknown layout '" + layout + "'");
    }
    if (field == "complex" || field == "pattern")
        throw Error(errc::unsupported_field, "field '" + field + "' is not supported", lineno);
    if (field != "real" && field != "double" && field != "integer")
        parse_fail(lineno, "unknown field '" + field + "'");
    if (symmetry == "symmetric") {
        mm.symmetric = true;
    } else if (symmetry == "general") {
        mm.symmetric = false;
    } else {
        throw Error(errc::unsupported_field, "symmetry '" + symmetry + "' is not supported",
                    lineno);
    }

    // size line (comments and blank lines may precede it)
    std::vector<std::string> size_toks;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        size_toks = tokenize(line);
        if (!size_toks.empty()) break;
    }
    if (size_toks.empty()) parse_fail(lineno, "missing size line");

    const std::size_t expected_sizes = mm.coordinate ? 3 : 2;
    if (size_toks.size() != expected_sizes) parse_fail(lineno, "malformed size line");
    mm.rows = static_cast<int>(parse_index(size_toks[0], lineno));
    mm.cols = static_cast<int>(parse_index(size_toks[1], lineno));
    if (mm.rows < 1 || mm.cols < 1) parse_fail(lineno, "dimensions must be positive");
    long nnz = mm.coordinate ? parse_index(size_toks[2], lineno) : 0;
    if (mm.coordinate && nnz < 0) parse_fail(lineno, "negative entry count");

    mm.grid.assign(static_cast<std::size_t>(mm.rows) * mm.cols, 0.0);
    auto cell = [&](long i, long j) -> double& {
        return mm.grid[static_cast<std::size_t>(i) * mm.cols + j];
    };

    if (mm.coordinate) {
        std::vector<char> filled(mm.grid.size(), 0);
        long seen = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line[0] == '%') continue;
            auto toks = tokenize(line);
            if (toks.empty()) continue;
            if (toks.size() != 3) parse_fail(lineno, "expected 'i j value'");
            const long i = parse_index(toks[0], lineno) - 1;
            const long j = parse_index(toks[1], lineno) - 1;
            if (i < 0 || i >= mm.rows || j < 0 || j >= mm.cols)
                parse_fail(lineno, "index out of range");
            if (mm.symmetric && j > i)
                parse_fail(lineno, "symmetric file stores the lower triangle only");
            const double v = parse_value(toks[2], lineno);
            if (filled[static_cast<std::size_t>(i) * mm.cols + j])
                parse_fail(lineno, "duplicate entry");
            filled[static_cast<std::size_t>(i) * mm.cols + j] = 1;
            cell(i, j) = v;
            if (mm.symmetric && i != j) cell(j, i) = v;
            ++seen;
        }
        if (seen != nnz)
            parse_fail(lineno, "entry count mismatch: header says " + std::to_string(nnz) +
                                   ", file has " + std::to_string(seen));
    } else {
        // array format: column-major; symmetric arrays store the lower
        // triangle of each column
        long i = mm.symmetric ? 0 : 0, j = 0;
        long col_start = 0;
        auto advance = [&]() {
            ++i;
            if (i >= mm.rows) {
                ++j;
                col_start = mm.symmetric ? j : 0;
                i = col_start;
            }
        };
        long expected = 0;
        if (mm.symmetric) {
            if (mm.rows != mm.cols) parse_fail(lineno, "symmetric array must be square");
            expected = static_cast<long>(tri_size(mm.rows));
        } else {
            expected = static_cast<long>(mm.rows) * mm.cols;
        }
        long seen = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line[0] == '%') continue;
            auto toks = tokenize(line);
            for (const auto& t : toks) {
                if (seen >= expected) parse_fail(lineno, "more values than the size line allows");
                const double v = parse_value(t, lineno);
                cell(i, j) = v;
                if (mm.symmetric && i != j) cell(j, i) = v;
                ++seen;
                advance();
            }
        }
        if (seen != expected)
            parse_fail(lineno, "value count mismatch: expected " + std::to_string(expected) +
                                   ", file has " + std::to_string(seen));
    }
    return mm;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::io_error, "cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error(errc::io_error, "write to '" + path + "' failed");
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

SymMatrix mm_read(const std::string& path) {
    MmFile mm = read_file(path);
    if (mm.rows != mm.cols)
        throw Error(errc::non_square, "file declares a " + std::to_string(mm.rows) + "x" +
                                          std::to_string(mm.cols) + " matrix");
    return SymMatrix::from_dense(mm.grid.data(), mm.rows);
}

LowerTriangular mm_read_lower(const std::string& path) {
    MmFile mm = read_file(path);
    if (mm.rows != mm.cols) throw Error(errc::non_square, "triangular factor must be square");
    if (mm.symmetric)
        throw Error(errc::parse_error, "triangular factor files must use general symmetry");
    const int n = mm.rows;
    LowerTriangular out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = mm.grid[static_cast<std::size_t>(i) * n + j];
            if (j > i) {
                if (v != 0.0)
                    throw Error(errc::parse_error, "nonzero entry above the diagonal at (" +
                                                       std::to_string(i) + "," +
                                                       std::to_string(j) + ")");
                continue;
            }
            out.at(i, j) = v;
        }
    }
    return out;
}

DiagMatrix mm_read_diag(const std::string& path) {
    MmFile mm = read_file(path);
    if (mm.rows != mm.cols) throw Error(errc::non_square, "diagonal matrix must be square");
    const int n = mm.rows;
    DiagMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = mm.grid[static_cast<std::size_t>(i) * n + j];
            if (i == j) {
                out[i] = v;
            } else if (v != 0.0) {
                throw Error(errc::parse_error, "off-diagonal entry in diagonal matrix file");
            }
        }
    }
    return out;
}

std::string mm_to_string(const SymMatrix& m) {
    const int n = m.dim();
    long nnz = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (m.at_lower(i, j) != 0.0) ++nnz;
    std::string s = "%%MatrixMarket matrix coordinate real symmetric\n";
    s += std::to_string(n) + " " + std::to_string(n) + " " + std::to_string(nnz) + "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double v = m.at_lower(i, j);
            if (v == 0.0) continue;
            s += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + format_value(v) + "\n";
        }
    }
    return s;
}

namespace {

std::string lower_triangle_coordinate_general(int n, const LowerTriangular* l,
                                              const DiagMatrix* d) {
    long nnz = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const double v = l ? (*l)(i, j) : (i == j ? (*d)[i] : 0.0);
            if (v != 0.0) ++nnz;
        }
    std::string s = "%%MatrixMarket matrix coordinate real general\n";
    s += std::to_string(n) + " " + std::to_string(n) + " " + std::to_string(nnz) + "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double v = l ? (*l)(i, j) : (i == j ? (*d)[i] : 0.0);
            if (v == 0.0) continue;
            s += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + format_value(v) + "\n";
        }
    }
    return s;
}

}  // namespace

std::string mm_to_string(const LowerTriangular& m) {
    return lower_triangle_coordinate_general(m.dim(), &m, nullptr);
}

std::string mm_to_string(const DiagMatrix& m) {
    return lower_triangle_coordinate_general(m.dim(), nullptr, &m);
}

void mm_write(const SymMatrix& m, const std::string& path) { write_text(path, mm_to_string(m)); }
void mm_write(const LowerTriangular& m, const std::string& path) {
    write_text(path, mm_to_string(m));
}
void mm_write(const DiagMatrix& m, const std::string& path) { write_text(path, mm_to_string(m)); }

void write_permutation(const Permutation& p, const std::string& path) {
    std::string s;
    for (int k = 0; k < p.dim(); ++k) s += std::to_string(p[k]) + "\n";
    write_text(path, s);
}

Permutation read_permutation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open '" + path + "' for reading");
    std::vector<int> perm;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 1) parse_fail(lineno, "expected one index per line");
        perm.push_back(static_cast<int>(parse_index(toks[0], lineno)));
    }
    return Permutation(std::move(perm));
}

}  // namespace psdsplit
