// Matrix Market exchange format, the only file format the library speaks.
// Reads coordinate and array files with real/integer field and general or
// symmetric symmetry; writes coordinate files with 17 significant digits so
// that write/read round-trips are exact on finite doubles.
#pragma once

#include <string>

#include "matrix.hpp"

namespace psdsplit {

// Symmetric matrix from a Matrix Market file. General-symmetry files are
// symmetrized through SymMatrix::from_dense, so asymmetry beyond tolerance
// is reported as an error.
SymMatrix mm_read(const std::string& path);

// Lower-triangular factor from a Matrix Market file; any entry strictly
// above the diagonal is a parse error.
LowerTriangular mm_read_lower(const std::string& path);

// Diagonal matrix from a Matrix Market file; off-diagonal entries are a
// parse error. The file must still declare square dimensions.
DiagMatrix mm_read_diag(const std::string& path);

// Writers. SymMatrix uses "coordinate real symmetric" (lower triangle),
// factors and diagonals use "coordinate real general". Entries that are
// exactly zero are dropped.
void mm_write(const SymMatrix& m, const std::string& path);
void mm_write(const LowerTriangular& m, const std::string& path);
void mm_write(const DiagMatrix& m, const std::string& path);

// Same content as the file writers, returned as a string. Used both by the
// writers and by byte-identity tests.
std::string mm_to_string(const SymMatrix& m);
std::string mm_to_string(const LowerTriangular& m);
std::string mm_to_string(const DiagMatrix& m);

// Pivot-order sidecar: one 0-based index per line.
void write_permutation(const Permutation& p, const std::string& path);
Permutation read_permutation(const std::string& path);

}  // namespace psdsplit
