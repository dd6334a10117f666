#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fockcb/canonical.hpp"

namespace fockcb {

enum class MatrixFormat { text, csv, json };
MatrixFormat parse_matrix_format(const std::string& name);

// Rows are all multipartitions of the rank, columns the FLOTW ones; both
// ordered by ascending a-value with canonical order on ties. Entries are
// kept as polynomials; the specialized integer matrix is their value at
// q = 1.
class DecompositionMatrix {
 public:
  DecompositionMatrix(ParamSet params, int n, std::vector<Multipartition> rows,
                      std::vector<Multipartition> cols,
                      std::vector<std::map<Multipartition, Laurent>> col_entries);

  const ParamSet& params() const { return params_; }
  int n() const { return n_; }
  const std::vector<Multipartition>& rows() const { return rows_; }
  const std::vector<Multipartition>& cols() const { return cols_; }
  const std::map<Multipartition, Laurent>& column(std::size_t j) const;
  Laurent entry(const Multipartition& row, std::size_t j) const;

  // Copy with every entry replaced by its integer value at q = 1.
  DecompositionMatrix specialized() const;

  // True if some entry specializes to a negative integer. Not an error by
  // itself, but worth a diagnostic: all known decomposition numbers are
  // nonnegative.
  bool has_negative_specialized_entry() const;

  bool operator==(const DecompositionMatrix&) const = default;

 private:
  ParamSet params_;
  int n_ = 0;
  std::vector<Multipartition> rows_;
  std::vector<Multipartition> cols_;
  std::vector<std::map<Multipartition, Laurent>> col_entries_;
};

DecompositionMatrix assemble(const CanonicalBasis& basis);

// text: aligned grid with '.' for zero entries; csv: header row of column
// labels, first column of row labels (specialized entries only); json: the
// schema {"e","d","v","n","rows","columns"} with entries as integers or
// [[exp,coeff],...] pairs in q-mode.
void write_matrix(const DecompositionMatrix& m, std::ostream& os, MatrixFormat format,
                  bool q_mode);

DecompositionMatrix read_matrix_json(std::istream& is);

}  // namespace fockcb
