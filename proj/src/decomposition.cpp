#include "fockcb/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace fockcb {

namespace {

long long to_int64(const Laurent::Int& value) {
  static const Laurent::Int max = std::numeric_limits<long long>::max();
  static const Laurent::Int min = std::numeric_limits<long long>::min();
  if (value > max || value < min)
    throw error("coefficient exceeds the 64-bit range supported by this serialization");
  return value.convert_to<long long>();
}

}  // namespace

MatrixFormat parse_matrix_format(const std::string& name) {
  if (name == "text") return MatrixFormat::text;
  if (name == "csv") return MatrixFormat::csv;
  if (name == "json") return MatrixFormat::json;
  throw usage_error("unknown format '" + name + "' (expected text, csv or json)");
}

DecompositionMatrix::DecompositionMatrix(ParamSet params, int n, std::vector<Multipartition> rows,
                                         std::vector<Multipartition> cols,
                                         std::vector<std::map<Multipartition, Laurent>> col_entries)
    : params_(std::move(params)),
      n_(n),
      rows_(std::move(rows)),
      cols_(std::move(cols)),
      col_entries_(std::move(col_entries)) {
  if (cols_.size() != col_entries_.size())
    throw invariant_error("column labels and column entries disagree in length");
}

const std::map<Multipartition, Laurent>& DecompositionMatrix::column(std::size_t j) const {
  if (j >= col_entries_.size()) throw precondition_error("column index out of range");
  return col_entries_[j];
}

Laurent DecompositionMatrix::entry(const Multipartition& row, std::size_t j) const {
  const auto& entries = column(j);
  auto it = entries.find(row);
  return it == entries.end() ? Laurent() : it->second;
}

DecompositionMatrix DecompositionMatrix::specialized() const {
  std::vector<std::map<Multipartition, Laurent>> plain;
  plain.reserve(col_entries_.size());
  for (const auto& entries : col_entries_) {
    std::map<Multipartition, Laurent> column;
    for (const auto& [row, coeff] : entries) {
      Laurent value = Laurent::monomial(coeff.eval_at_one(), 0);
      if (!value.is_zero()) column.emplace(row, std::move(value));
    }
    plain.push_back(std::move(column));
  }
  return DecompositionMatrix(params_, n_, rows_, cols_, std::move(plain));
}

bool DecompositionMatrix::has_negative_specialized_entry() const {
  for (const auto& entries : col_entries_)
    for (const auto& [row, coeff] : entries)
      if (coeff.eval_at_one() < 0) return true;
  return false;
}

DecompositionMatrix assemble(const CanonicalBasis& basis) {
  const ParamSet& params = basis.params();
  AValueCache cache(params);

  std::vector<Multipartition> rows = enumerate_multipartitions(basis.rank(), params.level());
  std::sort(rows.begin(), rows.end(), [&](const Multipartition& x, const Multipartition& y) {
    const Rational& ax = cache(x);
    const Rational& ay = cache(y);
    if (ax != ay) return ax < ay;
    return x < y;
  });

  std::vector<Multipartition> cols;
  std::vector<std::map<Multipartition, Laurent>> col_entries;
  for (const CanonicalBasis::Entry* entry : basis.by_ascending_a()) {
    cols.push_back(entry->label);
    col_entries.push_back(entry->vector.terms());
  }
  return DecompositionMatrix(params, basis.rank(), std::move(rows), std::move(cols),
                             std::move(col_entries));
}

namespace {

void write_text_format(const DecompositionMatrix& m, std::ostream& os, bool q_mode) {
  std::vector<std::string> row_labels;
  std::size_t label_width = 0;
  for (const auto& row : m.rows()) {
    row_labels.push_back(row.to_string());
    label_width = std::max(label_width, row_labels.back().size());
  }

  std::vector<std::string> col_labels;
  std::vector<std::vector<std::string>> cells(m.cols().size());
  std::vector<std::size_t> col_widths;
  for (std::size_t j = 0; j < m.cols().size(); ++j) {
    col_labels.push_back(m.cols()[j].to_string());
    std::size_t width = col_labels.back().size();
    for (const auto& row : m.rows()) {
      Laurent value = m.entry(row, j);
      std::string cell;
      if (value.is_zero())
        cell = ".";
      else if (q_mode)
        cell = value.to_string();
      else
        cell = std::to_string(to_int64(value.eval_at_one()));
      width = std::max(width, cell.size());
      cells[j].push_back(std::move(cell));
    }
    col_widths.push_back(width);
  }

  auto pad_left = [&os](const std::string& text, std::size_t width) {
    os << std::string(width - text.size(), ' ') << text;
  };
  if (!col_labels.empty()) {
    os << std::string(label_width, ' ');
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
      os << "  ";
      pad_left(col_labels[j], col_widths[j]);
    }
    os << '\n';
  }
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    os << row_labels[r];
    if (!col_labels.empty()) os << std::string(label_width - row_labels[r].size(), ' ');
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
      os << "  ";
      pad_left(cells[j][r], col_widths[j]);
    }
    os << '\n';
  }
}

void write_csv_format(const DecompositionMatrix& m, std::ostream& os) {
  for (const auto& col : m.cols()) os << ',' << col.to_string();
  os << '\n';
  for (const auto& row : m.rows()) {
    os << row.to_string();
    for (std::size_t j = 0; j < m.cols().size(); ++j)
      os << ',' << to_int64(m.entry(row, j).eval_at_one());
    os << '\n';
  }
}

nlohmann::json laurent_to_json(const Laurent& value) {
  nlohmann::json pairs = nlohmann::json::array();
  for (int exp = value.max_exp(); exp >= value.min_exp(); --exp) {
    if (value.coeff(exp) == 0) continue;
    pairs.push_back({exp, to_int64(value.coeff(exp))});
  }
  return pairs;
}

void write_json_format(const DecompositionMatrix& m, std::ostream& os, bool q_mode) {
  nlohmann::ordered_json root;
  root["e"] = m.params().e();
  root["d"] = m.params().level();
  root["v"] = m.params().charges();
  root["n"] = m.n();
  nlohmann::ordered_json rows = nlohmann::json::array();
  for (const auto& row : m.rows()) rows.push_back(row.to_string());
  root["rows"] = std::move(rows);
  nlohmann::ordered_json columns = nlohmann::json::array();
  for (std::size_t j = 0; j < m.cols().size(); ++j) {
    nlohmann::ordered_json column;
    column["label"] = m.cols()[j].to_string();
    nlohmann::ordered_json entries = nlohmann::json::array();
    for (const auto& [row, coeff] : m.column(j)) {
      nlohmann::ordered_json entry;
      entry["row"] = row.to_string();
      if (q_mode)
        entry["value"] = laurent_to_json(coeff);
      else
        entry["value"] = to_int64(coeff.eval_at_one());
      entries.push_back(std::move(entry));
    }
    column["entries"] = std::move(entries);
    columns.push_back(std::move(column));
  }
  root["columns"] = std::move(columns);
  os << root.dump(2) << '\n';
}

}  // namespace

void write_matrix(const DecompositionMatrix& m, std::ostream& os, MatrixFormat format,
                  bool q_mode) {
  switch (format) {
    case MatrixFormat::text:
      write_text_format(m, os, q_mode);
      return;
    case MatrixFormat::csv:
      if (q_mode) throw usage_error("csv output supports only the specialized integer matrix");
      write_csv_format(m, os);
      return;
    case MatrixFormat::json:
      write_json_format(m, os, q_mode);
      return;
  }
  throw usage_error("unknown matrix format");
}

DecompositionMatrix read_matrix_json(std::istream& is) {
  nlohmann::json root;
  try {
    is >> root;
  } catch (const nlohmann::json::exception& ex) {
    throw usage_error(std::string("malformed matrix json: ") + ex.what());
  }
  try {
    ParamSet params(root.at("e").get<int>(), root.at("v").get<std::vector<int>>());
    if (root.at("d").get<int>() != params.level())
      throw usage_error("field 'd' disagrees with the length of 'v'");
    int n = root.at("n").get<int>();
    std::vector<Multipartition> rows;
    for (const auto& row : root.at("rows")) rows.push_back(Multipartition::parse(row.get<std::string>()));
    std::vector<Multipartition> cols;
    std::vector<std::map<Multipartition, Laurent>> col_entries;
    for (const auto& column : root.at("columns")) {
      cols.push_back(Multipartition::parse(column.at("label").get<std::string>()));
      std::map<Multipartition, Laurent> entries;
      for (const auto& entry : column.at("entries")) {
        Multipartition row = Multipartition::parse(entry.at("row").get<std::string>());
        const auto& value = entry.at("value");
        Laurent coeff;
        if (value.is_array()) {
          for (const auto& pair : value)
            coeff += Laurent::monomial(pair.at(1).get<long long>(), pair.at(0).get<int>());
        } else {
          coeff = Laurent(value.get<long long>());
        }
        if (!coeff.is_zero()) entries.emplace(std::move(row), std::move(coeff));
      }
      col_entries.push_back(std::move(entries));
    }
    return DecompositionMatrix(std::move(params), n, std::move(rows), std::move(cols),
                               std::move(col_entries));
  } catch (const nlohmann::json::exception& ex) {
    throw usage_error(std::string("matrix json does not match the schema: ") + ex.what());
  }
}

}  // namespace fockcb
