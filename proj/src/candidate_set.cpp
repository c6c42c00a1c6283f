#include "liouville/candidate_set.hpp"

#include "liouville/error.hpp"

namespace liouville {

CandidateSet::CandidateSet(std::size_t dim, std::vector<Row> rows)
    : dim_(dim), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != dim_) {
      throw Error(Errc::BadDimension, "row of length " + std::to_string(row.size()) +
                                          " in a set of dimension " + std::to_string(dim_));
    }
    for (const auto& v : row) {
      if (v < 1) throw Error(Errc::InvalidArgument, "entry " + v.get_str() + " is not positive");
    }
  }
}

std::string CandidateSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0) out += ',';
      out += rows_[i][j].get_str();
    }
  }
  return out;
}

CandidateSet CandidateSet::parse(std::string_view text) {
  std::vector<Row> rows;
  std::size_t dim = 0;
  while (!text.empty()) {
    const auto semi = text.find(';');
    auto row_text = text.substr(0, semi);
    Row row;
    while (!row_text.empty()) {
      const auto comma = row_text.find(',');
      const auto q = parse_rational(row_text.substr(0, comma));
      if (q.get_den() != 1) throw Error(Errc::Parse, "row entries must be integers");
      row.push_back(q.get_num());
      if (comma == std::string_view::npos) break;
      row_text.remove_prefix(comma + 1);
    }
    if (rows.empty()) dim = row.size();
    rows.push_back(std::move(row));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return CandidateSet(dim, std::move(rows));
}

}  // namespace liouville
