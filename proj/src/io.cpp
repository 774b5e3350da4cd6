#include "simat/io.hpp"

#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

namespace simat {

namespace {

bool is_dash_line(const std::string& line) {
  if (line.size() < 3) return false;
  for (char c : line)
    if (c != '-') return false;
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct RowTokens {
  std::vector<std::string> entries;
  std::vector<int> cuts;  // column cut positions implied by `|`
  int line_no = 0;
};

}  // namespace

SuperIntervalMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  std::optional<ScalarDomain> domain;
  std::vector<RowTokens> rows;
  std::vector<int> row_cuts;
  bool pending_row_cut = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    if (!domain) {
      if (t.rfind("domain:", 0) != 0)
        throw ParseError("expected 'domain: <tag>' header", line_no, 1);
      std::string tag = strip(t.substr(7));
      try {
        domain = ScalarDomain::parse_tag(tag);
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, 1);
      }
      continue;
    }
    if (is_dash_line(t)) {
      if (rows.empty()) throw ParseError("row cut before any row", line_no, 1);
      if (pending_row_cut) throw ParseError("consecutive row cuts", line_no, 1);
      pending_row_cut = true;
      continue;
    }
    RowTokens row;
    row.line_no = line_no;
    std::istringstream ls(t);
    std::string tok;
    while (ls >> tok) {
      if (tok == "|") {
        if (row.entries.empty())
          throw ParseError("column cut before any entry", line_no, 1);
        if (!row.cuts.empty() && row.cuts.back() == static_cast<int>(row.entries.size()))
          throw ParseError("consecutive column cuts", line_no, 1);
        row.cuts.push_back(static_cast<int>(row.entries.size()));
      } else {
        row.entries.push_back(tok);
      }
    }
    if (row.entries.empty()) continue;
    if (!row.cuts.empty() && row.cuts.back() == static_cast<int>(row.entries.size()))
      throw ParseError("column cut after the last entry", line_no, 1);
    if (pending_row_cut) {
      row_cuts.push_back(static_cast<int>(rows.size()));
      pending_row_cut = false;
    }
    rows.push_back(std::move(row));
  }
  if (!domain) throw ParseError("missing 'domain: <tag>' header", line_no, 1);
  if (rows.empty()) throw ParseError("matrix body is empty", line_no, 1);
  if (pending_row_cut) throw ParseError("row cut after the last row", line_no, 1);

  const RowTokens& first = rows.front();
  for (const RowTokens& r : rows) {
    if (r.entries.size() != first.entries.size())
      throw ParseError("row has " + std::to_string(r.entries.size()) + " entries, expected " +
                           std::to_string(first.entries.size()),
                       r.line_no, 1);
    if (r.cuts != first.cuts)
      throw ParseError("inconsistent column cuts: every row must place '|' identically",
                       r.line_no, 1);
  }

  int m = static_cast<int>(rows.size());
  int n = static_cast<int>(first.entries.size());
  std::vector<Scalar> endpoints;
  endpoints.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (const RowTokens& r : rows)
    for (std::size_t j = 0; j < r.entries.size(); ++j) {
      Scalar s;
      try {
        s = Scalar::parse(r.entries[j]);
      } catch (const Error& e) {
        throw ParseError(std::string("bad endpoint: ") + e.what(), r.line_no,
                         static_cast<int>(j) + 1);
      }
      if (!valid_in(*domain, s))
        throw ParseError("bad endpoint: " + s.str() + " is not valid in " + domain->tag(),
                         r.line_no, static_cast<int>(j) + 1);
      endpoints.push_back(std::move(s));
    }

  PartitionSpec spec(m, n, row_cuts, first.cuts);
  return SuperIntervalMatrix::build(*domain, std::move(spec), std::move(endpoints));
}

SuperIntervalMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string render_matrix(const SuperIntervalMatrix& a, RenderFormat format, bool decimals) {
  if (format == RenderFormat::Json) {
    nlohmann::ordered_json j;
    j["domain"] = a.domain().tag();
    j["dims"] = {a.rows(), a.cols()};
    j["row_cuts"] = a.partition().row_cuts;
    j["col_cuts"] = a.partition().col_cuts;
    std::vector<std::vector<std::string>> grid;
    for (int i = 0; i < a.rows(); ++i) {
      std::vector<std::string> row;
      for (int j2 = 0; j2 < a.cols(); ++j2) row.push_back(a.endpoint(i, j2).str(decimals));
      grid.push_back(std::move(row));
    }
    j["endpoints"] = grid;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "domain: " << a.domain().tag() << "\n";
  const std::vector<int>& ccuts = a.partition().col_cuts;
  const std::vector<int>& rcuts = a.partition().row_cuts;
  std::size_t next_rcut = 0;
  for (int i = 0; i < a.rows(); ++i) {
    if (next_rcut < rcuts.size() && rcuts[next_rcut] == i) {
      out << "---\n";
      ++next_rcut;
    }
    std::size_t next_ccut = 0;
    for (int j = 0; j < a.cols(); ++j) {
      if (j > 0) out << " ";
      if (next_ccut < ccuts.size() && ccuts[next_ccut] == j) {
        out << "| ";
        ++next_ccut;
      }
      out << a.endpoint(i, j).str(decimals);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace simat
