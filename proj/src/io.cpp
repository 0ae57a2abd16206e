#include "bsdecomp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

template <typename Map, typename Format>
Grid grid_of(const Map& cells, Format&& format, int& first_row) {
  if (cells.empty()) return {};
  int width = 0;
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& [c, v] : cells) {
    width = std::max(width, c.i);
    lo = std::min(lo, c.j - c.i);
    hi = std::max(hi, c.j - c.i);
  }
  first_row = lo;
  Grid grid(static_cast<std::size_t>(hi - lo + 1),
            std::vector<std::optional<std::string>>(static_cast<std::size_t>(width + 1)));
  for (const auto& [c, v] : cells) grid[c.j - c.i - lo][c.i] = format(v);
  return grid;
}

}  // namespace

std::string write_betti(const Diagram& d) {
  std::string out = "BETTI 1\n";
  for (const auto& [c, v] : d.entries()) {
    out += std::to_string(c.i) + '\t' + std::to_string(c.j) + '\t' + v.to_string() + '\n';
  }
  return out;
}

Diagram read_betti(std::string_view text) {
  Diagram::Entries entries;
  std::optional<Cell> previous;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!header_seen) {
      if (trim(line) != "BETTI 1") parse_fail(line_no, "expected header 'BETTI 1'");
      header_seen = true;
      continue;
    }
    if (trim(line).empty()) continue;

    std::vector<std::string_view> fields;
    for (std::size_t start = 0;;) {
      auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) parse_fail(line_no, "expected 3 tab-separated fields");

    auto i = to_int(fields[0]);
    auto j = to_int(fields[1]);
    if (!i || *i < 0) parse_fail(line_no, "bad homological index '" + std::string(fields[0]) + "'");
    if (!j) parse_fail(line_no, "bad degree '" + std::string(fields[1]) + "'");

    Rational value;
    try {
      value = Rational::parse(fields[2]);
    } catch (const Error& e) {
      parse_fail(line_no, e.what());
    }
    if (value.is_zero()) parse_fail(line_no, "zero entries are not stored");

    Cell cell{*i, *j};
    if (previous && cell == *previous) {
      parse_fail(line_no, "duplicate entry (" + std::to_string(cell.i) + "," +
                              std::to_string(cell.j) + ")");
    }
    if (previous && cell < *previous) parse_fail(line_no, "entries not sorted by (i, j)");
    previous = cell;
    entries.emplace(cell, std::move(value));
  }
  if (!header_seen) parse_fail(1, "expected header 'BETTI 1'");
  return Diagram(std::move(entries));
}

Diagram read_betti_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return read_betti(buffer.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string format_degrees(const DegreeSequence& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(d[k]);
  }
  return s + ")";
}

std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') {
      throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
    }
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> out;
  if (text.empty()) return out;
  for (std::size_t start = 0;;) {
    auto comma = text.find(',', start);
    auto item = trim(text.substr(start, comma - start));
    auto value = to_int(item);
    if (!value) throw Error(ErrorKind::ParseError, "bad integer '" + std::string(item) + "'");
    out.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

DegreeSequence parse_degrees(std::string_view text) { return DegreeSequence(parse_int_list(text)); }

std::string format_terms(const std::vector<PureTerm>& terms) {
  std::string out;
  for (const auto& t : terms) out += t.coeff.to_string() + '\t' + format_degrees(t.degrees) + '\n';
  return out;
}

Grid diagram_grid(const Diagram& d) {
  int first = 0;
  return grid_of(d.entries(), [](const Rational& v) { return v.to_string(); }, first);
}

Grid elimination_grid(const EliminationTable& table) {
  int first = 0;
  return grid_of(table.cells, [](int v) { return std::to_string(v); }, first);
}

std::string render_grid(const Grid& grid, int first_row) {
  if (grid.empty()) return "(empty)\n";
  const std::size_t columns = grid.front().size();
  std::vector<std::size_t> widths(columns, 1);
  for (std::size_t i = 0; i < columns; ++i) widths[i] = std::to_string(i).size();
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < columns; ++i) {
      if (row[i]) widths[i] = std::max(widths[i], row[i]->size());
    }
  }
  std::size_t label = 0;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    label = std::max(label, std::to_string(first_row + static_cast<int>(r)).size() + 1);
  }

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::string out = std::string(label, ' ');
  for (std::size_t i = 0; i < columns; ++i) out += ' ' + pad(std::to_string(i), widths[i]);
  out += '\n';
  for (std::size_t r = 0; r < grid.size(); ++r) {
    out += pad(std::to_string(first_row + static_cast<int>(r)) + ":", label);
    for (std::size_t i = 0; i < columns; ++i) out += ' ' + pad(grid[r][i].value_or("."), widths[i]);
    out += '\n';
  }
  return out;
}

std::string render_diagram(const Diagram& d) {
  int first = 0;
  auto grid = grid_of(d.entries(), [](const Rational& v) { return v.to_string(); }, first);
  return render_grid(grid, first);
}

std::string render_elimination_table(const EliminationTable& table) {
  int first = 0;
  auto grid = grid_of(table.cells, [](int v) { return std::to_string(v); }, first);
  return render_grid(grid, first);
}

}  // namespace bsdecomp
