#include "quadlab/matrix_io.hpp"

#include <charconv>
#include <vector>

#include "quadlab/error.hpp"

namespace quadlab {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  if (token.empty()) parse_error(line, "empty dimension");
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_error(line, "expected a decimal integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct Header {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool two_dims = false;
};

Header parse_header(std::string_view line) {
  const std::size_t space = line.find(' ');
  if (space == std::string_view::npos) {
    const std::size_t n = parse_count(line, 1);
    return {n, n, false};
  }
  return {parse_count(line.substr(0, space), 1), parse_count(line.substr(space + 1), 1), true};
}

BinaryPattern parse_body(const Header& h, const std::vector<std::string_view>& lines) {
  if (lines.size() - 1 != h.rows) {
    parse_error(lines.size(), "expected " + std::to_string(h.rows) + " rows, got " + std::to_string(lines.size() - 1));
  }
  BinaryPattern p(h.rows, h.cols);
  for (std::size_t r = 0; r < h.rows; ++r) {
    const std::string_view row = lines[r + 1];
    if (row.size() != h.cols) {
      parse_error(r + 2, "expected " + std::to_string(h.cols) + " characters, got " + std::to_string(row.size()));
    }
    for (std::size_t c = 0; c < h.cols; ++c) {
      if (row[c] == '1') {
        p.set(r, c);
      } else if (row[c] != '0') {
        parse_error(r + 2, "unexpected character at column " + std::to_string(c));
      }
    }
  }
  return p;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) parse_error(1, "empty input");
  return lines;
}

}  // namespace

BinaryPattern parse_pattern(std::string_view text) {
  const auto lines = lines_of(text);
  return parse_body(parse_header(lines.front()), lines);
}

Tournament parse_tournament(std::string_view text) {
  const auto lines = lines_of(text);
  const Header h = parse_header(lines.front());
  if (h.two_dims) parse_error(1, "tournament files take a single order n in the header");
  if (h.rows == 0) parse_error(1, "a tournament needs at least one vertex");
  const BinaryPattern p = parse_body(h, lines);
  std::vector<VertexSet> rows;
  rows.reserve(p.rows());
  for (std::size_t r = 0; r < p.rows(); ++r) rows.push_back(p.row(r));
  return Tournament::validate(h.rows, rows);
}

std::string render_matrix(const Tournament& t) {
  const std::size_t n = t.size();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + n * (n + 1));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) out += t.beats(u, v) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string render_pattern(const BinaryPattern& p) {
  std::string out = p.square() ? std::to_string(p.rows()) + "\n"
                               : std::to_string(p.rows()) + " " + std::to_string(p.cols()) + "\n";
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) out += p.at(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string to_dot(const Tournament& t) {
  std::string out = "digraph T {\n";
  for (Vertex v = 0; v < t.size(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (Vertex u = 0; u < t.size(); ++u) {
    t.outset(u).for_each([&](Vertex v) { out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n"; });
  }
  out += "}\n";
  return out;
}

}  // namespace quadlab
