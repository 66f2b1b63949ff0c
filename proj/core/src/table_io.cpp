#include "rmg/table_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace rmg {

namespace {

bool numeric_token(std::string_view tok) {
  if (tok.empty()) return false;
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

struct Line {
  int number;  // 1-based
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream in{std::string(raw)};
    std::string tok;
    while (in >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

Magma parse_table(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty table: missing order header");

  std::size_t at = 0;
  const Line& header = lines[at++];
  if (header.tokens.size() != 1 || !numeric_token(header.tokens[0]))
    throw ParseError(header.number, "header must be a single integer order");
  int n = 0;
  try {
    n = std::stoi(header.tokens[0]);
  } catch (const std::exception&) {
    throw ParseError(header.number, "order does not fit an int");
  }
  if (n < 1) throw ParseError(header.number, "order must be >= 1");

  std::optional<std::vector<std::string>> names;
  std::unordered_map<std::string, Element> name_index;
  if (at < lines.size() && !numeric_token(lines[at].tokens[0])) {
    const Line& line = lines[at++];
    if (static_cast<int>(line.tokens.size()) != n)
      throw ParseError(line.number,
                       "names line has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(n));
    names = line.tokens;
    for (int i = 0; i < n; ++i) {
      if (!name_index.emplace((*names)[i], i).second)
        throw ParseError(line.number, "duplicate name '" + (*names)[i] + "'");
    }
  }

  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (at >= lines.size())
      throw ParseError(lines.back().number,
                       "expected " + std::to_string(n) + " table rows, got " +
                           std::to_string(r));
    const Line& line = lines[at++];
    if (static_cast<int>(line.tokens.size()) != n)
      throw ParseError(line.number,
                       "row has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(n));
    for (const std::string& tok : line.tokens) {
      if (auto it = name_index.find(tok); it != name_index.end()) {
        table.push_back(it->second);
      } else if (numeric_token(tok)) {
        int v = -1;
        try {
          v = std::stoi(tok);
        } catch (const std::exception&) {
          v = -1;
        }
        if (v < 0 || v >= n)
          throw ParseError(line.number, "entry " + tok + " outside [0, " +
                                            std::to_string(n) + ")");
        table.push_back(v);
      } else {
        throw ParseError(line.number, "unknown symbol '" + tok + "'");
      }
    }
  }
  if (at < lines.size())
    throw ParseError(lines[at].number, "trailing content after table rows");

  try {
    return Magma(n, std::move(table), std::move(names));
  } catch (const CapacityError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(header.number, e.what());
  }
}

std::string format_table(const Magma& m) {
  const int n = m.order();
  const bool with_names = m.names() && !numeric_token((*m.names())[0]);
  std::ostringstream out;
  out << n << '\n';
  if (with_names) {
    for (int i = 0; i < n; ++i) out << (i ? " " : "") << (*m.names())[i];
    out << '\n';
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b) out << ' ';
      if (with_names)
        out << (*m.names())[m.op(a, b)];
      else
        out << m.op(a, b);
    }
    out << '\n';
  }
  return out.str();
}

Magma read_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

void write_table_file(const std::string& path, const Magma& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot open '" + path + "' for writing");
  out << format_table(m);
}

}  // namespace rmg
