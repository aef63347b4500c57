#include "graphroots/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "graphroots/error.hpp"

namespace graphroots {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long parse_int(const Token& tok, int line) {
  long long value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, tok.column,
                     "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

// Yields (1-based line number, content) for every line that is neither blank
// nor a comment.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::optional<std::pair<int, std::string_view>> next() {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) {
        ++pos_;
        break;
      }
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      const std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || line[first] == '#') continue;
      return std::make_pair(line_no_, line);
    }
    return std::nullopt;
  }

  int last_line() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

// Column of the first surplus token, or just past the line when short.
int arity_column(const std::vector<Token>& toks, std::string_view content, std::size_t want) {
  if (toks.size() > want) return toks[want].column;
  return static_cast<int>(content.find_last_not_of(" \t\r") + 2);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader(text);
  auto header = reader.next();
  if (!header) throw ParseError(reader.last_line() + 1, 1, "missing 'n m' header");
  auto head_tokens = tokenize(header->second);
  if (head_tokens.size() != 2) {
    throw ParseError(header->first, arity_column(head_tokens, header->second, 2),
                     "header must be exactly 'n m'");
  }
  const long long n = parse_int(head_tokens[0], header->first);
  const long long m = parse_int(head_tokens[1], header->first);
  if (n < 0) throw ParseError(header->first, head_tokens[0].column, "negative vertex count");
  if (m < 0 || m > n * (n - 1) / 2) {
    throw ParseError(header->first, head_tokens[1].column, "edge count out of range");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  while (auto line = reader.next()) {
    const auto [line_no, content] = *line;
    auto toks = tokenize(content);
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, toks.front().column, "more edges than declared");
    }
    if (toks.size() != 2) {
      throw ParseError(line_no, arity_column(toks, content, 2), "expected 'u v'");
    }
    const long long u = parse_int(toks[0], line_no);
    const long long v = parse_int(toks[1], line_no);
    if (u < 0 || u >= n) throw ParseError(line_no, toks[0].column, "vertex out of range");
    if (v < 0 || v >= n) throw ParseError(line_no, toks[1].column, "vertex out of range");
    if (u == v) throw ParseError(line_no, toks[1].column, "self-loop");
    if (u > v) throw ParseError(line_no, toks[1].column, "edge must be written as u < v");
    auto& row = seen[static_cast<std::size_t>(u)];
    for (Vertex w : row) {
      if (w == v) throw ParseError(line_no, toks[0].column, "duplicate edge");
    }
    row.push_back(static_cast<Vertex>(v));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(reader.last_line(), 1,
                     "declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_edge_list(text);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path.string());
  return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<double> parse_weights(std::string_view text, int n) {
  std::vector<double> weights(n, 1.0);
  LineReader reader(text);
  while (auto line = reader.next()) {
    const auto [line_no, content] = *line;
    auto toks = tokenize(content);
    if (toks.size() != 2) {
      throw ParseError(line_no, arity_column(toks, content, 2), "expected 'v w'");
    }
    const long long v = parse_int(toks[0], line_no);
    if (v < 0 || v >= n) throw ParseError(line_no, toks[0].column, "vertex out of range");
    double w = 0;
    std::string word(toks[1].text);
    std::size_t used = 0;
    try {
      w = std::stod(word, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != word.size() || word.empty()) {
      throw ParseError(line_no, toks[1].column, "expected a number, got '" + word + "'");
    }
    if (!std::isfinite(w) || w < 0) {
      throw ParseError(line_no, toks[1].column, "weight must be finite and nonnegative");
    }
    weights[static_cast<std::size_t>(v)] = w;
  }
  return weights;
}

}  // namespace graphroots
