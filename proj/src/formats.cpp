#include "k2ham/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "k2ham/error.hpp"

namespace k2ham {

namespace {

std::string_view trim_eol(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view strip_header(std::string_view s, std::string_view header) {
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  return s;
}

int sixbits(char ch, std::size_t pos) {
  auto c = static_cast<unsigned char>(ch);
  if (c < 63 || c > 126) {
    throw ParseError("byte " + std::to_string(c) + " at offset " + std::to_string(pos) +
                     " outside the printable range 63..126");
  }
  return c - 63;
}

// Reads N(n) and advances `s` past it.
int decode_size(std::string_view& s) {
  if (s.empty()) throw ParseError("missing size header");
  if (s[0] != '~') {
    int n = sixbits(s[0], 0);
    s.remove_prefix(1);
    return n;
  }
  if (s.size() >= 2 && s[1] == '~') {
    throw CapacityError("8-byte size header: order exceeds capacity " + std::to_string(kMaxVertices));
  }
  if (s.size() < 4) throw ParseError("truncated size header");
  long n = 0;
  for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sixbits(s[i], i);
  if (n < 63) throw ParseError("non-canonical 4-byte size header for n=" + std::to_string(n));
  s.remove_prefix(4);
  if (n > kMaxVertices) {
    throw CapacityError("order " + std::to_string(n) + " exceeds capacity " + std::to_string(kMaxVertices));
  }
  return static_cast<int>(n);
}

void encode_size(int n, std::string& out) {
  if (n > kMaxVertices) throw CapacityError("order exceeds capacity");
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

class BitWriter {
 public:
  void put(bool bit) {
    cur_ = static_cast<std::uint8_t>((cur_ << 1) | (bit ? 1 : 0));
    if (++used_ == 6) flush();
  }
  void put(int value, int width) {
    for (int i = width - 1; i >= 0; --i) put(((value >> i) & 1) != 0);
  }
  int pending() const { return used_; }
  std::string finish(bool pad_bit) {
    while (used_ != 0) put(pad_bit);
    return std::move(out_);
  }

 private:
  void flush() {
    out_.push_back(static_cast<char>(cur_ + 63));
    cur_ = 0;
    used_ = 0;
  }
  std::string out_;
  std::uint8_t cur_ = 0;
  int used_ = 0;
};

class BitReader {
 public:
  BitReader(std::string_view body, std::size_t offset) : body_(body), offset_(offset) {}
  std::size_t remaining() const { return body_.size() * 6 - pos_; }
  int get() {
    std::size_t byte = pos_ / 6;
    int shift = 5 - static_cast<int>(pos_ % 6);
    ++pos_;
    return (sixbits(body_[byte], offset_ + byte) >> shift) & 1;
  }
  int get(int width) {
    int v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | get();
    return v;
  }

 private:
  std::string_view body_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

int sparse6_width(int n) {
  int k = 1;
  while ((1 << k) < n) ++k;
  return k;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool is_blank_or_comment(std::string_view line) {
  std::size_t p = line.find_first_not_of(" \t");
  return p == std::string_view::npos || line[p] == '#';
}

std::vector<long> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc{}) {
      throw ParseError("line " + std::to_string(lineno) + ": expected an integer");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      throw ParseError("line " + std::to_string(lineno) + ": unexpected character");
    }
  }
  return out;
}

}  // namespace

Graph decode_graph6(std::string_view line) {
  std::string_view s = strip_header(trim_eol(line), ">>graph6<<");
  const int n = decode_size(s);
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() != nbytes) {
    throw ParseError("graph6 body has " + std::to_string(s.size()) + " bytes, expected " +
                     std::to_string(nbytes) + " for n=" + std::to_string(n));
  }
  BitReader bits(s, line.size() - s.size());
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits.get()) edges.emplace_back(i, j);
  while (bits.remaining() > 0) {
    if (bits.get()) throw ParseError("nonzero padding bits in graph6 line");
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  encode_size(n, out);
  BitWriter bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.put(g.has_edge(i, j));
  out += bits.finish(false);
  return out;
}

Graph decode_sparse6(std::string_view line) {
  std::string_view s = strip_header(trim_eol(line), ">>sparse6<<");
  if (s.empty() || s[0] != ':') throw ParseError("sparse6 line must start with ':'");
  s.remove_prefix(1);
  const int n = decode_size(s);
  const int k = sparse6_width(n);
  BitReader bits(s, line.size() - s.size());
  std::set<Edge> edges;
  int v = 0;
  while (bits.remaining() >= static_cast<std::size_t>(k + 1)) {
    int b = bits.get();
    int x = bits.get(k);
    if (b) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
      continue;
    }
    if (x == v) throw ParseError("sparse6 self-loop at vertex " + std::to_string(v));
    if (!edges.emplace(x, v).second) {
      throw ParseError("sparse6 duplicate edge " + std::to_string(x) + "-" + std::to_string(v));
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

std::string encode_sparse6(const Graph& g) {
  const int n = g.order();
  const int k = sparse6_width(n);
  std::string out = ":";
  encode_size(n, out);
  // Edges ordered by larger endpoint, then smaller.
  std::vector<std::pair<int, int>> order;
  for (const Edge& e : g.edges()) order.emplace_back(e.v, e.u);
  std::sort(order.begin(), order.end());
  BitWriter bits;
  int cur = 0;
  for (auto [v, u] : order) {
    if (v == cur) {
      bits.put(false);
      bits.put(u, k);
    } else if (v == cur + 1) {
      cur = v;
      bits.put(true);
      bits.put(u, k);
    } else {
      cur = v;
      bits.put(true);
      bits.put(v, k);
      bits.put(false);
      bits.put(u, k);
    }
  }
  int pad = (6 - bits.pending()) % 6;
  if (k < 6 && n == (1 << k) && pad >= k && cur < n - 1) bits.put(false);
  out += bits.finish(true);
  return out;
}

Graph decode_graph_line(std::string_view line) {
  std::string_view s = trim_eol(line);
  if (s.substr(0, 11) == ">>sparse6<<" || (!s.empty() && s[0] == ':')) return decode_sparse6(s);
  return decode_graph6(s);
}

Graph decode_edge_list(std::string_view text) {
  std::vector<std::vector<long>> rows;
  std::vector<std::size_t> linenos;
  std::size_t lineno = 0;
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    rows.push_back(parse_ints(line, lineno));
    linenos.push_back(lineno);
  }
  if (rows.empty() || rows[0].size() != 2) throw ParseError("edge list must start with \"n m\"");
  const long n = rows[0][0];
  const long m = rows[0][1];
  if (n < 0 || m < 0) throw ParseError("negative count in edge-list header");
  if (n > kMaxVertices) throw CapacityError("edge list order exceeds capacity");
  if (static_cast<long>(rows.size()) - 1 != m) {
    throw ParseError("edge list declares " + std::to_string(m) + " edges but has " +
                     std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string at = "line " + std::to_string(linenos[r]) + ": ";
    if (row.size() != 2) throw ParseError(at + "expected \"u v\"");
    if (row[0] < 0 || row[0] >= n || row[1] < 0 || row[1] >= n) throw ParseError(at + "vertex out of range");
    if (row[0] == row[1]) throw ParseError(at + "self-loop");
    Edge e(static_cast<int>(row[0]), static_cast<int>(row[1]));
    if (!seen.insert(e).second) throw ParseError(at + "duplicate edge");
    edges.push_back(e);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Embedding decode_embedding(std::string_view text) {
  struct Row {
    long v;
    std::vector<long> nbrs;
    std::size_t lineno;
  };
  std::vector<Row> rows;
  std::size_t lineno = 0;
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected \"v: w1 w2 ...\"");
    }
    auto head = parse_ints(line.substr(0, colon), lineno);
    if (head.size() != 1) throw ParseError("line " + std::to_string(lineno) + ": bad vertex label");
    rows.push_back({head[0], parse_ints(line.substr(colon + 1), lineno), lineno});
  }
  const long n = static_cast<long>(rows.size());
  if (n > kMaxVertices) throw CapacityError("embedding order exceeds capacity");

  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  std::vector<bool> defined(static_cast<std::size_t>(n), false);
  for (const Row& row : rows) {
    const std::string at = "line " + std::to_string(row.lineno) + ": ";
    if (row.v < 0 || row.v >= n) throw ParseError(at + "vertex label out of range");
    if (defined[row.v]) throw ParseError(at + "vertex listed twice");
    defined[row.v] = true;
    for (long w : row.nbrs) {
      if (w < 0 || w >= n) throw ParseError(at + "neighbour out of range");
      if (w == row.v) throw ParseError(at + "self-loop");
      for (int prev : rot[row.v])
        if (prev == w) throw ParseError(at + "duplicate neighbour");
      rot[row.v].push_back(static_cast<int>(w));
    }
  }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int w : rot[v]) {
      bool mutual = false;
      for (int back : rot[w]) mutual = mutual || back == v;
      if (!mutual) {
        throw ParseError("inconsistent rotation: " + std::to_string(v) + " lists " + std::to_string(w) +
                         " but not vice versa");
      }
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Embedding::make(Graph::from_edges(static_cast<int>(n), edges), std::move(rot));
}

std::string encode_embedding(const Embedding& emb) {
  std::ostringstream out;
  const auto& rot = emb.rotation();
  for (std::size_t v = 0; v < rot.size(); ++v) {
    out << v << ':';
    for (int w : rot[v]) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

}  // namespace k2ham
