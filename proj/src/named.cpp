#include "k2ham/named.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "k2ham/error.hpp"

namespace k2ham::named {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  if (n < 1) throw PreconditionError("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph star(int leaves) {
  if (leaves < 1) throw PreconditionError("star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph generalized_petersen(int n, int k) {
  if (!(k >= 1 && n > 2 * k)) throw PreconditionError("GP(n, k) requires n > 2k >= 2");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph::from_edges(2 * n, e);
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph dodecahedron() { return generalized_petersen(10, 2); }

Graph flower_snark(int k) {
  if (k < 5 || k % 2 == 0) throw PreconditionError("flower snark J_k needs odd k >= 5");
  auto a = [k](int i) { return i % k; };
  auto b = [k](int i) { return k + i % k; };
  auto c = [k](int i) { return 2 * k + i % k; };
  auto d = [k](int i) { return 3 * k + i % k; };
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(a(i), b(i));
    e.emplace_back(a(i), c(i));
    e.emplace_back(a(i), d(i));
    e.emplace_back(b(i), b(i + 1));
    if (i + 1 < k) {
      e.emplace_back(c(i), c(i + 1));
      e.emplace_back(d(i), d(i + 1));
    }
  }
  e.emplace_back(c(k - 1), d(0));
  e.emplace_back(d(k - 1), c(0));
  return Graph::from_edges(4 * k, e);
}

Graph hypercube(int d) {
  if (d < 1 || d > 7) throw PreconditionError("hypercube dimension must be in 1..7");
  const int n = 1 << d;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) e.emplace_back(v, w);
    }
  return Graph::from_edges(n, e);
}

Graph coxeter() {
  std::vector<Edge> e;
  for (int i = 0; i < 7; ++i) {
    e.emplace_back(i, 7 + i);
    e.emplace_back(i, 14 + i);
    e.emplace_back(i, 21 + i);
    e.emplace_back(7 + i, 7 + (i + 1) % 7);
    e.emplace_back(14 + i, 14 + (i + 2) % 7);
    e.emplace_back(21 + i, 21 + (i + 3) % 7);
  }
  return Graph::from_edges(28, e);
}

Graph j18() {
  // Drawing labels, one-based.
  static constexpr std::pair<int, int> kEdges[] = {
      {1, 2},   {1, 4},   {2, 3},   {2, 11},  {3, 7},   {4, 5},   {4, 13},  {5, 6},   {5, 14},
      {6, 10},  {7, 8},   {7, 15},  {8, 9},   {8, 16},  {9, 10},  {10, 12}, {11, 13}, {11, 15},
      {12, 14}, {12, 16}, {13, 17}, {14, 17}, {15, 18}, {16, 18}, {17, 18}};
  std::vector<Edge> e;
  for (auto [u, v] : kEdges) e.emplace_back(u - 1, v - 1);
  return Graph::from_edges(18, e);
}

std::vector<std::pair<double, double>> j18_coordinates() {
  return {{0, 0}, {2, 0}, {4, 0}, {0, 2}, {0, 4}, {0, 6},   {4, 2},   {4, 4},   {4, 6},
          {2, 6}, {2, 1}, {2, 5}, {1, 2}, {1, 4}, {3, 2}, {3, 4}, {1.5, 3}, {2.5, 3}};
}

std::vector<std::pair<double, double>> dodecahedron_coordinates() {
  // Outer 10-cycle on the middle ring; even inner vertices form the outside
  // pentagon, odd ones the inside pentagon.
  constexpr double kPi = 3.14159265358979323846;
  std::vector<std::pair<double, double>> xy(20);
  for (int i = 0; i < 10; ++i) {
    double t = kPi * i / 5.0;
    xy[i] = {3.0 * std::cos(t), 3.0 * std::sin(t)};
    double r = (i % 2 == 0) ? 4.5 : 1.5;
    xy[10 + i] = {r * std::cos(t), r * std::sin(t)};
  }
  return xy;
}

Graph triangle_replaced_k4() {
  // Vertex (i, j), j != i, is the corner of triangle i facing K4-vertex j.
  auto id = [](int i, int j) { return 3 * i + (j < i ? j : j - 1); };
  std::vector<Edge> e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < 4; ++k)
        if (k != i) e.emplace_back(id(i, j), id(i, k));
      if (i < j) e.emplace_back(id(i, j), id(j, i));
    }
  return Graph::from_edges(12, e);
}

Graph wheel19() {
  std::vector<Edge> e;
  for (int i = 0; i < 15; ++i) {
    e.emplace_back(i, (i + 1) % 15);
    e.emplace_back(i, 16 + i % 3);
  }
  for (int j = 0; j < 3; ++j) e.emplace_back(15, 16 + j);
  return Graph::from_edges(19, e);
}

namespace {

struct Spec {
  std::string name;
  std::vector<int> params;
};

Spec split_spec(std::string_view spec) {
  Spec out;
  std::size_t pos = spec.find(':');
  out.name = std::string(spec.substr(0, pos));
  while (pos != std::string_view::npos) {
    std::size_t next = spec.find(':', pos + 1);
    std::string_view tok = spec.substr(pos + 1, next == std::string_view::npos ? next : next - pos - 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw PreconditionError("bad parameter '" + std::string(tok) + "' in graph name");
    }
    out.params.push_back(value);
    pos = next;
  }
  return out;
}

int param(const Spec& s, std::size_t i) {
  if (i >= s.params.size()) throw PreconditionError("graph '" + s.name + "' needs more parameters");
  return s.params[i];
}

}  // namespace

std::vector<std::string> catalog() {
  return {"petersen", "gp",   "flower", "cube",  "coxeter", "j18",  "triangle_replaced_k4",
          "wheel19",  "dodecahedron", "complete", "cycle", "path", "star", "prism"};
}

bool is_catalog_name(std::string_view spec) {
  std::string_view name = spec.substr(0, spec.find(':'));
  for (const auto& c : catalog())
    if (c == name) return true;
  return false;
}

Graph by_name(std::string_view spec) {
  Spec s = split_spec(spec);
  const std::string& n = s.name;
  if (n == "petersen") return petersen();
  if (n == "gp") return generalized_petersen(param(s, 0), param(s, 1));
  if (n == "flower") return flower_snark(param(s, 0));
  if (n == "cube") return hypercube(param(s, 0));
  if (n == "coxeter") return coxeter();
  if (n == "j18") return j18();
  if (n == "triangle_replaced_k4") return triangle_replaced_k4();
  if (n == "wheel19") return wheel19();
  if (n == "dodecahedron") return dodecahedron();
  if (n == "complete") return complete(param(s, 0));
  if (n == "cycle") return cycle(param(s, 0));
  if (n == "path") return path(param(s, 0));
  if (n == "star") return star(param(s, 0));
  if (n == "prism") return prism();
  throw PreconditionError("unknown graph name '" + n + "'");
}

}  // namespace k2ham::named
