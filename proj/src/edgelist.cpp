#include "dichro/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace dichro {

namespace {

// Pulls the next whitespace-separated token, skipping comment lines.
bool next_token(std::istream& is, std::string& tok) {
  for (;;) {
    is >> std::ws;
    if (is.peek() == '#') {
      std::string line;
      std::getline(is, line);
      continue;
    }
    return static_cast<bool>(is >> tok);
  }
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw Error(errc::parse_error,
                std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size())
    throw Error(errc::parse_error,
                std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

int read_int(std::istream& is, const char* what) {
  std::string tok;
  if (!next_token(is, tok))
    throw Error(errc::parse_error, std::string("missing ") + what);
  return parse_int(tok, what);
}

}  // namespace

Digraph read_edge_list(std::istream& is) {
  const int n = read_int(is, "vertex count");
  const int m = read_int(is, "arc count");
  if (n < 0 || m < 0) throw Error(errc::parse_error, "negative header value");
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int u = read_int(is, "arc tail");
    const int v = read_int(is, "arc head");
    arcs.emplace_back(u, v);
  }
  return Digraph(n, std::move(arcs));
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(const Digraph& d, std::ostream& os) {
  os << d.n() << ' ' << d.m() << '\n';
  for (const auto& [u, v] : d.arcs()) os << u << ' ' << v << '\n';
}

void write_edge_list_file(const Digraph& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(errc::parse_error, "cannot open '" + path + "' for writing");
  write_edge_list(d, out);
}

}  // namespace dichro
