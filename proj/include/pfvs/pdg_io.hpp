#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pfvs/errors.hpp"
#include "pfvs/planar_digraph.hpp"

namespace pfvs {

// Plane digraph text format, one graph per file:
//
//   n m g            header: vertex count, arc count, declared digirth
//   tail head        m arc lines; arc k is the k-th of these, k = 1..m
//   v s1 s2 ... sk   n rotation lines in vertex order; entry +k is the tail
//                    end of arc k, -k its head end, counterclockwise
//
// Vertices are 0-based, arc ids inside rotation entries 1-based so the sign
// stays meaningful.  The writer emits exactly this shape (single spaces,
// trailing newline), and the parser accepts any whitespace split, so
// write(parse(x)) == write(graph(x)) byte for byte.

namespace detail {

inline std::string ordinal_line(int line_no) {
  return "line " + std::to_string(line_no);
}

inline bool next_content_line(std::istream& in, std::string& line,
                              int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

inline long parse_long(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "' on " +
                     ordinal_line(line_no));
  }
  if (pos != tok.size())
    throw ParseError("trailing junk in integer '" + tok + "' on " +
                     ordinal_line(line_no));
  return value;
}

}  // namespace detail

inline PlanarDigraph read_pdg(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!detail::next_content_line(in, line, line_no))
    throw ParseError("empty input, expected a header line");
  std::istringstream header(line);
  std::string tok_n, tok_m, tok_g, extra;
  if (!(header >> tok_n >> tok_m >> tok_g))
    throw ParseError("header needs three fields on " +
                     detail::ordinal_line(line_no));
  if (header >> extra)
    throw ParseError("unexpected field '" + extra + "' on " +
                     detail::ordinal_line(line_no));
  long n = detail::parse_long(tok_n, line_no);
  long m = detail::parse_long(tok_m, line_no);
  long g = detail::parse_long(tok_g, line_no);
  if (n <= 0 || m < 0 || g < 1)
    throw ParseError("header values out of range on " +
                     detail::ordinal_line(line_no));

  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (long k = 0; k < m; ++k) {
    if (!detail::next_content_line(in, line, line_no))
      throw ParseError("ran out of input before arc " + std::to_string(k + 1));
    std::istringstream row(line);
    std::string tok_tail, tok_head;
    if (!(row >> tok_tail >> tok_head))
      throw ParseError("arc line needs two fields on " +
                       detail::ordinal_line(line_no));
    if (row >> extra)
      throw ParseError("unexpected field '" + extra + "' on " +
                       detail::ordinal_line(line_no));
    long tail = detail::parse_long(tok_tail, line_no);
    long head = detail::parse_long(tok_head, line_no);
    if (tail < 0 || tail >= n || head < 0 || head >= n)
      throw ParseError("arc endpoint out of range on " +
                       detail::ordinal_line(line_no));
    arcs.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head)});
  }

  std::vector<std::vector<Dart>> rotation(n);
  for (long v = 0; v < n; ++v) {
    if (!detail::next_content_line(in, line, line_no))
      throw ParseError("ran out of input before the rotation of vertex " +
                       std::to_string(v));
    std::istringstream row(line);
    std::string tok;
    if (!(row >> tok))
      throw ParseError("empty rotation line on " +
                       detail::ordinal_line(line_no));
    long id = detail::parse_long(tok, line_no);
    if (id != v)
      throw ParseError("rotation lines must come in vertex order; expected " +
                       std::to_string(v) + " on " +
                       detail::ordinal_line(line_no));
    while (row >> tok) {
      long s = detail::parse_long(tok, line_no);
      if (s == 0 || s > m || s < -m)
        throw ParseError("rotation entry " + std::to_string(s) +
                         " names no arc on " + detail::ordinal_line(line_no));
      ArcId a = static_cast<ArcId>((s > 0 ? s : -s) - 1);
      rotation[v].push_back(s > 0 ? fwd_dart(a) : bwd_dart(a));
    }
  }
  if (detail::next_content_line(in, line, line_no))
    throw ParseError("unexpected extra content on " +
                     detail::ordinal_line(line_no));
  return PlanarDigraph::build(static_cast<int>(n), std::move(arcs),
                              std::move(rotation), static_cast<int>(g));
}

inline void write_pdg(std::ostream& out, const PlanarDigraph& g) {
  out << g.n() << ' ' << g.m() << ' ' << g.declared_digirth() << '\n';
  for (const Arc& a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
  for (Vertex v = 0; v < g.n(); ++v) {
    out << v;
    for (Dart d : g.rotation()[v])
      out << ' ' << (dart_forward(d) ? arc_of(d) + 1 : -(arc_of(d) + 1));
    out << '\n';
  }
}

inline std::string pdg_string(const PlanarDigraph& g) {
  std::ostringstream out;
  write_pdg(out, g);
  return out.str();
}

inline PlanarDigraph read_pdg_string(const std::string& text) {
  std::istringstream in(text);
  return read_pdg(in);
}

inline PlanarDigraph read_pdg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_pdg(in);
}

inline void write_pdg_file(const std::string& path, const PlanarDigraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_pdg(out, g);
}

}  // namespace pfvs
