#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "pfvs/errors.hpp"

namespace pfvs {

using Vertex = int;
using ArcId = int;

// A dart is one of the two directed traversals of an arc: dart 2a runs along
// arc a from tail to head, dart 2a+1 runs against it.  Rotations store,
// for every vertex, the darts leaving it in counterclockwise order, so the
// face orbit sigma(rev(d)) traces the face on the left of d.
using Dart = int;

inline ArcId arc_of(Dart d) { return d >> 1; }
inline bool dart_forward(Dart d) { return (d & 1) == 0; }
inline Dart fwd_dart(ArcId a) { return 2 * a; }
inline Dart bwd_dart(ArcId a) { return 2 * a + 1; }
inline Dart rev_dart(Dart d) { return d ^ 1; }

struct Arc {
  Vertex tail = -1;
  Vertex head = -1;
};

// One face of the embedding.  Ordinary faces have a single closed walk; the
// merged outer face of a disconnected embedding keeps one walk per component
// that has arcs.  Degree counts darts, so a bridge contributes twice.
struct Face {
  std::vector<std::vector<Dart>> walks;
  int degree = 0;
};

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

class PlanarDigraph {
 public:
  // rotation[v] lists the darts leaving v in counterclockwise order; every
  // dart of every arc must appear exactly once, at its origin.  Throws
  // DanglingEnd for rotation/arc mismatches and EulerViolation when the face
  // count of some component is off, i.e. the data is not a plane embedding.
  static PlanarDigraph build(int n, std::vector<Arc> arcs,
                             std::vector<std::vector<Dart>> rotation,
                             int declared_digirth) {
    PlanarDigraph g;
    if (n <= 0) throw PreconditionViolated("vertex count must be positive");
    if (declared_digirth < 1)
      throw PreconditionViolated("declared digirth must be >= 1");
    g.n_ = n;
    g.m_ = static_cast<int>(arcs.size());
    g.declared_digirth_ = declared_digirth;
    g.arcs_ = std::move(arcs);
    g.rotation_ = std::move(rotation);
    for (ArcId a = 0; a < g.m_; ++a) {
      const Arc& e = g.arcs_[a];
      if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
        throw PreconditionViolated("arc " + std::to_string(a) +
                                   " has an endpoint out of range");
      if (e.tail == e.head && declared_digirth >= 2)
        throw DigirthViolation("arc " + std::to_string(a) +
                               " is a loop, impossible at digirth >= 2");
    }
    g.check_digirth_structure();
    g.index_rotations();
    g.build_adjacency();
    g.find_components();
    g.trace_faces();
    return g;
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int declared_digirth() const { return declared_digirth_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<std::vector<Dart>>& rotation() const { return rotation_; }

  Vertex origin(Dart d) const {
    return dart_forward(d) ? arcs_[arc_of(d)].tail : arcs_[arc_of(d)].head;
  }
  Vertex target(Dart d) const { return origin(rev_dart(d)); }

  // Successor of d in the rotation at its origin vertex.
  Dart sigma(Dart d) const {
    const auto& rot = rotation_[origin(d)];
    std::size_t i = pos_in_rot_[d] + 1;
    return rot[i == rot.size() ? 0 : i];
  }
  Dart sigma_inv(Dart d) const {
    const auto& rot = rotation_[origin(d)];
    std::size_t i = pos_in_rot_[d];
    return rot[(i == 0 ? rot.size() : i) - 1];
  }
  std::size_t rotation_pos(Dart d) const { return pos_in_rot_[d]; }

  // Walking d, the next dart along the face on the left of d.
  Dart next_in_face(Dart d) const { return sigma(rev_dart(d)); }
  Dart prev_in_face(Dart d) const { return rev_dart(sigma_inv(d)); }

  const std::vector<Face>& faces() const { return faces_; }
  int face_of(Dart d) const { return face_of_[d]; }
  int outer_face() const { return outer_face_; }
  int left_face(ArcId a) const { return face_of_[fwd_dart(a)]; }
  int right_face(ArcId a) const { return face_of_[bwd_dart(a)]; }

  int num_components() const { return num_components_; }
  int component_of(Vertex v) const { return component_of_[v]; }

  // Arc ids sorted ascending, so traversals are deterministic.
  const std::vector<ArcId>& out_arcs(Vertex v) const { return out_adj_[v]; }
  const std::vector<ArcId>& in_arcs(Vertex v) const { return in_adj_[v]; }

  // Default state is an unusable placeholder; only build() makes real ones.
  PlanarDigraph() = default;

 private:

  void check_digirth_structure() {
    if (declared_digirth_ < 3 || m_ == 0) return;
    // At digirth >= 3 a repeated (tail, head) pair is either a digon in
    // disguise or a parallel arc; the formats and formulas downstream assume
    // neither exists.  Sort arc endpoint pairs and scan for collisions.
    std::vector<ArcId> order(m_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](ArcId x, ArcId y) {
      auto kx = std::minmax(arcs_[x].tail, arcs_[x].head);
      auto ky = std::minmax(arcs_[y].tail, arcs_[y].head);
      return kx < ky;
    });
    for (int i = 0; i + 1 < m_; ++i) {
      const Arc& e = arcs_[order[i]];
      const Arc& f = arcs_[order[i + 1]];
      if (std::minmax(e.tail, e.head) != std::minmax(f.tail, f.head)) continue;
      if (e.tail == f.head && e.head == f.tail)
        throw DigirthViolation("arcs " + std::to_string(order[i]) + " and " +
                               std::to_string(order[i + 1]) +
                               " form a 2-cycle, impossible at digirth >= 3");
      if (declared_digirth_ >= 4 && e.tail == f.tail)
        throw DigirthViolation("arcs " + std::to_string(order[i]) + " and " +
                               std::to_string(order[i + 1]) +
                               " are parallel, not allowed at digirth >= 4");
    }
  }

  void index_rotations() {
    if (static_cast<int>(rotation_.size()) != n_)
      throw PreconditionViolated("rotation table must have one row per vertex");
    pos_in_rot_.assign(2 * m_, std::size_t(-1));
    for (Vertex v = 0; v < n_; ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
        Dart d = rotation_[v][i];
        if (d < 0 || d >= 2 * m_)
          throw DanglingEnd("rotation of vertex " + std::to_string(v) +
                            " names a dart out of range");
        if (pos_in_rot_[d] != std::size_t(-1))
          throw DanglingEnd("dart of arc " + std::to_string(arc_of(d)) +
                            " listed twice in the rotation input");
        if (origin(d) != v)
          throw DanglingEnd("rotation of vertex " + std::to_string(v) +
                            " lists an end of arc " + std::to_string(arc_of(d)) +
                            " that is attached to vertex " +
                            std::to_string(origin(d)));
        pos_in_rot_[d] = i;
      }
    }
    for (Dart d = 0; d < 2 * m_; ++d)
      if (pos_in_rot_[d] == std::size_t(-1))
        throw DanglingEnd("an end of arc " + std::to_string(arc_of(d)) +
                          " is missing from the rotation input");
  }

  void build_adjacency() {
    out_adj_.assign(n_, {});
    in_adj_.assign(n_, {});
    for (ArcId a = 0; a < m_; ++a) {
      out_adj_[arcs_[a].tail].push_back(a);
      in_adj_[arcs_[a].head].push_back(a);
    }
  }

  void find_components() {
    component_of_.assign(n_, -1);
    num_components_ = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
      if (component_of_[s] != -1) continue;
      int c = num_components_++;
      component_of_[s] = c;
      stack.push_back(s);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Dart d : rotation_[v]) {
          Vertex w = target(d);
          if (component_of_[w] == -1) {
            component_of_[w] = c;
            stack.push_back(w);
          }
        }
      }
    }
  }

  void trace_faces() {
    face_of_.assign(2 * m_, -1);
    std::vector<std::vector<Dart>> walks;      // orbit per pre-merge face
    std::vector<int> walk_component;
    for (Dart d0 = 0; d0 < 2 * m_; ++d0) {
      if (face_of_[d0] != -1) continue;
      int f = static_cast<int>(walks.size());
      std::vector<Dart> walk;
      Dart d = d0;
      do {
        face_of_[d] = f;
        walk.push_back(d);
        d = next_in_face(d);
      } while (d != d0);
      walk_component.push_back(component_of_[origin(d0)]);
      walks.push_back(std::move(walk));
    }

    // Per component with arcs: Euler check, and mark the outer walk.  The
    // outer face of a component is the one containing the first dart in the
    // rotation of its smallest vertex that has any.
    std::vector<int> comp_faces(num_components_, 0);
    std::vector<int> comp_n(num_components_, 0);
    std::vector<int> comp_m(num_components_, 0);
    std::vector<int> comp_outer_walk(num_components_, -1);
    for (int f = 0; f < static_cast<int>(walks.size()); ++f)
      comp_faces[walk_component[f]]++;
    for (Vertex v = 0; v < n_; ++v) {
      comp_n[component_of_[v]]++;
      if (comp_outer_walk[component_of_[v]] == -1 && !rotation_[v].empty())
        comp_outer_walk[component_of_[v]] = face_of_[rotation_[v][0]];
    }
    for (ArcId a = 0; a < m_; ++a) comp_m[component_of_[arcs_[a].tail]]++;
    for (int c = 0; c < num_components_; ++c) {
      if (comp_m[c] == 0) {
        internal_check(comp_faces[c] == 0 && comp_n[c] == 1,
                       "arcless component is not a lone vertex");
        continue;
      }
      if (comp_n[c] - comp_m[c] + comp_faces[c] != 2)
        throw EulerViolation(
            "component with " + std::to_string(comp_n[c]) + " vertices and " +
            std::to_string(comp_m[c]) + " arcs traces " +
            std::to_string(comp_faces[c]) +
            " faces; the rotation data is not a plane embedding");
    }

    // Collapse the designated outer walks into one face, preserving the
    // discovery order of everything else.
    std::vector<int> new_index(walks.size(), -1);
    faces_.clear();
    outer_face_ = -1;
    std::vector<char> is_outer_walk(walks.size(), 0);
    for (int c = 0; c < num_components_; ++c)
      if (comp_outer_walk[c] != -1) is_outer_walk[comp_outer_walk[c]] = 1;
    for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
      if (is_outer_walk[f]) {
        if (outer_face_ == -1) {
          outer_face_ = static_cast<int>(faces_.size());
          faces_.emplace_back();
        }
        new_index[f] = outer_face_;
        faces_[outer_face_].walks.push_back(std::move(walks[f]));
      } else {
        new_index[f] = static_cast<int>(faces_.size());
        faces_.emplace_back();
        faces_.back().walks.push_back(std::move(walks[f]));
      }
    }
    if (m_ == 0) {
      // No darts anywhere: the plane is a single empty face.
      outer_face_ = 0;
      faces_.emplace_back();
    }
    internal_check(outer_face_ != -1, "no outer face designated");
    for (Face& f : faces_) {
      f.degree = 0;
      for (const auto& w : f.walks) f.degree += static_cast<int>(w.size());
    }
    for (Dart d = 0; d < 2 * m_; ++d) face_of_[d] = new_index[face_of_[d]];
  }

  int n_ = 0;
  int m_ = 0;
  int declared_digirth_ = 1;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::size_t> pos_in_rot_;
  std::vector<std::vector<ArcId>> out_adj_;
  std::vector<std::vector<ArcId>> in_adj_;
  std::vector<int> component_of_;
  int num_components_ = 0;
  std::vector<Face> faces_;
  std::vector<int> face_of_;
  int outer_face_ = -1;
};

// Sum of 3*deg(F) - 6 over all faces.  Equals 6n - 12 on connected
// embeddings by Euler's formula; callers lean on that identity, so it is
// checked here rather than trusted.
inline long euler_phi_total(const PlanarDigraph& g) {
  if (g.num_components() != 1)
    throw NotConnected("face degree total needs a connected graph");
  long total = 0;
  for (const Face& f : g.faces()) total += 3L * f.degree - 6;
  internal_check(total == 6L * g.n() - 12,
                 "face degree total disagrees with Euler's formula");
  return total;
}

}  // namespace pfvs
