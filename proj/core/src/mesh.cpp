#include "icosw/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace icosw {

namespace {

struct Triangulation {
  std::vector<Vec3> verts;                 // unit sphere
  std::vector<std::array<int, 3>> faces;   // counterclockwise from outside
};

Triangulation base_icosahedron() {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  Triangulation tri;
  tri.verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
  };
  for (auto& v : tri.verts) v = normalized(v);
  tri.faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };
  // Enforce outward orientation regardless of the table above.
  for (auto& f : tri.faces) {
    const Vec3& a = tri.verts[f[0]];
    const Vec3& b = tri.verts[f[1]];
    const Vec3& c = tri.verts[f[2]];
    if (dot(cross(b - a, c - a), a) < 0.0) std::swap(f[1], f[2]);
  }
  return tri;
}

Triangulation subdivide(const Triangulation& in) {
  Triangulation out;
  out.verts = in.verts;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const int id = static_cast<int>(out.verts.size());
    out.verts.push_back(normalized(out.verts[a] + out.verts[b]));
    midpoint.emplace(key, id);
    return id;
  };
  out.faces.reserve(in.faces.size() * 4);
  for (const auto& f : in.faces) {
    const int ab = mid(f[0], f[1]);
    const int bc = mid(f[1], f[2]);
    const int ca = mid(f[2], f[0]);
    out.faces.push_back({f[0], ab, ca});
    out.faces.push_back({ab, f[1], bc});
    out.faces.push_back({ca, bc, f[2]});
    out.faces.push_back({ab, bc, ca});
  }
  return out;
}

Vec3 circumcenter_unit(const Vec3& a, const Vec3& b, const Vec3& c) {
  Vec3 n = cross(b - a, c - a);
  if (dot(n, a) < 0.0) n = -n;
  return normalized(n);
}

/// Incident faces per vertex, ordered counterclockwise as seen from outside.
std::vector<std::vector<int>> incident_faces_ccw(const Triangulation& tri) {
  std::vector<std::vector<int>> inc(tri.verts.size());
  for (int f = 0; f < static_cast<int>(tri.faces.size()); ++f)
    for (int k = 0; k < 3; ++k) inc[tri.faces[f][k]].push_back(f);
  for (int v = 0; v < static_cast<int>(tri.verts.size()); ++v) {
    const Vec3 up = tri.verts[v];
    Vec3 e1 = cross(up, std::fabs(up.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0});
    e1 = normalized(e1);
    const Vec3 e2 = cross(up, e1);
    auto& faces = inc[v];
    std::vector<std::pair<double, int>> ang;
    ang.reserve(faces.size());
    for (int f : faces) {
      const auto& fc = tri.faces[f];
      const Vec3 c = circumcenter_unit(tri.verts[fc[0]], tri.verts[fc[1]], tri.verts[fc[2]]);
      ang.emplace_back(std::atan2(dot(c, e2), dot(c, e1)), f);
    }
    std::sort(ang.begin(), ang.end());
    for (size_t k = 0; k < faces.size(); ++k) faces[k] = ang[k].second;
  }
  return inc;
}

/// Dual-alignment relaxation: move each vertex to the (projected) centroid
/// of its dual polygon, keeping the connectivity fixed.
void relax_vertices(Triangulation& tri, int iters, double tol) {
  for (int it = 0; it < iters; ++it) {
    const auto inc = incident_faces_ccw(tri);
    std::vector<Vec3> next(tri.verts.size());
    double max_move = 0.0;
    for (int v = 0; v < static_cast<int>(tri.verts.size()); ++v) {
      std::vector<Vec3> corners;
      corners.reserve(inc[v].size());
      for (int f : inc[v]) {
        const auto& fc = tri.faces[f];
        corners.push_back(
            circumcenter_unit(tri.verts[fc[0]], tri.verts[fc[1]], tri.verts[fc[2]]));
      }
      Vec3 centroid{};
      const int n = static_cast<int>(corners.size());
      for (int k = 0; k < n; ++k) {
        const Vec3& a = corners[k];
        const Vec3& b = corners[(k + 1) % n];
        const double w = spherical_triangle_area(tri.verts[v], a, b, 1.0);
        centroid += w * normalized(tri.verts[v] + a + b);
      }
      next[v] = normalized(centroid);
      max_move = std::max(max_move, norm(next[v] - tri.verts[v]));
    }
    tri.verts = next;
    if (max_move < tol) break;
  }
}

}  // namespace

Mesh Mesh::build(int level, double radius_m, const MeshBuildOptions& opts) {
  if (level < 1) throw std::invalid_argument("mesh level must be >= 1");
  if (level > opts.max_level)
    throw std::runtime_error("mesh level " + std::to_string(level) +
                             " exceeds configured bound " + std::to_string(opts.max_level));

  Triangulation tri = base_icosahedron();
  for (int l = 1; l < level; ++l) tri = subdivide(tri);
  if (opts.optimize) relax_vertices(tri, opts.optimize_iters, opts.optimize_tol);

  const double R = radius_m;
  Mesh m;
  m.level_ = level;
  m.radius_ = R;

  const int nc = static_cast<int>(tri.faces.size());
  const int nv = static_cast<int>(tri.verts.size());
  m.cells_.resize(nc);

  for (int i = 0; i < nc; ++i) {
    Cell& c = m.cells_[i];
    c.verts = tri.faces[i];
    const Vec3 a = tri.verts[c.verts[0]];
    const Vec3 b = tri.verts[c.verts[1]];
    const Vec3 d = tri.verts[c.verts[2]];
    c.center = circumcenter_unit(a, b, d) * R;
    c.area = spherical_triangle_area(a, b, d, R);
    m.total_area_ += c.area;
  }

  // Edges: discovered in face order, canonicalized to cell_i < cell_j.
  std::map<std::pair<int, int>, int> edge_of_verts;
  for (int i = 0; i < nc; ++i) {
    Cell& c = m.cells_[i];
    for (int k = 0; k < 3; ++k) {
      const int va = c.verts[k];
      const int vb = c.verts[(k + 1) % 3];
      auto key = std::minmax(va, vb);
      auto it = edge_of_verts.find(key);
      if (it == edge_of_verts.end()) {
        Edge e;
        e.vert_a = key.first;
        e.vert_b = key.second;
        e.cell_i = i;
        const int id = static_cast<int>(m.edges_.size());
        m.edges_.push_back(e);
        edge_of_verts.emplace(key, id);
        c.edges[k] = id;
      } else {
        m.edges_[it->second].cell_j = i;
        c.edges[k] = it->second;
      }
    }
  }

  for (auto& e : m.edges_) {
    if (e.cell_j < 0) throw std::logic_error("open edge on closed surface");
    if (e.cell_i > e.cell_j) std::swap(e.cell_i, e.cell_j);

    const Vec3 pa = tri.verts[e.vert_a];
    const Vec3 pb = tri.verts[e.vert_b];
    const Vec3 mhat = normalized(pa + pb);
    e.midpoint = mhat * R;
    e.primal_len = arc_length(pa, pb, R);
    e.dual_len = arc_length(m.cells_[e.cell_i].center, m.cells_[e.cell_j].center, R);

    // Tangent unit normal at the midpoint, oriented cell_i -> cell_j.
    Vec3 t = pb - pa;
    t = normalized(t - dot(t, mhat) * mhat);
    Vec3 n = cross(t, mhat);
    const Vec3 dc = m.cells_[e.cell_j].center - m.cells_[e.cell_i].center;
    if (dot(n, dc) < 0.0) n = -n;
    e.normal = n;

    // Handedness: zeta_+ is the endpoint reached by rotating n by -90 degrees
    // about the outward radial, i.e. (p_+ - p_-) . (rhat x n) < 0.
    const Vec3 w = cross(mhat, n);
    if (dot(pb - pa, w) < 0.0) {
      e.vert_minus = e.vert_a;
      e.vert_plus = e.vert_b;
    } else {
      e.vert_minus = e.vert_b;
      e.vert_plus = e.vert_a;
    }
  }

  // Cell neighbors.
  for (int i = 0; i < nc; ++i) {
    Cell& c = m.cells_[i];
    for (int k = 0; k < 3; ++k) {
      const Edge& e = m.edges_[c.edges[k]];
      c.neighbors[k] = (e.cell_i == i) ? e.cell_j : e.cell_i;
    }
  }

  // Dual cells.
  const auto inc = incident_faces_ccw(tri);
  std::map<std::pair<int, int>, int> edge_of_cells;
  for (int id = 0; id < static_cast<int>(m.edges_.size()); ++id)
    edge_of_cells.emplace(std::make_pair(m.edges_[id].cell_i, m.edges_[id].cell_j), id);
  auto find_edge = [&](int ca, int cb) {
    auto it = edge_of_cells.find(std::minmax(ca, cb));
    if (it == edge_of_cells.end()) throw std::logic_error("missing dual edge");
    return it->second;
  };

  m.duals_.resize(nv);
  for (int v = 0; v < nv; ++v) {
    DualCell& d = m.duals_[v];
    d.pos = tri.verts[v] * R;
    d.n = static_cast<int>(inc[v].size());
    if (d.n != 5 && d.n != 6) throw std::logic_error("vertex valence not 5 or 6");
    for (int k = 0; k < d.n; ++k) d.cells[k] = inc[v][k];

    // Kite areas |zeta_e ∩ T_k|: quadrilateral (v, m1, circumcenter, m2)
    // with m1, m2 the midpoints of the two cell edges incident at v.
    for (int k = 0; k < d.n; ++k) {
      const Cell& c = m.cells_[d.cells[k]];
      Vec3 mids[2];
      int nm = 0;
      for (int q = 0; q < 3; ++q) {
        const Edge& e = m.edges_[c.edges[q]];
        if (e.vert_a == v || e.vert_b == v) mids[nm++] = e.midpoint;
      }
      if (nm != 2) throw std::logic_error("cell not incident to its dual vertex");
      const double kite = spherical_triangle_area(d.pos, mids[0], c.center, R) +
                          spherical_triangle_area(d.pos, c.center, mids[1], R);
      d.overlap[k] = kite;
      d.area += kite;
    }
    for (int k = 0; k < d.n; ++k) d.overlap[k] /= d.area;

    // Counterclockwise boundary: dual edge k runs from cells[k] to cells[k+1].
    for (int k = 0; k < d.n; ++k) {
      const int ca = d.cells[k];
      const int cb = d.cells[(k + 1) % d.n];
      const int eid = find_edge(ca, cb);
      d.loop_edges[k] = eid;
      d.loop_signs[k] = (m.edges_[eid].cell_i == ca) ? 1.0 : -1.0;
    }
  }

  // Advection stencils.
  auto make_stencil = [&](int eid, int vert) {
    const Edge& e = m.edges_[eid];
    LoopStencil s;
    s.vert = vert;
    for (int side = 0; side < 2; ++side) {
      const int cell = side == 0 ? e.cell_i : e.cell_j;
      const Cell& c = m.cells_[cell];
      int other = -1;
      for (int k = 0; k < 3; ++k) {
        const int cand = c.edges[k];
        if (cand == eid) continue;
        const Edge& ce = m.edges_[cand];
        if (ce.vert_a == vert || ce.vert_b == vert) other = cand;
      }
      if (other < 0) throw std::logic_error("missing flank edge in loop stencil");
      const Edge& oe = m.edges_[other];
      const int nb = (oe.cell_i == cell) ? oe.cell_j : oe.cell_i;
      const DualCell& d = m.duals_[vert];
      double ov = 0.0;
      for (int k = 0; k < d.n; ++k)
        if (d.cells[k] == cell) ov = d.overlap[k] * d.area;
      if (side == 0) {
        s.edge_ii = other;
        s.cell_in = nb;
        s.sign_ii = m.outward_sign(other, cell);
        s.overlap_i = ov;
      } else {
        s.edge_jj = other;
        s.cell_jn = nb;
        s.sign_jj = m.outward_sign(other, cell);
        s.overlap_j = ov;
      }
    }
    return s;
  };
  const int ne = static_cast<int>(m.edges_.size());
  m.stencil_minus_.resize(ne);
  m.stencil_plus_.resize(ne);
  for (int eid = 0; eid < ne; ++eid) {
    m.stencil_minus_[eid] = make_stencil(eid, m.edges_[eid].vert_minus);
    m.stencil_plus_[eid] = make_stencil(eid, m.edges_[eid].vert_plus);
  }

  return m;
}

std::vector<std::pair<int, double>> Mesh::overlap_ratios(int vertex) const {
  const DualCell& d = duals_.at(vertex);
  std::vector<std::pair<int, double>> out;
  out.reserve(d.n);
  for (int k = 0; k < d.n; ++k) out.emplace_back(d.cells[k], d.overlap[k]);
  return out;
}

std::string Mesh::summary() const {
  double fmin = 1e300, fmax = 0, hmin = 1e300, hmax = 0, amin = 1e300, amax = 0;
  for (const auto& e : edges_) {
    fmin = std::min(fmin, e.primal_len);
    fmax = std::max(fmax, e.primal_len);
    hmin = std::min(hmin, e.dual_len);
    hmax = std::max(hmax, e.dual_len);
  }
  for (const auto& c : cells_) {
    amin = std::min(amin, c.area);
    amax = std::max(amax, c.area);
  }
  std::ostringstream os;
  os << "icosahedral mesh level " << level_ << ", radius " << radius_ << " m\n"
     << "  cells " << n_cells() << ", edges " << n_edges() << ", vertices " << n_vertices()
     << "\n"
     << "  f_ij  [" << fmin << ", " << fmax << "] m\n"
     << "  h_ij  [" << hmin << ", " << hmax << "] m\n"
     << "  Omega [" << amin << ", " << amax << "] m^2\n"
     << "  total area " << total_area_ << " m^2 (4*pi*R^2 = "
     << 4.0 * std::numbers::pi * radius_ * radius_ << ")\n";
  return os.str();
}

}  // namespace icosw
