#include "icosw/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace icosw {

namespace {
constexpr std::uint64_t kCheckpointMagic = 0x49434f5357434b50ull;  // "ICOSWCKP"
constexpr std::uint32_t kCheckpointVersion = 1;
}  // namespace

void write_vtk(const Mesh& m, const std::string& path,
               const std::map<std::string, std::vector<double>>& cell_data,
               const std::map<std::string, std::vector<double>>& point_data) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path);
  f << std::setprecision(17);
  f << "# vtk DataFile Version 3.0\n"
    << "icosahedral shallow water mesh\n"
    << "ASCII\n"
    << "DATASET UNSTRUCTURED_GRID\n";
  f << "POINTS " << m.n_vertices() << " double\n";
  for (const auto& d : m.duals()) f << d.pos.x << " " << d.pos.y << " " << d.pos.z << "\n";
  f << "CELLS " << m.n_cells() << " " << 4 * m.n_cells() << "\n";
  for (const auto& c : m.cells())
    f << "3 " << c.verts[0] << " " << c.verts[1] << " " << c.verts[2] << "\n";
  f << "CELL_TYPES " << m.n_cells() << "\n";
  for (int i = 0; i < m.n_cells(); ++i) f << "5\n";  // VTK_TRIANGLE

  if (!cell_data.empty()) {
    f << "CELL_DATA " << m.n_cells() << "\n";
    for (const auto& [name, vals] : cell_data) {
      if (static_cast<int>(vals.size()) != m.n_cells())
        throw IoError("cell data '" + name + "' has wrong length");
      f << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
      for (double v : vals) f << v << "\n";
    }
  }
  if (!point_data.empty()) {
    f << "POINT_DATA " << m.n_vertices() << "\n";
    for (const auto& [name, vals] : point_data) {
      if (static_cast<int>(vals.size()) != m.n_vertices())
        throw IoError("point data '" + name + "' has wrong length");
      f << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
      for (double v : vals) f << v << "\n";
    }
  }
  if (!f) throw IoError("write failed: " + path);
}

void write_field_csv(const std::string& path, const std::vector<double>& values) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path);
  f << std::setprecision(17) << "id,value\n";
  for (size_t i = 0; i < values.size(); ++i) f << i << "," << values[i] << "\n";
}

const char* DiagnosticsWriter::columns(bool with_state_errors) {
  return with_state_errors
             ? "step,time_s,mass,energy,pot_enstrophy,pot_circulation,mass_err,energy_err,"
               "enstrophy_err,circulation_err,depth_linf,depth_l2,vel_linf,vel_l2"
             : "step,time_s,mass,energy,pot_enstrophy,pot_circulation,mass_err,energy_err,"
               "enstrophy_err,circulation_err";
}

DiagnosticsWriter::DiagnosticsWriter(const std::string& path, bool with_state_errors)
    : out_(path), with_state_errors_(with_state_errors) {
  if (!out_) throw IoError("cannot open " + path);
  out_ << std::setprecision(17) << columns(with_state_errors_) << "\n";
}

void DiagnosticsWriter::write(const DiagnosticsRecord& r) {
  out_ << r.step << "," << r.time << "," << r.mass << "," << r.energy << "," << r.pot_enstrophy
       << "," << r.pot_circulation << "," << r.mass_err << "," << r.energy_err << ","
       << r.enstrophy_err << "," << r.circulation_err;
  if (with_state_errors_)
    out_ << "," << r.depth_linf << "," << r.depth_l2 << "," << r.vel_linf << "," << r.vel_l2;
  out_ << "\n";
  if (!out_) throw IoError("diagnostics write failed");
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::getline(f, line);  // header
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_checkpoint(const std::string& path, const ModelState& s) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  auto put = [&](const void* p, size_t n) { f.write(static_cast<const char*>(p), n); };
  const std::uint64_t ne = s.V.size(), nc = s.D.size();
  put(&kCheckpointMagic, 8);
  put(&kCheckpointVersion, 4);
  put(&ne, 8);
  put(&nc, 8);
  put(&s.time, 8);
  put(s.V.data().data(), 8 * ne);
  put(s.D.data().data(), 8 * nc);
  if (!f) throw IoError("write failed: " + path);
}

ModelState read_checkpoint(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  auto get = [&](void* p, size_t n) {
    f.read(static_cast<char*>(p), n);
    if (!f) throw IoError("truncated checkpoint: " + path);
  };
  std::uint64_t magic, ne, nc;
  std::uint32_t version;
  get(&magic, 8);
  get(&version, 4);
  if (magic != kCheckpointMagic || version != kCheckpointVersion)
    throw IoError("bad checkpoint header: " + path);
  get(&ne, 8);
  get(&nc, 8);
  ModelState s;
  get(&s.time, 8);
  s.V = EdgeField(static_cast<int>(ne));
  s.D = CellField(static_cast<int>(nc));
  get(s.V.data().data(), 8 * ne);
  get(s.D.data().data(), 8 * nc);
  return s;
}

}  // namespace icosw
