#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "icosw/diagnostics.hpp"
#include "icosw/fields.hpp"
#include "icosw/mesh.hpp"

namespace icosw {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Legacy ASCII VTK unstructured-grid dump of the triangulation.
/// cell_data fields must have n_cells entries, point_data n_vertices.
void write_vtk(const Mesh& m, const std::string& path,
               const std::map<std::string, std::vector<double>>& cell_data = {},
               const std::map<std::string, std::vector<double>>& point_data = {});

/// Plain CSV export of any per-entity field: header "id,value".
void write_field_csv(const std::string& path, const std::vector<double>& values);

/// Diagnostics time series with a fixed, documented column set.
class DiagnosticsWriter {
 public:
  DiagnosticsWriter(const std::string& path, bool with_state_errors);
  void write(const DiagnosticsRecord& rec);
  static const char* columns(bool with_state_errors);

 private:
  std::ofstream out_;
  bool with_state_errors_ = false;
};

/// Parse a diagnostics CSV back into records (round-trip checked in tests).
std::vector<std::vector<double>> read_csv(const std::string& path);

/// Binary checkpoint of (time, V, D). Little-endian IEEE doubles, in file
/// order: magic, version, n_edges, n_cells, time, V[0..], D[0..].
void write_checkpoint(const std::string& path, const ModelState& s);
ModelState read_checkpoint(const std::string& path);

}  // namespace icosw
