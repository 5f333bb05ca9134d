#include "geim/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace geim {

namespace {

constexpr const char* kFieldVersion = "geim-field v1";
constexpr const char* kGeimVersion = "geim-model v1";
constexpr const char* kEimVersion = "eim-model v1";
constexpr const char* kSnapsVersion = "geim-snapshots v1";

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw IoError("cannot open for writing: " + p.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot open for reading: " + p.string());
  return in;
}

void expect_line(std::istream& in, const std::string& want) {
  std::string line;
  std::getline(in, line);
  if (line != want) throw IoError("unexpected header: '" + line + "'");
}

void write_grid(std::ostream& out, const Grid& g) {
  out << "grid," << g.nx << "," << g.ny << "," << fmt_double(g.x_min) << ","
      << fmt_double(g.x_max) << "," << fmt_double(g.y_min) << ","
      << fmt_double(g.y_max) << "," << g.interface_col << "\n";
}

Grid read_grid(std::istream& in) {
  std::string line;
  std::getline(in, line);
  Grid g;
  char tag[8];
  if (std::sscanf(line.c_str(), "grid,%d,%d,%lf,%lf,%lf,%lf,%d", &g.nx, &g.ny,
                  &g.x_min, &g.x_max, &g.y_min, &g.y_max, &g.interface_col) != 7)
    throw IoError("bad grid record: " + line);
  (void)tag;
  return g;
}

void write_values(std::ostream& out, const Eigen::VectorXd& v) {
  out << v.size() << "\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) out << fmt_double(v[i]) << "\n";
}

Eigen::VectorXd read_values(std::istream& in) {
  long n = 0;
  in >> n;
  Eigen::VectorXd v(n);
  for (long i = 0; i < n; ++i) in >> v[i];
  in.ignore(1, '\n');
  return v;
}

void write_mask(std::ostream& out, const SubdomainMask& m) {
  out << "mask," << m.nodes.size();
  for (int k : m.nodes) out << "," << k;
  out << "\n";
}

SubdomainMask read_mask(std::istream& in, const Grid& g) {
  std::string line;
  std::getline(in, line);
  std::istringstream ss(line);
  std::string tok;
  std::getline(ss, tok, ',');
  if (tok != "mask") throw IoError("bad mask record");
  std::getline(ss, tok, ',');
  const size_t n = std::stoul(tok);
  SubdomainMask m{g, {}};
  m.nodes.reserve(n);
  while (std::getline(ss, tok, ',')) m.nodes.push_back(std::stoi(tok));
  if (m.nodes.size() != n) throw IoError("mask node count mismatch");
  return m;
}

void write_sensor(std::ostream& out, const Sensor& s) {
  out << "sensor," << (s.kind == SensorKind::Moment ? "moment" : "dirac") << ","
      << s.id << "," << fmt_double(s.cx) << "," << fmt_double(s.cy) << ","
      << fmt_double(s.radius) << "," << s.nodes.size();
  for (size_t k = 0; k < s.nodes.size(); ++k)
    out << "," << s.nodes[k] << "," << fmt_double(s.coeffs[k]);
  out << "\n";
}

Sensor read_sensor(std::istream& in, const Grid& g) {
  std::string line;
  std::getline(in, line);
  std::istringstream ss(line);
  std::string tok;
  auto next = [&] {
    if (!std::getline(ss, tok, ',')) throw IoError("truncated sensor record");
    return tok;
  };
  if (next() != "sensor") throw IoError("bad sensor record");
  Sensor s;
  s.grid = g;
  s.kind = next() == "moment" ? SensorKind::Moment : SensorKind::Dirac;
  s.id = std::stoi(next());
  s.cx = std::stod(next());
  s.cy = std::stod(next());
  s.radius = std::stod(next());
  const size_t n = std::stoul(next());
  for (size_t k = 0; k < n; ++k) {
    s.nodes.push_back(std::stoi(next()));
    s.coeffs.push_back(std::stod(next()));
  }
  return s;
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& B) {
  out << "matrix," << B.rows() << "," << B.cols() << "\n";
  for (Eigen::Index i = 0; i < B.rows(); ++i) {
    for (Eigen::Index j = 0; j < B.cols(); ++j)
      out << (j ? "," : "") << fmt_double(B(i, j));
    out << "\n";
  }
}

Eigen::MatrixXd read_matrix(std::istream& in) {
  std::string line;
  std::getline(in, line);
  long r = 0, c = 0;
  if (std::sscanf(line.c_str(), "matrix,%ld,%ld", &r, &c) != 2)
    throw IoError("bad matrix record");
  Eigen::MatrixXd B(r, c);
  for (long i = 0; i < r; ++i) {
    std::getline(in, line);
    std::istringstream ss(line);
    std::string tok;
    for (long j = 0; j < c; ++j) {
      if (!std::getline(ss, tok, ',')) throw IoError("truncated matrix row");
      B(i, j) = std::stod(tok);
    }
  }
  return B;
}

template <class T>
void write_int_list(std::ostream& out, const char* tag, const std::vector<T>& v) {
  out << tag << "," << v.size();
  for (const T& x : v) out << "," << x;
  out << "\n";
}

std::vector<int> read_int_list(std::istream& in, const std::string& tag) {
  std::string line;
  std::getline(in, line);
  std::istringstream ss(line);
  std::string tok;
  std::getline(ss, tok, ',');
  if (tok != tag) throw IoError("expected " + tag + " record");
  std::getline(ss, tok, ',');
  const size_t n = std::stoul(tok);
  std::vector<int> v;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
  if (v.size() != n) throw IoError(tag + " count mismatch");
  return v;
}

std::vector<double> read_double_list(std::istream& in, const std::string& tag) {
  std::string line;
  std::getline(in, line);
  std::istringstream ss(line);
  std::string tok;
  std::getline(ss, tok, ',');
  if (tok != tag) throw IoError("expected " + tag + " record");
  std::getline(ss, tok, ',');
  const size_t n = std::stoul(tok);
  std::vector<double> v;
  while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
  if (v.size() != n) throw IoError(tag + " count mismatch");
  return v;
}

void write_double_list(std::ostream& out, const char* tag,
                       const std::vector<double>& v) {
  out << tag << "," << v.size();
  for (double x : v) out << "," << fmt_double(x);
  out << "\n";
}

}  // namespace

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_field_csv(const std::filesystem::path& path, const Field& f) {
  std::ofstream out = open_out(path);
  out << kFieldVersion << "\n";
  write_grid(out, f.grid);
  write_values(out, f.values);
}

Field read_field_csv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  expect_line(in, kFieldVersion);
  const Grid g = read_grid(in);
  return Field(g, read_values(in));
}

void write_dictionary_manifest(const std::filesystem::path& path, const Dictionary& d) {
  std::ofstream out = open_out(path);
  out << "id,kind,center_x,center_y,radius\n";
  for (const Sensor& s : d.sensors)
    out << s.id << "," << (s.kind == SensorKind::Moment ? "moment" : "dirac") << ","
        << fmt_double(s.cx) << "," << fmt_double(s.cy) << "," << fmt_double(s.radius)
        << "\n";
}

void save_geim_model(const std::filesystem::path& path, const GeimModel& m) {
  std::ofstream out = open_out(path);
  out << kGeimVersion << "\n";
  write_grid(out, m.grid);
  write_mask(out, m.mask);
  out << "product," << (m.product == Product::L2 ? "l2" : "h1") << "\n";
  write_int_list(out, "sensor_ids", m.sensor_ids);
  write_int_list(out, "selected_snapshots", m.selected_snapshots);
  write_double_list(out, "history", m.history);
  write_matrix(out, m.B);
  out << "sensors," << m.sensors.size() << "\n";
  for (const Sensor& s : m.sensors) write_sensor(out, s);
  out << "basis," << m.basis.size() << "\n";
  for (const Field& q : m.basis) write_values(out, q.values);
}

GeimModel load_geim_model(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  expect_line(in, kGeimVersion);
  GeimModel m;
  m.grid = read_grid(in);
  m.mask = read_mask(in, m.grid);
  std::string line;
  std::getline(in, line);
  if (line == "product,l2")
    m.product = Product::L2;
  else if (line == "product,h1")
    m.product = Product::H1;
  else
    throw IoError("bad product record");
  m.sensor_ids = read_int_list(in, "sensor_ids");
  m.selected_snapshots = read_int_list(in, "selected_snapshots");
  m.history = read_double_list(in, "history");
  m.B = read_matrix(in);
  std::getline(in, line);
  long nsens = 0;
  if (std::sscanf(line.c_str(), "sensors,%ld", &nsens) != 1)
    throw IoError("bad sensors record");
  for (long i = 0; i < nsens; ++i) m.sensors.push_back(read_sensor(in, m.grid));
  std::getline(in, line);
  long nbasis = 0;
  if (std::sscanf(line.c_str(), "basis,%ld", &nbasis) != 1)
    throw IoError("bad basis record");
  for (long i = 0; i < nbasis; ++i) m.basis.emplace_back(m.grid, read_values(in));
  return m;
}

void save_eim_model(const std::filesystem::path& path, const EimModel& m) {
  std::ofstream out = open_out(path);
  out << kEimVersion << "\n";
  write_grid(out, m.grid);
  write_mask(out, m.mask);
  write_int_list(out, "points", m.points);
  write_int_list(out, "selected_snapshots", m.selected_snapshots);
  write_double_list(out, "history", m.history);
  write_matrix(out, m.B);
  out << "basis," << m.basis.size() << "\n";
  for (const Field& q : m.basis) write_values(out, q.values);
}

EimModel load_eim_model(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  expect_line(in, kEimVersion);
  EimModel m;
  m.grid = read_grid(in);
  m.mask = read_mask(in, m.grid);
  m.points = read_int_list(in, "points");
  m.selected_snapshots = read_int_list(in, "selected_snapshots");
  m.history = read_double_list(in, "history");
  m.B = read_matrix(in);
  std::string line;
  std::getline(in, line);
  long nbasis = 0;
  if (std::sscanf(line.c_str(), "basis,%ld", &nbasis) != 1)
    throw IoError("bad basis record");
  for (long i = 0; i < nbasis; ++i) m.basis.emplace_back(m.grid, read_values(in));
  return m;
}

void save_snapshots(const std::filesystem::path& dir, const SnapshotSet& set) {
  std::filesystem::create_directories(dir);
  std::ofstream out = open_out(dir / "manifest.csv");
  out << kSnapsVersion << "\n";
  write_grid(out, set.grid);
  out << "index,alpha,beta,gamma,file\n";
  for (size_t k = 0; k < set.params.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof(name), "field_%05zu.csv", k);
    out << k << "," << fmt_double(set.params[k].alpha) << ","
        << fmt_double(set.params[k].beta) << "," << fmt_double(set.params[k].gamma)
        << "," << name << "\n";
    write_field_csv(dir / name, set.fields[k]);
  }
}

SnapshotSet load_snapshots(const std::filesystem::path& dir) {
  std::ifstream in = open_in(dir / "manifest.csv");
  expect_line(in, kSnapsVersion);
  SnapshotSet set;
  set.grid = read_grid(in);
  std::string line;
  std::getline(in, line);  // column header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tok;
    std::getline(ss, tok, ',');
    ParamPoint p;
    std::getline(ss, tok, ',');
    p.alpha = std::stod(tok);
    std::getline(ss, tok, ',');
    p.beta = std::stod(tok);
    std::getline(ss, tok, ',');
    p.gamma = std::stod(tok);
    std::getline(ss, tok, ',');
    set.params.push_back(p);
    set.fields.push_back(read_field_csv(dir / tok));
  }
  return set;
}

}  // namespace geim
