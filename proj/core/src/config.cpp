#include "geim/config.hpp"

#include <algorithm>
#include <cinttypes>
#include <fstream>
#include <map>
#include <sstream>

#include "geim/io.hpp"

namespace geim {

namespace {

int to_int(const std::string& v) { return std::stoi(v); }
double to_double(const std::string& v) { return std::stod(v); }

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected key=value");
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  try {
    if (key == "nx") nx = to_int(value);
    else if (key == "ny") ny = to_int(value);
    else if (key == "x_min") x_min = to_double(value);
    else if (key == "x_max") x_max = to_double(value);
    else if (key == "y_min") y_min = to_double(value);
    else if (key == "y_max") y_max = to_double(value);
    else if (key == "interface_x") interface_x = to_double(value);
    else if (key == "alpha_min") ranges.alpha.min = to_double(value);
    else if (key == "alpha_max") ranges.alpha.max = to_double(value);
    else if (key == "alpha_count") ranges.alpha.count = to_int(value);
    else if (key == "beta_min") ranges.beta.min = to_double(value);
    else if (key == "beta_max") ranges.beta.max = to_double(value);
    else if (key == "beta_count") ranges.beta.count = to_int(value);
    else if (key == "gamma_min") ranges.gamma.min = to_double(value);
    else if (key == "gamma_max") ranges.gamma.max = to_double(value);
    else if (key == "gamma_count") ranges.gamma.count = to_int(value);
    else if (key == "dict_stride_x") dict_stride_x = to_int(value);
    else if (key == "dict_stride_y") dict_stride_y = to_int(value);
    else if (key == "dict_radius") dict_radius = to_double(value);
    else if (key == "kernel") {
      if (value == "bump") kernel = KernelShape::Bump;
      else if (value == "box") kernel = KernelShape::Box;
      else throw ConfigError("kernel must be bump or box");
    } else if (key == "M_max") M_max = to_int(value);
    else if (key == "tol") tol = to_double(value);
    else if (key == "product") {
      if (value != "l2" && value != "h1")
        throw ConfigError("product must be l2 or h1");
      product = value;
    } else if (key == "epsilon") epsilon = to_double(value);
    else if (key == "P") P = to_int(value);
    else if (key == "trials") trials = to_int(value);
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "held_out") {
      if (value != "midpoint" && value != "training")
        throw ConfigError("held_out must be midpoint or training");
      held_out = value;
    } else if (key == "threads") threads = to_int(value);
    else if (key == "out") out_dir = value;
    else throw ConfigError("unknown config key: " + key);
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad value for key " + key + ": " + value);
  } catch (const std::out_of_range&) {
    throw ConfigError("value out of range for key " + key + ": " + value);
  }
}

std::string ExperimentConfig::canonical() const {
  std::map<std::string, std::string> kv;
  kv["nx"] = std::to_string(nx);
  kv["ny"] = std::to_string(ny);
  kv["x_min"] = fmt_double(x_min);
  kv["x_max"] = fmt_double(x_max);
  kv["y_min"] = fmt_double(y_min);
  kv["y_max"] = fmt_double(y_max);
  kv["interface_x"] = fmt_double(interface_x);
  kv["alpha_min"] = fmt_double(ranges.alpha.min);
  kv["alpha_max"] = fmt_double(ranges.alpha.max);
  kv["alpha_count"] = std::to_string(ranges.alpha.count);
  kv["beta_min"] = fmt_double(ranges.beta.min);
  kv["beta_max"] = fmt_double(ranges.beta.max);
  kv["beta_count"] = std::to_string(ranges.beta.count);
  kv["gamma_min"] = fmt_double(ranges.gamma.min);
  kv["gamma_max"] = fmt_double(ranges.gamma.max);
  kv["gamma_count"] = std::to_string(ranges.gamma.count);
  kv["dict_stride_x"] = std::to_string(dict_stride_x);
  kv["dict_stride_y"] = std::to_string(dict_stride_y);
  kv["dict_radius"] = fmt_double(dict_radius);
  kv["kernel"] = kernel == KernelShape::Bump ? "bump" : "box";
  kv["M_max"] = std::to_string(M_max);
  kv["tol"] = fmt_double(tol);
  kv["product"] = product;
  kv["epsilon"] = fmt_double(epsilon);
  kv["P"] = std::to_string(P);
  kv["trials"] = std::to_string(trials);
  kv["seed"] = std::to_string(seed);
  kv["held_out"] = held_out;
  std::ostringstream out;
  for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
  // threads and out are execution details, excluded from the hash on purpose
  return out.str();
}

uint64_t ExperimentConfig::hash() const {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : canonical()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string ExperimentConfig::hash_hex() const {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, hash());
  return buf;
}

double ExperimentConfig::effective_radius() const {
  if (dict_radius > 0) return dict_radius;
  const double hx = (x_max - x_min) / (nx - 1);
  const double hy = (y_max - y_min) / (ny - 1);
  return 3.0 * std::max(hx, hy);
}

Product ExperimentConfig::greedy_product() const {
  return product == "h1" ? Product::H1 : Product::L2;
}

}  // namespace geim
