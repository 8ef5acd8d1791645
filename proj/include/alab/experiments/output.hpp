#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace alab {

namespace detail {

inline void flatten(const nlohmann::json& j, const std::string& prefix,
                    std::vector<std::pair<std::string, nlohmann::json>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      flatten(*it, key, out);
    else
      out.emplace_back(key, *it);
  }
}

inline std::string csv_cell(const nlohmann::json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  return os;
}

}  // namespace detail

/// One JSON document per line.
inline void write_jsonl(const std::filesystem::path& path, const std::vector<nlohmann::json>& rows) {
  auto os = detail::open_out(path);
  for (const auto& r : rows) os << r.dump() << '\n';
}

/// Flattens nested objects into dotted column names. Columns follow the
/// first row's key order; later rows may add columns at the end.
inline std::string to_csv(const std::vector<nlohmann::json>& rows) {
  std::vector<std::string> cols;
  std::vector<std::map<std::string, nlohmann::json>> flat;
  for (const auto& r : rows) {
    std::vector<std::pair<std::string, nlohmann::json>> kv;
    detail::flatten(r, "", kv);
    std::map<std::string, nlohmann::json> m;
    for (auto& [k, v] : kv) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
      m[k] = std::move(v);
    }
    flat.push_back(std::move(m));
  }
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + detail::csv_cell(cols[i]);
  out += '\n';
  for (const auto& m : flat) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ',';
      if (auto it = m.find(cols[i]); it != m.end()) out += detail::csv_cell(it->second);
    }
    out += '\n';
  }
  return out;
}

inline void write_csv(const std::filesystem::path& path, const std::vector<nlohmann::json>& rows) {
  auto os = detail::open_out(path);
  os << to_csv(rows);
}

/// Plot data: one (series, x, y) row per point.
struct PlotPoint {
  std::string series;
  double x = 0, y = 0;
};

inline void write_plot_csv(const std::filesystem::path& path, const std::string& x_name,
                           const std::vector<PlotPoint>& pts) {
  auto os = detail::open_out(path);
  os << "series," << x_name << ",frequency\n";
  for (const auto& p : pts)
    os << p.series << ',' << nlohmann::json(p.x).dump() << ',' << nlohmann::json(p.y).dump() << '\n';
}

}  // namespace alab
