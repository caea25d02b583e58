#include "edgetwin/network.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace edgetwin {
namespace {

void check_server(const Scenario& sc, int server) {
  if (server < 0 || server >= sc.server_count())
    throw std::out_of_range("server index out of range: " + std::to_string(server));
}

void check_pt(const Scenario& sc, int pt) {
  if (pt < 0 || pt >= sc.pt_count())
    throw std::out_of_range("pt index out of range: " + std::to_string(pt));
}

}  // namespace

void Scenario::validate() const {
  const int v = server_count();
  if (v == 0) throw std::invalid_argument("scenario has no servers");
  if (static_cast<int>(inter_es_unit_latency.size()) != v)
    throw std::invalid_argument("inter_es_unit_latency row count != V");
  for (const auto& row : inter_es_unit_latency)
    if (static_cast<int>(row.size()) != v)
      throw std::invalid_argument("inter_es_unit_latency is not V x V");
  for (int i = 0; i < v; ++i) {
    if (inter_es_unit_latency[i][i] != 0.0)
      throw std::invalid_argument("inter_es_unit_latency diagonal must be zero");
    for (int j = 0; j < v; ++j)
      if (inter_es_unit_latency[i][j] < 0.0)
        throw std::invalid_argument("negative inter-ES unit latency");
  }
  if (static_cast<int>(cloud_unit_latency.size()) != v)
    throw std::invalid_argument("cloud_unit_latency length != V");
  for (double c : cloud_unit_latency)
    if (c < 0.0) throw std::invalid_argument("negative cloud unit latency");
  if (upload_unit_latency < 0.0)
    throw std::invalid_argument("negative upload unit latency");
  for (int i = 0; i < v; ++i) {
    if (servers[i].id != i + 1)
      throw std::invalid_argument("server ids must be 1..V in order");
    if (servers[i].storage_gb <= 0.0)
      throw std::invalid_argument("server storage must be positive");
  }
  for (int m = 0; m < pt_count(); ++m) {
    const PhysicalTwin& p = pts[m];
    if (p.id != m + 1) throw std::invalid_argument("pt ids must be 1..M in order");
    if (p.location < 0 || p.location >= v)
      throw std::invalid_argument("pt location out of range");
    if (p.update_mb <= 0.0 || p.period_ms <= 0.0 || p.storage_gb <= 0.0 ||
        p.response_mb <= 0.0)
      throw std::invalid_argument("pt parameters must be positive");
  }
}

double update_latency(const Scenario& sc, int pt, int server) {
  check_pt(sc, pt);
  check_server(sc, server);
  const PhysicalTwin& p = sc.pts[pt];
  if (p.location == server) return p.update_mb * sc.upload_unit_latency;
  return p.update_mb *
         (sc.upload_unit_latency + sc.inter_es_unit_latency[p.location][server]);
}

double update_latency_cloud(const Scenario& sc, int pt) {
  check_pt(sc, pt);
  const PhysicalTwin& p = sc.pts[pt];
  return p.update_mb * sc.cloud_unit_latency[p.location];
}

namespace {

double sawtooth_offset(double t_ms, double period_ms) {
  if (t_ms < 0.0) throw std::domain_error("time must be non-negative");
  const double n = std::floor(t_ms / period_ms);
  return t_ms - n * period_ms;
}

}  // namespace

double aoi_dt_edge(const Scenario& sc, int pt, int server, double t_ms) {
  const double base = update_latency(sc, pt, server);
  return base + sawtooth_offset(t_ms, sc.pts[pt].period_ms);
}

double aoi_dt_cloud(const Scenario& sc, int pt, double t_ms) {
  const double base = update_latency_cloud(sc, pt);
  return base + sawtooth_offset(t_ms, sc.pts[pt].period_ms);
}

double response_latency(const Scenario& sc, int source, int dest, double size_mb) {
  check_server(sc, dest);
  if (size_mb < 0.0) throw std::domain_error("response size must be non-negative");
  if (source == kCloudNode) return size_mb * sc.cloud_unit_latency[dest];
  check_server(sc, source);
  if (source == dest) return 0.0;
  return size_mb * sc.inter_es_unit_latency[source][dest];
}

double utility_gain(const Scenario& sc, int pt, int serving, int request_loc,
                    double size_mb) {
  if (serving == kCloudNode) {
    check_pt(sc, pt);
    check_server(sc, request_loc);
    return 0.0;
  }
  const double update_part = update_latency_cloud(sc, pt) - update_latency(sc, pt, serving);
  const double response_part = response_latency(sc, kCloudNode, request_loc, size_mb) -
                               response_latency(sc, serving, request_loc, size_mb);
  return update_part + response_part;
}

std::string scenario_to_json(const Scenario& sc) {
  nlohmann::ordered_json j;
  j["upload_unit_latency"] = sc.upload_unit_latency;
  std::vector<double> flat;
  flat.reserve(sc.server_count() * sc.server_count());
  for (const auto& row : sc.inter_es_unit_latency)
    flat.insert(flat.end(), row.begin(), row.end());
  j["inter_es_unit_latency"] = flat;
  j["cloud_unit_latency"] = sc.cloud_unit_latency;
  j["servers"] = nlohmann::ordered_json::array();
  for (const EdgeServer& s : sc.servers)
    j["servers"].push_back({{"id", s.id}, {"storage_gb", s.storage_gb}});
  j["pts"] = nlohmann::ordered_json::array();
  for (const PhysicalTwin& p : sc.pts)
    j["pts"].push_back({{"id", p.id},
                        {"location", p.location + 1},
                        {"update_mb", p.update_mb},
                        {"period_ms", p.period_ms},
                        {"storage_gb", p.storage_gb},
                        {"response_mb", p.response_mb}});
  return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Scenario sc;
  sc.upload_unit_latency = j.at("upload_unit_latency").get<double>();
  sc.cloud_unit_latency = j.at("cloud_unit_latency").get<std::vector<double>>();
  const auto flat = j.at("inter_es_unit_latency").get<std::vector<double>>();
  const int v = static_cast<int>(sc.cloud_unit_latency.size());
  if (static_cast<int>(flat.size()) != v * v)
    throw std::invalid_argument("inter_es_unit_latency must hold V*V entries");
  sc.inter_es_unit_latency.assign(v, std::vector<double>(v, 0.0));
  for (int i = 0; i < v; ++i)
    for (int k = 0; k < v; ++k) sc.inter_es_unit_latency[i][k] = flat[i * v + k];
  for (const auto& s : j.at("servers"))
    sc.servers.push_back({s.at("id").get<int>(), s.at("storage_gb").get<double>()});
  for (const auto& p : j.at("pts"))
    sc.pts.push_back({p.at("id").get<int>(), p.at("location").get<int>() - 1,
                      p.at("update_mb").get<double>(), p.at("period_ms").get<double>(),
                      p.at("storage_gb").get<double>(), p.at("response_mb").get<double>()});
  sc.validate();
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return scenario_from_json(text);
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scenario file: " + path);
  out << scenario_to_json(sc);
}

}  // namespace edgetwin
