#pragma once

#include <string>
#include <vector>

namespace edgetwin {

/// Virtual serving node for the cloud server in every place a server index
/// may also designate the cloud (selections, response sources, plan files).
inline constexpr int kCloudNode = -1;

struct EdgeServer {
  int id = 0;             // 1-based label, equals index+1 in a valid scenario
  double storage_gb = 0;  // capacity available for hosted models
};

struct PhysicalTwin {
  int id = 0;              // 1-based label
  int location = 0;        // 0-based index of the server whose cell hosts the PT
  double update_mb = 0;    // data shipped per synchronization
  double period_ms = 0;    // interval between synchronizations
  double storage_gb = 0;   // footprint of one hosted model replica
  double response_mb = 0;  // nominal service response size for this type
};

/// Edge/cloud topology plus the twin catalog. All unit latencies are
/// ms per MB; storage in GB. Immutable once validated.
struct Scenario {
  double upload_unit_latency = 0;
  std::vector<std::vector<double>> inter_es_unit_latency;  // V x V, zero diagonal
  std::vector<double> cloud_unit_latency;                  // per server, to/from cloud
  std::vector<EdgeServer> servers;
  std::vector<PhysicalTwin> pts;

  int server_count() const { return static_cast<int>(servers.size()); }
  int pt_count() const { return static_cast<int>(pts.size()); }

  /// Throws std::invalid_argument on any structural defect (shape, signs,
  /// out-of-range locations, non-sequential ids).
  void validate() const;
};

// Latency of pushing one synchronization of PT `pt` to a model on `server`.
double update_latency(const Scenario& sc, int pt, int server);

// Same, to the cloud replica. The cloud path is priced purely by the
// core-network unit latency of the PT's cell; no local upload term.
double update_latency_cloud(const Scenario& sc, int pt);

// Sawtooth model age at time t for the replica on `server` / on the cloud.
double aoi_dt_edge(const Scenario& sc, int pt, int server, double t_ms);
double aoi_dt_cloud(const Scenario& sc, int pt, double t_ms);

// Transfer latency of `size_mb` from `source` (server index or kCloudNode)
// to the requester's server `dest`. Zero when source == dest.
double response_latency(const Scenario& sc, int source, int dest, double size_mb);

// Age advantage of serving from `serving` (server index or kCloudNode)
// instead of the cloud, for a request at `request_loc` of the given size.
// Exactly zero for the cloud itself; independent of request time.
double utility_gain(const Scenario& sc, int pt, int serving, int request_loc,
                    double size_mb);

// JSON serialization. Field names and the row-major matrix layout are a
// stable file contract; ids and locations are 1-based on disk.
std::string scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const std::string& text);
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& sc, const std::string& path);

}  // namespace edgetwin
