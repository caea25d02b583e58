#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgetwin/network.hpp"

namespace edgetwin {

/// One interaction request. `location` and `pt_type` are 0-based internally;
/// the CSV contract on disk is 1-based. The optional fields feed the class
/// feature fallback chain and are never required.
struct Request {
  double time_ms = 0;
  int location = 0;
  int pt_type = 0;
  double response_size_mb = 0;
  std::optional<double> response_time_ms;
  std::optional<int> served_from;  // server index or kCloudNode
};

using RequestLog = std::vector<Request>;

/// The K = V*M discrete outcomes, indexed location-major then type:
/// k = location * M + type.
struct SampleSpace {
  int servers = 0;
  int types = 0;

  int size() const { return servers * types; }
  int index_of(int location, int type) const;
  int location_of(int k) const { return k / types; }
  int type_of(int k) const { return k % types; }
};

SampleSpace make_sample_space(const Scenario& sc);

struct DiscreteDistribution {
  std::vector<double> p;

  int size() const { return static_cast<int>(p.size()); }
  /// Throws std::invalid_argument unless entries are non-negative and sum
  /// to 1 within 1e-12.
  void validate() const;
};

DiscreteDistribution uniform_distribution(int k);

/// Per-class feature vector xi = (mean response time ms, mean size MB) and
/// the historical head count behind it.
struct ClassFeatures {
  std::vector<double> response_time_ms;  // T_j
  std::vector<double> response_size_mb;  // S_j
  std::vector<int> count;                // n_j

  int size() const { return static_cast<int>(count.size()); }
};

enum class GroundNorm { L1, L2 };

int class_of(const SampleSpace& space, const Request& r);

DiscreteDistribution empirical_distribution(const SampleSpace& space,
                                            const RequestLog& log);

// Mean response size and time per class. A request's time contribution is
// its recorded response time when present, else the transfer latency from
// its recorded serving node, else the cloud transfer latency at its size.
// Classes with no history take the global means.
ClassFeatures class_features(const Scenario& sc, const SampleSpace& space,
                             const RequestLog& log);

std::vector<std::vector<double>> ground_cost_matrix(const ClassFeatures& features,
                                                    GroundNorm norm);

// Request log CSV. Header required:
//   time_ms,location,pt_type,response_size_mb[,response_time_ms]
// 1-based locations/types on disk; unknown columns ignored.
RequestLog parse_request_csv(const std::string& text);
RequestLog load_request_csv(const std::string& path);
std::string request_csv(const RequestLog& log);
void save_request_csv(const RequestLog& log, const std::string& path);

}  // namespace edgetwin
