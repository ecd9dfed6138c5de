#ifndef MSK_SCENARIO_HPP
#define MSK_SCENARIO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "msk/chart.hpp"
#include "msk/forms.hpp"
#include "msk/orthogonality.hpp"

namespace msk {

inline constexpr const char* kScenarioSchema = "msk-scenario/1";
inline constexpr const char* kReportSchema = "msk-report/1";
inline constexpr std::uint64_t kDefaultSeed = 12345;

struct Task {
  std::string id;
  std::string op;
  nlohmann::json args() const;
  std::string args_text;    // canonical JSON of the op arguments
  std::string expect_text;  // canonical JSON of the expectation, "" if none
  bool operator==(const Task&) const = default;
};

// Declarative description of a chart, named objects on it, and an ordered
// list of verification tasks. Parsing validates every object against the
// chart and every task reference against the named objects.
struct Scenario {
  std::string name;
  Chart chart;
  std::map<std::string, DifferentialForm> forms;
  std::map<std::string, MultiVectorField> fields;
  std::map<std::string, Subspace> subspaces;
  std::map<std::string, PolyMap> maps;
  std::map<std::string, QVector> points;
  std::vector<Task> tasks;

  bool operator==(const Scenario&) const = default;
};

enum class TaskStatus { pass, fail, error, inconclusive };

std::string to_string(TaskStatus s);

struct TaskResult {
  std::string id;
  std::string op;
  TaskStatus status = TaskStatus::pass;
  std::string payload_text;  // canonical JSON payload
  double millis = 0.0;
};

struct Report {
  std::string scenario_name;
  std::uint64_t seed = kDefaultSeed;
  std::vector<TaskResult> tasks;

  int count(TaskStatus s) const;
  bool clean() const;  // no fail and no error
  // Canonical machine rendering; byte-identical for identical inputs and
  // seed. Timings are excluded unless requested.
  std::string to_json_text(bool with_timings = false) const;
  std::string to_text(bool with_timings = false) const;
};

Scenario parse_scenario(const std::string& text);
Scenario parse_scenario_file(const std::string& path);
std::string scenario_to_json_text(const Scenario& scenario);

struct RunOptions {
  std::optional<std::string> only_task;
  std::uint64_t seed = kDefaultSeed;
};

// Executes tasks in order; a task error never aborts later tasks.
Report run(const Scenario& scenario, const RunOptions& options = {});

// Ready-made scenario for a canonical Darboux model (fiber_coords empty:
// unrestricted model on x1..xn; otherwise the horizontal model).
std::string emit_darboux_scenario(int n, int k,
                                  const std::vector<std::string>& fiber_coords = {},
                                  int horizontal_r = 0);

}  // namespace msk

#endif
