#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwode/harness.hpp"

namespace gwode {

/// Parse failure with the offending line of the spec document.
class SpecError : public std::invalid_argument {
public:
    SpecError(int line, const std::string& message)
        : std::invalid_argument("spec line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct FunctionRef {
    std::string name;
    int dimension = 0;
    bool operator==(const FunctionRef&) const = default;
};

/// Declarative experiment description; the flat key/value document schema is
/// described in the README. base_seed is mandatory.
struct ExperimentSpec {
    std::vector<std::string> algorithms;
    std::vector<FunctionRef> functions;
    RunConfig config;

    bool operator==(const ExperimentSpec& other) const;
    std::vector<ObjectiveFunction> make_functions() const;
};

ExperimentSpec parse_spec(const std::string& text);
std::string serialize_spec(const ExperimentSpec& spec);

enum class OutputFormat { csv, json };
enum class PlotKind { box, convergence };

// exit statuses: 0 ok, 1 validation error, 2 I/O error, 3 internal error
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitInternal = 3;

int cmd_list_functions(std::ostream& out);
int cmd_run(const ExperimentSpec& spec, const std::string& out_dir, int workers,
            OutputFormat format, std::ostream& log);
int cmd_rank(const std::string& results_path, const std::string& out_path, std::ostream& log);
int cmd_export_plots(const std::string& results_dir, PlotKind kind, const std::string& out_dir,
                     std::ostream& log);

/// Maps an exception to the documented exit status.
int exit_status_for(const std::exception& e);

/// GWODE_WORKERS environment variable, else hardware concurrency.
int default_workers();

} // namespace gwode
