#include "gwode/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gwode/io.hpp"
#include "gwode/stats.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace gwode {

bool ExperimentSpec::operator==(const ExperimentSpec& other) const {
    return algorithms == other.algorithms && functions == other.functions &&
           config.np == other.config.np && config.max_iterations == other.config.max_iterations &&
           config.trials == other.config.trials && config.base_seed == other.config.base_seed &&
           config.q1 == other.config.q1 && config.q2 == other.config.q2 &&
           config.q3 == other.config.q3 && config.de_f == other.config.de_f &&
           config.de_cr == other.config.de_cr && config.dimension == other.config.dimension;
}

std::vector<ObjectiveFunction> ExperimentSpec::make_functions() const {
    std::vector<ObjectiveFunction> out;
    out.reserve(functions.size());
    for (const auto& f : functions) out.push_back(make_function(f.name, f.dimension));
    return out;
}

namespace {

struct RawFunction {
    std::string name;
    int dimension = 0; // 0 = use the spec-level default
    int line = 0;
};

} // namespace

ExperimentSpec parse_spec(const std::string& text) {
    ExperimentSpec spec;
    std::vector<RawFunction> raw_functions;
    bool seed_seen = false;
    std::set<std::string> seen_keys;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw SpecError(line_no, "expected 'key = value'");
        const std::string key{trim(s.substr(0, eq))};
        const std::string value{trim(s.substr(eq + 1))};
        if (key.empty()) throw SpecError(line_no, "empty key");
        if (value.empty()) throw SpecError(line_no, "empty value for key '" + key + "'");
        if (!seen_keys.insert(key).second)
            throw SpecError(line_no, "duplicate key '" + key + "'");

        try {
            if (key == "algorithms") {
                for (auto& name : split(value, ',')) {
                    if (!is_known_algorithm(name))
                        throw SpecError(line_no, "unknown algorithm '" + name + "'");
                    spec.algorithms.push_back(name);
                }
            } else if (key == "functions") {
                for (auto& item : split(value, ',')) {
                    RawFunction f;
                    f.line = line_no;
                    const auto colon = item.find(':');
                    if (colon == std::string::npos) {
                        f.name = item;
                    } else {
                        f.name = std::string(trim(std::string_view(item).substr(0, colon)));
                        f.dimension =
                            static_cast<int>(parse_int(std::string_view(item).substr(colon + 1)));
                    }
                    if (!is_known_function(f.name))
                        throw SpecError(line_no, "unknown function '" + f.name + "'");
                    raw_functions.push_back(std::move(f));
                }
            } else if (key == "base_seed") {
                spec.config.base_seed = parse_uint(value);
                seed_seen = true;
            } else if (key == "np") {
                spec.config.np = static_cast<int>(parse_int(value));
            } else if (key == "max_iterations") {
                spec.config.max_iterations = static_cast<int>(parse_int(value));
            } else if (key == "trials") {
                spec.config.trials = static_cast<int>(parse_int(value));
            } else if (key == "dimension") {
                spec.config.dimension = static_cast<int>(parse_int(value));
            } else if (key == "q1") {
                spec.config.q1 = static_cast<int>(parse_int(value));
            } else if (key == "q2") {
                spec.config.q2 = static_cast<int>(parse_int(value));
            } else if (key == "q3") {
                spec.config.q3 = static_cast<int>(parse_int(value));
            } else if (key == "de_f") {
                spec.config.de_f = parse_double(value);
            } else if (key == "de_cr") {
                spec.config.de_cr = parse_double(value);
            } else if (key == "stagnation_rel_tol") {
                spec.config.stagnation_rel_tol = parse_double(value);
            } else {
                throw SpecError(line_no, "unknown key '" + key + "'");
            }
        } catch (const SpecError&) {
            throw;
        } catch (const std::exception& e) {
            throw SpecError(line_no, std::string(e.what()) + " (key '" + key + "')");
        }
    }

    if (!seed_seen) throw SpecError(line_no, "missing required key 'base_seed'");
    if (spec.algorithms.empty()) throw SpecError(line_no, "missing required key 'algorithms'");
    if (raw_functions.empty()) throw SpecError(line_no, "missing required key 'functions'");

    std::set<std::string> names;
    for (const auto& rf : raw_functions) {
        FunctionRef f{rf.name, rf.dimension > 0 ? rf.dimension : spec.config.dimension};
        if (!names.insert(f.name).second)
            throw SpecError(rf.line, "duplicate function '" + f.name + "'");
        try {
            make_function(f.name, f.dimension); // validates the dimension
        } catch (const std::exception& e) {
            throw SpecError(rf.line, e.what());
        }
        spec.functions.push_back(std::move(f));
    }

    try {
        spec.config.validate();
    } catch (const std::exception& e) {
        throw SpecError(line_no, e.what());
    }
    return spec;
}

std::string serialize_spec(const ExperimentSpec& spec) {
    std::ostringstream out;
    out << "algorithms = ";
    for (std::size_t i = 0; i < spec.algorithms.size(); ++i)
        out << (i ? ", " : "") << spec.algorithms[i];
    out << "\nfunctions = ";
    for (std::size_t i = 0; i < spec.functions.size(); ++i) {
        out << (i ? ", " : "") << spec.functions[i].name;
        if (spec.functions[i].dimension != spec.config.dimension)
            out << ":" << spec.functions[i].dimension;
    }
    out << "\nbase_seed = " << spec.config.base_seed;
    out << "\nnp = " << spec.config.np;
    out << "\nmax_iterations = " << spec.config.max_iterations;
    out << "\ntrials = " << spec.config.trials;
    out << "\ndimension = " << spec.config.dimension;
    out << "\nq1 = " << spec.config.q1;
    out << "\nq2 = " << spec.config.q2;
    out << "\nq3 = " << spec.config.q3;
    out << "\nde_f = " << format_double(spec.config.de_f);
    out << "\nde_cr = " << format_double(spec.config.de_cr);
    out << "\nstagnation_rel_tol = " << format_double(spec.config.stagnation_rel_tol);
    out << "\n";
    return out.str();
}

int default_workers() {
    if (const char* env = std::getenv("GWODE_WORKERS")) {
        try {
            const int n = static_cast<int>(parse_int(env));
            if (n >= 1) return n;
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int exit_status_for(const std::exception& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitValidation;
    if (dynamic_cast<const std::runtime_error*>(&e)) return kExitIo;
    return kExitInternal;
}

int cmd_list_functions(std::ostream& out) {
    out << "name,lower,upper,f_star,min_dimension,summary\n";
    for (const auto& f : function_catalog()) {
        out << f.name << ',' << format_double(f.lower) << ',' << format_double(f.upper) << ','
            << format_double(f.f_star) << ',' << f.min_dimension << ',' << f.summary << '\n';
    }
    return kExitOk;
}

namespace {

std::string summary_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "function";
    for (const auto& a : result.algorithms) out << ',' << a;
    out << '\n';
    for (const auto& fn : result.functions) {
        out << fn;
        for (const auto& a : result.algorithms) {
            const CellResult* cell = result.cell(a, fn);
            out << ',' << (cell->diagnostic.empty() ? format_double(cell->mean_error) : "failed");
        }
        out << '\n';
    }
    return out.str();
}

std::string errors_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "algorithm,function,trial,error\n";
    for (const auto& fn : result.functions) {
        for (const auto& a : result.algorithms) {
            const CellResult* cell = result.cell(a, fn);
            for (std::size_t t = 0; t < cell->errors.size(); ++t)
                out << a << ',' << fn << ',' << t << ',' << format_double(cell->errors[t])
                    << '\n';
        }
    }
    return out.str();
}

ordered_json traces_json(const ExperimentResult& result, const RunConfig& config) {
    ordered_json root;
    root["np"] = config.np;
    root["max_iterations"] = config.max_iterations;
    root["cells"] = ordered_json::array();
    for (const auto& fn : result.functions) {
        for (const auto& a : result.algorithms) {
            const CellResult* cell = result.cell(a, fn);
            ordered_json c;
            c["algorithm"] = a;
            c["function"] = fn;
            c["f_star"] = cell->f_star;
            if (!cell->diagnostic.empty()) c["diagnostic"] = cell->diagnostic;
            c["trials"] = ordered_json::array();
            for (std::size_t t = 0; t < cell->traces.size(); ++t) {
                const TrialTrace& trace = cell->traces[t];
                ordered_json tj;
                tj["trial"] = t;
                tj["seed"] = trace.seed;
                tj["evaluations"] = trace.evaluations_used;
                tj["best_per_generation"] = trace.best_per_generation;
                if (!trace.mode_timeline.empty()) {
                    ordered_json tl = ordered_json::array();
                    for (const auto& ev : trace.mode_timeline)
                        tl.push_back({ev.generation, static_cast<int>(ev.mode)});
                    tj["mode_timeline"] = std::move(tl);
                }
                c["trials"].push_back(std::move(tj));
            }
            root["cells"].push_back(std::move(c));
        }
    }
    return root;
}

ordered_json summary_json(const ExperimentResult& result) {
    ordered_json root;
    root["functions"] = result.functions;
    root["algorithms"] = result.algorithms;
    root["mean_errors"] = ordered_json::array();
    for (const auto& fn : result.functions) {
        ordered_json row = ordered_json::array();
        for (const auto& a : result.algorithms) {
            const CellResult* cell = result.cell(a, fn);
            if (cell->diagnostic.empty())
                row.push_back(cell->mean_error);
            else
                row.push_back(nullptr);
        }
        root["mean_errors"].push_back(std::move(row));
    }
    return root;
}

ordered_json errors_json(const ExperimentResult& result) {
    ordered_json arr = ordered_json::array();
    for (const auto& fn : result.functions) {
        for (const auto& a : result.algorithms) {
            const CellResult* cell = result.cell(a, fn);
            for (std::size_t t = 0; t < cell->errors.size(); ++t) {
                arr.push_back({{"algorithm", a},
                               {"function", fn},
                               {"trial", t},
                               {"error", cell->errors[t]}});
            }
        }
    }
    return arr;
}

std::string one_decimal(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

std::string ranking_csv(const RankingTable& table) {
    std::ostringstream out;
    out << "Algorithm,AverageRanking,Normalized,Ranks\n";
    for (const auto& row : table.rows)
        out << row.algorithm << ',' << format_double(row.average_rank) << ','
            << one_decimal(row.normalized) << ',' << row.ordinal_rank << '\n';
    return out.str();
}

} // namespace

int cmd_run(const ExperimentSpec& spec, const std::string& out_dir, int workers,
            OutputFormat format, std::ostream& log) {
    const std::vector<ObjectiveFunction> functions = spec.make_functions();

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    // leave failure detection to the first file write

    log << "running " << spec.algorithms.size() << " algorithm(s) x " << functions.size()
        << " function(s) x " << spec.config.trials << " trial(s), workers=" << workers << "\n";

    const ExperimentResult result =
        run_experiment(spec.config, spec.algorithms, functions, workers);

    const fs::path dir(out_dir);
    if (format == OutputFormat::csv) {
        write_text_file((dir / "summary.csv").string(), summary_csv(result));
        write_text_file((dir / "errors.csv").string(), errors_csv(result));
    } else {
        write_text_file((dir / "summary.json").string(), summary_json(result).dump(2) + "\n");
        write_text_file((dir / "errors.json").string(), errors_json(result).dump(2) + "\n");
    }
    write_text_file((dir / "traces.json").string(),
                    traces_json(result, spec.config).dump() + "\n");

    // timestamps live only here, so the data files stay byte-reproducible
    ordered_json meta;
    meta["spec"] = serialize_spec(spec);
    meta["workers"] = workers;
    meta["format"] = format == OutputFormat::csv ? "csv" : "json";
    meta["generated_at_unix"] =
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count();
    write_text_file((dir / "metadata.json").string(), meta.dump(2) + "\n");

    for (const auto& cell : result.cells) {
        if (!cell.diagnostic.empty())
            log << "cell " << cell.algorithm << "/" << cell.function
                << " failed: " << cell.diagnostic << "\n";
        else
            log << cell.algorithm << " on " << cell.function
                << ": mean error = " << format_double(cell.mean_error) << "\n";
    }
    log << "results written to " << out_dir << "\n";
    return kExitOk;
}

int cmd_rank(const std::string& results_path, const std::string& out_path, std::ostream& log) {
    fs::path input(results_path);
    if (fs::is_directory(input)) input /= "summary.csv";
    const CsvTable table = read_csv(input.string());
    if (table.header.size() < 3 || table.header.empty() || table.header[0] != "function")
        throw std::invalid_argument("rank: expected a summary table with a 'function' column "
                                    "and at least 2 algorithms");

    std::vector<std::string> algorithms(table.header.begin() + 1, table.header.end());
    std::vector<std::vector<double>> matrix;
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::invalid_argument("rank: ragged summary row");
        std::vector<double> values;
        for (std::size_t i = 1; i < row.size(); ++i) values.push_back(parse_double(row[i]));
        matrix.push_back(std::move(values));
    }

    const RankingTable ranking = friedman_ranks(algorithms, matrix);
    const std::string csv = ranking_csv(ranking);

    fs::path out = out_path.empty() ? input.parent_path() / "ranking.csv" : fs::path(out_path);
    write_text_file(out.string(), csv);
    log << csv;
    log << "friedman statistic = " << format_double(ranking.friedman_statistic) << " (N="
        << ranking.n_functions << ")\n";
    return kExitOk;
}

namespace {

struct LoadedTraces {
    int np = 0;
    // function -> algorithm -> per-trial error traces
    std::map<std::string, std::map<std::string, std::vector<std::vector<double>>>> cells;
    std::vector<std::string> function_order;
    std::vector<std::string> algorithm_order;
};

LoadedTraces load_traces(const fs::path& path) {
    LoadedTraces out;
    ordered_json root;
    try {
        root = ordered_json::parse(read_text_file(path.string()));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed traces file: " + std::string(e.what()));
    }
    out.np = root.at("np").get<int>();
    for (const auto& cell : root.at("cells")) {
        const std::string fn = cell.at("function").get<std::string>();
        const std::string alg = cell.at("algorithm").get<std::string>();
        const double f_star = cell.at("f_star").get<double>();
        if (std::find(out.function_order.begin(), out.function_order.end(), fn) ==
            out.function_order.end())
            out.function_order.push_back(fn);
        if (std::find(out.algorithm_order.begin(), out.algorithm_order.end(), alg) ==
            out.algorithm_order.end())
            out.algorithm_order.push_back(alg);
        auto& traces = out.cells[fn][alg];
        for (const auto& trial : cell.at("trials")) {
            std::vector<double> errors;
            for (double best : trial.at("best_per_generation"))
                errors.push_back(compute_error(best, f_star));
            traces.push_back(std::move(errors));
        }
    }
    return out;
}

std::map<std::string, std::map<std::string, std::vector<double>>>
load_errors(const fs::path& path) {
    // function -> algorithm -> per-trial final errors
    std::map<std::string, std::map<std::string, std::vector<double>>> out;
    const CsvTable table = read_csv(path.string());
    if (table.header != std::vector<std::string>{"algorithm", "function", "trial", "error"})
        throw std::invalid_argument("unexpected errors.csv header");
    for (const auto& row : table.rows)
        out[row[1]][row[0]].push_back(parse_double(row[3]));
    return out;
}

} // namespace

int cmd_export_plots(const std::string& results_dir, PlotKind kind, const std::string& out_dir,
                     std::ostream& log) {
    const fs::path results(results_dir);
    const fs::path out = out_dir.empty() ? results : fs::path(out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);

    if (kind == PlotKind::box) {
        const auto errors = load_errors(results / "errors.csv");
        for (const auto& [fn, per_alg] : errors) {
            std::ostringstream csv;
            csv << "algorithm,min,q1,median,q3,max\n";
            for (const auto& [alg, values] : per_alg) {
                const BoxStats b = boxplot_stats(values);
                csv << alg << ',' << format_double(b.min) << ',' << format_double(b.q1) << ','
                    << format_double(b.median) << ',' << format_double(b.q3) << ','
                    << format_double(b.max) << '\n';
            }
            const fs::path file = out / ("box_" + fn + ".csv");
            write_text_file(file.string(), csv.str());
            log << "wrote " << file.string() << "\n";
        }
        return kExitOk;
    }

    const LoadedTraces traces = load_traces(results / "traces.json");
    for (const auto& fn : traces.function_order) {
        std::vector<ConvergenceSeries> series;
        std::vector<std::string> algs;
        for (const auto& alg : traces.algorithm_order) {
            const auto it = traces.cells.at(fn).find(alg);
            if (it == traces.cells.at(fn).end() || it->second.empty())
                throw std::invalid_argument("missing traces for " + alg + "/" + fn);
            series.push_back(convergence_series(it->second, traces.np));
            algs.push_back(alg);
        }
        std::ostringstream csv;
        csv << "evaluations";
        for (const auto& a : algs) csv << ',' << a;
        csv << '\n';
        const std::size_t len = series.front().evaluations.size();
        for (std::size_t g = 0; g < len; ++g) {
            csv << format_double(series.front().evaluations[g]);
            for (const auto& s : series) csv << ',' << format_double(s.log_mean_error[g]);
            csv << '\n';
        }
        const fs::path file = out / ("convergence_" + fn + ".csv");
        write_text_file(file.string(), csv.str());
        log << "wrote " << file.string() << "\n";
    }
    return kExitOk;
}

} // namespace gwode
