// Command-line front end: twisted cohomology of torus mapping tori,
// Novikov invariants, the cellular oracle cross-check, and the symbolic
// LCS identity battery.
//
// Exit codes: 0 ok, 2 invalid input, 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mnk/mnk.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUserError = 2;
constexpr int kExitInvariantViolation = 3;

struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    std::string command;
    mnk::Matrix<mnk::Rational> matrix;
    mnk::TwistSpec twist;
    std::string format = "json";
    bool audit = false;
    bool oracle = false;
    int alpha_digits = 4;
    std::optional<int> root_select;
};

mnk::Matrix<mnk::Rational> parse_matrix(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw UserError("cannot open matrix file: " + arg.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.size() >= 2 && text[0] == 'I' && std::isdigit(text[1])) {
        int n = std::stoi(text.substr(1));
        if (n < 1 || n > 8) throw UserError("identity shortcut out of range: " + text);
        return mnk::Matrix<mnk::Rational>::identity(n, mnk::Rational(1));
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UserError(std::string("matrix is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw UserError("matrix must be a nonempty JSON array of rows");
    int rows = static_cast<int>(j.size());
    int cols = -1;
    std::vector<mnk::Rational> entries;
    for (const auto& row : j) {
        if (!row.is_array()) throw UserError("matrix rows must be arrays");
        if (cols < 0)
            cols = static_cast<int>(row.size());
        else if (cols != static_cast<int>(row.size()))
            throw UserError("ragged matrix rows");
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw UserError("matrix entries must be integers");
            entries.emplace_back(e.get<long long>());
        }
    }
    return mnk::Matrix<mnk::Rational>(rows, cols, std::move(entries));
}

mnk::TwistSpec parse_twist(const std::string& s) {
    if (s == "untwisted") return mnk::TwistSpec::untwisted();
    if (s == "lee") return mnk::TwistSpec::lee();
    if (s == "transcendental") return mnk::TwistSpec::transcendental();
    if (s.rfind("rational:", 0) == 0) {
        try {
            mnk::Rational l = mnk::parse_rational(s.substr(9));
            if (l.is_zero()) throw UserError("rational twist weight must be nonzero");
            return mnk::TwistSpec::rational(l);
        } catch (const std::invalid_argument& e) {
            throw UserError(std::string("bad twist weight: ") + e.what());
        }
    }
    throw UserError("unknown twist mode: " + s +
                    " (expected untwisted|rational:<p/q>|lee|transcendental)");
}

json twist_to_json(const mnk::TwistSpec& tw) {
    json j;
    switch (tw.mode) {
        case mnk::TwistMode::Untwisted:
            j["mode"] = "untwisted";
            j["lambda"] = "1";
            break;
        case mnk::TwistMode::RationalWeight:
            j["mode"] = "rational";
            j["lambda"] = mnk::to_string(tw.lambda);
            break;
        case mnk::TwistMode::LeeEigenvalue:
            j["mode"] = "lee";
            j["lambda"] = "alpha";
            break;
        case mnk::TwistMode::Transcendental:
            j["mode"] = "transcendental";
            j["lambda"] = "indeterminate";
            break;
    }
    return j;
}

json gamma_to_json(const mnk::GammaAudit& g) {
    json j;
    j["degree"] = g.degree;
    j["size"] = g.size;
    j["rank"] = g.rank;
    json rows = json::array();
    for (int i = 0; i < g.size; ++i) {
        json row = json::array();
        for (int k = 0; k < g.size; ++k) row.push_back(g.entries[i * g.size + k]);
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

std::string gamma_to_markdown(const mnk::GammaAudit& g) {
    std::ostringstream os;
    os << "### gamma block, degree " << g.degree << " (rank " << g.rank << ")\n\n";
    std::vector<size_t> widths(g.size, 0);
    for (int i = 0; i < g.size; ++i)
        for (int j = 0; j < g.size; ++j)
            widths[j] = std::max(widths[j], g.entries[i * g.size + j].size());
    for (int i = 0; i < g.size; ++i) {
        os << "    [ ";
        for (int j = 0; j < g.size; ++j) {
            std::string e = g.entries[i * g.size + j];
            os << std::string(widths[j] - e.size(), ' ') << e;
            os << (j + 1 < g.size ? "  " : " ");
        }
        os << "]\n";
    }
    os << "\n";
    return os.str();
}

json cohomology_to_json(const mnk::CohomologyReport& r) {
    json j;
    j["dims"] = r.dims;
    j["nullities"] = r.nullities;
    j["euler"] = r.euler;
    j["twist"] = twist_to_json(r.twist);
    j["field"] = r.field;
    j["alpha_approx"] = r.alpha_approx ? json(*r.alpha_approx) : json(nullptr);
    j["warnings"] = r.warnings;
    return j;
}

json run_compute(const JobSpec& job) {
    mnk::MappingTorus mt = mnk::build_mapping_torus(job.matrix, job.root_select);
    mnk::CohomologyReport r = mnk::twisted_cohomology(mt, job.twist, job.alpha_digits);
    mnk::CheckResult chk = mnk::vanishing_check(r);
    if (!chk.pass) {
        std::string msg = "vanishing/Euler invariant violated:";
        for (const auto& v : chk.violations) msg += " " + v;
        throw InvariantViolation(msg);
    }
    json j = cohomology_to_json(r);
    if (job.oracle) {
        mnk::CheckResult oc = mnk::cross_check(mt, job.twist);
        if (!oc.pass) {
            std::string msg = "oracle disagrees with the closed form:";
            for (const auto& v : oc.violations) msg += " " + v;
            throw InvariantViolation(msg);
        }
        j["oracle"] = "agrees";
    }
    if (job.audit) {
        json blocks = json::array();
        for (int k = 0; k <= mt.n; ++k)
            blocks.push_back(gamma_to_json(mnk::gamma_matrix(mt, job.twist, k)));
        j["audit"] = blocks;
    }
    return j;
}

json run_novikov(const JobSpec& job) {
    mnk::MappingTorus mt = mnk::build_mapping_torus(job.matrix, job.root_select);
    mnk::NovikovInvariants inv = mnk::novikov_invariants(mt);
    mnk::CheckResult chk = mnk::pajitnov_consistency(mt);
    if (!chk.pass) {
        std::string msg = "Novikov/twisted-cohomology consistency violated:";
        for (const auto& v : chk.violations) msg += " " + v;
        throw InvariantViolation(msg);
    }
    json j;
    j["betti"] = inv.betti;
    json tor = json::array();
    for (const auto& degree : inv.torsion) {
        json d = json::array();
        for (const auto& p : degree) d.push_back(mnk::to_string(p, "t"));
        tor.push_back(d);
    }
    j["torsion"] = tor;
    j["period_generator"] = inv.period_generator;
    j["free_generators"] = inv.free_generators;
    j["notes"] = inv.notes;
    return j;
}

json run_oracle(const JobSpec& job) {
    mnk::MappingTorus mt = mnk::build_mapping_torus(job.matrix, job.root_select);
    mnk::CheckResult c = mnk::cross_check(mt, job.twist);
    if (!c.pass) {
        std::string msg = "oracle mismatch:";
        for (const auto& v : c.violations) msg += " " + v;
        throw InvariantViolation(msg);
    }
    json j;
    j["result"] = "pass";
    j["dims"] = mnk::oracle_dims(mt, job.twist);
    j["twist"] = twist_to_json(job.twist);
    return j;
}

json run_verify_lcs() {
    mnk::TricerriReport rep = mnk::verify_tricerri();
    json j;
    json ids = json::array();
    for (const auto& c : rep.identities) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.pass) e["residual"] = c.residual;
        ids.push_back(e);
    }
    j["identities"] = ids;
    json ctl = json::array();
    for (const auto& c : rep.negative_controls) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["residual"] = c.residual;
        ctl.push_back(e);
    }
    j["negative_controls"] = ctl;
    j["normalization"] = mnk::to_string(rep.normalization);
    j["all_pass"] = rep.all_pass;
    if (!rep.all_pass) throw InvariantViolation("LCS identity battery failed");
    return j;
}

json run_job(const JobSpec& job) {
    if (job.command == "compute") return run_compute(job);
    if (job.command == "novikov") return run_novikov(job);
    if (job.command == "oracle") return run_oracle(job);
    if (job.command == "verify-lcs") return run_verify_lcs();
    throw UserError("unknown command in batch job: " + job.command);
}

std::string render_markdown(const JobSpec& job, const json& j) {
    std::ostringstream os;
    os << "## " << job.command << "\n\n";
    for (const auto& [key, value] : j.items()) {
        if (key == "audit") continue;
        os << "- **" << key << "**: " << value.dump() << "\n";
    }
    if (j.contains("audit") && job.command == "compute") {
        os << "\n";
        mnk::MappingTorus mt = mnk::build_mapping_torus(job.matrix, job.root_select);
        for (int k = 0; k <= mt.n; ++k)
            os << gamma_to_markdown(mnk::gamma_matrix(mt, job.twist, k));
    }
    return os.str();
}

void emit(const JobSpec& job, const json& j) {
    if (job.format == "markdown")
        std::cout << render_markdown(job, j);
    else
        std::cout << j.dump(2) << "\n";
}

int run_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot open batch file: " + path);
    json jobs_json;
    try {
        jobs_json = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UserError(std::string("batch file is not valid JSON: ") + e.what());
    }
    if (!jobs_json.is_array()) throw UserError("batch file must hold a JSON array of jobs");
    std::vector<JobSpec> jobs;
    for (const auto& e : jobs_json) {
        JobSpec job;
        job.command = e.value("command", "compute");
        if (job.command != "verify-lcs")
            job.matrix = parse_matrix(e.value("matrix", json::array()).dump());
        job.twist = parse_twist(e.value("twist", "untwisted"));
        job.alpha_digits = e.value("alpha_digits", 4);
        jobs.push_back(std::move(job));
    }
    // jobs share nothing; run them concurrently
    std::vector<std::future<json>> futures;
    futures.reserve(jobs.size());
    for (const auto& job : jobs)
        futures.push_back(std::async(std::launch::async, [&job] { return run_job(job); }));
    json out = json::array();
    for (auto& f : futures) out.push_back(f.get());
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Morse-Novikov cohomology of torus mapping tori"};
    app.require_subcommand(1);

    JobSpec job;
    std::string matrix_arg, twist_arg = "untwisted", batch_path;
    int root_select = -1;

    auto add_common = [&](CLI::App* cmd, bool needs_matrix) {
        if (needs_matrix)
            cmd->add_option("--matrix", matrix_arg, "monodromy matrix: inline JSON, @file, or In")
                ->required();
        cmd->add_option("--twist", twist_arg,
                        "twist mode: untwisted|rational:<p/q>|lee|transcendental");
        cmd->add_option("--format", job.format, "output format: json|markdown")
            ->check(CLI::IsMember({"json", "markdown"}));
        cmd->add_option("--alpha-digits", job.alpha_digits, "decimal digits for alpha")
            ->check(CLI::Range(1, 64));
        cmd->add_option("--root-select", root_select,
                        "override the selected real root > 1 (index, increasing order)");
    };

    auto* compute = app.add_subcommand("compute", "twisted cohomology dimensions");
    add_common(compute, true);
    compute->add_flag("--audit", job.audit, "include the gamma block matrices");
    compute->add_flag("--oracle", job.oracle, "cross-check against the cellular oracle");

    auto* novikov = app.add_subcommand("novikov", "Novikov Betti numbers and torsion");
    add_common(novikov, true);

    auto* oracle = app.add_subcommand("oracle", "cellular-oracle cross-check");
    add_common(oracle, true);

    auto* verify = app.add_subcommand("verify-lcs", "symbolic Tricerri LCS identity battery");
    verify->add_option("--format", job.format, "output format: json|markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    auto* batch = app.add_subcommand("batch", "run independent jobs from a JSON file");
    batch->add_option("file", batch_path, "JSON array of job objects")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (batch->parsed()) return run_batch(batch_path);
        job.command = app.get_subcommands().front()->get_name();
        if (root_select >= 0) job.root_select = root_select;
        job.twist = parse_twist(twist_arg);
        if (job.command != "verify-lcs") job.matrix = parse_matrix(matrix_arg);
        emit(job, run_job(job));
        return 0;
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const mnk::NotUnimodular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const mnk::ModeUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariantViolation;
    }
}
