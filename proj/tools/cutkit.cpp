// cutkit: batch front-end over job files.
//
//   cutkit classify|compare|realize|oracle <file> [--json] [--seed N] [--count N]
//
// Exit status: 0 success, 1 oracle violations, 2 parse or validation error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutkit/json.hpp"

#ifndef CUTKIT_DEFAULT_FIXTURES
#define CUTKIT_DEFAULT_FIXTURES "fixtures"
#endif

namespace fs = std::filesystem;
using namespace cutkit;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string file;
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> count;
};

JobFile load_job(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_job(buf.str());
}

std::string job_label(const JobFile& job, const fs::path& path) {
    return job.name.empty() ? path.filename().string() : job.name;
}

std::string describe(const InitialSegment& s, const IndexSet& space) {
    if (s.is_full(space)) return "I";
    if (s.is_empty()) return "{}";
    if (s.within() == Within::Empty) return "atoms 1.." + std::to_string(s.cut_atom() - 1);
    std::string head = s.cut_atom() > 1 ? "atoms 1.." + std::to_string(s.cut_atom() - 1) + " + " : "";
    const char* rel = space.atom(s.cut_atom()).reversed() ? ">=" : "<=";
    return head + "atom " + std::to_string(s.cut_atom()) + " labels " + rel + " " + std::to_string(s.bound());
}

std::string describe(const Index& i) { return "(" + std::to_string(i.atom) + "," + std::to_string(i.inner) + ")"; }

std::string describe(const RealVector& x) {
    std::string out;
    auto put = [&](const std::string& piece) { out += (out.empty() ? "" : " + ") + piece; };
    for (const Term& t : x.finite()) put(t.second.str() + "@" + describe(t.first));
    if (x.tail()) put(to_string(x.tail()->value) + "@" + describe(x.tail()->from) + "...");
    if (x.added()) put(x.added()->value.str() + "@i_S[S=" + describe(x.added()->segment, x.space()) + "]");
    return out.empty() ? "0" : out;
}

std::string describe(const QuasiCutPoint& p) {
    if (p.is_interior()) return describe(p.as_interior());
    const CutDescriptor& d = p.as_cut();
    if (d.is_ball()) {
        const BallCut& b = d.as_ball();
        return "(" + describe(b.center) + " + H_S)^" + to_string(b.side) + " S=" + describe(b.segment, d.space());
    }
    return "cut of " + describe(d.as_nonball().realization);
}

std::string describe(const CardinalReport& c) { return std::string(to_string(c.symbolic)) + " = " + to_string(c.value); }

const CutDescriptor& require_cut(const QuasiCutPoint& p, std::size_t k) {
    if (p.is_interior()) throw validation_error("items[" + std::to_string(k) + "]: expected a cut, got an interior point");
    return p.as_cut();
}

int cmd_classify(const Options& opt) {
    JobFile job = load_job(opt.file);
    const CovarianceTable& table = job.covariance_table ? *job.covariance_table : kCovarianceTable;
    Json reports = Json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < job.items.size(); ++k) {
        const CutDescriptor& d = require_cut(job.items[k], k);
        ClassificationReport r = classify(d, table);
        reports.push_back(to_json(r, job.group));
        auto row = [&](const std::string& key, const std::string& value) {
            text << "  " << std::left << std::setw(16) << key << value << "\n";
        };
        text << "[" << k << "] " << describe(job.items[k]) << "\n";
        row("type", to_string(r.type6));
        row("subtype", r.subtype ? r.subtype->str() : "-");
        row("H(D)", "H_S, S = " + describe(r.invariance, job.group));
        row("H'", "H_S, S = " + describe(r.h_prime, job.group));
        row("V_f", "H_S, S = " + describe(r.vf, job.group) + (r.vf_stable ? " (stable)" : " (unstable)"));
        row("V_i", "H_S, S = " + describe(r.vi, job.group) + (r.vi_stable ? " (stable)" : " (unstable)"));
        row("kappa", describe(r.kappa));
        row("lambda", describe(r.lambda));
        row("rank increases", r.rank_increases ? "yes" : "no");
    }
    if (opt.json) std::cout << Json{{"group", to_json(job.group)}, {"reports", reports}}.dump(2) << "\n";
    else std::cout << text.str();
    return 0;
}

int cmd_compare(const Options& opt) {
    JobFile job = load_job(opt.file);
    const std::size_t n = job.items.size();
    if (n < 2) throw validation_error("compare needs at least two items");
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto c = qcut_compare(job.items[a], job.items[b]);
            m[a][b] = c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (m[a][b] != -m[b][a])
                throw std::logic_error("comparison is not antisymmetric on items " + std::to_string(a) + ", " +
                                       std::to_string(b));
    auto sym = [](int c) { return c < 0 ? "<" : (c > 0 ? ">" : "="); };
    if (opt.json) {
        Json rows = Json::array();
        for (auto& row : m) {
            Json r = Json::array();
            for (int c : row) r.push_back(sym(c));
            rows.push_back(r);
        }
        std::cout << Json{{"matrix", rows}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t a = 0; a < n; ++a) std::cout << "[" << a << "] " << describe(job.items[a]) << "\n";
    std::cout << "\n     ";
    for (std::size_t b = 0; b < n; ++b) std::cout << std::setw(4) << b;
    std::cout << "\n";
    for (std::size_t a = 0; a < n; ++a) {
        std::cout << std::setw(5) << a;
        for (std::size_t b = 0; b < n; ++b) std::cout << std::setw(4) << sym(m[a][b]);
        std::cout << "\n";
    }
    return 0;
}

int cmd_realize(const Options& opt) {
    JobFile job = load_job(opt.file);
    Json out = Json::array();
    for (std::size_t k = 0; k < job.items.size(); ++k) {
        RealVector x = job.items[k].realization();
        if (opt.json) out.push_back(to_json(x));
        else std::cout << "[" << k << "] " << describe(job.items[k]) << "\n      realized by " << describe(x) << "\n";
    }
    if (opt.json) std::cout << out.dump(2) << "\n";
    return 0;
}

SampleConfig config_for(const JobFile& job, const Options& opt) {
    SampleConfig cfg;
    cfg.max_denominator = job.params.max_denominator.value_or(8);
    cfg.max_support = job.params.max_support.value_or(4);
    cfg.max_label = job.params.max_label.value_or(6);
    cfg.count = opt.count.value_or(job.params.count.value_or(200));
    cfg.seed = opt.seed.value_or(job.params.seed.value_or(1));
    cfg.validate();
    return cfg;
}

std::vector<fs::path> fixture_files() {
    const char* env = std::getenv("CUTKIT_FIXTURES");
    fs::path dir = env && *env ? fs::path(env) : fs::path(CUTKIT_DEFAULT_FIXTURES);
    if (!fs::is_directory(dir)) throw parse_error("fixture directory " + dir.string() + " not found");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

int cmd_oracle(const Options& opt) {
    std::vector<fs::path> files = opt.file.empty() ? fixture_files() : std::vector<fs::path>{opt.file};
    OracleReport total;
    total.seed = opt.seed.value_or(1);
    std::ostringstream text;
    for (const fs::path& path : files) {
        JobFile job = load_job(path);
        SampleConfig cfg = config_for(job, opt);
        const CovarianceTable& table = job.covariance_table ? *job.covariance_table : kCovarianceTable;
        std::string label = job_label(job, path);
        for (std::size_t k = 0; k < job.items.size(); ++k) {
            if (job.items[k].is_interior()) continue;
            const CutDescriptor& d = job.items[k].as_cut();
            OracleReport r = check_cut(d, classify(d, table), cfg);
            text << std::left << std::setw(28) << (label + "[" + std::to_string(k) + "]") << std::setw(9)
                 << to_string(cut_type(d)) << std::right << std::setw(6) << r.checked << " checks  "
                 << (r.ok() ? "ok" : std::to_string(r.violations.size()) + " violations") << "\n";
            for (Violation& v : r.violations) v.check = label + "[" + std::to_string(k) + "] " + v.check;
            r.seed = total.seed;
            total.merge(std::move(r));
        }
    }
    if (opt.json) {
        std::cout << to_json(total).dump(2) << "\n";
    } else {
        std::cout << text.str();
        for (const Violation& v : total.violations) std::cout << "VIOLATION " << v.check << ": " << v.detail << "\n";
        std::cout << total.checked << " checks, " << total.violations.size() << " violations, seed " << total.seed
                  << "\n";
    }
    return total.ok() ? 0 : kExitViolations;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cuts, small extensions and quasi-cuts of Hahn sums over Q"};
    app.require_subcommand(1);
    Options opt;
    auto add = [&](const std::string& name, const std::string& help, bool file_optional) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto* f = sub->add_option("file", opt.file, "job file (JSON)");
        if (!file_optional) f->required();
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--seed", opt.seed, "sampling seed");
        sub->add_option("--count", opt.count, "sample count")->check(CLI::PositiveNumber);
        return sub;
    };
    CLI::App* classify_cmd = add("classify", "classify every cut in the job", false);
    CLI::App* compare_cmd = add("compare", "pairwise order of the job's items", false);
    CLI::App* realize_cmd = add("realize", "realizations in the extended lexicographic space", false);
    CLI::App* oracle_cmd = add("oracle", "definitional checks (all fixtures when no file is given)", true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(opt);
        if (compare_cmd->parsed()) return cmd_compare(opt);
        if (realize_cmd->parsed()) return cmd_realize(opt);
        if (oracle_cmd->parsed()) return cmd_oracle(opt);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInput;
    } catch (const precondition_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
