#include "resolvedim/cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resolvedim/enumeration.hpp"
#include "resolvedim/errors.hpp"
#include "resolvedim/families.hpp"
#include "resolvedim/graph_io.hpp"
#include "resolvedim/json_out.hpp"
#include "resolvedim/threading.hpp"

namespace resolvedim {

namespace {

struct CommonOpts {
    int threads = 0;
    uint64_t seed = 0;
    int cap_dimplus = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--threads", threads,
                        "Worker count for subset searches and enumeration sharding "
                        "(default: RESOLVEDIM_THREADS or 1)");
        cmd->add_option("--seed", seed, "Seed for randomized sampling (reserved)");
        cmd->add_option("--cap-dimplus", cap_dimplus, "Override the exact dim+ search cap");
    }

    SearchCaps caps() const {
        SearchCaps caps;
        if (cap_dimplus > 0)
            caps.dim_plus_max_n = cap_dimplus;
        return caps;
    }

    int worker_count() const { return resolve_thread_count(threads); }
};

struct FamilyOpts {
    std::string family;
    std::string base;
    int l = 0;
    int m = 0;
    int p = 0;

    void attach(CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--family", family,
                                    "Family name: grid, H, Hm, tildeH, tildeHm, path-extended, "
                                    "cycle, path, complete");
        if (required)
            opt->required();
        cmd->add_option("--l", l, "Grid side (vertex count for cycle/path/complete)");
        cmd->add_option("--m", m, "Pendant count for Hm/tildeHm");
        cmd->add_option("--p", p, "Path-extension length");
        cmd->add_option("--base", base, "Base family for path-extended");
    }

    bool given() const { return !family.empty(); }

    FamilySpec build() const {
        auto kind = family_kind_from_name(family);
        if (!kind)
            throw InvalidSpecError("unknown family '" + family + "'");
        if (*kind == FamilyKind::PathExtended) {
            if (base.empty())
                throw InvalidSpecError("path-extended requires --base");
            auto base_kind = family_kind_from_name(base);
            if (!base_kind || *base_kind == FamilyKind::PathExtended)
                throw InvalidSpecError("invalid path-extended base '" + base + "'");
            FamilySpec base_spec{*base_kind, l, m, 0, nullptr};
            FamilySpec spec = FamilySpec::path_extended(std::move(base_spec), p);
            spec.validate();
            return spec;
        }
        FamilySpec spec{*kind, l, m, p, nullptr};
        spec.validate();
        return spec;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph(const std::string& path, std::string format) {
    if (format.empty() || format == "auto") {
        if (path.ends_with(".g6") || path.ends_with(".graph6"))
            format = "graph6";
        else
            format = "edgelist";
    }
    const std::string text = read_file(path);
    if (format == "graph6") {
        // One graph per invocation; reject multi-line payloads.
        std::istringstream lines(text);
        std::string line, found;
        while (std::getline(lines, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            if (!found.empty())
                throw Error("input file '" + path + "' holds more than one graph6 line");
            found = line;
        }
        if (found.empty())
            throw Error("input file '" + path + "' holds no graph6 line");
        return parse_graph6(found);
    }
    if (format == "edgelist")
        return parse_edge_list_text(text);
    throw Error("unknown format '" + format + "'");
}

ReportSelection parse_params(const std::string& list) {
    ReportSelection sel{false, false, false};
    std::stringstream in(list);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token == "dim")
            sel.dim = true;
        else if (token == "dim+" || token == "dimplus" || token == "dim_plus")
            sel.dim_plus = true;
        else if (token == "res")
            sel.res = true;
        else
            throw Error("unknown parameter '" + token + "' (expected dim, dim+, res)");
    }
    return sel;
}

std::string format_set(const std::vector<int>& set) {
    std::string out = "{";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(set[i]);
    }
    return out + "}";
}

void print_report_text(std::ostream& out, const ResolvingReport& report,
                       const GridLabeling* labeling) {
    out << "n: " << report.n << "\n";
    if (report.dim)
        out << "dim: " << *report.dim << "  metric_basis: " << format_set(*report.metric_basis)
            << "\n";
    if (report.dim_plus)
        out << "dim_plus: " << *report.dim_plus
            << "  upper_basis: " << format_set(*report.upper_basis) << "\n";
    if (report.res)
        out << "res: " << *report.res << "  res_witness: {" << report.res_witness->x << ", "
            << report.res_witness->y << "}\n";
    if (report.dim && report.res)
        out << "randomly_k: "
            << (report.randomly_k ? std::to_string(*report.randomly_k) : std::string("-")) << "\n";
    if (labeling) {
        out << "labels:";
        for (int v = 0; v < labeling->size(); ++v)
            out << " " << v << "=" << labeling->label(v).to_string();
        out << "\n";
    }
}

int print_verification(std::ostream& out, const VerificationReport& report, bool json) {
    if (json) {
        out << verification_to_json(report).dump(2) << "\n";
    } else {
        out << "suite " << report.suite << " [" << report.range << "]: examined=" << report.examined
            << " skipped=" << report.skipped << " violations=" << report.violations.size() << " ("
            << report.elapsed.count() << " ms)\n";
        for (const auto& [key, value] : report.info)
            out << "  " << key << " = " << value << "\n";
        for (const auto& v : report.violations)
            out << "VIOLATION " << v.graph6 << " " << v.detail << "\n";
        out << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return report.passed() ? 0 : 1;
}

int cmd_compute(const std::string& input, const std::string& format, const FamilyOpts& family,
                const std::string& params, bool json, const CommonOpts& common, std::ostream& out) {
    if (family.given() == !input.empty())
        throw Error("compute needs exactly one of --input or --family");
    std::optional<FamilySpec> spec;
    std::optional<GridLabeling> labeling;
    Graph g = Graph::from_edge_list(1, {});
    if (family.given()) {
        spec = family.build();
        auto generated = generate(*spec);
        g = std::move(generated.first);
        labeling = std::move(generated.second);
    } else {
        g = load_graph(input, format);
    }
    const ReportSelection sel = parse_params(params);
    const ResolvingReport report = compute_report(g, sel, common.caps(), common.worker_count());
    const GridLabeling* lab_ptr = labeling ? &*labeling : nullptr;
    if (json) {
        nlohmann::json j = report_to_json(report, lab_ptr);
        if (spec) {
            j["family"] = spec->describe();
            try {
                const PredictedParameters predicted = predicted_parameters(*spec);
                j["predicted"] = {{"dim", predicted.dim},
                                  {"dim_plus", predicted.dim_plus},
                                  {"source", predicted.oracle_backed ? "solver-backed" : "formula"}};
            } catch (const InvalidSpecError&) {
                j["predicted"] = nullptr;
            }
        }
        out << j.dump(2) << "\n";
    } else {
        if (spec)
            out << "family: " << spec->describe() << "\n";
        print_report_text(out, report, lab_ptr);
    }
    return 0;
}

int cmd_generate(const FamilyOpts& family, const std::string& format, const std::string& output,
                 bool json, std::ostream& out) {
    const FamilySpec spec = family.build();
    auto [g, labeling] = generate(spec);
    const std::string body = format == "edgelist" ? to_edge_list_text(g) : to_graph6(g) + "\n";
    if (!output.empty()) {
        std::ofstream file(output, std::ios::binary);
        if (!file)
            throw Error("cannot open output file '" + output + "'");
        file << body;
        std::ofstream sidecar(output + ".labels.json", std::ios::binary);
        if (!sidecar)
            throw Error("cannot open sidecar file '" + output + ".labels.json'");
        sidecar << labels_to_json(labeling).dump(2) << "\n";
        return 0;
    }
    if (json) {
        nlohmann::json j;
        j["family"] = spec.describe();
        j["format"] = format;
        j["graph"] = format == "edgelist" ? body : to_graph6(g);
        j["labels"] = labels_to_json(labeling);
        out << j.dump(2) << "\n";
    } else {
        out << body;
    }
    return 0;
}

int cmd_verify(const std::string& suite, int nmax, const std::string& corpus,
               const FamilyRanges& ranges, bool json, const CommonOpts& common, std::ostream& out) {
    std::ifstream corpus_file;
    EnumOptions opts;
    opts.threads = common.worker_count();
    if (!corpus.empty()) {
        corpus_file.open(corpus);
        if (!corpus_file)
            throw Error("cannot open corpus file '" + corpus + "'");
        opts.corpus = &corpus_file;
        opts.corpus_name = corpus;
    }
    std::string key;
    for (char c : suite)
        if (c != '-' && c != '_')
            key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    VerificationReport report;
    if (key == "characterization")
        report = verify_characterization(nmax, opts);
    else if (key == "diameterbound")
        report = verify_diameter_bound(nmax, opts);
    else if (key == "orderbound")
        report = verify_order_bound(nmax, opts);
    else if (key == "familyformulas")
        report = verify_family_formulas(ranges, common.caps(), common.worker_count());
    else
        throw Error("unknown suite '" + suite +
                    "' (expected characterization, diameter-bound, order-bound, family-formulas)");
    return print_verification(out, report, json);
}

int cmd_enumerate(int n, bool dedup, std::ostream& out) {
    for_each_connected_graph(n, dedup, [&](const Graph& g) { out << to_graph6(g) << "\n"; });
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver for metric dimension, upper dimension and resolving number"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute resolving parameters of one graph");
    std::string input, format = "auto", params = "dim,dim+,res";
    bool compute_json = false;
    FamilyOpts compute_family;
    CommonOpts compute_common;
    compute->add_option("--input", input, "Graph file");
    compute->add_option("--format", format, "graph6 | edgelist | auto");
    compute_family.attach(compute, /*required=*/false);
    compute->add_option("--params", params, "Comma list of parameters: dim, dim+, res");
    compute->add_flag("--json", compute_json, "Emit JSON");
    compute_common.attach(compute);

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a family graph plus label sidecar");
    std::string gen_format = "graph6", gen_output;
    bool gen_json = false;
    FamilyOpts gen_family;
    gen_family.attach(gen, /*required=*/true);
    gen->add_option("--format", gen_format, "graph6 | edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_option("--output", gen_output, "Write graph here and labels to <output>.labels.json");
    gen->add_flag("--json", gen_json, "Emit one JSON object with graph and labels");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite, corpus;
    int nmax = 6;
    bool verify_json = false;
    FamilyRanges ranges;
    CommonOpts verify_common;
    verify->add_option("--suite", suite, "characterization | diameter-bound | order-bound | family-formulas")
        ->required();
    verify->add_option("--nmax", nmax, "Largest vertex count for enumeration suites");
    verify->add_option("--corpus", corpus, "Newline-delimited graph6 file replacing enumeration");
    verify->add_option("--lmin", ranges.l_min, "family-formulas: smallest grid side");
    verify->add_option("--lmax", ranges.l_max, "family-formulas: largest grid side");
    verify->add_option("--mmin", ranges.m_min, "family-formulas: smallest pendant count");
    verify->add_option("--mmax", ranges.m_max, "family-formulas: largest pendant count");
    verify->add_option("--pmin", ranges.p_min, "family-formulas: smallest path extension");
    verify->add_option("--pmax", ranges.p_max, "family-formulas: largest path extension");
    verify->add_flag("--json", verify_json, "Emit JSON");
    verify_common.attach(verify);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Stream connected graphs as graph6 lines");
    int enum_n = 0;
    bool dedup = false;
    enumerate->add_option("--n", enum_n, "Vertex count (<= 8)")->required();
    enumerate->add_flag("--dedup", dedup, "One representative per isomorphism class");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed())
            return cmd_compute(input, format, compute_family, params, compute_json, compute_common,
                               out);
        if (gen->parsed())
            return cmd_generate(gen_family, gen_format, gen_output, gen_json, out);
        if (verify->parsed())
            return cmd_verify(suite, nmax, corpus, ranges, verify_json, verify_common, out);
        if (enumerate->parsed())
            return cmd_enumerate(enum_n, dedup, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace resolvedim
