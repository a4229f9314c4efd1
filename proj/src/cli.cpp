#include "subsum/cli.hpp"

#include "subsum/error.hpp"
#include "subsum/oracle.hpp"
#include "subsum/render.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace subsum {

namespace {

struct Common {
    std::string seq;
    std::string format = "json";
    std::string out_path;
    std::uint64_t depth = 0;
    std::size_t cap = 0;
};

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

void emit(std::ostream& out, const Common& c, const std::string& text) {
    if (c.out_path.empty()) {
        out << text;
    } else {
        write_file(c.out_path, text);
    }
}

Json integer_json(const Integer& v) {
    if (v.fits_ulong_p()) return v.get_ui();
    return to_string(v);
}

Json component_count_json(std::size_t outer, std::size_t inner) {
    if (outer == inner) return outer;
    return Json::array({std::min(outer, inner), std::max(outer, inner)});
}

std::string text_verdict(const Verdict& v) {
    std::ostringstream s;
    const Json j = verdict_json(v);
    for (const auto& [key, value] : j.items()) {
        s << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return s.str();
}

int cmd_classify(const Common& c, std::uint64_t horizon, std::ostream& out) {
    ClassifyOptions opts;
    opts.cap = c.cap;
    opts.horizon = horizon;
    const Verdict v = classify(load_spec(c.seq), opts);
    emit(out, c, c.format == "json" ? verdict_json(v).dump(2) + "\n" : text_verdict(v));
    return kExitOk;
}

int cmd_cn(const Common& c, std::ostream& out) {
    const SequenceSpec spec = single_positive(load_spec(c.seq));
    const CnResult cn = build_cn(spec, c.depth, c.cap);
    if (c.format == "json") {
        Json j = cn_summary_json(cn);
        j["intervals"] = intervals_json(cn.fattened);
        if (cn.inner) j["inner_intervals"] = intervals_json(*cn.inner);
        emit(out, c, j.dump(2) + "\n");
    } else {
        emit(out, c, to_text(cn.fattened) + "# " + cn_summary_json(cn).dump() + "\n");
    }
    return kExitOk;
}

int cmd_oracle(const Common& c, const std::string& probe, std::ostream& out) {
    const SequenceSpec spec = single_positive(load_spec(c.seq));
    const IntervalUnion truth = oracle_cn(spec, c.depth);
    const CnResult cn = build_cn(spec, c.depth, c.cap);
    const bool agree = truth == cn.fattened;
    Json j{{"depth", c.depth}, {"components", truth.components()}, {"agree", agree}};
    std::optional<ProbeResult> pr;
    if (!probe.empty()) {
        pr = membership_probe(spec, parse_rational(probe), c.depth);
        j["probe"] = {{"x", probe},
                      {"result", pr->included() ? "InAllTestedCn" : "ExcludedAtDepth"},
                      {"depth", pr->included() ? Json(nullptr) : Json(*pr->excluded_at)}};
    }
    if (c.format == "json") {
        j["intervals"] = intervals_json(truth);
        if (!agree) j["diff"] = {{"oracle", intervals_json(truth)}, {"cn_engine", intervals_json(cn.fattened)}};
        emit(out, c, j.dump(2) + "\n");
    } else {
        std::string text = to_text(truth) + "# " + j.dump() + "\n";
        if (!agree) text += "DIFF\n# oracle\n" + to_text(truth) + "# cn_engine\n" + to_text(cn.fattened);
        emit(out, c, text);
    }
    return agree ? kExitOk : kExitOracleDiff;
}

int cmd_fill(const Common& c, const std::string& target, const std::string& eps, std::uint64_t rounds,
             std::ostream& out, std::ostream& err) {
    const SequenceSpec spec = single_positive(load_spec(c.seq));
    const FillResult f = fill(spec, parse_rational(target), parse_rational(eps), rounds);
    if (c.format == "json") {
        emit(out, c, fill_json(f).dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "runs:";
        for (const auto& r : f.runs) s << ' ' << r.start << ".." << r.end;
        s << "\ngaps:";
        for (const auto& g : f.gaps) s << ' ' << to_string(g);
        s << "\nachieved: " << to_string(f.achieved) << "\ntarget: " << to_string(f.target) << '\n';
        emit(out, c, s.str());
    }
    if (f.round_limit_hit) {
        err << "RoundLimit: stopped after " << f.runs.size() << " rounds before reaching eps\n";
        return kExitComputation;
    }
    return kExitOk;
}

int cmd_sweep(std::uint64_t steps, const std::string& csv, const std::string& svg, unsigned threads,
              std::ostream& out) {
    SweepOptions opts;
    opts.alpha_steps = opts.beta_steps = steps;
    opts.threads = threads;
    const SweepGrid grid = sweep(opts);
    const std::string table = sweep_csv(grid);
    if (csv.empty()) {
        out << table;
    } else {
        write_file(csv, table);
    }
    if (!svg.empty()) write_file(svg, sweep_svg(grid));
    return kExitOk;
}

int cmd_render(const Common& c, unsigned width, unsigned height, std::ostream& out) {
    const SequenceSpec spec = single_positive(load_spec(c.seq));
    emit(out, c, bar_chart(build_cn(spec, c.depth, c.cap).fattened, width, height));
    return kExitOk;
}

int cmd_presets(const Common& c, std::ostream& out) {
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& p : presets()) {
        Json terms = Json::array();
        const SequenceSpec seq = as_sequence(p.spec);
        for (const auto& t : first_terms(seq, 6)) terms.push_back(rational_json(t));
        list.push_back({{"name", p.name}, {"description", p.description}, {"spec", to_json(p.spec)}, {"first_terms", terms}});
        text << p.name << '\t' << p.description << '\t';
        for (std::size_t i = 0; i < terms.size(); ++i) text << (i ? ", " : "") << terms[i].get<std::string>();
        text << '\n';
    }
    emit(out, c, c.format == "json" ? list.dump(2) + "\n" : text.str());
    return kExitOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidSpec:
        case ErrorCode::UnsupportedExponent:
        case ErrorCode::WrongKind:
        case ErrorCode::NotDivergent:
        case ErrorCode::DivergentTail:
        case ErrorCode::IoError:
            return kExitUsage;
        default:
            return kExitComputation;
    }
}

}  // namespace

std::size_t default_cap() {
    if (const char* env = std::getenv("SUBSUM_CAP")) {
        try {
            const unsigned long long v = std::stoull(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return kDefaultEndpointCap;
}

Json enclosure_json(const TailEnclosure& e) {
    if (e.divergent) return "inf";
    if (e.exact) return rational_json(e.lo);
    return Json{{"lo", rational_json(e.lo)}, {"hi", rational_json(e.hi)}};
}

Json intervals_json(const IntervalUnion& u) {
    Json arr = Json::array();
    for (const auto& c : u.intervals()) arr.push_back(Json::array({rational_json(c.left), rational_json(c.right)}));
    return arr;
}

IntervalUnion intervals_from_json(const Json& j) {
    std::vector<ClosedInterval> raw;
    for (const auto& pair : j) raw.push_back({json_rational(pair.at(0)), json_rational(pair.at(1))});
    return normalize(std::move(raw));
}

Json cn_summary_json(const CnResult& cn) {
    const auto [outer, inner] = cn.component_range();
    Json j{{"depth", cn.depth},
           {"components", component_count_json(outer, inner)},
           {"total_length", rational_json(total_length(cn.fattened))},
           {"tail", enclosure_json(cn.tail_used)},
           {"tail_exact", cn.tail_used.exact}};
    if (!cn.fattened.empty()) {
        const ClosedInterval h = hull(cn.fattened);
        j["hull"] = Json::array({rational_json(h.left), rational_json(h.right)});
    }
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["kind"] = verdict_name(v.kind);
    j["certificate"] = certificate_name(v.certificate);
    j["strength"] = v.strength ? Json(strength_name(*v.strength)) : Json(nullptr);
    j["hull"] = Json::array({v.hull_lo ? enclosure_json(*v.hull_lo) : Json("-inf"),
                             v.hull_hi ? enclosure_json(*v.hull_hi) : Json("inf")});
    if (v.kind == VerdictKind::FiniteUnion) {
        j["component_bounds"] = Json::array({v.component_lower ? integer_json(*v.component_lower) : Json(nullptr),
                                             v.component_upper ? integer_json(*v.component_upper) : Json(nullptr)});
    } else {
        j["component_bounds"] = Json::array({v.kind == VerdictKind::WholeLine || v.kind == VerdictKind::UnboundedInterval
                                                 ? Json(1)
                                                 : Json(nullptr),
                                             nullptr});
    }
    j["exact_count"] = v.exact_count ? Json(*v.exact_count) : Json(nullptr);
    j["translation"] = enclosure_json(v.translation);
    j["lambda"] = v.lambda ? rational_json(*v.lambda) : Json(nullptr);
    Json prefix = Json::array();
    if (v.profile) {
        const auto& comps = v.profile->comparisons;
        for (std::size_t i = 0; i < comps.size() && i < 16; ++i) prefix.push_back(comparison_name(comps[i]));
        if (v.profile->eventual) {
            j["eventual"] = eventual_name(v.profile->eventual->kind);
            j["proof"] = proof_tag_name(v.profile->eventual->proof);
        }
        if (v.profile->pseries) {
            j["pseries_thresholds"] = {{"K", v.profile->pseries->k_exceed}, {"N", v.profile->pseries->n_bound}};
        }
    }
    j["profile_prefix"] = prefix;
    if (v.coverage) {
        Json nums = Json::array();
        for (const auto& p : v.coverage->numerators) nums.push_back(integer_json(p));
        Json reps = Json::array();
        for (const auto& r : v.coverage->representatives) reps.push_back(integer_json(r));
        j["coverage"] = {{"base", v.coverage->base},
                         {"numerators", nums},
                         {"digit_residues", v.coverage->digit_residues},
                         {"representatives", reps},
                         {"injectivity_depth", v.coverage->injectivity_depth}};
    }
    return j;
}

Json fill_json(const FillResult& f) {
    Json runs = Json::array();
    for (const auto& r : f.runs) runs.push_back(Json::array({r.start, r.end}));
    Json gaps = Json::array();
    for (const auto& g : f.gaps) gaps.push_back(rational_json(g));
    return Json{{"runs", runs},
                {"gaps", gaps},
                {"achieved", rational_json(f.achieved)},
                {"target", rational_json(f.target)},
                {"round_limit_hit", f.round_limit_hit}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subsum sets of null sequences: C_n construction, classification, greedy fill, sweeps"};
    app.name("subsum");
    app.require_subcommand(1);

    Common c;
    c.cap = default_cap();
    std::uint64_t horizon = 64;
    std::string probe;
    std::string target;
    std::string eps = "1/1000000";
    std::uint64_t rounds = 256;
    std::uint64_t steps = 21;
    std::string csv;
    std::string svg;
    unsigned threads = 0;
    unsigned width = 1000;
    unsigned height = 120;

    auto seq_opt = [&](CLI::App* cmd) { cmd->add_option("--seq", c.seq, "preset name, JSON file or inline JSON")->required(); };
    auto cap_opt = [&](CLI::App* cmd) { cmd->add_option("--cap", c.cap, "maximum number of C_n endpoints"); };
    auto out_opt = [&](CLI::App* cmd) { cmd->add_option("--out", c.out_path, "write output to this file"); };

    auto* classify_cmd = app.add_subcommand("classify", "decide the topological type of the subsum set");
    seq_opt(classify_cmd);
    cap_opt(classify_cmd);
    out_opt(classify_cmd);
    add_format(classify_cmd, c);
    classify_cmd->add_option("--horizon", horizon, "term/tail comparisons to report");

    auto* cn_cmd = app.add_subcommand("cn", "build C_n");
    seq_opt(cn_cmd);
    cn_cmd->add_option("--depth", c.depth, "n")->required();
    cap_opt(cn_cmd);
    out_opt(cn_cmd);
    add_format(cn_cmd, c);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force C_n and compare with the engine");
    seq_opt(oracle_cmd);
    oracle_cmd->add_option("--depth", c.depth, "n (at most 20)")->required();
    oracle_cmd->add_option("--probe", probe, "test membership of this rational");
    cap_opt(oracle_cmd);
    out_opt(oracle_cmd);
    add_format(oracle_cmd, c);

    auto* fill_cmd = app.add_subcommand("fill", "greedy subsequence summing to a target");
    seq_opt(fill_cmd);
    fill_cmd->add_option("--target", target, "r > 0")->required();
    fill_cmd->add_option("--eps", eps, "stop once the gap is below eps");
    fill_cmd->add_option("--max-rounds", rounds, "round limit");
    out_opt(fill_cmd);
    add_format(fill_cmd, c);

    auto* sweep_cmd = app.add_subcommand("sweep", "bi-geometric (alpha, beta) parameter map");
    sweep_cmd->add_option("--steps", steps, "grid resolution per axis")->check(CLI::Range(2, 1000));
    sweep_cmd->add_option("--csv", csv, "CSV output path (stdout if omitted)");
    sweep_cmd->add_option("--svg", svg, "SVG output path");
    sweep_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* render_cmd = app.add_subcommand("render", "SVG bar graph of C_n");
    seq_opt(render_cmd);
    render_cmd->add_option("--depth", c.depth, "n")->required();
    render_cmd->add_option("--width", width, "pixels");
    render_cmd->add_option("--height", height, "pixels");
    cap_opt(render_cmd);
    out_opt(render_cmd);

    auto* presets_cmd = app.add_subcommand("presets", "list named sequences");
    out_opt(presets_cmd);
    add_format(presets_cmd, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(c, horizon, out);
        if (cn_cmd->parsed()) return cmd_cn(c, out);
        if (oracle_cmd->parsed()) return cmd_oracle(c, probe, out);
        if (fill_cmd->parsed()) return cmd_fill(c, target, eps, rounds, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(steps, csv, svg, threads, out);
        if (render_cmd->parsed()) return cmd_render(c, width, height, out);
        if (presets_cmd->parsed()) return cmd_presets(c, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "InvariantViolation: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitUsage;
}

}  // namespace subsum
