#include "plim/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "plim/certify.hpp"
#include "plim/error.hpp"
#include "plim/io.hpp"

namespace plim::cli {

namespace {

// Flags accept canonical `p/q` or a bare non-negative integer.
Rational parse_flag_rational(const std::string& text) {
    if (auto r = parse_canonical_rational(text)) {
        return *r;
    }
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos &&
        (text.size() == 1 || text.front() != '0')) {
        return Rational(mpz_class(text, 10));
    }
    throw Error(ErrorCode::parse_error, "not a canonical rational: '" + text + "'");
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.out) {
        write_file(*config.out, text);
    } else {
        out << text;
    }
}

void require_inputs(const RunConfig& config, std::size_t n) {
    if (config.inputs.size() != n) {
        throw Error(ErrorCode::precondition,
                    "expected " + std::to_string(n) + " input files, got " + std::to_string(config.inputs.size()));
    }
}

std::vector<std::size_t> depth_range(std::size_t depth) {
    std::vector<std::size_t> depths(depth);
    for (std::size_t d = 0; d < depth; ++d) {
        depths[d] = d + 1;
    }
    return depths;
}

PLMap budgeted_compose(const PLMap& outer, const PLMap& inner, std::size_t budget) {
    PLMap m = compose(outer, inner);
    if (m.breakpoints().size() > budget) {
        throw Error(ErrorCode::budget_exceeded, "composition has " + std::to_string(m.breakpoints().size()) +
                                                    " breakpoints, budget " + std::to_string(budget));
    }
    return m;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.subcommand) {
    case Subcommand::eval: {
        require_inputs(config, 1);
        if (!config.point) {
            throw Error(ErrorCode::precondition, "eval needs a point");
        }
        emit(config, out, to_string(parse_plmap_file(config.inputs[0])(*config.point)) + "\n");
        return exit_ok;
    }
    case Subcommand::compose: {
        require_inputs(config, 2);
        PLMap m = budgeted_compose(parse_plmap_file(config.inputs[0]), parse_plmap_file(config.inputs[1]),
                                   config.breakpoint_budget);
        emit(config, out, emit_plmap(m));
        return exit_ok;
    }
    case Subcommand::fix: {
        require_inputs(config, 1);
        emit(config, out, to_string(fixed_points(parse_plmap_file(config.inputs[0]))) + "\n");
        return exit_ok;
    }
    case Subcommand::commute: {
        require_inputs(config, 2);
        PLMap f = parse_plmap_file(config.inputs[0]);
        PLMap g = parse_plmap_file(config.inputs[1]);
        budgeted_compose(f, g, config.breakpoint_budget);
        budgeted_compose(g, f, config.breakpoint_budget);
        Distance d = commutator_defect(f, g);
        emit(config, out, "defect " + to_string(d.value) + "\nwitness " + to_string(d.witness) + "\n");
        return sgn(d.value) == 0 ? exit_ok : exit_hypothesis_failure;
    }
    case Subcommand::certify_pair: {
        require_inputs(config, 2);
        PairCertificate c = certify_pair(parse_plmap_file(config.inputs[0]), parse_plmap_file(config.inputs[1]),
                                         depth_range(config.depth), config.breakpoint_budget);
        emit(config, out, serialize(c));
        return c.hypotheses_met ? exit_ok : exit_hypothesis_failure;
    }
    case Subcommand::certify_seq: {
        if (config.inputs.size() < 4 || config.inputs.size() % 2 != 0) {
            throw Error(ErrorCode::precondition, "certify-seq expects f1 g1 f2 g2 ... (at least two stages)");
        }
        std::vector<std::pair<PLMap, PLMap>> stages;
        for (std::size_t i = 0; i < config.inputs.size(); i += 2) {
            stages.emplace_back(parse_plmap_file(config.inputs[i]), parse_plmap_file(config.inputs[i + 1]));
        }
        SequenceReport r = certify_sequence(stages, config.slope_bound);
        emit(config, out, serialize(r));
        bool good = r.verdicts == std::vector{SequenceVerdict::stages_commute_exactly,
                                              SequenceVerdict::separation_bounded_below};
        return good ? exit_ok : exit_hypothesis_failure;
    }
    case Subcommand::threads: {
        require_inputs(config, 1);
        if (!config.root) {
            throw Error(ErrorCode::precondition, "threads needs --root");
        }
        BranchTree tree = backward_branches(parse_plmap_file(config.inputs[0]), *config.root, config.depth,
                                            config.max_branches, config.workers);
        if (tree.truncated) {
            err << "warning: enumeration truncated at " << tree.branches.size() << " threads\n";
        }
        emit(config, out, emit_threads(tree));
        return exit_ok;
    }
    case Subcommand::induce: {
        require_inputs(config, 3);
        PLMap k = parse_plmap_file(config.inputs[0]);
        PLMap h = parse_plmap_file(config.inputs[1]);
        ThreadDump dump = parse_threads_file(config.inputs[2], h);
        auto bonding = dump.threads.empty() ? std::make_shared<const PLMap>(h) : dump.threads.front().shared_bonding();
        InducedMap induced(k, bonding);
        std::vector<Thread> images;
        for (const auto& t : dump.threads) {
            images.push_back(induced(t));
        }
        emit(config, out, emit_threads(images, dump.depth, k(dump.root)));
        return exit_ok;
    }
    case Subcommand::mouron: {
        require_inputs(config, 3);
        PLMap f = parse_plmap_file(config.inputs[0]);
        PLMap g = parse_plmap_file(config.inputs[1]);
        PLMap h = budgeted_compose(f, g, config.breakpoint_budget);
        ThreadDump dump = parse_threads_file(config.inputs[2], h);
        std::size_t passed = 0;
        std::string report;
        for (std::size_t i = 0; i < dump.threads.size(); ++i) {
            if (mouron_check(f, g, dump.threads[i])) {
                ++passed;
            } else {
                report += "fail thread " + std::to_string(i + 1) + "\n";
            }
        }
        report += "mouron " + std::to_string(passed) + "/" + std::to_string(dump.threads.size()) + "\n";
        emit(config, out, report);
        return passed == dump.threads.size() ? exit_ok : exit_hypothesis_failure;
    }
    case Subcommand::plot: {
        require_inputs(config, 1);
        PLMap m = parse_plmap_file(config.inputs[0]);
        SvgOptions options{config.scale, 20};
        if (config.threads_file) {
            ThreadDump dump = parse_threads_file(*config.threads_file, m);
            emit(config, out, svg_plot(dump.threads, options));
        } else {
            emit(config, out, svg_plot(m, options));
        }
        return exit_ok;
    }
    }
    return exit_error;
}

} // namespace

void validate(const RunConfig& config) {
    if (config.depth < 1 || config.max_branches < 1 || config.breakpoint_budget < 1) {
        throw Error(ErrorCode::precondition, "depth and budgets must be >= 1");
    }
    if (sgn(config.slope_bound) <= 0) {
        throw Error(ErrorCode::precondition, "slope bound must be positive");
    }
    if (config.scale < 1) {
        throw Error(ErrorCode::precondition, "scale must be >= 1");
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        return dispatch(config, out, err);
    } catch (const Error& e) {
        err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_error;
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact piecewise-linear interval maps and inverse-limit threads"};
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> inputs;
    std::string point;
    std::string eval_map;
    std::string root;
    std::string slope_bound = "3/1";
    std::string out_path;
    std::string threads_path;

    struct Entry {
        const char* name;
        Subcommand sub;
        const char* help;
    };
    const Entry entries[] = {
        {"eval", Subcommand::eval, "Evaluate MAP at a rational point"},
        {"compose", Subcommand::compose, "Print OUTER∘INNER in plmap v1 format"},
        {"fix", Subcommand::fix, "Print the fixed-point set"},
        {"commute", Subcommand::commute, "Commutator defect ‖f∘g − g∘f‖∞ with witness"},
        {"certify-pair", Subcommand::certify_pair, "Certificate for a map pair at depths 1..--depth"},
        {"certify-seq", Subcommand::certify_seq, "Report for an approximation sequence F1 G1 F2 G2 ..."},
        {"threads", Subcommand::threads, "Enumerate backward threads from --root"},
        {"induce", Subcommand::induce, "Apply the map induced by K to a thread dump bonded by H"},
        {"mouron", Subcommand::mouron, "Check F∘G = G∘F = shift on a thread dump bonded by F∘G"},
        {"plot", Subcommand::plot, "SVG of a map graph, or of thread projections with --threads"},
    };
    std::vector<std::pair<CLI::App*, Subcommand>> subs;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        subs.emplace_back(sub, e.sub);
        if (e.sub == Subcommand::eval) {
            sub->add_option("map", eval_map, "plmap v1 file")->required();
            sub->add_option("x", point, "point p/q")->required();
        } else {
            sub->add_option("inputs", inputs, "input files")->required();
        }
        sub->add_option("--depth", config.depth, "thread depth");
        sub->add_option("--max-branches", config.max_branches, "enumeration cap");
        sub->add_option("--budget", config.breakpoint_budget, "breakpoint budget for compositions");
        sub->add_option("--slope-bound", slope_bound, "slope bound (rational)");
        sub->add_option("--root", root, "root x1 (rational)");
        sub->add_option("--out", out_path, "output file");
        sub->add_option("--workers", config.workers, "enumeration worker threads");
        sub->add_option("--threads", threads_path, "thread dump to plot");
        sub->add_option("--scale", config.scale, "SVG pixels per unit");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        for (const auto& [sub, kind] : subs) {
            if (sub->parsed()) {
                config.subcommand = kind;
            }
        }
        config.inputs.assign(inputs.begin(), inputs.end());
        if (!eval_map.empty()) {
            config.inputs.assign({eval_map});
        }
        config.slope_bound = parse_flag_rational(slope_bound);
        if (!point.empty()) {
            config.point = UnitRational(parse_flag_rational(point));
        }
        if (!root.empty()) {
            config.root = UnitRational(parse_flag_rational(root));
        }
        if (!out_path.empty()) {
            config.out = out_path;
        }
        if (!threads_path.empty()) {
            config.threads_file = threads_path;
        }
    } catch (const Error& e) {
        err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_error;
    }
    return run(config, out, err);
}

} // namespace plim::cli
