// Command-line front end: classify channels, build completion-time regions,
// minimize weighted completion times, test membership, run the brute-force
// verifier and emit the non-convexity certificate.
#include <cstdio>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "ctr/ctmap.hpp"
#include "ctr/io.hpp"
#include "ctr/optimize.hpp"
#include "ctr/oracle.hpp"
#include "ctr/regions.hpp"

namespace {

using namespace ctr;

// exit 3 per the CLI contract
struct RegimeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<double, double> parse_pair_arg(const std::string& text, const char* what) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument(std::string(what) + " must be two comma-separated numbers");
    try {
        std::size_t used1 = 0;
        std::size_t used2 = 0;
        const std::string first = text.substr(0, comma);
        const std::string second = text.substr(comma + 1);
        const double x = std::stod(first, &used1);
        const double y = std::stod(second, &used2);
        if (used1 != first.size() || used2 != second.size())
            throw std::invalid_argument("trailing characters");
        return {x, y};
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + " must be two comma-separated numbers");
    }
}

LoadSpec parse_load(const std::string& text) {
    const auto [t1, t2] = parse_pair_arg(text, "--load");
    const LoadSpec load{t1, t2};
    validate(load);
    return load;
}

struct GicSetup {
    Regime regime;
    PolygonalRateRegion region;
    SoloCaps caps;
};

// Builds the standard rate region used for a GIC: the capacity polygon in the
// very-strong/strong regimes, the Etkin-Tse-Wang polygon (or a user-supplied
// one) in the weak/mixed regimes.
GicSetup gic_setup(const GicChannel& ch, const std::string& region_path, EtwKind kind) {
    const Regime regime = classify(ch);
    const bool takes_region = regime == Regime::Weak || regime == Regime::Mixed;
    if (!region_path.empty() && !takes_region)
        throw RegimeMismatch("--region applies to weak/mixed channels only (channel is " +
                             std::string(to_string(regime)) + ")");
    if (kind == EtwKind::Outer && !takes_region)
        throw RegimeMismatch("--bound outer applies to weak/mixed channels only");
    PolygonalRateRegion region = [&] {
        if (!region_path.empty())
            return PolygonalRateRegion::validated(parse_polygon_file(region_path));
        switch (regime) {
            case Regime::VeryStrong: return very_strong_rectangle(ch);
            case Regime::Strong: return strong_ic_polygon(ch);
            default: return etw_polygon(ch, kind);
        }
    }();
    return {regime, std::move(region), solo_caps(ch)};
}

RegionTag gic_tag(const GicSetup& setup, const std::string& region_path, EtwKind kind) {
    if (!region_path.empty()) return RegionTag::Achievable;
    if (setup.regime == Regime::Weak || setup.regime == Regime::Mixed)
        return kind == EtwKind::Outer ? RegionTag::Outer : RegionTag::Achievable;
    return RegionTag::Exact;
}

int cmd_classify(const std::string& channel_path, bool swap_users) {
    const ChannelInput input = parse_channel_file(channel_path, swap_users);
    if (!std::holds_alternative<GicChannel>(input))
        throw std::invalid_argument("classify requires gic");
    std::cout << to_string(classify(std::get<GicChannel>(input))) << "\n";
    return 0;
}

int cmd_ctr(const std::string& channel_path, const std::string& load_arg,
            const std::string& region_path, const std::string& out_path,
            const std::string& format, std::size_t samples, const std::string& plot_path,
            bool swap_users, EtwKind kind) {
    const ChannelInput input = parse_channel_file(channel_path, swap_users);
    const LoadSpec load = parse_load(load_arg);

    CTRegion ctr_region = [&] {
        if (std::holds_alternative<GbcChannel>(input)) {
            if (!region_path.empty()) throw RegimeMismatch("--region applies to gic channels only");
            if (kind == EtwKind::Outer) throw RegimeMismatch("--bound outer applies to gic channels only");
            return gbc_ctr(std::get<GbcChannel>(input), load);
        }
        const GicChannel& ch = std::get<GicChannel>(input);
        const GicSetup setup = gic_setup(ch, region_path, kind);
        if (setup.regime == Regime::VeryStrong) return very_strong_ctr(ch, load);
        return polygon_ctr(setup.region, setup.caps, load, gic_tag(setup, region_path, kind));
    }();

    if (format == "json")
        write_file_atomic(out_path, ctr_to_json(ctr_region));
    else
        write_file_atomic(out_path, boundary_to_csv(ctr_boundary(ctr_region, samples)));
    if (!plot_path.empty()) write_file_atomic(plot_path, ctr_to_svg(ctr_region, samples));
    return 0;
}

int cmd_minimize(const std::string& channel_path, const std::string& load_arg, double w,
                 const std::string& region_path, bool swap_users) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("weight out of [0,1]");
    const ChannelInput input = parse_channel_file(channel_path, swap_users);
    const LoadSpec load = parse_load(load_arg);

    SolverResult best;
    if (std::holds_alternative<GbcChannel>(input)) {
        if (!region_path.empty()) throw RegimeMismatch("--region applies to gic channels only");
        best = gbc_min_weighted(std::get<GbcChannel>(input), load, w).best;
    } else {
        const GicChannel& ch = std::get<GicChannel>(input);
        const GicSetup setup = gic_setup(ch, region_path, EtwKind::Achievable);
        const SolverResult s1 = polygon_min_weighted(setup.region, setup.caps, load, w, 1);
        const SolverResult s2 = polygon_min_weighted(setup.region, setup.caps, load, w, 2);
        best = s1.objective <= s2.objective ? s1 : s2;
    }
    std::cout << solver_result_to_json(best);
    return 0;
}

int cmd_member(const std::string& channel_path, const std::string& load_arg,
               const std::string& point_arg, bool swap_users) {
    const ChannelInput input = parse_channel_file(channel_path, swap_users);
    const LoadSpec load = parse_load(load_arg);
    const auto [d1, d2] = parse_pair_arg(point_arg, "--point");
    const CompletionTimePair d{d1, d2};
    validate(d);

    bool achievable;
    if (std::holds_alternative<GbcChannel>(input)) {
        const GbcChannel& ch = std::get<GbcChannel>(input);
        achievable = ct_achievable(make_predicate(ch), solo_caps(ch), load, d);
    } else {
        const GicChannel& ch = std::get<GicChannel>(input);
        const GicSetup setup = gic_setup(ch, "", EtwKind::Achievable);
        achievable = ct_achievable(make_predicate(setup.region), setup.caps, load, d);
    }
    std::cout << (achievable ? "achievable" : "not-achievable") << "\n";
    return achievable ? 0 : 1;
}

int cmd_verify(const std::string& channel_path, const std::string& load_arg,
               const std::string& region_path, std::size_t grid_n, bool closed_form,
               bool swap_users) {
    const ChannelInput input = parse_channel_file(channel_path, swap_users);
    const LoadSpec load = parse_load(load_arg);

    CompareReport report;
    if (std::holds_alternative<GbcChannel>(input)) {
        if (!region_path.empty()) throw RegimeMismatch("--region applies to gic channels only");
        if (closed_form) throw RegimeMismatch("--closed-form applies to strong gic channels only");
        const GbcChannel& ch = std::get<GbcChannel>(input);
        report = compare_regions(gbc_ctr(ch, load), make_predicate(ch), solo_caps(ch), load, grid_n);
    } else {
        const GicChannel& ch = std::get<GicChannel>(input);
        const GicSetup setup = gic_setup(ch, region_path, EtwKind::Achievable);
        const RatePredicate pred = make_predicate(setup.region);
        if (closed_form) {
            if (setup.regime != Regime::Strong)
                throw RegimeMismatch("--closed-form applies to strong gic channels only");
            const StrongCtrClosedForm cf = strong_ctr_closed_form(ch, load);
            const CTRegion hull = polygon_ctr(setup.region, setup.caps, load, RegionTag::Exact);
            const CtBox box = default_box(hull.all_vertices());
            report = compare_regions([&cf](const CompletionTimePair& d) { return cf.contains(d); },
                                     box, pred, setup.caps, load, grid_n);
        } else if (setup.regime == Regime::VeryStrong) {
            report = compare_regions(very_strong_ctr(ch, load), pred, setup.caps, load, grid_n);
        } else {
            const CTRegion region =
                polygon_ctr(setup.region, setup.caps, load, gic_tag(setup, region_path, EtwKind::Achievable));
            report = compare_regions(region, pred, setup.caps, load, grid_n);
        }
    }
    std::cout << report_to_json(report);
    return report.pass ? 0 : 1;
}

int cmd_convexity(const std::string& channel_path, const std::string& load_arg, bool swap_users) {
    const ChannelInput input = parse_channel_file(channel_path, swap_users);
    if (!std::holds_alternative<GbcChannel>(input))
        throw std::invalid_argument("convexity requires gbc");
    const LoadSpec load = parse_load(load_arg);
    std::cout << certificate_to_json(nonconvexity_certificate(std::get<GbcChannel>(input), load));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"completion-time regions for two-user Gaussian broadcast/interference channels"};
    app.require_subcommand(1);

    std::string channel_path, load_arg, region_path, out_path, point_arg, plot_path;
    std::string format = "json";
    std::string bound = "achievable";
    double weight = 0.0;
    std::size_t samples = 256;
    std::size_t grid_n = 200;
    bool closed_form = false;
    bool swap_users = false;

    auto add_channel = [&](CLI::App* cmd) {
        cmd->add_option("channel-file", channel_path, "channel JSON file")->required();
        cmd->add_flag("--swap-users", swap_users,
                      "relabel user 1 <-> user 2 before validation; all user-indexed "
                      "inputs and outputs then follow the relabeled order");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "print the interference regime");
    add_channel(classify_cmd);

    CLI::App* ctr_cmd = app.add_subcommand("ctr", "compute the completion-time region");
    add_channel(ctr_cmd);
    ctr_cmd->add_option("--load", load_arg, "per-user bits per source sample, t1,t2")->required();
    ctr_cmd->add_option("--region", region_path, "polygon JSON overriding the built-in region");
    ctr_cmd->add_option("--out", out_path, "output path")->required();
    ctr_cmd->add_option("--format", format, "json|csv")
        ->required()
        ->check(CLI::IsMember({"json", "csv"}));
    ctr_cmd->add_option("--samples", samples, "boundary sample count for csv/svg");
    ctr_cmd->add_option("--plot", plot_path, "also write an SVG plot here");
    ctr_cmd->add_option("--bound", bound, "achievable|outer (weak/mixed only)")
        ->check(CLI::IsMember({"achievable", "outer"}));

    CLI::App* min_cmd = app.add_subcommand("minimize", "minimize w*d1 + (1-w)*d2");
    add_channel(min_cmd);
    min_cmd->add_option("--load", load_arg, "t1,t2")->required();
    min_cmd->add_option("--weight", weight, "weight w in [0,1]")->required();
    min_cmd->add_option("--region", region_path, "polygon JSON overriding the built-in region");

    CLI::App* member_cmd = app.add_subcommand("member", "test a completion-time pair");
    add_channel(member_cmd);
    member_cmd->add_option("--load", load_arg, "t1,t2")->required();
    member_cmd->add_option("--point", point_arg, "d1,d2")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "compare the analytic region against the brute-force oracle");
    add_channel(verify_cmd);
    verify_cmd->add_option("--load", load_arg, "t1,t2")->required();
    verify_cmd->add_option("--region", region_path, "polygon JSON overriding the built-in region");
    verify_cmd->add_option("--grid", grid_n, "grid resolution (default 200)");
    verify_cmd->add_flag("--closed-form", closed_form,
                         "compare the literal strong-regime constraint list instead");

    CLI::App* conv_cmd = app.add_subcommand("convexity", "non-convexity certificate (gbc)");
    add_channel(conv_cmd);
    conv_cmd->add_option("--load", load_arg, "t1,t2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return cmd_classify(channel_path, swap_users);
        if (app.got_subcommand(ctr_cmd))
            return cmd_ctr(channel_path, load_arg, region_path, out_path, format, samples,
                           plot_path, swap_users,
                           bound == "outer" ? EtwKind::Outer : EtwKind::Achievable);
        if (app.got_subcommand(min_cmd))
            return cmd_minimize(channel_path, load_arg, weight, region_path, swap_users);
        if (app.got_subcommand(member_cmd))
            return cmd_member(channel_path, load_arg, point_arg, swap_users);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(channel_path, load_arg, region_path, grid_n, closed_form, swap_users);
        if (app.got_subcommand(conv_cmd)) return cmd_convexity(channel_path, load_arg, swap_users);
    } catch (const RegimeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
