// ribbonfold: bounds, fold plans, layouts, and certificates for twisted torus
// knots T(p,q;r,s).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <ribbonfold/cli.hpp>

namespace {

std::pair<int, int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("range must be A:B");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

void add_params(CLI::App* cmd, ribbonfold::RunConfig& cfg, bool required) {
    auto* p = cmd->add_option("-p", cfg.p, "torus parameter p");
    auto* q = cmd->add_option("-q", cfg.q, "torus parameter q");
    auto* r = cmd->add_option("-r", cfg.r, "number of twisted strands");
    auto* s = cmd->add_option("-s", cfg.s, "number of full twists (nonzero)");
    if (required) { p->required(); q->required(); r->required(); s->required(); }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ribbonlength bounds and flat-fold layouts for twisted torus knots"};
    app.require_subcommand(1);

    ribbonfold::RunConfig cfg;
    std::string width_text = "1";
    std::string range_p, range_q, range_r, range_s;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--width", width_text, "ribbon width as a rational, e.g. 1 or 1/2");
        cmd->add_option("--format", cfg.format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text", "svg"}));
        cmd->add_flag("--permissive", cfg.permissive, "allow q = 1 (uncertified)");
    };

    auto* bound = app.add_subcommand("bound", "compute the ribbonlength upper bound");
    add_params(bound, cfg, true);
    add_common(bound);

    auto* plan = app.add_subcommand("plan", "emit the weighted-band fold plan");
    add_params(plan, cfg, true);
    add_common(plan);
    plan->add_flag("--force-standard", cfg.force_standard,
                   "use the non-sharpened construction when r <= p-q");

    auto* render = app.add_subcommand("render", "assemble, validate and render the layout");
    add_params(render, cfg, true);
    add_common(render);
    render->add_option("--out", cfg.out_path, "output SVG path")->required();
    render->add_flag("--force-standard", cfg.force_standard,
                     "use the non-sharpened construction when r <= p-q");

    auto* verify = app.add_subcommand("verify", "run the certificate suite for one knot");
    add_params(verify, cfg, true);
    add_common(verify);

    auto* sweep = app.add_subcommand("sweep", "bound reports over a parameter grid");
    add_common(sweep);
    sweep->add_option("--range-p", range_p, "p range A:B")->required();
    sweep->add_option("--range-q", range_q, "q range A:B")->required();
    sweep->add_option("--range-r", range_r, "r range A:B")->required();
    sweep->add_option("--range-s", range_s, "s range A:B")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.width = ribbonfold::Rational::parse(width_text);
    } catch (const std::exception&) {
        std::cerr << "invalid --width\n";
        return ribbonfold::kInvalidInput;
    }
    if (!(cfg.width > ribbonfold::Rational(0))) {
        std::cerr << "width must be positive\n";
        return ribbonfold::kInvalidInput;
    }

    ribbonfold::CmdResult res;
    try {
        if (app.got_subcommand(bound)) res = ribbonfold::cmd_bound(cfg);
        else if (app.got_subcommand(plan)) res = ribbonfold::cmd_plan(cfg);
        else if (app.got_subcommand(render)) res = ribbonfold::cmd_render(cfg);
        else if (app.got_subcommand(verify)) res = ribbonfold::cmd_verify(cfg);
        else {
            cfg.range_p = parse_range(range_p);
            cfg.range_q = parse_range(range_q);
            cfg.range_r = parse_range(range_r);
            cfg.range_s = parse_range(range_s);
            res = ribbonfold::cmd_sweep(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ribbonfold::kInvalidInput;
    }

    if (app.got_subcommand(render) && cfg.format == "svg")
        std::cout << res.svg;
    else
        std::cout << res.output;
    if (app.got_subcommand(render) && res.exit_code != ribbonfold::kInvalidInput &&
        res.exit_code != ribbonfold::kLinkInput) {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << cfg.out_path << "\n";
            return ribbonfold::kInvalidInput;
        }
        out << res.svg;
    }
    return res.exit_code;
}
