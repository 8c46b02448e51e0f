#include <CLI11.hpp>
#include <limone/limone.hpp>

#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw limone::parse_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

limone::json rules_echo(const char* command, const std::string& path,
                        const limone::RuleFile& file) {
    limone::json j;
    j["command"] = command;
    j["path"] = path;
    limone::json letters = limone::json::array();
    for (std::size_t i = 0; i < file.alphabet.size(); ++i)
        letters.push_back(file.alphabet.name(i));
    j["letters"] = std::move(letters);
    j["rules"] = file.lines;
    return j;
}

limone::json caps_echo(const limone::AnalysisCaps& caps) {
    limone::json j;
    j["border"] = caps.border;
    j["proper"] = caps.proper;
    return j;
}

void emit(bool json_out, const std::string& text, const limone::ReportEnvelope& env) {
    if (json_out)
        std::cout << limone::serialize(env);
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability and shape verdicts for one-dimensional attractors"};
    app.require_subcommand(1);

    bool json_out = false;
    app.add_flag("--json", json_out, "emit the full report as JSON");

    limone::AnalysisCaps caps;
    std::string sub_path, endo_path, coh_path;
    std::size_t torus_d = 0, torus_k = 0, proj_d = 0, proj_n = 0;

    CLI::App* sub = app.add_subcommand("sub", "analyze the tiling space of a substitution");
    sub->add_option("file", sub_path, "substitution rule file")->required();
    sub->add_option("--cap-border", caps.border, "search depth for border forcing")
        ->check(CLI::Range(1u, std::numeric_limits<unsigned>::max()));
    sub->add_option("--cap-proper", caps.proper, "exponent bound for the power test")
        ->check(CLI::Range(1u, std::numeric_limits<unsigned>::max()));
    sub->fallthrough();

    CLI::App* endo = app.add_subcommand("endo", "analyze the rose tower of an endomorphism");
    endo->add_option("file", endo_path, "endomorphism rule file")->required();
    endo->fallthrough();

    CLI::App* coh = app.add_subcommand("cohomology",
                                       "first cohomology presentation of a tiling space");
    coh->add_option("file", coh_path, "substitution rule file")->required();
    coh->add_option("--cap-border", caps.border, "search depth for border forcing")
        ->check(CLI::Range(1u, std::numeric_limits<unsigned>::max()));
    coh->add_option("--cap-proper", caps.proper, "exponent bound for the power test")
        ->check(CLI::Range(1u, std::numeric_limits<unsigned>::max()));
    coh->fallthrough();

    CLI::App* torus = app.add_subcommand("torus", "cohomology ranks of a punctured torus fiber");
    torus->add_option("dimension", torus_d, "attractor dimension d, fiber is a (d+1)-torus")
        ->required();
    torus->add_option("punctures", torus_k, "number of removed points")->required();
    torus->fallthrough();

    CLI::App* proj = app.add_subcommand("projection",
                                        "rank obstruction for projecting along independent directions");
    proj->add_option("dimension", proj_d, "attractor dimension")->required();
    proj->add_option("directions", proj_n, "independent projection directions")->required();
    proj->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sub) {
            limone::RuleFile file =
                limone::parse_rules(read_file(sub_path), limone::RuleMode::Substitution);
            limone::TilingSpaceReport rep =
                limone::analyze_substitution(limone::to_substitution(file), caps);
            limone::json input = rules_echo("sub", sub_path, file);
            input["caps"] = caps_echo(caps);
            emit(json_out, limone::render_text(rep, file.alphabet),
                 limone::make_envelope(rep, std::move(input)));
        } else if (*endo) {
            limone::RuleFile file =
                limone::parse_rules(read_file(endo_path), limone::RuleMode::Endomorphism);
            limone::EndoReport rep = limone::analyze_endo(limone::to_endo(file));
            emit(json_out, limone::render_text(rep, file.alphabet),
                 limone::make_envelope(rep, rules_echo("endo", endo_path, file)));
        } else if (*coh) {
            limone::RuleFile file =
                limone::parse_rules(read_file(coh_path), limone::RuleMode::Substitution);
            limone::H1Presentation rep =
                limone::h1_presentation(limone::to_substitution(file), caps);
            limone::json input = rules_echo("cohomology", coh_path, file);
            input["caps"] = caps_echo(caps);
            emit(json_out, limone::render_text(rep),
                 limone::make_envelope(rep, std::move(input)));
        } else if (*torus) {
            limone::TorusCohomology rep = limone::torus_minus_points(torus_d, torus_k);
            limone::json input;
            input["command"] = "torus";
            input["dimension"] = torus_d;
            input["punctures"] = torus_k;
            emit(json_out, limone::render_text(rep),
                 limone::make_envelope(rep, std::move(input)));
        } else if (*proj) {
            limone::ProjectionCheck rep = limone::projection_check(proj_d, proj_n);
            limone::json input;
            input["command"] = "projection";
            input["dimension"] = proj_d;
            input["directions"] = proj_n;
            emit(json_out, limone::render_text(rep),
                 limone::make_envelope(rep, std::move(input)));
        }
        return 0;
    } catch (const limone::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const limone::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
