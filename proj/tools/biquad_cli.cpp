// Command-line front end: PBW checks, smoothness classification, calculus
// verification, catalog reports, normal forms and growth counts for
// bi-quadratic presentations on three generators.
//
// Exit codes: 0 success, 1 a verification check failed, 2 parse/usage error,
// 3 precondition violation.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "biquad/calculus.hpp"
#include "biquad/catalog.hpp"
#include "biquad/errors.hpp"
#include "biquad/ncpoly.hpp"
#include "biquad/pbw.hpp"
#include "biquad/presentation.hpp"
#include "biquad/smooth.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kPrecondition = 3;

// Built-in entry names take precedence; anything else is read as a file.
biquad::Presentation resolve_input(const std::string& input) {
    if (const biquad::CatalogEntry* entry = biquad::find_entry(input))
        return biquad::instantiate_default(*entry);
    if (!std::filesystem::exists(input))
        throw biquad::DomainError("no built-in entry or file named '" + input + "'");
    return biquad::load_presentation_file(input);
}

biquad::Word parse_word(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::uint8_t> letters;
    std::string tok;
    while (is >> tok) {
        if (tok.size() == 2 && tok[0] == 'x' && tok[1] >= '1' && tok[1] <= '3')
            letters.push_back(static_cast<std::uint8_t>(tok[1] - '0'));
        else
            throw biquad::DomainError("bad word token '" + tok + "' (expected x1, x2 or x3)");
    }
    return biquad::Word(std::move(letters));
}

void list_entries() {
    std::cout << "three-generator catalog entries:\n";
    for (const auto& e : biquad::catalog3())
        std::cout << "  " << e.name << "  (table " << e.table << ", " << e.display << ")\n";
    std::cout << "two-generator entries (reported by the catalog subcommand):\n";
    for (const auto& e : biquad::catalog2()) std::cout << "  " << e.name << "  (" << e.display << ")\n";
}

std::string machine_escape(std::string s) {
    for (auto& ch : s)
        if (ch == ' ') ch = '_';
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for bi-quadratic algebras on three generators"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
    bool list = false;
    app.add_flag("--list", list, "list built-in catalog entry names and exit");

    std::string input, word_text, mode_text = "shift";
    unsigned degree = 4, samples = 50;
    unsigned max_degree = 6;
    std::uint64_t seed = 0;

    auto* pbw_cmd = app.add_subcommand("pbw", "consistency report for a presentation");
    pbw_cmd->add_option("input", input, "presentation file or entry name")->required();

    auto* classify_cmd = app.add_subcommand("classify", "differential smoothness classification");
    classify_cmd->add_option("input", input, "presentation file or entry name")->required();
    classify_cmd->add_option("--mode", mode_text, "condition mode")
        ->check(CLI::IsMember({"literal", "shift"}));

    auto* calculus_cmd = app.add_subcommand("calculus", "construct and verify the 3d calculus");
    calculus_cmd->add_option("input", input, "presentation file or entry name")->required();
    calculus_cmd->add_option("--degree", degree, "verification degree bound (default 4)")
        ->check(CLI::PositiveNumber);
    calculus_cmd->add_option("--samples", samples, "random sample count (default 50)")
        ->check(CLI::PositiveNumber);
    calculus_cmd->add_option("--seed", seed, "random seed (default 0)");

    auto* catalog_cmd = app.add_subcommand("catalog", "classify the full built-in catalog");
    catalog_cmd->add_option("--seed", seed, "random seed echoed in the report");
    bool strict = false;
    catalog_cmd->add_flag("--strict", strict,
                          "exit 1 when any computed verdict disagrees with the claimed one");

    auto* nf_cmd = app.add_subcommand("normal-form", "reduce a word to its PBW normal form");
    nf_cmd->add_option("input", input, "presentation file or entry name")->required();
    nf_cmd->add_option("--word", word_text, "whitespace-separated tokens x1|x2|x3")->required();

    auto* growth_cmd = app.add_subcommand("growth", "normal-form monomial counts by degree");
    growth_cmd->add_option("input", input, "presentation file or entry name")->required();
    growth_cmd->add_option("--max-degree", max_degree, "largest degree to count (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const bool machine = format == "machine";

    try {
        if (list) {
            list_entries();
            return kOk;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return kUsage;
        }

        if (pbw_cmd->parsed()) {
            const auto P = resolve_input(input);
            std::cout << biquad::render(biquad::pbw_report(P));
            return kOk;
        }

        if (classify_cmd->parsed()) {
            const auto P = resolve_input(input);
            const auto literal = biquad::classify(P, biquad::Mode::literal);
            const auto shifted = biquad::classify(P, biquad::Mode::up_to_shift);
            const auto& main_verdict = mode_text == "literal" ? literal : shifted;
            if (machine) {
                auto line = [&](const char* mode, const biquad::Verdict& v) {
                    std::cout << "input=" << machine_escape(input) << " mode=" << mode
                              << " verdict=" << biquad::verdict_name(v.kind);
                    if (v.kind == biquad::Verdict::Kind::not_smooth)
                        std::cout << " witness=" << biquad::param_name(v.obstruction);
                    else if (v.kind == biquad::Verdict::Kind::smooth)
                        std::cout << " witness=s=(" << v.shift[0] << "," << v.shift[1] << ","
                                  << v.shift[2] << ")";
                    std::cout << "\n";
                };
                line("literal", literal);
                line("shift", shifted);
            } else {
                std::cout << biquad::verdict_name(main_verdict.kind);
                if (main_verdict.kind == biquad::Verdict::Kind::not_smooth) {
                    std::cout << " witness=" << biquad::param_name(main_verdict.obstruction);
                } else if (main_verdict.kind == biquad::Verdict::Kind::smooth) {
                    std::cout << " shift=(" << main_verdict.shift[0] << ","
                              << main_verdict.shift[1] << "," << main_verdict.shift[2] << ")";
                } else {
                    for (const auto& [label, value] : main_verdict.conditions)
                        if (!value.is_zero()) std::cout << " failing:" << label << "=" << value;
                }
                std::cout << "\n";
                std::cout << "literal: " << biquad::verdict_name(literal.kind)
                          << "  up_to_shift: " << biquad::verdict_name(shifted.kind) << "\n";
            }
            return kOk;
        }

        if (calculus_cmd->parsed()) {
            const auto P = resolve_input(input);
            const auto report = biquad::verify_calculus(P, degree, samples, seed);
            std::cout << (machine ? biquad::render_machine(report) : biquad::render_text(report));
            return report.all_pass() ? kOk : kCheckFailed;
        }

        if (catalog_cmd->parsed()) {
            const auto report = biquad::catalog_report(seed);
            std::cout << (machine ? biquad::render_machine(report) : biquad::render_text(report));
            if (strict) {
                for (const auto& row : report.rows3)
                    if (!row.agree) return kCheckFailed;
                for (const auto& row : report.rows2)
                    if (!row.agree) return kCheckFailed;
            }
            return kOk;
        }

        if (nf_cmd->parsed()) {
            const auto P = resolve_input(input);
            const auto w = parse_word(word_text);
            const auto nf = biquad::normal_form(biquad::NcPoly::monomial(w), P);
            std::cout << nf.str() << "\n";
            return kOk;
        }

        if (growth_cmd->parsed()) {
            const auto P = resolve_input(input);
            bool all_match = true;
            for (unsigned n = 0; n <= max_degree; ++n) {
                const auto counted = biquad::normal_monomial_count(P, n);
                const auto reference = biquad::pbw_count(n);
                const bool match = counted == reference;
                all_match = all_match && match;
                if (machine)
                    std::cout << "degree=" << n << " count=" << counted
                              << " reference=" << reference
                              << " match=" << (match ? "true" : "false") << "\n";
                else
                    std::cout << "degree <= " << n << ": " << counted
                              << " normal-form monomials (binomial reference " << reference << ")"
                              << (match ? "" : "  MISMATCH") << "\n";
            }
            return all_match ? kOk : kCheckFailed;
        }

        std::cerr << app.help();
        return kUsage;
    } catch (const biquad::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const biquad::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const biquad::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}
