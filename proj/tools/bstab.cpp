// Command-line surface: generation, standardness testing, characters,
// verification suites, crystal-graph export, and lifting search.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bs/charpoly.hpp"
#include "bs/crystal.hpp"
#include "bs/geometry.hpp"
#include "bs/standard.hpp"
#include "bs/text.hpp"
#include "bs/weyl.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    std::string word_str;
    std::string mult_str;
    int n = 0;
    std::string subword_str;  // empty -> full [l]
    std::uint64_t seed = 0;
    std::string format = "text";
    int max_l = 12;

    bs::Word word() const { return bs::Word(bs::parse_int_list(word_str), n); }
    std::vector<int> mult() const { return bs::parse_int_list(mult_str); }
    bs::Shape shape() const { return bs::Shape(word(), mult()); }
    bs::Subword subword() const {
        int l = static_cast<int>(bs::parse_int_list(word_str).size());
        if (subword_str.empty()) return bs::Subword::full(l);
        return bs::parse_subword(subword_str, l);
    }
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_shape = true) {
    cmd->add_option("--word", cfg.word_str, "ambient word, comma-separated letters, e.g. 1,2,1")
        ->required();
    auto* mult = cmd->add_option("--mult", cfg.mult_str,
                                 "multiplicities, comma-separated, same length as the word");
    if (needs_shape) mult->required();
    cmd->add_option("--n", cfg.n, "rank (matrix size)")->required();
    cmd->add_option("--subword", cfg.subword_str, "subword as {1,3}; default is the full word");
    cmd->add_option("--seed", cfg.seed, "RNG seed for sampling")->default_val(0);
    cmd->add_option("--format", cfg.format, "output format: text|json|dot")->default_val("text");
    cmd->add_option("--max-l", cfg.max_l, "word-length bound for the lifting oracle")
        ->default_val(12);
}

int cmd_generate(const RunConfig& cfg) {
    bs::Shape shape = cfg.shape();
    bs::StandardSet set = bs::generate_constructible(shape.word, cfg.subword(), shape.mult);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["word"] = shape.word.letters;
        j["mult"] = shape.mult;
        j["n"] = shape.word.n;
        j["subword"] = set.ambient.positions();
        j["tableaux"] = nlohmann::json::array();
        for (const bs::Tableau& tau : set.tableaux)
            j["tableaux"].push_back(bs::format_tableau(tau, shape));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const bs::Tableau& tau : set.tableaux)
            std::cout << bs::format_tableau(tau, shape) << "\n";
    }
    return kExitPass;
}

int cmd_standard(const RunConfig& cfg, const std::string& tableau_str) {
    bs::Shape shape = cfg.shape();
    bs::Tableau tau = bs::parse_tableau(tableau_str);
    bs::StandardVerdict v = bs::is_standard(tau, shape);
    if (v.standard) {
        std::cout << "true\nwitness: " << bs::format_int_list(v.raise_counts) << "\n";
        return kExitPass;
    }
    std::cout << "false\nresidual: " << bs::format_tableau(v.residual) << "\n";
    return kExitFail;
}

int cmd_char(const RunConfig& cfg, const std::string& mode) {
    bs::Shape shape = cfg.shape();
    bs::Subword J = cfg.subword();
    if (mode == "demazure" || mode == "both") {
        bs::LaurentPolynomial f = bs::demazure_character(shape.word, J, shape.mult);
        std::cout << "demazure: " << bs::format_polynomial(f) << "\n";
        if (mode == "demazure") return kExitPass;
        bs::StandardSet set = bs::generate_constructible(shape.word, J, shape.mult);
        bs::LaurentPolynomial g = bs::set_character(shape.word.n, set.tableaux);
        std::cout << "tableau-sum: " << bs::format_polynomial(g) << "\n";
        bool equal = f == g;
        std::cout << (equal ? "EQUAL" : "UNEQUAL") << "\n";
        return equal ? kExitPass : kExitFail;
    }
    if (mode == "tableau-sum") {
        bs::StandardSet set = bs::generate_constructible(shape.word, J, shape.mult);
        std::cout << "tableau-sum: "
                  << bs::format_polynomial(bs::set_character(shape.word.n, set.tableaux)) << "\n";
        return kExitPass;
    }
    throw std::invalid_argument("mode must be demazure|tableau-sum|both");
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    bs::Shape shape = cfg.shape();
    bs::Word word = shape.word;
    bs::Subword J = cfg.subword();
    int l = word.length();

    auto report = [&](bool ok, const std::string& detail) {
        std::cout << suite << ": " << (ok ? "pass" : "FAIL");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        return ok ? kExitPass : kExitFail;
    };

    if (suite == "theorem2") {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
            bs::Subword Jp(mask, l);
            bs::TableauSet c = bs::generate_constructible(word, Jp, shape.mult).tableaux;
            bs::TableauSet t = bs::generate_liftable(word, Jp, shape.mult, cfg.max_l).tableaux;
            if (c != t) return report(false, "C != T at J=" + bs::format_subword(Jp));
        }
        return report(true, "all 2^l subwords");
    }
    if (suite == "theorem1") {
        bs::TableauSet ts = bs::generate_constructible(word, J, shape.mult).tableaux;
        int want = static_cast<int>(ts.size());
        int points = std::max(20, want + 5);
        for (int attempt = 0; attempt < 3; ++attempt) {
            int rk = bs::independence_rank(ts, shape, {J}, points, cfg.seed + attempt);
            if (rk == want) return report(true, "rank " + std::to_string(rk));
        }
        return report(false, "rank below " + std::to_string(want) + " after 3 reseeds");
    }
    if (suite == "headstring") {
        bs::TableauSet ts = bs::generate_constructible(word, J, shape.mult).tableaux;
        return report(bs::check_headstring(ts, word.n), "");
    }
    if (suite == "recursion") {
        return report(bs::check_recursion(word, J, shape.mult), "");
    }
    if (suite == "schubert") {
        for (int k = 1; k <= l; ++k)
            if (!bs::schubert_image_check(word, J, k, 10, cfg.seed))
                return report(false, "k=" + std::to_string(k));
        return report(true, "all positions");
    }
    throw std::invalid_argument("suite must be theorem1|theorem2|headstring|recursion|schubert");
}

int cmd_crystal(const RunConfig& cfg) {
    bs::Shape shape = cfg.shape();
    bs::StandardSet set = bs::generate_constructible(shape.word, cfg.subword(), shape.mult);
    std::cout << "digraph crystal {\n";
    for (const bs::Tableau& tau : set.tableaux)
        std::cout << "  \"" << bs::format_tableau(tau, shape) << "\";\n";
    for (const bs::Tableau& tau : set.tableaux) {
        for (int i = 1; i <= shape.word.n - 1; ++i) {
            bs::MaybeTableau t = bs::lower(i, tau);
            if (t && set.tableaux.count(*t))
                std::cout << "  \"" << bs::format_tableau(tau, shape) << "\" -> \""
                          << bs::format_tableau(*t, shape) << "\" [label=" << i << "];\n";
        }
    }
    std::cout << "}\n";
    return kExitPass;
}

int cmd_lift(const RunConfig& cfg, const std::string& tableau_str) {
    bs::Shape shape = cfg.shape();
    bs::Tableau tau = bs::parse_tableau(tableau_str);
    auto nest = bs::find_lifting(shape.word, cfg.subword(), shape.mult, tau, cfg.max_l);
    if (!nest) {
        std::cout << "none\n";
        return kExitFail;
    }
    if (nest->subwords.empty()) {
        std::cout << bs::kEmptyTableau << "\n";
        return kExitPass;
    }
    std::string s;
    for (std::size_t j = 0; j < nest->subwords.size(); ++j) {
        if (j) s += " >= ";
        s += bs::format_subword(nest->subwords[j]);
    }
    std::cout << s << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Standard monomial bases for Bott-Samelson varieties of GL(n)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string tableau_str, mode = "both", suite;

    auto* generate = app.add_subcommand("generate", "list the standard tableaux of a shape");
    add_common(generate, cfg);

    auto* standard = app.add_subcommand("standard", "test a tableau for standardness");
    add_common(standard, cfg);
    standard->add_option("tableau", tableau_str, "tableau, e.g. 2*2,3*1")->required();

    auto* chr = app.add_subcommand("char", "compute the character polynomial");
    add_common(chr, cfg);
    chr->add_option("--mode", mode, "demazure|tableau-sum|both")->default_val("both");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, cfg);
    verify->add_option("suite", suite, "theorem1|theorem2|headstring|recursion|schubert")
        ->required();

    auto* crystal = app.add_subcommand("crystal", "emit the crystal graph as DOT");
    add_common(crystal, cfg);

    auto* lift = app.add_subcommand("lift", "print one reduced nest for a tableau, or none");
    add_common(lift, cfg);
    lift->add_option("tableau", tableau_str, "tableau, e.g. 2*2,3*1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(cfg);
        if (standard->parsed()) return cmd_standard(cfg, tableau_str);
        if (chr->parsed()) return cmd_char(cfg, mode);
        if (verify->parsed()) return cmd_verify(cfg, suite);
        if (crystal->parsed()) return cmd_crystal(cfg);
        if (lift->parsed()) return cmd_lift(cfg, tableau_str);
    } catch (const bs::ResourceBoundError& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
