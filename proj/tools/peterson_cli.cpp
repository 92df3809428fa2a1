// peterson: batch front end for the Peterson Schubert calculus library.

#include "peterson/peterson.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

namespace {

using namespace peterson;

struct Common {
    std::string type;
    std::string format = "table";
    bool bundled_words = false;
    unsigned threads = 1;
    std::string data_dir = default_data_dir().string();
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("type", c.type, "Lie type and rank, e.g. C3, E8")->required();
    cmd->add_option("--format", c.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_flag("--paper-words", c.bundled_words, "use the bundled reduced words for w_K");
    cmd->add_option("--threads", c.threads, "worker threads for table construction")->check(CLI::Range(1u, 256u));
    cmd->add_option("--data-dir", c.data_dir, "directory holding the bundled word files");
}

std::shared_ptr<const PetersonSystem> make_system(const Common& c) {
    const LieType t = parse_lie_type(c.type);
    if (!c.bundled_words) return std::make_shared<const PetersonSystem>(t);
    const std::filesystem::path dir = c.data_dir;
    return std::make_shared<const PetersonSystem>(t, [dir](LieType sub) { return bundled_longest_word(sub, dir); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Schubert calculus on Peterson varieties"};
    app.require_subcommand(1);

    Common common;
    std::string k_text;
    std::string word_text;
    int i_index = 0;
    bool every_subset = false;

    auto* basis = app.add_subcommand("basis", "localization matrix p_{v_J}(w_K)");
    add_common(basis, common);

    auto* monk_cmd = app.add_subcommand("monk", "Monk expansion of p_{s_i} * p_{v_K}");
    add_common(monk_cmd, common);
    monk_cmd->add_option("--i", i_index, "simple index i")->required();
    monk_cmd->add_option("--K", k_text, "subset, e.g. 1,2,3 or all")->required();

    auto* giam = app.add_subcommand("giambelli", "Giambelli constants C_K");
    add_common(giam, common);
    auto* k_opt = giam->add_option("--K", k_text, "subset, e.g. 1,2,3 or all");
    auto* all_flag = giam->add_flag("--all", every_subset, "certificates for every subset");
    k_opt->excludes(all_flag);

    auto* heights = app.add_subcommand("heights", "heights of r(j, w) along a reduced word");
    add_common(heights, common);
    heights->add_option("--word", word_text, "reduced word, e.g. 3,2,3,1,2,3,1,2,1");

    auto* scan = app.add_subcommand("scan", "non-integral Monk coefficients");
    add_common(scan, common);

    CLI11_PARSE(app, argc, argv);

    try {
        const OutputFormat fmt = parse_output_format(common.format);
        std::string out;
        if (basis->parsed()) {
            auto sys = make_system(common);
            out = render(basis_table(LocalizationTable(sys, common.threads)), fmt);
        } else if (monk_cmd->parsed()) {
            auto sys = make_system(common);
            const Subset k = parse_subset(k_text, sys->rank());
            out = render(monk(*sys, i_index, k), fmt);
        } else if (giam->parsed()) {
            if (!every_subset && k_text.empty()) throw std::invalid_argument("giambelli needs --K or --all");
            auto sys = make_system(common);
            std::vector<GiambelliCertificate> certs;
            if (every_subset) {
                const LocalizationTable table(sys, common.threads);
                for (Subset k : sys->subsets()) certs.push_back(giambelli(table, k));
            } else {
                certs.push_back(giambelli(*sys, parse_subset(k_text, sys->rank())));
            }
            out = render(certs, fmt);
        } else if (heights->parsed()) {
            const LieType t = parse_lie_type(common.type);
            const RootSystem rs(t);
            Word w;
            if (!word_text.empty())
                w = parse_word(word_text);
            else if (common.bundled_words)
                w = bundled_longest_word(t, common.data_dir);
            else
                w = canonical_word(rs, longest_element(rs, Subset::full(rs.rank())));
            out = render(heights_list(rs, w), fmt);
        } else if (scan->parsed()) {
            auto sys = make_system(common);
            const LocalizationTable table(sys, common.threads);
            out = render_scan(sys->root_system().lie_type(), scan_nonintegral(table), fmt);
        }
        std::cout << out;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
