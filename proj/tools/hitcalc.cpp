// hitcalc: command-line front end for the hit-problem calculator.
//
// Exit codes: 0 ok, 2 parse error, 3 size cap exceeded, 4 domain
// precondition violated.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitcalc/blocks.hpp"
#include "hitcalc/cohit.hpp"
#include "hitcalc/poly.hpp"
#include "hitcalc/repro.hpp"
#include "hitcalc/splice.hpp"
#include "hitcalc/steenrod.hpp"
#include "hitcalc/tableaux.hpp"

using nlohmann::json;
using namespace hitcalc;

namespace {

json monomial_json(const Monomial& m) { return json(m.exponents()); }

json poly_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& m : p.terms()) arr.push_back(monomial_json(m));
    return arr;
}

json tableau_json(const Tableau& t) {
    json arr = json::array();
    for (const auto& row : t.rows()) arr.push_back(row);
    return arr;
}

struct Options {
    std::string format = "text";
    bool json_out() const { return format == "json"; }
};

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.json_out())
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Minimal generating sets for the polynomial algebra over the mod-2 "
                 "Steenrod algebra: cohit dimensions, bases, block straightening and "
                 "tableau counts"};
    app.require_subcommand(1);

    Options opt;
    std::size_t cap = size_cap();
    app.add_option("--cap", cap, "column cap for hit-space construction")->capture_default_str();

    // ---- cohit ----
    auto* cohit_cmd = app.add_subcommand("cohit", "cohit dimensions, bases and hit tests");
    cohit_cmd->require_subcommand(1);
    unsigned cohit_n = 0, cohit_d = 0;
    std::string poly_text;

    auto* dim_cmd = cohit_cmd->add_subcommand("dim", "dimension of Q^d(n)");
    dim_cmd->add_option("--n", cohit_n, "number of variables")->required();
    dim_cmd->add_option("--d", cohit_d, "degree")->required();
    dim_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* basis_cmd = cohit_cmd->add_subcommand("basis", "monomial basis of Q^d(n)");
    basis_cmd->add_option("--n", cohit_n, "number of variables")->required();
    basis_cmd->add_option("--d", cohit_d, "degree")->required();
    basis_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* ishit_cmd = cohit_cmd->add_subcommand("is-hit", "test hit membership");
    ishit_cmd->add_option("--n", cohit_n, "number of variables")->required();
    ishit_cmd->add_option("--poly", poly_text, "polynomial, e.g. x1^2*x2+x1*x2^2")->required();
    ishit_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ---- straighten ----
    auto* str_cmd = app.add_subcommand("straighten",
                                       "rewrite a descending-omega block as a sum of "
                                       "semistandard blocks");
    unsigned str_n = 0;
    std::string block_text;
    str_cmd->add_option("--n", str_n, "number of rows")->required();
    str_cmd->add_option("--block", block_text, "rows of 0/1 digits separated by '/'")->required();
    str_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ---- steinberg ----
    auto* stb_cmd = app.add_subcommand("steinberg",
                                       "check cohit_dim and the hook count at d = 2^n-n-1");
    unsigned stb_n = 0;
    stb_cmd->add_option("--n", stb_n, "number of variables")->required();
    stb_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ---- spectrum ----
    auto* spec_cmd = app.add_subcommand("spectrum", "cohit_dim(n, d) for d = 0..dmax");
    unsigned spec_n = 0, spec_dmax = 0;
    spec_cmd->add_option("--n", spec_n, "number of variables")->required();
    spec_cmd->add_option("--dmax", spec_dmax, "maximum degree")->required();
    spec_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ---- ssyt ----
    auto* ssyt_cmd = app.add_subcommand("ssyt", "semistandard Young tableaux");
    ssyt_cmd->require_subcommand(1);
    std::string shape_text;
    unsigned ssyt_m = 0;
    auto* ssyt_count = ssyt_cmd->add_subcommand("count", "count by the hook formula");
    ssyt_count->add_option("--shape", shape_text, "partition, e.g. 3,2,1")->required();
    ssyt_count->add_option("--m", ssyt_m, "largest allowed entry")->required();
    ssyt_count->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    auto* ssyt_list = ssyt_cmd->add_subcommand("list", "enumerate the tableaux");
    ssyt_list->add_option("--shape", shape_text, "partition, e.g. 3,2,1")->required();
    ssyt_list->add_option("--m", ssyt_m, "largest allowed entry")->required();
    ssyt_list->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ---- hook ----
    auto* hook_cmd = app.add_subcommand("hook", "hook-formula tableau count");
    hook_cmd->add_option("--shape", shape_text, "partition, e.g. 3,2,1")->required();
    hook_cmd->add_option("--m", ssyt_m, "largest allowed entry")->required();
    hook_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ---- omega-dim ----
    auto* om_cmd = app.add_subcommand("omega-dim", "dimension of the omega-filtered quotient");
    unsigned om_n = 0, om_d = 0;
    std::string omega_text;
    om_cmd->add_option("--n", om_n, "number of variables")->required();
    om_cmd->add_option("--d", om_d, "degree")->required();
    om_cmd->add_option("--omega", omega_text, "omega-vector, e.g. 1,3")->required();
    om_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ---- mu ----
    auto* mu_cmd = app.add_subcommand("mu", "least k with d a sum of k terms 2^a - 1");
    unsigned long long mu_d = 0;
    mu_cmd->add_option("d", mu_d, "the number")->required();
    mu_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ---- repro ----
    auto* repro_cmd = app.add_subcommand("repro", "run the full verification battery");
    bool repro_long = false;
    repro_cmd->add_flag("--long", repro_long, "include the long-running n=5 Steinberg check");
    repro_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);
    size_cap() = cap;

    if (dim_cmd->parsed()) {
        std::size_t dim = cohit_dim(cohit_n, cohit_d);
        emit(opt, {{"n", cohit_n}, {"d", cohit_d}, {"dim", dim}}, std::to_string(dim));
    } else if (basis_cmd->parsed()) {
        auto basis = cohit_basis(cohit_n, cohit_d);
        json jmons = json::array();
        std::string text;
        for (const auto& m : basis) {
            jmons.push_back(monomial_json(m));
            if (!text.empty()) text += "\n";
            text += render(m);
        }
        emit(opt, {{"n", cohit_n}, {"d", cohit_d}, {"dim", basis.size()}, {"basis", jmons}},
             text.empty() ? "(empty)" : text);
    } else if (ishit_cmd->parsed()) {
        Polynomial p = parse_poly(poly_text, cohit_n);
        bool hit = is_hit(p);
        emit(opt, {{"n", cohit_n}, {"poly", poly_json(p)}, {"hit", hit}},
             hit ? "hit" : "not hit");
    } else if (str_cmd->parsed()) {
        Block b = Block::parse(block_text, str_n);
        BlockSum s = straighten(b); // throws DomainError on non-descending omega
        json jblocks = json::array();
        std::string text;
        for (const auto& g : s.blocks()) {
            jblocks.push_back(g.render());
            if (!text.empty()) text += " + ";
            text += g.render();
        }
        if (s.is_zero()) text = "0";
        bool certified = false, cert_ok = false;
        if (descending_omegas(b.degree(), str_n).size() == 1) {
            Polynomial diff = s.to_polynomial();
            diff.toggle(b.monomial());
            certified = true;
            cert_ok = is_hit(diff);
            text += cert_ok ? "\ncertificate: equivalent to input modulo hits (oracle OK)"
                            : "\ncertificate: FAILED";
        }
        json j = {{"n", str_n},
                  {"input", b.render()},
                  {"blocks", jblocks},
                  {"omega", b.omega().entries()}};
        if (certified) j["certified_equivalent"] = cert_ok;
        emit(opt, j, text);
        if (certified && !cert_ok) return 1;
    } else if (stb_cmd->parsed()) {
        unsigned d = (1u << stb_n) - stb_n - 1;
        unsigned long long expected = 1ULL << (stb_n * (stb_n - 1) / 2);
        std::size_t dim = cohit_dim(stb_n, d);
        unsigned long long count = hook_count(Partition::staircase(stb_n), stb_n);
        bool pass = dim == expected && count == expected;
        emit(opt,
             {{"n", stb_n},
              {"d", d},
              {"cohit_dim", dim},
              {"hook_count", count},
              {"expected", expected},
              {"pass", pass}},
             "d=" + std::to_string(d) + " dim=" + std::to_string(dim) + " count=" +
                 std::to_string(count) + (pass ? " PASS" : " FAIL"));
        if (!pass) return 1;
    } else if (spec_cmd->parsed()) {
        auto table = spectrum(spec_n, spec_dmax);
        json jrows = json::array();
        std::string text;
        for (const auto& e : table) {
            if (e.dim)
                jrows.push_back({{"d", e.d}, {"dim", *e.dim}});
            else
                jrows.push_back({{"d", e.d}, {"dim", nullptr}});
            if (!text.empty()) text += "\n";
            text += std::to_string(e.d) + "\t" + (e.dim ? std::to_string(*e.dim) : "(cap exceeded)");
        }
        emit(opt, {{"n", spec_n}, {"spectrum", jrows}}, text);
    } else if (ssyt_count->parsed() || hook_cmd->parsed()) {
        Partition shape = Partition::parse(shape_text);
        unsigned long long count = hook_count(shape, ssyt_m);
        emit(opt, {{"shape", shape.parts()}, {"m", ssyt_m}, {"count", count}},
             std::to_string(count));
    } else if (ssyt_list->parsed()) {
        Partition shape = Partition::parse(shape_text);
        auto tabs = enumerate_ssyt(shape, ssyt_m);
        json jt = json::array();
        std::string text;
        for (const auto& t : tabs) {
            jt.push_back(tableau_json(t));
            if (!text.empty()) text += "\n";
            text += t.render();
        }
        emit(opt, {{"shape", shape.parts()}, {"m", ssyt_m}, {"count", tabs.size()},
                   {"tableaux", jt}},
             text.empty() ? "(none)" : text);
    } else if (om_cmd->parsed()) {
        OmegaVector w = OmegaVector::parse(omega_text);
        std::size_t dim = omega_quotient_dim(om_n, om_d, w);
        emit(opt, {{"n", om_n}, {"d", om_d}, {"omega", w.entries()}, {"dim", dim}},
             std::to_string(dim));
    } else if (mu_cmd->parsed()) {
        unsigned v = mu(mu_d);
        emit(opt, {{"d", mu_d}, {"mu", v}}, std::to_string(v));
    } else if (repro_cmd->parsed()) {
        auto results = repro::run_all(repro_long);
        bool all = true;
        json jr = json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            jr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            if (!opt.json_out())
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail
                          << "\n";
        }
        if (opt.json_out())
            std::cout << json({{"pass", all}, {"criteria", jr}}).dump() << "\n";
        else
            std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << "\n";
        if (!all) return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SizeCapError& e) {
        std::cerr << "size cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
