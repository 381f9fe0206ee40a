#include "CLI11.hpp"
#include "milnor/report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace milnor;

int main(int argc, char** argv) {
    CLI::App app{"mlverify: exact verification suites for Milnor lattice symmetry groups"};
    app.require_subcommand(1);
    app.fallthrough();

    long p = 3, q = 3, r = 3, m = 2, l = 5, target = 2, bound = 6, samples = 100;
    std::uint64_t seed = 20260826;
    std::string name = "Q12", format = "text", out, fault;

    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out, "write the report to a file instead of stdout");
    app.add_option("--inject-fault", fault,
                   "force the first assertion whose id contains this string to fail");

    auto* c_tpqr = app.add_subcommand("tpqr", "structure checks for one T_pqr lattice");
    c_tpqr->add_option("--p", p)->required();
    c_tpqr->add_option("--q", q)->required();
    c_tpqr->add_option("--r", r)->required();

    auto* c_exc = app.add_subcommand("exceptional", "checks for one exceptional family");
    c_exc->add_option("--name", name, "Z12, Q12, U12, Z18, Q16 or U16")->required();

    auto* c_lem = app.add_subcommand("lemma42", "hermitian norm-equation enumeration");
    c_lem->add_option("--m", m)->required();
    c_lem->add_option("--l", l)->required();
    c_lem->add_option("--target", target);

    auto* c_gam = app.add_subcommand("gamma", "congruence-subgroup lift criterion");
    c_gam->add_option("--p", p)->required();
    c_gam->add_option("--q", q)->required();
    c_gam->add_option("--r", r)->required();
    c_gam->add_option("--bound", bound, "entry bound for the exhaustive box");
    c_gam->add_option("--samples", samples, "number of seeded generator words");
    c_gam->add_option("--seed", seed, "splitmix64 seed");

    app.add_subcommand("kaenders", "branch recovery from curve intersection data");

    auto* c_all = app.add_subcommand("all", "every suite over the canonical family list");
    c_all->add_option("--seed", seed, "splitmix64 seed");

    CLI11_PARSE(app, argc, argv);

    Report rep;
    auto start = std::chrono::steady_clock::now();
    try {
        std::string sub = app.get_subcommands()[0]->get_name();
        if (sub == "tpqr")
            rep = cmd_tpqr(p, q, r);
        else if (sub == "exceptional")
            rep = cmd_exceptional(name);
        else if (sub == "lemma42")
            rep = cmd_lemma42(m, l, Int(target));
        else if (sub == "gamma")
            rep = cmd_gamma(p, q, r, bound, samples, seed);
        else if (sub == "kaenders")
            rep = cmd_kaenders();
        else
            rep = cmd_all(seed);
    } catch (const KappaTooLarge& e) {
        std::cerr << "data unavailable: " << e.what() << "\n";
        return 3;
    } catch (const UnknownFamily& e) {
        std::cerr << "data unavailable: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedCase& e) {
        std::cerr << "data unavailable: " << e.what() << "\n";
        return 3;
    } catch (const NotSimpleElliptic& e) {
        std::cerr << "data unavailable: " << e.what() << "\n";
        return 3;
    } catch (const CatalogError& e) {
        std::cerr << "data unavailable: " << e.what() << "\n";
        return 3;
    } catch (const HypothesesFail& e) {
        std::cerr << "data unavailable: " << e.what() << "\n";
        return 3;
    } catch (const NoSolution& e) {
        std::cerr << "data unavailable: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    }
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();

    if (!fault.empty() && !inject_fault(rep, fault)) {
        std::cerr << "no assertion id contains: " << fault << "\n";
        return 1;
    }

    std::string body = format == "json" ? rep.json() : rep.text();
    if (out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write: " << out << "\n";
            return 1;
        }
        f << body;
    }
    return rep.pass() ? 0 : 2;
}
