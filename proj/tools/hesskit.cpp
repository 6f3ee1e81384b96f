// Command-line front end for the hesskit library.
//
// Exit codes: 0 success, 1 a verification found a failure, 2 invalid input,
// 3 size cap exceeded, 4 monomial outside the basis.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hesskit/hesskit.hpp"

using namespace hesskit;
using io::json;

namespace {

struct Options {
    std::string h;
    std::string mu;
    std::string monomial;
    std::string filling;
    std::string format = "plain";
    std::string kind;
    int max_n = default_max_n;
    int all_n = 0;
    bool check = false;
};

HessenbergFunction need_h(const Options& o)
{
    if (o.h.empty())
        throw InvalidInput("--h is required");
    return HessenbergFunction::make(io::parse_int_list(o.h));
}

Shape need_mu(const Options& o)
{
    if (o.mu.empty())
        throw InvalidInput("--mu is required");
    return io::parse_shape(o.mu);
}

void need_same_size(const HessenbergFunction& h, const Shape& mu)
{
    if (h.n() != mu.size())
        throw InvalidInput("h has n = " + std::to_string(h.n()) + " but mu has " + std::to_string(mu.size())
                           + " boxes");
}

void need_format(const Options& o, std::initializer_list<std::string_view> allowed)
{
    for (auto f : allowed)
        if (o.format == f)
            return;
    throw InvalidInput("format '" + o.format + "' is not available for this command");
}

std::string poincare_text(const std::vector<std::uint64_t>& b)
{
    std::string out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        const std::string c = std::to_string(b[k]);
        if (k == 0)
            out += c;
        else {
            const std::string t = k == 1 ? "t^2" : "t^" + std::to_string(2 * k);
            out += b[k] == 1 ? t : c + "*" + t;
        }
    }
    return out.empty() ? "0" : out;
}

void print_monomials(const std::vector<Monomial>& ms, const Options& o)
{
    if (o.format == "json") {
        json j = json::array();
        for (const auto& m : ms)
            j.push_back(io::to_json(m));
        std::cout << j.dump() << "\n";
        return;
    }
    for (const auto& m : ms)
        std::cout << io::to_string(m) << "\n";
}

int cmd_fillings(const Options& o)
{
    need_format(o, {"plain", "json"});
    const auto h = need_h(o);
    const auto mu = need_mu(o);
    need_same_size(h, mu);
    const auto fs = enumerate_fillings(h, mu, o.max_n);
    if (o.format == "json") {
        json j = json::array();
        for (const auto& t : fs)
            j.push_back(io::filling_record_json(h, t));
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& t : fs)
            std::cout << io::filling_record(h, t) << "\n";
    }
    return 0;
}

int cmd_betti(const Options& o)
{
    need_format(o, {"plain", "json"});
    const auto h = need_h(o);
    const auto mu = need_mu(o);
    need_same_size(h, mu);
    const auto b = betti_numbers(h, mu, o.max_n);
    std::vector<int> bi(b.begin(), b.end());
    if (o.format == "json") {
        json j;
        j["betti"] = b;
        j["poincare"] = poincare_text(b);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << io::join(bi) << "\n" << poincare_text(b) << "\n";
    }
    return 0;
}

template <class Payload>
void print_tree(const io::TreeView<Payload>& view, const Options& o)
{
    if (o.format == "dot")
        std::cout << io::to_dot(view);
    else if (o.format == "json")
        std::cout << io::to_json(view).dump() << "\n";
    else
        std::cout << io::to_plain(view);
}

int cmd_tree(const Options& o)
{
    need_format(o, {"plain", "json", "dot"});
    if (o.kind == "gp" || o.kind == "modified-gp") {
        if (!o.h.empty())
            throw InvalidInput("--kind " + o.kind + " takes --mu, not --h");
        const auto mu = need_mu(o);
        if (o.kind == "gp") {
            const auto t = springer::build_gp_tree(mu, o.max_n);
            print_tree(io::gp_view(t), o);
        } else {
            const auto t = springer::build_modified_gp_tree(mu, o.max_n);
            print_tree(io::modified_gp_view(t), o);
        }
        return 0;
    }
    if (o.kind == "h" || o.kind == "h-tableau") {
        if (!o.mu.empty())
            throw InvalidInput("--kind " + o.kind + " takes --h, not --mu");
        const auto h = need_h(o);
        if (o.kind == "h") {
            const auto t = regnilp::build_h_tree(h, o.max_n);
            print_tree(io::h_view(t), o);
        } else {
            const auto t = regnilp::build_h_tableau_tree(h, o.max_n);
            print_tree(io::h_tableau_view(h, t), o);
        }
        return 0;
    }
    throw InvalidInput("--kind must be gp, modified-gp, h or h-tableau");
}

int cmd_ideal(const Options& o)
{
    need_format(o, {"plain", "json"});
    const auto h = need_h(o);
    check_size(h.n(), o.max_n);
    const auto g = poly::jh_generators(h);
    const auto lts = poly::leading_monomials(g);
    std::optional<poly::SPairFailure> failure;
    if (o.check)
        failure = poly::groebner_failure(g);

    if (o.format == "json") {
        json j;
        j["generators"] = json::array();
        for (const auto& p : g)
            j["generators"].push_back(io::to_json(p));
        j["leading_terms"] = json::array();
        for (const auto& m : lts)
            j["leading_terms"].push_back(io::to_json(m));
        if (o.check)
            j["groebner"] = !failure.has_value();
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& p : g)
            std::cout << io::to_string(p) << "\n";
        std::cout << "leading terms: ";
        for (std::size_t k = 0; k < lts.size(); ++k)
            std::cout << (k ? ", " : "") << io::to_string(lts[k]);
        std::cout << "\n";
        if (o.check) {
            if (failure)
                std::cout << "groebner: no, S(g" << failure->first + 1 << ", g" << failure->second + 1
                          << ") leaves " << io::to_string(failure->remainder) << "\n";
            else
                std::cout << "groebner: yes\n";
        }
    }
    return o.check && failure ? 1 : 0;
}

int cmd_basis(const Options& o)
{
    need_format(o, {"plain", "json"});
    if (!o.h.empty() && !o.mu.empty())
        throw InvalidInput("basis takes either --h or --mu");
    if (!o.h.empty()) {
        const auto h = need_h(o);
        check_size(h.n(), o.max_n);
        print_monomials(regnilp::b_h_basis(h), o);
    } else {
        print_monomials(springer::garsia_procesi_basis(need_mu(o), o.max_n), o);
    }
    return 0;
}

int cmd_phi(const Options& o)
{
    need_format(o, {"plain", "json"});
    const auto h = need_h(o);
    if (o.filling.empty())
        throw InvalidInput("--filling is required");
    const auto t = io::parse_filling(o.filling);
    if (!o.mu.empty() && !(need_mu(o) == t.shape()))
        throw InvalidInput("filling does not have shape mu");
    need_same_size(h, t.shape());
    if (o.format == "json")
        std::cout << io::filling_record_json(h, t).dump() << "\n";
    else
        std::cout << io::filling_record(h, t) << "\n";
    return 0;
}

void print_filling(const Filling& t, const Options& o)
{
    if (o.format == "json")
        std::cout << io::to_json(t).dump() << "\n";
    else
        std::cout << io::to_string(t) << "\n";
}

int cmd_psi(const Options& o)
{
    need_format(o, {"plain", "json"});
    const auto mu = need_mu(o);
    check_size(mu.size(), o.max_n);
    if (o.monomial.empty())
        throw InvalidInput("--monomial is required");
    print_filling(springer::psi(mu, io::parse_monomial(o.monomial, mu.size())), o);
    return 0;
}

int cmd_psih(const Options& o)
{
    need_format(o, {"plain", "json"});
    const auto h = need_h(o);
    check_size(h.n(), o.max_n);
    if (o.monomial.empty())
        throw InvalidInput("--monomial is required");
    print_filling(regnilp::psi_h(h, io::parse_monomial(o.monomial, h.n())), o);
    return 0;
}

/// Every identity for one h; returns an empty string when all hold.
std::string check_identities(const HessenbergFunction& h, int max_n)
{
    std::ostringstream why;
    const auto r = regnilp::verify_counts(h, max_n);
    if (!r.consistent())
        why << " fillings=" << r.fillings << " leaves=" << r.leaves << " prod_nu=" << r.prod_nu
            << " prod_beta=" << r.prod_beta << " A_h=B_h:" << (r.a_equals_b ? "yes" : "no");
    auto nu = nu_tuple(h);
    const DegreeTuple degrees(h);
    std::vector<int> beta(degrees.by_index().begin(), degrees.by_index().end());
    std::sort(nu.begin(), nu.end());
    std::sort(beta.begin(), beta.end());
    if (nu != beta)
        why << " multiset(nu) != multiset(beta)";
    return why.str();
}

int cmd_verify(const Options& o)
{
    need_format(o, {"plain", "json"});
    if (o.all_n > 0) {
        if (!o.h.empty())
            throw InvalidInput("verify takes either --h or --all-n");
        check_size(o.all_n, o.max_n);
        int checked = 0;
        int failures = 0;
        json bad = json::array();
        for (const auto& h : all_hessenberg_functions(o.all_n)) {
            ++checked;
            const auto why = check_identities(h, o.max_n);
            if (why.empty())
                continue;
            ++failures;
            const std::vector<int> hv(h.values().begin(), h.values().end());
            if (o.format == "plain")
                std::cout << "FAIL h=(" << io::join(hv) << "):" << why << "\n";
            bad.push_back(hv);
        }
        if (o.format == "json") {
            json j;
            j["checked"] = checked;
            j["failures"] = bad;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << checked << " functions checked, " << failures << " failures\n";
        }
        return failures == 0 ? 0 : 1;
    }

    const auto h = need_h(o);
    const auto r = regnilp::verify_counts(h, o.max_n);
    const auto why = check_identities(h, o.max_n);
    if (o.format == "json") {
        json j;
        j["fillings"] = r.fillings;
        j["leaves"] = r.leaves;
        j["prod_nu"] = r.prod_nu;
        j["prod_beta"] = r.prod_beta;
        j["a_equals_b"] = r.a_equals_b;
        j["ok"] = why.empty();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "fillings " << r.fillings << ", leaves " << r.leaves << ", prod nu " << r.prod_nu
                  << ", prod beta " << r.prod_beta << ", A_h = B_h " << (r.a_equals_b ? "yes" : "no") << "\n";
        std::cout << (why.empty() ? "ok" : "FAIL:" + why) << "\n";
    }
    return why.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fillings, trees and bases for Springer and regular nilpotent Hessenberg varieties"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    Options o;

    app.add_option("--max-n", o.max_n, "largest n for enumerations and trees")
        ->envname("HESSKIT_MAX_N")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "plain, json or dot")->check(CLI::IsMember({"plain", "json", "dot"}));

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();
        return sub;
    };

    auto* fillings = add_common(app.add_subcommand("fillings", "list (h,mu)-fillings with dimension pairs and phi"));
    fillings->add_option("--h", o.h, "Hessenberg function, e.g. 1,3,3")->required();
    fillings->add_option("--mu", o.mu, "row lengths, e.g. 2,1")->required();

    auto* betti = add_common(app.add_subcommand("betti", "Betti numbers and Poincare polynomial"));
    betti->add_option("--h", o.h)->required();
    betti->add_option("--mu", o.mu)->required();

    auto* tree = add_common(app.add_subcommand("tree", "GP-trees and h-trees"));
    tree->add_option("--kind", o.kind, "gp, modified-gp, h or h-tableau")->required();
    tree->add_option("--h", o.h);
    tree->add_option("--mu", o.mu);

    auto* ideal = add_common(app.add_subcommand("ideal", "generators of J_h"));
    ideal->add_option("--h", o.h)->required();
    ideal->add_flag("--check", o.check, "run the Buchberger S-pair test");

    auto* basis = add_common(app.add_subcommand("basis", "B_h (with --h) or B(mu) (with --mu)"));
    basis->add_option("--h", o.h);
    basis->add_option("--mu", o.mu);

    auto* phi = add_common(app.add_subcommand("phi", "dimension pairs and monomial of one filling"));
    phi->add_option("--h", o.h)->required();
    phi->add_option("--mu", o.mu);
    phi->add_option("--filling", o.filling, "rows separated by '/', e.g. 12/3")->required();

    auto* psi = add_common(app.add_subcommand("psi", "filling of mu for a monomial in B(mu)"));
    psi->add_option("--mu", o.mu)->required();
    psi->add_option("--monomial", o.monomial, "e.g. x3*x4^2*x5*x6")->required();

    auto* psih = add_common(app.add_subcommand("psih", "one-row filling for a monomial in B_h"));
    psih->add_option("--h", o.h)->required();
    psih->add_option("--monomial", o.monomial)->required();

    auto* verify = add_common(app.add_subcommand("verify", "check the counting identities"));
    verify->add_option("--h", o.h);
    verify->add_option("--all-n", o.all_n, "check every Hessenberg function of this size")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*fillings)
            return cmd_fillings(o);
        if (*betti)
            return cmd_betti(o);
        if (*tree)
            return cmd_tree(o);
        if (*ideal)
            return cmd_ideal(o);
        if (*basis)
            return cmd_basis(o);
        if (*phi)
            return cmd_phi(o);
        if (*psi)
            return cmd_psi(o);
        if (*psih)
            return cmd_psih(o);
        if (*verify)
            return cmd_verify(o);
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotInBasis& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
