#include "sharp/enumerate.hpp"
#include "sharp/errors.hpp"
#include "sharp/expr.hpp"
#include "sharp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace sharp;

std::string text(const Integer& c)
{
    std::ostringstream os;
    os << c;
    return os.str();
}

int eval_command(const std::string& input, const std::string& format)
{
    const expr::Value v = expr::parse_and_eval(input);
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [label, c] : expr::terms(v))
            out.push_back({{"label", label}, {"coefficient", text(c)}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << expr::render(v) << "\n";
    }
    return 0;
}

int count_perms(std::size_t max_n)
{
    const auto& ref = verify::reference_nonsecable_permutations();
    bool ok = true;
    std::vector<std::size_t> gens;
    std::vector<Integer> totals{1};
    std::cout << "n\tnonsecable\tnoninterval\tnon_internal_interval\treference\n";
    for (const auto& row : verify::permutation_generator_counts(max_n)) {
        const std::size_t i = row.n - 2;
        std::cout << row.n << '\t' << row.nonsecable << '\t' << row.noninterval << '\t' << row.non_internal_interval
                  << '\t';
        if (i < ref.size()) {
            std::cout << ref[i];
            ok = ok && row.nonsecable == ref[i] && row.noninterval == ref[i] && row.non_internal_interval == ref[i];
        } else {
            std::cout << '-';
        }
        std::cout << '\n';
        gens.push_back(row.nonsecable);
        totals.push_back(factorial(row.n));
    }
    if (max_n >= 2) {
        const bool series = verify::series_identity(gens, totals, max_n - 1);
        std::cout << "series identity mod t^" << max_n << ": " << (series ? "holds" : "FAILS") << '\n';
        ok = ok && series;
    }
    if (!ok)
        std::cout << "mismatch against the reference counts\n";
    return ok ? 0 : 1;
}

int count_packed(std::size_t max_n)
{
    const auto& ref_packed = verify::reference_packed_words();
    const auto& ref_ns = verify::reference_nonsecable_packed();
    bool ok = true;
    std::vector<std::size_t> gens;
    std::vector<Integer> totals;
    std::cout << "n\tpacked\tnonsecable\treference\n";
    for (const auto& row : verify::packed_word_counts(max_n)) {
        std::cout << row.n << '\t' << row.packed << '\t' << row.nonsecable << '\t';
        if (row.n - 1 < ref_packed.size())
            ok = ok && row.packed == ref_packed[row.n - 1];
        if (row.n >= 2 && row.n - 2 < ref_ns.size()) {
            std::cout << ref_ns[row.n - 2];
            ok = ok && row.nonsecable == ref_ns[row.n - 2];
        } else {
            std::cout << '-';
        }
        std::cout << '\n';
        if (row.n >= 2)
            gens.push_back(row.nonsecable);
        totals.push_back(row.packed);
    }
    if (max_n >= 2) {
        const bool series = verify::series_identity(gens, totals, max_n - 1);
        std::cout << "series identity mod t^" << max_n << ": " << (series ? "holds" : "FAILS") << '\n';
        ok = ok && series;
    }
    if (!ok)
        std::cout << "mismatch against the reference counts\n";
    return ok ? 0 : 1;
}

int report(const verify::Report& r)
{
    if (r.ok) {
        std::cout << "ok: " << r.checked << " pairs checked\n";
        return 0;
    }
    std::cout << "counterexample: " << r.counterexample << "\n";
    return 1;
}

int expand_command(const std::string& label, int alphabet)
{
    const auto e = expr::expand_value(expr::parse_and_eval(label), alphabet);
    std::vector<std::pair<std::string, Integer>> rows;
    for (const auto& [w, c] : e)
        rows.emplace_back(to_string(w), c);
    for (const auto& [w, c] : rows)
        std::cout << (c == 1 ? std::string() : text(c) + "·") << w << '\n';
    std::cout << rows.size() << " words\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"The # product on combinatorial Hopf algebras"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    auto* eval = app.add_subcommand("eval", "Evaluate an expression");
    eval->add_option("expr", input, "Expression such as \"G[1,3,2] # G[2,3,1]\"")->required();
    eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::size_t max_n = 7;
    auto* count = app.add_subcommand("count", "Generator counts");
    count->require_subcommand(1);
    auto* perms = count->add_subcommand("nonsecable-perms", "Non-secable permutations");
    perms->add_option("--max-n", max_n)->check(CLI::Range(2, 10));
    auto* packed = count->add_subcommand("nonsecable-packed", "Non-secable packed words");
    packed->add_option("--max-n", max_n)->check(CLI::Range(1, 8));

    std::string algebra;
    std::size_t max_deg = 5;
    auto* ver = app.add_subcommand("verify", "Exhaustive verification runs");
    ver->require_subcommand(1);
    auto* interval = ver->add_subcommand("interval", "Product supports against lattice intervals");
    interval->add_option("--algebra", algebra)->required()->check(CLI::IsMember({"fqsym", "wqsym"}, CLI::ignore_case));
    interval->add_option("--max-deg", max_deg);
    auto* oracle = ver->add_subcommand("oracle", "Combinatorial rules against the word realization");
    oracle->add_option("--algebra", algebra)->required();
    oracle->add_option("--max-deg", max_deg);

    int alphabet = 0;
    auto* expand = app.add_subcommand("expand", "List the word expansion of a basis element");
    expand->add_option("label", input)->required();
    expand->add_option("--alphabet", alphabet)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval)
            return eval_command(input, format);
        if (*perms)
            return count_perms(max_n);
        if (*packed)
            return count_packed(max_n);
        if (*interval) {
            const auto a = verify::parse_algebra(algebra);
            return report(*a == verify::Algebra::FQSym ? verify::interval_fqsym(max_deg)
                                                        : verify::interval_wqsym(max_deg));
        }
        if (*oracle) {
            const auto a = verify::parse_algebra(algebra);
            if (!a) {
                std::cerr << "unknown algebra: " << algebra << "\n";
                return 2;
            }
            return report(verify::oracle(*a, max_deg));
        }
        if (*expand)
            return expand_command(input, alphabet);
    } catch (const expr::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const expr::TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return 2;
    } catch (const expr::InvalidLabel& e) {
        std::cerr << "invalid label: " << e.what() << "\n";
        return 2;
    } catch (const NotInAlgebra& e) {
        std::cerr << "not in algebra: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
