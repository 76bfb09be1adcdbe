#include "utfree/automata.hpp"
#include "utfree/decider.hpp"
#include "utfree/encoder.hpp"
#include "utfree/json_io.hpp"
#include "utfree/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace utfree;

constexpr std::size_t kDimensionCap = 1u << 14;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    return j;
}

// Dimension the monomial-by-monomial compilation will produce.
std::size_t compiled_dimension(const Polynomial& p) {
    if (p.terms().empty()) return 2;
    std::size_t total = 0;
    for (const auto& [exps, coeff] : p.terms()) {
        std::size_t degree = 0;
        for (auto e : exps) degree += e;
        std::size_t dim = degree == 0 ? 2 : 1;
        for (std::size_t i = 0; i < degree; ++i) dim *= 2 * p.arity();
        total += dim;
    }
    return total;
}

int cmd_decide(const std::string& input, bool with_witness, bool as_json) {
    const Instance inst = instance_from_json(load_json(input));
    try {
        inst.validate();
    } catch (const UnsupportedInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    const Verdict v = decide(inst);
    if (as_json) {
        std::cout << verdict_to_json(v).dump(2) << "\n";
        return 0;
    }
    std::cout << (v.injective ? "injective" : "not injective") << " (branch "
              << branch_name(v.branch) << ")\n";
    if (with_witness && v.witness) {
        auto print = [](const std::vector<unsigned long>& e) {
            std::ostringstream os;
            for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
            return os.str();
        };
        std::cout << "witness: (" << print(v.witness->left) << ") vs ("
                  << print(v.witness->right) << ")\n";
    }
    return 0;
}

int cmd_automaton(const std::string& base_text, const std::string& digits_text,
                  const std::string& dot_path) {
    const auto r = parse_rational(base_text);
    if (!r) throw ParseError("malformed base: " + base_text);
    std::set<BigInt> digits;
    std::stringstream ss(digits_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto d = parse_rational(item);
        if (!d || !is_integer(*d)) throw ParseError("digits must be integers, got " + item);
        digits.insert(numerator(*d));
    }
    if (digits.empty()) throw ParseError("empty digit list");
    const auto nfa = equal_value_acceptor_msd(*r, digits);
    std::cout << "states: " << nfa.state_count() << "\n";
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw ParseError("cannot open " + dot_path);
        write_dot<PairLetter>(out, nfa, [](const PairLetter& l) { return letter_text(l); });
    }
    return 0;
}

int cmd_encode(const std::string& poly_path, const std::string& eval_text,
               const std::string& out_path) {
    const Polynomial p = polynomial_from_json(load_json(poly_path));
    if (!p.integer_coefficients())
        throw ParseError("polynomial must have integer coefficients");
    if (compiled_dimension(p) > kDimensionCap) {
        std::cerr << "error: compiled dimension " << compiled_dimension(p)
                  << " exceeds the cap " << kDimensionCap << "\n";
        return 4;
    }
    const Gadget g = compile(p);
    if (out_path.empty()) {
        std::cout << gadget_to_json(g).dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open " + out_path);
        out << gadget_to_json(g).dump(2) << "\n";
    }
    if (!eval_text.empty()) {
        std::vector<unsigned long> point;
        std::stringstream ss(eval_text);
        std::string item;
        while (std::getline(ss, item, ',')) point.push_back(std::stoul(item));
        if (point.size() != p.arity()) throw ParseError("--eval needs one value per variable");
        std::vector<BigInt> big(point.begin(), point.end());
        std::cout << "gadget: " << evaluate_gadget(g, point)
                  << ", polynomial: " << p.evaluate(big) << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& input, unsigned long bound) {
    // The exhaustive search is defined for singular z-matrices too, so no
    // validate() here: only `decide` restricts to nonsingular ones.
    const Instance inst = instance_from_json(load_json(input));
    std::cout << collision_report_to_json(search_collisions(inst, bound)).dump(2) << "\n";
    return 0;
}

int cmd_lemma7(const std::string& poly_path, unsigned long a, unsigned long bound) {
    const Polynomial p = polynomial_from_json(load_json(poly_path));
    if (!p.integer_coefficients())
        throw ParseError("polynomial must have integer coefficients");
    const auto collision = lemma7_check(p, a, bound);
    json j{{"a", a}, {"bound", bound}};
    j["collision"] =
        collision ? json{{"left", collision->left}, {"right", collision->right}} : json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"freeness of upper-triangular 2x2 rational matrix morphisms on bounded languages"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread count (0 = default)");

    std::string input, base_text, digits_text, dot_path, poly_path, eval_text, out_path;
    bool with_witness = false, as_json = false;
    unsigned long bound = 6, a_value = 1;

    auto* decide_cmd = app.add_subcommand("decide", "decide injectivity on L_t");
    decide_cmd->add_option("--input", input, "instance JSON file")->required();
    decide_cmd->add_flag("--witness", with_witness, "print a collision witness if any");
    decide_cmd->add_flag("--json", as_json, "emit the verdict as JSON");

    auto* automaton_cmd = app.add_subcommand("automaton", "build the equal-value automaton");
    automaton_cmd->add_option("--base", base_text, "rational base U/V")->required();
    automaton_cmd->add_option("--digits", digits_text, "comma-separated integer digits")->required();
    automaton_cmd->add_option("--dot", dot_path, "write DOT to this file");

    auto* encode_cmd = app.add_subcommand("encode", "compile a polynomial to a matrix gadget");
    encode_cmd->add_option("--poly", poly_path, "polynomial JSON file")->required();
    encode_cmd->add_option("--eval", eval_text, "evaluate at comma-separated point");
    encode_cmd->add_option("--out", out_path, "write gadget JSON here instead of stdout");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive collision search");
    oracle_cmd->add_option("--input", input, "instance JSON file")->required();
    oracle_cmd->add_option("--bound", bound, "exponent bound (default 6)");

    auto* lemma7_cmd = app.add_subcommand("lemma7", "bounded collision search for the Q combination");
    lemma7_cmd->add_option("--poly", poly_path, "polynomial JSON file")->required();
    lemma7_cmd->add_option("--a", a_value, "first-variable value")->required();
    lemma7_cmd->add_option("--bound", bound, "search bound (default 6)");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (decide_cmd->parsed()) return cmd_decide(input, with_witness, as_json);
        if (automaton_cmd->parsed()) return cmd_automaton(base_text, digits_text, dot_path);
        if (encode_cmd->parsed()) return cmd_encode(poly_path, eval_text, out_path);
        if (oracle_cmd->parsed()) return cmd_oracle(input, bound);
        if (lemma7_cmd->parsed()) return cmd_lemma7(poly_path, a_value, bound);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadBase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
