#include "srujac/cli.hpp"

#include "srujac/constructions.hpp"
#include "srujac/jacobian.hpp"
#include "srujac/matroid.hpp"
#include "srujac/projection.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace srujac {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Eisenstein>& xs, const char* sep = ", ") {
    std::string s;
    for (const Eisenstein& x : xs) {
        if (!s.empty()) s += sep;
        s += to_string(x);
    }
    return s;
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
    std::string s;
    for (int x : xs) {
        if (!s.empty()) s += sep;
        s += std::to_string(x);
    }
    return s;
}

struct InputOpts {
    std::string file;
    std::string family;
};

void add_input(CLI::App* cmd, InputOpts& in, const std::string& suffix = "") {
    cmd->add_option("--file" + suffix, in.file, "matrix file (.hmat)");
    cmd->add_option("--family" + suffix, in.family, "family spec, e.g. u24 or t_r:4");
}

MatrixE load_matrix(const InputOpts& in) {
    if (in.file.empty() == in.family.empty())
        throw UsageError("provide exactly one of --file or --family per input");
    if (!in.file.empty()) return read_matrix_file(in.file);
    return gen_family(parse_family_spec(in.family)).matrix();
}

// Files validate at maximal (or full with --full); family reps keep the
// level the builder established unless --full upgrades them.
HRepresentation load_rep(const InputOpts& in, bool full) {
    if (in.file.empty() == in.family.empty())
        throw UsageError("provide exactly one of --file or --family per input");
    ValidationLevel want = full ? ValidationLevel::full : ValidationLevel::maximal;
    if (!in.file.empty()) return {read_matrix_file(in.file), want};
    HRepresentation rep = gen_family(parse_family_spec(in.family));
    if (full && rep.level() != ValidationLevel::full)
        return {rep.matrix(), ValidationLevel::full};
    return rep;
}

HRepresentation restrict_rows(const HRepresentation& rep) {
    if (rank(rep.matrix()) == rep.rows()) return rep;
    return HRepresentation::from_validated(full_row_rank_restriction(rep.matrix()),
                                           rep.level());
}

std::vector<Eisenstein> parse_vector(const std::string& text) {
    std::vector<Eisenstein> v;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? comma
                                                                        : comma - start);
        std::size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) throw UsageError("--vector: empty entry");
        std::size_t b = tok.find_last_not_of(" \t");
        v.push_back(parse_eisenstein(tok.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return v;
}

std::string matrix_text(const MatrixE& m) {
    std::ostringstream os;
    write_matrix(m, os);
    return os.str();
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    auto put = [&result](const std::string& k, const std::string& v) {
        result.payload.emplace_back(k, v);
    };
    auto line = [&result](const std::string& s) { result.report += s + "\n"; };

    CLI::App app{"Jacobians of sixth-root-of-unity matroids", "srujac"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "print the structured payload as JSON");

    InputOpts in1, in2;
    bool full = false;
    std::string level_text = "maximal";
    bool verify = false, count_only = false, verify_averaging = false;
    bool conjugate_second = false;
    int basepoint1 = 0, basepoint2 = 0;
    std::string output, family_spec, vector_text;

    CLI::App* c_validate = app.add_subcommand("validate", "check the H-matrix property");
    add_input(c_validate, in1);
    c_validate->add_option("--level", level_text, "entries | maximal | full")
        ->check(CLI::IsMember({"entries", "maximal", "full"}));
    c_validate->callback([&] {
        MatrixE m = load_matrix(in1);
        ValidationReport r = validate_h_matrix(m, parse_validation_level(level_text));
        put("level", to_string(r.level));
        put("minors_checked", std::to_string(r.minors_checked));
        put("result", r.ok ? "valid" : "invalid");
        line("level: " + to_string(r.level));
        line("minors checked: " + std::to_string(r.minors_checked));
        line(std::string("result: ") + (r.ok ? "valid" : "invalid"));
        if (r.violation) {
            put("violation", to_string(*r.violation));
            line("violation: " + to_string(*r.violation));
        }
        result.exit_code = r.ok ? 0 : 1;
    });

    CLI::App* c_jac = app.add_subcommand("jacobian", "canonical divisors of coker(MM^H)");
    add_input(c_jac, in1);
    c_jac->add_flag("--full", full, "fully validate file input");
    c_jac->add_flag("--verify", verify, "cross-check order against the basis count");
    c_jac->callback([&] {
        JacobianE j = jacobian_of(load_rep(in1, full));
        put("snf", join(j.divisors));
        put("divisors", join(j.nontrivial));
        put("jacobian", group_string(j.nontrivial));
        std::vector<Int> ab = abelianize(j);
        put("abelian", abelian_string(ab));
        put("order", j.order.str());
        line("snf: " + join(j.divisors));
        line("divisors: " + join(j.nontrivial));
        line("jacobian: " + group_string(j.nontrivial));
        line("abelian: " + abelian_string(ab));
        line("order: " + j.order.str());
        if (verify) {
            std::size_t count = enumerate_bases(j.rep).size();
            if (Int(count) * Int(count) != j.order)
                throw std::logic_error("order does not equal the squared basis count");
            put("bases", std::to_string(count));
            put("verified", "true");
            line("bases: " + std::to_string(count));
            line("verified: order = bases^2");
        }
    });

    CLI::App* c_bases = app.add_subcommand("bases", "enumerate bases");
    add_input(c_bases, in1);
    c_bases->add_flag("--full", full, "fully validate file input");
    c_bases->add_flag("--count", count_only, "print only the count");
    c_bases->callback([&] {
        std::vector<std::vector<int>> bs = enumerate_bases(restrict_rows(load_rep(in1, full)));
        put("count", std::to_string(bs.size()));
        line("count: " + std::to_string(bs.size()));
        if (!count_only) {
            std::string all;
            for (const std::vector<int>& b : bs) {
                line("basis: " + join(b));
                if (!all.empty()) all += ";";
                all += join(b);
            }
            put("bases", all);
        }
    });

    CLI::App* c_proj = app.add_subcommand("projection", "orthogonal projector onto the row space");
    add_input(c_proj, in1);
    c_proj->add_flag("--full", full, "fully validate file input");
    c_proj->add_flag("--verify-averaging", verify_averaging,
                     "check N = sum of N_B equals kappa * P");
    c_proj->callback([&] {
        HRepresentation rep = restrict_rows(load_rep(in1, full));
        MatrixQw p = projector(rep);
        put("size", std::to_string(p.rows()));
        line("P: " + std::to_string(p.rows()) + " x " + std::to_string(p.cols()) +
             " over Q(w)");
        if (verify_averaging) {
            AveragingResult ar = averaging_matrix(rep);
            put("kappa", ar.kappa.str());
            put("averaging", "verified");
            line("kappa: " + ar.kappa.str());
            line("averaging: N = " + ar.kappa.str() + "*P verified");
        } else {
            for (std::size_t i = 0; i < p.rows(); ++i) {
                std::string row;
                for (std::size_t j = 0; j < p.cols(); ++j)
                    row += (j ? " " : "") + to_string(p(i, j));
                line("row " + std::to_string(i + 1) + ": " + row);
            }
        }
    });

    CLI::App* c_twosum = app.add_subcommand("twosum", "2-sum of two representations");
    add_input(c_twosum, in1);
    add_input(c_twosum, in2, "2");
    c_twosum->add_flag("--full", full, "fully validate file inputs");
    c_twosum->add_option("--basepoint1", basepoint1, "basepoint label in the first input")
        ->required();
    c_twosum->add_option("--basepoint2", basepoint2, "basepoint label in the second input")
        ->required();
    c_twosum->add_flag("--conjugate-second", conjugate_second,
                       "conjugate the second input before gluing");
    c_twosum->add_option("--output", output, "write the result as .hmat");
    c_twosum->callback([&] {
        HRepresentation a = load_rep(in1, full);
        HRepresentation b = load_rep(in2, full);
        if (conjugate_second) b = conjugate_rep(b);
        HRepresentation s = two_sum(a, basepoint1, b, basepoint2);
        put("rank", std::to_string(s.rows()));
        put("size", std::to_string(s.cols()));
        put("level", to_string(s.level()));
        line("rank: " + std::to_string(s.rows()));
        line("size: " + std::to_string(s.cols()));
        line("level: " + to_string(s.level()));
        if (!output.empty()) {
            write_matrix_file(s.matrix(), output);
            put("written", output);
            line("written: " + output);
        } else {
            result.report += matrix_text(s.matrix());
        }
    });

    CLI::App* c_gen = app.add_subcommand("gen", "emit a built-in family");
    c_gen->add_option("--family", family_spec, "family spec, e.g. whirl:5")->required();
    c_gen->add_option("--output", output, "write the matrix as .hmat");
    c_gen->callback([&] {
        HRepresentation rep = gen_family(parse_family_spec(family_spec));
        put("family", family_spec);
        put("rank", std::to_string(rep.rows()));
        put("size", std::to_string(rep.cols()));
        put("level", to_string(rep.level()));
        line("family: " + family_spec);
        line("rank: " + std::to_string(rep.rows()));
        line("size: " + std::to_string(rep.cols()));
        line("level: " + to_string(rep.level()));
        if (!output.empty()) {
            write_matrix_file(rep.matrix(), output);
            put("written", output);
            line("written: " + output);
        } else {
            result.report += matrix_text(rep.matrix());
        }
    });

    CLI::App* c_cmp = app.add_subcommand("compare", "compare two Jacobians");
    add_input(c_cmp, in1);
    add_input(c_cmp, in2, "2");
    c_cmp->add_flag("--full", full, "fully validate file inputs");
    c_cmp->callback([&] {
        JacobianE x = jacobian_of(load_rep(in1, full));
        JacobianE y = jacobian_of(load_rep(in2, full));
        bool same_e = same_e_module(x, y);
        bool same_ab = abelianize(x) == abelianize(y);
        put("left", join(x.nontrivial));
        put("right", join(y.nontrivial));
        put("e_module", same_e ? "same" : "different");
        put("abelian", same_ab ? "same" : "different");
        line("left: " + group_string(x.nontrivial));
        line("right: " + group_string(y.nontrivial));
        line(std::string("E-module: ") + (same_e ? "same" : "different"));
        line(std::string("abelian: ") + (same_ab ? "same" : "different"));
    });

    CLI::App* c_class = app.add_subcommand("class", "coset of a vector in the Jacobian");
    add_input(c_class, in1);
    c_class->add_flag("--full", full, "fully validate file input");
    c_class->add_option("--vector", vector_text, "comma-separated entries, e.g. 1,0,w,0")
        ->required();
    c_class->callback([&] {
        JacobianE j = jacobian_of(load_rep(in1, full));
        std::vector<Eisenstein> v = parse_vector(vector_text);
        if (v.size() != j.rep.cols())
            throw UsageError("--vector needs " + std::to_string(j.rep.cols()) + " entries");
        std::vector<Eisenstein> cls = jacobian_class(j, v);
        put("class", join(cls));
        line("class: " + join(cls));
    });

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        result.report = app.help();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        result.report = std::string("usage error: ") + e.what() + "\n";
        result.payload.clear();
        result.payload.emplace_back("error", e.what());
        result.exit_code = 2;
    } catch (const UsageError& e) {
        result.report = std::string("usage error: ") + e.what() + "\n";
        result.payload.clear();
        result.payload.emplace_back("error", e.what());
        result.exit_code = 2;
    } catch (const std::exception& e) {
        result.report = std::string("error: ") + e.what() + "\n";
        result.payload.clear();
        result.payload.emplace_back("error", e.what());
        result.exit_code = 1;
    }
    result.json = json;
    return result;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CommandResult r = run_command(args);
    if (r.json) {
        nlohmann::ordered_json obj;
        for (const auto& [k, v] : r.payload) obj[k] = v;
        std::cout << obj.dump() << "\n";
    } else if (!r.report.empty()) {
        (r.exit_code == 0 ? std::cout : std::cerr) << r.report;
    }
    return r.exit_code;
}

}  // namespace srujac
