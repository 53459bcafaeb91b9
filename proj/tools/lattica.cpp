// Command-line front end: evaluate construction expressions or JSON
// documents, list congruences, classify, run the registered structural
// checks, emit graphviz, and cross-check the congruence engine against the
// exhaustive oracle.
//
// Exit codes: 0 success / verified, 1 a check or cross-check was refuted
// (witness on stdout), 2 bad input (diagnostics on stderr).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lattica/congruence.hpp"
#include "lattica/dot.hpp"
#include "lattica/dsl.hpp"
#include "lattica/json_io.hpp"
#include "lattica/report.hpp"
#include "lattica/verify.hpp"

namespace {

struct InputOpts {
    std::string expr;
    std::string file;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
    auto* e = cmd->add_option("--expr", in.expr, "construction expression");
    auto* f = cmd->add_option("--file", in.file,
                              "file holding a JSON document (first character '{') or an expression");
    e->excludes(f);
}

lattica::Structure load_input(const InputOpts& in) {
    std::string text;
    bool from_file = false;
    if (!in.file.empty()) {
        std::ifstream is(in.file);
        if (!is) throw lattica::Error("cannot open " + in.file);
        std::ostringstream buf;
        buf << is.rdbuf();
        text = buf.str();
        from_file = true;
    } else if (!in.expr.empty()) {
        text = in.expr;
    } else {
        throw lattica::Error("no input: pass --expr or --file");
    }
    if (from_file) {
        size_t i = text.find_first_not_of(" \t\r\n");
        if (i != std::string::npos && text[i] == '{') return lattica::load_json(text);
    }
    return lattica::eval_text(text);
}

std::vector<int> fixed_constants(const lattica::Structure& s, const std::string& fix) {
    const lattica::FiniteLattice& L = lattice_of(s);
    if (fix.empty()) return {};
    if (fix == "0") return {L.bottom()};
    if (fix == "01") return {L.bottom(), L.top()};
    throw lattica::Error("--fix takes 0 or 01, got " + fix);
}

int do_con(const lattica::Structure& s, const std::string& signame, const std::string& fix,
           bool list) {
    std::optional<lattica::Sig> sig = lattica::sig_from_name(signame);
    if (!sig) throw lattica::Error("unknown signature: " + signame);
    lattica::StructureReport r = lattica::summarize(s, {*sig}, fixed_constants(s, fix));
    for (const lattica::CongruenceSummary& c : r.congruences) {
        std::cout << "congruences[" << lattica::sig_name(c.sig);
        if (!c.fixed.empty()) {
            std::cout << ", fixing";
            for (int x : c.fixed) std::cout << ' ' << x;
        }
        std::cout << "]: " << c.count << "\n";
        if (list)
            for (const std::string& line : c.listing) std::cout << "  " << line << "\n";
    }
    return 0;
}

int do_verify(const std::string& id) {
    std::vector<lattica::TheoremOutcome> outcomes;
    if (id == "all")
        outcomes = lattica::run_all_theorems();
    else
        outcomes.push_back(lattica::run_theorem(id));
    bool ok = true;
    for (const lattica::TheoremOutcome& o : outcomes) {
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << o.id << ": " << o.detail << "\n";
        ok = ok && o.ok;
    }
    return ok ? 0 : 1;
}

int do_oracle_check(const lattica::Structure& s, int max_n) {
    const auto* iv = std::get_if<lattica::InvolutionStructure>(&s);
    std::vector<lattica::Sig> sigs = {lattica::Sig::LAT};
    if (iv) sigs.push_back(lattica::Sig::ILAT);
    if (iv && iv->brouwer) sigs.push_back(lattica::Sig::BZ);

    bool ok = true;
    for (lattica::Sig sig : sigs) {
        lattica::AlgebraRef A = iv ? lattica::make_algebra(*iv, sig)
                                   : lattica::make_algebra(std::get<lattica::FiniteLattice>(s), sig);
        lattica::CongruenceSet fast = lattica::all_congruences(A);
        lattica::CongruenceSet slow = lattica::brute_force_congruences(A, max_n);
        if (fast.members == slow.members) {
            std::cout << lattica::sig_name(sig) << ": " << fast.size()
                      << " congruences, oracle agrees\n";
            continue;
        }
        ok = false;
        for (const lattica::Partition& p : slow.members)
            if (!std::binary_search(fast.members.begin(), fast.members.end(), p))
                std::cout << lattica::sig_name(sig) << ": engine misses " << p.text() << "\n";
        for (const lattica::Partition& p : fast.members)
            if (!std::binary_search(slow.members.begin(), slow.members.end(), p))
                std::cout << lattica::sig_name(sig) << ": engine invents " << p.text() << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite lattice and congruence toolkit"};
    app.require_subcommand(1);

    InputOpts eval_in, con_in, classify_in, dot_in, oracle_in;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate input and print its JSON document");
    add_input_flags(eval_cmd, eval_in);

    CLI::App* con_cmd = app.add_subcommand("con", "count (and list) congruences");
    add_input_flags(con_cmd, con_in);
    std::string signame = "lat";
    std::string fix;
    bool list = false;
    con_cmd->add_option("--sig", signame, "signature: lat, blat, ilat, bilat, bz")
        ->default_str("lat");
    con_cmd->add_option("--fix", fix, "keep constants in singleton classes: 0 or 01");
    con_cmd->add_flag("--list", list, "print every congruence");

    CLI::App* classify_cmd = app.add_subcommand("classify", "print the structural report");
    add_input_flags(classify_cmd, classify_in);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run registered structural checks");
    std::string check_id;
    verify_cmd->add_option("id", check_id, "check id, or 'all'")->required();

    CLI::App* dot_cmd = app.add_subcommand("dot", "emit the graphviz covering diagram");
    add_input_flags(dot_cmd, dot_in);

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle-check", "compare the engine against exhaustive enumeration");
    add_input_flags(oracle_cmd, oracle_in);
    int max_n = lattica::kOracleDefaultMax;
    if (const char* env = std::getenv("LATTICA_ORACLE_MAX")) {
        int v = std::atoi(env);
        if (v > 0) max_n = v;
    }
    oracle_cmd->add_option("--max-n", max_n, "largest universe the oracle will enumerate")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) {
            std::cout << lattica::to_json(load_input(eval_in));
            return 0;
        }
        if (con_cmd->parsed()) return do_con(load_input(con_in), signame, fix, list);
        if (classify_cmd->parsed()) {
            lattica::StructureReport r = lattica::summarize(load_input(classify_in), {}, {});
            std::cout << lattica::render_text(r, false);
            return 0;
        }
        if (verify_cmd->parsed()) return do_verify(check_id);
        if (dot_cmd->parsed()) {
            std::cout << lattica::to_dot(load_input(dot_in));
            return 0;
        }
        if (oracle_cmd->parsed()) return do_oracle_check(load_input(oracle_in), max_n);
    } catch (const lattica::SyntaxError& e) {
        std::cerr << "syntax error at offset " << e.pos << ": " << e.what() << "\n";
        return 2;
    } catch (const lattica::EvalError& e) {
        std::cerr << "evaluation error at offset " << e.pos << ": " << e.what() << "\n";
        return 2;
    } catch (const lattica::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
