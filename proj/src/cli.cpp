#include "alcomega/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "alcomega/corpus.hpp"
#include "alcomega/hyperset.hpp"
#include "alcomega/model.hpp"
#include "alcomega/parser.hpp"
#include "alcomega/printer.hpp"
#include "alcomega/reasoner.hpp"
#include "alcomega/settrans.hpp"
#include "alcomega/translate.hpp"

namespace alcomega::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 64;
constexpr int kData = 65;
constexpr int kNoInput = 66;
constexpr int kInternal = 70;

struct FileError : Error {
    using Error::Error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write file: " + path);
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// ── translate ───────────────────────────────────────────────────────────────

int cmd_translate(const std::string& input, const std::string& output,
                  const std::string& to, const std::string& format,
                  bool expand, const std::string& query_text) {
    KnowledgeBase K = parse_kb(slurp(input));
    if (to == "alcoi" || to == "alc-neg" || to == "lc-omega") {
        KnowledgeBase out;
        if (to == "alcoi")
            out = translate_kb_T(K).kb;
        else if (to == "alc-neg")
            out = translate_kb_Tneg(K).kb;
        else
            out = encode_lc(K).first.kb;
        spill(output, render(out));
        return kOk;
    }
    // Ω-formula targets need the query that shapes the theorem.
    if (query_text.empty()) {
        std::cerr << "--to " << to << " requires --query\n";
        return kUsage;
    }
    Query F = parse_query(query_text);
    FormPtr f;
    if (to == "set-alc")
        f = emit_alc_theorem(K, F);
    else if (to == "set-lc")
        f = emit_lc_theorem(K, F);
    else
        f = translate_star(K, F);
    spill(output, format == "tptp" ? to_tptp(f) : to_sexp(f, expand) + "\n");
    return kOk;
}

// ── decide ──────────────────────────────────────────────────────────────────

std::string verdict_line(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::Entailed: return "Entailed (" + v.proof_source + ")";
        case VerdictKind::NotEntailed:
            return "NotEntailed (witness pool size " +
                   std::to_string(v.witness ? v.witness->pool.size() : 0) +
                   ")";
        case VerdictKind::Unknown: return "Unknown (" + v.note + ")";
    }
    return "?";
}

int verdict_code(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::Entailed: return 0;
        case VerdictKind::NotEntailed: return 1;
        case VerdictKind::Unknown: return 2;
    }
    return 2;
}

int cmd_decide(const std::string& input, const std::string& query_text,
               const std::string& query_file, const std::string& mode,
               int bound, std::uint64_t seed, const std::string& witness_out) {
    KnowledgeBase K = parse_kb(slurp(input));
    SearchConfig cfg;
    cfg.max_domain = bound;
    cfg.seed = seed;
    cfg.mode = mode == "direct" ? SearchMode::Direct
               : mode == "translated" ? SearchMode::Translated
                                      : SearchMode::Both;

    if (!query_file.empty()) {
        // Batch mode: one statement per non-empty, non-comment line; TSV out.
        std::istringstream in(slurp(query_file));
        std::string line;
        while (std::getline(in, line)) {
            std::string trimmed = line;
            trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
            if (trimmed.empty() || trimmed[0] == '#') continue;
            Verdict v = decide(K, parse_query(trimmed), cfg);
            const char* name = v.kind == VerdictKind::Entailed ? "Entailed"
                               : v.kind == VerdictKind::NotEntailed
                                   ? "NotEntailed"
                                   : "Unknown";
            std::cout << trimmed << "\t" << name << "\n";
        }
        return kOk;
    }
    if (query_text.empty()) {
        std::cerr << "decide requires --query or --query-file\n";
        return kUsage;
    }
    Verdict v = decide(K, parse_query(query_text), cfg);
    std::cout << verdict_line(v) << "\n";
    if (!witness_out.empty() && v.witness)
        spill(witness_out, to_json(*v.witness));
    return verdict_code(v);
}

// ── check-model ─────────────────────────────────────────────────────────────

int cmd_check_model(const std::string& model_path, const std::string& kb_path,
                    const std::string& query_text) {
    Interpretation I = interpretation_from_json(slurp(model_path));
    auto violations = validate_interpretation(I);
    if (!violations.empty()) {
        for (const auto& msg : violations) std::cerr << msg << "\n";
        return kData;
    }
    KnowledgeBase K = parse_kb(slurp(kb_path));
    CheckReport rep = check_kb(I, K);
    std::cout << rep.summary();
    bool ok = rep.all_satisfied();
    if (!query_text.empty()) {
        bool q = check_query(I, parse_query(query_text));
        std::cout << "query: " << (q ? "satisfied" : "violated") << "\n";
        ok = ok && q;
    }
    return ok ? kOk : 1;
}

// ── solve-sets / emit-dot ───────────────────────────────────────────────────

int cmd_solve_sets(const std::string& path, bool keep_duplicates) {
    SolveResult res = solve_equations(parse_equations(slurp(path)),
                                      keep_duplicates);
    std::cout << "well-founded: " << (res.well_founded ? "yes" : "no") << "\n";
    for (NodeId n : res.graph.nodes) {
        std::cout << "node " << n;
        auto at = res.graph.atoms.find(n);
        if (at != res.graph.atoms.end()) {
            std::cout << " = atom '" << at->second << "'\n";
            continue;
        }
        std::cout << " = {";
        bool first = true;
        for (NodeId s : res.graph.successors(n)) {
            std::cout << (first ? " " : ", ") << s;
            first = false;
        }
        std::cout << (first ? "}" : " }") << "\n";
    }
    for (const auto& [var, n] : res.var_node)
        std::cout << var << " -> node " << n << "\n";
    return kOk;
}

int cmd_emit_dot(const std::string& path) {
    if (ends_with(path, ".json")) {
        std::cout << to_dot(interpretation_from_json(slurp(path)));
        return kOk;
    }
    SolveResult res = solve_equations(parse_equations(slurp(path)));
    std::cout << to_dot(res.graph, &res.var_node);
    return kOk;
}

// ── roundtrip ───────────────────────────────────────────────────────────────

struct Tally {
    int pass = 0, fail = 0, skipped = 0;
    void note(bool ok) { ok ? ++pass : ++fail; }
};

void roundtrip_case(const KnowledgeBase& K, std::mt19937& rng, Tally& lift,
                    Tally& collapse, Tally& encode) {
    TranslationOutput T = translate_kb_T(K);
    auto I = random_model(rng, K, 5);

    if (I) {
        try {
            Interpretation I2 = lift_model(*I, K, T);
            lift.note(check_kb(I2, T.kb).all_satisfied());
        } catch (const Error&) {
            lift.note(false);
        }
    } else {
        ++lift.skipped;
    }

    bool collapsed = false;
    for (int n = 1; n <= 6 && !collapsed; ++n) {
        auto J = find_model_alcoi(T.kb, std::nullopt, n);
        if (!J) continue;
        collapsed = true;
        try {
            CollapsedModel col = collapse_model(*J, K, T);
            collapse.note(check_kb(col.model, K).all_satisfied());
        } catch (const Error&) {
            collapse.note(false);
        }
    }
    if (!collapsed) ++collapse.skipped;

    if (I) {
        try {
            auto [enc, none] = encode_lc(K);
            (void)none;
            EncodedModel em = encode_model(K, *I, enc);
            bool ok = true;
            for (const auto& ax : K.all_axioms())
                for (const ConceptPtr& C : {ax.c, ax.d}) {
                    if (!C) continue;
                    auto direct = eval_concept(*I, C);
                    auto image =
                        eval_concept(em.J, encode_concept_E(enc, C));
                    for (NodeId d : I->pool)
                        if (direct.count(d) !=
                            image.count(em.m.at(d)))
                            ok = false;
                }
            encode.note(ok);
        } catch (const Error&) {
            encode.note(false);
        }
    } else {
        ++encode.skipped;
    }
}

int cmd_roundtrip(const std::string& kb_path, int trials,
                  std::uint64_t seed) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    Tally lift, collapse, encode;
    roundtrip_case(parse_kb(slurp(kb_path)), rng, lift, collapse, encode);
    for (int t = 0; t < trials; ++t)
        roundtrip_case(random_kb(rng), rng, lift, collapse, encode);
    auto line = [](const char* label, const Tally& t) {
        std::cout << label << ": " << t.pass << " pass, " << t.fail
                  << " fail, " << t.skipped << " skipped\n";
    };
    line("lift      (model of K -> model of K^T)", lift);
    line("collapse  (model of K^T -> model of K)", collapse);
    line("encode    (model transport through the role-free encoding)",
         encode);
    return (lift.fail + collapse.fail + encode.fail) == 0 ? kOk : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"alcomega — ALC with power-set concepts and memberships"};
    app.require_subcommand(1);

    // translate
    std::string t_in, t_out, t_to, t_format = "sexp", t_query;
    bool t_expand = false;
    auto* t = app.add_subcommand("translate", "Translate a KB");
    t->add_option("input", t_in)->required();
    t->add_option("output", t_out);
    t->add_option("--to", t_to)
        ->required()
        ->check(CLI::IsMember({"alcoi", "alc-neg", "lc-omega", "set-alc",
                               "set-lc", "set-star"}));
    t->add_option("--format", t_format)
        ->check(CLI::IsMember({"sexp", "tptp"}));
    t->add_flag("--expand-inter", t_expand,
                "expand intersections into differences");
    t->add_option("--query", t_query, "query statement (set-* targets)");

    // decide
    std::string d_in, d_query, d_query_file, d_mode = "both", d_witness;
    int d_bound = 6;
    std::uint64_t d_seed = 0;
    auto* d = app.add_subcommand("decide", "Decide entailment of a query");
    d->add_option("input", d_in)->required();
    d->add_option("--query", d_query);
    d->add_option("--query-file", d_query_file);
    d->add_option("--mode", d_mode)
        ->check(CLI::IsMember({"direct", "translated", "both"}));
    d->add_option("--bound", d_bound);
    d->add_option("--seed", d_seed);
    d->add_option("--emit-witness", d_witness);

    // check-model
    std::string c_model, c_kb, c_query;
    auto* c = app.add_subcommand("check-model", "Check a model against a KB");
    c->add_option("model", c_model)->required();
    c->add_option("kb", c_kb)->required();
    c->add_option("--query", c_query);

    // solve-sets
    std::string s_in;
    bool s_keep = false;
    auto* s = app.add_subcommand("solve-sets", "Solve set equations");
    s->add_option("input", s_in)->required();
    s->add_flag("--keep-duplicates", s_keep);

    // emit-dot
    std::string e_in;
    auto* e = app.add_subcommand("emit-dot", "DOT export");
    e->add_option("input", e_in)->required();

    // roundtrip
    std::string r_in;
    int r_trials = 25;
    std::uint64_t r_seed = 1;
    auto* r = app.add_subcommand("roundtrip",
                                 "Model-transport harnesses on random KBs");
    r->add_option("kb", r_in)->required();
    r->add_option("--trials", r_trials);
    r->add_option("--seed", r_seed);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);  // CLI11 consumes reversed argument lists
    } catch (const CLI::CallForHelp& h) {
        return app.exit(h);
    } catch (const CLI::ParseError& err) {
        std::cerr << err.what() << "\n";
        return kUsage;
    }

    try {
        if (t->parsed())
            return cmd_translate(t_in, t_out, t_to, t_format, t_expand,
                                 t_query);
        if (d->parsed())
            return cmd_decide(d_in, d_query, d_query_file, d_mode, d_bound,
                              d_seed, d_witness);
        if (c->parsed()) return cmd_check_model(c_model, c_kb, c_query);
        if (s->parsed()) return cmd_solve_sets(s_in, s_keep);
        if (e->parsed()) return cmd_emit_dot(e_in);
        if (r->parsed()) return cmd_roundtrip(r_in, r_trials, r_seed);
    } catch (const FileError& err) {
        std::cerr << err.what() << "\n";
        return kNoInput;
    } catch (const Conflict& err) {
        std::cerr << "internal consistency failure: " << err.what() << "\n";
        return kInternal;
    } catch (const Error& err) {
        std::cerr << err.what() << "\n";
        return kData;
    }
    return kUsage;
}

}  // namespace alcomega::cli
