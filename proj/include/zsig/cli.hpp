#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zsig/verify.hpp"

// Command-line surface. Verbs: seq, factor, phi, primitive, verify, survey,
// char2-search. Output is deterministic for identical argv + seed: exit 0 on
// success / verified-in-range, 2 on a counterexample verdict, 1 on usage or
// parse errors.

namespace zsig::cli {

struct Options {
    std::string field_spec;
    std::string f_text, g_text, p_text, pi_text;
    long long n = -1;  // -1: not given
    uint32_t max_n = 40;
    std::string mode = "all-earlier";
    std::string seed_text;
    std::string format = "text";
    std::string statement;
    std::string out_path;
    bool include_deleted = false;
    bool with_factors = false;
    uint32_t count = 100;
    long deg_max = 3;

    bool has_f() const { return !f_text.empty(); }
    bool has_g() const { return !g_text.empty(); }
    bool has_p() const { return !p_text.empty(); }

    uint64_t seed() const {
        if (seed_text.empty()) return 0;
        try {
            return std::stoull(seed_text);
        } catch (const std::exception&) {
            throw error("invalid --seed value '" + seed_text + "'");
        }
    }

    StripMode strip_mode() const {
        if (mode == "all-earlier") return StripMode::all_earlier;
        if (mode == "divisors-only") return StripMode::divisors_only;
        throw error("invalid --mode '" + mode + "' (all-earlier | divisors-only)");
    }

    /// Canonical argv form of the parsed command; re-parsing it reproduces
    /// the same canonical form.
    std::vector<std::string> canonical_argv(const std::string& verb) const {
        std::vector<std::string> v{verb};
        auto push = [&](const char* flag, const std::string& value) {
            if (!value.empty()) {
                v.push_back(flag);
                v.push_back(value);
            }
        };
        push("--field", field_spec);
        push("--statement", statement);
        push("--f", f_text);
        push("--g", g_text);
        push("--P", p_text);
        push("--pi", pi_text);
        if (n >= 0) push("--n", std::to_string(n));
        push("--max-n", std::to_string(max_n));
        push("--mode", mode);
        push("--seed", std::to_string(seed()));
        push("--format", format);
        if (include_deleted) v.push_back("--include-deleted");
        if (with_factors) v.push_back("--factors");
        push("--out", out_path);
        return v;
    }
};

namespace detail_cli {

template <class Fn>
auto with_field(const std::string& spec, Fn&& fn) {
    AnyField f = make_field(spec);
    return std::visit(std::forward<Fn>(fn), f);
}

template <class Fn>
auto with_ext_field(const std::string& spec, Fn&& fn) {
    AnyField f = make_field(spec);
    if (auto* e = std::get_if<FpQuadExt>(&f)) return fn(*e);
    if (auto* e = std::get_if<RatQuadExt>(&f)) return fn(*e);
    throw error("a quadratic extension field is required (fp2:... | q-sqrt:... | q-ext:...)");
}

inline std::vector<uint32_t> index_range(const Options& o) {
    std::vector<uint32_t> idx;
    if (o.n >= 0) {
        require(o.n >= 1, "--n must be positive");
        idx.push_back(static_cast<uint32_t>(o.n));
    } else {
        for (uint32_t i = 1; i <= o.max_n; ++i) idx.push_back(i);
    }
    return idx;
}

template <class S, class K>
Report run_ord_statement(const S& seq, const K& k, const Options& o, uint64_t seed) {
    const uint32_t n = o.n >= 1 ? static_cast<uint32_t>(o.n) : 1;
    Poly<K> pi = Poly<K>::zero(k);
    if (!o.pi_text.empty()) {
        pi = parse_poly(o.pi_text, k);
    } else if constexpr (K::is_finite) {
        RngState rng(seed);
        auto fz = factor(seq.term(n), rng);
        require(!fz.factors.empty(), "term(n) is constant; no irreducible divisor to pick");
        pi = fz.factors.front().first;
    } else {
        throw error("--pi is required over characteristic-0 fields");
    }
    return verify_ord_lemma(seq, pi, n, o.max_n, seed);
}

inline Report run_verify(const Options& o, uint64_t seed) {
    const std::string& st = o.statement;
    require(!st.empty(), "verify requires --statement");
    if (o.has_p()) {
        return with_ext_field(o.field_spec, [&](const auto& e) -> Report {
            using ExtT = std::decay_t<decltype(e)>;
            using B = typename ExtT::Base;
            LucasSequence<B> seq(parse_poly(o.p_text, e));
            if (st == "lemma-2.2") return verify_strong_divisibility(seq, o.max_n, seed);
            if (st == "thm-2.6") return verify_zsigmondy(seq, o.max_n, o.include_deleted, seed);
            if (st == "lemma-2.1") return verify_lucas_coprime(seq, o.max_n, seed);
            if (st == "lemma-2.3") return verify_lucas_frobenius(seq, o.max_n, seed);
            if (st == "lemma-2.4") return verify_lucas_lhat(seq, o.max_n, seed);
            if (st == "lemma-2.5") return verify_lucas_double(seq, o.max_n, seed);
            if (st == "obs-1") return verify_observation1(seq, o.max_n, seed);
            throw error("statement '" + st + "' does not apply to a lucas spec");
        });
    }
    require(o.has_f(), "verify requires --f (and --g for the two-polynomial families) or --P");
    return with_field(o.field_spec, [&](const auto& k) -> Report {
        using K = std::decay_t<decltype(k)>;
        if (!o.has_g()) {
            BangSequence<K> seq(parse_poly(o.f_text, k));
            if (st == "lemma-1.4") return verify_strong_divisibility(seq, o.max_n, seed);
            if (st == "cor-1.5") return verify_zsigmondy(seq, o.max_n, o.include_deleted, seed);
            if (st == "lemma-1.1") return run_ord_statement(seq, k, o, seed);
            if (st == "obs-1") return verify_observation1(seq, o.max_n, seed);
            if (st == "obs-2") return verify_observation2(seq, o.max_n, seed);
            throw error("statement '" + st + "' does not apply to a bang spec (--f only)");
        }
        ZsigSequence<K> seq(parse_poly(o.f_text, k), parse_poly(o.g_text, k));
        if (st == "lemma-1.2") return verify_strong_divisibility(seq, o.max_n, seed);
        if (st == "thm-1.3") return verify_zsigmondy(seq, o.max_n, o.include_deleted, seed);
        if (st == "lemma-1.1") return run_ord_statement(seq, k, o, seed);
        if (st == "obs-1") return verify_observation1(seq, o.max_n, seed);
        if (st == "obs-2") return verify_observation2(seq, o.max_n, seed);
        if (st == "char2-remark") return verify_char2_remark(seq, o.max_n, seed);
        throw error("statement '" + st + "' does not apply to a zsigmondy spec");
    });
}

inline int emit_report(const Report& r, const Options& o, std::ostream& os) {
    if (o.format == "json")
        os << r.to_json().dump(2) << "\n";
    else if (o.format == "tsv")
        os << r.to_tsv() << "\n";
    else
        os << r.to_text();
    return r.verdict == "counterexample" ? 2 : 0;
}

template <class S>
int emit_terms(const S& seq, const Options& o, std::ostream& os) {
    for (uint32_t n : index_range(o)) {
        auto t = seq.term(n);
        if (o.format == "json")
            os << ojson{{"n", n}, {"term", print_poly(t)}}.dump() << "\n";
        else if (o.format == "tsv")
            os << n << "\t" << print_poly(t) << "\n";
        else
            os << "term(" << n << ") = " << print_poly(t) << "\n";
    }
    return 0;
}

template <class S, class K>
int emit_records(const S& seq, const K& k, const Options& o, std::ostream& os, bool tsv_default) {
    const std::string fmt = o.format == "text" && tsv_default ? "tsv" : o.format;
    RngState rng(o.seed());
    RngState* rng_ptr = nullptr;
    if constexpr (K::is_finite)
        rng_ptr = &rng;
    else
        require(!o.with_factors, "--factors: listing unsupported over characteristic 0");
    if (fmt == "tsv") os << "# spec\t" << seq.describe() << "\n" << record_tsv_header() << "\n";
    for (uint32_t n : index_range(o)) {
        auto rec = make_primitive_record(seq, n, o.strip_mode(), o.with_factors ? rng_ptr : nullptr);
        if (fmt == "json")
            os << record_json(rec, k).dump() << "\n";
        else if (fmt == "tsv")
            os << record_tsv(rec) << "\n";
        else
            os << "n=" << n << (rec.skipped ? " (skipped)" : "") << " deg=" << rec.term_degree
               << " primitive_part=" << print_poly(rec.primitive_part) << "\n";
    }
    return 0;
}

template <class Body>
int dispatch_seq_like(const Options& o, Body&& body) {
    if (o.has_p())
        return with_ext_field(o.field_spec, [&](const auto& e) {
            using ExtT = std::decay_t<decltype(e)>;
            using B = typename ExtT::Base;
            LucasSequence<B> seq(parse_poly(o.p_text, e));
            return body(seq, seq.field());
        });
    require(o.has_f(), "a sequence needs --f [--g] or --P");
    return with_field(o.field_spec, [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if (o.has_g()) {
            ZsigSequence<K> seq(parse_poly(o.f_text, k), parse_poly(o.g_text, k));
            return body(seq, k);
        }
        BangSequence<K> seq(parse_poly(o.f_text, k));
        return body(seq, k);
    });
}

}  // namespace detail_cli

/// Run the CLI on plain args (no program name). Output goes to `out`,
/// diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"polynomial power-difference sequences: terms, factorizations,"
                 " primitive parts and statement verification",
                 "zsig"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--field", o.field_spec, "coefficient field: fp:<p> | q | q-sqrt:<d> | "
                                                 "fp2:<p>:<s>:<t> | q-ext:<sn>/<sd>:<tn>/<td>");
        sub->add_option("--f", o.f_text, "polynomial f");
        sub->add_option("--g", o.g_text, "polynomial g (with --f: the pair family f^n - g^n)");
        sub->add_option("--P", o.p_text, "extension polynomial P (lucas family)");
        sub->add_option("--n", o.n, "single index n");
        sub->add_option("--max-n", o.max_n, "sweep bound N (default 40)");
        sub->add_option("--mode", o.mode, "stripping mode: all-earlier | divisors-only");
        sub->add_option("--seed", o.seed_text, "64-bit RNG seed")->envname("ZSIG_SEED");
        sub->add_option("--format", o.format, "output format: text | json | tsv")
            ->check(CLI::IsMember({"text", "json", "tsv"}));
        sub->add_option("--out", o.out_path, "write output to a file instead of stdout");
    };

    CLI::App* seq_cmd = app.add_subcommand("seq", "print sequence terms");
    add_common(seq_cmd);
    CLI::App* factor_cmd = app.add_subcommand("factor", "factor --f over a finite field");
    add_common(factor_cmd);
    CLI::App* phi_cmd = app.add_subcommand("phi", "homogeneous cyclotomic value Phi_n(f, g)");
    add_common(phi_cmd);
    CLI::App* primitive_cmd =
        app.add_subcommand("primitive", "primitive-part records per index");
    add_common(primitive_cmd);
    primitive_cmd->add_flag("--factors", o.with_factors, "factor the primitive part (finite fields)");
    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a statement over a range");
    add_common(verify_cmd);
    verify_cmd->add_option("--statement", o.statement,
                           "one of lemma-1.1 lemma-1.2 thm-1.3 lemma-1.4 cor-1.5 obs-1 obs-2 "
                           "lemma-2.1 lemma-2.2 lemma-2.3 lemma-2.4 lemma-2.5 thm-2.6 char2-remark");
    verify_cmd->add_option("--pi", o.pi_text, "irreducible divisor for the valuation statements");
    verify_cmd->add_flag("--include-deleted", o.include_deleted,
                         "keep indices divisible by the characteristic (negative control)");
    CLI::App* survey_cmd = app.add_subcommand("survey", "TSV sweep of primitive-part records");
    add_common(survey_cmd);
    survey_cmd->add_flag("--factors", o.with_factors, "factor the primitive part (finite fields)");
    CLI::App* char2_cmd =
        app.add_subcommand("char2-search", "randomized characteristic-2 campaign");
    add_common(char2_cmd);
    char2_cmd->add_option("--count", o.count, "number of sampled coprime pairs");
    char2_cmd->add_option("--deg-max", o.deg_max, "degree bound for sampled polynomials");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    std::ofstream out_file;
    std::ostream* os = &out;
    try {
        if (!o.out_path.empty()) {
            out_file.open(o.out_path);
            require(out_file.good(), "cannot open --out file '" + o.out_path + "'");
            os = &out_file;
        }
        require(!o.field_spec.empty(), "--field is required");
        const uint64_t seed = o.seed();
        using namespace detail_cli;

        if (seq_cmd->parsed()) {
            return dispatch_seq_like(o, [&](const auto& seq, const auto&) {
                return emit_terms(seq, o, *os);
            });
        }
        if (factor_cmd->parsed()) {
            require(o.has_f(), "factor requires --f");
            return with_field(o.field_spec, [&](const auto& k) {
                auto f = parse_poly(o.f_text, k);
                RngState rng(seed);
                auto fz = factor(f, rng);
                if (o.format == "json")
                    *os << factorization_json(fz, k).dump(2) << "\n";
                else if (o.format == "tsv") {
                    for (const auto& [poly, mult] : fz.factors)
                        *os << print_poly(poly) << "\t" << mult << "\n";
                } else
                    *os << to_string(fz, k) << "\n";
                return 0;
            });
        }
        if (phi_cmd->parsed()) {
            require(o.n >= 1, "phi requires --n");
            const auto n = static_cast<uint64_t>(o.n);
            if (o.has_p()) {
                return with_ext_field(o.field_spec, [&](const auto& e) {
                    auto p = parse_poly(o.p_text, e);
                    *os << print_poly(phi_lucas(n, p, coeff_map_sigma(p))) << "\n";
                    return 0;
                });
            }
            require(o.has_f() && o.has_g(), "phi requires --f and --g (or --P)");
            return with_field(o.field_spec, [&](const auto& k) {
                *os << print_poly(phi_homog(n, parse_poly(o.f_text, k), parse_poly(o.g_text, k)))
                    << "\n";
                return 0;
            });
        }
        if (primitive_cmd->parsed() || survey_cmd->parsed()) {
            const bool tsv_default = survey_cmd->parsed();
            return dispatch_seq_like(o, [&](const auto& seq, const auto& k) {
                return emit_records(seq, k, o, *os, tsv_default);
            });
        }
        if (verify_cmd->parsed()) {
            return emit_report(run_verify(o, seed), o, *os);
        }
        if (char2_cmd->parsed()) {
            return with_field(o.field_spec, [&](const auto& k) -> int {
                using K = std::decay_t<decltype(k)>;
                if constexpr (K::is_finite) {
                    Report r = explore_char2(k, o.deg_max, o.count, o.max_n, RngState(seed));
                    return emit_report(r, o, *os);
                } else {
                    throw error("char2-search requires a finite field of characteristic 2");
                }
            });
        }
        throw error("no subcommand given");
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

}  // namespace zsig::cli
