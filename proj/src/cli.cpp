#include "u5/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "u5/detection.hpp"
#include "u5/io.hpp"
#include "u5/transitive.hpp"

namespace u5 {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
}

std::string vertex_list(const VertexSet& s) {
    std::string r;
    for (int v = s.first(); v != -1; v = s.next(v)) {
        if (!r.empty()) r += ' ';
        r += 'v' + std::to_string(v);
    }
    return r;
}

int cmd_gen(const std::string& family, int n, bool n_given, std::uint64_t seed,
            const std::string& out_path, std::ostream& out) {
    Tournament t;
    if (family == "Q7") {
        t = gen_family(Family::Q7, 0);
    } else {
        if (!n_given) throw InputError("family '" + family + "' requires a size parameter");
        if (family == "T") t = gen_family(Family::T, n);
        else if (family == "U") t = gen_family(Family::U, n);
        else if (family == "W") t = gen_family(Family::W, n);
        else if (family == "P") t = gen_family(Family::P, n);
        else if (family == "I") t = gen_family(Family::I, n);
        else if (family == "extremalG") t = gen_extremal(n);
        else if (family == "random") t = gen_random(n, seed);
        else if (family == "random-u5free") t = gen_random_u5free(n, seed);
        else throw InputError("unknown family '" + family + "'");
    }
    emit(render_tournament(t), out_path, out);
    return 0;
}

int cmd_certify(const std::string& in_path, const std::string& out_path, std::ostream& out) {
    Tournament t = parse_tournament(read_file(in_path));
    Certificate cert = certify_u5_status(t);
    std::string doc = render_certificate(cert);
    if (cert.certifies_free()) {
        out << "U5-FREE\n";
    } else {
        out << "CONTAINS-U5";
        for (int v : cert.as_forbidden()->embedding.image) out << " v" << v;
        out << "\n";
    }
    out << doc;
    if (!out_path.empty()) write_file(out_path, doc);
    return 0;
}

int cmd_verify_cert(const std::string& tour_path, const std::string& cert_path, std::ostream& out) {
    Tournament t = parse_tournament(read_file(tour_path));
    Certificate cert = parse_certificate(read_file(cert_path));
    CertCheck ck = verify_certificate(t, cert);
    if (ck.valid) {
        out << "VALID\n";
        return 0;
    }
    out << "INVALID " << ck.reason << "\n";
    return 1;
}

int cmd_maxtrans(const std::string& in_path, const std::string& mode, std::ostream& out,
                 std::ostream& err) {
    Tournament t = parse_tournament(read_file(in_path));
    if (mode == "exact") {
        VertexSet s = max_transitive_exact(t);
        out << "size " << s.count() << "\n" << vertex_list(s) << "\n";
        return 0;
    }
    if (mode != "bound") throw InputError("--mode must be exact or bound");
    Certificate cert = certify_u5_status(t);
    if (!cert.certifies_free()) {
        err << "input contains U5 at";
        for (int v : cert.as_forbidden()->embedding.image) err << " v" << v;
        err << "\n";
        return 3;
    }
    VertexSet s = u5free_lower_bound_set(t, cert);
    GammaBound bound{t.size()};
    out << "size " << s.count() << "\n" << vertex_list(s) << "\n";
    if (t.size() == 0) {
        out << "meets n^gamma with equality (threshold 0)\n";
        return 0;
    }
    switch (gamma_compare(s.count(), t.size())) {
    case GammaVerdict::Equal:
        out << "meets n^gamma with equality (threshold " << bound.decimal() << ")\n";
        break;
    case GammaVerdict::Above:
        out << "exceeds n^gamma (threshold " << bound.decimal() << ")\n";
        break;
    case GammaVerdict::Below:
        out << "below n^gamma (threshold " << bound.decimal() << ")\n";
        return 1;
    }
    return 0;
}

int cmd_export_dot(const std::string& in_path, std::ostream& out) {
    Tournament t = parse_tournament(read_file(in_path));
    out << render_dot(t);
    return 0;
}

// --- theorem verification suites -------------------------------------------------

struct TheoremReport {
    std::ostream& out;
    bool all_pass = true;
    std::string counterexample;

    void line(bool ok, const std::string& text, const Tournament* witness = nullptr) {
        out << (ok ? "[PASS] " : "[FAIL] ") << text << "\n";
        if (!ok) {
            all_pass = false;
            if (witness && counterexample.empty()) counterexample = render_tournament(*witness);
        }
    }
};

int cmd_verify_theorems(int max_n, bool opt_in_n8, std::ostream& out) {
    if (max_n < 1) throw InputError("--max-n must be at least 1");
    if (max_n > 8 || (max_n == 8 && !opt_in_n8))
        throw InputError("--max-n is limited to 7 (8 requires --opt-in-n8)");

    const long long expected_counts[] = {1, 1, 1, 2, 4, 12, 56, 456, 6880};
    const Tournament t5 = gen_family(Family::T, 5), u5 = gen_family(Family::U, 5),
                     w5 = gen_family(Family::W, 5);
    TheoremReport rep{out, true, ""};

    for (int n = 1; n <= max_n; ++n) {
        std::vector<Tournament> classes = enumerate_tournaments(n, opt_in_n8);
        bool canon_agree = true;
        for (const auto& t : classes)
            if (canonical_code(t) != canonical_code_bruteforce(t)) canon_agree = false;
        bool count_ok = static_cast<long long>(classes.size()) == expected_counts[n] && canon_agree;
        rep.line(count_ok, "iso-classes n=" + std::to_string(n) + ": " + std::to_string(classes.size()) +
                               " (two canonicalizers agree: " + (canon_agree ? "yes" : "no") + ")");

        std::vector<Tournament> primes;
        for (const auto& t : classes)
            if (is_prime(t)) primes.push_back(t);
        if (n == 4) rep.line(primes.empty(), "prime census n=4: " + std::to_string(primes.size()));
        if (n == 5) {
            bool ok = primes.size() == 3;
            for (const auto& f : {t5, u5, w5}) {
                bool found = false;
                for (const auto& p : primes)
                    if (are_isomorphic(p, f)) found = true;
                ok = ok && found;
            }
            rep.line(ok, "prime census n=5: " + std::to_string(primes.size()) + " (T5, U5, W5)");
        }

        if (n >= 5) {
            // every prime contains one of the three five-vertex primes
            bool er_ok = true;
            const Tournament* er_witness = nullptr;
            for (const auto& p : primes) {
                if (is_pattern_free(p, t5) && is_pattern_free(p, u5) && is_pattern_free(p, w5)) {
                    er_ok = false;
                    er_witness = &p;
                }
            }
            rep.line(er_ok, "containment n=" + std::to_string(n) + ": every prime class contains T5, U5 or W5 (" +
                                std::to_string(primes.size()) + " classes)", er_witness);

            // primes containing T5 are circular or contain both U5 and W5
            bool t4_ok = true;
            const Tournament* t4_witness = nullptr;
            int t4_count = 0;
            for (const auto& p : primes) {
                if (is_pattern_free(p, t5)) continue;
                ++t4_count;
                bool circ = identify_critical(p) && identify_critical(p)->kind == Family::T;
                bool both = !is_pattern_free(p, u5) && !is_pattern_free(p, w5);
                if (!(circ || both)) {
                    t4_ok = false;
                    t4_witness = &p;
                }
            }
            rep.line(t4_ok, "T5-bearing primes n=" + std::to_string(n) + ": circular or contain U5 and W5 (" +
                                std::to_string(t4_count) + " checked)", t4_witness);

            // W5-free prime classification
            std::vector<const Tournament*> w5free;
            for (const auto& p : primes)
                if (is_pattern_free(p, w5)) w5free.push_back(&p);
            std::vector<Tournament> expected;
            if (n == 5) {
                expected = {t5, u5};
            } else if (n == 6) {
                Tournament q7 = gen_family(Family::Q7, 0);
                VertexSet keep = VertexSet::full(7);
                keep.erase(6);
                expected = {induced(q7, keep).tour};
            } else if (n == 7) {
                expected = {gen_family(Family::Q7, 0), gen_family(Family::T, 7), gen_family(Family::U, 7)};
            }
            if (n <= 7) {
                bool w_ok = w5free.size() == expected.size();
                for (const auto& e : expected) {
                    bool found = false;
                    for (const auto* p : w5free)
                        if (are_isomorphic(*p, e)) found = true;
                    w_ok = w_ok && found;
                }
                rep.line(w_ok, "W5-free primes n=" + std::to_string(n) + ": " + std::to_string(w5free.size()) +
                                   " classes, expected " + std::to_string(expected.size()));
            }
        }

        // recognizer soundness against brute force
        bool sound = true;
        const Tournament* sound_witness = nullptr;
        for (const auto& t : classes) {
            Certificate cert = certify_u5_status(t);
            bool brute_free = is_pattern_free(t, u5);
            if (cert.certifies_free() != brute_free || !verify_certificate(t, cert).valid) {
                sound = false;
                sound_witness = &t;
            }
        }
        rep.line(sound, "recognizer soundness n=" + std::to_string(n) + ": certificate verdict matches brute force (" +
                            std::to_string(classes.size()) + " classes)", sound_witness);
    }

    if (!rep.all_pass && !rep.counterexample.empty())
        out << "counterexample:\n" << rep.counterexample;
    return rep.all_pass ? 0 : 1;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"U5-free tournament recognition, certificates and transitive bounds"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a tournament file");
    std::string family;
    int n = 0;
    bool n_given = false;
    std::uint64_t seed = 0;
    std::string out_path;
    gen->add_option("family", family, "T|U|W|P|I|Q7|extremalG|random|random-u5free")->required();
    auto* nopt = gen->add_option("n", n, "size parameter");
    gen->add_option("--seed", seed, "seed for the random generators");
    gen->add_option("--out", out_path, "output path (default stdout)");

    // certify
    auto* certify = app.add_subcommand("certify", "recognize and emit a certificate");
    std::string in_path;
    std::string cert_out;
    certify->add_option("input", in_path, "tournament file")->required();
    certify->add_option("--out", cert_out, "also write the certificate document here");

    // verify-cert
    auto* vc = app.add_subcommand("verify-cert", "check a certificate against a tournament");
    std::string vc_tour, vc_cert;
    vc->add_option("tournament", vc_tour, "tournament file")->required();
    vc->add_option("certificate", vc_cert, "certificate document")->required();

    // maxtrans
    auto* mt = app.add_subcommand("maxtrans", "maximum transitive subtournament");
    std::string mt_in, mode = "exact";
    mt->add_option("input", mt_in, "tournament file")->required();
    mt->add_option("--mode", mode, "exact|bound")->check(CLI::IsMember({"exact", "bound"}));

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "write a DOT digraph");
    std::string dot_in;
    dot->add_option("input", dot_in, "tournament file")->required();

    // verify-theorems
    auto* vt = app.add_subcommand("verify-theorems", "run the exhaustive verification suites");
    int max_n = 7;
    bool opt_in_n8 = false;
    vt->add_option("--max-n", max_n, "largest vertex count to enumerate (default 7)");
    vt->add_flag("--opt-in-n8", opt_in_n8, "allow the expensive n=8 run");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend()); // CLI11 takes reversed argv
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            n_given = nopt->count() > 0;
            return cmd_gen(family, n, n_given, seed, out_path, out);
        }
        if (certify->parsed()) return cmd_certify(in_path, cert_out, out);
        if (vc->parsed()) return cmd_verify_cert(vc_tour, vc_cert, out);
        if (mt->parsed()) return cmd_maxtrans(mt_in, mode, out, err);
        if (dot->parsed()) return cmd_export_dot(dot_in, out);
        if (vt->parsed()) return cmd_verify_theorems(max_n, opt_in_n8, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractViolation& e) {
        err << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal failure: " << e.what() << "\n";
        return 1;
    }
}

} // namespace u5
