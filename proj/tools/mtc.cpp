// Command-line front end for the modular data workbench.
//
// Exit codes: 0 success, 1 negative finding (failed verification, no
// equivalence, a violated implication), 2 usage or input-format error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtc/mtc.hpp"

namespace {

using nlohmann::json;
using namespace mtc;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string output;
    bool json_mode = false;
};

class Writer {
public:
    explicit Writer(const Options& opts) : opts_(opts) {}

    void text(const std::string& s) { buf_ << s; }
    void document(const json& j) { buf_ << io::dump(j); }

    void flush() {
        if (opts_.output.empty()) {
            std::cout << buf_.str() << std::flush;
            return;
        }
        std::ofstream out(opts_.output, std::ios::binary);
        if (!out) {
            throw UsageError("cannot write " + opts_.output);
        }
        out << buf_.str();
    }

private:
    const Options& opts_;
    std::ostringstream buf_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_document(const std::string& path) { return io::parse(read_file(path)); }

ModularData read_moddata(const std::string& path) { return io::moddata_from_json(read_document(path)); }

int resolve_label(const ModularData& md, const std::string& s) {
    for (int a = 0; a < md.rank(); ++a) {
        if (md.name(a) == s) {
            return a;
        }
    }
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
        const int a = std::stoi(s);
        if (a < md.rank()) {
            return a;
        }
    }
    throw UsageError("no label '" + s + "'");
}

/// "3", "√3", "2√3" for d with d^2 a positive integer; the exact form otherwise.
std::string pretty_dim(const Cyclotomic& d) {
    if (auto v = d.as_integer()) {
        return v->str();
    }
    if (auto sq = (d * d).as_integer(); sq && *sq > 0) {
        const auto n = sq->convert_to<std::int64_t>();
        const auto [square, free] = nt::square_and_squarefree(n);
        if (d == sqrt_int(n)) {
            return (square == 1 ? std::string() : std::to_string(square)) + "√" + std::to_string(free);
        }
    }
    return d.to_string();
}

json report_json(const VerificationReport& rep) {
    json items = json::array();
    for (const auto& f : rep.failures) {
        items.push_back({{"check", f.check}, {"indices", f.indices}, {"detail", f.detail}});
    }
    return {{"ok", rep.ok()}, {"failures", items}, {"suppressed", rep.suppressed}};
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
    std::string family;
    std::optional<int> N, n, a, sign, nu, m, index;
    std::string left, right;
};

int need(const std::optional<int>& v, const char* flag) {
    if (!v) {
        throw UsageError(std::string("missing ") + flag);
    }
    return *v;
}

int cmd_construct(const ConstructArgs& args, Writer& out) {
    const auto& f = args.family;
    if (f == "cyclic") {
        const int n = need(args.n, "--n");
        out.document(io::to_json(pointed_data(cyclic_form(n, args.a.value_or(1), args.sign.value_or(1)))));
    } else if (f == "semion") {
        out.document(io::to_json(semion(args.sign.value_or(1))));
    } else if (f == "ising") {
        out.document(io::to_json(ising(args.nu.value_or(1))));
    } else if (f == "metaplectic") {
        out.document(io::to_json(metaplectic_data(need(args.N, "--N"))));
    } else if (f == "deligne") {
        if (args.left.empty() || args.right.empty()) {
            throw UsageError("deligne needs --left and --right");
        }
        out.document(io::to_json(deligne_product(read_moddata(args.left), read_moddata(args.right))));
    } else if (f == "z2z2-family") {
        const auto family = z2z2_premodular_family();
        if (args.index) {
            if (*args.index < 0 || *args.index >= static_cast<int>(family.size())) {
                throw UsageError("--index must be between 0 and " + std::to_string(family.size() - 1));
            }
            out.document(io::to_json(family[*args.index]));
        } else {
            json members = json::array();
            for (const auto& md : family) {
                members.push_back(io::to_json(md));
            }
            out.document({{"format", io::kFormat}, {"kind", "collection"}, {"members", members}});
        }
    } else if (f == "dihedral-ring") {
        out.document(io::to_json(dihedral_rep_ring(need(args.m, "--m"))));
    } else {
        throw UsageError("unknown family '" + f + "'");
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& path, const Options& opts, Writer& out) {
    const json doc = read_document(path);
    VerificationReport rep;
    std::string what;
    std::vector<std::string> names;
    if (doc.is_object() && doc.contains("kind") && doc["kind"] == "fusion_ring") {
        const auto ring = io::fusion_from_json(doc);
        rep = validate(ring);
        names = ring.names();
        what = "fusion ring axioms";
    } else {
        const auto md = io::moddata_from_json(doc);
        rep = verify(md);
        names = md.names();
        what = md.modular_flag() ? "modular data axioms" : "premodular data axioms";
    }
    if (opts.json_mode) {
        out.document(report_json(rep));
    } else if (rep.ok()) {
        out.text(what + ": ok\n");
    } else {
        out.text(what + ": " + std::to_string(rep.failures.size() + rep.suppressed) + " failure(s)\n");
        for (const auto& f : rep.failures) {
            std::string idx;
            for (int i : f.indices) {
                const bool named = i >= 0 && i < static_cast<int>(names.size());
                idx += (idx.empty() ? "" : ", ") + (named ? names[i] : std::to_string(i));
            }
            out.text("  " + f.check + " (" + idx + ")" + (f.detail.empty() ? "" : ": " + f.detail) + "\n");
        }
    }
    return rep.ok() ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
    std::string path;
    std::vector<std::string> predicates;
    std::optional<std::int64_t> p, m;
};

int cmd_analyze(const AnalyzeArgs& args, const Options& opts, Writer& out) {
    const auto md = read_moddata(args.path);
    std::vector<std::string> preds = args.predicates;
    const bool defaults = preds.empty();
    if (defaults) {
        preds = {"swi", "subdata", "primality", "metaplectic", "theorem"};
    }
    json results = json::object();
    std::ostringstream text;
    bool negative = false;
    for (const auto& p : preds) {
        if (p == "swi") {
            if (!integer_global_dim(md)) {
                if (!defaults) {
                    throw UsageError("swi needs weakly integral data");
                }
                continue;
            }
            const bool ok = check_swi_divisibility(md);
            negative = negative || !ok;
            results["swi"] = ok;
            text << "swi divisibility (4 | D when strictly weakly integral): " << (ok ? "holds" : "FAILS") << "\n";
        } else if (p == "pointedness") {
            if (!args.p || !args.m) {
                throw UsageError("pointedness needs --p and --m");
            }
            const auto rep = pointedness_criteria(md, *args.p, *args.m);
            results["pointedness"] = rep.to_json();
            for (const auto& c : rep.claims) {
                text << "pointedness " << c.name << ": " << (c.holds ? "true" : "false") << "\n";
            }
            for (const char* c : {"pkm_implication", "p2m_integral_implication", "p3m_integral_implication"}) {
                negative = negative || !rep.holds(c);
            }
        } else if (p == "subdata") {
            json found = json::object();
            for (auto pat : {Pattern::Semion, Pattern::Ising, Pattern::TannakianZ2}) {
                const auto span = detect_subdata(md, pat);
                found[to_string(pat)] = span ? span_json(md, *span) : json();
                text << "subdata " << to_string(pat) << ": ";
                if (span) {
                    for (std::size_t i = 0; i < span->labels.size(); ++i) {
                        text << (i ? ", " : "{") << md.name(span->labels[i]);
                    }
                    text << "}\n";
                } else {
                    text << "absent\n";
                }
            }
            results["subdata"] = found;
        } else if (p == "primality") {
            const auto res = primality(md);
            results["primality"] = {{"prime", res.prime},
                                    {"witness", res.witness ? res.witness->to_json(md) : json()}};
            text << "prime: " << (res.prime ? "yes" : "no");
            if (res.witness) {
                text << " (factors of rank " << res.witness->first.size() << " and " << res.witness->second.size()
                     << ")";
            }
            text << "\n";
        } else if (p == "metaplectic") {
            const auto N = recognize_metaplectic(md);
            results["metaplectic"] = N ? json(*N) : json();
            text << "metaplectic: " << (N ? "N = " + std::to_string(*N) : std::string("no")) << "\n";
        } else if (p == "theorem") {
            const auto D = integer_global_dim(md);
            if (!D || !mtc::detail::dimension_shape(*D)) {
                if (!defaults) {
                    throw UsageError("theorem needs D = p^2 m or p^3 m");
                }
                continue;
            }
            const auto rep = theorem_conclusions(md);
            results["theorem"] = rep.to_json();
            negative = negative || !rep.holds("conclusion");
            text << rep.subject << ": conclusion " << (rep.holds("conclusion") ? "holds" : "FAILS");
            for (const char* c : {"case_i", "case_ii"}) {
                if (rep.has(c) && rep.holds(c)) {
                    text << " (" << c << ")";
                }
            }
            if (rep.holds("pointed")) {
                text << " (pointed)";
            }
            text << "\n";
        } else {
            throw UsageError("unknown predicate '" + p + "'");
        }
    }
    if (opts.json_mode) {
        out.document(results);
    } else {
        out.text(text.str());
    }
    return negative ? kNegative : kOk;
}

// ---------------------------------------------------------------------------
// condense

int cmd_condense(const std::string& path, const std::string& boson, const Options& opts, Writer& out) {
    const auto md = read_moddata(path);
    const int b = resolve_label(md, boson);
    CondensationReport rep;
    try {
        rep = condense_boson(md, b);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opts.json_mode) {
        out.document(rep.to_json(md));
        return kOk;
    }
    std::map<std::string, int> non_integral;
    for (int i : rep.non_integral) {
        ++non_integral[pretty_dim(rep.inventory[i].dim)];
    }
    std::string line = std::to_string(rep.invertible_count) + " invertibles";
    for (const auto& [dim, count] : non_integral) {
        line += ", " + std::to_string(count) + " × " + dim;
    }
    out.text(line + "\n");
    out.text("condensed dimension " + pretty_dim(rep.global_dim) + ", trivial component dimension " +
             pretty_dim(rep.local_dim) + "\n");
    return kOk;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(std::optional<int> metaplectic, std::optional<int> cyclic, const Options& opts, Writer& out) {
    if (metaplectic.has_value() == cyclic.has_value()) {
        throw UsageError("give exactly one of --metaplectic-count and --cyclic-classes");
    }
    if (metaplectic) {
        const auto c = count_metaplectic(*metaplectic);
        if (opts.json_mode) {
            out.document(c.to_json());
        } else {
            out.text(std::to_string(c.count) + "\n");
        }
        return kOk;
    }
    const int n = *cyclic;
    const auto forms = cyclic_forms(n);
    const auto reps = mtc::detail::form_class_representatives(forms, n);
    if (opts.json_mode) {
        json list = json::array();
        for (int i : reps) {
            json q = json::array();
            for (int x = 0; x < n; ++x) {
                q.push_back(forms[i].angle(x).str());
            }
            list.push_back(q);
        }
        out.document({{"n", n}, {"forms", forms.size()}, {"classes", reps.size()}, {"representatives", list}});
    } else {
        out.text(std::to_string(reps.size()) + "\n");
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// compare / export

int cmd_compare(const std::string& a, const std::string& b, const Options& opts, Writer& out) {
    const auto x = read_moddata(a);
    const auto y = read_moddata(b);
    const auto phi = equivalent_data(x, y);
    if (opts.json_mode) {
        out.document({{"equivalent", phi.has_value()}, {"map", phi ? json(*phi) : json()}});
    } else if (phi) {
        out.text("equivalent:");
        for (int i = 0; i < x.rank(); ++i) {
            out.text(" " + x.name(i) + "->" + y.name((*phi)[i]));
        }
        out.text("\n");
    } else {
        out.text("not equivalent\n");
    }
    return phi ? kOk : kNegative;
}

int cmd_export(const std::string& path, bool fusion_only, Writer& out) {
    const json doc = read_document(path);
    if (doc.is_object() && doc.contains("kind") && doc["kind"] == "fusion_ring") {
        out.document(io::to_json(io::fusion_from_json(doc)));
        return kOk;
    }
    const auto md = io::moddata_from_json(doc);
    out.document(fusion_only ? io::to_json(md.fusion()) : io::to_json(md));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact modular data workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    app.add_option("-o,--output", opts.output, "Write output to this file instead of stdout");
    app.add_flag("--json", opts.json_mode, "Machine-readable JSON reports");

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "Build a zoo member and print its JSON document");
    construct->add_option("family", cargs.family, "cyclic | semion | ising | metaplectic | deligne | z2z2-family | dihedral-ring")
        ->required();
    construct->add_option("--N", cargs.N, "Metaplectic parameter (odd)");
    construct->add_option("--n", cargs.n, "Order of the cyclic group");
    construct->add_option("--a", cargs.a, "Form coefficient");
    construct->add_option("--sign", cargs.sign, "Semion sign (+1 or -1)");
    construct->add_option("--nu", cargs.nu, "Ising parameter (odd)");
    construct->add_option("--m", cargs.m, "Dihedral parameter");
    construct->add_option("--index", cargs.index, "Member of the Z/2 x Z/2 family");
    construct->add_option("--left", cargs.left, "First factor (JSON file)");
    construct->add_option("--right", cargs.right, "Second factor (JSON file)");

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check the axioms of a JSON document");
    verify_cmd->add_option("path", verify_path)->required();

    AnalyzeArgs aargs;
    auto* analyze = app.add_subcommand("analyze", "Run classification predicates");
    analyze->add_option("path", aargs.path)->required();
    analyze->add_option("predicates", aargs.predicates, "swi | pointedness | subdata | primality | metaplectic | theorem");
    analyze->add_option("--p", aargs.p, "Prime for the pointedness criteria");
    analyze->add_option("--m", aargs.m, "Square-free cofactor for the pointedness criteria");

    std::string condense_path, boson;
    auto* condense = app.add_subcommand("condense", "Condense a boson");
    condense->add_option("path", condense_path)->required();
    condense->add_option("--boson", boson, "Boson label (name or index)")->required();

    std::optional<int> meta_count, cyclic_classes;
    auto* enumerate = app.add_subcommand("enumerate", "Count metaplectic data or cyclic form classes");
    enumerate->add_option("--metaplectic-count", meta_count, "Odd N");
    enumerate->add_option("--cyclic-classes", cyclic_classes, "n not divisible by 4");

    std::string cmp_a, cmp_b;
    auto* compare = app.add_subcommand("compare", "Search for an equivalence of two data files");
    compare->add_option("a", cmp_a)->required();
    compare->add_option("b", cmp_b)->required();

    std::string export_path;
    bool fusion_only = false;
    auto* export_cmd = app.add_subcommand("export", "Re-emit a document in canonical form");
    export_cmd->add_option("path", export_path)->required();
    export_cmd->add_flag("--fusion", fusion_only, "Emit only the fusion ring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Writer out(opts);
    int code = kOk;
    try {
        if (*construct) {
            code = cmd_construct(cargs, out);
        } else if (*verify_cmd) {
            code = cmd_verify(verify_path, opts, out);
        } else if (*analyze) {
            code = cmd_analyze(aargs, opts, out);
        } else if (*condense) {
            code = cmd_condense(condense_path, boson, opts, out);
        } else if (*enumerate) {
            code = cmd_enumerate(meta_count, cyclic_classes, opts, out);
        } else if (*compare) {
            code = cmd_compare(cmp_a, cmp_b, opts, out);
        } else if (*export_cmd) {
            code = cmd_export(export_path, fusion_only, out);
        }
        out.flush();
    } catch (const std::exception& e) {
        // Bad flags, unreadable files, malformed documents and violated
        // preconditions all land here.
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}
