#include "srcdec_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "srcdec/errors.hpp"
#include "srcdec/ideal_ops.hpp"
#include "srcdec/src_decomp.hpp"
#include "srcdec/system_io.hpp"

#ifndef SRCDEC_DEFAULT_CORPUS
#define SRCDEC_DEFAULT_CORPUS "corpus"
#endif

namespace srcdec::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Flags {
    std::string file;
    std::string order;
    std::string h_strategy = "squarefree";
    std::string branch_order = "descending";
    std::string selection;
    std::string division = "saturation";
    std::string format = "text";
    std::string pairs_file;
    std::string corpus = SRCDEC_DEFAULT_CORPUS;
    std::vector<std::string> files;
    std::size_t budget = 0;
    bool check = false;
    bool deterministic = false;
    bool cleared = false;
    bool trace = false;
    bool extended = false;
    bool all = false;
};

struct Session {
    Flags flags;
    ComputeContext ctx;
    DecompOptions options;
    std::ostream& out;
    std::ostream& err;

    bool json() const { return flags.format == "json"; }
    std::string poly(const Polynomial& p) const {
        return flags.cleared ? to_string_cleared(p) : to_string(p);
    }
    double ms(const PhaseCounter& c) const { return flags.deterministic ? 0.0 : c.millis(); }
    double ms(std::chrono::nanoseconds t) const {
        return flags.deterministic ? 0.0 : std::chrono::duration<double, std::milli>(t).count();
    }
};

void configure(Session& s) {
    const Flags& f = s.flags;
    s.options.strategy = f.h_strategy == "coarse" ? SplitStrategy::Coarse : SplitStrategy::Squarefree;
    s.options.branch_order =
        f.branch_order == "ascending" ? BranchOrder::Ascending : BranchOrder::Descending;
    s.options.division = f.division == "quotient" ? Division::Quotient : Division::Saturation;
    if (f.selection == "sugar") s.ctx.gb.selection = PairSelection::Sugar;
    if (f.selection == "normal") s.ctx.gb.selection = PairSelection::Normal;
    if (f.budget > 0) s.ctx.gb.budget.max_total_terms = f.budget;
}

SystemFile load(const Session& s, const std::string& path) {
    SystemFile sys = load_system(path);
    if (!s.flags.order.empty()) sys = with_ordering(sys, parse_ordering(s.flags.order));
    return sys;
}

std::string ordering_text(const OrderingPtr& o) {
    std::string t;
    for (std::size_t i = 0; i < o->size(); ++i) t += (i ? " < " : "") + o->name(i);
    return t;
}

Json strings(const Session& s, const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(s.poly(p));
    return a;
}

Json input_json(const Session& s, const SystemFile& sys) {
    Json in;
    in["name"] = sys.name;
    in["vars"] = sys.ordering->names();
    in["polynomials"] = strings(s, sys.gens.gens());
    return in;
}

std::string braces(const Session& s, const std::vector<Polynomial>& ps, char open, char close) {
    std::string t(1, open);
    for (std::size_t i = 0; i < ps.size(); ++i) t += (i ? ", " : "") + s.poly(ps[i]);
    return t + close;
}

std::string set_text(const Session& s, const ReducedGB& g) { return braces(s, g.basis(), '{', '}'); }
std::string set_text(const Session& s, const TriangularSet& t) {
    return t.is_trivial() ? "[1]" : braces(s, t.polys(), '[', ']');
}

std::string flags_text(const CharPair& p) {
    if (p.is_trivial()) return "trivial";
    std::string t = p.is_normal ? "normal" : "regular, not normal";
    if (!p.is_strong) t += ", not strong";
    return t;
}

Json pair_json(const Session& s, const CharPair& p, unsigned m) {
    Json j;
    j["groebner_basis"] = strings(s, p.gb.basis());
    j["w_characteristic_set"] =
        p.wchar.is_trivial() ? Json::array({"1"}) : strings(s, p.wchar.polys());
    j["is_normal"] = p.is_normal;
    j["is_regular"] = p.is_regular;
    j["iterations_m"] = m;
    return j;
}

Json stats_json(const Session& s, const ComputeStats& c, std::chrono::nanoseconds total) {
    Json j;
    j["gb_ms"] = s.ms(c.gb);
    j["sat_ms"] = s.ms(c.sat);
    j["quo_ms"] = s.ms(c.quo);
    j["total_ms"] = s.ms(total);
    return j;
}

void print_stats(const Session& s, const ComputeStats& c, std::chrono::nanoseconds total) {
    s.out << std::fixed << std::setprecision(3) << "time: total " << s.ms(total) << " ms, gb "
          << s.ms(c.gb) << " ms, sat " << s.ms(c.sat) << " ms, quo " << s.ms(c.quo) << " ms\n";
    s.out.unsetf(std::ios::floatfield);
}

void print_warnings(const Session& s, const SystemFile& sys) {
    for (const auto& w : sys.warnings) s.err << "warning: " << w << '\n';
}

int need_file(const Session& s) {
    if (s.flags.file.empty()) {
        s.err << "error: an input file is required\n";
        return kInputError;
    }
    return kOk;
}

// gb ---------------------------------------------------------------------

int cmd_gb(Session& s) {
    if (int rc = need_file(s)) return rc;
    SystemFile sys = load(s, s.flags.file);
    print_warnings(s, sys);
    const auto start = std::chrono::steady_clock::now();
    ReducedGB g = groebner_basis(sys.gens, &s.ctx);
    const auto total = std::chrono::steady_clock::now() - start;
    if (s.json()) {
        Json j;
        j["input"] = input_json(s, sys);
        j["groebner_basis"] = strings(s, g.basis());
        j["stats"] = stats_json(s, s.ctx.stats, total);
        s.out << j.dump(2) << '\n';
    } else {
        s.out << set_text(s, g) << '\n';
    }
    return kOk;
}

// wchar ------------------------------------------------------------------

int cmd_wchar(Session& s) {
    if (int rc = need_file(s)) return rc;
    SystemFile sys = load(s, s.flags.file);
    print_warnings(s, sys);
    ReducedGB g = groebner_basis(sys.gens, &s.ctx);
    TriangularSet c = wchar_set(g);
    if (s.json()) {
        Json j;
        j["input"] = input_json(s, sys);
        j["groebner_basis"] = strings(s, g.basis());
        j["w_characteristic_set"] = c.is_trivial() ? Json::array({"1"}) : strings(s, c.polys());
        s.out << j.dump(2) << '\n';
    } else {
        s.out << "G = " << set_text(s, g) << "\nC = " << set_text(s, c) << '\n';
    }
    return kOk;
}

// sat --------------------------------------------------------------------

int cmd_sat(Session& s) {
    if (int rc = need_file(s)) return rc;
    SystemFile sys = load(s, s.flags.file);
    print_warnings(s, sys);
    std::vector<Polynomial> polys = sys.gens.gens();
    for (const auto& p : polys)
        if (p.is_constant()) throw DomainError("a triangular set has no constant elements");
    std::stable_sort(polys.begin(), polys.end(),
                     [](const Polynomial& a, const Polynomial& b) { return lv(a) < lv(b); });
    TriangularSet t(sys.ordering, polys);
    ReducedGB sat = sat_triset(t, &s.ctx);
    const bool regular = is_regular(t, sat);
    const bool normal = is_normal(t);
    TriangularSet c = wchar_set(sat);
    if (s.json()) {
        Json j;
        j["input"] = input_json(s, sys);
        j["saturation"] = strings(s, sat.basis());
        j["w_characteristic_set"] = c.is_trivial() ? Json::array({"1"}) : strings(s, c.polys());
        j["is_regular"] = regular;
        j["is_normal"] = normal;
        s.out << j.dump(2) << '\n';
    } else {
        s.out << "T = " << set_text(s, t) << "\nsat(T) = " << set_text(s, sat)
              << "\nW-characteristic set of sat(T) = " << set_text(s, c)
              << "\nT regular: " << (regular ? "yes" : "no")
              << "\nT normal: " << (normal ? "yes" : "no") << '\n';
    }
    return kOk;
}

// srcpair ----------------------------------------------------------------

int cmd_srcpair(Session& s) {
    if (int rc = need_file(s)) return rc;
    SystemFile sys = load(s, s.flags.file);
    print_warnings(s, sys);
    const auto start = std::chrono::steady_clock::now();
    SrcPairResult r = src_pair_traced(sys.gens, &s.ctx);
    const auto total = std::chrono::steady_clock::now() - start;
    if (s.json()) {
        Json j;
        j["input"] = input_json(s, sys);
        j["pair"] = pair_json(s, r.pair, r.m);
        if (s.flags.trace) {
            Json chain = Json::array();
            for (std::size_t i = 0; i < r.gbs.size(); ++i) {
                Json step;
                step["groebner_basis"] = strings(s, r.gbs[i].basis());
                step["w_characteristic_set"] = r.wchars[i].is_trivial()
                                                   ? Json::array({"1"})
                                                   : strings(s, r.wchars[i].polys());
                chain.push_back(step);
            }
            j["trace"] = chain;
        }
        j["stats"] = stats_json(s, s.ctx.stats, total);
        s.out << j.dump(2) << '\n';
        return kOk;
    }
    if (s.flags.trace) {
        for (std::size_t i = 0; i < r.gbs.size(); ++i) {
            s.out << "G" << i + 1 << " = " << set_text(s, r.gbs[i]) << '\n'
                  << "C" << i + 1 << " = " << set_text(s, r.wchars[i]) << '\n';
        }
    }
    s.out << "G = " << set_text(s, r.pair.gb) << "\nC = " << set_text(s, r.pair.wchar)
          << "\nm = " << r.m << " (" << flags_text(r.pair) << ")\n";
    print_stats(s, s.ctx.stats, total);
    return kOk;
}

// decompose --------------------------------------------------------------

struct Found {
    std::vector<CharPair> pairs;
    std::vector<unsigned> ms;
};

void print_pairs_text(const Session& s, const std::vector<CharPair>& pairs,
                      const std::vector<unsigned>& ms) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        s.out << "pair " << i + 1 << " (m = " << ms[i] << ", " << flags_text(pairs[i]) << ")\n"
              << "  G = " << set_text(s, pairs[i].gb) << "\n  C = " << set_text(s, pairs[i].wchar)
              << '\n';
    }
}

int report_decomposition(Session& s, const SystemFile& sys, const std::vector<CharPair>& pairs,
                         const std::vector<unsigned>& ms, std::chrono::nanoseconds total,
                         std::optional<VerificationReport> verified, bool partial) {
    if (s.json()) {
        Json j;
        j["input"] = input_json(s, sys);
        Json arr = Json::array();
        for (std::size_t i = 0; i < pairs.size(); ++i) arr.push_back(pair_json(s, pairs[i], ms[i]));
        j["pairs"] = arr;
        j["stats"] = stats_json(s, s.ctx.stats, total);
        j["verified"] = verified ? Json(verified->passed()) : Json(nullptr);
        if (partial) j["partial"] = true;
        s.out << j.dump(2) << '\n';
    } else {
        s.out << "input: " << sys.name << " (" << ordering_text(sys.ordering) << "), "
              << sys.gens.gens().size() << " polynomials\n";
        print_pairs_text(s, pairs, ms);
        s.out << pairs.size() << (pairs.size() == 1 ? " pair" : " pairs")
              << (partial ? " before the budget was exceeded\n" : "\n");
        print_stats(s, s.ctx.stats, total);
        if (verified) {
            s.out << "verified: " << (verified->passed() ? "yes" : "no") << '\n';
            for (const auto& f : verified->failures) s.out << "  " << f << '\n';
        }
    }
    if (verified && !verified->passed()) return kVerificationFailed;
    return kOk;
}

int cmd_decompose(Session& s) {
    if (int rc = need_file(s)) return rc;
    SystemFile sys = load(s, s.flags.file);
    print_warnings(s, sys);
    Found found;
    s.options.on_pair = [&](const CharPair& p, unsigned m) {
        found.pairs.push_back(p);
        found.ms.push_back(m);
    };
    const auto start = std::chrono::steady_clock::now();
    try {
        Decomposition d = src_decompose(sys.gens, s.options, &s.ctx);
        std::optional<VerificationReport> rep;
        if (s.flags.check) rep = verify_decomposition(sys.gens, d, &s.ctx);
        const auto total = std::chrono::steady_clock::now() - start;
        for (const auto& w : d.stats.containment_warnings) s.err << "warning: " << w << '\n';
        if (s.flags.trace && !s.json()) {
            for (std::size_t i = 0; i < d.pairs.size(); ++i)
                s.out << "search " << i + 1 << ":\n" << d.stats.branch_trees[i];
        }
        return report_decomposition(s, sys, d.pairs, d.stats.iterations_m, total, rep, false);
    } catch (const ResourceError&) {
        const auto total = std::chrono::steady_clock::now() - start;
        report_decomposition(s, sys, found.pairs, found.ms, total, std::nullopt, true);
        throw;
    }
}

// verify -----------------------------------------------------------------

std::vector<CharPair> read_pairs(Session& s, const SystemFile& sys, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
    if (!j.contains("pairs") || !j["pairs"].is_array())
        throw DomainError(path + ": expected a top-level \"pairs\" array");
    std::vector<CharPair> pairs;
    for (const auto& jp : j["pairs"]) {
        if (!jp.contains("groebner_basis") || !jp["groebner_basis"].is_array())
            throw DomainError(path + ": each pair needs a \"groebner_basis\" array");
        IdealGens gens(sys.ordering);
        for (const auto& js : jp["groebner_basis"]) {
            if (!js.is_string()) throw DomainError(path + ": polynomials must be strings");
            gens.add(parse_polynomial(js.get<std::string>(), sys.ordering));
        }
        pairs.push_back(make_char_pair(groebner_basis(gens, &s.ctx), &s.ctx));
    }
    return pairs;
}

int cmd_verify(Session& s) {
    if (int rc = need_file(s)) return rc;
    SystemFile sys = load(s, s.flags.file);
    print_warnings(s, sys);
    const auto start = std::chrono::steady_clock::now();
    std::vector<CharPair> pairs;
    std::vector<unsigned> ms;
    if (!s.flags.pairs_file.empty()) {
        pairs = read_pairs(s, sys, s.flags.pairs_file);
        ms.assign(pairs.size(), 0);
    } else {
        Decomposition d = src_decompose(sys.gens, s.options, &s.ctx);
        pairs = std::move(d.pairs);
        ms = std::move(d.stats.iterations_m);
    }
    VerificationReport rep = verify_decomposition(sys.gens, pairs, &s.ctx);
    const auto total = std::chrono::steady_clock::now() - start;
    return report_decomposition(s, sys, pairs, ms, total, rep, false);
}

// bench ------------------------------------------------------------------

struct BenchRow {
    std::string name;
    std::size_t vars = 0;
    std::size_t polys = 0;
    std::string dim = "-";
    std::string pairs = "-";
    std::string expected = "-";
    double total = 0, gb = 0, sat = 0, quo = 0;
    std::string status;
    int code = kOk;
};

BenchRow bench_one(Session& parent, const fs::path& path) {
    BenchRow row;
    row.name = path.stem().string();
    Session s{parent.flags, {}, {}, parent.out, parent.err};
    configure(s);
    const auto start = std::chrono::steady_clock::now();
    try {
        SystemFile sys = load(s, path.string());
        row.name = sys.name;
        row.vars = sys.ordering->size();
        row.polys = sys.gens.gens().size();
        if (sys.expected_pairs) row.expected = std::to_string(*sys.expected_pairs);
        Decomposition d = src_decompose(sys.gens, s.options, &s.ctx);
        const auto total = std::chrono::steady_clock::now() - start;
        row.pairs = std::to_string(d.pairs.size());
        if (!d.pairs.empty()) {
            std::size_t min_len = row.vars;
            for (const auto& p : d.pairs) min_len = std::min(min_len, p.wchar.size());
            row.dim = std::to_string(row.vars - min_len);
        }
        row.total = s.ms(total);
        row.gb = s.ms(s.ctx.stats.gb);
        row.sat = s.ms(s.ctx.stats.sat);
        row.quo = s.ms(s.ctx.stats.quo);
        VerificationReport rep = verify_decomposition(sys.gens, d, &s.ctx);
        row.status = rep.passed() ? "verified" : "FAILED";
        if (!rep.passed()) row.code = kVerificationFailed;
    } catch (const ResourceError&) {
        row.status = "budget";
        row.code = kBudgetExceeded;
    } catch (const MorbidityError&) {
        row.status = "morbid";
        row.code = kInternalFailure;
    } catch (const InternalError& e) {
        row.status = "internal";
        row.code = kInternalFailure;
        parent.err << row.name << ": " << e.what() << '\n';
    } catch (const ParseError& e) {
        row.status = "parse";
        row.code = kInputError;
        parent.err << path.string() << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        row.status = "error";
        row.code = kInputError;
        parent.err << row.name << ": " << e.what() << '\n';
    }
    return row;
}

std::vector<fs::path> bench_files(const Session& s) {
    if (!s.flags.files.empty()) {
        std::vector<fs::path> out(s.flags.files.begin(), s.flags.files.end());
        return out;
    }
    std::vector<fs::path> out;
    const fs::path dir(s.flags.corpus);
    if (!fs::is_directory(dir)) throw DomainError("corpus directory not found: " + dir.string());
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".sys") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    std::vector<fs::path> kept;
    for (const auto& p : out) {
        std::string tier;
        try {
            SystemFile sys = load_system(p);
            if (auto it = sys.metadata.find("bench"); it != sys.metadata.end()) tier = it->second;
        } catch (const std::exception&) {
        }
        if (s.flags.all || tier.empty() || (tier == "extended" && s.flags.extended))
            kept.push_back(p);
    }
    return kept;
}

int cmd_bench(Session& s) {
    std::vector<BenchRow> rows;
    for (const auto& path : bench_files(s)) rows.push_back(bench_one(s, path));
    int code = kOk;
    for (const auto& r : rows) code = std::max(code, r.code);
    if (s.json()) {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["label"] = r.name;
            j["vars"] = r.vars;
            j["polys"] = r.polys;
            j["dim"] = r.dim;
            j["pairs"] = r.pairs;
            j["expected_pairs"] = r.expected;
            j["total_ms"] = r.total;
            j["gb_ms"] = r.gb;
            j["sat_ms"] = r.sat;
            j["quo_ms"] = r.quo;
            j["status"] = r.status;
            arr.push_back(j);
        }
        Json top;
        top["systems"] = arr;
        s.out << top.dump(2) << '\n';
        return code;
    }
    std::ostream& o = s.out;
    o << std::left << std::setw(16) << "Label" << std::right << std::setw(5) << "Var"
      << std::setw(5) << "Pol" << std::setw(5) << "Dim" << std::setw(7) << "Pairs"
      << std::setw(6) << "Exp" << std::setw(12) << "Total ms" << std::setw(11) << "GB ms"
      << std::setw(11) << "SAT ms" << std::setw(11) << "QUO ms" << "  Status\n";
    o << std::fixed << std::setprecision(2);
    for (const auto& r : rows) {
        o << std::left << std::setw(16) << r.name << std::right << std::setw(5) << r.vars
          << std::setw(5) << r.polys << std::setw(5) << r.dim << std::setw(7) << r.pairs
          << std::setw(6) << r.expected << std::setw(12) << r.total << std::setw(11) << r.gb
          << std::setw(11) << r.sat << std::setw(11) << r.quo << "  " << r.status << '\n';
    }
    o.unsetf(std::ios::floatfield);
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strong regular characteristic pair decomposition of polynomial systems",
                 "srcdec"};
    app.require_subcommand(1);
    Session s{{}, {}, {}, out, err};
    Flags& f = s.flags;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--order", f.order, "Variable ordering overriding the file, e.g. 'x < y < z'");
        sub->add_option("--budget", f.budget, "Cap on total terms held by one Groebner basis run");
        sub->add_option("--format", f.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--selection", f.selection, "Critical pair selection")
            ->check(CLI::IsMember({"normal", "sugar"}));
        sub->add_flag("--cleared", f.cleared, "Print polynomials with integer coefficients");
        sub->add_flag("--deterministic", f.deterministic, "Report all timings as zero");
    };
    auto decomp = [&](CLI::App* sub) {
        sub->add_option("--h-strategy", f.h_strategy, "Splitting of the branch polynomial")
            ->check(CLI::IsMember({"squarefree", "coarse"}));
        sub->add_option("--branch-order", f.branch_order, "Order in which branches are tried")
            ->check(CLI::IsMember({"ascending", "descending"}));
        sub->add_option("--division", f.division, "How a found component is divided out")
            ->check(CLI::IsMember({"quotient", "saturation"}));
    };

    struct Cmd {
        const char* name;
        const char* help;
        int (*fn)(Session&);
    };
    const Cmd cmds[] = {
        {"gb", "Reduced lex Groebner basis", cmd_gb},
        {"wchar", "W-characteristic set of the ideal", cmd_wchar},
        {"sat", "Saturation of the input read as a triangular set", cmd_sat},
        {"srcpair", "Strong regular characteristic pair of the ideal", cmd_srcpair},
        {"decompose", "SRC decomposition", cmd_decompose},
        {"verify", "Check a decomposition against its input", cmd_verify},
        {"bench", "Decompose and verify the bundled corpus", cmd_bench},
    };
    std::vector<std::pair<CLI::App*, int (*)(Session&)>> subs;
    for (const auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        common(sub);
        if (std::string(c.name) == "bench") {
            sub->add_option("files", f.files, "Systems to run instead of the corpus");
            sub->add_option("--corpus", f.corpus, "Directory of .sys files");
            sub->add_flag("--extended", f.extended, "Include systems marked 'bench: extended'");
            sub->add_flag("--all", f.all, "Include every system in the corpus");
            decomp(sub);
        } else {
            sub->add_option("file", f.file, "Polynomial system file")->required();
        }
        if (std::string(c.name) == "decompose" || std::string(c.name) == "verify") {
            decomp(sub);
            if (std::string(c.name) == "decompose")
            {
                sub->add_flag("--check", f.check, "Verify the decomposition");
                sub->add_flag("--trace", f.trace, "Print the branch tree of every divisor search");
            }
            else
                sub->add_option("--pairs", f.pairs_file, "JSON decomposition to check");
        }
        if (std::string(c.name) == "srcpair")
            sub->add_flag("--trace", f.trace, "Print every G_i and C_i of the iteration");
        subs.emplace_back(sub, c.fn);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kInputError;
    }

    configure(s);
    try {
        for (auto& [sub, fn] : subs)
            if (sub->parsed()) return fn(s);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const ResourceError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const MorbidityError& e) {
        err << "internal error: " << e.what() << '\n' << e.branch_tree();
        return kInternalFailure;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalFailure;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace srcdec::cli
