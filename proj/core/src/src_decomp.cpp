#include "srcdec/src_decomp.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "srcdec/errors.hpp"
#include "srcdec/ideal_ops.hpp"

namespace srcdec {

namespace {

void invariant(bool ok, const std::string& what) {
    if (!ok) throw InternalError("invariant violated: " + what);
}

bool contains(const ReducedGB& big, const ReducedGB& small) {
    return std::all_of(small.basis().begin(), small.basis().end(),
                       [&](const Polynomial& p) { return is_member(p, big); });
}

// Refines squarefree factors until they are pairwise coprime. Every output
// divides some input and the product of the outputs has the same zeros as
// the product of the inputs.
std::vector<Polynomial> coprime_base(std::vector<Polynomial> fs) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < fs.size() && !changed; ++a) {
            for (std::size_t b = a + 1; b < fs.size() && !changed; ++b) {
                if (fs[a] == fs[b]) {
                    fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(b));
                    changed = true;
                    break;
                }
                Polynomial g = gcd(fs[a], fs[b]);
                if (g.is_constant()) continue;
                Polynomial qa = divide_exact(fs[a], g).value().monic();
                Polynomial qb = divide_exact(fs[b], g).value().monic();
                fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(b));
                fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(a));
                fs.push_back(std::move(g));
                if (!qa.is_constant()) fs.push_back(std::move(qa));
                if (!qb.is_constant()) fs.push_back(std::move(qb));
                changed = true;
            }
        }
    }
    return fs;
}

std::string render(const ReducedGB& g) {
    std::string out = "{";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += ", ";
        out += to_string(g.basis()[i]);
    }
    return out + "}";
}

// A W-characteristic set that meets the ordering condition but is not
// normal has a normal prefix whose one-step extension is irregular.
void check_normal_prefix(const TriangularSet& c, ComputeContext* ctx) {
    if (c.is_trivial() || !c.satisfies_ordering_condition() || is_normal(c)) return;
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (is_normal(c.prefix(k)) && !is_regular(c.prefix(k + 1), ctx)) return;
    }
    invariant(false, "non-normal W-characteristic set " + to_string(c) +
                         " has no normal prefix followed by an irregular one");
}

void check_pair(const CharPair& p, ComputeContext* ctx) {
    if (p.is_trivial()) return;
    invariant(p.wchar == wchar_set(p.gb), "pair W-characteristic set mismatch");
    invariant(p.is_regular && is_regular(p.wchar, ctx), "pair triangular set not regular");
    invariant(ideal_equal(sat_triset(p.wchar, ctx), p.gb), "pair is not strong");
    if (p.is_normal) invariant(is_regular(p.wchar, ctx), "normal set is not regular");
}

class DivisorSearch {
public:
    DivisorSearch(const DecompOptions& options, ComputeContext* ctx)
        : options_(options), ctx_(ctx) {}

    DivisorResult run(const ReducedGB& ideal) {
        std::optional<DivisorResult> found = search(ideal, 0, std::nullopt);
        if (!found)
            throw MorbidityError("SRC-divisor search exhausted the branch tree without a divisor",
                                 tree_.str());
        found->nodes = nodes_;
        found->tree = tree_.str();
        return std::move(*found);
    }

    std::string tree() const { return tree_.str(); }

private:
    // Quotient of `ideal` by the pair's ideal, or nullopt if it does not
    // divide.
    std::optional<ReducedGB> divides_ideal(const ReducedGB& ideal, const CharPair& pair) {
        if (pair.is_trivial()) return std::nullopt;
        ReducedGB q = quotient(ideal, pair.gb, ctx_);
        if (q == ideal) return std::nullopt;
        return q;
    }

    DivisorResult success(SrcPairResult r, ReducedGB q, std::size_t depth) {
        return DivisorResult{std::move(r.pair), std::move(q), r.m, depth, 0, {}};
    }

    void log(std::size_t depth, const std::string& line) {
        tree_ << std::string(2 * depth, ' ') << line << '\n';
    }

    std::optional<DivisorResult> search(const ReducedGB& ideal, std::size_t depth,
                                        std::optional<SrcPairResult> first) {
        if (++nodes_ > options_.max_tree_nodes)
            throw ResourceError("SRC-divisor branch tree exceeded " +
                                std::to_string(options_.max_tree_nodes) + " nodes");
        log(depth, "node " + render(ideal));

        SrcPairResult r = first ? std::move(*first) : src_pair_traced(ideal, ctx_);
        if (auto q = divides_ideal(ideal, r.pair)) {
            log(depth, "  divisor " + render(r.pair.gb));
            return success(std::move(r), std::move(*q), depth);
        }
        log(depth, "  src pair " + render(r.pair.gb) + " does not divide");

        Polynomial f;
        std::vector<Polynomial> hs = divisor_candidates(ideal, options_, &f, ctx_);
        {
            std::string line = "  F = " + to_string(f) + ", candidates:";
            for (const auto& h : hs) line += " " + to_string(h);
            log(depth, line);
        }

        std::vector<ReducedGB> children;
        std::vector<SrcPairResult> child_pairs;
        children.reserve(hs.size());
        for (const auto& h : hs) {
            children.push_back(groebner_extend(ideal, std::span(&h, 1), ctx_));
            if (options_.check_invariants)
                invariant(!(children.back() == ideal) && contains(children.back(), ideal),
                          "branch child does not strictly contain its parent");
        }
        for (std::size_t i = 0; i < hs.size(); ++i) {
            SrcPairResult cr = src_pair_traced(children[i], ctx_);
            if (auto q = divides_ideal(ideal, cr.pair)) {
                log(depth, "  H = " + to_string(hs[i]) + " gives divisor " + render(cr.pair.gb));
                return success(std::move(cr), std::move(*q), depth + 1);
            }
            child_pairs.push_back(std::move(cr));
        }
        std::optional<DivisorResult> last;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            if (children[i].is_unit()) continue;
            auto sub = search(children[i], depth + 1, std::move(child_pairs[i]));
            if (!sub) continue;
            if (auto q = divides_ideal(ideal, sub->pair)) {
                sub->quotient = std::move(*q);
                return sub;
            }
            last = std::move(sub);
        }
        // The final pair of the recursive loop is what the search returns
        // when nothing divided; it must divide for a correct run.
        if (last) {
            log(depth, "  last recursive divisor " + render(last->pair.gb) +
                           " does not divide this node");
        }
        return std::nullopt;
    }

    const DecompOptions& options_;
    ComputeContext* ctx_;
    std::size_t nodes_ = 0;
    std::ostringstream tree_;
};

}  // namespace

CharPair CharPair::trivial(const OrderingPtr& ordering) {
    CharPair p{ReducedGB::unit(ordering), TriangularSet::trivial(ordering)};
    p.is_strong = p.is_regular = p.is_normal = true;
    return p;
}

CharPair make_char_pair(ReducedGB gb, ComputeContext* ctx) {
    if (gb.is_unit()) return CharPair::trivial(gb.ordering());
    TriangularSet c = wchar_set(gb);
    CharPair p{std::move(gb), std::move(c)};
    if (p.wchar.is_trivial()) return p;
    const ReducedGB sat = sat_triset(p.wchar, ctx);
    p.is_strong = ideal_equal(sat, p.gb);
    p.is_regular = is_regular(p.wchar, sat);
    p.is_normal = is_normal(p.wchar);
    return p;
}

SrcPairResult src_pair_traced(const ReducedGB& ideal, ComputeContext* ctx) {
    if (ideal.is_zero_ideal()) throw DomainError("SRC pair of the zero ideal");
    SrcPairResult r{CharPair::trivial(ideal.ordering()), 2, {}, {}, false};
    if (ideal.is_unit()) {
        r.pair = CharPair::trivial(ideal.ordering());
        r.reached_unit = true;
        r.gbs.push_back(ideal);
        r.wchars.push_back(r.pair.wchar);
        return r;
    }
    ReducedGB g = ideal;
    TriangularSet c = wchar_set(g);
    r.gbs.push_back(g);
    r.wchars.push_back(c);
    unsigned updates = 0;
    while (true) {
        ReducedGB s = sat_triset(c, ctx);
        if (ideal_equal(s, g)) break;
        g = std::move(s);
        ++updates;
        if (g.is_unit()) {
            r.pair = CharPair::trivial(ideal.ordering());
            r.reached_unit = true;
            r.m = std::max(2u, updates);
            r.gbs.push_back(g);
            r.wchars.push_back(r.pair.wchar);
            return r;
        }
        c = wchar_set(g);
        r.gbs.push_back(g);
        r.wchars.push_back(c);
    }
    r.m = std::max(2u, updates + 1);
    CharPair p{std::move(g), std::move(c)};
    p.is_strong = true;
    // sat(C) = <G> here, so regularity is the prem test against G.
    p.is_regular = is_regular(p.wchar, p.gb);
    p.is_normal = is_normal(p.wchar);
    if (!p.is_regular)
        throw InternalError("strong W-characteristic set " + to_string(p.wchar) + " is not regular");
    r.pair = std::move(p);
    return r;
}

SrcPairResult src_pair_traced(const IdealGens& ideal, ComputeContext* ctx) {
    return src_pair_traced(groebner_basis(ideal, ctx), ctx);
}

CharPair src_pair(const IdealGens& ideal, ComputeContext* ctx) {
    return src_pair_traced(ideal, ctx).pair;
}

std::vector<Polynomial> divisor_candidates(const ReducedGB& ideal, const DecompOptions& options,
                                           Polynomial* f_chosen, ComputeContext* ctx) {
    const TriangularSet cstar = wchar_set(ideal);
    if (cstar.is_trivial()) throw DomainError("divisor candidates of the unit ideal");
    const ReducedGB sat = sat_triset(cstar, ctx);
    const Polynomial* f = nullptr;
    for (const auto& g : sat.basis()) {
        if (!is_member(g, ideal)) {
            f = &g;
            break;
        }
    }
    if (!f) throw InternalError("sat(C*) equals the ideal although its SRC pair does not divide it");
    if (f_chosen) *f_chosen = *f;
    const Polynomial j = initials_product(cstar);

    std::vector<Polynomial> raw;
    if (options.strategy == SplitStrategy::Squarefree) {
        std::vector<Polynomial> parts;
        if (!f->is_constant()) parts.push_back(*f);
        for (const auto& c : cstar.polys()) {
            Polynomial i = ini(c);
            if (!i.is_constant()) parts.push_back(std::move(i));
        }
        for (const auto& p : parts)
            for (auto& s : factor_split(p, SplitStrategy::Squarefree)) raw.push_back(std::move(s));
        raw = coprime_base(std::move(raw));
    } else {
        if (!f->is_constant()) raw.push_back(*f);
        for (const auto& c : cstar.polys()) {
            Polynomial i = ini(c);
            if (!i.is_constant()) raw.push_back(i.monic());
        }
    }
    std::vector<Polynomial> hs;
    for (auto& h : raw) {
        if (is_member(h, ideal)) continue;
        if (std::find(hs.begin(), hs.end(), h) != hs.end()) continue;
        hs.push_back(std::move(h));
    }
    std::sort(hs.begin(), hs.end(), [&](const Polynomial& a, const Polynomial& b) {
        return options.branch_order == BranchOrder::Ascending ? Polynomial::lex_less(a, b)
                                                              : Polynomial::lex_less(b, a);
    });
    return hs;
}

DivisorResult find_src_divisor(const ReducedGB& ideal, const DecompOptions& options,
                               ComputeContext* ctx) {
    if (ideal.is_unit()) throw DomainError("SRC divisor of the unit ideal");
    if (ideal.is_zero_ideal()) throw DomainError("SRC divisor of the zero ideal");
    DivisorSearch search(options, ctx);
    DivisorResult d = search.run(ideal);
    if (options.check_invariants) {
        check_pair(d.pair, ctx);
        invariant(!(d.quotient == ideal) && contains(d.quotient, ideal),
                  "divisor quotient does not strictly contain the ideal");
        invariant(contains(d.pair.gb, ideal), "divisor ideal does not contain the input ideal");
    }
    return d;
}

CharPair src_divisor(const IdealGens& ideal, const DecompOptions& options, ComputeContext* ctx) {
    return find_src_divisor(groebner_basis(ideal, ctx), options, ctx).pair;
}

Decomposition src_decompose(const IdealGens& f, const DecompOptions& options,
                            ComputeContext* ctx) {
    ComputeContext local;
    if (!ctx) ctx = &local;
    const ComputeStats before = ctx->stats;
    const auto start = std::chrono::steady_clock::now();

    Decomposition d{{}, f, {}, {}};
    ReducedGB ideal = groebner_basis(f, ctx);
    if (ideal.is_zero_ideal()) throw DomainError("decomposition of the zero ideal");
    d.ideal_chain.push_back(ideal);
    while (!ideal.is_unit()) {
        DivisorResult div = find_src_divisor(ideal, options, ctx);
        if (options.check_invariants) check_normal_prefix(wchar_set(ideal), ctx);
        invariant(!(div.quotient == ideal), "quotient did not enlarge the ideal");
        d.stats.iterations_m.push_back(div.m);
        d.stats.branch_depth.push_back(div.depth);
        d.stats.tree_nodes += div.nodes;
        d.stats.branch_trees.push_back(std::move(div.tree));
        if (options.on_pair) options.on_pair(div.pair, div.m);
        d.pairs.push_back(std::move(div.pair));
        ideal = options.division == Division::Saturation ? saturate(ideal, d.pairs.back().gb, ctx)
                                                         : std::move(div.quotient);
        d.ideal_chain.push_back(ideal);
    }

    for (std::size_t i = 0; i < d.pairs.size(); ++i)
        for (std::size_t j = 0; j < d.pairs.size(); ++j)
            if (i != j && contains(d.pairs[i].gb, d.pairs[j].gb))
                d.stats.containment_warnings.push_back("pair " + std::to_string(i + 1) +
                                                       " contains pair " + std::to_string(j + 1));

    d.stats.total = std::chrono::steady_clock::now() - start;
    d.stats.compute = ctx->stats;
    d.stats.compute.gb.calls -= before.gb.calls;
    d.stats.compute.gb.time -= before.gb.time;
    d.stats.compute.sat.calls -= before.sat.calls;
    d.stats.compute.sat.time -= before.sat.time;
    d.stats.compute.quo.calls -= before.quo.calls;
    d.stats.compute.quo.time -= before.quo.time;
    d.stats.compute.other.calls -= before.other.calls;
    d.stats.compute.other.time -= before.other.time;
    d.stats.compute.gb_runs -= before.gb_runs;
    d.stats.compute.pairs_reduced -= before.pairs_reduced;
    d.stats.compute.zero_reductions -= before.zero_reductions;
    return d;
}

std::vector<CharPair> charpairs_from_regular_sets(std::span<const TriangularSet> sets,
                                                  ComputeContext* ctx) {
    std::vector<CharPair> out;
    out.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const TriangularSet& t = sets[i];
        const std::string where = "triangular set " + std::to_string(i + 1);
        if (t.is_trivial()) throw DomainError(where + " is trivial");
        if (!t.satisfies_ordering_condition())
            throw DomainError(where + " violates the variable ordering condition");
        const ReducedGB sat = sat_triset(t, ctx);
        if (!is_regular(t, sat)) throw DomainError(where + " is not regular");
        out.push_back(make_char_pair(sat, ctx));
    }
    return out;
}

VerificationReport verify_decomposition(const IdealGens& f, std::span<const CharPair> pairs,
                                        ComputeContext* ctx) {
    VerificationReport rep;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const CharPair& p = pairs[i];
        const std::string tag = "pair " + std::to_string(i + 1);
        if (p.is_trivial()) {
            rep.pairs_valid = false;
            rep.failures.push_back(tag + " is the trivial pair");
            continue;
        }
        if (!(p.wchar == wchar_set(p.gb))) {
            rep.pairs_valid = false;
            rep.failures.push_back(tag + ": triangular set is not the W-characteristic set");
            continue;
        }
        const ReducedGB sat = sat_triset(p.wchar, ctx);
        if (!ideal_equal(sat, p.gb)) {
            rep.pairs_valid = false;
            rep.failures.push_back(tag + ": sat(C) differs from <G>");
        }
        if (!is_regular(p.wchar, sat)) {
            rep.pairs_valid = false;
            rep.failures.push_back(tag + ": C is not regular");
        }
    }

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (const auto& g : f.gens()) {
            if (!radical_member(g, pairs[i].gb, ctx)) {
                rep.forward = false;
                rep.failures.push_back("generator " + to_string(g) + " not in the radical of pair " +
                                       std::to_string(i + 1));
            }
        }
    }

    ReducedGB meet = ReducedGB::unit(f.ordering());
    for (const auto& p : pairs) meet = intersect(meet, p.gb, ctx);
    const ReducedGB fgb = groebner_basis(f, ctx);
    for (const auto& g : meet.basis()) {
        if (!radical_member(g, fgb, ctx)) {
            rep.backward = false;
            rep.failures.push_back("intersection element " + to_string(g) +
                                   " not in the radical of the input");
        }
    }
    return rep;
}

VerificationReport verify_decomposition(const IdealGens& f, const Decomposition& d,
                                        ComputeContext* ctx) {
    return verify_decomposition(f, std::span<const CharPair>(d.pairs), ctx);
}

}  // namespace srcdec
