#include "properties.hpp"

#include <algorithm>
#include <sstream>

#include "srcdec/errors.hpp"
#include "srcdec/ideal_ops.hpp"
#include "srcdec/src_decomp.hpp"

namespace srcdec::properties {

namespace {

constexpr std::size_t kTermBudget = 200'000;

std::string show(const IdealGens& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.gens().size(); ++i) os << (i ? ", " : "") << to_string(f.gens()[i]);
    os << "} over ";
    const auto& names = f.ordering()->names();
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? " < " : "") << names[i];
    return os.str();
}

std::string show(const TriangularSet& t) { return to_string(t); }

// Runs `body` until `instances` of them complete. The body receives a check
// callback and a fresh context; a ResourceError redraws the instance.
template <typename Body>
SuiteResult drive(const char* name, std::size_t instances, std::uint64_t seed, Body body) {
    SuiteResult res;
    res.name = name;
    Generator gen(seed);
    const std::size_t max_attempts = instances * 5 + 20;
    for (std::size_t attempt = 0; res.instances < instances && attempt < max_attempts; ++attempt) {
        ComputeContext ctx;
        ctx.gb.budget.max_total_terms = kTermBudget;
        std::string subject;
        auto check = [&](bool ok, const std::string& what) {
            ++res.checks;
            if (!ok && res.failures.size() < 20) res.failures.push_back(what + " for " + subject);
        };
        try {
            body(gen, ctx, subject, check);
            ++res.instances;
        } catch (const ResourceError&) {
            ++res.skipped;
        } catch (const std::exception& e) {
            ++res.instances;
            check(false, std::string("exception '") + e.what() + "'");
        }
    }
    return res;
}

bool all_members(const std::vector<Polynomial>& ps, const ReducedGB& g) {
    return std::all_of(ps.begin(), ps.end(), [&](const Polynomial& p) { return is_member(p, g); });
}

bool all_radical(const std::vector<Polynomial>& ps, const ReducedGB& g, ComputeContext* ctx) {
    return std::all_of(ps.begin(), ps.end(),
                       [&](const Polynomial& p) { return radical_member(p, g, ctx); });
}

bool is_reduced(const ReducedGB& g) {
    const auto& b = g.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].leading_coeff() != 1) return false;
        if (i > 0 && !(b[i - 1].leading_monomial() < b[i].leading_monomial())) return false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : b[j].terms())
                if (b[i].leading_monomial().divides(t.mono)) return false;
        }
    }
    return true;
}

// Nonempty order-preserving prefix ordering with the smallest k variables.
OrderingPtr prefix_ordering(const OrderingPtr& ord, std::size_t k) {
    const auto& names = ord->names();
    return make_ordering(std::vector<std::string>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(k)));
}

}  // namespace

// ---------------------------------------------------------------------------

Generator::Generator(std::uint64_t seed) : rng_(seed) {}

int Generator::coin(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

Rational Generator::coefficient() {
    int c = coin(9) - 4;
    if (c == 0) c = 1;
    Rational r(c);
    if (coin(6) == 0) r /= Rational(2 + coin(2));
    return r;
}

OrderingPtr Generator::ordering() {
    std::vector<std::string> names = {"x", "y", "z"};
    std::shuffle(names.begin(), names.end(), rng_);
    names.resize(coin(3) == 0 ? 2 : 3);
    return make_ordering(std::move(names));
}

Polynomial Generator::polynomial(const OrderingPtr& ord, std::size_t max_terms, unsigned max_degree) {
    Polynomial p(ord);
    const std::size_t n = 1 + static_cast<std::size_t>(coin(static_cast<int>(max_terms)));
    for (std::size_t k = 0; k < n; ++k) {
        Monomial m(ord->size());
        const unsigned deg = static_cast<unsigned>(coin(static_cast<int>(max_degree) + 1));
        for (unsigned d = 0; d < deg; ++d) {
            const std::size_t v = static_cast<std::size_t>(coin(static_cast<int>(ord->size())));
            m.set(v, m[v] + 1u);
        }
        p += Polynomial::monomial(ord, coefficient(), m);
    }
    return p;
}

Polynomial Generator::nonconstant(const OrderingPtr& ord, std::size_t max_terms) {
    while (true) {
        Polynomial p = polynomial(ord, max_terms);
        if (!p.is_constant()) return p;
    }
}

IdealGens Generator::ideal(const OrderingPtr& ord, std::size_t max_gens) {
    IdealGens f(ord);
    while (f.empty()) {
        const std::size_t n = 1 + static_cast<std::size_t>(coin(static_cast<int>(max_gens)));
        for (std::size_t k = 0; k < n; ++k) {
            if (coin(2) == 0) f.add(polynomial(ord, 2, 1) * polynomial(ord, 3, 2));
            else f.add(polynomial(ord, 4, 3));
        }
    }
    return f;
}

TriangularSet Generator::triangular(const OrderingPtr& ord) {
    std::vector<Polynomial> polys;
    for (std::size_t v = 0; v < ord->size(); ++v) {
        if (coin(3) == 0 && !(v + 1 == ord->size() && polys.empty())) continue;
        Polynomial p(ord);
        do {
            p = Polynomial(ord);
            const std::size_t n = 1 + static_cast<std::size_t>(coin(3));
            for (std::size_t k = 0; k < n; ++k) {
                Monomial m(ord->size());
                const unsigned deg = static_cast<unsigned>(coin(4));
                for (unsigned d = 0; d < deg; ++d) {
                    const std::size_t w = static_cast<std::size_t>(coin(static_cast<int>(v + 1)));
                    m.set(w, m[w] + 1u);
                }
                p += Polynomial::monomial(ord, coefficient(), m);
            }
        } while (p.leading_variable() != static_cast<int>(v));
        polys.push_back(std::move(p));
    }
    return TriangularSet(ord, std::move(polys));
}

// ---------------------------------------------------------------------------

SuiteResult pseudo_division(std::size_t instances, std::uint64_t seed) {
    return drive("pseudo-division identity", instances, seed,
                 [](Generator& gen, ComputeContext&, std::string& subject, auto check) {
        const auto ord = gen.ordering();
        const Polynomial p = gen.polynomial(ord);
        const Polynomial q = gen.nonconstant(ord);
        const Polynomial s = gen.polynomial(ord);
        subject = "p = " + to_string(p) + ", q = " + to_string(q);

        const std::size_t v = lv(q);
        const auto d = pseudo_divide(p, q);
        check(ini(q).pow(d.exponent) * p == d.quotient * q + d.remainder, "division identity");
        check(d.remainder.degree(v) < q.degree(v), "remainder degree");
        const int bound = static_cast<int>(p.degree(v)) - static_cast<int>(q.degree(v)) + 1;
        check(static_cast<int>(d.exponent) <= std::max(bound, 0), "exponent bound");
        check(prem(p, q) == d.remainder, "prem agrees with the trace");

        check(p + q == q + p, "addition commutes");
        check(p * q == q * p, "multiplication commutes");
        check(p * (q + s) == p * q + p * s, "distributivity");

        const Polynomial sf = squarefree_part(q);
        check(divide_exact(q, sf).has_value(), "squarefree part divides");
        for (std::size_t x = 0; x < ord->size(); ++x) {
            if (!sf.involves(x)) continue;
            check(!gcd(sf, sf.derivative(x)).involves(x), "squarefree part has no repeated factor");
        }
        Polynomial product = Polynomial::constant(ord, 1);
        for (const auto& h : factor_split(q)) {
            check(!h.is_constant(), "split factor is nonconstant");
            product *= h;
        }
        check(squarefree_part(product) == sf, "split factors keep the squarefree part");
    });
}

SuiteResult groebner_self_check(std::size_t instances, std::uint64_t seed) {
    return drive("groebner self-check and canonicity", instances, seed,
                 [](Generator& gen, ComputeContext& ctx, std::string& subject, auto check) {
        const auto ord = gen.ordering();
        const IdealGens f = gen.ideal(ord);
        subject = show(f);
        const ReducedGB g = groebner_basis(f, &ctx);
        check(is_groebner_of(g, f.gens()), "S-polynomials and generators reduce to zero");
        check(is_reduced(g), "basis is reduced");

        std::vector<Polynomial> shuffled = f.gens();
        std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
        for (auto& p : shuffled) p = p.scaled(Rational(1 + static_cast<int>(gen.engine()() % 5), 3));
        shuffled.push_back(shuffled.front() * gen.polynomial(ord, 2, 1) + shuffled.back());
        check(groebner_basis(IdealGens(ord, shuffled), &ctx) == g, "canonical under shuffling");

        const Polynomial p = gen.polynomial(ord);
        const Polynomial q = gen.polynomial(ord);
        const Polynomial np = normal_form(p, g);
        check(normal_form(np, g) == np, "normal form is idempotent");
        check(normal_form(p + q, g) == np + normal_form(q, g), "normal form is linear");
        check(is_member(p - np, g), "p minus its normal form is in the ideal");

        for (std::size_t k = 1; k < ord->size(); ++k) {
            const auto target = prefix_ordering(ord, k);
            const ReducedGB e = eliminate(g, target);
            for (const auto& h : e.basis())
                check(is_member(h.embed(ord), g), "eliminant lies in the ideal");
        }
    });
}

SuiteResult zero_relations(std::size_t instances, std::uint64_t seed) {
    return drive("zero relations of the W-characteristic set", instances, seed,
                 [](Generator& gen, ComputeContext& ctx, std::string& subject, auto check) {
        const auto ord = gen.ordering();
        const IdealGens f = gen.ideal(ord);
        subject = show(f);
        const ReducedGB g = groebner_basis(f, &ctx);
        const TriangularSet c = wchar_set(g);
        if (g.is_unit()) {
            check(c.is_trivial(), "unit ideal has the trivial W-characteristic set");
            return;
        }
        for (const auto& p : f.gens()) check(prem_triset(p, c).is_zero(), "prem of a generator vanishes");
        for (const auto& t : c.polys()) {
            check(std::find(g.basis().begin(), g.basis().end(), t) != g.basis().end(),
                  "W-characteristic set lies inside the basis");
            check(is_member(t, g), "<C> inside <F>");
        }
        const ReducedGB s = sat_triset(c, &ctx);
        check(all_members(f.gens(), s), "<F> inside sat(C)");
        check(all_members(c.polys(), s), "sat(C) contains C");
    });
}

SuiteResult quotient_splitting(std::size_t instances, std::uint64_t seed) {
    return drive("quotient splitting of radicals", instances, seed,
                 [](Generator& gen, ComputeContext& ctx, std::string& subject, auto check) {
        const auto ord = gen.ordering();
        const IdealGens f = gen.ideal(ord, 2);
        const Polynomial h = gen.nonconstant(ord, 3);
        subject = show(f) + " with extra " + to_string(h);
        const ReducedGB i = groebner_basis(f, &ctx);
        std::vector<Polynomial> bigger = f.gens();
        bigger.push_back(h);
        const ReducedGB j = groebner_basis(IdealGens(ord, bigger), &ctx);
        check(all_members(i.basis(), j), "I inside J");

        const ReducedGB q = quotient(i, j, &ctx);
        check(all_members(i.basis(), q), "I inside I : J");
        check(all_radical(i.basis(), j, &ctx), "I inside the radical of J");
        check(all_radical(i.basis(), q, &ctx), "I inside the radical of I : J");
        check(all_radical(intersect(j, q, &ctx).basis(), i, &ctx), "J meet (I : J) inside the radical of I");
        check(divides(j, i, &ctx) == !ideal_equal(q, i), "divides agrees with the quotient");

        const ReducedGB sj = saturate(i, j, &ctx);
        check(all_radical(intersect(j, sj, &ctx).basis(), i, &ctx),
              "J meet (I : J^inf) inside the radical of I");
        check(all_members(q.basis(), sj), "I : J inside I : J^inf");

        const ReducedGB sh = saturate_by_poly(i, h, &ctx);
        check(all_members(i.basis(), sh), "saturation contains I");
        check(saturate_by_poly(sh, h, &ctx) == sh, "saturation is a fixpoint");
    });
}

SuiteResult src_contract(std::size_t instances, std::uint64_t seed) {
    return drive("SRC pair contract", instances, seed,
                 [](Generator& gen, ComputeContext& ctx, std::string& subject, auto check) {
        const auto ord = gen.ordering();
        const IdealGens f = gen.ideal(ord);
        subject = show(f);

        const CharPair single = src_pair(f, &ctx);
        if (!single.is_trivial()) {
            check(single.is_strong && single.is_regular, "src_pair returns an SRC pair");
            check(all_members(f.gens(), single.gb), "<F> inside the pair's ideal");
        }

        DecompOptions opts;
        opts.check_invariants = true;
        const Decomposition d = src_decompose(f, opts, &ctx);
        for (const auto& p : d.pairs) {
            check(!p.is_trivial(), "no trivial pair in a decomposition");
            check(p.wchar == wchar_set(p.gb), "wchar matches the basis");
            check(is_regular(p.wchar, &ctx), "wchar is regular");
            check(sat_triset(p.wchar, &ctx) == p.gb, "sat(C) equals <G>");
            check(all_members(f.gens(), p.gb), "<F> inside <G>");
        }
        for (std::size_t k = 1; k < d.ideal_chain.size(); ++k) {
            const auto& prev = d.ideal_chain[k - 1];
            const auto& next = d.ideal_chain[k];
            check(!ideal_equal(prev, next) && all_members(prev.basis(), next),
                  "ideal chain ascends strictly");
        }
        check(d.pairs.empty() == groebner_basis(f, &ctx).is_unit(), "empty exactly for the unit ideal");
        check(verify_decomposition(f, d, &ctx).passed(), "decomposition verifies");
    });
}

SuiteResult normal_implies_regular(std::size_t instances, std::uint64_t seed) {
    return drive("normal implies regular", instances, seed,
                 [](Generator& gen, ComputeContext& ctx, std::string& subject, auto check) {
        const auto ord = gen.ordering();
        std::vector<TriangularSet> sets;
        const TriangularSet t = gen.triangular(ord);
        subject = show(t);
        if (is_normal(t)) check(is_regular(t, &ctx), "normal random set is regular");

        const IdealGens f = gen.ideal(ord);
        subject = show(f);
        const auto trace = src_pair_traced(f, &ctx);
        for (const auto& c : trace.wchars) {
            if (c.is_trivial()) continue;
            if (is_normal(c)) check(is_regular(c, &ctx), "normal W-characteristic set is regular");
            if (c.satisfies_ordering_condition() && !is_normal(c)) {
                bool found = false;
                for (std::size_t k = 1; k < c.size() && !found; ++k)
                    found = is_normal(c.prefix(k)) && !is_regular(c.prefix(k + 1), &ctx);
                check(found, "non-normal W-characteristic set " + show(c) +
                                 " has a normal prefix followed by an irregular one");
            }
        }
        if (!trace.pair.is_trivial() && trace.pair.is_normal)
            check(trace.pair.is_regular, "normal pair is regular");
    });
}

const std::vector<NamedSuite>& all_suites() {
    static const std::vector<NamedSuite> suites = {
        {"pseudo-division identity", pseudo_division},
        {"groebner self-check and canonicity", groebner_self_check},
        {"zero relations of the W-characteristic set", zero_relations},
        {"quotient splitting of radicals", quotient_splitting},
        {"SRC pair contract", src_contract},
        {"normal implies regular", normal_implies_regular},
    };
    return suites;
}

}  // namespace srcdec::properties
