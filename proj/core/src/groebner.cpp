#include "srcdec/groebner.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "srcdec/errors.hpp"

namespace srcdec {

// ---------------------------------------------------------------------------
// IdealGens / ReducedGB

IdealGens::IdealGens(OrderingPtr ordering, std::vector<Polynomial> gens)
    : ordering_(std::move(ordering)) {
    for (auto& p : gens) add(std::move(p));
}

void IdealGens::add(Polynomial p) {
    require_same_ordering(ordering_, p.ordering());
    if (!p.is_zero()) gens_.push_back(std::move(p));
}

ReducedGB::ReducedGB(OrderingPtr ordering) : ordering_(std::move(ordering)) {}

ReducedGB::ReducedGB(OrderingPtr ordering, std::vector<Polynomial> basis)
    : ordering_(std::move(ordering)), basis_(std::move(basis)) {
    std::sort(basis_.begin(), basis_.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.leading_monomial() < b.leading_monomial();
    });
}

ReducedGB ReducedGB::from_reduced(OrderingPtr ordering, std::vector<Polynomial> basis) {
    for (const auto& p : basis) require_same_ordering(ordering, p.ordering());
    return ReducedGB(std::move(ordering), std::move(basis));
}

ReducedGB ReducedGB::unit(OrderingPtr ordering) {
    auto one = Polynomial::constant(ordering, 1);
    return ReducedGB(std::move(ordering), {std::move(one)});
}

std::size_t ReducedGB::term_count() const noexcept {
    std::size_t n = 0;
    for (const auto& p : basis_) n += p.size();
    return n;
}

bool ReducedGB::operator==(const ReducedGB& other) const {
    return same_ordering(ordering_, other.ordering_) && basis_ == other.basis_;
}

// ---------------------------------------------------------------------------
// Integer-coefficient engine

namespace {

struct ZTerm {
    Monomial mono;
    Integer coeff;
};

struct ZPoly {
    std::vector<ZTerm> terms;
    unsigned sugar = 0;

    bool zero() const { return terms.empty(); }
    const Monomial& lead() const { return terms.front().mono; }
};

std::uint32_t divmask(const Monomial& m) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < m.arity(); ++i)
        if (m[i] != 0) mask |= (1u << i);
    return mask;
}

void make_primitive(ZPoly& p) {
    if (p.terms.empty()) return;
    Integer g = 0;
    for (const auto& t : p.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(p.terms.front().coeff) < 0) g = -g;
    if (g != 1)
        for (auto& t : p.terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_zpoly(const Polynomial& p) {
    Polynomial q = p.primitive();
    ZPoly z;
    z.terms.reserve(q.size());
    for (const auto& t : q.terms()) z.terms.push_back({t.mono, t.coeff.get_num()});
    z.sugar = q.total_degree();
    return z;
}

Polynomial to_monic_polynomial(const OrderingPtr& ord, const ZPoly& z) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(z.terms.size());
    const Integer& lc = z.terms.front().coeff;
    for (const auto& t : z.terms) {
        Rational c(t.coeff, lc);
        c.canonicalize();
        terms.push_back({std::move(c), t.mono});
    }
    return Polynomial::from_terms(ord, std::move(terms));
}

struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    unsigned sugar;
};

class Engine {
public:
    Engine(OrderingPtr ord, ComputeContext* ctx)
        : ord_(std::move(ord)), ctx_(ctx), opts_(gb_options(ctx)) {}

    // Registers an element whose pairs with earlier base elements need no
    // processing.
    void add_base(ZPoly p) {
        std::uint32_t idx = store(std::move(p));
        active_.push_back(idx);
    }

    // Reduces and inserts a new generator. Returns false once the ideal is
    // known to be the unit ideal.
    bool add_generator(ZPoly p) {
        reduce_full(p);
        if (p.zero()) return true;
        if (p.lead().is_one()) {
            unit_ = true;
            return false;
        }
        insert(std::move(p));
        return true;
    }

    bool run() {
        while (!pairs_.empty() && !unit_) {
            std::size_t best = select();
            Pair pr = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();
            ZPoly s = spoly(pr);
            if (ctx_) ++ctx_->stats.pairs_reduced;
            reduce_full(s);
            if (s.zero()) {
                if (ctx_) ++ctx_->stats.zero_reductions;
                continue;
            }
            if (s.lead().is_one()) {
                unit_ = true;
                break;
            }
            insert(std::move(s));
        }
        return !unit_;
    }

    bool unit() const { return unit_; }

    std::vector<Polynomial> reduced_basis() {
        if (unit_) return {Polynomial::constant(ord_, 1)};
        std::vector<std::uint32_t> keep = active_;
        std::sort(keep.begin(), keep.end(), [this](std::uint32_t a, std::uint32_t b) {
            return polys_[a].lead() < polys_[b].lead();
        });
        // Tail-reduce each element against the others. Leading terms are
        // pairwise non-divisible, so reducers of a tail term are never the
        // element itself.
        active_ = keep;
        std::vector<Polynomial> out;
        out.reserve(keep.size());
        for (std::uint32_t idx : keep) {
            ZPoly p = polys_[idx];
            reduce(p, Mode::Tail, idx);
            polys_[idx] = p;
            refresh_mask(idx);
            out.push_back(to_monic_polynomial(ord_, p));
        }
        return out;
    }

private:
    std::uint32_t store(ZPoly p) {
        total_terms_ += p.terms.size();
        if (polys_.size() + 1 > opts_.budget.max_basis_size)
            throw ResourceError("Groebner basis size budget exceeded (" +
                                std::to_string(opts_.budget.max_basis_size) + " elements)");
        if (total_terms_ > opts_.budget.max_total_terms)
            throw ResourceError("Groebner basis term budget exceeded (" +
                                std::to_string(opts_.budget.max_total_terms) + " terms)");
        polys_.push_back(std::move(p));
        masks_.push_back(divmask(polys_.back().lead()));
        return static_cast<std::uint32_t>(polys_.size() - 1);
    }

    void refresh_mask(std::uint32_t idx) { masks_[idx] = divmask(polys_[idx].lead()); }

    std::size_t select() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            bool better;
            if (opts_.selection == PairSelection::Sugar && a.sugar != b.sugar) {
                better = a.sugar < b.sugar;
            } else {
                auto c = a.lcm <=> b.lcm;
                if (c != 0) better = c < 0;
                else better = std::tie(a.i, a.j) < std::tie(b.i, b.j);
            }
            if (better) best = k;
        }
        return best;
    }

    ZPoly spoly(const Pair& pr) const {
        const ZPoly& f = polys_[pr.i];
        const ZPoly& g = polys_[pr.j];
        Monomial mf = pr.lcm.quotient(f.lead());
        Monomial mg = pr.lcm.quotient(g.lead());
        Integer d;
        mpz_gcd(d.get_mpz_t(), f.terms.front().coeff.get_mpz_t(), g.terms.front().coeff.get_mpz_t());
        Integer cf = g.terms.front().coeff / d;
        Integer cg = f.terms.front().coeff / d;
        // cf*mf*f - cg*mg*g, skipping the cancelling leading terms.
        ZPoly out;
        out.sugar = pr.sugar;
        std::size_t n = 0;
        merge_into(out.terms, n, f.terms, 1, f.terms.size(), cf, &mf, g.terms, 1, cg, &mg);
        out.terms.resize(n);
        make_primitive(out);
        return out;
    }

    static ZTerm& slot(std::vector<ZTerm>& out, std::size_t& n) {
        if (n == out.size()) out.emplace_back();
        return out[n++];
    }

    // out[n..] = ca * shift_a * a[from_a..to_a) - cb * shift_b * b[from_b..]
    static void merge_into(std::vector<ZTerm>& out, std::size_t& n, const std::vector<ZTerm>& a,
                           std::size_t from_a, std::size_t to_a, const Integer& ca,
                           const Monomial* sa, const std::vector<ZTerm>& b, std::size_t from_b,
                           const Integer& cb, const Monomial* sb) {
        out.reserve(n + (to_a - from_a) + (b.size() - from_b));
        std::size_t i = from_a, j = from_b;
        Monomial ma, mb;
        bool have_a = false, have_b = false;
        const bool unit_a = ca == 1;
        while (true) {
            if (!have_a && i < to_a) {
                ma = sa ? a[i].mono * *sa : a[i].mono;
                have_a = true;
            }
            if (!have_b && j < b.size()) {
                mb = sb ? b[j].mono * *sb : b[j].mono;
                have_b = true;
            }
            if (!have_a && !have_b) break;
            std::strong_ordering c = !have_a   ? std::strong_ordering::less
                                     : !have_b ? std::strong_ordering::greater
                                               : (ma <=> mb);
            if (c > 0) {
                ZTerm& t = slot(out, n);
                t.mono = ma;
                if (unit_a) mpz_set(t.coeff.get_mpz_t(), a[i].coeff.get_mpz_t());
                else mpz_mul(t.coeff.get_mpz_t(), a[i].coeff.get_mpz_t(), ca.get_mpz_t());
                ++i;
                have_a = false;
            } else if (c < 0) {
                ZTerm& t = slot(out, n);
                t.mono = mb;
                mpz_mul(t.coeff.get_mpz_t(), b[j].coeff.get_mpz_t(), cb.get_mpz_t());
                mpz_neg(t.coeff.get_mpz_t(), t.coeff.get_mpz_t());
                ++j;
                have_b = false;
            } else {
                ZTerm& t = slot(out, n);
                if (unit_a) mpz_set(t.coeff.get_mpz_t(), a[i].coeff.get_mpz_t());
                else mpz_mul(t.coeff.get_mpz_t(), a[i].coeff.get_mpz_t(), ca.get_mpz_t());
                mpz_submul(t.coeff.get_mpz_t(), b[j].coeff.get_mpz_t(), cb.get_mpz_t());
                if (sgn(t.coeff) == 0) --n;
                else t.mono = ma;
                ++i;
                ++j;
                have_a = have_b = false;
            }
        }
    }

    int find_reducer(const Monomial& m, std::uint32_t skip) const {
        const std::uint32_t mm = divmask(m);
        for (std::uint32_t idx : active_) {
            if (idx == skip) continue;
            if (masks_[idx] & ~mm) continue;
            if (polys_[idx].lead().divides(m)) return static_cast<int>(idx);
        }
        return -1;
    }

    enum class Mode { Top, Full, Tail };

    // Reduces p modulo the active elements. Top reduces the leading term
    // until irreducible, Full reduces every term, and Tail every term after
    // the leading one. Irreducible terms move to a remainder whose pending
    // scale factors are applied in batches.
    void reduce(ZPoly& p, Mode mode,
                std::uint32_t skip = std::numeric_limits<std::uint32_t>::max()) {
        std::size_t wn = 0;
        for (const auto& t : p.terms) {
            ZTerm& s = slot(work_, wn);
            s.mono = t.mono;
            mpz_set(s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
        }
        std::size_t rn = 0;
        rem_epoch_.clear();
        factors_.clear();
        std::size_t start = 0;
        if (mode == Mode::Tail && wn > 0) {
            std::swap(slot(rem_, rn), work_[0]);
            rem_epoch_.push_back(0);
            start = 1;
        }
        unsigned steps = 0;
        Integer d, a, b;
        const std::uint64_t limit = opts_.budget.max_reductions;
        while (start < wn) {
            const ZTerm& lead = work_[start];
            const int r = find_reducer(lead.mono, skip);
            if (r < 0) {
                if (mode == Mode::Top) break;
                std::swap(slot(rem_, rn), work_[start]);
                rem_epoch_.push_back(factors_.size());
                ++start;
                continue;
            }
            const ZPoly& g = polys_[static_cast<std::size_t>(r)];
            const Monomial shift = lead.mono.quotient(g.lead());
            mpz_gcd(d.get_mpz_t(), g.terms.front().coeff.get_mpz_t(), lead.coeff.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), g.terms.front().coeff.get_mpz_t(), d.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), lead.coeff.get_mpz_t(), d.get_mpz_t());
            std::size_t nn = 0;
            merge_into(next_, nn, work_, start + 1, wn, a, nullptr, g.terms, 1, b, &shift);
            work_.swap(next_);
            wn = nn;
            start = 0;
            if (a != 1) factors_.push_back(a);
            p.sugar = std::max(p.sugar, g.sugar + shift.total_degree());
            if (++steps % 8 == 0) remove_content(rn, wn);
            if (limit != 0 && ++reductions_ > limit)
                throw ResourceError("Groebner basis reduction budget exceeded");
        }
        flush_remainder(rn);
        p.terms.resize(rn + (wn - start));
        for (std::size_t k = 0; k < rn; ++k) std::swap(p.terms[k], rem_[k]);
        for (std::size_t k = start; k < wn; ++k) std::swap(p.terms[rn + k - start], work_[k]);
        make_primitive(p);
    }

    // Applies the scale factors recorded after each remainder term.
    void flush_remainder(std::size_t rn) {
        if (factors_.empty()) return;
        Integer factor = 1;
        std::size_t e = factors_.size();
        for (std::size_t k = rn; k-- > 0;) {
            while (e > rem_epoch_[k]) mpz_mul(factor.get_mpz_t(), factor.get_mpz_t(), factors_[--e].get_mpz_t());
            if (factor != 1) mpz_mul(rem_[k].coeff.get_mpz_t(), rem_[k].coeff.get_mpz_t(), factor.get_mpz_t());
        }
        factors_.clear();
        std::fill(rem_epoch_.begin(), rem_epoch_.begin() + static_cast<std::ptrdiff_t>(rn), 0);
    }

    // Divides remainder and working terms by their common content.
    void remove_content(std::size_t rn, std::size_t wn) {
        Integer g = 0;
        for (std::size_t k = 0; k < wn && g != 1; ++k)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), work_[k].coeff.get_mpz_t());
        if (g == 1 || g == 0) return;
        flush_remainder(rn);
        for (std::size_t k = 0; k < rn && g != 1; ++k)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rem_[k].coeff.get_mpz_t());
        if (g == 1) return;
        for (std::size_t k = 0; k < rn; ++k)
            mpz_divexact(rem_[k].coeff.get_mpz_t(), rem_[k].coeff.get_mpz_t(), g.get_mpz_t());
        for (std::size_t k = 0; k < wn; ++k)
            mpz_divexact(work_[k].coeff.get_mpz_t(), work_[k].coeff.get_mpz_t(), g.get_mpz_t());
    }

    void reduce_full(ZPoly& p) { reduce(p, Mode::Full); }

    void insert(ZPoly h) {
        const std::uint32_t hi = store(std::move(h));
        const Monomial lh = polys_[hi].lead();

        struct Cand {
            std::uint32_t g;
            Monomial lcm;
            bool coprime;
            bool alive = true;
        };
        std::vector<Cand> cands;
        cands.reserve(active_.size());
        for (std::uint32_t g : active_) {
            const Monomial& lg = polys_[g].lead();
            cands.push_back({g, lh.lcm(lg), lh.coprime(lg)});
        }
        // Chain criterion among new pairs: drop (h, g) if some other new
        // pair has an lcm properly dividing this one.
        for (auto& c : cands) {
            for (const auto& o : cands) {
                if (&o == &c) continue;
                if (o.lcm.divides(c.lcm) && !(o.lcm == c.lcm)) {
                    c.alive = false;
                    break;
                }
            }
        }
        // Among pairs with identical lcm keep one, none if any is coprime.
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!cands[a].alive) continue;
            bool any_coprime = cands[a].coprime;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (cands[b].alive && cands[b].lcm == cands[a].lcm) {
                    any_coprime = any_coprime || cands[b].coprime;
                    cands[b].alive = false;
                }
            }
            if (any_coprime) cands[a].alive = false;
        }
        // Old pairs made redundant by h.
        std::erase_if(pairs_, [&](const Pair& p) {
            if (!lh.divides(p.lcm)) return false;
            Monomial li = polys_[p.i].lead().lcm(lh);
            Monomial lj = polys_[p.j].lead().lcm(lh);
            return !(li == p.lcm) && !(lj == p.lcm);
        });
        const ZPoly& hp = polys_[hi];
        for (const auto& c : cands) {
            if (!c.alive) continue;
            const ZPoly& gp = polys_[c.g];
            unsigned s = std::max(hp.sugar + c.lcm.total_degree() - hp.lead().total_degree(),
                                  gp.sugar + c.lcm.total_degree() - gp.lead().total_degree());
            pairs_.push_back({c.g, hi, c.lcm, s});
        }
        std::erase_if(active_, [&](std::uint32_t g) { return lh.divides(polys_[g].lead()); });
        active_.push_back(hi);
    }

    OrderingPtr ord_;
    ComputeContext* ctx_;
    const GbOptions& opts_;
    std::vector<ZPoly> polys_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::uint32_t> active_;
    std::vector<Pair> pairs_;
    std::vector<ZTerm> work_, next_, rem_;
    std::vector<std::size_t> rem_epoch_;
    std::vector<Integer> factors_;
    std::size_t total_terms_ = 0;
    std::uint64_t reductions_ = 0;
    bool unit_ = false;
};

ReducedGB run_engine(const OrderingPtr& ord, const ReducedGB* base,
                     std::span<const Polynomial> extra, ComputeContext* ctx) {
    PhaseScope scope(ctx, Phase::Groebner);
    if (ctx) ++ctx->stats.gb_runs;
    if (base && base->is_unit()) return *base;
    Engine engine(ord, ctx);
    if (base)
        for (const auto& p : base->basis()) engine.add_base(to_zpoly(p));

    std::vector<ZPoly> gens;
    for (const auto& p : extra) {
        require_same_ordering(ord, p.ordering());
        if (p.is_zero()) continue;
        if (p.is_constant()) return ReducedGB::unit(ord);
        gens.push_back(to_zpoly(p));
    }
    std::stable_sort(gens.begin(), gens.end(),
                     [](const ZPoly& a, const ZPoly& b) { return a.lead() < b.lead(); });
    for (auto& g : gens)
        if (!engine.add_generator(std::move(g))) return ReducedGB::unit(ord);
    if (!engine.run()) return ReducedGB::unit(ord);
    return ReducedGB::from_reduced(ord, engine.reduced_basis());
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations

ReducedGB groebner_basis(const IdealGens& ideal, ComputeContext* ctx) {
    return run_engine(ideal.ordering(), nullptr, ideal.gens(), ctx);
}

ReducedGB groebner_extend(const ReducedGB& base, std::span<const Polynomial> extra,
                          ComputeContext* ctx) {
    return run_engine(base.ordering(), &base, extra, ctx);
}

Polynomial normal_form(const Polynomial& p, const ReducedGB& g) {
    require_same_ordering(p.ordering(), g.ordering());
    if (g.is_unit()) return Polynomial(p.ordering());
    if (g.is_zero_ideal() || p.is_zero()) return p;
    // Exact rational division keeps the remainder canonical: the result is
    // the unique B-reduced representative, not a scalar multiple of it.
    std::vector<Polynomial::Term> rem;
    Polynomial r = p;
    const auto& basis = g.basis();
    while (!r.is_zero()) {
        const Monomial& m = r.leading_monomial();
        const Polynomial* red = nullptr;
        for (const auto& b : basis) {
            if (b.leading_monomial().divides(m)) {
                red = &b;
                break;
            }
        }
        if (!red) {
            rem.push_back({r.leading_coeff(), m});
            r -= Polynomial::monomial(p.ordering(), r.leading_coeff(), m);
            continue;
        }
        // Basis elements are monic.
        r -= red->mul_monomial(m.quotient(red->leading_monomial())).scaled(r.leading_coeff());
    }
    return Polynomial::from_terms(p.ordering(), std::move(rem));
}

bool is_member(const Polynomial& p, const ReducedGB& g) { return normal_form(p, g).is_zero(); }

bool ideal_equal(const ReducedGB& a, const ReducedGB& b) {
    require_same_ordering(a.ordering(), b.ordering());
    return a.basis() == b.basis();
}

ReducedGB eliminate(const ReducedGB& g, const OrderingPtr& target) {
    const auto& src = g.ordering()->names();
    const auto& dst = target->names();
    if (dst.size() > src.size() || !std::equal(dst.begin(), dst.end(), src.begin()))
        throw DomainError("elimination target must be a prefix of the variable ordering");
    std::vector<Polynomial> kept;
    for (const auto& p : g.basis())
        if (p.leading_variable() < static_cast<int>(dst.size())) kept.push_back(p.restrict_to(target));
    return ReducedGB::from_reduced(target, std::move(kept));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    return f.mul_monomial(l.quotient(f.leading_monomial())).scaled(1 / f.leading_coeff()) -
           g.mul_monomial(l.quotient(g.leading_monomial())).scaled(1 / g.leading_coeff());
}

bool is_groebner_of(const ReducedGB& g, std::span<const Polynomial> generators) {
    const auto& b = g.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!normal_form(s_polynomial(b[i], b[j]), g).is_zero()) return false;
    for (const auto& p : generators)
        if (!normal_form(p, g).is_zero()) return false;
    return true;
}

}  // namespace srcdec
