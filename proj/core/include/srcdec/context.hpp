#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

namespace srcdec {

/// Caps for a single Groebner basis run. Exceeding one raises ResourceError.
struct GbBudget {
    std::size_t max_basis_size = 20000;
    std::size_t max_total_terms = 20'000'000;
    /// Zero means unlimited.
    std::uint64_t max_reductions = 0;
};

enum class PairSelection {
    Normal,  ///< lex-smallest lcm of leading terms first
    Sugar,   ///< smallest sugar degree first, lcm breaks ties
};

struct GbOptions {
    GbBudget budget;
    PairSelection selection = PairSelection::Normal;
};

/// Which top-level ideal operation a Groebner basis run is charged to.
enum class Phase { Groebner, Saturation, Quotient, Other };

struct PhaseCounter {
    std::uint64_t calls = 0;
    std::chrono::nanoseconds time{0};

    double millis() const { return std::chrono::duration<double, std::milli>(time).count(); }
};

struct ComputeStats {
    PhaseCounter gb;
    PhaseCounter sat;
    PhaseCounter quo;
    PhaseCounter other;
    std::uint64_t gb_runs = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;

    PhaseCounter& counter(Phase phase);
};

/// Options and counters threaded through one computation. Not shared between
/// threads; every operation takes it by pointer and tolerates nullptr.
struct ComputeContext {
    GbOptions gb;
    ComputeStats stats;
    int active_depth = 0;
};

/// Charges wall time to `phase` unless an enclosing scope is already timing,
/// so a saturation's inner Groebner basis counts as saturation time.
class PhaseScope {
public:
    PhaseScope(ComputeContext* ctx, Phase phase);
    ~PhaseScope();
    PhaseScope(const PhaseScope&) = delete;
    PhaseScope& operator=(const PhaseScope&) = delete;

private:
    ComputeContext* ctx_;
    Phase phase_;
    bool outermost_ = false;
    std::chrono::steady_clock::time_point start_;
};

inline const GbOptions& gb_options(const ComputeContext* ctx) {
    static const GbOptions defaults{};
    return ctx ? ctx->gb : defaults;
}

}  // namespace srcdec
