#include "srcdec/context.hpp"

namespace srcdec {

PhaseCounter& ComputeStats::counter(Phase phase) {
    switch (phase) {
        case Phase::Groebner: return gb;
        case Phase::Saturation: return sat;
        case Phase::Quotient: return quo;
        case Phase::Other: break;
    }
    return other;
}

PhaseScope::PhaseScope(ComputeContext* ctx, Phase phase) : ctx_(ctx), phase_(phase) {
    if (!ctx_) return;
    outermost_ = ctx_->active_depth++ == 0;
    if (outermost_) {
        ++ctx_->stats.counter(phase_).calls;
        start_ = std::chrono::steady_clock::now();
    }
}

PhaseScope::~PhaseScope() {
    if (!ctx_) return;
    --ctx_->active_depth;
    if (outermost_) ctx_->stats.counter(phase_).time += std::chrono::steady_clock::now() - start_;
}

}  // namespace srcdec
