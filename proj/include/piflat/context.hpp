#pragma once

#include <memory>
#include <string>
#include <vector>

#include "piflat/errors.hpp"

namespace piflat {

/* How the delay operators interact with coefficients.
 *
 * Commutative     — delay operators commute with every coefficient.  Valid
 *                   when there are no delays at all, or when every
 *                   coefficient is free of the time variable t.
 * SkewSingleDelay — a single delay acting on time-varying coefficients by
 *                   the shift t -> t - tau.  Requires exactly one delay.
 *
 * The unsupported combination (t-dependent coefficients with two or more
 * delays) is rejected with ModeError. */
enum class RingMode { Commutative, SkewSingleDelay };

class Context;
using Ctx = std::shared_ptr<const Context>;

/* Shared description of the coefficient field and the delay operators.
 *
 * Ground field generators are indexed as:
 *   0           the time variable t
 *   1 .. s      the delay amounts (tau for a single delay "d",
 *               tau1..taus for delays "d1".."ds")
 *   s+1 ..      declared parameters
 *
 * All values in a computation must share one context (same delays, params
 * and mode); mixing contexts raises ContextMismatchError. */
class Context {
public:
    static Ctx make(std::vector<std::string> delays,
                    std::vector<std::string> params,
                    RingMode mode);

    int delay_count() const { return static_cast<int>(delays_.size()); }
    int param_count() const { return static_cast<int>(params_.size()); }
    int ground_gens() const { return 1 + delay_count() + param_count(); }

    RingMode mode() const { return mode_; }
    const std::vector<std::string>& delays() const { return delays_; }
    const std::vector<std::string>& params() const { return params_; }

    const std::string& delay_name(int i) const { return delays_.at(i); }
    const std::string& ground_gen_name(int i) const { return ground_names_.at(i); }

    /* Index of a ground generator by name (t, tau.., params), or -1. */
    int ground_gen_index(const std::string& name) const;
    /* Index of a delay operator by name, or -1. */
    int delay_index(const std::string& name) const;

    bool same(const Context& other) const;

private:
    Context() = default;
    std::vector<std::string> delays_;
    std::vector<std::string> params_;
    std::vector<std::string> ground_names_;
    RingMode mode_ = RingMode::Commutative;
};

/* The name of the shift amount attached to a delay operator: "d" -> "tau",
 * "d1" -> "tau1", "d2" -> "tau2", ... */
std::string shift_amount_name(const std::string& delay_name);

inline void check_same_ctx(const Ctx& a, const Ctx& b) {
    if (a.get() == b.get()) return;
    if (a && b && a->same(*b)) return;
    throw ContextMismatchError("values from different ring contexts were combined");
}

inline Ctx Context::make(std::vector<std::string> delays,
                         std::vector<std::string> params,
                         RingMode mode) {
    if (mode == RingMode::SkewSingleDelay && delays.size() != 1)
        throw ModeError("skew arithmetic requires exactly one delay, got " +
                        std::to_string(delays.size()));
    auto ctx = std::shared_ptr<Context>(new Context());
    ctx->delays_ = std::move(delays);
    ctx->params_ = std::move(params);
    ctx->mode_ = mode;
    ctx->ground_names_.push_back("t");
    for (const auto& d : ctx->delays_)
        ctx->ground_names_.push_back(shift_amount_name(d));
    for (const auto& p : ctx->params_)
        ctx->ground_names_.push_back(p);
    for (std::size_t i = 0; i < ctx->ground_names_.size(); ++i)
        for (std::size_t j = i + 1; j < ctx->ground_names_.size(); ++j)
            if (ctx->ground_names_[i] == ctx->ground_names_[j])
                throw Error("duplicate symbol name: " + ctx->ground_names_[i]);
    for (const auto& d : ctx->delays_)
        for (const auto& g : ctx->ground_names_)
            if (d == g)
                throw Error("delay name collides with a scalar symbol: " + d);
    return ctx;
}

inline std::string shift_amount_name(const std::string& delay_name) {
    if (!delay_name.empty() && delay_name[0] == 'd')
        return "tau" + delay_name.substr(1);
    return "tau_" + delay_name;
}

inline int Context::ground_gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < ground_names_.size(); ++i)
        if (ground_names_[i] == name) return static_cast<int>(i);
    return -1;
}

inline int Context::delay_index(const std::string& name) const {
    for (std::size_t i = 0; i < delays_.size(); ++i)
        if (delays_[i] == name) return static_cast<int>(i);
    return -1;
}

inline bool Context::same(const Context& other) const {
    return mode_ == other.mode_ && delays_ == other.delays_ &&
           params_ == other.params_;
}

} // namespace piflat
